#pragma once

#include "qisg/semigroup.hpp"

#include <string>
#include <vector>

namespace qisg {

/// Finite groupoid: arrows with source/target, partial composition defined
/// exactly when src(g) = tgt(h) (g.h composes like functions), inverses, and
/// a unit arrow per object.
struct FinGroupoid {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<int> src, tgt;               // per arrow
  std::vector<int> inv;                    // per arrow
  std::vector<int> unit;                   // per object: the arrow i(x)
  std::vector<std::vector<int>> comp;      // comp[g][h], -1 when undefined

  int object_count() const { return static_cast<int>(objects.size()); }
  int arrow_count() const { return static_cast<int>(arrows.size()); }
  int compose(int g, int h) const { return comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
  int arrow_index(const std::string& label) const;
};

struct GroupoidCheck {
  bool ok = true;
  std::string message;  // names the failing arrow or triple
};

GroupoidCheck validate_groupoid(const FinGroupoid& g);

/// Arrows (x, g, y) with src = y, tgt = x and (x,g,y).(y,h,z) = (x,gh,z).
FinGroupoid product_groupoid(int npoints, const FinGroup& g);
FinGroupoid pair_groupoid(int npoints);
FinGroupoid disjoint_union(const FinGroupoid& a, const FinGroupoid& b);

FinGroup isotropy_group(const FinGroupoid& g, int object);
bool is_transitive(const FinGroupoid& g);

/// (u, X): X a subset of objects, u(x) an arrow with s(u(x)) = x, t.u
/// injective. Stored with sorted domain; equality is structural.
struct Bisection {
  std::vector<int> domain;  // sorted object indices
  std::vector<int> arrow;   // parallel to domain

  std::string label(const FinGroupoid& g) const;
  friend bool operator==(const Bisection& a, const Bisection& b) = default;
};

bool valid_bisection(const FinGroupoid& g, const Bisection& u);
Bisection identity_bisection(const FinGroupoid& g, const std::vector<int>& domain);
/// (uv)(y) = u(t(v(y))) . v(y) on Z = (t.v)^{-1}(t.v(Y) n X).
Bisection bisection_compose(const FinGroupoid& g, const Bisection& u, const Bisection& v);
/// u*(t(u(x))) = u(x)^{-1} on domain t.u(X).
Bisection bisection_star(const FinGroupoid& g, const Bisection& u);

struct BisectionSemigroup {
  std::vector<Bisection> elems;
  FinSemigroup sgp;
};

/// Enumerates every local bisection (the empty one included) and tabulates
/// the product. Throws when the count would exceed max_count.
BisectionSemigroup enumerate_bisections(const FinGroupoid& g, std::size_t max_count = 10000);

}  // namespace qisg
