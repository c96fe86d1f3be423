#pragma once

#include "qisg/group.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qisg {

/// Finite semigroup by multiplication table. Associativity is verified
/// eagerly at construction (O(n^3)); every theorem downstream assumes it.
struct FinSemigroup {
  std::vector<std::string> elems;
  std::vector<std::vector<int>> table;
  std::optional<int> unit;
  std::optional<int> zero;

  FinSemigroup() = default;
  FinSemigroup(std::vector<std::string> elems_, std::vector<std::vector<int>> table_,
               std::optional<int> unit_ = std::nullopt, std::optional<int> zero_ = std::nullopt);

  int size() const { return static_cast<int>(elems.size()); }
  int op(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  bool is_idempotent(int a) const { return op(a, a) == a; }
  std::vector<int> idempotents() const;
  int index_of(const std::string& label) const;

  static FinSemigroup from_group(const FinGroup& g);
};

/// Bijection between subsets of {1..n}; map[x] = image or -1 outside the
/// domain. Canonical label: sorted "{1->2,3->1}", "{}" for the empty map.
struct PartialBijection {
  int n = 0;
  std::vector<int> map;

  explicit PartialBijection(int n_) : n(n_), map(static_cast<std::size_t>(n_), -1) {}
  PartialBijection(int n_, std::vector<int> map_);

  bool defined(int x) const { return map[static_cast<std::size_t>(x)] >= 0; }
  int domain_size() const;
  std::string label() const;
  PartialBijection inverse() const;

  friend PartialBijection compose(const PartialBijection& f, const PartialBijection& g);
  friend bool operator==(const PartialBijection& a, const PartialBijection& b) {
    return a.n == b.n && a.map == b.map;
  }
};

enum class InverseClass { inverse, regular_only, not_regular };

struct InverseReport {
  InverseClass kind;
  std::vector<int> star;             // pseudo-inverse map when kind == inverse
  std::pair<int, int> witness{-1, -1};
  std::string message;
};

/// Classifies S as inverse / regular-only / not regular, with a concrete
/// witness pair. Cross-checks the uniqueness route against commutativity of
/// the idempotents.
InverseReport is_inverse(const FinSemigroup& s);

/// All partial bijections of {1..n} under composition on the matched domain;
/// contains the identity and the empty map.
FinSemigroup symmetric_inverse_monoid(int n);
std::vector<PartialBijection> symmetric_inverse_monoid_elements(int n);

/// s -> theta_s with theta_s(x) = s*x on the domain {x : (s*s)x = x}; ground
/// set is S itself. Verified exhaustively to be an injective homomorphism.
std::vector<PartialBijection> wagner_preston(const FinSemigroup& s);

/// Pairs (A, g) with {1, g} <= A <= G and (A,g)(B,h) = (A u gB, gh).
FinSemigroup exel_semigroup(const FinGroup& g);

/// Backtracking isomorphism search, practical for |S| <= 40.
std::optional<std::vector<int>> find_isomorphism(const FinSemigroup& a, const FinSemigroup& b);

}  // namespace qisg
