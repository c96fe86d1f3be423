#pragma once

#include "qisg/groupoid.hpp"
#include "qisg/linmap.hpp"
#include "qisg/semigroup.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace qisg {

/// Finite-dimensional algebra by structure constants. Associativity (and the
/// unit laws, when a unit is declared) are verified exactly at construction.
/// Basis products are precomputed once; convolution-style checks are
/// product-heavy and run through them.
class FinAlgebra {
 public:
  FinAlgebra() = default;
  FinAlgebra(BasedSpace space, LinMap mult, std::optional<Vec> unit = std::nullopt,
             std::vector<Vec> local_units = {});

  const BasedSpace& space() const { return space_; }
  const LinMap& mult() const { return mult_; }
  const std::optional<Vec>& unit() const { return unit_; }
  const std::vector<Vec>& local_units() const { return local_units_; }
  Eigen::Index dim() const { return space_.dim(); }

  /// Product of basis elements as a sparse list of (k, coefficient).
  const std::vector<std::pair<int, Rational>>& basis_product(int i, int j) const;
  Vec mul(const Vec& a, const Vec& b) const;

  /// True when every basis product is 0 or a single basis element with
  /// coefficient 1 (delta-style bases).
  bool basis_mult_closed() const;

 private:
  BasedSpace space_;
  LinMap mult_;  // space (x) space -> space
  std::optional<Vec> unit_;
  std::vector<Vec> local_units_;
  std::vector<std::vector<std::pair<int, Rational>>> sc_;  // indexed i*dim+j
};

/// Finite-dimensional coalgebra; coassociativity (and counit laws) verified
/// exactly at construction.
class FinCoalgebra {
 public:
  FinCoalgebra() = default;
  FinCoalgebra(BasedSpace space, LinMap comult, std::optional<LinMap> counit = std::nullopt);

  const BasedSpace& space() const { return space_; }
  const LinMap& comult() const { return comult_; }
  const std::optional<LinMap>& counit() const { return counit_; }
  Eigen::Index dim() const { return space_.dim(); }

  /// Delta(e_b) as a sparse list of (i, j, coefficient).
  const std::vector<std::tuple<int, int, Rational>>& delta(int b) const;

 private:
  BasedSpace space_;
  LinMap comult_;  // space -> space (x) space
  std::optional<LinMap> counit_;
  std::vector<std::vector<std::tuple<int, int, Rational>>> delta_;
};

/// Commutative split algebra Fun(X, k): basis of point idempotents chi_x with
/// chi_x chi_y = [x=y] chi_x and sum chi_x = 1. Ideals correspond to subsets.
struct CommSplitAlgebra {
  FinAlgebra alg;

  const std::vector<std::string>& points() const { return alg.space().labels(); }
  int npoints() const { return static_cast<int>(alg.dim()); }
  Vec idempotent(unsigned subset_mask) const;
  /// Support mask when v is an idempotent 0/1 vector, nullopt otherwise.
  std::optional<unsigned> subset_of(const Vec& v) const;
};

CommSplitAlgebra fun_algebra(const std::vector<std::string>& points);
CommSplitAlgebra fun_algebra(int npoints);
/// Checks that an algebra is split w.r.t. its own basis.
std::optional<CommSplitAlgebra> as_split(const FinAlgebra& a);

/// Group/semigroup algebra: basis delta_s, delta_s delta_t = delta_{st}.
FinAlgebra semigroup_algebra(const FinSemigroup& s);
/// Groupoid algebra: delta_g delta_h = delta_{gh} when multipliable, else 0;
/// unit = sum of unit arrows.
FinAlgebra groupoid_algebra(const FinGroupoid& g);

std::vector<Vec> enumerate_idempotents(const CommSplitAlgebra& a);

/// f * g = mult_A . (f (x) g) . comult_C for f, g : C -> A.
LinMap convolve_maps(const LinMap& f, const LinMap& g, const FinCoalgebra& c, const FinAlgebra& a);

struct CharacterReport {
  std::vector<Vec> characters;  // chi(e_i) values; includes the zero map
  bool complete_over_Q = false;
  std::string note;
};

/// All multiplicative linear functionals H -> k with rational values, by
/// constraint propagation over the basis. Needs a delta-style basis, or an
/// explicit candidate value set per basis element. Characters requiring
/// irrational values are invisible over Q; the report flags when the basis
/// periods guarantee completeness.
CharacterReport enumerate_characters(const FinAlgebra& h,
                                     const std::optional<std::vector<std::vector<Rational>>>& candidates = std::nullopt);

}  // namespace qisg
