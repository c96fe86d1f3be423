#pragma once

#include "qisg/linmap.hpp"

namespace qisg {

/// Subspace of a based space, held as a reduced row echelon basis. Pivots are
/// eliminated greedily in label (column) order, so the echelon form is a
/// canonical invariant of the subspace.
class Subspace {
 public:
  explicit Subspace(BasedSpace ambient);
  Subspace(BasedSpace ambient, const std::vector<Vec>& generators);

  const BasedSpace& ambient() const { return ambient_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

  /// Inserts one more generator; returns true if the rank grew.
  bool insert(const Vec& v);

  /// Canonical residue of v modulo the subspace (zero iff v is a member).
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;

  const std::vector<Vec>& echelon() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool is_pivot(Eigen::Index col) const;

 private:
  BasedSpace ambient_;
  std::vector<Vec> rows_;    // reduced echelon rows, pivot columns ascending
  std::vector<int> pivots_;  // pivot column of each row
};

struct Quotient {
  BasedSpace space;   // labels of the surviving (non-pivot) ambient columns
  LinMap projection;  // ambient -> quotient, canonical surjection
};

/// Quotient of the ambient space by the subspace; projection()*inclusion = 0
/// and rank(projection) + rank(sub) = ambient.dim.
Quotient quotient(const BasedSpace& ambient, const Subspace& sub);

}  // namespace qisg
