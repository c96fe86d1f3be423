#include "qisg/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace qisg {

namespace {

int leading_index(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return static_cast<int>(i);
  return -1;
}

}  // namespace

Subspace::Subspace(BasedSpace ambient) : ambient_(std::move(ambient)) {}

Subspace::Subspace(BasedSpace ambient, const std::vector<Vec>& generators)
    : ambient_(std::move(ambient)) {
  for (const Vec& g : generators) insert(g);
}

bool Subspace::insert(const Vec& v) {
  if (v.size() != ambient_.dim())
    throw std::invalid_argument("subspace generator has wrong length");
  Vec r = reduce(v);
  int lead = leading_index(r);
  if (lead < 0) return false;
  Rational inv = r(lead).inverse();
  for (Eigen::Index i = lead; i < r.size(); ++i)
    if (!r(i).is_zero()) r(i) *= inv;
  // back-substitute into existing rows, then insert keeping pivots ascending
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = rows_[k](lead);
    if (!c.is_zero()) rows_[k] -= c * r;
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
  std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(r));
  return true;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_.dim())
    throw std::invalid_argument("vector length does not match the ambient space");
  Vec r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = r(pivots_[k]);
    if (!c.is_zero()) r -= c * rows_[k];
  }
  return r;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  return leading_index(r) < 0;
}

bool Subspace::is_pivot(Eigen::Index col) const {
  return std::binary_search(pivots_.begin(), pivots_.end(), static_cast<int>(col));
}

Quotient quotient(const BasedSpace& ambient, const Subspace& sub) {
  if (sub.ambient() != ambient)
    throw std::invalid_argument("quotient: subspace has a different ambient space");
  std::vector<int> free_cols;
  std::vector<std::string> labels;
  for (Eigen::Index c = 0; c < ambient.dim(); ++c) {
    if (!sub.is_pivot(c)) {
      free_cols.push_back(static_cast<int>(c));
      labels.push_back(ambient.label(c));
    }
  }
  BasedSpace qspace{std::move(labels)};
  Mat proj(qspace.dim(), ambient.dim());
  proj.setZero();
  // e_j reduces to e_j - sum over pivot rows; coordinates at free columns
  const auto& rows = sub.echelon();
  const auto& pivots = sub.pivots();
  for (Eigen::Index j = 0; j < ambient.dim(); ++j) {
    auto it = std::lower_bound(pivots.begin(), pivots.end(), static_cast<int>(j));
    if (it != pivots.end() && *it == static_cast<int>(j)) {
      const Vec& row = rows[static_cast<std::size_t>(it - pivots.begin())];
      for (std::size_t k = 0; k < free_cols.size(); ++k)
        proj(static_cast<Eigen::Index>(k), j) = -row(free_cols[k]);
    } else {
      auto fit = std::lower_bound(free_cols.begin(), free_cols.end(), static_cast<int>(j));
      proj(static_cast<Eigen::Index>(fit - free_cols.begin()), j) = Rational(1);
    }
  }
  return Quotient{qspace, LinMap(ambient, qspace, std::move(proj))};
}

}  // namespace qisg
