#pragma once

#include "qisg/rational.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace qisg {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

bool exact_equal(const Mat& a, const Mat& b);
bool is_zero(const Mat& a);
Mat kron(const Mat& a, const Mat& b);
/// m * v skipping zero entries; exact rational arithmetic is gcd-heavy, so
/// the hot paths avoid multiplying through zeros.
Vec apply_sparse(const Mat& m, const Vec& v);

/// Finite vector space with an ordered, pairwise-distinct basis of string
/// labels. Tensor products join labels with '|' so that iterated tensors are
/// strictly associative both in index layout and in labeling.
class BasedSpace {
 public:
  BasedSpace() = default;
  explicit BasedSpace(std::vector<std::string> labels);

  Eigen::Index dim() const { return static_cast<Eigen::Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Eigen::Index i) const { return labels_[static_cast<std::size_t>(i)]; }
  /// Index of a label, -1 if absent.
  int index_of(const std::string& label) const;

  Vec basis_vector(Eigen::Index i) const;

  /// "1", "2", ..., "n".
  static BasedSpace points(int n);

  friend bool operator==(const BasedSpace& a, const BasedSpace& b) { return a.labels_ == b.labels_; }
  friend bool operator!=(const BasedSpace& a, const BasedSpace& b) { return !(a == b); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

/// Basis labels are ordered pairs in lexicographic order of index pairs:
/// (i, j) -> i * dim(V) + j.
BasedSpace tensor(const BasedSpace& u, const BasedSpace& v);

/// Exact linear map between based spaces; matrix is codomain.dim x domain.dim.
struct LinMap {
  BasedSpace dom;
  BasedSpace cod;
  Mat m;

  LinMap() = default;
  LinMap(BasedSpace dom_, BasedSpace cod_, Mat m_);

  Vec apply(const Vec& v) const;
  Vec column(Eigen::Index j) const { return m.col(j); }

  static LinMap identity(const BasedSpace& s);
  static LinMap zero(const BasedSpace& dom, const BasedSpace& cod);
};

/// f after g; requires cod(g) == dom(f).
LinMap compose(const LinMap& f, const LinMap& g);
/// Kronecker-product map U (x) V -> U' (x) V'.
LinMap tensor_map(const LinMap& f, const LinMap& g);
/// Exact entrywise equality; throws on shape mismatch.
bool equal(const LinMap& f, const LinMap& g);

LinMap operator+(const LinMap& f, const LinMap& g);
LinMap operator-(const LinMap& f, const LinMap& g);
LinMap operator*(const Rational& c, const LinMap& f);

/// Pretty-prints a coefficient vector against its basis: "1*a + 3/2*b".
std::string pretty(const Vec& v, const BasedSpace& space);

}  // namespace qisg
