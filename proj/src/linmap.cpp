#include "qisg/linmap.hpp"

#include <stdexcept>

namespace qisg {

bool exact_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_zero(const Mat& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) return false;
  return true;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setZero();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Vec apply_sparse(const Mat& m, const Vec& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("apply_sparse: shape mismatch");
  Vec out(m.rows());
  out.setZero();
  for (Eigen::Index c = 0; c < v.size(); ++c) {
    if (v(c).is_zero()) continue;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) out(r) += m(r, c) * v(c);
  }
  return out;
}

BasedSpace::BasedSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, fresh] = index_.emplace(labels_[i], static_cast<int>(i));
    (void)it;
    if (!fresh) throw std::invalid_argument("duplicate basis label: '" + labels_[i] + "'");
  }
}

int BasedSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

Vec BasedSpace::basis_vector(Eigen::Index i) const {
  if (i < 0 || i >= dim()) throw std::invalid_argument("basis index out of range");
  Vec v(dim());
  v.setZero();
  v(i) = Rational(1);
  return v;
}

BasedSpace BasedSpace::points(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return BasedSpace(std::move(labels));
}

BasedSpace tensor(const BasedSpace& u, const BasedSpace& v) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(u.dim() * v.dim()));
  for (Eigen::Index i = 0; i < u.dim(); ++i)
    for (Eigen::Index j = 0; j < v.dim(); ++j) labels.push_back(u.label(i) + "|" + v.label(j));
  return BasedSpace(std::move(labels));
}

LinMap::LinMap(BasedSpace dom_, BasedSpace cod_, Mat m_)
    : dom(std::move(dom_)), cod(std::move(cod_)), m(std::move(m_)) {
  if (m.rows() != cod.dim() || m.cols() != dom.dim())
    throw std::invalid_argument("matrix shape does not match the declared spaces");
}

Vec LinMap::apply(const Vec& v) const {
  if (v.size() != dom.dim()) throw std::invalid_argument("vector length does not match map domain");
  return m * v;
}

LinMap LinMap::identity(const BasedSpace& s) {
  Mat m = Mat::Identity(s.dim(), s.dim());
  return LinMap(s, s, std::move(m));
}

LinMap LinMap::zero(const BasedSpace& dom, const BasedSpace& cod) {
  Mat m(cod.dim(), dom.dim());
  m.setZero();
  return LinMap(dom, cod, std::move(m));
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (g.cod != f.dom) throw std::invalid_argument("compose: codomain of g is not the domain of f");
  return LinMap(g.dom, f.cod, f.m * g.m);
}

LinMap tensor_map(const LinMap& f, const LinMap& g) {
  return LinMap(tensor(f.dom, g.dom), tensor(f.cod, g.cod), kron(f.m, g.m));
}

bool equal(const LinMap& f, const LinMap& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw std::invalid_argument("equal: maps have different shapes");
  return exact_equal(f.m, g.m);
}

LinMap operator+(const LinMap& f, const LinMap& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw std::invalid_argument("sum of maps with different shapes");
  return LinMap(f.dom, f.cod, f.m + g.m);
}

LinMap operator-(const LinMap& f, const LinMap& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw std::invalid_argument("difference of maps with different shapes");
  return LinMap(f.dom, f.cod, f.m - g.m);
}

LinMap operator*(const Rational& c, const LinMap& f) {
  Mat m = f.m;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) *= c;
  return LinMap(f.dom, f.cod, std::move(m));
}

std::string pretty(const Vec& v, const BasedSpace& space) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += v(i).str() + "*" + space.label(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qisg
