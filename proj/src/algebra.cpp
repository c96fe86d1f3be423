#include "qisg/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qisg {

FinAlgebra::FinAlgebra(BasedSpace space, LinMap mult, std::optional<Vec> unit, std::vector<Vec> local_units)
    : space_(std::move(space)), mult_(std::move(mult)), unit_(std::move(unit)), local_units_(std::move(local_units)) {
  const Eigen::Index d = space_.dim();
  if (mult_.dom != tensor(space_, space_) || mult_.cod != space_)
    throw std::invalid_argument("multiplication map must have shape space(x)space -> space");
  sc_.resize(static_cast<std::size_t>(d * d));
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      auto& cell = sc_[static_cast<std::size_t>(i * d + j)];
      for (Eigen::Index k = 0; k < d; ++k) {
        const Rational& c = mult_.m(k, i * d + j);
        if (!c.is_zero()) cell.emplace_back(static_cast<int>(k), c);
      }
    }
  // associativity on all basis triples: (e_i e_j) e_k = e_i (e_j e_k)
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      Vec ij(d);
      ij.setZero();
      for (auto& [t, c] : basis_product(static_cast<int>(i), static_cast<int>(j))) ij(t) += c;
      for (Eigen::Index k = 0; k < d; ++k) {
        Vec lhs = mul(ij, space_.basis_vector(k));
        Vec jk(d);
        jk.setZero();
        for (auto& [t, c] : basis_product(static_cast<int>(j), static_cast<int>(k))) jk(t) += c;
        Vec rhs = mul(space_.basis_vector(i), jk);
        if (!exact_equal(lhs, rhs))
          throw std::invalid_argument("associativity fails at basis triple (" + space_.label(i) + ", " +
                                      space_.label(j) + ", " + space_.label(k) + ")");
      }
    }
  if (unit_) {
    if (unit_->size() != d) throw std::invalid_argument("unit vector has wrong length");
    for (Eigen::Index i = 0; i < d; ++i) {
      Vec e = space_.basis_vector(i);
      if (!exact_equal(mul(*unit_, e), e) || !exact_equal(mul(e, *unit_), e))
        throw std::invalid_argument("declared unit is not two-sided at basis element '" + space_.label(i) + "'");
    }
  }
}

const std::vector<std::pair<int, Rational>>& FinAlgebra::basis_product(int i, int j) const {
  return sc_[static_cast<std::size_t>(static_cast<Eigen::Index>(i) * dim() + j)];
}

Vec FinAlgebra::mul(const Vec& a, const Vec& b) const {
  const Eigen::Index d = dim();
  if (a.size() != d || b.size() != d) throw std::invalid_argument("mul: vector length mismatch");
  Vec out(d);
  out.setZero();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (a(i).is_zero()) continue;
    for (Eigen::Index j = 0; j < d; ++j) {
      if (b(j).is_zero()) continue;
      Rational ab = a(i) * b(j);
      for (auto& [k, c] : basis_product(static_cast<int>(i), static_cast<int>(j))) out(k) += ab * c;
    }
  }
  return out;
}

bool FinAlgebra::basis_mult_closed() const {
  for (const auto& cell : sc_) {
    if (cell.size() > 1) return false;
    if (cell.size() == 1 && !cell[0].second.is_one()) return false;
  }
  return true;
}

FinCoalgebra::FinCoalgebra(BasedSpace space, LinMap comult, std::optional<LinMap> counit)
    : space_(std::move(space)), comult_(std::move(comult)), counit_(std::move(counit)) {
  const Eigen::Index d = space_.dim();
  if (comult_.dom != space_ || comult_.cod != tensor(space_, space_))
    throw std::invalid_argument("comultiplication map must have shape space -> space(x)space");
  delta_.resize(static_cast<std::size_t>(d));
  for (Eigen::Index b = 0; b < d; ++b)
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        const Rational& c = comult_.m(i * d + j, b);
        if (!c.is_zero()) delta_[static_cast<std::size_t>(b)].emplace_back(static_cast<int>(i), static_cast<int>(j), c);
      }
  // coassociativity per basis element, computed sparsely in dim^3
  for (Eigen::Index b = 0; b < d; ++b) {
    std::map<long, Rational> lhs, rhs;
    for (auto& [i, j, c] : delta(static_cast<int>(b))) {
      for (auto& [p, q, c2] : delta(i)) lhs[(static_cast<long>(p) * d + q) * d + j] += c * c2;
      for (auto& [p, q, c2] : delta(j)) rhs[(static_cast<long>(i) * d + p) * d + q] += c * c2;
    }
    for (auto& [k, v] : lhs)
      if (!(rhs.count(k) ? rhs[k] == v : v.is_zero()))
        throw std::invalid_argument("coassociativity fails at basis element '" + space_.label(b) + "'");
    for (auto& [k, v] : rhs)
      if (!(lhs.count(k) ? lhs[k] == v : v.is_zero()))
        throw std::invalid_argument("coassociativity fails at basis element '" + space_.label(b) + "'");
  }
  if (counit_) {
    if (counit_->dom != space_ || counit_->m.rows() != 1)
      throw std::invalid_argument("counit must be a map space -> k");
    for (Eigen::Index b = 0; b < d; ++b) {
      Vec left(d), right(d);
      left.setZero();
      right.setZero();
      for (auto& [i, j, c] : delta(static_cast<int>(b))) {
        left(j) += c * counit_->m(0, i);
        right(i) += c * counit_->m(0, j);
      }
      if (!exact_equal(left, space_.basis_vector(b)) || !exact_equal(right, space_.basis_vector(b)))
        throw std::invalid_argument("counit laws fail at basis element '" + space_.label(b) + "'");
    }
  }
}

const std::vector<std::tuple<int, int, Rational>>& FinCoalgebra::delta(int b) const {
  return delta_[static_cast<std::size_t>(b)];
}

Vec CommSplitAlgebra::idempotent(unsigned subset_mask) const {
  Vec v(alg.dim());
  v.setZero();
  for (int x = 0; x < npoints(); ++x)
    if (subset_mask & (1u << x)) v(x) = Rational(1);
  return v;
}

std::optional<unsigned> CommSplitAlgebra::subset_of(const Vec& v) const {
  if (v.size() != alg.dim()) return std::nullopt;
  unsigned mask = 0;
  for (int x = 0; x < npoints(); ++x) {
    if (v(x).is_one())
      mask |= 1u << x;
    else if (!v(x).is_zero())
      return std::nullopt;
  }
  return mask;
}

CommSplitAlgebra fun_algebra(const std::vector<std::string>& points) {
  if (points.empty()) throw std::invalid_argument("fun_algebra needs a nonempty point set");
  BasedSpace space{points};
  const Eigen::Index d = space.dim();
  Mat m(d, d * d);
  m.setZero();
  for (Eigen::Index x = 0; x < d; ++x) m(x, x * d + x) = Rational(1);
  Vec unit(d);
  for (Eigen::Index x = 0; x < d; ++x) unit(x) = Rational(1);
  return CommSplitAlgebra{FinAlgebra(space, LinMap(tensor(space, space), space, std::move(m)), unit)};
}

CommSplitAlgebra fun_algebra(int npoints) {
  return fun_algebra(BasedSpace::points(npoints).labels());
}

std::optional<CommSplitAlgebra> as_split(const FinAlgebra& a) {
  const Eigen::Index d = a.dim();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      const auto& cell = a.basis_product(static_cast<int>(i), static_cast<int>(j));
      if (i == j) {
        if (cell.size() != 1 || cell[0].first != static_cast<int>(i) || !cell[0].second.is_one()) return std::nullopt;
      } else if (!cell.empty()) {
        return std::nullopt;
      }
    }
  if (!a.unit()) return std::nullopt;
  for (Eigen::Index i = 0; i < d; ++i)
    if (!(*a.unit())(i).is_one()) return std::nullopt;
  return CommSplitAlgebra{a};
}

FinAlgebra semigroup_algebra(const FinSemigroup& s) {
  const int n = s.size();
  if (n > 100) throw std::invalid_argument("semigroup algebra limited to 100 elements");
  BasedSpace space{s.elems};
  Mat m(n, static_cast<Eigen::Index>(n) * n);
  m.setZero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(s.op(i, j), static_cast<Eigen::Index>(i) * n + j) = Rational(1);
  std::optional<Vec> unit;
  if (s.unit) {
    Vec u(n);
    u.setZero();
    u(*s.unit) = Rational(1);
    unit = u;
  }
  return FinAlgebra(space, LinMap(tensor(space, space), space, std::move(m)), unit);
}

FinAlgebra groupoid_algebra(const FinGroupoid& g) {
  const int n = g.arrow_count();
  BasedSpace space{g.arrows};
  Mat m(n, static_cast<Eigen::Index>(n) * n);
  m.setZero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = g.compose(i, j);
      if (c >= 0) m(c, static_cast<Eigen::Index>(i) * n + j) = Rational(1);
    }
  Vec unit(n);
  unit.setZero();
  for (int u : g.unit) unit(u) = Rational(1);
  return FinAlgebra(space, LinMap(tensor(space, space), space, std::move(m)), unit);
}

std::vector<Vec> enumerate_idempotents(const CommSplitAlgebra& a) {
  std::vector<Vec> out;
  for (unsigned mask = 0; mask < (1u << a.npoints()); ++mask) out.push_back(a.idempotent(mask));
  return out;
}

LinMap convolve_maps(const LinMap& f, const LinMap& g, const FinCoalgebra& c, const FinAlgebra& a) {
  if (f.dom != c.space() || g.dom != c.space() || f.cod != a.space() || g.cod != a.space())
    throw std::invalid_argument("convolve_maps: shapes do not match the coalgebra/algebra pair");
  Mat m(a.dim(), c.dim());
  m.setZero();
  for (Eigen::Index b = 0; b < c.dim(); ++b) {
    Vec acc(a.dim());
    acc.setZero();
    for (auto& [i, j, coef] : c.delta(static_cast<int>(b))) {
      Vec prod = a.mul(f.column(i), g.column(j));
      for (Eigen::Index k = 0; k < a.dim(); ++k) acc(k) += coef * prod(k);
    }
    m.col(b) = acc;
  }
  return LinMap(c.space(), a.space(), std::move(m));
}

namespace {

/// Index/period of the power sequence b, b^2, ... inside basis u {0};
/// requires a delta-style basis. Returns {index, period}, period 0 when the
/// sequence is eventually zero.
std::pair<int, int> basis_index_period(const FinAlgebra& h, int b) {
  std::vector<int> seen{b};  // -1 encodes zero
  int x = b;
  while (true) {
    const auto& cell = h.basis_product(x, b);
    int next = cell.empty() ? -1 : cell[0].first;
    if (next == -1) return {static_cast<int>(seen.size()) + 1, 0};
    auto it = std::find(seen.begin(), seen.end(), next);
    if (it != seen.end()) {
      int first = static_cast<int>(it - seen.begin());
      return {first + 1, static_cast<int>(seen.size()) - first};
    }
    seen.push_back(next);
    x = next;
  }
}

}  // namespace

CharacterReport enumerate_characters(const FinAlgebra& h,
                                     const std::optional<std::vector<std::vector<Rational>>>& candidates) {
  const int d = static_cast<int>(h.dim());
  CharacterReport rep;
  std::vector<std::vector<Rational>> cand;
  if (candidates) {
    if (static_cast<int>(candidates->size()) != d)
      throw std::invalid_argument("candidate sets must cover every basis element");
    cand = *candidates;
    rep.complete_over_Q = false;
    rep.note = "completeness relative to the supplied candidate sets";
  } else {
    if (!h.basis_mult_closed())
      throw std::invalid_argument(
          "enumerate_characters needs a delta-style basis or an explicit candidate value set per generator");
    bool complete = true;
    for (int b = 0; b < d; ++b) {
      auto [index, period] = basis_index_period(h, b);
      (void)index;
      std::vector<Rational> vals{Rational(0)};
      if (period >= 1) vals.push_back(Rational(1));
      if (period >= 2 && period % 2 == 0) vals.push_back(Rational(-1));
      if (period > 2) complete = false;
      cand.push_back(std::move(vals));
    }
    rep.complete_over_Q = complete;
    rep.note = complete ? "all basis periods <= 2; every character over any extension of Q is rational"
                        : "some basis period exceeds 2; characters with irrational values are invisible over Q";
  }

  std::vector<Rational> assign(static_cast<std::size_t>(d));
  auto consistent = [&](int upto) {
    // check all products whose factors and support lie within the assigned prefix
    for (int i = 0; i <= upto; ++i)
      for (int j = 0; j <= upto; ++j) {
        Rational lhs = assign[static_cast<std::size_t>(i)] * assign[static_cast<std::size_t>(j)];
        Rational rhs(0);
        bool ready = true;
        for (auto& [k, c] : h.basis_product(i, j)) {
          if (k > upto) {
            ready = false;
            break;
          }
          rhs += c * assign[static_cast<std::size_t>(k)];
        }
        // products with unassigned support are rechecked at later levels
        if (ready && lhs != rhs) return false;
      }
    return true;
  };
  auto dfs = [&](auto&& self, int pos) -> void {
    if (pos == d) {
      Vec chi(d);
      for (int i = 0; i < d; ++i) chi(i) = assign[static_cast<std::size_t>(i)];
      rep.characters.push_back(std::move(chi));
      return;
    }
    for (const Rational& v : cand[static_cast<std::size_t>(pos)]) {
      assign[static_cast<std::size_t>(pos)] = v;
      if (consistent(pos)) self(self, pos + 1);
    }
  };
  dfs(dfs, 0);
  return rep;
}

}  // namespace qisg
