#include "qisg/biretraction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qisg {

namespace {

struct LiftTerm {
  int i, j;
  Rational c;
};

std::vector<LiftTerm> lift_terms(const LinMap& lift, int b) {
  const Eigen::Index d = lift.dom.dim();
  std::vector<LiftTerm> out;
  for (Eigen::Index k = 0; k < lift.m.rows(); ++k)
    if (!lift.m(k, b).is_zero())
      out.push_back({static_cast<int>(k / d), static_cast<int>(k % d), lift.m(k, b)});
  return out;
}

Vec pointwise(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out(i) = a(i) * b(i);
  return out;
}

bool same_linmap(const LinMap& a, const LinMap& b) { return exact_equal(a.m, b.m); }

}  // namespace

bool Biretraction::is_global() const {
  for (Eigen::Index i = 0; i < alpha1.size(); ++i)
    if (!alpha1(i).is_one()) return false;
  return true;
}

LinMap Biretraction::t_inverse() const {
  const Eigen::Index da = model->A.alg.dim();
  Mat m(da, da);
  m.setZero();
  for (Eigen::Index y = 0; y < da; ++y)
    if (lambda[static_cast<std::size_t>(y)] >= 0) m(y, lambda[static_cast<std::size_t>(y)]) = Rational(1);
  return LinMap(model->A.alg.space(), model->A.alg.space(), std::move(m));
}

std::vector<bool> base_centralizer(const HopfAlgebroid& x) {
  // basis elements commuting with every s(chi_a) and t(chi_a); in commutative
  // mode this is all of H, in the groupoid-algebra mode the isotropy part
  const FinAlgebra& H = x.H;
  const Eigen::Index d = H.dim(), da = x.A.alg.dim();
  std::vector<bool> in(static_cast<std::size_t>(d), true);
  for (Eigen::Index i = 0; i < d; ++i) {
    Vec e = H.space().basis_vector(i);
    for (Eigen::Index a = 0; a < da && in[static_cast<std::size_t>(i)]; ++a) {
      if (!exact_equal(H.mul(x.s.column(a), e), H.mul(e, x.s.column(a))) ||
          !exact_equal(H.mul(x.t.column(a), e), H.mul(e, x.t.column(a))))
        in[static_cast<std::size_t>(i)] = false;
    }
  }
  return in;
}

std::optional<Biretraction> validate_biretraction(const HopfAlgebroid& x, const LinMap& alpha, std::string* why) {
  auto fail = [&](std::string msg) -> std::optional<Biretraction> {
    if (why) *why = std::move(msg);
    return std::nullopt;
  };
  const FinAlgebra& H = x.H;
  const FinAlgebra& A = x.A.alg;
  const Eigen::Index d = H.dim(), da = A.dim();
  if (alpha.dom != H.space() || alpha.cod != A.space()) return fail("alpha must map H to A");

  // multiplicativity on the centralizer of the base (all of H when H is
  // commutative), plus two-sided multiplicativity against s(A) and t(A)
  std::vector<bool> central = base_centralizer(x);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      if (!central[static_cast<std::size_t>(i)] || !central[static_cast<std::size_t>(j)]) continue;
      Vec lhs(da);
      lhs.setZero();
      for (auto& [k, c] : H.basis_product(static_cast<int>(i), static_cast<int>(j)))
        for (Eigen::Index r = 0; r < da; ++r)
          if (!alpha.m(r, k).is_zero()) lhs(r) += c * alpha.m(r, k);
      Vec rhs = A.mul(alpha.column(i), alpha.column(j));
      if (!exact_equal(lhs, rhs))
        return fail("alpha is not multiplicative at (" + H.space().label(i) + ", " + H.space().label(j) + ")");
    }
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index i = 0; i < d; ++i) {
      Vec e = H.space().basis_vector(i);
      for (const LinMap* st : {&x.s, &x.t}) {
        Vec img = st->column(a);
        Vec av = apply_sparse(alpha.m, img);
        if (!exact_equal(apply_sparse(alpha.m, H.mul(img, e)), A.mul(av, alpha.column(i))) ||
            !exact_equal(apply_sparse(alpha.m, H.mul(e, img)), A.mul(alpha.column(i), av)))
          return fail("alpha fails A-multiplicativity at (a, h) = (" + A.space().label(a) + ", " +
                      H.space().label(i) + ")");
      }
    }

  Vec alpha1 = apply_sparse(alpha.m, *H.unit());
  auto mask1 = x.A.subset_of(alpha1);
  if (!mask1) return fail("alpha(1_H) is not a 0/1 idempotent");  // cannot happen for multiplicative alpha

  for (Eigen::Index a = 0; a < da; ++a) {
    Vec lhs = apply_sparse(alpha.m, x.s.column(a));
    Vec rhs = pointwise(A.space().basis_vector(a), alpha1);
    if (!exact_equal(lhs, rhs)) return fail("BRT1 fails at a = " + A.space().label(a));
  }

  // find the witness e^alpha through alpha . t
  Mat T(da, da);
  for (Eigen::Index y = 0; y < da; ++y) T.col(y) = apply_sparse(alpha.m, x.t.column(y));
  std::vector<int> lambda(static_cast<std::size_t>(da), -1);
  std::vector<bool> hit(static_cast<std::size_t>(da), false);
  for (Eigen::Index y = 0; y < da; ++y) {
    int supp = -1;
    for (Eigen::Index r = 0; r < da; ++r) {
      if (T(r, y).is_zero()) continue;
      if (!T(r, y).is_one() || supp >= 0) return fail("alpha(t(chi_" + A.space().label(y) + ")) is not primitive");
      supp = static_cast<int>(r);
    }
    if (supp < 0) continue;
    if (hit[static_cast<std::size_t>(supp)])
      return fail("alpha . t is not injective on its witness ideal");
    hit[static_cast<std::size_t>(supp)] = true;
    lambda[static_cast<std::size_t>(y)] = supp;
  }
  unsigned emask = 0, image_mask = 0;
  for (Eigen::Index y = 0; y < da; ++y)
    if (lambda[static_cast<std::size_t>(y)] >= 0) {
      emask |= 1u << y;
      image_mask |= 1u << lambda[static_cast<std::size_t>(y)];
    }
  if (image_mask != *mask1)
    return fail("BRT2 fails: alpha . t maps no ideal bijectively onto A alpha(1)");
  Vec e = x.A.idempotent(emask);

  // uniqueness sweep: BRT2 must single out exactly one witness idempotent
  int witnesses = 0;
  for (unsigned mask = 0; mask < (1u << da); ++mask) {
    Vec cand = x.A.idempotent(mask);
    if (!exact_equal(apply_sparse(T, cand), alpha1)) continue;
    // T restricted to A*cand must be a bijection onto A*alpha1
    Subspace image(A.space());
    bool free = true;
    for (Eigen::Index y = 0; y < da; ++y)
      if (mask & (1u << y)) {
        if (!image.insert(Vec(T.col(y)))) free = false;
      }
    if (free && image.rank() == __builtin_popcount(*mask1)) ++witnesses;
  }
  if (witnesses != 1)
    throw std::logic_error("internal: witness idempotent count is " + std::to_string(witnesses) + ", expected 1");

  Biretraction out;
  out.model = &x;
  out.alpha = alpha;
  out.e = std::move(e);
  out.alpha1 = std::move(alpha1);
  out.lambda = std::move(lambda);
  return out;
}

Biretraction counit_biretraction(const HopfAlgebroid& x) {
  if (x.mode != AlgebroidMode::commutative)
    throw std::invalid_argument("the counit is a biretraction in commutative mode only");
  std::string why;
  auto b = validate_biretraction(x, x.counit_l, &why);
  if (!b) throw std::logic_error("internal: counit failed to validate as a biretraction: " + why);
  return *b;
}

Vec convolution_integrand(const Biretraction& a, const Biretraction& b, const Vec& hh) {
  const HopfAlgebroid& x = *a.model;
  const Eigen::Index d = x.H.dim();
  Vec out(x.A.alg.dim());
  out.setZero();
  for (Eigen::Index k = 0; k < hh.size(); ++k) {
    if (hh(k).is_zero()) continue;
    Eigen::Index i = k / d, j = k % d;
    Vec ta = apply_sparse(x.t.m, a.alpha.column(i));
    Vec prod = apply_sparse(b.alpha.m, x.H.mul(ta, x.H.space().basis_vector(j)));
    for (Eigen::Index r = 0; r < out.size(); ++r) out(r) += hh(k) * prod(r);
  }
  return out;
}

Biretraction convolve(const Biretraction& a, const Biretraction& b) {
  if (a.model != b.model) throw std::invalid_argument("convolve: biretractions live on different algebroids");
  const HopfAlgebroid& x = *a.model;
  const FinAlgebra& H = x.H;
  const Eigen::Index d = H.dim(), da = x.A.alg.dim();
  Mat m(da, d);
  m.setZero();
  for (Eigen::Index col = 0; col < d; ++col) {
    Vec acc(da);
    acc.setZero();
    for (auto& tm : lift_terms(x.comult_l, static_cast<int>(col))) {
      Vec ta = apply_sparse(x.t.m, a.alpha.column(tm.i));
      Vec prod = apply_sparse(b.alpha.m, H.mul(ta, H.space().basis_vector(tm.j)));
      for (Eigen::Index r = 0; r < da; ++r)
        if (!prod(r).is_zero()) acc(r) += tm.c * prod(r);
    }
    m.col(col) = acc;
  }
  LinMap gamma(H.space(), x.A.alg.space(), std::move(m));
  std::string why;
  auto out = validate_biretraction(x, gamma, &why);
  if (!out) throw std::logic_error("internal: convolution left the biretraction set: " + why);

  // paper cross-checks: e^{a*b} = (a.t)^{-1}(e^b a(1)) and (a*b).t = b.t.a.t
  Vec expected_e = apply_sparse(a.t_inverse().m, pointwise(b.e, a.alpha1));
  if (!exact_equal(out->e, expected_e))
    throw std::logic_error("internal: witness of a*b disagrees with (a.t)^{-1}(e^b a(1))");
  Mat lhs = out->alpha.m * x.t.m;
  Mat rhs = b.alpha.m * x.t.m * a.alpha.m * x.t.m;
  if (!exact_equal(lhs, rhs)) throw std::logic_error("internal: (a*b).t != b.t . a.t");
  return *out;
}

Biretraction star(const Biretraction& a) {
  const HopfAlgebroid& x = *a.model;
  const FinAlgebra& H = x.H;
  const Eigen::Index d = H.dim(), da = x.A.alg.dim();
  LinMap tinv = a.t_inverse();
  Mat m(da, d);
  m.setZero();
  if (x.mode == AlgebroidMode::commutative) {
    m = tinv.m * a.alpha.m * x.antipode.m;
  } else {
    for (Eigen::Index col = 0; col < d; ++col) {
      Vec acc(da);
      acc.setZero();
      for (auto& tm : lift_terms(x.comult_r, static_cast<int>(col))) {
        Vec el = x.counit_l.column(tm.i);
        Vec as = apply_sparse(a.alpha.m, x.antipode.column(tm.j));
        Vec prod = pointwise(el, as);
        for (Eigen::Index r = 0; r < da; ++r) acc(r) += tm.c * prod(r);
      }
      m.col(col) = tinv.m * acc;
    }
  }
  LinMap amap(H.space(), x.A.alg.space(), std::move(m));
  std::string why;
  auto out = validate_biretraction(x, amap, &why);
  if (!out) throw std::logic_error("internal: pseudo-inverse left the biretraction set: " + why);
  if (!exact_equal(out->alpha1, a.e) || !exact_equal(out->e, a.alpha1))
    throw std::logic_error("internal: star swaps e^alpha and alpha(1) incorrectly");

  // a * a* = eps(.) e^a and a* * a = eps(.) a(1) with eps_l; over the
  // groupoid-algebra model these hold on the centralizer columns (off it the
  // example's own computation gives the partial unit instead)
  {
    const LinMap& eps = x.counit_l;
    std::vector<bool> central = base_centralizer(x);
    for (Eigen::Index col = 0; col < d; ++col) {
      if (x.mode != AlgebroidMode::commutative && !central[static_cast<std::size_t>(col)]) continue;
      Vec acc1(da), acc2(da);
      acc1.setZero();
      acc2.setZero();
      for (auto& tm : lift_terms(x.comult_l, static_cast<int>(col))) {
        Vec t1 = apply_sparse(out->alpha.m,
                              x.H.mul(apply_sparse(x.t.m, a.alpha.column(tm.i)), x.H.space().basis_vector(tm.j)));
        Vec t2 = apply_sparse(a.alpha.m,
                              x.H.mul(apply_sparse(x.t.m, out->alpha.column(tm.i)), x.H.space().basis_vector(tm.j)));
        for (Eigen::Index r = 0; r < da; ++r) {
          if (!t1(r).is_zero()) acc1(r) += tm.c * t1(r);
          if (!t2(r).is_zero()) acc2(r) += tm.c * t2(r);
        }
      }
      if (!exact_equal(acc1, Vec(pointwise(eps.column(col), a.e))))
        throw std::logic_error("internal: a * a* != eps(.) e^a");
      if (!exact_equal(acc2, Vec(pointwise(eps.column(col), a.alpha1))))
        throw std::logic_error("internal: a* * a != eps(.) a(1)");
    }
  }
  return *out;
}

BrtSemigroup enumerate_biretractions(const HopfAlgebroid& x) {
  const FinAlgebra& H = x.H;
  const Eigen::Index d = H.dim(), da = x.A.alg.dim();
  if (d > 40) throw std::invalid_argument("enumerate_biretractions: practical bound dim H <= 40 exceeded");

  // candidates vanish off the centralizer of the base (forced by the
  // A-multiplicativity clauses in split bases) and restrict to per-point
  // characters of the centralizer subalgebra
  std::vector<bool> central = base_centralizer(x);
  std::vector<int> cidx;
  for (Eigen::Index i = 0; i < d; ++i)
    if (central[static_cast<std::size_t>(i)]) cidx.push_back(static_cast<int>(i));
  const Eigen::Index dc = static_cast<Eigen::Index>(cidx.size());
  std::vector<int> back(static_cast<std::size_t>(d), -1);
  for (Eigen::Index k = 0; k < dc; ++k) back[static_cast<std::size_t>(cidx[static_cast<std::size_t>(k)])] = static_cast<int>(k);
  std::vector<std::string> clabels;
  for (int i : cidx) clabels.push_back(H.space().label(i));
  BasedSpace cspace{clabels};
  Mat cmult(dc, dc * dc);
  cmult.setZero();
  for (Eigen::Index i = 0; i < dc; ++i)
    for (Eigen::Index j = 0; j < dc; ++j)
      for (auto& [k, c] : H.basis_product(cidx[static_cast<std::size_t>(i)], cidx[static_cast<std::size_t>(j)])) {
        if (back[static_cast<std::size_t>(k)] < 0)
          throw std::logic_error("internal: centralizer basis is not multiplicatively closed");
        cmult(back[static_cast<std::size_t>(k)], i * dc + j) = c;
      }
  FinAlgebra csub(cspace, LinMap(tensor(cspace, cspace), cspace, std::move(cmult)));
  CharacterReport chars = enumerate_characters(csub);
  BrtSemigroup out;
  out.complete_over_Q = chars.complete_over_Q;

  std::vector<std::size_t> tuple(static_cast<std::size_t>(da), 0);
  const std::size_t nchars = chars.characters.size();
  while (true) {
    Mat m(da, d);
    m.setZero();
    for (Eigen::Index r = 0; r < da; ++r)
      for (Eigen::Index k = 0; k < dc; ++k)
        m(r, cidx[static_cast<std::size_t>(k)]) = chars.characters[tuple[static_cast<std::size_t>(r)]](k);
    auto cand = validate_biretraction(x, LinMap(H.space(), x.A.alg.space(), std::move(m)));
    if (cand) out.elems.push_back(std::move(*cand));
    // advance the tuple lexicographically
    std::size_t pos = 0;
    while (pos < tuple.size() && ++tuple[pos] == nchars) {
      tuple[pos] = 0;
      ++pos;
    }
    if (pos == tuple.size()) break;
  }

  // convolution table and star map
  const int n = static_cast<int>(out.elems.size());
  auto find_index = [&](const LinMap& alpha) {
    for (int i = 0; i < n; ++i)
      if (same_linmap(out.elems[static_cast<std::size_t>(i)].alpha, alpha)) return i;
    return -1;
  };
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Biretraction c = convolve(out.elems[static_cast<std::size_t>(i)], out.elems[static_cast<std::size_t>(j)]);
      int k = find_index(c.alpha);
      if (k < 0) throw std::logic_error("internal: convolution product missing from the enumeration");
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
    }
  std::optional<int> unit;
  for (int u = 0; u < n; ++u) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (table[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)] != i ||
          table[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] != i)
        ok = false;
    if (ok) {
      unit = u;
      break;
    }
  }
  out.sgp = FinSemigroup(std::move(labels), std::move(table), unit);
  out.star_of.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Biretraction st = star(out.elems[static_cast<std::size_t>(i)]);
    int k = find_index(st.alpha);
    if (k < 0) throw std::logic_error("internal: pseudo-inverse missing from the enumeration");
    out.star_of[static_cast<std::size_t>(i)] = k;
    // regular-monoid identities, exhaustively
    if (out.sgp.op(out.sgp.op(i, k), i) != i || out.sgp.op(out.sgp.op(k, i), k) != k)
      throw std::logic_error("internal: a a* a = a fails in the enumerated monoid");
  }
  auto idem = out.sgp.idempotents();
  out.idempotents_commute = true;
  for (int e1 : idem)
    for (int e2 : idem)
      if (out.sgp.op(e1, e2) != out.sgp.op(e2, e1)) out.idempotents_commute = false;
  return out;
}

Biretraction from_phi_data(const HopfAlgebroid& pair_model, const LinMap& phi, const Vec& e) {
  const FinAlgebra& A = pair_model.A.alg;
  const Eigen::Index n = A.dim();
  if (pair_model.name != "pair") throw std::invalid_argument("from_phi_data expects the pair algebroid");
  if (phi.dom != A.space() || phi.cod != A.space()) throw std::invalid_argument("phi must be a self-map of A");
  auto emask = pair_model.A.subset_of(e);
  if (!emask || !exact_equal(A.mul(e, e), e)) throw std::invalid_argument("e must be a split idempotent of A");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Vec lhs = phi.m * A.mul(A.space().basis_vector(i), A.space().basis_vector(j));
      if (!exact_equal(lhs, A.mul(phi.column(i), phi.column(j))))
        throw std::invalid_argument("phi is not multiplicative");
    }
  // phi restricted to Ae must map the points of e to distinct points
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (Eigen::Index z = 0; z < n; ++z) {
    if (!(*emask & (1u << z))) continue;
    int supp = -1;
    Vec img = phi.column(z);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (img(r).is_zero()) continue;
      if (!img(r).is_one() || supp >= 0) throw std::invalid_argument("phi|_{Ae} is not a bijection onto A phi(e)");
      supp = static_cast<int>(r);
    }
    if (supp < 0 || hit[static_cast<std::size_t>(supp)])
      throw std::invalid_argument("phi|_{Ae} is not a bijection onto A phi(e)");
    hit[static_cast<std::size_t>(supp)] = true;
  }
  Mat m(n, n * n);
  m.setZero();
  for (Eigen::Index xx = 0; xx < n; ++xx) {
    if (!(*emask & (1u << xx))) continue;  // phi(chi_x e) = 0 off supp(e)
    Vec img = phi.column(xx);
    for (Eigen::Index yy = 0; yy < n; ++yy)
      if (!img(yy).is_zero()) m(yy, xx * n + yy) = img(yy);  // phi(chi_x)(y) * chi_y
  }
  std::string why;
  auto out = validate_biretraction(pair_model, LinMap(pair_model.H.space(), A.space(), std::move(m)), &why);
  if (!out) throw std::logic_error("internal: alpha_[phi,e] failed to validate: " + why);
  if (!exact_equal(out->e, e)) throw std::logic_error("internal: alpha_[phi,e] has witness != e");
  return *out;
}

std::vector<PhiClass> enumerate_phi_classes(int npoints) {
  std::vector<PhiClass> out;
  for (const auto& pb : symmetric_inverse_monoid_elements(npoints)) out.push_back(PhiClass{pb.map});
  return out;
}

LinMap phi_linmap(const CommSplitAlgebra& a, const PhiClass& p) {
  const Eigen::Index n = a.alg.dim();
  Mat m(n, n);
  m.setZero();
  for (Eigen::Index z = 0; z < n; ++z)
    if (p.mu[static_cast<std::size_t>(z)] >= 0) m(p.mu[static_cast<std::size_t>(z)], z) = Rational(1);
  return LinMap(a.alg.space(), a.alg.space(), std::move(m));
}

Vec phi_witness(const CommSplitAlgebra& a, const PhiClass& p) {
  unsigned mask = 0;
  for (std::size_t z = 0; z < p.mu.size(); ++z)
    if (p.mu[z] >= 0) mask |= 1u << z;
  return a.idempotent(mask);
}

PhiClass phi_mul(const CommSplitAlgebra& a, const PhiClass& p, const PhiClass& q) {
  // [phi, e][psi, f] = [phi . psi, psi^{-1}(e psi(f))]
  const Eigen::Index n = a.alg.dim();
  LinMap phi = phi_linmap(a, p), psi = phi_linmap(a, q);
  Vec e = phi_witness(a, p), f = phi_witness(a, q);
  Vec psif = psi.m * f;               // psi(f)
  Vec epf = pointwise(e, psif);       // e psi(f)
  // psi^{-1} on A psi(f): invert the point map
  Vec news(n);
  news.setZero();
  for (Eigen::Index z = 0; z < n; ++z)
    if (q.mu[static_cast<std::size_t>(z)] >= 0 && !epf(q.mu[static_cast<std::size_t>(z)]).is_zero())
      news(z) = Rational(1);
  Mat comp = phi.m * psi.m;
  PhiClass out;
  out.mu.assign(static_cast<std::size_t>(n), -1);
  for (Eigen::Index z = 0; z < n; ++z) {
    if (news(z).is_zero()) continue;
    for (Eigen::Index r = 0; r < n; ++r)
      if (!comp(r, z).is_zero()) out.mu[static_cast<std::size_t>(z)] = static_cast<int>(r);
  }
  return out;
}

PhiClass phi_star(const CommSplitAlgebra& a, const PhiClass& p) {
  PhiClass out;
  out.mu.assign(p.mu.size(), -1);
  for (std::size_t z = 0; z < p.mu.size(); ++z)
    if (p.mu[z] >= 0) out.mu[static_cast<std::size_t>(p.mu[z])] = static_cast<int>(z);
  (void)a;
  return out;
}

Biretraction from_bisection(const HopfAlgebroid& repfun_model, const FinGroupoid& gpd, const Bisection& u) {
  if (repfun_model.name != "repfun" && repfun_model.name != "pair")
    throw std::invalid_argument("from_bisection expects a repfun algebroid");
  const Eigen::Index d = repfun_model.H.dim(), da = repfun_model.A.alg.dim();
  if (d != gpd.arrow_count() || da != gpd.object_count())
    throw std::invalid_argument("from_bisection: groupoid does not match the algebroid");
  if (!valid_bisection(gpd, u)) throw std::invalid_argument("from_bisection: invalid bisection");
  Mat m(da, d);
  m.setZero();
  for (std::size_t i = 0; i < u.domain.size(); ++i)
    m(u.domain[i], u.arrow[i]) = Rational(1);  // alpha(e_arrow)_y = [u(y) = arrow]
  std::string why;
  auto out = validate_biretraction(repfun_model, LinMap(repfun_model.H.space(), repfun_model.A.alg.space(), std::move(m)),
                                   &why);
  if (!out) throw std::logic_error("internal: alpha_(u,X) failed to validate: " + why);
  return *out;
}

Report classify_repfun(const HopfAlgebroid& repfun_model, const FinGroupoid& gpd) {
  Report rep;
  rep.title = "bisections vs biretractions of the representative-function algebroid";
  BisectionSemigroup bis = enumerate_bisections(gpd);
  BrtSemigroup brt = enumerate_biretractions(repfun_model);
  rep.count("bisections", static_cast<long>(bis.elems.size()));
  rep.count("biretractions", static_cast<long>(brt.elems.size()));
  rep.add("counts-match", bis.elems.size() == brt.elems.size(),
          bis.elems.size() == brt.elems.size()
              ? ""
              : std::to_string(bis.elems.size()) + " != " + std::to_string(brt.elems.size()));
  rep.add("character-enumeration-complete-over-Q", brt.complete_over_Q,
          brt.complete_over_Q ? "" : "irrational characters could hide biretractions", /*required=*/false);

  // the morphism u -> alpha_(u,X), with image located inside the enumeration
  std::vector<int> image;
  bool injective = true, total = true;
  for (const auto& u : bis.elems) {
    Biretraction a = from_bisection(repfun_model, gpd, u);
    int k = -1;
    for (std::size_t i = 0; i < brt.elems.size(); ++i)
      if (same_linmap(brt.elems[i].alpha, a.alpha)) k = static_cast<int>(i);
    if (k < 0) total = false;
    image.push_back(k);
  }
  std::vector<int> seen(brt.elems.size(), 0);
  for (int k : image)
    if (k >= 0 && ++seen[static_cast<std::size_t>(k)] > 1) injective = false;
  bool surjective = std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
  rep.add("map-into-biretractions", total);
  rep.add("map-injective", injective);
  rep.add("map-surjective", total && surjective);

  // reconstruction: every biretraction decodes to (lambda, phi, X)
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < brt.elems.size() && ok; ++i) {
      const Biretraction& b = brt.elems[i];
      // X = supp(beta(1)); u(x) = (lambda(x), phi(x), x) read off the matrix
      Bisection u;
      for (Eigen::Index y = 0; y < repfun_model.A.alg.dim(); ++y) {
        if (!b.alpha1(y).is_one()) continue;
        int arrow = -1;
        for (Eigen::Index col = 0; col < repfun_model.H.dim(); ++col)
          if (b.alpha.m(y, col).is_one() && gpd.src[static_cast<std::size_t>(col)] == y) {
            if (arrow >= 0) ok = false;  // must be unique
            arrow = static_cast<int>(col);
          }
        if (arrow < 0) {
          ok = false;
          break;
        }
        u.domain.push_back(static_cast<int>(y));
        u.arrow.push_back(arrow);
      }
      if (!ok || !valid_bisection(gpd, u) ||
          !same_linmap(from_bisection(repfun_model, gpd, u).alpha, b.alpha)) {
        ok = false;
        w = "biretraction #" + std::to_string(i) + " does not decode to a bisection";
      }
    }
    rep.add("classification-reconstructs-bisections", ok, w);
  }

  // table, unit and star transport
  {
    bool tables = total, unit_ok = total, star_ok = total;
    for (std::size_t i = 0; i < bis.elems.size() && tables; ++i)
      for (std::size_t j = 0; j < bis.elems.size(); ++j) {
        int lhs = image[static_cast<std::size_t>(bis.sgp.op(static_cast<int>(i), static_cast<int>(j)))];
        int rhs = brt.sgp.op(image[i], image[j]);
        if (lhs != rhs) {
          tables = false;
          break;
        }
      }
    if (total) {
      if (bis.sgp.unit && brt.sgp.unit) unit_ok = image[static_cast<std::size_t>(*bis.sgp.unit)] == *brt.sgp.unit;
      for (std::size_t i = 0; i < bis.elems.size() && star_ok; ++i) {
        Bisection st = bisection_star(gpd, bis.elems[i]);
        int sti = -1;
        for (std::size_t k = 0; k < bis.elems.size(); ++k)
          if (bis.elems[k] == st) sti = static_cast<int>(k);
        if (image[static_cast<std::size_t>(sti)] != brt.star_of[static_cast<std::size_t>(image[i])]) star_ok = false;
      }
    }
    rep.add("tables-match", tables);
    rep.add("unit-maps-to-counit", unit_ok);
    rep.add("star-maps-to-star", star_ok);
  }
  return rep;
}

TorusElem torus_brt_eval(const TorusBiretraction& a, long n, long m) {
  // alpha(U^n V^m) = q_alpha^m U^{n + m t_alpha}
  return torus_mono(n + m * a.t_alpha, 0, a.q_alpha.pow(m));
}

TorusBiretraction torus_brt_convolve(const TorusBiretraction& a, const TorusBiretraction& b, int window) {
  TorusBiretraction out{a.q_alpha * b.q_alpha, a.t_alpha + b.t_alpha};
  // cross-check through the convolution formula on the window: Delta_l(h) =
  // h (x) V^m, beta|_A = id, so (a*b)(h) = a(h) * b(V^m)
  QuantumTorus t1{Rational(1)};
  for (long n = -window; n <= window; ++n)
    for (long m = -window; m <= window; ++m) {
      TorusElem direct = torus_mul(t1, torus_brt_eval(a, n, m), torus_brt_eval(b, 0, m));
      if (!torus_equal(direct, torus_brt_eval(out, n, m)))
        throw std::logic_error("internal: torus convolution disagrees with the (q, t) product law");
    }
  return out;
}

TorusBrtOutcome torus_biretraction(const Rational& q, const Rational& q_alpha, long t_alpha, int window) {
  if (q.is_zero()) throw std::invalid_argument("torus needs q != 0");
  if (q_alpha.is_zero()) throw std::invalid_argument("alpha(V) = 0 is not invertible; q_alpha must be nonzero");
  TorusBrtOutcome out;
  out.checks.title = "torus biretraction (q = " + q.str() + ")";
  if (!(q == Rational(1))) {
    out.exists = false;
    Rational obstruction = Rational(1) - q;
    out.certificate = {
        "A = k[U,U^-1] has no idempotents besides 0 and 1, so every biretraction is global",
        "a global biretraction restricts to the identity on A and is multiplicative",
        "alpha(V) alpha(V^-1) = alpha(1) = 1, so alpha(V) is invertible in A",
        "U alpha(V) = alpha(U) alpha(V) = alpha(UV) = alpha(q VU) = q alpha(V) alpha(U) = q U alpha(V)",
        "hence (1 - q) U alpha(V) = 0 with U alpha(V) invertible, forcing q = 1",
        "here 1 - q = " + obstruction.str() + " != 0: no biretraction exists for q = " + q.str(),
    };
    out.checks.add("nonexistence-certificate", true, "derivation forces q = 1; given q = " + q.str());
    return out;
  }
  out.exists = true;
  out.brt = TorusBiretraction{q_alpha, t_alpha};
  QuantumTorus t{q};
  // multiplicativity on the window
  bool mult = true;
  for (long n1 = -window; n1 <= window && mult; ++n1)
    for (long m1 = -window; m1 <= window && mult; ++m1)
      for (long n2 = -window; n2 <= window && mult; ++n2)
        for (long m2 = -window; m2 <= window; ++m2) {
          TorusElem prod = torus_mul(t, torus_mono(n1, m1), torus_mono(n2, m2));
          TorusElem lhs;
          for (auto& [k, c] : prod) {
            TorusElem term = torus_brt_eval(*out.brt, k.first, k.second);
            for (auto& [kk, cc] : term) lhs[kk] += c * cc;
          }
          TorusElem rhs = torus_mul(t, torus_brt_eval(*out.brt, n1, m1), torus_brt_eval(*out.brt, n2, m2));
          if (!torus_equal(lhs, rhs)) {
            mult = false;
            break;
          }
        }
  out.checks.add("multiplicative-on-window", mult);
  out.checks.add("restricts-to-identity-on-A",
                 torus_equal(torus_brt_eval(*out.brt, 1, 0), torus_mono(1, 0)) &&
                     torus_equal(torus_brt_eval(*out.brt, -1, 0), torus_mono(-1, 0)));
  return out;
}

LaurentBrt laurent_brt(const LaurentAlgebroid& la, const LinMap& phi, const Vec& e, const Vec& p) {
  // reuse the pair-algebroid validation of [phi, e]
  Biretraction base = from_phi_data(la.core, phi, e);
  Vec phie = phi.m * e;
  Vec pprime(p.size());
  pprime.setZero();
  for (Eigen::Index xx = 0; xx < p.size(); ++xx) {
    if (phie(xx).is_zero()) continue;
    if (p(xx).is_zero())
      throw std::invalid_argument("no p' with p p' = phi(e): p vanishes at a point of supp(phi(e))");
    pprime(xx) = p(xx).inverse();
  }
  return LaurentBrt{phi, e, p, pprime};
}

Vec laurent_brt_eval(const LaurentAlgebroid& la, const LaurentBrt& a, long degree, int h0_basis) {
  const Eigen::Index n = la.A.alg.dim();
  Eigen::Index xx = h0_basis / n, yy = h0_basis % n;
  Vec out(n);
  out.setZero();
  if (a.e(xx).is_zero()) return out;
  Vec img = a.phi.column(xx);
  const Vec& pw = degree >= 0 ? a.p : a.pprime;
  Rational scale = Rational(1);
  (void)scale;
  for (Eigen::Index r = 0; r < n; ++r) {
    if (img(r).is_zero() || r != yy) continue;
    Rational v = img(r);
    long k = degree >= 0 ? degree : -degree;
    for (long i = 0; i < k; ++i) v *= pw(r);
    out(r) = v;
  }
  return out;
}

LaurentBrt laurent_brt_convolve(const LaurentAlgebroid& la, const LaurentBrt& a, const LaurentBrt& b) {
  // expected class: [psi . phi, phi^{-1}(f phi(e)), q_b psi(p_a)] with the
  // paper's order (alpha_[phi,e,p] * alpha_[psi,f,q] = alpha_[psi,f,q][phi,e,p])
  const Eigen::Index n = la.A.alg.dim();
  Mat comp = b.phi.m * a.phi.m;
  Vec f_phie = b.e;
  Vec phie = a.phi.m * a.e;
  Vec fphie(n);
  for (Eigen::Index i = 0; i < n; ++i) fphie(i) = f_phie(i) * phie(i);
  // phi^{-1}(f phi(e)): pull back along a.phi's point map
  Vec newe(n);
  newe.setZero();
  for (Eigen::Index z = 0; z < n; ++z) {
    if (a.e(z).is_zero()) continue;
    for (Eigen::Index r = 0; r < n; ++r)
      if (!a.phi.m(r, z).is_zero() && !fphie(r).is_zero()) newe(z) = Rational(1);
  }
  Vec newp = b.phi.m * a.p;  // q psi(p), pointwise
  for (Eigen::Index i = 0; i < n; ++i) newp(i) = newp(i) * b.p(i);
  LaurentBrt out = laurent_brt(la, LinMap(la.A.alg.space(), la.A.alg.space(), comp), newe, newp);
  // verify against the convolution formula on the default window
  for (long deg = -la.default_window; deg <= la.default_window; ++deg)
    for (int h0 = 0; h0 < la.core.H.dim(); ++h0) {
      Eigen::Index xx = h0 / n, yy = h0 % n;
      Vec acc(n);
      acc.setZero();
      for (Eigen::Index u = 0; u < n; ++u)
        for (Eigen::Index v = 0; v < n; ++v) {
          // beta(t(alpha((x,u)@deg))) beta((v,y)@deg)
          Vec aval = laurent_brt_eval(la, a, deg, static_cast<int>(xx * n + u));
          // t(c) = (c (x) 1)x^0, and beta((c (x) 1)x^0) = psi(c f)
          Vec bt(n);
          bt.setZero();
          for (Eigen::Index r = 0; r < n; ++r)
            if (!aval(r).is_zero() && !b.e(r).is_zero()) {
              Vec im = b.phi.column(r);
              for (Eigen::Index r2 = 0; r2 < n; ++r2) bt(r2) += aval(r) * im(r2);
            }
          Vec bval = laurent_brt_eval(la, b, deg, static_cast<int>(v * n + yy));
          for (Eigen::Index r = 0; r < n; ++r) acc(r) += bt(r) * bval(r);
        }
      Vec expect = laurent_brt_eval(la, out, deg, h0);
      if (!exact_equal(acc, expect))
        throw std::logic_error("internal: laurent convolution disagrees with the [psi phi, ...] class");
    }
  return out;
}

LaurentBrt laurent_brt_star(const LaurentAlgebroid& la, const LaurentBrt& a) {
  // [phi, e, p]* = [phi^{-1}, phi(e), phi^{-1}(p' phi(e))]
  const Eigen::Index n = la.A.alg.dim();
  Mat inv(n, n);
  inv.setZero();
  for (Eigen::Index z = 0; z < n; ++z) {
    if (a.e(z).is_zero()) continue;
    for (Eigen::Index r = 0; r < n; ++r)
      if (!a.phi.m(r, z).is_zero()) inv(z, r) = Rational(1);
  }
  Vec phie = a.phi.m * a.e;
  Vec arg(n);
  for (Eigen::Index i = 0; i < n; ++i) arg(i) = a.pprime(i) * phie(i);
  Vec newp = inv * arg;
  return laurent_brt(la, LinMap(la.A.alg.space(), la.A.alg.space(), std::move(inv)), phie, newp);
}

Qisg qisg_span(const BrtSemigroup& b) {
  FinAlgebra H = semigroup_algebra(b.sgp);
  const Eigen::Index d = H.dim();
  Mat cm(d * d, d);
  cm.setZero();
  for (Eigen::Index i = 0; i < d; ++i) cm(i * d + i, i) = Rational(1);
  Mat eps(1, d);
  for (Eigen::Index i = 0; i < d; ++i) eps(0, i) = Rational(1);
  Mat sm(d, d);
  sm.setZero();
  for (Eigen::Index i = 0; i < d; ++i) sm(b.star_of[static_cast<std::size_t>(i)], i) = Rational(1);
  FinCoalgebra C(H.space(), LinMap(H.space(), tensor(H.space(), H.space()), std::move(cm)),
                 LinMap(H.space(), BasedSpace({"1"}), std::move(eps)));
  LinMap antipode(H.space(), H.space(), std::move(sm));
  return Qisg{std::move(H), std::move(C), std::move(antipode), b.sgp.unit.has_value(), true};
}

}  // namespace qisg
