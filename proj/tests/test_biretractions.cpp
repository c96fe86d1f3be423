#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qisg/biretraction.hpp"

using namespace qisg;

namespace {

bool same_alpha(const Biretraction& a, const Biretraction& b) { return exact_equal(a.alpha.m, b.alpha.m); }

}  // namespace

TEST_CASE("validation on the pair algebroid") {
  HopfAlgebroid x = pair_algebroid(fun_algebra(2));

  SUBCASE("the counit is a global biretraction with e = 1") {
    Biretraction eps = counit_biretraction(x);
    CHECK(eps.is_global());
    CHECK(exact_equal(eps.e, x.A.idempotent(0b11)));
  }
  SUBCASE("swap biretraction [swap, 1] validates with e = 1") {
    Mat sw(2, 2);
    sw.setZero();
    sw(0, 1) = sw(1, 0) = Rational(1);
    Biretraction a = from_phi_data(x, LinMap(x.A.alg.space(), x.A.alg.space(), sw), x.A.idempotent(0b11));
    CHECK(exact_equal(a.e, x.A.idempotent(0b11)));
    CHECK(a.is_global());
    // alpha_[swap,1] * alpha_[swap,1] = eps
    Biretraction sq = convolve(a, a);
    CHECK(same_alpha(sq, counit_biretraction(x)));
  }
  SUBCASE("identity-on-an-ideal biretractions convolve by intersecting supports") {
    Biretraction a1 = from_phi_data(x, LinMap::identity(x.A.alg.space()), x.A.idempotent(0b01));
    Biretraction a2 = from_phi_data(x, LinMap::identity(x.A.alg.space()), x.A.idempotent(0b10));
    Biretraction prod = convolve(a1, a2);
    CHECK(is_zero(prod.alpha.m));  // disjoint supports: the zero biretraction
    CHECK(exact_equal(prod.e, x.A.idempotent(0)));
  }
  SUBCASE("the zero map is the valid degenerate biretraction with e = 0") {
    std::string why;
    auto z = validate_biretraction(x, LinMap::zero(x.H.space(), x.A.alg.space()), &why);
    REQUIRE(z.has_value());
    CHECK(exact_equal(z->e, x.A.idempotent(0)));
  }
  SUBCASE("a multiplicative map failing BRT1 is rejected") {
    // alpha(a (x) b) = a(1)b(1) chi_1 + a(1)b(1) chi_2? use the character at
    // point 1 duplicated at both points: alpha(s(chi_2)) = chi_2*alpha(1) fails
    Mat m(2, 4);
    m.setZero();
    m(0, 0) = Rational(1);  // (1,1) -> chi_1
    m(1, 0) = Rational(1);  // (1,1) -> + chi_2
    std::string why;
    auto bad = validate_biretraction(x, LinMap(x.H.space(), x.A.alg.space(), std::move(m)), &why);
    CHECK(!bad.has_value());
    CHECK(!why.empty());
  }
}

TEST_CASE("enumeration: pair algebroid has 7 biretractions isomorphic to I(2) data") {
  HopfAlgebroid x = pair_algebroid(fun_algebra(2));
  BrtSemigroup b = enumerate_biretractions(x);
  CHECK(b.elems.size() == 7);
  CHECK(b.complete_over_Q);
  CHECK(b.sgp.unit.has_value());
  CHECK(b.idempotents_commute);
  auto rep = is_inverse(b.sgp);
  CHECK(rep.kind == InverseClass::inverse);
  // unit is the counit
  CHECK(same_alpha(b.elems[static_cast<std::size_t>(*b.sgp.unit)], counit_biretraction(x)));
  // isomorphic to the symmetric inverse monoid
  CHECK(find_isomorphism(b.sgp, symmetric_inverse_monoid(2)).has_value());
}

TEST_CASE("AA2 classification: [phi,e] data anti-realizes the convolution monoid") {
  HopfAlgebroid x = pair_algebroid(fun_algebra(2));
  auto classes = enumerate_phi_classes(2);
  CHECK(classes.size() == 7);
  // [id, 1] realizes the counit
  PhiClass full{{0, 1}};
  CHECK(same_alpha(from_phi_data(x, phi_linmap(x.A, full), phi_witness(x.A, full)), counit_biretraction(x)));
  // alpha_[phi,e] * alpha_[psi,f] = alpha_{[psi,f][phi,e]} and stars transport
  for (const auto& p : classes)
    for (const auto& q : classes) {
      Biretraction ap = from_phi_data(x, phi_linmap(x.A, p), phi_witness(x.A, p));
      Biretraction aq = from_phi_data(x, phi_linmap(x.A, q), phi_witness(x.A, q));
      Biretraction conv = convolve(ap, aq);
      PhiClass rev = phi_mul(x.A, q, p);  // order-reversed
      CHECK(same_alpha(conv, from_phi_data(x, phi_linmap(x.A, rev), phi_witness(x.A, rev))));
    }
  for (const auto& p : classes) {
    Biretraction ap = from_phi_data(x, phi_linmap(x.A, p), phi_witness(x.A, p));
    PhiClass ps = phi_star(x.A, p);
    CHECK(same_alpha(star(ap), from_phi_data(x, phi_linmap(x.A, ps), phi_witness(x.A, ps))));
  }
}

TEST_CASE("the inverse of (a*b).t is the composite of the inverses on the witness ideal") {
  HopfAlgebroid x = pair_algebroid(fun_algebra(2));
  BrtSemigroup b = enumerate_biretractions(x);
  for (const auto& a1 : b.elems)
    for (const auto& a2 : b.elems) {
      Biretraction c = convolve(a1, a2);
      Mat composed = a1.t_inverse().m * a2.t_inverse().m;
      for (Eigen::Index col = 0; col < x.A.alg.dim(); ++col)
        if (c.alpha1(col).is_one()) CHECK(exact_equal(Vec(c.t_inverse().m.col(col)), Vec(composed.col(col))));
    }
}

TEST_CASE("star identities across the enumerated models") {
  HopfAlgebroid pair2 = pair_algebroid(fun_algebra(2));
  HopfAlgebroid repfun = repfun_transitive_algebroid(2, FinGroup::cyclic(2));
  for (const HopfAlgebroid* xp : {&pair2, &repfun}) {
    BrtSemigroup b = enumerate_biretractions(*xp);
    for (const auto& a : b.elems) {
      Biretraction st = star(a);
      // star checks a a* = eps e^a, a* a = eps a(1), a a* a = a internally;
      // confirm the witness swaps on top
      CHECK(exact_equal(st.alpha1, a.e));
      CHECK(exact_equal(st.e, a.alpha1));
      Biretraction back = star(st);
      CHECK(same_alpha(back, a));
    }
  }
}

TEST_CASE("repfun(2, Z2): 17 biretractions, isomorphic to the bisections of X x Z2 x X") {
  FinGroupoid g = product_groupoid(2, FinGroup::cyclic(2));
  HopfAlgebroid x = repfun_transitive_algebroid(2, FinGroup::cyclic(2));
  Report r = classify_repfun(x, g);
  CHECK(r.ok());
  bool counts = false;
  for (auto& [name, value] : r.counts)
    if (name == "biretractions" && value == 17) counts = true;
  CHECK(counts);

  SUBCASE("identity bisection maps to the counit and stars transport") {
    std::vector<int> all{0, 1};
    Biretraction eps = from_bisection(x, g, identity_bisection(g, all));
    CHECK(same_alpha(eps, counit_biretraction(x)));
    auto bs = enumerate_bisections(g);
    for (const auto& u : bs.elems) {
      Biretraction a = from_bisection(x, g, u);
      Biretraction au = from_bisection(x, g, bisection_star(g, u));
      CHECK(same_alpha(star(a), au));
    }
  }
  SUBCASE("products transport") {
    auto bs = enumerate_bisections(g);
    for (std::size_t i = 0; i < bs.elems.size(); i += 3)
      for (std::size_t j = 0; j < bs.elems.size(); j += 3) {
        Biretraction lhs = convolve(from_bisection(x, g, bs.elems[i]), from_bisection(x, g, bs.elems[j]));
        Biretraction rhs = from_bisection(x, g, bisection_compose(g, bs.elems[i], bs.elems[j]));
        CHECK(same_alpha(lhs, rhs));
      }
  }
}

TEST_CASE("weak-Hopf groupoid algebroid: 9 commuting biretractions, 4 global") {
  FinGroupoid g = product_groupoid(2, FinGroup::cyclic(2));
  HopfAlgebroid x = weakhopf_algebroid(g);
  BrtSemigroup b = enumerate_biretractions(x);
  CHECK(b.elems.size() == 9);
  CHECK(b.complete_over_Q);
  CHECK(b.idempotents_commute);
  CHECK(is_inverse(b.sgp).kind == InverseClass::inverse);
  // commutative monoid
  for (int i = 0; i < b.sgp.size(); ++i)
    for (int j = 0; j < b.sgp.size(); ++j) CHECK(b.sgp.op(i, j) == b.sgp.op(j, i));
  // the global ones form an abelian group of order 4
  std::vector<int> global;
  for (std::size_t i = 0; i < b.elems.size(); ++i)
    if (b.elems[i].is_global()) global.push_back(static_cast<int>(i));
  CHECK(global.size() == 4);
  REQUIRE(b.sgp.unit.has_value());
  for (int i : global) {
    bool inv = false;
    for (int j : global) {
      CHECK(std::find(global.begin(), global.end(), b.sgp.op(i, j)) != global.end());
      if (b.sgp.op(i, j) == *b.sgp.unit) inv = true;
    }
    CHECK(inv);
  }
  // isomorphic to F = (characters of Z2 or zero) per point: klein four on the
  // global part
  FinGroup klein = FinGroup::klein_four();
  FinSemigroup klein_sgp = FinSemigroup::from_group(klein);
  // restricted table of the global elements
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int prod = b.sgp.op(global[static_cast<std::size_t>(i)], global[static_cast<std::size_t>(j)]);
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<int>(std::find(global.begin(), global.end(), prod) - global.begin());
    }
  FinSemigroup gl({"g0", "g1", "g2", "g3"}, table);
  CHECK(find_isomorphism(gl, klein_sgp).has_value());
}

TEST_CASE("the convolution integrand annihilates every balancing generator") {
  HopfAlgebroid pair2 = pair_algebroid(fun_algebra(2));
  HopfAlgebroid wh = weakhopf_algebroid(product_groupoid(2, FinGroup::cyclic(2)));
  for (const HopfAlgebroid* xp : {&pair2, &wh}) {
    BrtSemigroup b = enumerate_biretractions(*xp);
    auto gens = left_balancing_generators(xp->H, xp->s, xp->t);
    for (const auto& a1 : b.elems)
      for (const auto& a2 : b.elems)
        for (const Vec& g : gens) CHECK(is_zero(convolution_integrand(a1, a2, g)));
  }
}

TEST_CASE("qisg span of a biretraction monoid") {
  HopfAlgebroid x = pair_algebroid(fun_algebra(2));
  BrtSemigroup b = enumerate_biretractions(x);
  Qisg span = qisg_span(b);
  CHECK(span.H.dim() == 7);
  CHECK(span.unital);
  Report r = check_qisg(span);
  CHECK(r.ok());

  // single-element monoid {eps} spans the field with identity maps
  BrtSemigroup tiny;
  tiny.elems.push_back(counit_biretraction(x));
  tiny.sgp = FinSemigroup({"eps"}, {{0}}, 0);
  tiny.star_of = {0};
  Qisg one = qisg_span(tiny);
  CHECK(one.H.dim() == 1);
  CHECK(check_qisg(one).ok());
}

TEST_CASE("torus biretractions") {
  SUBCASE("nonexistence certificates for q != 1") {
    for (const Rational& q : {Rational(2), Rational(-1), Rational(3, 2)}) {
      auto out = torus_biretraction(q, Rational(1), 0);
      CHECK(!out.exists);
      CHECK(!out.certificate.empty());
      CHECK(out.certificate.back().find("q = " + q.str()) != std::string::npos);
    }
  }
  SUBCASE("q = 1: power law alpha^k(V) = q_alpha^k U^{k t_alpha}") {
    auto out = torus_biretraction(Rational(1), Rational(5), 3);
    REQUIRE(out.exists);
    CHECK(out.checks.ok());
    TorusBiretraction acc = *out.brt;
    for (int k = 2; k <= 5; ++k) {
      acc = torus_brt_convolve(acc, *out.brt);
      CHECK(torus_equal(torus_brt_eval(acc, 0, 1), torus_mono(static_cast<long>(k) * 3, 0, Rational(5).pow(k))));
    }
    // (alpha*alpha)(V) = 25 U^6
    TorusBiretraction sq = torus_brt_convolve(*out.brt, *out.brt);
    CHECK(torus_equal(torus_brt_eval(sq, 0, 1), torus_mono(6, 0, Rational(25))));
  }
  SUBCASE("q = 1, q_alpha = 1, t_alpha = 0 sends V to 1") {
    auto out = torus_biretraction(Rational(1), Rational(1), 0);
    REQUIRE(out.exists);
    CHECK(torus_equal(torus_brt_eval(*out.brt, 0, 1), torus_mono(0, 0)));
  }
  SUBCASE("q_alpha = 0 is rejected") { CHECK_THROWS(torus_biretraction(Rational(1), Rational(0), 0)); }
}

TEST_CASE("laurent biretractions") {
  LaurentAlgebroid la = laurent_algebroid(fun_algebra(2));

  SUBCASE("[swap, 1, p=1] acts as the swapped evaluation at every degree") {
    Mat sw(2, 2);
    sw.setZero();
    sw(0, 1) = sw(1, 0) = Rational(1);
    Vec one = la.A.idempotent(0b11);
    Vec p(2);
    p(0) = p(1) = Rational(1);
    LaurentBrt a = laurent_brt(la, LinMap(la.A.alg.space(), la.A.alg.space(), sw), one, p);
    // alpha((chi_1 (x) chi_2) x) = swap(chi_1) chi_2 = chi_2
    Vec v = laurent_brt_eval(la, a, 1, la.core.H.space().index_of("1|2"));
    CHECK(pretty(v, la.A.alg.space()) == "1*2");
  }
  SUBCASE("[id, chi_1, p = 2 chi_1]: p' = 1/2 chi_1 and evaluation picks up 2^n") {
    Vec e = la.A.idempotent(0b01);
    Vec p(2);
    p(0) = Rational(2);
    p(1) = Rational(0);
    LaurentBrt a = laurent_brt(la, LinMap::identity(la.A.alg.space()), e, p);
    CHECK(a.pprime(0) == Rational(1, 2));
    CHECK(a.pprime(1) == Rational(0));
    Vec v = laurent_brt_eval(la, a, 1, la.core.H.space().index_of("1|1"));
    CHECK(pretty(v, la.A.alg.space()) == "2*1");
    Vec w = laurent_brt_eval(la, a, 1, la.core.H.space().index_of("2|2"));
    CHECK(is_zero(w));
    Vec u = laurent_brt_eval(la, a, -2, la.core.H.space().index_of("1|1"));
    CHECK(pretty(u, la.A.alg.space()) == "1/4*1");
  }
  SUBCASE("p must be invertible on supp(phi(e))") {
    Vec e = la.A.idempotent(0b01);
    Vec p(2);
    p.setZero();
    CHECK_THROWS(laurent_brt(la, LinMap::identity(la.A.alg.space()), e, p));
  }
  SUBCASE("convolution follows the [psi phi, phi^{-1}(f phi(e)), q psi(p)] law") {
    Mat sw(2, 2);
    sw.setZero();
    sw(0, 1) = sw(1, 0) = Rational(1);
    Vec one = la.A.idempotent(0b11);
    Vec p(2);
    p(0) = Rational(3);
    p(1) = Rational(1);
    Vec q(2);
    q(0) = Rational(1);
    q(1) = Rational(2);
    LaurentBrt a = laurent_brt(la, LinMap(la.A.alg.space(), la.A.alg.space(), sw), one, p);
    LaurentBrt b = laurent_brt(la, LinMap::identity(la.A.alg.space()), one, q);
    LaurentBrt c = laurent_brt_convolve(la, a, b);  // throws internally on mismatch
    CHECK(exact_equal(c.phi.m, sw));
    // star law: [phi,e,p]* = [phi^{-1}, phi(e), phi^{-1}(p' phi(e))]
    LaurentBrt as = laurent_brt_star(la, a);
    CHECK(exact_equal(as.phi.m, sw));  // swap is its own inverse
    CHECK(as.p(0) == Rational(1));
    CHECK(as.p(1) == Rational(1, 3));
  }
}
