#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qisg/graded.hpp"

using namespace qisg;

TEST_CASE("pair algebroid") {
  CommSplitAlgebra a = fun_algebra(2);
  HopfAlgebroid x = pair_algebroid(a);
  SUBCASE("dimensions and the balanced quotient") {
    CHECK(x.H.dim() == 4);
    CHECK(x.balancing().rank() == 8);
    auto q = quotient(tensor(x.H.space(), x.H.space()), x.balancing());
    CHECK(q.space.dim() == 8);  // H (x)_A H = A (x) A (x) A
  }
  SUBCASE("axiom suite passes") {
    Report r = check_hopf_algebroid(x);
    CHECK(r.ok());
    CHECK(r.find("antipode-anticomultiplicative")->pass);
  }
  SUBCASE("counit is multiplication: eps(a (x) b) = ab") {
    // column of (x,y) is delta_xy chi_x
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) {
        Vec e = x.counit_l.column(p * 2 + q);
        if (p == q)
          CHECK(pretty(e, x.A.alg.space()) == "1*" + x.A.points()[static_cast<std::size_t>(p)]);
        else
          CHECK(is_zero(e));
      }
  }
  SUBCASE("S^2 = id") {
    CHECK(exact_equal(Mat(x.antipode.m * x.antipode.m), Mat(Mat::Identity(4, 4))));
  }
}

TEST_CASE("repfun transitive algebroid") {
  SUBCASE("trivial group reduces to the pair algebroid") {
    HopfAlgebroid r = repfun_transitive_algebroid(2, FinGroup::trivial());
    HopfAlgebroid p = pair_algebroid(fun_algebra(2));
    CHECK(r.H.dim() == 4);
    CHECK(exact_equal(r.H.mult().m, p.H.mult().m));
    CHECK(exact_equal(r.comult_l.m, p.comult_l.m));
    CHECK(exact_equal(r.counit_l.m, p.counit_l.m));
    CHECK(exact_equal(r.antipode.m, p.antipode.m));
    CHECK(check_hopf_algebroid(r).ok());
  }
  SUBCASE("X = {1,2}, G = Z2 has dimension 8 and passes") {
    HopfAlgebroid r = repfun_transitive_algebroid(2, FinGroup::cyclic(2));
    CHECK(r.H.dim() == 8);
    CHECK(check_hopf_algebroid(r).ok());
    // eps'(a (x) f (x) b)(x) = a(x) b(x) f(1_G): only (x, 1, x) basis columns
    // survive
    for (Eigen::Index b = 0; b < 8; ++b) {
      const std::string& lbl = r.H.space().label(b);
      bool diag = lbl == "(1,0,1)" || lbl == "(2,0,2)";
      CHECK(is_zero(Vec(r.counit_l.column(b))) == !diag);
    }
  }
  SUBCASE("size bound enforced") { CHECK_THROWS(repfun_transitive_algebroid(6, FinGroup::cyclic(6))); }
}

TEST_CASE("weak-Hopf groupoid algebroid (restricted noncommutative mode)") {
  SUBCASE("pair groupoid: H = M_2 over A = Fun({1,2})") {
    HopfAlgebroid x = weakhopf_algebroid(pair_groupoid(2));
    CHECK(x.H.dim() == 4);
    CHECK(x.A.alg.dim() == 2);
    CHECK(exact_equal(x.s.m, x.t.m));
    Report r = check_hopf_algebroid(x);
    CHECK(r.ok());
  }
  SUBCASE("one-object groupoid: ordinary Hopf algebra over k") {
    HopfAlgebroid x = weakhopf_algebroid(product_groupoid(1, FinGroup::cyclic(3)));
    CHECK(x.H.dim() == 3);
    CHECK(x.A.alg.dim() == 1);
    CHECK(check_hopf_algebroid(x).ok());
  }
  SUBCASE("X x Z2 x X: dim H = 8, dim A = 2, eps_l(delta_g) = chi_{t(g)}") {
    FinGroupoid g = product_groupoid(2, FinGroup::cyclic(2));
    HopfAlgebroid x = weakhopf_algebroid(g);
    CHECK(x.H.dim() == 8);
    CHECK(x.A.alg.dim() == 2);
    Report r = check_hopf_algebroid(x);
    CHECK(r.ok());
    for (int b = 0; b < 8; ++b) {
      Vec e = x.counit_l.column(b);
      CHECK(pretty(e, x.A.alg.space()) == "1*" + g.objects[static_cast<std::size_t>(g.tgt[static_cast<std::size_t>(b)])]);
    }
    // eps_l . S = eps_r and eps_r . S = eps_l
    CHECK(exact_equal(Mat(x.counit_l.m * x.antipode.m), x.counit_r.m));
    CHECK(exact_equal(Mat(x.counit_r.m * x.antipode.m), x.counit_l.m));
  }
}

TEST_CASE("each single-map mutation is caught with a witness") {
  CommSplitAlgebra a2 = fun_algebra(2);

  SUBCASE("antipode replaced by the identity") {
    HopfAlgebroid x = pair_algebroid(a2);
    x.antipode = LinMap::identity(x.H.space());
    Report r = check_hopf_algebroid(x);
    CHECK(!r.ok());
    CHECK(!r.find("antipode-right-law")->pass);
    CHECK(!r.find("antipode-right-law")->witness.empty());
  }
  SUBCASE("counit coordinates swapped") {
    HopfAlgebroid x = pair_algebroid(a2);
    Mat swapped = x.counit_l.m;
    swapped.row(0).swap(swapped.row(1));
    x.counit_l = LinMap(x.H.space(), x.A.alg.space(), swapped);
    x.counit_r = x.counit_l;
    Report r = check_hopf_algebroid(x);
    CHECK(!r.ok());
    CHECK(!r.find("counit-l-law-1")->pass);
  }
  SUBCASE("comultiplication lift perturbed by one basis entry") {
    HopfAlgebroid x = pair_algebroid(a2);
    Mat lift = x.comult_l.m;
    // add (1,1)(x)(1,1) to the lift of (1,2); the extra term survives the
    // balancing reduction
    lift(0, 1) += Rational(1);
    x.comult_l = LinMap(x.H.space(), tensor(x.H.space(), x.H.space()), lift);
    x.comult_r = x.comult_l;
    Report r = check_hopf_algebroid(x);
    CHECK(!r.ok());
    CHECK((!r.find("counit-l-law-1")->pass || !r.find("coassociative-l")->pass));
  }
  SUBCASE("source and target swapped") {
    HopfAlgebroid x = pair_algebroid(a2);
    std::swap(x.s, x.t);
    x.refresh_balancing();
    Report r = check_hopf_algebroid(x);
    CHECK(!r.ok());
    CHECK(!r.find("counit-l-law-1")->pass);
  }
  SUBCASE("restricted mode: antipode replaced by the identity") {
    HopfAlgebroid x = weakhopf_algebroid(product_groupoid(2, FinGroup::cyclic(2)));
    x.antipode = LinMap::identity(x.H.space());
    Report r = check_hopf_algebroid(x);
    CHECK(!r.ok());
    CHECK(!r.find("antipode-left-law")->pass);
    CHECK(!r.find("antipode-left-law")->witness.empty());
  }
  SUBCASE("restricted mode: counits swapped") {
    HopfAlgebroid x = weakhopf_algebroid(product_groupoid(2, FinGroup::cyclic(2)));
    std::swap(x.counit_l, x.counit_r);
    Report r = check_hopf_algebroid(x);
    CHECK(!r.ok());
    CHECK(!r.find("counit-l-law-1")->pass);
  }
}

TEST_CASE("laurent algebroid") {
  LaurentAlgebroid la = laurent_algebroid(fun_algebra(2));
  SUBCASE("window checks pass") {
    Report r = check_laurent_algebroid(la, 3);
    CHECK(r.ok());
    CHECK(r.find("degree0-reproduces-pair-algebroid")->pass);
  }
  SUBCASE("degree-2 antipode law by direct expansion") {
    // h = (chi_1 (x) chi_2) x^2; Delta h = (chi_1 (x) 1)x^2 (x) (1 (x) chi_2)x^2;
    // h_(1) S(h_(2)) must equal t(eps(h)) = 0 since eps(chi_1 (x) chi_2) = 0.
    const FinAlgebra& h0 = la.core.H;
    int b = h0.space().index_of("1|2");
    REQUIRE(b >= 0);
    Vec acc(h0.dim());
    acc.setZero();
    for (Eigen::Index k = 0; k < h0.dim() * h0.dim(); ++k) {
      const Rational& c = la.core.comult_l.m(k, b);
      if (c.is_zero()) continue;
      // S flips the second leg to degree -2; the product lands at degree 0
      Vec p = h0.mul(h0.space().basis_vector(k / h0.dim()), Vec(la.core.antipode.column(k % h0.dim())));
      for (Eigen::Index r = 0; r < h0.dim(); ++r) acc(r) += c * p(r);
    }
    Vec expected = la.core.t.m * la.core.counit_l.column(b);
    CHECK(exact_equal(acc, expected));
    CHECK(is_zero(expected));
    // and for the diagonal element 1|1 the law gives t(chi_1)
    int b2 = h0.space().index_of("1|1");
    Vec expected2 = la.core.t.m * la.core.counit_l.column(b2);
    CHECK(pretty(expected2, h0.space()) == "1*1|1 + 1*1|2");
  }
}

TEST_CASE("quantum torus") {
  SUBCASE("axioms pass for q = 1 and q = 2 on the default window") {
    for (const Rational& q : {Rational(1), Rational(2)}) {
      QuantumTorus t{q};
      Report r = check_quantum_torus(t, 3);
      CHECK(r.ok());
    }
  }
  SUBCASE("q = 2 relation holds exactly: VU * q = UV") {
    QuantumTorus t{Rational(2)};
    TorusElem uv = torus_mul(t, torus_mono(1, 0), torus_mono(0, 1));
    TorusElem vu = torus_mul(t, torus_mono(0, 1), torus_mono(1, 0));
    for (auto& [k, c] : vu) c *= Rational(2);
    CHECK(torus_equal(uv, vu));
  }
  SUBCASE("q = 1 is commutative") {
    QuantumTorus t{Rational(1)};
    TorusElem uv = torus_mul(t, torus_mono(1, 0), torus_mono(0, 1));
    TorusElem vu = torus_mul(t, torus_mono(0, 1), torus_mono(1, 0));
    CHECK(torus_equal(uv, vu));
  }
  SUBCASE("antipode formulas S(UV) = V^-1 U and S(U^2 V^3) = V^-3 U^2") {
    QuantumTorus t{Rational(5)};
    // V^-1 U = q^{1} U V^-1
    TorusElem s_uv = torus_antipode(t, torus_mono(1, 1));
    CHECK(torus_equal(s_uv, torus_mono(1, -1, Rational(5).pow(-1 * -1))));
    TorusElem s_u2v3 = torus_antipode(t, torus_mono(2, 3));
    // V^-3 U^2 = q^{-(-3)(2)} U^2 V^-3 = q^6 U^2 V^-3
    CHECK(torus_equal(s_u2v3, torus_mono(2, -3, Rational(5).pow(3 * 2))));
    CHECK_THROWS(check_quantum_torus(QuantumTorus{Rational(0)}, 2));
  }
}
