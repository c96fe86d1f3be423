#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qisg/algebra.hpp"
#include "test_util.hpp"

using namespace qisg;

namespace {

// Grouplike coalgebra on the given space with counit 1 on every basis element.
FinCoalgebra grouplike(const BasedSpace& s) {
  const Eigen::Index d = s.dim();
  Mat cm(d * d, d);
  cm.setZero();
  for (Eigen::Index b = 0; b < d; ++b) cm(b * d + b, b) = Rational(1);
  Mat eps(1, d);
  for (Eigen::Index b = 0; b < d; ++b) eps(0, b) = Rational(1);
  return FinCoalgebra(s, LinMap(s, tensor(s, s), std::move(cm)),
                      LinMap(s, BasedSpace({"1"}), std::move(eps)));
}

FinAlgebra matrix_algebra(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) labels.push_back("E" + std::to_string(i) + std::to_string(j));
  BasedSpace s{labels};
  const Eigen::Index d = s.dim();
  Mat m(d, d * d);
  m.setZero();
  auto idx = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k) m(idx(i, l), static_cast<Eigen::Index>(idx(i, j)) * d + idx(k, l)) = Rational(1);
  Vec unit(d);
  unit.setZero();
  for (int i = 0; i < n; ++i) unit(idx(i, i)) = Rational(1);
  return FinAlgebra(s, LinMap(tensor(s, s), s, std::move(m)), unit);
}

}  // namespace

TEST_CASE("fun algebra basics and idempotents") {
  CHECK(fun_algebra(1).alg.dim() == 1);
  CommSplitAlgebra a2 = fun_algebra(2);
  // oracle: solve e^2 = e coordinatewise -> coordinates in {0,1}
  auto idems = enumerate_idempotents(a2);
  CHECK(idems.size() == 4);
  for (const auto& e : idems) CHECK(exact_equal(a2.alg.mul(e, e), e));
  CHECK(enumerate_idempotents(fun_algebra(3)).size() == 8);
  CHECK(as_split(a2.alg).has_value());
  CHECK(!as_split(matrix_algebra(2)).has_value());
}

TEST_CASE("semigroup algebras") {
  SUBCASE("Z2 group algebra is 2-dimensional and unital") {
    FinAlgebra a = semigroup_algebra(FinSemigroup::from_group(FinGroup::cyclic(2)));
    CHECK(a.dim() == 2);
    CHECK(a.unit().has_value());
  }
  SUBCASE("symmetric inverse monoid of degree 2 gives a 7-dimensional unital algebra") {
    FinAlgebra a = semigroup_algebra(symmetric_inverse_monoid(2));
    CHECK(a.dim() == 7);
    CHECK(a.unit().has_value());
  }
  SUBCASE("left-zero semigroup algebra has no two-sided unit") {
    FinAlgebra a = semigroup_algebra(FinSemigroup({"x", "y"}, {{0, 0}, {1, 1}}));
    CHECK(!a.unit().has_value());
    // oracle: solve the unit equations u*e_b = e_b over the 2-dim algebra:
    // u = c_x x + c_y y gives u*x = (c_x + c_y) x, x*u = x; forcing
    // c_x + c_y = 1 works on the left only; right law y*u = y holds, but
    // u*y = (c_x + c_y) y... both hold iff c_x + c_y = 1; the LEFT law
    // x*u = x always holds. Check instead that no u satisfies u*x = x and
    // u*y = y and x*u = x and y*u = y simultaneously with a right unit:
    // x*u = c_x x + c_y x = ... exhaustive small search over a grid.
    bool found = false;
    for (int cx = -2; cx <= 2 && !found; ++cx)
      for (int cy = -2; cy <= 2 && !found; ++cy) {
        Vec u(2);
        u << Rational(cx), Rational(cy);
        bool ok = true;
        for (int b = 0; b < 2; ++b) {
          Vec e = a.space().basis_vector(b);
          if (!exact_equal(a.mul(u, e), e) || !exact_equal(a.mul(e, u), e)) ok = false;
        }
        found = ok;
      }
    CHECK(!found);
  }
}

TEST_CASE("groupoid algebras") {
  SUBCASE("pair groupoid algebra is the matrix algebra") {
    FinAlgebra a = groupoid_algebra(pair_groupoid(2));
    FinAlgebra m2 = matrix_algebra(2);
    CHECK(a.dim() == 4);
    // explicit isomorphism delta_(i,j) -> E_ij is label-chasing: arrow (i,j)
    // has tgt i, src j and (i,j)(j,k) = (i,k), matching E_ij E_jk = E_ik.
    auto ai = [&](int i, int j) { return a.space().index_of("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"); };
    auto mi = [&](int i, int j) { return m2.space().index_of("E" + std::to_string(i + 1) + std::to_string(j + 1)); };
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) {
            const auto& pa = a.basis_product(ai(i, j), ai(k, l));
            const auto& pm = m2.basis_product(mi(i, j), mi(k, l));
            CHECK(pa.empty() == pm.empty());
            if (!pa.empty()) CHECK(a.space().label(pa[0].first) == "(" + std::to_string(i + 1) + "," + std::to_string(l + 1) + ")");
          }
    // same for n = 3
    CHECK(groupoid_algebra(pair_groupoid(3)).dim() == 9);
  }
  SUBCASE("one-object groupoid gives the group algebra") {
    FinAlgebra a = groupoid_algebra(product_groupoid(1, FinGroup::cyclic(3)));
    CHECK(a.dim() == 3);
    CHECK(a.unit().has_value());
  }
  SUBCASE("product groupoid X x Z2 x X gives an 8-dimensional unital algebra") {
    FinAlgebra a = groupoid_algebra(product_groupoid(2, FinGroup::cyclic(2)));
    CHECK(a.dim() == 8);
    CHECK(a.unit().has_value());
  }
}

TEST_CASE("convolution of maps") {
  FinAlgebra kz2 = semigroup_algebra(FinSemigroup::from_group(FinGroup::cyclic(2)));
  FinCoalgebra c = grouplike(kz2.space());

  LinMap id = LinMap::identity(kz2.space());
  Mat sm(2, 2);
  sm.setZero();
  sm(0, 0) = Rational(1);
  sm(1, 1) = Rational(1);  // on Z2 the group inverse is the identity permutation
  LinMap s(kz2.space(), kz2.space(), sm);

  SUBCASE("f * (unit . counit) = f") {
    std::mt19937_64 rng(3);
    Mat u_eps = *kz2.unit() * c.counit()->m;  // rank-1: unit . counit
    LinMap ue(kz2.space(), kz2.space(), u_eps);
    for (int trial = 0; trial < 5; ++trial) {
      LinMap f(kz2.space(), kz2.space(), testutil::random_matrix(rng, 2, 2));
      CHECK(equal(convolve_maps(f, ue, c, kz2), f));
      CHECK(equal(convolve_maps(ue, f, c, kz2), f));
    }
  }
  SUBCASE("on kZ2 the antipode convolves with the identity to unit.counit") {
    LinMap conv = convolve_maps(id, s, c, kz2);
    Mat expected = *kz2.unit() * c.counit()->m;
    CHECK(exact_equal(conv.m, expected));
  }
  SUBCASE("on the left-zero semigroup algebra I * S * I = I with S = id") {
    FinAlgebra kl2 = semigroup_algebra(FinSemigroup({"x", "y"}, {{0, 0}, {1, 1}}));
    FinCoalgebra cl = grouplike(kl2.space());
    LinMap idl = LinMap::identity(kl2.space());
    LinMap isi = convolve_maps(convolve_maps(idl, idl, cl, kl2), idl, cl, kl2);
    CHECK(equal(isi, idl));
  }
  SUBCASE("convolution is associative on random triples") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
      LinMap f(kz2.space(), kz2.space(), testutil::random_matrix(rng, 2, 2));
      LinMap g(kz2.space(), kz2.space(), testutil::random_matrix(rng, 2, 2));
      LinMap h(kz2.space(), kz2.space(), testutil::random_matrix(rng, 2, 2));
      CHECK(equal(convolve_maps(convolve_maps(f, g, c, kz2), h, c, kz2),
                  convolve_maps(f, convolve_maps(g, h, c, kz2), c, kz2)));
    }
  }
}

TEST_CASE("character enumeration") {
  SUBCASE("characters of kZ2: trivial, sign, zero") {
    FinAlgebra a = semigroup_algebra(FinSemigroup::from_group(FinGroup::cyclic(2)));
    auto rep = enumerate_characters(a);
    CHECK(rep.characters.size() == 3);
    CHECK(rep.complete_over_Q);
    int nonzero = 0;
    for (const auto& chi : rep.characters)
      if (!is_zero(chi)) {
        ++nonzero;
        CHECK(chi(0).is_one());
        CHECK((chi(1) == Rational(1) || chi(1) == Rational(-1)));
      }
    CHECK(nonzero == 2);
  }
  SUBCASE("characters of Fun({1,2}): two evaluations plus zero") {
    auto rep = enumerate_characters(fun_algebra(2).alg);
    CHECK(rep.characters.size() == 3);
    CHECK(rep.complete_over_Q);
  }
  SUBCASE("the 2x2 matrix algebra has only the zero character") {
    auto rep = enumerate_characters(matrix_algebra(2));
    CHECK(rep.characters.size() == 1);
    CHECK(is_zero(rep.characters[0]));
  }
  SUBCASE("Z3 characters are flagged incomplete over Q") {
    auto rep = enumerate_characters(semigroup_algebra(FinSemigroup::from_group(FinGroup::cyclic(3))));
    CHECK(rep.characters.size() == 2);  // trivial and zero; two irrational ones invisible
    CHECK(!rep.complete_over_Q);
  }
  SUBCASE("non-delta bases need explicit candidates") {
    // 2-dim algebra spanned by 1 and x with x^2 = 2*1 is closed but with
    // coefficient 2: requires explicit candidates.
    BasedSpace s({"1", "x"});
    Mat m(2, 4);
    m.setZero();
    m(0, 0) = Rational(1);            // 1*1
    m(1, 1) = Rational(1);            // 1*x
    m(1, 2) = Rational(1);            // x*1
    m(0, 3) = Rational(2);            // x*x = 2
    Vec unit(2);
    unit.setZero();
    unit(0) = Rational(1);
    FinAlgebra a(s, LinMap(tensor(s, s), s, std::move(m)), unit);
    CHECK_THROWS(enumerate_characters(a));
    std::vector<std::vector<Rational>> cand{{Rational(0), Rational(1)},
                                            {Rational(0), Rational(1), Rational(-1), Rational(2)}};
    auto rep = enumerate_characters(a, cand);
    CHECK(rep.characters.size() == 1);  // only the zero map: 2 has no rational sqrt in the grid
  }
}
