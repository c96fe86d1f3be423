#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qisg/subspace.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <vector>

using namespace qisg;

TEST_CASE("rational parse and canonical form") {
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("4/-2").str() == "-2");
  CHECK(Rational::parse(" 7 ").str() == "7");
  CHECK(Rational::parse("1.25").str() == "5/4");
  CHECK(Rational::parse("-0.5").str() == "-1/2");
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("tensor of based spaces") {
  BasedSpace u = BasedSpace::points(2), v = BasedSpace::points(3);
  BasedSpace w = tensor(u, v);
  CHECK(w.dim() == 6);
  CHECK(w.label(0) == "1|1");
  CHECK(w.label(5) == "2|3");  // lexicographic in index pairs
  CHECK(tensor(w, u) == tensor(u, tensor(v, u)));  // flat labels associate

  BasedSpace a = BasedSpace::points(2);
  BasedSpace h = tensor(a, a);
  CHECK(h.dim() == 4);
  CHECK(tensor(h, h).dim() == 16);

  CHECK_THROWS(BasedSpace({"x", "x"}));
}

TEST_CASE("tensor_map of identities is the identity") {
  BasedSpace u = BasedSpace::points(2), v = BasedSpace::points(3);
  LinMap idu = LinMap::identity(u), idv = LinMap::identity(v);
  CHECK(equal(tensor_map(idu, idv), LinMap::identity(tensor(u, v))));
}

TEST_CASE("compose with identity and shape errors") {
  std::mt19937_64 rng(7);
  BasedSpace u = BasedSpace::points(3), v = BasedSpace::points(2);
  LinMap f(u, v, testutil::random_matrix(rng, 2, 3));
  CHECK(equal(compose(f, LinMap::identity(u)), f));
  CHECK(equal(compose(LinMap::identity(v), f), f));
  CHECK_THROWS(compose(f, f));
  CHECK_THROWS(equal(f, LinMap::identity(u)));
  CHECK_THROWS(LinMap(u, v, testutil::random_matrix(rng, 3, 3)));
}

TEST_CASE("equal is an equivalence on random maps") {
  std::mt19937_64 rng(11);
  BasedSpace u = BasedSpace::points(3);
  for (int trial = 0; trial < 20; ++trial) {
    LinMap f(u, u, testutil::random_matrix(rng, 3, 3));
    LinMap g(u, u, testutil::random_matrix(rng, 3, 3));
    LinMap f2 = f;
    CHECK(equal(f, f));
    CHECK(equal(f, f2));
    CHECK(equal(f2, f));
    if (equal(f, g) && equal(g, f2)) CHECK(equal(f, f2));
  }
}

TEST_CASE("composition of S_3 permutation matrices matches permutation composition") {
  // brute-force oracle over all 3! permutations
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  REQUIRE(perms.size() == 6);
  BasedSpace u = BasedSpace::points(3);
  auto pmat = [&](const std::vector<int>& q) {
    Mat m(3, 3);
    m.setZero();
    for (int i = 0; i < 3; ++i) m(q[static_cast<std::size_t>(i)], i) = Rational(1);
    return LinMap(u, u, m);
  };
  for (const auto& a : perms)
    for (const auto& b : perms) {
      std::vector<int> ab(3);
      for (int i = 0; i < 3; ++i) ab[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])];
      CHECK(equal(compose(pmat(a), pmat(b)), pmat(ab)));
    }
}

TEST_CASE("exact associativity of composition on random rational matrices") {
  std::mt19937_64 rng(23);
  BasedSpace a = BasedSpace::points(3), b = BasedSpace::points(4), c = BasedSpace::points(2), d = BasedSpace::points(3);
  for (int trial = 0; trial < 10; ++trial) {
    LinMap f(b, a, testutil::random_matrix(rng, 3, 4));
    LinMap g(c, b, testutil::random_matrix(rng, 4, 2));
    LinMap h(d, c, testutil::random_matrix(rng, 2, 3));
    CHECK(equal(compose(compose(f, g), h), compose(f, compose(g, h))));
  }
}

TEST_CASE("tensor_map is functorial") {
  std::mt19937_64 rng(31);
  BasedSpace a = BasedSpace::points(2), b = BasedSpace::points(3);
  for (int trial = 0; trial < 10; ++trial) {
    LinMap f(a, a, testutil::random_matrix(rng, 2, 2));
    LinMap fp(a, a, testutil::random_matrix(rng, 2, 2));
    LinMap g(b, b, testutil::random_matrix(rng, 3, 3));
    LinMap gp(b, b, testutil::random_matrix(rng, 3, 3));
    CHECK(equal(compose(tensor_map(f, g), tensor_map(fp, gp)), tensor_map(compose(f, fp), compose(g, gp))));
  }
}

TEST_CASE("quotient by the zero subspace is the identity") {
  BasedSpace u = BasedSpace::points(4);
  Subspace zero(u);
  auto q = quotient(u, zero);
  CHECK(q.space.dim() == 4);
  CHECK(equal(q.projection, LinMap::identity(u)));
}

TEST_CASE("quotient by the full space has dimension zero") {
  BasedSpace u = BasedSpace::points(3);
  std::vector<Vec> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(u.basis_vector(i));
  Subspace full(u, gens);
  auto q = quotient(u, full);
  CHECK(q.space.dim() == 0);
}

TEST_CASE("balanced-tensor quotient of A(x)A over two points has dimension 8") {
  // Oracle: generators h*s(a) (x) k - h (x) k*t(a) for H = A(x)A, |X| = 2,
  // where s(a) = 1(x)a, t(a) = a(x)1 and H is Fun(X x X). The quotient must
  // realize A(x)A(x)A, of dimension 8.
  const int d = 2;
  BasedSpace a = BasedSpace::points(d);
  BasedSpace h = tensor(a, a);
  BasedSpace hh = tensor(h, h);
  auto hidx = [&](int x, int y) { return x * d + y; };
  std::vector<Vec> gens;
  for (int p = 0; p < d; ++p)  // base element chi_p
    for (int hx = 0; hx < d; ++hx)
      for (int hy = 0; hy < d; ++hy)
        for (int kx = 0; kx < d; ++kx)
          for (int ky = 0; ky < d; ++ky) {
            Vec g(hh.dim());
            g.setZero();
            // (hx,hy)*s(chi_p) = [hy==p](hx,hy); (kx,ky)*t(chi_p) = [kx==p](kx,ky)
            if (hy == p) g(hidx(hx, hy) * h.dim() + hidx(kx, ky)) += Rational(1);
            if (kx == p) g(hidx(hx, hy) * h.dim() + hidx(kx, ky)) -= Rational(1);
            gens.push_back(g);
          }
  Subspace sub(hh, gens);
  CHECK(sub.rank() == 8);
  auto q = quotient(hh, sub);
  CHECK(q.space.dim() == 8);
  CHECK(q.projection.m.rows() == 8);
  // projection kills every generator
  for (const auto& g : gens) CHECK(is_zero(q.projection.apply(g)));
}

TEST_CASE("rank(projection) + rank(sub) = ambient dim on random subspaces") {
  std::mt19937_64 rng(47);
  BasedSpace u = BasedSpace::points(6);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vec> gens;
    int ngens = static_cast<int>(rng() % 7);
    for (int i = 0; i < ngens; ++i) gens.push_back(testutil::random_vector(rng, 6));
    Subspace sub(u, gens);
    auto q = quotient(u, sub);
    // projection rows are linearly independent by construction; verify rank
    Subspace rowspan(u);
    for (Eigen::Index r = 0; r < q.projection.m.rows(); ++r) {
      Vec row = q.projection.m.row(r).transpose();
      rowspan.insert(row);
    }
    CHECK(rowspan.rank() == q.space.dim());
    CHECK(q.space.dim() + sub.rank() == u.dim());
    // projection . inclusion-of-sub = 0
    for (const auto& g : gens) CHECK(is_zero(q.projection.apply(g)));
  }
}

TEST_CASE("subspace membership and wrong-length generators") {
  BasedSpace u = BasedSpace::points(3);
  std::vector<Vec> gens{u.basis_vector(0) + u.basis_vector(1)};
  Subspace sub(u, gens);
  CHECK(sub.contains(gens[0]));
  Vec scaled = gens[0];
  for (Eigen::Index i = 0; i < scaled.size(); ++i) scaled(i) *= Rational(7, 3);
  CHECK(sub.contains(scaled));
  CHECK(!sub.contains(u.basis_vector(0)));
  Vec bad(2);
  bad.setZero();
  CHECK_THROWS(sub.reduce(bad));
  CHECK_THROWS(Subspace(u, {bad}));
}
