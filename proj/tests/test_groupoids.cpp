#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qisg/groupoid.hpp"

using namespace qisg;

namespace {

// Oracle: bisection count of X x G x X is sum_k C(n,k) * n!/(n-k)! * |G|^k.
long bisection_count(int n, long gsize) {
  long binom[5][5] = {};
  for (int i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  long total = 0;
  for (int k = 0; k <= n; ++k) {
    long falling = 1;
    for (int i = 0; i < k; ++i) falling *= (n - i);
    long gpow = 1;
    for (int i = 0; i < k; ++i) gpow *= gsize;
    total += binom[n][k] * falling * gpow;
  }
  return total;
}

}  // namespace

TEST_CASE("groupoid validation") {
  SUBCASE("pair groupoid on 3 points is valid with 9 arrows") {
    FinGroupoid g = pair_groupoid(3);
    CHECK(g.arrow_count() == 9);
    CHECK(validate_groupoid(g).ok);
  }
  SUBCASE("product groupoid |X|=2, G=Z2 is valid with 8 arrows and Z2 isotropy") {
    FinGroupoid g = product_groupoid(2, FinGroup::cyclic(2));
    CHECK(g.arrow_count() == 8);
    CHECK(validate_groupoid(g).ok);
    CHECK(is_transitive(g));
    for (int x = 0; x < 2; ++x) CHECK(isotropy_group(g, x).size() == 2);
  }
  SUBCASE("broken inverse is reported with the arrow name") {
    FinGroupoid g = pair_groupoid(2);
    g.inv[1] = 1;  // (1,2) declared self-inverse
    auto check = validate_groupoid(g);
    CHECK(!check.ok);
    CHECK(check.message.find(g.arrows[1]) != std::string::npos);
  }
  SUBCASE("one-object product groupoid is the group") {
    FinGroupoid g = product_groupoid(1, FinGroup::cyclic(3));
    CHECK(g.arrow_count() == 3);
    CHECK(validate_groupoid(g).ok);
    CHECK(isotropy_group(g, 0).size() == 3);
  }
  SUBCASE("disjoint union of pair groupoids is valid but not transitive") {
    FinGroupoid g = disjoint_union(pair_groupoid(2), pair_groupoid(2));
    CHECK(validate_groupoid(g).ok);
    CHECK(!is_transitive(g));
    CHECK(is_transitive(pair_groupoid(3)));
  }
}

TEST_CASE("bisection composition on the pair groupoid over {1,2}") {
  FinGroupoid g = pair_groupoid(2);
  int a21 = g.arrow_index("(2,1)");  // src 1, tgt 2
  int a12 = g.arrow_index("(1,2)");  // src 2, tgt 1
  REQUIRE(a21 >= 0);
  REQUIRE(a12 >= 0);

  SUBCASE("swap . swap = identity bisection") {
    Bisection swap{{0, 1}, {a21, a12}};
    REQUIRE(valid_bisection(g, swap));
    Bisection sq = bisection_compose(g, swap, swap);
    CHECK(sq == identity_bisection(g, {0, 1}));
    CHECK(bisection_star(g, swap) == swap);
  }
  SUBCASE("partial swap composed with itself is empty") {
    Bisection u{{0}, {a21}};
    REQUIRE(valid_bisection(g, u));
    Bisection sq = bisection_compose(g, u, u);
    CHECK(sq.domain.empty());
    Bisection st = bisection_star(g, u);
    CHECK(st.domain == std::vector<int>{1});
    CHECK(st.arrow == std::vector<int>{a12});
    CHECK(valid_bisection(g, st));
  }
  SUBCASE("identity bisections compose by intersecting domains") {
    Bisection ix = identity_bisection(g, {0});
    Bisection iy = identity_bisection(g, {1});
    Bisection ixy = identity_bisection(g, {0, 1});
    CHECK(bisection_compose(g, ix, iy).domain.empty());
    CHECK(bisection_compose(g, ix, ixy) == ix);
    CHECK(bisection_compose(g, ixy, iy) == iy);
  }
  SUBCASE("identity bisection is its own star") {
    Bisection ixy = identity_bisection(g, {0, 1});
    CHECK(bisection_star(g, ixy) == ixy);
  }
}

TEST_CASE("bisection star identities u u* u = u") {
  FinGroupoid g = product_groupoid(2, FinGroup::cyclic(2));
  auto bs = enumerate_bisections(g);
  for (const auto& u : bs.elems) {
    Bisection st = bisection_star(g, u);
    CHECK(valid_bisection(g, st));
    CHECK(bisection_compose(g, bisection_compose(g, u, st), u) == u);
    CHECK(bisection_compose(g, bisection_compose(g, st, u), st) == st);
  }
}

TEST_CASE("bisection semigroup counts match the closed-form oracle") {
  CHECK(bisection_count(2, 1) == 7);
  CHECK(bisection_count(3, 1) == 34);
  CHECK(bisection_count(2, 2) == 17);
  CHECK(enumerate_bisections(pair_groupoid(2)).elems.size() == 7);
  CHECK(enumerate_bisections(pair_groupoid(3)).elems.size() == 34);
  CHECK(enumerate_bisections(product_groupoid(2, FinGroup::cyclic(2))).elems.size() == 17);
}

TEST_CASE("bisections of a pair groupoid form the symmetric inverse monoid via t.u") {
  for (int n : {2, 3}) {
    FinGroupoid g = pair_groupoid(n);
    auto bs = enumerate_bisections(g);
    auto rep = is_inverse(bs.sgp);
    CHECK(rep.kind == InverseClass::inverse);

    // u -> t.u is a bijective homomorphism onto I(X)
    FinSemigroup ix = symmetric_inverse_monoid(n);
    auto tmap = [&](const Bisection& u) {
      PartialBijection pb(n);
      for (std::size_t i = 0; i < u.domain.size(); ++i)
        pb.map[static_cast<std::size_t>(u.domain[i])] = g.tgt[static_cast<std::size_t>(u.arrow[i])];
      return pb;
    };
    std::vector<int> image;
    for (const auto& u : bs.elems) image.push_back(ix.index_of(tmap(u).label()));
    for (int v : image) CHECK(v >= 0);
    // injective
    std::sort(image.begin(), image.end());
    CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
    CHECK(image.size() == static_cast<std::size_t>(ix.size()));
    // homomorphism: t.(uv) = (t.u) . (t.v)
    for (std::size_t i = 0; i < bs.elems.size(); ++i)
      for (std::size_t j = 0; j < bs.elems.size(); ++j) {
        auto prod = compose(tmap(bs.elems[i]), tmap(bs.elems[j]));
        int k = bs.sgp.op(static_cast<int>(i), static_cast<int>(j));
        CHECK(prod == tmap(bs.elems[static_cast<std::size_t>(k)]));
      }
  }
}

TEST_CASE("bisection product is associative and idempotents are the identity bisections") {
  FinGroupoid g = product_groupoid(2, FinGroup::cyclic(2));
  auto bs = enumerate_bisections(g);
  const int m = bs.sgp.size();
  // associativity holds by FinSemigroup construction; check idempotents
  int idem = 0;
  for (int i = 0; i < m; ++i)
    if (bs.sgp.is_idempotent(i)) {
      ++idem;
      const Bisection& u = bs.elems[static_cast<std::size_t>(i)];
      CHECK(u == identity_bisection(g, u.domain));
    }
  CHECK(idem == 4);  // one per subset of the 2 objects
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (bs.sgp.is_idempotent(i) && bs.sgp.is_idempotent(j)) CHECK(bs.sgp.op(i, j) == bs.sgp.op(j, i));
}

TEST_CASE("global bisections form a group") {
  FinGroupoid g = product_groupoid(2, FinGroup::cyclic(2));
  auto bs = enumerate_bisections(g);
  std::vector<int> global;
  for (std::size_t i = 0; i < bs.elems.size(); ++i)
    if (static_cast<int>(bs.elems[i].domain.size()) == g.object_count()) global.push_back(static_cast<int>(i));
  CHECK(global.size() == 8);  // 2 bijections x 2^2 group choices
  REQUIRE(bs.sgp.unit.has_value());
  for (int i : global) {
    bool has_inverse = false;
    for (int j : global) {
      if (bs.sgp.op(i, j) == *bs.sgp.unit && bs.sgp.op(j, i) == *bs.sgp.unit) has_inverse = true;
      CHECK(std::find(global.begin(), global.end(), bs.sgp.op(i, j)) != global.end());
    }
    CHECK(has_inverse);
  }
}
