#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qisg/semigroup.hpp"

#include <set>

using namespace qisg;

namespace {

// Independent oracle: count partial injections of an n-set by brute force
// over all (domain, assignment) pairs, sum of C(n,k)^2 k!.
long rook_count(int n) {
  long binom[5][5] = {};
  for (int i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  long factorial[5] = {1, 1, 2, 6, 24};
  long total = 0;
  for (int k = 0; k <= n; ++k) total += binom[n][k] * binom[n][k] * factorial[k];
  return total;
}

FinSemigroup left_zero_two() {
  // xy = x
  return FinSemigroup({"x", "y"}, {{0, 0}, {1, 1}});
}

FinSemigroup meet_semilattice() {
  // {e, f, ef} under intersection
  return FinSemigroup({"e", "f", "ef"}, {{0, 2, 2}, {2, 1, 2}, {2, 2, 2}});
}

}  // namespace

TEST_CASE("construction rejects broken tables") {
  CHECK_THROWS(FinSemigroup({"a", "b"}, {{0, 1}, {0, 0}}));       // not associative
  CHECK_THROWS(FinSemigroup({"a"}, {{2}}));                       // out of range
  CHECK_THROWS(FinSemigroup({"x", "y"}, {{0, 0}, {1, 1}}, 0));    // x is not a two-sided unit
}

TEST_CASE("symmetric inverse monoid sizes match the enumeration oracle") {
  CHECK(rook_count(1) == 2);
  CHECK(rook_count(2) == 7);
  CHECK(rook_count(3) == 34);
  for (int n = 1; n <= 3; ++n) {
    FinSemigroup s = symmetric_inverse_monoid(n);
    CHECK(s.size() == rook_count(n));
    CHECK(s.unit.has_value());
    CHECK(s.zero.has_value());
    auto labels = std::set<std::string>(s.elems.begin(), s.elems.end());
    CHECK(labels.size() == s.elems.size());
  }
}

TEST_CASE("is_inverse classifies the spec corpus") {
  SUBCASE("symmetric inverse monoids are inverse") {
    auto rep = is_inverse(symmetric_inverse_monoid(2));
    CHECK(rep.kind == InverseClass::inverse);
    // star is the inverse partial bijection
    auto elems = symmetric_inverse_monoid_elements(2);
    FinSemigroup s = symmetric_inverse_monoid(2);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      int j = s.index_of(elems[i].inverse().label());
      CHECK(rep.star[i] == j);
    }
  }
  SUBCASE("left-zero semigroup is regular but not inverse") {
    auto rep = is_inverse(left_zero_two());
    CHECK(rep.kind == InverseClass::regular_only);
    CHECK(rep.witness.first >= 0);
    CHECK(rep.witness.second >= 0);
  }
  SUBCASE("groups are inverse with star = group inverse") {
    FinGroup g = FinGroup::cyclic(4);
    auto rep = is_inverse(FinSemigroup::from_group(g));
    CHECK(rep.kind == InverseClass::inverse);
    for (int i = 0; i < 4; ++i) CHECK(rep.star[static_cast<std::size_t>(i)] == g.inv[static_cast<std::size_t>(i)]);
  }
  SUBCASE("a non-regular example") {
    // {a, 0} with a*a = 0: a has no pseudo-inverse
    FinSemigroup s({"a", "0"}, {{1, 1}, {1, 1}});
    auto rep = is_inverse(s);
    CHECK(rep.kind == InverseClass::not_regular);
  }
}

TEST_CASE("inverse semigroup identities hold elementwise") {
  for (const auto& s : {symmetric_inverse_monoid(3), exel_semigroup(FinGroup::cyclic(3))}) {
    auto rep = is_inverse(s);
    REQUIRE(rep.kind == InverseClass::inverse);
    const auto& st = rep.star;
    for (int a = 0; a < s.size(); ++a) {
      CHECK(s.op(s.op(a, st[static_cast<std::size_t>(a)]), a) == a);
      CHECK(s.op(s.op(st[static_cast<std::size_t>(a)], a), st[static_cast<std::size_t>(a)]) == st[static_cast<std::size_t>(a)]);
      CHECK(st[static_cast<std::size_t>(st[static_cast<std::size_t>(a)])] == a);
      for (int b = 0; b < s.size(); ++b)
        CHECK(st[static_cast<std::size_t>(s.op(a, b))] == s.op(st[static_cast<std::size_t>(b)], st[static_cast<std::size_t>(a)]));
    }
  }
}

TEST_CASE("wagner-preston embeddings") {
  SUBCASE("group case is the left-regular representation") {
    FinGroup g = FinGroup::cyclic(3);
    auto theta = wagner_preston(FinSemigroup::from_group(g));
    for (int a = 0; a < 3; ++a) {
      CHECK(theta[static_cast<std::size_t>(a)].domain_size() == 3);
      for (int x = 0; x < 3; ++x) CHECK(theta[static_cast<std::size_t>(a)].map[static_cast<std::size_t>(x)] == g.op(a, x));
    }
  }
  SUBCASE("symmetric inverse monoid of degree 2 embeds into partial bijections of 7 points") {
    FinSemigroup s = symmetric_inverse_monoid(2);
    auto theta = wagner_preston(s);  // hom + injectivity verified internally
    CHECK(theta.size() == 7);
    CHECK(theta[0].n == 7);
  }
  SUBCASE("meet semilattice maps to partial identities") {
    auto theta = wagner_preston(meet_semilattice());
    for (const auto& t : theta)
      for (int x = 0; x < t.n; ++x)
        if (t.defined(x)) CHECK(t.map[static_cast<std::size_t>(x)] == x);
  }
  SUBCASE("requires an inverse semigroup") { CHECK_THROWS(wagner_preston(left_zero_two())); }
}

TEST_CASE("exel semigroup sizes and structure") {
  // Oracle: enumerate pairs (A, g) with {1, g} <= A <= G directly.
  auto count_pairs = [](const FinGroup& g) {
    int n = g.size(), total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
      for (int gi = 0; gi < n; ++gi)
        if ((mask & 1u) && (mask & (1u << gi))) ++total;
    return total;
  };
  FinGroup z2 = FinGroup::cyclic(2), z3 = FinGroup::cyclic(3), z1 = FinGroup::trivial();
  CHECK(count_pairs(z2) == 3);
  CHECK(count_pairs(z3) == 8);
  CHECK(count_pairs(FinGroup::klein_four()) == 20);
  CHECK(exel_semigroup(z2).size() == 3);
  CHECK(exel_semigroup(z3).size() == 8);
  CHECK(exel_semigroup(z1).size() == 1);
  CHECK(exel_semigroup(FinGroup::klein_four()).size() == 20);

  for (const auto* g : {&z2, &z3}) {
    FinSemigroup s = exel_semigroup(*g);
    auto rep = is_inverse(s);
    CHECK(rep.kind == InverseClass::inverse);
    REQUIRE(s.unit.has_value());
    CHECK(s.elems[static_cast<std::size_t>(*s.unit)] == "({0},0)");
    // pseudo-inverse is (g^-1 A, g^-1)
    for (int i = 0; i < s.size(); ++i) {
      int j = rep.star[static_cast<std::size_t>(i)];
      CHECK(s.op(s.op(i, j), i) == i);
    }
  }
}

TEST_CASE("isomorphism search finds the partial-bijection model of exel(Z2)") {
  // S(Z2) is the 3-element inverse monoid {1, t, e} with t^2 = e... check
  // against an explicit table instead: elements ({0},0), ({0,1},1), ({0,1},0).
  FinSemigroup s = exel_semigroup(FinGroup::cyclic(2));
  FinSemigroup t({"u", "s", "e"}, {{0, 1, 2}, {1, 2, 1}, {2, 1, 2}}, 0);
  CHECK(find_isomorphism(s, t).has_value());
  CHECK(find_isomorphism(s, symmetric_inverse_monoid(2)) == std::nullopt);
  CHECK(find_isomorphism(symmetric_inverse_monoid(2), symmetric_inverse_monoid(2)).has_value());
}
