#include "qisg/groupoid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qisg {

int FinGroupoid::arrow_index(const std::string& label) const {
  auto it = std::find(arrows.begin(), arrows.end(), label);
  return it == arrows.end() ? -1 : static_cast<int>(it - arrows.begin());
}

GroupoidCheck validate_groupoid(const FinGroupoid& g) {
  const int na = g.arrow_count(), no = g.object_count();
  auto fail = [](std::string msg) { return GroupoidCheck{false, std::move(msg)}; };
  if (static_cast<int>(g.src.size()) != na || static_cast<int>(g.tgt.size()) != na ||
      static_cast<int>(g.inv.size()) != na || static_cast<int>(g.unit.size()) != no ||
      static_cast<int>(g.comp.size()) != na)
    return fail("table sizes do not match arrow/object counts");
  for (int a = 0; a < na; ++a) {
    if (g.src[static_cast<std::size_t>(a)] < 0 || g.src[static_cast<std::size_t>(a)] >= no ||
        g.tgt[static_cast<std::size_t>(a)] < 0 || g.tgt[static_cast<std::size_t>(a)] >= no)
      return fail("arrow '" + g.arrows[static_cast<std::size_t>(a)] + "' has out-of-range endpoints");
    if (static_cast<int>(g.comp[static_cast<std::size_t>(a)].size()) != na)
      return fail("composition table is not square");
  }
  for (int x = 0; x < no; ++x) {
    int u = g.unit[static_cast<std::size_t>(x)];
    if (u < 0 || u >= na || g.src[static_cast<std::size_t>(u)] != x || g.tgt[static_cast<std::size_t>(u)] != x)
      return fail("unit arrow of object '" + g.objects[static_cast<std::size_t>(x)] + "' is not an endomorphism");
  }
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      int c = g.compose(a, b);
      bool composable = g.src[static_cast<std::size_t>(a)] == g.tgt[static_cast<std::size_t>(b)];
      if (composable != (c >= 0))
        return fail("composition defined/undefined incorrectly at (" + g.arrows[static_cast<std::size_t>(a)] + ", " +
                    g.arrows[static_cast<std::size_t>(b)] + ")");
      if (c >= 0 && (g.src[static_cast<std::size_t>(c)] != g.src[static_cast<std::size_t>(b)] ||
                     g.tgt[static_cast<std::size_t>(c)] != g.tgt[static_cast<std::size_t>(a)]))
        return fail("composite has wrong endpoints at (" + g.arrows[static_cast<std::size_t>(a)] + ", " +
                    g.arrows[static_cast<std::size_t>(b)] + ")");
    }
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      if (g.src[static_cast<std::size_t>(a)] != g.tgt[static_cast<std::size_t>(b)]) continue;
      for (int c = 0; c < na; ++c) {
        if (g.src[static_cast<std::size_t>(b)] != g.tgt[static_cast<std::size_t>(c)]) continue;
        if (g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c)))
          return fail("associativity fails at (" + g.arrows[static_cast<std::size_t>(a)] + ", " +
                      g.arrows[static_cast<std::size_t>(b)] + ", " + g.arrows[static_cast<std::size_t>(c)] + ")");
      }
    }
  for (int a = 0; a < na; ++a) {
    int ai = g.inv[static_cast<std::size_t>(a)];
    if (ai < 0 || ai >= na) return fail("inverse out of range at '" + g.arrows[static_cast<std::size_t>(a)] + "'");
    if (g.compose(a, ai) != g.unit[static_cast<std::size_t>(g.tgt[static_cast<std::size_t>(a)])] ||
        g.compose(ai, a) != g.unit[static_cast<std::size_t>(g.src[static_cast<std::size_t>(a)])])
      return fail("inverse law fails at arrow '" + g.arrows[static_cast<std::size_t>(a)] + "'");
    int ut = g.unit[static_cast<std::size_t>(g.tgt[static_cast<std::size_t>(a)])];
    int us = g.unit[static_cast<std::size_t>(g.src[static_cast<std::size_t>(a)])];
    if (g.compose(ut, a) != a || g.compose(a, us) != a)
      return fail("unit law fails at arrow '" + g.arrows[static_cast<std::size_t>(a)] + "'");
  }
  return {};
}

FinGroupoid product_groupoid(int npoints, const FinGroup& grp) {
  if (npoints < 1) throw std::invalid_argument("product groupoid needs a nonempty object set");
  FinGroupoid g;
  const int ng = grp.size();
  for (int x = 1; x <= npoints; ++x) g.objects.push_back(std::to_string(x));
  auto idx = [&](int x, int gi, int y) { return (x * ng + gi) * npoints + y; };
  for (int x = 0; x < npoints; ++x)
    for (int gi = 0; gi < ng; ++gi)
      for (int y = 0; y < npoints; ++y) {
        // pair groupoid (trivial G) keeps the two-coordinate labels
        g.arrows.push_back(ng == 1 ? "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")"
                                   : "(" + std::to_string(x + 1) + "," + grp.elems[static_cast<std::size_t>(gi)] +
                                         "," + std::to_string(y + 1) + ")");
        g.tgt.push_back(x);
        g.src.push_back(y);
        g.inv.push_back(idx(y, grp.inv[static_cast<std::size_t>(gi)], x));
      }
  g.unit.resize(static_cast<std::size_t>(npoints));
  for (int x = 0; x < npoints; ++x) g.unit[static_cast<std::size_t>(x)] = idx(x, 0, x);
  const int na = g.arrow_count();
  g.comp.assign(static_cast<std::size_t>(na), std::vector<int>(static_cast<std::size_t>(na), -1));
  for (int x = 0; x < npoints; ++x)
    for (int gi = 0; gi < ng; ++gi)
      for (int y = 0; y < npoints; ++y)
        for (int hi = 0; hi < ng; ++hi)
          for (int z = 0; z < npoints; ++z)
            g.comp[static_cast<std::size_t>(idx(x, gi, y))][static_cast<std::size_t>(idx(y, hi, z))] =
                idx(x, grp.op(gi, hi), z);
  return g;
}

FinGroupoid pair_groupoid(int npoints) { return product_groupoid(npoints, FinGroup::trivial()); }

FinGroupoid disjoint_union(const FinGroupoid& a, const FinGroupoid& b) {
  FinGroupoid g;
  const int oa = a.object_count(), na = a.arrow_count(), nb = b.arrow_count();
  for (const auto& l : a.objects) g.objects.push_back("L:" + l);
  for (const auto& l : b.objects) g.objects.push_back("R:" + l);
  for (const auto& l : a.arrows) g.arrows.push_back("L:" + l);
  for (const auto& l : b.arrows) g.arrows.push_back("R:" + l);
  for (int i = 0; i < na; ++i) {
    g.src.push_back(a.src[static_cast<std::size_t>(i)]);
    g.tgt.push_back(a.tgt[static_cast<std::size_t>(i)]);
    g.inv.push_back(a.inv[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < nb; ++i) {
    g.src.push_back(b.src[static_cast<std::size_t>(i)] + oa);
    g.tgt.push_back(b.tgt[static_cast<std::size_t>(i)] + oa);
    g.inv.push_back(b.inv[static_cast<std::size_t>(i)] + na);
  }
  for (int x = 0; x < oa; ++x) g.unit.push_back(a.unit[static_cast<std::size_t>(x)]);
  for (int x = 0; x < b.object_count(); ++x) g.unit.push_back(b.unit[static_cast<std::size_t>(x)] + na);
  g.comp.assign(static_cast<std::size_t>(na + nb), std::vector<int>(static_cast<std::size_t>(na + nb), -1));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      int c = a.compose(i, j);
      if (c >= 0) g.comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
    }
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      int c = b.compose(i, j);
      if (c >= 0) g.comp[static_cast<std::size_t>(i + na)][static_cast<std::size_t>(j + na)] = c + na;
    }
  return g;
}

FinGroup isotropy_group(const FinGroupoid& g, int object) {
  if (object < 0 || object >= g.object_count()) throw std::invalid_argument("isotropy: object out of range");
  std::vector<int> members;
  for (int a = 0; a < g.arrow_count(); ++a)
    if (g.src[static_cast<std::size_t>(a)] == object && g.tgt[static_cast<std::size_t>(a)] == object)
      members.push_back(a);
  // put the unit first
  auto it = std::find(members.begin(), members.end(), g.unit[static_cast<std::size_t>(object)]);
  std::iter_swap(members.begin(), it);
  FinGroup grp;
  std::map<int, int> pos;
  for (std::size_t i = 0; i < members.size(); ++i) {
    pos[members[i]] = static_cast<int>(i);
    grp.elems.push_back(g.arrows[static_cast<std::size_t>(members[i])]);
  }
  const int n = static_cast<int>(members.size());
  grp.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  grp.inv.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grp.inv[static_cast<std::size_t>(i)] = pos.at(g.inv[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])]);
    for (int j = 0; j < n; ++j)
      grp.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          pos.at(g.compose(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]));
  }
  return grp;
}

bool is_transitive(const FinGroupoid& g) {
  const int no = g.object_count();
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(no), std::vector<bool>(static_cast<std::size_t>(no), false));
  for (int a = 0; a < g.arrow_count(); ++a)
    reach[static_cast<std::size_t>(g.src[static_cast<std::size_t>(a)])][static_cast<std::size_t>(g.tgt[static_cast<std::size_t>(a)])] = true;
  for (int x = 0; x < no; ++x)
    for (int y = 0; y < no; ++y)
      if (!reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) return false;
  return true;
}

std::string Bisection::label(const FinGroupoid& g) const {
  std::string out = "{";
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (i) out += ",";
    out += g.objects[static_cast<std::size_t>(domain[i])] + ":" + g.arrows[static_cast<std::size_t>(arrow[i])];
  }
  return out + "}";
}

bool valid_bisection(const FinGroupoid& g, const Bisection& u) {
  if (u.domain.size() != u.arrow.size()) return false;
  if (!std::is_sorted(u.domain.begin(), u.domain.end())) return false;
  if (std::adjacent_find(u.domain.begin(), u.domain.end()) != u.domain.end()) return false;
  std::vector<bool> hit(static_cast<std::size_t>(g.object_count()), false);
  for (std::size_t i = 0; i < u.domain.size(); ++i) {
    int x = u.domain[i], a = u.arrow[i];
    if (x < 0 || x >= g.object_count() || a < 0 || a >= g.arrow_count()) return false;
    if (g.src[static_cast<std::size_t>(a)] != x) return false;  // s.u = Id_X
    int t = g.tgt[static_cast<std::size_t>(a)];
    if (hit[static_cast<std::size_t>(t)]) return false;  // t.u injective
    hit[static_cast<std::size_t>(t)] = true;
  }
  return true;
}

Bisection identity_bisection(const FinGroupoid& g, const std::vector<int>& domain) {
  Bisection u;
  u.domain = domain;
  std::sort(u.domain.begin(), u.domain.end());
  for (int x : u.domain) u.arrow.push_back(g.unit[static_cast<std::size_t>(x)]);
  return u;
}

namespace {

int lookup(const Bisection& u, int x) {
  auto it = std::lower_bound(u.domain.begin(), u.domain.end(), x);
  if (it == u.domain.end() || *it != x) return -1;
  return u.arrow[static_cast<std::size_t>(it - u.domain.begin())];
}

}  // namespace

Bisection bisection_compose(const FinGroupoid& g, const Bisection& u, const Bisection& v) {
  Bisection out;
  for (std::size_t i = 0; i < v.domain.size(); ++i) {
    int y = v.domain[i], vy = v.arrow[i];
    int tv = g.tgt[static_cast<std::size_t>(vy)];
    int utv = lookup(u, tv);
    if (utv < 0) continue;  // t.v(y) outside X
    out.domain.push_back(y);
    out.arrow.push_back(g.compose(utv, vy));
  }
  return out;
}

Bisection bisection_star(const FinGroupoid& g, const Bisection& u) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < u.domain.size(); ++i) {
    int a = u.arrow[i];
    pairs.emplace_back(g.tgt[static_cast<std::size_t>(a)], g.inv[static_cast<std::size_t>(a)]);
  }
  std::sort(pairs.begin(), pairs.end());
  Bisection out;
  for (auto& [x, a] : pairs) {
    out.domain.push_back(x);
    out.arrow.push_back(a);
  }
  return out;
}

BisectionSemigroup enumerate_bisections(const FinGroupoid& g, std::size_t max_count) {
  const int no = g.object_count();
  if (no > 30) throw std::invalid_argument("too many objects to enumerate bisections");
  std::vector<std::vector<int>> arrows_from(static_cast<std::size_t>(no));
  for (int a = 0; a < g.arrow_count(); ++a)
    arrows_from[static_cast<std::size_t>(g.src[static_cast<std::size_t>(a)])].push_back(a);

  BisectionSemigroup out;
  for (unsigned mask = 0; mask < (1u << no); ++mask) {
    std::vector<int> domain;
    for (int x = 0; x < no; ++x)
      if (mask & (1u << x)) domain.push_back(x);
    // choose an arrow per domain point, pruning on t-injectivity
    std::vector<int> picked(domain.size(), -1);
    std::vector<bool> used(static_cast<std::size_t>(no), false);
    auto dfs = [&](auto&& self, std::size_t pos) -> void {
      if (pos == domain.size()) {
        Bisection u;
        u.domain = domain;
        for (int a : picked) u.arrow.push_back(a);
        out.elems.push_back(std::move(u));
        if (out.elems.size() > max_count) throw std::invalid_argument("bisection count exceeds the enumeration bound");
        return;
      }
      for (int a : arrows_from[static_cast<std::size_t>(domain[pos])]) {
        int t = g.tgt[static_cast<std::size_t>(a)];
        if (used[static_cast<std::size_t>(t)]) continue;
        used[static_cast<std::size_t>(t)] = true;
        picked[pos] = a;
        self(self, pos + 1);
        used[static_cast<std::size_t>(t)] = false;
      }
    };
    dfs(dfs, 0);
  }

  std::map<std::string, int> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.elems.size(); ++i) {
    labels.push_back(out.elems[i].label(g));
    index[labels.back()] = static_cast<int>(i);
  }
  const int m = static_cast<int>(out.elems.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Bisection c = bisection_compose(g, out.elems[static_cast<std::size_t>(i)], out.elems[static_cast<std::size_t>(j)]);
      auto it = index.find(c.label(g));
      if (it == index.end()) throw std::logic_error("internal: bisection product fell outside the enumeration");
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it->second;
    }
  std::vector<int> all(static_cast<std::size_t>(no));
  for (int x = 0; x < no; ++x) all[static_cast<std::size_t>(x)] = x;
  int unit = index.at(identity_bisection(g, all).label(g));
  int zero = index.at(Bisection{}.label(g));
  out.sgp = FinSemigroup(std::move(labels), std::move(table), unit, zero);
  return out;
}

}  // namespace qisg
