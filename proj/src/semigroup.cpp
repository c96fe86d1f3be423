#include "qisg/semigroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qisg {

FinSemigroup::FinSemigroup(std::vector<std::string> elems_, std::vector<std::vector<int>> table_,
                           std::optional<int> unit_, std::optional<int> zero_)
    : elems(std::move(elems_)), table(std::move(table_)), unit(unit_), zero(zero_) {
  const int n = size();
  if (static_cast<int>(table.size()) != n) throw std::invalid_argument("semigroup table is not square");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("semigroup table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("semigroup table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          throw std::invalid_argument("associativity fails at (" + elems[static_cast<std::size_t>(a)] + ", " +
                                      elems[static_cast<std::size_t>(b)] + ", " + elems[static_cast<std::size_t>(c)] + ")");
  if (unit) {
    for (int a = 0; a < n; ++a)
      if (op(*unit, a) != a || op(a, *unit) != a)
        throw std::invalid_argument("declared unit is not two-sided");
  }
  if (zero) {
    for (int a = 0; a < n; ++a)
      if (op(*zero, a) != *zero || op(a, *zero) != *zero)
        throw std::invalid_argument("declared zero is not absorbing");
  }
}

std::vector<int> FinSemigroup::idempotents() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a)
    if (is_idempotent(a)) out.push_back(a);
  return out;
}

int FinSemigroup::index_of(const std::string& label) const {
  auto it = std::find(elems.begin(), elems.end(), label);
  return it == elems.end() ? -1 : static_cast<int>(it - elems.begin());
}

FinSemigroup FinSemigroup::from_group(const FinGroup& g) {
  return FinSemigroup(g.elems, g.table, 0);
}

PartialBijection::PartialBijection(int n_, std::vector<int> map_) : n(n_), map(std::move(map_)) {
  if (static_cast<int>(map.size()) != n) throw std::invalid_argument("partial bijection map has wrong length");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : map) {
    if (v < -1 || v >= n) throw std::invalid_argument("partial bijection image out of range");
    if (v >= 0) {
      if (hit[static_cast<std::size_t>(v)]) throw std::invalid_argument("partial bijection is not injective");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
}

int PartialBijection::domain_size() const {
  int k = 0;
  for (int v : map)
    if (v >= 0) ++k;
  return k;
}

std::string PartialBijection::label() const {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < n; ++x) {
    if (map[static_cast<std::size_t>(x)] < 0) continue;
    if (!first) out += ",";
    first = false;
    out += std::to_string(x + 1) + "->" + std::to_string(map[static_cast<std::size_t>(x)] + 1);
  }
  return out + "}";
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection out(n);
  for (int x = 0; x < n; ++x)
    if (map[static_cast<std::size_t>(x)] >= 0) out.map[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])] = x;
  return out;
}

PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
  if (f.n != g.n) throw std::invalid_argument("composing partial bijections over different sets");
  PartialBijection out(f.n);
  for (int x = 0; x < f.n; ++x) {
    int y = g.map[static_cast<std::size_t>(x)];
    if (y >= 0 && f.map[static_cast<std::size_t>(y)] >= 0) out.map[static_cast<std::size_t>(x)] = f.map[static_cast<std::size_t>(y)];
  }
  return out;
}

InverseReport is_inverse(const FinSemigroup& s) {
  const int n = s.size();
  InverseReport rep;
  std::vector<std::vector<int>> pseudo(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x)
      if (s.op(s.op(a, x), a) == a && s.op(s.op(x, a), x) == x) pseudo[static_cast<std::size_t>(a)].push_back(x);
    if (pseudo[static_cast<std::size_t>(a)].empty()) {
      rep.kind = InverseClass::not_regular;
      rep.witness = {a, a};
      rep.message = "element '" + s.elems[static_cast<std::size_t>(a)] + "' has no pseudo-inverse";
      return rep;
    }
  }
  bool unique = true;
  int bad = -1;
  for (int a = 0; a < n && unique; ++a)
    if (pseudo[static_cast<std::size_t>(a)].size() != 1) {
      unique = false;
      bad = a;
    }
  // cross-check: uniqueness of pseudo-inverses <=> E(S) commutes
  auto idem = s.idempotents();
  std::pair<int, int> noncomm{-1, -1};
  for (std::size_t i = 0; i < idem.size() && noncomm.first < 0; ++i)
    for (std::size_t j = i + 1; j < idem.size(); ++j)
      if (s.op(idem[i], idem[j]) != s.op(idem[j], idem[i])) {
        noncomm = {idem[i], idem[j]};
        break;
      }
  if (unique != (noncomm.first < 0))
    throw std::logic_error("internal: pseudo-inverse uniqueness disagrees with idempotent commutativity");
  if (!unique) {
    rep.kind = InverseClass::regular_only;
    rep.witness = noncomm;
    rep.message = "idempotents '" + s.elems[static_cast<std::size_t>(noncomm.first)] + "' and '" +
                  s.elems[static_cast<std::size_t>(noncomm.second)] + "' do not commute (element '" +
                  s.elems[static_cast<std::size_t>(bad)] + "' has several pseudo-inverses)";
    return rep;
  }
  rep.kind = InverseClass::inverse;
  rep.star.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) rep.star[static_cast<std::size_t>(a)] = pseudo[static_cast<std::size_t>(a)][0];
  rep.message = "inverse semigroup";
  return rep;
}

std::vector<PartialBijection> symmetric_inverse_monoid_elements(int n) {
  if (n < 1) throw std::invalid_argument("symmetric inverse monoid needs n >= 1");
  std::vector<PartialBijection> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> domain;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) domain.push_back(x);
    std::vector<int> assign(domain.size(), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    // lexicographic backtracking over injective assignments
    std::size_t pos = 0;
    std::vector<int> choice(domain.size(), -1);
    if (domain.empty()) {
      out.emplace_back(n);
      continue;
    }
    while (true) {
      int start = choice[pos] + 1;
      if (choice[pos] >= 0) used[static_cast<std::size_t>(choice[pos])] = false;
      int next = -1;
      for (int y = start; y < n; ++y)
        if (!used[static_cast<std::size_t>(y)]) {
          next = y;
          break;
        }
      if (next < 0) {
        choice[pos] = -1;
        if (pos == 0) break;
        --pos;
        continue;
      }
      choice[pos] = next;
      used[static_cast<std::size_t>(next)] = true;
      if (pos + 1 == domain.size()) {
        PartialBijection pb(n);
        for (std::size_t k = 0; k < domain.size(); ++k) pb.map[static_cast<std::size_t>(domain[k])] = choice[k];
        out.push_back(pb);
      } else {
        ++pos;
      }
    }
    (void)assign;
  }
  return out;
}

FinSemigroup symmetric_inverse_monoid(int n) {
  auto elems = symmetric_inverse_monoid_elements(n);
  std::map<std::string, int> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    labels.push_back(elems[i].label());
    index[labels.back()] = static_cast<int>(i);
  }
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          index.at(compose(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]).label());
  std::vector<int> id(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) id[static_cast<std::size_t>(x)] = x;
  int unit = index.at(PartialBijection(n, id).label());
  int zero = index.at(PartialBijection(n).label());
  return FinSemigroup(std::move(labels), std::move(table), unit, zero);
}

std::vector<PartialBijection> wagner_preston(const FinSemigroup& s) {
  auto rep = is_inverse(s);
  if (rep.kind != InverseClass::inverse)
    throw std::invalid_argument("wagner_preston requires an inverse semigroup: " + rep.message);
  const int n = s.size();
  std::vector<PartialBijection> theta;
  theta.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    int e = s.op(rep.star[static_cast<std::size_t>(a)], a);  // a*a
    PartialBijection pb(n);
    for (int x = 0; x < n; ++x)
      if (s.op(e, x) == x) pb.map[static_cast<std::size_t>(x)] = s.op(a, x);
    theta.push_back(PartialBijection(n, pb.map));  // re-validates injectivity
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(compose(theta[static_cast<std::size_t>(a)], theta[static_cast<std::size_t>(b)]) ==
            theta[static_cast<std::size_t>(s.op(a, b))]))
        throw std::logic_error("internal: wagner-preston map is not a homomorphism at (" +
                               s.elems[static_cast<std::size_t>(a)] + ", " + s.elems[static_cast<std::size_t>(b)] + ")");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (theta[static_cast<std::size_t>(a)] == theta[static_cast<std::size_t>(b)])
        throw std::logic_error("internal: wagner-preston map is not injective");
  return theta;
}

FinSemigroup exel_semigroup(const FinGroup& g) {
  const int n = g.size();
  if (n > 16) throw std::invalid_argument("exel_semigroup: group too large");
  struct El {
    unsigned mask;
    int gidx;
  };
  std::vector<El> els;
  std::map<std::pair<unsigned, int>, int> index;
  auto label_of = [&](unsigned mask, int gi) {
    std::string out = "({";
    bool first = true;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) {
        if (!first) out += ",";
        first = false;
        out += g.elems[static_cast<std::size_t>(x)];
      }
    return out + "}," + g.elems[static_cast<std::size_t>(gi)] + ")";
  };
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    for (int gi = 0; gi < n; ++gi)
      if ((mask & 1u) && (mask & (1u << gi))) {  // element 0 is the identity
        index[{mask, gi}] = static_cast<int>(els.size());
        els.push_back({mask, gi});
      }
  const int m = static_cast<int>(els.size());
  std::vector<std::string> labels;
  for (const auto& e : els) labels.push_back(label_of(e.mask, e.gidx));
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      unsigned shifted = 0;  // g * B
      for (int x = 0; x < n; ++x)
        if (els[static_cast<std::size_t>(j)].mask & (1u << x)) shifted |= 1u << g.op(els[static_cast<std::size_t>(i)].gidx, x);
      unsigned mask = els[static_cast<std::size_t>(i)].mask | shifted;
      int gi = g.op(els[static_cast<std::size_t>(i)].gidx, els[static_cast<std::size_t>(j)].gidx);
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = index.at({mask, gi});
    }
  int unit = index.at({1u, 0});
  return FinSemigroup(std::move(labels), std::move(table), unit);
}

namespace {

struct Fingerprint {
  bool idem;
  int order_index;
  int order_period;
  int left_units;  // |{x : xa = a}|

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FinSemigroup& s, int a) {
  // index/period of the power sequence a, a^2, ...
  std::vector<int> seen;
  int x = a;
  while (std::find(seen.begin(), seen.end(), x) == seen.end()) {
    seen.push_back(x);
    x = s.op(x, a);
  }
  int first = static_cast<int>(std::find(seen.begin(), seen.end(), x) - seen.begin());
  Fingerprint f;
  f.idem = s.is_idempotent(a);
  f.order_index = first + 1;
  f.order_period = static_cast<int>(seen.size()) - first;
  f.left_units = 0;
  for (int y = 0; y < s.size(); ++y)
    if (s.op(y, a) == a) ++f.left_units;
  return f;
}

bool extend(const FinSemigroup& a, const FinSemigroup& b, std::vector<int>& phi, std::vector<bool>& used,
            const std::vector<Fingerprint>& fa, const std::vector<Fingerprint>& fb, int pos) {
  const int n = a.size();
  if (pos == n) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (b.op(phi[static_cast<std::size_t>(i)], phi[static_cast<std::size_t>(j)]) !=
            phi[static_cast<std::size_t>(a.op(i, j))])
          return false;
    return true;
  }
  for (int img = 0; img < n; ++img) {
    if (used[static_cast<std::size_t>(img)] || !(fa[static_cast<std::size_t>(pos)] == fb[static_cast<std::size_t>(img)])) continue;
    phi[static_cast<std::size_t>(pos)] = img;
    bool ok = true;
    // products landing beyond the mapped prefix are re-verified at the end
    for (int q = 0; q <= pos && ok; ++q) {
      int pq = a.op(pos, q), qp = a.op(q, pos);
      if (pq <= pos && b.op(img, phi[static_cast<std::size_t>(q)]) != phi[static_cast<std::size_t>(pq)]) ok = false;
      if (ok && qp <= pos && b.op(phi[static_cast<std::size_t>(q)], img) != phi[static_cast<std::size_t>(qp)]) ok = false;
    }
    if (ok) {
      used[static_cast<std::size_t>(img)] = true;
      if (extend(a, b, phi, used, fa, fb, pos + 1)) return true;
      used[static_cast<std::size_t>(img)] = false;
    }
  }
  phi[static_cast<std::size_t>(pos)] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FinSemigroup& a, const FinSemigroup& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > 40) throw std::invalid_argument("isomorphism search limited to 40 elements");
  const int n = a.size();
  std::vector<Fingerprint> fa, fb;
  for (int i = 0; i < n; ++i) {
    fa.push_back(fingerprint(a, i));
    fb.push_back(fingerprint(b, i));
  }
  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  if (!extend(a, b, phi, used, fa, fb, 0)) return std::nullopt;
  return phi;
}

}  // namespace qisg
