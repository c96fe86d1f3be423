#include "qisg/group.hpp"

#include <stdexcept>

namespace qisg {

int FinGroup::order(int a) const {
  int x = a, n = 1;
  while (x != 0) {
    x = op(x, a);
    ++n;
  }
  return n;
}

FinGroup FinGroup::trivial() { return cyclic(1); }

FinGroup FinGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  FinGroup g;
  for (int i = 0; i < n; ++i) g.elems.push_back(std::to_string(i));
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  g.inv.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    g.inv[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return g;
}

FinGroup FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
  FinGroup g;
  int na = a.size(), nb = b.size();
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) g.elems.push_back("(" + a.elems[static_cast<std::size_t>(i)] + "," + b.elems[static_cast<std::size_t>(j)] + ")");
  int n = na * nb;
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  g.inv.resize(static_cast<std::size_t>(n));
  auto idx = [nb](int i, int j) { return i * nb + j; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      g.inv[static_cast<std::size_t>(idx(i, j))] = idx(a.inv[static_cast<std::size_t>(i)], b.inv[static_cast<std::size_t>(j)]);
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          g.table[static_cast<std::size_t>(idx(i, j))][static_cast<std::size_t>(idx(k, l))] = idx(a.op(i, k), b.op(j, l));
    }
  return g;
}

FinGroup FinGroup::klein_four() { return direct_product(cyclic(2), cyclic(2)); }

FinGroup parse_group(const std::string& name) {
  if (auto pos = name.find('x'); pos != std::string::npos)
    return FinGroup::direct_product(parse_group(name.substr(0, pos)), parse_group(name.substr(pos + 1)));
  if (name.size() >= 2 && name[0] == 'Z') {
    int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 9) return FinGroup::cyclic(n);
  }
  throw std::invalid_argument("unknown group name: '" + name + "' (expected Z1..Z9 or products like Z2xZ2)");
}

}  // namespace qisg
