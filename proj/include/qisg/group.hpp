#pragma once

#include <string>
#include <vector>

namespace qisg {

/// Finite group by multiplication table. Element 0 is always the identity.
struct FinGroup {
  std::vector<std::string> elems;
  std::vector<std::vector<int>> table;
  std::vector<int> inv;

  int size() const { return static_cast<int>(elems.size()); }
  int op(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int order(int a) const;

  static FinGroup trivial();
  static FinGroup cyclic(int n);
  static FinGroup direct_product(const FinGroup& a, const FinGroup& b);
  static FinGroup klein_four();
};

/// "Z1".."Z9", "Z2xZ2", "Z2xZ3", ... Throws on unknown names.
FinGroup parse_group(const std::string& name);

}  // namespace qisg
