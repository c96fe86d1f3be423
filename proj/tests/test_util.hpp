#pragma once

#include "qisg/linmap.hpp"

#include <random>

namespace qisg::testutil {

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return Rational(num(rng), den(rng));
}

inline Mat random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = random_rational(rng);
  return m;
}

inline Vec random_vector(std::mt19937_64& rng, Eigen::Index n) {
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = random_rational(rng);
  return v;
}

}  // namespace qisg::testutil
