#pragma once

#include "qisg/biretraction.hpp"

namespace qisg {

struct VerifyParams {
  int points = 2;
  std::string group = "Z2";
  int n = 2;
  Rational q{2};
  Rational q_alpha{5};
  long t_alpha = 3;
  int max_degree = 3;
  unsigned long long seed = 0;
};

/// Registry: qisg-axioms, weakhopf-qisg, hadamard, hpar, hopf-category,
/// bisection-semigroup, brt-regular, qisg-span, bisection-iso,
/// kG-classification, torus-q1, noncomm-regular.
std::vector<std::string> verify_ids();
Report verify_theorem(const std::string& id, const VerifyParams& p);

}  // namespace qisg
