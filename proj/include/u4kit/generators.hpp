#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "u4kit/irrep.hpp"

namespace u4 {

// Weyl generator E_ij (1-based level indices); i==j diagonal, i<j raising,
// i>j lowering.
struct Gen {
  int i, j;
};

inline const std::vector<Gen>& all_generators() {
  static const std::vector<Gen> g = [] {
    std::vector<Gen> v;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) v.push_back({i, j});
    return v;
  }();
  return g;
}

// Sparse result of applying a generator: target pattern -> amplitude.
using Action = std::map<Pattern, double>;

Action apply_generator(Gen g, const Pattern& p);
Action apply_generator(Gen g, const Action& state);
Eigen::MatrixXd generator_matrix(Gen g, const Irrep& f);
Eigen::MatrixXd generator_matrix(Gen g, const std::vector<Pattern>& basis);

}  // namespace u4
