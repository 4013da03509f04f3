#pragma once

#include <Eigen/Dense>
#include <map>
#include <utility>
#include <vector>

#include "u4kit/irrep.hpp"

namespace u4 {

// One p-weight shell of the coupled irrep: all target states of that weight
// and every product pair (G,G') whose weights add up to it. coef[eta] holds
// the coefficients as a states x pairs matrix.
struct CgcShell {
  std::vector<Pattern> states;             // canonical order
  std::vector<std::pair<int, int>> pairs;  // indices into the two carriers
  std::map<std::pair<int, int>, int> pair_index;
  std::vector<Eigen::MatrixXd> coef;
};

struct CgcTable {
  Irrep f, fp, fpp;
  int eta_max = 0;
  std::vector<Pattern> carrier_f, carrier_fp, carrier_fpp;
  std::map<Weight, CgcShell> shells;

  const CgcShell& shell(const Weight& w) const;
  const CgcShell& hw_shell() const;
  // 0.0 when the triple does not appear; eta is 1-based.
  double coefficient(const Pattern& g, const Pattern& gp, const Pattern& gpp,
                     int eta) const;
};

// Complete coupling table f x f' -> f'' for all outer multiplicities;
// throws std::invalid_argument when f'' is not in the decomposition.
CgcTable full_cgc(const Irrep& f, const Irrep& fp, const Irrep& fpp);

// (relation-1, relation-2) residuals: rows of each table orthonormal, and
// columns complete across every table of the same product.
std::pair<double, double> orthogonality_residuals(
    const std::vector<const CgcTable*>& tables);

// Max deviation of the commuting square: generator action on the coupled
// state vs the coupled action on the product side, over all 16 generators.
double equivariance_residual(const CgcTable& tab);

}  // namespace u4
