#pragma once

#include <Eigen/Dense>

#include "u4kit/irrep.hpp"

namespace u4 {

// Recoupling matrix for one set of intermediate labels. Rows flatten the
// multiplicity pair of the reference scheme [(f1 f2)f12, f3] as
// (eta12-1)*n123 + (eta123-1); columns flatten the other scheme's pair the
// same way. Entries with magnitude below 1e-14 are stored as exact zeros.
struct RecouplingBlock {
  int n12 = 0, n123 = 0;    // row extents
  int n_alt = 0, n_tot = 0; // column extents
  Eigen::MatrixXd value;

  double at(int e12, int e123, int e_alt, int e_tot) const {  // 1-based
    return value((e12 - 1) * n123 + (e123 - 1),
                 (e_alt - 1) * n_tot + (e_tot - 1));
  }
};

// <[f1,(f2 f3)f23] | [(f1 f2)f12, f3]> with columns (eta23, eta1_23).
RecouplingBlock u_coefficients(const Irrep& f1, const Irrep& f2,
                               const Irrep& f, const Irrep& f3,
                               const Irrep& f12, const Irrep& f23);

// <[(f1 f3)f13, f2] | [(f1 f2)f12, f3]> with columns (eta13, eta13_2).
RecouplingBlock z_coefficients(const Irrep& f2, const Irrep& f1,
                               const Irrep& f, const Irrep& f3,
                               const Irrep& f12, const Irrep& f13);

// <[(f1 f3)f13, (f2 f4)f24] | [(f1 f2)f12, (f3 f4)f34]> for four coupled
// irreps, summed over the intermediate three-irrep label.
double nine_u4(const Irrep& f1, const Irrep& f2, const Irrep& f12, int eta12,
               const Irrep& f3, const Irrep& f4, const Irrep& f34, int eta34,
               const Irrep& f13, int eta13, const Irrep& f24, int eta24,
               const Irrep& f, int eta12_34, int eta13_24);

}  // namespace u4
