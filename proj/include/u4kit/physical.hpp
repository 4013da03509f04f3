#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "u4kit/cgc.hpp"
#include "u4kit/irrep.hpp"

namespace u4 {

// O(6)-type spin-content labels, doubled-integer encoded.
struct O6Labels {
  int p1x2, p2x2, p3x2, gamma_min_x2;
};
O6Labels o6_labels(const Irrep& f);

// (2 M_S, 2 M_T) of a pattern in the physical chain
std::pair<int, int> st_weight(const Pattern& p);

// inner multiplicity of the (S,T) pair; 0 when the pair is not allowed
int zeta_max(const Irrep& f, int S2, int T2);

// all (2S,2T) with zeta_max >= 1, largest spins first
using StPairs = std::map<std::pair<int, int>, int, std::greater<std::pair<int, int>>>;
StPairs allowed_st_pairs(const Irrep& f);

// sum over pairs of zeta_max*(2S+1)(2T+1) equals the dimension
bool st_dimension_check(const Irrep& f);

// all patterns compatible with the highest-weight index template at
// (M_S,M_T)=(S,T), canonical order
std::vector<Pattern> st_template(const Irrep& f, int S2, int T2);

// spin-isospin projection matrix: S+ and T+ actions over the template
Eigen::MatrixXd st_projection(const std::vector<Pattern>& tpl);

struct PhysicalExpansion {
  Irrep f;
  int zeta, S2, T2, MS2, MT2;
  std::map<Pattern, double> terms;
};

// physical highest-weight states, one per zeta
std::vector<PhysicalExpansion> physical_hw_expansion(const Irrep& f, int S2,
                                                     int T2);
// lowered state at (M_S, M_T) with the norm-preserving prefactor
PhysicalExpansion physical_state_expansion(const PhysicalExpansion& hw,
                                           int MS2, int MT2);

struct ReducedRowLabel {
  int zeta, S2, T2, zetap, S2p, T2p;
};

// reduced coefficients for one target (S'',T''): rows ordered by descending
// (S',T'), then descending (S,T), then zeta', then zeta; columns are zeta''
struct ReducedGrid {
  int S2pp = 0, T2pp = 0, zetapp_max = 0;
  std::vector<ReducedRowLabel> rows;
  std::vector<Eigen::MatrixXd> by_eta;
};
ReducedGrid reduced_wigner_st(const CgcTable& tab, int S2pp, int T2pp);

struct ReducedWignerTable {
  Irrep f, fp, fpp;
  int eta_max = 0;
  std::vector<ReducedGrid> grids;  // (S'',T'') descending

  // 0.0 for any triple that does not appear (triangle violations included)
  double value(int zeta, int S2, int T2, int zetap, int S2p, int T2p,
               int zetapp, int S2pp, int T2pp, int eta) const;
};
ReducedWignerTable reduced_wigner(const Irrep& f, const Irrep& fp,
                                  const Irrep& fpp);

// reduced coefficient times the two SU(2) factors
double full_wigner(const ReducedWignerTable& table, int zeta, int S2, int T2,
                   int MS2, int MT2, int zetap, int S2p, int T2p, int MS2p,
                   int MT2p, int zetapp, int S2pp, int T2pp, int MS2pp,
                   int MT2pp, int eta);

}  // namespace u4
