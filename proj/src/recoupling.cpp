#include "u4kit/recoupling.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

#include "u4kit/cgc.hpp"
#include "u4kit/numerics.hpp"
#include "u4kit/tensor_product.hpp"

namespace u4 {

namespace {

int carrier_index(const std::vector<Pattern>& carrier, const Pattern& p) {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), p, canonical_less);
  if (it == carrier.end() || *it != p)
    throw std::logic_error("carrier_index: pattern not in carrier");
  return static_cast<int>(it - carrier.begin());
}

void drop_tiny(Eigen::MatrixXd& m) {
  m = m.unaryExpr([](double x) { return std::abs(x) < 1e-14 ? 0.0 : x; });
}

// Shared solver for U and Z. The reference scheme [(f1 f2)f12, f3] is
// contracted against the alternate scheme's coupling at the overall highest
// weight; `swap_alt` selects whether the alternate pair coupling acts on
// (f2,f3) (U) or (f1,f3) (Z).
RecouplingBlock solve_block(const Irrep& f1, const Irrep& f2, const Irrep& f,
                            const Irrep& f3, const Irrep& f12,
                            const Irrep& falt, bool swap_alt) {
  CgcTable t12 = full_cgc(f1, f2, f12);
  CgcTable tf12 = full_cgc(f12, f3, f);
  // alternate scheme: U couples (f2 f3)->falt then (f1 falt)->f;
  // Z couples (f1 f3)->falt then (falt f2)->f
  CgcTable talt = swap_alt ? full_cgc(f1, f3, falt) : full_cgc(f2, f3, falt);
  CgcTable tout = swap_alt ? full_cgc(falt, f2, f) : full_cgc(f1, falt, f);

  RecouplingBlock blk;
  blk.n12 = t12.eta_max;
  blk.n123 = tf12.eta_max;
  blk.n_alt = talt.eta_max;
  blk.n_tot = tout.eta_max;

  const CgcShell& out_hw = tout.hw_shell();
  const Pattern hw_alt = highest_weight(falt);
  // free slot: the carrier whose pattern varies along the rows of the solve
  const bool alt_first = swap_alt;  // Z: pairs are (G13, G2); U: (G1, G23)
  int hw_alt_idx = carrier_index(alt_first ? tout.carrier_f : tout.carrier_fp,
                                 hw_alt);

  auto select_rows = [&](bool all) {
    std::vector<int> rows;
    for (int ci = 0; ci < static_cast<int>(out_hw.pairs.size()); ++ci) {
      const auto& pr = out_hw.pairs[static_cast<size_t>(ci)];
      int fixed = alt_first ? pr.first : pr.second;
      if (all || fixed == hw_alt_idx) rows.push_back(ci);
    }
    return rows;
  };

  std::vector<int> rows = select_rows(false);
  auto build_a = [&](const std::vector<int>& rs) {
    Eigen::MatrixXd a(static_cast<Eigen::Index>(rs.size()), blk.n_tot);
    for (int r = 0; r < static_cast<int>(rs.size()); ++r)
      for (int e = 0; e < blk.n_tot; ++e)
        a(r, e) = out_hw.coef[static_cast<size_t>(e)](0, rs[static_cast<size_t>(r)]);
    return a;
  };
  Eigen::MatrixXd a = build_a(rows);
  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& s = svd.singularValues();
    if (s.size() < blk.n_tot || (s.size() && s(s.size() - 1) <= 1e-10 * s(0))) {
      std::cerr << "recoupling: highest-weight slice rank-deficient, "
                   "falling back to the full shell\n";
      rows = select_rows(true);
      a = build_a(rows);
    }
  }

  // right-hand sides: contraction of the reference scheme onto each row pair
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(rows.size()), blk.n_alt * blk.n12 * blk.n123);
  std::map<std::pair<int, int>, int> row_of;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    row_of[out_hw.pairs[static_cast<size_t>(rows[static_cast<size_t>(r)])]] = r;

  const CgcShell& f_hw = tf12.hw_shell();
  for (int ci = 0; ci < static_cast<int>(f_hw.pairs.size()); ++ci) {
    const auto& pr = f_hw.pairs[static_cast<size_t>(ci)];
    const Pattern& g12 = tf12.carrier_f[static_cast<size_t>(pr.first)];
    const Pattern& g3 = tf12.carrier_fp[static_cast<size_t>(pr.second)];
    const CgcShell& sh12 = t12.shell(p_weight(g12));
    auto st = std::lower_bound(sh12.states.begin(), sh12.states.end(), g12,
                               canonical_less);
    Eigen::Index si = st - sh12.states.begin();
    for (int pj = 0; pj < static_cast<int>(sh12.pairs.size()); ++pj) {
      const auto& qr = sh12.pairs[static_cast<size_t>(pj)];
      const Pattern& g1 = t12.carrier_f[static_cast<size_t>(qr.first)];
      const Pattern& g2 = t12.carrier_fp[static_cast<size_t>(qr.second)];
      // row pair in the output coupling, and the alternate-pair coupling
      for (const auto& [row_pair, r] : row_of) {
        const Pattern& g_alt =
            (alt_first ? tout.carrier_f : tout.carrier_fp)[static_cast<size_t>(
                alt_first ? row_pair.first : row_pair.second)];
        const Pattern& g_free =
            (alt_first ? tout.carrier_fp : tout.carrier_f)[static_cast<size_t>(
                alt_first ? row_pair.second : row_pair.first)];
        // U: free slot is G1, alt couples (G2,G3); Z: free is G2, alt (G1,G3)
        if (alt_first ? g_free != g2 : g_free != g1) continue;
        for (int ea = 0; ea < blk.n_alt; ++ea) {
          double calt =
              alt_first
                  ? talt.coefficient(g1, g3, g_alt, ea + 1)
                  : talt.coefficient(g2, g3, g_alt, ea + 1);
          if (calt == 0.0) continue;
          for (int e12 = 0; e12 < blk.n12; ++e12) {
            double c12 = sh12.coef[static_cast<size_t>(e12)](si, pj);
            if (c12 == 0.0) continue;
            for (int e123 = 0; e123 < blk.n123; ++e123) {
              double cf = f_hw.coef[static_cast<size_t>(e123)](0, ci);
              if (cf == 0.0) continue;
              b(r, (ea * blk.n12 + e12) * blk.n123 + e123) += c12 * cf * calt;
            }
          }
        }
      }
    }
  }

  Eigen::MatrixXd sol = solve_stacked(a, b);  // n_tot x (alt*12*123)
  blk.value.resize(blk.n12 * blk.n123, blk.n_alt * blk.n_tot);
  for (int ea = 0; ea < blk.n_alt; ++ea)
    for (int e12 = 0; e12 < blk.n12; ++e12)
      for (int e123 = 0; e123 < blk.n123; ++e123)
        for (int et = 0; et < blk.n_tot; ++et)
          blk.value(e12 * blk.n123 + e123, ea * blk.n_tot + et) =
              sol(et, (ea * blk.n12 + e12) * blk.n123 + e123);
  drop_tiny(blk.value);
  return blk;
}

}  // namespace

RecouplingBlock u_coefficients(const Irrep& f1, const Irrep& f2,
                               const Irrep& f, const Irrep& f3,
                               const Irrep& f12, const Irrep& f23) {
  return solve_block(f1, f2, f, f3, f12, f23, false);
}

RecouplingBlock z_coefficients(const Irrep& f2, const Irrep& f1,
                               const Irrep& f, const Irrep& f3,
                               const Irrep& f12, const Irrep& f13) {
  return solve_block(f1, f2, f, f3, f12, f13, true);
}

double nine_u4(const Irrep& f1, const Irrep& f2, const Irrep& f12, int eta12,
               const Irrep& f3, const Irrep& f4, const Irrep& f34, int eta34,
               const Irrep& f13, int eta13, const Irrep& f24, int eta24,
               const Irrep& f, int eta12_34, int eta13_24) {
  if (!outer_multiplicity(f1, f2, f12) || !outer_multiplicity(f3, f4, f34) ||
      !outer_multiplicity(f1, f3, f13) || !outer_multiplicity(f2, f4, f24) ||
      !outer_multiplicity(f12, f34, f) || !outer_multiplicity(f13, f24, f))
    throw coupling_error("nine_u4: labels do not couple");
  double total = 0.0;
  for (const auto& [f0, n123] : decompose(f12, f3)) {
    if (!outer_multiplicity(f13, f2, f0)) continue;
    int n04 = outer_multiplicity(f0, f4, f);
    if (!n04) continue;
    RecouplingBlock u1 = u_coefficients(f13, f2, f, f4, f0, f24);
    RecouplingBlock z = z_coefficients(f2, f1, f0, f3, f12, f13);
    RecouplingBlock u2 = u_coefficients(f12, f3, f, f4, f0, f34);
    for (int e13_2 = 1; e13_2 <= u1.n12; ++e13_2)
      for (int e04 = 1; e04 <= n04; ++e04)
        for (int e12_3 = 1; e12_3 <= n123; ++e12_3)
          total += u1.at(e13_2, e04, eta24, eta13_24) *
                   z.at(eta12, e12_3, eta13, e13_2) *
                   u2.at(e12_3, e04, eta34, eta12_34);
  }
  return total;
}

}  // namespace u4
