#include "u4kit/physical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "u4kit/generators.hpp"
#include "u4kit/numerics.hpp"
#include "u4kit/su2.hpp"
#include "u4kit/tensor_product.hpp"

namespace u4 {

namespace {

constexpr Gen kSPlus[2] = {{1, 3}, {2, 4}};
constexpr Gen kTPlus[2] = {{1, 2}, {3, 4}};
constexpr Gen kSMinus[2] = {{4, 2}, {3, 1}};
constexpr Gen kTMinus[2] = {{4, 3}, {2, 1}};

Action apply_pair_sum(const Gen (&gens)[2], const Action& vec) {
  Action out;
  for (const auto& [p, c] : vec) {
    for (const Gen& g : gens) {
      for (const auto& [q, a] : apply_generator(g, p)) {
        auto [it, fresh] = out.try_emplace(q, c * a);
        if (!fresh) it->second += c * a;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0.0 ? out.erase(it) : std::next(it);
  return out;
}

double lf(int k) { return std::lgamma(k + 1.0); }

// doubled Omega value of the multiplicity formula (integer arithmetic)
long long omega2(int x, int y, int S2, int T2) {
  if (x < y) std::swap(x, y);
  if (S2 > x + y || T2 > x + y) return 0;
  int dts = std::abs(T2 - S2) / 2;
  int st = (S2 + T2) / 2;
  int a = y + 2 - dts;
  int b = y + 1 - st;
  int c = st - x - 1;
  int d = st - dts - x + y + 1;
  auto phi = [](int z) -> long long {
    return z > 0 ? static_cast<long long>(z) * z / 4 : 0;
  };
  return 2 * phi(a) - 2 * phi(b) + 2 * phi(c) - phi(d);
}

}  // namespace

O6Labels o6_labels(const Irrep& f) {
  return {f[0] + f[1] - f[2] - f[3], f[0] - f[1] + f[2] - f[3],
          f[0] - f[1] - f[2] + f[3],
          (f[0] + f[1] - f[2] - f[3]) % 2 ? 1 : 0};
}

std::pair<int, int> st_weight(const Pattern& p) {
  Weight w = p_weight(p);
  return {w[3] + w[2] - w[1] - w[0], w[3] - w[2] + w[1] - w[0]};
}

int zeta_max(const Irrep& f, int S2, int T2) {
  if (!f.valid()) throw std::invalid_argument("zeta_max: invalid irrep");
  O6Labels o = o6_labels(f);
  if (S2 < 0 || T2 < 0) return 0;
  if ((S2 - o.gamma_min_x2) % 2 || (T2 - o.gamma_min_x2) % 2) return 0;
  if (S2 < o.gamma_min_x2 || T2 < o.gamma_min_x2) return 0;
  if (S2 > o.p1x2 || T2 > o.p1x2) return 0;
  if (S2 + T2 > o.p1x2 + o.p2x2) return 0;
  long long z2 = omega2(f[0] - f[2], f[1] - f[3], S2, T2) -
                 omega2(f[0] - f[3] + 1, f[1] - f[2] - 1, S2, T2) -
                 omega2(f[0] - f[1] - 1, f[2] - f[3] - 1, S2, T2);
  if (z2 % 2)
    throw std::logic_error("zeta_max: non-integral multiplicity value");
  return static_cast<int>(z2 / 2);
}

StPairs allowed_st_pairs(const Irrep& f) {
  StPairs out;
  O6Labels o = o6_labels(f);
  for (int S2 = o.gamma_min_x2; S2 <= o.p1x2; S2 += 2)
    for (int T2 = o.gamma_min_x2; T2 <= o.p1x2; T2 += 2) {
      if (S2 + T2 > o.p1x2 + o.p2x2) continue;
      int z = zeta_max(f, S2, T2);
      if (z > 0) out[{S2, T2}] = z;
    }
  return out;
}

bool st_dimension_check(const Irrep& f) {
  long long total = 0;
  for (const auto& [st, z] : allowed_st_pairs(f))
    total += static_cast<long long>(z) * (st.first + 1) * (st.second + 1);
  return total == dimension(f);
}

std::vector<Pattern> st_template(const Irrep& f, int S2, int T2) {
  std::vector<Pattern> out;
  int n = f.sum();
  if ((n + S2) % 2 || (S2 + T2) % 2) return out;
  for (int a1 = 0; a1 <= f[0] - f[1]; ++a1)
    for (int a2 = 0; a2 <= f[1] - f[2]; ++a2)
      for (int a3 = 0; a3 <= f[2] - f[3]; ++a3) {
        int qmin = std::max(0, f[0] + f[2] - (n + S2) / 2 - a1 - a3);
        int qmax = std::min(
            std::min(f[0] + f[1] - (n + S2) / 2 - a1 - a2,
                     f[0] - f[3] - (S2 + T2) / 2 - 2 * a1 - a2 - a3),
            std::min(f[0] + f[3] - (n - T2) / 2 + a2 + a3,
                     f[0] - f[1] - a1 + a2));
        for (int q = qmin; q <= qmax; ++q) {
          Pattern p;
          p[N14] = f[0];
          p[N24] = f[1];
          p[N34] = f[2];
          p[N44] = f[3];
          p[N13] = f[0] - a1;
          p[N23] = f[1] - a2;
          p[N33] = f[2] - a3;
          p[N12] = f[0] - a1 - q;
          p[N22] = (n + S2) / 2 - f[0] + a1 + q;
          p[N11] = f[3] + (S2 + T2) / 2 + a1 + a2 + a3;
          if (p.valid()) out.push_back(p);
        }
      }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Eigen::MatrixXd st_projection(const std::vector<Pattern>& tpl) {
  std::map<std::pair<int, Pattern>, std::map<int, double>> rows;
  for (int ci = 0; ci < static_cast<int>(tpl.size()); ++ci) {
    Action unit{{tpl[static_cast<size_t>(ci)], 1.0}};
    for (const auto& [q, a] : apply_pair_sum(kSPlus, unit)) rows[{0, q}][ci] += a;
    for (const auto& [q, a] : apply_pair_sum(kTPlus, unit)) rows[{1, q}][ci] += a;
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(rows.size()),
      static_cast<Eigen::Index>(tpl.size()));
  Eigen::Index ri = 0;
  for (const auto& [key, row] : rows) {
    for (const auto& [ci, a] : row) m(ri, ci) = a;
    ++ri;
  }
  return m;
}

std::vector<PhysicalExpansion> physical_hw_expansion(const Irrep& f, int S2,
                                                     int T2) {
  int zmax = zeta_max(f, S2, T2);
  if (zmax == 0)
    throw coupling_error("physical_hw_expansion: (S,T) not allowed for " +
                         to_string(f));
  std::vector<Pattern> tpl = st_template(f, S2, T2);
  Eigen::MatrixXd ns = null_space(st_projection(tpl));
  if (ns.cols() != zmax)
    throw std::runtime_error(
        "physical_hw_expansion: projection null space does not match the "
        "multiplicity formula");
  ns = fix_phase_columns(gram_schmidt(ns));
  std::vector<PhysicalExpansion> out;
  for (int z = 0; z < zmax; ++z) {
    PhysicalExpansion e;
    e.f = f;
    e.zeta = z + 1;
    e.S2 = S2;
    e.T2 = T2;
    e.MS2 = S2;
    e.MT2 = T2;
    for (int i = 0; i < static_cast<int>(tpl.size()); ++i)
      if (ns(i, z) != 0.0) e.terms[tpl[static_cast<size_t>(i)]] = ns(i, z);
    out.push_back(std::move(e));
  }
  return out;
}

PhysicalExpansion physical_state_expansion(const PhysicalExpansion& hw,
                                           int MS2, int MT2) {
  if (hw.MS2 != hw.S2 || hw.MT2 != hw.T2)
    throw std::invalid_argument(
        "physical_state_expansion: input must be a highest-weight expansion");
  if (std::abs(MS2) > hw.S2 || std::abs(MT2) > hw.T2 ||
      (hw.S2 - MS2) % 2 || (hw.T2 - MT2) % 2)
    throw std::invalid_argument("physical_state_expansion: M out of range");
  int alpha = (hw.S2 - MS2) / 2;
  int beta = (hw.T2 - MT2) / 2;
  Action cur = hw.terms;
  for (int k = 0; k < alpha; ++k) cur = apply_pair_sum(kSMinus, cur);
  for (int k = 0; k < beta; ++k) cur = apply_pair_sum(kTMinus, cur);
  double pref = std::exp(0.5 * (lf(hw.S2 - alpha) + lf(hw.T2 - beta) -
                                lf(hw.S2) - lf(alpha) - lf(hw.T2) - lf(beta)));
  PhysicalExpansion out;
  out.f = hw.f;
  out.zeta = hw.zeta;
  out.S2 = hw.S2;
  out.T2 = hw.T2;
  out.MS2 = MS2;
  out.MT2 = MT2;
  for (const auto& [p, c] : cur) out.terms[p] = c * pref;
  return out;
}

namespace {

// contraction of the three expansions against one eta slice of the table
double reduced_contraction(const CgcTable& tab,
                           const std::map<Pattern, double>& fexp,
                           const std::map<Pattern, double>& fpexp,
                           const std::map<Pattern, double>& fppexp, int eta) {
  double total = 0.0;
  std::map<Weight, std::vector<std::pair<const Pattern*, double>>> bw;
  for (const auto& [p, c] : fppexp) bw[p_weight(p)].push_back({&p, c});
  for (const auto& [w, comp] : bw) {
    auto it = tab.shells.find(w);
    if (it == tab.shells.end()) continue;
    const CgcShell& sh = it->second;
    const Eigen::MatrixXd& xe = sh.coef[static_cast<size_t>(eta - 1)];
    for (const auto& [pp, c] : comp) {
      auto st = std::lower_bound(sh.states.begin(), sh.states.end(), *pp,
                                 canonical_less);
      Eigen::Index si = st - sh.states.begin();
      for (int ci = 0; ci < static_cast<int>(sh.pairs.size()); ++ci) {
        double x = xe(si, ci);
        if (x == 0.0) continue;
        const auto& pr = sh.pairs[static_cast<size_t>(ci)];
        auto fa = fexp.find(tab.carrier_f[static_cast<size_t>(pr.first)]);
        if (fa == fexp.end()) continue;
        auto fb = fpexp.find(tab.carrier_fp[static_cast<size_t>(pr.second)]);
        if (fb == fpexp.end()) continue;
        total += c * x * fa->second * fb->second;
      }
    }
  }
  return total;
}

}  // namespace

ReducedGrid reduced_wigner_st(const CgcTable& tab, int S2pp, int T2pp) {
  ReducedGrid grid;
  grid.S2pp = S2pp;
  grid.T2pp = T2pp;
  grid.zetapp_max = zeta_max(tab.fpp, S2pp, T2pp);
  if (grid.zetapp_max == 0) return grid;
  std::vector<PhysicalExpansion> hpp =
      physical_hw_expansion(tab.fpp, S2pp, T2pp);

  std::map<std::pair<int, int>, std::vector<PhysicalExpansion>> hf;
  for (const auto& [st, z] : allowed_st_pairs(tab.f))
    hf[st] = physical_hw_expansion(tab.f, st.first, st.second);

  struct RowData {
    ReducedRowLabel label;
    const PhysicalExpansion* fexp;
    PhysicalExpansion fpexp;
    double inv_pref;
  };
  std::vector<RowData> rows;
  for (const auto& [stp, zpmax] : allowed_st_pairs(tab.fp)) {
    auto [S2p, T2p] = stp;
    std::vector<PhysicalExpansion> hp = physical_hw_expansion(tab.fp, S2p, T2p);
    for (const auto& [st, zmax] : allowed_st_pairs(tab.f)) {
      auto [S2, T2] = st;
      int alpha2 = S2 + S2p - S2pp;  // 2*alpha
      int beta2 = T2 + T2p - T2pp;
      if (alpha2 < 0 || alpha2 % 2 || alpha2 > 2 * std::min(S2, S2p)) continue;
      if (beta2 < 0 || beta2 % 2 || beta2 > 2 * std::min(T2, T2p)) continue;
      double cs = su2_cgc(S2, S2, S2p, S2p - alpha2, S2pp, S2pp);
      double ct = su2_cgc(T2, T2, T2p, T2p - beta2, T2pp, T2pp);
      for (int zp = 1; zp <= zpmax; ++zp) {
        PhysicalExpansion low = physical_state_expansion(
            hp[static_cast<size_t>(zp - 1)], S2p - alpha2, T2p - beta2);
        for (int z = 1; z <= zmax; ++z) {
          rows.push_back({{z, S2, T2, zp, S2p, T2p},
                          &hf.at(st)[static_cast<size_t>(z - 1)],
                          low,
                          1.0 / (cs * ct)});
        }
      }
    }
  }

  grid.rows.reserve(rows.size());
  for (const RowData& r : rows) grid.rows.push_back(r.label);
  for (int e = 1; e <= tab.eta_max; ++e) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), grid.zetapp_max);
    for (int ri = 0; ri < static_cast<int>(rows.size()); ++ri) {
      const RowData& r = rows[static_cast<size_t>(ri)];
      for (int zpp = 1; zpp <= grid.zetapp_max; ++zpp) {
        double v = r.inv_pref *
                   reduced_contraction(tab, r.fexp->terms, r.fpexp.terms,
                                       hpp[static_cast<size_t>(zpp - 1)].terms,
                                       e);
        m(ri, zpp - 1) = std::abs(v) < 1e-13 ? 0.0 : v;
      }
    }
    grid.by_eta.push_back(std::move(m));
  }
  return grid;
}

ReducedWignerTable reduced_wigner(const Irrep& f, const Irrep& fp,
                                  const Irrep& fpp) {
  CgcTable tab = full_cgc(f, fp, fpp);
  ReducedWignerTable out;
  out.f = f;
  out.fp = fp;
  out.fpp = fpp;
  out.eta_max = tab.eta_max;
  for (const auto& [st, z] : allowed_st_pairs(fpp))
    out.grids.push_back(reduced_wigner_st(tab, st.first, st.second));
  return out;
}

double ReducedWignerTable::value(int zeta, int S2, int T2, int zetap, int S2p,
                                 int T2p, int zetapp, int S2pp, int T2pp,
                                 int eta) const {
  for (const ReducedGrid& g : grids) {
    if (g.S2pp != S2pp || g.T2pp != T2pp) continue;
    if (zetapp < 1 || zetapp > g.zetapp_max) return 0.0;
    for (int ri = 0; ri < static_cast<int>(g.rows.size()); ++ri) {
      const ReducedRowLabel& r = g.rows[static_cast<size_t>(ri)];
      if (r.zeta == zeta && r.S2 == S2 && r.T2 == T2 && r.zetap == zetap &&
          r.S2p == S2p && r.T2p == T2p)
        return g.by_eta[static_cast<size_t>(eta - 1)](ri, zetapp - 1);
    }
    return 0.0;
  }
  return 0.0;
}

double full_wigner(const ReducedWignerTable& table, int zeta, int S2, int T2,
                   int MS2, int MT2, int zetap, int S2p, int T2p, int MS2p,
                   int MT2p, int zetapp, int S2pp, int T2pp, int MS2pp,
                   int MT2pp, int eta) {
  double cs = su2_cgc(S2, MS2, S2p, MS2p, S2pp, MS2pp);
  if (cs == 0.0) return 0.0;
  double ct = su2_cgc(T2, MT2, T2p, MT2p, T2pp, MT2pp);
  if (ct == 0.0) return 0.0;
  return cs * ct *
         table.value(zeta, S2, T2, zetap, S2p, T2p, zetapp, S2pp, T2pp, eta);
}

}  // namespace u4
