#include "u4kit/cgc.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "u4kit/generators.hpp"
#include "u4kit/numerics.hpp"
#include "u4kit/tensor_product.hpp"

namespace u4 {

namespace {

std::map<Weight, std::vector<int>> by_weight(const std::vector<Pattern>& pats) {
  std::map<Weight, std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(pats.size()); ++i)
    out[p_weight(pats[static_cast<size_t>(i)])].push_back(i);
  return out;
}

// total z-weight r3+r2+n11 of any pattern with this p-weight
int ztotal(const Weight& w) {
  int n = w[0] + w[1] + w[2] + w[3];
  int r3 = n - w[0];
  int r2 = r3 - w[1];
  return r3 + r2 + w[3];
}

constexpr Gen kRaise[3] = {{1, 2}, {2, 3}, {3, 4}};
constexpr Gen kLower[3] = {{2, 1}, {3, 2}, {4, 3}};

// weight shift of E_ij: one unit from level j to level i (index 4-l)
Weight shifted_weight(const Weight& w, Gen g) {
  Weight s = w;
  ++s[static_cast<size_t>(4 - g.i)];
  --s[static_cast<size_t>(4 - g.j)];
  return s;
}

}  // namespace

const CgcShell& CgcTable::shell(const Weight& w) const {
  auto it = shells.find(w);
  if (it == shells.end()) throw std::out_of_range("CgcTable::shell: no shell");
  return it->second;
}

const CgcShell& CgcTable::hw_shell() const {
  return shell(p_weight(highest_weight(fpp)));
}

double CgcTable::coefficient(const Pattern& g, const Pattern& gp,
                             const Pattern& gpp, int eta) const {
  auto it = shells.find(p_weight(gpp));
  if (it == shells.end()) return 0.0;
  const CgcShell& sh = it->second;
  auto st = std::lower_bound(sh.states.begin(), sh.states.end(), gpp,
                             canonical_less);
  if (st == sh.states.end() || *st != gpp) return 0.0;
  auto fi = std::lower_bound(carrier_f.begin(), carrier_f.end(), g,
                             canonical_less);
  auto fpi = std::lower_bound(carrier_fp.begin(), carrier_fp.end(), gp,
                              canonical_less);
  if (fi == carrier_f.end() || *fi != g) return 0.0;
  if (fpi == carrier_fp.end() || *fpi != gp) return 0.0;
  auto pr = sh.pair_index.find({static_cast<int>(fi - carrier_f.begin()),
                                static_cast<int>(fpi - carrier_fp.begin())});
  if (pr == sh.pair_index.end()) return 0.0;
  return sh.coef[static_cast<size_t>(eta - 1)](
      static_cast<Eigen::Index>(st - sh.states.begin()), pr->second);
}

CgcTable full_cgc(const Irrep& f, const Irrep& fp, const Irrep& fpp) {
  int eta_max = outer_multiplicity(f, fp, fpp);
  if (eta_max == 0)
    throw coupling_error("full_cgc: " + to_string(fpp) + " not contained in " +
                         to_string(f) + " x " + to_string(fp));
  CgcTable tab;
  tab.f = f;
  tab.fp = fp;
  tab.fpp = fpp;
  tab.eta_max = eta_max;
  tab.carrier_f = carrier_space(f);
  tab.carrier_fp = carrier_space(fp);
  tab.carrier_fpp = carrier_space(fpp);

  auto bw_f = by_weight(tab.carrier_f);
  auto bw_fp = by_weight(tab.carrier_fp);
  std::map<Pattern, int> idx_f, idx_fp;
  for (int i = 0; i < static_cast<int>(tab.carrier_f.size()); ++i)
    idx_f[tab.carrier_f[static_cast<size_t>(i)]] = i;
  for (int i = 0; i < static_cast<int>(tab.carrier_fp.size()); ++i)
    idx_fp[tab.carrier_fp[static_cast<size_t>(i)]] = i;

  // target shells ordered so parents precede children
  std::map<Weight, std::vector<Pattern>> grouped;
  for (const Pattern& p : tab.carrier_fpp) grouped[p_weight(p)].push_back(p);
  std::vector<Weight> order;
  order.reserve(grouped.size());
  for (const auto& [w, _] : grouped) order.push_back(w);
  std::sort(order.begin(), order.end(), [](const Weight& a, const Weight& b) {
    int za = ztotal(a), zb = ztotal(b);
    if (za != zb) return za > zb;
    return a < b;
  });

  auto make_pairs = [&](const Weight& w, CgcShell& sh) {
    for (const auto& [wa, ia] : bw_f) {
      Weight wb;
      bool ok = true;
      for (size_t k = 0; k < 4; ++k) {
        wb[k] = w[k] - wa[k];
        if (wb[k] < 0) ok = false;
      }
      if (!ok) continue;
      auto it = bw_fp.find(wb);
      if (it == bw_fp.end()) continue;
      for (int gi : ia)
        for (int gpi : it->second) sh.pairs.emplace_back(gi, gpi);
    }
    for (int i = 0; i < static_cast<int>(sh.pairs.size()); ++i)
      sh.pair_index[sh.pairs[static_cast<size_t>(i)]] = i;
  };

  // coupled action of one generator on a product pair, scattered onto the
  // pair list of the target shell
  auto coupled_action = [&](Gen g, const std::pair<int, int>& pr,
                            const CgcShell& target,
                            std::vector<std::pair<int, double>>& out) {
    const Pattern& ga = tab.carrier_f[static_cast<size_t>(pr.first)];
    const Pattern& gb = tab.carrier_fp[static_cast<size_t>(pr.second)];
    for (const auto& [q, a] : apply_generator(g, ga)) {
      auto it = target.pair_index.find({idx_f.at(q), pr.second});
      if (it != target.pair_index.end()) out.emplace_back(it->second, a);
    }
    for (const auto& [q, a] : apply_generator(g, gb)) {
      auto it = target.pair_index.find({pr.first, idx_fp.at(q)});
      if (it != target.pair_index.end()) out.emplace_back(it->second, a);
    }
  };

  bool first = true;
  for (const Weight& w : order) {
    CgcShell sh;
    sh.states = grouped.at(w);
    make_pairs(w, sh);
    Eigen::Index np = static_cast<Eigen::Index>(sh.pairs.size());
    Eigen::Index ns = static_cast<Eigen::Index>(sh.states.size());
    if (first) {
      // highest-weight shell: joint null space of the three raising actions
      if (ns != 1)
        throw std::runtime_error("full_cgc: degenerate highest-weight shell");
      std::map<std::tuple<int, int, int>, std::map<int, double>> rows;
      for (int ci = 0; ci < np; ++ci) {
        const auto& pr = sh.pairs[static_cast<size_t>(ci)];
        const Pattern& ga = tab.carrier_f[static_cast<size_t>(pr.first)];
        const Pattern& gb = tab.carrier_fp[static_cast<size_t>(pr.second)];
        for (int k = 0; k < 3; ++k) {
          for (const auto& [q, a] : apply_generator(kRaise[k], ga))
            rows[{k, idx_f.at(q), pr.second}][ci] += a;
          for (const auto& [q, a] : apply_generator(kRaise[k], gb))
            rows[{k, pr.first, idx_fp.at(q)}][ci] += a;
        }
      }
      Eigen::MatrixXd p = Eigen::MatrixXd::Zero(
          static_cast<Eigen::Index>(rows.size()), np);
      Eigen::Index ri = 0;
      for (const auto& [key, row] : rows) {
        for (const auto& [ci, a] : row) p(ri, ci) = a;
        ++ri;
      }
      Eigen::MatrixXd ns_basis = null_space(p);
      if (ns_basis.cols() != eta_max)
        throw std::runtime_error(
            "full_cgc: null-space dimension does not match outer multiplicity");
      ns_basis = fix_phase_columns(gram_schmidt(ns_basis));
      for (int e = 0; e < eta_max; ++e)
        sh.coef.push_back(ns_basis.col(e).transpose());
      first = false;
    } else {
      std::map<Pattern, int> sidx;
      for (int i = 0; i < ns; ++i) sidx[sh.states[static_cast<size_t>(i)]] = i;
      // equations: one per (parent state, lowering generator) that reaches
      // this shell
      struct Eq {
        const CgcShell* parent;
        int pi;
        int k;
      };
      std::vector<Eq> eqs;
      std::vector<Eigen::VectorXd> mrows;
      // map parent pairs into this shell, one per generator
      std::array<std::vector<std::vector<std::pair<int, double>>>, 3> pairmap;
      for (int k = 0; k < 3; ++k) {
        Weight pw = w;
        // parent satisfies shifted_weight(parent, lower) == w
        ++pw[static_cast<size_t>(4 - kLower[k].j)];
        --pw[static_cast<size_t>(4 - kLower[k].i)];
        auto pit = tab.shells.find(pw);
        if (pit == tab.shells.end()) continue;
        const CgcShell& par = pit->second;
        pairmap[static_cast<size_t>(k)].resize(par.pairs.size());
        for (int ci = 0; ci < static_cast<int>(par.pairs.size()); ++ci)
          coupled_action(kLower[k], par.pairs[static_cast<size_t>(ci)], sh,
                         pairmap[static_cast<size_t>(k)][static_cast<size_t>(ci)]);
        for (int pi = 0; pi < static_cast<int>(par.states.size()); ++pi) {
          Action act =
              apply_generator(kLower[k], par.states[static_cast<size_t>(pi)]);
          Eigen::VectorXd mrow = Eigen::VectorXd::Zero(ns);
          bool touch = false;
          for (const auto& [q, a] : act) {
            auto it = sidx.find(q);
            if (it != sidx.end()) {
              mrow(it->second) = a;
              touch = true;
            }
          }
          if (!touch) continue;
          eqs.push_back({&par, pi, k});
          mrows.push_back(std::move(mrow));
        }
      }
      Eigen::Index ne = static_cast<Eigen::Index>(eqs.size());
      if (ne == 0)
        throw std::runtime_error("full_cgc: shell without parent equations");
      Eigen::MatrixXd m(ne, ns);
      for (Eigen::Index i = 0; i < ne; ++i)
        m.row(i) = mrows[static_cast<size_t>(i)];
      // one RHS block per eta, solved with a single factorization
      Eigen::MatrixXd b = Eigen::MatrixXd::Zero(ne, np * eta_max);
      for (Eigen::Index ei = 0; ei < ne; ++ei) {
        const Eq& eq = eqs[static_cast<size_t>(ei)];
        const auto& pm = pairmap[static_cast<size_t>(eq.k)];
        for (int e = 0; e < eta_max; ++e) {
          const Eigen::MatrixXd& px = eq.parent->coef[static_cast<size_t>(e)];
          for (int ci = 0; ci < static_cast<int>(pm.size()); ++ci) {
            double c = px(eq.pi, ci);
            if (c == 0.0) continue;
            for (const auto& [ti, a] : pm[static_cast<size_t>(ci)])
              b(ei, e * np + ti) += c * a;
          }
        }
      }
      Eigen::MatrixXd sol = solve_stacked(m, b);
      for (int e = 0; e < eta_max; ++e)
        sh.coef.push_back(sol.middleCols(e * np, np));
    }
    tab.shells[w] = std::move(sh);
  }
  return tab;
}

std::pair<double, double> orthogonality_residuals(
    const std::vector<const CgcTable*>& tables) {
  double max1 = 0.0, max2 = 0.0;
  std::map<Weight, std::vector<Eigen::MatrixXd>> per_weight;
  for (const CgcTable* t : tables) {
    for (const auto& [w, sh] : t->shells) {
      Eigen::Index ns = static_cast<Eigen::Index>(sh.states.size());
      Eigen::Index np = static_cast<Eigen::Index>(sh.pairs.size());
      Eigen::MatrixXd a(static_cast<Eigen::Index>(sh.coef.size()) * ns, np);
      for (Eigen::Index e = 0; e < static_cast<Eigen::Index>(sh.coef.size());
           ++e)
        a.middleRows(e * ns, ns) = sh.coef[static_cast<size_t>(e)];
      Eigen::MatrixXd g = a * a.transpose();
      g.diagonal().array() -= 1.0;
      max1 = std::max(max1, g.cwiseAbs().maxCoeff());
      per_weight[w].push_back(std::move(a));
    }
  }
  for (const auto& [w, as] : per_weight) {
    Eigen::Index rows = 0, cols = as.front().cols();
    for (const auto& a : as) rows += a.rows();
    Eigen::MatrixXd a(rows, cols);
    Eigen::Index at = 0;
    for (const auto& blk : as) {
      a.middleRows(at, blk.rows()) = blk;
      at += blk.rows();
    }
    Eigen::MatrixXd g = a.transpose() * a;
    g.diagonal().array() -= 1.0;
    max2 = std::max(max2, g.cwiseAbs().maxCoeff());
  }
  return {max1, max2};
}

double equivariance_residual(const CgcTable& tab) {
  double worst = 0.0;
  std::map<Pattern, int> idx_f, idx_fp;
  for (int i = 0; i < static_cast<int>(tab.carrier_f.size()); ++i)
    idx_f[tab.carrier_f[static_cast<size_t>(i)]] = i;
  for (int i = 0; i < static_cast<int>(tab.carrier_fp.size()); ++i)
    idx_fp[tab.carrier_fp[static_cast<size_t>(i)]] = i;
  for (Gen g : all_generators()) {
    for (const auto& [w, sh] : tab.shells) {
      // shell the action lands in; absent means the action must vanish
      const CgcShell* target = nullptr;
      auto it = tab.shells.find(g.i == g.j ? w : shifted_weight(w, g));
      if (it != tab.shells.end()) target = &it->second;
      std::map<Pattern, int> tsidx;
      if (target)
        for (int i = 0; i < static_cast<int>(target->states.size()); ++i)
          tsidx[target->states[static_cast<size_t>(i)]] = i;
      for (size_t e = 0; e < sh.coef.size(); ++e) {
        const Eigen::MatrixXd& x = sh.coef[e];
        for (int s = 0; s < static_cast<int>(sh.states.size()); ++s) {
          std::map<std::pair<int, int>, double> lhs, rhs;
          for (int ci = 0; ci < static_cast<int>(sh.pairs.size()); ++ci) {
            double c = x(s, ci);
            if (c == 0.0) continue;
            const auto& pr = sh.pairs[static_cast<size_t>(ci)];
            const Pattern& ga = tab.carrier_f[static_cast<size_t>(pr.first)];
            const Pattern& gb = tab.carrier_fp[static_cast<size_t>(pr.second)];
            for (const auto& [q, a] : apply_generator(g, ga))
              lhs[{idx_f.at(q), pr.second}] += c * a;
            for (const auto& [q, a] : apply_generator(g, gb))
              lhs[{pr.first, idx_fp.at(q)}] += c * a;
          }
          if (target) {
            const Eigen::MatrixXd& xt = target->coef[e];
            for (const auto& [q, a] :
                 apply_generator(g, sh.states[static_cast<size_t>(s)])) {
              auto ti = tsidx.find(q);
              if (ti == tsidx.end()) continue;
              for (int ci = 0; ci < static_cast<int>(target->pairs.size());
                   ++ci) {
                double v = a * xt(ti->second, ci);
                if (v != 0.0)
                  rhs[target->pairs[static_cast<size_t>(ci)]] += v;
              }
            }
          }
          for (const auto& [key, v] : lhs)
            worst = std::max(worst, std::abs(v - (rhs.count(key) ? rhs[key] : 0.0)));
          for (const auto& [key, v] : rhs)
            if (!lhs.count(key)) worst = std::max(worst, std::abs(v));
        }
      }
    }
  }
  return worst;
}

}  // namespace u4
