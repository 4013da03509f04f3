// Acceptance suite: one PASS/FAIL line per criterion.
#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "u4kit/cgc.hpp"
#include "u4kit/document.hpp"
#include "u4kit/generators.hpp"
#include "u4kit/numerics.hpp"
#include "u4kit/physical.hpp"
#include "u4kit/recoupling.hpp"
#include "u4kit/su2.hpp"
#include "u4kit/tensor_product.hpp"

using namespace u4;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::map<std::array<Irrep, 3>, CgcTable> g_tables;

const CgcTable& shared_cgc(const Irrep& f, const Irrep& fp, const Irrep& fpp) {
  auto key = std::array<Irrep, 3>{f, fp, fpp};
  auto it = g_tables.find(key);
  if (it == g_tables.end()) it = g_tables.emplace(key, full_cgc(f, fp, fpp)).first;
  return it->second;
}

// ---------- criterion 1 ----------

long long brute_dimension(const Irrep& f) {
  long long count = 0;
  for (int n13 = f[1]; n13 <= f[0]; ++n13)
    for (int n23 = f[2]; n23 <= f[1]; ++n23)
      for (int n33 = f[3]; n33 <= f[2]; ++n33)
        for (int n12 = n23; n12 <= n13; ++n12)
          for (int n22 = n33; n22 <= n23; ++n22) count += n12 - n22 + 1;
  return count;
}

bool criterion1() {
  auto t0 = Clock::now();
  long long checked = 0;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        for (int d = 0; d <= c; ++d) {
          Irrep f{{a, b, c, d}};
          if (dimension(f) != brute_dimension(f)) {
            std::printf("  dimension mismatch at %s\n", to_string(f).c_str());
            return false;
          }
          ++checked;
        }
  double dt = seconds_since(t0);
  std::printf("  %lld labels, %.2f s\n", checked, dt);
  return dt < 10.0;
}

// ---------- criterion 2 ----------

bool criterion2() {
  auto t0 = Clock::now();
  double worst = 0.0;
  long long irreps = 0;
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        for (int d = 0; d <= c; ++d) {
          Irrep f{{a, b, c, d}};
          if (dimension(f) > 50) continue;
          ++irreps;
          std::vector<Pattern> basis = carrier_space(f);
          Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
          std::map<std::pair<int, int>, Eigen::MatrixXd> m;
          for (Gen g : all_generators()) m[{g.i, g.j}] = generator_matrix(g, basis);
          for (const auto& [ij, x] : m)
            worst = std::max(worst, (x - m.at({ij.second, ij.first}).transpose())
                                        .cwiseAbs()
                                        .maxCoeff());
          for (const auto& [ij, x] : m)
            for (const auto& [kl, y] : m) {
              Eigen::MatrixXd comm = x * y - y * x;
              Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(dim, dim);
              if (ij.second == kl.first) expect += m.at({ij.first, kl.second});
              if (ij.first == kl.second) expect -= m.at({kl.first, ij.second});
              worst = std::max(worst, (comm - expect).cwiseAbs().maxCoeff());
            }
        }
  double dt = seconds_since(t0);
  std::printf("  %lld irreps, max residual %.2e, %.2f s\n", irreps, worst, dt);
  return worst <= 1e-10 && dt < 60.0;
}

// ---------- criterion 3 ----------

bool criterion3() {
  auto t0 = Clock::now();
  std::vector<std::pair<Irrep, Irrep>> products = {
      {Irrep{{1, 0, 0, 0}}, Irrep{{1, 0, 0, 0}}},
      {Irrep{{2, 1, 1, 0}}, Irrep{{1, 1, 0, 0}}},
      {Irrep{{8, 4, 2, 0}}, Irrep{{1, 0, 0, 0}}},
      {Irrep{{8, 4, 2, 0}}, Irrep{{1, 1, 0, 0}}},
  };
  bool ok = true;
  for (const auto& [f, fp] : products) {
    std::vector<const CgcTable*> ptrs;
    for (const auto& [fpp, eta] : decompose(f, fp)) {
      const CgcTable& t = shared_cgc(f, fp, fpp);
      if (t.eta_max != eta) {
        std::printf("  null-space dim %d != multiplicity %d at %s\n", t.eta_max,
                    eta, to_string(fpp).c_str());
        ok = false;
      }
      ptrs.push_back(&t);
    }
    auto [r1, r2] = orthogonality_residuals(ptrs);
    double eq = 0.0;
    for (const CgcTable* t : ptrs)
      if (dimension(t->fpp) <= 100) eq = std::max(eq, equivariance_residual(*t));
    std::printf("  %s x %s: ortho %.2e / %.2e, equivariance %.2e\n",
                to_string(f).c_str(), to_string(fp).c_str(), r1, r2, eq);
    ok = ok && r1 <= 1e-10 && r2 <= 1e-10 && eq <= 1e-9;
  }
  double dt = seconds_since(t0);
  std::printf("  %.2f s\n", dt);
  return ok && dt < 300.0;
}

// ---------- criterion 4 ----------

bool criterion4() {
  auto t0 = Clock::now();
  bool ok = true;
  long long candidates = 0, nonzero = 0;
  for (int a = 0; a <= 8 && ok; ++a)
    for (int b = 0; b <= a && ok; ++b)
      for (int c = 0; c <= b && ok; ++c)
        for (int d = 0; d <= c && ok; ++d) {
          Irrep f{{a, b, c, d}};
          if (f.sum() > 8) continue;
          O6Labels o = o6_labels(f);
          for (int s2 = 0; s2 <= o.p1x2 + 2; ++s2)
            for (int t2 = 0; t2 <= o.p1x2 + 2; ++t2) {
              int z = zeta_max(f, s2, t2);
              std::vector<Pattern> tpl = st_template(f, s2, t2);
              int null_dim =
                  tpl.empty()
                      ? 0
                      : static_cast<int>(null_space(st_projection(tpl)).cols());
              if (z != null_dim) {
                std::printf("  %s (2S,2T)=(%d,%d): formula %d, projection %d\n",
                            to_string(f).c_str(), s2, t2, z, null_dim);
                ok = false;
              }
              ++candidates;
              if (z > 0) ++nonzero;
            }
        }
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        for (int d = 0; d <= c; ++d) {
          Irrep f{{a, b, c, d}};
          if (f.sum() > 10) continue;
          if (!st_dimension_check(f)) {
            std::printf("  dimension identity fails at %s\n", to_string(f).c_str());
            ok = false;
          }
        }
  double dt = seconds_since(t0);
  std::printf("  %lld candidates (%lld with nonzero multiplicity), %.2f s\n",
              candidates, nonzero, dt);
  return ok && dt < 300.0;
}

// ---------- criteria 5 and 6: reduced-coefficient tables ----------

struct RefBlock {
  int S2, T2, S2p, T2p;
  std::vector<std::vector<double>> rows;  // zeta ascending x zeta'' columns
};

// independently tabulated reference values for the two worked couplings
const std::vector<RefBlock>& reference_table1() {
  static const std::vector<RefBlock> t = {
      {8, 8, 1, 1, {{-0.343019, 0.0612356, -0.0179121, 0}}},
      {8, 6, 1, 1, {{0.186572, 0.272502, 0, -0.137919},
                    {0.100699, -0.0179767, -0.115251, 0.208514}}},
      {6, 8, 1, 1, {{0.186572, 0.272502, 0, 0.137919},
                    {-0.100699, 0.0179767, 0.115251, 0.208514}}},
      {6, 6, 1, 1, {{0.886081, 0, 0, 0},
                    {0.0163888, 0.0069387, 0.986407, 0},
                    {0, 0, 0, 0.935414},
                    {-0.0838492, 0.920348, -0.0107472, 0}}},
  };
  return t;
}

const std::vector<RefBlock>& reference_table2() {
  static const std::vector<RefBlock> t = {
      {8, 4, 2, 0, {{0, 0.0688505, -0.0620989, 0.194152, -0.118331},
                    {-0.486033, -0.000838901, 0.295462, 0.0743102, -0.0131602},
                    {-0.0996271, 0.300124, -0.255118, 0.0175132, 0.141745}}},
      {6, 4, 2, 0, {{-0.0118857, -0.155438, -0.219715, -0.289959, 0.0179052},
                    {-0.0226953, -0.362154, 0.268257, 0.0271416, -0.0764189},
                    {0.045563, -0.0733281, -0.078353, 0.361672, -0.080103},
                    {-0.0108016, -0.0852314, -0.0155587, 0.0999238, -0.541386}}},
      {4, 4, 2, 0, {{0.173331, 0.126282, -0.0495185, 0.047281, -0.0425521},
                    {0.210996, -0.0916816, 0.0179478, -0.0220182, -0.12132},
                    {0.154661, -0.012515, 0.241789, 0.0735375, 0.256234},
                    {0.00179472, 0.281128, -0.00862842, 0.171439, -0.224478},
                    {0.0242476, 0.24691, 0.216476, -0.338965, -0.198874}}},
      {6, 6, 0, 2, {{0.0282633, -0.0888694, -0.0344642, 0.25173, -0.035744},
                    {-0.637252, 0.019093, 0.282838, 0.0765627, -0.00393358},
                    {-0.196932, 0.147087, -0.458445, -0.0755306, 0.0839061},
                    {-0.0718974, -0.380671, -0.12274, -0.134813, -0.160459}}},
      {6, 4, 0, 2, {{0.291099, 0.235605, 0.335639, 0.365857, 0.0237871},
                    {-0.145048, 0.409257, 0.0304183, -0.0289226, 0.097562},
                    {0.257869, 0.0227162, 0.311657, -0.444772, 0.0391771},
                    {-0.00954735, -0.0222245, -0.0192093, 0.168838, 0.421091}}},
      {6, 2, 0, 2, {{-0.117888, -0.0776855, -0.190022, -0.12693, -0.0258989},
                    {-0.121739, -0.0539785, 0.220995, -0.167361, -0.0341485},
                    {0, -0.356882, -0.0533739, 0.278226, 0.0567695},
                    {0, 0.193875, -0.0606203, 0.0529075, -0.509759}}},
  };
  return t;
}

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

Eigen::MatrixXd grid_block(const ReducedGrid& g, int eta, int s2, int t2,
                           int s2p, int t2p) {
  std::vector<int> sel;
  for (int r = 0; r < static_cast<int>(g.rows.size()); ++r) {
    const ReducedRowLabel& lb = g.rows[static_cast<size_t>(r)];
    if (lb.S2 == s2 && lb.T2 == t2 && lb.S2p == s2p && lb.T2p == t2p)
      sel.push_back(r);
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(sel.size()), g.zetapp_max);
  for (size_t i = 0; i < sel.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) =
        g.by_eta[static_cast<size_t>(eta - 1)].row(sel[i]);
  return m;
}

double spectrum_deviation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::VectorXd sa = a.jacobiSvd().singularValues();
  Eigen::VectorXd sb = b.jacobiSvd().singularValues();
  Eigen::Index n = std::max(sa.size(), sb.size());
  double dev = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double x = i < sa.size() ? sa(i) : 0.0;
    double y = i < sb.size() ? sb(i) : 0.0;
    dev = std::max(dev, std::abs(x - y));
  }
  return dev;
}

// frame-invariant comparison of one computed grid against reference blocks
bool compare_reference(const ReducedGrid& g, const std::vector<RefBlock>& ref,
                       const char* tag) {
  bool ok = true;
  double worst_frob = 0.0, worst_spec = 0.0;
  size_t rows_total = 0;
  for (const RefBlock& rb : ref) {
    Eigen::MatrixXd ours = grid_block(g, 1, rb.S2, rb.T2, rb.S2p, rb.T2p);
    Eigen::MatrixXd theirs = to_matrix(rb.rows);
    rows_total += rb.rows.size();
    if (ours.rows() != theirs.rows()) {
      std::printf("  %s block (%d,%d|%d,%d): %ld rows, expected %ld\n", tag,
                  rb.S2, rb.T2, rb.S2p, rb.T2p, static_cast<long>(ours.rows()),
                  static_cast<long>(theirs.rows()));
      return false;
    }
    worst_frob = std::max(
        worst_frob, std::abs(ours.squaredNorm() - theirs.squaredNorm()));
    worst_spec = std::max(worst_spec, spectrum_deviation(ours, theirs));
  }
  if (rows_total != g.rows.size()) {
    std::printf("  %s: reference covers %zu rows, table has %zu\n", tag,
                rows_total, g.rows.size());
    ok = false;
  }
  double worst_col = 0.0;
  const Eigen::MatrixXd& m = g.by_eta[0];
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    worst_col = std::max(worst_col, std::abs(m.col(c).squaredNorm() - 1.0));
  std::printf("  %s: block frob2 dev %.2e, spectra dev %.2e, column norm dev %.2e\n",
              tag, worst_frob, worst_spec, worst_col);
  return ok && worst_frob <= 1e-4 && worst_spec <= 1e-4 && worst_col <= 1e-4;
}

bool criterion5() {
  auto t0 = Clock::now();
  const CgcTable& tab =
      shared_cgc(Irrep{{8, 4, 2, 0}}, Irrep{{1, 0, 0, 0}}, Irrep{{9, 4, 2, 0}});
  ReducedGrid g = reduced_wigner_st(tab, 7, 7);
  if (g.zetapp_max != 4 || g.rows.size() != 9 || g.by_eta.size() != 1) {
    std::printf("  unexpected shape: %zu rows x %d columns\n", g.rows.size(),
                g.zetapp_max);
    return false;
  }
  bool ok = compare_reference(g, reference_table1(), "9x4");
  // the single-row (8,8) block: length is invariant under zeta'' rotations
  Eigen::MatrixXd b44 = grid_block(g, 1, 8, 8, 1, 1);
  Eigen::MatrixXd r44 = to_matrix(reference_table1()[0].rows);
  double d44 = std::abs(b44.norm() - r44.norm());
  std::printf("  (4,4) row norm dev %.2e\n", d44);
  ok = ok && d44 <= 1e-4;
  double dt = seconds_since(t0);
  std::printf("  %.2f s\n", dt);
  return ok && dt < 60.0;
}

bool criterion6() {
  auto t0 = Clock::now();
  const CgcTable& tab =
      shared_cgc(Irrep{{8, 4, 2, 0}}, Irrep{{1, 1, 0, 0}}, Irrep{{8, 5, 3, 0}});
  ReducedGrid g = reduced_wigner_st(tab, 6, 4);
  if (g.zetapp_max != 5 || g.rows.size() != 24 || g.by_eta.size() != 1) {
    std::printf("  unexpected shape: %zu rows x %d columns\n", g.rows.size(),
                g.zetapp_max);
    return false;
  }
  bool ok = compare_reference(g, reference_table2(), "24x5");

  // completeness over every coupled irrep holding (3,2): the stacked
  // row-by-column matrix must be orthogonal
  std::vector<ReducedGrid> grids;
  grids.push_back(g);
  int cols = g.zetapp_max;
  for (const auto& [fpp, eta] : decompose(Irrep{{8, 4, 2, 0}}, Irrep{{1, 1, 0, 0}})) {
    if (fpp == Irrep{{8, 5, 3, 0}} || zeta_max(fpp, 6, 4) == 0) continue;
    const CgcTable& t = shared_cgc(Irrep{{8, 4, 2, 0}}, Irrep{{1, 1, 0, 0}}, fpp);
    ReducedGrid gg = reduced_wigner_st(t, 6, 4);
    if (gg.rows.size() != g.rows.size() || gg.by_eta.size() != 1) {
      std::printf("  %s: row count %zu differs from %zu\n",
                  to_string(fpp).c_str(), gg.rows.size(), g.rows.size());
      return false;
    }
    for (size_t r = 0; r < gg.rows.size(); ++r) {
      const ReducedRowLabel &a = gg.rows[r], &b = g.rows[r];
      if (a.zeta != b.zeta || a.S2 != b.S2 || a.T2 != b.T2 || a.zetap != b.zetap ||
          a.S2p != b.S2p || a.T2p != b.T2p) {
        std::printf("  row labels differ between coupled irreps\n");
        return false;
      }
    }
    cols += gg.zetapp_max;
    grids.push_back(std::move(gg));
  }
  Eigen::MatrixXd stack(static_cast<Eigen::Index>(g.rows.size()), cols);
  Eigen::Index at = 0;
  for (const ReducedGrid& gg : grids) {
    stack.middleCols(at, gg.zetapp_max) = gg.by_eta[0];
    at += gg.zetapp_max;
  }
  double col_ortho =
      (stack.transpose() * stack -
       Eigen::MatrixXd::Identity(stack.cols(), stack.cols())).cwiseAbs().maxCoeff();
  double row_ortho =
      (stack * stack.transpose() -
       Eigen::MatrixXd::Identity(stack.rows(), stack.rows())).cwiseAbs().maxCoeff();
  std::printf("  stacked %ldx%ld: column orthogonality %.2e, row orthogonality %.2e\n",
              static_cast<long>(stack.rows()), static_cast<long>(stack.cols()),
              col_ortho, row_ortho);
  double dt = seconds_since(t0);
  std::printf("  %.2f s\n", dt);
  return ok && col_ortho <= 1e-9 && row_ortho <= 1e-9;
}

// ---------- criterion 7 ----------

int carrier_index(const std::vector<Pattern>& carrier, const Pattern& p) {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), p, canonical_less);
  return static_cast<int>(it - carrier.begin());
}

Eigen::MatrixXd dense_cgc(const CgcTable& t, int eta) {
  Eigen::Index dp = static_cast<Eigen::Index>(t.carrier_fp.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(t.carrier_fpp.size()),
      static_cast<Eigen::Index>(t.carrier_f.size()) * dp);
  for (const auto& [w, sh] : t.shells) {
    const Eigen::MatrixXd& x = sh.coef[static_cast<size_t>(eta - 1)];
    for (size_t si = 0; si < sh.states.size(); ++si) {
      int row = carrier_index(t.carrier_fpp, sh.states[si]);
      for (size_t pi = 0; pi < sh.pairs.size(); ++pi)
        m(row, sh.pairs[pi].first * dp + sh.pairs[pi].second) =
            x(static_cast<Eigen::Index>(si), static_cast<Eigen::Index>(pi));
    }
  }
  return m;
}

// scheme vectors for three- and four-irrep couplings of the fundamental
Eigen::VectorXd coupled_12_3(const Irrep& f12, const Irrep& f) {
  const Irrep fund{{1, 0, 0, 0}};
  const CgcTable& t12 = shared_cgc(fund, fund, f12);
  const CgcTable& tf = shared_cgc(f12, fund, f);
  Eigen::MatrixXd c12 = dense_cgc(t12, 1);
  Eigen::MatrixXd cf = dense_cgc(tf, 1);
  int hw = carrier_index(tf.carrier_fpp, highest_weight(f));
  Eigen::VectorXd v = Eigen::VectorXd::Zero(64);
  for (Eigen::Index k = 0; k < c12.rows(); ++k)
    for (Eigen::Index g3 = 0; g3 < 4; ++g3) {
      double c = cf(hw, k * 4 + g3);
      if (c == 0.0) continue;
      for (Eigen::Index g12 = 0; g12 < 16; ++g12) v(g12 * 4 + g3) += c * c12(k, g12);
    }
  return v;
}

Eigen::VectorXd coupled_1_23(const Irrep& f23, const Irrep& f) {
  const Irrep fund{{1, 0, 0, 0}};
  const CgcTable& t23 = shared_cgc(fund, fund, f23);
  const CgcTable& tf = shared_cgc(fund, f23, f);
  Eigen::MatrixXd c23 = dense_cgc(t23, 1);
  Eigen::MatrixXd cf = dense_cgc(tf, 1);
  int hw = carrier_index(tf.carrier_fpp, highest_weight(f));
  Eigen::Index d23 = c23.rows();
  Eigen::VectorXd v = Eigen::VectorXd::Zero(64);
  for (Eigen::Index g1 = 0; g1 < 4; ++g1)
    for (Eigen::Index k = 0; k < d23; ++k) {
      double c = cf(hw, g1 * d23 + k);
      if (c == 0.0) continue;
      for (Eigen::Index g23 = 0; g23 < 16; ++g23) v(g1 * 16 + g23) += c * c23(k, g23);
    }
  return v;
}

Eigen::VectorXd coupled_13_2(const Irrep& f13, const Irrep& f) {
  const Irrep fund{{1, 0, 0, 0}};
  const CgcTable& t13 = shared_cgc(fund, fund, f13);
  const CgcTable& tf = shared_cgc(f13, fund, f);
  Eigen::MatrixXd c13 = dense_cgc(t13, 1);
  Eigen::MatrixXd cf = dense_cgc(tf, 1);
  int hw = carrier_index(tf.carrier_fpp, highest_weight(f));
  Eigen::VectorXd v = Eigen::VectorXd::Zero(64);
  for (Eigen::Index k = 0; k < c13.rows(); ++k)
    for (Eigen::Index g2 = 0; g2 < 4; ++g2) {
      double c = cf(hw, k * 4 + g2);
      if (c == 0.0) continue;
      for (Eigen::Index g1 = 0; g1 < 4; ++g1)
        for (Eigen::Index g3 = 0; g3 < 4; ++g3)
          v((g1 * 4 + g2) * 4 + g3) += c * c13(k, g1 * 4 + g3);
    }
  return v;
}

Eigen::VectorXd coupled_pairs(const Irrep& fab, const Irrep& fcd, const Irrep& f) {
  const Irrep fund{{1, 0, 0, 0}};
  const CgcTable& ta = shared_cgc(fund, fund, fab);
  const CgcTable& tc = shared_cgc(fund, fund, fcd);
  const CgcTable& tf = shared_cgc(fab, fcd, f);
  Eigen::MatrixXd cab = dense_cgc(ta, 1);
  Eigen::MatrixXd ccd = dense_cgc(tc, 1);
  Eigen::MatrixXd cf = dense_cgc(tf, 1);
  int hw = carrier_index(tf.carrier_fpp, highest_weight(f));
  Eigen::Index dab = cab.rows(), dcd = ccd.rows();
  Eigen::VectorXd v = Eigen::VectorXd::Zero(256);
  for (Eigen::Index k = 0; k < dab; ++k)
    for (Eigen::Index l = 0; l < dcd; ++l) {
      double c = cf(hw, k * dcd + l);
      if (c == 0.0) continue;
      for (Eigen::Index x = 0; x < 16; ++x) {
        if (cab(k, x) == 0.0) continue;
        for (Eigen::Index y = 0; y < 16; ++y)
          if (ccd(l, y) != 0.0) v(x * 16 + y) += c * cab(k, x) * ccd(l, y);
      }
    }
  return v;
}

bool criterion7() {
  auto t0 = Clock::now();
  const Irrep fund{{1, 0, 0, 0}};
  std::vector<Irrep> two = {Irrep{{2, 0, 0, 0}}, Irrep{{1, 1, 0, 0}}};
  double worst_u = 0.0, worst_z = 0.0, worst_nine = 0.0, worst_ortho = 0.0;

  for (const Irrep& f12 : two)
    for (const Irrep& f23 : two) {
      Decomposition da = decompose(f12, fund), db = decompose(fund, f23);
      for (const auto& [f, eta] : da) {
        if (!db.count(f)) continue;
        double solved = u_coefficients(fund, fund, f, fund, f12, f23).at(1, 1, 1, 1);
        double oracle = coupled_1_23(f23, f).dot(coupled_12_3(f12, f));
        worst_u = std::max(worst_u, std::abs(solved - oracle));
      }
    }
  for (const Irrep& f12 : two)
    for (const Irrep& f13 : two) {
      Decomposition da = decompose(f12, fund), db = decompose(f13, fund);
      for (const auto& [f, eta] : da) {
        if (!db.count(f)) continue;
        double solved = z_coefficients(fund, fund, f, fund, f12, f13).at(1, 1, 1, 1);
        double oracle = coupled_13_2(f13, f).dot(coupled_12_3(f12, f));
        worst_z = std::max(worst_z, std::abs(solved - oracle));
      }
    }
  for (const Irrep& f12 : two)
    for (const Irrep& f34 : two)
      for (const Irrep& f13 : two)
        for (const Irrep& f24 : two) {
          Decomposition da = decompose(f12, f34), db = decompose(f13, f24);
          for (const auto& [f, eta] : da) {
            if (!db.count(f)) continue;
            double formula = nine_u4(fund, fund, f12, 1, fund, fund, f34, 1, f13,
                                     1, f24, 1, f, 1, 1);
            Eigen::VectorXd va = coupled_pairs(f12, f34, f);
            Eigen::VectorXd vb = coupled_pairs(f13, f24, f);
            Eigen::VectorXd vbp = Eigen::VectorXd::Zero(256);
            for (int g1 = 0; g1 < 4; ++g1)
              for (int g2 = 0; g2 < 4; ++g2)
                for (int g3 = 0; g3 < 4; ++g3)
                  for (int g4 = 0; g4 < 4; ++g4)
                    vbp(((g1 * 4 + g2) * 4 + g3) * 4 + g4) =
                        vb(((g1 * 4 + g3) * 4 + g2) * 4 + g4);
            worst_nine = std::max(worst_nine, std::abs(formula - vbp.dot(va)));
          }
        }
  // U-matrix orthogonality over every total coupling of three fundamentals
  std::map<Irrep, int> totals;
  for (const Irrep& f12 : two)
    for (const auto& [f, eta] : decompose(f12, fund)) totals[f] = 1;
  for (const auto& [f, unused] : totals) {
    std::vector<Irrep> rows, cols;
    for (const Irrep& g : two) {
      if (outer_multiplicity(g, fund, f)) rows.push_back(g);
      if (outer_multiplicity(fund, g, f)) cols.push_back(g);
    }
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < cols.size(); ++c)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            u_coefficients(fund, fund, f, fund, rows[r], cols[c]).at(1, 1, 1, 1);
    Eigen::MatrixXd gram = m * m.transpose();
    gram.diagonal().array() -= 1.0;
    worst_ortho = std::max(worst_ortho, gram.cwiseAbs().maxCoeff());
  }
  double dt = seconds_since(t0);
  std::printf("  U dev %.2e, Z dev %.2e, 9-U(4) dev %.2e, orthogonality %.2e, %.2f s\n",
              worst_u, worst_z, worst_nine, worst_ortho, dt);
  return worst_u <= 1e-8 && worst_z <= 1e-8 && worst_nine <= 1e-8 &&
         worst_ortho <= 1e-9 && dt < 120.0;
}

// ---------- criterion 8 ----------

bool criterion8() {
  double worst = 0.0;
  for (int j1 = 0; j1 <= 20; ++j1)
    for (int j2 = 0; j2 <= 20 - j1; ++j2) {
      for (int m1 = -j1; m1 <= j1; m1 += 2)
        for (int m2 = -j2; m2 <= j2; m2 += 2)
          for (int m1b = -j1; m1b <= j1; m1b += 2) {
            int m2b = m1 + m2 - m1b;
            if (std::abs(m2b) > j2) continue;
            double s = 0.0;
            for (int J = std::abs(j1 - j2); J <= j1 + j2; J += 2)
              s += su2_cgc(j1, m1, j2, m2, J, m1 + m2) *
                   su2_cgc(j1, m1b, j2, m2b, J, m1 + m2);
            worst = std::max(worst, std::abs(s - (m1 == m1b ? 1.0 : 0.0)));
          }
      for (int J = std::abs(j1 - j2); J <= j1 + j2; J += 2)
        for (int Jb = std::abs(j1 - j2); Jb <= j1 + j2; Jb += 2)
          for (int M = -std::min(J, Jb); M <= std::min(J, Jb); M += 2) {
            double s = 0.0;
            for (int m1 = -j1; m1 <= j1; m1 += 2) {
              int m2 = M - m1;
              if (std::abs(m2) > j2) continue;
              s += su2_cgc(j1, m1, j2, m2, J, M) * su2_cgc(j1, m1, j2, m2, Jb, M);
            }
            worst = std::max(worst, std::abs(s - (J == Jb ? 1.0 : 0.0)));
          }
    }
  double spot = std::abs(su2_cgc(1, 1, 1, -1, 2, 0) - std::sqrt(0.5));
  spot = std::max(spot, std::abs(su2_cgc(2, 0, 1, 1, 1, 1) + std::sqrt(1.0 / 3.0)));
  spot = std::max(spot, std::abs(su2_cgc(2, 2, 2, 2, 4, 4) - 1.0));
  std::printf("  orthogonality %.2e, spot values %.2e\n", worst, spot);
  return worst <= 1e-12 && spot <= 1e-14;
}

// ---------- criterion 9 ----------

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("U4KIT_BIN");
  if (!bin) return {};
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {};
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = ::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool criterion9() {
  if (!std::getenv("U4KIT_BIN")) {
    std::printf("  U4KIT_BIN not set\n");
    return false;
  }
  bool ok = true;
  for (std::string cmd :
       {std::string("cgc 2.1.1.0 1.1.0.0 3.2.1.0 --format json"),
        std::string("wigner 2.1.1.0 1.0.0.0 2.1.1.1 --ST 1/2,1/2 --format json"),
        std::string("u6 1.0.0.0 1.0.0.0 2.1.0.0 1.0.0.0 2.0.0.0 1.1.0.0 --format csv"),
        std::string("st-pairs 9.4.2.0"), std::string("basis 2.1.1.0")}) {
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    if (a.code != 0 || a.code != b.code || a.out != b.out) {
      std::printf("  nondeterministic or failing: %s (exit %d/%d)\n", cmd.c_str(),
                  a.code, b.code);
      ok = false;
    }
  }
  std::filesystem::path cache =
      std::filesystem::temp_directory_path() /
      ("u4kit-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(cache);
  std::string cmd =
      "cgc 2.1.1.0 1.1.0.0 3.2.1.0 --format json --cache " + cache.string();
  RunResult fresh = run_cli(cmd);
  RunResult cached = run_cli(cmd);
  bool hit = std::filesystem::exists(cache / "cgc" / "2.1.1.0_1.1.0.0_3.2.1.0" /
                                     "u4kit-v1.json");
  if (fresh.code != 0 || cached.code != 0 || !hit || fresh.out != cached.out) {
    std::printf("  cache round-trip mismatch (exit %d/%d, hit=%d)\n", fresh.code,
                cached.code, hit ? 1 : 0);
    ok = false;
  } else if (Json::parse(fresh.out) != Json::parse(cached.out)) {
    // value-identical: deep comparison of the parsed documents
    std::printf("  cached document differs from fresh computation\n");
    ok = false;
  }
  std::filesystem::remove_all(cache);
  std::printf("  determinism and cache round-trip checked\n");
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*fn)();
  };
  const std::vector<Criterion> list = {
      {"criterion 1 (dimension formula vs enumeration)", criterion1},
      {"criterion 2 (generator commutators and hermiticity)", criterion2},
      {"criterion 3 (coupling-coefficient suite)", criterion3},
      {"criterion 4 (inner multiplicity cross-validation)", criterion4},
      {"criterion 5 (elementary reduced table 9x4)", criterion5},
      {"criterion 6 (two-column reduced table 24x5)", criterion6},
      {"criterion 7 (recoupling vs direct contraction)", criterion7},
      {"criterion 8 (su2 kernel)", criterion8},
      {"criterion 9 (CLI determinism and cache)", criterion9},
  };
  int failures = 0;
  for (const Criterion& c : list) {
    bool pass = false;
    try {
      pass = c.fn();
    } catch (const std::exception& e) {
      std::printf("  exception: %s\n", e.what());
    }
    std::printf("%s: %s\n", c.name, pass ? "PASS" : "FAIL");
    if (!pass) ++failures;
  }
  return failures;
}
