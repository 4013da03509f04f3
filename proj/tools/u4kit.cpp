#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#include "u4kit/cgc.hpp"
#include "u4kit/document.hpp"
#include "u4kit/generators.hpp"
#include "u4kit/numerics.hpp"
#include "u4kit/physical.hpp"
#include "u4kit/recoupling.hpp"
#include "u4kit/su2.hpp"
#include "u4kit/tensor_product.hpp"

namespace {

using u4::Irrep;
using u4::Json;
using u4::Pattern;

struct Options {
  std::string format = "table";
  double tol = 1e-9;
  std::string cache;
  std::vector<std::string> args;
  std::string st;
  std::string weight;
  int eta = 1;
  int max_n = 4;
};

std::string pad(const std::string& s, size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::array<int, 4> parse_weight(const std::string& s) {
  std::array<int, 4> w{};
  std::stringstream ss(s);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 4 || tok.empty()) throw std::invalid_argument("weight needs w4,w3,w2,w1");
    w[static_cast<size_t>(i++)] = std::stoi(tok);
  }
  if (i != 4) throw std::invalid_argument("weight needs w4,w3,w2,w1");
  return w;
}

std::pair<int, int> parse_st(const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--ST needs S,T");
  return {u4::parse_spin(s.substr(0, comma)),
          u4::parse_spin(s.substr(comma + 1))};
}

std::string cache_root(const Options& opt) {
  if (!opt.cache.empty()) return opt.cache;
  const char* env = std::getenv("U4KIT_CACHE");
  return env ? env : "";
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_dim(const Options& opt) {
  std::cout << u4::dimension(u4::parse_irrep(opt.args[0])) << "\n";
  return 0;
}

int cmd_basis(const Options& opt) {
  Irrep f = u4::parse_irrep(opt.args[0]);
  std::vector<Pattern> pats = u4::carrier_space(f);
  if (opt.format == "json") {
    Json arr = Json::array();
    for (const Pattern& p : pats) {
      u4::Weight w = u4::p_weight(p);
      arr.push_back(Json{{"pattern", u4::to_string(p)},
                         {"p_weight", Json::array({w[0], w[1], w[2], w[3]})}});
    }
    emit(Json{{"irrep", u4::to_string(f)},
              {"dimension", pats.size()},
              {"states", std::move(arr)}});
    return 0;
  }
  if (opt.format == "csv") std::cout << "index,pattern,w4,w3,w2,w1\n";
  for (size_t i = 0; i < pats.size(); ++i) {
    u4::Weight w = u4::p_weight(pats[i]);
    if (opt.format == "csv")
      std::cout << i << ",\"" << u4::to_string(pats[i]) << "\"," << w[0] << ","
                << w[1] << "," << w[2] << "," << w[3] << "\n";
    else
      std::cout << pad(std::to_string(i), 6) << pad(u4::to_string(pats[i]), 34)
                << "w=(" << w[0] << "," << w[1] << "," << w[2] << "," << w[3]
                << ")\n";
  }
  return 0;
}

int cmd_decompose(const Options& opt) {
  Irrep f = u4::parse_irrep(opt.args[0]);
  Irrep fp = u4::parse_irrep(opt.args[1]);
  u4::Decomposition d = u4::decompose(f, fp);
  long long product = u4::dimension(f) * u4::dimension(fp);
  long long total = 0;
  for (const auto& [fpp, eta] : d) total += eta * u4::dimension(fpp);
  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& [fpp, eta] : d)
      arr.push_back(Json{{"fpp", u4::to_string(fpp)},
                         {"eta_max", eta},
                         {"dim", u4::dimension(fpp)}});
    emit(Json{{"f", u4::to_string(f)},
              {"fp", u4::to_string(fp)},
              {"couplings", std::move(arr)},
              {"dim_product", product},
              {"dim_sum", total}});
    return 0;
  }
  if (opt.format == "csv") std::cout << "fpp,eta_max,dim\n";
  for (const auto& [fpp, eta] : d) {
    if (opt.format == "csv")
      std::cout << u4::to_string(fpp) << "," << eta << ","
                << u4::dimension(fpp) << "\n";
    else
      std::cout << pad(u4::to_string(fpp), 12) << eta << "\n";
  }
  if (opt.format != "csv")
    std::cout << "conservation " << u4::dimension(f) << " x "
              << u4::dimension(fp) << " = " << product
              << (total == product ? " OK" : " MISMATCH") << "\n";
  return total == product ? 0 : 1;
}

u4::CgcTable cached_cgc(const Options& opt, const Irrep& f, const Irrep& fp,
                        const Irrep& fpp) {
  std::string root = cache_root(opt);
  std::string labels =
      u4::to_string(f) + "_" + u4::to_string(fp) + "_" + u4::to_string(fpp);
  if (!root.empty()) {
    auto doc = u4::load_json(u4::cache_path(root, "cgc", labels));
    if (doc) {
      u4::CgcTable t = u4::cgc_from_document(*doc);
      if (t.f == f && t.fp == fp && t.fpp == fpp) return t;
      throw std::invalid_argument("cached cgc document has wrong labels");
    }
  }
  u4::CgcTable t = u4::full_cgc(f, fp, fpp);
  if (!root.empty())
    u4::atomic_write(u4::cache_path(root, "cgc", labels),
                     u4::cgc_document(t, opt.tol).dump(2));
  return t;
}

int cmd_cgc(const Options& opt) {
  Irrep f = u4::parse_irrep(opt.args[0]);
  Irrep fp = u4::parse_irrep(opt.args[1]);
  Irrep fpp = u4::parse_irrep(opt.args[2]);
  u4::CgcTable t = cached_cgc(opt, f, fp, fpp);
  bool filter = !opt.weight.empty();
  std::array<int, 4> wf{};
  if (filter) wf = parse_weight(opt.weight);
  if (opt.format == "json") {
    if (!filter) {
      emit(u4::cgc_document(t, opt.tol));
      return 0;
    }
    u4::CgcTable sub = t;
    for (auto it = sub.shells.begin(); it != sub.shells.end();)
      it = it->first == wf ? std::next(it) : sub.shells.erase(it);
    emit(u4::cgc_document(sub, opt.tol));
    return 0;
  }
  if (opt.format == "csv") std::cout << "g,gp,gpp,eta,value\n";
  for (const auto& [w, sh] : t.shells) {
    if (filter && w != wf) continue;
    for (int e = 0; e < t.eta_max; ++e) {
      const Eigen::MatrixXd& x = sh.coef[static_cast<size_t>(e)];
      for (int s = 0; s < static_cast<int>(sh.states.size()); ++s)
        for (int c = 0; c < static_cast<int>(sh.pairs.size()); ++c) {
          if (x(s, c) == 0.0) continue;
          const auto& pr = sh.pairs[static_cast<size_t>(c)];
          std::string g = u4::to_string(t.carrier_f[static_cast<size_t>(pr.first)]);
          std::string gp =
              u4::to_string(t.carrier_fp[static_cast<size_t>(pr.second)]);
          std::string gpp = u4::to_string(sh.states[static_cast<size_t>(s)]);
          if (opt.format == "csv")
            std::cout << "\"" << g << "\",\"" << gp << "\",\"" << gpp << "\","
                      << e + 1 << "," << u4::format_real(x(s, c)) << "\n";
          else
            std::cout << pad(g, 32) << pad(gp, 32) << pad(gpp, 32) << e + 1
                      << "  " << u4::format_real(x(s, c)) << "\n";
        }
    }
  }
  return 0;
}

int cmd_st_pairs(const Options& opt) {
  Irrep f = u4::parse_irrep(opt.args[0]);
  u4::StPairs pairs = u4::allowed_st_pairs(f);
  bool ok = u4::st_dimension_check(f);
  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& [st, z] : pairs)
      arr.push_back(Json{{"S", u4::format_spin(st.first)},
                         {"T", u4::format_spin(st.second)},
                         {"S2", st.first},
                         {"T2", st.second},
                         {"zeta_max", z}});
    emit(Json{{"f", u4::to_string(f)},
              {"pairs", std::move(arr)},
              {"dimcheck", ok}});
    return ok ? 0 : 1;
  }
  if (opt.format == "csv") {
    std::cout << "S,T,zeta_max\n";
    for (const auto& [st, z] : pairs)
      std::cout << u4::format_spin(st.first) << "," << u4::format_spin(st.second)
                << "," << z << "\n";
  } else {
    for (const auto& [st, z] : pairs)
      std::cout << pad(u4::format_spin(st.first), 6)
                << pad(u4::format_spin(st.second), 6) << z << "\n";
    std::cout << "dimcheck " << (ok ? "OK" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

u4::ReducedGrid cached_wigner(const Options& opt, const Irrep& f,
                              const Irrep& fp, const Irrep& fpp, int s2,
                              int t2) {
  std::string root = cache_root(opt);
  std::string labels = u4::to_string(f) + "_" + u4::to_string(fp) + "_" +
                       u4::to_string(fpp) + "_" + std::to_string(s2) + "_" +
                       std::to_string(t2);
  if (!root.empty()) {
    auto doc = u4::load_json(u4::cache_path(root, "wigner-st", labels));
    if (doc) {
      Irrep df, dfp, dfpp;
      u4::ReducedGrid g = u4::wigner_from_document(*doc, df, dfp, dfpp);
      if (df == f && dfp == fp && dfpp == fpp && g.S2pp == s2 && g.T2pp == t2)
        return g;
      throw std::invalid_argument("cached wigner document has wrong labels");
    }
  }
  u4::CgcTable tab = cached_cgc(opt, f, fp, fpp);
  u4::ReducedGrid g = u4::reduced_wigner_st(tab, s2, t2);
  if (!root.empty())
    u4::atomic_write(u4::cache_path(root, "wigner-st", labels),
                     u4::wigner_document(f, fp, fpp, g, opt.tol).dump(2));
  return g;
}

int cmd_wigner(const Options& opt) {
  Irrep f = u4::parse_irrep(opt.args[0]);
  Irrep fp = u4::parse_irrep(opt.args[1]);
  Irrep fpp = u4::parse_irrep(opt.args[2]);
  auto [s2, t2] = parse_st(opt.st);
  if (u4::zeta_max(fpp, s2, t2) == 0)
    throw u4::coupling_error("wigner: (S,T) not allowed for " +
                             u4::to_string(fpp));
  u4::ReducedGrid grid = cached_wigner(opt, f, fp, fpp, s2, t2);
  if (opt.eta < 1 || opt.eta > static_cast<int>(grid.by_eta.size()))
    throw u4::coupling_error("wigner: eta out of range");
  if (opt.format == "json") {
    emit(u4::wigner_document(f, fp, fpp, grid, opt.tol));
    return 0;
  }
  const Eigen::MatrixXd& m = grid.by_eta[static_cast<size_t>(opt.eta - 1)];
  if (opt.format == "csv") {
    std::cout << "zeta,S,T,zetap,Sp,Tp";
    for (int z = 1; z <= grid.zetapp_max; ++z) std::cout << ",zpp" << z;
    std::cout << "\n";
    for (int r = 0; r < static_cast<int>(grid.rows.size()); ++r) {
      const auto& lb = grid.rows[static_cast<size_t>(r)];
      std::cout << lb.zeta << "," << u4::format_spin(lb.S2) << ","
                << u4::format_spin(lb.T2) << "," << lb.zetap << ","
                << u4::format_spin(lb.S2p) << "," << u4::format_spin(lb.T2p);
      for (int z = 0; z < grid.zetapp_max; ++z)
        std::cout << "," << u4::format_real(m(r, z));
      std::cout << "\n";
    }
    return 0;
  }
  std::cout << "reduced coefficients " << u4::to_string(f) << " x "
            << u4::to_string(fp) << " -> " << u4::to_string(fpp) << "  (S'',T'')=("
            << u4::format_spin(s2) << "," << u4::format_spin(t2)
            << ")  eta=" << opt.eta << "\n";
  std::cout << pad("zeta", 6) << pad("S", 5) << pad("T", 5) << pad("zeta'", 7)
            << pad("S'", 5) << pad("T'", 5);
  for (int z = 1; z <= grid.zetapp_max; ++z)
    std::cout << pad("zpp=" + std::to_string(z), 16);
  std::cout << "\n";
  for (int r = 0; r < static_cast<int>(grid.rows.size()); ++r) {
    const auto& lb = grid.rows[static_cast<size_t>(r)];
    std::cout << pad(std::to_string(lb.zeta), 6)
              << pad(u4::format_spin(lb.S2), 5) << pad(u4::format_spin(lb.T2), 5)
              << pad(std::to_string(lb.zetap), 7)
              << pad(u4::format_spin(lb.S2p), 5)
              << pad(u4::format_spin(lb.T2p), 5);
    for (int z = 0; z < grid.zetapp_max; ++z)
      std::cout << pad(u4::format_real(m(r, z)), 16);
    std::cout << "\n";
  }
  return 0;
}

int cmd_u6(const Options& opt, bool zform) {
  std::array<Irrep, 6> l;
  for (int i = 0; i < 6; ++i)
    l[static_cast<size_t>(i)] = u4::parse_irrep(opt.args[static_cast<size_t>(i)]);
  u4::RecouplingBlock blk =
      zform ? u4::z_coefficients(l[0], l[1], l[2], l[3], l[4], l[5])
            : u4::u_coefficients(l[0], l[1], l[2], l[3], l[4], l[5]);
  const char* alt = zform ? "eta13" : "eta23";
  const char* tot = zform ? "eta13_2" : "eta1_23";
  std::vector<std::array<int, 4>> keys;
  for (int e12 = 1; e12 <= blk.n12; ++e12)
    for (int e123 = 1; e123 <= blk.n123; ++e123)
      for (int ea = 1; ea <= blk.n_alt; ++ea)
        for (int et = 1; et <= blk.n_tot; ++et)
          keys.push_back({e12, e123, ea, et});
  if (opt.format == "json") {
    Json labels{{"f1", opt.args[0]}, {"f2", opt.args[1]}, {"f", opt.args[2]},
                {"f3", opt.args[3]}, {"f12", opt.args[4]},
                {zform ? "f13" : "f23", opt.args[5]}};
    Json rows = Json::array();
    std::vector<double> values;
    for (const auto& k : keys) {
      rows.push_back(Json::array({k[0], k[1], k[2], k[3]}));
      values.push_back(blk.at(k[0], k[1], k[2], k[3]));
    }
    Json ordering{{"rows", std::move(rows)},
                  {"row_labels", std::string("eta12,eta12_3,") + alt + "," + tot}};
    emit(u4::make_document(zform ? "z6" : "u6", std::move(labels),
                           std::move(ordering), std::move(values), opt.tol));
    return 0;
  }
  if (opt.format == "csv")
    std::cout << "eta12,eta12_3," << alt << "," << tot << ",value\n";
  for (const auto& k : keys) {
    double v = blk.at(k[0], k[1], k[2], k[3]);
    if (opt.format == "csv")
      std::cout << k[0] << "," << k[1] << "," << k[2] << "," << k[3] << ","
                << u4::format_real(v) << "\n";
    else
      std::cout << pad(std::to_string(k[0]), 6) << pad(std::to_string(k[1]), 8)
                << pad(std::to_string(k[2]), 6) << pad(std::to_string(k[3]), 8)
                << u4::format_real(v) << "\n";
  }
  return 0;
}

int cmd_nine(const Options& opt) {
  std::array<Irrep, 9> l;
  for (int i = 0; i < 9; ++i)
    l[static_cast<size_t>(i)] = u4::parse_irrep(opt.args[static_cast<size_t>(i)]);
  const Irrep &f1 = l[0], &f2 = l[1], &f3 = l[2], &f4 = l[3], &f12 = l[4],
              &f34 = l[5], &f13 = l[6], &f24 = l[7], &f = l[8];
  int n12 = u4::outer_multiplicity(f1, f2, f12);
  int n34 = u4::outer_multiplicity(f3, f4, f34);
  int n13 = u4::outer_multiplicity(f1, f3, f13);
  int n24 = u4::outer_multiplicity(f2, f4, f24);
  int na = u4::outer_multiplicity(f12, f34, f);
  int nb = u4::outer_multiplicity(f13, f24, f);
  if (!n12 || !n34 || !n13 || !n24 || !na || !nb)
    throw u4::coupling_error("nine: labels do not couple");
  std::vector<std::array<int, 6>> keys;
  std::vector<double> values;
  for (int e12 = 1; e12 <= n12; ++e12)
    for (int e34 = 1; e34 <= n34; ++e34)
      for (int e13 = 1; e13 <= n13; ++e13)
        for (int e24 = 1; e24 <= n24; ++e24)
          for (int ea = 1; ea <= na; ++ea)
            for (int eb = 1; eb <= nb; ++eb) {
              keys.push_back({e12, e34, e13, e24, ea, eb});
              values.push_back(u4::nine_u4(f1, f2, f12, e12, f3, f4, f34, e34,
                                           f13, e13, f24, e24, f, ea, eb));
            }
  if (opt.format == "json") {
    Json labels{{"f1", opt.args[0]},  {"f2", opt.args[1]}, {"f3", opt.args[2]},
                {"f4", opt.args[3]},  {"f12", opt.args[4]}, {"f34", opt.args[5]},
                {"f13", opt.args[6]}, {"f24", opt.args[7]}, {"f", opt.args[8]}};
    Json rows = Json::array();
    for (const auto& k : keys)
      rows.push_back(Json::array({k[0], k[1], k[2], k[3], k[4], k[5]}));
    Json ordering{{"rows", std::move(rows)},
                  {"row_labels", "eta12,eta34,eta13,eta24,eta12_34,eta13_24"}};
    emit(u4::make_document("nine", std::move(labels), std::move(ordering),
                           std::move(values), opt.tol));
    return 0;
  }
  if (opt.format == "csv")
    std::cout << "eta12,eta34,eta13,eta24,eta12_34,eta13_24,value\n";
  for (size_t i = 0; i < keys.size(); ++i) {
    const auto& k = keys[i];
    if (opt.format == "csv")
      std::cout << k[0] << "," << k[1] << "," << k[2] << "," << k[3] << ","
                << k[4] << "," << k[5] << "," << u4::format_real(values[i])
                << "\n";
    else
      std::cout << pad(std::to_string(k[0]), 6) << pad(std::to_string(k[1]), 6)
                << pad(std::to_string(k[2]), 6) << pad(std::to_string(k[3]), 6)
                << pad(std::to_string(k[4]), 9) << pad(std::to_string(k[5]), 9)
                << u4::format_real(values[i]) << "\n";
  }
  return 0;
}

struct Suite {
  std::string name;
  double residual;
  bool pass;
};

int cmd_check(const Options& opt) {
  std::vector<Suite> suites;
  auto add = [&](const std::string& name, double residual, double tol) {
    suites.push_back({name, residual, residual <= tol});
  };

  std::vector<Irrep> labels;
  for (int a = 0; a <= opt.max_n; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        for (int d = 0; d <= c; ++d) labels.push_back(Irrep{{a, b, c, d}});

  {  // dimension formula vs enumeration
    double worst = 0.0;
    for (const Irrep& f : labels)
      worst = std::max(worst,
                       std::abs(static_cast<double>(u4::dimension(f)) -
                                static_cast<double>(u4::carrier_space(f).size())));
    add("dimension", worst, 0.0);
  }
  {  // commutators and hermiticity on small irreps
    double worst = 0.0;
    for (const Irrep& f : labels) {
      if (u4::dimension(f) > 20 || f.sum() == 0) continue;
      std::vector<Pattern> basis = u4::carrier_space(f);
      std::map<std::pair<int, int>, Eigen::MatrixXd> mats;
      for (u4::Gen g : u4::all_generators())
        mats[{g.i, g.j}] = u4::generator_matrix(g, basis);
      for (const auto& [ij, m] : mats)
        worst = std::max(
            worst,
            (m - mats.at({ij.second, ij.first}).transpose()).cwiseAbs().maxCoeff());
      Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
      for (const auto& [ij, a] : mats)
        for (const auto& [mn, b] : mats) {
          Eigen::MatrixXd c = a * b - b * a;
          Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(dim, dim);
          if (ij.second == mn.first) expect += mats.at({ij.first, mn.second});
          if (ij.first == mn.second) expect -= mats.at({mn.first, ij.second});
          worst = std::max(worst, (c - expect).cwiseAbs().maxCoeff());
        }
    }
    add("generators", worst, 1e-10);
  }
  {  // su2 orthogonality
    double worst = 0.0;
    for (int j1 = 0; j1 <= 6; ++j1)
      for (int j2 = 0; j2 <= 6; ++j2)
        for (int m1 = -j1; m1 <= j1; m1 += 2)
          for (int m2 = -j2; m2 <= j2; m2 += 2)
            for (int m1b = -j1; m1b <= j1; m1b += 2) {
              int m2b = m1 + m2 - m1b;
              if (std::abs(m2b) > j2) continue;
              double s = 0.0;
              for (int J = std::abs(j1 - j2); J <= j1 + j2; J += 2)
                s += u4::su2_cgc(j1, m1, j2, m2, J, m1 + m2) *
                     u4::su2_cgc(j1, m1b, j2, m2b, J, m1 + m2);
              double expect = (m1 == m1b) ? 1.0 : 0.0;
              worst = std::max(worst, std::abs(s - expect));
            }
    add("su2", worst, 1e-12);
  }
  {  // canonical CGC orthogonality + equivariance on the fundamental square
    Irrep fund{{1, 0, 0, 0}};
    std::vector<u4::CgcTable> tabs;
    for (const auto& [fpp, eta] : u4::decompose(fund, fund))
      tabs.push_back(u4::full_cgc(fund, fund, fpp));
    std::vector<const u4::CgcTable*> ptrs;
    for (const auto& t : tabs) ptrs.push_back(&t);
    auto [r1, r2] = u4::orthogonality_residuals(ptrs);
    double eq = 0.0;
    for (const auto& t : tabs) eq = std::max(eq, u4::equivariance_residual(t));
    add("cgc-orthogonality", std::max(r1, r2), 1e-10);
    add("cgc-equivariance", eq, 1e-9);
  }
  {  // inner multiplicity formula vs projection null space
    double worst = 0.0;
    for (const Irrep& f : labels) {
      if (f.sum() > opt.max_n || f.sum() == 0) continue;
      if (!u4::st_dimension_check(f)) worst = std::max(worst, 1.0);
      for (const auto& [st, z] : u4::allowed_st_pairs(f)) {
        std::vector<Pattern> tpl = u4::st_template(f, st.first, st.second);
        Eigen::MatrixXd ns = u4::null_space(u4::st_projection(tpl));
        worst = std::max(worst, std::abs(static_cast<double>(ns.cols() - z)));
      }
    }
    add("inner-multiplicity", worst, 0.0);
  }
  {  // recoupling orthogonality on fundamentals
    Irrep fund{{1, 0, 0, 0}};
    double worst = 0.0;
    std::set<Irrep> totals;
    for (const auto& [f12, e12] : u4::decompose(fund, fund))
      for (const auto& [f, ef] : u4::decompose(f12, fund)) totals.insert(f);
    for (const Irrep& f : totals) {
      std::vector<Irrep> f23s, f12s;
      for (const auto& [f23, e23] : u4::decompose(fund, fund))
        if (u4::outer_multiplicity(fund, f23, f)) f23s.push_back(f23);
      for (const auto& [g12, g] : u4::decompose(fund, fund))
        if (u4::outer_multiplicity(g12, fund, f)) f12s.push_back(g12);
      Eigen::MatrixXd big(static_cast<Eigen::Index>(f12s.size()),
                          static_cast<Eigen::Index>(f23s.size()));
      for (size_t a = 0; a < f12s.size(); ++a)
        for (size_t b = 0; b < f23s.size(); ++b)
          big(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
              u4::u_coefficients(fund, fund, f, fund, f12s[a], f23s[b])
                  .at(1, 1, 1, 1);
      Eigen::MatrixXd gram = big * big.transpose();
      gram.diagonal().array() -= 1.0;
      worst = std::max(worst, gram.cwiseAbs().maxCoeff());
    }
    add("recoupling-orthogonality", worst, 1e-9);
  }
  std::string root = cache_root(opt);
  if (!root.empty() && std::filesystem::exists(root)) {
    // validate every cached document against its own consistency relations
    double worst = 0.0;
    for (const auto& entry :
         std::filesystem::recursive_directory_iterator(root)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".json")
        continue;
      try {
        auto doc = u4::load_json(entry.path());
        if (!doc) continue;
        std::string kind = doc->at("kind").get<std::string>();
        if (kind == "cgc") {
          u4::CgcTable t = u4::cgc_from_document(*doc);
          auto [r1, r2] = u4::orthogonality_residuals({&t});
          worst = std::max(worst, r1);
          worst = std::max(worst, u4::equivariance_residual(t));
        } else if (kind == "wigner-st") {
          Irrep f, fp, fpp;
          u4::ReducedGrid g = u4::wigner_from_document(*doc, f, fp, fpp);
          for (const Eigen::MatrixXd& m : g.by_eta) {
            Eigen::MatrixXd gram = m.transpose() * m;
            gram.diagonal().array() -= 1.0;
            worst = std::max(worst, gram.cwiseAbs().maxCoeff());
          }
        }
      } catch (const std::exception&) {
        worst = std::max(worst, 1.0);
      }
    }
    add("cache-integrity", worst, 1e-9);
  }

  bool all = true;
  for (const Suite& s : suites) {
    std::cout << pad(s.name, 26) << "max residual " << u4::format_real(s.residual)
              << "  " << (s.pass ? "PASS" : "FAIL") << "\n";
    all = all && s.pass;
  }
  std::cout << (all ? "check OK" : "check FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"U(4) supermultiplet coupling and recoupling coefficients"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--tol", opt.tol, "numerical tolerance");
  app.add_option("--cache", opt.cache, "cache directory (or U4KIT_CACHE)");

  auto positionals = [&](CLI::App* sub, int count) {
    sub->add_option("labels", opt.args, "irrep labels n14.n24.n34.n44")
        ->expected(count);
  };
  CLI::App* dim = app.add_subcommand("dim", "irrep dimension");
  positionals(dim, 1);
  CLI::App* basis = app.add_subcommand("basis", "carrier-space patterns");
  positionals(basis, 1);
  CLI::App* dec = app.add_subcommand("decompose", "tensor-product decomposition");
  positionals(dec, 2);
  CLI::App* cgc = app.add_subcommand("cgc", "canonical coupling coefficients");
  positionals(cgc, 3);
  cgc->add_option("--weight", opt.weight, "only the shell with p-weight w4,w3,w2,w1");
  CLI::App* stp = app.add_subcommand("st-pairs", "allowed (S,T) content");
  positionals(stp, 1);
  CLI::App* wig = app.add_subcommand("wigner", "reduced physical-basis coefficients");
  positionals(wig, 3);
  wig->add_option("--ST", opt.st, "target (S,T), e.g. 7/2,7/2")->required();
  wig->add_option("--eta", opt.eta, "outer multiplicity index");
  CLI::App* u6 = app.add_subcommand("u6", "U recoupling block: f1 f2 f f3 f12 f23");
  positionals(u6, 6);
  CLI::App* z6 = app.add_subcommand("z6", "Z recoupling block: f2 f1 f f3 f12 f13");
  positionals(z6, 6);
  CLI::App* nine = app.add_subcommand(
      "nine", "9-U(4) block: f1 f2 f3 f4 f12 f34 f13 f24 f");
  positionals(nine, 9);
  CLI::App* check = app.add_subcommand("check", "run the validation suites");
  check->add_option("--max-n", opt.max_n, "bound on total boxes / row label");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (dim->parsed()) return cmd_dim(opt);
    if (basis->parsed()) return cmd_basis(opt);
    if (dec->parsed()) return cmd_decompose(opt);
    if (cgc->parsed()) return cmd_cgc(opt);
    if (stp->parsed()) return cmd_st_pairs(opt);
    if (wig->parsed()) return cmd_wigner(opt);
    if (u6->parsed()) return cmd_u6(opt, false);
    if (z6->parsed()) return cmd_u6(opt, true);
    if (nine->parsed()) return cmd_nine(opt);
    if (check->parsed()) return cmd_check(opt);
  } catch (const u4::coupling_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
