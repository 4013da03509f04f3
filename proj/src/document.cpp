#include "u4kit/document.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "u4kit/numerics.hpp"

namespace u4 {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string format_spin(int x2) {
  char buf[24];
  if (x2 % 2)
    std::snprintf(buf, sizeof buf, "%d/2", x2);
  else
    std::snprintf(buf, sizeof buf, "%d", x2 / 2);
  return buf;
}

int parse_spin(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty spin");
  size_t slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      int num = std::stoi(s.substr(0, slash));
      int den = std::stoi(s.substr(slash + 1));
      if (den == 2) return num;
      if (den == 1) return 2 * num;
      throw std::invalid_argument("");
    }
    if (s.find('.') != std::string::npos) {
      double v = std::stod(s);
      double doubled = v * 2.0;
      int r = static_cast<int>(std::lround(doubled));
      if (std::abs(doubled - r) > 1e-9) throw std::invalid_argument("");
      return r;
    }
    return 2 * std::stoi(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed spin: " + s);
  }
}

Json make_document(const std::string& kind, Json labels, Json ordering,
                   std::vector<double> values, double tol) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["convention"] = kConvention;
  doc["kind"] = kind;
  doc["labels"] = std::move(labels);
  doc["ordering"] = std::move(ordering);
  doc["values"] = std::move(values);
  doc["tolerances"] = Json::object({{"null_space", kNullSpaceTol}, {"tol", tol}});
  return doc;
}

Json cgc_document(const CgcTable& t, double tol) {
  Json shells = Json::array();
  std::vector<double> values;
  for (const auto& [w, sh] : t.shells) {
    Json jsh;
    jsh["weight"] = Json::array({w[0], w[1], w[2], w[3]});
    Json states = Json::array();
    for (const Pattern& p : sh.states) states.push_back(to_string(p));
    jsh["states"] = std::move(states);
    Json pairs = Json::array();
    for (const auto& [a, b] : sh.pairs) pairs.push_back(Json::array({a, b}));
    jsh["pairs"] = std::move(pairs);
    shells.push_back(std::move(jsh));
    for (const Eigen::MatrixXd& x : sh.coef)
      for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) values.push_back(x(i, j));
  }
  Json labels{{"f", to_string(t.f)},
              {"fp", to_string(t.fp)},
              {"fpp", to_string(t.fpp)},
              {"eta_max", t.eta_max}};
  Json ordering = Json::object(
      {{"shells", std::move(shells)},
       {"value_layout", "per shell: eta-major, then states, then pairs"}});
  return make_document("cgc", std::move(labels), std::move(ordering),
                       std::move(values), tol);
}

CgcTable cgc_from_document(const Json& doc) {
  if (doc.at("kind").get<std::string>() != "cgc" ||
      doc.at("convention").get<std::string>() != kConvention)
    throw std::invalid_argument("cgc_from_document: wrong kind or convention");
  CgcTable t;
  t.f = parse_irrep(doc.at("labels").at("f").get<std::string>());
  t.fp = parse_irrep(doc.at("labels").at("fp").get<std::string>());
  t.fpp = parse_irrep(doc.at("labels").at("fpp").get<std::string>());
  t.eta_max = doc.at("labels").at("eta_max").get<int>();
  t.carrier_f = carrier_space(t.f);
  t.carrier_fp = carrier_space(t.fp);
  t.carrier_fpp = carrier_space(t.fpp);
  const Json& values = doc.at("values");
  size_t vi = 0;
  for (const Json& jsh : doc.at("ordering").at("shells")) {
    Weight w{jsh.at("weight").at(0).get<int>(), jsh.at("weight").at(1).get<int>(),
             jsh.at("weight").at(2).get<int>(), jsh.at("weight").at(3).get<int>()};
    CgcShell sh;
    for (const Json& js : jsh.at("states"))
      sh.states.push_back(parse_pattern(js.get<std::string>()));
    for (const Json& jp : jsh.at("pairs"))
      sh.pairs.emplace_back(jp.at(0).get<int>(), jp.at(1).get<int>());
    for (int i = 0; i < static_cast<int>(sh.pairs.size()); ++i)
      sh.pair_index[sh.pairs[static_cast<size_t>(i)]] = i;
    Eigen::Index ns = static_cast<Eigen::Index>(sh.states.size());
    Eigen::Index np = static_cast<Eigen::Index>(sh.pairs.size());
    for (int e = 0; e < t.eta_max; ++e) {
      Eigen::MatrixXd x(ns, np);
      for (Eigen::Index i = 0; i < ns; ++i)
        for (Eigen::Index j = 0; j < np; ++j) {
          if (vi >= values.size())
            throw std::invalid_argument("cgc_from_document: truncated values");
          x(i, j) = values.at(vi++).get<double>();
        }
      sh.coef.push_back(std::move(x));
    }
    t.shells[w] = std::move(sh);
  }
  if (vi != values.size())
    throw std::invalid_argument("cgc_from_document: extra values");
  size_t total = 0;
  for (const auto& [w, sh] : t.shells) total += sh.states.size();
  if (total != static_cast<size_t>(dimension(t.fpp)))
    throw std::invalid_argument("cgc_from_document: incomplete shell set");
  return t;
}

Json wigner_document(const Irrep& f, const Irrep& fp, const Irrep& fpp,
                     const ReducedGrid& grid, double tol) {
  Json rows = Json::array();
  for (const ReducedRowLabel& r : grid.rows)
    rows.push_back(Json::array({r.zeta, r.S2, r.T2, r.zetap, r.S2p, r.T2p}));
  std::vector<double> values;
  for (const Eigen::MatrixXd& m : grid.by_eta)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) values.push_back(m(i, j));
  Json labels{{"f", to_string(f)},        {"fp", to_string(fp)},
              {"fpp", to_string(fpp)},    {"S2pp", grid.S2pp},
              {"T2pp", grid.T2pp},        {"zetapp_max", grid.zetapp_max},
              {"eta_max", static_cast<int>(grid.by_eta.size())}};
  Json ordering{{"rows", std::move(rows)},
                {"row_labels", "zeta,2S,2T,zeta',2S',2T'"},
                {"value_layout", "eta-major, then rows, then zeta''"}};
  return make_document("wigner-st", std::move(labels), std::move(ordering),
                       std::move(values), tol);
}

ReducedGrid wigner_from_document(const Json& doc, Irrep& f, Irrep& fp,
                                 Irrep& fpp) {
  if (doc.at("kind").get<std::string>() != "wigner-st" ||
      doc.at("convention").get<std::string>() != kConvention)
    throw std::invalid_argument("wigner_from_document: wrong kind or convention");
  f = parse_irrep(doc.at("labels").at("f").get<std::string>());
  fp = parse_irrep(doc.at("labels").at("fp").get<std::string>());
  fpp = parse_irrep(doc.at("labels").at("fpp").get<std::string>());
  ReducedGrid grid;
  grid.S2pp = doc.at("labels").at("S2pp").get<int>();
  grid.T2pp = doc.at("labels").at("T2pp").get<int>();
  grid.zetapp_max = doc.at("labels").at("zetapp_max").get<int>();
  int eta_max = doc.at("labels").at("eta_max").get<int>();
  for (const Json& jr : doc.at("ordering").at("rows"))
    grid.rows.push_back({jr.at(0).get<int>(), jr.at(1).get<int>(),
                         jr.at(2).get<int>(), jr.at(3).get<int>(),
                         jr.at(4).get<int>(), jr.at(5).get<int>()});
  const Json& values = doc.at("values");
  size_t vi = 0;
  for (int e = 0; e < eta_max; ++e) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(grid.rows.size()),
                      grid.zetapp_max);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (vi >= values.size())
          throw std::invalid_argument("wigner_from_document: truncated values");
        m(i, j) = values.at(vi++).get<double>();
      }
    grid.by_eta.push_back(std::move(m));
  }
  if (vi != values.size())
    throw std::invalid_argument("wigner_from_document: extra values");
  return grid;
}

std::filesystem::path cache_path(const std::string& root,
                                 const std::string& kind,
                                 const std::string& labels) {
  return std::filesystem::path(root) / kind / labels /
         (std::string(kConvention) + ".json");
}

void atomic_write(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

std::optional<Json> load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded())
    throw std::invalid_argument("malformed JSON: " + path.string());
  return doc;
}

}  // namespace u4
