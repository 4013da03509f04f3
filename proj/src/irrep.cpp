#include "u4kit/irrep.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <tuple>

namespace u4 {

bool Pattern::valid() const {
  const auto& p = v;
  if (p[N14] < p[N13] || p[N13] < p[N24] || p[N24] < p[N23] ||
      p[N23] < p[N34] || p[N34] < p[N33] || p[N33] < p[N44])
    return false;
  if (p[N13] < p[N12] || p[N12] < p[N23] || p[N23] < p[N22] || p[N22] < p[N33])
    return false;
  if (p[N12] < p[N11] || p[N11] < p[N22]) return false;
  return p[N44] >= 0;
}

long long dimension(const Irrep& f) {
  if (!f.valid()) throw std::invalid_argument("dimension: invalid irrep label");
  long long a = f[0], b = f[1], c = f[2], d = f[3];
  return (1 + a - b) * (2 + a - c) * (3 + a - d) * (1 + b - c) * (2 + b - d) *
         (1 + c - d) / 12;
}

Weight p_weight(const Pattern& p) {
  int n = p[N14] + p[N24] + p[N34] + p[N44];
  int r3 = p[N13] + p[N23] + p[N33];
  int r2 = p[N12] + p[N22];
  int w1 = p[N11];
  return Weight{n - r3, r3 - r2, r2 - w1, w1};
}

std::array<int, 3> z_weight(const Pattern& p) {
  return {p[N13] + p[N23] + p[N33], p[N12] + p[N22], p[N11]};
}

Pattern highest_weight(const Irrep& f) {
  Pattern p;
  p[N14] = f[0];
  p[N24] = f[1];
  p[N34] = f[2];
  p[N44] = f[3];
  p[N13] = f[0];
  p[N23] = f[1];
  p[N33] = f[2];
  p[N12] = f[0];
  p[N22] = f[1];
  p[N11] = f[0];
  return p;
}

bool canonical_less(const Pattern& a, const Pattern& b) {
  Weight wa = p_weight(a), wb = p_weight(b);
  int ga = wa[3] + wa[2] + wa[1], gb = wb[3] + wb[2] + wb[1];
  auto key = [](const Pattern& p, const Weight& w, int g) {
    return std::make_tuple(-g, w[1], w[2], -p[N13], -p[N23], -p[N33], -p[N12],
                           -p[N22], -p[N11]);
  };
  return key(a, wa, ga) < key(b, wb, gb);
}

std::vector<Pattern> carrier_space(const Irrep& f) {
  if (!f.valid())
    throw std::invalid_argument("carrier_space: invalid irrep label");
  std::vector<Pattern> out;
  out.reserve(static_cast<size_t>(dimension(f)));
  Pattern p;
  p[N14] = f[0];
  p[N24] = f[1];
  p[N34] = f[2];
  p[N44] = f[3];
  for (int n13 = f[1]; n13 <= f[0]; ++n13)
    for (int n23 = f[2]; n23 <= f[1]; ++n23)
      for (int n33 = f[3]; n33 <= f[2]; ++n33)
        for (int n12 = n23; n12 <= n13; ++n12)
          for (int n22 = n33; n22 <= n23; ++n22)
            for (int n11 = n22; n11 <= n12; ++n11) {
              p[N13] = n13;
              p[N23] = n23;
              p[N33] = n33;
              p[N12] = n12;
              p[N22] = n22;
              p[N11] = n11;
              out.push_back(p);
            }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::string to_string(const Irrep& f) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d.%d.%d.%d", f[0], f[1], f[2], f[3]);
  return buf;
}

std::string to_string(const Pattern& p) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "[%d,%d,%d,%d|%d,%d,%d|%d,%d|%d]", p[N14],
                p[N24], p[N34], p[N44], p[N13], p[N23], p[N33], p[N12], p[N22],
                p[N11]);
  return buf;
}

namespace {

std::vector<int> parse_ints(const std::string& s, char sep) {
  std::vector<int> out;
  size_t i = 0;
  while (i <= s.size()) {
    size_t j = s.find(sep, i);
    if (j == std::string::npos) j = s.size();
    std::string tok = s.substr(i, j - i);
    if (tok.empty() || tok.find_first_not_of("-0123456789") != std::string::npos)
      throw std::invalid_argument("malformed integer list: " + s);
    out.push_back(std::stoi(tok));
    i = j + 1;
    if (j == s.size()) break;
  }
  return out;
}

}  // namespace

Irrep parse_irrep(const std::string& s) {
  auto xs = parse_ints(s, '.');
  if (xs.size() != 4)
    throw std::invalid_argument("irrep label needs four parts: " + s);
  Irrep f{{xs[0], xs[1], xs[2], xs[3]}};
  if (!f.valid())
    throw std::invalid_argument("irrep label not non-increasing non-negative: " + s);
  return f;
}

Pattern parse_pattern(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("pattern needs [..|..|..|..] form: " + s);
  std::string body = s.substr(1, s.size() - 2);
  std::vector<std::vector<int>> rows;
  size_t i = 0;
  while (true) {
    size_t j = body.find('|', i);
    std::string row = body.substr(i, j == std::string::npos ? j : j - i);
    rows.push_back(parse_ints(row, ','));
    if (j == std::string::npos) break;
    i = j + 1;
  }
  if (rows.size() != 4 || rows[0].size() != 4 || rows[1].size() != 3 ||
      rows[2].size() != 2 || rows[3].size() != 1)
    throw std::invalid_argument("pattern rows must have sizes 4,3,2,1: " + s);
  Pattern p;
  p[N14] = rows[0][0];
  p[N24] = rows[0][1];
  p[N34] = rows[0][2];
  p[N44] = rows[0][3];
  p[N13] = rows[1][0];
  p[N23] = rows[1][1];
  p[N33] = rows[1][2];
  p[N12] = rows[2][0];
  p[N22] = rows[2][1];
  p[N11] = rows[3][0];
  if (!p.valid())
    throw std::invalid_argument("pattern violates betweenness: " + s);
  return p;
}

}  // namespace u4
