#include "u4kit/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace u4 {

namespace {

// Matrix-element factor p[a]-p[b]+k of the pattern-entry differences.
struct Factor {
  int a, b, k;
};

// One shift term of a generator action: bump the listed entries by +/-1 and
// scale by sign*sqrt(prod(num)/prod(den)). A non-positive numerator factor
// kills the term before the denominator is ever evaluated.
struct TermSpec {
  std::vector<int> shifts;
  int sign;
  std::vector<Factor> num;
  std::vector<Factor> den;
};

using Terms = std::vector<TermSpec>;

const Terms& raising_terms(int i, int j) {
  static const Terms r12 = {
      {{N11}, 1, {{N12, N11, 0}, {N11, N22, 1}}, {}},
  };
  static const Terms r23 = {
      {{N12},
       1,
       {{N13, N12, 0}, {N12, N23, 1}, {N12, N33, 2}, {N12, N11, 1}},
       {{N12, N22, 2}, {N12, N22, 1}}},
      {{N22},
       1,
       {{N13, N22, 1}, {N23, N22, 0}, {N22, N33, 1}, {N11, N22, 0}},
       {{N12, N22, 1}, {N12, N22, 0}}},
  };
  static const Terms r13 = {
      {{N12, N11},
       1,
       {{N13, N12, 0}, {N12, N23, 1}, {N12, N33, 2}, {N11, N22, 1}},
       {{N12, N22, 2}, {N12, N22, 1}}},
      {{N22, N11},
       -1,
       {{N13, N22, 1}, {N23, N22, 0}, {N22, N33, 1}, {N12, N11, 0}},
       {{N12, N22, 1}, {N12, N22, 0}}},
  };
  static const Terms r34 = {
      {{N13},
       1,
       {{N14, N13, 0},
        {N13, N24, 1},
        {N13, N34, 2},
        {N13, N44, 3},
        {N13, N12, 1},
        {N13, N22, 2}},
       {{N13, N23, 2}, {N13, N23, 1}, {N13, N33, 3}, {N13, N33, 2}}},
      {{N23},
       1,
       {{N14, N23, 1},
        {N24, N23, 0},
        {N23, N34, 1},
        {N23, N44, 2},
        {N12, N23, 0},
        {N23, N22, 1}},
       {{N13, N23, 1}, {N13, N23, 0}, {N23, N33, 2}, {N23, N33, 1}}},
      {{N33},
       1,
       {{N14, N33, 2},
        {N24, N33, 1},
        {N34, N33, 0},
        {N33, N44, 1},
        {N12, N33, 1},
        {N22, N33, 0}},
       {{N13, N33, 2}, {N13, N33, 1}, {N23, N33, 1}, {N23, N33, 0}}},
  };
  static const Terms r24 = {
      {{N13, N12},
       1,
       {{N14, N13, 0},
        {N13, N24, 1},
        {N13, N34, 2},
        {N13, N44, 3},
        {N12, N23, 1},
        {N12, N33, 2},
        {N13, N22, 2},
        {N12, N11, 1}},
       {{N13, N23, 2},
        {N13, N23, 1},
        {N13, N33, 3},
        {N13, N33, 2},
        {N12, N22, 2},
        {N12, N22, 1}}},
      {{N13, N22},
       1,
       {{N14, N13, 0},
        {N13, N24, 1},
        {N13, N34, 2},
        {N13, N44, 3},
        {N23, N22, 0},
        {N22, N33, 1},
        {N13, N12, 1},
        {N11, N22, 0}},
       {{N13, N23, 2},
        {N13, N23, 1},
        {N13, N33, 3},
        {N13, N33, 2},
        {N12, N22, 1},
        {N12, N22, 0}}},
      {{N23, N12},
       -1,
       {{N14, N23, 1},
        {N24, N23, 0},
        {N23, N34, 1},
        {N23, N44, 2},
        {N13, N12, 0},
        {N12, N33, 2},
        {N23, N22, 1},
        {N12, N11, 1}},
       {{N13, N23, 1},
        {N13, N23, 0},
        {N23, N33, 2},
        {N23, N33, 1},
        {N12, N22, 2},
        {N12, N22, 1}}},
      {{N23, N22},
       1,
       {{N14, N23, 1},
        {N24, N23, 0},
        {N23, N34, 1},
        {N23, N44, 2},
        {N13, N22, 1},
        {N22, N33, 1},
        {N12, N23, 0},
        {N11, N22, 0}},
       {{N13, N23, 1},
        {N13, N23, 0},
        {N23, N33, 2},
        {N23, N33, 1},
        {N12, N22, 1},
        {N12, N22, 0}}},
      {{N33, N12},
       -1,
       {{N14, N33, 2},
        {N24, N33, 1},
        {N34, N33, 0},
        {N33, N44, 1},
        {N13, N12, 0},
        {N12, N23, 1},
        {N22, N33, 0},
        {N12, N11, 1}},
       {{N13, N33, 2},
        {N13, N33, 1},
        {N23, N33, 1},
        {N23, N33, 0},
        {N12, N22, 2},
        {N12, N22, 1}}},
      {{N33, N22},
       -1,
       {{N14, N33, 2},
        {N24, N33, 1},
        {N34, N33, 0},
        {N33, N44, 1},
        {N13, N22, 1},
        {N23, N22, 0},
        {N12, N33, 1},
        {N11, N22, 0}},
       {{N13, N33, 2},
        {N13, N33, 1},
        {N23, N33, 1},
        {N23, N33, 0},
        {N12, N22, 1},
        {N12, N22, 0}}},
  };
  static const Terms r14 = {
      {{N13, N12, N11},
       1,
       {{N14, N13, 0},
        {N13, N24, 1},
        {N13, N34, 2},
        {N13, N44, 3},
        {N12, N23, 1},
        {N12, N33, 2},
        {N13, N22, 2},
        {N11, N22, 1}},
       {{N13, N23, 2},
        {N13, N23, 1},
        {N13, N33, 3},
        {N13, N33, 2},
        {N12, N22, 2},
        {N12, N22, 1}}},
      {{N13, N22, N11},
       -1,
       {{N14, N13, 0},
        {N13, N24, 1},
        {N13, N34, 2},
        {N13, N44, 3},
        {N23, N22, 0},
        {N22, N33, 1},
        {N13, N12, 1},
        {N12, N11, 0}},
       {{N13, N23, 2},
        {N13, N23, 1},
        {N13, N33, 3},
        {N13, N33, 2},
        {N12, N22, 1},
        {N12, N22, 0}}},
      {{N23, N12, N11},
       -1,
       {{N14, N23, 1},
        {N24, N23, 0},
        {N23, N34, 1},
        {N23, N44, 2},
        {N13, N12, 0},
        {N12, N33, 2},
        {N23, N22, 1},
        {N11, N22, 1}},
       {{N13, N23, 1},
        {N13, N23, 0},
        {N23, N33, 2},
        {N23, N33, 1},
        {N12, N22, 2},
        {N12, N22, 1}}},
      {{N23, N22, N11},
       -1,
       {{N14, N23, 1},
        {N24, N23, 0},
        {N23, N34, 1},
        {N23, N44, 2},
        {N13, N22, 1},
        {N22, N33, 1},
        {N12, N23, 0},
        {N12, N11, 0}},
       {{N13, N23, 1},
        {N13, N23, 0},
        {N23, N33, 2},
        {N23, N33, 1},
        {N12, N22, 1},
        {N12, N22, 0}}},
      {{N33, N12, N11},
       -1,
       {{N14, N33, 2},
        {N24, N33, 1},
        {N34, N33, 0},
        {N33, N44, 1},
        {N13, N12, 0},
        {N12, N23, 1},
        {N22, N33, 0},
        {N11, N22, 1}},
       {{N13, N33, 2},
        {N13, N33, 1},
        {N23, N33, 1},
        {N23, N33, 0},
        {N12, N22, 2},
        {N12, N22, 1}}},
      {{N33, N22, N11},
       1,
       {{N14, N33, 2},
        {N24, N33, 1},
        {N34, N33, 0},
        {N33, N44, 1},
        {N13, N22, 1},
        {N23, N22, 0},
        {N12, N33, 1},
        {N12, N11, 0}},
       {{N13, N33, 2},
        {N13, N33, 1},
        {N23, N33, 1},
        {N23, N33, 0},
        {N12, N22, 1},
        {N12, N22, 0}}},
  };
  if (i == 1 && j == 2) return r12;
  if (i == 2 && j == 3) return r23;
  if (i == 1 && j == 3) return r13;
  if (i == 3 && j == 4) return r34;
  if (i == 2 && j == 4) return r24;
  if (i == 1 && j == 4) return r14;
  throw std::invalid_argument("raising_terms: bad generator");
}

const Terms& lowering_terms(int i, int j) {
  static const Terms l21 = {
      {{N11}, 1, {{N12, N11, 1}, {N11, N22, 0}}, {}},
  };
  static const Terms l32 = {
      {{N12},
       1,
       {{N13, N12, 1}, {N12, N23, 0}, {N12, N33, 1}, {N12, N11, 0}},
       {{N12, N22, 1}, {N12, N22, 0}}},
      {{N22},
       1,
       {{N13, N22, 2}, {N23, N22, 1}, {N22, N33, 0}, {N11, N22, 1}},
       {{N12, N22, 2}, {N12, N22, 1}}},
  };
  static const Terms l31 = {
      {{N12, N11},
       1,
       {{N13, N12, 1}, {N12, N23, 0}, {N12, N33, 1}, {N11, N22, 0}},
       {{N12, N22, 1}, {N12, N22, 0}}},
      {{N22, N11},
       -1,
       {{N13, N22, 2}, {N23, N22, 1}, {N22, N33, 0}, {N12, N11, 1}},
       {{N12, N22, 2}, {N12, N22, 1}}},
  };
  static const Terms l43 = {
      {{N13},
       1,
       {{N14, N13, 1},
        {N13, N24, 0},
        {N13, N34, 1},
        {N13, N44, 2},
        {N13, N12, 0},
        {N13, N22, 1}},
       {{N13, N23, 1}, {N13, N23, 0}, {N13, N33, 2}, {N13, N33, 1}}},
      {{N23},
       1,
       {{N14, N23, 2},
        {N24, N23, 1},
        {N23, N34, 0},
        {N23, N44, 1},
        {N12, N23, 1},
        {N23, N22, 0}},
       {{N13, N23, 2}, {N13, N23, 1}, {N23, N33, 1}, {N23, N33, 0}}},
      {{N33},
       1,
       {{N14, N33, 3},
        {N24, N33, 2},
        {N34, N33, 1},
        {N33, N44, 0},
        {N12, N33, 2},
        {N22, N33, 1}},
       {{N13, N33, 3}, {N13, N33, 2}, {N23, N33, 2}, {N23, N33, 1}}},
  };
  static const Terms l42 = {
      {{N13, N12},
       1,
       {{N14, N13, 1},
        {N13, N24, 0},
        {N13, N34, 1},
        {N13, N44, 2},
        {N12, N23, 0},
        {N12, N33, 1},
        {N13, N22, 1},
        {N12, N11, 0}},
       {{N13, N23, 1},
        {N13, N23, 0},
        {N13, N33, 2},
        {N13, N33, 1},
        {N12, N22, 1},
        {N12, N22, 0}}},
      {{N13, N22},
       1,
       {{N14, N13, 1},
        {N13, N24, 0},
        {N13, N34, 1},
        {N13, N44, 2},
        {N23, N22, 1},
        {N22, N33, 0},
        {N13, N12, 0},
        {N11, N22, 1}},
       {{N13, N23, 1},
        {N13, N23, 0},
        {N13, N33, 2},
        {N13, N33, 1},
        {N12, N22, 2},
        {N12, N22, 1}}},
      {{N23, N12},
       -1,
       {{N14, N23, 2},
        {N24, N23, 1},
        {N23, N34, 0},
        {N23, N44, 1},
        {N13, N12, 1},
        {N12, N33, 1},
        {N23, N22, 0},
        {N12, N11, 0}},
       {{N13, N23, 2},
        {N13, N23, 1},
        {N23, N33, 1},
        {N23, N33, 0},
        {N12, N22, 1},
        {N12, N22, 0}}},
      {{N23, N22},
       1,
       {{N14, N23, 2},
        {N24, N23, 1},
        {N23, N34, 0},
        {N23, N44, 1},
        {N13, N22, 2},
        {N22, N33, 0},
        {N12, N23, 1},
        {N11, N22, 1}},
       {{N13, N23, 2},
        {N13, N23, 1},
        {N23, N33, 1},
        {N23, N33, 0},
        {N12, N22, 2},
        {N12, N22, 1}}},
      {{N33, N12},
       -1,
       {{N14, N33, 3},
        {N24, N33, 2},
        {N34, N33, 1},
        {N33, N44, 0},
        {N13, N12, 1},
        {N12, N23, 0},
        {N22, N33, 1},
        {N12, N11, 0}},
       {{N13, N33, 3},
        {N13, N33, 2},
        {N23, N33, 2},
        {N23, N33, 1},
        {N12, N22, 1},
        {N12, N22, 0}}},
      {{N33, N22},
       -1,
       {{N14, N33, 3},
        {N24, N33, 2},
        {N34, N33, 1},
        {N33, N44, 0},
        {N13, N22, 2},
        {N23, N22, 1},
        {N12, N33, 2},
        {N11, N22, 1}},
       {{N13, N33, 3},
        {N13, N33, 2},
        {N23, N33, 2},
        {N23, N33, 1},
        {N12, N22, 2},
        {N12, N22, 1}}},
  };
  static const Terms l41 = {
      {{N13, N12, N11},
       1,
       {{N14, N13, 1},
        {N13, N24, 0},
        {N13, N34, 1},
        {N13, N44, 2},
        {N12, N23, 0},
        {N12, N33, 1},
        {N13, N22, 1},
        {N11, N22, 0}},
       {{N13, N23, 1},
        {N13, N23, 0},
        {N13, N33, 2},
        {N13, N33, 1},
        {N12, N22, 1},
        {N12, N22, 0}}},
      {{N13, N22, N11},
       -1,
       {{N14, N13, 1},
        {N13, N24, 0},
        {N13, N34, 1},
        {N13, N44, 2},
        {N23, N22, 1},
        {N22, N33, 0},
        {N13, N12, 0},
        {N12, N11, 1}},
       {{N13, N23, 1},
        {N13, N23, 0},
        {N13, N33, 2},
        {N13, N33, 1},
        {N12, N22, 2},
        {N12, N22, 1}}},
      {{N23, N12, N11},
       -1,
       {{N14, N23, 2},
        {N24, N23, 1},
        {N23, N34, 0},
        {N23, N44, 1},
        {N13, N12, 1},
        {N12, N33, 1},
        {N23, N22, 0},
        {N11, N22, 0}},
       {{N13, N23, 2},
        {N13, N23, 1},
        {N23, N33, 1},
        {N23, N33, 0},
        {N12, N22, 1},
        {N12, N22, 0}}},
      {{N23, N22, N11},
       -1,
       {{N14, N23, 2},
        {N24, N23, 1},
        {N23, N34, 0},
        {N23, N44, 1},
        {N13, N22, 2},
        {N22, N33, 0},
        {N12, N23, 1},
        {N12, N11, 1}},
       {{N13, N23, 2},
        {N13, N23, 1},
        {N23, N33, 1},
        {N23, N33, 0},
        {N12, N22, 2},
        {N12, N22, 1}}},
      {{N33, N12, N11},
       -1,
       {{N14, N33, 3},
        {N24, N33, 2},
        {N34, N33, 1},
        {N33, N44, 0},
        {N13, N12, 1},
        {N12, N23, 0},
        {N22, N33, 1},
        {N11, N22, 0}},
       {{N13, N33, 3},
        {N13, N33, 2},
        {N23, N33, 2},
        {N23, N33, 1},
        {N12, N22, 1},
        {N12, N22, 0}}},
      {{N33, N22, N11},
       1,
       {{N14, N33, 3},
        {N24, N33, 2},
        {N34, N33, 1},
        {N33, N44, 0},
        {N13, N22, 2},
        {N23, N22, 1},
        {N12, N33, 2},
        {N12, N11, 1}},
       {{N13, N33, 3},
        {N13, N33, 2},
        {N23, N33, 2},
        {N23, N33, 1},
        {N12, N22, 2},
        {N12, N22, 1}}},
  };
  if (i == 2 && j == 1) return l21;
  if (i == 3 && j == 2) return l32;
  if (i == 3 && j == 1) return l31;
  if (i == 4 && j == 3) return l43;
  if (i == 4 && j == 2) return l42;
  if (i == 4 && j == 1) return l41;
  throw std::invalid_argument("lowering_terms: bad generator");
}

}  // namespace

Action apply_generator(Gen g, const Pattern& p) {
  Action out;
  if (g.i < 1 || g.i > 4 || g.j < 1 || g.j > 4)
    throw std::invalid_argument("apply_generator: generator indices in 1..4");
  if (g.i == g.j) {
    Weight w = p_weight(p);
    double val = w[static_cast<size_t>(4 - g.i)];
    if (val != 0.0) out[p] = val;
    return out;
  }
  const Terms& terms =
      g.i < g.j ? raising_terms(g.i, g.j) : lowering_terms(g.i, g.j);
  int delta = g.i < g.j ? 1 : -1;
  for (const TermSpec& t : terms) {
    double prod = 1.0;
    bool ok = true;
    for (const Factor& fc : t.num) {
      int v = p[fc.a] - p[fc.b] + fc.k;
      if (v <= 0) {
        ok = false;
        break;
      }
      prod *= v;
    }
    if (!ok) continue;
    Pattern q = p;
    for (int s : t.shifts) q[s] += delta;
    if (!q.valid()) continue;
    double den = 1.0;
    for (const Factor& fc : t.den) den *= p[fc.a] - p[fc.b] + fc.k;
    double amp = t.sign * std::sqrt(prod / den);
    auto [it, fresh] = out.try_emplace(q, amp);
    if (!fresh) it->second += amp;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0.0 ? out.erase(it) : std::next(it);
  return out;
}

Action apply_generator(Gen g, const Action& state) {
  Action out;
  for (const auto& [p, c] : state) {
    for (const auto& [q, a] : apply_generator(g, p)) {
      auto [it, fresh] = out.try_emplace(q, c * a);
      if (!fresh) it->second += c * a;
    }
  }
  return out;
}

Eigen::MatrixXd generator_matrix(Gen g, const std::vector<Pattern>& basis) {
  std::map<Pattern, int> idx;
  for (int k = 0; k < static_cast<int>(basis.size()); ++k)
    idx[basis[static_cast<size_t>(k)]] = k;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(basis.size()),
      static_cast<Eigen::Index>(basis.size()));
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
    for (const auto& [q, a] : apply_generator(g, basis[static_cast<size_t>(k)]))
      m(idx.at(q), k) = a;
  }
  return m;
}

Eigen::MatrixXd generator_matrix(Gen g, const Irrep& f) {
  return generator_matrix(g, carrier_space(f));
}

}  // namespace u4
