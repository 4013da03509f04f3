#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace u4 {

// U(4) irrep label [n14,n24,n34,n44], non-increasing and non-negative.
struct Irrep {
  std::array<int, 4> n{};

  int operator[](int i) const { return n[static_cast<size_t>(i)]; }
  bool valid() const {
    return n[0] >= n[1] && n[1] >= n[2] && n[2] >= n[3] && n[3] >= 0;
  }
  int sum() const { return n[0] + n[1] + n[2] + n[3]; }
  Irrep normalized() const {
    return Irrep{{n[0] - n[3], n[1] - n[3], n[2] - n[3], 0}};
  }
  auto operator<=>(const Irrep&) const = default;
};

// Gelfand pattern entry indices into the flattened ten-integer storage.
enum PatternEntry : int {
  N14, N24, N34, N44,  // row 4 (irrep label)
  N13, N23, N33,       // row 3
  N12, N22,            // row 2
  N11                  // row 1
};

// One canonical basis state: rows interleaved by betweenness.
struct Pattern {
  std::array<int, 10> v{};

  int operator[](int i) const { return v[static_cast<size_t>(i)]; }
  int& operator[](int i) { return v[static_cast<size_t>(i)]; }
  Irrep irrep() const { return Irrep{{v[N14], v[N24], v[N34], v[N44]}}; }
  bool valid() const;
  auto operator<=>(const Pattern&) const = default;
};

// p-weight [w4,w3,w2,w1]: eigenvalues of E44,E33,E22,E11.
using Weight = std::array<int, 4>;

long long dimension(const Irrep& f);
Weight p_weight(const Pattern& p);
std::array<int, 3> z_weight(const Pattern& p);
Pattern highest_weight(const Irrep& f);

// Total order used for all carrier spaces and matrix layouts: p-weight in
// graded-reverse-lex descending order on (w1,w2,w3), ties broken by
// lexicographically descending (n13,n23,n33,n12,n22,n11).
bool canonical_less(const Pattern& a, const Pattern& b);
std::vector<Pattern> carrier_space(const Irrep& f);

std::string to_string(const Irrep& f);    // "n14.n24.n34.n44"
std::string to_string(const Pattern& p);  // "[n14,n24,n34,n44|n13,n23,n33|n12,n22|n11]"
Irrep parse_irrep(const std::string& s);      // throws std::invalid_argument
Pattern parse_pattern(const std::string& s);  // throws std::invalid_argument

}  // namespace u4
