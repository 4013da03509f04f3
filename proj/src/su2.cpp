#include "u4kit/su2.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace u4 {

namespace {

// log k! for doubled-integer spin arithmetic
double lf(int k) { return std::lgamma(k + 1.0); }

}  // namespace

double su2_cgc(int j1, int m1, int j2, int m2, int J, int M) {
  if (j1 < 0 || j2 < 0 || J < 0)
    throw std::invalid_argument("su2_cgc: negative spin");
  if ((j1 + m1) % 2 || (j2 + m2) % 2 || (J + M) % 2)
    throw std::invalid_argument("su2_cgc: spin/projection parity mismatch");
  if (m1 + m2 != M) return 0.0;
  if (J < std::abs(j1 - j2) || J > j1 + j2 || (j1 + j2 + J) % 2) return 0.0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(M) > J) return 0.0;
  auto f = [](int x2) { return lf(x2 / 2); };
  double pre =
      0.5 * (std::log(J + 1.0) + f(J + j1 - j2) + f(J - j1 + j2) +
             f(j1 + j2 - J) - f(j1 + j2 + J + 2) + f(J + M) + f(J - M) +
             f(j1 - m1) + f(j1 + m1) + f(j2 - m2) + f(j2 + m2));
  int kmin = std::max(0, std::max((j2 - J - m1) / 2, (j1 + m2 - J) / 2));
  int kmax =
      std::min((j1 + j2 - J) / 2, std::min((j1 - m1) / 2, (j2 + m2) / 2));
  double s = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    double ln = pre - (lf(k) + f(j1 + j2 - J - 2 * k) + f(j1 - m1 - 2 * k) +
                       f(j2 + m2 - 2 * k) + f(J - j2 + m1 + 2 * k) +
                       f(J - j1 - m2 + 2 * k));
    s += (k % 2 ? -1.0 : 1.0) * std::exp(ln);
  }
  return s;
}

}  // namespace u4
