#include "u4kit/numerics.hpp"

#include <iostream>
#include <stdexcept>

namespace u4 {

Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() == 0) return Eigen::MatrixXd::Identity(m.cols(), m.cols());
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s(0) : 0.0;
  double cut = tol * std::max(smax, 1.0);
  Eigen::Index keep_from = s.size();
  while (keep_from > 0 && s(keep_from - 1) <= cut) --keep_from;
  if (keep_from > 0 && keep_from < s.size() && s(keep_from) > 0.0 &&
      s(keep_from - 1) / s(keep_from) < 1e3) {
    std::cerr << "null_space: weak spectral gap " << s(keep_from - 1) << " / "
              << s(keep_from) << " at threshold " << cut << "\n";
  }
  Eigen::Index nnull = m.cols() - keep_from;
  return svd.matrixV().rightCols(nnull);
}

Eigen::MatrixXd gram_schmidt(const Eigen::MatrixXd& v) {
  Eigen::MatrixXd q(v.rows(), v.cols());
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    Eigen::VectorXd w = v.col(k);
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index i = 0; i < k; ++i) w -= q.col(i).dot(w) * q.col(i);
    double nr = w.norm();
    if (nr <= 1e-8)
      throw std::runtime_error("gram_schmidt: rank-deficient input");
    q.col(k) = w / nr;
  }
  return q;
}

Eigen::VectorXd fix_phase(Eigen::VectorXd v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-10) {
      if (v(i) < 0) v = -v;
      return v;
    }
  }
  throw std::runtime_error("fix_phase: numerically zero vector");
}

Eigen::MatrixXd fix_phase_columns(Eigen::MatrixXd v) {
  for (Eigen::Index k = 0; k < v.cols(); ++k) v.col(k) = fix_phase(v.col(k));
  return v;
}

Eigen::MatrixXd solve_stacked(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                              double tol) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_stacked: row mismatch");
  Eigen::MatrixXd x =
      a.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
  double resid = (a * x - b).norm();
  if (resid > tol * std::max(1.0, b.norm()))
    throw std::runtime_error("solve_stacked: inconsistent system, residual " +
                             std::to_string(resid));
  return x;
}

bool orthogonal_equivalence(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                            double tol) {
  if (a.rows() != b.rows()) return false;
  Eigen::MatrixXd ga = a * a.transpose();
  Eigen::MatrixXd gb = b * b.transpose();
  return (ga - gb).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace u4
