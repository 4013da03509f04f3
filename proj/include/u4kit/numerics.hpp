#pragma once

#include <Eigen/Dense>

namespace u4 {

inline constexpr double kNullSpaceTol = 1e-9;

// Orthonormal basis of the right null space (columns, SVD output order).
// Threshold tol * max(sigma_max, 1); warns on stderr when the spectral gap
// across the threshold is below 1e3.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double tol = kNullSpaceTol);

// Orthonormalize the columns in their given order; throws on rank deficiency.
Eigen::MatrixXd gram_schmidt(const Eigen::MatrixXd& v);

// Scale so the first entry with |x| > 1e-10 is positive; throws on a
// numerically zero vector.
Eigen::VectorXd fix_phase(Eigen::VectorXd v);
Eigen::MatrixXd fix_phase_columns(Eigen::MatrixXd v);

// Least-squares solution of a x = b (b may have many columns); throws when
// the residual exceeds tol * max(1, ||b||).
Eigen::MatrixXd solve_stacked(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                              double tol = 1e-8);

// True when a a^T == b b^T entrywise within tol (same row spans up to an
// orthogonal mixing of columns).
bool orthogonal_equivalence(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                            double tol);

}  // namespace u4
