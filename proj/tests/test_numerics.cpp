#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "u4kit/numerics.hpp"

using namespace u4;

TEST_CASE("null space of simple matrices") {
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(3, 3);
  CHECK(null_space(id).cols() == 0);

  Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(2, 3);
  Eigen::MatrixXd n = null_space(zero);
  CHECK(n.cols() == 3);
  CHECK((n.transpose() * n - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-14);

  Eigen::MatrixXd a(1, 2);
  a << 1.0, 1.0;
  Eigen::MatrixXd v = null_space(a);
  REQUIRE(v.cols() == 1);
  CHECK(std::abs(v(0, 0) + v(1, 0)) <= 1e-14);
  CHECK(std::abs(std::abs(v(0, 0)) - std::sqrt(0.5)) <= 1e-14);
}

TEST_CASE("zero row count means everything is null") {
  Eigen::MatrixXd a(0, 4);
  Eigen::MatrixXd n = null_space(a);
  CHECK(n.cols() == 4);
  CHECK((n - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("gram schmidt orthonormalizes columns") {
  Eigen::MatrixXd a(3, 2);
  a << 1, 1, 1, 0, 0, 1;
  Eigen::MatrixXd q = gram_schmidt(a);
  CHECK((q.transpose() * q - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-14);
  // same span: projector is unchanged
  Eigen::MatrixXd pa = a * (a.transpose() * a).inverse() * a.transpose();
  Eigen::MatrixXd pq = q * q.transpose();
  CHECK((pa - pq).cwiseAbs().maxCoeff() <= 1e-12);

  Eigen::MatrixXd dep(2, 2);
  dep << 1, 2, 1, 2;
  CHECK_THROWS_AS(gram_schmidt(dep), std::runtime_error);
}

TEST_CASE("phase fix makes the first significant entry positive") {
  Eigen::VectorXd v(3);
  v << 0.0, -0.6, 0.8;
  Eigen::VectorXd w = fix_phase(v);
  CHECK(w(1) == doctest::Approx(0.6));
  CHECK(w(2) == doctest::Approx(-0.8));
  Eigen::VectorXd u = fix_phase(w);
  CHECK((u - w).cwiseAbs().maxCoeff() == 0.0);

  Eigen::MatrixXd m(2, 2);
  m << -1, 1, 0, 1;
  Eigen::MatrixXd fixed = fix_phase_columns(m);
  CHECK(fixed(0, 0) == doctest::Approx(1.0));
  CHECK(fixed(0, 1) == doctest::Approx(1.0));
}

TEST_CASE("stacked least squares solves and reports inconsistency") {
  Eigen::MatrixXd a(3, 2);
  a << 1, 0, 0, 1, 1, 1;
  Eigen::VectorXd x(2);
  x << 2.0, -3.0;
  Eigen::MatrixXd b = a * x;
  Eigen::MatrixXd sol = solve_stacked(a, b);
  CHECK((sol - x).cwiseAbs().maxCoeff() <= 1e-12);

  Eigen::MatrixXd bad = b;
  bad(2, 0) += 1.0;
  CHECK_THROWS_AS(solve_stacked(a, bad), std::runtime_error);
}

TEST_CASE("orthogonal equivalence detects frame changes and genuine differences") {
  Eigen::MatrixXd a(2, 3);
  a << 1, 0, 0, 0, 1, 0;
  // rotate the column frame: a and a*R have identical Gram matrices
  Eigen::MatrixXd r(3, 3);
  double c = std::cos(0.3), s = std::sin(0.3);
  r << c, -s, 0, s, c, 0, 0, 0, 1;
  CHECK(orthogonal_equivalence(a, a * r, 1e-14));
  Eigen::MatrixXd b = a;
  b(0, 0) = 2.0;
  CHECK(!orthogonal_equivalence(a, b, 1e-6));
}
