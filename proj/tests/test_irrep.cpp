#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "phasequant/errors.hpp"
#include "phasequant/irrep.hpp"

#include "oracle_data.hpp"

using namespace phasequant;
using Complex = std::complex<double>;

namespace {

irrep::IrrepParams make_params(double k, double omega_angle = 0.0) {
  irrep::IrrepParams p;
  p.k = k;
  p.omega_angle = omega_angle;
  return p;
}

}  // namespace

TEST_CASE("ladder coefficients") {
  CHECK(irrep::ladder_up_coeff(1.0, 0) == std::sqrt(2.0));
  CHECK(irrep::ladder_down_coeff(1.0, 0) == 0.0);
  for (double k : {0.5, 1.0, 2.7}) {
    for (int n = 0; n < 20; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(irrep::ladder_down_coeff(k, n + 1) == irrep::ladder_up_coeff(k, n));
    }
  }
}

TEST_CASE("off-diagonal profile f") {
  CHECK(irrep::f_coeff(1.0, 0) == 0.0);
  CHECK(std::abs(irrep::f_coeff(1.0, 1) - oracle::kProfileK1N1) <= 1e-15);
  CHECK(std::abs(irrep::f_coeff(0.5, 1) - oracle::kProfileKHalfN1) <= 1e-15);
  // f ties the ladder magnitudes to the inverse weights.
  for (int n = 1; n < 8; ++n) {
    const double k = 0.8;
    const double expected =
        irrep::ladder_down_coeff(k, n) * (1.0 / (k + n) + 1.0 / (k + n - 1.0));
    CHECK(std::abs(irrep::f_coeff(k, n) - expected) <= 1e-15);
  }
}

TEST_CASE("casimir scalar") {
  CHECK(irrep::casimir_eigenvalue(1.0) == 0.0);
  CHECK(irrep::casimir_eigenvalue(0.5) == 0.25);
}

TEST_CASE("operator kinds round-trip by name") {
  for (auto kind : {irrep::OperatorKind::K1, irrep::OperatorKind::K2, irrep::OperatorKind::K3,
                    irrep::OperatorKind::Kplus, irrep::OperatorKind::Kminus,
                    irrep::OperatorKind::CosPhi, irrep::OperatorKind::SinPhi}) {
    CHECK(irrep::kind_from_name(irrep::kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(irrep::kind_from_name("bogus"), domain_error);
}

TEST_CASE("dense structure of the generators") {
  const auto params = make_params(0.7, 0.9);
  const int dim = 8;
  const Complex omega = params.omega();

  const Eigen::MatrixXcd kp = irrep::build_operator(irrep::OperatorKind::Kplus, params, dim).dense();
  const Eigen::MatrixXcd km = irrep::build_operator(irrep::OperatorKind::Kminus, params, dim).dense();
  const Eigen::MatrixXcd k3 = irrep::build_operator(irrep::OperatorKind::K3, params, dim).dense();
  const Eigen::MatrixXcd k1 = irrep::build_operator(irrep::OperatorKind::K1, params, dim).dense();
  const Eigen::MatrixXcd k2 = irrep::build_operator(irrep::OperatorKind::K2, params, dim).dense();

  for (int n = 0; n < dim; ++n) CHECK(k3(n, n) == params.k + n);
  for (int n = 0; n + 1 < dim; ++n) {
    CHECK(std::abs(kp(n + 1, n) - omega * irrep::ladder_up_coeff(params.k, n)) <= 1e-16);
    CHECK(std::abs(km(n, n + 1) - std::conj(omega) * irrep::ladder_up_coeff(params.k, n)) <=
          1e-16);
  }
  CHECK((kp - km.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((k1 - 0.5 * (kp + km)).cwiseAbs().maxCoeff() <= 1e-16);
  const Complex i_unit(0.0, 1.0);
  CHECK((k2 + 0.5 * i_unit * (kp - km)).cwiseAbs().maxCoeff() <= 1e-16);
  CHECK((k1 - k1.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((k2 - k2.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("trig operators tie to the profile and to each other") {
  const auto params = make_params(1.3, 0.4);
  const int dim = 9;
  const auto cos_op = irrep::build_operator(irrep::OperatorKind::CosPhi, params, dim);
  const auto sin_op = irrep::build_operator(irrep::OperatorKind::SinPhi, params, dim);
  const Complex i_unit(0.0, 1.0);
  for (int j = 0; j + 1 < dim; ++j) {
    const Complex expected = std::conj(params.omega()) * irrep::f_coeff(params.k, j + 1) / 4.0;
    CHECK(std::abs(cos_op.off_diagonal[j] - expected) <= 1e-16);
    CHECK(std::abs(sin_op.off_diagonal[j] - (-i_unit) * expected) <= 1e-16);
    CHECK(cos_op.diagonal[j] == 0.0);
  }
  const Eigen::MatrixXcd c = cos_op.dense();
  const Eigen::MatrixXcd s = sin_op.dense();
  CHECK((c - c.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((s - s.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("apply agrees with dense multiplication for every kind") {
  const auto params = make_params(0.6, 1.1);
  const int dim = 12;
  Eigen::VectorXcd v(dim);
  for (int n = 0; n < dim; ++n)
    v[n] = Complex(std::sin(0.3 * n + 0.2), std::cos(1.7 * n - 0.5));
  for (auto kind : {irrep::OperatorKind::K1, irrep::OperatorKind::K2, irrep::OperatorKind::K3,
                    irrep::OperatorKind::Kplus, irrep::OperatorKind::Kminus,
                    irrep::OperatorKind::CosPhi, irrep::OperatorKind::SinPhi}) {
    CAPTURE(irrep::kind_name(kind));
    const auto op = irrep::build_operator(kind, params, dim);
    CHECK((op.apply(v) - op.dense() * v).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("repeated raising rebuilds the number basis") {
  const auto params = make_params(0.37);
  const int dim = 32;
  const auto kp = irrep::build_operator(irrep::OperatorKind::Kplus, params, dim);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v[0] = 1.0;
  double norm_expected = 1.0;
  for (int n = 1; n <= 30; ++n) {
    v = kp.apply(v);
    norm_expected *= irrep::ladder_up_coeff(params.k, n - 1);
    CAPTURE(n);
    CHECK(std::abs(v.norm() - norm_expected) <= 1e-12 * norm_expected);
    CHECK(std::abs(std::abs(v[n]) - norm_expected) <= 1e-12 * norm_expected);
  }
}

TEST_CASE("spectra are independent of the dressing phase") {
  const int dim = 40;
  const auto plain = irrep::build_operator(irrep::OperatorKind::CosPhi, make_params(0.8), dim);
  const auto dressed =
      irrep::build_operator(irrep::OperatorKind::CosPhi, make_params(0.8, 2.1), dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sa(plain.dense());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sb(dressed.dense());
  CHECK((sa.eigenvalues() - sb.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("interior algebra defects vanish to extended-precision accuracy") {
  for (double k : {0.5, 0.6, 1.0, 2.3}) {
    CAPTURE(k);
    const auto params = make_params(k);
    CHECK(irrep::casimir_defect(params, 60) <= 1e-13);
    const auto comm = irrep::commutator_defect(params, 60);
    CHECK(comm[0] <= 1e-13);
    CHECK(comm[1] <= 1e-13);
    CHECK(comm[2] <= 1e-13);
  }
  CHECK(irrep::casimir_defect(make_params(1.0), 200) < 1e-12);
}

TEST_CASE("boundary rows carry an order-dim truncation defect") {
  const auto params = make_params(1.0);
  CHECK(irrep::casimir_defect(params, 60, true) > 10.0);
  CHECK(irrep::casimir_defect(params, 60, false) <= 1e-13);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(irrep::build_operator(irrep::OperatorKind::K1, make_params(-1.0), 8),
                  domain_error);
  CHECK_THROWS_AS(irrep::build_operator(irrep::OperatorKind::K1, make_params(1.0), 1),
                  domain_error);
  CHECK_THROWS_AS(irrep::ladder_up_coeff(1.0, -1), domain_error);
  CHECK_THROWS_AS(irrep::f_coeff(0.0, 1), domain_error);
}
