#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include <Eigen/Dense>

#include "phasequant/errors.hpp"
#include "phasequant/irrep.hpp"
#include "phasequant/two_mode.hpp"

using namespace phasequant;

TEST_CASE("generator matrix elements on the product basis") {
  const int M = 5;
  const auto k3 = two_mode::build_two_mode(two_mode::TwoModeKind::K3a, M);
  const auto kp = two_mode::build_two_mode(two_mode::TwoModeKind::Kplus_a, M);
  const auto km = two_mode::build_two_mode(two_mode::TwoModeKind::Kminus_a, M);
  const auto n1 = two_mode::build_two_mode(two_mode::TwoModeKind::N1, M);
  const auto n2 = two_mode::build_two_mode(two_mode::TwoModeKind::N2, M);

  for (int m1 = 0; m1 < M; ++m1) {
    for (int m2 = 0; m2 < M; ++m2) {
      const int j = m1 * M + m2;
      CHECK(k3.matrix.coeff(j, j).real() == 0.5 * (m1 + m2 + 1.0));
      CHECK(n1.matrix.coeff(j, j).real() == static_cast<double>(m1));
      CHECK(n2.matrix.coeff(j, j).real() == static_cast<double>(m2));
      if (m1 + 1 < M && m2 + 1 < M) {
        const int up = (m1 + 1) * M + (m2 + 1);
        CHECK(kp.matrix.coeff(up, j).real() == std::sqrt((m1 + 1.0) * (m2 + 1.0)));
      }
    }
  }
  // Lowering is the exact adjoint of raising on the truncated basis.
  const Eigen::MatrixXcd dp = Eigen::MatrixXcd(kp.matrix);
  const Eigen::MatrixXcd dm = Eigen::MatrixXcd(km.matrix);
  CHECK((dp - dm.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  // K3a = (N1 + N2 + 1)/2 entry by entry.
  const Eigen::MatrixXcd d3 = Eigen::MatrixXcd(k3.matrix);
  const Eigen::MatrixXcd dn =
      0.5 * (Eigen::MatrixXcd(n1.matrix) + Eigen::MatrixXcd(n2.matrix) +
             Eigen::MatrixXcd::Identity(M * M, M * M));
  CHECK((d3 - dn).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("interior commutators close to rounding") {
  // sqrt(x)^2 reproduces x only to an ulp, so the products leave ~1e-15 noise.
  CHECK(two_mode::two_mode_commutator_defect(8) <= 1e-13);
  CHECK(two_mode::two_mode_commutator_defect(12) <= 1e-13);
}

TEST_CASE("difference sectors partition the basis and carry exact ladders") {
  const int M = 9;
  const auto sectors = two_mode::irrep_decomposition(M);
  CHECK(sectors.size() == 2 * static_cast<std::size_t>(M) - 1);

  std::set<int> seen;
  for (const auto& sec : sectors) {
    CHECK(sec.k == 0.5 * (std::abs(sec.delta) + 1.0));
    CHECK(sec.states.size() == static_cast<std::size_t>(M - std::abs(sec.delta)));
    CHECK(sec.max_element_defect == 0.0);
    CHECK(sec.max_k3_defect == 0.0);
    for (const auto& st : sec.states) {
      CHECK(st.m1 - st.m2 == sec.delta);
      CHECK(std::min(st.m1, st.m2) == st.n);
      seen.insert(st.m1 * M + st.m2);
    }
  }
  CHECK(seen.size() == static_cast<std::size_t>(M) * M);
}

TEST_CASE("sector ladder elements equal the abstract coefficients bit for bit") {
  const int M = 7;
  const auto kp = two_mode::build_two_mode(two_mode::TwoModeKind::Kplus_a, M);
  for (const auto& sec : two_mode::irrep_decomposition(M)) {
    for (std::size_t n = 0; n + 1 < sec.states.size(); ++n) {
      const auto& lo = sec.states[n];
      const auto& hi = sec.states[n + 1];
      const double elem = kp.matrix.coeff(hi.m1 * M + hi.m2, lo.m1 * M + lo.m2).real();
      CHECK(elem == irrep::ladder_up_coeff(sec.k, static_cast<int>(n)));
    }
  }
}

TEST_CASE("doubled-space square root of the number operator") {
  const auto res = two_mode::dirac_sqrt_check(10);
  CHECK(res.defect <= 1e-14);
  CHECK(res.eigen_ok);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(two_mode::build_two_mode(two_mode::TwoModeKind::K3a, 1), domain_error);
  CHECK_THROWS_AS(two_mode::irrep_decomposition(0), domain_error);
  CHECK_THROWS_AS(two_mode::dirac_sqrt_check(1), domain_error);
}
