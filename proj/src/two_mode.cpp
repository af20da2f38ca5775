#include "phasequant/two_mode.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "phasequant/errors.hpp"
#include "phasequant/irrep.hpp"

namespace phasequant::two_mode {

namespace {

using Triplet = Eigen::Triplet<std::complex<double>>;

int flat(int m1, int m2, int M) { return m1 * M + m2; }

void check_m(int M) {
  if (M < 2) throw domain_error("two_mode: M must be at least 2");
  if (M > 1024) throw domain_error("two_mode: M too large for a dense product basis");
}

}  // namespace

const char* kind_name(TwoModeKind kind) {
  switch (kind) {
    case TwoModeKind::K3a: return "K3a";
    case TwoModeKind::Kplus_a: return "Kplus_a";
    case TwoModeKind::Kminus_a: return "Kminus_a";
    case TwoModeKind::N1: return "N1";
    case TwoModeKind::N2: return "N2";
  }
  throw internal_error("two_mode: unknown operator kind");
}

TwoModeOperator build_two_mode(TwoModeKind kind, int M) {
  check_m(M);
  const int dim = M * M;
  std::vector<Triplet> trip;
  trip.reserve(static_cast<std::size_t>(dim));

  for (int m1 = 0; m1 < M; ++m1) {
    for (int m2 = 0; m2 < M; ++m2) {
      const int j = flat(m1, m2, M);
      switch (kind) {
        case TwoModeKind::K3a:
          trip.emplace_back(j, j, 0.5 * (m1 + m2 + 1.0));
          break;
        case TwoModeKind::Kplus_a:
          if (m1 + 1 < M && m2 + 1 < M)
            trip.emplace_back(flat(m1 + 1, m2 + 1, M), j,
                              std::sqrt((m1 + 1.0) * (m2 + 1.0)));
          break;
        case TwoModeKind::Kminus_a:
          if (m1 > 0 && m2 > 0)
            trip.emplace_back(flat(m1 - 1, m2 - 1, M), j, std::sqrt(m1 * static_cast<double>(m2)));
          break;
        case TwoModeKind::N1:
          trip.emplace_back(j, j, static_cast<double>(m1));
          break;
        case TwoModeKind::N2:
          trip.emplace_back(j, j, static_cast<double>(m2));
          break;
      }
    }
  }

  TwoModeOperator op;
  op.kind = kind;
  op.M = M;
  op.matrix.resize(dim, dim);
  op.matrix.setFromTriplets(trip.begin(), trip.end());
  return op;
}

double two_mode_commutator_defect(int M) {
  check_m(M);
  using Sparse = Eigen::SparseMatrix<std::complex<double>>;
  const Sparse kp = build_two_mode(TwoModeKind::Kplus_a, M).matrix;
  const Sparse km = build_two_mode(TwoModeKind::Kminus_a, M).matrix;
  const Sparse k3 = build_two_mode(TwoModeKind::K3a, M).matrix;

  const Sparse c1 = kp * km - km * kp + 2.0 * k3;       // [K+, K-] + 2 K3
  const Sparse c2 = k3 * kp - kp * k3 - kp;             // [K3, K+] - K+
  const Sparse c3 = k3 * km - km * k3 + km;             // [K3, K-] + K-

  const auto interior_max = [M](const Sparse& c) {
    double worst = 0.0;
    for (int j = 0; j < c.outerSize(); ++j) {
      const int m1 = j / M, m2 = j % M;
      if (m1 > M - 2 || m2 > M - 2) continue;
      for (Sparse::InnerIterator it(c, j); it; ++it)
        worst = std::max(worst, std::abs(it.value()));
    }
    return worst;
  };
  return std::max({interior_max(c1), interior_max(c2), interior_max(c3)});
}

std::vector<Sector> irrep_decomposition(int M) {
  check_m(M);
  const TwoModeOperator kp = build_two_mode(TwoModeKind::Kplus_a, M);
  const TwoModeOperator km = build_two_mode(TwoModeKind::Kminus_a, M);

  std::vector<Sector> sectors;
  std::size_t total_states = 0;
  for (int delta = -(M - 1); delta <= M - 1; ++delta) {
    Sector sec;
    sec.delta = delta;
    const int ad = std::abs(delta);
    sec.k = 0.5 * (ad + 1.0);
    const int len = M - ad;
    for (int n = 0; n < len; ++n) {
      const int m1 = delta >= 0 ? ad + n : n;
      const int m2 = delta >= 0 ? n : ad + n;
      sec.states.push_back({m1, m2, n});
    }
    total_states += sec.states.size();

    sec.max_element_defect = 0.0;
    sec.max_k3_defect = 0.0;
    for (int n = 0; n < len; ++n) {
      const SectorState& st = sec.states[static_cast<std::size_t>(n)];
      const int j = flat(st.m1, st.m2, M);
      const double k3_val = 0.5 * (st.m1 + st.m2 + 1.0);
      sec.max_k3_defect = std::max(sec.max_k3_defect, std::abs(k3_val - (n + sec.k)));
      if (n + 1 < len) {
        const SectorState& up = sec.states[static_cast<std::size_t>(n) + 1];
        const std::complex<double> elem = kp.matrix.coeff(flat(up.m1, up.m2, M), j);
        sec.max_element_defect = std::max(
            sec.max_element_defect, std::abs(elem - irrep::ladder_up_coeff(sec.k, n)));
      }
      if (n > 0) {
        const SectorState& down = sec.states[static_cast<std::size_t>(n) - 1];
        const std::complex<double> elem = km.matrix.coeff(flat(down.m1, down.m2, M), j);
        sec.max_element_defect = std::max(
            sec.max_element_defect, std::abs(elem - irrep::ladder_down_coeff(sec.k, n)));
      }
    }
    sectors.push_back(std::move(sec));
  }

  if (total_states != static_cast<std::size_t>(M) * static_cast<std::size_t>(M))
    throw internal_error("irrep_decomposition: sectors do not partition the basis");
  return sectors;
}

DiracCheck dirac_sqrt_check(int M) {
  check_m(M);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(M, M);
  for (int m = 1; m < M; ++m) b(m - 1, m) = std::sqrt(static_cast<double>(m));

  Eigen::MatrixXd big = Eigen::MatrixXd::Zero(2 * M, 2 * M);
  big.block(0, M, M, M) = b.transpose();  // b^dag couples lower into upper
  big.block(M, 0, M, M) = b;

  const Eigen::MatrixXd sq = big * big;
  DiracCheck res;
  res.defect = 0.0;
  for (int j = 0; j < 2 * M; ++j) {
    const int m = j % M;
    if (m > M - 2) continue;  // bb^dag loses the raised state at the cutoff
    for (int i = 0; i < 2 * M; ++i) {
      double target = 0.0;
      if (i == j) target = (j < M) ? m : m + 1.0;
      res.defect = std::max(res.defect, std::abs(sq(i, j) - target));
    }
  }

  res.eigen_ok = true;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int n = 1; n < M; ++n) {
    for (int sign : {+1, -1}) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(2 * M);
      v[n] = inv_sqrt2;               // |n> in the upper block
      v[M + n - 1] = sign * inv_sqrt2;  // |n-1> in the lower block
      const double lambda = sign * std::sqrt(static_cast<double>(n));
      if ((big * v - lambda * v).norm() > 1e-12 * std::sqrt(static_cast<double>(n)))
        res.eigen_ok = false;
    }
  }
  Eigen::VectorXd zero_mode = Eigen::VectorXd::Zero(2 * M);
  zero_mode[0] = 1.0;
  if ((big * zero_mode).norm() > 1e-12) res.eigen_ok = false;
  return res;
}

}  // namespace phasequant::two_mode
