#include "phasequant/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "phasequant/coherent.hpp"
#include "phasequant/errors.hpp"
#include "phasequant/irrep.hpp"

namespace phasequant::spectral {

namespace {

constexpr double kOverflowLimit = 1e300;

// Golden-section maximization of f on [lo, hi].
template <typename F>
void golden_max(const F& f, double lo, double hi, double& best_x, double& best_val) {
  const double inv_phi = 0.6180339887498948482;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-12 * std::max(1.0, std::abs(b)); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  if (fc > fd) {
    best_x = c;
    best_val = fc;
  } else {
    best_x = d;
    best_val = fd;
  }
}

}  // namespace

RatioSupremum ratio_supremum(double k, double rho_max, const GridConfig& cfg) {
  if (!(k > 0.0)) throw domain_error("ratio_supremum: k must be positive");
  if (!(rho_max >= 50.0))
    throw domain_error("ratio_supremum: rho_max must be at least 50 to reach the plateau");
  if (cfg.points < 10 || !(cfg.rho_min > 0.0) || !(cfg.rho_min < rho_max))
    throw domain_error("ratio_supremum: invalid grid configuration");

  const auto ratio = [k](double rho) { return coherent::g_over_bessel(k, rho); };

  const double log_lo = std::log(cfg.rho_min);
  const double step = (std::log(rho_max) - log_lo) / (cfg.points - 1);
  int best_i = 0;
  double best_val = -1.0;
  std::vector<double> grid(static_cast<std::size_t>(cfg.points));
  for (int i = 0; i < cfg.points; ++i) {
    grid[static_cast<std::size_t>(i)] = std::exp(log_lo + i * step);
    const double v = ratio(grid[static_cast<std::size_t>(i)]);
    if (v > best_val) {
      best_val = v;
      best_i = i;
    }
  }

  const double lo = grid[static_cast<std::size_t>(std::max(0, best_i - 1))];
  const double hi = grid[static_cast<std::size_t>(std::min(cfg.points - 1, best_i + 1))];
  RatioSupremum res;
  golden_max(ratio, lo, hi, res.at_rho, res.sup);
  if (best_val > res.sup) {
    res.sup = best_val;
    res.at_rho = grid[static_cast<std::size_t>(best_i)];
  }
  return res;
}

bool admissible(double k, double rho_max, const GridConfig& cfg) {
  return ratio_supremum(k, rho_max, cfg).sup <= 2.0;
}

ScanReport threshold_scan(double k_lo, double k_hi, double tol, double rho_max) {
  if (!(k_lo > 0.0) || !(k_hi > k_lo)) throw domain_error("threshold_scan: need 0 < k_lo < k_hi");
  if (!(tol > 0.0)) throw domain_error("threshold_scan: tol must be positive");

  ScanReport rep;
  const auto record = [&](double k) {
    const RatioSupremum s = ratio_supremum(k, rho_max);
    rep.k_grid.push_back(k);
    rep.sup_ratio.push_back(s.sup);
    rep.argmax_rho.push_back(s.at_rho);
    return s.sup;
  };

  const double sup_lo = record(k_lo);
  const double sup_hi = record(k_hi);
  if (!(sup_lo > 2.0) || !(sup_hi <= 2.0))
    throw domain_error(
        "threshold_scan: interval does not bracket the admissibility threshold "
        "(need sup > 2 at k_lo and sup <= 2 at k_hi)");

  double lo = k_lo, hi = k_hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (record(mid) > 2.0 ? lo : hi) = mid;
  }
  rep.bracket_lo = lo;
  rep.bracket_hi = hi;

  // The bisection is only meaningful if the supremum decreases with k.
  std::vector<std::size_t> order(rep.k_grid.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rep.k_grid[a] < rep.k_grid[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (rep.sup_ratio[order[i]] > rep.sup_ratio[order[i - 1]] + 1e-6)
      throw convergence_error("threshold_scan: supremum is not monotone across the scan");
  }

  std::vector<double> kg, sr, ar;
  for (std::size_t idx : order) {
    kg.push_back(rep.k_grid[idx]);
    sr.push_back(rep.sup_ratio[idx]);
    ar.push_back(rep.argmax_rho[idx]);
  }
  rep.k_grid = std::move(kg);
  rep.sup_ratio = std::move(sr);
  rep.argmax_rho = std::move(ar);
  return rep;
}

CosSpectrum cos_spectrum(double k, int dim) {
  if (!(k > 0.0)) throw domain_error("cos_spectrum: k must be positive");
  if (dim < 2) throw domain_error("cos_spectrum: dim must be at least 2");

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd sub(dim - 1);
  for (int j = 0; j < dim - 1; ++j) sub[j] = 0.25 * irrep::f_coeff(k, j + 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw convergence_error("cos_spectrum: tridiagonal eigensolver failed");

  CosSpectrum res;
  res.eigenvalues = solver.eigenvalues();
  const Eigen::MatrixXd& vecs = solver.eigenvectors();
  const double norm_t =
      std::max(std::abs(res.eigenvalues[0]), std::abs(res.eigenvalues[dim - 1]));

  res.max_residual = 0.0;
  Eigen::VectorXd w(dim);
  for (int i = 0; i < dim; ++i) {
    const auto v = vecs.col(i);
    for (int n = 0; n < dim; ++n) {
      double s = 0.0;
      if (n > 0) s += sub[n - 1] * v[n - 1];
      if (n + 1 < dim) s += sub[n] * v[n + 1];
      w[n] = s - res.eigenvalues[i] * v[n];
    }
    res.max_residual = std::max(res.max_residual, w.norm());
  }
  if (res.max_residual > 1e-10 * std::max(norm_t, 1e-300))
    throw internal_error("cos_spectrum: eigenpair residual exceeds tolerance");
  return res;
}

ImproperVector improper_eigenvector(double k, double mu, int n_max) {
  if (!(k > 0.0)) throw domain_error("improper_eigenvector: k must be positive");
  if (n_max < 2) throw domain_error("improper_eigenvector: n_max must be at least 2");

  ImproperVector res;
  res.overflowed = false;
  res.overflow_index = -1;
  res.a.reserve(static_cast<std::size_t>(n_max) + 1);
  res.a.push_back(1.0);
  res.a.push_back(4.0 * mu / irrep::f_coeff(k, 1));
  if (std::abs(res.a[1]) > kOverflowLimit) {
    res.overflowed = true;
    res.overflow_index = 1;
    return res;
  }
  for (int n = 1; n < n_max; ++n) {
    const double fn = irrep::f_coeff(k, n);
    const double fn1 = irrep::f_coeff(k, n + 1);
    const double next = (4.0 * mu * res.a[static_cast<std::size_t>(n)] -
                         fn * res.a[static_cast<std::size_t>(n) - 1]) /
                        fn1;
    res.a.push_back(next);
    if (std::abs(next) > kOverflowLimit) {
      res.overflowed = true;
      res.overflow_index = n + 1;
      break;
    }
  }

  // Each interior row of the recursion must satisfy the three-term relation
  // to rounding, measured against the local term magnitudes.
  const std::size_t len = res.a.size();
  for (std::size_t n = 1; n + 1 < len; ++n) {
    const double fn = irrep::f_coeff(k, static_cast<int>(n));
    const double fn1 = irrep::f_coeff(k, static_cast<int>(n) + 1);
    const double t1 = 0.25 * fn * res.a[n - 1];
    const double t2 = 0.25 * fn1 * res.a[n + 1];
    const double t3 = mu * res.a[n];
    const double resid = std::abs(t1 + t2 - t3);
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-300});
    if (resid > 1e-12 * scale)
      throw internal_error("improper_eigenvector: recursion residual exceeds tolerance");
  }
  return res;
}

}  // namespace phasequant::spectral
