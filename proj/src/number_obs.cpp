#include "phasequant/number_obs.hpp"

#include <cmath>

#include "phasequant/errors.hpp"

namespace phasequant::number_obs {

namespace {

// Square of the phase-cosine off-diagonal profile, evaluated without the
// intermediate square root so n ~ 1e4 stays exact in closed form.
double f_squared(double k, long long n) {
  if (n == 0) return 0.0;
  const double s = 1.0 / (k + n) + 1.0 / (k + n - 1.0);
  return static_cast<double>(n) * (2.0 * k + n - 1.0) * s * s;
}

void check_kn(const char* who, double k, long long n) {
  if (!(k > 0.0)) throw domain_error(std::string(who) + ": requires k > 0");
  if (n < 0) throw domain_error(std::string(who) + ": requires n >= 0");
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto m = static_cast<double>(x.size());
  double xm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= m;
  ym /= m;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - xm) * (y[i] - ym);
    den += (x[i] - xm) * (x[i] - xm);
  }
  return num / den;
}

}  // namespace

KMoments k_moments(double k, int n) {
  check_kn("k_moments", k, n);
  const double var = n * (2.0 * k + n) / 2.0 + k / 2.0;
  return {0.0, 0.0, var, var};
}

TrigMoments trig_moments(double k, int n) {
  check_kn("trig_moments", k, n);
  const double fn2 = f_squared(k, n);
  const double fn12 = f_squared(k, n + 1);
  TrigMoments t;
  t.mean_cos = 0.0;
  t.mean_sin = 0.0;
  t.second_moment = (fn12 + fn2) / 16.0;
  t.commutator_expect = std::complex<double>(0.0, -(fn12 - fn2) / 8.0);
  return t;
}

double ground_state_moment(double k) {
  if (!(k > 0.0)) throw domain_error("ground_state_moment: requires k > 0");
  const double t = 2.0 * k + 1.0;
  return t * t / (8.0 * k * (k + 1.0) * (k + 1.0));
}

double k1_lower_bound() {
  // Cardano root of 8k^3 + 12k^2 + 4k - 1 = 0 (the ground-state moment
  // equals 1 exactly there): shift k = t - 1/2 gives 8t^3 - 2t - 1 = 0.
  const double s = std::sqrt(69.0) / 144.0;
  const double radical = -0.5 + std::cbrt(0.0625 + s) + std::cbrt(0.0625 - s);

  double lo = 0.1, hi = 0.3;  // moment is 1.49 at 0.1 and 0.63 at 0.3
  for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ground_state_moment(mid) >= 1.0 ? lo : hi) = mid;
  }
  const double bisected = 0.5 * (lo + hi);
  if (std::abs(bisected - radical) > 1e-12)
    throw internal_error("k1_lower_bound: radical and bracketing root disagree");
  return radical;
}

CorrespondenceReport correspondence_report(double k, const std::vector<long long>& n_list) {
  if (!(k > 0.0)) throw domain_error("correspondence_report: requires k > 0");
  if (n_list.empty()) throw domain_error("correspondence_report: empty n list");
  CorrespondenceReport rep;
  rep.k = k;
  std::vector<double> lx, ly_second, ly_comm;
  for (long long n : n_list) {
    if (n < 1) throw domain_error("correspondence_report: entries must be >= 1");
    CorrespondenceRow row;
    row.n = n;
    // <K1^2>+<K2^2> = 2 var = n(2k+n) + k in |k,n>; <K3^2> = (k+n)^2.
    const double nd = static_cast<double>(n);
    row.casimir_identity_residual =
        (nd * (2.0 * k + nd) + k) - (k + nd) * (k + nd) - k * (1.0 - k);
    const double fn2 = f_squared(k, n);
    const double fn12 = f_squared(k, n + 1);
    row.second_moment_minus_half = (fn12 + fn2) / 16.0 - 0.5;
    row.commutator_magnitude = std::abs(fn12 - fn2) / 8.0;
    rep.rows.push_back(row);
    lx.push_back(std::log(nd));
    ly_second.push_back(std::log(std::abs(row.second_moment_minus_half)));
    ly_comm.push_back(std::log(row.commutator_magnitude));
  }
  rep.slope_second_moment = fit_slope(lx, ly_second);
  rep.slope_commutator = fit_slope(lx, ly_comm);
  return rep;
}

}  // namespace phasequant::number_obs
