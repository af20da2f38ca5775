#include "phasequant/specfun.hpp"

#include <cfloat>
#include <cmath>
#include <limits>

#include "phasequant/errors.hpp"

namespace phasequant::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr int kSeriesCap = 500;        // hard cap for kernel-internal series
constexpr int kCfCap = 10000;          // continued fractions need O(x) steps, not a series cap
constexpr double kSeriesStopRel = 1e-18;
constexpr double kLogHuge = 700.0;     // |log value| beyond this -> log_scaled result
constexpr double kRescaleAt = 1e250;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// (Gamma(1+v) - Gamma(1-v)) / (2v) = sum_j c_j v^{2j}, accurate for |v| <= 0.2.
// Needed because forming the numerator by subtraction loses all digits as v -> 0.
constexpr double kGammaDiffCoef[12] = {
    -0.57721566490153286061, -0.90747907608088628902, -0.98199506890314520210,
    -0.99600176044243153397, -0.99902526762195486779, -0.99975659750860128703,
    -0.99993906420644431684, -0.99998475269937704874, -0.99999618658947331203,
    -0.99999904646891115772, -0.99999976159734438057, -0.99999994039712498375,
};

double gamma_diff_over_2v(double v) {
  const double v2 = v * v;
  double sum = 0.0;
  for (int j = 11; j >= 0; --j) sum = sum * v2 + kGammaDiffCoef[j];
  return sum;
}

// Gamma(1+v) - 1 for |v| <= 0.5 without cancellation.
double gamma_1p_m1(double v) { return std::expm1(log_gamma(1.0 + v)); }

struct ScaledSum {
  double sum;        // rescaled partial sum
  double log_scale;  // log of the factor taken out of sum
  int terms;
  double last_rel;   // |last term| / sum
};

// Ascending series sum for I: sum_m (x^2/4)^m / (m! (nu+1)_m). All terms are
// positive, so there is no cancellation; the sum is rescaled if it outgrows
// the double range on the way up.
ScaledSum i_series_sum(double nu, double x) {
  const double q = 0.25 * x * x;
  double sum = 1.0, term = 1.0, log_scale = 0.0;
  for (int m = 0; m < kSeriesCap; ++m) {
    term *= q / ((m + 1.0) * (nu + m + 1.0));
    sum += term;
    if (term < kSeriesStopRel * sum) return {sum, log_scale, m + 2, term / sum};
    if (sum > kRescaleAt) {
      sum /= kRescaleAt;
      term /= kRescaleAt;
      log_scale += std::log(kRescaleAt);
    }
  }
  throw convergence_error("bessel_i: ascending series hit the term cap");
}

// Asymptotic tail sum_j t_j with t_0 = 1 and
// t_{j+1} = sign * t_j (4 nu^2 - (2j+1)^2) / (8 (j+1) x);
// sign = -1 gives the I expansion, +1 the K expansion. Stops at the
// relative tolerance or at the smallest term (truncation error reported).
double asymptotic_tail(double nu, double x, double sign, double* trunc_rel, int* terms) {
  const double mu4 = 4.0 * nu * nu;
  double sum = 1.0, term = 1.0;
  for (int j = 0; j < kSeriesCap; ++j) {
    const double o = 2.0 * j + 1.0;
    const double next = sign * term * (mu4 - o * o) / (8.0 * (j + 1.0) * x);
    if (std::abs(next) >= std::abs(term)) {  // divergence onset: truncate here
      *trunc_rel = std::abs(next) / std::abs(sum);
      *terms = j + 1;
      return sum;
    }
    term = next;
    sum += term;
    if (std::abs(term) < kSeriesStopRel * std::abs(sum)) {
      *trunc_rel = std::abs(term) / std::abs(sum);
      *terms = j + 2;
      return sum;
    }
  }
  throw convergence_error("bessel asymptotic series hit the term cap");
}

double i_switch_x(double nu) { return std::max(30.0, 2.0 * nu * nu); }

// Package a positive result known through log_value = log(extra) + log_scale,
// where extra is the O(1)-to-large finite part already computed.
EvalResult package(double extra, double log_scale, double rel_err, Method method) {
  const double log_value = std::log(extra) + log_scale;
  EvalResult r;
  r.method = method;
  if (std::abs(log_value) > kLogHuge) {
    r.value = log_value;
    r.abs_err_estimate = rel_err;  // abs error of the log = rel error of the value
    r.log_scaled = true;
  } else {
    r.value = (log_scale == 0.0) ? extra : extra * std::exp(log_scale);
    r.abs_err_estimate = std::abs(r.value) * rel_err;
    r.log_scaled = false;
  }
  return r;
}

EvalResult i_series(double nu, double x) {
  const double log_pref = nu * std::log(0.5 * x) - log_gamma(nu + 1.0);
  const ScaledSum s = i_series_sum(nu, x);
  const double rel_err =
      s.last_rel + (s.terms + std::abs(log_pref) + 4.0) * kEps;
  if (s.log_scale == 0.0 && std::abs(log_pref) < kLogHuge) {
    EvalResult r;
    r.value = std::exp(log_pref) * s.sum;
    r.abs_err_estimate = r.value * rel_err;
    r.method = Method::series;
    return r;
  }
  return package(s.sum, s.log_scale + log_pref, rel_err, Method::series);
}

EvalResult i_asymptotic(double nu, double x) {
  double trunc_rel = 0.0;
  int terms = 0;
  const double tail = asymptotic_tail(nu, x, -1.0, &trunc_rel, &terms);
  const double pref = 1.0 / std::sqrt(2.0 * kPi * x);
  const double rel_err = trunc_rel + (terms + 6.0) * kEps;
  return package(tail * pref, x, rel_err, Method::asymptotic);
}

// Temme's series for K_mu(x), K_{mu+1}(x); |mu| <= 0.5, 0 < x <= 2.
// This is the reflection formula pi/2 (I_{-mu} - I_mu)/sin(mu pi) reorganized
// term by term so the integer-order limit is the smooth mu -> 0 case.
void k_temme(double mu, double x, double* kmu, double* kmu1, int* terms) {
  const double gp = gamma_1p_m1(mu);
  const double gm = gamma_1p_m1(-mu);
  const double a = std::log(0.5 * x);
  const double b = std::exp(mu * a);
  const double sigma = -a * mu;
  const double c = (mu == 0.0) ? 1.0 : std::sin(kPi * mu) / (mu * kPi);
  const double d =
      (std::abs(sigma) < 1e-8) ? 1.0 + sigma * sigma / 6.0 : std::sinh(sigma) / sigma;
  double gamma1;
  if (mu == 0.0) {
    gamma1 = -kEulerGamma;
  } else if (std::abs(mu) <= 0.2) {
    gamma1 = gamma_diff_over_2v(mu) * c;
  } else {
    gamma1 = (0.5 / mu) * (gp - gm) * c;
  }
  const double gamma2 = 0.5 * (2.0 + gp + gm) * c;

  double p = (gp + 1.0) / (2.0 * b);
  double q = (1.0 + gm) * b / 2.0;
  double f = (std::cosh(sigma) * gamma1 + d * (-a) * gamma2) / c;
  double h = p;
  double coef = 1.0;
  double sum = f;
  double sum1 = h;
  int k = 1;
  for (; k <= kSeriesCap; ++k) {
    f = (k * f + p + q) / (k * k - mu * mu);
    p /= (k - mu);
    q /= (k + mu);
    h = p - k * f;
    coef *= x * x / (4.0 * k);
    sum += coef * f;
    sum1 += coef * h;
    if (std::abs(coef * f) < std::abs(sum) * kSeriesStopRel) break;
  }
  if (k > kSeriesCap) throw convergence_error("bessel_k: Temme series hit the term cap");
  *kmu = sum;
  *kmu1 = 2.0 * sum1 / x;
  *terms = k + 1;
}

// Thompson-Barnett CF2 (Steed's algorithm) for K_mu(x), K_{mu+1}(x);
// |mu| <= 0.5, x > 1.
void k_cf2(double mu, double x, double* kmu, double* kmu1, int* terms) {
  double a = mu * mu - 0.25;
  double b = 2.0 * (x + 1.0);
  double D = 1.0 / b;
  double f = D, delta = D;
  double prev = 0.0, current = 1.0;
  double Q = -a, C = -a;
  double S = 1.0 + Q * delta;
  int k = 2;
  for (; k <= kCfCap; ++k) {
    a -= 2.0 * (k - 1.0);
    b += 2.0;
    D = 1.0 / (b + a * D);
    delta *= b * D - 1.0;
    f += delta;
    double q = (prev - (b - 2.0) * current) / a;
    prev = current;
    current = q;
    C *= -a / k;
    Q += C * q;
    S += Q * delta;
    if (q < kEps) {  // renormalize to avoid under/overflow of the q recurrence
      C *= q;
      prev /= q;
      current /= q;
      q = 1.0;
    }
    if (std::abs(Q * delta) < std::abs(S) * kEps) break;
  }
  if (k > kCfCap) throw convergence_error("bessel_k: CF2 did not converge");
  *kmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / S;
  *kmu1 = *kmu * (0.5 + mu + x + (mu * mu - 0.25) * f) / x;
  *terms = k + 1;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::asymptotic: return "asymptotic";
    case Method::continued_fraction: return "continued_fraction";
    case Method::reflection: return "reflection";
  }
  return "unknown";
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw domain_error("log_gamma: requires x > 0");
  if (x < 0.5) return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  const double t = x + 6.5;
  return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(t) - t + std::log(acc);
}

EvalResult bessel_i(double nu, double x) {
  if (!(nu > -1.0)) throw domain_error("bessel_i: requires nu > -1");
  if (!(x >= 0.0)) throw domain_error("bessel_i: requires x >= 0");
  if (x == 0.0) {
    if (nu == 0.0) return {1.0, 0.0, Method::series, false};
    if (nu > 0.0) return {0.0, 0.0, Method::series, false};
    throw domain_error("bessel_i: diverges at x = 0 for nu < 0");
  }
  if (x >= i_switch_x(nu)) return i_asymptotic(nu, x);
  return i_series(nu, x);
}

double log_bessel_i(double nu, double x) {
  const EvalResult r = bessel_i(nu, x);
  if (r.log_scaled) return r.value;
  if (r.value <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(r.value);
}

EvalResult bessel_k(double nu, double x) {
  if (!(0.5 * x > 0.0) || !std::isfinite(x))
    throw domain_error("bessel_k: requires finite x > 0");
  nu = std::abs(nu);  // K is even in the order
  int nl = static_cast<int>(std::lround(nu));
  double mu = nu - nl;
  if (mu >= 0.5) {
    mu -= 1.0;
    ++nl;
  }
  const bool snapped_integer = std::abs(mu) < 1e-6;
  if (snapped_integer) mu = 0.0;

  double klo, khi;
  int terms = 0;
  double log_scale = 0.0;
  Method method;
  if (x <= 2.0) {
    k_temme(mu, x, &klo, &khi, &terms);
    method = snapped_integer ? Method::series : Method::reflection;
  } else if (x <= 20.0) {
    k_cf2(mu, x, &klo, &khi, &terms);
    method = Method::continued_fraction;
  } else {
    double tr_lo = 0.0, tr_hi = 0.0;
    int t_lo = 0, t_hi = 0;
    const double pref = std::sqrt(kPi / (2.0 * x));
    klo = pref * asymptotic_tail(mu, x, +1.0, &tr_lo, &t_lo);
    khi = pref * asymptotic_tail(mu + 1.0, x, +1.0, &tr_hi, &t_hi);
    terms = t_lo + t_hi;
    log_scale = -x;  // e^{-x} factored out to survive large x
    method = Method::asymptotic;
  }

  // Upward recurrence K_{m+1} = K_{m-1} + (2m/x) K_m is stable (K grows with
  // the order); rescale on the way to survive huge intermediate values. For
  // tiny x the multiplier 2m/x alone can overflow a double even after a
  // rescale, so that step falls back to its log, which is then exact to
  // machine precision because the skipped K_{m-1} term is O(x^2/m) relative.
  for (int j = 1; j < nl; ++j) {
    if (khi > kRescaleAt) {
      klo /= khi;
      log_scale += std::log(khi);
      khi = 1.0;
    }
    const double knext = klo + (2.0 * (mu + j) / x) * khi;
    if (std::isfinite(knext)) {
      klo = khi;
      khi = knext;
    } else {
      log_scale += std::log(2.0 * (mu + j)) - std::log(x) + std::log(khi);
      klo = 0.0;
      khi = 1.0;
    }
  }
  const double result = (nl == 0) ? klo : khi;
  const double rel_err = (terms + 4.0 * nl + 8.0) * kEps;
  EvalResult r = package(result, log_scale, rel_err, method);
  return r;
}

double log_bessel_k(double nu, double x) {
  const EvalResult r = bessel_k(nu, x);
  if (r.log_scaled) return r.value;
  return std::log(r.value);
}

double bessel_i_ratio(double nu, double x) {
  if (!(nu > -1.0)) throw domain_error("bessel_i_ratio: requires nu > -1");
  if (!(x >= 0.0)) throw domain_error("bessel_i_ratio: requires x >= 0");
  if (x == 0.0) return 0.0;
  // Modified Lentz evaluation of the continued fraction
  // I_{nu+1}/I_nu = 1 / (2(nu+1)/x + 1 / (2(nu+2)/x + ...)).
  const double tiny = std::sqrt(DBL_MIN);
  double C = tiny, f = tiny, D = 0.0;
  for (int k = 1; k <= kCfCap; ++k) {
    const double b = 2.0 * (nu + k) / x;
    C = b + 1.0 / C;
    D = b + D;
    if (C == 0.0) C = tiny;
    if (D == 0.0) D = tiny;
    D = 1.0 / D;
    const double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) <= 2.0 * kEps) return f;
  }
  throw convergence_error("bessel_i_ratio: continued fraction did not converge");
}

}  // namespace phasequant::specfun
