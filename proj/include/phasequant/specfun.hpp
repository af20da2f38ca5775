#pragma once

#include <string>

// Self-contained special-function kernel: log-gamma, modified Bessel functions
// I_nu and K_nu, and the ratio I_{nu+1}/I_nu. No external special-function
// library is used anywhere in this project; every reproduction number flows
// through these routines.

namespace phasequant::specfun {

enum class Method { series, asymptotic, continued_fraction, reflection };

const char* method_name(Method m);

struct EvalResult {
  // Function value. When log_scaled is true the value field holds the natural
  // logarithm of the (positive) result instead, because the result itself
  // over- or underflows double.
  double value = 0.0;
  // Estimated absolute error of the value field (of the log when log_scaled).
  double abs_err_estimate = 0.0;
  Method method = Method::series;
  bool log_scaled = false;
};

// log Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms) with
// reflection below 0.5. Relative error ~1e-14 across [1e-3, 1e6]
// (absolute ~1e-15 near the zeros at x = 1, 2).
double log_gamma(double x);

// I_nu(x) for nu > -1, x >= 0. Ascending series below the switch point
// x = max(30, 2 nu^2), asymptotic expansion above it. Exact at x = 0
// (1 for nu = 0, 0 for nu > 0, domain error for nu < 0 where I diverges).
EvalResult bessel_i(double nu, double x);

// log I_nu(x) regardless of magnitude (wraps bessel_i's log_scaled handling).
double log_bessel_i(double nu, double x);

// K_nu(x) for x > 0; the order may be any real (K is even in nu). The order is
// reduced to mu in [-0.5, 0.5) plus an integer and recursed upward. Branches:
// Temme series for x <= 2 (tagged reflection for non-integer reduced order,
// series for integer), Thompson-Barnett continued fraction for 2 < x <= 20,
// asymptotic expansion for x > 20. Orders within 1e-6 of an integer are
// snapped to that integer and evaluated there exactly; value and
// abs_err_estimate then refer to the snapped order.
EvalResult bessel_k(double nu, double x);

// log K_nu(x) regardless of magnitude.
double log_bessel_k(double nu, double x);

// I_{nu+1}(x) / I_nu(x) for nu > -1, x >= 0, by the modified Lentz continued
// fraction; never formed as a quotient of I evaluations. Lies in [0, 1) for
// nu >= 0; equals 0 at x = 0.
double bessel_i_ratio(double nu, double x);

}  // namespace phasequant::specfun
