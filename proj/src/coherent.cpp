#include "phasequant/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "phasequant/errors.hpp"
#include "phasequant/specfun.hpp"

namespace phasequant::coherent {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTailRule = 1e-12;
// Plain-value g overflows double past this radius; g_over_bessel has no limit.
constexpr double kGMaxRho = 320.0;

void check_spec(const CoherentSpec& spec) {
  if (!(spec.params.k > 0.0)) throw domain_error("coherent: k must be positive");
  if (!(spec.rho >= 0.0) || !std::isfinite(spec.rho))
    throw domain_error("coherent: rho must be finite and nonnegative");
  if (!std::isfinite(spec.alpha)) throw domain_error("coherent: alpha must be finite");
}

// log of the squared normalization prefix: |c_n|^2 = exp(prefix) rho^{2n} / (n! Gamma(2k+n)).
double log_norm_prefix(double k, double rho) {
  return (2.0 * k - 1.0) * std::log(rho) - specfun::log_bessel_i(2.0 * k - 1.0, 2.0 * rho);
}

// Occupation probabilities p_0..p_{n_max} by the stable ratio recurrence.
std::vector<double> occupation(double k, double rho, int n_max) {
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (rho == 0.0) {
    p[0] = 1.0;
    return p;
  }
  const double rho2 = rho * rho;
  p[0] = std::exp(log_norm_prefix(k, rho) - specfun::log_gamma(2.0 * k));
  for (int n = 0; n < n_max; ++n)
    p[static_cast<std::size_t>(n) + 1] = p[static_cast<std::size_t>(n)] * rho2 / ((n + 1.0) * (2.0 * k + n));
  return p;
}

}  // namespace

int recommended_dim(const CoherentSpec& spec) {
  check_spec(spec);
  if (spec.rho == 0.0) return 2;
  const K3Moments m = k3_moments(spec);
  const double mean_n = m.mean - spec.params.k;
  const double sigma = std::sqrt(std::max(m.var, 0.0));
  const int floor_dim = static_cast<int>(std::ceil(mean_n + 12.0 * sigma)) + 1;

  const double k = spec.params.k;
  const double rho2 = spec.rho * spec.rho;
  double p = std::exp(log_norm_prefix(k, spec.rho) - specfun::log_gamma(2.0 * k));
  double cum = p;
  int n = 0;
  const int cap = 2000000;
  while (n < cap) {
    if (n + 1 >= floor_dim && 1.0 - cum < kTailRule) break;
    p *= rho2 / ((n + 1.0) * (2.0 * k + n));
    cum += p;
    ++n;
  }
  if (n >= cap)
    throw convergence_error("recommended_dim: tail rule not met within iteration cap");
  return n + 1;
}

irrep::StateVector coherent_vector(const CoherentSpec& spec, int dim) {
  check_spec(spec);
  if (dim < 2) throw domain_error("coherent_vector: dim must be at least 2");
  const int required = recommended_dim(spec);
  if (dim < required)
    throw truncation_error("coherent_vector: dim too small for the 1e-12 tail rule", required);

  irrep::StateVector state;
  state.params = spec.params;
  state.coeffs = Eigen::VectorXcd::Zero(dim);
  if (spec.rho == 0.0) {
    state.coeffs[0] = 1.0;
    state.tail_bound = 0.0;
    return state;
  }

  const double k = spec.params.k;
  const double half_prefix = 0.5 * log_norm_prefix(k, spec.rho);
  const double log_rho = std::log(spec.rho);
  const double phase_step = spec.alpha_eff();
  double norm_sq = 0.0;
  for (int n = 0; n < dim; ++n) {
    const double log_abs = half_prefix + n * log_rho -
                           0.5 * (specfun::log_gamma(n + 1.0) + specfun::log_gamma(2.0 * k + n));
    const double mag = std::exp(log_abs);
    state.coeffs[n] = std::polar(mag, phase_step * n);
    norm_sq += mag * mag;
  }
  state.tail_bound = std::max(0.0, 1.0 - norm_sq);
  return state;
}

PhotonDistribution photon_distribution(const CoherentSpec& spec, int n_max) {
  check_spec(spec);
  if (n_max < 0) throw domain_error("photon_distribution: n_max must be nonnegative");
  PhotonDistribution dist;
  dist.p = occupation(spec.params.k, spec.rho, n_max);
  double total = 0.0;
  for (double v : dist.p) total += v;
  dist.tail = std::max(0.0, 1.0 - total);
  return dist;
}

K3Moments k3_moments(const CoherentSpec& spec) {
  check_spec(spec);
  const double k = spec.params.k;
  const double rho = spec.rho;
  const double r = rho == 0.0 ? 0.0 : specfun::bessel_i_ratio(2.0 * k - 1.0, 2.0 * rho);
  K3Moments m;
  m.mean = k + rho * r;
  m.second = k * k + rho * rho + rho * r;
  m.var = rho * rho * (1.0 - r * r) + (1.0 - 2.0 * k) * rho * r;
  const double cross = m.second - m.mean * m.mean;
  if (std::abs(m.var - cross) > 1e-12 * std::max(1.0, m.second))
    throw internal_error("k3_moments: closed-form variance disagrees with second moment");
  return m;
}

K12Moments k12_moments(const CoherentSpec& spec) {
  const K3Moments k3 = k3_moments(spec);
  K12Moments m;
  m.mean_K1 = spec.rho * std::cos(spec.alpha);
  m.mean_K2 = -spec.rho * std::sin(spec.alpha);
  m.var_K1 = 0.5 * k3.mean;
  m.var_K2 = 0.5 * k3.mean;
  return m;
}

UncertaintyCheck uncertainty_product(double var_K1, double var_K2, double mean_K3) {
  UncertaintyCheck u;
  u.lhs = var_K1 * var_K2;
  u.rhs = 0.25 * mean_K3 * mean_K3;
  u.saturated = std::abs(u.lhs - u.rhs) <= 1e-10 * u.rhs;
  return u;
}

UncertaintyCheck uncertainty_check(const CoherentSpec& spec) {
  const K12Moments m = k12_moments(spec);
  const K3Moments k3 = k3_moments(spec);
  return uncertainty_product(m.var_K1, m.var_K2, k3.mean);
}

namespace {

double g_series(double k, double rho) {
  const double rho2 = rho * rho;
  double t = std::exp(2.0 * k * std::log(rho) - specfun::log_gamma(2.0 * k));
  double sum = 0.0;
  const int cap = 20000;
  for (int n = 0; n < cap; ++n) {
    const double b = 1.0 / (n + k) + 1.0 / (n + k + 1.0);
    const double term = t * b;
    sum += term;
    if (n > rho && term < 1e-18 * sum) return sum;
    t *= rho2 / ((n + 1.0) * (2.0 * k + n));
  }
  throw convergence_error("g_function: series did not converge");
}

// int_0^s u^{shift} I_nu(u) du by termwise integration of the ascending
// series; used to peel off the u^nu endpoint behaviour when nu < 0.
double endpoint_piece(double nu, double s, int shift) {
  const double log_half_s = std::log(0.5 * s);
  double sum = 0.0;
  for (int m = 0; m < 500; ++m) {
    const double expo = nu + 2.0 * m;
    const double term = std::exp(expo * log_half_s - specfun::log_gamma(m + 1.0) -
                                 specfun::log_gamma(nu + m + 1.0)) *
                        s / (expo + shift + 1.0);
    sum += term;
    if (m > 2 && std::abs(term) < 1e-18 * std::abs(sum)) return sum;
  }
  throw convergence_error("g_function: endpoint series did not converge");
}

double g_integral(double k, double rho) {
  using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;
  const double nu = 2.0 * k - 1.0;
  const double X = 2.0 * rho;
  const double split = nu < 0.0 ? std::min(1.0, X) : 0.0;

  double a_part = 0.0, b_part = 0.0, err = 0.0;
  if (split > 0.0) {
    a_part += endpoint_piece(nu, split, 0);
    b_part += endpoint_piece(nu, split, 2);
  }
  if (X > split) {
    const auto f_plain = [nu](double u) { return specfun::bessel_i(nu, u).value; };
    const auto f_weighted = [nu](double u) { return u * u * specfun::bessel_i(nu, u).value; };
    double ea = 0.0, eb = 0.0;
    a_part += Quad::integrate(f_plain, split, X, 12, 1e-13, &ea);
    b_part += Quad::integrate(f_weighted, split, X, 12, 1e-13, &eb);
    err = ea + eb / (4.0 * rho * rho);
  }
  const double g = a_part + b_part / (4.0 * rho * rho);
  if (err > 1e-11 * std::max(1.0, std::abs(g)))
    throw convergence_error("g_function: quadrature error estimate too large");
  return g;
}

}  // namespace

double g_function(double k, double rho, GMethod method) {
  if (!(k > 0.0)) throw domain_error("g_function: k must be positive");
  if (!(rho >= 0.0) || !std::isfinite(rho))
    throw domain_error("g_function: rho must be finite and nonnegative");
  if (rho > kGMaxRho)
    throw domain_error("g_function: plain value overflows for rho > 320; use g_over_bessel");
  if (rho == 0.0) {
    if (method == GMethod::integral)
      throw domain_error("g_function: integral form requires rho > 0");
    return 0.0;
  }
  return method == GMethod::series ? g_series(k, rho) : g_integral(k, rho);
}

double g_over_bessel(double k, double rho) {
  if (!(k > 0.0)) throw domain_error("g_over_bessel: k must be positive");
  if (!(rho >= 0.0) || !std::isfinite(rho))
    throw domain_error("g_over_bessel: rho must be finite and nonnegative");
  if (rho == 0.0) return 0.0;

  // Shared unnormalized weights w_n = rho^{2n}/(n! Gamma(2k+n) Gamma-free
  // prefactor): the rho^{2k} and Bessel normalizations cancel in the ratio.
  const double rho2 = rho * rho;
  double w = 1.0;
  double sw = 0.0, swb = 0.0;
  const int cap = 20000;
  for (int n = 0; n < cap; ++n) {
    const double b = 1.0 / (n + k) + 1.0 / (n + k + 1.0);
    sw += w;
    swb += w * b;
    if (n > rho && w < 1e-18 * sw) return rho * swb / sw;
    w *= rho2 / ((n + 1.0) * (2.0 * k + n));
    if (sw > 1e250) {
      w /= 1e250;
      sw /= 1e250;
      swb /= 1e250;
    }
  }
  throw convergence_error("g_over_bessel: series did not converge");
}

TrigExpectation trig_expectation(const CoherentSpec& spec) {
  check_spec(spec);
  const double c = 0.5 * g_over_bessel(spec.params.k, spec.rho);
  return {c * std::cos(spec.alpha), c * std::sin(spec.alpha)};
}

double trig_second_moment(const CoherentSpec& spec, int dim) {
  const irrep::StateVector v = coherent_vector(spec, dim);
  const irrep::TridiagonalOperator op =
      irrep::build_operator(irrep::OperatorKind::CosPhi, spec.params, dim);
  return op.apply(v.coeffs).squaredNorm();
}

CompletenessResult completeness_check(double k, int n, const QuadConfig& cfg) {
  if (!(k > 0.0)) throw domain_error("completeness_check: k must be positive");
  if (n < 0) throw domain_error("completeness_check: n must be nonnegative");
  const double R = cfg.cutoff > 0.0 ? cfg.cutoff : std::max(20.0, 10.0 * k + 5.0 * n);

  const double nu = 2.0 * k - 1.0;
  const double q = 2.0 * (n + k);
  const double log_norm = std::log(4.0) - specfun::log_gamma(n + 1.0) - specfun::log_gamma(2.0 * k + n);
  const double rho_floor = 1e-280;
  const auto integrand = [&](double rho) {
    if (rho < rho_floor) return 0.0;
    return std::exp(log_norm + q * std::log(rho) + specfun::log_bessel_k(nu, 2.0 * rho));
  };

  // Near 0 the integrand behaves like rho^{2n + min(2k, 1)} up to a log
  // factor: continuous but not smooth, and for 2n + 4k < 1 even unbounded
  // (still integrable). Tanh-sinh quadrature absorbs that endpoint; the
  // remainder of the range is smooth and goes to adaptive Gauss-Kronrod.
  CompletenessResult res;
  const double split = std::min(1.0, R);
  double est = 0.0;
  boost::math::quadrature::tanh_sinh<double> ts;
  res.integral = ts.integrate(integrand, 0.0, split, 1e-12, &est);
  if (R > split) {
    using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;
    double est_gk = 0.0;
    res.integral += Quad::integrate(integrand, split, R, 12, 1e-13, &est_gk);
    est += est_gk;
  }

  // Account for the mass clipped below rho_floor, using
  // K_nu(2 rho) <= Gamma(max(|nu|, 1e-3)) rho^{-|nu|} - log(rho) there.
  const double anu = std::max(std::abs(nu), 1e-3);
  const double pwr = q - std::abs(nu) + 1.0;  // = 2n + min(4k, 2) > 0
  est += std::exp(log_norm + specfun::log_gamma(anu) + pwr * std::log(rho_floor) - std::log(pwr));
  est += std::exp(log_norm + (q + 1.0) * std::log(rho_floor)) * (-std::log(rho_floor) + 1.0);

  res.quad_err_estimate = est;
  if (est > cfg.target_abs_err)
    throw convergence_error("completeness_check: quadrature error estimate exceeds target");

  // Tail bound: for rho >= R, K_nu(2 rho) <= B sqrt(pi/(4 rho)) e^{-2 rho}
  // with B = 1.1 exp((4 nu^2 + 3)/(16 R)), and the remaining integrand is a
  // decaying exponential times rho^{q - 1/2}, integrated by parts once.
  const double bound_b = 1.1 * std::exp((4.0 * nu * nu + 3.0) / (16.0 * R));
  double denom = 2.0;
  if (q - 0.5 > 0.0) {
    denom = 2.0 - (q - 0.5) / R;
    if (denom <= 0.0)
      throw convergence_error("completeness_check: cutoff too small for a rigorous tail bound");
  }
  res.tail_bound = std::exp(log_norm + 0.5 * std::log(kPi / 4.0) + (q - 0.5) * std::log(R) -
                            2.0 * R + std::log(bound_b) - std::log(denom));
  return res;
}

std::complex<double> overlap(const CoherentSpec& a, const CoherentSpec& b, int dim) {
  if (a.params.k != b.params.k || a.params.omega_angle != b.params.omega_angle)
    throw mismatch_error("overlap: states live in different representations");
  const irrep::StateVector va = coherent_vector(a, dim);
  const irrep::StateVector vb = coherent_vector(b, dim);
  return va.coeffs.dot(vb.coeffs);
}

}  // namespace phasequant::coherent
