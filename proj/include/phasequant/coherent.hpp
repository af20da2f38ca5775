#pragma once

#include <complex>
#include <vector>

#include "phasequant/irrep.hpp"

namespace phasequant::coherent {

// Lowering-eigenvector state |z>, z = rho e^{i alpha}. A nontrivial omega in
// params is absorbed into the coefficient phases (alpha_eff) so the state is
// an exact z-eigenvector of the omega-dressed lowering matrix.
struct CoherentSpec {
  irrep::IrrepParams params;
  double rho = 0.0;
  double alpha = 0.0;

  std::complex<double> z() const {
    return {rho * std::cos(alpha), rho * std::sin(alpha)};
  }
  double alpha_eff() const { return alpha + params.omega_angle; }
};

// Smallest basis size with occupation mean + 12 sigma inside and explicit
// probability tail below 1e-12.
int recommended_dim(const CoherentSpec& spec);

// Normalized coefficients in log-space; throws truncation_error (carrying the
// required dim) when dim is too small for the 1e-12 tail rule.
irrep::StateVector coherent_vector(const CoherentSpec& spec, int dim);

struct PhotonDistribution {
  std::vector<double> p;  // p[n] for n = 0..n_max
  double tail;            // probability mass beyond n_max
};

PhotonDistribution photon_distribution(const CoherentSpec& spec, int n_max);

struct K3Moments {
  double mean;    // k + rho I_{2k}(2rho)/I_{2k-1}(2rho)
  double second;  // k^2 + rho^2 + rho r
  double var;     // rho^2 (1 - r^2) + (1 - 2k) rho r
};

K3Moments k3_moments(const CoherentSpec& spec);

struct K12Moments {
  double mean_K1;  // rho cos(alpha)
  double mean_K2;  // -rho sin(alpha)
  double var_K1;   // <K3>/2
  double var_K2;   // <K3>/2
};

K12Moments k12_moments(const CoherentSpec& spec);

struct UncertaintyCheck {
  double lhs;  // var_K1 * var_K2
  double rhs;  // <K3>^2 / 4
  bool saturated;
};

// Product-form uncertainty data from explicit variances and <K3>; saturated
// means |lhs - rhs| <= 1e-10 rhs.
UncertaintyCheck uncertainty_product(double var_K1, double var_K2, double mean_K3);
UncertaintyCheck uncertainty_check(const CoherentSpec& spec);

enum class GMethod { series, integral };

// g(k, rho) = sum_n (1/(n+k) + 1/(n+k+1)) rho^{2(n+k)} / (n! Gamma(2k+n)),
// equivalently int_0^{2rho} I_{2k-1} + (1/4rho^2) int_0^{2rho} u^2 I_{2k-1}.
// Plain-value evaluation; overflows double for rho > 320 (domain error),
// so use g_over_bessel for large rho.
double g_function(double k, double rho, GMethod method);

// g(k, rho) / I_{2k-1}(2 rho) evaluated with shared rescaled weights, valid
// for any rho where the plain g would overflow. Tends to 2 as rho -> inf.
double g_over_bessel(double k, double rho);

struct TrigExpectation {
  double mean_cos;  // (1/2) cos(alpha) g/I
  double mean_sin;  // (1/2) sin(alpha) g/I
};

TrigExpectation trig_expectation(const CoherentSpec& spec);

// <cos^2> via sum_n |<k,n| cos |z>|^2 over the truncated basis.
double trig_second_moment(const CoherentSpec& spec, int dim);

struct QuadConfig {
  double cutoff = 0.0;          // 0 -> max(20, 10k + 5n)
  double target_abs_err = 1e-9; // quadrature error budget
};

struct CompletenessResult {
  double integral;           // must be 1 up to the truncated tail
  double tail_bound;         // rigorous bound on the mass beyond the cutoff
  double quad_err_estimate;
};

// Radial completeness integral int_0^R 4 rho^{2(n+k)} K_{2k-1}(2rho)
// / (n! Gamma(2k+n)) d rho, whose untruncated value is exactly 1.
CompletenessResult completeness_check(double k, int n, const QuadConfig& cfg = {});

// <zA|zB> by coefficient contraction; requires identical params.
std::complex<double> overlap(const CoherentSpec& a, const CoherentSpec& b, int dim);

}  // namespace phasequant::coherent
