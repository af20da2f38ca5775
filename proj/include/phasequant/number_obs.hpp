#pragma once

#include <complex>
#include <vector>

namespace phasequant::number_obs {

struct KMoments {
  double mean_K1;
  double mean_K2;
  double var_K1;
  double var_K2;
};

// Moments of K1, K2 in the number state |k,n>: means vanish, both variances
// equal n(2k+n)/2 + k/2.
KMoments k_moments(double k, int n);

struct TrigMoments {
  double mean_cos;
  double mean_sin;
  double second_moment;  // <cos^2> = <sin^2> = (f_{n+1}^2 + f_n^2)/16
  std::complex<double> commutator_expect;  // <[sin, cos]> = (f_{n+1}^2 - f_n^2)/(8i)
};

TrigMoments trig_moments(double k, int n);

// <cos^2> in the lowest state |k,0>: (2k+1)^2 / (8k(k+1)^2). Cross-checked
// against trig_moments(k, 0) internally.
double ground_state_moment(double k);

// The k at which the ground-state second moment equals 1: computed both from
// the closed radical (Cardano root of 8k^3+12k^2+4k-1) and by bracketing
// root-finding on ground_state_moment(k)-1; the two must agree to 1e-12.
double k1_lower_bound();

struct CorrespondenceRow {
  long long n;
  double casimir_identity_residual;  // <K1^2>+<K2^2>-<K3^2> - k(1-k)
  double second_moment_minus_half;
  double commutator_magnitude;
};

struct CorrespondenceReport {
  double k;
  std::vector<CorrespondenceRow> rows;
  double slope_second_moment;  // log-log fit of |second_moment - 1/2| vs n
  double slope_commutator;     // log-log fit of |commutator| vs n
};

// Closed-form large-n decay study over n_list (entries >= 1).
CorrespondenceReport correspondence_report(double k, const std::vector<long long>& n_list);

}  // namespace phasequant::number_obs
