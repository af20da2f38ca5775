#pragma once

#include <vector>

#include <Eigen/Dense>

namespace phasequant::spectral {

struct RatioSupremum {
  double sup;
  double at_rho;
};

struct GridConfig {
  double rho_min = 1e-3;
  int points = 2000;
};

// sup_{rho in [rho_min, rho_max]} g(k, rho) / I_{2k-1}(2 rho), located on a
// log grid and polished by golden-section search. Requires rho_max >= 50 so
// the large-rho plateau (limit 2) is always sampled.
RatioSupremum ratio_supremum(double k, double rho_max, const GridConfig& cfg = {});

// A state family is admissible when the supremum stays at or below 2.
bool admissible(double k, double rho_max = 500.0, const GridConfig& cfg = {});

struct ScanReport {
  std::vector<double> k_grid;      // every k evaluated, ascending
  std::vector<double> sup_ratio;   // supremum at each k
  std::vector<double> argmax_rho;  // where the supremum was attained
  double bracket_lo = 0.0;         // final bisection bracket: sup > 2 at lo,
  double bracket_hi = 0.0;         // sup <= 2 at hi
};

// Bisection for the admissibility threshold. Requires the initial interval to
// bracket it (sup > 2 at k_lo, sup <= 2 at k_hi); the recorded sup values must
// be monotone in k or the scan aborts with a convergence error.
ScanReport threshold_scan(double k_lo, double k_hi, double tol, double rho_max = 500.0);

struct CosSpectrum {
  Eigen::VectorXd eigenvalues;  // ascending
  double max_residual;          // max over pairs of ||T v - lambda v||_2
};

// Full spectrum of the truncated cosine operator (dim x dim). Phases on the
// off-diagonal are gauged away by a diagonal unitary, so the solve runs on the
// real symmetric representative; every eigenpair is verified to residual
// 1e-10 * ||T||.
CosSpectrum cos_spectrum(double k, int dim);

struct ImproperVector {
  std::vector<double> a;   // recursion values a_0..a_last
  bool overflowed;         // hit |a| > 1e300 before n_max
  int overflow_index;      // first index past the overflow threshold, else -1
};

// Formal eigenvector recursion a_{n+1} = (4 mu a_n - f_n a_{n-1}) / f_{n+1}
// with a_0 = 1. For |mu| > 1 the entries grow exponentially, signalling that
// mu lies outside the operator's spectrum; growth is reported via the
// overflow index instead of producing infinities.
ImproperVector improper_eigenvector(double k, double mu, int n_max);

}  // namespace phasequant::spectral
