#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace phasequant::irrep {

// Parameters of a lowest-weight ladder representation: the positive label k
// and the unit phase carried by the ladder matrix elements. The phase is
// stored as an angle so |omega| = 1 holds exactly.
struct IrrepParams {
  double k = 1.0;
  double omega_angle = 0.0;

  std::complex<double> omega() const {
    return {std::cos(omega_angle), std::sin(omega_angle)};
  }
};

enum class OperatorKind { K1, K2, K3, Kplus, Kminus, CosPhi, SinPhi };

const char* kind_name(OperatorKind kind);
OperatorKind kind_from_name(const std::string& name);  // throws domain_error

// Truncated tridiagonal matrix on the number basis |k,0..dim-1>.
//
// Storage: off_diagonal[j] couples basis states j and j+1. For every kind
// except Kplus it is the (j, j+1) entry; Hermitian kinds imply the (j+1, j)
// entry is its conjugate. For Kplus (strictly lower triangular) the stored
// value is the (j+1, j) entry. dense()/apply() resolve this uniformly.
struct TridiagonalOperator {
  OperatorKind kind;
  IrrepParams params;
  int dim = 0;
  std::vector<double> diagonal;
  std::vector<std::complex<double>> off_diagonal;

  Eigen::MatrixXcd dense() const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
};

// Normalized coefficient vector over |k,0..N-1> plus the estimated squared
// norm lost to truncation.
struct StateVector {
  IrrepParams params;
  Eigen::VectorXcd coeffs;
  double tail_bound = 0.0;
};

// Raising magnitude sqrt((2k+n)(n+1)): |k,n> -> |k,n+1>.
double ladder_up_coeff(double k, int n);

// Lowering magnitude sqrt((2k+n-1) n): |k,n> -> |k,n-1>; exactly 0 at n = 0.
double ladder_down_coeff(double k, int n);

// Off-diagonal profile of the phase-cosine operator:
// f(k,0) = 0, f(k,n) = sqrt(n(2k+n-1)) (1/(k+n) + 1/(k+n-1)) for n >= 1.
double f_coeff(double k, int n);

// Scalar value k(1-k) taken by K1^2 + K2^2 - K3^2 on the representation.
double casimir_eigenvalue(double k);

TridiagonalOperator build_operator(OperatorKind kind, const IrrepParams& params, int dim);

// Max |entry| of K1^2 + K2^2 - K3^2 - k(1-k)·Id over the interior block
// (rows/cols 0..dim-3); with include_boundary the full truncated matrix is
// measured, exposing the O(dim) truncation defect in the last rows.
// Entries are accumulated in extended precision: the identity involves
// squares of the sqrt-valued couplings, and plain double roundoff of those
// squares alone exceeds 1e-12 near dim 200.
double casimir_defect(const IrrepParams& params, int dim, bool include_boundary = false);

// Interior max-entry residuals of [K3,K1]-iK2, [K3,K2]+iK1, [K1,K2]+iK3,
// in that order. Same extended-precision policy as casimir_defect.
std::array<double, 3> commutator_defect(const IrrepParams& params, int dim);

}  // namespace phasequant::irrep
