#pragma once

#include <complex>
#include <vector>

#include <Eigen/Sparse>

namespace phasequant::two_mode {

// Bilinear two-oscillator generators on the truncated product basis
// |m1, m2>, 0 <= m1, m2 < M, flattened as idx = m1 * M + m2.
enum class TwoModeKind { K3a, Kplus_a, Kminus_a, N1, N2 };

const char* kind_name(TwoModeKind kind);

struct TwoModeOperator {
  TwoModeKind kind;
  int M;
  Eigen::SparseMatrix<std::complex<double>> matrix;
};

// K3a = (N1 + N2 + 1)/2, Kplus_a = a1^dag a2^dag, Kminus_a = a1 a2.
TwoModeOperator build_two_mode(TwoModeKind kind, int M);

// Max entry of [K+, K-] + 2 K3 and [K3, K+/-] -/+ K+/- over columns whose
// state has both mode indices at most M-2 (where truncation cannot leak in).
double two_mode_commutator_defect(int M);

struct SectorState {
  int m1, m2, n;  // chain position n counts steps above the sector floor
};

// Fixed-difference chain m1 - m2 = delta; carries the ladder representation
// with Bargmann index k = (|delta| + 1)/2.
struct Sector {
  int delta;
  double k;
  std::vector<SectorState> states;
  double max_element_defect;  // raising/lowering elements vs ladder coefficients
  double max_k3_defect;       // K3a eigenvalue vs n + k
};

// Decomposes the M^2-state product basis into difference sectors and verifies
// each chain against the abstract ladder representation.
std::vector<Sector> irrep_decomposition(int M);

struct DiracCheck {
  double defect;  // max entry of B^2 - diag(N, N+1) over interior columns
  bool eigen_ok;  // (|n>, +/-|n-1>)/sqrt(2) are +/-sqrt(n) eigenvectors
};

// Off-diagonal square root of the number operator on a doubled Fock space:
// B = [[0, b^dag], [b, 0]] squares to diag(N, N+1).
DiracCheck dirac_sqrt_check(int M);

}  // namespace phasequant::two_mode
