#include "phasequant/irrep.hpp"

#include <algorithm>
#include <cmath>

#include "phasequant/errors.hpp"

namespace phasequant::irrep {

namespace {

void check_kn(const char* who, double k, int n) {
  if (!(k > 0.0)) throw domain_error(std::string(who) + ": requires k > 0");
  if (n < 0) throw domain_error(std::string(who) + ": requires n >= 0");
}

}  // namespace

const char* kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::K1: return "K1";
    case OperatorKind::K2: return "K2";
    case OperatorKind::K3: return "K3";
    case OperatorKind::Kplus: return "Kplus";
    case OperatorKind::Kminus: return "Kminus";
    case OperatorKind::CosPhi: return "CosPhi";
    case OperatorKind::SinPhi: return "SinPhi";
  }
  return "unknown";
}

OperatorKind kind_from_name(const std::string& name) {
  if (name == "K1") return OperatorKind::K1;
  if (name == "K2") return OperatorKind::K2;
  if (name == "K3") return OperatorKind::K3;
  if (name == "Kplus") return OperatorKind::Kplus;
  if (name == "Kminus") return OperatorKind::Kminus;
  if (name == "CosPhi") return OperatorKind::CosPhi;
  if (name == "SinPhi") return OperatorKind::SinPhi;
  throw domain_error("unknown operator kind: " + name);
}

double ladder_up_coeff(double k, int n) {
  check_kn("ladder_up_coeff", k, n);
  return std::sqrt((2.0 * k + n) * (n + 1.0));
}

double ladder_down_coeff(double k, int n) {
  check_kn("ladder_down_coeff", k, n);
  // Same numbers as the raising coefficient one rung down, so the adjoint
  // relation between the ladder operators holds exactly in floating point.
  if (n == 0) return 0.0;
  return ladder_up_coeff(k, n - 1);
}

double f_coeff(double k, int n) {
  check_kn("f_coeff", k, n);
  if (n == 0) return 0.0;
  return std::sqrt(n * (2.0 * k + n - 1.0)) * (1.0 / (k + n) + 1.0 / (k + n - 1.0));
}

double casimir_eigenvalue(double k) {
  if (!(k > 0.0)) throw domain_error("casimir_eigenvalue: requires k > 0");
  return k * (1.0 - k);
}

TridiagonalOperator build_operator(OperatorKind kind, const IrrepParams& params, int dim) {
  if (!(params.k > 0.0)) throw domain_error("build_operator: requires k > 0");
  if (dim < 2) throw domain_error("build_operator: requires dim >= 2");
  const double k = params.k;
  const std::complex<double> w = params.omega();
  const std::complex<double> wc = std::conj(w);
  const std::complex<double> i(0.0, 1.0);

  TridiagonalOperator op;
  op.kind = kind;
  op.params = params;
  op.dim = dim;
  op.diagonal.assign(dim, 0.0);
  op.off_diagonal.assign(dim - 1, {0.0, 0.0});

  if (kind == OperatorKind::K3) {
    for (int n = 0; n < dim; ++n) op.diagonal[n] = k + n;
    return op;
  }
  for (int j = 0; j + 1 < dim; ++j) {
    const double u = ladder_up_coeff(k, j);
    const double f = f_coeff(k, j + 1);
    switch (kind) {
      case OperatorKind::K1: op.off_diagonal[j] = wc * (u / 2.0); break;
      case OperatorKind::K2: op.off_diagonal[j] = i * wc * (u / 2.0); break;
      case OperatorKind::Kplus: op.off_diagonal[j] = w * u; break;  // (j+1, j) entry
      case OperatorKind::Kminus: op.off_diagonal[j] = wc * u; break;
      case OperatorKind::CosPhi: op.off_diagonal[j] = wc * (f / 4.0); break;
      case OperatorKind::SinPhi: op.off_diagonal[j] = -i * wc * (f / 4.0); break;
      case OperatorKind::K3: break;
    }
  }
  return op;
}

Eigen::MatrixXcd TridiagonalOperator::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) m(n, n) = diagonal[n];
  const bool hermitian = kind == OperatorKind::K1 || kind == OperatorKind::K2 ||
                         kind == OperatorKind::K3 || kind == OperatorKind::CosPhi ||
                         kind == OperatorKind::SinPhi;
  for (int j = 0; j + 1 < dim; ++j) {
    if (kind == OperatorKind::Kplus) {
      m(j + 1, j) = off_diagonal[j];
    } else {
      m(j, j + 1) = off_diagonal[j];
      if (hermitian) m(j + 1, j) = std::conj(off_diagonal[j]);
    }
  }
  return m;
}

Eigen::VectorXcd TridiagonalOperator::apply(const Eigen::VectorXcd& v) const {
  if (v.size() != dim) throw mismatch_error("apply: vector length != operator dim");
  Eigen::VectorXcd r(dim);
  const bool hermitian = kind != OperatorKind::Kplus && kind != OperatorKind::Kminus;
  for (int n = 0; n < dim; ++n) {
    std::complex<double> acc = diagonal[n] * v[n];
    if (kind == OperatorKind::Kplus) {
      if (n > 0) acc += off_diagonal[n - 1] * v[n - 1];
    } else {
      if (n + 1 < dim) acc += off_diagonal[n] * v[n + 1];
      if (hermitian && n > 0) acc += std::conj(off_diagonal[n - 1]) * v[n - 1];
    }
    r[n] = acc;
  }
  return r;
}

namespace {

// The algebraic identities below cancel squares of the sqrt-valued couplings
// against exact integers; long double keeps that cancellation noise near
// 1e-15 where double alone would sit above 1e-12 by dim ~ 200. The defects
// are phase-independent (a diagonal unitary conjugation multiplies each
// entry by a unit factor), so the real omega = 1 matrices suffice.
struct DefectArrays {
  std::vector<long double> a;  // K1 = K2-magnitude couplings u_j / 2
  std::vector<long double> d;  // K3 diagonal k + n
};

DefectArrays defect_arrays(double k, int dim) {
  DefectArrays out;
  out.a.resize(dim - 1);
  out.d.resize(dim);
  const long double kl = k;
  for (int j = 0; j + 1 < dim; ++j)
    out.a[j] = sqrtl((2.0L * kl + j) * (j + 1.0L)) / 2.0L;
  for (int n = 0; n < dim; ++n) out.d[n] = kl + n;
  return out;
}

}  // namespace

double casimir_defect(const IrrepParams& params, int dim, bool include_boundary) {
  if (dim < 4) throw domain_error("casimir_defect: requires dim >= 4");
  const auto [a, d] = defect_arrays(params.k, dim);
  const long double target = static_cast<long double>(params.k) * (1.0L - params.k);
  const int last = include_boundary ? dim - 1 : dim - 3;
  long double worst = 0.0L;
  for (int j = 0; j <= last; ++j) {
    // Diagonal of K1^2 + K2^2 - K3^2: each of K1^2, K2^2 contributes
    // a_{j-1}^2 + a_j^2 (the j = dim-1 row loses the a_{dim-1} coupling).
    long double s = 0.0L;
    if (j > 0) s += 2.0L * a[j - 1] * a[j - 1];
    if (j + 1 < dim) s += 2.0L * a[j] * a[j];
    const long double diag = s - d[j] * d[j] - target;
    if (fabsl(diag) > worst) worst = fabsl(diag);
    // (j, j+2) band: a_j a_{j+1} from K1^2 cancels -a_j a_{j+1} from K2^2.
    if (j + 2 <= last || (include_boundary && j + 2 < dim)) {
      const long double band = a[j] * a[j + 1] - a[j] * a[j + 1];
      if (fabsl(band) > worst) worst = fabsl(band);
    }
  }
  return static_cast<double>(worst);
}

std::array<double, 3> commutator_defect(const IrrepParams& params, int dim) {
  if (dim < 4) throw domain_error("commutator_defect: requires dim >= 4");
  const auto [a, d] = defect_arrays(params.k, dim);
  const int last = dim - 3;
  long double w1 = 0.0L, w2 = 0.0L, w3 = 0.0L;
  for (int j = 0; j <= last; ++j) {
    if (j + 1 <= last) {
      // [K3,K1] - iK2 and [K3,K2] + iK1 live on the first off-diagonals:
      // (d_j - d_{j+1}) a_j + a_j   and the mirrored lower entry.
      const long double r1 = (d[j] - d[j + 1]) * a[j] + a[j];
      const long double r1l = (d[j + 1] - d[j]) * a[j] - a[j];
      w1 = std::max({w1, fabsl(r1), fabsl(r1l)});
      const long double r2 = (d[j] - d[j + 1]) * a[j] + a[j];  // * i
      const long double r2l = (d[j + 1] - d[j]) * a[j] - a[j];
      w2 = std::max({w2, fabsl(r2), fabsl(r2l)});
    }
    // [K1,K2] + iK3: diagonal 2(a_{j-1}^2 - a_j^2) + d_j (times i)...
    long double diag = d[j];
    if (j > 0) diag += 2.0L * a[j - 1] * a[j - 1];
    if (j + 1 < dim) diag -= 2.0L * a[j] * a[j];
    w3 = std::max(w3, fabsl(diag));
    // ...and (j, j±2) bands that cancel identically.
    if (j + 2 <= last) {
      const long double band = a[j] * a[j + 1] - a[j] * a[j + 1];
      w3 = std::max(w3, fabsl(band));
    }
  }
  return {static_cast<double>(w1), static_cast<double>(w2), static_cast<double>(w3)};
}

}  // namespace phasequant::irrep
