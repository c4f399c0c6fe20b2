#include "pptineq/qmat.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>

namespace pptineq {

namespace {

void require_finite(const Matrix& m) {
  if (!m.allFinite()) throw std::invalid_argument("matrix has NaN/Inf entries");
}

void require_hermitian(const Matrix& m, double tol) {
  double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw std::invalid_argument("matrix not Hermitian (max deviation " +
                                std::to_string(dev) + ")");
  }
}

int qubits_for_dim(std::int64_t d) {
  int n = 0;
  while ((std::int64_t{1} << n) < d) ++n;
  if ((std::int64_t{1} << n) != d) {
    throw std::invalid_argument("dimension is not a power of two");
  }
  return n;
}

// Index bitmask for a qubit subset: qubit q lives at bit (N-1-q), q_0 MSB.
std::int64_t index_mask(QubitSubset s, int n_qubits) {
  std::int64_t m = 0;
  for (int q = 0; q < n_qubits; ++q)
    if (s.contains(q)) m |= std::int64_t{1} << (n_qubits - 1 - q);
  return m;
}

}  // namespace

HermitianOperator::HermitianOperator(int n_qubits, Matrix mat,
                                     const Tolerances& tol)
    : n_qubits_(n_qubits), mat_(std::move(mat)) {
  std::int64_t d = dim_for(n_qubits);
  if (mat_.rows() != d || mat_.cols() != d) {
    throw std::invalid_argument("matrix shape does not match qubit count");
  }
  require_finite(mat_);
  require_hermitian(mat_, tol.herm);
}

PureState::PureState(int n_qubits, Vector amplitudes, const Tolerances& tol)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  std::int64_t d = dim_for(n_qubits);
  if (amps_.size() != d) {
    throw std::invalid_argument("amplitude count does not match qubit count");
  }
  if (!amps_.allFinite()) throw std::invalid_argument("non-finite amplitude");
  double n2 = amps_.squaredNorm();
  if (std::abs(n2 - 1.0) > tol.norm) {
    throw std::invalid_argument("state not normalized: ||psi||^2 = " +
                                std::to_string(n2));
  }
}

DensityOperator::DensityOperator(int n_qubits, Matrix mat,
                                 const Tolerances& tol)
    : n_qubits_(n_qubits), mat_(std::move(mat)) {
  std::int64_t d = dim_for(n_qubits);
  if (mat_.rows() != d || mat_.cols() != d) {
    throw std::invalid_argument("matrix shape does not match qubit count");
  }
  require_finite(mat_);
  require_hermitian(mat_, tol.herm);
  double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw std::invalid_argument("state trace " + std::to_string(tr) +
                                " not 1");
  }
  double lam = min_eigenvalue(HermitianOperator(n_qubits_, mat_, tol));
  if (lam < -tol.psd) {
    throw std::invalid_argument("state not PSD: lambda_min = " +
                                std::to_string(lam));
  }
}

DensityOperator DensityOperator::projector(const PureState& psi,
                                           const Tolerances& tol) {
  Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityOperator(psi.n_qubits(), std::move(m), tol);
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
  int n = a.n_qubits() + b.n_qubits();
  dim_for(n);  // capacity check
  Matrix m = Eigen::kroneckerProduct(a.matrix(), b.matrix());
  return HermitianOperator(n, std::move(m));
}

PureState kron(const PureState& a, const PureState& b) {
  int n = a.n_qubits() + b.n_qubits();
  dim_for(n);
  Vector v(a.dim() * b.dim());
  for (std::int64_t i = 0; i < a.dim(); ++i)
    v.segment(i * b.dim(), b.dim()) = a.amplitudes()(i) * b.amplitudes();
  return PureState(n, std::move(v));
}

namespace {

Matrix partial_transpose_matrix(const Matrix& m, QubitSubset s, int n) {
  s.require_valid_for(n);
  std::int64_t mask = index_mask(s, n);
  std::int64_t d = m.rows();
  Matrix out(d, d);
  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t j = 0; j < d; ++j) {
      std::int64_t si = (i & ~mask) | (j & mask);
      std::int64_t sj = (j & ~mask) | (i & mask);
      out(i, j) = m(si, sj);
    }
  }
  return out;
}

}  // namespace

HermitianOperator partial_transpose(const HermitianOperator& op, QubitSubset s) {
  return HermitianOperator(op.n_qubits(),
                           partial_transpose_matrix(op.matrix(), s, op.n_qubits()));
}

HermitianOperator partial_transpose(const DensityOperator& rho, QubitSubset s) {
  return HermitianOperator(rho.n_qubits(),
                           partial_transpose_matrix(rho.matrix(), s, rho.n_qubits()));
}

std::vector<double> hermitian_eigenvalues(const HermitianOperator& op) {
  if (op.n_qubits() > kMaxFullSpectrumQubits) {
    throw CapacityError("full spectrum limited to N <= " +
                        std::to_string(kMaxFullSpectrumQubits));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix(),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver failed to converge");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

namespace {

// Extremal eigenvalue by power iteration on (sigma I - A), with sigma an
// upper bound on the spectrum from Gershgorin discs. Deterministic start.
double min_eigenvalue_iterative(const Matrix& a) {
  std::int64_t d = a.rows();
  double sigma = 0.0;
  for (std::int64_t i = 0; i < d; ++i) {
    double radius = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
    sigma = std::max(sigma, a(i, i).real() + radius);
  }
  Matrix b = sigma * Matrix::Identity(d, d) - a;

  Vector v = Vector::Constant(d, Complex(1.0, 0.0));
  for (std::int64_t i = 0; i < d; ++i) v(i) += Complex(0.0, 1e-3 * ((i % 7) + 1));
  v.normalize();

  double mu = 0.0;
  constexpr int kMaxIters = 20000;
  for (int it = 0; it < kMaxIters; ++it) {
    Vector w = b * v;
    double mu_next = w.norm();
    w /= mu_next;
    double delta = (w - v).norm();
    v = w;
    mu = mu_next;
    if (delta < 1e-13) return sigma - mu;
  }
  throw NumericalError("extremal eigenvalue iteration did not converge after " +
                       std::to_string(kMaxIters) + " iterations");
}

}  // namespace

double min_eigenvalue(const HermitianOperator& op) {
  if (op.n_qubits() <= kMaxFullSpectrumQubits) {
    return hermitian_eigenvalues(op).front();
  }
  return min_eigenvalue_iterative(op.matrix());
}

double pauli_string_expectation(const DensityOperator& rho,
                                std::span<const PauliAxis> settings) {
  int n = rho.n_qubits();
  if (static_cast<int>(settings.size()) != n) {
    throw std::invalid_argument("settings length must equal qubit count");
  }
  // Every x/y string is a signed anti-diagonal permutation: P|j> is a phase
  // times |~j|. The phase collects i or -i from each y site.
  std::int64_t d = rho.dim();
  std::int64_t all = d - 1;
  std::int64_t y_mask = 0;
  for (int q = 0; q < n; ++q) {
    if (settings[q] == PauliAxis::y) y_mask |= std::int64_t{1} << (n - 1 - q);
  }
  Complex sum = 0.0;
  for (std::int64_t j = 0; j < d; ++j) {
    // phase of <j~ | P | j>: product over y sites of (bit set ? -i : i)
    int n_y = std::popcount(static_cast<std::uint64_t>(y_mask));
    int n_y_set = std::popcount(static_cast<std::uint64_t>(j & y_mask));
    // i^{n_y} * (-1)^{n_y_set}
    static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex phase = i_pow[n_y % 4] * ((n_y_set % 2) ? -1.0 : 1.0);
    sum += rho.matrix()(j, all ^ j) * phase;
  }
  if (std::abs(sum.imag()) > 1e-9) {
    throw NumericalError("Pauli expectation has imaginary part " +
                         std::to_string(sum.imag()));
  }
  return sum.real();
}

double pauli_string_expectation_dense(const DensityOperator& rho,
                                      std::span<const PauliAxis> settings) {
  int n = rho.n_qubits();
  if (static_cast<int>(settings.size()) != n) {
    throw std::invalid_argument("settings length must equal qubit count");
  }
  Matrix sx(2, 2), sy(2, 2);
  sx << 0, 1, 1, 0;
  sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  Matrix p = (settings[0] == PauliAxis::x) ? sx : sy;
  for (int q = 1; q < n; ++q) {
    const Matrix& next = (settings[q] == PauliAxis::x) ? sx : sy;
    p = Eigen::kroneckerProduct(p, next).eval();
  }
  Complex tr = (p * rho.matrix()).trace();
  return tr.real();
}

double expectation(const HermitianOperator& op, const DensityOperator& rho,
                   const Tolerances& tol) {
  if (op.dim() != rho.dim()) {
    throw std::invalid_argument("operator/state dimension mismatch");
  }
  Complex tr = op.matrix().cwiseProduct(rho.matrix().transpose()).sum();
  if (std::abs(tr.imag()) > tol.eig) {
    throw NumericalError("expectation has imaginary part " +
                         std::to_string(tr.imag()));
  }
  return tr.real();
}

}  // namespace pptineq
