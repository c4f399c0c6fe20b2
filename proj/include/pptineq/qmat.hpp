// Dense complex-Hermitian operator algebra for N-qubit systems.
//
// Basis convention: computational basis index i encodes |q_0 q_1 ... q_{N-1}>
// with qubit 0 as the most significant bit. All bit manipulation in this
// library follows that convention.

#pragma once

#include <Eigen/Dense>

#include <bit>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pptineq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Hard cap on system size; dense 2^N x 2^N storage beyond this is refused.
inline constexpr int kMaxQubits = 14;

// Largest N for which full-spectrum eigendecomposition is used; above this
// only extremal eigenvalues are computed (iteratively).
inline constexpr int kMaxFullSpectrumQubits = 10;

struct Tolerances {
  double herm = 1e-10;   // max elementwise |A - A^dagger| deviation
  double psd = 1e-9;     // slack on lambda_min for PSD verdicts
  double eig = 1e-9;     // eigenvalue / expectation agreement
  double trace = 1e-12;  // |Tr(rho) - 1| for states
  double norm = 1e-12;   // ||psi||^2 - 1 for pure states
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

// Thrown when a requested system exceeds kMaxQubits (or a derived limit).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Thrown when numerical routines fail (non-convergence etc.).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::int64_t dim_for(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw CapacityError("qubit count " + std::to_string(n_qubits) +
                        " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  return std::int64_t{1} << n_qubits;
}

// Subset of qubit indices, stored as a bitmask with bit k <-> qubit k.
// Validity against a particular N is checked at the point of use.
class QubitSubset {
 public:
  QubitSubset() = default;
  explicit QubitSubset(std::uint32_t mask) : mask_(mask) {}

  static QubitSubset from_indices(std::span<const int> qubits) {
    std::uint32_t m = 0;
    for (int q : qubits) {
      if (q < 0 || q >= kMaxQubits) {
        throw std::invalid_argument("qubit index out of range: " +
                                    std::to_string(q));
      }
      m |= std::uint32_t{1} << q;
    }
    return QubitSubset(m);
  }
  static QubitSubset from_indices(std::initializer_list<int> qubits) {
    return from_indices(std::span<const int>(qubits.begin(), qubits.size()));
  }

  std::uint32_t mask() const { return mask_; }
  bool contains(int q) const { return (mask_ >> q) & 1u; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }

  QubitSubset complement(int n_qubits) const {
    return QubitSubset(~mask_ & ((std::uint32_t{1} << n_qubits) - 1));
  }

  void require_valid_for(int n_qubits) const {
    if (mask_ >> n_qubits) {
      throw std::invalid_argument("qubit subset exceeds system size " +
                                  std::to_string(n_qubits));
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int q = 0; q < kMaxQubits; ++q)
      if (contains(q)) out.push_back(q);
    return out;
  }

  bool operator==(const QubitSubset&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

// A Hermitian operator on N qubits. Hermiticity is checked on construction;
// no trace or positivity constraint.
class HermitianOperator {
 public:
  HermitianOperator(int n_qubits, Matrix mat,
                    const Tolerances& tol = default_tolerances());

  int n_qubits() const { return n_qubits_; }
  std::int64_t dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }
  double trace() const { return mat_.trace().real(); }

 private:
  int n_qubits_;
  Matrix mat_;
};

// A normalized pure state on N qubits.
class PureState {
 public:
  PureState(int n_qubits, Vector amplitudes,
            const Tolerances& tol = default_tolerances());

  int n_qubits() const { return n_qubits_; }
  std::int64_t dim() const { return amps_.size(); }
  const Vector& amplitudes() const { return amps_; }

 private:
  int n_qubits_;
  Vector amps_;
};

// A density operator: Hermitian, unit trace, positive semidefinite.
class DensityOperator {
 public:
  DensityOperator(int n_qubits, Matrix mat,
                  const Tolerances& tol = default_tolerances());

  // |psi><psi|.
  static DensityOperator projector(const PureState& psi,
                                   const Tolerances& tol = default_tolerances());

  int n_qubits() const { return n_qubits_; }
  std::int64_t dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }

  HermitianOperator as_hermitian(const Tolerances& tol = default_tolerances()) const {
    return HermitianOperator(n_qubits_, mat_, tol);
  }

 private:
  int n_qubits_;
  Matrix mat_;
};

// Measurement axis for the two-setting Pauli correlations.
enum class PauliAxis { x, y };

// --- operations ---

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);
PureState kron(const PureState& a, const PureState& b);

// Partial transpose over the qubits in `s`: element (i, j) of the result is
// element (swap_s(i), swap_s(j)) of the input, where the s-bits of i and j
// are exchanged. Trace-preserving involution.
HermitianOperator partial_transpose(const HermitianOperator& op, QubitSubset s);
HermitianOperator partial_transpose(const DensityOperator& rho, QubitSubset s);

// All 2^N real eigenvalues, ascending. Only available for N <= 10.
std::vector<double> hermitian_eigenvalues(const HermitianOperator& op);

// Smallest eigenvalue. Full decomposition for N <= 10, iterative
// (spectrally shifted power method) above.
double min_eigenvalue(const HermitianOperator& op);

// Tr[rho (sigma_{s_0} x ... x sigma_{s_{N-1}})], axes in {x, y}.
// The sparse path walks the signed permutation in O(2^N); the dense path
// materializes the Pauli string and takes the O(4^N) trace.
double pauli_string_expectation(const DensityOperator& rho,
                                std::span<const PauliAxis> settings);
double pauli_string_expectation_dense(const DensityOperator& rho,
                                      std::span<const PauliAxis> settings);

// Tr(op rho); asserts the imaginary part is below tol.eig.
double expectation(const HermitianOperator& op, const DensityOperator& rho,
                   const Tolerances& tol = default_tolerances());

}  // namespace pptineq
