#include "pptineq/states.hpp"

#include <cmath>
#include <random>

namespace pptineq {

PureState ghz(int n_qubits, GhzSign sign) {
  std::int64_t d = dim_for(n_qubits);
  Vector v = Vector::Zero(d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  v(0) = inv_sqrt2;
  v(d - 1) = (sign == GhzSign::plus) ? inv_sqrt2 : -inv_sqrt2;
  return PureState(n_qubits, std::move(v));
}

DensityOperator noisy_ghz(const NoisyGhzParams& params) {
  if (params.n_qubits < 2) {
    throw std::invalid_argument("noisy GHZ family requires N >= 2");
  }
  double v = params.visibility;
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument("visibility must lie in [0, 1]");
  }
  PureState psi = ghz(params.n_qubits, GhzSign::plus);
  std::int64_t d = psi.dim();
  Matrix m = v * (psi.amplitudes() * psi.amplitudes().adjoint());
  m += ((1.0 - v) / static_cast<double>(d)) * Matrix::Identity(d, d);
  return DensityOperator(params.n_qubits, std::move(m));
}

DensityOperator dur_state(int n_qubits) {
  if (n_qubits < 3) {
    throw std::invalid_argument("Dur family requires N >= 3");
  }
  std::int64_t d = dim_for(n_qubits);
  PureState psi = ghz(n_qubits, GhzSign::plus);
  Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
  for (int k = 0; k < n_qubits; ++k) {
    std::int64_t single_one = std::int64_t{1} << (n_qubits - 1 - k);
    m(single_one, single_one) += 0.5;
    std::int64_t flipped = (d - 1) ^ single_one;
    m(flipped, flipped) += 0.5;
  }
  m /= static_cast<double>(n_qubits + 1);
  return DensityOperator(n_qubits, std::move(m));
}

namespace {

Vector haar_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(2);
  v(0) = Complex(gauss(rng), gauss(rng));
  v(1) = Complex(gauss(rng), gauss(rng));
  v /= v.norm();
  return v;
}

Matrix product_state_matrix(int n_qubits, std::mt19937_64& rng) {
  Vector psi = haar_qubit(rng);
  for (int q = 1; q < n_qubits; ++q) {
    Vector site = haar_qubit(rng);
    Vector next(psi.size() * 2);
    for (std::int64_t i = 0; i < psi.size(); ++i)
      next.segment(i * 2, 2) = psi(i) * site;
    psi = std::move(next);
  }
  return psi * psi.adjoint();
}

}  // namespace

DensityOperator random_product_state(int n_qubits, std::uint64_t seed) {
  dim_for(n_qubits);
  std::mt19937_64 rng(seed);
  return DensityOperator(n_qubits, product_state_matrix(n_qubits, rng));
}

DensityOperator random_separable_state(int n_qubits, int terms,
                                       std::uint64_t seed) {
  if (terms < 1) throw std::invalid_argument("terms must be >= 1");
  std::int64_t d = dim_for(n_qubits);
  std::mt19937_64 rng(seed);

  // Dirichlet(1,...,1) weights via normalized exponentials.
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(terms);
  double total = 0.0;
  for (double& wi : w) {
    wi = expo(rng);
    total += wi;
  }

  Matrix m = Matrix::Zero(d, d);
  for (int t = 0; t < terms; ++t) {
    m += (w[t] / total) * product_state_matrix(n_qubits, rng);
  }
  return DensityOperator(n_qubits, std::move(m));
}

}  // namespace pptineq
