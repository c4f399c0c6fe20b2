// Constructors for the state families under study: GHZ pure states, the
// white-noise GHZ mixture, the Dur bound entangled family, and seeded random
// product/separable states for property testing.

#pragma once

#include "pptineq/qmat.hpp"

#include <cstdint>

namespace pptineq {

enum class GhzSign { plus, minus };

struct NoisyGhzParams {
  int n_qubits;       // >= 2
  double visibility;  // V in [0, 1]
};

// (|0...0> +/- |1...1>) / sqrt(2).
PureState ghz(int n_qubits, GhzSign sign);

// V |psi+><psi+| + (1-V) I / 2^N.
DensityOperator noisy_ghz(const NoisyGhzParams& params);

// Dur bound entangled family, N >= 3:
//   (1/(N+1)) (|psi+><psi+| + (1/2) sum_k (P_k + ~P_k))
// where P_k projects onto the basis state with a single 1 at qubit k and
// ~P_k onto its bit complement.
DensityOperator dur_state(int n_qubits);

// Tensor product of single-qubit pure states, each drawn Haar-uniform.
// Deterministic per seed.
DensityOperator random_product_state(int n_qubits, std::uint64_t seed);

// Convex mixture of `terms` product states with Dirichlet-uniform weights.
DensityOperator random_separable_state(int n_qubits, int terms,
                                       std::uint64_t seed);

}  // namespace pptineq
