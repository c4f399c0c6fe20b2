// The four GHZ-diagonal witness operators and the p-PPT GHZ functional.
//
// Every witness is coefficient * (|psi+><psi+| - |psi-><psi->) with a bound
// of 1 on |<.>| under its respective hypothesis:
//   mermin2      2^{(N-1)/2}        two settings per site, local realism
//   threeSetting (1/sqrt3)(3/2)^N   three settings per site
//   continuous   (1/2)(pi/2)^N      continuous settings per site
//   pptOperator  2^{N-1}            positivity of every partial transpose

#pragma once

#include "pptineq/qmat.hpp"
#include "pptineq/states.hpp"

#include <cmath>
#include <string>

namespace pptineq {

enum class WitnessKind { mermin2, threeSetting, continuous, pptOperator };

std::string to_string(WitnessKind kind);
WitnessKind witness_kind_from_string(const std::string& name);

// Prefactor multiplying the GHZ interference projector difference.
double witness_coefficient(WitnessKind kind, int n_qubits);

class WitnessOperator {
 public:
  WitnessOperator(WitnessKind kind, int n_qubits);

  WitnessKind kind() const { return kind_; }
  int n_qubits() const { return n_qubits_; }
  double coefficient() const { return coefficient_; }
  double classical_bound() const { return 1.0; }
  const HermitianOperator& op() const { return op_; }

  // coefficient * ghz_interference_value(rho); O(1) in the state dimension.
  double evaluate(const DensityOperator& rho) const;
  // Full O(4^N) trace against the dense operator; cross-validation path.
  double evaluate_dense(const DensityOperator& rho) const;

 private:
  WitnessKind kind_;
  int n_qubits_;
  double coefficient_;
  HermitianOperator op_;
};

inline WitnessOperator build_witness(WitnessKind kind, int n_qubits) {
  return WitnessOperator(kind, n_qubits);
}

// Tr[(|psi+><psi+| - |psi-><psi->) rho]. Reads four matrix entries.
double ghz_interference_value(const DensityOperator& rho);

// Tr[(|psi_s><psi_s| - (1 - 2^{2-p}) |psi_{-s}><psi_{-s}|) rho] with the
// leading sign s; p-PPT states keep this below 2^{1-p}.
double p_ppt_ghz_functional(const DensityOperator& rho, int p, GhzSign leading);

inline double p_ppt_ghz_bound(int p) { return std::pow(2.0, 1 - p); }

}  // namespace pptineq
