#include "pptineq/witnesses.hpp"

#include <cmath>
#include <numbers>

namespace pptineq {

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::mermin2: return "mermin2";
    case WitnessKind::threeSetting: return "threeSetting";
    case WitnessKind::continuous: return "continuous";
    case WitnessKind::pptOperator: return "pptOperator";
  }
  throw std::invalid_argument("unknown witness kind");
}

WitnessKind witness_kind_from_string(const std::string& name) {
  if (name == "mermin2") return WitnessKind::mermin2;
  if (name == "threeSetting") return WitnessKind::threeSetting;
  if (name == "continuous") return WitnessKind::continuous;
  if (name == "pptOperator") return WitnessKind::pptOperator;
  throw std::invalid_argument("unknown witness kind: " + name);
}

double witness_coefficient(WitnessKind kind, int n_qubits) {
  if (n_qubits < 2) {
    throw std::invalid_argument("witnesses require N >= 2");
  }
  dim_for(n_qubits);
  double n = static_cast<double>(n_qubits);
  switch (kind) {
    case WitnessKind::mermin2:
      return std::pow(2.0, (n - 1.0) / 2.0);
    case WitnessKind::threeSetting:
      return std::pow(1.5, n) / std::sqrt(3.0);
    case WitnessKind::continuous:
      return 0.5 * std::pow(std::numbers::pi / 2.0, n);
    case WitnessKind::pptOperator:
      return std::pow(2.0, n - 1.0);
  }
  throw std::invalid_argument("unknown witness kind");
}

namespace {

HermitianOperator interference_operator(int n_qubits, double coefficient) {
  PureState plus = ghz(n_qubits, GhzSign::plus);
  PureState minus = ghz(n_qubits, GhzSign::minus);
  Matrix m = coefficient *
             (plus.amplitudes() * plus.amplitudes().adjoint() -
              minus.amplitudes() * minus.amplitudes().adjoint());
  return HermitianOperator(n_qubits, std::move(m));
}

}  // namespace

WitnessOperator::WitnessOperator(WitnessKind kind, int n_qubits)
    : kind_(kind),
      n_qubits_(n_qubits),
      coefficient_(witness_coefficient(kind, n_qubits)),
      op_(interference_operator(n_qubits, coefficient_)) {}

double WitnessOperator::evaluate(const DensityOperator& rho) const {
  if (rho.n_qubits() != n_qubits_) {
    throw std::invalid_argument("witness/state qubit count mismatch");
  }
  return coefficient_ * ghz_interference_value(rho);
}

double WitnessOperator::evaluate_dense(const DensityOperator& rho) const {
  return expectation(op_, rho);
}

double ghz_interference_value(const DensityOperator& rho) {
  // <psi+|rho|psi+> - <psi-|rho|psi-> collapses to the GHZ coherence term.
  std::int64_t d = rho.dim();
  return 2.0 * rho.matrix()(0, d - 1).real();
}

double p_ppt_ghz_functional(const DensityOperator& rho, int p,
                            GhzSign leading) {
  int n = rho.n_qubits();
  if (p < 2 || p > n) {
    throw std::invalid_argument("p must lie in [2, N]");
  }
  std::int64_t d = rho.dim();
  double diag = 0.5 * (rho.matrix()(0, 0).real() + rho.matrix()(d - 1, d - 1).real());
  double coherence = rho.matrix()(0, d - 1).real();
  double lead = diag + (leading == GhzSign::plus ? coherence : -coherence);
  double other = diag - (leading == GhzSign::plus ? coherence : -coherence);
  return lead - (1.0 - std::pow(2.0, 2 - p)) * other;
}

}  // namespace pptineq
