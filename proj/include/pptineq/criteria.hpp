// Decision layer: bipartition enumeration, PPT signatures, and the
// inequality evaluators (PPT operator bound, Bell-Mermin PPT bound, p-PPT
// GHZ inequalities, Zukowski-Brukner two-setting condition).

#pragma once

#include "pptineq/qmat.hpp"
#include "pptineq/states.hpp"
#include "pptineq/witnesses.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pptineq {

// A bipartite cut, canonicalized so that side A contains qubit 0.
struct Bipartition {
  QubitSubset side_a;
  int n_qubits;

  QubitSubset side_b() const { return side_a.complement(n_qubits); }
  bool operator==(const Bipartition&) const = default;
};

// All 2^{N-1} - 1 canonical bipartitions, ascending by side-A bitmask.
std::vector<Bipartition> enumerate_bipartitions(int n_qubits);

struct BipartitionRecord {
  Bipartition bipartition;
  double min_eigenvalue;
  bool is_ppt;
};

struct PptSignature {
  std::vector<BipartitionRecord> records;
  bool all_ppt;
  std::vector<Bipartition> npt_cuts;
};

// One PPT/NPT verdict per canonical cut of rho. Each cut's spectrum is
// cross-checked against the complementary cut before a verdict is recorded.
PptSignature ppt_signature(const DensityOperator& rho,
                           const Tolerances& tol = default_tolerances());

enum class Criterion { pptInequality, merminPptBound, pPptGhz, zukowskiBrukner };

struct CriterionReport {
  Criterion criterion;
  double value;
  double bound;
  bool violated;  // value > bound + tol.eig
  double margin;  // value - bound
};

// |<P_N>| <= 1 for N-PPT states.
CriterionReport evaluate_ppt_inequality(const DensityOperator& rho,
                                        const Tolerances& tol = default_tolerances());

// |Tr(B_N rho)| <= 2^{-(N-1)/2} for N-PPT states.
CriterionReport evaluate_mermin_ppt_bound(const DensityOperator& rho,
                                          const Tolerances& tol = default_tolerances());

// Both sign variants of the p-PPT GHZ inequality, bound 2^{1-p}.
// First element: leading sign plus; second: leading sign minus.
std::pair<CriterionReport, CriterionReport> evaluate_p_ppt_ghz(
    const DensityOperator& rho, int p,
    const Tolerances& tol = default_tolerances());

// Sum over all 2^N x/y setting strings of squared Pauli correlations;
// <= 1 means every two-setting Bell experiment on the noisy-GHZ family
// admits a local realistic model.
double zukowski_brukner_sum(const DensityOperator& rho);

struct AcinConsistencyReport {
  bool violated_ppt_inequality;
  bool has_npt_cut;
  bool consistent;  // violation implies at least one NPT cut
};

// Violation of the PPT inequality must be witnessed by an NPT cut; an
// inconsistent report indicates an implementation bug, never physics.
AcinConsistencyReport acin_consistency_check(
    const DensityOperator& rho, const Tolerances& tol = default_tolerances());

}  // namespace pptineq
