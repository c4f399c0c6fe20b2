#include "pptineq/criteria.hpp"

#include <cmath>

namespace pptineq {

std::vector<Bipartition> enumerate_bipartitions(int n_qubits) {
  if (n_qubits < 2) {
    throw std::invalid_argument("bipartitions require N >= 2");
  }
  dim_for(n_qubits);
  std::uint32_t full = (std::uint32_t{1} << n_qubits) - 1;
  std::vector<Bipartition> out;
  out.reserve((std::size_t{1} << (n_qubits - 1)) - 1);
  for (std::uint32_t m = 1; m < full; ++m) {
    if (m & 1u) out.push_back({QubitSubset(m), n_qubits});
  }
  return out;
}

PptSignature ppt_signature(const DensityOperator& rho, const Tolerances& tol) {
  int n = rho.n_qubits();
  PptSignature sig;
  sig.all_ppt = true;
  for (const Bipartition& cut : enumerate_bipartitions(n)) {
    HermitianOperator pt_a = partial_transpose(rho, cut.side_a);
    HermitianOperator pt_b = partial_transpose(rho, cut.side_b());
    double lam;
    if (n <= kMaxFullSpectrumQubits) {
      std::vector<double> spec_a = hermitian_eigenvalues(pt_a);
      std::vector<double> spec_b = hermitian_eigenvalues(pt_b);
      for (std::size_t i = 0; i < spec_a.size(); ++i) {
        if (std::abs(spec_a[i] - spec_b[i]) > tol.eig) {
          throw NumericalError(
              "complementary-cut spectra disagree at cut mask " +
              std::to_string(cut.side_a.mask()));
        }
      }
      lam = spec_a.front();
    } else {
      lam = min_eigenvalue(pt_a);
      double lam_b = min_eigenvalue(pt_b);
      if (std::abs(lam - lam_b) > 100 * tol.eig) {
        throw NumericalError(
            "complementary-cut extremal eigenvalues disagree at cut mask " +
            std::to_string(cut.side_a.mask()));
      }
    }
    bool is_ppt = lam >= -tol.psd;
    sig.records.push_back({cut, lam, is_ppt});
    if (!is_ppt) {
      sig.all_ppt = false;
      sig.npt_cuts.push_back(cut);
    }
  }
  return sig;
}

namespace {

CriterionReport make_report(Criterion criterion, double value, double bound,
                            const Tolerances& tol) {
  return {criterion, value, bound, value > bound + tol.eig, value - bound};
}

}  // namespace

CriterionReport evaluate_ppt_inequality(const DensityOperator& rho,
                                        const Tolerances& tol) {
  WitnessOperator w(WitnessKind::pptOperator, rho.n_qubits());
  return make_report(Criterion::pptInequality, std::abs(w.evaluate(rho)), 1.0,
                     tol);
}

CriterionReport evaluate_mermin_ppt_bound(const DensityOperator& rho,
                                          const Tolerances& tol) {
  int n = rho.n_qubits();
  WitnessOperator w(WitnessKind::mermin2, n);
  double bound = std::pow(2.0, -(n - 1.0) / 2.0);
  return make_report(Criterion::merminPptBound, std::abs(w.evaluate(rho)),
                     bound, tol);
}

std::pair<CriterionReport, CriterionReport> evaluate_p_ppt_ghz(
    const DensityOperator& rho, int p, const Tolerances& tol) {
  double bound = p_ppt_ghz_bound(p);
  CriterionReport plus =
      make_report(Criterion::pPptGhz,
                  p_ppt_ghz_functional(rho, p, GhzSign::plus), bound, tol);
  CriterionReport minus =
      make_report(Criterion::pPptGhz,
                  p_ppt_ghz_functional(rho, p, GhzSign::minus), bound, tol);
  return {plus, minus};
}

double zukowski_brukner_sum(const DensityOperator& rho) {
  int n = rho.n_qubits();
  std::int64_t strings = std::int64_t{1} << n;
  std::vector<PauliAxis> settings(n);
  double sum = 0.0;
  for (std::int64_t s = 0; s < strings; ++s) {
    for (int q = 0; q < n; ++q) {
      settings[q] = ((s >> q) & 1) ? PauliAxis::y : PauliAxis::x;
    }
    double corr = pauli_string_expectation(rho, settings);
    sum += corr * corr;
  }
  return sum;
}

AcinConsistencyReport acin_consistency_check(const DensityOperator& rho,
                                             const Tolerances& tol) {
  bool violated = evaluate_ppt_inequality(rho, tol).violated;
  bool has_npt = !ppt_signature(rho, tol).all_ppt;
  return {violated, has_npt, !violated || has_npt};
}

}  // namespace pptineq
