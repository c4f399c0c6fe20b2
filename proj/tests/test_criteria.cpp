#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pptineq/criteria.hpp"

using namespace pptineq;

TEST_CASE("bipartition counts and canonical order") {
  auto two = enumerate_bipartitions(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].side_a.mask() == 0b1);

  auto three = enumerate_bipartitions(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0].side_a.mask() == 0b001);
  CHECK(three[1].side_a.mask() == 0b011);
  CHECK(three[2].side_a.mask() == 0b101);

  CHECK(enumerate_bipartitions(4).size() == 7);
  CHECK_THROWS_AS(enumerate_bipartitions(1), std::invalid_argument);
}

TEST_CASE("every canonical bipartition contains qubit 0") {
  for (int n = 2; n <= 7; ++n) {
    for (const Bipartition& cut : enumerate_bipartitions(n)) {
      CHECK(cut.side_a.contains(0));
      CHECK(cut.side_a.size() >= 1);
      CHECK(cut.side_a.size() <= n - 1);
    }
  }
}

TEST_CASE("product states carry an all-PPT signature") {
  PptSignature sig = ppt_signature(random_product_state(4, 31));
  CHECK(sig.all_ppt);
  CHECK(sig.npt_cuts.empty());
  for (const auto& rec : sig.records) {
    CHECK(rec.is_ppt);
    CHECK(rec.min_eigenvalue >= -1e-9);
  }
}

TEST_CASE("GHZ(3) projector is NPT across every cut at -1/2") {
  DensityOperator rho = DensityOperator::projector(ghz(3, GhzSign::plus));
  PptSignature sig = ppt_signature(rho);
  CHECK_FALSE(sig.all_ppt);
  REQUIRE(sig.records.size() == 3);
  for (const auto& rec : sig.records) {
    CHECK_FALSE(rec.is_ppt);
    CHECK(rec.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
  }
}

TEST_CASE("Dur(4) PPT signature golden values") {
  // Frozen from a dense eigendecomposition: the 1-vs-3 cuts are PPT with a
  // zero mode, the three 2-vs-2 cuts are NPT at -1/10.
  PptSignature sig = ppt_signature(dur_state(4));
  REQUIRE(sig.records.size() == 7);
  struct Expected {
    std::uint32_t mask;
    double lam;
    bool ppt;
  };
  const Expected golden[] = {
      {0b0001, 0.0, true},  {0b0011, -0.1, false}, {0b0101, -0.1, false},
      {0b0111, 0.0, true},  {0b1001, -0.1, false}, {0b1011, 0.0, true},
      {0b1101, 0.0, true},
  };
  for (int i = 0; i < 7; ++i) {
    CHECK(sig.records[i].bipartition.side_a.mask() == golden[i].mask);
    CHECK(std::abs(sig.records[i].min_eigenvalue - golden[i].lam) < 1e-9);
    CHECK(sig.records[i].is_ppt == golden[i].ppt);
  }
  CHECK_FALSE(sig.all_ppt);
  CHECK(sig.npt_cuts.size() == 3);
}

TEST_CASE("PPT inequality on the Dur family") {
  CriterionReport at4 = evaluate_ppt_inequality(dur_state(4));
  CHECK(at4.value == doctest::Approx(1.6).epsilon(1e-12));
  CHECK(at4.violated);

  CriterionReport at3 = evaluate_ppt_inequality(dur_state(3));
  CHECK(at3.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(at3.violated);
}

TEST_CASE("PPT inequality on the maximally mixed state") {
  std::int64_t d = dim_for(4);
  DensityOperator mixed(4, Matrix::Identity(d, d) / static_cast<double>(d));
  CriterionReport report = evaluate_ppt_inequality(mixed);
  CHECK(std::abs(report.value) < 1e-12);
  CHECK_FALSE(report.violated);
}

TEST_CASE("Dur violation factor grows monotonically") {
  double prev = evaluate_ppt_inequality(dur_state(3)).value;
  for (int n = 4; n <= 10; ++n) {
    double cur = evaluate_ppt_inequality(dur_state(n)).value;
    CHECK(cur > prev);
    CHECK(cur / prev == doctest::Approx(2.0 * n / (n + 1.0)).epsilon(1e-9));
    prev = cur;
  }
}

TEST_CASE("Mermin PPT bound on noisy GHZ at V=1/2, N=3") {
  CriterionReport report = evaluate_mermin_ppt_bound(noisy_ghz({3, 0.5}));
  CHECK(report.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.bound == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(report.violated);
}

TEST_CASE("GHZ projector violates the Mermin PPT bound maximally") {
  for (int n : {2, 4, 6}) {
    DensityOperator rho = DensityOperator::projector(ghz(n, GhzSign::plus));
    CriterionReport report = evaluate_mermin_ppt_bound(rho);
    CHECK(report.value ==
          doctest::Approx(std::exp2((n - 1) / 2.0)).epsilon(1e-12));
    CHECK(report.violated);
  }
}

TEST_CASE("Mermin and PPT criterion values are proportional") {
  for (int n = 3; n <= 8; ++n) {
    DensityOperator rho = dur_state(n);
    double mermin = evaluate_mermin_ppt_bound(rho).value;
    double ppt = evaluate_ppt_inequality(rho).value;
    CHECK(std::abs(ppt - std::exp2((n - 1) / 2.0) * mermin) < 1e-9);
  }
}

TEST_CASE("p-PPT GHZ criterion on GHZ projector and separable states") {
  DensityOperator pure = DensityOperator::projector(ghz(4, GhzSign::plus));
  auto [plus, minus] = evaluate_p_ppt_ghz(pure, 4);
  CHECK(plus.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(plus.violated);
  CHECK_FALSE(minus.violated);

  for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
    DensityOperator sep = random_separable_state(4, 3, seed);
    for (int p = 2; p <= 4; ++p) {
      auto [a, b] = evaluate_p_ppt_ghz(sep, p);
      CHECK_FALSE(a.violated);
      CHECK_FALSE(b.violated);
    }
  }
}

TEST_CASE("Zukowski-Brukner sum on the noisy GHZ family") {
  for (int n : {3, 5}) {
    for (double v : {0.0, 0.3, 1.0}) {
      double sum = zukowski_brukner_sum(noisy_ghz({n, v}));
      CHECK(std::abs(sum - v * v * std::exp2(n - 1.0)) < 1e-8);
    }
    double v_crit = std::exp2(-(n - 1) / 2.0);
    CHECK(zukowski_brukner_sum(noisy_ghz({n, v_crit})) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("Acin consistency holds on the standard corpus") {
  for (int n = 4; n <= 8; ++n) {
    AcinConsistencyReport report = acin_consistency_check(dur_state(n));
    CHECK(report.violated_ppt_inequality);
    CHECK(report.has_npt_cut);
    CHECK(report.consistent);
  }

  AcinConsistencyReport sep = acin_consistency_check(random_separable_state(4, 3, 77));
  CHECK_FALSE(sep.violated_ppt_inequality);
  CHECK(sep.consistent);

  AcinConsistencyReport pure =
      acin_consistency_check(DensityOperator::projector(ghz(4, GhzSign::plus)));
  CHECK(pure.violated_ppt_inequality);
  CHECK(pure.has_npt_cut);
  CHECK(pure.consistent);
}
