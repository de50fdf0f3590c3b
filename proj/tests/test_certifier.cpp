#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>
#include <random>

#include "hankelforge/certifier.hpp"
#include "hankelforge/hankel.hpp"
#include "hankelforge/random_utils.hpp"

using namespace hankelforge;

namespace {

const GridSpec kSmallGrid{32, 32, 32, 8, 2};

}  // namespace

TEST_CASE("envelope constants") {
  CHECK(std::abs(tau1_breakpoint() - 0.684379) < 1e-6);
  CHECK(std::abs(envelope_phi(kPhiPeak) - 19.0 / 288.0) < 1e-15);
  CHECK(std::abs(envelope_phi(0.0) - 1.0 / 16.0) < 1e-15);
  CHECK(std::abs(envelope_psi(1.0) - 1.0 / 48.0) < 1e-15);
  CHECK(std::abs(envelope_psi(tau1_breakpoint()) - 0.0545938) < 1e-6);
  // The two pieces meet at the breakpoint.
  CHECK(std::abs(envelope_phi(tau1_breakpoint()) - envelope_psi(tau1_breakpoint())) < 1e-12);
}

TEST_CASE("envelope domains") {
  CHECK_THROWS_AS(envelope_phi(tau1_breakpoint() + 1e-6), std::domain_error);
  CHECK_THROWS_AS(envelope_phi(-1e-6), std::domain_error);
  CHECK_THROWS_AS(envelope_psi(tau1_breakpoint() - 1e-6), std::domain_error);
  CHECK_THROWS_AS(envelope_psi(1.0 + 1e-6), std::domain_error);
}

TEST_CASE("envelope monotonicity") {
  // phi increases on [0, 1/sqrt(6)] and decreases on [1/sqrt(6), breakpoint];
  // psi decreases on [breakpoint, 1].
  const double bp = tau1_breakpoint();
  for (int i = 0; i < 200; ++i) {
    const double t = kPhiPeak * i / 200.0;
    const double u = kPhiPeak * (i + 1) / 200.0;
    CHECK(envelope_phi(t) < envelope_phi(u) + 1e-15);
  }
  for (int i = 0; i < 200; ++i) {
    const double t = kPhiPeak + (bp - kPhiPeak) * i / 200.0;
    const double u = kPhiPeak + (bp - kPhiPeak) * (i + 1) / 200.0;
    CHECK(envelope_phi(t) > envelope_phi(u) - 1e-15);
  }
  for (int i = 0; i < 200; ++i) {
    const double t = bp + (1.0 - bp) * i / 200.0;
    const double u = bp + (1.0 - bp) * (i + 1) / 200.0;
    CHECK(envelope_psi(t) > envelope_psi(u));
  }
}

TEST_CASE("case_coefficients: signs of AC select the Y case split") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const double t = 0.001 + 0.998 * uniform01(rng);
    const CaseBoundCoefficients st = case_coefficients(FunctionClass::StarlikeHalf, t);
    CHECK(st.A * st.C < 0.0);
    const CaseBoundCoefficients cv = case_coefficients(FunctionClass::ConvexHalf, t);
    CHECK(cv.A * cv.C > 0.0);
    const CaseBoundCoefficients bt = case_coefficients(FunctionClass::BoundedTurningHalf, t);
    CHECK(bt.A * bt.C > 0.0);
  }
  CHECK_THROWS_AS(case_coefficients(FunctionClass::StarlikeHalf, 0.0), std::domain_error);
  CHECK_THROWS_AS(case_coefficients(FunctionClass::StarlikeHalf, 1.0), std::domain_error);
}

TEST_CASE("case3_bound: starlike envelope pieces and fired branches") {
  std::mt19937_64 rng(32);
  const double bp = tau1_breakpoint();
  for (int i = 0; i < 500; ++i) {
    const double t = 1e-4 + (bp - 1e-4) * uniform01(rng);
    CHECK(std::abs(case3_bound(FunctionClass::StarlikeHalf, t) - envelope_phi(t)) < 1e-9);
    CHECK(case3_branch(FunctionClass::StarlikeHalf, t) == YBranch::r_second);
  }
  for (int i = 0; i < 500; ++i) {
    const double t = bp + (1.0 - bp - 1e-4) * uniform01(rng);
    CHECK(std::abs(case3_bound(FunctionClass::StarlikeHalf, t) - envelope_psi(t)) < 1e-9);
    CHECK(case3_branch(FunctionClass::StarlikeHalf, t) == YBranch::r_sqrt);
  }
  CHECK(std::abs(case3_bound(FunctionClass::StarlikeHalf, kPhiPeak) - 19.0 / 288.0) < 1e-12);
}

TEST_CASE("case3_bound: convex and bounded-turning quartics via branch i_sum") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 500; ++i) {
    const double t = 1e-4 + (1.0 - 2e-4) * uniform01(rng);
    const double t2 = t * t;
    const double convex_poly = (16.0 - 4.0 * t2 - 11.0 * t2 * t2) / 2304.0;
    const double bt_poly = (64.0 - 24.0 * t2 - 39.0 * t2 * t2) / 2304.0;
    CHECK(std::abs(case3_bound(FunctionClass::ConvexHalf, t) - convex_poly) < 1e-12);
    CHECK(std::abs(case3_bound(FunctionClass::BoundedTurningHalf, t) - bt_poly) < 1e-12);
    CHECK(case3_branch(FunctionClass::ConvexHalf, t) == YBranch::i_sum);
    CHECK(case3_branch(FunctionClass::BoundedTurningHalf, t) == YBranch::i_sum);
    CHECK(case3_bound(FunctionClass::ConvexHalf, t) <= 1.0 / 144.0 + 1e-15);
  }
  const double at_half = (64.0 - 6.0 - 39.0 / 16.0) / 2304.0;
  CHECK(std::abs(case3_bound(FunctionClass::BoundedTurningHalf, 0.5) - at_half) < 1e-15);
}

TEST_CASE("theoretical bounds as exact fractions") {
  CHECK(theoretical_bound(FunctionClass::StarlikeHalf).str() == "19/288");
  CHECK(theoretical_bound(FunctionClass::ConvexHalf).str() == "1/144");
  CHECK(theoretical_bound(FunctionClass::BoundedTurningHalf).str() == "1/36");
}

TEST_CASE("search_max: attainment on a reduced grid") {
  for (const FunctionClass cls : kAllClasses) {
    const CertificationReport rep = search_max(cls, kSmallGrid);
    CAPTURE(class_name(cls));
    CHECK(rep.bound_respected());
    CHECK(rep.attained(1e-6));
    CHECK(rep.sound());
    CHECK(rep.gap >= -1e-7);
    CHECK(!rep.diagnostics.empty());
    for (const CaseDiagnostic& d : rep.diagnostics)
      CHECK(d.slice_max <= d.envelope + 1e-9);
  }
}

TEST_CASE("search_max: starlike witness sits near (1/sqrt(6), 1)") {
  const CertificationReport rep = search_max(FunctionClass::StarlikeHalf, kSmallGrid);
  CHECK(std::abs(rep.witness.tau1 - kPhiPeak) < 1e-2);
  CHECK(std::abs(rep.witness.tau2 - cplx(1.0, 0.0)) < 1e-2);
  CHECK(std::abs(rep.search_max - 19.0 / 288.0) < 1e-6);
}

TEST_CASE("search_max: convex and bounded-turning witnesses at tau1 = 0, |tau2| = 1") {
  for (const FunctionClass cls :
       {FunctionClass::ConvexHalf, FunctionClass::BoundedTurningHalf}) {
    const CertificationReport rep = search_max(cls, kSmallGrid);
    CHECK(rep.witness.tau1 == 0.0);
    CHECK(std::abs(std::abs(rep.witness.tau2) - 1.0) < 1e-12);
    CHECK(std::abs(rep.search_max - rep.bound.value()) < 1e-9);
  }
}

TEST_CASE("search_max: serial and parallel scans produce identical reports") {
  for (const FunctionClass cls : kAllClasses) {
    const CertificationReport serial = search_max(cls, kSmallGrid, false);
    const CertificationReport parallel = search_max(cls, kSmallGrid, true);
    CHECK(serial.search_max == parallel.search_max);
    CHECK(serial.witness.tau1 == parallel.witness.tau1);
    CHECK(serial.witness.tau2 == parallel.witness.tau2);
    CHECK(serial.witness.tau3 == parallel.witness.tau3);
    CHECK(serial.evaluations == parallel.evaluations);
  }
}

TEST_CASE("search_max: grid validation") {
  CHECK_THROWS_AS(search_max(FunctionClass::ConvexHalf, {16, 32, 32, 8, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(search_max(FunctionClass::ConvexHalf, {32, 32, 32, 4, 1}),
                  std::invalid_argument);
}

TEST_CASE("tau3 maximum over the disk is attained on the circle") {
  std::mt19937_64 rng(34);
  for (const FunctionClass cls : kAllClasses) {
    for (int trial = 0; trial < 20; ++trial) {
      const double t1 = 0.05 + 0.9 * uniform01(rng);
      const cplx t2 = 0.9 * random_in_disk(rng);
      double interior = 0.0;
      for (int k = 0; k < 64; ++k)
        interior = std::max(
            interior, std::abs(h21_in_tau(cls, {t1, t2, 0.99 * random_in_disk(rng)}).value));
      double circle = 0.0;
      for (int k = 0; k < 64; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / 64.0;
        circle = std::max(circle,
                          std::abs(h21_in_tau(cls, {t1, t2,
                                                    cplx(std::cos(theta), std::sin(theta))})
                                       .value));
      }
      CHECK(interior <= circle + 1e-12);
    }
  }
}

TEST_CASE("soundness: random parameters never exceed the bound") {
  std::mt19937_64 rng(35);
  for (const FunctionClass cls : kAllClasses) {
    const double bound = theoretical_bound(cls).value();
    for (int trial = 0; trial < 10000; ++trial) {
      const SchurParams p{uniform01(rng), random_in_disk(rng), random_in_disk(rng)};
      CHECK(std::abs(h21_in_tau(cls, p).value) <= bound + 1e-9);
    }
  }
}

TEST_CASE("extremal_check: convex and bounded turning attain their bounds in class") {
  for (const FunctionClass cls :
       {FunctionClass::ConvexHalf, FunctionClass::BoundedTurningHalf}) {
    const ExtremalReport rep = extremal_check(cls);
    REQUIRE(rep.candidates.size() == 1);
    const ExtremalCandidate& c = rep.candidates[0];
    const double a3_want = cls == FunctionClass::ConvexHalf ? 1.0 / 6.0 : 1.0 / 3.0;
    CHECK(std::abs(c.a2) < 1e-12);
    CHECK(std::abs(c.a3 - a3_want) < 1e-12);
    CHECK(std::abs(c.a4) < 1e-12);
    CHECK(std::abs(c.abs_h21 - rep.bound.value()) < 1e-10);
    CHECK(c.matches_bound);
    CHECK(c.membership_ok);
    CHECK(c.coeffs_admissible);
    CHECK(!c.pole_in_disk);
    CHECK(c.truncated_margin > -1e-6);
    CHECK(c.path_agreement < 1e-12);
  }
}

TEST_CASE("extremal_check: starlike reports both candidates side by side") {
  const ExtremalReport rep = extremal_check(FunctionClass::StarlikeHalf);
  REQUIRE(rep.candidates.size() == 2);

  const ExtremalCandidate& beta = rep.candidates[0];
  CHECK(std::abs(beta.abs_h21 - 19.0 / 288.0) < 1e-10);
  CHECK(beta.matches_bound);
  CHECK(!beta.membership_ok);
  CHECK(beta.pole_in_disk.has_value());
  if (beta.pole_in_disk) {
    const double beta_val = std::sqrt(19.0) / (3.0 * std::sqrt(2.0));
    CHECK(std::abs(std::abs(*beta.pole_in_disk) - 1.0 / std::sqrt(beta_val)) < 1e-9);
  }
  CHECK(!beta.coeffs_admissible);  // c2 = 2 beta > 2

  const ExtremalCandidate& witness = rep.candidates[1];
  CHECK(std::abs(witness.abs_h21 - 19.0 / 288.0) < 1e-10);
  CHECK(witness.matches_bound);
  CHECK(witness.membership_ok);
  CHECK(!witness.pole_in_disk);
  CHECK(witness.coeffs_admissible);
  CHECK(witness.truncated_margin > -1e-6);
  CHECK(std::abs(witness.a2 - 1.0 / std::sqrt(6.0)) < 1e-12);
  CHECK(std::abs(witness.a3 - 7.0 / 12.0) < 1e-12);
  CHECK(std::abs(witness.a4 - 31.0 / (36.0 * std::sqrt(6.0))) < 1e-12);
  CHECK(std::abs(witness.h21 + 19.0 / 288.0) < 1e-12);
}
