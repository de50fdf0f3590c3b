// Acceptance suite: certifies the three sharp bounds end to end and checks
// every cross-form identity at its stated tolerance. Prints one pass/fail
// line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "hankelforge/certifier.hpp"
#include "hankelforge/coefficient_formulas.hpp"
#include "hankelforge/hankel.hpp"
#include "hankelforge/random_utils.hpp"

namespace hf = hankelforge;
using hf::cplx;

namespace {

int failures = 0;

void line(int id, bool ok, const char* title, const std::string& detail) {
  std::printf("[%s] %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

struct CertOutcome {
  hf::CertificationReport report;
  double elapsed = 0.0;
};

CertOutcome certify_serial(hf::FunctionClass cls) {
  const auto t0 = std::chrono::steady_clock::now();
  CertOutcome out;
  out.report = hf::search_max(cls, hf::GridSpec{}, /*parallel=*/false);
  out.elapsed = seconds_since(t0);
  return out;
}

}  // namespace

int main() {
  // Criterion 1: starlike-half certification at the default grid,
  // single-threaded, within 60 s.
  const CertOutcome star = certify_serial(hf::FunctionClass::StarlikeHalf);
  {
    const double bound = 19.0 / 288.0;
    const hf::CertificationReport& r = star.report;
    const bool range_ok = r.search_max >= bound - 1e-6 && r.search_max <= bound + 1e-7;
    const bool witness_ok = std::abs(r.witness.tau1 - hf::kPhiPeak) < 1e-3 &&
                            std::abs(r.witness.tau2 - cplx(1.0, 0.0)) < 1e-3;
    const bool time_ok = star.elapsed <= 60.0;
    line(1, range_ok && witness_ok && time_ok,
         "starlike-half search max reaches 19/288 with witness (1/sqrt(6), 1)",
         fmt("search_max %.12g, witness tau1 %.6g, %.1f s single-threaded", r.search_max,
             r.witness.tau1, star.elapsed));
  }

  // Criterion 2: convex-half certification plus the extremal driver.
  const CertOutcome convex = certify_serial(hf::FunctionClass::ConvexHalf);
  {
    const double bound = 1.0 / 144.0;
    const hf::CertificationReport& r = convex.report;
    const bool range_ok = r.search_max >= bound - 1e-6 && r.search_max <= bound + 1e-7;
    const hf::ExtremalReport ext = hf::extremal_check(hf::FunctionClass::ConvexHalf);
    const hf::ExtremalCandidate& c = ext.candidates.at(0);
    const bool coeff_ok = std::abs(c.a2) <= 1e-12 &&
                          std::abs(c.a3 - 1.0 / 6.0) <= 1e-12 && std::abs(c.a4) <= 1e-12;
    const bool h_ok = std::abs(c.abs_h21 - bound) <= 1e-10 && c.membership_ok;
    line(2, range_ok && coeff_ok && h_ok,
         "convex-half search max reaches 1/144 and (1+z^2)/(1-z^2) attains it",
         fmt("search_max %.12g, a3 %.15g, |H| %.12g", r.search_max, c.a3.real(), c.abs_h21));
  }

  // Criterion 3: bounded-turning-half certification plus the extremal driver.
  const CertOutcome bturn = certify_serial(hf::FunctionClass::BoundedTurningHalf);
  {
    const double bound = 1.0 / 36.0;
    const hf::CertificationReport& r = bturn.report;
    const bool range_ok = r.search_max >= bound - 1e-6 && r.search_max <= bound + 1e-7;
    const hf::ExtremalReport ext = hf::extremal_check(hf::FunctionClass::BoundedTurningHalf);
    const hf::ExtremalCandidate& c = ext.candidates.at(0);
    const bool coeff_ok = std::abs(c.a3 - 1.0 / 3.0) <= 1e-12;
    const bool h_ok = std::abs(c.abs_h21 - bound) <= 1e-10 && c.membership_ok;
    line(3, range_ok && coeff_ok && h_ok,
         "r-half search max reaches 1/36 and the extremal has a3 = 1/3",
         fmt("search_max %.12g, a3 %.15g, |H| %.12g", r.search_max, c.a3.real(), c.abs_h21));
  }

  // Criterion 4: closed-form Y vs oracle over 1e5 seeded triples in [-3,3]^3.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto inputs = hf::sample_y_inputs(100000, 2024, 3.0, /*boundary=*/false);
    const hf::SweepResult res = hf::oracle_agreement_sweep(inputs);
    const double elapsed = seconds_since(t0);
    line(4, res.max_gap <= 1e-5 && elapsed <= 120.0,
         "y_eval matches the brute-force oracle on 1e5 random triples",
         fmt("max gap %.3g, %.1f s", res.max_gap, elapsed));
  }

  // Criterion 5: the four coordinate systems agree pairwise to 1e-12.
  {
    std::mt19937_64 rng(99);
    double worst = 0.0;
    for (const hf::FunctionClass cls : hf::kAllClasses) {
      for (int trial = 0; trial < 10000; ++trial) {
        const hf::SchurParams params{hf::uniform01(rng), hf::random_in_disk(rng),
                                     hf::random_in_disk(rng)};
        const hf::CaratheodoryCoeffs c = hf::coeffs_from_schur(params);
        const hf::CoefficientTriple a = hf::coeff_map(cls, c);
        const cplx via_tau = hf::h21_in_tau(cls, params).value;
        const cplx via_c = hf::h21_in_c(cls, c).value;
        const cplx via_a = hf::h21_from_a(a.a2, a.a3, a.a4).value;
        const auto gammas = hf::inverse_log_coefficients(
            hf::TaylorSeries::normalized(a.a2, a.a3, a.a4, 0.0, 6));
        const cplx via_gamma = hf::h21_from_gammas(gammas[0], gammas[1], gammas[2]).value;
        worst = std::max({worst, std::abs(via_tau - via_c), std::abs(via_tau - via_a),
                          std::abs(via_tau - via_gamma), std::abs(via_c - via_a),
                          std::abs(via_c - via_gamma), std::abs(via_a - via_gamma)});
      }
    }
    line(5, worst <= 1e-12, "gamma/a/c/tau coordinate systems agree on 1e4 tuples per class",
         fmt("max pairwise deviation %.3g", worst));
  }

  // Criterion 6: envelope identities.
  {
    std::mt19937_64 rng(7);
    const double bp = hf::tau1_breakpoint();
    double worst_star = 0.0, worst_poly = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double t_lo = 1e-4 + (bp - 1e-4) * hf::uniform01(rng);
      worst_star = std::max(worst_star,
                            std::abs(hf::case3_bound(hf::FunctionClass::StarlikeHalf, t_lo) -
                                     hf::envelope_phi(t_lo)));
      const double t_hi = bp + (1.0 - bp - 1e-4) * hf::uniform01(rng);
      worst_star = std::max(worst_star,
                            std::abs(hf::case3_bound(hf::FunctionClass::StarlikeHalf, t_hi) -
                                     hf::envelope_psi(t_hi)));
      const double t = 1e-4 + (1.0 - 2e-4) * hf::uniform01(rng);
      const double t2 = t * t;
      worst_poly =
          std::max(worst_poly, std::abs(hf::case3_bound(hf::FunctionClass::ConvexHalf, t) -
                                        (16.0 - 4.0 * t2 - 11.0 * t2 * t2) / 2304.0));
      worst_poly = std::max(
          worst_poly, std::abs(hf::case3_bound(hf::FunctionClass::BoundedTurningHalf, t) -
                               (64.0 - 24.0 * t2 - 39.0 * t2 * t2) / 2304.0));
    }
    const double phi_peak = std::abs(hf::envelope_phi(hf::kPhiPeak) - 19.0 / 288.0);
    const double psi_bp = std::abs(hf::envelope_psi(bp) - 0.0545938);
    const bool ok = worst_star <= 1e-9 && worst_poly <= 1e-12 && phi_peak <= 1e-15 &&
                    psi_bp <= 1e-6;
    line(6, ok, "case-3 bound equals phi/psi and the class quartics",
         fmt("starlike %.3g, quartics %.3g, psi(breakpoint) off by %.3g", worst_star,
             worst_poly, psi_bp));
  }

  // Criterion 7: Koebe oracles.
  {
    const hf::TaylorSeries inv = hf::invert_series(hf::TaylorSeries::koebe(10));
    const auto gammas = hf::inverse_log_coefficients(hf::TaylorSeries::koebe(10));
    const double want_a[3] = {-2.0, 5.0, -14.0};
    double worst = std::abs(inv.coeff(5) - 42.0);
    for (int n = 2; n <= 4; ++n) {
      worst = std::max(worst, std::abs(inv.coeff(n) - want_a[n - 2]));
      worst = std::max(worst, std::abs(std::abs(inv.coeff(n)) - hf::koebe_inverse_bound(n)));
    }
    const double want_g[4] = {-1.0, 1.5, -10.0 / 3.0, 8.75};
    for (int n = 1; n <= 4; ++n) {
      worst = std::max(worst, std::abs(gammas[static_cast<std::size_t>(n - 1)] -
                                       cplx(want_g[n - 1], 0.0)));
      worst = std::max(worst, std::abs(std::abs(gammas[static_cast<std::size_t>(n - 1)]) -
                                       hf::koebe_inverse_log_bound(n)));
    }
    line(7, worst <= 1e-12, "Koebe inverse coefficients and log coefficients are extremal",
         fmt("max deviation %.3g", worst));
  }

  // Criterion 8: the starlike sharpness discrepancy, both candidates in one run.
  {
    const hf::ExtremalReport rep = hf::extremal_check(hf::FunctionClass::StarlikeHalf);
    const bool shape_ok = rep.candidates.size() == 2;
    bool ok = shape_ok;
    std::string detail = "report does not carry two candidates";
    if (shape_ok) {
      const hf::ExtremalCandidate& a = rep.candidates[0];
      const hf::ExtremalCandidate& b = rep.candidates[1];
      const bool a_ok = std::abs(a.abs_h21 - 19.0 / 288.0) <= 1e-10 && !a.membership_ok &&
                        a.pole_in_disk.has_value();
      const bool b_ok = std::abs(b.abs_h21 - 19.0 / 288.0) <= 1e-10 && b.membership_ok;
      ok = a_ok && b_ok;
      detail = fmt("beta driver |H| %.12g (pole inside, membership false), witness driver "
                   "|H| %.12g (membership true)",
                   a.abs_h21, b.abs_h21);
    }
    line(8, ok, "starlike sharpness: beta driver fails membership, witness attains it",
         detail);
  }

  // Criterion 9: no sampled grid point exceeded its bound.
  {
    const double v = std::max({star.report.max_violation, convex.report.max_violation,
                               bturn.report.max_violation});
    const bool ok = star.report.sound() && convex.report.sound() && bturn.report.sound();
    line(9, ok, "soundness sweep: no sampled point exceeds its bound",
         fmt("max violation %.3g over %.3g points", v,
             static_cast<double>(star.report.evaluations + convex.report.evaluations +
                                 bturn.report.evaluations)));
  }

  if (failures == 0) std::printf("acceptance: all 9 criteria passed\n");
  else std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
