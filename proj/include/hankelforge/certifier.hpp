#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hankelforge/caratheodory.hpp"
#include "hankelforge/fraction.hpp"
#include "hankelforge/function_classes.hpp"
#include "hankelforge/ymax.hpp"

namespace hankelforge {

/// Location of the interior maximum of the starlike envelope, 1/sqrt(6).
inline constexpr double kPhiPeak = 0.40824829046386301637;

/// Breakpoint between the two starlike envelope pieces,
/// sqrt((sqrt(61) - 5)/6), about 0.684379.
double tau1_breakpoint();

/// The certified sharp bound per class: 19/288, 1/144, 1/36.
Fraction theoretical_bound(FunctionClass cls);

/// Real coefficients of the case-3 envelope, |H| <= prefactor * Y(A,B,C):
///   starlike:        A =  t^3/(4(1-t^2)), B = -t,     C = -(3+t^2)/(4t),  prefactor t(1-t^2)/12
///   convex:          A = -t^3/(24(1-t^2)), B = -t/6,  C = -(2+t^2)/(3t),  prefactor t(1-t^2)/96
///   bounded turning: A = -t^3/(72(1-t^2)), B = -4t/9, C = -(8+t^2)/(9t),  prefactor t(1-t^2)/32
struct CaseBoundCoefficients {
  double A = 0.0, B = 0.0, C = 0.0;
  double prefactor = 0.0;
};

CaseBoundCoefficients case_coefficients(FunctionClass cls, double t);  // t in (0,1)

/// (3 + 2t^2 - 6t^4)/48 on [0, tau1_breakpoint()]; increasing up to
/// 1/sqrt(6), decreasing after, with peak value 19/288.
double envelope_phi(double t);

/// ((3 - 2t^2)/48) sqrt((7 - 3t^2)/(3 + t^2)) on [tau1_breakpoint(), 1],
/// decreasing throughout.
double envelope_psi(double t);

/// prefactor(t) * Y(A(t), B(t), C(t)); equals phi/psi on the two starlike
/// intervals, (16 - 4t^2 - 11t^4)/2304 for convex, and
/// (64 - 24t^2 - 39t^4)/2304 for bounded turning.
double case3_bound(FunctionClass cls, double t);

/// The Y branch that fires inside case3_bound at this t.
YBranch case3_branch(FunctionClass cls, double t);

struct GridSpec {
  int n_tau1 = 128;
  int n_tau2_modulus = 64;
  int n_tau2_phase = 64;
  int n_tau3_phase = 16;
  int refinement_rounds = 3;
};

struct CaseDiagnostic {
  double tau1 = 0.0;
  double slice_max = 0.0;  // max |H| over the tau1 slice of the coarse grid
  double envelope = 0.0;   // triangle-inequality bound at this tau1
};

struct CertificationReport {
  FunctionClass cls = FunctionClass::StarlikeHalf;
  Fraction bound;
  double search_max = 0.0;
  SchurParams witness;
  double gap = 0.0;            // bound - search_max
  GridSpec grid;
  double max_violation = 0.0;  // max(0, excess of any sampled point over the bound)
  std::vector<CaseDiagnostic> diagnostics;
  std::uint64_t evaluations = 0;
  std::string tau3_note;

  bool bound_respected(double tol = 1e-7) const { return search_max <= bound.value() + tol; }
  bool attained(double tol = 1e-6) const { return gap <= tol; }
  bool sound(double tol = 1e-9) const { return max_violation <= tol; }
};

/// Maximizes |H_{2,1}| over tau1 in [0,1], tau2 in the closed disk and
/// tau3 on the unit circle (the objective is affine in tau3, so the disk
/// maximum sits on the circle). Grid pass, then refinement rounds zooming
/// by a factor of 10 around the incumbent. The witness is the
/// lexicographically smallest grid point within 1e-9 of the maximum, and
/// the report is identical for any worker count.
CertificationReport search_max(FunctionClass cls, const GridSpec& grid = {},
                               bool parallel = true, int threads = 0);

struct ExtremalCandidate {
  std::string label;
  std::string driver_formula;
  CaratheodoryCoeffs driver_coeffs;
  bool coeffs_admissible = false;
  cplx a2, a3, a4;
  double path_agreement = 0.0;     // reconstruction vs closed-form coefficient map
  cplx h21;
  double abs_h21 = 0.0;
  bool matches_bound = false;      // | |H| - bound | <= 1e-10
  bool membership_ok = false;      // driver positivity and no pole inside the disk
  double driver_min_re = 0.0;
  std::optional<cplx> pole_in_disk;
  double truncated_margin = 0.0;   // membership_check margin of the order-8 truncation
  std::optional<SchurParams> schur;
};

struct ExtremalReport {
  FunctionClass cls = FunctionClass::StarlikeHalf;
  Fraction bound;
  std::vector<ExtremalCandidate> candidates;
};

/// Attainment witnesses. Convex and bounded turning use the driver
/// (1 + z^2)/(1 - z^2). Starlike reports two candidates side by side: the
/// driver (1 + beta z^2)/(1 - beta z^2) with beta = sqrt(19)/(3 sqrt(2)),
/// whose pole lies inside the disk, and the boundary driver at
/// (tau1, tau2) = (1/sqrt(6), 1), which attains 19/288 and stays in class.
ExtremalReport extremal_check(FunctionClass cls);

}  // namespace hankelforge
