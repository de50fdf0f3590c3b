#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hankelforge/taylor_series.hpp"

namespace hankelforge {

/// Schur parameters (tau1, tau2, tau3) of the Libera-Zlotkiewicz
/// parametrization: tau1 real in [0,1], tau2 and tau3 in the closed disk.
struct SchurParams {
  double tau1 = 0.0;
  cplx tau2{0.0, 0.0};
  cplx tau3{0.0, 0.0};

  bool valid(double tol = 1e-12) const;
  void require_valid(double tol = 1e-12) const;  // throws std::domain_error
};

struct CaratheodoryCoeffs {
  cplx c1{0.0, 0.0};
  cplx c2{0.0, 0.0};
  cplx c3{0.0, 0.0};

  /// |c_n| <= 2 within tol, the coefficient bound for the class.
  bool admissible(double tol = 1e-12) const;
};

/// c1 = 2 tau1,
/// c2 = 2 tau1^2 + 2 (1 - tau1^2) tau2,
/// c3 = 2 tau1^3 + 4 (1 - tau1^2) tau1 tau2 - 2 (1 - tau1^2) tau1 tau2^2
///      + 2 (1 - tau1^2)(1 - |tau2|^2) tau3.
CaratheodoryCoeffs coeffs_from_schur(const SchurParams& params);

/// Thrown when an evaluation lands on (or numerically at) a pole.
struct PoleError : std::runtime_error {
  explicit PoleError(cplx where);
  cplx location;
};

/// Ratio of two polynomials, evaluated by Horner's rule. Evaluation throws
/// PoleError when the denominator is numerically zero at the point.
class RationalFunction {
 public:
  RationalFunction(std::vector<cplx> numerator, std::vector<cplx> denominator);

  cplx operator()(cplx z) const;
  const std::vector<cplx>& numerator() const { return num_; }
  const std::vector<cplx>& denominator() const { return den_; }

  /// Taylor expansion at 0 by long division; needs denominator(0) != 0.
  TaylorSeries to_series(int order) const;

  /// All roots of the denominator (Durand-Kerner, degree <= 3 in practice).
  std::vector<cplx> denominator_roots() const;

 private:
  std::vector<cplx> num_;
  std::vector<cplx> den_;
};

enum class BoundaryRegime { tau1_on_circle, tau2_on_circle, tau3_on_circle };

/// Which of the three boundary cases applies: tau1 on the unit circle, or
/// tau1 inside and tau2 on the circle, or tau1, tau2 inside and tau3 on the
/// circle. circle_tol decides membership of the circle. Throws
/// std::domain_error when all three parameters are strictly interior, where
/// the representing function is not unique.
BoundaryRegime boundary_regime(const SchurParams& params, double circle_tol = 1e-9);

/// The unique rational Caratheodory function matching the regime. Its
/// Taylor coefficients reproduce coeffs_from_schur(params).
RationalFunction boundary_function(const SchurParams& params, double circle_tol = 1e-9);

struct PositivityReport {
  double min_re = 0.0;
  cplx argmin{0.0, 0.0};
  bool ok = false;
};

/// Samples Re p on the given circles; ok iff the minimum stays above -1e-9.
/// Pole evaluations propagate as PoleError.
PositivityReport verify_positive_real_part(const std::function<cplx(cplx)>& p,
                                           std::span<const double> radii,
                                           int samples_per_circle);

/// Taylor coefficients 0..count-1 of an opaque evaluator, by trapezoidal
/// Fourier quadrature on |z| = radius.
std::vector<cplx> taylor_coefficients_fourier(const std::function<cplx(cplx)>& f,
                                              int count, double radius = 0.3,
                                              int samples = 4096);

}  // namespace hankelforge
