#pragma once

#include <optional>
#include <span>

#include "hankelforge/caratheodory.hpp"
#include "hankelforge/function_classes.hpp"
#include "hankelforge/taylor_series.hpp"

namespace hankelforge {

enum class CoordinateSystem { gamma, a, c, tau };

/// H_{2,1} of the inverse logarithmic coefficients, tagged with the
/// coordinate system it was computed in. c- and tau-form values always
/// carry the class they were specialized to.
struct HankelValue {
  cplx value{0.0, 0.0};
  CoordinateSystem coords = CoordinateSystem::gamma;
  std::optional<FunctionClass> class_tag;
};

/// Gamma1 Gamma3 - Gamma2^2.
HankelValue h21_from_gammas(cplx gamma1, cplx gamma2, cplx gamma3);

/// (13 a2^4 - 12 a2^2 a3 - 12 a3^2 + 12 a2 a4)/48.
HankelValue h21_from_a(cplx a2, cplx a3, cplx a4);

/// The per-class expansion in Caratheodory coefficients:
///   starlike:        (3 c1^4 -  6 c1^2 c2 -   6 c2^2 +   8 c1 c3)/384
///   convex:          (11 c1^4 - 40 c1^2 c2 -  64 c2^2 +  96 c1 c3)/36864
///   bounded turning: (39 c1^4 - 96 c1^2 c2 - 256 c2^2 + 288 c1 c3)/36864
HankelValue h21_in_c(FunctionClass cls, const CaratheodoryCoeffs& c);

/// The per-class expansion in Schur parameters; the tau3 term carries the
/// factor (1 - |tau2|^2), so on |tau2| = 1 the value is independent of tau3.
HankelValue h21_in_tau(FunctionClass cls, const SchurParams& params);

/// Determinant of the q x q Hankel window starting at index n of a
/// 1-indexed coefficient sequence (sequence[0] holds the index-1 entry).
cplx hankel_generic(std::span<const cplx> sequence, int q, int n);

}  // namespace hankelforge
