#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "hankelforge/caratheodory.hpp"
#include "hankelforge/taylor_series.hpp"

namespace hankelforge {

/// The three function classes of order 1/2: Re(z f'/f) > 1/2,
/// Re(1 + z f''/f') > 1/2, and Re f' > 1/2.
enum class FunctionClass { StarlikeHalf, ConvexHalf, BoundedTurningHalf };

inline constexpr double kClassOrder = 0.5;
inline constexpr FunctionClass kAllClasses[] = {
    FunctionClass::StarlikeHalf, FunctionClass::ConvexHalf,
    FunctionClass::BoundedTurningHalf};

std::string_view class_name(FunctionClass cls);  // "starlike-half" etc.
std::optional<FunctionClass> parse_class(std::string_view name);

struct CoefficientTriple {
  cplx a2, a3, a4;
};

/// Coefficients of f in terms of the driver's Caratheodory coefficients:
///   starlike:        a2 = c1/2, a3 = (2c2 + c1^2)/8,  a4 = (8c3 + 6c1c2 + c1^3)/48
///   convex:          a2 = c1/4, a3 = (2c2 + c1^2)/24, a4 = (8c3 + 6c1c2 + c1^3)/192
///   bounded turning: a2 = c1/4, a3 = c2/6,            a4 = c3/8
CoefficientTriple coeff_map(FunctionClass cls, const CaratheodoryCoeffs& c);

/// Solves the class's defining relation with driver p (p(0) = 1) for the
/// normalized f, termwise up to the requested order.
TaylorSeries reconstruct_f(FunctionClass cls, const TaylorSeries& p, int order);

struct MembershipReport {
  double min_margin = 0.0;  // min over samples of Re(functional) - 1/2
  cplx argmin{0.0, 0.0};
  bool ok = false;
};

/// Thrown when the defining quotient hits a numerically zero denominator.
struct NearZeroDenominator : std::runtime_error {
  explicit NearZeroDenominator(cplx where);
  cplx location;
};

/// Samples the class functional of the truncated polynomial f on circle
/// grids. A necessary check on a truncation, not a membership proof.
MembershipReport membership_check(const TaylorSeries& f, FunctionClass cls,
                                  std::span<const double> radii,
                                  int samples_per_circle);

}  // namespace hankelforge
