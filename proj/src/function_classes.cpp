#include "hankelforge/function_classes.hpp"

#include <cmath>
#include <numbers>

namespace hankelforge {

std::string_view class_name(FunctionClass cls) {
  switch (cls) {
    case FunctionClass::StarlikeHalf: return "starlike-half";
    case FunctionClass::ConvexHalf: return "convex-half";
    case FunctionClass::BoundedTurningHalf: return "r-half";
  }
  return "?";
}

std::optional<FunctionClass> parse_class(std::string_view name) {
  if (name == "starlike-half" || name == "starlike") return FunctionClass::StarlikeHalf;
  if (name == "convex-half" || name == "convex") return FunctionClass::ConvexHalf;
  if (name == "r-half" || name == "bounded-turning-half" || name == "bounded-turning")
    return FunctionClass::BoundedTurningHalf;
  return std::nullopt;
}

CoefficientTriple coeff_map(FunctionClass cls, const CaratheodoryCoeffs& c) {
  const cplx c1 = c.c1, c2 = c.c2, c3 = c.c3;
  const cplx c1_sq = c1 * c1;
  switch (cls) {
    case FunctionClass::StarlikeHalf:
      return {0.5 * c1, (2.0 * c2 + c1_sq) / 8.0, (8.0 * c3 + 6.0 * c1 * c2 + c1_sq * c1) / 48.0};
    case FunctionClass::ConvexHalf:
      return {0.25 * c1, (2.0 * c2 + c1_sq) / 24.0,
              (8.0 * c3 + 6.0 * c1 * c2 + c1_sq * c1) / 192.0};
    case FunctionClass::BoundedTurningHalf:
      return {0.25 * c1, c2 / 6.0, c3 / 8.0};
  }
  throw std::logic_error("coeff_map: unreachable");
}

namespace {

// Solves z g'/g = (p+1)/2 for normalized g. With q = (p+1)/2 the
// coefficient recursion is (n-1) g_n = sum_{k<n} g_k q_{n-k}.
TaylorSeries solve_starlike_relation(const TaylorSeries& p, int order) {
  TaylorSeries g = TaylorSeries::zero(order);
  g.coeff(1) = 1.0;
  for (int n = 2; n <= order; ++n) {
    cplx acc = 0.0;
    for (int k = 1; k < n; ++k) acc += g.coeff(k) * (0.5 * p.coeff(n - k));
    g.coeff(n) = acc / static_cast<double>(n - 1);
  }
  return g;
}

}  // namespace

TaylorSeries reconstruct_f(FunctionClass cls, const TaylorSeries& p, int order) {
  if (order < 1) throw std::invalid_argument("reconstruct_f: order must be >= 1");
  if (std::abs(p.coeff(0) - 1.0) > 1e-9)
    throw std::domain_error("reconstruct_f: driver must satisfy p(0) = 1");
  if (p.order() < order - 1)
    throw std::invalid_argument("reconstruct_f: driver series shorter than requested order");

  switch (cls) {
    case FunctionClass::StarlikeHalf:
      return solve_starlike_relation(p, order);
    case FunctionClass::ConvexHalf: {
      // Alexander's relation: g = z f' satisfies the starlike equation.
      const TaylorSeries g = solve_starlike_relation(p, order);
      TaylorSeries f = TaylorSeries::zero(order);
      for (int n = 1; n <= order; ++n) f.coeff(n) = g.coeff(n) / static_cast<double>(n);
      return f;
    }
    case FunctionClass::BoundedTurningHalf: {
      // f' = (p+1)/2 integrates termwise.
      TaylorSeries f = TaylorSeries::zero(order);
      f.coeff(1) = 1.0;
      for (int n = 2; n <= order; ++n)
        f.coeff(n) = 0.5 * p.coeff(n - 1) / static_cast<double>(n);
      return f;
    }
  }
  throw std::logic_error("reconstruct_f: unreachable");
}

NearZeroDenominator::NearZeroDenominator(cplx where)
    : std::runtime_error("near-zero denominator at z = (" + std::to_string(where.real()) +
                         ", " + std::to_string(where.imag()) + ")"),
      location(where) {}

MembershipReport membership_check(const TaylorSeries& f, FunctionClass cls,
                                  std::span<const double> radii, int samples_per_circle) {
  if (samples_per_circle < 8)
    throw std::invalid_argument("membership_check: too few samples");
  for (const double r : radii)
    if (!(r > 0.0 && r < 1.0))
      throw std::invalid_argument("membership_check: radii must lie in (0,1)");

  const TaylorSeries fp = f.derivative();
  const TaylorSeries fpp = fp.derivative();

  MembershipReport rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (const double r : radii) {
    for (int k = 0; k < samples_per_circle; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / samples_per_circle;
      const cplx z = r * cplx(std::cos(theta), std::sin(theta));
      cplx w;
      switch (cls) {
        case FunctionClass::StarlikeHalf: {
          const cplx fz = f.evaluate(z);
          if (std::abs(fz) < 1e-14) throw NearZeroDenominator(z);
          w = z * fp.evaluate(z) / fz;
          break;
        }
        case FunctionClass::ConvexHalf: {
          const cplx d = fp.evaluate(z);
          if (std::abs(d) < 1e-14) throw NearZeroDenominator(z);
          w = 1.0 + z * fpp.evaluate(z) / d;
          break;
        }
        case FunctionClass::BoundedTurningHalf:
          w = fp.evaluate(z);
          break;
      }
      const double margin = w.real() - kClassOrder;
      if (margin < rep.min_margin) {
        rep.min_margin = margin;
        rep.argmin = z;
      }
    }
  }
  rep.ok = rep.min_margin > -1e-6;
  return rep;
}

}  // namespace hankelforge
