#include "hankelforge/caratheodory.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hankelforge {

bool SchurParams::valid(double tol) const {
  return tau1 >= -tol && tau1 <= 1.0 + tol && std::abs(tau2) <= 1.0 + tol &&
         std::abs(tau3) <= 1.0 + tol;
}

void SchurParams::require_valid(double tol) const {
  if (!valid(tol)) {
    std::ostringstream msg;
    msg << "SchurParams: (tau1, |tau2|, |tau3|) = (" << tau1 << ", " << std::abs(tau2)
        << ", " << std::abs(tau3) << ") outside [0,1] x disk x disk";
    throw std::domain_error(msg.str());
  }
}

bool CaratheodoryCoeffs::admissible(double tol) const {
  return std::abs(c1) <= 2.0 + tol && std::abs(c2) <= 2.0 + tol && std::abs(c3) <= 2.0 + tol;
}

CaratheodoryCoeffs coeffs_from_schur(const SchurParams& params) {
  params.require_valid();
  const double t = params.tau1;
  const double t2 = t * t;
  const double s = 1.0 - t2;
  const cplx tau2 = params.tau2;
  CaratheodoryCoeffs c;
  c.c1 = 2.0 * t;
  c.c2 = 2.0 * t2 + 2.0 * s * tau2;
  c.c3 = 2.0 * t2 * t + 4.0 * s * t * tau2 - 2.0 * s * t * tau2 * tau2 +
         2.0 * s * (1.0 - std::norm(tau2)) * params.tau3;
  return c;
}

PoleError::PoleError(cplx where)
    : std::runtime_error("pole detected at z = (" + std::to_string(where.real()) + ", " +
                         std::to_string(where.imag()) + ")"),
      location(where) {}

namespace {

cplx horner(const std::vector<cplx>& coeffs, cplx z) {
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

RationalFunction::RationalFunction(std::vector<cplx> numerator, std::vector<cplx> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.empty() || den_.empty())
    throw std::invalid_argument("RationalFunction: empty coefficient list");
}

cplx RationalFunction::operator()(cplx z) const {
  const cplx n = horner(num_, z);
  const cplx d = horner(den_, z);
  if (std::abs(d) <= 1e-12 * std::max(1.0, std::abs(n))) throw PoleError(z);
  return n / d;
}

TaylorSeries RationalFunction::to_series(int order) const {
  if (std::abs(den_[0]) < 1e-14)
    throw std::domain_error("RationalFunction::to_series: denominator vanishes at 0");
  TaylorSeries out = TaylorSeries::zero(order);
  const int dn = static_cast<int>(den_.size()) - 1;
  for (int n = 0; n <= order; ++n) {
    cplx acc = n < static_cast<int>(num_.size()) ? num_[static_cast<std::size_t>(n)] : cplx(0.0);
    for (int k = 1; k <= std::min(n, dn); ++k)
      acc -= den_[static_cast<std::size_t>(k)] * out.coeff(n - k);
    out.coeff(n) = acc / den_[0];
  }
  return out;
}

std::vector<cplx> RationalFunction::denominator_roots() const {
  std::vector<cplx> p = den_;
  while (p.size() > 1 && std::abs(p.back()) < 1e-14) p.pop_back();
  const int deg = static_cast<int>(p.size()) - 1;
  if (deg < 1) return {};
  const cplx lead = p.back();
  for (auto& c : p) c /= lead;

  // Durand-Kerner iteration.
  std::vector<cplx> roots(static_cast<std::size_t>(deg));
  const cplx seed(0.4, 0.9);
  cplx pw = 1.0;
  for (auto& r : roots) {
    pw *= seed;
    r = pw;
  }
  for (int iter = 0; iter < 200; ++iter) {
    double moved = 0.0;
    for (int i = 0; i < deg; ++i) {
      cplx denom = 1.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) denom *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
      const cplx val = horner(p, roots[static_cast<std::size_t>(i)]);
      const cplx step = val / denom;
      roots[static_cast<std::size_t>(i)] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  return roots;
}

BoundaryRegime boundary_regime(const SchurParams& params, double circle_tol) {
  params.require_valid();
  if (std::abs(params.tau1 - 1.0) <= circle_tol) return BoundaryRegime::tau1_on_circle;
  if (std::abs(std::abs(params.tau2) - 1.0) <= circle_tol) return BoundaryRegime::tau2_on_circle;
  if (std::abs(std::abs(params.tau3) - 1.0) <= circle_tol) return BoundaryRegime::tau3_on_circle;
  throw std::domain_error(
      "boundary_function: no boundary regime applies (all parameters strictly "
      "interior, representation not unique)");
}

RationalFunction boundary_function(const SchurParams& params, double circle_tol) {
  const BoundaryRegime regime = boundary_regime(params, circle_tol);
  const cplx t1 = params.tau1;  // real by construction
  const cplx t2 = params.tau2;
  const cplx t3 = params.tau3;
  const cplx t1c = std::conj(t1);
  const cplx t2c = std::conj(t2);
  switch (regime) {
    case BoundaryRegime::tau1_on_circle:
      return RationalFunction({1.0, t1}, {1.0, -t1});
    case BoundaryRegime::tau2_on_circle:
      return RationalFunction({1.0, t1c * t2 + t1, t2}, {1.0, t1c * t2 - t1, -t2});
    case BoundaryRegime::tau3_on_circle:
      return RationalFunction(
          {1.0, t2c * t3 + t1c * t2 + t1, t1c * t3 + t1 * t2c * t3 + t2, t3},
          {1.0, t2c * t3 + t1c * t2 - t1, t1c * t3 - t1 * t2c * t3 - t2, -t3});
  }
  throw std::logic_error("boundary_function: unreachable");
}

PositivityReport verify_positive_real_part(const std::function<cplx(cplx)>& p,
                                           std::span<const double> radii,
                                           int samples_per_circle) {
  if (samples_per_circle < 8)
    throw std::invalid_argument("verify_positive_real_part: too few samples");
  for (const double r : radii)
    if (!(r > 0.0 && r < 1.0))
      throw std::invalid_argument("verify_positive_real_part: radii must lie in (0,1)");
  PositivityReport rep;
  rep.min_re = std::numeric_limits<double>::infinity();
  for (const double r : radii) {
    for (int k = 0; k < samples_per_circle; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / samples_per_circle;
      const cplx z = r * cplx(std::cos(theta), std::sin(theta));
      const double re = p(z).real();
      if (re < rep.min_re) {
        rep.min_re = re;
        rep.argmin = z;
      }
    }
  }
  rep.ok = rep.min_re > -1e-9;
  return rep;
}

std::vector<cplx> taylor_coefficients_fourier(const std::function<cplx(cplx)>& f,
                                              int count, double radius, int samples) {
  if (count < 1 || samples < 2 * count)
    throw std::invalid_argument("taylor_coefficients_fourier: need samples >= 2*count");
  std::vector<cplx> values(static_cast<std::size_t>(samples));
  for (int m = 0; m < samples; ++m) {
    const double theta = 2.0 * std::numbers::pi * m / samples;
    values[static_cast<std::size_t>(m)] = f(radius * cplx(std::cos(theta), std::sin(theta)));
  }
  std::vector<cplx> coeffs(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    cplx acc = 0.0;
    for (int m = 0; m < samples; ++m) {
      const double theta = -2.0 * std::numbers::pi * j * m / samples;
      acc += values[static_cast<std::size_t>(m)] * cplx(std::cos(theta), std::sin(theta));
    }
    coeffs[static_cast<std::size_t>(j)] = acc / (static_cast<double>(samples) * std::pow(radius, j));
  }
  return coeffs;
}

}  // namespace hankelforge
