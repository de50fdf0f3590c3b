#include "hankelforge/hankel.hpp"

#include <stdexcept>
#include <vector>

namespace hankelforge {

HankelValue h21_from_gammas(cplx gamma1, cplx gamma2, cplx gamma3) {
  return {gamma1 * gamma3 - gamma2 * gamma2, CoordinateSystem::gamma, std::nullopt};
}

HankelValue h21_from_a(cplx a2, cplx a3, cplx a4) {
  const cplx a2_sq = a2 * a2;
  const cplx v = (13.0 * a2_sq * a2_sq - 12.0 * a2_sq * a3 - 12.0 * a3 * a3 +
                  12.0 * a2 * a4) / 48.0;
  return {v, CoordinateSystem::a, std::nullopt};
}

HankelValue h21_in_c(FunctionClass cls, const CaratheodoryCoeffs& c) {
  const cplx c1 = c.c1, c2 = c.c2, c3 = c.c3;
  const cplx c1_sq = c1 * c1;
  cplx v;
  // Constants are pinned per class; the derivation from the a-form is a test.
  switch (cls) {
    case FunctionClass::StarlikeHalf:
      v = (3.0 * c1_sq * c1_sq - 6.0 * c1_sq * c2 - 6.0 * c2 * c2 + 8.0 * c1 * c3) / 384.0;
      break;
    case FunctionClass::ConvexHalf:
      v = (11.0 * c1_sq * c1_sq - 40.0 * c1_sq * c2 - 64.0 * c2 * c2 + 96.0 * c1 * c3) /
          36864.0;
      break;
    case FunctionClass::BoundedTurningHalf:
      v = (39.0 * c1_sq * c1_sq - 96.0 * c1_sq * c2 - 256.0 * c2 * c2 + 288.0 * c1 * c3) /
          36864.0;
      break;
  }
  return {v, CoordinateSystem::c, cls};
}

HankelValue h21_in_tau(FunctionClass cls, const SchurParams& params) {
  params.require_valid();
  const double t = params.tau1;
  const double t2 = t * t;
  const double s = 1.0 - t2;
  const cplx tau2 = params.tau2;
  const cplx tau2_sq = tau2 * tau2;
  const double slack = 1.0 - std::norm(tau2);  // 1 - |tau2|^2
  const cplx tau3_term = params.tau3 * (t * s * slack);
  cplx v;
  switch (cls) {
    case FunctionClass::StarlikeHalf:
      v = (t2 * t2 - 4.0 * s * t2 * tau2 - s * (3.0 + t2) * tau2_sq + 4.0 * tau3_term) / 48.0;
      break;
    case FunctionClass::ConvexHalf:
      v = (-t2 * t2 - 4.0 * s * t2 * tau2 - 8.0 * s * (2.0 + t2) * tau2_sq +
           24.0 * tau3_term) / 2304.0;
      break;
    case FunctionClass::BoundedTurningHalf:
      v = (-t2 * t2 - 32.0 * s * t2 * tau2 - 8.0 * s * (8.0 + t2) * tau2_sq +
           72.0 * tau3_term) / 2304.0;
      break;
  }
  return {v, CoordinateSystem::tau, cls};
}

namespace {

cplx det_recursive(const std::vector<cplx>& m, int q) {
  if (q == 1) return m[0];
  if (q == 2) return m[0] * m[3] - m[1] * m[2];
  cplx acc = 0.0;
  double sign = 1.0;
  std::vector<cplx> minor(static_cast<std::size_t>((q - 1) * (q - 1)));
  for (int col = 0; col < q; ++col) {
    for (int i = 1; i < q; ++i) {
      int mj = 0;
      for (int j = 0; j < q; ++j) {
        if (j == col) continue;
        minor[static_cast<std::size_t>((i - 1) * (q - 1) + mj)] =
            m[static_cast<std::size_t>(i * q + j)];
        ++mj;
      }
    }
    acc += sign * m[static_cast<std::size_t>(col)] * det_recursive(minor, q - 1);
    sign = -sign;
  }
  return acc;
}

}  // namespace

cplx hankel_generic(std::span<const cplx> sequence, int q, int n) {
  if (q < 1 || n < 1) throw std::invalid_argument("hankel_generic: q and n must be >= 1");
  if (n + 2 * (q - 1) > static_cast<int>(sequence.size()))
    throw std::out_of_range("hankel_generic: window exceeds sequence length");
  std::vector<cplx> m(static_cast<std::size_t>(q * q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      m[static_cast<std::size_t>(i * q + j)] = sequence[static_cast<std::size_t>(n + i + j - 1)];
  return det_recursive(m, q);
}

}  // namespace hankelforge
