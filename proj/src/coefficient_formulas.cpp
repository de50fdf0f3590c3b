#include "hankelforge/coefficient_formulas.hpp"

#include <stdexcept>

namespace hankelforge {

InverseCoefficients inverse_closed_form(cplx a2, cplx a3, cplx a4, cplx a5) {
  const cplx a2_sq = a2 * a2;
  InverseCoefficients out;
  out.A2 = -a2;
  out.A3 = -a3 + 2.0 * a2_sq;
  out.A4 = -a4 + 5.0 * a2 * a3 - 5.0 * a2_sq * a2;
  out.A5 = -a5 + 6.0 * a4 * a2 - 21.0 * a3 * a2_sq + 3.0 * a3 * a3 + 14.0 * a2_sq * a2_sq;
  return out;
}

InverseLogCoefficients gamma_closed_form(cplx a2, cplx a3, cplx a4, cplx a5) {
  const cplx a2_sq = a2 * a2;
  InverseLogCoefficients out;
  out.Gamma1 = -0.5 * a2;
  out.Gamma2 = -0.5 * (a3 - 1.5 * a2_sq);
  out.Gamma3 = -0.5 * (a4 - 4.0 * a2 * a3 + (10.0 / 3.0) * a2_sq * a2);
  out.Gamma4 = -0.5 * (a5 - 5.0 * a4 * a2 + 15.0 * a3 * a2_sq - 2.5 * a3 * a3 -
                       8.75 * a2_sq * a2_sq);
  return out;
}

namespace {

// Exact for the small n used here; factorial ratios stay inside 64 bits.
unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  }
  return r;
}

}  // namespace

double koebe_inverse_bound(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("koebe_inverse_bound: n out of range");
  // (2n)!/(n!(n+1)!) = binom(2n, n)/(n+1)
  return static_cast<double>(binomial(2 * n, n)) / static_cast<double>(n + 1);
}

double koebe_inverse_log_bound(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("koebe_inverse_log_bound: n out of range");
  return static_cast<double>(binomial(2 * n, n)) / (2.0 * static_cast<double>(n));
}

}  // namespace hankelforge
