#pragma once

#include <complex>
#include <vector>

namespace hankelforge {

using cplx = std::complex<double>;

/// Truncated power series about the origin. coeff(n) is the coefficient of
/// z^n and every operation is exact modulo z^(order+1). A series is
/// "normalized" when f(0) = 0 and f'(0) = 1.
class TaylorSeries {
 public:
  TaylorSeries() = default;
  explicit TaylorSeries(std::vector<cplx> coeffs);

  static TaylorSeries zero(int order);
  static TaylorSeries identity(int order);  // z
  static TaylorSeries koebe(int order);     // z/(1-z)^2, coefficients a_n = n
  /// z + a2 z^2 + ... + a5 z^5 padded with zeros; order must be >= 5.
  static TaylorSeries normalized(cplx a2, cplx a3, cplx a4, cplx a5, int order = 8);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }

  cplx coeff(int n) const;   // zero beyond the truncation order
  cplx& coeff(int n);        // mutable access, n <= order

  bool is_normalized(double tol = 1e-12) const;
  cplx evaluate(cplx z) const;
  TaylorSeries derivative() const;  // order drops by one

 private:
  std::vector<cplx> coeffs_{cplx(0.0)};
};

/// Cauchy product truncated at the common order. Orders must match.
TaylorSeries multiply(const TaylorSeries& f, const TaylorSeries& g);

/// f(g(z)) mod z^(order+1); requires g(0) = 0 and equal orders.
TaylorSeries compose(const TaylorSeries& f, const TaylorSeries& g);

/// log(f(z)/z) for normalized f, with log 1 = 0. The result has order
/// one below f because the top coefficient of the quotient is lost to
/// truncation. The logarithmic coefficients are gamma_n = coeff(n)/2.
TaylorSeries log_ratio(const TaylorSeries& f);

/// Compositional inverse F with f(F(w)) = w mod w^(order+1), computed by
/// the triangular recursion from equating coefficients.
TaylorSeries invert_series(const TaylorSeries& f);

/// gamma_n for n = 1..order-1.
std::vector<cplx> log_coefficients(const TaylorSeries& f);

/// Gamma_n of the compositional inverse for n = 1..order-1; the order must
/// be at least 4 so that the 2x2 determinant window Gamma_1..Gamma_3 exists.
std::vector<cplx> inverse_log_coefficients(const TaylorSeries& f);

double max_coeff_distance(const TaylorSeries& f, const TaylorSeries& g);

}  // namespace hankelforge
