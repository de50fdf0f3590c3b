#include "hankelforge/taylor_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hankelforge {

TaylorSeries::TaylorSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("TaylorSeries: at least the constant term is required");
}

TaylorSeries TaylorSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("TaylorSeries: negative order");
  return TaylorSeries(std::vector<cplx>(order + 1, cplx(0.0)));
}

TaylorSeries TaylorSeries::identity(int order) {
  TaylorSeries s = zero(order);
  if (order >= 1) s.coeff(1) = 1.0;
  return s;
}

TaylorSeries TaylorSeries::koebe(int order) {
  TaylorSeries s = zero(order);
  for (int n = 1; n <= order; ++n) s.coeff(n) = static_cast<double>(n);
  return s;
}

TaylorSeries TaylorSeries::normalized(cplx a2, cplx a3, cplx a4, cplx a5, int order) {
  if (order < 5)
    throw std::invalid_argument("TaylorSeries::normalized: order must be >= 5");
  TaylorSeries s = zero(order);
  s.coeff(1) = 1.0;
  s.coeff(2) = a2;
  s.coeff(3) = a3;
  s.coeff(4) = a4;
  s.coeff(5) = a5;
  return s;
}

cplx TaylorSeries::coeff(int n) const {
  if (n < 0) throw std::invalid_argument("TaylorSeries: negative index");
  if (n >= static_cast<int>(coeffs_.size())) return cplx(0.0);
  return coeffs_[static_cast<std::size_t>(n)];
}

cplx& TaylorSeries::coeff(int n) {
  if (n < 0 || n >= static_cast<int>(coeffs_.size()))
    throw std::invalid_argument("TaylorSeries: index " + std::to_string(n) +
                                " outside order " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(n)];
}

bool TaylorSeries::is_normalized(double tol) const {
  return order() >= 1 && std::abs(coeff(0)) <= tol && std::abs(coeff(1) - 1.0) <= tol;
}

cplx TaylorSeries::evaluate(cplx z) const {
  cplx acc = 0.0;
  for (int n = order(); n >= 0; --n) acc = acc * z + coeffs_[static_cast<std::size_t>(n)];
  return acc;
}

TaylorSeries TaylorSeries::derivative() const {
  if (order() == 0) return zero(0);
  TaylorSeries out = zero(order() - 1);
  for (int n = 1; n <= order(); ++n)
    out.coeff(n - 1) = static_cast<double>(n) * coeff(n);
  return out;
}

TaylorSeries multiply(const TaylorSeries& f, const TaylorSeries& g) {
  if (f.order() != g.order())
    throw std::invalid_argument("multiply: order mismatch (" + std::to_string(f.order()) +
                                " vs " + std::to_string(g.order()) + ")");
  const int n = f.order();
  TaylorSeries out = TaylorSeries::zero(n);
  for (int i = 0; i <= n; ++i) {
    const cplx fi = f.coeff(i);
    if (fi == cplx(0.0)) continue;
    for (int j = 0; i + j <= n; ++j) out.coeff(i + j) += fi * g.coeff(j);
  }
  return out;
}

TaylorSeries compose(const TaylorSeries& f, const TaylorSeries& g) {
  if (f.order() != g.order())
    throw std::invalid_argument("compose: order mismatch");
  if (std::abs(g.coeff(0)) > 1e-13)
    throw std::domain_error("compose: inner series must vanish at the origin");
  const int n = f.order();
  TaylorSeries acc = TaylorSeries::zero(n);
  for (int k = n; k >= 0; --k) {
    acc = multiply(acc, g);
    acc.coeff(0) += f.coeff(k);
  }
  return acc;
}

TaylorSeries log_ratio(const TaylorSeries& f) {
  if (!f.is_normalized())
    throw std::domain_error("log_ratio: series must be normalized (f(0)=0, f'(0)=1)");
  const int n = f.order();
  // g = f/z has g(0) = 1; solve g L' = g' for L = log g termwise.
  std::vector<cplx> g(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = f.coeff(k + 1);
  std::vector<cplx> log_coeffs(static_cast<std::size_t>(n), cplx(0.0));
  for (int m = 1; m < n; ++m) {
    cplx acc = static_cast<double>(m) * g[static_cast<std::size_t>(m)];
    for (int j = 1; j < m; ++j)
      acc -= g[static_cast<std::size_t>(j)] *
             (static_cast<double>(m - j) * log_coeffs[static_cast<std::size_t>(m - j)]);
    log_coeffs[static_cast<std::size_t>(m)] = acc / static_cast<double>(m);
  }
  return TaylorSeries(std::move(log_coeffs));
}

TaylorSeries invert_series(const TaylorSeries& f) {
  if (!f.is_normalized())
    throw std::domain_error("invert_series: series must be normalized");
  const int n = f.order();
  TaylorSeries inv = TaylorSeries::identity(n);
  for (int m = 2; m <= n; ++m) {
    // With A_m still zero, the w^m coefficient of f(F(w)) is the defect.
    const TaylorSeries comp = compose(f, inv);
    inv.coeff(m) = -comp.coeff(m);
  }
  return inv;
}

std::vector<cplx> log_coefficients(const TaylorSeries& f) {
  const TaylorSeries lr = log_ratio(f);
  std::vector<cplx> gammas;
  gammas.reserve(static_cast<std::size_t>(lr.order()));
  for (int m = 1; m <= lr.order(); ++m) gammas.push_back(0.5 * lr.coeff(m));
  return gammas;
}

std::vector<cplx> inverse_log_coefficients(const TaylorSeries& f) {
  if (f.order() < 4)
    throw std::invalid_argument(
        "inverse_log_coefficients: order must be at least 4 for Gamma_1..Gamma_3");
  return log_coefficients(invert_series(f));
}

double max_coeff_distance(const TaylorSeries& f, const TaylorSeries& g) {
  double worst = 0.0;
  const int n = std::max(f.order(), g.order());
  for (int k = 0; k <= n; ++k) worst = std::max(worst, std::abs(f.coeff(k) - g.coeff(k)));
  return worst;
}

}  // namespace hankelforge
