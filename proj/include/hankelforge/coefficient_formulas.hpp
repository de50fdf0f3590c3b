#pragma once

#include "hankelforge/taylor_series.hpp"

namespace hankelforge {

/// First four coefficients of the compositional inverse, in closed form.
struct InverseCoefficients {
  cplx A2, A3, A4, A5;
};

/// A2 = -a2, A3 = -a3 + 2 a2^2, A4 = -a4 + 5 a2 a3 - 5 a2^3,
/// A5 = -a5 + 6 a4 a2 - 21 a3 a2^2 + 3 a3^2 + 14 a2^4.
InverseCoefficients inverse_closed_form(cplx a2, cplx a3, cplx a4, cplx a5);

/// First four logarithmic coefficients of the inverse, in closed form.
struct InverseLogCoefficients {
  cplx Gamma1, Gamma2, Gamma3, Gamma4;
};

/// Gamma1 = -a2/2, Gamma2 = -(a3 - (3/2) a2^2)/2,
/// Gamma3 = -(a4 - 4 a2 a3 + (10/3) a2^3)/2,
/// Gamma4 = -(a5 - 5 a4 a2 + 15 a3 a2^2 - (5/2) a3^2 - (35/4) a2^4)/2.
InverseLogCoefficients gamma_closed_form(cplx a2, cplx a3, cplx a4, cplx a5);

/// K_n = (2n)!/(n!(n+1)!), the sharp bound on |A_n| attained by the
/// inverse of the Koebe function.
double koebe_inverse_bound(int n);

/// binom(2n,n)/(2n), the sharp bound on |Gamma_n|, again attained on the
/// Koebe function.
double koebe_inverse_log_bound(int n);

}  // namespace hankelforge
