#pragma once

#include <complex>

#include "seltrace/errors.hpp"

namespace seltrace {

// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// zeta'(-1) = 1/12 - log A (A the Glaisher-Kinkelin constant).  Revalidated
// at test time against direct Euler-Maclaurin differentiation.
inline constexpr double kZetaPrimeMinusOne = -0.16542114370045092921391966024278065;

// Principal-branch log Gamma.  Recurrence shift to Re z >= 12, then the
// Stirling series with Bernoulli corrections.  Relative error of exp(result)
// below 1e-13 on the tested domain (|z| <= 100 on the real axis,
// Re z in (0.5, 20) with |Im z| <= 10).
cplx log_gamma(cplx z);

// psi(z) = Gamma'(z)/Gamma(z), same shift-plus-asymptotic scheme.
cplx digamma(cplx z);

// log of the Alekseevskii-Barnes double gamma, Gamma_2(z) = 1/G(z) with G the
// Barnes G-function.  Satisfies Gamma_2(z+1) = Gamma_2(z)/Gamma(z).
cplx log_gamma2(cplx z);

// Gauss 2F1 by direct series; requires |z| < 1 and enough decay to converge
// at the working precision.
cplx hyp2f1_series(cplx a, cplx b, cplx c, cplx z);

// 2F1(a, b; a+b; z) through the z -> 1 logarithmic connection formula;
// valid for |1-z| < 1.  The _w form takes w = 1-z directly, which stays
// accurate when z is within rounding distance of 1.
cplx hyp2f1_log_case(cplx a, cplx b, cplx z);
cplx hyp2f1_log_case_w(cplx a, cplx b, cplx w);

// 2F1(s, s+2n; 2s+2n; z) for z in (0,1): direct series for z <= 1/2, the
// c = a+b connection formula above 1/2.
cplx hyp2f1_resolvent(cplx s, int n, double z);

// Terminating balanced 4F3 at unit argument,
//   4F3(-n, -n+1/2, -alpha, -alpha; 1/2, s-alpha, 1-s-2n-alpha; 1),
// summed exactly over its n+1 terms.  Equals 1 + O(alpha^2) at alpha -> 0.
cplx hyp4f3_balanced(int n, cplx alpha, cplx s);

// Generic terminating hypergeometric sum over m = 0..nterms of
//   prod (a_i)_m / (prod (b_j)_m * m!).
// Throws PoleError if a denominator Pochhammer factor vanishes before the
// series terminates.
cplx hyp_terminating_sum(const cplx* a, int na, const cplx* b, int nb, int nterms);

// Riemann zeta by Euler-Maclaurin, valid for Re z > -2.  The number of
// direct terms scales with |Im z| (minimum 50, ten Bernoulli corrections).
cplx riemann_zeta(cplx z);

// zeta'(z), by analytic differentiation of the same expansion.
cplx zeta_derivative(cplx z);

// zeta'(z)/zeta(z).
cplx zeta_log_deriv(cplx z);

}  // namespace seltrace
