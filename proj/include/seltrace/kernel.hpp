#pragma once

#include <functional>

#include "seltrace/errors.hpp"
#include "seltrace/quadrature.hpp"

namespace seltrace {

// Parameters for the resolvent point-pair kernel: weight n, spectral
// parameter s and regularizing parameter a.  Every integral below converges
// for Re s > 0, Re a > 0; the difference kernel needs a != s.
struct KernelParams {
    int n = 0;
    cplx s{1.0, 0.0};
    cplx a{4.0, 0.0};
};

void validate(const KernelParams& p);

// Psi_{n,s}(u) = (u+1)^{-s}/(4pi) Gamma(s)Gamma(s+2n)/Gamma(2s+2n)
//                * 2F1(s, s+2n; 2s+2n; 1/(u+1)).
// Singular like log(1/u)/(4pi) as u -> 0; callers that need a bounded kernel
// use psi_pair below.
cplx psi_ns(int n, cplx s, double u);
cplx psi_ns(const KernelParams& p, double u);

// Psi_{n,s}(u) - Psi_{n,a}(u); the log singularities at u=0 cancel.
cplx psi_pair(const KernelParams& p, double u);

// Leading small-u law  (1/4pi){ log(1/u) + 2 psi(1) - psi(s+2n) - psi(s) }.
cplx psi_small_u_expansion(const KernelParams& p, double u);

// Q(v) for the power kernel Psi(x) = (x+1)^{-alpha}:
//   2 sqrt(pi) (v+1)^{-(alpha+n-1/2)} G(a+n)G(a+n-1/2) / (G(a)G(a+2n)),
// and its v-derivative.
cplx q_power_closed(cplx alpha, int n, double v);
cplx q_power_deriv(cplx alpha, int n, double v);

// Q(v) for the resolvent difference kernel, via g(t) with sinh^2(t/2) = v:
//   Q(v) = w^{2s+2n-1}/(2s+2n-1) - w^{2a+2n-1}/(2a+2n-1),  w = sqrt(v+1)-sqrt(v),
// and its analytic v-derivative (used by the inversion integral).
cplx q_resolvent_closed(const KernelParams& p, double v);
cplx q_resolvent_deriv(const KernelParams& p, double v);

// Q(v) = 2 (-1)^n integral over the real line of Psi(x^2+v) (x - i sqrt(v+1))^{-2n}
// by adaptive quadrature; psi must decay at least like x^{-1-eps}.
QuadResult q_quadrature(const Integrand& psi, int n, double v, const QuadOptions& opt = {});

// Fourier pair of Appendix-type inversion:
//   g(t) = e^{-t(s+n-1/2)}/(2s+2n-1) - e^{-t(a+n-1/2)}/(2a+2n-1)      (t >= 0)
//   h(r) = 1/(r^2+(s+n-1/2)^2)      - 1/(r^2+(a+n-1/2)^2)
cplx g_of_t(const KernelParams& p, double t);
cplx h_of_r(const KernelParams& p, double r);

// Quadrature of g(|t|) against e^{irt}; equals h(r).
cplx fourier_of_g(const KernelParams& p, double r, const QuadOptions& opt = {});

// -(1/2pi) * integral over t of Q'(x+t^2) (sqrt(x+1+t^2) - t)^{2n} dt.
cplx inversion_integral(const std::function<cplx(double)>& qprime, int n, double x,
                        const QuadOptions& opt = {});

// |inversion integral - Psi(x)| for the resolvent pair and the power kernel.
double inversion_check(const KernelParams& p, double x);
double inversion_check_power(double alpha, int n, double x);

// Integer power of a complex number.
cplx ipow(cplx z, int k);

}  // namespace seltrace
