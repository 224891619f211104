#pragma once

#include <optional>

#include "seltrace/rational.hpp"
#include "seltrace/scattering.hpp"
#include "seltrace/surface.hpp"
#include "seltrace/trace.hpp"

namespace seltrace {

struct ZetaTrunc {
    cplx log_value{0.0, 0.0};
    double tail_bound = 0.0;
};

// log Z(s) for the truncated Euler product  prod_gamma prod_k (1 - N^{-s-k});
// k runs until N^{-(Re s + k)} < 1e-18 or kmax, whichever first.
ZetaTrunc selberg_zeta_log_trunc(const LengthSpectrum& spec, cplx s, int kmax);
cplx selberg_zeta_trunc(const LengthSpectrum& spec, cplx s, int kmax);

// d/ds log Z(s) = sum mult log N / (N^{s+k} - 1), analytically.
cplx selberg_zeta_log_deriv(const LengthSpectrum& spec, cplx s, int kmax);

// The three local factors of the resolvent determinant, in log space:
//   Z_inf(s) = [(2pi)^{2s+2n-1} G2(s+2n)^2 G2(s)^2 G(s+2n)^{2n-1} / G(s)^{2n+1}]^{|X|/4pi}
//   Z_ell(s) = prod_j prod_r G((s+r)/m)^{(2a(r-n)+1-m)/2m} G((s+2n+r)/m)^{(2a(r+n)+1-m)/2m}
//   Z_par(s) = [G(s)G(s+2n) / (2^{2s+2n-1} G(s+n)^2 G(s+n+1/2)^2)]^{q/2} (s+n-1/2)^{A/2}
cplx z_infinity_log(const SurfaceSignature& sig, int n, cplx s);
cplx z_ell_log(const SurfaceSignature& sig, int n, cplx s);
cplx z_par_log(const SurfaceSignature& sig, int n, cplx s, double A);
cplx z_infinity(const SurfaceSignature& sig, int n, cplx s);
cplx z_ell(const SurfaceSignature& sig, int n, cplx s);
cplx z_par(const SurfaceSignature& sig, int n, cplx s, double A);

struct DetConstants {
    double B = 0.0;
    double D = 0.0;
    double A = 0.0;
    double C_n = 0.0;
    int n0 = 0;  // order of the zero of phi at s=0; n=0 determinant only
};

// B = -|X|/(2pi);
// D = (|X|/pi) zeta'(-1) + (q/2) log 2pi
//     + sum_j [ (m^2-1)/(6m) - alpha_m(n)(m-alpha_m(n))/m ] log m.
DetConstants b_d_constants(const SurfaceSignature& sig, int n);

struct EllAsymptotics {
    Rational B_coeff;  // exact sum of beta_j
    double D_coeff;    // -sum beta_j log m_j
};

// Large-u coefficients of log Z_ell = B log u + D + o(1).  The u log u and
// u coefficients vanish identically; asserted via the zero-sum identity.
EllAsymptotics asymptotic_coeffs_ell(const SurfaceSignature& sig, int n);

// log det(Delta_n + s(s+2n-1))
//   = log Z_inf + log Z(s+n) + log Z_ell + log Z_par + B(s+n-1/2)^2 + D.
// Real axis only (s > 0, and s+n > 1/2 so the A-power has a real branch).
double log_det_resolvent(const SurfaceSignature& sig, int n, double s,
                         const LengthSpectrum& spec, const ScatteringModel& model,
                         int kmax);

// The constant C_n of the regularized determinant.  n = 0 uses n0 and may be
// negative; n >= 1 is positive and n0 is ignored.
double c_constant(const SurfaceSignature& sig, int n, double A, int n0 = 0);
double c_constant_log(const SurfaceSignature& sig, int n, double A);  // n >= 1

struct DetPrime {
    double value = 0.0;
    std::optional<double> limit_diagnostic;  // n >= 2: must equal 1 within 1e-3
    bool partial = false;                    // n = 0 assembly-only path
};

// det' Delta_n = C_0 Z_0 (n=0), C_1 Z'(1) (n=1), C_n Z(n) (n>=2), with Z the
// truncated product.  For n >= 2 also evaluates the s->0 limit diagnostic
//   det(Delta_n + s(s+2n-1)) / ([s(s+2n-1)]^{d_n} C_n Z(n))  at s = 1e-4,
// raising DiagnosticError if it strays beyond 1e-2 from 1.
DetPrime det_prime(const SurfaceSignature& sig, int n, const LengthSpectrum& spec,
                   const ScatteringModel& model, int n0 = 0, int kmax = 64,
                   std::optional<double> z0 = std::nullopt);

}  // namespace seltrace
