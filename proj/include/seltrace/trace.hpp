#pragma once

#include <cstdint>
#include <vector>

#include "seltrace/errors.hpp"
#include "seltrace/quadrature.hpp"
#include "seltrace/scattering.hpp"
#include "seltrace/surface.hpp"

namespace seltrace {

// Multiset of primitive-geodesic multipliers N(gamma) > 1.
class LengthSpectrum {
public:
    struct Entry {
        double norm;
        std::int64_t multiplicity;
    };

    LengthSpectrum() = default;
    explicit LengthSpectrum(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<Entry> entries_;
};

struct TraceBreakdown {
    cplx identity{0.0, 0.0};
    cplx hyperbolic{0.0, 0.0};
    cplx elliptic{0.0, 0.0};
    cplx parabolic{0.0, 0.0};
    cplx total{0.0, 0.0};
    double truncation_error = 0.0;
    bool partial = false;  // scattering-dependent pieces skipped
};

// E_0(s) = -(|X|/4pi) [psi(s+2n) + psi(s)].  Single-parameter convention:
// callers form E(s) - E(a) themselves.
cplx identity_term(const SurfaceSignature& sig, int n, cplx s);

// E_H(s) = (2s+2n-1)^{-1} sum_gamma sum_k mult log N / (N^{s+n+k} - 1),
// truncated at kmax with a geometric tail bound written to *tail_bound.
cplx hyperbolic_term(const LengthSpectrum& spec, int n, cplx s, int kmax,
                     double* tail_bound = nullptr);

// E_E(s): finite digamma double sum with coefficients
// (2 alpha_m(r -+ n) + 1 - m) / (2 m^2).
cplx elliptic_term(const SurfaceSignature& sig, int n, cplx s);

// Single elliptic angle theta = pi l / m, closed form via the digamma
// resummation of  sum_k e^{-i(2k+1)theta}/(s+k)  over residue classes.
cplx elliptic_angle_closed(int m, int l, int n, cplx s);

// Same quantity for the difference kernel by adaptive quadrature of
//   (-1)^n (pi/(m sin theta)) * int_0^inf Psi(u)
//       (sqrt(u+sin^2 th) - i cos th)^{-2n} du / sqrt(u+sin^2 th).
cplx elliptic_single_quadrature(int m, int l, int n, cplx s, cplx a,
                                const QuadOptions& opt = {1e-9, 1e-11, 6000});

struct ParabolicOptions {
    bool include_sigma = true;    // add Sigma(s)/2 (the Appendix-P form)
    bool skip_scattering = false; // drop model-dependent pieces, mark partial
};

// E_P(s) = A/(2s+2n-1)^2 + Sigma(s)/2
//          + q/(2(2s+2n-1)) [psi(s)+psi(s+2n)-2log2-2psi(s+n+1/2)-2psi(s+n)].
cplx parabolic_term(const SurfaceSignature& sig, int n, cplx s,
                    const ScatteringModel& model, const ParabolicOptions& opt = {});

// I_{P,1} closed form (single parameter):
//   1/(2(2s+2n-1)) {psi(s)+psi(s+2n)-4log2-2psi(s+n+1/2)-2psi(s+n)}
//   - gamma/(2s+2n-1) + 1/(2s+2n-1)^2.
cplx parabolic_ip1_closed(int n, cplx s);

// I_{P,1} for the difference kernel by log-weighted quadrature:
//   2(-1)^n int_0^inf Psi(u^2) [(u+i)^{-2n} + (u-i)^{-2n}] log u du.
cplx parabolic_ip1_quadrature(int n, cplx s, cplx a,
                              const QuadOptions& opt = {1e-9, 1e-11, 6000});

// Assembled geometric trace T_G(s) (theorem form: the Sigma(s)/2 piece
// belongs to the spectral side and is not included here).
TraceBreakdown geometric_trace(const SurfaceSignature& sig, int n, cplx s,
                               const LengthSpectrum& spec, const ScatteringModel& model,
                               int kmax = 64, bool skip_scattering = false);

}  // namespace seltrace
