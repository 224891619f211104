#include "seltrace/special.hpp"

#include <cmath>
#include <cstdlib>

namespace seltrace {

namespace {

// B_2, B_4, ..., B_22
constexpr double kBernoulli[] = {
    1.0 / 6.0,       -1.0 / 30.0,     1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,      -691.0 / 2730.0, 7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0, 854513.0 / 138.0,
};

constexpr double kLogTwoPi = 1.8378770664093454835606594728112353;

bool near_nonpositive_integer(cplx z) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= kPoleTolerance &&
           std::abs(z.imag()) <= kPoleTolerance;
}

// Stirling series, usable once Re z >= 12.
cplx log_gamma_asymptotic(cplx z) {
    cplx lz = std::log(z);
    cplx sum = (z - 0.5) * lz - z + 0.5 * kLogTwoPi;
    cplx zinv2 = 1.0 / (z * z);
    cplx zpow = 1.0 / z;
    for (int j = 1; j <= 10; ++j) {
        sum += kBernoulli[j - 1] / double((2 * j) * (2 * j - 1)) * zpow;
        zpow *= zinv2;
    }
    return sum;
}

cplx digamma_asymptotic(cplx z) {
    cplx sum = std::log(z) - 0.5 / z;
    cplx zinv2 = 1.0 / (z * z);
    cplx zpow = zinv2;
    for (int j = 1; j <= 10; ++j) {
        sum -= kBernoulli[j - 1] / double(2 * j) * zpow;
        zpow *= zinv2;
    }
    return sum;
}

// log G(w+1) for Re w >= 20 (Barnes asymptotic; the constant is zeta'(-1)).
cplx log_barnes_g_asymptotic(cplx w) {
    cplx lw = std::log(w);
    cplx sum = (0.5 * w * w - 1.0 / 12.0) * lw - 0.75 * w * w + 0.5 * w * kLogTwoPi +
               kZetaPrimeMinusOne;
    cplx winv2 = 1.0 / (w * w);
    cplx wpow = winv2;
    for (int k = 1; k <= 8; ++k) {
        // B_{2k+2} / (2k (2k+2) w^{2k}), from integrating z psi(z+1)
        sum += kBernoulli[k] / double(2 * k * (2 * k + 2)) * wpow;
        wpow *= winv2;
    }
    return sum;
}

}  // namespace

cplx log_gamma(cplx z) {
    if (near_nonpositive_integer(z))
        throw PoleError("log_gamma: pole at nonpositive integer");
    if (z.real() < -1e5)
        throw DomainError("log_gamma: argument too far left of the pole line");
    cplx shift = 0.0;
    while (z.real() < 12.0) {
        shift += std::log(z);
        z += 1.0;
    }
    cplx result = log_gamma_asymptotic(z) - shift;
    ensure_finite(result, "log_gamma");
    return result;
}

cplx digamma(cplx z) {
    if (near_nonpositive_integer(z))
        throw PoleError("digamma: pole at nonpositive integer");
    if (z.real() < -1e5)
        throw DomainError("digamma: argument too far left of the pole line");
    cplx shift = 0.0;
    while (z.real() < 12.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    cplx result = digamma_asymptotic(z) - shift;
    ensure_finite(result, "digamma");
    return result;
}

cplx log_gamma2(cplx z) {
    if (near_nonpositive_integer(z))
        throw PoleError("log_gamma2: pole at nonpositive integer");
    if (std::abs(z) > 1e100)
        throw DomainError("log_gamma2: |z| too large for the working precision");
    cplx acc = 0.0;
    while (z.real() < 21.0) {
        acc += log_gamma(z);  // Gamma_2(z) = Gamma_2(z+1) Gamma(z)
        z += 1.0;
    }
    cplx result = acc - log_barnes_g_asymptotic(z - 1.0);
    ensure_finite(result, "log_gamma2");
    return result;
}

cplx hyp2f1_series(cplx a, cplx b, cplx c, cplx z) {
    if (near_nonpositive_integer(c))
        throw PoleError("hyp2f1_series: lower parameter is a nonpositive integer");
    if (std::abs(z) >= 1.0)
        throw DomainError("hyp2f1_series: series requires |z| < 1");
    cplx sum = 1.0, term = 1.0;
    for (int k = 0; k < 4000; ++k) {
        double dk = double(k);
        term *= (a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum)) && k > 3) {
            ensure_finite(sum, "hyp2f1_series");
            return sum;
        }
    }
    throw ConvergenceError("hyp2f1_series: no convergence within 4000 terms");
}

cplx hyp2f1_log_case(cplx a, cplx b, cplx z) {
    return hyp2f1_log_case_w(a, b, 1.0 - z);
}

cplx hyp2f1_log_case_w(cplx a, cplx b, cplx w) {
    // Abramowitz-Stegun 15.3.10 specialized to c = a+b:
    //   2F1(a,b;a+b;z) = G * sum_k ((a)_k (b)_k / (k!)^2)
    //                      * [2 psi(k+1) - psi(a+k) - psi(b+k) - log(1-z)] (1-z)^k
    // with G = Gamma(a+b)/(Gamma(a) Gamma(b)) and w = 1-z.
    if (std::abs(w) >= 1.0 || w == cplx(0.0))
        throw DomainError("hyp2f1_log_case: requires 0 < |1-z| < 1");
    if (near_nonpositive_integer(a) || near_nonpositive_integer(b))
        throw PoleError("hyp2f1_log_case: psi pole in the expansion");
    cplx lw = std::log(w);
    cplx psi_a = digamma(a), psi_b = digamma(b);
    double psi_k1 = -kEulerGamma;  // psi(1)
    cplx coeff = 1.0;              // (a)_k (b)_k / (k!)^2 * w^k
    cplx sum = 0.0;
    for (int k = 0; k < 2000; ++k) {
        cplx term = coeff * (2.0 * psi_k1 - psi_a - psi_b - lw);
        sum += term;
        if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum)) && k > 3) break;
        double dk = double(k);
        coeff *= (a + dk) * (b + dk) / ((dk + 1.0) * (dk + 1.0)) * w;
        psi_k1 += 1.0 / (dk + 1.0);
        psi_a += 1.0 / (a + dk);
        psi_b += 1.0 / (b + dk);
        if (k == 1999)
            throw ConvergenceError("hyp2f1_log_case: no convergence within 2000 terms");
    }
    cplx prefactor = std::exp(log_gamma(a + b) - log_gamma(a) - log_gamma(b));
    cplx result = prefactor * sum;
    ensure_finite(result, "hyp2f1_log_case");
    return result;
}

cplx hyp2f1_resolvent(cplx s, int n, double z) {
    if (!(z > 0.0 && z < 1.0))
        throw DomainError("hyp2f1_resolvent: z must lie in (0,1)");
    cplx a = s, b = s + 2.0 * n, c = 2.0 * s + 2.0 * n;
    if (near_nonpositive_integer(c))
        throw PoleError("hyp2f1_resolvent: degenerate lower parameter");
    if (z <= 0.5) return hyp2f1_series(a, b, c, z);
    return hyp2f1_log_case(a, b, z);
}

cplx hyp_terminating_sum(const cplx* a, int na, const cplx* b, int nb, int nterms) {
    cplx sum = 1.0, term = 1.0;
    for (int m = 0; m < nterms; ++m) {
        double dm = double(m);
        cplx numer = 1.0;
        for (int i = 0; i < na; ++i) numer *= a[i] + dm;
        cplx denom = dm + 1.0;
        for (int j = 0; j < nb; ++j) {
            cplx f = b[j] + dm;
            if (std::abs(f) <= kPoleTolerance)
                throw PoleError("hyp_terminating_sum: denominator Pochhammer vanishes");
            denom *= f;
        }
        term *= numer / denom;
        sum += term;
    }
    ensure_finite(sum, "hyp_terminating_sum");
    return sum;
}

cplx hyp4f3_balanced(int n, cplx alpha, cplx s) {
    if (n < 0) throw DomainError("hyp4f3_balanced: n must be nonnegative");
    if (n == 0) return 1.0;
    const cplx a[4] = {cplx(-n), cplx(-n) + 0.5, -alpha, -alpha};
    const cplx b[3] = {0.5, s - alpha, 1.0 - s - 2.0 * n - alpha};
    return hyp_terminating_sum(a, 4, b, 3, n);
}

namespace {

// Euler-Maclaurin evaluation of zeta and its z-derivative.  N direct terms,
// ten Bernoulli corrections; N grows with |Im z| so the correction series
// stays asymptotic.
struct ZetaEval {
    cplx value;
    cplx derivative;
};

ZetaEval zeta_euler_maclaurin(cplx z) {
    if (std::abs(z - 1.0) <= kPoleTolerance) throw PoleError("riemann_zeta: pole at z=1");
    if (z.real() <= -2.0)
        throw DomainError("riemann_zeta: expansion valid for Re z > -2 only");
    int N = 50 + int(std::ceil(0.8 * std::abs(z.imag())));

    cplx sum = 0.0, dsum = 0.0;
    for (int k = 1; k < N; ++k) {
        double lk = std::log(double(k));
        cplx p = std::exp(-z * lk);
        sum += p;
        dsum += -lk * p;
    }
    double lN = std::log(double(N));
    cplx NmZ = std::exp(-z * lN);

    sum += 0.5 * NmZ;
    dsum += -0.5 * lN * NmZ;

    cplx tail = double(N) * NmZ / (z - 1.0);
    sum += tail;
    dsum += -lN * tail - double(N) * NmZ / ((z - 1.0) * (z - 1.0));

    // Correction terms  B_{2j}/(2j)! * (z)_{2j-1} * N^{-z-2j+1}
    cplx poch = 1.0, dpoch = 0.0;  // (z)_p and its z-derivative, built iteratively
    double fact = 1.0;
    int p = 0;
    for (int j = 1; j <= 10; ++j) {
        while (p < 2 * j - 1) {
            cplx f = z + double(p);
            dpoch = dpoch * f + poch;
            poch *= f;
            fact *= double(p + 1);
            ++p;
        }
        fact *= double(p + 1);  // (2j)! from (2j-1)!
        cplx Npow = NmZ * std::exp(double(1 - 2 * j) * lN);
        cplx c = kBernoulli[j - 1] / fact;
        sum += c * poch * Npow;
        dsum += c * (dpoch - lN * poch) * Npow;
        fact /= double(p + 1);
    }
    ensure_finite(sum, "riemann_zeta");
    ensure_finite(dsum, "zeta_derivative");
    return {sum, dsum};
}

}  // namespace

cplx riemann_zeta(cplx z) { return zeta_euler_maclaurin(z).value; }

cplx zeta_derivative(cplx z) { return zeta_euler_maclaurin(z).derivative; }

cplx zeta_log_deriv(cplx z) {
    ZetaEval e = zeta_euler_maclaurin(z);
    if (std::abs(e.value) == 0.0) throw PoleError("zeta_log_deriv: zeta(z) = 0");
    return e.derivative / e.value;
}

}  // namespace seltrace
