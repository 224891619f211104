#include "seltrace/kernel.hpp"

#include <cmath>

#include "seltrace/special.hpp"

namespace seltrace {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kFourPi = 4.0 * kPi;
}  // namespace

void validate(const KernelParams& p) {
    if (p.n < 0) throw DomainError("KernelParams: n must be nonnegative");
    if (!(p.s.real() > 0.0) || !(p.a.real() > 0.0))
        throw DomainError("KernelParams: Re s and Re a must be positive");
    if (std::abs(p.s - p.a) <= kPoleTolerance)
        throw DomainError("KernelParams: a must differ from s");
}

cplx ipow(cplx z, int k) {
    if (k < 0) return 1.0 / ipow(z, -k);
    cplx r = 1.0;
    while (k > 0) {
        if (k & 1) r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

cplx psi_ns(int n, cplx s, double u) {
    if (!(u > 0.0)) throw DomainError("psi_ns: u must be positive");
    // (u+1)^{-s} has underflowed for any convergent Re s out here.
    if (u >= 1e290) return 0.0;
    cplx lg = log_gamma(s) + log_gamma(s + 2.0 * n) - log_gamma(2.0 * s + 2.0 * n);
    cplx a = s, b = s + 2.0 * n;
    // z = 1/(u+1): plain series above u = 1, connection formula below, fed
    // with w = 1-z = u/(u+1) so tiny u keeps full precision.
    cplx f = (u >= 1.0) ? hyp2f1_series(a, b, a + b, 1.0 / (u + 1.0))
                        : hyp2f1_log_case_w(a, b, u / (u + 1.0));
    cplx result = std::exp(lg - s * std::log1p(u)) / kFourPi * f;
    ensure_finite(result, "psi_ns");
    return result;
}

cplx psi_ns(const KernelParams& p, double u) { return psi_ns(p.n, p.s, u); }

cplx psi_pair(const KernelParams& p, double u) {
    validate(p);
    if (u < 0.0) throw DomainError("psi_pair: u must be nonnegative");
    if (u < 1e-12) {
        // The log(1/u) parts cancel; the O(u) remainder is below working
        // precision, leaving the digamma difference of the expansions.
        return (digamma(p.a + 2.0 * p.n) + digamma(p.a) - digamma(p.s + 2.0 * p.n) -
                digamma(p.s)) /
               kFourPi;
    }
    return psi_ns(p.n, p.s, u) - psi_ns(p.n, p.a, u);
}

cplx psi_small_u_expansion(const KernelParams& p, double u) {
    if (!(u > 0.0)) throw DomainError("psi_small_u_expansion: u must be positive");
    return (std::log(1.0 / u) - 2.0 * kEulerGamma - digamma(p.s + 2.0 * p.n) -
            digamma(p.s)) /
           kFourPi;
}

cplx q_power_closed(cplx alpha, int n, double v) {
    if (!(alpha.real() > 0.5))
        throw DomainError("q_power_closed: requires Re alpha > 1/2");
    cplx lg = log_gamma(alpha + double(n)) + log_gamma(alpha + double(n) - 0.5) -
              log_gamma(alpha) - log_gamma(alpha + 2.0 * n);
    return 2.0 * std::sqrt(kPi) *
           std::exp(lg - (alpha + double(n) - 0.5) * std::log1p(v));
}

cplx q_power_deriv(cplx alpha, int n, double v) {
    if (!(alpha.real() > 0.5))
        throw DomainError("q_power_deriv: requires Re alpha > 1/2");
    cplx lg = log_gamma(alpha + double(n)) + log_gamma(alpha + double(n) + 0.5) -
              log_gamma(alpha) - log_gamma(alpha + 2.0 * n);
    return -2.0 * std::sqrt(kPi) *
           std::exp(lg - (alpha + double(n) + 0.5) * std::log1p(v));
}

cplx q_resolvent_closed(const KernelParams& p, double v) {
    validate(p);
    if (v < 0.0) throw DomainError("q_resolvent_closed: v must be nonnegative");
    double w = std::sqrt(v + 1.0) - std::sqrt(v);
    double lw = std::log(w);
    cplx bs = 2.0 * p.s + 2.0 * p.n - 1.0;
    cplx ba = 2.0 * p.a + 2.0 * p.n - 1.0;
    if (std::abs(bs) <= kPoleTolerance || std::abs(ba) <= kPoleTolerance)
        throw PoleError("q_resolvent_closed: 2s+2n-1 vanishes");
    return std::exp(bs * lw) / bs - std::exp(ba * lw) / ba;
}

cplx q_resolvent_deriv(const KernelParams& p, double v) {
    validate(p);
    if (!(v > 0.0)) throw DomainError("q_resolvent_deriv: v must be positive");
    double sv = std::sqrt(v), sv1 = std::sqrt(v + 1.0);
    double lw = std::log(sv1 - sv);
    cplx bs = 2.0 * p.s + 2.0 * p.n - 1.0;
    cplx ba = 2.0 * p.a + 2.0 * p.n - 1.0;
    return -(std::exp(bs * lw) - std::exp(ba * lw)) / (2.0 * sv * sv1);
}

QuadResult q_quadrature(const Integrand& psi, int n, double v, const QuadOptions& opt) {
    if (v < 0.0) throw DomainError("q_quadrature: v must be nonnegative");
    double c = std::sqrt(v + 1.0);
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    Integrand f = [&psi, n, c, v](double x) -> cplx {
        if (x > 1e130) return 0.0;  // below underflow for any admissible psi
        cplx weight = (n == 0) ? cplx(2.0)
                               : ipow(cplx(x, -c), -2 * n) + ipow(cplx(x, c), -2 * n);
        return psi(x * x + v) * weight;
    };
    QuadResult r = integrate_half_line(f, opt, std::max(1.0, c));
    r.value *= 2.0 * sign;
    r.error *= 2.0;
    return r;
}

cplx g_of_t(const KernelParams& p, double t) {
    validate(p);
    cplx bs = 2.0 * p.s + 2.0 * p.n - 1.0;
    cplx ba = 2.0 * p.a + 2.0 * p.n - 1.0;
    if (std::abs(bs) <= kPoleTolerance || std::abs(ba) <= kPoleTolerance)
        throw PoleError("g_of_t: 2s+2n-1 vanishes");
    return std::exp(-t * 0.5 * bs) / bs - std::exp(-t * 0.5 * ba) / ba;
}

cplx h_of_r(const KernelParams& p, double r) {
    validate(p);
    cplx us = p.s + double(p.n) - 0.5;
    cplx ua = p.a + double(p.n) - 0.5;
    return 1.0 / (r * r + us * us) - 1.0 / (r * r + ua * ua);
}

cplx fourier_of_g(const KernelParams& p, double r, const QuadOptions& opt) {
    // g(|t|) is even, so the transform reduces to a cosine integral.
    Integrand f = [&p, r](double t) { return g_of_t(p, t) * std::cos(r * t); };
    QuadResult q = integrate_half_line(f, opt);
    return 2.0 * q.value;
}

cplx inversion_integral(const std::function<cplx(double)>& qprime, int n, double x,
                        const QuadOptions& opt) {
    if (!(x > 0.0)) throw DomainError("inversion_integral: x must be positive");
    Integrand f = [&qprime, n, x](double t) -> cplx {
        if (t > 1e100) return 0.0;  // Q' decay has long since underflowed
        double root = std::sqrt(x + 1.0 + t * t);
        cplx weight = (n == 0)
                          ? cplx(2.0)
                          : cplx(std::pow(root - t, 2 * n) + std::pow(root + t, 2 * n));
        return qprime(x + t * t) * weight;
    };
    QuadResult q = integrate_half_line(f, opt);
    return -q.value / (2.0 * kPi);
}

double inversion_check(const KernelParams& p, double x) {
    validate(p);
    auto qprime = [&p](double v) { return q_resolvent_deriv(p, v); };
    cplx lhs = inversion_integral(qprime, p.n, x);
    return std::abs(lhs - psi_pair(p, x));
}

double inversion_check_power(double alpha, int n, double x) {
    auto qprime = [alpha, n](double v) { return q_power_deriv(cplx(alpha), n, v); };
    cplx lhs = inversion_integral(qprime, n, x, {1e-11, 1e-13, 8000});
    double rhs = std::pow(x + 1.0, -alpha);
    return std::abs(lhs - rhs);
}

}  // namespace seltrace
