#include "seltrace/trace.hpp"

#include <algorithm>
#include <cmath>

#include "seltrace/kernel.hpp"
#include "seltrace/residues.hpp"
#include "seltrace/special.hpp"

namespace seltrace {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

LengthSpectrum::LengthSpectrum(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.norm < b.norm; });
    for (const Entry& e : entries_) {
        if (!(e.norm > 1.0 + 1e-12))
            throw ConvergenceError("LengthSpectrum: norms must exceed 1");
        if (e.multiplicity < 1)
            throw DomainError("LengthSpectrum: multiplicities must be positive");
    }
}

cplx identity_term(const SurfaceSignature& sig, int n, cplx s) {
    double coeff = area_rational(sig).to_double() / 2.0;  // |X|/(4 pi)
    return -coeff * (digamma(s + 2.0 * n) + digamma(s));
}

cplx hyperbolic_term(const LengthSpectrum& spec, int n, cplx s, int kmax,
                     double* tail_bound) {
    if (kmax < 1) throw DomainError("hyperbolic_term: kmax must be >= 1");
    double sigma = s.real() + n;
    if (!(sigma > 0.0))
        throw ConvergenceError("hyperbolic_term: requires Re(s+n) > 0");
    cplx denom = 2.0 * s + 2.0 * n - 1.0;
    if (std::abs(denom) <= kPoleTolerance)
        throw PoleError("hyperbolic_term: 2s+2n-1 vanishes");

    cplx sum = 0.0;
    double tail = 0.0;
    for (const auto& e : spec.entries()) {
        double logN = std::log(e.norm);
        cplx sn = s + double(n);
        int kstop = kmax;
        for (int k = 0; k < kmax; ++k) {
            // log N / (N^{s+n+k} - 1)
            cplx p = std::exp((sn + double(k)) * logN);
            cplx term = logN / (p - 1.0);
            sum += double(e.multiplicity) * term;
            if (std::abs(term) < 1e-18) {
                kstop = k + 1;
                break;
            }
        }
        // Geometric bound on the dropped k >= kstop terms.
        double Nk = std::pow(e.norm, -(sigma + double(kstop)));
        if (Nk > 0.999)
            throw ConvergenceError("hyperbolic_term: tail bound exceeds tolerance");
        tail += double(e.multiplicity) * logN * Nk / ((1.0 - 1.0 / e.norm) * (1.0 - Nk));
    }
    if (tail_bound) *tail_bound = tail / std::abs(denom);
    return sum / denom;
}

cplx elliptic_term(const SurfaceSignature& sig, int n, cplx s) {
    cplx denom = 2.0 * s + 2.0 * n - 1.0;
    if (std::abs(denom) <= kPoleTolerance)
        throw PoleError("elliptic_term: 2s+2n-1 vanishes");
    cplx sum = 0.0;
    for (int m : sig.elliptic_orders()) {
        double m2 = 2.0 * double(m) * double(m);
        for (int r = 0; r < m; ++r) {
            double cm = double(2 * alpha_residue(m, r - n) + 1 - m) / m2;
            double cp = double(2 * alpha_residue(m, r + n) + 1 - m) / m2;
            sum += cm * digamma((s + double(r)) / double(m));
            sum += cp * digamma((s + 2.0 * n + double(r)) / double(m));
        }
    }
    return sum / denom;
}

cplx elliptic_angle_closed(int m, int l, int n, cplx s) {
    if (m < 2 || l < 1 || l >= m)
        throw DomainError("elliptic_angle_closed: need m >= 2 and 1 <= l < m");
    double theta = kPi * double(l) / double(m);
    // Single-angle value consistent with the defining orbital integral:
    //   -i e^{-2in th}/(2m sin th) [ sum_k e^{ i(2k+1)th}/(s+k)
    //                               - sum_k e^{-i(2k+1)th}/(s+2n+k) ] / (2s+2n-1),
    // each k-sum collapsed over residue classes mod m,
    //   sum_{k>=0} z^k/(s+k) = -(1/m) sum_r z^r psi((s+r)/m)  for z^m = 1, z != 1.
    // The theta <-> pi-theta pairing makes the over-angles sum real either way;
    // the orientation here is fixed by the raw kernel integral.
    cplx s_plusphase = 0.0, s_minusphase = 0.0;
    for (int r = 0; r < m; ++r) {
        double ph = theta * double(2 * r + 1);
        s_plusphase += std::polar(1.0, ph) * digamma((s + double(r)) / double(m));
        s_minusphase +=
            std::polar(1.0, -ph) * digamma((s + 2.0 * n + double(r)) / double(m));
    }
    s_plusphase /= -double(m);
    s_minusphase /= -double(m);
    cplx denom = 2.0 * s + 2.0 * n - 1.0;
    cplx pref = cplx(0.0, -1.0) * std::polar(1.0, -2.0 * n * theta) /
                (2.0 * double(m) * std::sin(theta));
    return pref * (s_plusphase - s_minusphase) / denom;
}

cplx elliptic_single_quadrature(int m, int l, int n, cplx s, cplx a,
                                const QuadOptions& opt) {
    if (m < 2 || l < 1 || l >= m)
        throw DomainError("elliptic_single_quadrature: need m >= 2 and 1 <= l < m");
    KernelParams p{n, s, a};
    validate(p);
    double theta = kPi * double(l) / double(m);
    double st = std::sin(theta), ct = std::cos(theta);
    double s2 = st * st;
    Integrand f = [&p, n, s2, ct](double u) -> cplx {
        if (u > 1e100) return 0.0;
        double root = std::sqrt(u + s2);
        cplx weight = (n == 0) ? cplx(1.0) : ipow(cplx(root, -ct), -2 * n);
        return psi_pair(p, u) * weight / root;
    };
    QuadResult q = integrate_half_line(f, opt);
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * kPi / (double(m) * st) * q.value;
}

cplx parabolic_ip1_closed(int n, cplx s) {
    cplx b = 2.0 * s + 2.0 * n - 1.0;
    if (std::abs(b) <= kPoleTolerance) throw PoleError("parabolic_ip1_closed: pole");
    cplx bracket = digamma(s) + digamma(s + 2.0 * n) - 4.0 * std::log(2.0) -
                   2.0 * digamma(s + double(n) + 0.5) - 2.0 * digamma(s + double(n));
    return bracket / (2.0 * b) - kEulerGamma / b + 1.0 / (b * b);
}

cplx parabolic_ip1_quadrature(int n, cplx s, cplx a, const QuadOptions& opt) {
    KernelParams p{n, s, a};
    validate(p);
    Integrand f = [&p, n](double u) -> cplx {
        if (u > 1e130) return 0.0;
        cplx weight = (n == 0) ? cplx(2.0)
                               : ipow(cplx(u, 1.0), -2 * n) + ipow(cplx(u, -1.0), -2 * n);
        return psi_pair(p, u * u) * weight * std::log(u);
    };
    QuadResult q = integrate_half_line(f, opt);
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return 2.0 * sign * q.value;
}

namespace {

cplx parabolic_bracket(const SurfaceSignature& sig, int n, cplx s) {
    double q = sig.cusps();
    cplx b = 2.0 * s + 2.0 * n - 1.0;
    cplx bracket = digamma(s) + digamma(s + 2.0 * n) - 2.0 * std::log(2.0) -
                   2.0 * digamma(s + double(n) + 0.5) - 2.0 * digamma(s + double(n));
    return q / (2.0 * b) * bracket;
}

}  // namespace

cplx parabolic_term(const SurfaceSignature& sig, int n, cplx s,
                    const ScatteringModel& model, const ParabolicOptions& opt) {
    int q = sig.cusps();
    if (q == 0) return 0.0;
    cplx b = 2.0 * s + 2.0 * n - 1.0;
    if (std::abs(b) <= kPoleTolerance) throw PoleError("parabolic_term: 2s+2n-1 vanishes");
    cplx value = parabolic_bracket(sig, n, s);
    if (opt.skip_scattering) return value;  // caller marks the run partial
    if (model.kind() == ScatteringModel::Kind::None)
        throw ModelError("parabolic_term: q > 0 requires a scattering model");
    if (model.cusps() != q)
        throw ModelError("parabolic_term: model cusp count does not match signature");
    value += a_constant(model) / (b * b);
    if (opt.include_sigma) value += 0.5 * sigma_integral(n, s, model).value;
    return value;
}

TraceBreakdown geometric_trace(const SurfaceSignature& sig, int n, cplx s,
                               const LengthSpectrum& spec, const ScatteringModel& model,
                               int kmax, bool skip_scattering) {
    TraceBreakdown out;
    out.identity = identity_term(sig, n, s);
    double tail = 0.0;
    out.hyperbolic = spec.empty() ? cplx(0.0) : hyperbolic_term(spec, n, s, kmax, &tail);
    out.truncation_error = tail;
    out.elliptic = sig.elliptic_orders().empty() ? cplx(0.0) : elliptic_term(sig, n, s);
    ParabolicOptions popt;
    popt.include_sigma = false;  // theorem form: Sigma sits on the spectral side
    popt.skip_scattering = skip_scattering;
    out.parabolic = parabolic_term(sig, n, s, model, popt);
    out.partial = skip_scattering && sig.cusps() > 0;
    out.total = out.identity + out.hyperbolic + out.elliptic + out.parabolic;
    return out;
}

}  // namespace seltrace
