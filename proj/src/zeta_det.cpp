#include "seltrace/zeta_det.hpp"

#include <cmath>

#include "seltrace/residues.hpp"
#include "seltrace/special.hpp"

namespace seltrace {

namespace {
constexpr double kLog2 = 0.69314718055994530942;
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kLogTwoPi = 1.8378770664093454836;

int k_stop(double norm, double re_s, int kmax) {
    // smallest k with N^{-(Re s + k)} < 1e-18, capped by kmax
    double need = 18.0 * 2.302585092994046 / std::log(norm) - re_s;
    int k = need <= 0.0 ? 1 : int(std::ceil(need)) + 1;
    return std::min(std::max(k, 1), kmax);
}

cplx log1m(cplx x) {
    if (std::abs(x) < 1e-4) {
        cplx x2 = x * x;
        return -x - 0.5 * x2 - x2 * x / 3.0 - x2 * x2 * 0.25;
    }
    return std::log(1.0 - x);
}

}  // namespace

ZetaTrunc selberg_zeta_log_trunc(const LengthSpectrum& spec, cplx s, int kmax) {
    if (kmax < 1) throw DomainError("selberg_zeta_log_trunc: kmax must be >= 1");
    if (!(s.real() > 0.0))
        throw DomainError("selberg_zeta_log_trunc: requires Re s > 0");
    ZetaTrunc out;
    for (const auto& e : spec.entries()) {
        double logN = std::log(e.norm);
        int ks = k_stop(e.norm, s.real(), kmax);
        for (int k = 0; k < ks; ++k)
            out.log_value +=
                double(e.multiplicity) * log1m(std::exp(-(s + double(k)) * logN));
        double Nk = std::pow(e.norm, -(s.real() + double(ks)));
        out.tail_bound += double(e.multiplicity) * 2.0 * Nk / (1.0 - 1.0 / e.norm);
    }
    ensure_finite(out.log_value, "selberg_zeta_log_trunc");
    return out;
}

cplx selberg_zeta_trunc(const LengthSpectrum& spec, cplx s, int kmax) {
    return std::exp(selberg_zeta_log_trunc(spec, s, kmax).log_value);
}

cplx selberg_zeta_log_deriv(const LengthSpectrum& spec, cplx s, int kmax) {
    if (!(s.real() > 0.0))
        throw DomainError("selberg_zeta_log_deriv: requires Re s > 0");
    cplx sum = 0.0;
    for (const auto& e : spec.entries()) {
        double logN = std::log(e.norm);
        int ks = k_stop(e.norm, s.real(), kmax);
        for (int k = 0; k < ks; ++k)
            sum += double(e.multiplicity) * logN /
                   (std::exp((s + double(k)) * logN) - 1.0);
    }
    return sum;
}

cplx z_infinity_log(const SurfaceSignature& sig, int n, cplx s) {
    double ex = area_rational(sig).to_double() / 2.0;  // |X|/(4 pi)
    cplx base = (2.0 * s + 2.0 * n - 1.0) * kLogTwoPi +
                2.0 * log_gamma2(s + 2.0 * n) + 2.0 * log_gamma2(s) +
                double(2 * n - 1) * log_gamma(s + 2.0 * n) -
                double(2 * n + 1) * log_gamma(s);
    return ex * base;
}

cplx z_ell_log(const SurfaceSignature& sig, int n, cplx s) {
    cplx sum = 0.0;
    for (int m : sig.elliptic_orders()) {
        double tm = 2.0 * m;
        for (int r = 0; r < m; ++r) {
            double cm = double(2 * alpha_residue(m, r - n) + 1 - m) / tm;
            double cp = double(2 * alpha_residue(m, r + n) + 1 - m) / tm;
            sum += cm * log_gamma((s + double(r)) / double(m));
            sum += cp * log_gamma((s + 2.0 * n + double(r)) / double(m));
        }
    }
    return sum;
}

cplx z_par_log(const SurfaceSignature& sig, int n, cplx s, double A) {
    if (sig.cusps() == 0 && A == 0.0) return 0.0;
    cplx u = s + double(n) - 0.5;
    if (!(u.real() > 0.0) && A != 0.0)
        throw DomainError("z_par_log: (s+n-1/2)^{A/2} evaluated on s+n > 1/2 only");
    double q = sig.cusps();
    cplx body = log_gamma(s) + log_gamma(s + 2.0 * n) -
                (2.0 * s + 2.0 * n - 1.0) * kLog2 - 2.0 * log_gamma(s + double(n)) -
                2.0 * log_gamma(s + double(n) + 0.5);
    cplx out = q / 2.0 * body;
    if (A != 0.0) out += A / 2.0 * std::log(u);
    return out;
}

cplx z_infinity(const SurfaceSignature& sig, int n, cplx s) {
    return std::exp(z_infinity_log(sig, n, s));
}
cplx z_ell(const SurfaceSignature& sig, int n, cplx s) {
    return std::exp(z_ell_log(sig, n, s));
}
cplx z_par(const SurfaceSignature& sig, int n, cplx s, double A) {
    return std::exp(z_par_log(sig, n, s, A));
}

DetConstants b_d_constants(const SurfaceSignature& sig, int n) {
    DetConstants c;
    c.B = -area_rational(sig).to_double();  // -|X|/(2 pi)
    double d = 2.0 * area_rational(sig).to_double() * kZetaPrimeMinusOne +
               sig.cusps() / 2.0 * kLogTwoPi;
    for (int m : sig.elliptic_orders())
        d += beta_closed(m, n).to_double() * std::log(double(m));
    c.D = d;
    return c;
}

EllAsymptotics asymptotic_coeffs_ell(const SurfaceSignature& sig, int n) {
    EllAsymptotics out{Rational(0), 0.0};
    for (int m : sig.elliptic_orders()) {
        auto zs = zero_sum(m, n);
        if (zs.first != 0 || zs.second != 0)
            throw InternalError("asymptotic_coeffs_ell: u log u / u coefficients nonzero");
        Rational b = beta_closed(m, n);
        out.B_coeff += b;
        out.D_coeff -= b.to_double() * std::log(double(m));
    }
    return out;
}

double log_det_resolvent(const SurfaceSignature& sig, int n, double s,
                         const LengthSpectrum& spec, const ScatteringModel& model,
                         int kmax) {
    if (!(s > 0.0)) throw DomainError("log_det_resolvent: requires s > 0");
    if (!(s + n > 0.5))
        throw DomainError("log_det_resolvent: requires s + n > 1/2");
    double A = a_constant(model);
    if (sig.cusps() > 0 && model.kind() == ScatteringModel::Kind::None)
        throw ModelError("log_det_resolvent: q > 0 requires a scattering model");
    DetConstants bd = b_d_constants(sig, n);
    double u = s + n - 0.5;
    cplx total = z_infinity_log(sig, n, s) +
                 selberg_zeta_log_trunc(spec, s + double(n), kmax).log_value +
                 z_ell_log(sig, n, s) + z_par_log(sig, n, s, A) + bd.B * u * u + bd.D;
    ensure_finite(total, "log_det_resolvent");
    return total.real();
}

double c_constant_log(const SurfaceSignature& sig, int n, double A) {
    if (n < 1) throw DomainError("c_constant_log: n >= 1 only");
    double ex = area_rational(sig).to_double() / 2.0;  // |X|/(4 pi)
    double lg = ex * (double(2 * n - 1) * kLogTwoPi +
                      2.0 * log_gamma2(cplx(2.0 * n)).real() +
                      double(2 * n - 1) * log_gamma(cplx(2.0 * n)).real());
    for (int m : sig.elliptic_orders()) {
        double tm = 2.0 * m;
        lg += double(2 * alpha_residue(m, -n) + 1 - m) / tm * std::log(double(m));
        for (int r = 1; r < m; ++r)
            lg += double(2 * alpha_residue(m, r - n) + 1 - m) / tm *
                  log_gamma(cplx(double(r) / m)).real();
        for (int r = 0; r < m; ++r)
            lg += double(2 * alpha_residue(m, r + n) + 1 - m) / tm *
                  log_gamma(cplx(double(2 * n + r) / m)).real();
    }
    double q = sig.cusps();
    lg += q / 2.0 *
          (double(2 * n - 1) * kLog2 - kLogPi - log_gamma(cplx(2.0 * n)).real());
    int dn = dim_holomorphic(sig, n);
    lg -= double(dn) * std::log(double(2 * n - 1));
    lg += A / 2.0 * std::log(double(n) - 0.5);
    DetConstants bd = b_d_constants(sig, n);
    double half = double(n) - 0.5;
    lg += bd.B * half * half + bd.D;
    return lg;
}

double c_constant(const SurfaceSignature& sig, int n, double A, int n0) {
    if (n >= 1) return std::exp(c_constant_log(sig, n, A));
    // n = 0:  (-1)^{A/2+1-n0} 2^{q-A/2} (2pi)^{-q/2-|X|/4pi} e^{B/4+D}
    //         prod_j m^{(1-m)/m} prod_{r=1}^{m-1} Gamma(r/m)^{(2r+1-m)/m}
    double q = sig.cusps();
    double ex = area_rational(sig).to_double() / 2.0;
    double lg = (q - A / 2.0) * kLog2 - (q / 2.0 + ex) * kLogTwoPi;
    DetConstants bd = b_d_constants(sig, 0);
    lg += bd.B / 4.0 + bd.D;
    for (int m : sig.elliptic_orders()) {
        lg += double(1 - m) / m * std::log(double(m));
        for (int r = 1; r < m; ++r)
            lg += double(2 * r + 1 - m) / m * log_gamma(cplx(double(r) / m)).real();
    }
    int parity = int(std::llround(A / 2.0)) + 1 - n0;
    double sign = (parity % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(lg);
}

DetPrime det_prime(const SurfaceSignature& sig, int n, const LengthSpectrum& spec,
                   const ScatteringModel& model, int n0, int kmax,
                   std::optional<double> z0) {
    if (n < 0) throw DomainError("det_prime: n must be nonnegative");
    if (sig.cusps() > 0 && model.kind() == ScatteringModel::Kind::None)
        throw ModelError("det_prime: q > 0 requires a scattering model");
    double A = a_constant(model);
    DetPrime out;
    if (n == 0) {
        // Formula assembly only: the truncated product cannot reproduce the
        // analytic zero structure at s in {0, 1}, so Z_0 comes from the caller.
        out.value = c_constant(sig, 0, A, n0) * z0.value_or(1.0);
        out.partial = !z0.has_value();
        return out;
    }
    if (n == 1) {
        cplx z1 = selberg_zeta_trunc(spec, cplx(1.0), kmax);
        cplx dz1 = z1 * selberg_zeta_log_deriv(spec, cplx(1.0), kmax);
        out.value = std::exp(c_constant_log(sig, 1, A)) * dz1.real();
        return out;
    }
    double log_c = c_constant_log(sig, n, A);
    double log_zn = selberg_zeta_log_trunc(spec, cplx(double(n)), kmax).log_value.real();
    out.value = std::exp(log_c + log_zn);

    const double s0 = 1e-4;
    int dn = dim_holomorphic(sig, n);
    double log_det = log_det_resolvent(sig, n, s0, spec, model, kmax);
    double ratio =
        std::exp(log_det - double(dn) * std::log(s0 * (s0 + 2.0 * n - 1.0)) - log_c -
                 log_zn);
    out.limit_diagnostic = ratio;
    if (std::abs(ratio - 1.0) > 1e-2)
        throw DiagnosticError("det_prime: s->0 limit diagnostic outside 1e-2");
    return out;
}

}  // namespace seltrace
