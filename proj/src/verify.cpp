#include "seltrace/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "seltrace/io.hpp"
#include "seltrace/kernel.hpp"
#include "seltrace/quadrature.hpp"
#include "seltrace/residues.hpp"
#include "seltrace/scattering.hpp"
#include "seltrace/special.hpp"
#include "seltrace/surface.hpp"
#include "seltrace/trace.hpp"
#include "seltrace/zeta_det.hpp"

namespace seltrace {

namespace {

constexpr double kPi = 3.14159265358979323846;

void record(SuiteReport& rep, const std::string& name, double residual, double bound) {
    rep.checks.push_back({name, residual, bound, residual <= bound});
}

void record_flag(SuiteReport& rep, const std::string& name, bool ok) {
    rep.checks.push_back({name, ok ? 0.0 : 1.0, 0.0, ok});
}

LengthSpectrum synthetic_spectrum() {
    return LengthSpectrum({{3.1, 1}, {5.7, 1}, {9.3, 2}, {14.2, 1}});
}

// ------------------------------------------------------- special functions

SuiteReport suite_special_fn() {
    SuiteReport rep{"special_fn", {}};
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> re(0.5, 20.0), im(-10.0, 10.0);
    double rec_psi = 0.0, rec_lg = 0.0;
    for (int i = 0; i < 100; ++i) {
        cplx z(re(rng), im(rng));
        rec_psi = std::max(rec_psi, std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z));
        rec_lg =
            std::max(rec_lg, std::abs(log_gamma(z + 1.0) - log_gamma(z) - std::log(z)));
    }
    record(rep, "psi(z+1) - psi(z) - 1/z on 100 random z", rec_psi, 1e-12);
    record(rep, "logGamma(z+1) - logGamma(z) - log z on 100 random z", rec_lg, 1e-12);

    std::uniform_real_distribution<double> xr(-5.0, 5.0);
    double refl = 0.0;
    int done = 0;
    while (done < 50) {
        double z = xr(rng);
        if (std::abs(z - std::round(z)) < 1e-3) continue;
        cplx lhs = std::exp(log_gamma(cplx(z)) + log_gamma(cplx(1.0 - z)));
        cplx rhs = kPi / std::sin(kPi * z);
        refl = std::max(refl, std::abs(lhs - rhs) / std::abs(rhs));
        ++done;
    }
    record(rep, "Gamma(z) Gamma(1-z) = pi / sin(pi z), 50 random real z", refl, 1e-10);

    double g2rec = 0.0;
    for (double z = 0.1; z <= 10.0; z += 0.23)
        g2rec = std::max(g2rec, std::abs(log_gamma2(cplx(z + 1.0)) -
                                         log_gamma2(cplx(z)) + log_gamma(cplx(z))));
    record(rep, "Gamma_2 recurrence against log_gamma on (0.1, 10]", g2rec, 1e-10);

    cplx a = 1.3, b = 2.1;
    cplx lead = std::exp(log_gamma(a + b) - log_gamma(a) - log_gamma(b));
    double prev = 1e9;
    bool monotone = true;
    for (double eps : {1e-3, 1e-6, 1e-9}) {
        cplx ratio = hyp2f1_log_case(a, b, 1.0 - eps) / (lead * (-std::log(eps)));
        double dev = std::abs(ratio - 1.0);
        monotone = monotone && dev < prev;
        prev = dev;
    }
    record_flag(rep, "2F1 log case approaches its leading term as z -> 1", monotone);

    double zp = std::abs(zeta_derivative(cplx(-1.0)).real() - kZetaPrimeMinusOne);
    record(rep, "zeta'(-1) from Euler-Maclaurin vs the stored constant", zp, 1e-9);
    return rep;
}

// ---------------------------------------------------------------- residues

SuiteReport suite_exact_identities() {
    SuiteReport rep{"exact_identities", {}};
    bool zero_ok = true;
    for (int m = 2; m <= 50 && zero_ok; ++m)
        for (int n = 0; n <= 20; ++n) {
            auto z = zero_sum(m, n);
            if (z.first != 0 || z.second != 0) { zero_ok = false; break; }
        }
    record_flag(rep, "zero_sum(m,n) = (0,0) for m in [2,50], n in [0,20]", zero_ok);

    bool beta_ok = true;
    for (int m = 2; m <= 30 && beta_ok; ++m)
        for (int n = 0; n <= 10; ++n)
            if (beta_closed(m, n) != beta_bruteforce(m, n)) { beta_ok = false; break; }
    record_flag(rep, "beta closed == brute-force double sum, exact rationals", beta_ok);

    double worst = 0.0;
    for (int m = 2; m <= 20; ++m)
        for (int k = -40; k <= 40; ++k) {
            cplx bf = s_sum_bruteforce(m, k);
            worst = std::max(worst, std::abs(bf - cplx(double(s_sum_closed(m, k)))));
        }
    record(rep, "S_k roots-of-unity sum vs closed form, m<=20 |k|<=40", worst, 1e-9);
    return rep;
}

SuiteReport suite_residues() {
    SuiteReport rep{"residues", {}};
    double worst = 0.0;
    for (int m = 2; m <= 50; ++m)
        for (int k = -100; k <= 100; ++k)
            worst = std::max(worst,
                             std::abs(s_sum_bruteforce(m, k) -
                                      cplx(double(s_sum_closed(m, k)))));
    record(rep, "S_k brute force vs closed, m<=50 |k|<=100", worst, 1e-9);

    double anti = 0.0;
    for (int m = 2; m <= 20; ++m)
        for (int k = -30; k <= 30; ++k)
            anti = std::max(anti, std::abs(s_sum_bruteforce(m, -k) +
                                           s_sum_bruteforce(m, k - 1)));
    record(rep, "S_{-k} + S_{k-1} = 0 (sum-level antisymmetry)", anti, 1e-9);

    bool alpha_ok = true;
    for (int m = 2; m <= 30 && alpha_ok; ++m)
        for (int k = 1; k <= 100; ++k) {
            if (k % m == 0) {
                if (alpha_residue(m, -k) != 0) { alpha_ok = false; break; }
            } else if (alpha_residue(m, -k) + alpha_residue(m, k) != m) {
                alpha_ok = false;
                break;
            }
        }
    record_flag(rep, "alpha_m(-k) + alpha_m(k) = m off multiples, 0 on them", alpha_ok);
    return rep;
}

// -------------------------------------------------------------- dimensions

SuiteReport suite_dimensions() {
    SuiteReport rep{"dimensions", {}};
    const int orders_pool[4] = {2, 3, 5, 7};
    bool match = true;
    int tested = 0;
    for (int g = 0; g <= 5 && match; ++g)
        for (int q = 0; q <= 3 && match; ++q)
            for (int mask = 0; mask < 125 && match; ++mask) {
                // orders: up to three picks with repetition (0 = none)
                std::vector<int> orders;
                int code = mask;
                for (int slot = 0; slot < 3; ++slot) {
                    int pick = code % 5;
                    code /= 5;
                    if (pick > 0) orders.push_back(orders_pool[pick - 1]);
                }
                try {
                    SurfaceSignature sig(g, q, orders);
                    for (int n = 1; n <= 12; ++n) {
                        Rational r = dim_via_residue(sig, n);
                        if (!r.is_integer() || r.num() != dim_holomorphic(sig, n)) {
                            match = false;
                            break;
                        }
                    }
                    ++tested;
                } catch (const DomainError&) {
                    // non-cofinite combination; skip
                }
            }
    record_flag(rep, "dim_via_residue == dim_holomorphic over " +
                         std::to_string(tested) + " signatures, n in [1,12]",
                match && tested > 300);

    std::mt19937 rng(20210905);
    bool d1_ok = true;
    for (int i = 0; i < 200; ++i) {
        int g = int(rng() % 9);
        int q = int(rng() % 5);
        std::vector<int> orders;
        int v = int(rng() % 4);
        for (int j = 0; j < v; ++j) orders.push_back(2 + int(rng() % 8));
        try {
            SurfaceSignature sig(g, q, orders);
            if (dim_holomorphic(sig, 1) != g) { d1_ok = false; break; }
        } catch (const DomainError&) {
            --i;  // resample
        }
    }
    record_flag(rep, "d_1 = g on 200 random signatures", d1_ok);

    SurfaceSignature mod(0, 1, {2, 3});
    const int want[5] = {0, 0, 0, 0, 1};
    bool seq_ok = true;
    for (int n = 2; n <= 6; ++n)
        if (dim_holomorphic(mod, n) != want[n - 2]) seq_ok = false;
    record_flag(rep, "(0;1;[2,3]): d_2..d_6 = 0,0,0,0,1", seq_ok);

    bool mono_ok = true;
    for (int g = 2; g <= 4 && mono_ok; ++g) {
        SurfaceSignature sig(g, 1, {2, 5});
        int prev = dim_holomorphic(sig, 2);
        for (int n = 3; n <= 12; ++n) {
            int cur = dim_holomorphic(sig, n);
            if (cur < prev) { mono_ok = false; break; }
            prev = cur;
        }
    }
    record_flag(rep, "d_n nondecreasing for n >= 2, g >= 2", mono_ok);
    return rep;
}

// ----------------------------------------------------------- inversion chain

SuiteReport suite_appendix_a() {
    SuiteReport rep{"appendixA", {}};
    double worst = 0.0;
    for (double alpha : {1.5, 2.5})
        for (int n : {0, 1, 2})
            for (double v : {0.0, 0.5, 2.0}) {
                auto psi = [alpha](double x) {
                    return cplx(std::pow(x + 1.0, -alpha));
                };
                cplx closed = q_power_closed(cplx(alpha), n, v);
                cplx quad = q_quadrature(psi, n, v, {1e-11, 1e-12, 6000}).value;
                worst = std::max(worst, std::abs(quad - closed) / std::abs(closed));
            }
    record(rep, "power-kernel Q: closed vs quadrature, relative", worst, 1e-6);

    double inv = 0.0;
    inv = std::max(inv, inversion_check({0, 1.5, 4.0}, 0.7));
    inv = std::max(inv, inversion_check({2, 2.0, 6.0}, 2.0));
    record(rep, "resolvent inversion round-trip at (0,1.5,4) and (2,2,6)", inv, 1e-5);

    double pw = 0.0;
    for (double alpha : {1.5, 2.5, 3.0})
        for (int n : {0, 1, 2})
            pw = std::max(pw, inversion_check_power(alpha, n, 0.8));
    record(rep, "power-kernel Q -> inversion reproduces (x+1)^{-alpha}", pw, 1e-8);

    KernelParams p{1, 2.0, 5.0};
    double fr = 0.0;
    for (double r : {0.0, 0.5, 1.0, 3.0})
        fr = std::max(fr, std::abs(fourier_of_g(p, r, {1e-12, 1e-13, 6000}) -
                                   h_of_r(p, r)));
    record(rep, "Fourier pair residual, r in {0, 0.5, 1, 3}", fr, 1e-8);
    return rep;
}

// ------------------------------------------------------------------ kernel

SuiteReport suite_kernel() {
    SuiteReport rep{"kernel", {}};
    // Resolvent ODE u(u+1) P'' - [(2n-2)u - 1] P' - s(s+2n-1) P = 0 by
    // 5-point finite differences.
    double worst = 0.0;
    const int n = 1;
    const cplx s = 1.6;
    for (int i = 0; i < 20; ++i) {
        double u = 0.1 * std::pow(100.0, i / 19.0);
        double h = 7e-3 * (0.25 + u);
        cplx f[5];
        for (int j = -2; j <= 2; ++j) f[j + 2] = psi_ns(n, s, u + j * h);
        cplx d1 = (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h);
        cplx d2 = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) /
                  (12.0 * h * h);
        cplx t1 = u * (u + 1.0) * d2;
        cplx t2 = -((2.0 * n - 2.0) * u - 1.0) * d1;
        cplx t3 = -s * (s + 2.0 * n - 1.0) * f[2];
        double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
        worst = std::max(worst, std::abs(t1 + t2 + t3) / scale);
    }
    record(rep, "resolvent ODE residual at 20 points in [0.1, 10]", worst, 1e-5);

    double ratio_bound_excess = 0.0;
    for (auto [kn, ks] : {std::pair<int, double>{0, 1.0}, {1, 2.0}, {2, 1.5}}) {
        KernelParams p{kn, ks, 8.0};
        double base = 0.0;
        for (double u : {1e-4, 1e-5, 1e-6}) {
            double ratio =
                std::abs(psi_ns(p, u) - psi_small_u_expansion(p, u)) / u;
            if (u == 1e-4)
                base = ratio;
            else
                ratio_bound_excess =
                    std::max(ratio_bound_excess, ratio - 10.0 * base - 1e-9);
        }
    }
    record(rep, "small-u law |Psi - expansion|/u stays bounded", ratio_bound_excess,
           0.0);
    return rep;
}

// ---------------------------------------------------------------- elliptic

SuiteReport suite_elliptic() {
    SuiteReport rep{"elliptic", {}};
    double worst = 0.0;
    const cplx s = 2.0, a = 7.0;
    for (int m : {2, 3, 4})
        for (int l = 1; l < m; ++l)
            for (int n : {0, 1, 2}) {
                cplx closed = elliptic_angle_closed(m, l, n, s) -
                              elliptic_angle_closed(m, l, n, a);
                cplx quad = elliptic_single_quadrature(m, l, n, s, a);
                worst = std::max(worst, std::abs(closed - quad));
            }
    record(rep, "elliptic angle integral: closed form vs quadrature", worst, 1e-6);

    double pi_err = 0.0;
    for (double t : {1.1, 2.0, 10.0}) {
        // y = t + sqrt(t^2-1) sin(phi) absorbs the square-root endpoint weight:
        // sqrt(2yt - 1 - y^2) = sqrt(t^2-1) cos(phi), dy = sqrt(t^2-1) cos(phi) dphi.
        double r0 = std::sqrt(t * t - 1.0);
        auto f = [t, r0](double phi) {
            return cplx(1.0 / (t + r0 * std::sin(phi)));
        };
        QuadResult q = integrate(f, -kPi / 2.0, kPi / 2.0, {1e-11, 1e-13, 2000});
        pi_err = std::max(pi_err, std::abs(q.value.real() - kPi));
    }
    record(rep, "arc-length lemma integral equals pi", pi_err, 1e-8);

    double cosh_err = 0.0;
    for (auto [mu, theta] : {std::pair<double, double>{2.5, kPi / 3.0}, {4.0, kPi / 5.0}}) {
        auto f = [mu, theta](double t) {
            return cplx(std::exp(-mu * t) / (std::cosh(t) - std::cos(2.0 * theta)));
        };
        QuadResult q = integrate_half_line(f, {1e-12, 1e-13, 8000});
        // 10^4-term series plus integral tail acceleration:
        //   sum_{k>K} z^k/(mu+k) = int_0^1 x^{mu+K} z^{K+1}/(1-zx) dx,
        // unfolded with x = y^{1/(K+1)} so the x ~ 1 boundary layer is resolved.
        cplx z = std::polar(1.0, 2.0 * theta);
        const int K = 10000;
        double series = 0.0;
        for (int k = 1; k <= K; ++k)
            series += std::sin(2.0 * k * theta) / (mu + k);
        cplx zK = std::pow(z, double(K + 1));
        auto tail_f = [mu, z, zK, K](double y) -> cplx {
            double x = std::pow(y, 1.0 / double(K + 1));
            return std::pow(y, mu / double(K + 1)) * zK /
                   ((1.0 - z * x) * double(K + 1));
        };
        QuadResult tail = integrate(tail_f, 0.0, 1.0, {1e-13, 1e-13, 8000});
        series += tail.value.imag();
        double rhs = 2.0 / std::sin(2.0 * theta) * series;
        cosh_err = std::max(cosh_err, std::abs(q.value.real() - rhs));
    }
    record(rep, "cosh-kernel series lemma, quadrature vs accelerated series",
           cosh_err, 1e-8);
    return rep;
}

// --------------------------------------------------------------- parabolic

SuiteReport suite_parabolic() {
    SuiteReport rep{"parabolic", {}};
    const cplx a = 8.0;
    double worst = 0.0;
    for (int n : {0, 1, 2})
        for (double sv : {1.3, 2.7}) {
            cplx s = sv;
            cplx closed = parabolic_ip1_closed(n, s) - parabolic_ip1_closed(n, a);
            cplx quad = parabolic_ip1_quadrature(n, s, a, {1e-10, 1e-12, 8000});
            worst = std::max(worst, std::abs(closed - quad) / std::abs(closed));
        }
    record(rep, "I_P1 closed form vs log-weighted quadrature, relative", worst, 1e-5);

    double p0 = 0.0;
    for (int n : {0, 1, 2})
        for (double sv : {1.3, 2.7}) {
            KernelParams p{n, sv, a};
            auto pair = [&p](double u) { return psi_pair(p, u); };
            cplx quad = q_quadrature(pair, n, 0.0, {1e-12, 1e-13, 8000}).value;
            cplx closed = 1.0 / (2.0 * p.s + 2.0 * n - 1.0) -
                          1.0 / (2.0 * p.a + 2.0 * n - 1.0);
            p0 = std::max(p0, std::abs(quad - closed));
        }
    record(rep, "I_P0 = Q(0) difference form", p0, 1e-10);
    return rep;
}

// -------------------------------------------------------------------- zeta

SuiteReport suite_zeta() {
    SuiteReport rep{"zeta", {}};
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> norm_d(2.0, 40.0), s_d(1.0, 3.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        int count = 5 + int(rng() % 46);
        std::vector<LengthSpectrum::Entry> entries;
        for (int i = 0; i < count; ++i)
            entries.push_back({norm_d(rng), 1 + std::int64_t(rng() % 3)});
        LengthSpectrum spec(std::move(entries));
        int n = trial % 4;
        cplx s = s_d(rng);
        cplx lhs = hyperbolic_term(spec, n, s, 256);
        cplx rhs = selberg_zeta_log_deriv(spec, s + double(n), 256) /
                   (2.0 * s + 2.0 * n - 1.0);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    record(rep, "hyperbolic term vs d/ds log Z(s+n)/(2s+2n-1), 20 random spectra",
           worst, 1e-10);
    return rep;
}

// ------------------------------------------------------------- asymptotics

SuiteReport suite_asymptotics() {
    SuiteReport rep{"asymptotics", {}};
    SurfaceSignature sig(0, 1, {2, 3});
    const double u = 1e4;
    double area2pi = area_rational(sig).to_double();

    double ell_err = 0.0, inf_err = 0.0, par_err = 0.0;
    for (int n : {1, 2, 3}) {
        double s = u + 0.5 - n;
        EllAsymptotics coeffs = asymptotic_coeffs_ell(sig, n);
        double lhs = z_ell_log(sig, n, s).real();
        double rhs = coeffs.B_coeff.to_double() * std::log(u) + coeffs.D_coeff;
        ell_err = std::max(ell_err, std::abs(lhs - rhs));

        double zi = z_infinity_log(sig, n, s).real();
        double zi_ref = area2pi / 2.0 *
                        ((-2.0 * u * u + 2.0 * n * n - 1.0 / 6.0) * std::log(u) +
                         3.0 * u * u - 4.0 * kZetaPrimeMinusOne);
        inf_err = std::max(inf_err, std::abs(zi - zi_ref));

        const double A = 2.0;
        double zp = z_par_log(sig, n, s, A).real();
        double zp_ref = 0.5 * ((-(2.0 * u + 1.0)) * std::log(u) + 2.0 * u -
                               std::log(2.0 * kPi) - 2.0 * u * std::log(2.0)) +
                        A / 2.0 * std::log(u);
        par_err = std::max(par_err, std::abs(zp - zp_ref));
    }
    record(rep, "log Z_ell vs B log u + D at u=1e4", ell_err, 1e-3);
    record(rep, "log Z_inf large-u display at u=1e4", inf_err, 1e-3);
    record(rep, "log Z_par large-u display at u=1e4", par_err, 1e-3);

    // Barnes double gamma asymptotics against an lgammal recurrence oracle.
    long double res[3];
    int idx = 0;
    for (long N : {100L, 1000L, 10000L}) {
        long double acc = 0.0L;
        for (long k = 1; k <= N; ++k) acc -= lgammal((long double)k);
        long double sN = (long double)N;
        long double rhs = -0.5L * sN * sN * logl(sN) + 0.75L * sN * sN -
                          0.5L * sN * logl(2.0L * (long double)kPi) +
                          logl(sN) / 12.0L - (long double)kZetaPrimeMinusOne;
        res[idx++] = fabsl(acc - rhs);
    }
    record_flag(rep, "Gamma_2 asymptotic residual decreases 1e2 -> 1e3 -> 1e4",
                res[0] > res[1] && res[1] > res[2]);
    record(rep, "Gamma_2 asymptotic residual at s=1e4", double(res[2]), 1e-4);

    long double oracle = 0.0L;
    for (long k = 1; k <= 100; ++k) oracle -= lgammal((long double)k);
    double tie = std::abs(log_gamma2(cplx(101.0)).real() - double(oracle));
    record(rep, "log_gamma2(101) vs factorial-recurrence oracle, relative",
           tie / std::abs(double(oracle)), 1e-13);
    return rep;
}

// ------------------------------------------------------------- determinant

namespace mellin {

// (1/Gamma(w)) * int_0^inf t^{w-beta} (log t)^L e^{-t u^2} dt, closed form.
cplx closed(cplx w, double beta, double u, bool with_log) {
    cplx lg = log_gamma(w - beta + 1.0) - log_gamma(w);
    cplx power = std::exp(-2.0 * (w - beta + 1.0) * std::log(u));
    cplx base = std::exp(lg) * power;
    if (!with_log) return base;
    return (digamma(w - beta + 1.0) - 2.0 * std::log(u)) * base;
}

// Same object by series continuation on [0,1] plus quadrature on [1, inf).
cplx quadrature_route(cplx w, double beta, double u, bool with_log) {
    double u2 = u * u;
    cplx head = 0.0;
    double c = 1.0;
    for (int j = 0; j <= 60; ++j) {
        cplx denom = w - beta + 1.0 + double(j);
        head += with_log ? cplx(-c) / (denom * denom) : c / denom;
        c *= -u2 / double(j + 1);
    }
    auto f = [w, beta, u2, with_log](double t) -> cplx {
        cplx p = std::exp((w - beta) * std::log(t) - t * u2);
        return with_log ? p * std::log(t) : p;
    };
    QuadResult tail = integrate_tail(f, 1.0, {1e-14, 1e-14, 6000});
    return (head + tail.value) * std::exp(-log_gamma(w));
}

}  // namespace mellin

SuiteReport suite_determinant() {
    SuiteReport rep{"determinant", {}};
    LengthSpectrum spec = synthetic_spectrum();

    double diag = 0.0;
    for (int n : {2, 3}) {
        DetPrime compact =
            det_prime(SurfaceSignature(2, 0, {}), n, spec, ScatteringModel::none());
        diag = std::max(diag, std::abs(*compact.limit_diagnostic - 1.0));
        DetPrime cusped = det_prime(SurfaceSignature(0, 1, {2, 3}), n, spec,
                                    ScatteringModel::modular());
        diag = std::max(diag, std::abs(*cusped.limit_diagnostic - 1.0));
    }
    record(rep, "det' limit diagnostic, n in {2,3}, compact and cusped", diag, 1e-3);

    const double u = 2.0, h = 1e-5;
    const double lu = std::log(u);
    struct Case {
        double beta;
        bool with_log;
        double expect;
    } cases[] = {
        {1.0, false, -2.0 * lu},
        {2.0, false, -u * u + 2.0 * u * u * lu},
        {1.5, false, -2.0 * std::sqrt(kPi) * u},
        {1.5, true,
         -2.0 * std::sqrt(kPi) * u * (2.0 - 2.0 * std::log(2.0) - kEulerGamma - 2.0 * lu)},
    };
    double mellin_err = 0.0, route_err = 0.0;
    for (const Case& c : cases) {
        cplx plus = mellin::closed(cplx(h), c.beta, u, c.with_log);
        cplx minus = mellin::closed(cplx(-h), c.beta, u, c.with_log);
        cplx deriv = (plus - minus) / (2.0 * h);
        mellin_err = std::max(mellin_err, std::abs(deriv - c.expect));
        for (double wv : {h, -h}) {
            cplx qr = mellin::quadrature_route(cplx(wv), c.beta, u, c.with_log);
            cplx cl = mellin::closed(cplx(wv), c.beta, u, c.with_log);
            route_err = std::max(route_err, std::abs(qr - cl));
        }
    }
    record(rep, "four Mellin derivative identities at u=2 (central difference)",
           mellin_err, 1e-5);
    record(rep, "Mellin closed form vs series+quadrature route at w = +-1e-5",
           route_err, 1e-8);
    return rep;
}

// -------------------------------------------------------------- scattering

SuiteReport suite_scattering() {
    SuiteReport rep{"scattering", {}};
    double fe = 0.0;
    for (int i = 0; i < 20; ++i) {
        cplx s(0.15 + 0.035 * i, 0.3 * ((i % 5) - 2));
        fe = std::max(fe, std::abs(phi_modular(s) * phi_modular(1.0 - s) - 1.0));
    }
    record(rep, "phi(s) phi(1-s) = 1 on 20 grid points", fe, 1e-8);

    double un = 0.0;
    for (double r : {0.5, 1.0, 5.0, 20.0})
        un = std::max(un, std::abs(std::abs(phi_modular(cplx(0.5, r))) - 1.0));
    record(rep, "|phi(1/2+ir)| = 1", un, 1e-8);

    ScatteringModel mod = ScatteringModel::modular();
    record(rep, "A = 2 for the modular fixture", std::abs(a_constant(mod) - 2.0), 0.0);

    SigmaValue s50 = sigma_integral(2, 1.0, mod, 50.0);
    SigmaValue s100 = sigma_integral(2, 1.0, mod, 100.0);
    record(rep, "Sigma(1) self-convergence under R: 50 -> 100",
           std::abs(s50.value - s100.value), 1e-6);

    double ms = 0.0;
    for (auto [r, Y] : {std::pair<double, double>{1.0, 100.0}, {2.0, 50.0}}) {
        const double h = 1e-4;
        cplx hi = maass_selberg_general(cplx(0.5 + h, r), cplx(0.5 + h, r), Y, mod);
        cplx lo = maass_selberg_general(cplx(0.5 - h, r), cplx(0.5 - h, r), Y, mod);
        double fd = 0.5 * (hi + lo).real();
        ms = std::max(ms, std::abs(fd - maass_selberg_limit(r, Y, mod)));
    }
    record(rep, "Maass-Selberg sigma->1/2 limit vs Y-asymptotic formula", ms, 1e-5);

    double sp1 = std::abs(1e-2 * sigma_integral(2, 1e-2, mod).value);
    double sp2 = std::abs(1e-3 * sigma_integral(2, 1e-3, mod).value);
    record_flag(rep, "|s Sigma(s)| decreasing across s in {1e-2, 1e-3}", sp2 < sp1);
    return rep;
}

const std::map<std::string, SuiteReport (*)()>& registry() {
    static const std::map<std::string, SuiteReport (*)()> reg = {
        {"special_fn", suite_special_fn},
        {"exact_identities", suite_exact_identities},
        {"residues", suite_residues},
        {"dimensions", suite_dimensions},
        {"appendixA", suite_appendix_a},
        {"kernel", suite_kernel},
        {"elliptic", suite_elliptic},
        {"parabolic", suite_parabolic},
        {"zeta", suite_zeta},
        {"asymptotics", suite_asymptotics},
        {"determinant", suite_determinant},
        {"scattering", suite_scattering},
    };
    return reg;
}

}  // namespace

int SuiteReport::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.passed ? 1 : 0;
    return n;
}

double SuiteReport::max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : registry()) names.push_back(k);
    return names;
}

bool has_suite(const std::string& name) { return registry().count(name) > 0; }

SuiteReport run_suite(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw DomainError("unknown suite: " + name);
    return it->second();
}

}  // namespace seltrace
