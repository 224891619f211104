#include <doctest.h>

#include <cmath>

#include "seltrace/quadrature.hpp"
#include "seltrace/scattering.hpp"
#include "seltrace/special.hpp"

using namespace seltrace;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("modular phi at the critical point") {
    CHECK(std::abs(phi_modular(cplx(0.5)) - cplx(-1.0)) < 1e-10);
    // two-sided approach
    cplx lo = phi_modular(cplx(0.5 - 1e-6));
    cplx hi = phi_modular(cplx(0.5 + 1e-6));
    CHECK(std::abs(lo - cplx(-1.0)) < 1e-5);
    CHECK(std::abs(hi - cplx(-1.0)) < 1e-5);
    CHECK(std::abs(0.5 * (lo + hi) - cplx(-1.0)) < 1e-9);
    CHECK_THROWS_AS(phi_modular(cplx(1.0)), PoleError);
}

TEST_CASE("modular phi functional equation and conjugation") {
    CHECK(std::abs(phi_modular(cplx(0.7)) * phi_modular(cplx(0.3)) - 1.0) < 1e-8);
    cplx s(0.6, 0.4);
    CHECK(std::abs(phi_modular(std::conj(s)) - std::conj(phi_modular(s))) < 1e-10);
    for (double r : {0.5, 1.0, 5.0, 20.0})
        CHECK(std::abs(std::abs(phi_modular(cplx(0.5, r))) - 1.0) < 1e-8);
}

TEST_CASE("modular phi log derivative consistency") {
    // analytic vs central difference of log phi
    for (cplx s : {cplx(0.8, 0.0), cplx(0.5, 2.0), cplx(2.3, 1.0)}) {
        cplx fd = (phi_modular(s + 1e-6) - phi_modular(s - 1e-6)) / (2e-6) /
                  phi_modular(s);
        CHECK(std::abs(phi_modular_log_deriv(s) - fd) < 1e-6);
    }
    // phi'/phi(1/2+ir) is real and even in r
    for (double r : {0.3, 1.0, 7.0}) {
        cplx v = phi_modular_log_deriv(cplx(0.5, r));
        CHECK(std::abs(v.imag()) < 1e-9);
        CHECK(std::abs(v - phi_modular_log_deriv(cplx(0.5, -r))) < 1e-9);
    }
}

TEST_CASE("weight shift relation") {
    cplx phi0(0.37, -0.21);
    CHECK(weight_shift(cplx(1.8), 0, phi0) == phi0);
    CHECK(std::abs(weight_shift(cplx(3.0), 1, phi0) - 2.0 / 3.0 * phi0) < 1e-14);
    for (double r : {0.4, 2.0}) {
        cplx wp = weight_shift(cplx(0.5, r), 2, cplx(1.0));
        cplx wm = weight_shift(cplx(0.5, -r), 2, cplx(1.0));
        CHECK(std::abs(wp * wm - 1.0) < 1e-10);  // |factor| = 1 on the line
    }
    CHECK_THROWS_AS(weight_shift(cplx(2.0), 3, cplx(1.0)), PoleError);  // s-n = -1
}

TEST_CASE("a_constant across models") {
    CHECK(a_constant(ScatteringModel::none()) == 0.0);
    CHECK(a_constant(ScatteringModel::modular()) == 2.0);
    std::vector<ScatteringSample> samples;
    for (int i = 0; i <= 40; ++i) samples.push_back({-5.0 + 0.25 * i, cplx(0.0)});
    ScatteringModel sm = ScatteringModel::sampled(1, -1.0, samples, 2.0);
    CHECK(a_constant(sm) == 2.0);
    ScatteringModel bad = ScatteringModel::custom(
        1, nullptr, nullptr, -0.4);  // A = 1.4: not an even integer
    CHECK_THROWS_AS(a_constant(bad), ModelError);
}

TEST_CASE("modular smooth decomposition matches phi'/phi pointwise") {
    // S(r) = phi'/phi(1/2+ir) + 2 zeta'/zeta(1+2ir) + 2 zeta'/zeta(1-2ir)
    for (double r : {0.4, 1.7, 9.0, 24.0}) {
        double lhs = modular_line_smooth(r);
        cplx zsum = 2.0 * zeta_log_deriv(cplx(1.0, 2.0 * r)) +
                    2.0 * zeta_log_deriv(cplx(1.0, -2.0 * r));
        cplx rhs = phi_modular_log_deriv(cplx(0.5, r)) + zsum;
        CHECK(std::abs(lhs - rhs.real()) < 1e-9);
        CHECK(std::abs(rhs.imag()) < 1e-9);
    }
}

TEST_CASE("sigma for the modular model: raw truncation cross-check") {
    // Brute-force: integrate phi'/phi directly on [-R, R] (folded), then add
    // the smooth tail beyond R; the remaining oscillatory tail is O(1/R^2).
    int n = 2;
    cplx s = 1.0;
    cplx beta = s + double(n) - 0.5;
    double R = 400.0;
    auto raw = [&beta](double r) -> cplx {
        cplx f = phi_modular_log_deriv(cplx(0.5, r)) +
                 phi_modular_log_deriv(cplx(0.5, -r));
        return f / (r * r + beta * beta);
    };
    QuadResult body = integrate(raw, 0.0, R, {1e-9, 1e-10, 20000});
    auto smooth_tail = [&beta](double r) -> cplx {
        return modular_line_smooth(r) / (r * r + beta * beta);
    };
    QuadResult tail = integrate_tail(smooth_tail, R, {1e-10, 1e-10, 4000});
    cplx brute = (body.value + 2.0 * tail.value) / (2.0 * kPi);
    SigmaValue sig = sigma_integral(n, s, ScatteringModel::modular());
    CHECK(std::abs(sig.value - brute) < 1e-4);
    CHECK(std::abs(sig.value.imag()) < 1e-8);
}

TEST_CASE("sigma self-convergence and reality") {
    ScatteringModel mod = ScatteringModel::modular();
    SigmaValue a = sigma_integral(2, 1.0, mod, 50.0);
    SigmaValue b = sigma_integral(2, 1.0, mod, 100.0);
    CHECK(std::abs(a.value - b.value) < 1e-6);
    for (double s : {0.8, 1.5, 3.0})
        CHECK(std::abs(sigma_integral(1, cplx(s), mod).value.imag()) < 1e-8);
    SigmaValue none = sigma_integral(3, 2.0, ScatteringModel::none());
    CHECK(none.value == cplx(0.0));
    CHECK(none.error_estimate == 0.0);
}

TEST_CASE("sigma at complex s is conjugate-symmetric") {
    ScatteringModel mod = ScatteringModel::modular();
    cplx s(1.2, 0.4);
    SigmaValue v = sigma_integral(1, s, mod);
    SigmaValue vc = sigma_integral(1, std::conj(s), mod);
    CHECK(std::isfinite(v.value.real()));
    CHECK(std::abs(vc.value - std::conj(v.value)) < 1e-10);
}

TEST_CASE("sigma residue spot check at s -> 0") {
    ScatteringModel mod = ScatteringModel::modular();
    double v1 = std::abs(1e-2 * sigma_integral(2, 1e-2, mod).value);
    double v2 = std::abs(1e-3 * sigma_integral(2, 1e-3, mod).value);
    CHECK(v2 < v1);
}

TEST_CASE("sampled model: algebraic-tail fixture integrates exactly") {
    // phi'/phi(1/2+ir) := -3 / (1 + (r/10)^2) has a true r^{-2} tail.
    auto f = [](double r) { return -3.0 / (1.0 + r * r / 100.0); };
    std::vector<ScatteringSample> samples;
    for (double r = -100.0; r <= 100.0001; r += 0.1) samples.push_back({r, cplx(f(r))});
    ScatteringModel sm = ScatteringModel::sampled(1, -1.0, samples, 2.0);
    int n = 1;
    cplx s = 1.3;
    cplx beta = s + double(n) - 0.5;
    auto exact_f = [&](double r) -> cplx { return f(r) / (r * r + beta * beta); };
    QuadResult exact =
        integrate_real_line(exact_f, {1e-12, 1e-12, 8000}, 30.0);
    SigmaValue got = sigma_integral(n, s, sm);
    CHECK(std::abs(got.value - exact.value / (2.0 * kPi)) < 1e-6);
}

TEST_CASE("sampled model interpolates modular data faithfully") {
    // Samples of the smooth part on [-50, 50]; compare the sampled-model
    // integral against direct quadrature of the generating function over the
    // same domain plus the same tail law.  Validates interpolation fidelity.
    std::vector<ScatteringSample> samples;
    for (double r = -50.0; r <= 50.0001; r += 0.05)
        samples.push_back({r, cplx(modular_line_smooth(r))});
    ScatteringModel sm = ScatteringModel::sampled(1, -1.0, samples, 0.0);
    int n = 2;
    cplx s = 1.0;
    cplx beta = s + double(n) - 0.5;
    auto direct = [&beta](double r) -> cplx {
        return modular_line_smooth(r) / (r * r + beta * beta);
    };
    // brute [-50, 50] part of the generating function
    QuadResult body = integrate(direct, 0.0, 50.0, {1e-12, 1e-12, 20000});
    // plus the same zero-exponent tail continuation the sampled model applies
    double edge_hi = modular_line_smooth(50.0);
    auto tail_fn = [&beta, edge_hi](double r) -> cplx {
        return edge_hi / (r * r + beta * beta);
    };
    QuadResult tails = integrate_tail(tail_fn, 50.0, {1e-12, 1e-12, 4000});
    cplx reference = (2.0 * body.value + 2.0 * tails.value) / (2.0 * kPi);
    SigmaValue got = sigma_integral(n, s, sm);
    CHECK(std::abs(got.value - reference) < 2e-6);
}

TEST_CASE("maass-selberg general term structure") {
    ScatteringModel mod = ScatteringModel::modular();
    cplx s1(0.75, 0.0), s2(0.6, 0.0);
    double Y = 10.0;
    cplx got = maass_selberg_general(s1, s2, Y, mod);
    // independent term-by-term evaluation
    cplx cs2 = std::conj(s2);
    cplx p1 = phi_modular(s1), p2c = std::conj(phi_modular(s2));
    cplx expect = std::pow(Y, s1 + cs2 - 1.0) / (s1 + cs2 - 1.0) +
                  p1 * std::pow(Y, cs2 - s1) / (cs2 - s1) +
                  p2c * std::pow(Y, s1 - cs2) / (s1 - cs2) -
                  p1 * p2c * std::pow(Y, 1.0 - s1 - cs2) / (s1 + cs2 - 1.0);
    CHECK(std::abs(got - expect) < 1e-12);
    CHECK_THROWS_AS(maass_selberg_general(s1, std::conj(s1), Y, mod), DomainError);
}

TEST_CASE("maass-selberg with phi identically zero") {
    ScatteringModel zero = ScatteringModel::custom(
        1, [](cplx) { return cplx(0.0); }, [](double) { return cplx(0.0); }, 0.0);
    cplx s1(0.75, 0.2), s2(0.6, -0.1);
    double Y = 7.0;
    cplx got = maass_selberg_general(s1, s2, Y, zero);
    cplx e = s1 + std::conj(s2) - 1.0;
    CHECK(std::abs(got - std::pow(Y, e) / e) < 1e-14);
}

TEST_CASE("maass-selberg limit against finite differences") {
    ScatteringModel mod = ScatteringModel::modular();
    for (auto [r, Y] : {std::pair<double, double>{1.0, 100.0}, {2.0, 50.0}}) {
        const double h = 1e-4;
        cplx hi = maass_selberg_general(cplx(0.5 + h, r), cplx(0.5 + h, r), Y, mod);
        cplx lo = maass_selberg_general(cplx(0.5 - h, r), cplx(0.5 - h, r), Y, mod);
        double imag_res = 0.0;
        double lim = maass_selberg_limit(r, Y, mod, &imag_res);
        CHECK(std::abs(0.5 * (hi + lo).real() - lim) < 1e-5);
        CHECK(imag_res < 1e-8);
    }
}

TEST_CASE("maass-selberg limit with constant phi") {
    const double c = 0.42;
    ScatteringModel constant = ScatteringModel::custom(
        1, [c](cplx) { return cplx(c); }, [](double) { return cplx(0.0); },
        c);
    double r = 2.0, Y = std::exp(1.0);
    double got = maass_selberg_limit(r, Y, constant);
    // (phi/r) sin(2r log Y) + 2q log Y with log Y = 1
    CHECK(std::abs(got - (c / r * std::sin(2.0 * r) + 2.0)) < 1e-14);
    CHECK_THROWS_AS(maass_selberg_limit(0.0, Y, constant), DomainError);
}
