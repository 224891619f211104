#include <doctest.h>

#include <cmath>

#include "seltrace/kernel.hpp"
#include "seltrace/special.hpp"

using namespace seltrace;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("psi_ns closed values") {
    // Psi_{0,1}(u) = log(1 + 1/u) / (4 pi)
    CHECK(std::abs(psi_ns(0, cplx(1.0), 1.0) - std::log(2.0) / (4.0 * kPi)) < 1e-12);
    double big = 1e6;
    CHECK(std::abs(psi_ns(0, cplx(1.0), big) - std::log1p(1.0 / big) / (4.0 * kPi)) <
          1e-18);
    CHECK_THROWS_AS(psi_ns(0, cplx(1.0), 0.0), DomainError);
}

TEST_CASE("small-u expansion tracks psi_ns") {
    KernelParams p{2, 1.5, 8.0};
    CHECK(std::abs(psi_ns(p, 1e-6) - psi_small_u_expansion(p, 1e-6)) < 5e-5);
    KernelParams p2{1, 2.0, 8.0};
    CHECK(std::abs(psi_ns(p2, 1e-6) - psi_small_u_expansion(p2, 1e-6)) < 1e-4);
    // At u=1 the expansion is far from asymptotic: for n=0, s=1 it evaluates
    // to exactly zero while psi_ns(1) = log2/4pi.
    KernelParams p3{0, 1.0, 8.0};
    CHECK(std::abs(psi_small_u_expansion(p3, 1.0)) < 1e-15);
    CHECK(std::abs(psi_ns(p3, 1.0)) > 0.05);
}

TEST_CASE("power-kernel Q closed form vs quadrature") {
    for (double alpha : {1.5, 2.0})
        for (int n : {0, 1})
            for (double v : {0.0, 0.5}) {
                auto psi = [alpha](double x) { return cplx(std::pow(x + 1.0, -alpha)); };
                cplx closed = q_power_closed(cplx(alpha), n, v);
                cplx quad = q_quadrature(psi, n, v, {1e-10, 1e-12, 6000}).value;
                CHECK(std::abs(quad - closed) / std::abs(closed) < 1e-7);
            }
    CHECK_THROWS_AS(q_power_closed(cplx(0.4), 0, 0.0), DomainError);
}

TEST_CASE("power-kernel Q large-v behavior") {
    cplx alpha(2.2, 0.0);
    int n = 1;
    cplx pref = q_power_closed(alpha, n, 0.0);  // equals the constant at v=0
    double v = 4e6;
    cplx expect = pref * std::pow(v + 1.0, -(alpha.real() + n - 0.5));
    CHECK(std::abs(q_power_closed(alpha, n, v) - expect) / std::abs(expect) < 1e-12);
}

TEST_CASE("resolvent Q from quadrature matches g(t) closed form") {
    KernelParams p{1, 1.4, 5.0};
    auto pair = [&p](double u) { return psi_pair(p, u); };
    for (double v : {0.0, 0.3, 2.0}) {
        cplx closed = q_resolvent_closed(p, v);
        cplx quad = q_quadrature(pair, p.n, v, {1e-10, 1e-12, 6000}).value;
        CHECK(std::abs(quad - closed) < 1e-8);
    }
    // Q(0) = 1/(2s+2n-1) - 1/(2a+2n-1)
    cplx q0 = 1.0 / (2.0 * p.s + 2.0 * p.n - 1.0) - 1.0 / (2.0 * p.a + 2.0 * p.n - 1.0);
    CHECK(std::abs(q_resolvent_closed(p, 0.0) - q0) < 1e-15);
}

TEST_CASE("g and h values") {
    KernelParams p{1, 2.0, 5.0};
    cplx g0 = g_of_t(p, 0.0);
    CHECK(std::abs(g0 - (1.0 / cplx(2.0 * 2.0 + 2.0 - 1.0) -
                         1.0 / cplx(2.0 * 5.0 + 2.0 - 1.0))) < 1e-15);
    cplx h0 = h_of_r(p, 0.0);
    cplx us = p.s + 1.0 - 0.5, ua = p.a + 1.0 - 0.5;
    CHECK(std::abs(h0 - (1.0 / (us * us) - 1.0 / (ua * ua))) < 1e-15);
}

TEST_CASE("Fourier pair") {
    KernelParams p{1, 2.0, 5.0};
    for (double r : {0.0, 0.7, 3.0})
        CHECK(std::abs(fourier_of_g(p, r, {1e-12, 1e-13, 6000}) - h_of_r(p, r)) < 1e-8);
}

TEST_CASE("inversion round trip for resolvent kernels") {
    CHECK(inversion_check({0, 1.5, 4.0}, 0.7) < 1e-5);
    CHECK(inversion_check({2, 2.0, 6.0}, 2.0) < 1e-5);
}

TEST_CASE("inversion round trip for the power kernel") {
    CHECK(inversion_check_power(2.0, 0, 0.7) < 1e-8);
    CHECK(inversion_check_power(2.5, 1, 1.3) < 1e-8);
    CHECK(inversion_check_power(3.0, 2, 0.5) < 1e-8);
}

TEST_CASE("kernel parameter validation") {
    CHECK_THROWS_AS(psi_pair({0, 2.0, 2.0}, 1.0), DomainError);   // a == s
    CHECK_THROWS_AS(psi_pair({0, -1.0, 2.0}, 1.0), DomainError);  // Re s <= 0
}

TEST_CASE("psi_ns is continuous across the series/connection switch at u=1") {
    for (auto [n, s] : {std::pair<int, cplx>{0, 1.5}, {2, cplx(1.2, 0.7)}, {1, 3.0}}) {
        cplx lo = psi_ns(n, s, 1.0 - 1e-12);
        cplx hi = psi_ns(n, s, 1.0 + 1e-12);
        CHECK(std::abs(lo - hi) / std::abs(lo) < 1e-10);
    }
}

TEST_CASE("q_quadrature of the zero kernel vanishes") {
    auto zero = [](double) { return cplx(0.0); };
    QuadResult q = q_quadrature(zero, 0, 0.5);
    CHECK(q.value == cplx(0.0));
}

TEST_CASE("hypergeometric error paths") {
    // c = 2s+2n degenerates to a nonpositive integer
    CHECK_THROWS_AS(hyp2f1_resolvent(cplx(-1.0), 1, 0.3), PoleError);
    // lower parameter s - alpha vanishes before the sum terminates
    CHECK_THROWS_AS(hyp4f3_balanced(2, cplx(2.5), cplx(2.5)), PoleError);
}
