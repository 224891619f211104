#include <doctest.h>

#include <cmath>
#include <random>

#include "seltrace/io.hpp"
#include "seltrace/surface.hpp"

using namespace seltrace;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("signature validation") {
    CHECK_THROWS_AS(SurfaceSignature(0, 0, {}), DomainError);         // sphere
    CHECK_THROWS_AS(SurfaceSignature(0, 1, {2}), DomainError);        // area <= 0
    CHECK_THROWS_AS(SurfaceSignature(1, 0, {}), DomainError);         // torus, area 0
    CHECK_THROWS_AS(SurfaceSignature(0, 2, {1}), DomainError);        // bad order
    CHECK_NOTHROW(SurfaceSignature(0, 1, {2, 3}));
    SurfaceSignature sorted(0, 1, {5, 2, 3});
    CHECK(sorted.elliptic_orders() == std::vector<int>{2, 3, 5});
}

TEST_CASE("hyperbolic area") {
    CHECK(area(SurfaceSignature(2, 0, {})) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
    CHECK(area(SurfaceSignature(0, 1, {2, 3})) ==
          doctest::Approx(kPi / 3.0).epsilon(1e-14));
    CHECK(area(SurfaceSignature(1, 1, {})) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK(area_rational(SurfaceSignature(0, 1, {2, 3})) == Rational(1, 6));
}

TEST_CASE("dimension formulas") {
    CHECK(dim_holomorphic(SurfaceSignature(3, 2, {2, 2}), 1) == 3);
    CHECK(dim_holomorphic(SurfaceSignature(0, 1, {2, 3}), 6) == 1);
    CHECK(dim_holomorphic(SurfaceSignature(2, 0, {}), 2) == 3);
    CHECK(dim_holomorphic(SurfaceSignature(2, 0, {}), 0) == 1);
}

TEST_CASE("dimension via residue bookkeeping") {
    CHECK(dim_via_residue(SurfaceSignature(0, 1, {2, 3}), 2) == Rational(0));
    CHECK(dim_via_residue(SurfaceSignature(2, 0, {}), 1) == Rational(2));
    SurfaceSignature sig(3, 2, {2, 2});
    CHECK(dim_via_residue(sig, 3) == Rational(dim_holomorphic(sig, 3)));
    CHECK_THROWS_AS(dim_via_residue(sig, 0), DomainError);
}

TEST_CASE("residue route equals floor formula over a sweep") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 150; ++trial) {
        int g = int(rng() % 6);
        int q = int(rng() % 4);
        std::vector<int> orders;
        for (unsigned j = rng() % 4; j > 0; --j) orders.push_back(2 + int(rng() % 6));
        try {
            SurfaceSignature sig(g, q, orders);
            for (int n = 1; n <= 12; ++n) {
                Rational r = dim_via_residue(sig, n);
                REQUIRE(r.is_integer());
                REQUIRE(int(r.num()) == dim_holomorphic(sig, n));
            }
        } catch (const DomainError&) {
            // not cofinite
        }
    }
}

TEST_CASE("signature JSON round trip") {
    SurfaceSignature sig(1, 2, {3, 4});
    SurfaceSignature back = surface_from_json(surface_to_json(sig));
    CHECK(back.genus() == 1);
    CHECK(back.cusps() == 2);
    CHECK(back.elliptic_orders() == std::vector<int>{3, 4});
}
