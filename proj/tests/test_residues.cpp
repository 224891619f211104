#include <doctest.h>

#include <cmath>

#include "seltrace/residues.hpp"

using namespace seltrace;

TEST_CASE("alpha_residue basics") {
    CHECK(alpha_residue(3, -1) == 2);
    CHECK(alpha_residue(5, 0) == 0);
    CHECK(alpha_residue(5, 12) == 2);
    CHECK_THROWS_AS(alpha_residue(1, 3), DomainError);
}

TEST_CASE("s_sum closed form against the defining sum") {
    CHECK(s_sum_closed(2, 0) == 1);
    CHECK(s_sum_closed(3, 1) == 0);
    CHECK(s_sum_closed(4, -3) == 1);  // -2 alpha_4(-3) + 3
    CHECK(std::abs(s_sum_bruteforce(2, 0) - cplx(1.0)) < 1e-12);
    CHECK(std::abs(s_sum_bruteforce(3, 1)) < 1e-12);
    CHECK(std::abs(s_sum_bruteforce(6, 7) - cplx(double(s_sum_closed(6, 7)))) < 1e-10);
    double worst_imag = 0.0;
    for (int m = 2; m <= 12; ++m)
        for (int k = -15; k <= 15; ++k)
            worst_imag = std::max(worst_imag, std::abs(s_sum_bruteforce(m, k).imag()));
    CHECK(worst_imag < 1e-10);
}

TEST_CASE("zero sums vanish identically") {
    CHECK(zero_sum(2, 1) == std::pair<std::int64_t, std::int64_t>(0, 0));
    CHECK(zero_sum(7, 3) == std::pair<std::int64_t, std::int64_t>(0, 0));
    CHECK(zero_sum(13, 0) == std::pair<std::int64_t, std::int64_t>(0, 0));
}

TEST_CASE("beta closed form vs brute force") {
    CHECK(beta_closed(2, 1) == Rational(-1, 4));
    CHECK(beta_closed(3, 0) == Rational(4, 9));
    CHECK(beta_closed(5, 10) == Rational(4, 5));
    CHECK(beta_bruteforce(2, 1) == Rational(-1, 4));
    CHECK(beta_bruteforce(3, 1) == beta_closed(3, 1));
    CHECK(beta_bruteforce(30, 7) == beta_closed(30, 7));
}

TEST_CASE("beta brute force equals the full pre-simplification double sum") {
    // beta_j = sum_r { c-(r) ((r-n+1/2)/m - 1/2) + c+(r) ((r+n+1/2)/m - 1/2) },
    // c-+ = (2 alpha_m(r-+n)+1-m)/(2m); the r-independent pieces cancel by the
    // zero-sum identity.
    for (int m : {2, 3, 5, 12})
        for (int n : {0, 1, 4, 9}) {
            Rational full = 0;
            for (int r = 0; r < m; ++r) {
                Rational cm(2 * alpha_residue(m, r - n) + 1 - m, 2 * m);
                Rational cp(2 * alpha_residue(m, r + n) + 1 - m, 2 * m);
                full += cm * (Rational(2 * (r - n) + 1, 2 * m) - Rational(1, 2));
                full += cp * (Rational(2 * (r + n) + 1, 2 * m) - Rational(1, 2));
            }
            CHECK(full == beta_bruteforce(m, n));
        }
}

TEST_CASE("sum-level antisymmetry S_{-k} = -S_{k-1}") {
    for (int m = 2; m <= 10; ++m)
        for (int k = -20; k <= 20; ++k) {
            CHECK(s_sum_closed(m, -k) == -s_sum_closed(m, k - 1));
            CHECK(std::abs(s_sum_bruteforce(m, -k) + s_sum_bruteforce(m, k - 1)) <
                  1e-9);
        }
}

TEST_CASE("rational arithmetic sanity") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK((Rational(7, 3) * Rational(3, 7)).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK(Rational(5, -10).str() == "-1/2");
}
