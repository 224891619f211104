#include "seltrace/residues.hpp"

#include <cmath>

namespace seltrace {

std::int64_t alpha_residue(std::int64_t m, std::int64_t k) {
    if (m < 2) throw DomainError("alpha_residue: m must be >= 2");
    std::int64_t r = k % m;
    return r < 0 ? r + m : r;
}

std::int64_t s_sum_closed(std::int64_t m, std::int64_t k) {
    return -2 * alpha_residue(m, k) + m - 1;
}

cplx s_sum_bruteforce(std::int64_t m, std::int64_t k) {
    if (m < 2) throw DomainError("s_sum_bruteforce: m must be >= 2");
    const double pi = 3.14159265358979323846;
    cplx sum = 0.0;
    for (std::int64_t l = 1; l < m; ++l) {
        double theta = pi * double(l) / double(m);
        double phase = -theta * double(2 * k + 1);
        sum += cplx(0.0, 1.0) / std::sin(theta) * std::polar(1.0, phase);
    }
    return sum;
}

std::pair<std::int64_t, std::int64_t> zero_sum(std::int64_t m, std::int64_t n) {
    if (m < 2) throw DomainError("zero_sum: m must be >= 2");
    std::int64_t minus = 0, plus = 0;
    for (std::int64_t r = 0; r < m; ++r) {
        minus += -2 * alpha_residue(m, r - n) + m - 1;
        plus += -2 * alpha_residue(m, r + n) + m - 1;
    }
    return {minus, plus};
}

Rational beta_closed(std::int64_t m, std::int64_t n) {
    if (m < 2) throw DomainError("beta_closed: m must be >= 2");
    std::int64_t a = alpha_residue(m, n);
    return Rational(m * m - 1, 6 * m) - Rational(a * (m - a), m);
}

Rational beta_bruteforce(std::int64_t m, std::int64_t n) {
    if (m < 2) throw DomainError("beta_bruteforce: m must be >= 2");
    Rational sum = 0;
    for (std::int64_t r = 0; r < m; ++r) {
        std::int64_t cm = 2 * alpha_residue(m, r - n) + 1 - m;
        std::int64_t cp = 2 * alpha_residue(m, r + n) + 1 - m;
        sum += Rational(r) * (Rational(cm, 2 * m) + Rational(cp, 2 * m));
    }
    return sum / Rational(m);
}

}  // namespace seltrace
