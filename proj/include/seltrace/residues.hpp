#pragma once

#include <cstdint>
#include <utility>

#include "seltrace/errors.hpp"
#include "seltrace/rational.hpp"

namespace seltrace {

// alpha_m(k) = m {k/m}, the least nonnegative residue of k modulo m.
std::int64_t alpha_residue(std::int64_t m, std::int64_t k);

// S_k = -2 alpha_m(k) + m - 1 (closed form of the roots-of-unity sum).
std::int64_t s_sum_closed(std::int64_t m, std::int64_t k);

// S_k by its defining sum  sum_{l=1}^{m-1} (i / sin(pi l/m)) e^{-pi i l (2k+1)/m}.
cplx s_sum_bruteforce(std::int64_t m, std::int64_t k);

// The pair ( sum_r (-2 alpha_m(r-n)+m-1), sum_r (-2 alpha_m(r+n)+m-1) ),
// r over a complete residue system; both vanish identically.
std::pair<std::int64_t, std::int64_t> zero_sum(std::int64_t m, std::int64_t n);

// beta_j closed form  (m^2-1)/(6m) - alpha_m(n)(m - alpha_m(n))/m.
Rational beta_closed(std::int64_t m, std::int64_t n);

// beta_j by the double sum  (1/m) sum_r r [ (2 alpha_m(r-n)+1-m)/(2m)
//                                          + (2 alpha_m(r+n)+1-m)/(2m) ].
Rational beta_bruteforce(std::int64_t m, std::int64_t n);

}  // namespace seltrace
