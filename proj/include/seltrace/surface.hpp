#pragma once

#include <vector>

#include "seltrace/errors.hpp"
#include "seltrace/rational.hpp"

namespace seltrace {

// Orbifold type (g; q; m_1..m_v).  Validated at construction: every order
// >= 2 (stored sorted ascending) and the hyperbolic area positive,
//   2g - 2 + q + sum (1 - 1/m_j) > 0.
class SurfaceSignature {
public:
    SurfaceSignature(int genus, int cusps, std::vector<int> elliptic_orders);

    int genus() const { return genus_; }
    int cusps() const { return cusps_; }
    const std::vector<int>& elliptic_orders() const { return orders_; }

private:
    int genus_;
    int cusps_;
    std::vector<int> orders_;
};

// |X| / (2 pi) = 2g - 2 + q + sum (1 - 1/m_j), exact.
Rational area_rational(const SurfaceSignature& sig);

// Hyperbolic area |X| = 2 pi (2g - 2 + q + sum (1 - 1/m_j)).
double area(const SurfaceSignature& sig);

// Dimension of the space of holomorphic n-differentials:
//   d_0 = 1, d_1 = g,
//   d_n = (2n-1)(g-1) + (n-1) q + sum floor(n - n/m_j)   for n >= 2.
// The floor form is cross-checked against the half-integer combination of
// area and residue data; disagreement raises InternalError.
int dim_holomorphic(const SurfaceSignature& sig, int n);

// d_n recovered as (2n-1) times the residue at s=0 of the geometric trace,
// assembled exactly over rationals from the pole ledger:
//   psi(s) in the identity term        -> +(2n-1) |X| / (4 pi)
//   psi(s/m) in the elliptic r=0 term  -> +(m - 1 - 2 alpha_m(-n)) / (2m)
//   psi(s) in the parabolic bracket    -> -q/2
//   zero of Z(s+n) at s=0              -> +1 when n = 1
Rational dim_via_residue(const SurfaceSignature& sig, int n);

}  // namespace seltrace
