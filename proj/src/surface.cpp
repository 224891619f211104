#include "seltrace/surface.hpp"

#include <algorithm>
#include <cmath>

#include "seltrace/residues.hpp"

namespace seltrace {

SurfaceSignature::SurfaceSignature(int genus, int cusps, std::vector<int> elliptic_orders)
    : genus_(genus), cusps_(cusps), orders_(std::move(elliptic_orders)) {
    if (genus_ < 0 || cusps_ < 0)
        throw DomainError("SurfaceSignature: genus and cusps must be nonnegative");
    std::sort(orders_.begin(), orders_.end());
    for (int m : orders_)
        if (m < 2) throw DomainError("SurfaceSignature: elliptic orders must be >= 2");
    Rational a = Rational(2 * genus_ - 2 + cusps_);
    for (int m : orders_) a += Rational(m - 1, m);
    if (!(Rational(0) < a))
        throw DomainError("SurfaceSignature: hyperbolic area not positive (not cofinite)");
}

Rational area_rational(const SurfaceSignature& sig) {
    Rational a = Rational(2 * sig.genus() - 2 + sig.cusps());
    for (int m : sig.elliptic_orders()) a += Rational(m - 1, m);
    return a;
}

double area(const SurfaceSignature& sig) {
    double v = 2.0 * 3.14159265358979323846 * area_rational(sig).to_double();
    if (!(v > 0.0)) throw DomainError("area: nonpositive");
    return v;
}

int dim_holomorphic(const SurfaceSignature& sig, int n) {
    if (n < 0) throw DomainError("dim_holomorphic: n must be nonnegative");
    if (n == 0) return 1;  // constants
    if (n == 1) return sig.genus();

    // Floor form.
    std::int64_t d = std::int64_t(2 * n - 1) * (sig.genus() - 1) +
                     std::int64_t(n - 1) * sig.cusps();
    for (int m : sig.elliptic_orders()) d += n - (n + m - 1) / m;  // floor(n - n/m)

    // Half-integer form: (2n-1)/2 [2g-2+q+sum(1-1/m)]
    //                    + (1/2) sum (m-1-2 alpha_m(-n))/m - q/2.
    Rational alt = Rational(2 * n - 1, 2) * area_rational(sig) - Rational(sig.cusps(), 2);
    for (int m : sig.elliptic_orders())
        alt += Rational(m - 1 - 2 * alpha_residue(m, -n), 2 * m);
    if (!alt.is_integer() || alt.num() != d)
        throw InternalError("dim_holomorphic: floor and residue-coefficient forms disagree");
    return int(d);
}

Rational dim_via_residue(const SurfaceSignature& sig, int n) {
    if (n < 1) throw DomainError("dim_via_residue: defined for n >= 1");
    // (2n-1) * [ residue of the identity term:  -(|X|/4pi) psi(s) has
    //            residue +|X|/4pi at s=0 ]
    Rational d = Rational(2 * n - 1, 2) * area_rational(sig);
    // Elliptic r=0 pole of psi((s+r)/m_j): residue -m against coefficient
    // (2 alpha_m(-n)+1-m)/(2m^2), divided by (2n-1) and scaled back.
    for (int m : sig.elliptic_orders())
        d += Rational(m - 1 - 2 * alpha_residue(m, -n), 2 * m);
    // Parabolic (q/2) psi(s) pole.
    d -= Rational(sig.cusps(), 2);
    // Order-1 zero of Z(s+n) at s=0, present only for n=1.
    if (n == 1) d += Rational(1);
    return d;
}

}  // namespace seltrace
