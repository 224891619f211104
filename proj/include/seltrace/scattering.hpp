#pragma once

#include <functional>
#include <vector>

#include "seltrace/errors.hpp"
#include "seltrace/quadrature.hpp"

namespace seltrace {

// phi(s) = sqrt(pi) Gamma(s-1/2) zeta(2s-1) / (Gamma(s) zeta(2s)).
// Closed-form scattering determinant of the modular surface, used as the
// built-in single-cusp test fixture.  phi(1/2) = -1 (the Gamma(s-1/2) pole
// cancels against the zeta(2s) pole).
cplx phi_modular(cplx s);

// phi'/phi for the fixture; stable through s = 1/2 + ir with small r.
cplx phi_modular_log_deriv(cplx s);

// Weight-shift relation  phi(s; n) = Gamma(s)^2 / (Gamma(s+n) Gamma(s-n)) * phi(s; 0).
cplx weight_shift(cplx s, int n, cplx phi0);

struct SigmaValue {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
};

struct ScatteringSample {
    double r;
    cplx phi_log_deriv;  // phi'/phi(1/2 + i r)
};

// Pluggable source of phi(s), phi'/phi and Tr Phi(1/2).
//   None    - q = 0, every scattering quantity vanishes.
//   Modular - the closed-form fixture above, q = 1.
//   Sampled - a table of phi'/phi(1/2+ir) values plus Tr Phi(1/2); cubic
//             local interpolation inside the table, algebraic decay with a
//             declared exponent beyond it.  phi(s) itself is unavailable.
//   Custom  - caller-supplied phi closure (test fixtures such as constant phi).
class ScatteringModel {
public:
    enum class Kind { None, Modular, Sampled, Custom };

    static ScatteringModel none();
    static ScatteringModel modular();
    static ScatteringModel sampled(int q, double trace_phi_half,
                                   std::vector<ScatteringSample> samples,
                                   double tail_exponent);
    static ScatteringModel custom(int q, std::function<cplx(cplx)> phi,
                                  std::function<cplx(double)> phi_log_deriv_line,
                                  double trace_phi_half);

    Kind kind() const { return kind_; }
    int cusps() const { return cusps_; }
    bool has_full_phi() const;

    cplx phi(cplx s) const;                  // ModelError when unavailable
    cplx phi_log_deriv_line(double r) const; // phi'/phi(1/2 + i r)
    double trace_phi_half() const;

    const std::vector<ScatteringSample>& samples() const { return samples_; }
    double tail_exponent() const { return tail_exponent_; }

private:
    ScatteringModel() = default;
    Kind kind_ = Kind::None;
    int cusps_ = 0;
    double trace_phi_half_ = 0.0;
    double tail_exponent_ = 0.0;
    std::vector<ScatteringSample> samples_;
    std::function<cplx(cplx)> custom_phi_;
    std::function<cplx(double)> custom_line_;
};

// A = Tr[I - Phi(1/2)] = q - Tr Phi(1/2); validated to lie within 1e-8 of an
// even nonnegative integer and rounded.
double a_constant(const ScatteringModel& model);

// Smooth component of phi'/phi(1/2+ir) for the modular fixture:
//   S(r) = 2 log 2pi + Re psi(1+ir) - Re psi(1/2+ir) - 2 Re psi(1+2ir).
// The remainder  -2[zeta'/zeta(1+2ir) + zeta'/zeta(1-2ir)]  is Dirichlet-
// oscillatory; its weighted integral over the whole line has the closed form
// used inside sigma_integral.
double modular_line_smooth(double r);

// Sigma(s) = (1/2pi) * integral over r of phi'/phi(1/2+ir) / (r^2 + beta^2),
// beta = s + n - 1/2.  Modular: smooth part by adaptive quadrature on [-R,R]
// plus mapped tail, oscillatory part in closed form -(2/beta) zeta'/zeta(1+2beta).
// Sampled: interpolated table plus declared algebraic tail.  None: exactly 0.
SigmaValue sigma_integral(int n, cplx s, const ScatteringModel& model,
                          double initial_radius = 100.0);

// Maass-Selberg right-hand side for the single-cusp diagonal case:
//   Y^{s1+cs2-1}/(s1+cs2-1) + phi(s1) Y^{cs2-s1}/(cs2-s1)
//   + conj(phi(s2)) Y^{s1-cs2}/(s1-cs2) - phi(s1) conj(phi(s2)) Y^{1-s1-cs2}/(s1+cs2-1)
// with cs2 = conj(s2).
cplx maass_selberg_general(cplx s1, cplx s2, double Y, const ScatteringModel& model);

// Y -> infinity form on the critical line:
//   (1/2ir) Tr[Phi(1/2-ir) Y^{2ir} - Phi(1/2+ir) Y^{-2ir}] + 2q log Y
//   - phi'/phi(1/2+ir).
// Real for unitary Phi; the imaginary residual is reported via *imag_residual.
double maass_selberg_limit(double r, double Y, const ScatteringModel& model,
                           double* imag_residual = nullptr);

}  // namespace seltrace
