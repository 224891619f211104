#pragma once

#include <functional>

#include "seltrace/errors.hpp"

namespace seltrace {

struct QuadResult {
    cplx value{0.0, 0.0};
    double error = 0.0;  // absolute error estimate
    long evaluations = 0;

    QuadResult& operator+=(const QuadResult& o) {
        value += o.value;
        error += o.error;
        evaluations += o.evaluations;
        return *this;
    }
};

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-12;
    int max_intervals = 4000;
    bool throw_on_failure = true;
};

using Integrand = std::function<cplx(double)>;

// Adaptive 15-point Gauss-Kronrod on [a, b].
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opt = {});

// Integral over [0, inf): adaptive on [0, split], then t -> 1/x on the tail.
QuadResult integrate_half_line(const Integrand& f, const QuadOptions& opt = {},
                               double split = 1.0);

// Integral over [lo, inf) via the same tail mapping (lo > 0).
QuadResult integrate_tail(const Integrand& f, double lo, const QuadOptions& opt = {});

// Integral over the whole real line of an even-or-not integrand, folded as
// f(x) + f(-x) on [0, inf).
QuadResult integrate_real_line(const Integrand& f, const QuadOptions& opt = {},
                               double split = 1.0);

}  // namespace seltrace
