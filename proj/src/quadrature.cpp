#include "seltrace/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace seltrace {

namespace {

// QUADPACK dqk15 abscissae/weights (positive half; node 7 is the midpoint).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    cplx value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const Integrand& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    cplx fc = f(mid);
    cplx k15 = kWgk[7] * fc;
    cplx g7 = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);

    cplx fv[7][2];
    for (int i = 0; i < 7; ++i) {
        double dx = half * kXgk[i];
        fv[i][0] = f(mid - dx);
        fv[i][1] = f(mid + dx);
        cplx pair = fv[i][0] + fv[i][1];
        k15 += kWgk[i] * pair;
        resabs += kWgk[i] * (std::abs(fv[i][0]) + std::abs(fv[i][1]));
        if (i % 2 == 1) g7 += kWg[i / 2] * pair;
    }

    // QUADPACK-style sharpened error estimate.
    cplx mean = k15 * 0.5;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv[i][0] - mean) + std::abs(fv[i][1] - mean));
    resasc *= half;

    double err = std::abs(k15 - g7) * half;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    double round = 50.0 * 1.11e-16 * resabs * half;
    err = std::max(err, round);
    return {a, b, k15 * half, err};
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opt) {
    QuadResult out;
    if (a == b) return out;

    std::priority_queue<Panel> panels;
    Panel first = gk15(f, a, b);
    out.evaluations = 15;
    cplx total = first.value;
    double total_err = first.error;
    panels.push(first);

    int used = 1;
    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
           used < opt.max_intervals) {
        Panel worst = panels.top();
        panels.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b) {
            // Interval at machine resolution; accept its estimate.
            // Re-queue with zero error so it no longer drives refinement.
            worst.error = 0.0;
            panels.push(worst);
            total_err = 0.0;
            for (auto copy = panels; !copy.empty(); copy.pop()) total_err += copy.top().error;
            continue;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++used;
    }

    ensure_finite(total, "integrate");
    if (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
        opt.throw_on_failure)
        throw ConvergenceError("integrate: error estimate stalled above tolerance");
    out.value = total;
    out.error = total_err;
    return out;
}

QuadResult integrate_half_line(const Integrand& f, const QuadOptions& opt, double split) {
    QuadResult head = integrate(f, 0.0, split, opt);
    QuadResult tail = integrate_tail(f, split, opt);
    head += tail;
    return head;
}

QuadResult integrate_tail(const Integrand& f, double lo, const QuadOptions& opt) {
    if (!(lo > 0.0)) throw DomainError("integrate_tail: lower bound must be positive");
    // t in [lo, inf) -> x = lo/t in (0, 1]:  dt = lo/x^2 dx.
    Integrand mapped = [&f, lo](double x) -> cplx {
        double t = lo / x;
        return f(t) * (lo / (x * x));
    };
    return integrate(mapped, 0.0, 1.0, opt);
}

QuadResult integrate_real_line(const Integrand& f, const QuadOptions& opt, double split) {
    Integrand folded = [&f](double x) { return f(x) + f(-x); };
    return integrate_half_line(folded, opt, split);
}

}  // namespace seltrace
