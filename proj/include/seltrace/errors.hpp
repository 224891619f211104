#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace seltrace {

using cplx = std::complex<double>;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument sits on (or within 1e-14 of) a pole of the evaluated function.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Argument outside the documented domain of validity.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// An iterative scheme (quadrature, series, domain doubling) failed to reach
// its error target within its budget.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// A scattering model cannot supply the quantity requested.
struct ModelError : Error {
    explicit ModelError(const std::string& msg) : Error(msg) {}
};

// Two routes that must agree exactly disagreed; indicates a bug, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

// A self-consistency diagnostic fell outside its hard bound.
struct DiagnosticError : Error {
    explicit DiagnosticError(const std::string& msg) : Error(msg) {}
};

// Absolute distance below which an argument counts as sitting on a pole.
inline constexpr double kPoleTolerance = 1e-14;

inline void ensure_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite result");
}

inline void ensure_finite(const cplx& z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError(std::string(what) + ": non-finite result");
}

}  // namespace seltrace
