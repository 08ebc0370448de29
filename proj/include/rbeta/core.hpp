#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rbeta {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex I{0.0, 1.0};

// Base of everything thrown by the library. kind() is a stable identifier
// that the CLI maps onto exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define RBETA_ERROR(Name)                                                   \
    struct Name : Error {                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    };

RBETA_ERROR(PoleError)
RBETA_ERROR(BranchCutError)
RBETA_ERROR(DomainError)
RBETA_ERROR(IllFormedSpec)
RBETA_ERROR(DivergentError)
RBETA_ERROR(ToleranceNotReached)
RBETA_ERROR(ConstraintViolation)
RBETA_ERROR(NotReducible)
RBETA_ERROR(OutsideAnnulus)
RBETA_ERROR(MarginViolation)
RBETA_ERROR(AnnulusViolation)
RBETA_ERROR(StripViolation)
RBETA_ERROR(PreconditionError)

#undef RBETA_ERROR

struct Tolerance {
    double abs = 0.0;
    double rel = 0.0;

    Tolerance() : abs(1e-12), rel(1e-12) {}
    Tolerance(double a, double r) : abs(a), rel(r) {
        if (!(a >= 0.0) || !(r >= 0.0) || (a == 0.0 && r == 0.0))
            throw DomainError("tolerance needs abs, rel >= 0 and one of them > 0");
    }

    // The accepted error for a result of magnitude `scale`.
    double budget(double scale) const { return std::max(abs, rel * scale); }
    bool accepts(double abs_gap, double rel_gap) const {
        return abs_gap <= abs || rel_gap <= rel;
    }
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Distance to the nearest integer n (returned through `n`).
inline double integer_distance(Complex z, long& n) {
    double r = std::round(z.real());
    n = static_cast<long>(r);
    return std::abs(z - Complex(r, 0.0));
}

inline constexpr double pole_window = 1e-14;

inline bool is_nonpositive_integer(Complex z, double window = pole_window) {
    long n;
    return integer_distance(z, n) <= window && n <= 0;
}

inline bool is_positive_integer(Complex z, double window = pole_window) {
    long n;
    return integer_distance(z, n) <= window && n >= 1;
}

// sin(pi z) and cos(pi z) with the argument reduced modulo 2 first, so that
// zeros at integers come out as (nearly) exact zeros.
inline Complex sin_pi(Complex z) {
    double n = std::round(z.real());
    Complex r = z - n;
    Complex s = std::sin(pi * r);
    return std::fmod(std::abs(n), 2.0) == 1.0 ? -s : s;
}

inline Complex cos_pi(Complex z) {
    double n = std::round(z.real());
    Complex r = z - n;
    Complex c = std::cos(pi * r);
    return std::fmod(std::abs(n), 2.0) == 1.0 ? -c : c;
}

// log(1+w) accurate for small |w|.
inline Complex log1p(Complex w) {
    double x = w.real(), y = w.imag();
    if (std::abs(w) > 0.5) return std::log(1.0 + w);
    return {0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x)};
}

}  // namespace rbeta
