#pragma once

#include <array>
#include <initializer_list>

#include "bernoulli.hpp"
#include "core.hpp"

namespace rbeta {

namespace detail {

// Lanczos coefficients, g = 7, n = 9.
inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_p = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline Complex lanczos_sum(Complex zm1) {
    Complex x = lanczos_p[0];
    for (std::size_t i = 1; i < lanczos_p.size(); ++i) x += lanczos_p[i] / (zm1 + double(i));
    return x;
}

// log Gamma(z) for Re z >= 1/2.
inline Complex log_gamma_right(Complex z) {
    Complex zm1 = z - 1.0;
    Complex t = zm1 + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

inline Complex gamma_right(Complex z) {
    Complex zm1 = z - 1.0;
    Complex t = zm1 + lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::exp((zm1 + 0.5) * std::log(t) - t) * lanczos_sum(zm1);
}

}  // namespace detail

inline Complex gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at non-positive integer");
    if (z.real() < 0.5) return pi / (sin_pi(z) * detail::gamma_right(1.0 - z));
    return detail::gamma_right(z);
}

// 1/Gamma(z), entire; exact zero at the poles of Gamma.
inline Complex recip_gamma(Complex z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() < 0.5) return sin_pi(z) * detail::gamma_right(1.0 - z) / pi;
    return 1.0 / detail::gamma_right(z);
}

// log Gamma(z), determined modulo 2 pi i (exp of it is always Gamma(z)).
inline Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
    if (z.real() < 0.5) return std::log(pi) - std::log(sin_pi(z)) - detail::log_gamma_right(1.0 - z);
    return detail::log_gamma_right(z);
}

// Product of Gamma over `num` divided by product of Gamma over `den`.
// Poles in `den` give 0; poles in `num` throw.
inline Complex gamma_ratio(std::initializer_list<Complex> num, std::initializer_list<Complex> den) {
    Complex v = 1.0;
    for (Complex x : num) v *= gamma(x);
    for (Complex x : den) v *= recip_gamma(x);
    return v;
}

// (c)_n for any integer n.  A vanishing (1-c)_{|n|} for negative n is a pole
// of (c)_n and yields complex infinity.
inline Complex pochhammer(Complex c, long n) {
    if (n == 0) return 1.0;
    if (n < 0) {
        Complex d = pochhammer(1.0 - c, -n);
        if (d == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};
        return ((-n) % 2 ? -1.0 : 1.0) / d;
    }
    bool pole_c = is_nonpositive_integer(c);
    bool pole_cn = is_nonpositive_integer(c + double(n));
    if (n <= 64 || pole_c || pole_cn) {
        if (pole_c && -std::round(c.real()) < double(n)) return 0.0;
        Complex v = 1.0;
        for (long k = 0; k < n; ++k) v *= c + double(k);
        return v;
    }
    return std::exp(log_gamma(c + double(n)) - log_gamma(c));
}

namespace detail {

// B_{2k} / (2k+1)!, k = 1..20
inline const std::array<double, 20>& dilog_coefficients() {
    static const std::array<double, 20> c = [] {
        const auto& b = bernoulli_numbers();
        std::array<double, 20> out{};
        double fact = 1.0;  // (2k+1)!
        for (int k = 1; k <= 20; ++k) {
            fact *= double(2 * k) * double(2 * k + 1);
            out[k - 1] = b[2 * k] / fact;
        }
        return out;
    }();
    return c;
}

// Li2 via the Bernoulli series in u = -log(1-z); needs |u| well below 2 pi.
inline Complex dilog_bernoulli(Complex z) {
    Complex u = -log1p(-z);
    Complex u2 = u * u;
    Complex sum = u - 0.25 * u2;
    Complex p = u;
    for (double c : dilog_coefficients()) {
        p *= u2;
        Complex term = c * p;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace detail

// Principal branch of the dilogarithm, cut along (1, inf).
inline Complex dilog(Complex z) {
    const double pi2_6 = pi * pi / 6.0;
    if (z.imag() == 0.0 && z.real() > 1.0) throw BranchCutError("dilog: argument on the cut (1, inf)");
    if (z == 0.0) return 0.0;
    if (z == 1.0) return pi2_6;
    if (std::abs(z) > 1.0) {
        Complex l = std::log(-z);
        return -pi2_6 - 0.5 * l * l - dilog(1.0 / z);
    }
    if (z.real() > 0.5) {
        return pi2_6 - std::log(z) * log1p(-z) - detail::dilog_bernoulli(1.0 - z);
    }
    return detail::dilog_bernoulli(z);
}

// Integral over the real line of q^{x(x-1)/2} w^x (principal w^x).
inline Complex gaussian_q_integral(double q, Complex w) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("gaussian_q_integral: q must lie in (0,1)");
    if (w == 0.0) throw DomainError("gaussian_q_integral: w must be nonzero");
    double L = -std::log(q);
    Complex lw = std::log(w);
    return std::sqrt(2.0 * pi * w) * std::exp(lw * lw / (2.0 * L)) / (std::pow(q, 0.125) * std::sqrt(L));
}

}  // namespace rbeta
