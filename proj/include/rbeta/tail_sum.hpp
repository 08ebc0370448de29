#pragma once

#include <vector>

#include "bernoulli.hpp"
#include "core.hpp"

namespace rbeta {

// Coefficients e_k of the large-x expansion
//   prod_j Gamma(x + alpha_j) / Gamma(x + beta_j)
//     ~ x^{sum(alpha - beta)} * sum_k e_k x^{-k}.
inline std::vector<Complex> gamma_ratio_expansion(const std::vector<Complex>& alpha,
                                                  const std::vector<Complex>& beta, int terms) {
    std::vector<Complex> L(terms + 1, 0.0);  // log-series coefficients
    for (int n = 1; n <= terms; ++n) {
        Complex s = 0.0;
        for (Complex a : alpha) s += bernoulli_poly(n + 1, a);
        for (Complex b : beta) s -= bernoulli_poly(n + 1, b);
        L[n] = (n % 2 ? 1.0 : -1.0) * s / double(n * (n + 1));
    }
    std::vector<Complex> e(terms + 1, 0.0);
    e[0] = 1.0;
    for (int k = 1; k <= terms; ++k) {
        Complex s = 0.0;
        for (int n = 1; n <= k; ++n) s += double(n) * L[n] * e[k - n];
        e[k] = s / double(k);
    }
    return e;
}

inline Complex eval_expansion(const std::vector<Complex>& e, Complex inv_x) {
    Complex v = 0.0;
    for (auto it = e.rbegin(); it != e.rend(); ++it) v = v * inv_x + *it;
    return v;
}

struct TailSum {
    Complex value = 0.0;
    double err = 0.0;
};

namespace detail {

// sum_{n >= N} n^{-s}, Euler-Maclaurin at N (Re s > 1).
inline TailSum zeta_tail(Complex s, double N) {
    const auto& B = bernoulli_numbers();
    Complex Ns = std::pow(N, -s);
    TailSum t;
    t.value = N * Ns / (s - 1.0) + 0.5 * Ns;
    Complex poch = s;  // (s)_{2j-1}
    Complex pw = Ns / N;
    double fact = 2.0;  // (2j)!
    double last = std::abs(t.value);
    for (int j = 1; j <= 18; ++j) {
        Complex term = B[2 * j] / fact * poch * pw;
        if (std::abs(term) > last) break;
        t.value += term;
        last = std::abs(term);
        t.err = last;
        if (last < 1e-18 * std::abs(t.value)) break;
        poch *= (s + double(2 * j - 1)) * (s + double(2 * j));
        pw /= N * N;
        fact *= double(2 * j + 1) * double(2 * j + 2);
    }
    return t;
}

// Taylor coefficients of 1/(1 - z e^h).
inline std::vector<Complex> apostol_coefficients(Complex z, int K) {
    std::vector<Complex> a(K + 1);
    std::vector<double> inv_fact(K + 2, 1.0);
    for (int k = 1; k <= K + 1; ++k) inv_fact[k] = inv_fact[k - 1] / double(k);
    Complex d = 1.0 - z;
    for (int k = 0; k <= K; ++k) {
        Complex s = (k == 0) ? 1.0 : 0.0;
        for (int j = 0; j < k; ++j) s += z * a[j] * inv_fact[k - j];
        a[k] = s / d;
    }
    return a;
}

// sum_{n >= N} z^n n^{-s} for z != 1 via sum_k a_k g^{(k)}(N).
inline TailSum geometric_tail(Complex z, Complex s, double N, const std::vector<Complex>& a) {
    TailSum t;
    Complex zN = std::exp(N * std::log(z));
    Complex g = std::pow(N, -s);  // (-1)^k (s)_k N^{-s-k}
    double last = std::numeric_limits<double>::infinity(), before = last;
    int quiet = 0;
    for (std::size_t k = 0; k < a.size(); ++k, g *= -(s + double(k - 1)) / N) {
        Complex term = a[k] * g;
        double m = std::abs(term);
        // z = -1 has a_2 = a_4 = ... = 0 (up to rounding): skip those
        if (k > 0 && m <= 1e-12 * last) continue;
        // near z = -1 the even terms are small but not zero, so the
        // terms alternate in size; compare against the last two
        double env = std::max(last, before);
        if (k > 2 && m > env) break;
        t.value += term;
        t.err = k == 0 ? m : std::max(m, last);
        before = last;
        last = m;
        if (k > 2 && std::max(m, before) < 1e-18 * std::abs(t.value) && ++quiet >= 2) break;
    }
    t.value *= zN;
    t.err *= std::abs(zN);
    return t;
}

}  // namespace detail

// sum_{n >= N} z^n sum_k e_k n^{-(s + k)} for |z| <= 1; with z = 1 this
// needs Re s > 1.
inline TailSum power_tail(Complex z, Complex s, const std::vector<Complex>& e, double N) {
    TailSum out;
    bool unit = std::abs(z - 1.0) < 1e-15;
    std::vector<Complex> a;
    if (!unit) a = detail::apostol_coefficients(z, 48);
    double last = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0.0) continue;
        TailSum t = unit ? detail::zeta_tail(s + double(k), N) : detail::geometric_tail(z, s + double(k), N, a);
        out.value += e[k] * t.value;
        out.err += std::abs(e[k]) * t.err;
        last = std::abs(e[k] * t.value);
    }
    out.err += last;  // truncation of the expansion itself
    return out;
}

struct LevinResult {
    Complex value = 0.0;
    double err = 0.0;
    int order = 0;
};

// Levin u-transform of the partial sums of `terms` (terms[0] first),
// returning the order with the smallest gap to its predecessor.
inline LevinResult levin_u(const std::vector<Complex>& terms, double beta = 1.0, int max_order = 40) {
    LevinResult best;
    best.err = std::numeric_limits<double>::infinity();
    int n = static_cast<int>(terms.size());
    if (n == 0) return best;
    std::vector<Complex> S(n);
    Complex acc = 0.0;
    for (int i = 0; i < n; ++i) S[i] = acc += terms[i];
    Complex prev = S[0];
    int top = std::min(max_order, n - 1);
    for (int k = 1; k <= top; ++k) {
        Complex num = 0.0, den = 0.0;
        double binom = 1.0;
        bool ok = true;
        for (int j = 0; j <= k; ++j) {
            if (terms[j] == 0.0) {
                ok = false;
                break;
            }
            double c = binom * std::pow((beta + j) / (beta + k), k - 1) * ((j % 2) ? -1.0 : 1.0);
            Complex w = 1.0 / ((beta + j) * terms[j]);
            num += c * S[j] * w;
            den += c * w;
            binom = binom * double(k - j) / double(j + 1);
        }
        if (!ok) break;
        Complex L = num / den;
        double gap = std::abs(L - prev);
        if (is_finite(L) && gap < best.err) {
            best.value = L;
            best.err = gap;
            best.order = k;
        }
        prev = L;
    }
    return best;
}

}  // namespace rbeta
