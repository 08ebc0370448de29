#pragma once

#include <vector>

#include "core.hpp"

namespace rbeta {

struct GaussRule {
    std::vector<double> x, w;  // nodes and weights on [-1, 1]
};

namespace detail {

inline GaussRule make_gauss_legendre(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute the derivative at the converged node
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

}  // namespace detail

inline const GaussRule& gauss_legendre(int n) {
    static const GaussRule g12 = detail::make_gauss_legendre(12);
    static const GaussRule g24 = detail::make_gauss_legendre(24);
    if (n == 12) return g12;
    if (n == 24) return g24;
    throw DomainError("gauss_legendre: only orders 12 and 24 are tabulated");
}

template <class F>
Complex gauss_panel(F&& f, double a, double b, const GaussRule& rule) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Complex s = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * f(c + h * rule.x[i]);
    return h * s;
}

struct PanelSum {
    Complex value = 0.0;
    double err = 0.0;
    int panels = 0;
};

// Sum of 24-point panels over consecutive breakpoints; the error of each
// panel is taken as its gap to the 12-point rule.
template <class F>
PanelSum panel_quadrature(F&& f, const std::vector<double>& breaks) {
    const GaussRule& lo = gauss_legendre(12);
    const GaussRule& hi = gauss_legendre(24);
    PanelSum out;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double a = breaks[i], b = breaks[i + 1];
        if (b <= a) continue;
        Complex vh = gauss_panel(f, a, b, hi);
        Complex vl = gauss_panel(f, a, b, lo);
        out.value += vh;
        out.err += std::abs(vh - vl);
        ++out.panels;
    }
    return out;
}

// Uniform breakpoints covering [a, b] with spacing at most h.
inline std::vector<double> uniform_breaks(double a, double b, double h) {
    long n = std::max(1L, static_cast<long>(std::ceil((b - a) / h - 1e-12)));
    std::vector<double> br(n + 1);
    for (long i = 0; i <= n; ++i) br[i] = a + (b - a) * double(i) / double(n);
    br[n] = b;
    return br;
}

// tanh-sinh rule on [a, b].  f is called as f(x, dl, dr) with dl = x - a and
// dr = b - x computed without cancellation, so endpoint singularities can be
// evaluated accurately.
template <class F>
PanelSum tanh_sinh(F&& f, double a, double b, double tol = 1e-14, int max_level = 10) {
    const double half = 0.5 * (b - a);
    auto point = [&](double t, Complex& acc) {
        double s = 0.5 * pi * std::sinh(t);
        double e = std::exp(-std::abs(s));
        // 1 - tanh|s| = 2e^{-2|s|}/(1+e^{-2|s|}),  1/cosh^2 s = 4e^{-2|s|}/(1+e^{-2|s|})^2
        double comp = 2.0 * e * e / (1.0 + e * e);
        double w = 2.0 * pi * std::cosh(t) * e * e / ((1.0 + e * e) * (1.0 + e * e));
        double d = half * comp;  // distance to the nearer endpoint
        if (d <= 0.0) return;
        double x, dl, dr;
        if (s >= 0) {
            x = b - d;
            dr = d;
            dl = 2.0 * half - d;
        } else {
            x = a + d;
            dl = d;
            dr = 2.0 * half - d;
        }
        acc += w * f(x, dl, dr);
    };
    const double tmax = 6.2;  // endpoint distances down to ~1e-300
    double h = 0.5;
    Complex acc = 0.0;
    point(0.0, acc);
    for (double t = h; t <= tmax; t += h) {
        point(t, acc);
        point(-t, acc);
    }
    Complex prev = half * h * acc;
    PanelSum out;
    out.value = prev;
    out.err = std::abs(prev);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        for (double t = h; t <= tmax; t += 2.0 * h) {
            point(t, acc);
            point(-t, acc);
        }
        Complex cur = half * h * acc;
        out.err = std::abs(cur - prev);
        out.value = cur;
        out.panels = level;
        if (out.err <= tol * std::max(1.0, std::abs(cur)) && level >= 3) break;
        prev = cur;
    }
    return out;
}

}  // namespace rbeta
