#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bilateral.hpp"
#include "gamma.hpp"
#include "quadrature.hpp"
#include "record.hpp"
#include "tail_sum.hpp"

namespace rbeta {

// coeff * exp(i freq x)
struct TrigTerm {
    Complex coeff;
    double freq;
};

// c cos(w x) as two exponentials.
inline std::vector<TrigTerm> cos_weight(Complex c, double w) { return {{0.5 * c, w}, {0.5 * c, -w}}; }

inline std::vector<TrigTerm> sin_weight(Complex c, double w) { return {{-0.5 * I * c, w}, {0.5 * I * c, -w}}; }

// sin(m pi x) / sin(pi x) = sum_{k=0}^{m-1} exp(i pi (m-1-2k) x)
inline std::vector<TrigTerm> weight_g(int m) {
    if (m < 0) throw DomainError("weight_g needs m >= 0");
    if (m == 0) return {{0.0, 0.0}};
    std::vector<TrigTerm> w;
    for (int k = 0; k < m; ++k) w.push_back({1.0, pi * double(m - 1 - 2 * k)});
    return w;
}

inline std::vector<TrigTerm> operator+(std::vector<TrigTerm> a, const std::vector<TrigTerm>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// f(x) = 1 / prod_j Gamma(1 + a_j + x) Gamma(1 + b_j - x), times weight(x) e^{-ixt}.
struct IntegrandSpec {
    int m = 1;
    std::vector<Complex> a, b;
    double t = 0.0;
    std::vector<TrigTerm> weight;  // empty means 1
};

struct QuadratureResult {
    Complex value = 0.0;
    double est_error = 0.0;
    int panels = 0;
    double truncation_X = 0.0;
};

inline void validate(const IntegrandSpec& s) {
    if (s.m < 1) throw PreconditionError("m must be positive");
    if (s.a.size() != std::size_t(s.m) || s.b.size() != std::size_t(s.m))
        throw PreconditionError("a and b need m entries each");
    if (!std::isfinite(s.t)) throw PreconditionError("t must be finite");
    for (const auto& w : s.weight)
        if (!std::isfinite(w.freq) || !is_finite(w.coeff)) throw PreconditionError("weight terms must be finite");
}

// sum_j Re(a_j + b_j + 1) - 1; must be positive.
inline double integrability_margin(const IntegrandSpec& s) {
    double m = -1.0;
    for (int j = 0; j < s.m; ++j) m += (s.a[j] + s.b[j]).real() + 1.0;
    return m;
}

inline Complex ramanujan_f(const IntegrandSpec& s, double x) {
    Complex v = 1.0;
    for (int j = 0; j < s.m; ++j) v *= recip_gamma(1.0 + s.a[j] + x) * recip_gamma(1.0 + s.b[j] - x);
    return v;
}

inline Complex weight_at(const std::vector<TrigTerm>& w, double x) {
    if (w.empty()) return 1.0;
    Complex v = 0.0;
    for (const auto& t : w) v += t.coeff * std::exp(I * (t.freq * x));
    return v;
}

inline Complex ramanujan_integrand(const IntegrandSpec& s, double x) {
    return ramanujan_f(s, x) * weight_at(s.weight, x) * std::exp(-I * (s.t * x));
}

namespace detail {

// A sum of terms A e^{i omega x} x^{-s} sum_k e_k x^{-k} on [X, inf).
struct TailGroup {
    Complex coeff;
    double omega;
};

// int_X^inf e^{i w x} x^{-s} dx for |w| X large, by repeated integration by parts.
inline TailSum oscillatory_ibp(double w, Complex s, double X) {
    TailSum out;
    Complex iw = I * w;
    Complex fac = -std::exp(iw * X) / iw * std::pow(X, -s);
    Complex term = fac;
    double last = std::abs(term);
    for (int j = 0; j < 200; ++j) {
        out.value += term;
        Complex next = term * (s + double(j)) / (iw * X);
        double mn = std::abs(next);
        if (mn > last) break;
        last = mn;
        term = next;
        if (mn < 1e-19 * std::abs(out.value)) break;
    }
    out.err = last;
    return out;
}

// int_X^inf e^{i w x} x^{-s} sum_k e_k x^{-k} dx.
inline TailSum tail_group_integral(double w, Complex s, const std::vector<Complex>& e, double X, int& panels) {
    TailSum out;
    if (std::abs(w) < 1e-13) {
        for (std::size_t k = 0; k < e.size(); ++k) {
            Complex sk = s + double(k);
            out.value += e[k] * std::pow(X, 1.0 - sk) / (sk - 1.0);
        }
        out.err = std::abs(out.value) * 1e-16;
        return out;
    }
    double X1 = std::max(X, (40.0 + 2.0 * std::abs(s) + 2.0 * double(e.size())) / std::abs(w));
    if (X1 > X) {
        std::vector<double> br{X};
        double cap = pi / std::abs(w);
        while (br.back() < X1) br.push_back(std::min(X1, br.back() + std::min(0.25 * br.back(), cap)));
        auto g = [&](double x) {
            Complex inv = 1.0 / x;
            return std::exp(I * (w * x)) * std::pow(x, -s) * eval_expansion(e, inv);
        };
        PanelSum ps = panel_quadrature(g, br);
        out.value += ps.value;
        out.err += ps.err;
        panels += ps.panels;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0.0) continue;
        TailSum t = oscillatory_ibp(w, s + double(k), X1);
        out.value += e[k] * t.value;
        out.err += std::abs(e[k]) * t.err;
    }
    return out;
}

// Right tail int_X^inf f(x) sum_i c_i e^{i w_i x} dx with
// f_j(x) = sin(pi(x - B_j))/pi * Gamma(x - B_j)/Gamma(x + 1 + A_j).
inline TailSum ramanujan_tail(const std::vector<Complex>& A, const std::vector<Complex>& B,
                              const std::vector<TrigTerm>& w, double X, int& panels) {
    const int m = static_cast<int>(A.size());
    // prod_j sin(pi(x - B_j))/pi = sum_l coef[l + m] e^{i pi l x}
    std::vector<Complex> coef(2 * m + 1, 0.0);
    coef[m] = 1.0;
    for (int j = 0; j < m; ++j) {
        std::vector<Complex> next(2 * m + 1, 0.0);
        Complex up = std::exp(-I * pi * B[j]) / (2.0 * I * pi), down = -std::exp(I * pi * B[j]) / (2.0 * I * pi);
        for (int l = 0; l <= 2 * m; ++l) {
            if (coef[l] == 0.0) continue;
            if (l + 1 <= 2 * m) next[l + 1] += coef[l] * up;
            if (l - 1 >= 0) next[l - 1] += coef[l] * down;
        }
        coef.swap(next);
    }
    std::vector<Complex> alpha, beta;
    Complex s = 0.0;
    for (int j = 0; j < m; ++j) {
        alpha.push_back(-B[j]);
        beta.push_back(1.0 + A[j]);
        s += 1.0 + A[j] + B[j];
    }
    std::vector<Complex> e = gamma_ratio_expansion(alpha, beta, 24);

    std::vector<TailGroup> groups;
    for (int l = 0; l <= 2 * m; ++l) {
        if (coef[l] == 0.0) continue;
        for (const auto& t : w) {
            double om = pi * double(l - m) + t.freq;
            Complex c = coef[l] * t.coeff;
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const TailGroup& g) { return std::abs(g.omega - om) < 1e-13 * (1.0 + std::abs(om)); });
            if (it == groups.end())
                groups.push_back({c, om});
            else
                it->coeff += c;
        }
    }
    TailSum out;
    double trunc = std::abs(e.back()) * std::pow(X, 1.0 - s.real() - double(e.size() - 1));
    for (const auto& g : groups) {
        if (g.coeff == 0.0) continue;
        TailSum t = tail_group_integral(g.omega, s, e, X, panels);
        out.value += g.coeff * t.value;
        out.err += std::abs(g.coeff) * (t.err + trunc);
    }
    return out;
}

inline std::vector<TrigTerm> shifted_weight(const IntegrandSpec& s, double sign) {
    std::vector<TrigTerm> w = s.weight.empty() ? std::vector<TrigTerm>{{1.0, 0.0}} : s.weight;
    for (auto& t : w) t.freq = sign * (t.freq - s.t);
    return w;
}

}  // namespace detail

// Panels on [-X, X] plus the tails |x| > X from the large-x expansion of f.
inline QuadratureResult integrate(const IntegrandSpec& spec, Tolerance tol = {}) {
    validate(spec);
    if (!(integrability_margin(spec) > 0.0)) throw MarginViolation("needs sum Re(a_j + b_j + 1) > 1");
    double pmax = 0.0, wmax = 0.0;
    for (int j = 0; j < spec.m; ++j) pmax = std::max({pmax, std::abs(spec.a[j]), std::abs(spec.b[j])});
    for (const auto& t : detail::shifted_weight(spec, 1.0)) wmax = std::max(wmax, std::abs(t.freq));
    double X = std::max(40.0, 8.0 * pmax + 24.0);
    double h = std::min(0.5, pi / (2.0 * (wmax + pi * spec.m)));

    QuadratureResult r;
    r.truncation_X = X;
    PanelSum mid = panel_quadrature([&](double x) { return ramanujan_integrand(spec, x); }, uniform_breaks(-X, X, h));
    int tail_panels = 0;
    TailSum right = detail::ramanujan_tail(spec.a, spec.b, detail::shifted_weight(spec, 1.0), X, tail_panels);
    TailSum left = detail::ramanujan_tail(spec.b, spec.a, detail::shifted_weight(spec, -1.0), X, tail_panels);
    r.value = mid.value + right.value + left.value;
    r.est_error = mid.err + right.err + left.err + 1e-16 * std::abs(r.value);
    r.panels = mid.panels + tail_panels;
    if (!is_finite(r.value)) throw ToleranceNotReached("non-finite quadrature");
    if (r.est_error > tol.budget(std::abs(r.value))) throw ToleranceNotReached("quadrature error estimate above tolerance");
    return r;
}

// int_{-pi/2}^{pi/2} (cos t)^g e^{i d t} dt against its gamma closed form.
inline VerificationRecord cauchy_integral_check(Complex g, Complex d, Tolerance tol = Tolerance(1e-12, 1e-9)) {
    Stopwatch sw;
    if (!(g.real() > -0.9)) throw MarginViolation("needs Re gamma > -0.9");
    auto f = [&](double t, double dl, double dr) {
        double c = std::sin(std::min(dl, dr));  // cos t, exact near +-pi/2
        return std::exp(g * std::log(c)) * std::exp(I * d * t);
    };
    PanelSum q = tanh_sinh(f, -0.5 * pi, 0.5 * pi, 1e-15, 12);
    Complex rhs = pi * gamma(g + 1.0) * std::pow(2.0, -g) * recip_gamma(1.0 + 0.5 * (g + d)) * recip_gamma(1.0 + 0.5 * (g - d));
    return make_record("cauchy_integral", {{"gamma", g}, {"delta", d}}, q.value, rhs, tol, sw.ms());
}

// Fourier transform of a single f_j in closed form.
inline Complex single_factor_transform(Complex a, Complex b, double t) {
    if (std::abs(t) > pi) return 0.0;
    double c = 2.0 * std::cos(0.5 * t);
    if (c == 0.0) return (a + b).real() > 0.0 ? Complex(0.0) : Complex(NAN, NAN);
    return std::pow(c, a + b) * recip_gamma(a + b + 1.0) * std::exp(-0.5 * I * t * (b - a));
}

// ---------------------------------------------------------------------------
// Lattice sums S_k(t) = (1/p) sum_l f(l + k/p) e^{-i(l + k/p)t}.

inline SeriesValue poisson_component(const IntegrandSpec& spec, long k, int p, Tolerance tol = {}) {
    validate(spec);
    if (p < 1) throw PreconditionError("p must be positive");
    const double x0 = double(k) / double(p);
    // Move the base point by an integer so that no gamma factor at it has a
    // pole; if no shift works, f vanishes on the whole lattice.
    long lo = std::numeric_limits<long>::min(), hi = std::numeric_limits<long>::max();
    for (int j = 0; j < spec.m; ++j) {
        long n;
        Complex A = spec.a[j] + 1.0 + x0, B = spec.b[j] + 1.0 - x0;
        if (integer_distance(A, n) <= pole_window) lo = std::max(lo, 1 - n);
        if (integer_distance(B, n) <= pole_window) hi = std::min(hi, n - 1);
    }
    if (lo > hi) return {0.0, 0.0, 0};
    long shift = (lo != std::numeric_limits<long>::min()) ? lo : (hi != std::numeric_limits<long>::max() ? std::min(0L, hi) : 0L);
    const double xs = x0 + double(shift);
    BilateralSeriesSpec h;
    Complex C = 1.0;
    for (int j = 0; j < spec.m; ++j) {
        C *= recip_gamma(spec.a[j] + 1.0 + xs) * recip_gamma(spec.b[j] + 1.0 - xs);
        h.c.push_back(xs - spec.b[j]);
        h.d.push_back(spec.a[j] + 1.0 + xs);
    }
    h.z = (spec.m % 2 ? -1.0 : 1.0) * std::exp(-I * spec.t);
    Complex pre = C / double(p) * std::exp(-I * (xs * spec.t));
    // the absolute tolerance is for the component, not for H
    SeriesValue H = eval_H(h, Tolerance(std::abs(pre) > 0.0 ? tol.abs / std::abs(pre) : tol.abs, tol.rel));
    return {pre * H.value, std::abs(pre) * H.est_error, H.terms_used};
}

// Plain truncated lattice sum over |l| <= L, for cross-checks.
inline Complex lattice_sum_direct(const IntegrandSpec& spec, long k, int p, long L) {
    const double x0 = double(k) / double(p);
    Complex s = 0.0;
    for (long l = -L; l <= L; ++l) {
        double x = double(l) + x0;
        s += ramanujan_f(spec, x) * std::exp(-I * (x * spec.t));
    }
    return s / double(p);
}

inline SeriesValue poisson_sum_rhs(const IntegrandSpec& spec, int p, Tolerance tol = {}) {
    validate(spec);
    if (!spec.weight.empty()) throw PreconditionError("lattice sums take an unweighted integrand");
    if (p < spec.m) throw PreconditionError("needs p >= m");
    if (std::abs(spec.t) > p * pi) throw PreconditionError("needs |t| <= p pi");
    if (!(integrability_margin(spec) > 0.0)) throw MarginViolation("needs sum Re(a_j + b_j + 1) > 1");
    SeriesValue out{0.0, 0.0, 0};
    for (int k = 0; k < p; ++k) {
        SeriesValue s = poisson_component(spec, k, p, tol);
        out.value += s.value;
        out.est_error += s.est_error;
        out.terms_used += s.terms_used;
    }
    return out;
}

// |F(t)| below tol.abs for every |t| >= m pi in t_values.
inline std::vector<VerificationRecord> support_check(const IntegrandSpec& spec, const std::vector<double>& t_values,
                                                     Tolerance tol = Tolerance(1e-9, 0.0)) {
    std::vector<VerificationRecord> out;
    for (double t : t_values) {
        if (std::abs(t) < spec.m * pi) continue;
        Stopwatch sw;
        IntegrandSpec s = spec;
        s.t = t;
        s.weight.clear();
        QuadratureResult q = integrate(s, Tolerance(1e-10, 1e-6));
        out.push_back(make_record("support", {{"m", double(spec.m)}, {"t", t}}, q.value, 0.0, tol, sw.ms()));
    }
    return out;
}

inline Complex c0_factor(const IntegrandSpec& spec) {
    Complex c = 1.0;
    for (int j = 0; j < spec.m; ++j) c *= recip_gamma(spec.a[j] + 1.0) * recip_gamma(spec.b[j] + 1.0);
    return c;
}

inline BilateralSeriesSpec h_of_integrand(const IntegrandSpec& spec, Complex z) {
    BilateralSeriesSpec h;
    for (int j = 0; j < spec.m; ++j) {
        h.c.push_back(-spec.b[j]);
        h.d.push_back(spec.a[j] + 1.0);
    }
    h.z = z;
    return h;
}

inline ParamMap integrand_inputs(const IntegrandSpec& spec) {
    ParamMap in{{"m", double(spec.m)}, {"t", spec.t}};
    for (int j = 0; j < spec.m; ++j) {
        in.push_back({"a" + std::to_string(j + 1), spec.a[j]});
        in.push_back({"b" + std::to_string(j + 1), spec.b[j]});
    }
    return in;
}

// int f(x) e^{-ixt} g_m(x) dx against C_0 mHm(-b; a+1; -e^{-it}), |t| <= pi.
inline VerificationRecord integral_repr_H(const IntegrandSpec& spec, double t, Tolerance tol = Tolerance(1e-12, 1e-8)) {
    Stopwatch sw;
    if (std::abs(t) > pi) throw PreconditionError("needs |t| <= pi");
    IntegrandSpec s = spec;
    s.t = t;
    s.weight = weight_g(spec.m);
    QuadratureResult q = integrate(s, Tolerance(1e-12, 1e-9));
    Complex rhs = c0_factor(spec) * eval_H(h_of_integrand(spec, -std::exp(-I * t))).value;
    return make_record("integral_repr_H", integrand_inputs(s), q.value, rhs, tol, sw.ms());
}

// Weight sin((m-1) pi x)/sin(pi x) gives C_0 mHm(..; 1); weight g_m gives
// C_0 mHm(..; -1).
inline VerificationRecord unit_argument_repr(const IntegrandSpec& spec, bool plus_one,
                                             Tolerance tol = Tolerance(1e-12, 1e-8)) {
    Stopwatch sw;
    IntegrandSpec s = spec;
    s.t = 0.0;
    s.weight = weight_g(plus_one ? spec.m - 1 : spec.m);
    QuadratureResult q = integrate(s, Tolerance(1e-12, 1e-9));
    Complex rhs = c0_factor(spec) * eval_H(h_of_integrand(spec, plus_one ? 1.0 : -1.0)).value;
    return make_record(plus_one ? "unit_argument_plus" : "unit_argument_minus", integrand_inputs(s), q.value, rhs, tol,
                       sw.ms());
}

// 2 sin(2 pi y) / prod Gamma(1 + c_j +- y) is odd, so its integral is 0.
inline VerificationRecord odd_part_check(const std::vector<Complex>& c, Tolerance tol = Tolerance(1e-10, 0.0)) {
    Stopwatch sw;
    IntegrandSpec s{int(c.size()), c, c, 0.0, sin_weight(2.0, 2.0 * pi)};
    QuadratureResult q = integrate(s, Tolerance(1e-10, 1e-6));
    return make_record("odd_part", integrand_inputs(s), q.value, 0.0, tol, sw.ms());
}

// ---------------------------------------------------------------------------
// Closed-form beta integrals.

enum class BetaKind {
    RamanujanM2,
    RamanujanM2Cos,
    M3Cos,
    M3Plain,
    M4Plain,
    M4VWP,
    M4VWPShifted,
    M5VWP,
    M5VWPShifted,
    M5Third,
    M6Riemann,
    M6Reduced,
    Barnes,
};

struct BetaKindInfo {
    BetaKind kind;
    const char* name;
    std::size_t arity;
    const char* constraint;
};

inline const std::vector<BetaKindInfo>& beta_kinds() {
    static const std::vector<BetaKindInfo> k = {
        {BetaKind::RamanujanM2, "RamanujanM2", 4, "Re(a1+a2+b1+b2) > -1"},
        {BetaKind::RamanujanM2Cos, "RamanujanM2Cos", 4, "a1-b1 = a2-b2 and Re(a1+a2+b1+b2) > -1"},
        {BetaKind::M3Cos, "M3Cos", 4, "Re(1+3a/2+b1+b2+b3) > 0"},
        {BetaKind::M3Plain, "M3Plain", 3, "Re(1+c1+c2+c3) > 0"},
        {BetaKind::M4Plain, "M4Plain", 4, "Re(c1+c2+c3+c4) > -3/2"},
        {BetaKind::M4VWP, "M4VWP", 4, "Re(3a+2b1+2b2+2b3) > -1"},
        {BetaKind::M4VWPShifted, "M4VWPShifted", 4, "Re(c1+c2+c3) > -1/2"},
        {BetaKind::M5VWP, "M5VWP", 5, "Re(1+2a+b1+b2+b3+b4) > 0"},
        {BetaKind::M5VWPShifted, "M5VWPShifted", 5, "Re(1+c1+c2+c3+c4) > 0"},
        {BetaKind::M5Third, "M5Third", 4, "Re(1+c1+c2+c3+c4) > 0"},
        {BetaKind::M6Riemann, "M6Riemann", 6, "Re(a1+...+a6) > -5/2"},
        {BetaKind::M6Reduced, "M6Reduced", 4, "Re(a1+a2+a3+a4) > -1"},
        {BetaKind::Barnes, "Barnes", 4, "Re a, Re b, Re c, Re d > 0"},
    };
    return k;
}

inline const BetaKindInfo& beta_kind_info(BetaKind kind) {
    for (const auto& k : beta_kinds())
        if (k.kind == kind) return k;
    throw DomainError("unknown beta kind");
}

inline std::optional<BetaKind> beta_kind_from_name(const std::string& name) {
    for (const auto& k : beta_kinds())
        if (name == k.name) return k.kind;
    return std::nullopt;
}

namespace detail {

inline Complex sum_of(const std::vector<Complex>& v, std::size_t from, std::size_t to) {
    Complex s = 0.0;
    for (std::size_t i = from; i < to; ++i) s += v[i];
    return s;
}

inline Complex recip_pair_sums(const std::vector<Complex>& c, Complex shift) {
    Complex v = 1.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) v *= recip_gamma(1.0 + shift + c[i] + c[j]);
    return v;
}

// 1 / (Gamma(a/2) Gamma(-a/2) Gamma(1-a) Gamma(1+a))
inline Complex vwp_front(Complex a) {
    return recip_gamma(0.5 * a) * recip_gamma(-0.5 * a) * recip_gamma(1.0 - a) * recip_gamma(1.0 + a);
}

inline std::vector<Complex> tail(const std::vector<Complex>& p) { return {p.begin() + 1, p.end()}; }

}  // namespace detail

inline double beta_constraint_margin(BetaKind kind, const std::vector<Complex>& p) {
    using detail::sum_of;
    const std::size_t n = p.size();
    switch (kind) {
        case BetaKind::RamanujanM2: return sum_of(p, 0, 4).real() + 1.0;
        case BetaKind::RamanujanM2Cos: return sum_of(p, 0, 4).real() + 1.0;
        case BetaKind::M3Cos: return (1.0 + 1.5 * p[0] + sum_of(p, 1, 4)).real();
        case BetaKind::M3Plain: return 1.0 + sum_of(p, 0, 3).real();
        case BetaKind::M4Plain: return sum_of(p, 0, 4).real() + 1.5;
        case BetaKind::M4VWP: return (3.0 * p[0] + 2.0 * sum_of(p, 1, 4)).real() + 1.0;
        case BetaKind::M4VWPShifted: return sum_of(p, 1, 4).real() + 0.5;
        case BetaKind::M5VWP: return (1.0 + 2.0 * p[0] + sum_of(p, 1, 5)).real();
        case BetaKind::M5VWPShifted: return 1.0 + sum_of(p, 1, 5).real();
        case BetaKind::M5Third: return 1.0 + sum_of(p, 0, 4).real();
        case BetaKind::M6Riemann: return sum_of(p, 0, n).real() + 2.5;
        case BetaKind::M6Reduced: return sum_of(p, 0, 4).real() + 1.0;
        case BetaKind::Barnes: {
            double m = p[0].real();
            for (Complex x : p) m = std::min(m, x.real());
            return m;
        }
    }
    return 0.0;
}

inline void check_beta_params(BetaKind kind, const std::vector<Complex>& p) {
    const auto& info = beta_kind_info(kind);
    if (p.size() != info.arity) throw PreconditionError(std::string(info.name) + " takes " + std::to_string(info.arity) + " parameters");
    if (kind == BetaKind::RamanujanM2Cos && std::abs((p[0] - p[2]) - (p[1] - p[3])) > 1e-12)
        throw ConstraintViolation("RamanujanM2Cos requires a1-b1 = a2-b2");
    if (!(beta_constraint_margin(kind, p) > 0.0))
        throw ConstraintViolation(std::string(info.name) + " requires " + info.constraint);
}

// The integrand whose integral beta_integral_closed(kind, p) evaluates.
// Parameter layouts:
//   RamanujanM2, RamanujanM2Cos: (a1, a2, b1, b2)
//   M3Cos, M4VWP, M5VWP: (a, b1, ..., b_k)
//   M4VWPShifted, M5VWPShifted: (a, c1, ..., c_k)
//   M3Plain, M4Plain, M5Third, M6Riemann, M6Reduced: (c1, ...)
inline IntegrandSpec beta_integrand(BetaKind kind, const std::vector<Complex>& p) {
    check_beta_params(kind, p);
    const Complex a = p[0];
    auto vwp = [&](const std::vector<Complex>& bs) {
        IntegrandSpec s;
        s.a = {0.5 * a - 1.0};
        s.b = {-0.5 * a - 1.0};
        for (Complex b : bs) {
            s.a.push_back(a + b);
            s.b.push_back(b);
        }
        s.m = int(s.a.size());
        s.weight = cos_weight(2.0, pi) + cos_weight(2.0, 3.0 * pi);
        return s;
    };
    auto shifted = [&](const std::vector<Complex>& cs) {
        IntegrandSpec s;
        s.a = {-1.0};
        s.b = {-1.0};
        for (Complex c : cs) {
            s.a.push_back(c);
            s.b.push_back(c);
        }
        s.m = int(s.a.size());
        s.weight = cos_weight(2.0 * cos_pi(0.5 * a), pi) + cos_weight(2.0 * cos_pi(1.5 * a), 3.0 * pi);
        return s;
    };
    switch (kind) {
        case BetaKind::RamanujanM2: return {2, {p[0], p[1]}, {p[2], p[3]}, 0.0, {}};
        case BetaKind::RamanujanM2Cos: return {2, {p[0], p[1]}, {p[2], p[3]}, pi, {}};
        case BetaKind::M3Cos: {
            IntegrandSpec s{3, {}, {}, 0.0, cos_weight(2.0, pi)};
            for (int j = 1; j <= 3; ++j) {
                s.a.push_back(a + p[j]);
                s.b.push_back(p[j]);
            }
            return s;
        }
        case BetaKind::M3Plain:
        case BetaKind::M4Plain:
        case BetaKind::M6Riemann: return {int(p.size()), p, p, 0.0, {}};
        case BetaKind::M4VWP:
        case BetaKind::M5VWP: return vwp(detail::tail(p));
        case BetaKind::M4VWPShifted:
        case BetaKind::M5VWPShifted: return shifted(detail::tail(p));
        case BetaKind::M5Third: {
            IntegrandSpec s{5, {-1.0}, {-1.0}, 0.0, cos_weight(1.0, pi)};
            for (Complex c : p) {
                s.a.push_back(c);
                s.b.push_back(c);
            }
            return s;
        }
        case BetaKind::M6Reduced: {
            // 1/(Gamma(2x)Gamma(-2x)) = 4 pi / (Gamma(x)Gamma(-x)Gamma(1/2+x)Gamma(1/2-x))
            IntegrandSpec s{6, p, p, 0.0, {{4.0 * pi, 0.0}}};
            s.a.push_back(-1.0);
            s.b.push_back(-1.0);
            s.a.push_back(-0.5);
            s.b.push_back(-0.5);
            return s;
        }
        case BetaKind::Barnes: throw PreconditionError("Barnes integrand is not of Ramanujan type");
    }
    throw DomainError("unknown beta kind");
}

// 2 S_k1(0) + 4 S_k2(0) for the symmetric m = p = 6 integrand.
inline SeriesValue m6_combination(const std::vector<Complex>& a, int k1, int k2, Tolerance tol = {}) {
    IntegrandSpec s{6, a, a, 0.0, {}};
    SeriesValue s1 = poisson_component(s, k1, 6, tol), s2 = poisson_component(s, k2, 6, tol);
    return {2.0 * s1.value + 4.0 * s2.value, 2.0 * s1.est_error + 4.0 * s2.est_error, s1.terms_used + s2.terms_used};
}

// S_2(0) of the reduced m = 6 case, written as a 6H6(1), with the pair
// 5/6 over 5/6 cancelled and the remaining 5H5 summed in closed form.
inline Complex m6_reduced_closed(const std::vector<Complex>& a4) {
    const double third = 1.0 / 3.0;
    BilateralSeriesSpec h6;
    std::vector<Complex> vwp{2.0 * third};
    for (Complex a : a4) {
        h6.c.push_back(third - a);
        h6.d.push_back(a + 4.0 * third);
        vwp.push_back(third - a);
    }
    h6.c.push_back(4.0 * third);
    h6.c.push_back(5.0 / 6.0);
    h6.d.push_back(third);
    h6.d.push_back(5.0 / 6.0);
    h6.z = 1.0;
    BilateralSeriesSpec h5 = cancel_matching_parameters(h6);
    // the reduced series must be exactly the very-well-poised 5H5 with A = 2/3
    BilateralSeriesSpec want = h_series_for(HKind::VWP5H5, vwp);
    auto same = [](std::vector<Complex> x, std::vector<Complex> y) {
        if (x.size() != y.size()) return false;
        for (Complex v : x) {
            auto it = std::find_if(y.begin(), y.end(), [&](Complex w) { return std::abs(v - w) <= 1e-13; });
            if (it == y.end()) return false;
            y.erase(it);
        }
        return true;
    };
    if (!same(h5.c, want.c) || !same(h5.d, want.d)) throw NotReducible("6H6 did not reduce to the expected 5H5");
    std::vector<Complex> all = a4;
    all.push_back(-1.0);
    all.push_back(-0.5);
    Complex C2 = 1.0;
    for (Complex a : all) C2 *= recip_gamma(a + 1.0 + third) * recip_gamma(a + 1.0 - third);
    Complex S2 = C2 / 6.0 * closed_form_H(HKind::VWP5H5, vwp);
    return 16.0 * pi * S2;
}

inline Complex beta_integral_closed(BetaKind kind, const std::vector<Complex>& p) {
    check_beta_params(kind, p);
    using detail::recip_pair_sums;
    using detail::vwp_front;
    const Complex a = p[0];
    switch (kind) {
        case BetaKind::RamanujanM2: {
            Complex a1 = p[0], a2 = p[1], b1 = p[2], b2 = p[3];
            return gamma(a1 + b1 + a2 + b2 + 1.0) * recip_gamma(a1 + b1 + 1.0) * recip_gamma(a1 + b2 + 1.0) *
                   recip_gamma(a2 + b1 + 1.0) * recip_gamma(a2 + b2 + 1.0);
        }
        case BetaKind::RamanujanM2Cos: {
            Complex a1 = p[0], a2 = p[1], b1 = p[2], b2 = p[3];
            return std::exp(-0.5 * I * pi * (b1 - a1)) * 0.5 * recip_gamma(0.5 * (a1 + b1) + 1.0) *
                   recip_gamma(0.5 * (a2 + b2) + 1.0) * recip_gamma(a1 + b2 + 1.0);
        }
        case BetaKind::M3Cos: {
            Complex v = cos_pi(0.5 * a) * gamma(1.0 + 1.5 * a + p[1] + p[2] + p[3]);
            for (int j = 1; j <= 3; ++j) v *= recip_gamma(1.0 + 0.5 * a + p[j]);
            return v * recip_pair_sums(detail::tail(p), a);
        }
        case BetaKind::M3Plain:
        case BetaKind::M4Plain: {
            BilateralSeriesSpec h{{}, {}, kind == BetaKind::M3Plain ? -1.0 : 1.0};
            Complex C = 1.0;
            for (Complex c : p) {
                h.c.push_back(0.25 - c);
                h.d.push_back(c + 1.25);
                C *= recip_gamma(c + 1.25) * recip_gamma(c + 0.75);
            }
            return C * eval_H(h, Tolerance(1e-15, 1e-12)).value;
        }
        case BetaKind::M4VWP: return vwp_front(a) * recip_pair_sums(detail::tail(p), a);
        case BetaKind::M4VWPShifted: return vwp_front(a) * recip_pair_sums(detail::tail(p), 0.0);
        case BetaKind::M5VWP:
            return gamma(1.0 + 2.0 * a + p[1] + p[2] + p[3] + p[4]) * vwp_front(a) * recip_pair_sums(detail::tail(p), a);
        case BetaKind::M5VWPShifted:
            return gamma(1.0 + p[1] + p[2] + p[3] + p[4]) * vwp_front(a) * recip_pair_sums(detail::tail(p), 0.0);
        case BetaKind::M5Third:
            return -1.0 / (8.0 * pi * pi) * gamma(1.0 + p[0] + p[1] + p[2] + p[3]) * recip_pair_sums(p, 0.0);
        case BetaKind::M6Riemann: return m6_combination(p, 0, 2, Tolerance(1e-15, 1e-12)).value;
        case BetaKind::M6Reduced: return m6_reduced_closed(p);
        case BetaKind::Barnes: {
            Complex A = p[0], B = p[1], C = p[2], D = p[3];
            return gamma(A + C) * gamma(A + D) * gamma(B + C) * gamma(B + D) * recip_gamma(A + B + C + D);
        }
    }
    throw DomainError("unknown beta kind");
}

// (1/2pi) int Gamma(a+ix) Gamma(b+ix) Gamma(c-ix) Gamma(d-ix) dx; the
// integrand decays like e^{-2 pi |x|}.
inline QuadratureResult barnes_integral(const std::vector<Complex>& p) {
    check_beta_params(BetaKind::Barnes, p);
    double pmax = 0.0, dmin = 0.5, imax = 0.0;
    for (Complex x : p) {
        pmax = std::max(pmax, std::abs(x));
        dmin = std::min(dmin, x.real());  // distance of the nearest pole to the contour
        imax = std::max(imax, std::abs(x.imag()));
    }
    double X = 30.0 + 2.0 * pmax, C = 2.0 + imax;
    double h = std::clamp(dmin, 0.02, 0.5);
    auto f = [&](double x) {
        Complex ix = I * x;
        return gamma(p[0] + ix) * gamma(p[1] + ix) * gamma(p[2] - ix) * gamma(p[3] - ix);
    };
    std::vector<double> br = uniform_breaks(-X, -C, 0.5);
    for (double x : uniform_breaks(-C, C, h)) if (x > br.back()) br.push_back(x);
    for (double x : uniform_breaks(C, X, 0.5)) if (x > br.back()) br.push_back(x);
    PanelSum ps = panel_quadrature(f, br);
    return {ps.value / (2.0 * pi), ps.err / (2.0 * pi), ps.panels, X};
}

inline QuadratureResult beta_integral_quadrature(BetaKind kind, const std::vector<Complex>& p, Tolerance tol = {}) {
    if (kind == BetaKind::Barnes) return barnes_integral(p);
    return integrate(beta_integrand(kind, p), tol);
}

inline ParamMap beta_inputs(const std::vector<Complex>& p) {
    ParamMap in;
    for (std::size_t i = 0; i < p.size(); ++i) in.push_back({"p" + std::to_string(i + 1), p[i]});
    return in;
}

inline VerificationRecord verify_beta(BetaKind kind, const std::vector<Complex>& p, Tolerance tol) {
    Stopwatch sw;
    const char* id = beta_kind_info(kind).name;
    try {
        QuadratureResult q = beta_integral_quadrature(kind, p, Tolerance(1e-14, 1e-10));
        Complex rhs = beta_integral_closed(kind, p);
        return make_record(id, beta_inputs(p), q.value, rhs, tol, sw.ms());
    } catch (const Error& e) {
        return failed_record(id, beta_inputs(p), tol, e.kind() + ": " + e.what());
    }
}

// The double integral that would give the a = 0 case of the M3Cos
// evaluation directly: computed by nested tanh-sinh and compared with its
// conjectured gamma value.  Informational only.
inline VerificationRecord m3_double_integral(Complex b1, Complex b2, Complex b3, Tolerance tol = Tolerance(1e-10, 1e-7)) {
    Stopwatch sw;
    auto outer = [&](double s1, double dl1, double dr1) -> Complex {
        double c1 = 2.0 * std::sin(0.5 * std::min(dl1, dr1));  // 2 cos(s1/2)
        auto inner = [&](double s2, double dl2, double dr2) -> Complex {
            (void)s2;
            double c2 = 2.0 * std::sin(0.5 * dr2);  // 2 cos(s2/2)
            double c3 = 2.0 * std::sin(0.5 * dl2);  // 2 sin((s1+s2)/2)
            return std::exp(2.0 * b2 * std::log(c2) + 2.0 * b3 * std::log(c3));
        };
        Complex in = tanh_sinh(inner, -s1, pi, 1e-13, 9).value;
        return std::exp(2.0 * b1 * std::log(c1)) * in;
    };
    Complex lhs = tanh_sinh(outer, -pi, pi, 1e-12, 8).value;
    Complex rhs = 2.0 * pi * pi * gamma(2.0 * b1 + 1.0) * gamma(2.0 * b2 + 1.0) * gamma(2.0 * b3 + 1.0) *
                  gamma(b1 + b2 + b3 + 1.0) * recip_gamma(b1 + 1.0) * recip_gamma(b2 + 1.0) * recip_gamma(b3 + 1.0) *
                  recip_gamma(b1 + b2 + 1.0) * recip_gamma(b1 + b3 + 1.0) * recip_gamma(b2 + b3 + 1.0);
    return make_record("m3_double_integral", {{"b1", b1}, {"b2", b2}, {"b3", b3}}, lhs, rhs, tol, sw.ms());
}

}  // namespace rbeta
