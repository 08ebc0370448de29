#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qseries.hpp"
#include "quadrature.hpp"
#include "ramanujan.hpp"
#include "record.hpp"

namespace rbeta {

// f(x) = prod_j (b_j q^x; q)_inf (q^{1-x}/a_j; q)_inf q^{x(x-1)/2} w_j^x,
// integrated against e^{-ixt}.  An infinite a_j is allowed (1/a_j = 0).
struct QIntegrandSpec {
    QBase qbase{0.5};
    int m = 1;
    std::vector<Complex> a, b, w;
    Complex t = 0.0;
};

namespace detail {

inline Complex inverse_or_zero(Complex a) { return std::isinf(std::abs(a)) ? Complex(0.0) : 1.0 / a; }

inline double abs_product(const std::vector<Complex>& v) {
    double p = 1.0;
    for (Complex x : v) p *= std::abs(x);
    return p;
}

// Quadrature of exp(logf(x)) (times an optional Abel-Poisson kernel) over
// the range where Re logf stays within 40 of its peak.
template <class LogF>
QuadratureResult log_space_quadrature(LogF&& logf, double base_freq, double chirp, double r, Tolerance tol) {
    const double drop = 40.0, step = 0.5, x0 = 0.137;
    double peak = -std::numeric_limits<double>::infinity();
    auto walk = [&](double dir) {
        int below = 0;
        double x = x0;
        for (long k = 0; k < 4000000; ++k, x += dir * step) {
            double v = logf(x).real();
            if (v > peak) peak = v;
            below = (v < peak - drop) ? below + 1 : 0;
            if (below >= 4 && k > 4) return x;
        }
        throw ToleranceNotReached("integrand does not decay");
    };
    double R = walk(1.0), L = walk(-1.0);
    if (!std::isfinite(peak)) throw DomainError("integrand vanishes identically");
    // the peak may have risen after one side stopped; extend until both ends are low
    while (logf(R).real() > peak - drop) R += 4.0;
    while (logf(L).real() > peak - drop) L -= 4.0;

    double freq = base_freq + chirp * (std::max(std::abs(L), std::abs(R)) + 1.0) + 1.0;
    double h = std::min(0.5, pi / (2.0 * freq));
    std::vector<double> br;
    if (r > 0.0) {
        double eps = (1.0 - r) / (2.0 * pi);
        for (double n = std::floor(L); n <= std::ceil(R); n += 1.0) {
            br.push_back(n);
            for (double d = eps; d < 0.5; d *= 4.0) {
                br.push_back(n + d);
                br.push_back(n + 1.0 - d);
            }
        }
        br.push_back(std::ceil(R));
        std::sort(br.begin(), br.end());
        br.erase(std::unique(br.begin(), br.end()), br.end());
        std::vector<double> fine;
        for (std::size_t i = 0; i + 1 < br.size(); ++i) {
            auto seg = uniform_breaks(br[i], br[i + 1], h);
            fine.insert(fine.end(), seg.begin(), seg.end() - 1);
        }
        fine.push_back(br.back());
        br.swap(fine);
    } else {
        br = uniform_breaks(L, R, h);
    }
    auto g = [&](double x) {
        Complex v = std::exp(logf(x) - peak);
        if (r > 0.0) v *= (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(2.0 * pi * x) + r * r);
        return v;
    };
    PanelSum ps = panel_quadrature(g, br);
    double scale = std::exp(peak);
    QuadratureResult out;
    out.value = ps.value * scale;
    out.est_error = (ps.err + 2.0 * std::exp(-drop) * (R - L)) * scale;
    out.panels = ps.panels;
    out.truncation_X = std::max(std::abs(L), std::abs(R));
    if (!is_finite(out.value)) throw ToleranceNotReached("non-finite q-quadrature");
    if (out.est_error > tol.budget(std::abs(out.value)))
        throw ToleranceNotReached("q-quadrature error estimate above tolerance");
    return out;
}

}  // namespace detail

inline void validate(const QIntegrandSpec& s) {
    if (s.m < 1) throw PreconditionError("m must be positive");
    if (s.a.size() != std::size_t(s.m) || s.b.size() != std::size_t(s.m) || s.w.size() != std::size_t(s.m))
        throw PreconditionError("a, b and w need m entries each");
    for (int j = 0; j < s.m; ++j)
        if (s.a[j] == 0.0 || s.w[j] == 0.0) throw PreconditionError("a_j and w_j must be nonzero");
}

inline void check_annulus(const QIntegrandSpec& s) {
    double B = detail::abs_product(s.b), W = detail::abs_product(s.w), A = detail::abs_product(s.a);
    if (!(B < W && W < A)) throw AnnulusViolation("needs |b_1...b_m| < |w_1...w_m| < |a_1...a_m|");
}

inline void check_strip(const QIntegrandSpec& s) {
    double B = detail::abs_product(s.b), W = detail::abs_product(s.w), A = detail::abs_product(s.a);
    double lo = (B == 0.0) ? -std::numeric_limits<double>::infinity() : std::log(B / W);
    double hi = std::isinf(A) ? std::numeric_limits<double>::infinity() : std::log(A / W);
    if (!(lo < s.t.imag() && s.t.imag() < hi)) throw StripViolation("Im t must lie in (log|b/w|, log|a/w|)");
}

inline Complex log_q_integrand(const QIntegrandSpec& s, Complex x) {
    const Complex lq = std::log(s.qbase.q);
    Complex v = -I * s.t * x;
    for (int j = 0; j < s.m; ++j) {
        v += log_qpoch_shifted(s.b[j], lq, x, true);
        v += log_qpoch_shifted(detail::inverse_or_zero(s.a[j]), lq, 1.0 - x, true);
        v += 0.5 * x * (x - 1.0) * lq + x * std::log(s.w[j]);
    }
    return v;
}

inline Complex q_integrand(const QIntegrandSpec& s, double x) { return std::exp(log_q_integrand(s, x)); }

namespace detail {

inline QuadratureResult q_integrate_with_kernel(const QIntegrandSpec& s, double r, Tolerance tol) {
    double freq = std::abs(s.t.real());
    for (Complex w : s.w) freq += std::abs(std::arg(w));
    double chirp = s.m * std::abs(std::arg(s.qbase.q));
    // the integrand is entire with Gaussian decay, so without the kernel the
    // contour can go through the saddle of q^{m x(x-1)/2} (w_1...w_m)^x e^{-itx};
    // on the real line a fast oscillation cancels down to a tiny value
    double y = 0.0;
    if (r == 0.0) {
        Complex S = -I * s.t;
        for (Complex w : s.w) S += std::log(w);
        y = (0.5 - S / (double(s.m) * std::log(s.qbase.q))).imag();
    }
    return log_space_quadrature([&](double x) { return log_q_integrand(s, Complex(x, y)); }, freq, chirp, r, tol);
}

}  // namespace detail

inline QuadratureResult q_integrate(const QIntegrandSpec& spec, Tolerance tol = {}) {
    validate(spec);
    check_annulus(spec);
    check_strip(spec);
    return detail::q_integrate_with_kernel(spec, 0.0, tol);
}

// Closed form of the m = 1 transform (real q).
inline Complex q_fourier_closed(const QIntegrandSpec& s) {
    validate(s);
    if (s.m != 1) throw PreconditionError("closed form is for m = 1");
    check_annulus(s);
    check_strip(s);
    double q = require_real_q(s.qbase.q);
    QBase qb(q);
    Complex ia = detail::inverse_or_zero(s.a[0]), b = s.b[0], w = s.w[0], t = s.t;
    double L = -std::log(q);
    Complex lw = std::log(w) - I * t;
    Complex lp = log_qpoch_inf(b * ia, qb) - log_qpoch_inf(-w * ia * std::exp(-I * t), qb) -
                 log_qpoch_inf(-b / w * std::exp(I * t), qb);
    return std::exp(lp + lw * lw / (2.0 * L) - 0.5 * I * t) * std::sqrt(2.0 * pi * w) / (std::pow(q, 0.125) * std::sqrt(L));
}

inline ParamMap q_inputs(const QIntegrandSpec& s) {
    ParamMap in{{"q", s.qbase.q}, {"m", double(s.m)}, {"t", s.t}};
    for (int j = 0; j < s.m; ++j) {
        std::string k = std::to_string(j + 1);
        in.push_back({"a" + k, s.a[j]});
        in.push_back({"b" + k, s.b[j]});
        in.push_back({"w" + k, s.w[j]});
    }
    return in;
}

inline VerificationRecord verify_q_fourier(const QIntegrandSpec& s, Tolerance tol = Tolerance(1e-14, 1e-7)) {
    Stopwatch sw;
    const char* id = s.t == 0.0 ? "q_fourier_t0" : "q_fourier";
    try {
        QuadratureResult q = q_integrate(s, Tolerance(1e-14, 1e-8));
        return make_record(id, q_inputs(s), q.value, q_fourier_closed(s), tol, sw.ms());
    } catch (const Error& e) {
        return failed_record(id, q_inputs(s), tol, e.kind() + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Abel-Poisson regularisation: the kernel (1-r^2)/(1-2r cos 2 pi x + r^2)
// turns the lattice sum of f(n) e^{-int} into a limit of integrals.

struct AbelPoint {
    double r;
    Complex value;
    double gap;
};

struct AbelPoissonResult {
    Complex target;  // prod (b_j;q)_inf (q/a_j;q)_inf * m psi m(a; b; q, z)
    Complex z;
    std::vector<AbelPoint> points;
};

inline AbelPoissonResult abel_poisson_psi(const QIntegrandSpec& spec, const std::vector<double>& r_sequence) {
    validate(spec);
    check_annulus(spec);
    if (spec.t.imag() != 0.0) throw PreconditionError("t must be real");
    const QBase qb = spec.qbase;
    Complex z = (spec.m % 2 ? -1.0 : 1.0) * std::exp(-I * spec.t.real());
    Complex pre = 1.0;
    for (int j = 0; j < spec.m; ++j) {
        z *= spec.w[j] / spec.a[j];
        pre *= qpoch_inf(spec.b[j], qb) * qpoch_inf(qb.q / spec.a[j], qb);
    }
    AbelPoissonResult out;
    out.z = z;
    out.target = pre * eval_psi({qb, spec.a, spec.b, z}, Tolerance(1e-15, 1e-12)).value;
    for (double r : r_sequence) {
        if (!(r >= 0.0 && r < 1.0)) throw PreconditionError("r must lie in [0, 1)");
        Complex v = detail::q_integrate_with_kernel(spec, r, Tolerance(1e-14, 1e-8)).value;
        out.points.push_back({r, v, std::abs(v - out.target)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// q-beta integrals
//   int (1 + q^{2x} al^2) prod_{a in A} (-q^{x+1} al a, q^{1-x} a/al; q)_inf q^{2x^2-x} al^{4x} dx
// for multisets A of size 4 (full), 3, 2, 1, 0.

enum class QBetaKind { Full, D0, C0, Psi36, Psi26 };

inline const char* to_string(QBetaKind k) {
    switch (k) {
        case QBetaKind::Full: return "I_full";
        case QBetaKind::D0: return "I_d0";
        case QBetaKind::C0: return "I_c0";
        case QBetaKind::Psi36: return "I_3psi6";
        case QBetaKind::Psi26: return "I_2psi6";
    }
    return "?";
}

inline std::size_t qbeta_arity(QBetaKind k) {
    switch (k) {
        case QBetaKind::Full: return 4;
        case QBetaKind::D0: return 3;
        case QBetaKind::C0: return 2;
        case QBetaKind::Psi36: return 1;
        case QBetaKind::Psi26: return 0;
    }
    return 0;
}

struct QBetaParams {
    double q = 0.5;
    Complex alpha = 1.0;
    std::vector<Complex> a;
};

inline void check_qbeta(QBetaKind kind, const QBetaParams& p) {
    require_real_q(p.q);
    if (p.a.size() != qbeta_arity(kind)) throw PreconditionError(std::string(to_string(kind)) + " has the wrong number of parameters");
    if (p.alpha == 0.0) throw PreconditionError("alpha must be nonzero");
    for (Complex a : p.a)
        if (a == 0.0) throw PreconditionError("parameters must be nonzero");
    if (kind == QBetaKind::Full) {
        double prod = detail::abs_product(p.a);
        if (!(prod < 1.0 / p.q)) throw ConstraintViolation("I_full needs |abcd| < 1/|q|");
    }
}

inline Complex log_qbeta_integrand(const QBetaParams& p, double x) {
    const double lq = std::log(p.q);
    const Complex la = std::log(p.alpha);
    Complex v = (2.0 * x * x - x) * lq + 4.0 * x * la;
    v += log1p(std::exp(2.0 * x * lq + 2.0 * la));
    for (Complex a : p.a) {
        v += log_qpoch_shifted(-p.q * p.alpha * a, lq, x, true);
        v += log_qpoch_shifted(p.q * a / p.alpha, lq, -x, true);
    }
    return v;
}

// sqrt(2 pi) al exp(2 (log al)^2 / log q^{-1}) / (q^{1/8} sqrt(log q^{-1})), as a log
inline Complex log_qbeta_front(double q, Complex alpha) {
    double L = -std::log(q);
    Complex la = std::log(alpha);
    return 0.5 * std::log(2.0 * pi) + la + 2.0 * la * la / L - 0.125 * std::log(q) - 0.5 * std::log(L);
}

inline Complex qbeta_rhs_product(QBetaKind kind, const QBetaParams& p) {
    check_qbeta(kind, p);
    QBase qb(p.q);
    Complex l = log_qbeta_front(p.q, p.alpha);
    const auto& a = p.a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) l += log_qpoch_inf(-p.q * a[i] * a[j], qb);
    if (kind == QBetaKind::Full) l -= log_qpoch_inf(p.q * a[0] * a[1] * a[2] * a[3], qb);
    return std::exp(l);
}

inline QSeriesSpec qbeta_psi_series(QBetaKind kind, const QBetaParams& p) {
    const double q = p.q;
    const Complex q14 = std::pow(q, 0.25), q54 = std::pow(q, 1.25);
    QSeriesSpec s{QBase(q), {q54, -q54}, {q14, -q14}, 0.0};
    for (Complex a : p.a) {
        s.a.push_back(-I * q14 / a);
        s.b.push_back(I * q54 * a);
    }
    while (s.b.size() < 6) s.b.push_back(0.0);
    Complex prod = 1.0;
    for (Complex a : p.a) prod *= a;
    switch (kind) {
        case QBetaKind::Full: s.z = q * prod; break;
        case QBetaKind::D0: s.z = -I * q54 * prod; break;
        case QBetaKind::C0: s.z = -std::pow(q, 1.5) * prod; break;
        case QBetaKind::Psi36: s.z = I * std::pow(q, 1.75) * prod; break;
        case QBetaKind::Psi26: s.z = q * q; break;
    }
    return s;
}

inline Complex qbeta_rhs_psi(QBetaKind kind, const QBetaParams& p) {
    check_qbeta(kind, p);
    QBase qb(p.q);
    const double q = p.q;
    Complex l = log_qbeta_front(q, p.alpha);
    for (Complex a : p.a) l += log_qpoch_inf(I * std::pow(q, 1.25) * a, qb) + log_qpoch_inf(I * std::pow(q, 0.75) * a, qb);
    l -= log_qpoch_inf(q, qb) + log_qpoch_inf(std::sqrt(q), qb) + log_qpoch_inf(std::pow(q, 1.5), qb);
    return std::exp(l) * eval_psi(qbeta_psi_series(kind, p), Tolerance(1e-15, 1e-9)).value;
}

inline QuadratureResult qbeta_quadrature(QBetaKind kind, const QBetaParams& p, Tolerance tol = Tolerance(1e-14, 1e-10)) {
    check_qbeta(kind, p);
    double freq = 4.0 * std::abs(std::arg(p.alpha)) + 1.0;
    return detail::log_space_quadrature([&](double x) { return log_qbeta_integrand(p, x); }, freq, 0.0, 0.0, tol);
}

inline ParamMap qbeta_inputs(const QBetaParams& p) {
    ParamMap in{{"q", p.q}, {"alpha", p.alpha}};
    for (std::size_t i = 0; i < p.a.size(); ++i) in.push_back({"a" + std::to_string(i + 1), p.a[i]});
    return in;
}

// Quadrature against the product side, and the product side against the
// psi representation.
inline std::vector<VerificationRecord> verify_qbeta(QBetaKind kind, const QBetaParams& p, Tolerance tol = Tolerance(1e-14, 1e-6)) {
    std::vector<VerificationRecord> out;
    std::string id = to_string(kind);
    Stopwatch sw;
    try {
        Complex quad = qbeta_quadrature(kind, p).value;
        Complex prod = qbeta_rhs_product(kind, p);
        out.push_back(make_record(id, qbeta_inputs(p), quad, prod, tol, sw.ms()));
        Stopwatch sw2;
        out.push_back(make_record(id + "_psi", qbeta_inputs(p), prod, qbeta_rhs_psi(kind, p), Tolerance(1e-14, 1e-9), sw2.ms()));
    } catch (const Error& e) {
        out.push_back(failed_record(id, qbeta_inputs(p), tol, e.kind() + ": " + e.what()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// The same integrals after al -> -i q^al, a -> -i q^a, written with q-gammas.

// log of -i sqrt(2pi) q^al exp(2 (log(-i q^al))^2 / log q^{-1})
//          / (q^{1/8} (1-q) sqrt(log q^{-1}) (q;q)_inf^3)
inline Complex log_limit_prefactor(double q, Complex alpha) {
    require_real_q(q);
    double L = -std::log(q);
    Complex lm = std::log(-I * std::exp(alpha * std::log(q)));
    return std::log(-I) + 0.5 * std::log(2.0 * pi) + alpha * std::log(q) + 2.0 * lm * lm / L - 0.125 * std::log(q) -
           std::log1p(-q) - 0.5 * std::log(L) - 3.0 * log_qpoch_inf(q, QBase(q));
}

inline Complex limit_constant(double q, Complex alpha) { return std::exp(log_limit_prefactor(q, alpha)); }

inline Complex limit_constant_target(Complex alpha) { return -I * std::exp(2.0 * I * pi * alpha) / (2.0 * pi); }

struct QGap {
    double q;
    Complex value;
    Complex target;
    double rel_gap;
};

inline std::vector<QGap> limit_constant_probe(Complex alpha, const std::vector<double>& qs) {
    std::vector<QGap> out;
    Complex tgt = limit_constant_target(alpha);
    for (double q : qs) {
        Complex v = limit_constant(q, alpha);
        out.push_back({q, v, tgt, relative_gap(v, tgt)});
    }
    return out;
}

inline Complex log_qgamma_integrand(const QBetaParams& p, double x) {
    const double q = p.q, lq = std::log(q);
    Complex y = x + p.alpha;
    // Gamma_q(2y+1)/Gamma_q(2y) = (1 - q^{2y})/(1 - q)
    Complex v = log1p(-std::exp(2.0 * y * lq)) - std::log1p(-q);
    v += (2.0 * x * x - x + 4.0 * p.alpha * x) * lq - 2.0 * I * pi * x;
    for (Complex a : p.a) v += log_recip_q_gamma(1.0 + a + y, q) + log_recip_q_gamma(1.0 + a - y, q);
    return v;
}

inline Complex qgamma_rhs(QBetaKind kind, const QBetaParams& p) {
    const double q = p.q;
    Complex l = log_limit_prefactor(q, p.alpha);
    const auto& a = p.a;
    auto lrg = [&](Complex x) { return log_recip_q_gamma(x, q); };
    switch (kind) {
        case QBetaKind::Full:
            l += -lrg(a[0] + a[1] + a[2] + a[3] + 1.0);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j) l += lrg(a[i] + a[j] + 1.0);
            break;
        case QBetaKind::D0: l += lrg(a[0] + a[1] + 1.0) + lrg(a[0] + a[2] + 1.0) + lrg(a[1] + a[2] + 1.0); break;
        case QBetaKind::C0: l += (a[0] + a[1]) * std::log1p(-q) + lrg(a[0] + a[1] + 1.0); break;
        default: throw PreconditionError("no q-gamma form for this kind");
    }
    return std::exp(l);
}

inline Complex qgamma_rhs_psi(QBetaKind kind, const QBetaParams& p) {
    const double q = p.q;
    Complex l = log_limit_prefactor(q, p.alpha) - log_recip_q_gamma(0.5, q) - log_recip_q_gamma(1.5, q);
    QSeriesSpec s{QBase(q), {std::pow(q, 1.25), -std::pow(q, 1.25)}, {std::pow(q, 0.25), -std::pow(q, 0.25)}, 0.0};
    Complex sum = 0.0;
    for (Complex a : p.a) {
        l += log_recip_q_gamma(1.25 + a, q) + log_recip_q_gamma(0.75 + a, q);
        s.a.push_back(std::exp((0.25 - a) * std::log(q)));
        s.b.push_back(std::exp((1.25 + a) * std::log(q)));
        sum += a;
    }
    while (s.b.size() < 6) s.b.push_back(0.0);
    switch (kind) {
        case QBetaKind::Full: s.z = std::exp((sum + 1.0) * std::log(q)); break;
        case QBetaKind::D0: s.z = std::exp((sum + 1.25) * std::log(q)); break;
        case QBetaKind::C0: s.z = std::exp((sum + 1.5) * std::log(q)); break;
        default: throw PreconditionError("no q-gamma form for this kind");
    }
    return std::exp(l) * eval_psi(s, Tolerance(1e-15, 1e-9)).value;
}

inline QuadratureResult qgamma_quadrature(const QBetaParams& p, Tolerance tol = Tolerance(1e-14, 1e-10)) {
    return detail::log_space_quadrature([&](double x) { return log_qgamma_integrand(p, x); }, 2.0 * pi, 0.0, 0.0, tol);
}

inline std::vector<VerificationRecord> verify_qgamma(QBetaKind kind, const QBetaParams& p, Tolerance tol = Tolerance(1e-14, 1e-6)) {
    std::vector<VerificationRecord> out;
    std::string id = std::string(to_string(kind)) + "_gamma";
    Stopwatch sw;
    try {
        require_real_q(p.q);
        if (p.a.size() != qbeta_arity(kind)) throw PreconditionError("wrong number of parameters");
        Complex quad = qgamma_quadrature(p).value;
        Complex rhs = qgamma_rhs(kind, p);
        out.push_back(make_record(id, qbeta_inputs(p), quad, rhs, tol, sw.ms()));
        Stopwatch sw2;
        out.push_back(make_record(id + "_psi", qbeta_inputs(p), rhs, qgamma_rhs_psi(kind, p), Tolerance(1e-14, 1e-9), sw2.ms()));
    } catch (const Error& e) {
        out.push_back(failed_record(id, qbeta_inputs(p), tol, e.kind() + ": " + e.what()));
    }
    return out;
}

// q -> 1 of the q-gamma right sides: the d -> 0 case tends to
// -i e^{2i pi al}/(2 pi) / Gamma(a+b+1, a+c+1, b+c+1); the c -> 0 case to 0
// (for Re(a+b) > 0).
inline std::vector<QGap> qgamma_limit_probe(QBetaKind kind, Complex alpha, const std::vector<Complex>& a,
                                            const std::vector<double>& qs) {
    if (a.size() != qbeta_arity(kind)) throw PreconditionError("wrong number of parameters");
    Complex tgt;
    if (kind == QBetaKind::D0)
        tgt = limit_constant_target(alpha) * recip_gamma(a[0] + a[1] + 1.0) * recip_gamma(a[0] + a[2] + 1.0) *
              recip_gamma(a[1] + a[2] + 1.0);
    else if (kind == QBetaKind::C0) {
        if (!((a[0] + a[1]).real() > 0.0)) throw DomainError("needs Re(a+b) > 0");
        tgt = 0.0;
    } else {
        throw PreconditionError("probe covers the d -> 0 and c -> 0 cases");
    }
    std::vector<QGap> out;
    for (double q : qs) {
        Complex v = qgamma_rhs(kind, {q, alpha, a});
        out.push_back({q, v, tgt, tgt == 0.0 ? std::abs(v) : relative_gap(v, tgt)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// q -> 1 of the d -> 0 case:
//   int dx / Gamma(+-2x, 1+a+-x, 1+b+-x, 1+c+-x) = -1/(2 pi^2 Gamma(a+b+1, a+c+1, b+c+1))

inline IntegrandSpec h44_integrand(Complex a, Complex b, Complex c) {
    // 1/(Gamma(2x)Gamma(-2x)) = 4 pi / (Gamma(x)Gamma(-x)Gamma(1/2+x)Gamma(1/2-x))
    return {5, {-1.0, -0.5, a, b, c}, {-1.0, -0.5, a, b, c}, 0.0, {{4.0 * pi, 0.0}}};
}

inline Complex h44_closed(Complex a, Complex b, Complex c) {
    return -1.0 / (2.0 * pi * pi) * recip_gamma(a + b + 1.0) * recip_gamma(a + c + 1.0) * recip_gamma(b + c + 1.0);
}

inline Complex h44_series_form(Complex a, Complex b, Complex c) {
    BilateralSeriesSpec h{{1.25}, {0.25}, -1.0};
    Complex C = -1.0 / (4.0 * pi);
    for (Complex x : {a, b, c}) {
        h.c.push_back(0.25 - x);
        h.d.push_back(1.25 + x);
        C *= recip_gamma(1.25 + x) * recip_gamma(0.75 + x);
    }
    return C * eval_H(h, Tolerance(1e-15, 1e-12)).value;
}

// The shifted m = 4 very-well-poised integral at a = 1/3, rescaled by 4/sqrt3.
inline Complex h44_from_m4(Complex a, Complex b, Complex c) {
    return 4.0 / std::sqrt(3.0) * beta_integral_closed(BetaKind::M4VWPShifted, {1.0 / 3.0, a, b, c});
}

// ---------------------------------------------------------------------------
// h(q): the q-Fourier transform with w = 1, a = q^{1-be}, b = q^{al}, divided
// by (q;q)_inf^2 (1-q)^{2-al-be}.

inline Complex h_of_q(double al, double be, double t, double q) {
    require_real_q(q);
    QBase qb(q);
    double u = -std::log(q);
    Complex e = std::exp(-I * t);
    Complex l = (al + be - 2.0) * std::log1p(-q) - 2.0 * log_qpoch_inf(q, qb) + log_qpoch_inf(std::pow(q, al + be - 1.0), qb) -
                log_qpoch_inf(-std::pow(q, be - 1.0) * e, qb) - log_qpoch_inf(-std::pow(q, al) / e, qb);
    l += 0.5 * std::log(2.0 * pi) - 0.5 * I * t - 0.5 * t * t / u + 0.125 * u - 0.5 * std::log(u);
    return std::exp(l);
}

inline Complex h_target(double al, double be, double t) {
    if (std::abs(t) >= pi) return 0.0;
    return std::pow(2.0 * std::cos(0.5 * t), al + be - 2.0) * std::exp(-0.5 * I * t * (be - al)) * recip_gamma(al + be - 1.0);
}

inline std::vector<QGap> h_of_q_probe(double al, double be, double t, const std::vector<double>& qs) {
    if (!(al > 1.0 && be > 2.0)) throw DomainError("needs alpha > 1 and beta > 2");
    std::vector<QGap> out;
    Complex tgt = h_target(al, be, t);
    for (double q : qs) {
        Complex v = h_of_q(al, be, t, q);
        double gap = (tgt == 0.0) ? std::abs(v) : relative_gap(v, tgt);
        out.push_back({q, v, tgt, gap});
    }
    return out;
}

// f_q(x) = q^{x(x-1)/2} / (Gamma_q(x+al) Gamma_q(be-x)).  The domination
// bounds say |f_q(x)| (1+x)^{be-1} (x >= 0) and |f_q(x)| (1+|x|)^{al}
// (x <= 0) stay bounded uniformly in q; on a grid we check that the far
// half of each range never exceeds the near half.
struct DominationCheck {
    double q;
    double right_near, right_far, left_near, left_far;
    bool ok;
};

inline double log_abs_fq(double al, double be, double q, double x) {
    return (0.5 * x * (x - 1.0) * std::log(q) + log_recip_q_gamma(x + al, q) + log_recip_q_gamma(be - x, q)).real();
}

inline std::vector<DominationCheck> domination_check(double al, double be, const std::vector<double>& qs, double X = 40.0) {
    if (!(al > 1.0 && be > 2.0)) throw DomainError("needs alpha > 1 and beta > 2");
    std::vector<DominationCheck> out;
    for (double q : qs) {
        if (!(q >= 0.5 && q < 1.0)) throw DomainError("q must lie in [1/2, 1)");
        DominationCheck d{q, 0.0, 0.0, 0.0, 0.0, false};
        for (double x = 0.0; x <= X; x += 0.125) {
            double r = std::exp(log_abs_fq(al, be, q, x) + (be - 1.0) * std::log1p(x));
            double l = std::exp(log_abs_fq(al, be, q, -x) + al * std::log1p(x));
            double& rs = (x <= 0.5 * X) ? d.right_near : d.right_far;
            double& ls = (x <= 0.5 * X) ? d.left_near : d.left_far;
            rs = std::max(rs, r);
            ls = std::max(ls, l);
        }
        d.ok = std::isfinite(d.right_near) && std::isfinite(d.left_near) && d.right_far <= d.right_near &&
               d.left_far <= d.left_near;
        out.push_back(d);
    }
    return out;
}

}  // namespace rbeta
