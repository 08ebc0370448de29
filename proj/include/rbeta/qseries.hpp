#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bilateral.hpp"
#include "gamma.hpp"

namespace rbeta {

struct QBase {
    Complex q;
    explicit QBase(Complex q_) : q(q_) {
        double m = std::abs(q);
        if (!(m > 0.0 && m < 1.0)) throw DomainError("q-base needs 0 < |q| < 1");
    }
};

inline double require_real_q(Complex q) {
    if (q.imag() != 0.0 || !(q.real() > 0.0 && q.real() < 1.0)) throw DomainError("q must be real in (0,1)");
    return q.real();
}

// q^x with the principal logarithm of q.
inline Complex qpow(Complex q, Complex x) { return std::exp(x * std::log(q)); }

// (a;q)_n, n in Z.
inline Complex qpoch(Complex a, QBase qb, long n) {
    const Complex q = qb.q;
    Complex v = 1.0;
    if (n >= 0) {
        Complex qk = 1.0;
        for (long k = 0; k < n; ++k, qk *= q) v *= 1.0 - a * qk;
        return v;
    }
    Complex qinv = 1.0 / q, qk = qinv;
    for (long k = 1; k <= -n; ++k, qk *= qinv) {
        Complex f = 1.0 - a * qk;
        if (std::abs(f) <= 1e-14) throw PoleError("qpoch: a = q^k with 1 <= k <= -n");
        v /= f;
    }
    return v;
}

// (a;q)_{-n} = q^{n(n+1)/2} / ((-a)^n (q/a;q)_n), n >= 1.
inline Complex qpoch_negative_closed_form(Complex a, QBase qb, long n) {
    if (a == 0.0) return 1.0;
    Complex d = qpoch(qb.q / a, qb, n);
    if (std::abs(d) == 0.0) throw PoleError("qpoch: a = q^k with 1 <= k <= n");
    return qpow(qb.q, 0.5 * double(n) * double(n + 1)) / (std::pow(-a, double(n)) * d);
}

// log (c q^y; q)_inf as the sum of principal logs of its factors, with
// q^{y+k} = exp((y+k) log q).  A vanishing factor throws, or gives
// -inf when allow_zero is set.
inline Complex log_qpoch_shifted(Complex c, Complex logq, Complex y, bool allow_zero = false) {
    if (c == 0.0) return 0.0;
    Complex s = 0.0;
    double lc = std::log(std::abs(c));
    for (long k = 0;; ++k) {
        Complex e = (y + double(k)) * logq;
        double mag = lc + e.real();  // log |c q^{y+k}|
        if (mag < -39.2) break;  // |c q^{y+k}| < 1e-17, and it only shrinks from here
        Complex w = c * std::exp(e);
        Complex f = 1.0 - w;
        if (std::abs(f) <= 1e-15 * std::max(1.0, std::abs(w))) {
            if (allow_zero) return {-std::numeric_limits<double>::infinity(), 0.0};
            throw PoleError("q-product has a vanishing factor");
        }
        s += log1p(-w);
        if (k > 50000000) throw ToleranceNotReached("q-product did not converge");
    }
    return s;
}

inline Complex log_qpoch_inf(Complex a, QBase qb) { return log_qpoch_shifted(a, std::log(qb.q), 0.0); }

// (a;q)_inf with factors dropped once |a q^k| < 1e-17.
inline Complex qpoch_inf(Complex a, QBase qb) {
    if (a == 0.0) return 1.0;
    Complex v = 1.0, qk = 1.0;
    for (long k = 0;; ++k, qk *= qb.q) {
        Complex w = a * qk;
        if (std::abs(w) < 1e-17) break;
        v *= 1.0 - w;
        if (k > 50000000) break;
    }
    return v;
}

inline Complex qpoch_inf(std::initializer_list<Complex> as, QBase qb) {
    Complex v = 1.0;
    for (Complex a : as) v *= qpoch_inf(a, qb);
    return v;
}

inline Complex log_q_gamma(Complex x, double q) {
    QBase qb(q);
    double lq = std::log(q);
    if (is_nonpositive_integer(x)) throw PoleError("q_gamma: pole at non-positive integer");
    return log_qpoch_shifted(q, lq, 0.0) + (1.0 - x) * std::log1p(-q) - log_qpoch_shifted(1.0, lq, x);
}

// log(1/Gamma_q(x)); -inf at the zeros x = 0, -1, -2, ...
inline Complex log_recip_q_gamma(Complex x, double q) {
    double lq = std::log(q);
    return log_qpoch_shifted(1.0, lq, x, true) + (x - 1.0) * std::log1p(-q) - log_qpoch_shifted(q, lq, 0.0);
}

inline Complex q_gamma(Complex x, double q) {
    require_real_q(q);
    return std::exp(log_q_gamma(x, q));
}

inline Complex recip_q_gamma(Complex x, double q) {
    require_real_q(q);
    if (is_nonpositive_integer(x)) return 0.0;
    return std::exp(-log_q_gamma(x, q));
}

// r psi s (a; b; q, z) = sum_n prod (a;q)_n / prod (b;q)_n
//                         ((-1)^n q^{n(n-1)/2})^{s-r} z^n
struct QSeriesSpec {
    QBase qbase{0.5};
    std::vector<Complex> a, b;
    Complex z = 0.0;
};

namespace detail {

struct QSide {
    Complex value = 0.0;
    double err = 0.0;
    long terms = 0;
};

template <class Ratio>
QSide q_side_sum(Ratio&& ratio, long first, double limit_ratio, const char* which) {
    QSide out;
    const double eps = std::numeric_limits<double>::epsilon();
    Complex t = 1.0;
    double peak = 0.0;
    int quiet = 0;
    const long cap = 20000000;
    for (long k = 0; k < cap; ++k) {
        if (k >= first) {
            out.value += t;
            ++out.terms;
            peak = std::max(peak, std::abs(out.value));
        }
        std::optional<Complex> f = ratio(k);
        if (!f) {  // the series terminates after index k
            out.err = eps * peak * std::sqrt(double(out.terms) + 1.0);
            return out;
        }
        Complex next = t * *f;
        double rho = std::max(std::abs(*f), limit_ratio);
        double bound = rho < 1.0 ? std::abs(next) / (1.0 - rho) : std::numeric_limits<double>::infinity();
        if (k >= first && bound <= 1e-17 * std::abs(out.value) && k > 4) {
            if (++quiet >= 3) {
                out.err = bound + eps * peak * std::sqrt(double(out.terms) + 1.0);
                return out;
            }
        } else {
            quiet = 0;
        }
        t = next;
        if (!is_finite(t)) throw OutsideAnnulus(std::string("terms overflow on the ") + which + " side");
    }
    throw ToleranceNotReached(std::string("psi series did not settle on the ") + which + " side");
}

}  // namespace detail

inline SeriesValue eval_psi(const QSeriesSpec& spec, Tolerance tol = {}) {
    const Complex q = spec.qbase.q;
    const long r = static_cast<long>(spec.a.size()), s = static_cast<long>(spec.b.size());
    const double sgn = ((s - r) % 2 == 0) ? 1.0 : -1.0;
    if (spec.z == 0.0) throw OutsideAnnulus("psi series needs z != 0");

    // right side: n >= 0
    double right_limit = 0.0;
    if (s == r) right_limit = std::abs(spec.z);
    auto right_ratio = [&](long n) -> std::optional<Complex> {
        Complex qn = qpow(q, double(n));
        Complex f = spec.z * sgn * qpow(q, double((s - r) * n));
        for (Complex a : spec.a) {
            Complex g = 1.0 - a * qn;
            if (std::abs(g) <= 1e-14) return std::nullopt;
            f *= g;
        }
        for (Complex b : spec.b) {
            Complex g = 1.0 - b * qn;
            if (std::abs(g) <= 1e-14) throw IllFormedSpec("denominator parameter equals q^{-n}, n >= 0");
            f /= g;
        }
        return f;
    };
    // a = q^{-n} (n >= 0) ends the right side, b = q^k (k >= 1) the left side
    auto hits_power = [&](Complex x, long sign, long min_k) {
        if (x == 0.0) return false;
        long k = std::lround(sign * std::log(std::abs(x)) / std::log(std::abs(q)));
        if (k < min_k) return false;
        Complex qk = qpow(q, double(sign * k));
        return std::abs(x - qk) <= 1e-14 * std::abs(qk);
    };
    bool right_terminates = false, left_terminates = false;
    for (Complex a : spec.a) right_terminates = right_terminates || hits_power(a, -1, 0);
    for (Complex b : spec.b) left_terminates = left_terminates || hits_power(b, 1, 1);
    if (!right_terminates && (r > s || (r == s && !(std::abs(spec.z) < 1.0))))
        throw OutsideAnnulus("|z| must be < 1 for the n >= 0 side");

    // left side: n = -k, k >= 1
    int za = 0, zb = 0;
    Complex pa = 1.0, pb = 1.0;
    for (Complex a : spec.a) {
        if (a == 0.0) ++za;
        else pa *= a;
    }
    for (Complex b : spec.b) {
        if (b == 0.0) ++zb;
        else pb *= b;
    }
    double left_limit = 0.0;
    if (zb == za) left_limit = std::abs(pb / (pa * spec.z));
    if (!left_terminates && (zb < za || (zb == za && !(left_limit < 1.0))))
        throw OutsideAnnulus("|z| must exceed |b_1...b_s|/|a_1...a_r| for the n < 0 side");
    auto left_ratio = [&](long j) -> std::optional<Complex> {
        long k = j + 1;  // ratio T_{-k} / T_{-(k-1)}
        Complex qk = qpow(q, double(k));
        Complex f = sgn / spec.z;
        for (Complex b : spec.b) {
            Complex g = qk - b;
            if (std::abs(g) <= 1e-14 * std::abs(qk)) return std::nullopt;
            f *= g;
        }
        for (Complex a : spec.a) {
            Complex g = qk - a;
            if (std::abs(g) <= 1e-14 * std::abs(qk)) throw IllFormedSpec("numerator parameter equals q^k, k >= 1");
            f /= g;
        }
        return f;
    };
    detail::QSide R = detail::q_side_sum(right_ratio, 0, right_limit, "right");
    detail::QSide L = detail::q_side_sum(left_ratio, 1, left_limit, "left");
    SeriesValue v{R.value + L.value, R.err + L.err, R.terms + L.terms};
    if (v.est_error > tol.budget(std::abs(v.value)))
        throw ToleranceNotReached("psi series error estimate above tolerance");
    return v;
}

// ---------------------------------------------------------------------------
// Closed forms.

enum class QKind { Ramanujan1psi1, Bailey6psi6, QBinomialRatioLimit };

inline const char* to_string(QKind k) {
    switch (k) {
        case QKind::Ramanujan1psi1: return "Ramanujan1psi1";
        case QKind::Bailey6psi6: return "Bailey6psi6";
        case QKind::QBinomialRatioLimit: return "QBinomialRatioLimit";
    }
    return "?";
}

// 1psi1(A; B; q, z) for B/A < |z| < 1 in terms of A, B themselves.
inline Complex ramanujan_1psi1_value(Complex A, Complex B, Complex z, QBase qb) {
    const Complex q = qb.q;
    if (!(std::abs(B / A) < std::abs(z) && std::abs(z) < 1.0))
        throw ConstraintViolation("Ramanujan 1psi1 requires |B/A| < |z| < 1");
    return qpoch_inf({q, B / A, A * z, q / (A * z)}, qb) / qpoch_inf({B, q / A, z, B / (A * z)}, qb);
}

// Exponent form: 1psi1(q^a; q^b; q, z).
inline Complex ramanujan_1psi1(Complex a, Complex b, Complex z, QBase qb) {
    return ramanujan_1psi1_value(qpow(qb.q, a), qpow(qb.q, b), z, qb);
}

inline QSeriesSpec bailey_6psi6_series(Complex a, Complex b, Complex c, Complex d, Complex e, QBase qb) {
    const Complex q = qb.q, r = std::sqrt(a);
    return {qb,
            {q * r, -q * r, b, c, d, e},
            {r, -r, q * a / b, q * a / c, q * a / d, q * a / e},
            q * a * a / (b * c * d * e)};
}

inline Complex bailey_6psi6(Complex a, Complex b, Complex c, Complex d, Complex e, QBase qb) {
    const Complex q = qb.q;
    if (!(std::abs(q * a * a) < std::abs(b * c * d * e)))
        throw ConstraintViolation("Bailey 6psi6 requires |q a^2| < |b c d e|");
    Complex qa = q * a;
    return qpoch_inf({q, qa, q / a, qa / (b * c), qa / (b * d), qa / (b * e), qa / (c * d), qa / (c * e), qa / (d * e)}, qb) /
           qpoch_inf({q / b, q / c, q / d, q / e, qa / b, qa / c, qa / d, qa / e, qa * a / (b * c * d * e)}, qb);
}

struct QBinomialRatio {
    Complex finite;  // (q^alpha z; q)_inf / (q^beta z; q)_inf
    Complex target;  // (1 - z)^{beta - alpha}
};

inline QBinomialRatio qbinomial_ratio_limit(Complex alpha, Complex beta, Complex z, double q) {
    require_real_q(q);
    if (!(std::abs(z) > 0.0 && std::abs(z) <= 1.0 + 1e-14)) throw ConstraintViolation("requires 0 < |z| <= 1");
    double lq = std::log(q);
    if (z == 1.0 && !((beta - alpha).real() > 0.0)) throw ConstraintViolation("z = 1 requires Re(beta-alpha) > 0");
    Complex f = std::exp(log_qpoch_shifted(z, lq, alpha) - log_qpoch_shifted(z, lq, beta));
    Complex target = (z == 1.0) ? Complex(0.0) : std::pow(1.0 - z, beta - alpha);
    return {f, target};
}

inline Complex closed_form_q(QKind kind, const std::vector<Complex>& p, QBase qb) {
    switch (kind) {
        case QKind::Ramanujan1psi1:
            if (p.size() != 3) throw DomainError("Ramanujan1psi1 takes (a, b, z)");
            return ramanujan_1psi1(p[0], p[1], p[2], qb);
        case QKind::Bailey6psi6:
            if (p.size() != 5) throw DomainError("Bailey6psi6 takes (a, b, c, d, e)");
            return bailey_6psi6(p[0], p[1], p[2], p[3], p[4], qb);
        case QKind::QBinomialRatioLimit:
            if (p.size() != 3) throw DomainError("QBinomialRatioLimit takes (alpha, beta, z)");
            return qbinomial_ratio_limit(p[0], p[1], p[2], require_real_q(qb.q)).finite;
    }
    throw DomainError("unknown q kind");
}

// ---------------------------------------------------------------------------
// q -> 1 asymptotics of (a q^alpha; q)_inf, q = e^{-u}.

struct QPochAsymptotic {
    Complex value;        // (1-a)^{1/2-alpha} exp(-Li2(a)/u)
    Complex refined_log;  // -Li2(a')/u + log(1-a')/2 - a'u/(12(1-a')),  a' = a e^{-alpha u}
    double K;             // constant of the bound, evaluated at a'
    double bound;         // K u^2, bounds |log (a';q)_inf - refined_log|
};

// K = (sqrt3/216)|a|(1+|a|)/M^3 with M = min_{t in [0,1]} |1 - t a|.
inline double euler_maclaurin_constant(Complex a) {
    double m2 = std::norm(a);
    if (m2 == 0.0) return 0.0;
    double t = std::clamp(a.real() / m2, 0.0, 1.0);
    double M = std::abs(1.0 - t * a);
    return std::sqrt(3.0) / 216.0 * std::abs(a) * (1.0 + std::abs(a)) / (M * M * M);
}

inline QPochAsymptotic qpoch_inf_asymptotic(Complex a, Complex alpha, double u) {
    if (!(u > 0.0)) throw DomainError("u must be positive");
    auto on_cut = [](Complex x) { return x.imag() == 0.0 && x.real() >= 1.0; };
    if (on_cut(a)) throw BranchCutError("a must avoid [1, inf)");
    Complex ap = a * std::exp(-alpha * u);
    if (on_cut(ap)) throw BranchCutError("a q^alpha must avoid [1, inf)");
    QPochAsymptotic r;
    r.value = std::pow(1.0 - a, 0.5 - alpha) * std::exp(-dilog(a) / u);
    r.refined_log = -dilog(ap) / u + 0.5 * log1p(-ap) - ap * u / (12.0 * (1.0 - ap));
    r.K = euler_maclaurin_constant(ap);
    r.bound = r.K * u * u;
    return r;
}

// ---------------------------------------------------------------------------
// Limit q -> 1 of m psi m (q^alpha; q^beta; q, q^tau z).

struct QtoOnePath {
    std::vector<Complex> alpha, beta;
    double tau = 1.0;
    Complex z = 1.0;
    std::vector<double> q_sequence;
};

struct LimitGap {
    double q;
    double gap;
    Complex psi;
    Complex target;
};

inline std::vector<LimitGap> psi_limit_probe(const QtoOnePath& path) {
    if (path.alpha.size() != path.beta.size() || path.alpha.empty())
        throw PreconditionError("alpha and beta need equal, nonzero length");
    Complex sigma = 0.0;
    for (std::size_t j = 0; j < path.alpha.size(); ++j) sigma += path.beta[j] - path.alpha[j];
    if (!(sigma.real() > 1.0)) throw PreconditionError("requires Re sigma > 1");
    if (!(path.tau > 0.0 && path.tau < sigma.real())) throw PreconditionError("requires 0 < tau < Re sigma");
    if (std::abs(std::abs(path.z) - 1.0) > 1e-12) throw PreconditionError("z must lie on the unit circle");
    Complex target = eval_H({path.alpha, path.beta, path.z}, Tolerance(1e-13, 1e-11)).value;
    std::vector<LimitGap> out;
    for (double q : path.q_sequence) {
        QBase qb(q);
        QSeriesSpec s{qb, {}, {}, std::pow(q, path.tau) * path.z};
        for (Complex a : path.alpha) s.a.push_back(qpow(q, a));
        for (Complex b : path.beta) s.b.push_back(qpow(q, b));
        Complex v = eval_psi(s, Tolerance(1e-12, 1e-10)).value;
        out.push_back({q, std::abs(v - target), v, target});
    }
    return out;
}

}  // namespace rbeta
