#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "gamma.hpp"
#include "tail_sum.hpp"

namespace rbeta {

// sum over n in Z of prod (c_j)_n / prod (d_j)_n z^n
struct BilateralSeriesSpec {
    std::vector<Complex> c, d;
    Complex z = 0.0;
};

enum class ConvergenceTag {
    TerminatesRight,
    TerminatesLeft,
    TerminatesBoth,
    AbsolutelyConvergentOnUnitCircle,
    ConditionallyConvergentOnUnitCircle,
    DivergentEverywhere,
    NotOnDomain,
};

inline const char* to_string(ConvergenceTag t) {
    switch (t) {
        case ConvergenceTag::TerminatesRight: return "TerminatesRight";
        case ConvergenceTag::TerminatesLeft: return "TerminatesLeft";
        case ConvergenceTag::TerminatesBoth: return "TerminatesBoth";
        case ConvergenceTag::AbsolutelyConvergentOnUnitCircle: return "AbsolutelyConvergentOnUnitCircle";
        case ConvergenceTag::ConditionallyConvergentOnUnitCircle: return "ConditionallyConvergentOnUnitCircle";
        case ConvergenceTag::DivergentEverywhere: return "DivergentEverywhere";
        case ConvergenceTag::NotOnDomain: return "NotOnDomain";
    }
    return "?";
}

struct ConvergenceClass {
    ConvergenceTag tag = ConvergenceTag::NotOnDomain;
    Complex sigma = 0.0;             // sum(c) - sum(d)
    std::optional<long> right_end;   // last nonzero index M on the right
    std::optional<long> left_end;    // number of nonzero terms with n < 0
    bool convergent = false;
    std::string reason;
};

struct SeriesValue {
    Complex value = 0.0;
    double est_error = 0.0;
    long terms_used = 0;
};

enum class SummationMethod { asymptotic, levin };

namespace detail {

// One side of the bilateral series, written as sum_{k >= first} of
// prod (num)_k / prod (den)_k z^k.  The right side is (c, d, z, 0) and the
// left side is (1-d, 1-c, eps/z, 1).
struct Side {
    std::vector<Complex> num, den;
    Complex z;
    long first;
    std::optional<long> last;  // terminating index
};

enum class SideState { finite, entire, geometric, unit_absolute, unit_conditional, divergent };

struct SideInfo {
    SideState state = SideState::divergent;
    std::string reason;
};

inline std::optional<long> termination_index(const std::vector<Complex>& num) {
    std::optional<long> m;
    for (Complex a : num) {
        long n;
        if (integer_distance(a, n) <= pole_window && n <= 0) m = m ? std::min(*m, -n) : -n;
    }
    return m;
}

inline Side make_side(const std::vector<Complex>& num, const std::vector<Complex>& den, Complex z, long first,
                      const char* which) {
    Side s{num, den, z, first, termination_index(num)};
    for (Complex b : den) {
        long n;
        if (integer_distance(b, n) <= pole_window && n <= 0) {
            // (b)_k vanishes for k > -b; harmless only if the side stops first
            if (!s.last || *s.last > -n)
                throw IllFormedSpec(std::string("parameter makes a vanishing denominator on the ") + which +
                                    " side");
        }
    }
    return s;
}

inline Complex sum_of(const std::vector<Complex>& v) {
    Complex s = 0.0;
    for (Complex x : v) s += x;
    return s;
}

inline double max_abs(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double m = 0.0;
    for (Complex x : a) m = std::max(m, std::abs(x));
    for (Complex x : b) m = std::max(m, std::abs(x));
    return m;
}

inline bool near_one(Complex z) { return std::abs(z - 1.0) <= 1e-14; }
inline bool on_unit_circle(Complex z) { return std::abs(std::abs(z) - 1.0) <= 1e-14; }

inline SideInfo side_info(const Side& s) {
    SideInfo info;
    if (s.last) {
        if (*s.last < s.first) {
            info.state = SideState::finite;
            return info;
        }
        if (!is_finite(s.z)) {
            info.reason = "argument z = 0 with left-side terms present";
            return info;
        }
        info.state = SideState::finite;
        return info;
    }
    if (!is_finite(s.z)) {
        info.reason = "argument z = 0 with a non-terminating left side";
        return info;
    }
    std::size_t p = s.num.size(), q = s.den.size();
    if (p < q) {
        info.state = SideState::entire;
        return info;
    }
    if (p > q) {
        if (s.z == 0.0) {
            info.state = SideState::entire;
            return info;
        }
        info.reason = "p != q and the series does not terminate";
        return info;
    }
    double r = std::abs(s.z);
    if (on_unit_circle(s.z)) {
        double re = (sum_of(s.num) - sum_of(s.den)).real();
        if (re < -1.0) {
            info.state = SideState::unit_absolute;
        } else if (re < 0.0 && !near_one(s.z)) {
            info.state = SideState::unit_conditional;
        } else if (re < 0.0) {
            info.reason = "conditional convergence excludes z=1";
        } else {
            info.reason = "terms do not decay on |z|=1 (Re sigma >= 0)";
        }
        return info;
    }
    if (r < 1.0) {
        info.state = SideState::geometric;
        return info;
    }
    info.reason = "|z| outside the convergence radius";
    return info;
}

struct SideSum {
    Complex value = 0.0;
    double err = 0.0;
    long terms = 0;
};

inline Complex ratio_factor(const Side& s, long k) {
    Complex r = s.z;
    for (Complex a : s.num) r *= a + double(k);
    for (Complex b : s.den) r /= b + double(k);
    return r;
}

// Explicit summation until the terms are negligible (fast decay).
inline SideSum sum_direct(const Side& s, double decay_hint) {
    SideSum out;
    const double eps = std::numeric_limits<double>::epsilon();
    double kmin = 2.0 * max_abs(s.num, s.den) + 10.0;
    Complex t = 1.0;
    double peak = 0.0;
    int quiet = 0;
    const long cap = 20000000;
    for (long k = 0; k < cap; ++k) {
        if (k >= s.first) {
            out.value += t;
            ++out.terms;
            peak = std::max(peak, std::abs(out.value));
        }
        if (s.last && k >= *s.last) {
            out.err = eps * peak * std::sqrt(double(out.terms) + 1.0);
            return out;
        }
        Complex f = ratio_factor(s, k);
        Complex next = t * f;
        double rho = std::max(std::abs(f), decay_hint);
        double bound = rho < 1.0 ? std::abs(next) / (1.0 - rho) : std::numeric_limits<double>::infinity();
        if (k >= s.first && double(k) > kmin && bound <= 1e-17 * std::abs(out.value)) {
            if (++quiet >= 2) {
                out.err = bound + eps * peak * std::sqrt(double(out.terms) + 1.0);
                return out;
            }
        } else {
            quiet = 0;
        }
        if (t != 0.0 && next == 0.0 && !s.last) {
            out.err = eps * peak;
            return out;
        }
        t = next;
    }
    throw ToleranceNotReached("direct summation did not settle within the term cap");
}

// |z| = 1, p = q: explicit terms to N, then the asymptotic tail
// K z^n n^{sigma} E(1/n) with K = prod Gamma(den)/Gamma(num).
inline SideSum sum_unit_asymptotic(const Side& s) {
    SideSum out;
    const double eps = std::numeric_limits<double>::epsilon();
    double big = max_abs(s.num, s.den);
    double N = 64.0 + 8.0 * big;
    if (!near_one(s.z)) N = std::max(N, std::ceil(45.0 / std::abs(std::log(s.z))));
    N = std::min(N, 2.0e7);
    long n_end = static_cast<long>(N);
    Complex t = 1.0, acc = 0.0;
    double peak = 0.0;
    for (long k = 0; k < n_end; ++k) {
        if (k >= s.first) {
            acc += t;
            peak = std::max(peak, std::abs(acc));
        }
        t *= ratio_factor(s, k);
    }
    Complex K = 1.0;
    for (Complex b : s.den) K *= gamma(b);
    for (Complex a : s.num) K *= recip_gamma(a);
    Complex sigma = sum_of(s.num) - sum_of(s.den);
    auto e = gamma_ratio_expansion(s.num, s.den, 16);
    TailSum tail = power_tail(s.z, -sigma, e, double(n_end));
    out.value = acc + K * tail.value;
    // cross-check the expansion against the explicit term at n_end
    Complex predicted = K * std::exp(double(n_end) * std::log(s.z)) * std::pow(double(n_end), sigma) *
                        eval_expansion(e, 1.0 / double(n_end));
    double drift = std::abs(predicted - t) / std::max(std::abs(t), 1e-300);
    out.err = std::abs(K) * tail.err + eps * peak * std::sqrt(double(n_end)) +
              drift * std::abs(K * tail.value);
    out.terms = n_end - s.first;
    return out;
}

inline SideSum sum_unit_levin(const Side& s) {
    const long cap = 400;
    std::vector<Complex> terms;
    terms.reserve(cap);
    Complex t = 1.0;
    for (long k = 0; k < cap + s.first; ++k) {
        if (k >= s.first) terms.push_back(t);
        t *= ratio_factor(s, k);
    }
    // skip a short transient so the transform sees the asymptotic regime
    std::size_t skip = std::min<std::size_t>(static_cast<std::size_t>(2.0 * max_abs(s.num, s.den)), 60);
    Complex head = 0.0;
    for (std::size_t i = 0; i < skip; ++i) head += terms[i];
    std::vector<Complex> rest(terms.begin() + static_cast<long>(skip), terms.end());
    LevinResult lr = levin_u(rest, 1.0, 40);
    SideSum out;
    out.value = head + lr.value;
    out.err = lr.err;
    out.terms = static_cast<long>(terms.size());
    return out;
}

inline SideSum sum_side(const Side& s, const SideInfo& info, SummationMethod method) {
    switch (info.state) {
        case SideState::finite:
            if (s.last && *s.last < s.first) return {};
            return sum_direct(s, 0.0);
        case SideState::entire: return sum_direct(s, 0.0);
        case SideState::geometric: {
            double r = std::abs(s.z);
            if (r < 1.0 - 1e-5) return sum_direct(s, r);
            return sum_unit_asymptotic(s);
        }
        case SideState::unit_absolute:
        case SideState::unit_conditional:
            return method == SummationMethod::levin ? sum_unit_levin(s) : sum_unit_asymptotic(s);
        case SideState::divergent: break;
    }
    throw DivergentError(info.reason);
}

inline Complex epsilon_over(const BilateralSeriesSpec& spec) {
    bool odd = (spec.c.size() + spec.d.size()) % 2 == 1;
    Complex eps = odd ? -1.0 : 1.0;
    if (spec.z == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};
    return eps / spec.z;
}

inline std::vector<Complex> one_minus(const std::vector<Complex>& v) {
    std::vector<Complex> r;
    r.reserve(v.size());
    for (Complex x : v) r.push_back(1.0 - x);
    return r;
}

inline Side right_side(const BilateralSeriesSpec& spec) { return make_side(spec.c, spec.d, spec.z, 0, "right"); }
inline Side left_side(const BilateralSeriesSpec& spec) {
    return make_side(one_minus(spec.d), one_minus(spec.c), epsilon_over(spec), 1, "left");
}

}  // namespace detail

inline ConvergenceClass classify(const BilateralSeriesSpec& spec) {
    using namespace detail;
    Side R = right_side(spec), L = left_side(spec);
    ConvergenceClass cc;
    cc.sigma = sum_of(spec.c) - sum_of(spec.d);
    if (R.last) cc.right_end = *R.last;
    if (L.last) cc.left_end = *L.last;
    SideInfo ri = side_info(R), li = side_info(L);
    cc.convergent = ri.state != SideState::divergent && li.state != SideState::divergent;
    cc.reason = ri.state == SideState::divergent ? ri.reason : li.reason;
    if (R.last && L.last) {
        cc.tag = ConvergenceTag::TerminatesBoth;
    } else if (R.last) {
        cc.tag = ConvergenceTag::TerminatesRight;
    } else if (L.last) {
        cc.tag = ConvergenceTag::TerminatesLeft;
    } else if (spec.c.size() != spec.d.size()) {
        cc.tag = ConvergenceTag::DivergentEverywhere;
        cc.convergent = false;
        cc.reason = "p != q and the series does not terminate";
    } else if (!on_unit_circle(spec.z)) {
        cc.tag = ConvergenceTag::NotOnDomain;
        cc.convergent = false;
        cc.reason = "non-terminating p = q series converges only on |z| = 1";
    } else if (ri.state == SideState::unit_absolute) {
        cc.tag = ConvergenceTag::AbsolutelyConvergentOnUnitCircle;
    } else if (ri.state == SideState::unit_conditional) {
        cc.tag = ConvergenceTag::ConditionallyConvergentOnUnitCircle;
    } else {
        cc.tag = ConvergenceTag::NotOnDomain;
        cc.convergent = false;
    }
    return cc;
}

inline SeriesValue eval_H(const BilateralSeriesSpec& spec, Tolerance tol = {},
                          SummationMethod method = SummationMethod::asymptotic) {
    using namespace detail;
    ConvergenceClass cc = classify(spec);
    if (!cc.convergent) throw DivergentError(cc.reason);
    Side R = right_side(spec), L = left_side(spec);
    SideSum r = sum_side(R, side_info(R), method);
    SideSum l = sum_side(L, side_info(L), method);
    SeriesValue v;
    v.value = r.value + l.value;
    v.est_error = r.err + l.err;
    v.terms_used = r.terms + l.terms;
    if (!is_finite(v.value)) throw DivergentError("non-finite partial sums");
    if (v.est_error > tol.budget(std::abs(v.value))) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "estimated error %.3g above tolerance (|H| = %.3g)", v.est_error, std::abs(v.value));
        throw ToleranceNotReached(buf);
    }
    return v;
}

inline BilateralSeriesSpec symmetry_transform(const BilateralSeriesSpec& spec) {
    if (spec.z == 0.0) throw DomainError("symmetry_transform: z must be nonzero");
    return {detail::one_minus(spec.d), detail::one_minus(spec.c), detail::epsilon_over(spec)};
}

// sum_{n >= 0} prod (a_j)_n / prod (b_j)_n z^n / n!
struct UnilateralSpec {
    std::vector<Complex> a, b;
    Complex z = 0.0;
};

inline UnilateralSpec reduce_to_unilateral(const BilateralSeriesSpec& spec) {
    for (std::size_t j = 0; j < spec.d.size(); ++j) {
        if (std::abs(spec.d[j] - 1.0) <= pole_window) {
            UnilateralSpec u{spec.c, {}, spec.z};
            for (std::size_t i = 0; i < spec.d.size(); ++i)
                if (i != j) u.b.push_back(spec.d[i]);
            return u;
        }
    }
    throw NotReducible("no denominator parameter equals 1");
}

inline SeriesValue eval_F(const UnilateralSpec& u, Tolerance tol = {}) {
    using namespace detail;
    std::vector<Complex> den = u.b;
    den.push_back(1.0);
    Side s = make_side(u.a, den, u.z, 0, "unilateral");
    SideInfo info = side_info(s);
    SideSum r = sum_side(s, info, SummationMethod::asymptotic);
    if (r.err > tol.budget(std::abs(r.value))) throw ToleranceNotReached("unilateral sum above tolerance");
    return {r.value, r.err, r.terms};
}

// ---------------------------------------------------------------------------
// Closed-form summations.

enum class HKind {
    OneH1_minus_exp,
    OneH1_plus_exp,
    OneH1_minus1,
    OneH1_plus1,
    Gauss2H2,
    TwoH2_minus1_constrained,
    WellPoised3H3,
    VWP4H4_minus1,
    VWP5H5,
};

struct HKindInfo {
    HKind kind;
    const char* name;
    std::size_t arity;
};

inline const std::vector<HKindInfo>& h_kinds() {
    static const std::vector<HKindInfo> k = {
        {HKind::OneH1_minus_exp, "OneH1_minus_exp", 3}, {HKind::OneH1_plus_exp, "OneH1_plus_exp", 3},
        {HKind::OneH1_minus1, "OneH1_minus1", 2},       {HKind::OneH1_plus1, "OneH1_plus1", 2},
        {HKind::Gauss2H2, "Gauss2H2", 4},               {HKind::TwoH2_minus1_constrained, "TwoH2_minus1_constrained", 4},
        {HKind::WellPoised3H3, "WellPoised3H3", 4},     {HKind::VWP4H4_minus1, "VWP4H4_minus1", 4},
        {HKind::VWP5H5, "VWP5H5", 5},
    };
    return k;
}

inline const HKindInfo& h_kind_info(HKind kind) {
    for (const auto& k : h_kinds())
        if (k.kind == kind) return k;
    throw DomainError("unknown H kind");
}

inline std::optional<HKind> h_kind_from_name(const std::string& name) {
    for (const auto& k : h_kinds())
        if (name == k.name) return k.kind;
    return std::nullopt;
}

// The series whose value closed_form_H(kind, p) gives.
inline BilateralSeriesSpec h_series_for(HKind kind, const std::vector<Complex>& p) {
    if (p.size() != h_kind_info(kind).arity) throw DomainError("wrong number of parameters for H kind");
    switch (kind) {
        case HKind::OneH1_minus_exp: return {{p[0]}, {p[1]}, -std::exp(-I * p[2])};
        case HKind::OneH1_plus_exp: return {{p[0]}, {p[1]}, std::exp(I * p[2])};
        case HKind::OneH1_minus1: return {{p[0]}, {p[1]}, -1.0};
        case HKind::OneH1_plus1: return {{p[0]}, {p[1]}, 1.0};
        case HKind::Gauss2H2: return {{p[0], p[1]}, {p[2], p[3]}, 1.0};
        case HKind::TwoH2_minus1_constrained: return {{-p[0], -p[1]}, {p[2] + 1.0, p[3] + 1.0}, -1.0};
        case HKind::WellPoised3H3: {
            Complex a = p[0];
            return {{p[1], p[2], p[3]}, {1.0 + a - p[1], 1.0 + a - p[2], 1.0 + a - p[3]}, 1.0};
        }
        case HKind::VWP4H4_minus1: {
            Complex a = p[0];
            return {{1.0 + 0.5 * a, p[1], p[2], p[3]}, {0.5 * a, 1.0 + a - p[1], 1.0 + a - p[2], 1.0 + a - p[3]}, -1.0};
        }
        case HKind::VWP5H5: {
            Complex a = p[0];
            return {{1.0 + 0.5 * a, p[1], p[2], p[3], p[4]},
                    {0.5 * a, 1.0 + a - p[1], 1.0 + a - p[2], 1.0 + a - p[3], 1.0 + a - p[4]},
                    1.0};
        }
    }
    throw DomainError("unknown H kind");
}

// Re of the quantity that must be positive for the kind's summation to hold.
inline double h_constraint_margin(HKind kind, const std::vector<Complex>& p) {
    switch (kind) {
        case HKind::OneH1_minus_exp:
        case HKind::OneH1_plus_exp:
        case HKind::OneH1_minus1: return (p[1] - p[0]).real();
        case HKind::OneH1_plus1: return (p[1] - p[0]).real() - 1.0;
        case HKind::Gauss2H2: return (p[2] + p[3] - p[0] - p[1] - 1.0).real();
        case HKind::TwoH2_minus1_constrained: return (p[0] + p[1] + p[2] + p[3] + 1.0).real();
        case HKind::WellPoised3H3: return (1.0 + 1.5 * p[0] - p[1] - p[2] - p[3]).real();
        case HKind::VWP4H4_minus1: return (1.0 + 3.0 * p[0] - 2.0 * (p[1] + p[2] + p[3])).real();
        case HKind::VWP5H5: return (1.0 + 2.0 * p[0] - p[1] - p[2] - p[3] - p[4]).real();
    }
    return 0.0;
}

inline const char* h_constraint_text(HKind kind) {
    switch (kind) {
        case HKind::OneH1_minus_exp:
        case HKind::OneH1_plus_exp:
        case HKind::OneH1_minus1: return "Re(b-a) > 0";
        case HKind::OneH1_plus1: return "Re(b-a) > 1";
        case HKind::Gauss2H2: return "Re(c+d-a-b-1) > 0";
        case HKind::TwoH2_minus1_constrained: return "Re(a1+a2+b1+b2+1) > 0";
        case HKind::WellPoised3H3: return "Re(1+3a/2-b-c-d) > 0";
        case HKind::VWP4H4_minus1: return "Re(1+3a-2b-2c-2d) > 0";
        case HKind::VWP5H5: return "Re(1+2a-b-c-d-e) > 0";
    }
    return "";
}

inline Complex closed_form_H(HKind kind, const std::vector<Complex>& p) {
    if (p.size() != h_kind_info(kind).arity) throw DomainError("wrong number of parameters for H kind");
    if (!(h_constraint_margin(kind, p) > 0.0))
        throw ConstraintViolation(std::string(h_kind_info(kind).name) + " requires " + h_constraint_text(kind));
    auto power_or_zero = [](double base, Complex e) -> Complex {
        if (base > 0.0) return std::pow(base, e);
        if (e.real() > 0.0) return 0.0;
        throw ConstraintViolation("vanishing base raised to a power with Re <= 0");
    };
    switch (kind) {
        case HKind::OneH1_minus_exp: {
            Complex a = p[0], b = p[1];
            double t = p[2].real();
            if (p[2].imag() != 0.0 || t < -pi || t > pi) throw ConstraintViolation("t must be real in [-pi, pi]");
            return gamma_ratio({1.0 - a, b}, {b - a}) * std::exp(0.5 * I * t * (a + b - 1.0)) *
                   power_or_zero(2.0 * std::cos(0.5 * t), b - a - 1.0);
        }
        case HKind::OneH1_plus_exp: {
            Complex a = p[0], b = p[1];
            double t = p[2].real();
            if (p[2].imag() != 0.0 || t < 0.0 || t > 2.0 * pi) throw ConstraintViolation("t must be real in [0, 2pi]");
            return gamma_ratio({1.0 - a, b}, {b - a}) * std::exp(0.5 * I * (pi - t) * (a + b - 1.0)) *
                   power_or_zero(2.0 * std::sin(0.5 * t), b - a - 1.0);
        }
        case HKind::OneH1_minus1: {
            Complex a = p[0], b = p[1];
            return std::pow(2.0, b - a - 1.0) * gamma_ratio({1.0 - a, b}, {b - a});
        }
        case HKind::OneH1_plus1: return 0.0;
        case HKind::Gauss2H2: {
            Complex a = p[0], b = p[1], c = p[2], d = p[3];
            return gamma_ratio({c, d, 1.0 - a, 1.0 - b, c + d - a - b - 1.0}, {c - a, d - a, c - b, d - b});
        }
        case HKind::TwoH2_minus1_constrained: {
            Complex b1 = p[0], b2 = p[1], a1 = p[2], a2 = p[3];
            if (std::abs((a1 - b1) - (a2 - b2)) > 1e-12) throw ConstraintViolation("requires a1-b1 = a2-b2");
            return cos_pi(0.5 * (b1 - a1)) * gamma_ratio({a1 + 1.0, b1 + 1.0, a2 + 1.0, b2 + 1.0},
                                                          {0.5 * (a1 + b1) + 1.0, 0.5 * (a2 + b2) + 1.0, a1 + b2 + 1.0});
        }
        case HKind::WellPoised3H3: {
            Complex a = p[0], b = p[1], c = p[2], d = p[3];
            return gamma_ratio({1.0 - b, 1.0 - c, 1.0 - d, 1.0 + a - b, 1.0 + a - c, 1.0 + a - d, 1.0 + 0.5 * a,
                                1.0 - 0.5 * a, 1.0 + 1.5 * a - b - c - d},
                               {1.0 + a - c - d, 1.0 + a - b - d, 1.0 + a - b - c, 1.0 + 0.5 * a - b, 1.0 + 0.5 * a - c,
                                1.0 + 0.5 * a - d, 1.0 + a, 1.0 - a});
        }
        case HKind::VWP4H4_minus1: {
            Complex a = p[0], b = p[1], c = p[2], d = p[3];
            return gamma_ratio({1.0 - b, 1.0 - c, 1.0 - d, 1.0 + a - b, 1.0 + a - c, 1.0 + a - d},
                               {1.0 - a, 1.0 + a, 1.0 + a - b - c, 1.0 + a - b - d, 1.0 + a - c - d});
        }
        case HKind::VWP5H5: {
            Complex a = p[0], b = p[1], c = p[2], d = p[3], e = p[4];
            return gamma_ratio({1.0 - b, 1.0 - c, 1.0 - d, 1.0 - e, 1.0 + a - b, 1.0 + a - c, 1.0 + a - d, 1.0 + a - e,
                                1.0 + 2.0 * a - b - c - d - e},
                               {1.0 + a, 1.0 - a, 1.0 + a - b - c, 1.0 + a - b - d, 1.0 + a - b - e, 1.0 + a - c - d,
                                1.0 + a - c - e, 1.0 + a - d - e});
        }
    }
    throw DomainError("unknown H kind");
}

// Drops numerator/denominator pairs that agree to within `tol`; the
// corresponding Pochhammer ratios are identically 1.
inline BilateralSeriesSpec cancel_matching_parameters(const BilateralSeriesSpec& spec, double tol = 1e-13) {
    BilateralSeriesSpec out{{}, spec.d, spec.z};
    for (Complex c : spec.c) {
        auto it = std::find_if(out.d.begin(), out.d.end(), [&](Complex d) { return std::abs(c - d) <= tol; });
        if (it != out.d.end())
            out.d.erase(it);
        else
            out.c.push_back(c);
    }
    return out;
}

}  // namespace rbeta
