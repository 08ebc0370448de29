#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "bilateral.hpp"
#include "gamma.hpp"
#include "io.hpp"
#include "qintegrals.hpp"
#include "qseries.hpp"
#include "ramanujan.hpp"
#include "record.hpp"

namespace rbeta {

inline constexpr const char* tool_version = "0.1.0";

struct SuiteConfig {
    std::string suite;
    std::uint64_t seed = 1;
    int draws_per_identity = 0;  // 0: each identity's own default
    std::map<std::string, Tolerance> tol;
    std::string output_path;
    std::string format = "json";
};

struct SuiteSummary {
    std::size_t total = 0, passed = 0, failed = 0;
    double max_rel_gap = 0.0;
};

struct SuiteReport {
    std::vector<VerificationRecord> records;
    SuiteSummary summary;
    std::string tool_version;
    SuiteConfig config;
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& what) : Error("UnknownSuite", what) {}
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n = {"classical-core", "classical-beta", "q-core", "q-beta", "limits"};
    return n;
}

namespace detail {

using Rng = std::mt19937_64;
using Task = std::function<std::vector<VerificationRecord>(Rng&)>;

inline double uni(Rng& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }
inline long uni_int(Rng& g, long a, long b) { return std::uniform_int_distribution<long>(a, b)(g); }
inline Complex polar_draw(Rng& g, double r0, double r1) { return std::polar(uni(g, r0, r1), uni(g, -pi, pi)); }

// measured <= bound, written as |measured - 0| against an absolute
// tolerance equal to the bound
inline VerificationRecord bound_record(std::string id, ParamMap in, double measured, double bound, double ms) {
    VerificationRecord r = make_record(std::move(id), std::move(in), measured, 0.0,
                                       Tolerance(std::max(bound, std::numeric_limits<double>::denorm_min()), 0.0), ms);
    r.note = "bound: lhs <= tol.abs";
    return r;
}

// A limit probe gives two records: the last value against the target, and
// `<id>_monotone` whose lhs is the largest ratio of successive gaps (pairs
// where both gaps are below `floor` count as 0), passing when it is < 1.
template <class Gaps>
std::vector<VerificationRecord> probe_records(const std::string& id, ParamMap in, const Gaps& g, Tolerance tol, double ms,
                                              double floor = 1e-300) {
    double worst = 0.0;
    std::string gaps;
    for (std::size_t i = 0; i < g.size(); ++i) {
        gaps += (gaps.empty() ? "" : " ") + format_real(g[i].gap_value());
        if (i == 0) continue;
        double a = g[i - 1].gap_value(), b = g[i].gap_value();
        if (a <= floor && b <= floor) continue;
        worst = std::max(worst, a > 0.0 ? b / a : std::numeric_limits<double>::infinity());
    }
    std::vector<VerificationRecord> out;
    out.push_back(make_record(id, in, g.back().value_(), g.back().target_(), tol, ms));
    out.back().note = "gaps: " + gaps;
    out.push_back(make_record(id + "_monotone", std::move(in), worst, 0.0, Tolerance(1.0 - 1e-12, 0.0)));
    out.back().note = "largest successive gap ratio; gaps: " + gaps;
    return out;
}

struct GapView {
    double gap;
    Complex v, t;
    double gap_value() const { return gap; }
    Complex value_() const { return v; }
    Complex target_() const { return t; }
};

inline std::vector<GapView> view(const std::vector<QGap>& g) {
    std::vector<GapView> o;
    for (const auto& x : g) o.push_back({x.rel_gap, x.value, x.target});
    return o;
}
inline std::vector<GapView> view(const std::vector<LimitGap>& g) {
    std::vector<GapView> o;
    for (const auto& x : g) o.push_back({x.gap, x.psi, x.target});
    return o;
}

inline int threads_from_env() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* s = std::getenv("RB_THREADS")) {
        int n = std::atoi(s);
        if (n >= 1) return std::min<int>(n, 256);
    }
    return int(hw);
}

// Tasks run in a bounded pool; each has its own generator seeded from
// (seed, task index), and results are collected in task order.
inline std::vector<VerificationRecord> run_tasks(const std::vector<std::pair<std::string, Task>>& tasks, std::uint64_t seed) {
    std::vector<std::vector<VerificationRecord>> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < tasks.size();) {
            std::seed_seq ss{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(i)};
            Rng g(ss);
            try {
                out[i] = tasks[i].second(g);
            } catch (const Error& e) {
                out[i] = {failed_record(tasks[i].first, {}, Tolerance(), e.kind() + ": " + e.what())};
            } catch (const std::exception& e) {
                out[i] = {failed_record(tasks[i].first, {}, Tolerance(), e.what())};
            }
        }
    };
    int n = std::min<int>(threads_from_env(), int(tasks.size()));
    std::vector<std::thread> pool;
    for (int k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::vector<VerificationRecord> flat;
    for (auto& v : out) flat.insert(flat.end(), v.begin(), v.end());
    return flat;
}

class SuiteBuilder {
public:
    explicit SuiteBuilder(const SuiteConfig& c) : cfg_(c) {}

    Tolerance tol(const std::string& id, Tolerance def) const {
        auto it = cfg_.tol.find(id);
        return it == cfg_.tol.end() ? def : it->second;
    }
    int draws(int def) const { return cfg_.draws_per_identity > 0 ? cfg_.draws_per_identity : def; }

    // one task per draw; `one` returns the record(s) for a single draw
    void repeat(const std::string& id, int n, std::function<std::vector<VerificationRecord>(Rng&)> one) {
        for (int k = 0; k < n; ++k) tasks_.push_back({id, one});
    }
    void single(const std::string& id, std::function<VerificationRecord(Rng&)> one) {
        tasks_.push_back({id, [one](Rng& g) { return std::vector<VerificationRecord>{one(g)}; }});
    }
    void each(const std::string& id, int n, std::function<VerificationRecord(Rng&)> one) {
        for (int k = 0; k < n; ++k) single(id, one);
    }
    std::vector<std::pair<std::string, Task>>& tasks() { return tasks_; }

private:
    const SuiteConfig& cfg_;
    std::vector<std::pair<std::string, Task>> tasks_;
};

// Wraps an evaluation so that a library error becomes a failed record.
inline VerificationRecord guarded(const std::string& id, ParamMap in, Tolerance tol, const std::function<VerificationRecord()>& f) {
    try {
        return f();
    } catch (const Error& e) {
        return failed_record(id, std::move(in), tol, e.kind() + ": " + e.what());
    }
}

inline std::vector<VerificationRecord> guarded_many(const std::string& id, ParamMap in, Tolerance tol,
                                                    const std::function<std::vector<VerificationRecord>()>& f) {
    try {
        return f();
    } catch (const Error& e) {
        return {failed_record(id, std::move(in), tol, e.kind() + ": " + e.what())};
    }
}

// ---------------------------------------------------------------------------
// parameter draws

inline std::vector<Complex> draw_h_params(HKind kind, Rng& g) {
    const std::size_t n = h_kind_info(kind).arity;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<Complex> p(n);
        for (auto& x : p) x = uni(g, -0.5, 1.5);
        switch (kind) {
            case HKind::OneH1_minus_exp: p[2] = uni(g, -pi + 0.3, pi - 0.3); break;
            case HKind::OneH1_plus_exp: p[2] = uni(g, 0.3, 2.0 * pi - 0.3); break;
            case HKind::OneH1_plus1: p[1] = p[0] + uni(g, 1.5, 3.0); break;
            case HKind::TwoH2_minus1_constrained: p[3] = p[2] - p[0] + p[1]; break;
            default: break;
        }
        if (!(h_constraint_margin(kind, p) >= 0.5)) continue;
        try {
            Complex v = closed_form_H(kind, p);
            if (!is_finite(v) || (std::abs(v) < 1e-6 && kind != HKind::OneH1_plus1)) continue;
            // stay clear of terminating parameters
            bool near_int = false;
            BilateralSeriesSpec s = h_series_for(kind, p);
            for (Complex c : s.c) {
                long m;
                near_int = near_int || integer_distance(c, m) < 0.05;
            }
            for (Complex d : s.d) {
                long m;
                near_int = near_int || integer_distance(d, m) < 0.05;
            }
            if (near_int) continue;
        } catch (const Error&) {
            continue;
        }
        return p;
    }
    throw ToleranceNotReached("no admissible parameter draw");
}

inline std::vector<Complex> draw_beta_params(BetaKind kind, Rng& g) {
    const std::size_t n = beta_kind_info(kind).arity;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<Complex> p(n);
        for (auto& x : p) x = uni(g, 0.0, 1.5);
        if (kind == BetaKind::RamanujanM2Cos) p[3] = p[1] - p[0] + p[2];
        if (kind == BetaKind::M4VWPShifted || kind == BetaKind::M5VWPShifted) p[0] = uni(g, -0.9, 0.9);
        if (!(beta_constraint_margin(kind, p) >= 0.1)) continue;
        try {
            check_beta_params(kind, p);
            if (kind != BetaKind::Barnes && !(integrability_margin(beta_integrand(kind, p)) >= 0.1)) continue;
            if (!is_finite(beta_integral_closed(kind, p))) continue;
        } catch (const Error&) {
            continue;
        }
        return p;
    }
    throw ToleranceNotReached("no admissible parameter draw");
}

inline IntegrandSpec draw_plain_integrand(int m, Rng& g) {
    IntegrandSpec s;
    s.m = m;
    for (int j = 0; j < m; ++j) {
        s.a.push_back(uni(g, 0.0, 1.5));
        s.b.push_back(uni(g, 0.0, 1.5));
    }
    return s;
}

// ---------------------------------------------------------------------------
// suites

inline void classical_core(SuiteBuilder& B) {
    using namespace std::string_literals;
    B.each("gamma_reflection", B.draws(100), [&B](Rng& g) {
        Complex z(uni(g, -20, 20), uni(g, -20, 20));
        Complex rhs = sin_pi(z) / pi;
        Tolerance t = B.tol("gamma_reflection", Tolerance(1e-12 * (1.0 + std::abs(rhs)), 0.0));
        return make_record("gamma_reflection", {{"z", z}}, recip_gamma(z) * recip_gamma(1.0 - z), rhs, t);
    });
    B.each("gamma_recurrence", B.draws(50), [&B](Rng& g) {
        Complex z(uni(g, -10, 10), uni(g, -10, 10));
        Tolerance t = B.tol("gamma_recurrence", Tolerance(1e-300, 1e-12));
        return guarded("gamma_recurrence", {{"z", z}}, t,
                       [&] { return make_record("gamma_recurrence", {{"z", z}}, gamma(z + 1.0), z * gamma(z), t); });
    });
    B.each("pochhammer_bilateral", B.draws(50), [&B](Rng& g) {
        Complex c(uni(g, -5, 5), uni(g, -2, 2));
        Tolerance t = B.tol("pochhammer_bilateral", Tolerance(1e-300, 1e-12));
        return guarded("pochhammer_bilateral", {{"c", c}}, t, [&] {
            VerificationRecord worst;
            worst.rel_gap = -1.0;
            for (long n = -30; n <= 30; ++n) {
                Complex rhs = (n % 2) ? -1.0 : 1.0;
                auto r = make_record("pochhammer_bilateral", {{"c", c}, {"n", double(n)}},
                                     pochhammer(c, n) * pochhammer(1.0 - c, -n), rhs, t);
                if (r.rel_gap > worst.rel_gap) worst = r;
            }
            return worst;
        });
    });
    B.each("duplication", B.draws(20), [&B](Rng& g) {
        Complex y(uni(g, -3, 3), uni(g, -1, 1));
        Tolerance t = B.tol("duplication", Tolerance(1e-300, 1e-11));
        return make_record("duplication", {{"y", y}}, 4.0 * cos_pi(y) * recip_gamma(y) * recip_gamma(-y),
                           recip_gamma(2.0 * y) * recip_gamma(-2.0 * y), t);
    });
    B.each("dilog_pair", B.draws(20), [&B](Rng& g) {
        double t = uni(g, -pi, pi);
        Tolerance tl = B.tol("dilog_pair", Tolerance(1e-11, 0.0));
        return make_record("dilog_pair", {{"t", t}}, dilog(-std::exp(-I * t)) + dilog(-std::exp(I * t)),
                           0.5 * t * t - pi * pi / 6.0, tl);
    });

    for (const auto& k : h_kinds()) {
        std::string id = k.name;
        HKind kind = k.kind;
        Tolerance def = kind == HKind::OneH1_plus1 ? Tolerance(1e-9, 0.0) : Tolerance(1e-300, 1e-8);
        B.each(id, B.draws(20), [&B, id, kind, def](Rng& g) {
            auto p = draw_h_params(kind, g);
            ParamMap in;
            for (std::size_t i = 0; i < p.size(); ++i) in.push_back({"p" + std::to_string(i + 1), p[i]});
            Tolerance t = B.tol(id, def);
            Stopwatch sw;
            return guarded(id, in, t, [&] {
                // the plus-one sum is 0, so it needs an absolute budget
                Tolerance et = kind == HKind::OneH1_plus1 ? Tolerance(1e-11, 0.0) : Tolerance(1e-14, 1e-11);
                Complex lhs = eval_H(h_series_for(kind, p), et).value;
                return make_record(id, in, lhs, closed_form_H(kind, p), t, sw.ms());
            });
        });
    }

    B.each("symmetry_transform", B.draws(10), [&B](Rng& g) {
        auto p = draw_h_params(HKind::Gauss2H2, g);
        BilateralSeriesSpec s = h_series_for(HKind::Gauss2H2, p);
        s.z = std::polar(1.0, uni(g, 0.5, 2.0 * pi - 0.5));
        ParamMap in{{"c1", s.c[0]}, {"c2", s.c[1]}, {"d1", s.d[0]}, {"d2", s.d[1]}, {"z", s.z}};
        Stopwatch sw;
        return guarded("symmetry_transform", in, Tolerance(), [&] {
            SeriesValue a = eval_H(s, Tolerance(1e-14, 1e-11)), b = eval_H(symmetry_transform(s), Tolerance(1e-14, 1e-11));
            Tolerance t = B.tol("symmetry_transform", Tolerance(10.0 * (a.est_error + b.est_error) + 1e-14, 1e-12));
            return make_record("symmetry_transform", in, a.value, b.value, t, sw.ms());
        });
    });

    B.each("integral_repr_H", B.draws(5), [&B](Rng& g) {
        IntegrandSpec s = draw_plain_integrand(int(uni_int(g, 1, 2)), g);
        double t = uni(g, -pi, pi);
        Tolerance tl = B.tol("integral_repr_H", Tolerance(1e-12, 1e-8));
        return guarded("integral_repr_H", integrand_inputs(s), tl, [&] { return integral_repr_H(s, t, tl); });
    });
    for (bool plus : {false, true}) {
        std::string id = plus ? "unit_argument_plus" : "unit_argument_minus";
        B.each(id, B.draws(3), [&B, id, plus](Rng& g) {
            IntegrandSpec s = draw_plain_integrand(int(uni_int(g, 2, 3)), g);
            Tolerance tl = B.tol(id, Tolerance(1e-12, 1e-8));
            return guarded(id, integrand_inputs(s), tl, [&] { return unit_argument_repr(s, plus, tl); });
        });
    }
    B.each("cauchy_integral", B.draws(5), [&B](Rng& g) {
        Complex ga = uni(g, -0.5, 2.0), de = uni(g, -2.0, 2.0);
        Tolerance tl = B.tol("cauchy_integral", Tolerance(1e-12, 1e-9));
        return guarded("cauchy_integral", {{"gamma", ga}, {"delta", de}}, tl, [&] { return cauchy_integral_check(ga, de, tl); });
    });
    B.each("fourier_single", B.draws(5), [&B](Rng& g) {
        IntegrandSpec s = draw_plain_integrand(1, g);
        s.t = uni(g, -pi, pi);
        Tolerance tl = B.tol("fourier_single", Tolerance(1e-12, 1e-8));
        Stopwatch sw;
        return guarded("fourier_single", integrand_inputs(s), tl, [&] {
            return make_record("fourier_single", integrand_inputs(s), integrate(s, Tolerance(1e-13, 1e-10)).value,
                               single_factor_transform(s.a[0], s.b[0], s.t), tl, sw.ms());
        });
    });

    // Poisson: integral against the lattice sums for p = m, m+1, m+2 and 4m
    for (int m = 1; m <= 3; ++m) {
        B.repeat("poisson_sum", B.draws(3), [&B, m](Rng& g) {
            IntegrandSpec s = draw_plain_integrand(m, g);
            s.t = uni(g, -m * pi, m * pi);
            std::vector<VerificationRecord> out;
            Stopwatch sw;
            QuadratureResult q;
            try {
                q = integrate(s, Tolerance(1e-13, 1e-10));
            } catch (const Error& e) {
                return std::vector<VerificationRecord>{failed_record("poisson_sum", integrand_inputs(s), Tolerance(), e.kind() + ": " + e.what())};
            }
            for (int p : {m, m + 1, m + 2, 4 * m}) {
                std::string id = p == 4 * m && m > 1 ? "poisson_riemann" : "poisson_sum";
                ParamMap in = integrand_inputs(s);
                in.push_back({"p", double(p)});
                out.push_back(guarded(id, in, Tolerance(), [&] {
                    Stopwatch sp;
                    SeriesValue r = poisson_sum_rhs(s, p, Tolerance(1e-14, 1e-10));
                    Tolerance tl = B.tol(id, Tolerance(10.0 * (q.est_error + r.est_error) + 1e-12 * std::max(1.0, std::abs(q.value)), 0.0));
                    return make_record(id, in, q.value, r.value, tl, sw.ms() + sp.ms());
                }));
            }
            return out;
        });
    }
    B.repeat("support", B.draws(2), [&B](Rng& g) {
        int m = int(uni_int(g, 1, 2));
        IntegrandSpec s = draw_plain_integrand(m, g);
        try {
            return support_check(s, {m * pi, m * pi + uni(g, 0.1, 2.0)}, B.tol("support", Tolerance(1e-8, 0.0)));
        } catch (const Error& e) {
            return std::vector<VerificationRecord>{failed_record("support", integrand_inputs(s), Tolerance(), e.kind() + ": " + e.what())};
        }
    });
    B.each("odd_part", B.draws(3), [&B](Rng& g) {
        std::vector<Complex> c;
        for (int j = 0, m = int(uni_int(g, 1, 3)); j < m; ++j) c.push_back(uni(g, 0.0, 1.5));
        Tolerance tl = B.tol("odd_part", Tolerance(1e-10, 0.0));
        return guarded("odd_part", {}, tl, [&] { return odd_part_check(c, tl); });
    });
}

inline void classical_beta(SuiteBuilder& B) {
    for (const auto& k : beta_kinds()) {
        std::string id = k.name;
        BetaKind kind = k.kind;
        int m = kind == BetaKind::Barnes ? 2 : beta_integrand(kind, std::vector<Complex>(k.arity, 0.5)).m;
        Tolerance def = m <= 4 ? Tolerance(1e-300, 1e-8) : Tolerance(1e-300, 1e-6);
        B.each(id, B.draws(10), [&B, id, kind, def](Rng& g) {
            auto p = draw_beta_params(kind, g);
            return verify_beta(kind, p, B.tol(id, def));
        });
    }
    B.single("m3_double_integral", [&B](Rng& g) {
        Complex b1 = uni(g, 0.0, 1.0), b2 = uni(g, 0.0, 1.0), b3 = uni(g, 0.0, 1.0);
        Tolerance tl = B.tol("m3_double_integral", Tolerance(1e-10, 1e-7));
        VerificationRecord r = guarded("m3_double_integral", {}, tl, [&] { return m3_double_integral(b1, b2, b3, tl); });
        r.note = "numerical evidence only";
        return r;
    });
}

inline void q_core(SuiteBuilder& B) {
    for (double q : {0.3, 0.5, 0.8}) {
        // draws whose sum cancels so badly that the rounding bound alone
        // exceeds 1e-11 relative are redrawn
        auto conditioned = [](const QSeriesSpec& s) {
            try {
                SeriesValue v = eval_psi(s, Tolerance(1.0, 0.0));
                return v.est_error <= 1e-11 * std::abs(v.value);
            } catch (const Error&) {
                return false;
            }
        };
        B.each("Ramanujan1psi1", B.draws(20), [&B, q, conditioned](Rng& g) {
            QBase qb(q);
            Complex A, Bp, z;
            do {
                A = polar_draw(g, 1.2, 3.0);
                Bp = polar_draw(g, 0.05, 0.9);
                double lo = std::abs(Bp / A);
                z = std::polar(uni(g, lo + 0.3 * (1.0 - lo), 1.0 - 0.3 * (1.0 - lo)), uni(g, -pi, pi));
            } while (!conditioned({qb, {A}, {Bp}, z}));
            ParamMap in{{"q", q}, {"A", A}, {"B", Bp}, {"z", z}};
            Tolerance t = B.tol("Ramanujan1psi1", Tolerance(1e-300, 1e-9));
            return guarded("Ramanujan1psi1", in, t, [&] {
                Stopwatch sw;
                Complex lhs = eval_psi({qb, {A}, {Bp}, z}, Tolerance(1e-15, 1e-10)).value;
                return make_record("Ramanujan1psi1", in, lhs, ramanujan_1psi1_value(A, Bp, z, qb), t, sw.ms());
            });
        });
        B.each("Bailey6psi6", B.draws(20), [&B, q, conditioned](Rng& g) {
            QBase qb(q);
            Complex a, b, c, d, e;
            do {
                a = uni(g, 0.2, 0.9);
                b = polar_draw(g, 0.5, 1.5);
                c = polar_draw(g, 0.5, 1.5);
                d = polar_draw(g, 0.5, 1.5);
                e = polar_draw(g, 0.5, 1.5);
            } while (!(std::abs(q * a * a) < 0.7 * std::abs(b * c * d * e)) || !conditioned(bailey_6psi6_series(a, b, c, d, e, qb)));
            ParamMap in{{"q", q}, {"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}};
            Tolerance t = B.tol("Bailey6psi6", Tolerance(1e-300, 1e-9));
            return guarded("Bailey6psi6", in, t, [&] {
                Stopwatch sw;
                Complex lhs = eval_psi(bailey_6psi6_series(a, b, c, d, e, qb), Tolerance(1e-15, 1e-10)).value;
                return make_record("Bailey6psi6", in, lhs, bailey_6psi6(a, b, c, d, e, qb), t, sw.ms());
            });
        });
    }
    B.each("qpoch_dual", B.draws(20), [&B](Rng& g) {
        Complex a = polar_draw(g, 0.2, 3.0);
        double q = uni(g, 0.2, 0.9);
        long n = uni_int(g, 1, 20);
        ParamMap in{{"q", q}, {"a", a}, {"n", -double(n)}};
        Tolerance t = B.tol("qpoch_dual", Tolerance(1e-300, 1e-12));
        return guarded("qpoch_dual", in, t, [&] {
            QBase qb(q);
            return make_record("qpoch_dual", in, qpoch(a, qb, -n), qpoch_negative_closed_form(a, qb, n), t);
        });
    });
    B.each("triple_product", B.draws(10), [&B](Rng& g) {
        double q = uni(g, 0.1, 0.8);
        Complex w = polar_draw(g, 0.5, 2.0);
        ParamMap in{{"q", q}, {"w", w}};
        QBase qb(q);
        Complex sum = 0.0;
        double mass = 0.0;
        for (long n = -400; n <= 400; ++n) {
            Complex term = std::exp(0.5 * double(n) * double(n - 1) * std::log(q) + double(n) * std::log(w));
            sum += term;
            mass += std::abs(term);
        }
        // near w = -q^k both sides vanish and the sum cancels: absolute part scales with sum |terms|
        Tolerance t = B.tol("triple_product", Tolerance(1e-13 * mass, 1e-10));
        return make_record("triple_product", in, sum, qpoch_inf({q, -w, -q / w}, qb), t);
    });
    B.each("qpoch_modulus_bound", B.draws(20), [](Rng& g) {
        double s = uni(g, 0.1, 2.0), t = uni(g, -3.0, 3.0), q = uni(g, 0.05, 0.995);
        long n = uni_int(g, 0, 50);
        Complex al(s, t);
        QBase qb(q);
        double lhs = std::abs(qpoch(std::pow(q, al), qb, n));
        // prod_k (1 + t^2/(s+k)^2) = |Gamma(s)/Gamma(s+it)|^2
        double K = std::norm(gamma(s) * recip_gamma(al));
        double rhs = K * qpoch(std::pow(q, s), qb, n).real();
        return bound_record("qpoch_modulus_bound", {{"q", q}, {"alpha", al}, {"n", double(n)}}, lhs, rhs * (1.0 + 1e-12), 0.0);
    });
    B.each("qpoch_ratio_bound", B.draws(20), [](Rng& g) {
        double be = uni(g, 0.05, 2.0), al = be + uni(g, 0.0, 2.0), q = uni(g, 0.05, 0.995);
        long n = uni_int(g, 0, 50);
        QBase qb(q);
        double lhs = (qpoch(std::pow(q, al), qb, n) / qpoch(std::pow(q, be), qb, n)).real();
        double rhs = (pochhammer(al, n) / pochhammer(be, n)).real();
        return bound_record("qpoch_ratio_bound", {{"q", q}, {"alpha", al}, {"beta", be}, {"n", double(n)}}, lhs,
                            rhs * (1.0 + 1e-12), 0.0);
    });
    for (bool cplx : {false, true}) {
        B.each("q_fourier", B.draws(cplx ? 3 : 7), [&B, cplx](Rng& g) {
            QIntegrandSpec s;
            s.qbase = QBase(uni(g, 0.2, 0.8));
            s.a = {polar_draw(g, 1.5, 3.0)};
            s.b = {polar_draw(g, 0.0, 0.7)};
            double lw = uni(g, std::log(std::abs(s.b[0])) + 0.3, std::log(std::abs(s.a[0])) - 0.3);
            s.w = {std::polar(std::exp(lw), uni(g, -1.0, 1.0))};
            double lo = std::log(std::abs(s.b[0]) / std::abs(s.w[0])), hi = std::log(std::abs(s.a[0]) / std::abs(s.w[0]));
            s.t = Complex(uni(g, -3.0, 3.0), cplx ? uni(g, lo + 0.25 * (hi - lo), hi - 0.25 * (hi - lo)) : 0.0);
            return verify_q_fourier(s, B.tol("q_fourier", Tolerance(1e-300, 1e-7)));
        });
    }
    B.each("q_gaussian", B.draws(3), [&B](Rng& g) {
        QIntegrandSpec s;
        double q = uni(g, 0.2, 0.8);
        s.qbase = QBase(q);
        s.a = {std::numeric_limits<double>::infinity()};
        s.b = {0.0};
        s.w = {polar_draw(g, 0.3, 3.0)};
        ParamMap in{{"q", q}, {"w", s.w[0]}};
        Tolerance t = B.tol("q_gaussian", Tolerance(1e-300, 1e-7));
        return guarded("q_gaussian", in, t, [&] {
            Stopwatch sw;
            return make_record("q_gaussian", in, q_integrate(s, Tolerance(1e-14, 1e-10)).value, gaussian_q_integral(q, s.w[0]), t, sw.ms());
        });
    });
    B.repeat("abel_poisson", B.draws(3), [&B](Rng& g) {
        QIntegrandSpec s;
        s.m = int(uni_int(g, 1, 2));
        s.qbase = QBase(uni(g, 0.3, 0.7));
        for (int j = 0; j < s.m; ++j) {
            s.a.push_back(uni(g, 1.5, 3.0));
            s.b.push_back(uni(g, 0.1, 0.6));
            s.w.push_back(std::sqrt((s.a[j] * s.b[j]).real()));
        }
        s.t = uni(g, -3.0, 3.0);
        // the approach is linear in 1 - r, so r = 0.999 leaves a gap of order 1e-3
        Tolerance tl = B.tol("abel_poisson", Tolerance(1e-300, 1e-2));
        return guarded_many("abel_poisson", q_inputs(s), tl, [&] {
            Stopwatch sw;
            AbelPoissonResult r = abel_poisson_psi(s, {0.9, 0.99, 0.999});
            std::vector<GapView> gv;
            for (const auto& p : r.points) gv.push_back({p.gap / std::abs(r.target), p.value, r.target});
            return probe_records("abel_poisson", q_inputs(s), gv, tl, sw.ms(), 1e-9);
        });
    });
    for (double u : {0.1, 0.05, 0.025}) {
        B.each("qpoch_asymptotic_bound", B.draws(10), [u](Rng& g) {
            Complex a;
            do a = polar_draw(g, 0.05, 0.95);
            while (std::abs(a.imag()) < 1e-3 && a.real() > 0.0);
            QPochAsymptotic as = qpoch_inf_asymptotic(a, 0.0, u);
            Complex exact = qpoch_inf(a, QBase(std::exp(-u)));
            double gap = std::abs(std::log(exact * std::exp(-as.refined_log)));
            return bound_record("qpoch_asymptotic_bound", {{"a", a}, {"u", u}}, gap, as.bound, 0.0);
        });
    }
}

inline void q_beta(SuiteBuilder& B) {
    for (QBetaKind kind : {QBetaKind::Full, QBetaKind::D0, QBetaKind::C0, QBetaKind::Psi36, QBetaKind::Psi26}) {
        std::string id = to_string(kind);
        for (double q : {0.4, 0.7}) {
            B.repeat(id, B.draws(3), [&B, id, kind, q](Rng& g) {
                QBetaParams p{q, uni(g, 0.5, 1.5), {}};
                for (std::size_t j = 0; j < qbeta_arity(kind); ++j) p.a.push_back(uni(g, 0.1, 0.9));
                return verify_qbeta(kind, p, B.tol(id, Tolerance(1e-300, 1e-6)));
            });
        }
    }
    for (QBetaKind kind : {QBetaKind::Full, QBetaKind::D0, QBetaKind::C0}) {
        std::string id = std::string(to_string(kind)) + "_gamma";
        for (double q : {0.4, 0.7}) {
            B.repeat(id, B.draws(2), [&B, id, kind, q](Rng& g) {
                QBetaParams p{q, uni(g, 0.0, 1.0), {}};
                for (std::size_t j = 0; j < qbeta_arity(kind); ++j) p.a.push_back(uni(g, 0.1, 0.9));
                return verify_qgamma(kind, p, B.tol(id, Tolerance(1e-300, 1e-6)));
            });
        }
    }
    B.repeat("H44int", B.draws(3), [&B](Rng& g) {
        Complex a = uni(g, 0.0, 1.0), b = uni(g, 0.0, 1.0), c = uni(g, 0.0, 1.0);
        ParamMap in{{"a", a}, {"b", b}, {"c", c}};
        Complex closed = h44_closed(a, b, c);
        std::vector<VerificationRecord> out;
        Tolerance t1 = B.tol("H44int", Tolerance(1e-300, 1e-6));
        out.push_back(guarded("H44int", in, t1, [&] {
            Stopwatch sw;
            return make_record("H44int", in, integrate(h44_integrand(a, b, c), Tolerance(1e-14, 1e-10)).value, closed, t1, sw.ms());
        }));
        Tolerance t2 = B.tol("H44int_series", Tolerance(1e-300, 1e-9));
        out.push_back(guarded("H44int_series", in, t2, [&] { return make_record("H44int_series", in, h44_series_form(a, b, c), closed, t2); }));
        Tolerance t3 = B.tol("H44int_m4", Tolerance(1e-300, 1e-12));
        out.push_back(guarded("H44int_m4", in, t3, [&] { return make_record("H44int_m4", in, h44_from_m4(a, b, c), closed, t3); }));
        return out;
    });
}

inline void limits(SuiteBuilder& B) {
    const std::vector<double> qs = {0.9, 0.99, 0.999};
    B.repeat("psi_limit", B.draws(5), [&B, qs](Rng& g) {
        QtoOnePath path;
        int m = int(uni_int(g, 1, 2));
        double need = 2.0 + uni(g, 0.0, 1.0);
        for (int j = 0; j < m; ++j) {
            path.alpha.push_back(uni(g, 0.1, 0.8));  // alpha near 1 blows up the left side
            path.beta.push_back(path.alpha.back() + need / m);
        }
        path.tau = 1.0;
        path.z = std::polar(1.0, uni(g, 0.5, 2.0 * pi - 0.5));
        path.q_sequence = qs;
        ParamMap in{{"z", path.z}, {"tau", path.tau}};
        for (int j = 0; j < m; ++j) {
            in.push_back({"alpha" + std::to_string(j + 1), path.alpha[j]});
            in.push_back({"beta" + std::to_string(j + 1), path.beta[j]});
        }
        Tolerance t = B.tol("psi_limit", Tolerance(1e-2, 1e-2));
        return guarded_many("psi_limit", in, t, [&] {
            Stopwatch sw;
            return probe_records("psi_limit", in, view(psi_limit_probe(path)), t, sw.ms());
        });
    });
    B.repeat("qbinomial_limit", B.draws(5), [&B, qs](Rng& g) {
        Complex al = uni(g, 0.0, 1.5), be = uni(g, 0.0, 1.5);
        Complex z = std::polar(uni(g, 0.3, 1.0), uni(g, 0.3, 2.0 * pi - 0.3));
        ParamMap in{{"alpha", al}, {"beta", be}, {"z", z}};
        Tolerance t = B.tol("qbinomial_limit", Tolerance(1e-300, 1e-2));
        return guarded_many("qbinomial_limit", in, t, [&] {
            std::vector<GapView> gv;
            for (double q : qs) {
                auto r = qbinomial_ratio_limit(al, be, z, q);
                gv.push_back({relative_gap(r.finite, r.target), r.finite, r.target});
            }
            return probe_records("qbinomial_limit", in, gv, t, 0.0);
        });
    });
    B.repeat("LimitConstant", B.draws(3), [&B, qs](Rng& g) {
        Complex al = uni(g, 0.0, 1.0);
        Tolerance t = B.tol("LimitConstant", Tolerance(1e-300, 1e-2));
        ParamMap in{{"alpha", al}};
        return guarded_many("LimitConstant", in, t, [&] { return probe_records("LimitConstant", in, view(limit_constant_probe(al, qs)), t, 0.0); });
    });
    for (double tt : {0.0, 1.0, pi, 1.5 * pi}) {
        B.repeat("h_of_q", B.draws(2), [&B, qs, tt](Rng& g) {
            double al = uni(g, 1.1, 2.0), be = uni(g, 2.1, 3.0);
            ParamMap in{{"alpha", al}, {"beta", be}, {"t", tt}};
            Tolerance t = B.tol("h_of_q", Tolerance(1e-2, 1e-2));
            return guarded_many("h_of_q", in, t, [&] { return probe_records("h_of_q", in, view(h_of_q_probe(al, be, tt, qs)), t, 0.0); });
        });
    }
    B.each("domination", B.draws(2), [](Rng& g) {
        double al = uni(g, 1.1, 2.0), be = uni(g, 2.1, 3.0);
        ParamMap in{{"alpha", al}, {"beta", be}};
        return guarded("domination", in, Tolerance(), [&] {
            auto d = domination_check(al, be, {0.5, 0.9, 0.99});
            double worst = 0.0;
            for (const auto& x : d) {
                if (!x.ok && !(std::isfinite(x.right_near) && std::isfinite(x.left_near))) worst = std::numeric_limits<double>::infinity();
                worst = std::max({worst, x.right_far / x.right_near, x.left_far / x.left_near});
            }
            VerificationRecord r = make_record("domination", in, worst, 0.0, Tolerance(1.0, 0.0));
            r.note = "largest far/near ratio of the weighted |f_q| maxima, q in {0.5, 0.9, 0.99}";
            return r;
        });
    });
    for (QBetaKind kind : {QBetaKind::D0, QBetaKind::C0}) {
        std::string id = std::string(to_string(kind)) + "_gamma_limit";
        B.repeat(id, B.draws(2), [&B, id, kind, qs](Rng& g) {
            Complex al = uni(g, 0.0, 1.0);
            std::vector<Complex> a;
            // the c -> 0 side vanishes like (1-q)^{Re(a+b)}: keep a, b >= 0.3 so that is visible by q = 0.999
            double lo = kind == QBetaKind::C0 ? 0.3 : 0.1;
            for (std::size_t j = 0; j < qbeta_arity(kind); ++j) a.push_back(uni(g, lo, 0.9));
            ParamMap in{{"alpha", al}};
            for (std::size_t j = 0; j < a.size(); ++j) in.push_back({"a" + std::to_string(j + 1), a[j]});
            Tolerance t = B.tol(id, Tolerance(1e-2, 1e-2));
            return guarded_many(id, in, t, [&] { return probe_records(id, in, view(qgamma_limit_probe(kind, al, a, qs)), t, 0.0); });
        });
    }
}

}  // namespace detail

inline SuiteSummary summarize(const std::vector<VerificationRecord>& rs) {
    SuiteSummary s;
    s.total = rs.size();
    for (const auto& r : rs) {
        (r.pass ? s.passed : s.failed)++;
        if (std::isfinite(r.rel_gap)) s.max_rel_gap = std::max(s.max_rel_gap, r.rel_gap);
    }
    return s;
}

inline SuiteReport run_suite(const SuiteConfig& cfg) {
    if (cfg.draws_per_identity < 0) throw PreconditionError("draws_per_identity must be >= 1");
    detail::SuiteBuilder B(cfg);
    if (cfg.suite == "classical-core") detail::classical_core(B);
    else if (cfg.suite == "classical-beta") detail::classical_beta(B);
    else if (cfg.suite == "q-core") detail::q_core(B);
    else if (cfg.suite == "q-beta") detail::q_beta(B);
    else if (cfg.suite == "limits") detail::limits(B);
    else throw UnknownSuite("unknown suite '" + cfg.suite + "'");
    SuiteReport rep;
    rep.records = detail::run_tasks(B.tasks(), cfg.seed);
    rep.summary = summarize(rep.records);
    rep.tool_version = tool_version;
    rep.config = cfg;
    return rep;
}

inline nlohmann::json report_json(const SuiteReport& rep) {
    nlohmann::json tol = nlohmann::json::object();
    for (const auto& [k, t] : rep.config.tol) tol[k] = {{"abs", t.abs}, {"rel", t.rel}};
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : rep.records) recs.push_back(record_json(r));
    return {{"schema", 1},
            {"tool_version", rep.tool_version},
            {"config",
             {{"suite", rep.config.suite},
              {"seed", rep.config.seed},
              {"draws_per_identity", rep.config.draws_per_identity},
              {"tol", tol},
              {"output_path", rep.config.output_path},
              {"format", rep.config.format}}},
            {"summary",
             {{"total", rep.summary.total},
              {"passed", rep.summary.passed},
              {"failed", rep.summary.failed},
              {"max_rel_gap", rep.summary.max_rel_gap}}},
            {"records", recs}};
}

inline std::string render_report(const SuiteReport& rep) {
    if (rep.config.format == "csv") return records_csv(rep.records);
    return report_json(rep).dump(2) + "\n";
}

}  // namespace rbeta
