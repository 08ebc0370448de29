// One PASS/FAIL line per acceptance criterion.  Exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <rbeta/rbeta.hpp>

using namespace rbeta;
using Rng = std::mt19937_64;

namespace {

double uni(Rng& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* what, double budget_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const Error& e) {
        o = {false, e.kind() + ": " + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = s < budget_s;
    bool ok = o.pass && in_time;
    if (!ok) ++failures;
    std::printf("%s %-4s %s: %s; %.1f s (budget %.0f s)%s\n", ok ? "PASS" : "FAIL", id, what, o.detail.c_str(), s, budget_s,
                in_time ? "" : " over budget");
    std::fflush(stdout);
}

std::string fmt(const char* f, double x) {
    char b[64];
    std::snprintf(b, sizeof b, f, x);
    return b;
}

// counts passes and tracks the worst gap
struct Tally {
    int n = 0, ok = 0;
    double worst = 0.0;
    std::string first_bad;
    void add(bool pass, double gap, const char* what = "") {
        ++n;
        ok += pass;
        if (!pass && first_bad.empty()) first_bad = what;
        if (std::isfinite(gap)) worst = std::max(worst, gap);
        else worst = INFINITY;
    }
    Outcome out(const char* label) const {
        return {ok == n && n > 0, std::to_string(ok) + "/" + std::to_string(n) + " ok, max " + label + " " + fmt("%.2e", worst)};
    }
};

bool near_integer(Complex z, double w) {
    long n;
    return integer_distance(z, n) < w;
}

}  // namespace

int main() {
    criterion("1", "beta integral m=2, quadrature vs gamma ratio", 5, [] {
        Rng g(101);
        Tally t;
        while (t.n < 10) {
            std::vector<Complex> p;
            for (int j = 0; j < 4; ++j) p.push_back(uni(g, -0.4, 1.5));
            if (!((p[0] + p[1] + p[2] + p[3]).real() + 2.0 > 1.2)) continue;
            auto r = verify_beta(BetaKind::RamanujanM2, p, Tolerance(1e-300, 1e-8));
            t.add(r.pass, r.rel_gap);
        }
        return t.out("rel gap");
    });

    criterion("2", "integral equals the finite lattice sum, m=1..3, p=m,m+1", 60, [] {
        Rng g(102);
        Tally t;
        for (int m = 1; m <= 3; ++m) {
            IntegrandSpec s{m, {}, {}, 0.0, {}};
            for (int j = 0; j < m; ++j) {
                s.a.push_back(uni(g, 0.0, 1.5));
                s.b.push_back(uni(g, 0.0, 1.5));
            }
            for (int k = 0; k < 5; ++k) {
                s.t = uni(g, -m * pi, m * pi);
                QuadratureResult q = integrate(s, Tolerance(1e-13, 1e-10));
                for (int p : {m, m + 1}) {
                    SeriesValue r = poisson_sum_rhs(s, p, Tolerance(1e-14, 1e-12));
                    double budget = 10.0 * (q.est_error + r.est_error) + 1e-12 * std::max(1.0, std::abs(q.value));
                    double gap = std::abs(q.value - r.value);
                    t.add(gap <= budget, gap / budget);
                }
            }
        }
        return t.out("gap/budget");
    });

    criterion("3", "1H1 at z=1 vanishes, at z=-1 matches the gamma form", 60, [] {
        Rng g(103);
        Tally plus, minus;
        while (plus.n < 10) {
            Complex a = uni(g, -0.5, 1.5), b = a + uni(g, 1.5, 3.0);
            if (near_integer(a, 0.05) || near_integer(b, 0.05)) continue;
            Complex v = eval_H({{a}, {b}, 1.0}, Tolerance(1e-11, 0.0)).value;
            plus.add(std::abs(v) <= 1e-9, std::abs(v));
        }
        while (minus.n < 10) {
            Complex a = uni(g, -0.5, 1.5), b = a + uni(g, 0.5, 2.5);
            if (near_integer(a, 0.05) || near_integer(b, 0.05)) continue;
            Complex v = eval_H({{a}, {b}, -1.0}, Tolerance(1e-14, 1e-11)).value;
            Complex rhs = std::pow(2.0, b - a - 1.0) * gamma(1.0 - a) * gamma(b) * recip_gamma(b - a);
            double rel = relative_gap(v, rhs);
            minus.add(rel <= 1e-8, rel);
        }
        Outcome a = plus.out("|H(1)|"), b = minus.out("rel gap at -1");
        return Outcome{a.pass && b.pass, "z=1 " + a.detail + "; z=-1 " + b.detail};
    });

    criterion("4", "bilateral summation formulas, series vs closed form", 120, [] {
        Rng g(104);
        std::string detail;
        bool all = true;
        for (HKind kind : {HKind::Gauss2H2, HKind::WellPoised3H3, HKind::VWP4H4_minus1, HKind::VWP5H5}) {
            Tally t;
            for (int k = 0; k < 20; ++k) {
                auto p = detail::draw_h_params(kind, g);
                Complex lhs = eval_H(h_series_for(kind, p), Tolerance(1e-14, 1e-11)).value;
                double rel = relative_gap(lhs, closed_form_H(kind, p));
                t.add(rel <= 1e-8, rel);
            }
            Outcome o = t.out("rel");
            all = all && o.pass;
            detail += std::string(detail.empty() ? "" : "; ") + h_kind_info(kind).name + " " + o.detail;
        }
        return Outcome{all, detail};
    });

    criterion("5", "beta integrals m=3..6, quadrature vs closed form", 600, [] {
        Rng g(105);
        std::string detail;
        bool all = true;
        for (BetaKind kind : {BetaKind::M3Cos, BetaKind::M3Plain, BetaKind::M4Plain, BetaKind::M4VWP, BetaKind::M4VWPShifted,
                              BetaKind::M5VWP, BetaKind::M5VWPShifted, BetaKind::M5Third, BetaKind::M6Riemann,
                              BetaKind::M6Reduced}) {
            auto p0 = detail::draw_beta_params(kind, g);
            double rel_tol = beta_integrand(kind, p0).m >= 5 ? 1e-6 : 1e-7;
            Tally t;
            for (int k = 0; k < 3; ++k) {
                auto p = k == 0 ? p0 : detail::draw_beta_params(kind, g);
                auto r = verify_beta(kind, p, Tolerance(1e-300, rel_tol));
                t.add(r.pass, r.rel_gap);
            }
            Outcome o = t.out("rel");
            all = all && o.pass;
            detail += std::string(detail.empty() ? "" : "; ") + beta_kind_info(kind).name + " " + o.detail;
        }
        return Outcome{all, detail};
    });

    criterion("6", "1psi1 and 6psi6, series vs product", 30, [] {
        Rng g(106);
        Tally r1, r6;
        auto usable = [](const QSeriesSpec& s) {
            try {
                SeriesValue v = eval_psi(s, Tolerance(1.0, 0.0));
                return v.est_error <= 1e-11 * std::abs(v.value);
            } catch (const Error&) {
                return false;
            }
        };
        for (double q : {0.3, 0.5, 0.8}) {
            QBase qb(q);
            for (int k = 0; k < 20; ++k) {
                Complex A, B, z;
                do {
                    A = std::polar(uni(g, 1.2, 3.0), uni(g, -pi, pi));
                    B = std::polar(uni(g, 0.05, 0.9), uni(g, -pi, pi));
                    double lo = std::abs(B / A);
                    z = std::polar(uni(g, lo + 0.3 * (1.0 - lo), 1.0 - 0.3 * (1.0 - lo)), uni(g, -pi, pi));
                } while (!usable({qb, {A}, {B}, z}));
                double rel = relative_gap(eval_psi({qb, {A}, {B}, z}, Tolerance(1e-15, 1e-10)).value,
                                          ramanujan_1psi1_value(A, B, z, qb));
                r1.add(rel <= 1e-9, rel);
            }
            for (int k = 0; k < 20; ++k) {
                Complex a, b, c, d, e;
                do {
                    a = uni(g, 0.2, 0.9);
                    b = std::polar(uni(g, 0.5, 1.5), uni(g, -pi, pi));
                    c = std::polar(uni(g, 0.5, 1.5), uni(g, -pi, pi));
                    d = std::polar(uni(g, 0.5, 1.5), uni(g, -pi, pi));
                    e = std::polar(uni(g, 0.5, 1.5), uni(g, -pi, pi));
                } while (!(std::abs(q * a * a) < 0.7 * std::abs(b * c * d * e)) || !usable(bailey_6psi6_series(a, b, c, d, e, qb)));
                double rel = relative_gap(eval_psi(bailey_6psi6_series(a, b, c, d, e, qb), Tolerance(1e-15, 1e-10)).value,
                                          bailey_6psi6(a, b, c, d, e, qb));
                r6.add(rel <= 1e-9, rel);
            }
        }
        Outcome a = r1.out("rel"), b = r6.out("rel");
        return Outcome{a.pass && b.pass, "1psi1 " + a.detail + "; 6psi6 " + b.detail};
    });

    criterion("7", "psi series tends to the H series as q -> 1", 60, [] {
        Rng g(107);
        int ok = 0;
        double worst_final = 0.0;
        for (int k = 0; k < 5; ++k) {
            QtoOnePath path;
            int m = 1 + k % 2;
            double need = uni(g, 2.0, 3.0);
            for (int j = 0; j < m; ++j) {
                path.alpha.push_back(uni(g, 0.1, 0.8));
                path.beta.push_back(path.alpha.back() + need / m);
            }
            path.z = std::polar(1.0, uni(g, 0.5, 2.0 * pi - 0.5));
            path.q_sequence = {0.9, 0.99, 0.999};
            auto gaps = psi_limit_probe(path);
            bool dec = gaps[0].gap > gaps[1].gap && gaps[1].gap > gaps[2].gap;
            ok += dec && gaps[2].gap < 1e-2;
            worst_final = std::max(worst_final, gaps[2].gap);
        }
        return Outcome{ok == 5, std::to_string(ok) + "/5 decreasing with final gap < 1e-2, max final gap " + fmt("%.2e", worst_final)};
    });

    criterion("8", "q-Fourier transform, quadrature vs closed form", 60, [] {
        Rng g(108);
        Tally t;
        for (int k = 0; k < 10; ++k) {
            bool complex_t = k < 3;
            QIntegrandSpec s;
            s.qbase = QBase(uni(g, 0.2, 0.8));
            s.a = {std::polar(uni(g, 1.5, 3.0), uni(g, -pi, pi))};
            s.b = {std::polar(uni(g, 0.0, 0.7), uni(g, -pi, pi))};
            double lw = uni(g, std::log(std::abs(s.b[0])) + 0.3, std::log(std::abs(s.a[0])) - 0.3);
            s.w = {std::polar(std::exp(lw), uni(g, -1.0, 1.0))};
            double lo = std::log(std::abs(s.b[0] / s.w[0])), hi = std::log(std::abs(s.a[0] / s.w[0]));
            s.t = Complex(uni(g, -3.0, 3.0), complex_t ? uni(g, lo + 0.25 * (hi - lo), hi - 0.25 * (hi - lo)) : 0.0);
            auto r = verify_q_fourier(s, Tolerance(1e-300, 1e-7));
            t.add(r.pass, r.rel_gap);
        }
        return t.out("rel");
    });

    criterion("9", "log (a;q)_inf error bound K u^2", 60, [] {
        Rng g(109);
        Tally t;
        for (int k = 0; k < 10; ++k) {
            Complex a;
            do a = std::polar(uni(g, 0.05, 0.95), uni(g, -pi, pi));
            while (std::abs(a.imag()) < 1e-3 && a.real() > 0.0);
            for (double u : {0.1, 0.05, 0.025}) {
                QPochAsymptotic as = qpoch_inf_asymptotic(a, 0.0, u);
                double gap = std::abs(log_qpoch_inf(a, QBase(std::exp(-u))) - as.refined_log);
                t.add(gap <= as.bound, gap / as.bound);
            }
        }
        return t.out("gap/bound");
    });

    criterion("10a", "q-beta integrals, quadrature vs product", 300, [] {
        Rng g(110);
        Tally t;
        for (QBetaKind kind : {QBetaKind::Full, QBetaKind::D0, QBetaKind::C0})
            for (double q : {0.4, 0.7})
                for (int k = 0; k < 2; ++k) {
                    QBetaParams p{q, uni(g, 0.5, 1.5), {}};
                    for (std::size_t j = 0; j < qbeta_arity(kind); ++j) p.a.push_back(uni(g, 0.1, 0.9));
                    double rel = relative_gap(qbeta_quadrature(kind, p).value, qbeta_rhs_product(kind, p));
                    t.add(rel <= 1e-6, rel);
                }
        return t.out("rel");
    });

    criterion("10b", "d -> 0 integral vs the shifted m=4 value at a=1/3", 300, [] {
        Rng g(111);
        Tally t;
        for (int k = 0; k < 3; ++k) {
            Complex a = uni(g, 0.0, 1.0), b = uni(g, 0.0, 1.0), c = uni(g, 0.0, 1.0);
            Complex quad = integrate(h44_integrand(a, b, c), Tolerance(1e-14, 1e-10)).value;
            double rel = relative_gap(quad, h44_from_m4(a, b, c));
            t.add(rel <= 1e-4, rel);
        }
        return t.out("rel");
    });

    criterion("10c", "limit constant at q = 0.999", 300, [] {
        Tally t;
        for (double al : {0.2, 0.5, 0.8}) {
            double rel = limit_constant_probe(al, {0.999}).back().rel_gap;
            t.add(rel <= 1e-4, rel);
        }
        return t.out("rel");
    });

    criterion("11", "property suites", 60, [] {
        Rng g(112);
        Tally t;
        for (int k = 0; k < 100; ++k) {
            Complex z(uni(g, -20, 20), uni(g, -20, 20));
            Complex rhs = sin_pi(z) / pi;
            t.add(std::abs(recip_gamma(z) * recip_gamma(1.0 - z) - rhs) <= 1e-12 * (1.0 + std::abs(rhs)), 0.0, "reflection");
        }
        for (int k = 0; k < 50; ++k) {
            Complex c(uni(g, -5, 5), uni(g, -2, 2));
            for (long n = -30; n <= 30; ++n)
                t.add(relative_gap(pochhammer(c, n) * pochhammer(1.0 - c, -n), n % 2 ? -1.0 : 1.0) <= 1e-12, 0.0, "pochhammer");
        }
        for (int k = 0; k < 10; ++k) {
            auto p = detail::draw_h_params(HKind::Gauss2H2, g);
            BilateralSeriesSpec s = h_series_for(HKind::Gauss2H2, p);
            s.z = std::polar(1.0, uni(g, 0.5, 2.0 * pi - 0.5));
            SeriesValue a = eval_H(s, Tolerance(1e-14, 1e-11)), b = eval_H(symmetry_transform(s), Tolerance(1e-14, 1e-11));
            t.add(std::abs(a.value - b.value) <= 10.0 * (a.est_error + b.est_error) + 1e-14, 0.0, "symmetry");
        }
        for (int k = 0; k < 20; ++k) {
            Complex a = std::polar(uni(g, 0.2, 3.0), uni(g, -pi, pi));
            QBase qb(uni(g, 0.2, 0.9));
            for (long n = 1; n <= 20; ++n)
                t.add(relative_gap(qpoch(a, qb, -n), qpoch_negative_closed_form(a, qb, n)) <= 1e-12, 0.0, "qpoch dual");
        }
        for (int k = 0; k < 10; ++k) {
            double q = uni(g, 0.1, 0.8);
            Complex w = std::polar(uni(g, 0.5, 2.0), uni(g, -pi, pi)), sum = 0.0;
            double mass = 0.0;  // near a zero (w = -q^k) the sum cancels; measure against sum |terms|
            for (long n = -400; n <= 400; ++n) {
                Complex term = std::exp(0.5 * double(n) * double(n - 1) * std::log(q) + double(n) * std::log(w));
                sum += term;
                mass += std::abs(term);
            }
            t.add(std::abs(sum - qpoch_inf({q, -w, -q / w}, QBase(q))) <= 1e-13 * mass, 0.0, "triple product");
        }
        for (int k = 0; k < 20; ++k) {
            double th = uni(g, -pi, pi);
            Complex lhs = dilog(-std::exp(-I * th)) + dilog(-std::exp(I * th));
            t.add(std::abs(lhs - (0.5 * th * th - pi * pi / 6.0)) <= 1e-11, 0.0, "dilog");
        }
        for (int k = 0; k < 40; ++k) {
            double s = uni(g, 0.1, 2.0), im = uni(g, -3.0, 3.0), q = uni(g, 0.05, 0.995);
            long n = std::uniform_int_distribution<long>(0, 50)(g);
            QBase qb(q);
            double K = std::abs(gamma(Complex(s)) * recip_gamma(Complex(s, im)));
            K *= K;
            t.add(std::abs(qpoch(std::pow(q, Complex(s, im)), qb, n)) <= K * qpoch(std::pow(q, s), qb, n).real() * (1.0 + 1e-12), 0.0, "K bound");
            double be = uni(g, 0.05, 2.0), al = be + uni(g, 0.0, 2.0);
            t.add((qpoch(std::pow(q, al), qb, n) / qpoch(std::pow(q, be), qb, n)).real() <=
                      (pochhammer(al, n) / pochhammer(be, n)).real() * (1.0 + 1e-12),
                  0.0, "ratio bound");
        }
        for (int m = 1; m <= 2; ++m) {
            IntegrandSpec s{m, {uni(g, 0.0, 1.5), uni(g, 0.0, 1.5)}, {uni(g, 0.0, 1.5), uni(g, 0.0, 1.5)}, 0.0, {}};
            s.a.resize(m);
            s.b.resize(m);
            for (const auto& r : support_check(s, {m * pi, m * pi + 0.5, -m * pi - 1.0}, Tolerance(1e-8, 0.0))) t.add(r.pass, 0.0, "support");
        }
        t.add(odd_part_check({0.3, 0.7}).pass, 0.0, "odd part");
        t.add(odd_part_check({0.2, 0.4, 1.1}).pass, 0.0, "odd part");
        return Outcome{t.ok == t.n, std::to_string(t.ok) + "/" + std::to_string(t.n) + " checks hold" + (t.first_bad.empty() ? "" : ", first failure: " + t.first_bad)};
    });

    std::printf("%d criterion line(s) failed\n", failures);
    return failures ? 1 : 0;
}
