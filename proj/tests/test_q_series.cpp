#include <gtest/gtest.h>

#include <random>

#include <rbeta/qseries.hpp>

#include "frozen_values.hpp"
#include "helpers.hpp"

using namespace rbeta;

TEST(QBaseType, Range) {
    EXPECT_THROW(QBase(1.0), DomainError);
    EXPECT_THROW(QBase(0.0), DomainError);
    EXPECT_NO_THROW(QBase(Complex(0.3, 0.4)));
}

TEST(QPoch, Finite) {
    QBase qb(0.5);
    EXPECT_EQ(qpoch(0.3, qb, 0), Complex(1.0));
    EXPECT_NEAR_REL(qpoch(0.3, qb, -1), 1.0 / (1.0 - 0.3 / 0.5), 1e-15);
    EXPECT_NEAR_REL(qpoch(0.3, qb, -5), frozen::qp_0p3_0p5_m5, 1e-13);
    EXPECT_NEAR_REL(qpoch_negative_closed_form(0.3, qb, 5), qpoch(0.3, qb, -5), 1e-13);
    EXPECT_NEAR_REL(qpoch({0.4, 0.3}, QBase({0.7, -0.2}), 7), frozen::qp_cplx_7, 1e-13);
    EXPECT_THROW(qpoch(0.25, qb, -3), PoleError);
}

TEST(QPochProperty, DualFormula) {
    std::mt19937_64 g(31);
    std::uniform_real_distribution<double> u(-1.5, 1.5), uq(0.2, 0.9);
    for (int i = 0; i < 30; ++i) {
        QBase qb(uq(g));
        Complex a{u(g), u(g)};
        for (long n = 1; n <= 20; ++n) EXPECT_NEAR_REL(qpoch(a, qb, -n), qpoch_negative_closed_form(a, qb, n), 1e-12);
    }
}

TEST(QPochInf, Values) {
    EXPECT_EQ(qpoch_inf(0.0, QBase(0.5)), Complex(1.0));
    EXPECT_NEAR_REL(qpoch_inf(0.5, QBase(0.5)), frozen::qpinf_0p5_0p5, 1e-14);
    EXPECT_NEAR_REL(qpoch_inf(Complex(0.2, -0.6), QBase({0.6, 0.3})), frozen::qpinf_cplx, 1e-13);
    EXPECT_NEAR_REL(qpoch_inf({0.5, 0.25}, QBase(0.5)), qpoch_inf(0.5, QBase(0.5)) * qpoch_inf(0.25, QBase(0.5)), 1e-15);
}

TEST(QGamma, Values) {
    EXPECT_NEAR_REL(q_gamma(1.0, 0.7), Complex(1.0), 1e-14);
    EXPECT_NEAR_REL(q_gamma(2.0, 0.7), Complex(1.0), 1e-14);
    EXPECT_NEAR_REL(q_gamma(3.5, 0.9), frozen::qgamma_3p5_0p9, 1e-12);
    EXPECT_THROW(q_gamma(-2.0, 0.5), PoleError);
    // approaches Gamma(3.5) monotonically as q -> 1
    double last = 1e300;
    for (double q : {0.9, 0.99, 0.999}) {
        double gap = std::abs(q_gamma(3.5, q) - gamma(Complex(3.5)));
        EXPECT_LT(gap, last) << q;
        last = gap;
    }
}

TEST(EvalPsi, RamanujanAgainstOracle) {
    QBase qb(0.5);
    QSeriesSpec s{qb, {2.5}, {0.4}, 0.6};
    EXPECT_NEAR_REL(eval_psi(s).value, frozen::psi11_real, 1e-12);
    EXPECT_NEAR_REL(ramanujan_1psi1_value(2.5, 0.4, 0.6, qb), frozen::psi11_real, 1e-12);
    QSeriesSpec c{qb, {{1.5, 0.5}}, {{0.3, -0.2}}, {0.5, 0.3}};
    EXPECT_NEAR_REL(eval_psi(c).value, frozen::psi11_cplx, 1e-12);
    EXPECT_NEAR_REL(ramanujan_1psi1_value(c.a[0], c.b[0], c.z, qb), frozen::psi11_cplx, 1e-12);
}

TEST(EvalPsi, BaileyAgainstOracle) {
    QBase qb(0.5);
    auto s = bailey_6psi6_series(0.3, 0.7, 0.8, 1.2, -0.9, qb);
    EXPECT_NEAR_REL(eval_psi(s, Tolerance(1e-15, 1e-12)).value, frozen::psi66_bailey, 1e-11);
    EXPECT_NEAR_REL(bailey_6psi6(0.3, 0.7, 0.8, 1.2, -0.9, qb), frozen::psi66_bailey, 1e-12);
}

TEST(EvalPsi, TerminatesAtOne) {
    // (1;q)_n = 0 for n >= 1; with b = q the n < 0 side dies too
    QBase qb(0.5);
    EXPECT_NEAR_ABS(eval_psi({qb, {1.0}, {0.5}, 0.3}).value, Complex(1.0), 1e-15);
}

TEST(EvalPsi, Annulus) {
    EXPECT_THROW(eval_psi({QBase(0.5), {0.3}, {0.7}, 0.9}), OutsideAnnulus);
    EXPECT_THROW(eval_psi({QBase(0.5), {3.0}, {0.1}, 1.2}), OutsideAnnulus);
}

TEST(EvalPsiProperty, Ramanujan) {
    std::mt19937_64 g(32);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int done = 0;
    while (done < 30) {
        QBase qb(0.2 + 0.6 * u(g));
        Complex A = std::polar(1.2 + 2.0 * u(g), 6.28 * u(g)), B = std::polar(0.1 + 0.6 * u(g), 6.28 * u(g));
        double lo = std::abs(B / A);
        Complex z = std::polar(lo + (1.0 - lo) * (0.2 + 0.6 * u(g)), 6.28 * u(g));
        SeriesValue v;
        try {
            v = eval_psi({qb, {A}, {B}, z}, Tolerance(1e-15, 1e-11));
        } catch (const ToleranceNotReached&) {
            continue;  // cancellation-heavy draw
        }
        EXPECT_NEAR_REL(v.value, ramanujan_1psi1_value(A, B, z, qb), 1e-9);
        ++done;
    }
}

TEST(EvalPsi, RamanujanOneSided) {
    // b = q: the series is the q-binomial sum (az;q)_inf/(z;q)_inf
    QBase qb(0.6);
    Complex A = 3.0, z = 0.5;
    EXPECT_NEAR_REL(eval_psi({qb, {A}, {0.6}, z}).value, qpoch_inf(A * z, qb) / qpoch_inf(z, qb), 1e-13);
    EXPECT_NEAR_REL(ramanujan_1psi1_value(A, 0.6, z, qb), qpoch_inf(A * z, qb) / qpoch_inf(z, qb), 1e-13);
}

TEST(TripleProductProperty, Instances) {
    std::mt19937_64 g(33);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        QBase qb(0.2 + 0.6 * u(g));
        Complex w = std::polar(0.3 + 2.0 * u(g), 6.28 * u(g));
        Complex lhs = 0.0;
        for (int n = -300; n <= 300; ++n)
            lhs += std::exp(0.5 * n * (n - 1.0) * std::log(qb.q.real())) * std::pow(w, double(n));
        Complex rhs = qpoch_inf(qb.q, qb) * qpoch_inf(-w, qb) * qpoch_inf(-qb.q / w, qb);
        EXPECT_NEAR_REL(lhs, rhs, 1e-10);
    }
}

TEST(QBinomialLimit, GapShrinks) {
    double last = 1e300;
    for (double q : {0.9, 0.99, 0.999}) {
        auto r = qbinomial_ratio_limit(0.3, 0.9, -0.5, q);
        double gap = std::abs(r.finite - r.target);
        EXPECT_LT(gap, last);
        last = gap;
    }
    EXPECT_LT(last, 1e-2);
    EXPECT_NEAR_REL(qbinomial_ratio_limit(0.3, 0.9, -0.5, 0.9).target, std::pow(1.5, 0.6), 1e-15);
}

TEST(QPochAsymptoticBound, AlphaZero) {
    EXPECT_NEAR_ABS(qpoch_inf_asymptotic(0.0, 0.0, 0.3).value, Complex(1.0), 1e-15);
    Complex a = -0.5;
    double u = 0.01;
    auto r = qpoch_inf_asymptotic(a, 0.0, u);
    Complex exact = log_qpoch_inf(a, QBase(std::exp(-u)));
    EXPECT_LE(std::abs(exact - r.refined_log), r.bound);
    EXPECT_THROW(qpoch_inf_asymptotic(1.5, 0.0, 0.1), BranchCutError);
}

TEST(QPochAsymptoticBound, ShiftedRatioTendsToOne) {
    Complex a{0.3, 0.2}, al = 1.5;
    double last = 1e300;
    for (double u : {0.1, 0.05, 0.025}) {
        auto r = qpoch_inf_asymptotic(a, al, u);
        Complex exact = qpoch_inf(a * std::exp(-al * u), QBase(std::exp(-u)));
        double gap = std::abs(exact / r.value - 1.0);
        EXPECT_LT(gap, last) << u;
        last = gap;
    }
    EXPECT_LT(last, 0.05);
}

TEST(QPochBoundProperty, ExplicitK) {
    // |(q^al;q)_n| <= K (q^s;q)_n, al = s + it, K = prod_k (1 + t^2/(s+k)^2)
    std::mt19937_64 g(34);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        double s = 0.2 + 2.0 * u(g), t = 3.0 * (u(g) - 0.5), q = 0.1 + 0.85 * u(g);
        long n = 1 + long(49 * u(g));
        double K = 1.0;
        for (int k = 0; k < 200000; ++k) K *= 1.0 + t * t / ((s + k) * (s + k));
        QBase qb(q);
        double lhs = std::abs(qpoch(qpow(q, Complex(s, t)), qb, n));
        double rhs = K * std::abs(qpoch(std::pow(q, s), qb, n));
        EXPECT_LE(lhs, rhs * (1.0 + 1e-12));
    }
}

TEST(QPochBoundProperty, RatioBelowClassical) {
    std::mt19937_64 g(35);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        double be = 0.1 + 2.0 * u(g), al = be + 2.0 * u(g), q = 0.1 + 0.85 * u(g);
        long n = 1 + long(49 * u(g));
        QBase qb(q);
        double lhs = (qpoch(std::pow(q, al), qb, n) / qpoch(std::pow(q, be), qb, n)).real();
        double rhs = (pochhammer(al, n) / pochhammer(be, n)).real();
        EXPECT_LE(lhs, rhs * (1.0 + 1e-12));
    }
}

TEST(PsiLimit, GapsDecrease) {
    QtoOnePath p{{0.1, 0.2}, {1.5, 1.4}, 1.0, -1.0, {0.9, 0.99, 0.999}};
    auto gaps = psi_limit_probe(p);
    ASSERT_EQ(gaps.size(), 3u);
    EXPECT_GT(gaps[0].gap, gaps[1].gap);
    EXPECT_GT(gaps[1].gap, gaps[2].gap);

    QtoOnePath bad = p;
    bad.tau = 3.0;
    EXPECT_THROW(psi_limit_probe(bad), PreconditionError);
}

TEST(PsiLimit, SteepDrawSmallFinalGap) {
    // Re sigma = 2.6
    QtoOnePath p{{0.1, 0.3}, {1.4, 1.6}, 1.0, std::exp(I * pi / 3.0), {0.9, 0.99, 0.999}};
    auto gaps = psi_limit_probe(p);
    EXPECT_LT(gaps.back().gap, 1e-3);
}
