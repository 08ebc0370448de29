#include <gtest/gtest.h>

#include <random>

#include <rbeta/bilateral.hpp>

#include "frozen_values.hpp"
#include "helpers.hpp"

using namespace rbeta;

TEST(Classify, Examples) {
    auto cc = classify({{0.1, 0.2}, {1.5, 1.3}, std::exp(I * 0.7)});
    EXPECT_EQ(cc.tag, ConvergenceTag::AbsolutelyConvergentOnUnitCircle);
    EXPECT_NEAR_ABS(cc.sigma, Complex(-2.5), 1e-15);

    EXPECT_EQ(classify({{0.1}, {1.5, 1.3}, 0.5}).tag, ConvergenceTag::DivergentEverywhere);

    cc = classify({{-3.0}, {1.5}, 0.5});
    ASSERT_TRUE(cc.right_end.has_value());
    EXPECT_EQ(*cc.right_end, 3);
    EXPECT_NE(cc.tag, ConvergenceTag::DivergentEverywhere);
}

TEST(Classify, ConditionalExcludesOne) {
    auto cc = classify({{0.3}, {0.9}, 1.0});
    EXPECT_FALSE(cc.convergent);
    EXPECT_EQ(cc.tag, ConvergenceTag::NotOnDomain);
    EXPECT_EQ(cc.reason, "conditional convergence excludes z=1");
    EXPECT_EQ(classify({{0.3}, {0.9}, -1.0}).tag, ConvergenceTag::ConditionallyConvergentOnUnitCircle);
    EXPECT_THROW(eval_H({{0.3}, {0.9}, 1.0}), DivergentError);
}

TEST(Classify, OffCircleNotOnDomain) {
    EXPECT_EQ(classify({{0.3}, {1.9}, 0.5}).tag, ConvergenceTag::NotOnDomain);
    EXPECT_EQ(classify({{0.3}, {1.9}, 2.0}).tag, ConvergenceTag::NotOnDomain);
}

TEST(ClassifyProperty, UnequalCountsDiverge) {
    std::mt19937_64 g(21);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    std::uniform_int_distribution<int> n(1, 4);
    for (int i = 0; i < 100; ++i) {
        BilateralSeriesSpec s;
        int p = n(g), q = n(g);
        if (p == q) ++q;
        for (int j = 0; j < p; ++j) s.c.push_back({u(g), u(g)});
        for (int j = 0; j < q; ++j) s.d.push_back({1.0 + u(g), u(g)});
        s.z = std::polar(1.0, 6.0 * u(g));
        EXPECT_EQ(classify(s).tag, ConvergenceTag::DivergentEverywhere);
    }
}

TEST(EvalH, Terminating) {
    // only n = 0 survives
    EXPECT_NEAR_ABS(eval_H({{0.0}, {1.0}, 0.37}).value, Complex(1.0), 1e-15);
    EXPECT_NEAR_REL(eval_H({{-2.0}, {0.7}, 3.0}).value, frozen::h1_m2_0p7_3, 1e-13);
    // hand sum over n = -1, 0, 1: -1 + 1 - 0.25
    EXPECT_NEAR_ABS(eval_H({{-1.0}, {2.0}, 0.5}).value, Complex(-0.25), 1e-15);
}

TEST(EvalH, AbsolutelyConvergentMatchesOracle) {
    EXPECT_NEAR_REL(eval_H({{0.1, 0.2}, {3.4, 3.6}, 1.0}).value, frozen::h2_steep_unit, 1e-12);
    EXPECT_NEAR_REL(eval_H({{{0.3, 0.2}, -0.4}, {{2.1, -0.1}, 3.3}, -1.0}).value, frozen::h2_steep_alt, 1e-12);
    EXPECT_NEAR_REL(eval_H({{0.1, 0.2}, {1.4, 1.6}, 1.0}, Tolerance(1e-14, 1e-11)).value,
                    frozen::h2_dougall_0p1_0p2_1p4_1p6, 1e-10);
}

TEST(EvalH, LevinOptionAgrees) {
    BilateralSeriesSpec s{{0.3}, {0.9}, -1.0};
    auto a = eval_H(s, Tolerance(1e-12, 1e-9));
    auto b = eval_H(s, Tolerance(1e-8, 1e-6), SummationMethod::levin);
    EXPECT_NEAR_REL(b.value, a.value, 1e-6);
    EXPECT_GE(a.est_error, 0.0);
    EXPECT_GE(b.est_error, 0.0);
}

TEST(EvalHProperty, TerminationIsExactFiniteSum) {
    std::mt19937_64 g(22);
    std::uniform_real_distribution<double> u(0.1, 0.9);
    for (int M = 1; M <= 6; ++M) {
        // c1 = -M with |z| > 1 so the left side converges geometrically
        Complex d{1.0 + u(g), u(g)}, z{2.0 + u(g), u(g)};
        BilateralSeriesSpec s{{double(-M)}, {d}, z};
        // term ratios both ways from n = 0
        Complex direct = 1.0, t = 1.0;
        for (long n = 0; n < M; ++n) direct += (t *= (double(n - M)) / (d + double(n)) * z);
        t = 1.0;
        for (long n = 0; n > -400; --n) direct += (t *= (d + double(n - 1)) / ((double(n - 1 - M)) * z));
        EXPECT_NEAR_REL(eval_H(s).value, direct, 1e-12) << M;
    }
}

TEST(Symmetry, Shape) {
    BilateralSeriesSpec s{{0.1, 0.2}, {1.4, 1.6}, 2.0};
    auto t = symmetry_transform(s);
    ASSERT_EQ(t.c.size(), 2u);
    EXPECT_NEAR_ABS(t.c[0], Complex(-0.4), 1e-15);
    EXPECT_NEAR_ABS(t.d[1], Complex(0.8), 1e-15);
    EXPECT_NEAR_ABS(t.z, Complex(0.5), 1e-15);
    auto back = symmetry_transform(t);
    for (std::size_t j = 0; j < 2; ++j) {
        EXPECT_NEAR_ABS(back.c[j], s.c[j], 1e-15);
        EXPECT_NEAR_ABS(back.d[j], s.d[j], 1e-15);
    }
    EXPECT_NEAR_ABS(back.z, s.z, 1e-15);
    // p != q picks up the sign (-1)^{p-q}
    auto u = symmetry_transform({{0.2, 0.3}, {1.5}, 2.0});
    EXPECT_NEAR_ABS(u.z, Complex(-0.5), 1e-15);
}

TEST(Symmetry, TerminatingValue) {
    BilateralSeriesSpec s{{-1.0}, {2.0}, 2.0};
    EXPECT_NEAR_REL(eval_H(s).value, frozen::h1_m1_2_2, 1e-14);
    EXPECT_NEAR_REL(eval_H(symmetry_transform(s)).value, frozen::h1_m1_2_2, 1e-14);
}

TEST(SymmetryProperty, AbsoluteCase) {
    std::mt19937_64 g(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        BilateralSeriesSpec s{{u(g) - 0.5, u(g) - 0.5}, {1.5 + u(g), 1.5 + u(g)}, std::polar(1.0, 6.28 * u(g))};
        auto a = eval_H(s, Tolerance(1e-13, 1e-10));
        auto b = eval_H(symmetry_transform(s), Tolerance(1e-13, 1e-10));
        EXPECT_NEAR_ABS(a.value, b.value, 10.0 * (a.est_error + b.est_error) + 1e-13);
    }
}

TEST(Reduce, ToUnilateral) {
    BilateralSeriesSpec s{{{0.3, 0.1}}, {1.0}, 0.4};
    auto u = reduce_to_unilateral(s);
    EXPECT_EQ(u.b.size(), 0u);
    EXPECT_NEAR_REL(eval_F(u).value, frozen::binomial_0p3_0p1i_0p4, 1e-13);
    EXPECT_NEAR_REL(eval_F(u).value, std::pow(1.0 - 0.4, -Complex(0.3, 0.1)), 1e-13);
    // bilateral value equals the one-sided one
    BilateralSeriesSpec s2{{0.2, 0.4}, {1.9, 1.0}, 1.0};
    auto u2 = reduce_to_unilateral(s2);
    ASSERT_EQ(u2.b.size(), 1u);
    EXPECT_NEAR_REL(eval_H(s2, Tolerance(1e-13, 1e-10)).value, eval_F(u2, Tolerance(1e-13, 1e-10)).value, 1e-9);
    EXPECT_THROW(reduce_to_unilateral({{0.2}, {1.5}, 0.5}), NotReducible);
}

TEST(ClosedForm, Examples) {
    EXPECT_EQ(closed_form_H(HKind::OneH1_plus1, {0.3, 1.7}), Complex(0.0));
    EXPECT_NEAR_REL(closed_form_H(HKind::OneH1_minus1, {0.3, 1.7}), frozen::h1_minus1_0p3_1p7, 1e-13);
    // d = 1: the classical Gauss sum
    Complex a = 0.2, b = 0.3, c = 1.9;
    EXPECT_NEAR_REL(closed_form_H(HKind::Gauss2H2, {a, b, c, 1.0}),
                    gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b)), 1e-13);
    std::vector<Complex> p{0.4, 0.1, 0.15, 0.2, 0.25};
    EXPECT_NEAR_REL(closed_form_H(HKind::VWP5H5, p), eval_H(h_series_for(HKind::VWP5H5, p), Tolerance(1e-14, 1e-11)).value,
                    1e-8);
    EXPECT_THROW(closed_form_H(HKind::Gauss2H2, {0.5, 0.5, 1.0, 1.0}), ConstraintViolation);
    EXPECT_THROW(closed_form_H(HKind::OneH1_minus1, {0.3}), DomainError);
}

TEST(ClosedForm, ExpVariantsAgreeAtEndpoints) {
    // t = 0 in the minus form is z = -1
    EXPECT_NEAR_REL(closed_form_H(HKind::OneH1_minus_exp, {0.3, 1.7, 0.0}), closed_form_H(HKind::OneH1_minus1, {0.3, 1.7}),
                    1e-14);
    // t = pi in the plus form is z = -1 as well
    EXPECT_NEAR_REL(closed_form_H(HKind::OneH1_plus_exp, {0.3, 1.7, pi}), closed_form_H(HKind::OneH1_minus1, {0.3, 1.7}),
                    1e-13);
}

// every kind against direct summation, 50 draws with constraint margin >= 0.5
TEST(ClosedFormProperty, SummationConsistency) {
    std::mt19937_64 g(24);
    std::uniform_real_distribution<double> u(-0.5, 1.5);
    for (const auto& info : h_kinds()) {
        int done = 0, tries = 0;
        while (done < 50 && tries < 100000) {
            ++tries;
            std::vector<Complex> p;
            for (std::size_t j = 0; j < info.arity; ++j) p.push_back(u(g));
            if (info.kind == HKind::OneH1_minus_exp) p[2] = 0.9 * pi * (u(g) - 0.5);
            if (info.kind == HKind::OneH1_plus_exp) p[2] = pi * (1.0 + 0.9 * (u(g) - 0.5));
            if (info.kind == HKind::TwoH2_minus1_constrained) p[3] = p[1] + p[2] - p[0];
            if (h_constraint_margin(info.kind, p) < 0.5) continue;
            BilateralSeriesSpec s = h_series_for(info.kind, p);
            bool near_int = false;
            for (Complex x : s.c) near_int |= std::abs(x - std::round(x.real())) < 0.05;
            for (Complex x : s.d) near_int |= std::abs(x - std::round(x.real())) < 0.05;
            if (near_int) continue;
            Complex cf = closed_form_H(info.kind, p);
            Tolerance tol = info.kind == HKind::OneH1_plus1 ? Tolerance(1e-11, 0.0) : Tolerance(1e-14, 1e-10);
            Complex v;
            try {
                v = eval_H(s, tol).value;
            } catch (const Error& e) {
                ADD_FAILURE() << info.name << " " << e.what();
                break;
            }
            EXPECT_LE(std::abs(v - cf), std::max(1e-8, 1e-8 * std::abs(cf))) << info.name << " draw " << done;
            ++done;
        }
        EXPECT_EQ(done, 50) << info.name;
    }
}

TEST(EvalH, NearMinusOneTail) {
    // z just off -1: the odd and even tail terms differ in size by orders of magnitude
    std::vector<Complex> p{-0.17620801362051181, 0.55560968474228134, 3.1403023717654852};
    Complex v = eval_H(h_series_for(HKind::OneH1_plus_exp, p), Tolerance(1e-300, 1e-12)).value;
    EXPECT_NEAR_REL(v, closed_form_H(HKind::OneH1_plus_exp, p), 1e-13);
}
