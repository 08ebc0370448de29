#pragma once

#include <complex>
#include <ostream>

#include <gtest/gtest.h>

inline ::testing::AssertionResult near_rel(const char* a_expr, const char* b_expr, const char*, std::complex<double> a,
                                           std::complex<double> b, double rel) {
    double gap = std::abs(a - b);
    if (gap <= rel * std::abs(b) || gap == 0.0) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << a_expr << " = " << a << " vs " << b_expr << " = " << b
                                         << ", rel gap " << gap / std::abs(b) << " > " << rel;
}

#define EXPECT_NEAR_REL(a, b, rel) EXPECT_PRED_FORMAT3(near_rel, a, b, rel)

inline ::testing::AssertionResult near_abs(const char* a_expr, const char* b_expr, const char*, std::complex<double> a,
                                           std::complex<double> b, double tol) {
    double gap = std::abs(a - b);
    if (gap <= tol) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << a_expr << " = " << a << " vs " << b_expr << " = " << b << ", gap " << gap
                                         << " > " << tol;
}

#define EXPECT_NEAR_ABS(a, b, tol) EXPECT_PRED_FORMAT3(near_abs, a, b, tol)
