#pragma once

#include <array>

#include "core.hpp"

namespace rbeta {

// B_n for n = 0..40 (B_1 = -1/2).
inline const std::array<double, 41>& bernoulli_numbers() {
    static const std::array<double, 41> b = [] {
        std::array<double, 41> v{};
        const double even[21] = {1.0,
                                 1.0 / 6,
                                 -1.0 / 30,
                                 1.0 / 42,
                                 -1.0 / 30,
                                 5.0 / 66,
                                 -691.0 / 2730,
                                 7.0 / 6,
                                 -3617.0 / 510,
                                 43867.0 / 798,
                                 -174611.0 / 330,
                                 854513.0 / 138,
                                 -236364091.0 / 2730,
                                 8553103.0 / 6,
                                 -23749461029.0 / 870,
                                 8615841276005.0 / 14322,
                                 -7709321041217.0 / 510,
                                 2577687858367.0 / 6,
                                 -26315271553053477373.0 / 1919190,
                                 2929993913841559.0 / 6,
                                 -261082718496449122051.0 / 13530};
        for (int k = 0; k <= 20; ++k) v[2 * k] = even[k];
        v[1] = -0.5;
        return v;
    }();
    return b;
}

// Bernoulli polynomial B_n(x), n <= 40.
inline Complex bernoulli_poly(int n, Complex x) {
    const auto& b = bernoulli_numbers();
    // sum_k C(n,k) B_k x^{n-k} by Horner, highest power (k = 0) first
    Complex sum = 0.0;
    double binom = 1.0;  // C(n, k)
    for (int k = 0; k <= n; ++k) {
        sum = sum * x + binom * b[k];
        binom = binom * double(n - k) / double(k + 1);
    }
    return sum;
}

}  // namespace rbeta
