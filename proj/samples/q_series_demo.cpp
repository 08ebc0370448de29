// q-Pochhammer symbols, the 1psi1 sum and the q-gamma function.
#include <cstdio>

#include <rbeta/rbeta.hpp>

int main() {
    using namespace rbeta;
    QBase qb(0.5);
    for (long n : {-3L, 0L, 3L}) {
        Complex v = qpoch(0.3, qb, n);
        std::printf("(0.3; 0.5)_%-2ld = %.15f\n", n, v.real());
    }
    std::printf("(0.3; 0.5)_inf = %.15f\n\n", qpoch_inf(0.3, qb).real());

    Complex a = 2.5, b = 0.4, z = 0.6;
    SeriesValue s = eval_psi({qb, {a}, {b}, z});
    Complex p = ramanujan_1psi1_value(a, b, z, qb);
    std::printf("1psi1 series  %.15f (%zu terms)\n1psi1 product %.15f\n\n", s.value.real(), std::size_t(s.terms_used), p.real());

    for (double q : {0.9, 0.99, 0.999}) {
        Complex g = q_gamma(3.5, q);
        std::printf("Gamma_q(3.5), q=%-5g  %.12f\n", q, g.real());
    }
    std::printf("Gamma(3.5)              %.12f\n", gamma(Complex(3.5)).real());
}
