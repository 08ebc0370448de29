// Gamma, 1/Gamma and the Pochhammer symbol at a few complex points.
#include <cstdio>

#include <rbeta/rbeta.hpp>

int main() {
    using rbeta::Complex;
    const Complex pts[] = {{0.5, 0.0}, {3.0, 0.0}, {-2.5, 0.0}, {0.3, 2.0}, {-4.2, -1.1}, {12.0, 7.5}};
    std::printf("%-18s %-40s %-40s\n", "z", "Gamma(z)", "1/Gamma(z)");
    for (Complex z : pts) {
        Complex g = rbeta::gamma(z), r = rbeta::recip_gamma(z);
        std::printf("(%6.2f,%6.2f)    (% .12e, % .12e)  (% .12e, % .12e)\n", z.real(), z.imag(), g.real(), g.imag(), r.real(),
                    r.imag());
    }
    // 1/Gamma is entire: zero at the poles of Gamma
    Complex r = rbeta::recip_gamma(Complex(-3.0));
    std::printf("\n1/Gamma(-3) = (%g, %g)\n", r.real(), r.imag());
    for (long n : {-3L, 0L, 4L}) {
        Complex p = rbeta::pochhammer(Complex(0.25, 0.5), n);
        std::printf("(0.25+0.5i)_%ld = (%.15g, %.15g)\n", n, p.real(), p.imag());
    }
}
