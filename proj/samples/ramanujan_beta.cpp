// Integrals over the real line of 1/prod Gamma(a_j+1+x) Gamma(b_j+1-x):
// quadrature against the gamma-function evaluations.
#include <cstdio>

#include <rbeta/rbeta.hpp>

int main() {
    using namespace rbeta;
    IntegrandSpec s{2, {0.3, 0.7}, {0.2, 0.5}, 0.0, {}};
    QuadratureResult q = integrate(s, Tolerance(1e-14, 1e-11));
    std::printf("m=2 integral  %.15f  (est. error %.1e, %zu panels)\n", q.value.real(), q.est_error, std::size_t(q.panels));
    std::printf("closed form   %.15f\n\n", beta_integral_closed(BetaKind::RamanujanM2, {0.3, 0.7, 0.2, 0.5}).real());

    const std::vector<std::pair<BetaKind, std::vector<Complex>>> cases = {
        {BetaKind::M3Plain, {0.1, 0.2, 0.3}},
        {BetaKind::M4VWP, {0.3, 0.1, 0.2, 0.15}},
        {BetaKind::M5Third, {0.1, 0.2, 0.15, 0.25}},
        {BetaKind::Barnes, {0.3, {0.5, 0.2}, 0.7, {0.4, -0.1}}},
    };
    for (const auto& [kind, p] : cases) {
        VerificationRecord r = verify_beta(kind, p, Tolerance(1e-12, 1e-8));
        std::printf("%-14s %s  rel gap %.2e  %.1f ms\n", beta_kind_info(kind).name, r.pass ? "ok  " : "FAIL", r.rel_gap, r.runtime_ms);
    }

    // the Fourier transform vanishes for |t| > m pi
    s.t = 7.0;
    std::printf("\nm=2, t=7: |integral| = %.2e\n", std::abs(integrate(s).value));
}
