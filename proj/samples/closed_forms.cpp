// Sum each bilateral series kind at one parameter point and compare with
// its closed form.
#include <cstdio>

#include <rbeta/rbeta.hpp>

int main() {
    using namespace rbeta;
    const std::vector<std::pair<HKind, std::vector<Complex>>> cases = {
        {HKind::OneH1_minus_exp, {0.3, 1.4, 2.0}},
        {HKind::OneH1_plus1, {0.2, 2.1}},
        {HKind::Gauss2H2, {0.3, 0.2, 1.9, 1.7}},
        {HKind::WellPoised3H3, {0.4, 0.3, 0.2, 0.1}},
        {HKind::VWP5H5, {0.4, 0.3, 0.2, 0.1, 0.25}},
    };
    for (const auto& [kind, p] : cases) {
        BilateralSeriesSpec s = h_series_for(kind, p);
        try {
            SeriesValue v = eval_H(s, Tolerance(1e-14, 1e-11));
            Complex c = closed_form_H(kind, p);
            std::printf("%-18s series (% .14f, % .14f)  closed (% .14f, % .14f)  |gap| %.2e  terms %zu\n", h_kind_info(kind).name,
                        v.value.real(), v.value.imag(), c.real(), c.imag(), std::abs(v.value - c), std::size_t(v.terms_used));
        } catch (const Error& e) {
            std::printf("%-18s %s: %s\n", h_kind_info(kind).name, e.kind().c_str(), e.what());
        }
    }
}
