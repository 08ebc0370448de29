// Run a verification suite in-process and print the failing records.
#include <cstdio>
#include <string>

#include <rbeta/rbeta.hpp>

int main(int argc, char** argv) {
    rbeta::SuiteConfig cfg;
    cfg.suite = argc > 1 ? argv[1] : "q-core";
    cfg.seed = argc > 2 ? std::stoull(argv[2]) : 1;
    try {
        rbeta::SuiteReport rep = rbeta::run_suite(cfg);
        std::printf("%s seed %llu: %zu records, %zu passed, %zu failed, max rel gap %.2e\n", cfg.suite.c_str(),
                    (unsigned long long)cfg.seed, rep.summary.total, rep.summary.passed, rep.summary.failed, rep.summary.max_rel_gap);
        for (const auto& r : rep.records)
            if (!r.pass) std::printf("  %s rel %.2e %s\n", r.identity_id.c_str(), r.rel_gap, r.note.c_str());
        return rep.summary.failed ? 1 : 0;
    } catch (const rbeta::Error& e) {
        std::fprintf(stderr, "%s: %s\n", e.kind().c_str(), e.what());
        return 2;
    }
}
