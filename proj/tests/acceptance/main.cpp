#include <cstdio>
#include <cstdlib>
#include <string>

#include "iw/suite/acceptance.hpp"

int main(int argc, char** argv) {
    iw::suite::SuiteConfig cfg;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--seed" && i + 1 < argc) cfg.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (a == "--only" && i + 1 < argc) cfg.only.push_back(std::atoi(argv[++i]));
        else {
            std::fprintf(stderr, "usage: acceptance [--seed N] [--only ID]...\n");
            return 2;
        }
    }
    int failed = 0;
    iw::suite::run_suite(cfg, [&](const iw::suite::CriterionResult& r) {
        std::printf("[%s] criterion %2d  %-50s checks=%ld failures=%ld  %.2fs\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.checks, r.failures, r.seconds);
        for (auto& w : r.witnesses) std::printf("        %s\n", w.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failed;
    });
    return failed ? 1 : 0;
}
