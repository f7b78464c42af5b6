// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "cblock/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    std::string only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
        else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = argv[++i];
    }
    int failures = 0;
    for (const auto& r : cblock::run_acceptance(seed, only)) {
        std::printf("[%s] %2d. %s (%s)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.details.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failures;
    }
    std::printf("%s: seed=%llu\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                static_cast<unsigned long long>(seed));
    return failures == 0 ? 0 : 1;
}
