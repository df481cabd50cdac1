// Runs the eight acceptance criteria and prints one PASS/FAIL line for each.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "lchoose/bundles.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> names = lchoose::bundle_names();
    lchoose::BundleOptions options;
    if (const char* t = std::getenv("LCHOOSE_THREADS")) options.threads = std::max(1, std::atoi(t));
    bool all = true;
    int index = 0;
    for (const auto& name : names) {
        ++index;
        if (argc > 1 && name != argv[1]) continue;
        const auto r = lchoose::run_bundle(name, options);
        all = all && r.passed;
        std::printf("criterion %d [%s] %s (%.1fs): %s\n", index, name.c_str(), r.passed ? "PASS" : "FAIL",
                    static_cast<double>(r.elapsed.count()) / 1000.0, r.summary.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
