#include "wrt/suites.hpp"

#include <cstdio>

using namespace wrt;

int main() {
    int failed = 0;
    for (const auto& e : suites()) {
        RunReport rep = e.run();
        bool ok = rep.ok();
        if (!ok) ++failed;
        std::printf("%s criterion %d: %s (%ld/%ld passed, %ld skipped%s%s, %.1fs)\n", ok ? "PASS" : "FAIL", e.criterion,
                    e.title.c_str(), rep.passed, rep.run, rep.skipped, rep.note.empty() ? "" : "; ",
                    rep.note.c_str(), rep.seconds);
        if (rep.first_failure) std::printf("  first failure: %s\n", rep.first_failure->c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, suites().size());
    return failed ? 1 : 0;
}
