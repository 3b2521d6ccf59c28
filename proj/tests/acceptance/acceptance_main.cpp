// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria 1 and 2 carry their own wall-clock budgets and therefore run
// single-threaded, as does everything else (results are thread-invariant).

#include <cstdio>
#include <string>

#include "lyapq/verify.hpp"

int main() {
    lyapq::VerifySuite suite(1);
    bool all_pass = true;

    for (int k = 1; k <= 10; ++k) {
        const lyapq::CriterionResult res = suite.run_criterion(k);
        bool pass = res.all_pass();
        std::string extra;

        if (k == 1 && res.seconds > 60.0) {
            pass = false;
            extra = " [time budget 60 s exceeded]";
        }
        if (k == 2 && res.seconds > 300.0) {
            pass = false;
            extra = " [time budget 300 s exceeded]";
        }

        std::printf("[%s] criterion %2d: %s (%zu checks, %.1f s)%s\n", pass ? "PASS" : "FAIL", k,
                    res.title.c_str(), res.rows.size(), res.seconds, extra.c_str());
        for (const auto& r : res.rows) {
            if (!r.pass)
                std::printf("       FAIL %s: target=%.10g computed=%.10g tol=%.3g %s\n", r.name.c_str(),
                            r.target, r.computed, r.tolerance, r.note.c_str());
        }
        std::fflush(stdout);
        all_pass = all_pass && pass;
    }

    std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES present");
    return all_pass ? 0 : 1;
}
