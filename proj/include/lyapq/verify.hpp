#ifndef LYAPQ_VERIFY_HPP
#define LYAPQ_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "lyapq/spectrum.hpp"

namespace lyapq {

struct CheckRow {
    std::string name;
    double target = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

struct CriterionResult {
    int criterion = 0;
    std::string title;
    std::vector<CheckRow> rows;
    double seconds = 0.0;

    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return !rows.empty();
    }
};

// The verification suite. Criteria are numbered 1..10; each runs at its
// pinned production settings and tolerance. Spectra are memoized across
// criteria so the full run stays affordable.
class VerifySuite {
  public:
    explicit VerifySuite(int threads = 1) : threads_(threads) {}

    CriterionResult run_criterion(int k);
    std::vector<CriterionResult> run_panel(const std::string& panel);

    static const std::map<std::string, std::vector<int>>& panels();

  private:
    const SpectrumApprox& truncation_spectrum(double l1, double l2, double l3, int theta, int N);

    int threads_;
    std::map<std::string, SpectrumApprox> spectra_;

    CriterionResult aubry_andre();            // 1
    CriterionResult thouless_region_one();    // 2
    CriterionResult thouless_regions_23();    // 3
    CriterionResult quantization();           // 4
    CriterionResult asymptotics();            // 5
    CriterionResult jensen_suite();           // 6
    CriterionResult profile_extrapolation();        // 7
    CriterionResult duality_identity();       // 8
    CriterionResult frequency_continuity();   // 9
    CriterionResult oseledets();              // 10
};

} // namespace lyapq

#endif
