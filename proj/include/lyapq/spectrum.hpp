#ifndef LYAPQ_SPECTRUM_HPP
#define LYAPQ_SPECTRUM_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lyapq/coupling.hpp"
#include "lyapq/frequency.hpp"

namespace lyapq {

struct SpectrumApprox {
    std::vector<double> points;                         // sorted energies
    std::vector<std::pair<double, double>> merged_intervals;  // disjoint, sorted
    std::string method;                                 // "truncation" | "floquet"
    std::int64_t size_param = 0;                        // N or q
    int theta_samples = 0;
    int skipped_thetas = 0;                             // floquet only

    double total_measure() const {
        double m = 0.0;
        for (const auto& iv : merged_intervals) m += iv.second - iv.first;
        return m;
    }
};

// Union over a phase grid of the eigenvalues of the (2N+1) x (2N+1) Hermitian
// truncation with zero boundary, gauged to a real symmetric tridiagonal.
SpectrumApprox spectrum_truncation(const Coupling& lambda, const Frequency& beta, int theta_samples,
                                   int N, int threads = 1);

// Floquet bands of the q-periodic operator at beta = p/q: for each phase the
// set {E : |disc(E)| <= 2}, edges located by bisection on the renormalized
// q-step transfer trace.
SpectrumApprox spectrum_floquet(const Coupling& lambda, std::int64_t p, std::int64_t q,
                                int theta_samples, int threads = 1);

double hausdorff(const SpectrumApprox& a, const SpectrumApprox& b);

// Mid-band energies, widest bands first; falls back to interior quartile
// points when there are fewer bands than requested.
std::vector<double> sample_midband(const SpectrumApprox& spec, int count);

} // namespace lyapq

#endif
