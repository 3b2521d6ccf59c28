#ifndef LYAPQ_SWEEP_HPP
#define LYAPQ_SWEEP_HPP

#include <vector>

#include "lyapq/cocycle.hpp"
#include "lyapq/lyapunov.hpp"

namespace lyapq {

enum class LeBackend { iterative, rational };

struct SweepOptions {
    LeBackend backend = LeBackend::iterative;
    int n = 10000;
    int phase_samples = 8;
    int quad_points = 2048;
    int threads = 1;
};

// Sampled map eps -> L(beta, D_eps) with windowed least-squares slopes.
// Slopes are stored divided by 2 pi, so for nonsingular analytic cocycles
// they sit near integers away from kinks.
struct LEProfile {
    std::vector<double> eps_grid;
    std::vector<double> le_values;
    std::vector<double> slopes;     // window i covers grid points [i, i+window)
    std::vector<double> kinks;      // eps locations of detected slope jumps
    int window = 5;
    double noise_floor = 0.0;       // estimator noise scale, reported per run
    int flagged_samples = 0;

    double grid_step() const { return eps_grid.size() > 1 ? eps_grid[1] - eps_grid[0] : 0.0; }
};

inline constexpr double slope_kink_tol = 0.15;  // in 2 pi units

LEProfile epsilon_sweep(const Cocycle& c, double eps_min, double eps_max, int steps,
                        const SweepOptions& opt = {});

struct Acceleration {
    double omega;
    int nearest_int;
    double residual;
};

// Right-sided windowed slope at eps divided by 2 pi. Throws AtKink when eps is
// within one grid step of a detected kink.
Acceleration acceleration_at(const LEProfile& profile, double eps);

} // namespace lyapq

#endif
