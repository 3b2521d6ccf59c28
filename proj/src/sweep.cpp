#include "lyapq/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lyapq/errors.hpp"
#include "lyapq/parallel.hpp"

namespace lyapq {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double window_slope(const std::vector<double>& xs, const std::vector<double>& ys, size_t lo, size_t len) {
    double mx = 0.0, my = 0.0;
    for (size_t i = lo; i < lo + len; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= len;
    my /= len;
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = lo; i < lo + len; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

} // namespace

LEProfile epsilon_sweep(const Cocycle& c, double eps_min, double eps_max, int steps,
                        const SweepOptions& opt) {
    if (steps < 3) throw BadInput("epsilon_sweep needs steps >= 3");
    if (!(eps_min < eps_max)) throw BadInput("epsilon_sweep needs eps_min < eps_max");

    LEProfile prof;
    prof.eps_grid.resize(steps);
    prof.le_values.resize(steps);
    for (int i = 0; i < steps; ++i)
        prof.eps_grid[i] = eps_min + (eps_max - eps_min) * i / (steps - 1);

    std::vector<int> flags(steps, 0);
    std::vector<double> stderrs(steps, 0.0);
    parallel_for(steps, opt.threads, [&](size_t i) {
        if (opt.backend == LeBackend::iterative) {
            const LeEstimate est = le_iterative(c, prof.eps_grid[i], opt.n, opt.phase_samples);
            prof.le_values[i] = est.estimate;
            flags[i] = est.flagged_samples;
            stderrs[i] = est.phase_stderr;
        } else {
            prof.le_values[i] = le_rational(c, prof.eps_grid[i], opt.quad_points);
            stderrs[i] = 0.0;
        }
    });
    for (int f : flags) prof.flagged_samples += f;

    // noise floor: median standard error across the grid (iterative backend),
    // or a small quadrature-refinement probe (rational backend)
    if (opt.backend == LeBackend::iterative) {
        std::vector<double> s = stderrs;
        std::nth_element(s.begin(), s.begin() + s.size() / 2, s.end());
        prof.noise_floor = std::max(s[s.size() / 2], 1e-12);
    } else {
        const double mid = 0.5 * (eps_min + eps_max);
        const double coarse = le_rational(c, mid, std::max<int>(opt.quad_points / 2, (int)c.freq.q()));
        const double fine = prof.le_values[steps / 2];
        prof.noise_floor = std::max(std::abs(fine - coarse), 1e-10);
    }

    const int w = prof.window;
    if (steps >= w) {
        for (int i = 0; i + w <= steps; ++i)
            prof.slopes.push_back(window_slope(prof.eps_grid, prof.le_values, i, w) / two_pi);
        // kinks: jumps between adjacent window slopes, clustered
        int i = 0;
        const int nwin = static_cast<int>(prof.slopes.size());
        while (i + 1 < nwin) {
            if (std::abs(prof.slopes[i + 1] - prof.slopes[i]) > slope_kink_tol) {
                int j = i;
                while (j + 1 < nwin && std::abs(prof.slopes[j + 1] - prof.slopes[j]) > slope_kink_tol) ++j;
                // localize by the largest discrete second difference inside the run
                int best = std::min(i + w / 2 + 1, steps - 2);
                double best_mag = -1.0;
                for (int k = std::max(1, i + 1); k <= std::min(steps - 2, j + w - 1); ++k) {
                    const double mag =
                        std::abs(prof.le_values[k + 1] - 2.0 * prof.le_values[k] + prof.le_values[k - 1]);
                    if (mag > best_mag) {
                        best_mag = mag;
                        best = k;
                    }
                }
                prof.kinks.push_back(prof.eps_grid[best]);
                i = j + 1;
            } else {
                ++i;
            }
        }
    }
    return prof;
}

Acceleration acceleration_at(const LEProfile& profile, double eps) {
    const auto& grid = profile.eps_grid;
    if (grid.size() < static_cast<size_t>(profile.window))
        throw BadInput("profile too short for acceleration estimates");
    if (!(eps > grid.front() && eps < grid.back()))
        throw BadInput("acceleration_at needs eps strictly inside the profile grid");
    const double step = profile.grid_step();
    for (double k : profile.kinks)
        if (std::abs(eps - k) <= step + 1e-15) throw AtKink(eps);

    // right-sided window: first window whose points all sit at >= eps - step
    size_t i = 0;
    while (i < grid.size() && grid[i] < eps - 1e-15) ++i;
    if (i + profile.window > grid.size()) i = grid.size() - profile.window;

    Acceleration acc;
    acc.omega = profile.slopes[i];
    acc.nearest_int = static_cast<int>(std::lround(acc.omega));
    acc.residual = std::abs(acc.omega - acc.nearest_int);
    return acc;
}

} // namespace lyapq
