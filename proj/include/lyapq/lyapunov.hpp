#ifndef LYAPQ_LYAPUNOV_HPP
#define LYAPQ_LYAPUNOV_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "lyapq/cocycle.hpp"

namespace lyapq {

struct LeEstimate {
    double estimate = 0.0;  // nats
    // (n, L_n) along doubling n; in expectation these decrease toward the
    // infimum that defines the exponent
    std::vector<std::pair<int, double>> upper_sequence;
    int flagged_samples = 0;   // phase samples that hit an exact zero
    double phase_stderr = 0.0; // spread of the per-phase estimates
};

// (1/n) average over an equidistributed phase grid of log ||D^(n)(x + i eps)||.
LeEstimate le_iterative(const Cocycle& c, double eps, int n, int phase_samples);

// Exact-rational exponent (1/q) Int log rho(D^(q)(x + i eps)) dx, evaluated by
// composite Gauss-Legendre on one fold [0, 1/q) of the q-fold symmetric
// integrand. quad_points counts nodes over the whole torus (pre: >= q).
double le_rational(const Cocycle& c, double eps, int quad_points);

struct GrowthRates {
    double forward_rate = 0.0;
    std::optional<double> backward_rate;  // empty when a backward step was singular
};

// Forward and backward growth rates of the solution seeded by unit vector w0.
GrowthRates solution_growth(const Cocycle& c, double x, std::array<cplx, 2> w0, int n);

} // namespace lyapq

#endif
