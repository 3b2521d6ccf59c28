#include "lyapq/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace lyapq {

GaussLegendre::GaussLegendre(int order) {
    nodes.resize(order);
    weights.resize(order);
    // Newton iteration from the Chebyshev-angle initial guess
    for (int i = 0; i < order; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        bool singular_at_a, bool singular_at_b, const GaussLegendre& rule,
                        int levels) {
    if (b <= a) return 0.0;
    if (!singular_at_a && !singular_at_b) {
        // a couple of panels for safety on wide smooth stretches
        const double m = 0.5 * (a + b);
        return rule.integrate(f, a, m) + rule.integrate(f, m, b);
    }
    if (singular_at_a && singular_at_b) {
        const double m = 0.5 * (a + b);
        return integrate_graded(f, a, m, true, false, rule, levels) +
               integrate_graded(f, m, b, false, true, rule, levels);
    }
    // one singular endpoint; grade geometrically toward it
    const bool at_a = singular_at_a;
    const double len = b - a;
    double acc = 0.0;
    double frac = 1.0;
    for (int l = 0; l < levels; ++l) {
        const double next = frac * 0.5;
        const double lo = at_a ? a + len * next : b - len * frac;
        const double hi = at_a ? a + len * frac : b - len * next;
        acc += rule.integrate(f, lo, hi);
        frac = next;
    }
    // the innermost sliver has width len*2^-levels; the integrand is
    // log-integrable there, so the truncation error is O(width * |log width|)
    return acc;
}

} // namespace lyapq
