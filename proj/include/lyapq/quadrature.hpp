#ifndef LYAPQ_QUADRATURE_HPP
#define LYAPQ_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace lyapq {

struct GaussLegendre {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
    explicit GaussLegendre(int order);

    template <class F>
    double integrate(F&& f, double a, double b) const {
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double acc = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(mid + half * nodes[i]);
        return acc * half;
    }
};

// Integral of f over [a, b] where f may have integrable log singularities at
// the interval endpoints listed in `singular_at_a` / `singular_at_b`.
// Panels are graded geometrically toward singular endpoints so that plain
// Gauss-Legendre stays accurate on each panel.
double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        bool singular_at_a, bool singular_at_b, const GaussLegendre& rule,
                        int levels = 48);

} // namespace lyapq

#endif
