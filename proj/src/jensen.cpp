#include "lyapq/jensen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lyapq/errors.hpp"
#include "lyapq/quadrature.hpp"
#include "lyapq/rootfind.hpp"

namespace lyapq {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double near_line_band = 0.05;  // roots this close to Im z = eps get a graded mesh
}

double JensenProfile::eval(double eps) const {
    for (const auto& s : segments)
        if (eps <= s.eps_hi) return s.slope * eps + s.intercept;
    const auto& s = segments.back();
    return s.slope * eps + s.intercept;
}

double JensenProfile::right_slope(double eps) const {
    for (const auto& s : segments)
        if (eps < s.eps_hi) return s.slope;
    return segments.back().slope;
}

JensenProfile i_eps_exact(const TrigPoly& c) {
    const TrigPoly t = c.trimmed(0.0);
    if (t.is_zero()) throw IdenticallyZero();
    const RootList rl = roots_on_cylinder(t);
    const int N = t.degree();

    // group roots by strip height
    struct Kink {
        double eps;
        int weight;
    };
    std::vector<Kink> kinks;
    {
        std::vector<CylinderRoot> roots = rl.roots;  // already sorted by eps
        for (const auto& r : roots) {
            if (!kinks.empty() && std::abs(r.eps - kinks.back().eps) < 1e-9)
                kinks.back().weight += r.multiplicity;
            else
                kinks.push_back({r.eps, r.multiplicity});
        }
    }

    JensenProfile prof;
    prof.constant_d = std::log(std::abs(rl.leading_coeff));

    // I(eps) = 2 pi (N - m0) eps + d - 2 pi sum_j n_j min(eps, eps_j)
    const double base_slope = two_pi * (N - rl.zeros_at_origin);
    int weight_above = 0;
    for (const auto& k : kinks) weight_above += k.weight;

    double lo = -inf;
    double const_part = prof.constant_d;
    for (size_t i = 0; i <= kinks.size(); ++i) {
        JensenProfile::Segment seg;
        seg.eps_lo = lo;
        seg.eps_hi = (i < kinks.size()) ? kinks[i].eps : inf;
        seg.slope = base_slope - two_pi * weight_above;
        seg.intercept = const_part;
        prof.segments.push_back(seg);
        if (i < kinks.size()) {
            prof.kink_eps.push_back(kinks[i].eps);
            const_part -= two_pi * kinks[i].weight * kinks[i].eps;
            weight_above -= kinks[i].weight;
            lo = kinks[i].eps;
        }
    }
    return prof;
}

double i_eps_quadrature(const TrigPoly& c, double eps, double tol) {
    const TrigPoly t = c.trimmed(0.0);
    if (t.is_zero()) throw IdenticallyZero();

    const RootList rl = roots_on_cylinder(t);
    auto integrand = [&t, eps](double x) {
        double a = std::abs(t.eval(cplx{x, eps}));
        if (a < 1e-300) a = 1e-300;
        return std::log(a);
    };

    // split [0,1) at root abscissae; grade toward the ones near the line
    struct Split {
        double x;
        bool singular;
    };
    std::vector<Split> splits;
    for (const auto& r : rl.roots) {
        double x = r.x - std::floor(r.x);
        splits.push_back({x, std::abs(r.eps - eps) < near_line_band});
    }
    std::sort(splits.begin(), splits.end(), [](const Split& a, const Split& b) { return a.x < b.x; });
    std::vector<Split> merged;
    for (const auto& s : splits) {
        if (!merged.empty() && std::abs(s.x - merged.back().x) < 1e-12)
            merged.back().singular = merged.back().singular || s.singular;
        else
            merged.push_back(s);
    }

    const int levels = std::max(48, static_cast<int>(std::ceil(-std::log2(std::max(tol, 1e-14)))) + 16);
    static const GaussLegendre rule(16);

    if (merged.empty()) {
        double acc = 0.0;
        const int panels = 8;
        for (int p = 0; p < panels; ++p)
            acc += rule.integrate(integrand, static_cast<double>(p) / panels,
                                  static_cast<double>(p + 1) / panels);
        return acc;
    }

    // integrate over one period starting at the first split
    double acc = 0.0;
    for (size_t i = 0; i < merged.size(); ++i) {
        const Split& a = merged[i];
        const Split b = (i + 1 < merged.size()) ? merged[i + 1] : Split{merged[0].x + 1.0, merged[0].singular};
        auto f = [&integrand](double x) { return integrand(x - std::floor(x)); };
        acc += integrate_graded(f, a.x, b.x, a.singular, b.singular, rule, levels);
    }
    return acc;
}

double harper_i_eps_closed(const Coupling& lambda, double eps) {
    const double a = lambda.l1 * std::exp(-two_pi * eps);
    const double b = lambda.l3 * std::exp(two_pi * eps);
    if (b >= a && a + b >= lambda.l2) return std::log(lambda.l3) + two_pi * eps;
    if (a >= b && a + b >= lambda.l2) return std::log(lambda.l1) - two_pi * eps;
    if (lambda.l1 != 0.0 && lambda.l3 != 0.0) {
        const double disc = lambda.l2 * lambda.l2 - 4.0 * lambda.l1 * lambda.l3;
        // a + b <= l2 forces l2^2 >= 4 l1 l3, so the root is real
        return std::log(std::abs(2.0 * lambda.l1 * lambda.l3 / (-lambda.l2 + std::sqrt(disc))));
    }
    return std::log(lambda.l2);
}

} // namespace lyapq
