#include "lyapq/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "lyapq/errors.hpp"

namespace lyapq {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

cplx horner(const std::vector<cplx>& a, cplx w) {
    cplx v{0.0};
    for (size_t m = a.size(); m-- > 0;) v = v * w + a[m];
    return v;
}

cplx horner_deriv(const std::vector<cplx>& a, cplx w) {
    cplx v{0.0};
    for (size_t m = a.size(); m-- > 1;) v = v * w + static_cast<double>(m) * a[m];
    return v;
}

} // namespace

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
    // strip leading zeros (tiny relative to the largest coefficient)
    double scale = 0.0;
    for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) throw IdenticallyZero();
    size_t deg = coeffs.size() - 1;
    while (deg > 0 && std::abs(coeffs[deg]) <= 1e-300 * scale) --deg;
    if (deg == 0) return {};

    std::vector<cplx> a(coeffs.begin(), coeffs.begin() + deg + 1);

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (size_t m = 0; m + 1 < deg; ++m) companion(m + 1, m) = 1.0;
    for (size_t m = 0; m < deg; ++m) companion(m, deg - 1) = -a[m] / a[deg];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<cplx> roots;
    roots.reserve(deg);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        cplx w = solver.eigenvalues()(i);
        // Newton polish; stalls harmlessly at multiple roots
        for (int it = 0; it < 12; ++it) {
            const cplx f = horner(a, w);
            const cplx df = horner_deriv(a, w);
            if (std::abs(df) == 0.0) break;
            const cplx step = f / df;
            w -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(w))) break;
        }
        roots.push_back(w);
    }
    return roots;
}

RootList roots_on_cylinder(const TrigPoly& p, double cluster_tol) {
    const TrigPoly t = p.trimmed(0.0);
    if (t.is_zero()) throw IdenticallyZero();

    std::vector<cplx> q = t.algebraic_coeffs();
    double scale = 0.0;
    for (const auto& c : q) scale = std::max(scale, std::abs(c));

    RootList out;
    // zeros at the origin = trailing zero coefficients of q
    size_t lo = 0;
    while (lo < q.size() && std::abs(q[lo]) <= 1e-300 * scale) ++lo;
    out.zeros_at_origin = static_cast<int>(lo);

    size_t hi = q.size() - 1;
    while (hi > lo && std::abs(q[hi]) <= 1e-300 * scale) --hi;
    out.leading_coeff = q[hi];
    out.algebraic_degree = static_cast<int>(hi);

    std::vector<cplx> reduced(q.begin() + lo, q.begin() + hi + 1);
    std::vector<cplx> roots = reduced.size() > 1 ? polynomial_roots(reduced) : std::vector<cplx>{};

    // cluster nearby roots into multiplicities
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        cplx sum = roots[i];
        int mult = 1;
        used[i] = true;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(roots[j] - roots[i]) < cluster_tol) {
                sum += roots[j];
                ++mult;
                used[j] = true;
            }
        }
        const cplx w = sum / static_cast<double>(mult);
        CylinderRoot r;
        r.w = w;
        r.multiplicity = mult;
        double x = std::arg(w) / two_pi;
        x -= std::floor(x);
        r.x = x;
        r.eps = -std::log(std::abs(w)) / two_pi;
        out.roots.push_back(r);
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const CylinderRoot& a, const CylinderRoot& b) {
        return a.eps != b.eps ? a.eps < b.eps : a.x < b.x;
    });
    return out;
}

} // namespace lyapq
