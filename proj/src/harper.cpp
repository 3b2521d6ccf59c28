#include "lyapq/harper.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "lyapq/lyapunov.hpp"

namespace lyapq {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double boundary_tol = 1e-12;
}

std::string to_string(Region r) {
    switch (r) {
        case Region::I: return "I";
        case Region::II: return "II";
        default: return "III";
    }
}

std::string to_string(Criticality c) {
    switch (c) {
        case Criticality::subcritical: return "subcritical";
        case Criticality::critical: return "critical";
        default: return "supercritical";
    }
}

TrigPoly harper_c(const Coupling& lambda, double beta) {
    TrigPoly c(1);
    c.set_coeff(-1, lambda.l3 * std::exp(cplx{0.0, -std::numbers::pi * beta}));
    c.set_coeff(0, lambda.l2);
    c.set_coeff(1, lambda.l1 * std::exp(cplx{0.0, std::numbers::pi * beta}));
    return c;
}

Cocycle build_cocycle(const Coupling& lambda, const Frequency& beta, double E, TransferKind which) {
    const double b = static_cast<double>(beta.value());
    const TrigPoly c = harper_c(lambda, b);
    Cocycle coc;
    coc.freq = beta;
    coc.matrix[0][0] = TrigPoly::constant(E) - TrigPoly::two_cos();
    coc.matrix[0][1] = c.conj_reflect().shifted(-b) * cplx{-1.0};
    coc.matrix[1][0] = c;
    coc.matrix[1][1] = TrigPoly(0);
    if (which == TransferKind::B) coc.denom = c;
    return coc;
}

RegionTag region(const Coupling& lambda) {
    RegionTag tag{Region::I};
    const double s = lambda.sum13();
    tag.on_sum13_eq_1 = std::abs(s - 1.0) <= boundary_tol;
    tag.on_l2_eq_1 = std::abs(lambda.l2 - 1.0) <= boundary_tol;
    tag.on_sum13_eq_l2 = std::abs(s - lambda.l2) <= boundary_tol;
    tag.on_l1_eq_l3 = std::abs(lambda.l1 - lambda.l3) <= boundary_tol;
    if (s <= 1.0 && lambda.l2 <= 1.0)
        tag.tag = Region::I;
    else if (s <= lambda.l2 && lambda.l2 >= 1.0)
        tag.tag = Region::II;
    else
        tag.tag = Region::III;
    return tag;
}

double L_M(const Coupling& lambda) {
    const std::complex<double> s = std::sqrt(std::complex<double>{1.0 - 4.0 * lambda.l1 * lambda.l3, 0.0});
    return std::log(std::abs((1.0 + s) / 2.0));
}

double delta(const Coupling& lambda) {
    const std::complex<double> s = std::sqrt(std::complex<double>{1.0 - 4.0 * lambda.l1 * lambda.l3, 0.0});
    const double numer = std::abs(1.0 + s);
    double denom;
    if (lambda.l2 <= lambda.sum13()) {
        denom = 2.0 * std::max(lambda.l1, lambda.l3);
    } else {
        // l2 >= l1 + l3 >= 2 sqrt(l1 l3) keeps this root real
        denom = lambda.l2 + std::sqrt(lambda.l2 * lambda.l2 - 4.0 * lambda.l1 * lambda.l3);
    }
    return std::log(numer / denom);
}

double thouless_le(const Coupling& lambda) {
    if (region(lambda).tag != Region::I) return 0.0;
    return delta(lambda);  // in region I the sqrt is real and the formula coincides
}

ComplexLe complex_le(const Coupling& lambda, double eps) {
    ComplexLe out;
    const double i0 = harper_i_eps_closed(lambda, 0.0);
    out.le_A_lower = std::max(i0, L_M(lambda) + two_pi * std::abs(eps));
    out.le_B_on_spectrum = out.le_A_lower - harper_i_eps_closed(lambda, eps);
    return out;
}

Coupling duality(const Coupling& lambda) {
    if (lambda.l2 <= 0.0) throw ZeroLambda2();
    return {lambda.l3 / lambda.l2, 1.0 / lambda.l2, lambda.l1 / lambda.l2};
}

HarperVerdict criticality(const Coupling& lambda) {
    HarperVerdict v{};
    v.delta = delta(lambda);
    v.L_M = L_M(lambda);
    v.le_on_spectrum = thouless_le(lambda);

    const double s = lambda.sum13();
    bool critical = false;
    if (std::abs(lambda.l1 - lambda.l3) > boundary_tol) {
        critical = (std::abs(s - 1.0) <= boundary_tol && lambda.l2 <= 1.0 + boundary_tol) ||
                   (s <= 1.0 + boundary_tol && std::abs(lambda.l2 - 1.0) <= boundary_tol);
    } else {
        const bool in_region_three = s + boundary_tol >= std::max(1.0, lambda.l2);
        critical = in_region_three ||
                   (2.0 * lambda.l1 <= 1.0 + boundary_tol && std::abs(lambda.l2 - 1.0) <= boundary_tol);
    }

    if (v.delta > boundary_tol)
        v.criticality = Criticality::supercritical;
    else if (critical)
        v.criticality = Criticality::critical;
    else
        v.criticality = Criticality::subcritical;
    return v;
}

double duality_le_identity_check(const Coupling& lambda, const Frequency& beta, double E,
                                 const IterOptions& opts) {
    if (region(lambda).tag != Region::I)
        throw InadmissibleCoupling("duality identity check expects a region-I coupling");
    const Coupling dual = duality(lambda);
    const double le_here =
        le_iterative(build_cocycle(lambda, beta, E, TransferKind::B), 0.0, opts.n, opts.phase_samples)
            .estimate;
    const double le_dual =
        le_iterative(build_cocycle(dual, beta, E / lambda.l2, TransferKind::B), 0.0, opts.n,
                     opts.phase_samples)
            .estimate;
    const double integral =
        std::log(lambda.l2) + harper_i_eps_closed(dual, 0.0) - harper_i_eps_closed(lambda, 0.0);
    return std::abs(le_here - integral - le_dual);
}

} // namespace lyapq
