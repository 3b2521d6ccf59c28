#ifndef LYAPQ_ROOTFIND_HPP
#define LYAPQ_ROOTFIND_HPP

#include <vector>

#include "lyapq/trigpoly.hpp"

namespace lyapq {

struct CylinderRoot {
    double x;          // real part mod 1
    double eps;        // strip height: w = e^{2 pi i (x + i eps)}
    int multiplicity;
    cplx w;            // the algebraic root itself
};

struct RootList {
    std::vector<CylinderRoot> roots;
    int zeros_at_origin = 0;  // order of vanishing of q(w) at w = 0
    cplx leading_coeff{0.0};
    int algebraic_degree = 0; // degree of q after trimming

    int total_count() const {
        int n = zeros_at_origin;
        for (const auto& r : roots) n += r.multiplicity;
        return n;
    }
};

// All roots of the algebraic polynomial q(w) = sum c_{m-N} w^m mapped to
// cylinder coordinates, multiplicities resolved by clustering (tolerance
// cluster_tol in w-space). Throws IdenticallyZero when p == 0.
RootList roots_on_cylinder(const TrigPoly& p, double cluster_tol = 1e-7);

// Roots of a dense complex polynomial sum a_m w^m via companion-matrix
// eigenvalues followed by Newton polishing.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs);

} // namespace lyapq

#endif
