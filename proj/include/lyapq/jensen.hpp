#ifndef LYAPQ_JENSEN_HPP
#define LYAPQ_JENSEN_HPP

#include <vector>

#include "lyapq/coupling.hpp"
#include "lyapq/trigpoly.hpp"

namespace lyapq {

// I_eps(c) = Int_T log |c(x + i eps)| dx is piecewise linear and convex in
// eps, with kinks exactly at the strip heights of the roots of c and slopes
// in 2 pi Z. This profile is built from root data, not fitted.
//
// Orientation convention (fixed project-wide): the harmonic e^{2 pi i k x}
// contributes slope -2 pi k, since |e^{2 pi i k (x+i eps)}| = e^{-2 pi k eps}.
struct JensenProfile {
    struct Segment {
        double eps_lo, eps_hi;  // +-inf at the ends
        double slope;           // in 2 pi Z by construction
        double intercept;       // I(eps) = slope * eps + intercept on the segment
    };
    std::vector<Segment> segments;
    std::vector<double> kink_eps;
    double constant_d = 0.0;  // log |leading algebraic coefficient|

    double eval(double eps) const;
    double right_slope(double eps) const;
};

// Adaptive log-singular quadrature of Int log|c(x+i eps)| dx. Valid even when
// c has zeros on the line Im z = eps.
double i_eps_quadrature(const TrigPoly& c, double eps, double tol = 1e-9);

// Exact piecewise-linear I_eps assembled from the cylinder roots of c.
JensenProfile i_eps_exact(const TrigPoly& c);

// Closed form of I_eps for the extended Harper coefficient function c_lambda,
// chosen by the region inequalities in exp(+-2 pi eps)-weighted amplitudes.
double harper_i_eps_closed(const Coupling& lambda, double eps);

} // namespace lyapq

#endif
