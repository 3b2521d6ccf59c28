#ifndef LYAPQ_COCYCLE_HPP
#define LYAPQ_COCYCLE_HPP

#include <array>
#include <optional>
#include <string>

#include "lyapq/frequency.hpp"
#include "lyapq/mat2.hpp"
#include "lyapq/trigpoly.hpp"

namespace lyapq {

// Pair (beta, D(x)) acting on T x C^2 by (x, v) -> (x + beta, D(x) v).
// D is a 2x2 matrix of trigonometric polynomials, optionally divided
// pointwise by a scalar polynomial (the Jacobi B = A / c case); the division
// is never carried out at the coefficient level.
struct Cocycle {
    Frequency freq = Frequency::rational(0, 1);
    std::array<std::array<TrigPoly, 2>, 2> matrix;
    std::optional<TrigPoly> denom;

    Mat2C value(cplx z) const {
        Mat2C m{matrix[0][0].eval(z), matrix[0][1].eval(z), matrix[1][0].eval(z), matrix[1][1].eval(z)};
        if (denom) {
            const cplx d = denom->eval(z);
            m *= 1.0 / d;
        }
        return m;
    }

    // numerator matrix only (no denominator division)
    Mat2C numer_value(cplx z) const {
        return {matrix[0][0].eval(z), matrix[0][1].eval(z), matrix[1][0].eval(z), matrix[1][1].eval(z)};
    }

    TrigPoly det_poly() const {
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
    }

    bool matrix_is_zero() const {
        return matrix[0][0].is_zero() && matrix[0][1].is_zero() && matrix[1][0].is_zero() &&
               matrix[1][1].is_zero();
    }

    // Def of a singular cocycle: det of the (numerator) matrix vanishes at a
    // real phase, i.e. its root structure has a root at strip height 0.
    bool singular(double tol = 1e-9) const;

    static Cocycle constant(const Frequency& beta, const Mat2C& m);
    static Cocycle from_json(const Frequency& beta, const std::string& text);
    std::string matrix_json() const;
};

// D(x + (n-1) beta + i eps) ... D(x + i eps), newest factor on the left.
Mat2C transfer_product(const Cocycle& c, double x, int n, double eps = 0.0);

} // namespace lyapq

#endif
