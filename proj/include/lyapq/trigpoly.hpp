#ifndef LYAPQ_TRIGPOLY_HPP
#define LYAPQ_TRIGPOLY_HPP

#include <complex>
#include <string>
#include <vector>

#include "lyapq/mat2.hpp"

namespace lyapq {

// Finite Fourier series sum_{k=-N..N} c_k e^{2 pi i k x}, stored dense.
// Evaluation extends to the strip via z = x + i*eps, where
// e^{2 pi i k z} = e^{2 pi i k x} e^{-2 pi k eps}.
class TrigPoly {
  public:
    TrigPoly() : degree_(0), coeffs_(1, cplx{0.0}) {}
    explicit TrigPoly(int degree) : degree_(degree), coeffs_(2 * degree + 1, cplx{0.0}) {}
    TrigPoly(int degree, std::vector<cplx> coeffs);

    static TrigPoly constant(cplx value);
    // 2 cos(2 pi x); the potential of the models handled here.
    static TrigPoly two_cos();

    int degree() const { return degree_; }
    cplx coeff(int k) const;
    void set_coeff(int k, cplx value);

    bool is_zero(double tol = 0.0) const;

    cplx eval(cplx z) const;
    cplx eval(double x) const { return eval(cplx{x, 0.0}); }

    // Coefficient-conjugated, index-reflected series: agrees with conj(p(x))
    // for real x and is the analytic continuation of that restriction.
    TrigPoly conj_reflect() const;
    // p(x + shift) as a new polynomial (coefficients rotated by phases).
    TrigPoly shifted(double shift) const;

    TrigPoly operator*(const TrigPoly& other) const;
    TrigPoly operator+(const TrigPoly& other) const;
    TrigPoly operator-(const TrigPoly& other) const;
    TrigPoly operator*(cplx s) const;

    // Coefficients of the associated algebraic polynomial
    // q(w) = sum_{m=0}^{2N} c_{m-N} w^m, so that p(z) = e^{-2 pi i N z} q(e^{2 pi i z}).
    std::vector<cplx> algebraic_coeffs() const { return coeffs_; }

    // drops numerically-zero outer harmonics
    TrigPoly trimmed(double tol = 0.0) const;

    std::string to_json() const;
    static TrigPoly from_json(const std::string& text);

  private:
    int degree_;
    std::vector<cplx> coeffs_;  // index m stores c_{m - degree_}
};

} // namespace lyapq

#endif
