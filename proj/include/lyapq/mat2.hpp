#ifndef LYAPQ_MAT2_HPP
#define LYAPQ_MAT2_HPP

#include <array>
#include <cmath>
#include <complex>

namespace lyapq {

using cplx = std::complex<double>;

// 2x2 complex matrix equipped with the Hilbert-Schmidt norm.
struct Mat2C {
    cplx a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

    static Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2C diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }

    friend Mat2C operator*(const Mat2C& l, const Mat2C& r) {
        return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
                l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
    }
    friend Mat2C operator*(cplx s, const Mat2C& m) {
        return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
    }
    friend Mat2C operator+(const Mat2C& l, const Mat2C& r) {
        return {l.a11 + r.a11, l.a12 + r.a12, l.a21 + r.a21, l.a22 + r.a22};
    }
    friend Mat2C operator-(const Mat2C& l, const Mat2C& r) {
        return {l.a11 - r.a11, l.a12 - r.a12, l.a21 - r.a21, l.a22 - r.a22};
    }

    Mat2C& operator*=(cplx s) {
        a11 *= s; a12 *= s; a21 *= s; a22 *= s;
        return *this;
    }

    cplx det() const { return a11 * a22 - a12 * a21; }
    cplx trace() const { return a11 + a22; }

    double norm() const {  // Hilbert-Schmidt
        return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22));
    }

    Mat2C inverse() const {
        const cplx d = det();
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }

    std::array<cplx, 2> apply(const std::array<cplx, 2>& v) const {
        return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]};
    }

    // Eigenvalues by the explicit quadratic; the smaller root is recovered as
    // det/larger to avoid cancellation when tr/2 and the discriminant nearly agree.
    std::array<cplx, 2> eigenvalues() const {
        const cplx h = 0.5 * trace();
        const cplx d = det();
        const cplx s = std::sqrt(h * h - d);
        const cplx l1 = (std::abs(h + s) >= std::abs(h - s)) ? h + s : h - s;
        if (std::abs(l1) == 0.0) return {cplx{0.0}, cplx{0.0}};
        return {l1, d / l1};
    }
};

inline double spectral_radius(const Mat2C& m) {
    const auto ev = m.eigenvalues();
    return std::max(std::abs(ev[0]), std::abs(ev[1]));
}

} // namespace lyapq

#endif
