#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "lyapq/harper.hpp"
#include "lyapq/mat2.hpp"
#include "lyapq/rootfind.hpp"
#include "lyapq/trigpoly.hpp"

using namespace lyapq;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

TrigPoly random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    TrigPoly p(deg(rng));
    for (int k = -p.degree(); k <= p.degree(); ++k) p.set_coeff(k, cplx{unit(rng), unit(rng)});
    return p;
}

// expand leading * w^m0 * prod (w - w_j)^{n_j} back into coefficients
std::vector<cplx> rebuild_poly(const RootList& rl) {
    std::vector<cplx> coeffs{rl.leading_coeff};
    for (const auto& r : rl.roots) {
        for (int m = 0; m < r.multiplicity; ++m) {
            std::vector<cplx> next(coeffs.size() + 1, cplx{0.0});
            for (size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] += coeffs[i];
                next[i] -= coeffs[i] * r.w;
            }
            coeffs = next;
        }
    }
    std::vector<cplx> shifted(coeffs.size() + rl.zeros_at_origin, cplx{0.0});
    for (size_t i = 0; i < coeffs.size(); ++i) shifted[i + rl.zeros_at_origin] = coeffs[i];
    return shifted;
}

} // namespace

TEST_CASE("trig polynomial evaluation") {
    CHECK(TrigPoly::constant(1.0).eval(0.3) == cplx{1.0});

    const TrigPoly cos2 = TrigPoly::two_cos();
    CHECK(std::abs(cos2.eval(0.0) - cplx{2.0}) < 1e-15);
    CHECK(std::abs(cos2.eval(0.25)) < 1e-15);

    // c for couplings (1,0,0) at beta = 0 is the single positive harmonic
    const TrigPoly c = harper_c(Coupling{1.0, 0.0, 0.0}, 0.0);
    CHECK(std::abs(c.eval(0.25) - cplx{0.0, 1.0}) < 1e-15);

    // strip evaluation: e^{2 pi i k z} picks up e^{-2 pi k eps}
    const cplx v = c.eval(cplx{0.0, 0.1});
    CHECK(v.real() == doctest::Approx(std::exp(-two_pi * 0.1)).epsilon(1e-14));
    CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("trig polynomial periodicity and serialization round-trip") {
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> xs(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const TrigPoly p = random_poly(rng, 6);
        const double x = xs(rng);
        const cplx a = p.eval(x), b = p.eval(x + 1.0);
        CHECK(std::abs(a - b) <= 1e-14 * (1.0 + std::abs(a)));

        const TrigPoly q = TrigPoly::from_json(p.to_json());
        for (int k = -p.degree(); k <= p.degree(); ++k) CHECK(p.coeff(k) == q.coeff(k));
    }
}

TEST_CASE("conjugate reflection agrees with conj on the reals") {
    std::mt19937 rng(11u);
    for (int trial = 0; trial < 20; ++trial) {
        const TrigPoly p = random_poly(rng, 4);
        const TrigPoly pc = p.conj_reflect();
        for (double x : {0.0, 0.123, 0.77}) {
            CHECK(std::abs(pc.eval(x) - std::conj(p.eval(x))) < 1e-14);
        }
    }
}

TEST_CASE("roots on the cylinder") {
    SUBCASE("single root of e^{2 pi i x} - r") {
        const double r = 0.37;
        TrigPoly p(1);
        p.set_coeff(1, 1.0);
        p.set_coeff(0, -r);
        const RootList rl = roots_on_cylinder(p);
        REQUIRE(rl.roots.size() == 1);
        CHECK(rl.zeros_at_origin == 1);
        CHECK(rl.roots[0].x == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(rl.roots[0].eps == doctest::Approx(-std::log(r) / two_pi).epsilon(1e-12));
    }
    SUBCASE("zeros of the cosine") {
        const RootList rl = roots_on_cylinder(TrigPoly::two_cos());
        REQUIRE(rl.roots.size() == 2);
        CHECK(rl.roots[0].multiplicity == 1);
        CHECK(rl.roots[1].multiplicity == 1);
        CHECK(rl.roots[0].eps == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(rl.roots[1].eps == doctest::Approx(0.0).epsilon(1e-12));
        const double x0 = std::min(rl.roots[0].x, rl.roots[1].x);
        const double x1 = std::max(rl.roots[0].x, rl.roots[1].x);
        CHECK(x0 == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(x1 == doctest::Approx(0.75).epsilon(1e-12));
    }
    SUBCASE("symmetric coupling puts both roots on the real line") {
        const TrigPoly c = harper_c(Coupling{0.5, 0.4, 0.5}, 0.0);
        const RootList rl = roots_on_cylinder(c);
        REQUIRE(rl.total_count() == 2);
        for (const auto& root : rl.roots) CHECK(std::abs(root.eps) < 1e-9);
    }
}

TEST_CASE("root reconstruction reproduces the algebraic coefficients") {
    std::mt19937 rng(23u);
    for (int trial = 0; trial < 40; ++trial) {
        const TrigPoly p = random_poly(rng, 6);
        if (p.trimmed(0.0).is_zero()) continue;
        const RootList rl = roots_on_cylinder(p.trimmed(0.0));
        CHECK(rl.total_count() == rl.algebraic_degree);
        const std::vector<cplx> orig = p.trimmed(0.0).algebraic_coeffs();
        const std::vector<cplx> rebuilt = rebuild_poly(rl);
        REQUIRE(rebuilt.size() >= orig.size());
        double scale = 0.0;
        for (const auto& c : orig) scale = std::max(scale, std::abs(c));
        for (size_t i = 0; i < orig.size(); ++i) CHECK(std::abs(rebuilt[i] - orig[i]) <= 1e-8 * scale);
    }
}

TEST_CASE("each cylinder root is an actual zero") {
    std::mt19937 rng(29u);
    for (int trial = 0; trial < 25; ++trial) {
        const TrigPoly p = random_poly(rng, 5);
        if (p.trimmed(0.0).is_zero()) continue;
        const RootList rl = roots_on_cylinder(p.trimmed(0.0));
        double scale = 0.0;
        for (const auto& c : p.algebraic_coeffs()) scale = std::max(scale, std::abs(c));
        for (const auto& r : rl.roots) {
            if (r.multiplicity > 1) continue;  // clustered roots reconstruct collectively
            const cplx val = p.eval(cplx{r.x, r.eps});
            // |p| at the root, relative to coefficient scale and |w|^{-N}
            const double weight = std::pow(std::abs(r.w), -p.degree());
            CHECK(std::abs(val) <= 1e-9 * scale * (1.0 + weight));
        }
    }
}

TEST_CASE("identically zero polynomial has no root structure") {
    CHECK_THROWS_AS(roots_on_cylinder(TrigPoly(2)), IdenticallyZero);
}

TEST_CASE("2x2 spectral radius") {
    CHECK(spectral_radius(Mat2C::identity()) == doctest::Approx(1.0));
    CHECK(spectral_radius(Mat2C::diag(3.0, 0.5)) == doctest::Approx(3.0));

    // constant asymptotic matrix at l1 = l3 = 0.5: eigenvalue -1/2 twice
    const double beta = 0.61;
    const Mat2C m0{-1.0, -0.5 * std::exp(cplx{0.0, std::numbers::pi * beta}),
                   0.5 * std::exp(cplx{0.0, -std::numbers::pi * beta}), 0.0};
    CHECK(spectral_radius(m0) == doctest::Approx(0.5).epsilon(1e-12));

    // triangular matrices resolve exactly
    const Mat2C tri{cplx{2.0, 1.0}, cplx{5.0, -3.0}, 0.0, cplx{-0.25, 0.0}};
    CHECK(spectral_radius(tri) == doctest::Approx(std::abs(cplx{2.0, 1.0})).epsilon(1e-14));
}

TEST_CASE("matrix norm and determinant identities") {
    std::mt19937 rng(31u);
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    auto rand_mat = [&] {
        return Mat2C{cplx{unit(rng), unit(rng)}, cplx{unit(rng), unit(rng)}, cplx{unit(rng), unit(rng)},
                     cplx{unit(rng), unit(rng)}};
    };
    for (int trial = 0; trial < 100; ++trial) {
        const Mat2C a = rand_mat(), b = rand_mat();
        CHECK((a * b).norm() <= a.norm() * b.norm() * (1.0 + 1e-12));
        CHECK(std::abs((a * b).det() - a.det() * b.det()) <= 1e-12 * (1.0 + std::abs(a.det() * b.det())));
        CHECK(spectral_radius(a) <= a.norm() * (1.0 + 1e-12));

        // |det| equals the product of singular values, computed from A^H A
        const double g11 = std::norm(a.a11) + std::norm(a.a21);
        const double g22 = std::norm(a.a12) + std::norm(a.a22);
        const cplx g12 = std::conj(a.a11) * a.a12 + std::conj(a.a21) * a.a22;
        const double tr = g11 + g22;
        const double disc = std::sqrt(std::max(0.0, 0.25 * (g11 - g22) * (g11 - g22) + std::norm(g12)));
        const double s1 = std::sqrt(std::max(0.0, 0.5 * tr + disc));
        const double s2 = std::sqrt(std::max(0.0, 0.5 * tr - disc));
        CHECK(s1 * s2 == doctest::Approx(std::abs(a.det())).epsilon(1e-9));
    }
}
