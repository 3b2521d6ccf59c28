#include <doctest.h>

#include <cmath>

#include "lyapq/harper.hpp"
#include "lyapq/jensen.hpp"
#include "lyapq/lyapunov.hpp"
#include "lyapq/spectrum.hpp"

using namespace lyapq;

namespace {
const double kLog2 = std::log(2.0);
}

TEST_CASE("iterative exponent of a constant diagonal cocycle") {
    const Cocycle d = Cocycle::constant(Frequency::golden(), Mat2C::diag(2.0, 1.0));
    for (int n : {10, 100, 1000}) {
        const LeEstimate est = le_iterative(d, 0.0, n, 4);
        // ||diag(2^n,1)||_HS = sqrt(4^n + 1) exactly
        const double expected = kLog2 + 0.5 * std::log1p(std::pow(4.0, -n)) / n;
        CHECK(est.estimate == doctest::Approx(expected).epsilon(1e-12));
        CHECK(est.flagged_samples == 0);
    }
}

TEST_CASE("rank-one cocycle telescopes to a scalar product") {
    // D(x) = ((c(x), 0), (0, 0)) with unimodular c: every product has norm 1
    Cocycle c;
    c.freq = Frequency::golden();
    TrigPoly e(1);
    e.set_coeff(1, 1.0);
    c.matrix[0][0] = e;

    // brute-force oracle: unrenormalized product norms at short lengths
    for (int n : {1, 4, 16, 64}) {
        Mat2C prod = Mat2C::identity();
        for (int j = 0; j < n; ++j) {
            const double x = std::fmod(0.3 + j * static_cast<double>(c.freq.value()), 1.0);
            prod = c.value(cplx{x, 0.0}) * prod;
        }
        CHECK(std::log(prod.norm()) / n == doctest::Approx(0.0).epsilon(1e-12));
    }
    const LeEstimate est = le_iterative(c, 0.0, 1024, 4);
    CHECK(est.estimate == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("zero cocycle is rejected") {
    Cocycle z;
    z.freq = Frequency::golden();
    CHECK_THROWS_AS(le_iterative(z, 0.0, 10, 1), ZeroCocycle);
    CHECK_THROWS_AS(le_rational(Cocycle{Frequency::rational(1, 3), {}, {}}, 0.0, 10), ZeroCocycle);
}

TEST_CASE("rational exponent closed cases") {
    CHECK(le_rational(Cocycle::constant(Frequency::rational(1, 3), Mat2C::identity()), 0.0, 3) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // eigenvalues {3, 1/3}: rho(D^2) = 9 at every phase
    const Cocycle d = Cocycle::constant(Frequency::rational(1, 2), Mat2C::diag(3.0, 1.0 / 3.0));
    CHECK(le_rational(d, 0.0, 2) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(le_rational(Cocycle::constant(Frequency::golden(), Mat2C::identity()), 0.0, 100),
                    NotRational);
    CHECK_THROWS_AS(le_rational(d, 0.0, 1), BadInput);
}

TEST_CASE("rational exponent matches a long iterative run on a periodic band") {
    const Coupling lam{0.0, 0.5, 0.0};
    const Frequency f = Frequency::rational(2, 5);
    const SpectrumApprox spec = spectrum_floquet(lam, 2, 5, 32);
    const double E = sample_midband(spec, 1).at(0);
    const Cocycle b = build_cocycle(lam, f, E, TransferKind::B);
    const double exact = le_rational(b, 0.0, 32 * 5);
    const double iter = le_iterative(b, 0.0, 10000 * 5, 8).estimate;
    CHECK(std::abs(exact - iter) < 5e-3);
}

TEST_CASE("dividing out c shifts the exponent by the strip average of log|c|") {
    // L(A_eps) - L(B_eps) = I_eps(c), away from the det roots
    const Coupling lam{0.3, 0.7, 0.2};
    const Frequency f = Frequency::rational(34, 55);
    const double b = static_cast<double>(f.value());
    const TrigPoly c = harper_c(lam, b);
    for (double eps : {-0.25, 0.4}) {
        const Cocycle ca = build_cocycle(lam, f, 0.9, TransferKind::A);
        const Cocycle cb = build_cocycle(lam, f, 0.9, TransferKind::B);
        const double la = le_rational(ca, eps, 64 * 55);
        const double lb = le_rational(cb, eps, 64 * 55);
        const double ieps = i_eps_quadrature(c, eps, 1e-10);
        // allow twice the self-estimated quadrature error of the LE backend
        const double err_a = std::abs(la - le_rational(ca, eps, 32 * 55));
        const double err_b = std::abs(lb - le_rational(cb, eps, 32 * 55));
        const double tol = 2.0 * (err_a + err_b) + 1e-8;
        CHECK(std::abs(la - lb - ieps) <= std::max(tol, 1e-6));
    }
}

TEST_CASE("doubling sequence is decreasing up to noise") {
    const Cocycle coc =
        build_cocycle(Coupling{0.25, 0.25, 0.25}, Frequency::golden(), 0.8, TransferKind::B);
    const LeEstimate est = le_iterative(coc, 0.0, 4096, 8);
    REQUIRE(est.upper_sequence.size() > 6);
    for (size_t i = 3; i + 1 < est.upper_sequence.size(); ++i) {
        const auto& [m0, l0] = est.upper_sequence[i];
        const auto& [m1, l1] = est.upper_sequence[i + 1];
        CHECK(l1 <= l0 + 0.35 / m0 + 0.05);  // subadditive up to estimator noise
    }
}

TEST_CASE("solution growth of diagonal cocycles") {
    const Cocycle d = Cocycle::constant(Frequency::golden(), Mat2C::diag(2.0, 0.5));
    const GrowthRates top = solution_growth(d, 0.1, {cplx{1.0}, cplx{0.0}}, 256);
    CHECK(top.forward_rate == doctest::Approx(kLog2).epsilon(1e-12));
    REQUIRE(top.backward_rate.has_value());
    CHECK(*top.backward_rate == doctest::Approx(-kLog2).epsilon(1e-12));

    const GrowthRates bottom = solution_growth(d, 0.1, {cplx{0.0}, cplx{1.0}}, 256);
    CHECK(bottom.forward_rate == doctest::Approx(-kLog2).epsilon(1e-12));

    CHECK_THROWS_AS(solution_growth(d, 0.1, {cplx{1.0}, cplx{1.0}}, 8), BadInput);  // not unit
}

TEST_CASE("backward iteration reports undefined across a vanishing determinant") {
    const Cocycle d = Cocycle::constant(Frequency::golden(), Mat2C{1.0, 0.0, 0.0, 0.0});
    const GrowthRates g = solution_growth(d, 0.1, {cplx{1.0}, cplx{0.0}}, 16);
    CHECK(g.forward_rate == doctest::Approx(0.0));
    CHECK(!g.backward_rate.has_value());
}
