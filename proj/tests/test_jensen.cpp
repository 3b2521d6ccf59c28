#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lyapq/harper.hpp"
#include "lyapq/jensen.hpp"

using namespace lyapq;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_CASE("strip average of a constant") {
    for (double eps : {-0.7, 0.0, 1.3}) {
        CHECK(i_eps_quadrature(TrigPoly::constant(2.0), eps) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    }
}

TEST_CASE("single root contributes -2 pi min(eps, eps_j)") {
    const double x0 = 0.3, eps0 = 0.15;
    TrigPoly p(1);
    p.set_coeff(1, 1.0);
    p.set_coeff(0, -std::exp(cplx{0.0, two_pi * x0}) * std::exp(-two_pi * eps0));
    CHECK(i_eps_quadrature(p, 0.05) == doctest::Approx(-two_pi * 0.05).epsilon(1e-8));
    CHECK(i_eps_quadrature(p, 0.40) == doctest::Approx(-two_pi * eps0).epsilon(1e-8));
    // on the kink itself the singularity sits on the integration line
    CHECK(std::abs(i_eps_quadrature(p, eps0) - (-two_pi * eps0)) < 1e-3);
}

TEST_CASE("harper coefficient at (0, 1, 2) integrates to log 2") {
    const TrigPoly c = harper_c(Coupling{0.0, 1.0, 2.0}, 0.0);
    CHECK(i_eps_quadrature(c, 0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-8));
    CHECK(harper_i_eps_closed(Coupling{0.0, 1.0, 2.0}, 0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("exact profile of a pure harmonic") {
    // c = e^{-2 pi i x}: |c(x + i eps)| = e^{2 pi eps}, one affine segment
    TrigPoly p(1);
    p.set_coeff(-1, 1.0);
    const JensenProfile prof = i_eps_exact(p);
    CHECK(prof.kink_eps.empty());
    REQUIRE(prof.segments.size() == 1);
    CHECK(prof.segments[0].slope / two_pi == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(prof.eval(0.25) == doctest::Approx(two_pi * 0.25).epsilon(1e-12));
    CHECK(prof.eval(-1.0) == doctest::Approx(-two_pi).epsilon(1e-12));
}

TEST_CASE("exact profile of the cosine kinks at zero") {
    const JensenProfile prof = i_eps_exact(TrigPoly::two_cos());
    REQUIRE(prof.kink_eps.size() == 1);
    CHECK(prof.kink_eps[0] == doctest::Approx(0.0).epsilon(1e-12));
    REQUIRE(prof.segments.size() == 2);
    CHECK(prof.segments[0].slope / two_pi == doctest::Approx(-1.0));
    CHECK(prof.segments[1].slope / two_pi == doctest::Approx(1.0));
    // quadrature oracle on both sides of the kink
    CHECK(prof.eval(0.1) == doctest::Approx(i_eps_quadrature(TrigPoly::two_cos(), 0.1)).epsilon(1e-8));
    CHECK(prof.eval(-0.1) == doctest::Approx(i_eps_quadrature(TrigPoly::two_cos(), -0.1)).epsilon(1e-8));
}

TEST_CASE("symmetric coupling kinks once at the real line") {
    const TrigPoly c = harper_c(Coupling{0.5, 0.4, 0.5}, 0.0);
    const JensenProfile prof = i_eps_exact(c);
    REQUIRE(prof.kink_eps.size() == 1);
    CHECK(std::abs(prof.kink_eps[0]) < 1e-9);
    CHECK(prof.segments.front().slope / two_pi == doctest::Approx(-1.0));
    CHECK(prof.segments.back().slope / two_pi == doctest::Approx(1.0));
}

TEST_CASE("exact and quadrature routes agree on random polynomials") {
    std::mt19937 rng(2024u);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(1, 6);
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        TrigPoly p(deg(rng));
        for (int k = -p.degree(); k <= p.degree(); ++k) p.set_coeff(k, cplx{unit(rng), unit(rng)});
        const JensenProfile prof = i_eps_exact(p);
        // convexity: slopes strictly increase across kinks, all integers
        for (size_t s = 0; s + 1 < prof.segments.size(); ++s)
            CHECK(prof.segments[s + 1].slope > prof.segments[s].slope + 1.0);
        for (const auto& seg : prof.segments) {
            const double r = seg.slope / two_pi;
            CHECK(std::abs(r - std::round(r)) < 1e-12);
        }
        for (double eps : {-0.6, 0.2, 0.9}) {
            bool near_kink = false;
            for (double k : prof.kink_eps)
                if (std::abs(eps - k) < 1e-3) near_kink = true;
            if (near_kink) continue;
            CHECK(std::abs(prof.eval(eps) - i_eps_quadrature(p, eps)) < 1e-6);
            ++checked;
        }
    }
    CHECK(checked > 30);
}

TEST_CASE("harper closed form against quadrature and frozen value") {
    // third-case value at (0.1, 1, 0.1), eps = 0
    const Coupling lam{0.1, 1.0, 0.1};
    CHECK(harper_i_eps_closed(lam, 0.0) == doctest::Approx(-0.010153423432868699).epsilon(1e-13));
    const TrigPoly c = harper_c(lam, 0.0);
    CHECK(i_eps_quadrature(c, 0.0) == doctest::Approx(harper_i_eps_closed(lam, 0.0)).epsilon(1e-7));

    std::mt19937 rng(99u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double beta = 0.3173;
    for (int trial = 0; trial < 25; ++trial) {
        const Coupling l{0.05 + unit(rng), 0.05 + 1.4 * unit(rng), 0.05 + unit(rng)};
        const double eps = 2.0 * unit(rng) - 1.0;
        const TrigPoly cl = harper_c(l, beta);
        const JensenProfile prof = i_eps_exact(cl);
        bool near_kink = false;
        for (double k : prof.kink_eps)
            if (std::abs(eps - k) < 1e-3) near_kink = true;
        if (near_kink) continue;
        CHECK(std::abs(harper_i_eps_closed(l, eps) - i_eps_quadrature(cl, eps)) < 1e-6);
    }
}

TEST_CASE("harper closed form is continuous across case boundaries") {
    // boundary between the two-sided and flat cases: l1 e^{-u} + l3 e^{u} = l2
    const Coupling lam{0.3, 1.2, 0.2};
    // solve 0.2 t^2 - 1.2 t + 0.3 = 0 for t = e^{2 pi eps}
    const double t = (1.2 + std::sqrt(1.2 * 1.2 - 4.0 * 0.2 * 0.3)) / (2.0 * 0.2);
    const double eps_star = std::log(t) / two_pi;
    const double gap = std::abs(harper_i_eps_closed(lam, eps_star + 1e-9) -
                                harper_i_eps_closed(lam, eps_star - 1e-9));
    CHECK(gap < 1e-7);

    // bounded modulus of continuity on a compact eps x lambda patch
    double max_step = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double e0 = -1.0 + 2.0 * i / 200.0;
        const double v0 = harper_i_eps_closed(lam, e0);
        const double v1 = harper_i_eps_closed(lam, e0 + 1e-4);
        max_step = std::max(max_step, std::abs(v1 - v0));
    }
    CHECK(max_step <= two_pi * 1e-4 * (1.0 + 1e-9));
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(i_eps_quadrature(TrigPoly(3), 0.0), IdenticallyZero);
    CHECK_THROWS_AS(i_eps_exact(TrigPoly(0)), IdenticallyZero);
    CHECK_THROWS_AS(Coupling(-0.1, 0.5, 0.2), InadmissibleCoupling);
    CHECK_THROWS_AS(Coupling(0.0, 0.0, 0.0), InadmissibleCoupling);
}
