"""Smoke tests for the python bindings: signatures work, values match the
closed forms exposed by the same module."""

import math

import pytest

import lyapq


def test_closed_forms():
    assert lyapq.thouless_le((0.0, 0.5, 0.0)) == pytest.approx(math.log(2.0), abs=1e-14)
    assert lyapq.thouless_le((1.0, 0.5, 0.5)) == 0.0
    assert lyapq.region((0.2, 2.0, 0.3)) == "II"
    assert lyapq.delta((0.25, 0.25, 0.25)) == pytest.approx(1.3169578969248167, abs=1e-13)
    assert lyapq.L_M((0.5, 0.9, 0.5)) == pytest.approx(-math.log(2.0), abs=1e-14)
    v = lyapq.criticality((0.7, 0.5, 0.3))
    assert v["criticality"] == "critical"


def test_duality_involution():
    lam = (0.3, 0.8, 0.1)
    twice = lyapq.duality(lyapq.duality(lam))
    assert twice == pytest.approx(lam, abs=1e-14)


def test_frequency():
    f = lyapq.Frequency.parse("233/377")
    assert f.is_rational and f.q == 377
    g = lyapq.Frequency.golden()
    assert not g.is_rational
    assert (233, 377) in g.convergents()


def test_le_estimators_agree_with_formula():
    gold = lyapq.Frequency.golden()
    # constant-diagonal sanity
    c = lyapq.Cocycle.from_json(
        gold,
        '{"matrix": [[{"coeffs": [[0, 2, 0]]}, {"coeffs": []}],'
        ' [{"coeffs": []}, {"coeffs": [[0, 1, 0]]}]]}',
    )
    est = lyapq.le_iterative(c, eps=0.0, n=200, phase_samples=2)
    assert est["estimate"] == pytest.approx(math.log(2.0), abs=1e-6)

    rat = lyapq.Frequency.rational(1, 2)
    c2 = lyapq.Cocycle.from_json(
        rat,
        '{"matrix": [[{"coeffs": [[0, 3, 0]]}, {"coeffs": []}],'
        ' [{"coeffs": []}, {"coeffs": [[0, 0.3333333333333333, 0]]}]]}',
    )
    assert lyapq.le_rational(c2, eps=0.0, quad_points=2) == pytest.approx(math.log(3.0), abs=1e-10)


def test_jensen_routes_agree():
    lam = (0.1, 1.0, 0.1)
    closed = lyapq.harper_i_eps(lam, 0.0)
    assert closed == pytest.approx(-0.010153423432868699, abs=1e-12)
    c = lyapq.harper_c(lam, 0.0)
    quad = lyapq.i_eps_quadrature(c, 0.0)
    assert quad == pytest.approx(closed, abs=1e-6)
    prof = lyapq.i_eps_exact(c)
    assert all(abs(s[2] / (2 * math.pi) - round(s[2] / (2 * math.pi))) < 1e-12 for s in prof["segments"])


def test_harper_le_on_spectrum():
    lam = (0.0, 0.5, 0.0)
    gold = lyapq.Frequency.golden()
    energies = lyapq.midband_energies(lam, gold, count=3, theta_samples=8, N=150)
    assert len(energies) == 3
    coc = lyapq.build_cocycle(lam, gold, energies[0], "B")
    est = lyapq.le_iterative(coc, n=8000, phase_samples=4)
    assert est["estimate"] == pytest.approx(math.log(2.0), abs=0.05)


def test_errors_are_typed():
    with pytest.raises(lyapq.LyapqError):
        lyapq.duality((0.5, 0.0, 0.5))
    with pytest.raises(lyapq.LyapqError):
        lyapq.Frequency.parse("bogus")
