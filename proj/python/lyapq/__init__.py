"""Lyapunov exponents of analytic quasi-periodic 2x2 cocycles.

Thin wrapper over the C++ core. All exponents are in natural log units.
"""

from lyapq._core import (
    Cocycle,
    Frequency,
    L_M,
    LyapqError,
    TrigPoly,
    build_cocycle,
    complex_le,
    criticality,
    delta,
    duality,
    epsilon_sweep,
    harper_c,
    harper_i_eps,
    i_eps_exact,
    i_eps_quadrature,
    le_iterative,
    le_rational,
    midband_energies,
    region,
    roots_on_cylinder,
    solution_growth,
    spectrum_floquet,
    spectrum_truncation,
    thouless_le,
)

__all__ = [
    "Cocycle",
    "Frequency",
    "L_M",
    "LyapqError",
    "TrigPoly",
    "build_cocycle",
    "complex_le",
    "criticality",
    "delta",
    "duality",
    "epsilon_sweep",
    "harper_c",
    "harper_i_eps",
    "i_eps_exact",
    "i_eps_quadrature",
    "le_iterative",
    "le_rational",
    "midband_energies",
    "region",
    "roots_on_cylinder",
    "solution_growth",
    "spectrum_floquet",
    "spectrum_truncation",
    "thouless_le",
]
