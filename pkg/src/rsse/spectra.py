"""Analytic level oracles and the maps between eigenvalue, total energy
and binding energy.

The nonrelativistic eigenvalue eps of a bound system of total rest mass M
is read either directly as eps = -B, or through the quadratic map

    eps = (E**2 - (M c**2)**2) / (2 M c**2),

whose inversion on the positive branch gives

    B = M c**2 * (1 - sqrt(1 + 2 eps / (M c**2))),

reducing to B = -eps at leading order in eps/(M c**2).  The exact
Dirac-Coulomb spectrum is included purely as an external benchmark for the
comparison reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .units import ATOMIC, PROTON_ELECTRON_MASS_RATIO, UnitSystem


def _units(units: Optional[UnitSystem]) -> UnitSystem:
    return ATOMIC if units is None else units


# ---------------------------------------------------------------------------
# level oracles
# ---------------------------------------------------------------------------


def bohr_level(Z: float, mu: float, n: int) -> float:
    """Coulomb eigenvalue -mu Z**2 / (2 n**2) in hartree (atomic units)."""
    if n < 1:
        raise ValueError(f"principal quantum number must be >= 1, got {n}")
    if not (Z > 0.0 and mu > 0.0):
        raise ValueError(f"need Z > 0 and mu > 0, got Z={Z}, mu={mu}")
    return -mu * Z * Z / (2.0 * n * n)


def oscillator_level(omega: float, n: int) -> float:
    """Harmonic eigenvalue hbar*omega*(n + 1/2) in hartree (atomic units)."""
    if not omega > 0.0:
        raise ValueError(f"frequency must be positive, got {omega}")
    if n < 0:
        raise ValueError(f"oscillator index must be nonnegative, got {n}")
    return omega * (n + 0.5)


def _check_half_integer_j(j: float, n: int) -> None:
    twice = 2.0 * j
    if abs(twice - round(twice)) > 1e-9 or round(twice) % 2 == 0 or j <= 0.0:
        raise ValueError(f"j must be a positive half-integer (1/2, 3/2, ...), got {j}")
    if j + 0.5 > n:
        raise ValueError(f"need j + 1/2 <= n, got j={j}, n={n}")


def dirac_coulomb_level(
    Z: float, n: int, j: float, units: UnitSystem | None = None
) -> tuple[float, float]:
    """Exact point-Coulomb spectrum for a unit-mass fermion: (E_total, binding).

    E = m c**2 [1 + (Z alpha / (n - (j+1/2) + sqrt((j+1/2)**2 - (Z alpha)**2)))**2]**(-1/2)

    with B = m c**2 - E.  This is an external reference, independent of the
    other operations in this module.  Raises for the supercritical regime
    Z alpha >= j + 1/2.
    """
    u = _units(units)
    if n < 1:
        raise ValueError(f"principal quantum number must be >= 1, got {n}")
    _check_half_integer_j(j, n)
    za = Z * u.alpha
    kappa = j + 0.5
    if za >= kappa:
        raise ValueError(
            f"supercritical coupling: Z*alpha = {za} >= j + 1/2 = {kappa}; no bound state"
        )
    gamma_rel = math.sqrt((kappa - za) * (kappa + za))
    denom = n - kappa + gamma_rel
    x = (za / denom) ** 2
    mc2 = u.mass_unit * u.c * u.c
    # (1+x)**(-1/2) via expm1/log1p keeps the binding relative-accurate even
    # though it is a ~1e-5 fraction of the rest energy
    z = -0.5 * math.log1p(x)
    total = mc2 * math.exp(z)
    binding = -mc2 * math.expm1(z)
    return total, binding


# ---------------------------------------------------------------------------
# eigenvalue <-> energy maps
# ---------------------------------------------------------------------------


def binding_nonrel(epsilon: float) -> float:
    """Leading-order reading of the eigenvalue: B = -eps."""
    return -epsilon


def _check_domain(epsilon: float, mc2: float) -> float:
    y = 2.0 * epsilon / mc2
    if y < -1.0:
        raise ValueError(
            f"epsilon = {epsilon} lies below the domain bound -M*c**2/2 = {-0.5 * mc2}"
        )
    return y


def epsilon_from_total_energy(
    energy: float, M: float, units: UnitSystem | None = None
) -> float:
    """eps = (E**2 - (M c**2)**2) / (2 M c**2) on the E > 0 branch."""
    u = _units(units)
    if not energy > 0.0:
        raise ValueError(f"total energy must be positive, got {energy}")
    if not M > 0.0:
        raise ValueError(f"total rest mass must be positive, got {M}")
    mc2 = M * u.c * u.c
    # factored form keeps accuracy for E close to M c**2
    return (energy - mc2) * (energy + mc2) / (2.0 * mc2)


def total_energy_from_epsilon(
    epsilon: float, M: float, units: UnitSystem | None = None
) -> float:
    """E = M c**2 sqrt(1 + 2 eps / (M c**2)), positive branch.

    Defined for eps >= -M c**2 / 2; the lower edge maps to E = 0.
    """
    u = _units(units)
    if not M > 0.0:
        raise ValueError(f"total rest mass must be positive, got {M}")
    mc2 = M * u.c * u.c
    y = _check_domain(epsilon, mc2)
    return mc2 * math.sqrt(1.0 + y)


def binding_relativistic(epsilon: float, M: float, units: UnitSystem | None = None) -> float:
    """B = M c**2 [1 - sqrt(1 + 2 eps / (M c**2))].

    Agrees with M c**2 - total_energy_from_epsilon(eps, M) and with -eps to
    leading order; the next correction is +eps**2/(2 M c**2).  Evaluated
    through expm1/log1p so small bindings keep full relative accuracy.
    """
    u = _units(units)
    if not M > 0.0:
        raise ValueError(f"total rest mass must be positive, got {M}")
    mc2 = M * u.c * u.c
    y = _check_domain(epsilon, mc2)
    if y == -1.0:
        return mc2  # E = 0 edge of the domain
    return -mc2 * math.expm1(0.5 * math.log1p(y))


# ---------------------------------------------------------------------------
# comparison report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComparisonSystem:
    """A named bound system the report generator knows how to fill in."""

    name: str
    kind: str  # "coulomb" or "harmonic"
    mu: float
    M: float
    Z: Optional[float] = None
    omega: Optional[float] = None


_MU_HYDROGEN = PROTON_ELECTRON_MASS_RATIO / (1.0 + PROTON_ELECTRON_MASS_RATIO)

COMPARISON_SYSTEMS: dict[str, ComparisonSystem] = {
    "hydrogen": ComparisonSystem("hydrogen", "coulomb", mu=1.0, M=1.0, Z=1.0),
    "hydrogen_finite_mass": ComparisonSystem(
        "hydrogen_finite_mass",
        "coulomb",
        mu=_MU_HYDROGEN,
        M=1.0 + PROTON_ELECTRON_MASS_RATIO,
        Z=1.0,
    ),
    "positronium": ComparisonSystem("positronium", "coulomb", mu=0.5, M=2.0, Z=1.0),
    "oscillator": ComparisonSystem("oscillator", "harmonic", mu=1.0, M=1.0, omega=1.0),
}

_L_LETTERS = "spdfghik"


def state_label(n: int, l: int, j: float | None) -> str:
    letter = _L_LETTERS[l] if l < len(_L_LETTERS) else f"(l={l})"
    if j is None:
        return f"{n}{letter}"
    return f"{n}{letter}{int(round(2 * j))}/2"


@dataclass(frozen=True)
class BindingRow:
    """One state of a comparison report.

    ``B_dirac`` (and its delta) is None for systems without a Coulomb
    benchmark.
    """

    state: str
    n: int
    l: Optional[int]
    j: Optional[float]
    epsilon: float
    B_nonrel: float
    B_rel: float
    B_dirac: Optional[float]
    delta_rel_vs_dirac: Optional[float]


@dataclass(frozen=True)
class BindingReport:
    system: str
    n_max: int
    mu: float
    M: float
    has_dirac: bool
    rows: tuple[BindingRow, ...]


def compare_report(
    system: str, n_max: int, units: UnitSystem | None = None
) -> BindingReport:
    """Side-by-side eigenvalue and binding columns for a named system.

    All shipped systems have exact eigenvalues, so the eigenvalue column is
    analytic and the report is fully deterministic.  The Dirac column is an
    external reference, present only for Coulomb systems and scaled by the
    reduced mass.
    """
    u = _units(units)
    if system not in COMPARISON_SYSTEMS:
        known = ", ".join(sorted(COMPARISON_SYSTEMS))
        raise ValueError(f"unknown preset {system!r}; valid presets: {known}")
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    spec = COMPARISON_SYSTEMS[system]
    rows: list[BindingRow] = []
    if spec.kind == "coulomb":
        for n in range(1, n_max + 1):
            eps = bohr_level(spec.Z, spec.mu, n)
            b_rel = binding_relativistic(eps, spec.M, u)
            for l in range(n):
                j_values = [l - 0.5, l + 0.5] if l > 0 else [0.5]
                for j in j_values:
                    # unit-mass Dirac benchmark, scaled to the reduced mass
                    _, b_unit = dirac_coulomb_level(spec.Z, n, j, u)
                    b_dirac = spec.mu * b_unit
                    rows.append(
                        BindingRow(
                            state=state_label(n, l, j),
                            n=n,
                            l=l,
                            j=j,
                            epsilon=eps,
                            B_nonrel=binding_nonrel(eps),
                            B_rel=b_rel,
                            B_dirac=b_dirac,
                            delta_rel_vs_dirac=b_rel - b_dirac,
                        )
                    )
    else:
        for idx in range(n_max):
            eps = oscillator_level(spec.omega, idx)
            rows.append(
                BindingRow(
                    state=f"n{idx}",
                    n=idx,
                    l=None,
                    j=None,
                    epsilon=eps,
                    B_nonrel=binding_nonrel(eps),
                    B_rel=binding_relativistic(eps, spec.M, u),
                    B_dirac=None,
                    delta_rel_vs_dirac=None,
                )
            )
    return BindingReport(
        system=system,
        n_max=n_max,
        mu=spec.mu,
        M=spec.M,
        has_dirac=spec.kind == "coulomb",
        rows=tuple(rows),
    )
