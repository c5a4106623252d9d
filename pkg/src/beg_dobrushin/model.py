"""Spin-1 model basics: parameters, neighbor configurations, pair energies and
the classification of the coupling plane into its phase regions."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations_with_replacement, product

from .errors import DegenerateGroundStateError, DomainError

SPIN_VALUES = (-1, 0, 1)

# Points closer than this to a defining hyperplane are labeled Boundary.
BOUNDARY_TOL = 1e-12

_ENERGY_TIE_TOL = 1e-12


def check_spin(value: int) -> int:
    if value not in SPIN_VALUES:
        raise DomainError(f"spin must be one of {SPIN_VALUES}, got {value!r}")
    return value


@dataclass(frozen=True)
class ModelParams:
    """Couplings (x, y), inverse temperature beta and lattice dimension d."""

    x: float
    y: float
    beta: float
    d: int

    def __post_init__(self):
        if self.beta < 0:
            raise DomainError(f"beta must be >= 0, got {self.beta}")
        if not isinstance(self.d, int) or self.d < 1:
            raise DomainError(f"d must be an integer >= 1, got {self.d!r}")


@dataclass(frozen=True)
class NeighborConfig:
    """The 2d neighbor spins of the origin; index 0 is the distinguished neighbor.

    Caches the tail statistics used throughout the bounds:
      k        -- number of nonzero spins among the non-distinguished neighbors
      n        -- sum of the non-distinguished neighbor spins
      sigma_sq -- sum of squares over all 2d spins
    """

    spins: tuple[int, ...]
    k: int = field(init=False)
    n: int = field(init=False)
    sigma_sq: int = field(init=False)

    def __post_init__(self):
        spins = tuple(self.spins)
        if len(spins) < 2 or len(spins) % 2 != 0:
            raise DomainError(
                f"need an even number (2d) of neighbor spins, got {len(spins)}"
            )
        for s in spins:
            check_spin(s)
        object.__setattr__(self, "spins", spins)
        tail = spins[1:]
        object.__setattr__(self, "k", sum(1 for s in tail if s != 0))
        object.__setattr__(self, "n", sum(tail))
        object.__setattr__(self, "sigma_sq", sum(s * s for s in spins))

    @property
    def d(self) -> int:
        return len(self.spins) // 2

    @property
    def distinguished(self) -> int:
        return self.spins[0]

    def with_distinguished(self, spin: int) -> "NeighborConfig":
        check_spin(spin)
        return NeighborConfig((spin,) + self.spins[1:])


class MajorRegion(Enum):
    FERROMAGNETIC = "Ferromagnetic"
    DISORDERED = "Disordered"
    ANTIQUADRUPOLAR = "Antiquadrupolar"
    BOUNDARY = "Boundary"


class SubRegion(Enum):
    A = "A"
    B = "B"
    C = "C"
    OUTSIDE_U = "OutsideU"


@dataclass(frozen=True)
class RegionLabel:
    major: MajorRegion
    sub: SubRegion | None = None


def pair_energy(si: int, sj: int, x: float, y: float) -> float:
    """Energy of a nearest-neighbor spin pair: -(si*sj + y*si^2*sj^2 + x*(si^2+sj^2))."""
    check_spin(si)
    check_spin(sj)
    return -(si * sj + y * si * si * sj * sj + x * (si * si + sj * sj))


def classify_region(x: float, y: float, tol: float = BOUNDARY_TOL) -> RegionLabel:
    """Classify a coupling point into ferromagnetic / disordered / antiquadrupolar.

    Points within `tol` of a defining hyperplane get the Boundary label.  Inside
    the disordered region, the sub-label picks out the y-band (A: y >= 1,
    B: |y| < 1, C: y <= -1) of the strip x + y + 1 < 0, x < 0; disordered points
    outside that strip are tagged OutsideU.
    """
    p = 1 + 2 * x + y
    q = 1 + x + y
    if p > tol and q > tol:
        return RegionLabel(MajorRegion.FERROMAGNETIC)
    if p < -tol and x < -tol:
        sub = SubRegion.OUTSIDE_U
        if q < -tol:  # x + y + 1 < 0 combined with x < 0 puts the point in A|B|C
            if y >= 1:
                sub = SubRegion.A
            elif y <= -1:
                sub = SubRegion.C
            else:
                sub = SubRegion.B
        return RegionLabel(MajorRegion.DISORDERED, sub)
    if q < -tol and x > tol:
        return RegionLabel(MajorRegion.ANTIQUADRUPOLAR, SubRegion.OUTSIDE_U)
    return RegionLabel(MajorRegion.BOUNDARY)


# Ground pair sets per major region, as unordered (si <= sj) pairs.
_GROUND_SETS = {
    frozenset({(-1, -1), (1, 1)}): MajorRegion.FERROMAGNETIC,
    frozenset({(0, 0)}): MajorRegion.DISORDERED,
    frozenset({(-1, 0), (0, 1)}): MajorRegion.ANTIQUADRUPOLAR,
}


def ground_pairs(x: float, y: float) -> frozenset[tuple[int, int]]:
    """Minimum-energy unordered spin pairs at couplings (x, y).

    Raises DegenerateGroundStateError when the minimizing set is not one of the
    three interior patterns (which happens exactly on region boundaries).
    """
    energies = {
        pair: pair_energy(pair[0], pair[1], x, y)
        for pair in combinations_with_replacement(SPIN_VALUES, 2)
    }
    emin = min(energies.values())
    ground = frozenset(p for p, e in energies.items() if e - emin <= _ENERGY_TIE_TOL)
    if ground not in _GROUND_SETS:
        raise DegenerateGroundStateError(
            f"ambiguous minimum-energy pair set {sorted(ground)} at (x={x}, y={y})"
        )
    return ground


def all_neighbor_configs(d: int):
    """Iterate every NeighborConfig for dimension d (3^(2d) of them)."""
    for spins in product(SPIN_VALUES, repeat=2 * d):
        yield NeighborConfig(spins)
