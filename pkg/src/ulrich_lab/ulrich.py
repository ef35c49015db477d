"""Numerical Ulrich conditions and stability criteria for polarized varieties.

An Ulrich bundle E of rank r on an n-dimensional polarized variety
(X, H) has h^0 = r * H^n, slope H^n + g - 1 where g is the sectional
genus, and vanishing cohomology after one and two hyperplane twists
down.  On a del Pezzo surface polarized by H = -K this pins down c2 in
terms of the rank and c1^2, which is what :func:`ulrich_c2` computes and
:func:`is_ulrich_candidate` verifies.

The three criteria below are purely numerical sufficient conditions:

* Butler: (3 - n) H^n > H^{n-1}.K + 2 forces slope semistability.
* Koszul: (2 - n) H^n >= H^{n-1}.K + 4 makes the section ring Koszul;
  on a del Pezzo surface this is exactly d >= 4.
* Coprime: Butler together with gcd(H^n - 1, g) = 1 upgrades
  semistability to stability.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .chern import AnyNumerics, BundleNumerics, euler_char, twist_by_h
from .errors import NotUlrichCompatible, ParityViolation
from .picard import DelPezzoSurface, intersect


@dataclass(frozen=True)
class PolarizedData:
    """Numerical data (n, H^n, H^{n-1}.K) of a polarized n-fold.

    The sectional genus formula needs (n-1)*H^n + H^{n-1}.K to be even;
    that parity is enforced at construction time.
    """

    n: int
    hn: int
    hk: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"dimension n must be an integer >= 2, got {self.n!r}")
        if not isinstance(self.hn, int) or self.hn <= 0:
            raise ValueError(f"H^n must be a positive integer, got {self.hn!r}")
        if not isinstance(self.hk, int):
            raise TypeError(f"H^(n-1).K must be an integer, got {self.hk!r}")
        if ((self.n - 1) * self.hn + self.hk) % 2:
            raise ParityViolation(
                f"(n-1)*H^n + H^(n-1).K = {(self.n - 1) * self.hn + self.hk} is odd"
            )

    def to_dict(self) -> dict:
        return {"n": self.n, "Hn": self.hn, "HK": self.hk}

    @classmethod
    def from_dict(cls, data: dict) -> PolarizedData:
        return cls(int(data["n"]), int(data["Hn"]), int(data["HK"]))


def polarized_data_for(surface: DelPezzoSurface) -> PolarizedData:
    """The (n, H^n, H.K) = (2, d, -d) data of an anticanonical surface."""
    return PolarizedData(2, surface.degree, -surface.degree)


def curve_section_genus(p: PolarizedData) -> int:
    """Sectional genus g = ((n-1) H^n + H^{n-1}.K)/2 + 1.

    A negative result is returned as computed but flagged with a
    RuntimeWarning, since it signals degenerate input data.
    """
    g = ((p.n - 1) * p.hn + p.hk) // 2 + 1
    if g < 0:
        warnings.warn(f"negative sectional genus {g}", RuntimeWarning, stacklevel=2)
    return g


def ulrich_profile(rank: int, p: PolarizedData) -> tuple[int, Fraction]:
    """(h^0, slope) = (rank * H^n, H^n + g - 1) of a rank-r Ulrich bundle."""
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank!r}")
    g = curve_section_genus(p)
    return rank * p.hn, Fraction(p.hn + g - 1)


def butler_semistability_criterion(p: PolarizedData) -> bool:
    """(3 - n) H^n > H^{n-1}.K + 2, strict."""
    return (3 - p.n) * p.hn > p.hk + 2


def koszul_criterion(p: PolarizedData) -> bool:
    """(2 - n) H^n >= H^{n-1}.K + 4."""
    return (2 - p.n) * p.hn >= p.hk + 4


def coprime_stability_criterion(p: PolarizedData) -> bool:
    """Butler's bound together with gcd(H^n - 1, g) = 1."""
    g = curve_section_genus(p)
    return butler_semistability_criterion(p) and gcd(p.hn - 1, g) == 1


def ulrich_c2(rank: int, c1_sq: int, surface: DelPezzoSurface) -> int:
    """The unique c2 an Ulrich bundle of given rank and c1^2 can have.

    Combining chi(E(-H)) = 0 with c1.H = rank*d gives
    c2 = rank + (c1^2 - rank*d)/2; the difference must be even.
    """
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank!r}")
    d = surface.degree
    if (c1_sq - rank * d) % 2:
        raise NotUlrichCompatible(
            f"c1^2 = {c1_sq} and rank*d = {rank * d} differ by an odd number"
        )
    return rank + (c1_sq - rank * d) // 2


def is_ulrich_candidate(f: AnyNumerics, surface: DelPezzoSurface) -> bool:
    """Check the numerical Ulrich conditions.

    Requires c1.H = rank*d, the c2 value of :func:`ulrich_c2`, and
    chi(E(-H)) = chi(E(-2H)) = 0.  Never raises on honest numeric input;
    it simply answers False.
    """
    if isinstance(f, BundleNumerics):
        surface.require(f.c1)
    r, d = f.rank, surface.degree
    if f.c1_dot_h != r * d:
        return False
    if (f.c1_sq - r * d) % 2:
        return False
    if f.c2 != r + (f.c1_sq - r * d) // 2:
        return False
    return all(euler_char(twist_by_h(f, -j, surface), surface) == 0 for j in (1, 2))


def prioritary_polarization_check(surface: DelPezzoSurface) -> int:
    """H.(K + F), where F is the conic-bundle fiber class.

    The caller only needs this to be negative; the exact value on the
    degree-d surface is 2 - d.
    """
    k = surface.canonical_class
    f = surface.fiber_class
    return intersect(surface.anticanonical_class, k + f, surface)
