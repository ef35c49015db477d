"""Iterated syzygy bundles of Ulrich bundles and their exact rank theory.

Starting from a globally generated bundle E with h^0 = chi(E), the
kernel M_E of the evaluation map H^0(E) (x) O -> E has numerics

    rank(M_E) = h^0(E) - rank(E),   c1(M_E) = -c1(E),
    c2(M_E) = c1(E)^2 - c2(E),

and the iterated syzygy bundles are S_k(E) = M_{S_{k-1}(E)} (x) O(H)
with S_{-1}(E) = E.  For an Ulrich seed of rank r on the degree-d
surface the ranks N_k = rank(S_k) satisfy the three-term recurrence

    N_{-1} = r,   N_0 = r(d-1),   N_k = (d-2) N_{k-1} - N_{k-2},

whose characteristic roots are alpha_{1,2} = ((d-2) +- sqrt(d(d-4)))/2.
For d = 4 the roots collide and N_k = (2k+3) r; for d >= 5

    N_k = r * (alpha_1^{k+2} + alpha_1^{k+1}
               - alpha_2^{k+2} - alpha_2^{k+1}) / sqrt(d(d-4)),

evaluated here in exact arithmetic over Q(sqrt(d(d-4))) via
:class:`QuadraticNumber`.  The irrational parts must cancel exactly;
if they do not, :class:`NonIntegerResult` is raised rather than
rounding.

The degree-3 surface supports the k = 0 step only; deeper iterations
are refused with :class:`OutOfTheoremScope` because global generation
of the syzygy bundles fails there.

:func:`closed_syzygy_chern` evaluates the closed alternating recursion for the
Chern data of the twisted bundles S_k(E)(-H) without running the
step-by-step iteration, which gives an independent route for
cross-checking.  Writing u_i = c1(S_i(E)(-H)), q_i = u_i^2,
p_i = u_i.H, the one-step relation forced by the kernel and twist
formulas is

    v_k = q_{k-1} + (N_{k-1}+1) p_{k-1} + C(N_{k-1}+1, 2) d - v_{k-1},

with v_0 = c1(E)^2 - c2(E), which unrolls to

    v_k = sum_{i<k} (-1)^{k+i+1} [q_i + (N_i+1) p_i + C(N_i+1,2) d]
          + (-1)^k v_0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from . import ulrich
from .chern import (
    AnyNumerics,
    BundleNumerics,
    NumericClassData,
    discriminant,
    euler_char,
    expected_moduli_dim,
    twist_by_h,
)
from .errors import (
    DegreeOutOfRange,
    NoKernel,
    NonIntegerResult,
    NotUlrich,
    OutOfTheoremScope,
)
from .picard import DelPezzoSurface, DivisorClass


@dataclass(frozen=True)
class QuadraticNumber:
    """Exact element a + b*sqrt(radicand) of a real quadratic field.

    Coefficients are stored as Fractions; the radicand is any positive
    integer (no square-free reduction is performed, none is needed).
    Arithmetic never leaves the field, and :meth:`as_integer` refuses to
    return anything that is not an honest rational integer.
    """

    a: Fraction
    b: Fraction
    radicand: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not isinstance(self.radicand, int) or self.radicand <= 0:
            raise ValueError(f"radicand must be a positive integer, got {self.radicand!r}")

    def _coerce(self, other) -> QuadraticNumber | None:
        if isinstance(other, QuadraticNumber):
            if other.radicand != self.radicand:
                raise ValueError("mixed radicands")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(Fraction(other), Fraction(0), self.radicand)
        return None

    def __add__(self, other) -> QuadraticNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadraticNumber(self.a + rhs.a, self.b + rhs.b, self.radicand)

    __radd__ = __add__

    def __neg__(self) -> QuadraticNumber:
        return QuadraticNumber(-self.a, -self.b, self.radicand)

    def __sub__(self, other) -> QuadraticNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> QuadraticNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other) -> QuadraticNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadraticNumber(
            self.a * rhs.a + self.b * rhs.b * self.radicand,
            self.a * rhs.b + self.b * rhs.a,
            self.radicand,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b, self.radicand)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.radicand

    def inverse(self) -> QuadraticNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("quadratic number with zero norm")
        return QuadraticNumber(self.a / n, -self.b / n, self.radicand)

    def __truediv__(self, other) -> QuadraticNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __pow__(self, exponent: int) -> QuadraticNumber:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = QuadraticNumber(Fraction(1), Fraction(0), self.radicand)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_integer(self) -> int:
        if not self.is_rational or self.a.denominator != 1:
            raise NonIntegerResult(f"{self} is not an integer")
        return int(self.a)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * self.radicand ** 0.5

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt({self.radicand})"


def alpha_pair(d: int) -> tuple[QuadraticNumber, QuadraticNumber]:
    """The characteristic roots ((d-2) +- sqrt(d(d-4)))/2, d >= 5.

    They are units: alpha_1 * alpha_2 = 1 and alpha_1 + alpha_2 = d - 2.
    """
    if not isinstance(d, int) or d < 5:
        raise DegreeOutOfRange(f"distinct characteristic roots need d >= 5, got {d!r}")
    radicand = d * (d - 4)
    half = Fraction(1, 2)
    alpha = QuadraticNumber(Fraction(d - 2, 2), half, radicand)
    return alpha, alpha.conjugate()


def rank_by_recurrence(d: int, r: int, k: int) -> int:
    """N_k via N_{-1} = r, N_0 = r(d-1), N_k = (d-2)N_{k-1} - N_{k-2}."""
    if not isinstance(d, int) or not 3 <= d <= 8:
        raise DegreeOutOfRange(f"degree must be in [3, 8], got {d!r}")
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"rank must be a positive integer, got {r!r}")
    if not isinstance(k, int) or k < -1:
        raise ValueError(f"index k must be an integer >= -1, got {k!r}")
    prev, cur = r, r * (d - 1)
    if k == -1:
        return prev
    for _ in range(k):
        prev, cur = cur, (d - 2) * cur - prev
    return cur


def rank_closed_form(d: int, r: int, k: int) -> int:
    """N_k from the characteristic roots, exact in Q(sqrt(d(d-4))).

    d = 4 has a double root at 1 and degenerates to N_k = (2k+3) r.
    """
    if not isinstance(d, int) or not 4 <= d <= 8:
        raise DegreeOutOfRange(f"closed form needs degree in [4, 8], got {d!r}")
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"rank must be a positive integer, got {r!r}")
    if not isinstance(k, int) or k < -1:
        raise ValueError(f"index k must be an integer >= -1, got {k!r}")
    if d == 4:
        return (2 * k + 3) * r
    alpha1, alpha2 = alpha_pair(d)
    numerator = alpha1 ** (k + 2) + alpha1 ** (k + 1) - alpha2 ** (k + 2) - alpha2 ** (k + 1)
    sqrt_rad = QuadraticNumber(Fraction(0), Fraction(1), d * (d - 4))
    value = numerator / sqrt_rad
    return (r * value).as_integer()


def syzygy_numerics(f: AnyNumerics, h0: int) -> AnyNumerics:
    """Numerics of the kernel of the evaluation map O^{h0} -> F.

    Requires h0 > rank(F); otherwise there is no kernel bundle.
    """
    if not isinstance(h0, int):
        raise TypeError(f"h0 must be an integer, got {h0!r}")
    if h0 <= f.rank:
        raise NoKernel(f"h^0 = {h0} does not exceed the rank {f.rank}")
    if isinstance(f, BundleNumerics):
        return BundleNumerics(h0 - f.rank, -f.c1, f.c1_sq - f.c2)
    return NumericClassData(h0 - f.rank, f.c1_sq, -f.c1_dot_h, f.c1_sq - f.c2)


@dataclass(frozen=True)
class TraceEntry:
    """One row of a syzygy trace: the numerics of S_k, k = -1 being the seed."""

    k: int
    rank: int
    c1: DivisorClass | None
    c1_sq: int
    c1_dot_h: int
    c2: int

    def as_numeric(self) -> NumericClassData:
        return NumericClassData(self.rank, self.c1_sq, self.c1_dot_h, self.c2)

    def as_bundle(self) -> BundleNumerics | None:
        if self.c1 is None:
            return None
        return BundleNumerics(self.rank, self.c1, self.c2)

    @property
    def delta(self) -> int:
        return discriminant(self.as_numeric())

    @property
    def drift(self) -> int:
        return self.delta - (self.rank * self.rank - 1)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "rank": self.rank,
            "c1_sq": self.c1_sq,
            "c1_dot_H": self.c1_dot_h,
            "c2": self.c2,
            "delta": self.delta,
            "drift": self.drift,
        }


@dataclass(frozen=True)
class SyzygyTrace:
    """The numerics of E = S_{-1}, S_0, ..., S_{k_max} on one surface."""

    surface: DelPezzoSurface
    seed: AnyNumerics
    entries: tuple[TraceEntry, ...]

    def entry(self, k: int) -> TraceEntry:
        for item in self.entries:
            if item.k == k:
                return item
        raise KeyError(f"no trace entry for k = {k}")

    def to_dict(self) -> dict:
        return {
            "d": self.surface.degree,
            "seed": self.seed.to_dict(),
            "entries": [item.to_dict() for item in self.entries],
        }


def _entry_from(k: int, f: AnyNumerics) -> TraceEntry:
    c1 = f.c1 if isinstance(f, BundleNumerics) else None
    return TraceEntry(k, f.rank, c1, f.c1_sq, f.c1_dot_h, f.c2)


def iterate_syzygy(seed: AnyNumerics, surface: DelPezzoSurface, k_max: int) -> SyzygyTrace:
    """Run the syzygy-and-twist iteration from an Ulrich candidate seed.

    The rank of every computed S_k is cross-checked against the
    three-term recurrence; a mismatch would mean the transform formulas
    and the recurrence have fallen out of sync and raises RuntimeError.
    """
    if not isinstance(k_max, int) or k_max < -1:
        raise ValueError(f"k_max must be an integer >= -1, got {k_max!r}")
    if not ulrich.is_ulrich_candidate(seed, surface):
        raise NotUlrich(f"seed {seed!r} fails the numerical Ulrich conditions")
    d = surface.degree
    if d == 3 and k_max > 0:
        raise OutOfTheoremScope(
            "degree 3 supports the first syzygy step only (k_max <= 0); "
            "deeper iterations are not globally generated"
        )
    entries = [_entry_from(-1, seed)]
    current = seed
    for k in range(k_max + 1):
        h0 = euler_char(current, surface)
        if h0 <= current.rank:
            raise NoKernel(f"chi = {h0} does not exceed rank {current.rank} at step {k}")
        current = twist_by_h(syzygy_numerics(current, h0), 1, surface)
        expected_rank = rank_by_recurrence(d, seed.rank, k)
        if current.rank != expected_rank:
            raise RuntimeError(
                f"internal inconsistency: rank {current.rank} at step {k}, "
                f"recurrence predicts {expected_rank}"
            )
        entries.append(_entry_from(k, current))
    return SyzygyTrace(surface, seed, tuple(entries))


def discriminant_drift(trace: SyzygyTrace) -> list[int]:
    """Delta(S_k) - (N_k^2 - 1) for every trace entry.

    For an Ulrich seed this list is constant, equal to the expected
    moduli dimension of the seed.
    """
    return [entry.drift for entry in trace.entries]


def _scope_check(d: int, k: int) -> None:
    if not isinstance(k, int) or k < -1:
        raise ValueError(f"index k must be an integer >= -1, got {k!r}")
    if d == 3 and k > 0:
        raise OutOfTheoremScope("degree 3 supports k <= 0 only")


def _signed_prefix_sums(d: int, r: int, k: int) -> tuple[list[int], list[int]]:
    """Ranks N_i for i < k and the coefficients m_i of H in c1(S_i(-H)).

    c1(S_i(E)(-H)) = (-1)^{i+1} c1(E) + m_i H with m_0 = 0 and
    m_{i+1} = -(m_i + N_i).
    """
    ranks = [rank_by_recurrence(d, r, i) for i in range(k)]
    m = [0]
    for n_i in ranks:
        m.append(-(m[-1] + n_i))
    return ranks, m


def _closed_c2(d: int, q_seed: int, c2_seed: int, ranks: Sequence[int],
               q: Sequence[int], p: Sequence[int], k: int) -> int:
    """The alternating closed form for c2(S_k(E)(-H)) described above."""
    v0 = q_seed - c2_seed
    if k == 0:
        return v0
    total = (-1) ** k * v0
    for i in range(k):
        term = q[i] + (ranks[i] + 1) * p[i] + comb(ranks[i] + 1, 2) * d
        total += (-1) ** (k + i + 1) * term
    return total


def closed_syzygy_chern(seed: BundleNumerics, surface: DelPezzoSurface, k: int) -> tuple[DivisorClass, int]:
    """(c1, c2) of S_k(E)(-H) straight from the closed recursions.

    Never calls the step-by-step iteration, so it serves as an
    independent oracle for it.  k = -1 returns the untwisted seed data,
    matching the base row of the rank-2 table form.
    """
    surface.require(seed.c1)
    d = surface.degree
    _scope_check(d, k)
    if k == -1:
        return seed.c1, seed.c2
    ranks, m = _signed_prefix_sums(d, seed.rank, k)
    h = surface.anticanonical_class
    classes = [((-1) ** (i + 1)) * seed.c1 + m[i] * h for i in range(k + 1)]
    q = [u.self_intersection for u in classes]
    p = [u.degree for u in classes]
    c2 = _closed_c2(d, seed.c1_sq, seed.c2, ranks, q, p, k)
    return classes[k], c2


def closed_syzygy_chern_numeric(seed: NumericClassData, surface: DelPezzoSurface, k: int) -> NumericClassData:
    """Reduced-data form of :func:`closed_syzygy_chern`, including the rank N_k."""
    d = surface.degree
    _scope_check(d, k)
    if k == -1:
        return seed
    ranks, m = _signed_prefix_sums(d, seed.rank, k)
    signs = [(-1) ** (i + 1) for i in range(k + 1)]
    q = [seed.c1_sq + 2 * signs[i] * m[i] * seed.c1_dot_h + m[i] * m[i] * d for i in range(k + 1)]
    p = [signs[i] * seed.c1_dot_h + m[i] * d for i in range(k + 1)]
    c2 = _closed_c2(d, seed.c1_sq, seed.c2, ranks, q, p, k)
    return NumericClassData(rank_by_recurrence(d, seed.rank, k), q[k], p[k], c2)


def rank_two_table_chern(d: int, c1_sq: int, c2: int, k: int) -> NumericClassData:
    """Chern data v_{d,k} of the rank-2 tables, in reduced form.

    Hardwired to rank-2 Ulrich seeds on degrees 4..7, the range the
    tables cover.  k = -1 returns the seed row.  The ranks N_{d,k} come
    from the closed form rather than the recurrence, so comparing with
    :func:`closed_syzygy_chern_numeric` cross-checks both routes.
    """
    if not isinstance(d, int) or not 4 <= d <= 7:
        raise OutOfTheoremScope(f"rank-2 tables cover degrees 4..7, got {d!r}")
    if not isinstance(k, int) or k < -1:
        raise ValueError(f"index k must be an integer >= -1, got {k!r}")
    seed = NumericClassData(2, c1_sq, 2 * d, c2)
    if k == -1:
        return seed
    ranks = [rank_closed_form(d, 2, i) for i in range(k)]
    m = [0]
    for n_i in ranks:
        m.append(-(m[-1] + n_i))
    signs = [(-1) ** (i + 1) for i in range(k + 1)]
    q = [c1_sq + 2 * signs[i] * m[i] * 2 * d + m[i] * m[i] * d for i in range(k + 1)]
    p = [signs[i] * 2 * d + m[i] * d for i in range(k + 1)]
    value_c2 = _closed_c2(d, c1_sq, c2, ranks, q, p, k)
    return NumericClassData(rank_closed_form(d, 2, k), q[k], p[k], value_c2)
