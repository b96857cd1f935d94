"""Closed-form span-10 labelings of ``C_m ⊠^σℓ C_n`` for qualifying shifts.

With ``n`` a multiple of 11 there are four labelings, each a linear form mod 11:

    F, a:  f(i, j) = (2i + (4+a)j) mod 11,   for ℓ ≡ (-1)^a · 4m  (mod 11)
    G, a:  g(i, j) = ((4+a)i + 2j) mod 11,   for ℓ ≡ (-1)^a · 3m  (mod 11)

where ``a`` is 1 or 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from lambda_bundle.labeling import Labeling

MODULUS = 11


class Family(str, Enum):
    F = "F"
    G = "G"
    UNQUALIFIED = "Unqualified"


class UnqualifiedShiftError(ValueError):
    pass


# Tie-break order when one shift satisfies several congruences.
FORMULA_ORDER: tuple[tuple[Family, int], ...] = (
    (Family.F, 1),
    (Family.F, 2),
    (Family.G, 1),
    (Family.G, 2),
)

FORMULA_NAMES = {"f1": (Family.F, 1), "f2": (Family.F, 2), "g1": (Family.G, 1), "g2": (Family.G, 2)}


def formula_name(family: Family, a: int) -> str:
    return f"{family.value.lower()}{a}"


def required_residue(family: Family, a: int, m: int) -> int:
    """Residue of ℓ mod 11 that makes formula ``(family, a)`` valid for base length m."""
    coeff = 4 if family is Family.F else 3
    return ((-1) ** a * coeff * m) % MODULUS


@dataclass(frozen=True)
class ShiftClass:
    family: Family
    a: int | None
    residue_checked: int

    @property
    def qualified(self) -> bool:
        return self.family is not Family.UNQUALIFIED


def classify_shift(
    m: int, n: int, shift: int, force: tuple[Family, int] | None = None
) -> ShiftClass:
    """Pick the formula for ``(m, n, ℓ)``.

    Since 11 divides n, ``{(11k + c) mod n}`` is exactly the set of values in
    ``[0, n)`` congruent to c mod 11, so only ``ℓ mod 11`` matters.  ``force``
    bypasses the congruence test entirely.
    """
    if m < 3 or n < 3:
        raise ValueError("cycle lengths must be >= 3")
    if not 0 <= shift < n:
        raise ValueError(f"shift must lie in [0, {n})")
    residue = shift % MODULUS
    if force is not None:
        family, a = force
        if family is Family.UNQUALIFIED or a not in (1, 2):
            raise ValueError(f"cannot force formula {force!r}")
        return ShiftClass(family, a, residue)
    if n % MODULUS == 0:
        for family, a in FORMULA_ORDER:
            if residue == required_residue(family, a, m):
                return ShiftClass(family, a, residue)
    return ShiftClass(Family.UNQUALIFIED, None, residue)


@dataclass(frozen=True)
class FormulaParams:
    m: int
    n: int
    shift: int
    family: Family
    a: int
    forced: bool = False

    def __post_init__(self) -> None:
        if self.family is Family.UNQUALIFIED or self.a not in (1, 2):
            raise ValueError("family must be F or G with a in {1, 2}")
        if self.forced:
            return
        if self.n % MODULUS:
            raise UnqualifiedShiftError(f"n={self.n} is not a multiple of 11")
        if self.shift % MODULUS != required_residue(self.family, self.a, self.m):
            raise UnqualifiedShiftError(
                f"shift {self.shift} does not fit formula {formula_name(self.family, self.a)} for m={self.m}"
            )

    @classmethod
    def for_instance(
        cls, m: int, n: int, shift: int, force: tuple[Family, int] | None = None
    ) -> "FormulaParams":
        sc = classify_shift(m, n, shift, force)
        if not sc.qualified:
            raise UnqualifiedShiftError(f"unqualified shift: m={m}, n={n}, shift={shift}")
        assert sc.a is not None
        return cls(m, n, shift, sc.family, sc.a, forced=force is not None)

    @property
    def name(self) -> str:
        return formula_name(self.family, self.a)


def _coefficients(family: Family, a: int) -> tuple[int, int]:
    return (2, 4 + a) if family is Family.F else (4 + a, 2)


def closed_form_label(params: FormulaParams, i: int, j: int) -> int:
    if not (0 <= i < params.m and 0 <= j < params.n):
        raise ValueError(f"coordinate ({i}, {j}) outside {params.m}x{params.n}")
    ci, cj = _coefficients(params.family, params.a)
    return (ci * i + cj * j) % MODULUS


def generate_labeling(params: FormulaParams) -> Labeling:
    return Labeling(
        [closed_form_label(params, i, j) for i in range(params.m) for j in range(params.n)]
    )


def offset_residues(family: Family, a: int, offsets) -> set[int]:
    """``{|ci·di + cj·dj| mod 11}`` over the given coordinate offsets."""
    ci, cj = _coefficients(family, a)
    return {abs(ci * di + cj * dj) % MODULUS for di, dj in offsets}


def adjacent_offsets() -> list[tuple[int, int]]:
    return [d for d in itertools.product((-1, 0, 1), repeat=2) if d != (0, 0)]


def distance2_offsets() -> list[tuple[int, int]]:
    """Offsets with at least one coordinate equal to ±2 (strong-product distance 2)."""
    return [d for d in itertools.product(range(-2, 3), repeat=2) if max(map(abs, d)) == 2]


# -- modular-arithmetic facts used by the correctness argument ----------
#
# These accept Python ints or broadcastable numpy integer arrays, so the same
# predicate serves scalar property tests and exhaustive grid checks.


def _require_positive(*values) -> None:
    for x in values:
        if np.any(np.asarray(x) < 1):
            raise ValueError("modulus and threshold must be >= 1")


def mod_abs_diff_fact(a, b, n):
    """``|(a mod n) - (b mod n)|`` equals ``|a-b| mod n`` or ``n - (|a-b| mod n)``."""
    _require_positive(n)
    lhs = abs(a % n - b % n)
    d = abs(a - b) % n
    return (lhs == d) | (lhs == n - d)


def corollary1_equiv(a, b, n, p):
    """Whether ``|(a mod n) - (b mod n)| >= p`` agrees with ``p <= |a-b| mod n <= n-p``."""
    _require_positive(n, p)
    d = abs(a - b) % n
    lhs = abs(a % n - b % n) >= p
    rhs = (p <= d) & (d <= n - p)
    return lhs == rhs


def corollary1_sufficient(a, b, n, p):
    """One-way form: ``p <= |a-b| mod n <= n-p`` implies ``|(a mod n)-(b mod n)| >= p``."""
    _require_positive(n, p)
    d = abs(a - b) % n
    return (d < p) | (d > n - p) | (abs(a % n - b % n) >= p)


def corollary2_fact(a, b, n):
    """``|a·n - b| mod n`` equals ``b mod n`` or ``n - (b mod n)``."""
    _require_positive(n)
    lhs = abs(a * n - b) % n
    return (lhs == b % n) | (lhs == n - b % n)
