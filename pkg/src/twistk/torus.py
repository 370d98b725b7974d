"""Exact circle-group values, stored additively as exponents.

A point e^(2*pi*i*x) of the unit circle is represented by the exponent
x = rational + sum of rational multiples of formal irrational symbols,
taken mod 1.  The symbols are declared Q-linearly independent together
with 1 (declared, never verified), so equality of circle values reduces
to structural equality of canonical exponents and every cocycle formula
in this package becomes exact rational arithmetic.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

RationalLike = Union[Fraction, int, str]


class MissingHint(KeyError):
    """Numeric evaluation touched a symbol that has no float hint."""


class UnknownSymbol(ValueError):
    """A value references a symbol outside the declared basis."""


@dataclass(frozen=True)
class IrrationalBasis:
    """Ordered formal symbols, declared Q-linearly independent with 1.

    ``float_hints`` optionally maps labels to real values; it is used only
    by the numeric evaluation path and never by exact arithmetic.
    """

    labels: tuple[str, ...]
    float_hints: dict[str, float] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate basis labels: {self.labels!r}")

    def check(self, x: "RotationNumber") -> None:
        """Raise UnknownSymbol if x references a label outside this basis."""
        for label, _ in x.coeffs:
            if label not in self.labels:
                raise UnknownSymbol(f"symbol {label!r} not in basis {self.labels!r}")

    def hint(self, label: str) -> float:
        try:
            return self.float_hints[label]
        except KeyError:
            raise MissingHint(label) from None


def _canonical_coeffs(coeffs) -> tuple[tuple[str, Fraction], ...]:
    if not coeffs:
        return ()
    if isinstance(coeffs, Mapping):
        items = coeffs.items()
    else:
        items = tuple(coeffs)
    acc: dict[str, Fraction] = {}
    for label, c in items:
        acc[label] = acc.get(label, Fraction(0)) + Fraction(c)
    return tuple((label, acc[label]) for label in sorted(acc) if acc[label])


@dataclass(frozen=True, slots=True)
class RotationNumber:
    """Exponent of a circle value: rational part mod 1 plus a sparse
    rational combination of formal irrational symbols.

    Canonical form (enforced on construction): ``rat`` reduced and in
    [0, 1); ``coeffs`` sorted by label with no zero entries.  Equal values
    compare equal structurally, by declared independence.
    """

    rat: Fraction = Fraction(0)
    coeffs: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self):
        rat = self.rat if type(self.rat) is Fraction else Fraction(self.rat)
        if rat < 0 or rat >= 1:
            rat %= 1
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "coeffs", _canonical_coeffs(self.coeffs))

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "RotationNumber") -> "RotationNumber":
        if not isinstance(other, RotationNumber):
            return NotImplemented
        return RotationNumber(self.rat + other.rat, self.coeffs + other.coeffs)

    def __sub__(self, other: "RotationNumber") -> "RotationNumber":
        return self + (-other)

    def __neg__(self) -> "RotationNumber":
        return RotationNumber(-self.rat, tuple((l, -c) for l, c in self.coeffs))

    def scale(self, k: int) -> "RotationNumber":
        """Integer multiple k*x (the k-th power of the circle value)."""
        if not isinstance(k, int):
            raise TypeError(f"scale expects an integer, got {type(k).__name__}")
        return RotationNumber(self.rat * k, tuple((l, c * k) for l, c in self.coeffs))

    def conjugate(self) -> "RotationNumber":
        """Exponent of the complex conjugate value."""
        return -self

    def halve(self) -> "RotationNumber":
        """One square root: the representative in [0,1) divided by two.

        The other square root differs by 1/2; callers that need a specific
        branch (the normalization construction) rely on exactly this choice.
        """
        return RotationNumber(self.rat / 2, tuple((l, c / 2) for l, c in self.coeffs))

    # -- predicates ------------------------------------------------------

    def is_integral(self) -> bool:
        """True iff the circle value is 1."""
        return self.rat == 0 and not self.coeffs

    def __bool__(self) -> bool:
        return not self.is_integral()

    # -- numeric path ----------------------------------------------------

    def evaluate(self, basis: IrrationalBasis | None = None) -> complex:
        """e^(2*pi*i*x) as a double-precision complex number."""
        total = float(self.rat)
        for label, c in self.coeffs:
            if basis is None:
                raise MissingHint(label)
            total += float(c) * basis.hint(label)
        return cmath.exp(2j * cmath.pi * total)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rat": str(self.rat),
            "irr": {label: str(c) for label, c in self.coeffs},
        }

    @staticmethod
    def from_json(data: Mapping) -> "RotationNumber":
        irr = {label: Fraction(c) for label, c in data.get("irr", {}).items()}
        return RotationNumber(Fraction(data.get("rat", 0)), irr)

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"rot({str(self.rat)!r})"
        return f"rot({str(self.rat)!r}, {{{', '.join(f'{l!r}: {str(c)!r}' for l, c in self.coeffs)}}})"


ZERO = RotationNumber()
HALF = RotationNumber(Fraction(1, 2))


def rot(rat: RationalLike = 0, irr: Mapping[str, RationalLike] | None = None) -> RotationNumber:
    """Convenience constructor: rot("1/3"), rot(0, {"t": 1}), rot(Fraction(2, 5))."""
    return RotationNumber(Fraction(rat), {} if irr is None else {l: Fraction(c) for l, c in irr.items()})


def rot_sum(values: Iterable[RotationNumber]) -> RotationNumber:
    total = ZERO
    for v in values:
        total = total + v
    return total
