"""The twisted convolution algebra of a finite group with a multiplier.

Two evaluation paths coexist on purpose.  The exact path works with
formal Q-linear combinations of unit phases (PhaseSum) so convolution,
involution, trace and commutation identities hold with zero tolerance.
The float path realizes the regular projective representations as
complex matrices and measures the center dimension by an SVD nullspace
count; it is an oracle independent of the combinatorial machinery.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

import numpy as np

from .groups import FiniteGroup
from .multipliers import FiniteMultiplier
from .torus import ZERO, IrrationalBasis, RotationNumber


class IllConditioned(RuntimeError):
    """Singular values cluster at the tolerance; refusing to guess."""


class PhaseSum:
    """Exact scalar: a finite Q-linear combination of unit circle phases.

    Represents sum_i q_i * e^(2 pi i x_i) with rational q_i and exponents
    x_i (RotationNumber).  Sums, products and conjugates stay in this
    ring; equality is formal, which is sound (equal formal sums evaluate
    equal) and complete for every identity this package asserts, since
    those identities match term by term.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[RotationNumber, Fraction] | None = None):
        acc: dict[RotationNumber, Fraction] = {}
        if terms:
            for phase, mag in terms.items():
                mag = Fraction(mag)
                if mag:
                    acc[phase] = acc.get(phase, Fraction(0)) + mag
                    if not acc[phase]:
                        del acc[phase]
        self.terms = acc

    @staticmethod
    def zero() -> "PhaseSum":
        return PhaseSum()

    @staticmethod
    def one() -> "PhaseSum":
        return PhaseSum({ZERO: Fraction(1)})

    @staticmethod
    def phase(x: RotationNumber, mag: Fraction | int = 1) -> "PhaseSum":
        return PhaseSum({x: Fraction(mag)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "PhaseSum") -> "PhaseSum":
        acc = dict(self.terms)
        for phase, mag in other.terms.items():
            acc[phase] = acc.get(phase, Fraction(0)) + mag
            if not acc[phase]:
                del acc[phase]
        out = PhaseSum()
        out.terms = acc
        return out

    def __neg__(self) -> "PhaseSum":
        out = PhaseSum()
        out.terms = {phase: -mag for phase, mag in self.terms.items()}
        return out

    def __sub__(self, other: "PhaseSum") -> "PhaseSum":
        return self + (-other)

    def __mul__(self, other) -> "PhaseSum":
        if isinstance(other, PhaseSum):
            acc: dict[RotationNumber, Fraction] = {}
            for p1, m1 in self.terms.items():
                for p2, m2 in other.terms.items():
                    p = p1 + p2
                    acc[p] = acc.get(p, Fraction(0)) + m1 * m2
                    if not acc[p]:
                        del acc[p]
            out = PhaseSum()
            out.terms = acc
            return out
        if isinstance(other, (int, Fraction)):
            out = PhaseSum()
            out.terms = {p: m * other for p, m in self.terms.items()} if other else {}
            return out
        return NotImplemented

    __rmul__ = __mul__

    def rotated(self, x: RotationNumber) -> "PhaseSum":
        """Multiplication by the unit phase e^(2 pi i x)."""
        out = PhaseSum()
        out.terms = {p + x: m for p, m in self.terms.items()}
        return out

    def conjugate(self) -> "PhaseSum":
        out = PhaseSum()
        out.terms = {-p: m for p, m in self.terms.items()}
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhaseSum):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, basis: IrrationalBasis | None = None) -> complex:
        return sum((float(m) * p.evaluate(basis) for p, m in self.terms.items()), 0j)

    def __repr__(self) -> str:
        if not self.terms:
            return "PhaseSum(0)"
        bits = " + ".join(f"{m}*e({p!r})" for p, m in sorted(self.terms.items(), key=str))
        return f"PhaseSum({bits})"


def _as_phasesum(value) -> PhaseSum:
    if isinstance(value, PhaseSum):
        return value
    if isinstance(value, RotationNumber):
        return PhaseSum.phase(value)
    if isinstance(value, (int, Fraction)):
        return PhaseSum({ZERO: Fraction(value)})
    raise TypeError(f"cannot coerce {type(value).__name__} to PhaseSum")


class AlgebraElement:
    """Finitely supported function G -> exact scalars (an l^1(G, sigma) element)."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteGroup, coeffs: Mapping[int, object] | None = None):
        self.group = group
        self.coeffs: dict[int, PhaseSum] = {}
        if coeffs:
            for a, v in coeffs.items():
                ps = _as_phasesum(v)
                if ps:
                    self.coeffs[int(a)] = ps

    @staticmethod
    def delta(group: FiniteGroup, a: int, phase: RotationNumber = ZERO, mag: Fraction | int = 1) -> "AlgebraElement":
        return AlgebraElement(group, {a: PhaseSum.phase(phase, mag)})

    def coeff(self, a: int) -> PhaseSum:
        return self.coeffs.get(a, PhaseSum.zero())

    def support(self):
        return self.coeffs.keys()

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.group is not other.group and self.group.table != other.group.table:
            raise ValueError("elements live on different groups")
        out = AlgebraElement(self.group)
        acc = dict(self.coeffs)
        for a, v in other.coeffs.items():
            s = acc.get(a, PhaseSum.zero()) + v
            if s:
                acc[a] = s
            else:
                acc.pop(a, None)
        out.coeffs = acc
        return out

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        neg = AlgebraElement(other.group)
        neg.coeffs = {a: -v for a, v in other.coeffs.items()}
        return self + neg

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.group.table == other.group.table and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_vector(self, basis: IrrationalBasis | None = None) -> np.ndarray:
        vec = np.zeros(self.group.order, dtype=complex)
        for a, v in self.coeffs.items():
            vec[a] = v.evaluate(basis)
        return vec

    def __repr__(self) -> str:
        return f"AlgebraElement({self.coeffs!r})"


# -- exact operations ---------------------------------------------------------


def convolve(sigma: FiniteMultiplier, f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    """Twisted convolution: (f * g)(a) = sum_b f(b) sigma(b, b^-1 a) g(b^-1 a)."""
    grp = sigma.group
    acc: dict[int, PhaseSum] = {}
    for b, fb in f.coeffs.items():
        for d, gd in g.coeffs.items():
            a = grp.mul(b, d)
            term = (fb * gd).rotated(sigma.value(b, d))
            s = acc.get(a, PhaseSum.zero()) + term
            if s:
                acc[a] = s
            else:
                acc.pop(a, None)
    out = AlgebraElement(grp)
    out.coeffs = acc
    return out


def involution(sigma: FiniteMultiplier, f: AlgebraElement) -> AlgebraElement:
    """f^*(a) = conj(sigma(a, a^-1)) conj(f(a^-1))."""
    grp = sigma.group
    acc: dict[int, PhaseSum] = {}
    for b, fb in f.coeffs.items():
        a = grp.inv(b)
        acc[a] = fb.conjugate().rotated(-sigma.value(a, b))
    out = AlgebraElement(grp)
    out.coeffs = {a: v for a, v in acc.items() if v}
    return out


def trace(f: AlgebraElement) -> PhaseSum:
    """The canonical faithful trace: the coefficient at the identity."""
    return f.coeff(f.group.identity)


# -- representations, float path ----------------------------------------------


def _phase_to_complex(x: RotationNumber) -> complex:
    return complex(np.exp(2j * np.pi * float(x.rat))) if not x.coeffs else x.evaluate()


def lambda_matrix(sigma: FiniteMultiplier, a: int) -> np.ndarray:
    """Left regular projective representation: lambda(a) delta_b = sigma(a,b) delta_ab."""
    g = sigma.group
    n = g.order
    mat = np.zeros((n, n), dtype=complex)
    for b in range(n):
        mat[g.mul(a, b), b] = _phase_to_complex(sigma.value(a, b))
    return mat


def rho_bar_matrix(sigma: FiniteMultiplier, a: int) -> np.ndarray:
    """Right regular conjugate representation: (rho_bar(a) xi)(c) = conj(sigma(c,a)) xi(ca)."""
    g = sigma.group
    n = g.order
    mat = np.zeros((n, n), dtype=complex)
    for c in range(n):
        mat[c, g.mul(c, a)] = _phase_to_complex(-sigma.value(c, a))
    return mat


class GenPermMatrix:
    """Exact generalized permutation matrix: one unit-phase entry per column.

    Column b holds its row index and the phase exponent of the entry.
    Products and equality are exact; this is the zero-tolerance path for
    the commutation identities of the regular representations.
    """

    __slots__ = ("cols",)

    def __init__(self, cols):
        self.cols: tuple[tuple[int, RotationNumber], ...] = tuple(cols)

    @staticmethod
    def identity(n: int) -> "GenPermMatrix":
        return GenPermMatrix((b, ZERO) for b in range(n))

    def __matmul__(self, other: "GenPermMatrix") -> "GenPermMatrix":
        return GenPermMatrix(
            (self.cols[row][0], self.cols[row][1] + phase) for row, phase in other.cols
        )

    def scaled(self, phase: RotationNumber) -> "GenPermMatrix":
        return GenPermMatrix((row, p + phase) for row, p in self.cols)

    def apply_delta(self, b: int) -> tuple[int, RotationNumber]:
        """Image of the basis vector delta_b: (row, phase)."""
        return self.cols[b]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenPermMatrix):
            return NotImplemented
        return self.cols == other.cols

    def __hash__(self):
        return hash(self.cols)

    def to_array(self) -> np.ndarray:
        n = len(self.cols)
        mat = np.zeros((n, n), dtype=complex)
        for b, (row, phase) in enumerate(self.cols):
            mat[row, b] = _phase_to_complex(phase)
        return mat


def lambda_exact(sigma: FiniteMultiplier, a: int) -> GenPermMatrix:
    g = sigma.group
    return GenPermMatrix((g.mul(a, b), sigma.value(a, b)) for b in g.elements())


def rho_bar_exact(sigma: FiniteMultiplier, a: int) -> GenPermMatrix:
    g = sigma.group
    ainv = g.inv(a)
    return GenPermMatrix((g.mul(b, ainv), -sigma.value(g.mul(b, ainv), a)) for b in g.elements())


# -- numeric center oracle ------------------------------------------------------


def center_dimension_numeric(sigma: FiniteMultiplier, tol: float = 1e-8, gap: float = 10.0) -> int:
    """dim { x in span(lambda(G)) : lambda(a) x = x lambda(a) for all a }.

    Stacks the commutator operators c -> [lambda(a), sum_g c_g lambda(g)]
    over all a and counts singular values below tol.  Refuses (raises
    IllConditioned) when the spectrum shows no clean gap of ratio >= gap
    between the "zero" and "nonzero" groups.
    """
    n = sigma.group.order
    lam = np.stack([lambda_matrix(sigma, a) for a in range(n)])  # (n, n, n)
    prod = np.einsum("aij,gjk->agik", lam, lam)
    comm = prod - prod.transpose(1, 0, 2, 3)  # [lambda(a), lambda(g)] at (a, g)
    mat = comm.transpose(0, 2, 3, 1).reshape(n * n * n, n)
    svals = np.linalg.svd(mat, compute_uv=False)
    zeros = svals[svals < tol]
    nonzeros = svals[svals >= tol]
    if zeros.size == 0:
        raise IllConditioned("no singular value below tol; the center contains the identity")
    if zeros.max() * gap > tol:
        raise IllConditioned(
            f"a 'zero' singular value {zeros.max():.3e} sits within {gap}x of tol {tol:.3e}"
        )
    if nonzeros.size and nonzeros.min() < gap * zeros.max():
        raise IllConditioned(
            f"singular values cluster at tol: {nonzeros.min():.3e} vs {zeros.max():.3e}"
        )
    return int(zeros.size)


def identify_matrix_algebra(sigma: FiniteMultiplier, tol: float = 1e-8) -> int | None:
    """n when the twisted algebra is the full n x n matrix algebra, else None.

    Requires |G| = n^2 and a trivial center by both the combinatorial and
    the numeric route; semisimplicity is automatic for a finite
    dimensional algebra closed under the involution.
    """
    from .regularity import regular_classes

    order = sigma.group.order
    n = int(round(order**0.5))
    if n * n != order:
        return None
    combinatorial = sum(1 for _, flag in regular_classes(sigma).classes if flag)
    if combinatorial != 1:
        return None
    if center_dimension_numeric(sigma, tol=tol) != 1:
        return None
    return n
