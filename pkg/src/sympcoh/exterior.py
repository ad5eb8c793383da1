"""Graded exterior algebra over the dual of an m-dimensional space.

Sparse multivectors with exact rational coefficients in the lexicographic
monomial basis, wedge products, contraction with a bivector, and
materialization of graded linear operators as exact matrices.

Conventions (normative for the whole package):

* the basis of the degree-k component is the list of strictly increasing
  k-tuples of indices 1..dim in lexicographic order; every matrix in
  every module uses this ordering;
* wedge of monomials carries the parity sign of the merge permutation;
* contraction with a decomposable bivector x ^ y is iota_x o iota_y,
  where iota_x is the standard degree-(-1) interior product.  The sign
  of this convention is pinned operationally by the symplectic module,
  which checks Lambda(omega) = n at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DimMismatch, MixedDegree
from .linalg import QMatrix, Vector

__all__ = [
    "MultiIndex",
    "monomial_basis",
    "basis_position",
    "sort_with_sign",
    "merge_with_sign",
    "Form",
    "wedge",
    "interior",
    "contract",
    "top_coefficient",
    "Bivector",
    "GradedOperator",
    "operator_matrix",
    "render_form",
]

MultiIndex = tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def monomial_basis(dim: int, k: int) -> tuple[MultiIndex, ...]:
    """All strictly increasing k-tuples in 1..dim, lexicographically ordered."""
    if k < 0 or k > dim:
        return ()
    return tuple(combinations(range(1, dim + 1), k))


@lru_cache(maxsize=None)
def _positions(dim: int, k: int) -> dict[MultiIndex, int]:
    return {key: i for i, key in enumerate(monomial_basis(dim, k))}


def basis_position(dim: int, key: MultiIndex) -> int:
    return _positions(dim, len(key))[key]


def sort_with_sign(indices: Sequence[int]) -> tuple[int, MultiIndex | None]:
    """Sort an index tuple, returning (parity sign, sorted tuple).

    Returns (0, None) when an index repeats (the monomial vanishes).
    """
    items = list(indices)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and items[j - 1] == items[j]:
            return 0, None
    return sign, tuple(items)


def merge_with_sign(a: MultiIndex, b: MultiIndex) -> tuple[int, MultiIndex | None]:
    """Merge two strictly increasing tuples with the permutation parity.

    Returns (0, None) when the tuples overlap.
    """
    i = j = 0
    sign = 1
    out: list[int] = []
    la, lb = len(a), len(b)
    while i < la and j < lb:
        if a[i] == b[j]:
            return 0, None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            if (la - i) % 2:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


class Form:
    """Sparse degree-k element of the exterior algebra over Q."""

    __slots__ = ("dim", "degree", "coeffs")

    def __init__(self, dim: int, degree: int, coeffs: Mapping[MultiIndex, object] | None = None):
        if degree < 0 or degree > dim:
            raise ValueError(f"degree {degree} outside 0..{dim}")
        clean: dict[MultiIndex, Fraction] = {}
        if coeffs:
            for key, value in coeffs.items():
                c = Fraction(value)
                if not c:
                    continue
                if len(key) != degree:
                    raise ValueError(f"monomial {key} has wrong degree (expected {degree})")
                if any(not 1 <= i <= dim for i in key) or any(
                    key[i] >= key[i + 1] for i in range(len(key) - 1)
                ):
                    raise ValueError(f"bad monomial {key} for dim {dim}")
                clean[key] = c
        self.dim = dim
        self.degree = degree
        self.coeffs = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, dim: int, degree: int = 0) -> Form:
        return cls(dim, degree, None)

    @classmethod
    def monomial(cls, dim: int, indices: Sequence[int], coeff=1) -> Form:
        """c * e^{indices}; indices may come unsorted and pick up the sign."""
        sign, key = sort_with_sign(tuple(indices))
        if sign == 0:
            return cls.zero(dim, 0)
        return cls(dim, len(key), {key: Fraction(coeff) * sign})

    @classmethod
    def unit(cls, dim: int) -> Form:
        return cls(dim, 0, {(): _ONE})

    @classmethod
    def from_vector(cls, dim: int, degree: int, vec: Sequence) -> Form:
        basis = monomial_basis(dim, degree)
        if len(vec) != len(basis):
            raise ValueError(f"vector length {len(vec)} != {len(basis)}")
        return cls(dim, degree, dict(zip(basis, vec)))

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- linear structure -------------------------------------------------

    def _check_compatible(self, other: Form) -> int:
        if self.dim != other.dim:
            raise DimMismatch(f"forms over dims {self.dim} and {other.dim}")
        if self.is_zero():
            return other.degree
        if other.is_zero():
            return self.degree
        if self.degree != other.degree:
            raise MixedDegree(
                f"cannot mix degrees {self.degree} and {other.degree}"
            )
        return self.degree

    def __add__(self, other: Form) -> Form:
        if not isinstance(other, Form):
            return NotImplemented
        degree = self._check_compatible(other)
        acc = dict(self.coeffs)
        for key, c in other.coeffs.items():
            acc[key] = acc.get(key, _ZERO) + c
        return Form(self.dim, degree, acc)

    def __sub__(self, other: Form) -> Form:
        return self + (-other)

    def __neg__(self) -> Form:
        return Form(self.dim, self.degree, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, scalar) -> Form:
        f = Fraction(scalar)
        return Form(self.dim, self.degree, {k: f * c for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        if self.dim != other.dim:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.dim, self.degree, frozenset(self.coeffs.items())))

    # -- multiplicative structure ----------------------------------------

    def wedge(self, other: Form) -> Form:
        if self.dim != other.dim:
            raise DimMismatch(f"forms over dims {self.dim} and {other.dim}")
        target = self.degree + other.degree
        if target > self.dim:
            return Form.zero(self.dim, 0)
        acc: dict[MultiIndex, Fraction] = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                sign, merged = merge_with_sign(ka, kb)
                if sign:
                    acc[merged] = acc.get(merged, _ZERO) + sign * ca * cb
        return Form(self.dim, target, acc)

    def coefficient(self, indices: Sequence[int]) -> Fraction:
        """Coefficient of e^{indices} (indices may come unsorted)."""
        sign, key = sort_with_sign(tuple(indices))
        if sign == 0:
            return _ZERO
        return sign * self.coeffs.get(key, _ZERO)

    def coeff_vector(self) -> Vector:
        return tuple(
            self.coeffs.get(key, _ZERO) for key in monomial_basis(self.dim, self.degree)
        )

    def terms(self) -> list[tuple[MultiIndex, Fraction]]:
        return sorted(self.coeffs.items())

    def render(self, prefix: str = "e") -> str:
        return render_form(self, prefix)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Form({self.dim}, {self.degree}, {self.render()!r})"


def wedge(a: Form, b: Form) -> Form:
    return a.wedge(b)


def interior(index: int, form: Form) -> Form:
    """Interior product iota with the basis vector numbered *index*."""
    if form.degree == 0:
        return Form.zero(form.dim, 0)
    acc: dict[MultiIndex, Fraction] = {}
    for key, c in form.coeffs.items():
        for p, idx in enumerate(key):
            if idx == index:
                reduced = key[:p] + key[p + 1 :]
                value = -c if p % 2 else c
                acc[reduced] = acc.get(reduced, _ZERO) + value
                break
            if idx > index:
                break
    return Form(form.dim, form.degree - 1, acc)


def top_coefficient(a: Form) -> Fraction:
    """Coefficient of the top monomial e^{1..dim}; requires degree = dim."""
    if a.degree != a.dim and not a.is_zero():
        raise ValueError(f"top_coefficient needs degree {a.dim}, got {a.degree}")
    return a.coeffs.get(tuple(range(1, a.dim + 1)), _ZERO)


@dataclass(frozen=True)
class Bivector:
    """Element of the second exterior power of the primal space."""

    dim: int
    coeffs: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), value in self.coeffs.items():
            c = Fraction(value)
            if not c:
                continue
            if not (1 <= i < j <= self.dim):
                raise ValueError(f"bad bivector key ({i}, {j}) for dim {self.dim}")
            clean[(i, j)] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def from_matrix(cls, m: QMatrix) -> Bivector:
        """Bivector with coefficient m[i][j] on e_i ^ e_j (i < j, 1-based)."""
        coeffs = {
            (i + 1, j + 1): m.rows[i][j]
            for i in range(m.nrows)
            for j in range(i + 1, m.ncols)
        }
        return cls(m.nrows, coeffs)


def contract(xi: Bivector, a: Form) -> Form:
    """iota_xi a, extending iota_{x^y} = iota_x o iota_y bilinearly."""
    if xi.dim != a.dim:
        raise DimMismatch(f"bivector dim {xi.dim} vs form dim {a.dim}")
    if a.degree < 2:
        return Form.zero(a.dim, 0)
    total = Form.zero(a.dim, a.degree - 2)
    for (i, j), c in xi.coeffs.items():
        inner = interior(i, interior(j, a))
        if not inner.is_zero():
            total = total + c * inner
    return total


def operator_matrix(
    action: Callable[[Form], Form], dim: int, k: int, target_degree: int
) -> QMatrix:
    """Matrix of a linear map on degree-k forms in lexicographic bases.

    The map is given by its action on basis monomials; the resulting
    matrix satisfies  matrix @ coeff_vector(v) = coeff_vector(action(v))
    for every degree-k form v.
    """
    source = monomial_basis(dim, k)
    target_len = comb(dim, target_degree) if 0 <= target_degree <= dim else 0
    columns = []
    for key in source:
        img = action(Form.monomial(dim, key))
        if img.is_zero():
            columns.append((_ZERO,) * target_len)
        else:
            if img.degree != target_degree:
                raise ValueError(
                    f"action returned degree {img.degree}, expected {target_degree}"
                )
            columns.append(img.coeff_vector())
    return QMatrix.from_columns(columns, nrows=target_len)


@dataclass(frozen=True)
class GradedOperator:
    """Graded linear operator stored as one exact matrix per source degree.

    `shift` is the degree shift; `shift=None` marks a degree-reversing
    operator (k -> dim - k), which is what the symplectic star needs.
    Absent blocks act as zero; blocks whose source or target degree
    falls outside 0..dim are zero-shaped so kernels and images of edge
    blocks come out right without special cases.
    """

    dim: int
    shift: int | None
    blocks: Mapping[int, QMatrix]

    def target_degree(self, k: int) -> int:
        return self.dim - k if self.shift is None else k + self.shift

    def block(self, k: int) -> QMatrix:
        stored = self.blocks.get(k)
        if stored is not None:
            return stored
        cols = comb(self.dim, k) if 0 <= k <= self.dim else 0
        t = self.target_degree(k)
        rows = comb(self.dim, t) if 0 <= t <= self.dim else 0
        return QMatrix.zeros(rows, cols)

    def apply(self, form: Form) -> Form:
        k = form.degree
        t = self.target_degree(k)
        if form.is_zero() or not 0 <= t <= self.dim:
            return Form.zero(self.dim, 0)
        vec = self.block(k).apply(form.coeff_vector())
        return Form.from_vector(self.dim, t, vec)

    @classmethod
    def materialize(
        cls,
        dim: int,
        shift: int | None,
        action: Callable[[Form], Form],
        degrees: Iterable[int] | None = None,
    ) -> GradedOperator:
        if degrees is None:
            degrees = range(dim + 1)
        blocks = {}
        for k in degrees:
            t = dim - k if shift is None else k + shift
            if 0 <= t <= dim:
                blocks[k] = operator_matrix(action, dim, k, t)
        return cls(dim, shift, blocks)


def _render_monomial(key: MultiIndex, dim: int, prefix: str) -> str:
    if dim <= 9:
        return prefix + "".join(str(i) for i in key)
    return prefix + "[" + ",".join(str(i) for i in key) + "]"


def render_form(a: Form, prefix: str = "e") -> str:
    """Canonical text: signed sum of c*e{indices} terms in lex order."""
    if a.is_zero():
        return "0"
    if a.degree == 0:
        return str(a.coeffs[()])
    parts: list[str] = []
    for key, c in a.terms():
        mono = _render_monomial(key, a.dim, prefix)
        magnitude = abs(c)
        body = mono if magnitude == 1 else f"{magnitude}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts)
