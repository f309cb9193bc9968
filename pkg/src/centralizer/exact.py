"""Exact rational linear algebra.

Matrices store integer numerators over one shared positive denominator, so
products and eliminations run on Python integers. Rationals only show up at
the boundary: entry access, scalars and solved coordinates.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import SpectrumError
from .logger import get_logger

logger = get_logger("centralizer.exact")

Rational = Fraction
Scalar = Union[int, Fraction]
SparseVector = Dict[int, int]


def _content(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            break
    return g


def integral(vector: Mapping[int, Scalar]) -> Tuple[SparseVector, int]:
    """Clear denominators of a sparse rational vector.

    Returns:
        ``(ints, den)`` with ``ints == den * vector`` and zeros dropped.
    """
    den = 1
    for value in vector.values():
        if isinstance(value, Fraction):
            den = lcm(den, value.denominator)
    ints: SparseVector = {}
    for key, value in vector.items():
        if value:
            ints[key] = int(value * den)
    return ints, den


@dataclass(frozen=True)
class Matrix:
    """Dense exact matrix: ``numerators / denominator``, kept in lowest terms."""

    rows: int
    cols: int
    numerators: Tuple[Tuple[int, ...], ...]
    denominator: int = 1

    def __post_init__(self) -> None:
        if len(self.numerators) != self.rows or any(
            len(row) != self.cols for row in self.numerators
        ):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        g = self.denominator
        for row in self.numerators:
            g = gcd(g, _content(row))
            if g == 1:
                break
        if g != 1:
            object.__setattr__(
                self,
                "numerators",
                tuple(tuple(v // g for v in row) for row in self.numerators),
            )
            object.__setattr__(self, "denominator", self.denominator // g)

    # -- construction -------------------------------------------------------

    @classmethod
    def _build(cls, rows: int, cols: int, nums: Sequence[Sequence[int]], den: int) -> Matrix:
        return cls(rows, cols, tuple(tuple(r) for r in nums), den)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> Matrix:
        """Build a matrix from nested sequences of ints or Fractions."""
        entries = [[Fraction(v) for v in row] for row in rows]
        n_rows = len(entries)
        n_cols = len(entries[0]) if entries else 0
        den = 1
        for row in entries:
            for v in row:
                den = lcm(den, v.denominator)
        nums = [[v.numerator * (den // v.denominator) for v in row] for row in entries]
        return cls._build(n_rows, n_cols, nums, den)

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> Matrix:
        cols = rows if cols is None else cols
        return cls._build(rows, cols, [[0] * cols for _ in range(rows)], 1)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls.scalar(n, 1)

    @classmethod
    def scalar(cls, n: int, value: Scalar) -> Matrix:
        return cls.diagonal([value] * n)

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> Matrix:
        n = len(values)
        rows = [[0] * n for _ in range(n)]
        for i, v in enumerate(values):
            rows[i][i] = v
        return cls.from_rows(rows)

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return Fraction(self.numerators[i][j], self.denominator)

    def to_rows(self) -> List[List[Fraction]]:
        return [[Fraction(v, self.denominator) for v in row] for row in self.numerators]

    @cached_property
    def _sparse_rows(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        return tuple(
            tuple((j, v) for j, v in enumerate(row) if v) for row in self.numerators
        )

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._sparse_rows)

    def numerator_vector(self) -> SparseVector:
        """Row-major sparse vectorization of the numerators."""
        out: SparseVector = {}
        for i, row in enumerate(self._sparse_rows):
            base = i * self.cols
            for j, v in row:
                out[base + j] = v
        return out

    def vector(self) -> Dict[int, Fraction]:
        """Row-major sparse vectorization of the entries."""
        return {k: Fraction(v, self.denominator) for k, v in self.numerator_vector().items()}

    def is_zero(self) -> bool:
        return not any(self._sparse_rows)

    @property
    def T(self) -> Matrix:
        return self._build(
            self.cols,
            self.rows,
            [list(col) for col in zip(*self.numerators)] if self.rows else [],
            self.denominator,
        )

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other: Union[Matrix, Scalar]) -> Matrix:
        if isinstance(other, Matrix):
            if other.shape != self.shape:
                raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
            return other
        if not self.is_square:
            raise ValueError("scalars only combine with square matrices")
        return Matrix.scalar(self.rows, other)

    def __add__(self, other: Union[Matrix, Scalar]) -> Matrix:
        other = self._coerce(other)
        den = lcm(self.denominator, other.denominator)
        a = den // self.denominator
        b = den // other.denominator
        nums = [
            [a * x + b * y for x, y in zip(r1, r2)]
            for r1, r2 in zip(self.numerators, other.numerators)
        ]
        return self._build(self.rows, self.cols, nums, den)

    __radd__ = __add__

    def __neg__(self) -> Matrix:
        return self._build(
            self.rows, self.cols, [[-v for v in row] for row in self.numerators], self.denominator
        )

    def __sub__(self, other: Union[Matrix, Scalar]) -> Matrix:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> Matrix:
        return (-self) + other

    def scale(self, value: Scalar) -> Matrix:
        value = Fraction(value)
        return self._build(
            self.rows,
            self.cols,
            [[v * value.numerator for v in row] for row in self.numerators],
            self.denominator * value.denominator,
        )

    def matmul(self, other: Matrix) -> Matrix:
        """Matrix product, skipping zero entries of both factors."""
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        right = other._sparse_rows
        width = other.cols
        out = []
        for row in self._sparse_rows:
            acc = [0] * width
            for k, a in row:
                for j, b in right[k]:
                    acc[j] += a * b
            out.append(acc)
        return self._build(self.rows, width, out, self.denominator * other.denominator)

    def __mul__(self, other: Union[Matrix, Scalar]) -> Matrix:
        if isinstance(other, Matrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other: Scalar) -> Matrix:
        return self.scale(other)

    def __matmul__(self, other: Matrix) -> Matrix:
        return self.matmul(other)

    def __pow__(self, exponent: int) -> Matrix:
        if exponent < 0 or not self.is_square:
            raise ValueError("only nonnegative powers of square matrices")
        result = Matrix.identity(self.rows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def commutator(self, other: Matrix) -> Matrix:
        return self @ other - other @ self

    def commutes_with(self, other: Matrix) -> bool:
        return self.commutator(other).is_zero()

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz}, den={self.denominator})"


def _bareiss_rank(rows: List[List[int]]) -> int:
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if a else 0
    rank = 0
    prev = 1
    for col in range(n):
        pivot = next((r for r in range(rank, m) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        top = a[rank]
        for r in range(rank + 1, m):
            row = a[r]
            f = row[col]
            for c in range(col + 1, n):
                row[c] = (row[c] * p - top[c] * f) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def mat_rank(matrix: Matrix) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    return _bareiss_rank([list(row) for row in matrix.numerators])


def kron(left: Matrix, right: Matrix) -> Matrix:
    """Kronecker product ``left ⊗ right``."""
    rows = left.rows * right.rows
    cols = left.cols * right.cols
    nums = [[0] * cols for _ in range(rows)]
    for i, lrow in enumerate(left._sparse_rows):
        for j, a in lrow:
            for k, rrow in enumerate(right._sparse_rows):
                target = nums[i * right.rows + k]
                offset = j * right.cols
                for q, b in rrow:
                    target[offset + q] = a * b
    return Matrix._build(rows, cols, nums, left.denominator * right.denominator)


class SparseEchelon:
    """Incremental fraction-free echelon form over sparse integer rows.

    Rows are kept primitive (content removed). The pivot of a row is its
    smallest key, or its largest when ``highest_first`` is set; elimination
    only ever introduces keys that come after the eliminated pivot.

    With ``track=True`` every stored row remembers how it combines the
    vectors offered so far, which is what :meth:`express` uses.
    """

    def __init__(self, highest_first: bool = False, track: bool = False):
        self._sign = -1 if highest_first else 1
        self._track = track
        self._rows: Dict[int, SparseVector] = {}
        self._combos: Dict[int, Dict[int, Fraction]] = {}
        self._offered = 0

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self):
        return self._rows.keys()

    def _reduce(
        self, vec: SparseVector, full: bool
    ) -> Tuple[SparseVector, Fraction, Dict[int, Fraction], Optional[int]]:
        # Invariant: vec == alpha * input - sum(beta[k] * offered_k).
        v = dict(vec)
        alpha = Fraction(1)
        beta: Dict[int, Fraction] = {}
        sign = self._sign
        heap = [sign * k for k in v]
        heapq.heapify(heap)
        lead: Optional[int] = None
        while heap:
            key = sign * heapq.heappop(heap)
            c = v.get(key)
            if c is None:
                continue
            row = self._rows.get(key)
            if row is None:
                if not full:
                    lead = key
                    break
                continue
            p = row[key]
            g = gcd(c, p)
            a, b = p // g, c // g
            if a != 1:
                for k in v:
                    v[k] *= a
            for k, r in row.items():
                if k in v:
                    nv = v[k] - b * r
                    if nv:
                        v[k] = nv
                    else:
                        del v[k]
                else:
                    v[k] = -b * r
                    heapq.heappush(heap, sign * k)
            alpha *= a
            if self._track:
                for k in beta:
                    beta[k] *= a
                for k, r in self._combos[key].items():
                    beta[k] = beta.get(k, 0) + b * r
            g = _content(v.values())
            if g > 1:
                for k in v:
                    v[k] //= g
                alpha /= g
                if self._track:
                    for k in beta:
                        beta[k] /= g
        return v, alpha, beta, lead

    def add(self, vector: Mapping[int, Scalar]) -> bool:
        """Offer a vector; store it and return True if it is independent."""
        ints, den = integral(vector)
        index = self._offered
        self._offered += 1
        v, alpha, beta, lead = self._reduce(ints, full=False)
        if lead is None:
            return False
        if v[lead] < 0:
            v = {k: -x for k, x in v.items()}
            alpha, beta = -alpha, {k: -x for k, x in beta.items()}
        self._rows[lead] = v
        if self._track:
            combo = {k: -x for k, x in beta.items() if x}
            combo[index] = alpha * den
            self._combos[lead] = combo
        return True

    def contains(self, vector: Mapping[int, Scalar]) -> bool:
        ints, _ = integral(vector)
        return self._reduce(ints, full=False)[3] is None

    def reduce(self, vector: Mapping[int, Scalar]) -> Dict[int, Fraction]:
        """Fully reduced representative of ``vector`` modulo the row span."""
        ints, den = integral(vector)
        v, alpha, _, _ = self._reduce(ints, full=True)
        scale = 1 / (alpha * den)
        return {k: x * scale for k, x in v.items()}

    def express(self, vector: Mapping[int, Scalar]) -> Optional[Dict[int, Fraction]]:
        """Coefficients writing ``vector`` over the offered vectors, or None.

        Keys are the positions of the vectors in the order they were offered.
        """
        if not self._track:
            raise RuntimeError("express needs an echelon built with track=True")
        ints, den = integral(vector)
        v, alpha, beta, _ = self._reduce(ints, full=True)
        if v:
            return None
        scale = 1 / (alpha * den)
        return {k: x * scale for k, x in beta.items() if x}


def span_closure(gens: Sequence[Matrix]) -> List[Matrix]:
    """Basis of the unital matrix algebra generated by ``gens``.

    The identity seeds the span; left products by generators are added until
    nothing new appears, so the result is closed under every generator.
    """
    if not gens:
        raise ValueError("span_closure needs at least one generator")
    n = gens[0].rows
    if any(g.shape != (n, n) for g in gens):
        raise ValueError("generators must be square matrices of one size")
    echelon = SparseEchelon()
    basis: List[Matrix] = []

    def offer(candidate: Matrix) -> None:
        if echelon.add(candidate.numerator_vector()):
            basis.append(candidate)

    offer(Matrix.identity(n))
    cursor = 0
    while cursor < len(basis):
        current = basis[cursor]
        cursor += 1
        for g in gens:
            offer(g @ current)
    logger.debug(f"span closure of {len(gens)} generators on dim {n}: {len(basis)}")
    return basis


def minimal_polynomial(matrix: Matrix) -> List[Fraction]:
    """Monic minimal polynomial, coefficients in ascending powers.

    Found as the first linear dependence among I, M, M^2, ...
    """
    if not matrix.is_square:
        raise ValueError("minimal polynomial of a non-square matrix")
    echelon = SparseEchelon(track=True)
    power = Matrix.identity(matrix.rows)
    for degree in range(matrix.rows + 1):
        vec = power.vector()
        combo = echelon.express(vec)
        if combo is not None:
            coeffs = [Fraction(0)] * (degree + 1)
            for k, c in combo.items():
                coeffs[k] = -c
            coeffs[degree] = Fraction(1)
            return coeffs
        echelon.add(vec)
        power = power @ matrix
    raise AssertionError("Cayley-Hamilton bound exceeded")


def poly_eval(coeffs: Sequence[Scalar], x: Scalar) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def matrix_poly(coeffs: Sequence[Scalar], matrix: Matrix) -> Matrix:
    """Evaluate a polynomial (ascending coefficients) at a square matrix."""
    acc = Matrix.zeros(matrix.rows)
    for c in reversed(coeffs):
        acc = acc @ matrix + Matrix.scalar(matrix.rows, c)
    return acc


def poly_from_roots(roots: Iterable[Scalar]) -> List[Fraction]:
    """Ascending coefficients of ``prod (x - r)``."""
    coeffs = [Fraction(1)]
    for r in roots:
        shifted = [Fraction(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= r * c
        coeffs = shifted
    return coeffs


def rational_roots(coeffs: Sequence[Scalar], candidates: Iterable[Scalar]) -> List[Fraction]:
    """Roots of a squarefree polynomial drawn from a finite candidate set.

    Raises:
        SpectrumError: if the polynomial does not split into distinct linear
            factors over the candidates.
    """
    roots = sorted({Fraction(c) for c in candidates if poly_eval(coeffs, c) == 0})
    degree = len(coeffs) - 1
    if len(roots) != degree or poly_from_roots(roots) != [Fraction(c) for c in coeffs]:
        raise SpectrumError(
            f"polynomial of degree {degree} has only {len(roots)} roots among the candidates"
        )
    return roots


def solve_in_span(
    vectors: Sequence[Mapping[int, Scalar]], target: Mapping[int, Scalar]
) -> Optional[List[Fraction]]:
    """Coefficients ``c`` with ``sum(c[i] * vectors[i]) == target``, or None."""
    echelon = SparseEchelon(track=True)
    for v in vectors:
        echelon.add(v)
    combo = echelon.express(target)
    if combo is None:
        return None
    return [combo.get(i, Fraction(0)) for i in range(len(vectors))]


def sparse_rank(vectors: Iterable[Mapping[int, Scalar]]) -> int:
    echelon = SparseEchelon()
    for v in vectors:
        echelon.add(v)
    return echelon.rank


__all__ = [
    "Rational",
    "Matrix",
    "SparseEchelon",
    "integral",
    "mat_rank",
    "kron",
    "span_closure",
    "minimal_polynomial",
    "poly_eval",
    "matrix_poly",
    "poly_from_roots",
    "rational_roots",
    "solve_in_span",
    "sparse_rank",
]
