"""Spin representations of su(2) in an integer Chevalley basis.

On ``[2j]`` with basis ``v_m`` (``m = j, j-1, ..., -j``, index ``i = j - m``)::

    E v_m = (j - m) v_{m+1},   F v_m = (j + m) v_{m-1},   H v_m = 2m v_m

All entries are integers and the Casimir ``(EF + FE)/2 + H^2/4`` is
``j(j+1)`` times the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Dict, FrozenSet, List, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from .errors import SpinCapError, SpinError
from .exact import Matrix, kron, minimal_polynomial, rational_roots, span_closure
from .logger import get_logger

logger = get_logger("centralizer.su2rep")

DEFAULT_SPIN_CAP = 8


@total_ordering
class Spin(BaseModel):
    """A nonnegative half-integer spin, stored as ``twice = 2j``."""

    model_config = ConfigDict(frozen=True)

    twice: int = Field(ge=0)

    @classmethod
    def parse(cls, text: Union[str, int, Fraction, "Spin"]) -> Spin:
        """Accept ``"3/2"``, ``"1.5"``, ``"2"``, ints, Fractions or a Spin."""
        if isinstance(text, Spin):
            return text
        try:
            value = Fraction(text.strip()) if isinstance(text, str) else Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise SpinError(f"not a spin: {text!r}") from e
        doubled = 2 * value
        if doubled.denominator != 1 or doubled < 0:
            raise SpinError(f"spin must be a nonnegative half-integer, got {text!r}")
        return cls(twice=int(doubled))

    @classmethod
    def half(cls, twice: int) -> Spin:
        return cls(twice=twice)

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def casimir(self) -> Fraction:
        """The eigenvalue ``j(j+1)``."""
        j = self.value
        return j * (j + 1)

    @property
    def dim(self) -> int:
        return self.twice + 1

    @property
    def x(self) -> Fraction:
        """Shifted spin ``j + 1/2``."""
        return self.value + Fraction(1, 2)

    def check_cap(self, cap: int = DEFAULT_SPIN_CAP) -> Spin:
        if self.twice > cap:
            raise SpinCapError(self.twice, cap)
        return self

    def __lt__(self, other: Spin) -> bool:
        if not isinstance(other, Spin):
            return NotImplemented
        return self.twice < other.twice

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Spin({self})"


SpinTriple = Tuple[Spin, Spin, Spin]
CasimirLabel = Literal["1", "2", "3", "12", "13", "23", "123"]
DifferenceLabel = Literal["123-12", "123-23", "123-13"]


def spins(*values: Union[str, int, Fraction, Spin]) -> Tuple[Spin, ...]:
    """Parse several spins at once."""
    return tuple(Spin.parse(v) for v in values)


@dataclass(frozen=True)
class RepGens:
    """The Chevalley triple ``(E, F, H)`` of one representation."""

    E: Matrix
    F: Matrix
    H: Matrix

    @property
    def dim(self) -> int:
        return self.H.rows

    def casimir(self) -> Matrix:
        return casimir_of(self.E, self.F, self.H)

    def satisfies_chevalley(self) -> bool:
        return (
            self.H.commutator(self.E) == 2 * self.E
            and self.H.commutator(self.F) == -2 * self.F
            and self.E.commutator(self.F) == self.H
        )


def casimir_of(E: Matrix, F: Matrix, H: Matrix) -> Matrix:
    return (E @ F + F @ E).scale(Fraction(1, 2)) + (H @ H).scale(Fraction(1, 4))


def spin_rep(j: Spin) -> RepGens:
    """Integer matrices of ``E``, ``F``, ``H`` on ``[2j]``."""
    t = j.twice
    n = t + 1
    E = [[0] * n for _ in range(n)]
    F = [[0] * n for _ in range(n)]
    H = [[0] * n for _ in range(n)]
    for i in range(n):
        if i > 0:
            E[i - 1][i] = i
        if i < t:
            F[i + 1][i] = t - i
        H[i][i] = t - 2 * i
    return RepGens(Matrix.from_rows(E), Matrix.from_rows(F), Matrix.from_rows(H))


_SUBSETS: Dict[str, Tuple[int, ...]] = {
    "1": (0,),
    "2": (1,),
    "3": (2,),
    "12": (0, 1),
    "13": (0, 2),
    "23": (1, 2),
    "123": (0, 1, 2),
}


def _embed(site: int, op: Matrix, dims: Tuple[int, ...]) -> Matrix:
    out = None
    for k, d in enumerate(dims):
        factor = op if k == site else Matrix.identity(d)
        out = factor if out is None else kron(out, factor)
    return out


@dataclass(frozen=True)
class TensorContext:
    """Casimir operators on ``[2j1] ⊗ [2j2] ⊗ [2j3]``."""

    spins: SpinTriple
    site_gens: Tuple[RepGens, ...]
    casimirs: Dict[str, Matrix] = field(hash=False, compare=False)

    @property
    def dim(self) -> int:
        return self.site_gens[0].dim

    def K(self, label: CasimirLabel) -> Matrix:
        return self.casimirs[label]

    @property
    def total(self) -> RepGens:
        """Diagonal action ``E_tot``, ``F_tot``, ``H_tot``."""
        gens = self.site_gens
        return RepGens(
            gens[0].E + gens[1].E + gens[2].E,
            gens[0].F + gens[1].F + gens[2].F,
            gens[0].H + gens[1].H + gens[2].H,
        )

    def commutes_with_total(self, matrix: Matrix) -> bool:
        total = self.total
        return all(matrix.commutes_with(g) for g in (total.E, total.F, total.H))


def build_context(j1: Spin, j2: Spin, j3: Spin, cap: int = DEFAULT_SPIN_CAP) -> TensorContext:
    """Embed the three site representations and form all seven Casimirs.

    Raises:
        SpinCapError: if a spin exceeds ``cap``.
    """
    for j in (j1, j2, j3):
        j.check_cap(cap)
    return _build_context(j1, j2, j3)


@lru_cache(maxsize=32)
def _build_context(j1: Spin, j2: Spin, j3: Spin) -> TensorContext:
    triple = (j1, j2, j3)
    dims = tuple(j.dim for j in triple)
    local = [spin_rep(j) for j in triple]
    embedded = tuple(
        RepGens(*(_embed(site, op, dims) for op in (rep.E, rep.F, rep.H)))
        for site, rep in enumerate(local)
    )
    casimirs: Dict[str, Matrix] = {}
    for label, sites in _SUBSETS.items():
        E = sum((embedded[s].E for s in sites[1:]), embedded[sites[0]].E)
        F = sum((embedded[s].F for s in sites[1:]), embedded[sites[0]].F)
        H = sum((embedded[s].H for s in sites[1:]), embedded[sites[0]].H)
        casimirs[label] = casimir_of(E, F, H)
    logger.debug(f"built tensor context {'⊗'.join(str(j) for j in triple)} (dim {embedded[0].dim})")
    return TensorContext(triple, embedded, casimirs)


def verify_casimir_identity(ctx: TensorContext) -> bool:
    """Whether ``K1 + K2 + K3 + K123 == K12 + K23 + K13`` exactly."""
    K = ctx.casimirs
    return K["1"] + K["2"] + K["3"] + K["123"] == K["12"] + K["23"] + K["13"]


def spectrum_difference(ctx: TensorContext, which: DifferenceLabel) -> FrozenSet[Fraction]:
    """Eigenvalues of ``K123 - K_ab`` found among ``l(l+1) - k(k+1)``.

    Raises:
        SpectrumError: if the minimal polynomial does not split over the
            candidates.
    """
    from .bratteli import tensor_decompose

    pair = which.split("-")[1]
    a, b = (int(pair[0]) - 1, int(pair[1]) - 1)
    triple = ctx.spins
    c = 3 - a - b
    middle = tensor_decompose(triple[a], triple[b])
    bottom = sorted({t for k in middle for t in tensor_decompose(k, triple[c])})
    candidates = {ell.casimir - k.casimir for ell in bottom for k in middle}
    difference = ctx.K("123") - ctx.K(pair)
    return frozenset(rational_roots(minimal_polynomial(difference), candidates))


def two_fold_dimension(j1: Spin, j2: Spin) -> int:
    """Dimension of the algebra generated by ``K12`` on ``[2j1] ⊗ [2j2]``."""
    r1, r2 = spin_rep(j1), spin_rep(j2)
    n1, n2 = r1.dim, r2.dim
    E = kron(r1.E, Matrix.identity(n2)) + kron(Matrix.identity(n1), r2.E)
    F = kron(r1.F, Matrix.identity(n2)) + kron(Matrix.identity(n1), r2.F)
    H = kron(r1.H, Matrix.identity(n2)) + kron(Matrix.identity(n1), r2.H)
    return len(span_closure([casimir_of(E, F, H)]))


def casimir_spectrum(matrix: Matrix, values: List[Spin]) -> List[Fraction]:
    """Roots of the minimal polynomial among ``{j(j+1) : j in values}``."""
    return rational_roots(minimal_polynomial(matrix), {j.casimir for j in values})


__all__ = [
    "DEFAULT_SPIN_CAP",
    "Spin",
    "SpinTriple",
    "spins",
    "RepGens",
    "spin_rep",
    "casimir_of",
    "TensorContext",
    "build_context",
    "verify_casimir_identity",
    "spectrum_difference",
    "two_fold_dimension",
    "casimir_spectrum",
]
