"""Diagram algebras on three strands and their identification with Racah quotients.

A Brauer diagram is a perfect matching on the top points ``1..n`` and the
bottom points ``1'..n'``; internally top point ``i`` is ``i - 1`` and bottom
point ``i'`` is ``n + i - 1``. The product ``x * y`` stacks ``x`` on top of
``y`` and every closed loop in the middle contributes a factor ``delta``.
Temperley-Lieb diagrams are the planar ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .config import PRESENTATIONS_DIR
from .errors import ExcludedCaseError, InconclusiveError, SpectrumError
from .exact import Matrix, minimal_polynomial, rational_roots, sparse_rank
from .logger import get_logger
from .models import IsoReport
from .ncalg import (
    Certificate,
    NCPoly,
    Presentation,
    certified_dimension,
    check_homomorphism,
    evaluate_relations,
    parse_poly,
)
from .racah import PAIR_NAMES, build_quotient
from .su2rep import Spin, build_context

logger = get_logger("centralizer.diagalg")

STRANDS = 3
Pair = Tuple[int, int]
Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class BrauerDiagram:
    """Canonical perfect matching: pairs ``(a, b)`` with ``a < b``, sorted."""

    pairs: Tuple[Pair, ...]
    n: int = STRANDS

    def __post_init__(self) -> None:
        canonical = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        points = [q for p in canonical for q in p]
        if len(canonical) != self.n or sorted(points) != list(range(2 * self.n)):
            raise ValueError(f"not a perfect matching on {2 * self.n} points: {self.pairs}")
        object.__setattr__(self, "pairs", canonical)

    @classmethod
    def from_labels(cls, pairs: Iterable[Tuple[str, str]], n: int = STRANDS) -> BrauerDiagram:
        """Build from labels such as ``("1", "2'")``."""
        return cls(tuple((_point(a, n), _point(b, n)) for a, b in pairs), n)

    @classmethod
    def identity(cls, n: int = STRANDS) -> BrauerDiagram:
        return cls(tuple((i, n + i) for i in range(n)), n)

    @classmethod
    def cup_cap(cls, i: int, n: int = STRANDS) -> BrauerDiagram:
        """``e_i``: points ``i, i+1`` joined on top and on the bottom."""
        k = i - 1
        pairs = [(k, k + 1), (n + k, n + k + 1)]
        pairs += [(m, n + m) for m in range(n) if m not in (k, k + 1)]
        return cls(tuple(pairs), n)

    @classmethod
    def crossing(cls, i: int, n: int = STRANDS) -> BrauerDiagram:
        """``s_i``: strands ``i`` and ``i+1`` exchanged."""
        k = i - 1
        pairs = [(k, n + k + 1), (k + 1, n + k)]
        pairs += [(m, n + m) for m in range(n) if m not in (k, k + 1)]
        return cls(tuple(pairs), n)

    @cached_property
    def partner(self) -> Dict[int, int]:
        out = {}
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return out

    @property
    def is_planar(self) -> bool:
        """No two arcs cross when the points sit on a circle ``1..n, n'..1'``."""
        n = self.n

        def position(p: int) -> int:
            return p if p < n else 3 * n - 1 - p

        arcs = [tuple(sorted((position(a), position(b)))) for a, b in self.pairs]
        for (a, b), (c, d) in itertools.combinations(arcs, 2):
            if a < c < b < d or c < a < d < b:
                return False
        return True

    @property
    def is_permutation(self) -> bool:
        return all(a < self.n <= b for a, b in self.pairs)

    @property
    def permutation_sign(self) -> int:
        """Sign of the underlying permutation; only defined without horizontal arcs."""
        image = [self.partner[i] - self.n for i in range(self.n)]
        inversions = sum(1 for a, b in itertools.combinations(image, 2) if a > b)
        return -1 if inversions % 2 else 1

    def __str__(self) -> str:
        return render(self)


def _point(label: str, n: int) -> int:
    label = str(label).strip()
    if label.endswith("'"):
        return n + int(label[:-1]) - 1
    return int(label) - 1


def _label(point: int, n: int) -> str:
    return f"{point + 1}" if point < n else f"{point - n + 1}'"


def render(diagram: BrauerDiagram) -> str:
    """Pair-list text form, e.g. ``{(1,2'),(2,1'),(3,3')}``."""
    n = diagram.n
    return "{" + ",".join(f"({_label(a, n)},{_label(b, n)})" for a, b in diagram.pairs) + "}"


def compose(x: BrauerDiagram, y: BrauerDiagram) -> Tuple[BrauerDiagram, int]:
    """Stack ``x`` on top of ``y``; return the diagram and the number of closed loops."""
    if x.n != y.n:
        raise ValueError("diagrams on different numbers of strands")
    n = x.n
    partners = (x.partner, y.partner)
    visited = set()

    def outer(side: int, p: int) -> bool:
        return p < n if side == 0 else p >= n

    pairs = []
    done = set()
    starts = [(0, p) for p in range(n)] + [(1, p) for p in range(n, 2 * n)]
    for side, start in starts:
        if (side, start) in done:
            continue
        s, p = side, start
        while True:
            q = partners[s][p]
            if outer(s, q):
                break
            # q sits in the middle row
            middle = q - n if s == 0 else q
            visited.add(middle)
            s, p = (1, middle) if s == 0 else (0, middle + n)
        done.add((side, start))
        done.add((s, q))
        pairs.append((start, q))
    loops = 0
    for i in range(n):
        if i in visited:
            continue
        loops += 1
        current = i
        while True:
            visited.add(current)
            middle = x.partner[current + n] - n
            visited.add(middle)
            current = y.partner[middle]
            if current == i:
                break
    return BrauerDiagram(tuple(pairs), n), loops


def enumerate_diagrams(planar_only: bool = False, n: int = STRANDS) -> List[BrauerDiagram]:
    """All perfect matchings on ``2n`` points, or only the planar ones, sorted."""

    def matchings(points: Tuple[int, ...]) -> Iterable[Tuple[Pair, ...]]:
        if not points:
            yield ()
            return
        first, rest = points[0], points[1:]
        for k, other in enumerate(rest):
            for tail in matchings(rest[:k] + rest[k + 1 :]):
                yield ((first, other),) + tail

    diagrams = sorted(
        (BrauerDiagram(m, n) for m in matchings(tuple(range(2 * n)))), key=lambda d: d.pairs
    )
    return [d for d in diagrams if d.is_planar] if planar_only else diagrams


@dataclass(frozen=True, eq=False)
class DiagElement:
    """A rational combination of diagrams sharing one loop value ``delta``."""

    terms: Mapping[BrauerDiagram, Fraction] = field(default_factory=dict)
    delta: Fraction = Fraction(1)
    n: int = STRANDS

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", {d: Fraction(c) for d, c in self.terms.items() if c})
        object.__setattr__(self, "delta", Fraction(self.delta))

    @classmethod
    def of(cls, diagram: BrauerDiagram, delta: Scalar, coefficient: Scalar = 1) -> DiagElement:
        return cls({diagram: Fraction(coefficient)}, Fraction(delta), diagram.n)

    @classmethod
    def unit(cls, delta: Scalar, n: int = STRANDS) -> DiagElement:
        return cls.of(BrauerDiagram.identity(n), delta)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, diagram: BrauerDiagram) -> Fraction:
        return self.terms.get(diagram, Fraction(0))

    def _coerce(self, other: Union[DiagElement, Scalar]) -> DiagElement:
        if isinstance(other, DiagElement):
            if other.delta != self.delta or other.n != self.n:
                raise ValueError("elements of different diagram algebras")
            return other
        return DiagElement.unit(self.delta, self.n).scale(other)

    def scale(self, value: Scalar) -> DiagElement:
        value = Fraction(value)
        return DiagElement({d: c * value for d, c in self.terms.items()}, self.delta, self.n)

    def __add__(self, other: Union[DiagElement, Scalar]) -> DiagElement:
        other = self._coerce(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return DiagElement(out, self.delta, self.n)

    __radd__ = __add__

    def __neg__(self) -> DiagElement:
        return self.scale(-1)

    def __sub__(self, other: Union[DiagElement, Scalar]) -> DiagElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> DiagElement:
        return (-self) + other

    def __mul__(self, other: Union[DiagElement, Scalar]) -> DiagElement:
        if isinstance(other, DiagElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: Scalar) -> DiagElement:
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, DiagElement):
            return NotImplemented
        return self.delta == other.delta and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def vector(self, index: Mapping[BrauerDiagram, int]) -> Dict[int, Fraction]:
        return {index[d]: c for d, c in self.terms.items()}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}*{render(d)}" for d, c in sorted(self.terms.items(), key=lambda t: t[0].pairs)
        )

    def __repr__(self) -> str:
        return f"DiagElement({self}; delta={self.delta})"


def multiply(x: DiagElement, y: DiagElement) -> DiagElement:
    """Bilinear concatenation with loop factor ``delta ** loops``."""
    if x.delta != y.delta:
        raise ValueError(f"loop values differ: {x.delta} vs {y.delta}")
    out: Dict[BrauerDiagram, Fraction] = {}
    for dx, cx in x.terms.items():
        for dy, cy in y.terms.items():
            d, loops = compose(dx, dy)
            out[d] = out.get(d, 0) + cx * cy * x.delta**loops
    return DiagElement(out, x.delta, x.n)


class DiagramAlgebra:
    """Named generators of ``B_n(delta)`` or ``TL_n(delta)`` as elements."""

    def __init__(self, delta: Scalar, planar: bool = False, n: int = STRANDS):
        self.delta = Fraction(delta)
        self.planar = planar
        self.n = n
        self.basis = enumerate_diagrams(planar_only=planar, n=n)
        self.index = {d: i for i, d in enumerate(self.basis)}

    @property
    def one(self) -> DiagElement:
        return DiagElement.unit(self.delta, self.n)

    def e(self, i: int) -> DiagElement:
        return DiagElement.of(BrauerDiagram.cup_cap(i, self.n), self.delta)

    def s(self, i: int) -> DiagElement:
        if self.planar:
            raise ValueError("crossings are not planar")
        return DiagElement.of(BrauerDiagram.crossing(i, self.n), self.delta)

    @property
    def generators(self) -> Dict[str, DiagElement]:
        gens = {f"e{i}": self.e(i) for i in range(1, self.n)}
        if not self.planar:
            gens.update({f"s{i}": self.s(i) for i in range(1, self.n)})
        return gens

    def rank(self, elements: Iterable[DiagElement]) -> int:
        return sparse_rank(x.vector(self.index) for x in elements)

    def is_central(self, element: DiagElement) -> bool:
        return all(element * g == g * element for g in self.generators.values())

    def left_regular_matrix(self, element: DiagElement) -> Matrix:
        return left_regular_matrix(element, self.basis)


def left_regular_matrix(element: DiagElement, basis: Sequence[BrauerDiagram]) -> Matrix:
    """Column ``j`` holds the coordinates of ``element * basis[j]``."""
    index = {d: i for i, d in enumerate(basis)}
    columns = []
    for d in basis:
        product = element * DiagElement.of(d, element.delta)
        column = [Fraction(0)] * len(basis)
        for diagram, c in product.terms.items():
            column[index[diagram]] = c
        columns.append(column)
    return Matrix.from_rows([list(r) for r in zip(*columns)])


def trivial_character(element: DiagElement) -> Fraction:
    """Value where crossings act by 1 and every diagram with a cup acts by 0."""
    return sum((c for d, c in element.terms.items() if d.is_permutation), Fraction(0))


def sign_character(element: DiagElement) -> Fraction:
    """Value where crossings act by -1 and every diagram with a cup acts by 0."""
    return sum(
        (c * d.permutation_sign for d, c in element.terms.items() if d.is_permutation),
        Fraction(0),
    )


def central_spectrum(matrix: Matrix, candidates: Iterable[Scalar]) -> Optional[List[Fraction]]:
    """Roots of the minimal polynomial among ``candidates``; None if it does not split."""
    try:
        return rational_roots(minimal_polynomial(matrix), candidates)
    except SpectrumError:
        return None


def bundled_presentation(stem: str, **parameters: Scalar) -> Presentation:
    """Load ``presentations/<stem>.yaml`` with optional parameter overrides."""
    return Presentation.load(
        PRESENTATIONS_DIR / f"{stem}.yaml", {k: str(v) for k, v in parameters.items()}
    )


def _poly(text: str, names: Sequence[str], **subs: Union[Scalar, NCPoly]) -> NCPoly:
    return parse_poly(text, names, subs)


def _texts(values: Iterable[Fraction]) -> List[str]:
    return [str(v) for v in values]


def _certify(presentation: Presentation, target: int, lmax: int) -> Optional[Certificate]:
    try:
        return certified_dimension(presentation, target=target, lmax=lmax)
    except InconclusiveError as e:
        logger.warning(str(e))
        return None


def _racah_homomorphism(
    source: Presentation,
    images: Mapping[str, NCPoly],
    cert: Optional[Certificate],
    target: int,
) -> bool:
    """Check the Racah-to-diagram map on a certified basis of the expected size."""
    if cert is None or cert.dimension != target:
        return False
    return check_homomorphism(source, images, cert)


# -- Temperley-Lieb ---------------------------------------------------------


def verify_tl_iso(lmax: int = 8) -> IsoReport:
    """``A -> 2 - e1``, ``B -> 2 - e2`` identifies the (1/2,1/2,1/2) quotient with TL3(1)."""
    tl = DiagramAlgebra(2, planar=True)
    e1, e2 = tl.e(1), tl.e(2)
    a, b = 2 - e1, 2 - e2
    G = a * b + b * a - 2 * a - 2 * b + 4
    half = Spin(twice=1)
    spec = build_quotient(half, half, half)
    images = {"A": a, "B": b, "C": G - Fraction(1, 4)}
    relations = evaluate_relations(spec.presentation, images, tl.one, DiagElement.is_zero)
    span = tl.rank([tl.one, a, b, a * b, b * a])
    roots = central_spectrum(tl.left_regular_matrix(G), [1, 4])
    tl3 = bundled_presentation("tl3")
    tl_relations = evaluate_relations(tl3, {"e1": e1, "e2": e2}, tl.one, DiagElement.is_zero)

    cert = _certify(tl3, 5, lmax)
    E1, E2 = (NCPoly.generator(tl3.names, g) for g in ("e1", "e2"))
    A, B = 2 - E1, 2 - E2
    abstract_images = {"A": A, "B": B, "C": A * B + B * A - 2 * A - 2 * B + 4 - Fraction(1, 4)}
    checks = {
        "defining_relations": all(tl_relations.values()),
        "racah_relations": all(relations.values()),
        "span": span == len(tl.basis) == 5,
        "abstract_dimension": cert is not None and cert.dimension == 5,
        "central_formula": G == e1 * e2 + e2 * e1 - 2 * e1 - 2 * e2 + 4,
        "central": tl.is_central(G),
        "central_spectrum": roots == [1, 4],
        "racah_homomorphism": _racah_homomorphism(spec.presentation, abstract_images, cert, 5),
    }
    report = IsoReport(
        algebra="TL3(1)",
        checks=checks,
        details={
            "dimension": len(tl.basis),
            "certified": cert is not None,
            "span_rank": span,
            "central_roots": _texts(roots or []),
            "failed_relations": sorted(k for k, v in relations.items() if not v),
        },
    )
    logger.info(f"TL3(1): verified={report.verified}")
    return report


# -- Brauer -----------------------------------------------------------------

BRAUER_BASIS_WORDS = (
    "1", "A", "B", "A^2", "B^2", "AB", "BA", "A^2B", "AB^2",
    "ABA", "BAB", "BA^2", "BABA", "A^2B^2", "ABAB",
)  # fmt: skip

BRAUER_C = "6 - 7A - B + A^2 + {A,B} + 1/4 (ABA - A^2B - BA^2)"


def verify_brauer_iso(lmax: int = 8) -> IsoReport:
    """``A -> 2(s1 - e1) + 4``, ``B -> 2(s2 - e2) + 4`` onto B3(3), with the inverse map."""
    br = DiagramAlgebra(3)
    e1, e2, s1, s2 = br.e(1), br.e(2), br.s(1), br.s(2)
    a = 2 * (s1 - e1) + 4
    b = 2 * (s2 - e2) + 4
    pair_images = {"A": a, "B": b}
    c = _poly(BRAUER_C, PAIR_NAMES).evaluate(pair_images, br.one)
    one = Spin(twice=2)
    spec = build_quotient(one, one, one)
    relations = evaluate_relations(
        spec.presentation, {"A": a, "B": b, "C": c}, br.one, DiagElement.is_zero
    )
    words = [_poly(w, PAIR_NAMES).evaluate(pair_images, br.one) for w in BRAUER_BASIS_WORDS]
    rank = br.rank(words)

    def inverse(text: str, x: DiagElement) -> DiagElement:
        return _poly(text, ("X",)).evaluate({"X": x}, br.one)

    round_trip = (
        inverse("(X - 2)(X - 6)/4", a) == e1
        and inverse("X^2/4 - 3X/2 + 1", a) == s1
        and inverse("(X - 2)(X - 6)/4", b) == e2
        and inverse("X^2/4 - 3X/2 + 1", b) == s2
    )
    central = 6 + 2 * (s1 - e1) + 2 * (s2 - e2) + 2 * s1 * (s2 - e2) * s1
    roots = central_spectrum(br.left_regular_matrix(central), [0, 2, 6, 12])
    regular = {g: br.left_regular_matrix(x) for g, x in br.generators.items()}
    brauer = bundled_presentation("brauer3")
    regular_relations = evaluate_relations(
        brauer, regular, Matrix.identity(len(br.basis)), Matrix.is_zero
    )

    cert = _certify(brauer, 15, lmax)
    S1, S2, E1, E2 = (NCPoly.generator(brauer.names, g) for g in ("s1", "s2", "e1", "e2"))
    pair_polys = {"A": 2 * (S1 - E1) + 4, "B": 2 * (S2 - E2) + 4}
    abstract_images = {
        **pair_polys,
        "C": _poly(BRAUER_C, PAIR_NAMES).substitute(pair_polys, brauer.names),
    }
    checks = {
        "racah_relations": all(relations.values()),
        "basis_words": rank == 15,
        "abstract_dimension": cert is not None and cert.dimension == 15,
        "racah_homomorphism": _racah_homomorphism(spec.presentation, abstract_images, cert, 15),
        "inverse_round_trip": round_trip,
        "central_formula": c == central,
        "central": br.is_central(central),
        "central_spectrum": roots is not None and set(roots) <= {0, 2, 6, 12},
        "trivial_character": trivial_character(central) == 12,
        "sign_character": sign_character(central) == 0,
        "regular_representation": all(regular_relations.values()),
    }
    report = IsoReport(
        algebra="B3(3)",
        checks=checks,
        details={
            "dimension": len(br.basis),
            "certified": cert is not None,
            "basis_rank": rank,
            "central_roots": _texts(roots or []),
            "failed_relations": sorted(k for k, v in relations.items() if not v),
        },
    )
    logger.info(f"B3(3): verified={report.verified}")
    return report


# -- one-boundary Temperley-Lieb -------------------------------------------


def btl_presentation(j: Spin) -> Presentation:
    z = (2 * j.value + 1) / (2 * j.value)
    return bundled_presentation("btl", z=z).without(name=f"btl({j})")


def verify_btl_iso(j: Spin, lmax: int = 8) -> IsoReport:
    """The (j,1/2,1/2) quotient is btl(j) with ``z = (2j+1)/(2j)``.

    Raises:
        ExcludedCaseError: for ``j = 1/2``.
    """
    if j.twice < 2:
        raise ExcludedCaseError("btl(j) needs j >= 1; j = 1/2 is the Temperley-Lieb case")
    jv = j.value
    z = (2 * jv + 1) / (2 * jv)
    half = Spin(twice=1)
    ctx = build_context(j, half, half)
    unit = Matrix.identity(ctx.dim)
    K12, K23, K123 = ctx.K("12"), ctx.K("23"), ctx.K("123")
    s0 = ((jv + Fraction(1, 2)) * (jv + Fraction(3, 2)) - K12).scale(1 / (2 * jv))
    s1 = 2 - K23
    G = ((jv + 1) * (jv + 2) - K123).scale(1 / (2 * jv))
    btl = btl_presentation(j)
    relations = evaluate_relations(btl, {"s0": s0, "s1": s1}, unit, Matrix.is_zero)
    words = [unit, s0, s1, s0 @ s1, s1 @ s0, s0 @ s1 @ s0]
    rank = sparse_rank(w.vector() for w in words)
    central = z * s1 + 2 * s0 - s0 @ s1 - s1 @ s0

    cert = _certify(btl, 6, lmax)
    # Racah generators in terms of s0, s1
    S0, S1 = NCPoly.generator(btl.names, "s0"), NCPoly.generator(btl.names, "s1")
    image_G = z * S1 + 2 * S0 - S0 * S1 - S1 * S0
    images = {
        "C": (jv + 1) * (jv + 2) - 2 * jv * image_G,
        "A": (jv + Fraction(1, 2)) * (jv + Fraction(3, 2)) - 2 * jv * S0,
        "B": 2 - S1,
    }
    source = build_quotient(j, half, half).presentation
    checks = {
        "matrix_relations": all(relations.values()),
        "word_independence": rank == 6,
        "abstract_dimension": cert is not None and cert.dimension == 6,
        "central_image": central == G,
        "racah_homomorphism": _racah_homomorphism(source, images, cert, 6),
    }
    report = IsoReport(
        algebra=f"btl({j})",
        checks=checks,
        details={
            "z": str(z),
            "certified": cert is not None,
            "word_rank": rank,
            "abstract_basis": cert.basis_text() if cert else [],
            "certificate_degree": cert.degree if cert else None,
        },
    )
    logger.info(f"btl({j}): verified={report.verified}")
    return report


# -- one-boundary Brauer ----------------------------------------------------

BB_BASIS_WORDS = ("1", "e0", "e1", "s1", "e0 e1", "e1 e0", "e0 s1", "s1 e0", "s1 e0 s1")


def verify_bB_iso(lmax: int = 8) -> IsoReport:
    """``A + 1/4 -> 4 - 2e0``, ``B -> 2(s1 - e1) + 4`` onto the one-boundary Brauer algebra."""
    half, one = Spin(twice=1), Spin(twice=2)
    ctx = build_context(half, one, one)
    unit = Matrix.identity(ctx.dim)
    shifted = ctx.K("12") + Fraction(1, 4)
    B = ctx.K("23")
    G = ctx.K("123") + Fraction(1, 4)
    e0 = 2 - shifted.scale(Fraction(1, 2))
    e1 = ((B - 2) @ (B - 6)).scale(Fraction(1, 4))
    s1 = (B @ B).scale(Fraction(1, 4)) - B.scale(Fraction(3, 2)) + 1
    gens = {"e0": e0, "e1": e1, "s1": s1}
    bB = bundled_presentation("bB")
    relations = evaluate_relations(bB, gens, unit, Matrix.is_zero)
    words = [_poly(w, bB.names).evaluate(gens, unit) for w in BB_BASIS_WORDS]
    rank = sparse_rank(w.vector() for w in words)
    central = 7 - 2 * e0 + 2 * (s1 - e1) - 2 * s1 @ e0 @ s1
    is_central = all(central.commutes_with(g) for g in gens.values())
    roots = central_spectrum(central, [1, 4, 9])

    cert = _certify(bB, 9, lmax)
    E0, E1, S1 = (NCPoly.generator(bB.names, g) for g in ("e0", "e1", "s1"))
    image_G = 7 - 2 * E0 + 2 * (S1 - E1) - 2 * S1 * E0 * S1
    images = {
        "C": image_G - Fraction(1, 4),
        "A": 4 - 2 * E0 - Fraction(1, 4),
        "B": 2 * (S1 - E1) + 4,
    }
    source = build_quotient(half, one, one).presentation
    checks = {
        "matrix_relations": all(relations.values()),
        "basis_words": rank == 9,
        "abstract_dimension": cert is not None and cert.dimension == 9,
        "central_image": central == G,
        "central": is_central,
        "central_spectrum": roots is not None and set(roots) <= {1, 4, 9},
        "racah_homomorphism": _racah_homomorphism(source, images, cert, 9),
    }
    report = IsoReport(
        algebra="bB",
        checks=checks,
        details={
            "certified": cert is not None,
            "basis_rank": rank,
            "central_roots": _texts(roots or []),
            "abstract_basis": cert.basis_text() if cert else [],
            "failed_relations": sorted(k for k, v in relations.items() if not v),
        },
    )
    logger.info(f"bB: verified={report.verified}")
    return report


__all__ = [
    "STRANDS",
    "BrauerDiagram",
    "DiagElement",
    "DiagramAlgebra",
    "render",
    "compose",
    "enumerate_diagrams",
    "multiply",
    "left_regular_matrix",
    "trivial_character",
    "sign_character",
    "central_spectrum",
    "bundled_presentation",
    "btl_presentation",
    "verify_tl_iso",
    "verify_brauer_iso",
    "verify_btl_iso",
    "verify_bB_iso",
]
