"""Finitely presented associative algebras over the rationals.

Words are tuples of generator indices ordered degree-lexicographically by the
order of ``Presentation.names``; central generators must come first so that
normal forms carry them on the left. Dimensions are bounded from above by
degree-truncated elimination: all relation instances ``x r y`` of degree at
most ``L`` are row-reduced with the largest word as pivot, and a set of normal
words closed under left multiplication by every generator certifies an upper
bound on the dimension of the quotient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
    Union,
)

import yaml

from .errors import InconclusiveError, PresentationSyntaxError, ReductionError
from .exact import Matrix, SparseEchelon, integral
from .logger import get_logger

logger = get_logger("centralizer.ncalg")

Word = Tuple[int, ...]
Scalar = Union[int, Fraction]
T = TypeVar("T")

DEFAULT_LMIN = 4
DEFAULT_LMAX = 10


@dataclass(frozen=True, eq=False)
class NCPoly:
    """Noncommutative polynomial: a map from words to nonzero rationals."""

    names: Tuple[str, ...]
    terms: Mapping[Word, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "terms", {w: Fraction(c) for w, c in self.terms.items() if c}
        )

    @classmethod
    def constant(cls, names: Sequence[str], value: Scalar) -> NCPoly:
        return cls(tuple(names), {(): Fraction(value)})

    @classmethod
    def generator(cls, names: Sequence[str], name: str) -> NCPoly:
        names = tuple(names)
        return cls(names, {(names.index(name),): Fraction(1)})

    @classmethod
    def monomial(cls, names: Sequence[str], word: Word, coefficient: Scalar = 1) -> NCPoly:
        return cls(tuple(names), {tuple(word): Fraction(coefficient)})

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Word) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    def _coerce(self, other: Union[NCPoly, Scalar]) -> NCPoly:
        if isinstance(other, NCPoly):
            if other.names != self.names:
                raise ValueError(f"generator mismatch {self.names} vs {other.names}")
            return other
        return NCPoly.constant(self.names, other)

    def __add__(self, other: Union[NCPoly, Scalar]) -> NCPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCPoly(self.names, out)

    __radd__ = __add__

    def __neg__(self) -> NCPoly:
        return NCPoly(self.names, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: Union[NCPoly, Scalar]) -> NCPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> NCPoly:
        return (-self) + other

    def __mul__(self, other: Union[NCPoly, Scalar]) -> NCPoly:
        if not isinstance(other, NCPoly):
            value = Fraction(other)
            return NCPoly(self.names, {w: c * value for w, c in self.terms.items()})
        other = self._coerce(other)
        out: Dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return NCPoly(self.names, out)

    def __rmul__(self, other: Scalar) -> NCPoly:
        return self * other

    def __truediv__(self, other: Scalar) -> NCPoly:
        return self * (1 / Fraction(other))

    def __pow__(self, exponent: int) -> NCPoly:
        result = NCPoly.constant(self.names, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NCPoly.constant(self.names, other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def evaluate(self, images: Union[Mapping[str, T], Sequence[T]], unit: T) -> T:
        """Substitute generator images and sum, sharing common word prefixes.

        Works for any image type with ``+``, ``*`` and scalar ``*``:
        matrices, diagram elements or other polynomials.
        """
        if isinstance(images, Mapping):
            lookup = [images.get(n) for n in self.names]
        else:
            lookup = list(images)
        cache: Dict[Word, T] = {(): unit}

        def value(word: Word) -> T:
            found = cache.get(word)
            if found is None:
                image = lookup[word[-1]]
                if image is None:
                    raise KeyError(f"no image for generator {self.names[word[-1]]!r}")
                found = value(word[:-1]) * image
                cache[word] = found
            return found

        total = None
        for word, coef in sorted(self.terms.items()):
            term = value(word) * coef
            total = term if total is None else total + term
        return total if total is not None else unit * 0

    def substitute(self, images: Mapping[str, NCPoly], names: Sequence[str]) -> NCPoly:
        """Image under the homomorphism sending each generator to a polynomial in ``names``."""
        return self.evaluate(images, NCPoly.constant(names, 1))

    def rename(self, names: Sequence[str]) -> NCPoly:
        """Same polynomial over a larger or reordered alphabet."""
        names = tuple(names)
        index = [names.index(n) for n in self.names]
        return NCPoly(names, {tuple(index[i] for i in w): c for w, c in self.terms.items()})

    def word_text(self, word: Word) -> str:
        parts = []
        for letter, run in itertools.groupby(word):
            k = len(list(run))
            parts.append(self.names[letter] + (f"^{k}" if k > 1 else ""))
        return "".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for word, coef in sorted(self.terms.items(), key=lambda t: (-len(t[0]), t[0])):
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            text = self.word_text(word)
            if not word:
                body = str(mag)
            elif mag == 1:
                body = text
            else:
                body = f"{mag} {text}"
            out.append(f"{sign} {body}")
        first = out[0]
        return " ".join([first[2:] if first.startswith("+") else "-" + first[2:]] + out[1:])

    def __repr__(self) -> str:
        return f"NCPoly({self})"


def anticommutator(x: NCPoly, y: NCPoly) -> NCPoly:
    return x * y + y * x


def commutator(x: NCPoly, y: NCPoly) -> NCPoly:
    return x * y - y * x


def generators(names: Sequence[str]) -> Tuple[NCPoly, ...]:
    return tuple(NCPoly.generator(names, n) for n in names)


# -- relation text parser ---------------------------------------------------

_PUNCT = set("+-*/^(){}[],")


class _Parser:
    def __init__(self, text: str, names: Sequence[str], substitutions: Mapping[str, Any]):
        self.names = tuple(names)
        self.subs = {
            k: (v if isinstance(v, NCPoly) else NCPoly.constant(self.names, v))
            for k, v in substitutions.items()
        }
        symbols = list(self.names) + list(self.subs)
        self.symbols = sorted(symbols, key=len, reverse=True)
        self.tokens = self._tokenize(text)
        self.pos = 0
        self.text = text

    def _error(self, message: str) -> PresentationSyntaxError:
        return PresentationSyntaxError(f"{message} in {self.text!r}")

    def _tokenize(self, text: str) -> List[Tuple[str, Any]]:
        tokens: List[Tuple[str, Any]] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in _PUNCT:
                tokens.append(("op", ch))
                i += 1
            elif ch.isdigit() or ch == ".":
                j = i
                while j < len(text) and (text[j].isdigit() or text[j] == "."):
                    j += 1
                try:
                    tokens.append(("num", Fraction(text[i:j])))
                except ValueError as e:
                    raise PresentationSyntaxError(f"bad number {text[i:j]!r}") from e
                i = j
            else:
                symbol = next((s for s in self.symbols if text.startswith(s, i)), None)
                if symbol is None:
                    raise PresentationSyntaxError(f"unknown symbol at {text[i:]!r} in {text!r}")
                tokens.append(("sym", symbol))
                i += len(symbol)
        return tokens

    def peek(self) -> Optional[Tuple[str, Any]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, op: Optional[str] = None) -> Tuple[str, Any]:
        token = self.peek()
        if token is None:
            raise self._error("unexpected end")
        if op is not None and token != ("op", op):
            raise self._error(f"expected {op!r}, got {token[1]!r}")
        self.pos += 1
        return token

    def parse(self) -> NCPoly:
        value = self.expr()
        if self.peek() is not None:
            raise self._error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self) -> NCPoly:
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> NCPoly:
        sign = 1
        while self.peek() in (("op", "+"), ("op", "-")):
            if self.take()[1] == "-":
                sign = -sign
        value = self.power()
        while True:
            token = self.peek()
            if token == ("op", "*"):
                self.take()
                value = value * self.power()
            elif token == ("op", "/"):
                self.take()
                divisor = self.power()
                if divisor.degree != 0 or divisor.is_zero():
                    raise self._error("division by a non-constant or zero")
                value = value / divisor.coefficient(())
            elif token is not None and (
                token[0] in ("num", "sym") or token in (("op", "("), ("op", "{"), ("op", "["))
            ):
                value = value * self.power()
            else:
                break
        return value * sign

    def power(self) -> NCPoly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, exponent = self.take()
            if kind != "num" or exponent.denominator != 1 or exponent < 0:
                raise self._error("exponent must be a nonnegative integer")
            base = base ** int(exponent)
        return base

    def atom(self) -> NCPoly:
        kind, value = self.take()
        if kind == "num":
            return NCPoly.constant(self.names, value)
        if kind == "sym":
            if value in self.subs:
                return self.subs[value]
            return NCPoly.generator(self.names, value)
        if value == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if value in "{[":
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("}" if value == "{" else "]")
            return anticommutator(left, right) if value == "{" else commutator(left, right)
        raise self._error(f"unexpected {value!r}")


def parse_poly(
    text: str, names: Sequence[str], substitutions: Optional[Mapping[str, Any]] = None
) -> NCPoly:
    """Parse a relation written in the usual notation.

    Supports ``+ - * /``, juxtaposition, ``^n``, parentheses, ``{X,Y}``
    (anticommutator), ``[X,Y]`` (commutator), integer/decimal/rational
    constants, and named substitutions (constants or polynomials).
    """
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        return parse_poly(lhs, names, substitutions) - parse_poly(rhs, names, substitutions)
    return _Parser(text, names, substitutions or {}).parse()


# -- relations and presentations --------------------------------------------


@dataclass(frozen=True)
class Relation:
    """A named relation ``factors[0] * factors[1] * ... = 0``.

    Keeping the factors lets matrix evaluation multiply small evaluated
    factors instead of expanding a high-degree product.
    """

    name: str
    factors: Tuple[NCPoly, ...]

    @classmethod
    def of(cls, name: str, poly: NCPoly) -> Relation:
        return cls(name, (poly,))

    @classmethod
    def characteristic(cls, name: str, expr: NCPoly, roots: Iterable[Scalar]) -> Relation:
        """``prod (expr - r)`` over the given roots."""
        return cls(name, tuple(expr - r for r in roots))

    @cached_property
    def poly(self) -> NCPoly:
        result = self.factors[0]
        for f in self.factors[1:]:
            result = result * f
        return result

    @property
    def degree(self) -> int:
        return self.poly.degree

    def evaluate(self, images: Union[Mapping[str, T], Sequence[T]], unit: T) -> T:
        result = None
        for f in self.factors:
            value = f.evaluate(images, unit)
            result = value if result is None else result * value
        return result


@dataclass(frozen=True)
class Presentation:
    """Generators, central flags and relations of a finitely presented algebra."""

    name: str
    names: Tuple[str, ...]
    relations: Tuple[Relation, ...]
    central: FrozenSet[str] = frozenset()

    def __post_init__(self) -> None:
        unknown = self.central - set(self.names)
        if unknown:
            raise ValueError(f"central generators {sorted(unknown)} are not generators")
        flags = [n in self.central for n in self.names]
        if flags != sorted(flags, reverse=True):
            raise ValueError("central generators must come first in the generator order")
        for rel in self.relations:
            for f in rel.factors:
                if f.names != self.names:
                    raise ValueError(f"relation {rel.name!r} uses generators {f.names}")

    @property
    def gens(self) -> Tuple[NCPoly, ...]:
        return generators(self.names)

    def gen(self, name: str) -> NCPoly:
        return NCPoly.generator(self.names, name)

    def parse(self, text: str, substitutions: Optional[Mapping[str, Any]] = None) -> NCPoly:
        return parse_poly(text, self.names, substitutions)

    @cached_property
    def all_relations(self) -> Tuple[Relation, ...]:
        """Declared relations plus the commutators of central generators."""
        extra = []
        for c in self.names:
            if c not in self.central:
                continue
            for g in self.names:
                if g != c:
                    extra.append(
                        Relation.of(f"central_{c}_{g}", commutator(self.gen(c), self.gen(g)))
                    )
        return self.relations + tuple(extra)

    @property
    def max_degree(self) -> int:
        return max((r.degree for r in self.all_relations), default=0)

    def relation(self, name: str) -> Relation:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)

    def without(self, *names: str, name: Optional[str] = None) -> Presentation:
        kept = tuple(r for r in self.relations if r.name not in names)
        return Presentation(name or self.name, self.names, kept, self.central)

    def with_relations(self, *relations: Relation, name: Optional[str] = None) -> Presentation:
        return Presentation(name or self.name, self.names, self.relations + relations, self.central)

    # -- YAML form ----------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        def word_text(word: Word) -> str:
            return " ".join(self.names[i] for i in word)

        return {
            "name": self.name,
            "generators": list(self.names),
            "central": [n for n in self.names if n in self.central],
            "relations": [
                {
                    "name": r.name,
                    "terms": [
                        [str(c), word_text(w)] for w, c in sorted(r.poly.terms.items())
                    ],
                }
                for r in self.relations
            ],
        }

    def to_yaml(self) -> str:
        return yaml.safe_dump(self.to_dict(), sort_keys=False, allow_unicode=True)

    @classmethod
    def from_dict(
        cls, data: Mapping[str, Any], parameters: Optional[Mapping[str, Any]] = None
    ) -> Presentation:
        """Build from the YAML layout; ``parameters`` override the document's own."""
        try:
            names = tuple(str(n) for n in data["generators"])
            central = frozenset(str(n) for n in data.get("central") or ())
            merged = {**(data.get("parameters") or {}), **(parameters or {})}
            subs = {str(k): Fraction(str(v)) for k, v in merged.items()}
            relations = []
            for i, entry in enumerate(data.get("relations") or ()):
                rel_name = str(entry.get("name", f"r{i}"))
                if "text" in entry:
                    poly = parse_poly(str(entry["text"]), names, subs)
                else:
                    terms: Dict[Word, Fraction] = {}
                    for coef, word in entry["terms"]:
                        letters = tuple(names.index(t) for t in str(word or "").split())
                        terms[letters] = terms.get(letters, 0) + Fraction(str(coef))
                    poly = NCPoly(names, terms)
                relations.append(Relation.of(rel_name, poly))
        except (KeyError, TypeError, ValueError) as e:
            raise PresentationSyntaxError(f"malformed presentation: {e}") from e
        return cls(str(data.get("name", "presentation")), names, tuple(relations), central)

    @classmethod
    def from_yaml(
        cls, text: str, parameters: Optional[Mapping[str, Any]] = None
    ) -> Presentation:
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise PresentationSyntaxError(f"invalid YAML: {e}") from e
        if not isinstance(data, Mapping):
            raise PresentationSyntaxError("presentation document must be a mapping")
        return cls.from_dict(data, parameters)

    @classmethod
    def load(
        cls, path: Union[str, Path], parameters: Optional[Mapping[str, Any]] = None
    ) -> Presentation:
        with open(path, "r", encoding="utf-8") as f:
            return cls.from_yaml(f.read(), parameters)


# -- degree-truncated quotients ---------------------------------------------


class WordCodec:
    """Monotone integer codes for words in degree-lexicographic order."""

    def __init__(self, letters: int):
        self.letters = letters
        self._offsets = [0]

    def offset(self, length: int) -> int:
        while len(self._offsets) <= length:
            k = len(self._offsets) - 1
            self._offsets.append(self._offsets[-1] + self.letters**k)
        return self._offsets[length]

    def encode(self, word: Word) -> int:
        value = 0
        n = self.letters
        for letter in word:
            value = value * n + letter
        return self.offset(len(word)) + value

    def decode(self, code: int) -> Word:
        length = 0
        while self.offset(length + 1) <= code:
            length += 1
        value = code - self.offset(length)
        out = []
        for _ in range(length):
            value, letter = divmod(value, self.letters)
            out.append(letter)
        return tuple(reversed(out))

    def count(self, max_length: int) -> int:
        """Number of words of length at most ``max_length``."""
        return self.offset(max_length + 1)


def words_of_length(letters: int, length: int) -> Iterable[Word]:
    return itertools.product(range(letters), repeat=length)


class TruncatedQuotient:
    """Span of relation instances ``x r y`` up to a degree, in echelon form.

    Raising the degree only adds the new instances, so a search over
    increasing ``L`` reuses all earlier elimination work.
    """

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        self.codec = WordCodec(len(presentation.names))
        self.echelon = SparseEchelon(highest_first=True)
        self.degree = -1
        self._relations = []
        for rel in presentation.all_relations:
            ints, _ = integral(rel.poly.terms)
            if ints:
                self._relations.append((rel.poly.degree, list(ints.items())))
        self._nf_cache: Dict[Word, Dict[int, Fraction]] = {}

    def extend(self, degree: int) -> TruncatedQuotient:
        n = self.codec.letters
        encode = self.codec.encode
        added = 0
        for rel_degree, terms in self._relations:
            start = max(0, self.degree - rel_degree + 1)
            for total in range(start, degree - rel_degree + 1):
                for left_len in range(total + 1):
                    for x in words_of_length(n, left_len):
                        for y in words_of_length(n, total - left_len):
                            vec = {encode(x + w + y): c for w, c in terms}
                            self.echelon.add(vec)
                            added += 1
        if degree > self.degree:
            self.degree = degree
            self._nf_cache.clear()
        logger.debug(
            f"{self.presentation.name}: degree {self.degree}, "
            f"{added} new instances, rank {self.echelon.rank}"
        )
        return self

    @property
    def dimension(self) -> int:
        """Words of length at most ``degree`` minus the rank of the instances."""
        return self.codec.count(self.degree) - self.echelon.rank

    def is_normal(self, word: Word) -> bool:
        return self.codec.encode(word) not in self.echelon.pivots

    def normal_words(self, max_length: int) -> List[Word]:
        n = self.codec.letters
        return [
            w
            for length in range(max_length + 1)
            for w in words_of_length(n, length)
            if self.is_normal(w)
        ]

    def normal_form_of_word(self, word: Word) -> Dict[int, Fraction]:
        if len(word) > self.degree:
            raise ValueError(f"word of length {len(word)} exceeds truncation degree {self.degree}")
        cached = self._nf_cache.get(word)
        if cached is None:
            cached = self.echelon.reduce({self.codec.encode(word): 1})
            self._nf_cache[word] = cached
        return cached

    def normal_form(self, poly: NCPoly) -> Dict[int, Fraction]:
        if poly.degree > self.degree:
            raise ValueError(f"degree {poly.degree} exceeds truncation degree {self.degree}")
        vec = {self.codec.encode(w): c for w, c in poly.terms.items()}
        return self.echelon.reduce(vec)

    def closes(self, basis: Sequence[Word]) -> bool:
        """Whether every ``g * b`` has a normal form supported on ``basis``."""
        codes = {self.codec.encode(b) for b in basis}
        for b in basis:
            if len(b) + 1 > self.degree:
                return False
            for g in range(self.codec.letters):
                if not set(self.normal_form_of_word((g,) + b)) <= codes:
                    return False
        return True


def truncated_dim(presentation: Presentation, degree: int) -> int:
    """Dimension of the degree-``degree`` word space modulo relation instances."""
    if degree < presentation.max_degree:
        raise ValueError(f"degree {degree} is below the largest relation degree")
    return TruncatedQuotient(presentation).extend(degree).dimension


@dataclass
class Certificate:
    """A word basis closed under the generators, with their action matrices.

    Column ``j`` of ``actions[g]`` holds the coordinates of ``g * basis[j]``.
    """

    presentation: Presentation
    basis: Tuple[Word, ...]
    degree: int
    actions: Dict[str, Matrix]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def unit_index(self) -> int:
        return self.basis.index(())

    def basis_text(self) -> List[str]:
        names = self.presentation.names
        return [NCPoly(names).word_text(w) or "1" for w in self.basis]

    def _unit_column(self, operator: Matrix) -> List[Fraction]:
        j = self.unit_index
        return [operator[i, j] for i in range(operator.rows)]

    def operator(self, poly: Union[NCPoly, Relation]) -> Matrix:
        """Left-multiplication operator of ``poly`` on the basis."""
        return poly.evaluate(self.actions, Matrix.identity(self.dimension))

    def coordinates(self, poly: Union[NCPoly, Relation]) -> List[Fraction]:
        """Coordinates of ``poly`` (times the unit) in the basis."""
        if not self.basis:
            return []
        return self._unit_column(self.operator(poly))

    def reduces_to_zero(self, poly: Union[NCPoly, Relation]) -> bool:
        return not any(self.coordinates(poly))

    def word_operator(self, word: Word) -> Matrix:
        names = self.presentation.names
        result = Matrix.identity(self.dimension)
        for letter in word:
            result = result @ self.actions[names[letter]]
        return result


def certify_basis(quotient: TruncatedQuotient, basis: Sequence[Word]) -> Optional[Certificate]:
    """Certificate for ``basis`` at the quotient's degree, or None if it does not close."""
    basis = tuple(tuple(b) for b in basis)
    if basis and () not in basis:
        raise ValueError("a candidate basis must contain the empty word")
    if any(len(b) + 1 > quotient.degree for b in basis):
        return None
    span = SparseEchelon(track=True)
    for b in basis:
        span.add(quotient.normal_form_of_word(b))
    names = quotient.presentation.names
    d = len(basis)
    actions: Dict[str, Matrix] = {}
    for g, name in enumerate(names):
        columns = []
        for b in basis:
            coords = span.express(quotient.normal_form_of_word((g,) + b))
            if coords is None:
                return None
            columns.append([coords.get(i, Fraction(0)) for i in range(d)])
        actions[name] = Matrix.from_rows([list(r) for r in zip(*columns)]) if d else Matrix.zeros(0)
    return Certificate(quotient.presentation, basis, quotient.degree, actions)


def certify_closure(presentation: Presentation, basis: Sequence[Word], degree: int) -> bool:
    """True proves ``dim <= len(basis)``; False is inconclusive (raise the degree)."""
    quotient = TruncatedQuotient(presentation).extend(degree)
    return certify_basis(quotient, basis) is not None


def certified_dimension(
    presentation: Presentation,
    target: Optional[int] = None,
    lmin: int = DEFAULT_LMIN,
    lmax: int = DEFAULT_LMAX,
    basis: Optional[Sequence[Word]] = None,
) -> Certificate:
    """Smallest closed normal-word basis found with increasing truncation degree.

    The search stops at the first certificate when no ``target`` is given,
    otherwise as soon as the certified bound reaches ``target``.

    Raises:
        InconclusiveError: if no basis closes by degree ``lmax``.
    """
    start = max(lmin, 1 + presentation.max_degree)
    quotient = TruncatedQuotient(presentation)
    best: Optional[Certificate] = None
    for degree in range(start, max(start, lmax) + 1):
        quotient.extend(degree)
        if basis is not None:
            found = certify_basis(quotient, basis)
        elif not quotient.is_normal(()):
            # the unit lies in the ideal
            found = certify_basis(quotient, ())
        else:
            found = None
            for m in range(degree):
                candidate = quotient.normal_words(m)
                if best is not None and len(candidate) >= best.dimension:
                    break
                if quotient.closes(candidate):
                    found = certify_basis(quotient, candidate)
                    break
        if found is not None and (best is None or found.dimension < best.dimension):
            best = found
            logger.debug(f"{presentation.name}: bound {best.dimension} at degree {degree}")
        if best is not None and (target is None or best.dimension <= target):
            return best
    if best is None:
        raise InconclusiveError(
            f"{presentation.name}: no closed basis up to degree {max(start, lmax)}",
            degree=max(start, lmax),
        )
    return best


def structure_constants(
    source: Union[Certificate, Presentation],
    basis: Optional[Sequence[Word]] = None,
    degree: Optional[int] = None,
) -> List[List[List[Fraction]]]:
    """``table[i][j][k]``: coefficient of ``basis[k]`` in ``basis[i] * basis[j]``.

    Takes a certificate, or a presentation with a candidate basis and degree.

    Raises:
        ReductionError: if some product does not reduce into the span of ``basis``.
    """
    if isinstance(source, Certificate):
        certificate = source
    else:
        if basis is None or degree is None:
            raise ValueError("a presentation needs a basis and a degree")
        found = certify_basis(TruncatedQuotient(source).extend(degree), basis)
        if found is None:
            raise ReductionError(f"{source.name}: basis does not close at degree {degree}")
        certificate = found
    d = certificate.dimension
    table = []
    for bi in certificate.basis:
        op = certificate.word_operator(bi)
        table.append([[op[k, j] for k in range(d)] for j in range(d)])
    return table


def regular_representation(certificate: Certificate) -> List[Matrix]:
    """Left-multiplication matrices of the basis elements."""
    return [certificate.word_operator(b) for b in certificate.basis]


def check_homomorphism(
    source: Presentation,
    images: Mapping[str, NCPoly],
    target: Union[Presentation, Certificate],
    target_basis: Optional[Sequence[Word]] = None,
    degree: Optional[int] = None,
    lmax: int = DEFAULT_LMAX,
) -> bool:
    """Whether every source relation maps to zero in the target algebra.

    The images act through the target's regular representation. A zero
    result proves membership in the ideal; a nonzero result refutes the map
    whenever the target basis is a genuine basis (its size matches a known
    lower bound).

    Raises:
        InconclusiveError: if the target admits no closed basis.
    """
    if isinstance(target, Certificate):
        certificate = target
    elif degree is not None:
        quotient = TruncatedQuotient(target).extend(degree)
        if target_basis is None:
            target_basis = quotient.normal_words(degree - 1)
        certificate = certify_basis(quotient, target_basis)
        if certificate is None:
            raise InconclusiveError(f"{target.name}: basis does not close at degree {degree}", degree)
    else:
        certificate = certified_dimension(target, lmax=lmax, basis=target_basis)
    unit = Matrix.identity(certificate.dimension)
    mapped = {name: poly.evaluate(certificate.actions, unit) for name, poly in images.items()}
    j = certificate.unit_index if certificate.basis else None
    for rel in source.all_relations:
        value = rel.evaluate(mapped, unit)
        if j is not None and any(value[i, j] for i in range(value.rows)):
            logger.info(f"{source.name} -> {certificate.presentation.name}: {rel.name} survives")
            return False
    return True


def compose_maps(
    first: Mapping[str, NCPoly], second: Mapping[str, NCPoly], names: Sequence[str]
) -> Dict[str, NCPoly]:
    """``second ∘ first`` on generators; ``names`` is the final alphabet."""
    return {g: poly.substitute(second, names) for g, poly in first.items()}


def evaluate_relations(
    presentation: Presentation, images: Mapping[str, T], unit: T, is_zero: Callable[[T], bool]
) -> Dict[str, bool]:
    """Per-relation vanishing of the relations under concrete images."""
    return {r.name: is_zero(r.evaluate(images, unit)) for r in presentation.all_relations}


__all__ = [
    "Word",
    "NCPoly",
    "anticommutator",
    "commutator",
    "generators",
    "parse_poly",
    "Relation",
    "Presentation",
    "WordCodec",
    "TruncatedQuotient",
    "truncated_dim",
    "Certificate",
    "certify_basis",
    "certify_closure",
    "certified_dimension",
    "structure_constants",
    "regular_representation",
    "check_homomorphism",
    "compose_maps",
    "evaluate_relations",
]
