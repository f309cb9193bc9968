"""Tests for finitely presented algebras and closure certificates."""

import itertools
from fractions import Fraction

import pytest

from centralizer.config import PRESENTATIONS_DIR
from centralizer.diagalg import btl_presentation, bundled_presentation
from centralizer.errors import InconclusiveError, PresentationSyntaxError, ReductionError
from centralizer.ncalg import (
    NCPoly,
    Presentation,
    Relation,
    TruncatedQuotient,
    WordCodec,
    anticommutator,
    certified_dimension,
    certify_closure,
    check_homomorphism,
    commutator,
    compose_maps,
    generators,
    parse_poly,
    regular_representation,
    structure_constants,
    truncated_dim,
)
from centralizer.racah import FULL_NAMES, build_quotient
from centralizer.su2rep import Spin

AB = ("A", "B")


@pytest.fixture
def involution():
    """The algebra generated by x with x^2 = 1."""
    return Presentation("Z2", ("x",), (Relation.of("square", parse_poly("x^2 = 1", ("x",))),))


@pytest.fixture
def dual_numbers_squared():
    """Commuting a, b with a^2 = b^2 = 0."""
    names = ("a", "b")
    texts = {"a_square": "a^2", "b_square": "b^2", "commute": "[a, b]"}
    relations = tuple(Relation.of(k, parse_poly(t, names)) for k, t in texts.items())
    return Presentation("D2", names, relations)


@pytest.fixture(scope="module")
def half_cube_certificate():
    """The (1/2)^3 quotient over C, A, B certified on {1, A, B, AB, BA}."""
    half = Spin.parse("1/2")
    quotient = build_quotient(half, half, half).presentation
    a, b = FULL_NAMES.index("A"), FULL_NAMES.index("B")
    return certified_dimension(quotient, basis=[(), (a,), (b,), (a, b), (b, a)])


class TestNCPoly:
    """Test noncommutative polynomial arithmetic."""

    def test_noncommutative_product(self):
        """Test AB and BA are different words."""
        A, B = generators(AB)

        assert A * B != B * A
        assert (A * B).terms == {(0, 1): 1}
        assert commutator(A, B) == A * B - B * A
        assert anticommutator(A, B) == A * B + B * A

    def test_scalars(self):
        """Test scalar coercion and comparison."""
        A, _ = generators(AB)

        assert (A - A) == 0
        assert (A + 2 - A) == 2
        assert (3 - A).coefficient(()) == 3
        assert (A / 2).coefficient((0,)) == Fraction(1, 2)
        assert (A + 1) ** 2 == A * A + 2 * A + 1

    def test_degree_and_zero(self):
        """Test degree and zero detection."""
        A, B = generators(AB)

        assert (A * B * A + B).degree == 3
        assert NCPoly(AB).is_zero()
        assert NCPoly(AB).degree == 0

    def test_mismatched_alphabets(self):
        """Test polynomials over different generators do not mix."""
        with pytest.raises(ValueError):
            NCPoly.generator(AB, "A") + NCPoly.generator(("A",), "A")

    def test_evaluate_on_polynomials(self):
        """Test substitution by polynomials."""
        A, B = generators(AB)
        p = A * B - 2 * B

        swapped = p.substitute({"A": B, "B": A}, AB)
        assert swapped == B * A - 2 * A

    def test_rename(self):
        """Test moving a polynomial to a larger alphabet."""
        p = parse_poly("A B", AB).rename(("C", "A", "B"))

        assert p.terms == {(1, 2): 1}

    def test_str(self):
        """Test printed form."""
        A, B = generators(AB)

        assert str(NCPoly(AB)) == "0"
        assert str(A * A * B - 1) == "A^2B - 1"


class TestParser:
    """Test the relation text parser."""

    def test_juxtaposition_and_powers(self):
        """Test juxtaposition multiplies and ^ raises powers."""
        A, B = generators(AB)

        assert parse_poly("AB", AB) == A * B
        assert parse_poly("2 A^2 B", AB) == 2 * A * A * B
        assert parse_poly("(A + B)^2", AB) == (A + B) * (A + B)

    def test_brackets(self):
        """Test anticommutator and commutator notation."""
        A, B = generators(AB)

        assert parse_poly("{A, B}", AB) == A * B + B * A
        assert parse_poly("[A, B]", AB) == A * B - B * A

    def test_equation(self):
        """Test lhs = rhs becomes lhs - rhs."""
        A, B = generators(AB)

        assert parse_poly("A^2 = B + 1/2", AB) == A * A - B - Fraction(1, 2)

    def test_rational_constants(self):
        """Test fractions and decimals."""
        A, _ = generators(AB)

        assert parse_poly("3/4 A", AB) == Fraction(3, 4) * A
        assert parse_poly("0.5 A", AB) == Fraction(1, 2) * A
        assert parse_poly("-A - -A", AB) == 0

    def test_substitutions(self):
        """Test named constants and polynomial substitutions."""
        A, B = generators(AB)
        subs = {"x2": Fraction(9, 4), "s": A + B}

        assert parse_poly("x2 A", AB, subs) == Fraction(9, 4) * A
        assert parse_poly("s^2", AB, subs) == (A + B) * (A + B)

    @pytest.mark.parametrize("text", ["A +* B", "A^B", "(A + B", "Q A", "{A B}", "A / B"])
    def test_syntax_errors(self, text):
        """Test malformed relations are rejected."""
        with pytest.raises(PresentationSyntaxError):
            parse_poly(text, AB)


class TestPresentation:
    """Test presentations and their YAML form."""

    def test_central_generators_come_first(self):
        """Test central generators must lead the generator order."""
        with pytest.raises(ValueError):
            Presentation("bad", ("A", "C"), (), frozenset({"C"}))

    def test_central_commutators_are_added(self):
        """Test central generators commute with every generator."""
        p = Presentation("central", ("C", "A"), (), frozenset({"C"}))

        assert [r.name for r in p.all_relations] == ["central_C_A"]
        assert p.max_degree == 2

    def test_characteristic_relation_keeps_factors(self):
        """Test a characteristic relation is a product of linear factors."""
        A, _ = generators(AB)
        rel = Relation.characteristic("char_A", A, [0, 2, 6])

        assert len(rel.factors) == 3
        assert rel.degree == 3
        assert rel.poly == A * (A - 2) * (A - 6)

    def test_without(self, dual_numbers_squared):
        """Test dropping relations by name."""
        smaller = dual_numbers_squared.without("commute")

        assert [r.name for r in smaller.relations] == ["a_square", "b_square"]

    def test_yaml_round_trip(self, dual_numbers_squared):
        """Test to_yaml and from_yaml agree."""
        loaded = Presentation.from_yaml(dual_numbers_squared.to_yaml())

        assert loaded.names == dual_numbers_squared.names
        for left, right in zip(loaded.relations, dual_numbers_squared.relations):
            assert left.poly == right.poly

    def test_parameters_override(self):
        """Test parameter overrides in documents."""
        text = "name: P\ngenerators: [x]\nparameters: {d: 2}\nrelations:\n  - {name: r, text: 'x^2 = d x'}\n"
        x = NCPoly.generator(("x",), "x")

        assert Presentation.from_yaml(text).relation("r").poly == x * x - 2 * x
        assert Presentation.from_yaml(text, {"d": "1/2"}).relation("r").poly == x * x - x / 2

    @pytest.mark.parametrize(
        "text",
        ["- just a list", "generators: [x]\nrelations:\n  - {name: r, text: 'x +'}", "{{"],
    )
    def test_malformed_documents(self, text):
        """Test malformed YAML documents."""
        with pytest.raises(PresentationSyntaxError):
            Presentation.from_yaml(text)

    def test_bundled_documents_load(self):
        """Test every bundled presentation parses."""
        stems = sorted(p.stem for p in PRESENTATIONS_DIR.glob("*.yaml"))

        assert stems == ["bB", "brauer3", "btl", "tl3"]
        for stem in stems:
            assert Presentation.load(PRESENTATIONS_DIR / f"{stem}.yaml").relations


class TestWordCodec:
    """Test the degree-lexicographic word codes."""

    def test_codes_are_monotone(self):
        """Test shorter words get smaller codes."""
        codec = WordCodec(2)

        assert codec.encode(()) == 0
        assert codec.encode((0,)) == 1
        assert codec.encode((1,)) == 2
        assert codec.encode((0, 0)) == 3
        assert codec.encode((1, 1)) == 6

    def test_decode_inverts_encode(self):
        """Test decoding recovers words."""
        codec = WordCodec(3)

        for word in [(), (2,), (0, 1), (2, 2, 0, 1)]:
            assert codec.decode(codec.encode(word)) == word
        assert codec.count(2) == 13


class TestTruncatedQuotient:
    """Test degree-truncated quotients and certificates."""

    def test_truncated_dimension(self, involution):
        """Test words up to degree L modulo relation instances."""
        assert truncated_dim(involution, 4) == 2

    def test_degree_below_relations(self, involution):
        """Test the truncation degree must reach the relation degrees."""
        with pytest.raises(ValueError):
            truncated_dim(involution, 1)

    def test_normal_words(self, dual_numbers_squared):
        """Test the largest word of each relation is eliminated."""
        quotient = TruncatedQuotient(dual_numbers_squared).extend(4)

        assert quotient.normal_words(2) == [(), (0,), (1,), (0, 1)]
        assert quotient.is_normal((0, 1))
        assert not quotient.is_normal((1, 0))

    def test_certified_dimension(self, involution, dual_numbers_squared):
        """Test certified dimensions of small algebras."""
        assert certified_dimension(involution).dimension == 2
        cert = certified_dimension(dual_numbers_squared)
        assert cert.dimension == 4
        assert cert.basis_text() == ["1", "a", "b", "ab"]

    def test_unit_in_ideal(self):
        """Test an algebra presented as zero."""
        x = NCPoly.generator(("x",), "x")
        p = Presentation("zero", ("x",), (Relation.of("r", x * x - x - 1), Relation.of("s", x)))

        assert certified_dimension(p).dimension == 0

    def test_inconclusive(self):
        """Test a free algebra never closes."""
        free = Presentation("free", ("x",), ())

        with pytest.raises(InconclusiveError) as exc:
            certified_dimension(free, lmin=2, lmax=5)
        assert exc.value.degree == 5

    def test_certify_closure(self, involution):
        """Test closure of an explicit basis."""
        assert certify_closure(involution, [(), (0,)], 3)
        assert not certify_closure(involution, [()], 3)

    def test_candidate_basis_needs_unit(self, involution):
        """Test a candidate basis must contain the empty word."""
        with pytest.raises(ValueError):
            certified_dimension(involution, basis=[(0,)])

    def test_reduces_to_zero(self, involution):
        """Test reduction through the certificate."""
        cert = certified_dimension(involution)
        x = NCPoly.generator(("x",), "x")

        assert cert.reduces_to_zero(x**4 - 1)
        assert not cert.reduces_to_zero(x**3 - 1)
        assert cert.coordinates(x**3 + 2) == [2, 1]

    def test_temperley_lieb(self):
        """Test the bundled three-strand Temperley-Lieb algebra has dimension 5."""
        tl = Presentation.load(PRESENTATIONS_DIR / "tl3.yaml")

        assert certified_dimension(tl, target=5).dimension == 5

    @pytest.mark.parametrize(
        "presentation,degree,expected",
        [
            (lambda: bundled_presentation("tl3"), 5, 5),
            (lambda: btl_presentation(Spin.parse("1")), 6, 6),
            (lambda: bundled_presentation("bB"), 6, 9),
        ],
        ids=["tl3", "btl(1)", "bB"],
    )
    def test_truncated_dimension_of_diagram_algebras(self, presentation, degree, expected):
        """Test the truncated bound already meets the diagram algebra dimension."""
        assert truncated_dim(presentation(), degree) == expected

    def test_truncated_dimension_drops_with_relations(self, dual_numbers_squared):
        """Test adding relations never raises the truncated dimension."""
        commuting = dual_numbers_squared.without("a_square", "b_square")

        assert truncated_dim(dual_numbers_squared, 4) <= truncated_dim(commuting, 4)

    def test_free_algebra_never_closes(self):
        """Test {1} is not closed in the free algebra."""
        assert not certify_closure(Presentation("free", AB, ()), [()], 4)

    @pytest.mark.slow
    def test_half_cube_quotient_basis(self, half_cube_certificate):
        """Test {1, A, B, AB, BA} closes in the (1/2)^3 quotient."""
        assert half_cube_certificate.dimension == 5
        assert half_cube_certificate.basis_text() == ["1", "A", "B", "AB", "BA"]


class TestStructure:
    """Test structure constants and homomorphism checks."""

    def test_structure_constants(self, involution):
        """Test the multiplication table of Z2."""
        table = structure_constants(involution, basis=[(), (0,)], degree=3)

        assert table[0][1] == [0, 1]
        assert table[1][1] == [1, 0]

    def test_structure_constants_need_closure(self, involution):
        """Test a basis that does not close is rejected."""
        with pytest.raises(ReductionError):
            structure_constants(involution, basis=[()], degree=3)
        with pytest.raises(ValueError):
            structure_constants(involution)

    def test_regular_representation(self, involution):
        """Test left multiplication matrices."""
        cert = certified_dimension(involution)
        unit, x = regular_representation(cert)

        assert unit.to_rows() == [[1, 0], [0, 1]]
        assert (x @ x) == unit

    def test_check_homomorphism(self, involution):
        """Test maps that do and do not respect the relation."""
        x = NCPoly.generator(("x",), "x")
        cert = certified_dimension(involution)

        assert check_homomorphism(involution, {"x": -x}, cert)
        assert not check_homomorphism(involution, {"x": 2 * x}, cert)
        assert check_homomorphism(involution, {"x": -x}, involution, degree=3)

    def test_compose_maps(self):
        """Test composing generator maps."""
        A, B = generators(AB)
        swap = {"A": B, "B": A}

        twice = compose_maps(swap, swap, AB)
        assert twice == {"A": A, "B": B}

    @pytest.mark.slow
    def test_aba_structure_constants(self, half_cube_certificate):
        """Test (AB) A = 2AB + 2BA - 3A - 4B + 6."""
        table = structure_constants(half_cube_certificate)

        assert table[3][1] == [6, -3, -4, 2, 2]
        assert table[1][2] == [0, 0, 0, 1, 0]

    @pytest.mark.parametrize(
        "presentation",
        [lambda: bundled_presentation("tl3"), lambda: btl_presentation(Spin.parse("1"))],
        ids=["tl3", "btl(1)"],
    )
    def test_structure_constants_are_associative(self, presentation):
        """Test (b_i b_j) b_k = b_i (b_j b_k) over a certified basis."""
        table = structure_constants(certified_dimension(presentation()))
        d = len(table)

        for i, j, k in itertools.product(range(d), repeat=3):
            left = [sum(table[i][j][m] * table[m][k][n] for m in range(d)) for n in range(d)]
            right = [sum(table[j][k][m] * table[i][m][n] for m in range(d)) for n in range(d)]
            assert left == right, (i, j, k)

    @pytest.mark.slow
    def test_one_boundary_brauer_reduction(self):
        """Test e1 e0 e1 = 3/2 e1 in the one-boundary Brauer algebra."""
        bB = bundled_presentation("bB")
        e0, e1 = bB.gen("e0"), bB.gen("e1")
        cert = certified_dimension(bB, target=9)

        assert cert.dimension == 9
        assert cert.reduces_to_zero(e1 * e0 * e1 - Fraction(3, 2) * e1)
