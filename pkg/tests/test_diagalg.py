"""Tests for three-strand diagram algebras and their isomorphism checks."""

import itertools
from fractions import Fraction

import pytest

from centralizer import diagalg
from centralizer.diagalg import (
    BRAUER_BASIS_WORDS,
    BrauerDiagram,
    DiagElement,
    DiagramAlgebra,
    btl_presentation,
    bundled_presentation,
    central_spectrum,
    compose,
    enumerate_diagrams,
    render,
    sign_character,
    trivial_character,
    verify_bB_iso,
    verify_brauer_iso,
    verify_btl_iso,
    verify_tl_iso,
)
from centralizer.errors import ExcludedCaseError
from centralizer.exact import Matrix
from centralizer.su2rep import Spin


@pytest.fixture(scope="module")
def brauer():
    """B3(3)."""
    return DiagramAlgebra(3)


@pytest.fixture(scope="module")
def temperley_lieb():
    """TL3 with loop value 2."""
    return DiagramAlgebra(2, planar=True)


class TestBrauerDiagram:
    """Test perfect matchings on six points."""

    def test_enumeration(self):
        """Test there are 15 diagrams, 5 of them planar."""
        all_diagrams = enumerate_diagrams()

        assert len(all_diagrams) == 15
        assert len(set(all_diagrams)) == 15
        assert len(enumerate_diagrams(planar_only=True)) == 5
        assert BrauerDiagram.identity() in enumerate_diagrams(planar_only=True)

    def test_canonical_form(self):
        """Test pair order and orientation do not matter."""
        assert BrauerDiagram(((5, 2), (1, 3), (4, 0))) == BrauerDiagram(((0, 4), (1, 3), (2, 5)))

    def test_not_a_matching(self):
        """Test invalid pairings are rejected."""
        with pytest.raises(ValueError):
            BrauerDiagram(((0, 1), (1, 2), (3, 4)))
        with pytest.raises(ValueError):
            BrauerDiagram(((0, 1), (2, 3)))

    def test_labels(self):
        """Test primed labels denote bottom points."""
        diagram = BrauerDiagram.from_labels([("1", "2'"), ("2", "1'"), ("3", "3'")])

        assert diagram == BrauerDiagram.crossing(1)
        assert render(diagram) == "{(1,2'),(2,1'),(3,3')}"
        assert str(BrauerDiagram.cup_cap(1)) == "{(1,2),(3,3'),(1',2')}"

    def test_planarity(self):
        """Test crossings are the only non-planar generators."""
        assert BrauerDiagram.identity().is_planar
        assert BrauerDiagram.cup_cap(1).is_planar
        assert BrauerDiagram.cup_cap(2).is_planar
        assert not BrauerDiagram.crossing(1).is_planar

    def test_permutations(self):
        """Test permutation diagrams and their signs."""
        assert BrauerDiagram.crossing(2).is_permutation
        assert BrauerDiagram.crossing(2).permutation_sign == -1
        assert BrauerDiagram.identity().permutation_sign == 1
        assert not BrauerDiagram.cup_cap(1).is_permutation


class TestCompose:
    """Test stacking diagrams and counting loops."""

    def test_identity(self):
        """Test the identity is neutral."""
        x = BrauerDiagram.cup_cap(2)

        assert compose(BrauerDiagram.identity(), x) == (x, 0)
        assert compose(x, BrauerDiagram.identity()) == (x, 0)

    def test_cup_cap_squared(self):
        """Test e_i e_i closes one loop."""
        e1 = BrauerDiagram.cup_cap(1)

        assert compose(e1, e1) == (e1, 1)

    def test_crossing_squared(self):
        """Test s_i s_i is the identity."""
        s1 = BrauerDiagram.crossing(1)

        assert compose(s1, s1) == (BrauerDiagram.identity(), 0)

    def test_crossing_absorbed(self):
        """Test s_1 e_1 = e_1."""
        assert compose(BrauerDiagram.crossing(1), BrauerDiagram.cup_cap(1)) == (
            BrauerDiagram.cup_cap(1),
            0,
        )

    def test_associative_with_loop_counts(self):
        """Test (xy)z = x(yz) with equal loop counts over all 15^3 triples."""
        diagrams = enumerate_diagrams()

        for x, y, z in itertools.product(diagrams, repeat=3):
            xy, loops_xy = compose(x, y)
            left, loops_left = compose(xy, z)
            yz, loops_yz = compose(y, z)
            right, loops_right = compose(x, yz)
            assert left == right, (x, y, z)
            assert loops_xy + loops_left == loops_yz + loops_right, (x, y, z)

    def test_planar_diagrams_are_closed(self):
        """Test products of planar diagrams stay planar."""
        planar = enumerate_diagrams(planar_only=True)

        for x, y in itertools.product(planar, repeat=2):
            assert compose(x, y)[0].is_planar, (x, y)


class TestDiagramAlgebra:
    """Test the Brauer and Temperley-Lieb relations."""

    def test_temperley_lieb_relations(self, temperley_lieb):
        """Test e_i^2 = 2 e_i and e1 e2 e1 = e1."""
        e1, e2 = temperley_lieb.e(1), temperley_lieb.e(2)

        assert e1 * e1 == 2 * e1
        assert e1 * e2 * e1 == e1
        assert e2 * e1 * e2 == e2
        assert set(temperley_lieb.generators) == {"e1", "e2"}

    def test_planar_algebra_has_no_crossings(self, temperley_lieb):
        """Test crossings are unavailable in TL."""
        with pytest.raises(ValueError):
            temperley_lieb.s(1)

    def test_brauer_relations(self, brauer):
        """Test the defining relations of B3(3)."""
        e1, e2, s1, s2 = brauer.e(1), brauer.e(2), brauer.s(1), brauer.s(2)

        assert e1 * e1 == 3 * e1
        assert s1 * s1 == 1
        assert s1 * e1 == e1
        assert e1 * s1 == e1
        assert s1 * s2 * s1 == s2 * s1 * s2
        assert s1 * e2 * e1 == s2 * e1

    def test_bundled_presentation_holds(self, brauer):
        """Test the bundled B3 relations vanish on the diagrams."""
        presentation = bundled_presentation("brauer3")
        images = brauer.generators

        for relation in presentation.relations:
            assert relation.evaluate(images, brauer.one).is_zero(), relation.name

    def test_scalar_arithmetic(self, brauer):
        """Test scalars act as multiples of the identity diagram."""
        e1 = brauer.e(1)

        assert (2 - e1) + e1 == 2
        assert (e1 - e1).is_zero()
        assert (3 * e1).coefficient(BrauerDiagram.cup_cap(1)) == 3

    def test_loop_values_must_agree(self, brauer, temperley_lieb):
        """Test elements of different algebras do not multiply."""
        with pytest.raises(ValueError):
            brauer.e(1) * temperley_lieb.e(1)

    def test_rank_and_centrality(self, brauer):
        """Test rank of spanning sets and central elements."""
        assert brauer.rank([brauer.one, brauer.e(1), 2 * brauer.e(1)]) == 2
        assert brauer.is_central(brauer.one)
        assert not brauer.is_central(brauer.e(1))

    def test_left_regular_matrix(self, brauer):
        """Test left multiplication by the unit is the identity."""
        assert brauer.left_regular_matrix(brauer.one) == Matrix.identity(15)

    @pytest.mark.parametrize("algebra", ["brauer", "temperley_lieb"])
    def test_associative(self, algebra, request):
        """Test (xy)z = x(yz) on every triple of basis diagrams."""
        alg = request.getfixturevalue(algebra)
        elements = [DiagElement.of(d, alg.delta) for d in alg.basis]

        for x, y, z in itertools.product(elements, repeat=3):
            assert (x * y) * z == x * (y * z)

    def test_characters(self, brauer):
        """Test the trivial and sign characters on generators."""
        assert trivial_character(brauer.s(1)) == 1
        assert sign_character(brauer.s(1)) == -1
        assert trivial_character(brauer.e(1)) == 0
        assert sign_character(DiagElement.unit(3) + brauer.s(2)) == 0

    def test_central_spectrum(self):
        """Test spectra that do and do not split over the candidates."""
        m = Matrix.diagonal([1, 4, 4])

        assert central_spectrum(m, [1, 4, 9]) == [1, 4]
        assert central_spectrum(m, [1, 9]) is None


class TestIsomorphisms:
    """Test the diagram algebra identifications."""

    def test_temperley_lieb(self):
        """Test the (1/2,1/2,1/2) quotient is TL3."""
        report = verify_tl_iso()

        assert report.verified, report.checks
        assert report.details["central_roots"] == ["1", "4"]
        assert report.checks["abstract_dimension"]
        assert report.checks["racah_homomorphism"]
        assert report.details["certified"] is True

    @pytest.mark.slow
    def test_brauer(self):
        """Test the (1,1,1) quotient is B3(3)."""
        report = verify_brauer_iso()

        assert report.verified, report.checks
        assert report.details["basis_rank"] == len(BRAUER_BASIS_WORDS) == 15
        assert report.checks["racah_homomorphism"]

    def test_btl_j1(self):
        """Test the (1,1/2,1/2) quotient is btl(1)."""
        report = verify_btl_iso(Spin.parse("1"))

        assert report.verified, report.checks
        assert report.details["z"] == "3/2"
        assert report.checks["racah_homomorphism"]

    @pytest.mark.slow
    @pytest.mark.parametrize("j", ["3/2", "2"])
    def test_btl(self, j):
        """Test larger one-boundary Temperley-Lieb cases."""
        assert verify_btl_iso(Spin.parse(j)).verified

    def test_btl_excluded(self):
        """Test j = 1/2 is excluded."""
        with pytest.raises(ExcludedCaseError):
            verify_btl_iso(Spin.parse("1/2"))

    def test_btl_presentation(self):
        """Test the loop value of btl(j)."""
        p = btl_presentation(Spin.parse("2"))
        s0 = p.gen("s0")

        assert p.name == "btl(2)"
        assert p.relation("s0_square").poly == s0 * s0 - Fraction(5, 4) * s0

    @pytest.mark.slow
    def test_one_boundary_brauer(self):
        """Test the (1/2,1,1) quotient is the one-boundary Brauer algebra."""
        report = verify_bB_iso()

        assert report.verified, report.checks

    def test_uncertified_basis_is_not_a_homomorphism(self, monkeypatch):
        """Test a basis that never closes fails both abstract checks."""
        monkeypatch.setattr(diagalg, "_certify", lambda presentation, target, lmax: None)

        report = verify_tl_iso()

        assert report.details["certified"] is False
        assert not report.checks["abstract_dimension"]
        assert not report.checks["racah_homomorphism"]
        assert report.checks["racah_relations"]
        assert not report.verified
