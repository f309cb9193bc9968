"""Tests for Bratteli diagrams, coupling sets and centralizer dimensions."""

from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, product

import pytest

from centralizer.bratteli import (
    build_bratteli,
    centralizer_dim,
    coupling_sets,
    m_set,
    multiplicities,
    tensor_decompose,
)
from centralizer.su2rep import Spin, build_context, spectrum_difference, spins

HALF_INTEGERS = ("0", "1/2", "1", "3/2", "2")


def weight_multiplicities(triple):
    """Irreducible multiplicities from weight counting.

    The multiplicity of spin l is the number of weight-l vectors minus the
    number of weight-(l+1) vectors.
    """
    weights = Counter(
        sum(ms)
        for ms in product(*[[j.twice - 2 * i for i in range(j.dim)] for j in triple])
    )
    top = max(weights)
    return {
        Spin(twice=w): weights[w] - weights.get(w + 2, 0)
        for w in range(top % 2, top + 1, 2)
        if weights[w] - weights.get(w + 2, 0)
    }


def as_set(values):
    return {Fraction(v) for v in values}


class TestTensorDecompose:
    """Test Clebsch-Gordan decomposition of two spins."""

    def test_half_times_half(self):
        """Test [1] x [1] = [0] + [2]."""
        assert tensor_decompose(*spins("1/2", "1/2")) == list(spins("0", "1"))

    def test_range(self):
        """Test |j1 - j2| to j1 + j2 in unit steps."""
        assert tensor_decompose(*spins("3/2", "1")) == list(spins("1/2", "3/2", "5/2"))
        assert tensor_decompose(*spins("0", "2")) == [Spin.parse("2")]


class TestBratteli:
    """Test the three-row Bratteli diagram."""

    @pytest.mark.parametrize(
        "triple,bottom",
        [
            (("1/2", "1/2", "1/2"), [("1/2", 2), ("3/2", 1)]),
            (("1", "1", "1"), [("0", 1), ("1", 3), ("2", 2), ("3", 1)]),
            (
                ("3/2", "3/2", "3/2"),
                [("1/2", 2), ("3/2", 4), ("5/2", 3), ("7/2", 2), ("9/2", 1)],
            ),
        ],
    )
    def test_bottom_row(self, triple, bottom):
        """Test bottom spins and their multiplicities."""
        data = build_bratteli(*spins(*triple))

        assert [(str(s), d) for s, d in data.bottom] == bottom

    def test_edges_and_rendering(self):
        """Test edges join each middle spin to its decomposition."""
        data = build_bratteli(*spins("1/2", "1/2", "1/2"))

        assert [str(k) for k in data.middle] == ["0", "1"]
        assert len(data.edges) == 3
        lines = data.lines()
        assert lines[0] == "top:    [1]"
        assert "[1]x2" in lines[2]
        assert data.to_dict()["bottom"][1] == {"spin": "3/2", "multiplicity": 1}

    @pytest.mark.parametrize("triple", list(combinations_with_replacement(HALF_INTEGERS, 3)))
    def test_multiplicities_match_weight_counting(self, triple):
        """Test multiplicities against an independent weight count."""
        parsed = spins(*triple)

        assert multiplicities(*parsed) == weight_multiplicities(parsed)


class TestCentralizerDim:
    """Test the sum of squared multiplicities."""

    @pytest.mark.parametrize(
        "triple,expected",
        [
            (("1/2", "1/2", "1/2"), 5),
            (("1", "1", "1"), 15),
            (("1", "1/2", "1/2"), 6),
            (("3/2", "1/2", "1/2"), 6),
            (("2", "1/2", "1/2"), 6),
            (("1/2", "1", "1"), 9),
            (("3/2", "3/2", "3/2"), 34),
            (("2", "1", "1"), 19),
        ],
    )
    def test_dimension(self, triple, expected):
        """Test known centralizer dimensions."""
        assert centralizer_dim(*spins(*triple)) == expected

    def test_dimension_is_symmetric(self):
        """Test the dimension does not depend on the spin order."""
        assert centralizer_dim(*spins("1", "1/2", "3/2")) == centralizer_dim(
            *spins("3/2", "1", "1/2")
        )

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "triple", list(combinations_with_replacement((*HALF_INTEGERS, "5/2"), 3))
    )
    def test_dimension_matches_weight_counting(self, triple):
        """Test sum d^2 against the weight-count oracle for spins up to 5/2."""
        parsed = spins(*triple)

        oracle = weight_multiplicities(parsed)

        assert centralizer_dim(*parsed) == sum(d * d for d in oracle.values())


class TestCouplingSets:
    """Test the admissible intermediate spins and Casimir-difference sets."""

    def test_half_cube(self):
        """Test M123 on (1/2)^3."""
        cs = coupling_sets(*spins("1/2", "1/2", "1/2"))

        assert as_set(cs.M123) == {Fraction(7, 4), Fraction(-5, 4), Fraction(3, 4)}
        assert [str(j) for j in cs.J123] == ["1/2", "3/2"]

    def test_spin_one_cube(self):
        """Test M123 on (1,1,1)."""
        cs = coupling_sets(*spins("1", "1", "1"))

        assert as_set(cs.M123) == {-4, -2, 0, 2, 4, 6}

    def test_mixed(self):
        """Test M231 for (1, 1/2, 1/2) and (1/2, 1, 1)."""
        assert as_set(coupling_sets(*spins("1", "1/2", "1/2")).M231) == {4, 0, 2, -2}
        assert as_set(coupling_sets(*spins("1/2", "1", "1")).M231) == {
            Fraction(-9, 4),
            Fraction(-5, 4),
            Fraction(3, 4),
            Fraction(7, 4),
            Fraction(11, 4),
        }

    @pytest.mark.parametrize("j", ["1", "3/2", "2", "5/2"])
    def test_closed_forms_for_j_half_half(self, j):
        """Test the closed forms of M123 and M231 for (j, 1/2, 1/2)."""
        cs = coupling_sets(*spins(j, "1/2", "1/2"))
        v = Fraction(j)

        assert as_set(cs.M123) == {
            v + Fraction(5, 4),
            -v - Fraction(3, 4),
            v + Fraction(1, 4),
            -v + Fraction(1, 4),
        }
        assert as_set(cs.M231) == {v * (v + 3), (v + 2) * (v - 1), v * (v + 1), (v + 1) * (v - 2)}

    @pytest.mark.slow
    @pytest.mark.parametrize("triple", list(product(HALF_INTEGERS, repeat=3)))
    def test_m123_is_the_spectrum_of_k123_minus_k12(self, triple):
        """Test M123 against the eigenvalues of K123 - K12."""
        parsed = spins(*triple)
        ctx = build_context(*parsed)

        assert spectrum_difference(ctx, "123-12") == frozenset(coupling_sets(*parsed).M123)

    def test_values_are_deduplicated(self):
        """Test M sets hold distinct values."""
        values = m_set(*spins("1", "1", "1"))

        assert len(values) == len(set(values))
        assert values == sorted(values)

    def test_to_dict(self):
        """Test the serialized layout."""
        data = coupling_sets(*spins("1/2", "1/2", "1/2")).to_dict()

        assert set(data) == {"J12", "J13", "J23", "J123", "M123", "M231", "M132"}
        assert data["J12"] == ["0", "1"]
