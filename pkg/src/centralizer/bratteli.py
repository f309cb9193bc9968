"""Clebsch–Gordan combinatorics: Bratteli diagrams and coupling sets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .su2rep import Spin


def tensor_decompose(ja: Spin, jb: Spin) -> List[Spin]:
    """Spins in ``[2ja] ⊗ [2jb]``: ``|ja - jb|, ..., ja + jb``."""
    low = abs(ja.twice - jb.twice)
    return [Spin(twice=t) for t in range(low, ja.twice + jb.twice + 1, 2)]


@dataclass(frozen=True)
class BratteliData:
    """Three-row diagram of ``([2j1] ⊗ [2j2]) ⊗ [2j3]``.

    ``edges`` join middle index to bottom index; the multiplicity of a bottom
    spin is its number of incident edges.
    """

    spins: Tuple[Spin, Spin, Spin]
    middle: Tuple[Spin, ...]
    bottom: Tuple[Tuple[Spin, int], ...]
    edges: Tuple[Tuple[int, int], ...]

    @property
    def top(self) -> Spin:
        return self.spins[0]

    @property
    def multiplicities(self) -> Dict[Spin, int]:
        return dict(self.bottom)

    def edge_values(self) -> List[Fraction]:
        """``l(l+1) - k(k+1)`` for every edge, in edge order."""
        return [
            self.bottom[b][0].casimir - self.middle[m].casimir for m, b in self.edges
        ]

    def lines(self) -> List[str]:
        """Plain-text rendering, one row per line."""
        out = [f"top:    [{self.top.twice}]"]
        out.append("middle: " + "  ".join(f"[{k.twice}]" for k in self.middle))
        out.append("bottom: " + "  ".join(f"[{s.twice}]x{d}" for s, d in self.bottom))
        for m, k in enumerate(self.middle):
            targets = [self.bottom[b][0] for mm, b in self.edges if mm == m]
            out.append(f"  [{k.twice}] -> " + ", ".join(f"[{t.twice}]" for t in targets))
        return out

    def to_dict(self) -> dict:
        return {
            "spins": [str(j) for j in self.spins],
            "middle": [str(k) for k in self.middle],
            "bottom": [{"spin": str(s), "multiplicity": d} for s, d in self.bottom],
            "edges": [list(e) for e in self.edges],
        }


def build_bratteli(j1: Spin, j2: Spin, j3: Spin) -> BratteliData:
    middle = tensor_decompose(j1, j2)
    targets = [tensor_decompose(k, j3) for k in middle]
    bottom_spins = sorted({t for row in targets for t in row})
    index = {s: i for i, s in enumerate(bottom_spins)}
    edges = tuple((m, index[t]) for m, row in enumerate(targets) for t in row)
    counts = [0] * len(bottom_spins)
    for _, b in edges:
        counts[b] += 1
    return BratteliData(
        spins=(j1, j2, j3),
        middle=tuple(middle),
        bottom=tuple(zip(bottom_spins, counts)),
        edges=edges,
    )


def m_set(ja: Spin, jb: Spin, jc: Spin) -> List[Fraction]:
    """Distinct edge values of the diagram of ``(ja, jb, jc)``, sorted."""
    return sorted(set(build_bratteli(ja, jb, jc).edge_values()))


@dataclass(frozen=True)
class CouplingSets:
    """Admissible intermediate spins and Casimir-difference spectra."""

    J12: Tuple[Spin, ...]
    J13: Tuple[Spin, ...]
    J23: Tuple[Spin, ...]
    J123: Tuple[Spin, ...]
    M123: Tuple[Fraction, ...]
    M231: Tuple[Fraction, ...]
    M132: Tuple[Fraction, ...]
    M213: Tuple[Fraction, ...]
    M312: Tuple[Fraction, ...]
    M321: Tuple[Fraction, ...]

    def to_dict(self) -> dict:
        return {
            name: [str(v) for v in getattr(self, name)]
            for name in ("J12", "J13", "J23", "J123", "M123", "M231", "M132")
        }


def coupling_sets(j1: Spin, j2: Spin, j3: Spin) -> CouplingSets:
    triple = {1: j1, 2: j2, 3: j3}

    def m(a: int, b: int, c: int) -> Tuple[Fraction, ...]:
        return tuple(m_set(triple[a], triple[b], triple[c]))

    return CouplingSets(
        J12=tuple(tensor_decompose(j1, j2)),
        J13=tuple(tensor_decompose(j1, j3)),
        J23=tuple(tensor_decompose(j2, j3)),
        J123=tuple(s for s, _ in build_bratteli(j1, j2, j3).bottom),
        M123=m(1, 2, 3),
        M231=m(2, 3, 1),
        M132=m(1, 3, 2),
        M213=m(2, 1, 3),
        M312=m(3, 1, 2),
        M321=m(3, 2, 1),
    )


def centralizer_dim(j1: Spin, j2: Spin, j3: Spin) -> int:
    """``sum d_j^2`` over the bottom row."""
    return sum(d * d for _, d in build_bratteli(j1, j2, j3).bottom)


def multiplicities(j1: Spin, j2: Spin, j3: Spin) -> Dict[Spin, int]:
    return build_bratteli(j1, j2, j3).multiplicities


__all__ = [
    "tensor_decompose",
    "BratteliData",
    "build_bratteli",
    "m_set",
    "CouplingSets",
    "coupling_sets",
    "centralizer_dim",
    "multiplicities",
]
