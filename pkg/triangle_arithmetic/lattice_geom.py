# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

"""
Placed triangles on the oblique triangular lattice.

Lattice points are ``(i, j)`` in the basis of two unit sides 60 degrees
apart. The unit up-cell ``U(i, j)`` has corners ``(i, j), (i+1, j), (i, j+1)``
and the unit down-cell ``D(i, j)`` has corners ``(i+1, j), (i, j+1), (i+1, j+1)``.

A triangle of signed size ``s`` anchored at ``p`` has the vertices
``p, p + (s, 0), p + (0, s)``: upward for ``s > 0``, the point-reflected
downward triangle for ``s < 0`` and the point ``p`` for ``s == 0``.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
import math
import typing

from ._typing_compat import TypeAlias
from .identity import EQ8_TERMS, eq8_coefficient

Number: TypeAlias = typing.Union[int, Fraction]

_SQRT3_2 = math.sqrt(3) / 2


@dataclasses.dataclass(frozen=True, order=True)
class LatticeCoord:
    i: Number
    j: Number

    def __add__(self, other: LatticeCoord) -> LatticeCoord:
        return LatticeCoord(self.i + other.i, self.j + other.j)

    def __sub__(self, other: LatticeCoord) -> LatticeCoord:
        return LatticeCoord(self.i - other.i, self.j - other.j)

    def is_integral(self) -> bool:
        return _is_integral(self.i) and _is_integral(self.j)

    def __str__(self) -> str:
        return f"({self.i}, {self.j})"


ORIGIN = LatticeCoord(0, 0)


def _is_integral(value: Number) -> bool:
    return isinstance(value, int) or value.denominator == 1


@dataclasses.dataclass(frozen=True, order=True)
class PlacedTriangle:
    anchor: LatticeCoord
    size: Number

    def is_integral(self) -> bool:
        return self.anchor.is_integral() and _is_integral(self.size)

    def translated(self, offset: LatticeCoord) -> PlacedTriangle:
        return PlacedTriangle(self.anchor + offset, self.size)

    def __str__(self) -> str:
        return f"<{self.size}>@{self.anchor}"


class SignedTriangle(typing.NamedTuple):
    sign: int
    triangle: PlacedTriangle


def vertices(p: PlacedTriangle) -> typing.Tuple[LatticeCoord, ...]:
    if p.size == 0:
        return (p.anchor,)
    return (
        p.anchor,
        p.anchor + LatticeCoord(p.size, 0),
        p.anchor + LatticeCoord(0, p.size),
    )


def to_cartesian(coord: LatticeCoord) -> typing.Tuple[float, float]:
    return (float(coord.i) + float(coord.j) / 2, float(coord.j) * _SQRT3_2)


def contains_point(p: PlacedTriangle, coord: LatticeCoord) -> bool:
    """Closed membership of ``coord`` in the triangle ``p``."""
    di = coord.i - p.anchor.i
    dj = coord.j - p.anchor.j
    if p.size >= 0:
        return di >= 0 and dj >= 0 and di + dj <= p.size
    return di <= 0 and dj <= 0 and di + dj >= p.size


@dataclasses.dataclass(frozen=True)
class Eq8Layout:
    """
    The concrete construction of ``<n+k+l+t>`` from the base ``<t>``.

    Each term extends the base by the increments it contains: ``n`` moves
    the far side, ``k`` moves the anchor by ``-k`` along the first axis and
    ``l`` moves it by ``-l`` along the second.
    """
    base: PlacedTriangle
    n: Number
    k: Number
    l: Number  # noqa: E741
    #: Term name (nk, nl, kl, n, k, l, t) -> placed triangle.
    terms: typing.Mapping[str, PlacedTriangle]
    big: PlacedTriangle


def _placed_term(
    base: PlacedTriangle,
    increments: typing.Mapping[str, Number],
    subset: typing.AbstractSet[str],
) -> PlacedTriangle:
    shift = LatticeCoord(
        -increments["k"] if "k" in subset else 0,
        -increments["l"] if "l" in subset else 0,
    )
    size = base.size + sum((increments[slot] for slot in subset), 0)
    return PlacedTriangle(base.anchor + shift, size)


def eq8_layout(base: PlacedTriangle, n: Number, k: Number, l: Number) -> Eq8Layout:  # noqa: E741
    increments = {"n": n, "k": k, "l": l}
    terms = {name: _placed_term(base, increments, subset) for name, subset in EQ8_TERMS}
    return Eq8Layout(
        base=base,
        n=n,
        k=k,
        l=l,
        terms=terms,
        big=_placed_term(base, increments, frozenset(increments)),
    )


def eq8_terms(layout: Eq8Layout) -> typing.Tuple[typing.Tuple[str, SignedTriangle], ...]:
    """The seven signed terms of the layout, in the order they are written."""
    return tuple(
        (name, SignedTriangle(eq8_coefficient(subset), layout.terms[name]))
        for name, subset in EQ8_TERMS
    )


def solve_params(
    base: PlacedTriangle,
    target: PlacedTriangle,
) -> typing.Tuple[Fraction, Fraction, Fraction]:
    """
    The increments ``(n, k, l)`` for which ``eq8_layout(base, n, k, l).big``
    is ``target``.

    Any two triangles with parallel sides are related this way; rational
    anchors and sizes are accepted.
    """
    k = Fraction(base.anchor.i - target.anchor.i)
    l = Fraction(base.anchor.j - target.anchor.j)  # noqa: E741
    n = Fraction(target.size - base.size) - k - l
    return (n, k, l)


def congruent_translate(
    a: PlacedTriangle,
    b: PlacedTriangle,
) -> typing.Optional[LatticeCoord]:
    """The translation taking ``a`` onto ``b``, or None if they are not congruent."""
    if a.size != b.size:
        return None
    return b.anchor - a.anchor
