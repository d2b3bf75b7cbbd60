# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

from __future__ import annotations

from fractions import Fraction
import math

import pytest

from .. import lattice_geom
from ..lattice_geom import LatticeCoord, ORIGIN, PlacedTriangle


def test_vertices() -> None:
    assert lattice_geom.vertices(PlacedTriangle(LatticeCoord(1, 2), 3)) == (
        LatticeCoord(1, 2), LatticeCoord(4, 2), LatticeCoord(1, 5),
    )
    assert lattice_geom.vertices(PlacedTriangle(LatticeCoord(1, 2), -1)) == (
        LatticeCoord(1, 2), LatticeCoord(0, 2), LatticeCoord(1, 1),
    )
    assert lattice_geom.vertices(PlacedTriangle(ORIGIN, 0)) == (ORIGIN,)


def test_to_cartesian() -> None:
    x, y = lattice_geom.to_cartesian(LatticeCoord(0, 1))
    assert x == pytest.approx(0.5)
    assert y == pytest.approx(math.sqrt(3) / 2)
    assert lattice_geom.to_cartesian(LatticeCoord(2, 0)) == (2.0, 0.0)


@pytest.mark.parametrize(
    ("triangle", "point", "expected"), [
        (PlacedTriangle(ORIGIN, 2), LatticeCoord(1, 1), True),
        (PlacedTriangle(ORIGIN, 2), LatticeCoord(2, 1), False),
        (PlacedTriangle(ORIGIN, -2), LatticeCoord(-1, -1), True),
        (PlacedTriangle(ORIGIN, -2), LatticeCoord(1, 0), False),
        (PlacedTriangle(ORIGIN, 0), ORIGIN, True),
    ],
)
def test_contains_point(triangle: PlacedTriangle, point: LatticeCoord, expected: bool) -> None:
    assert lattice_geom.contains_point(triangle, point) is expected


def test_eq8_layout() -> None:
    layout = lattice_geom.eq8_layout(PlacedTriangle(ORIGIN, 2), 1, 1, 2)
    assert layout.big == PlacedTriangle(LatticeCoord(-1, -2), 6)
    assert layout.terms == {
        "nk": PlacedTriangle(LatticeCoord(-1, 0), 4),
        "nl": PlacedTriangle(LatticeCoord(0, -2), 5),
        "kl": PlacedTriangle(LatticeCoord(-1, -2), 5),
        "n": PlacedTriangle(ORIGIN, 3),
        "k": PlacedTriangle(LatticeCoord(-1, 0), 3),
        "l": PlacedTriangle(LatticeCoord(0, -2), 4),
        "t": PlacedTriangle(ORIGIN, 2),
    }


def test_eq8_layout__two_equal_pieces_apart() -> None:
    # <4> = <1+1+2+0>: the nk and l terms both have size 2 but sit apart.
    layout = lattice_geom.eq8_layout(PlacedTriangle(LatticeCoord(1, 2), 0), 1, 1, 2)
    assert layout.big == PlacedTriangle(ORIGIN, 4)
    assert layout.terms["nk"] == PlacedTriangle(LatticeCoord(0, 2), 2)
    assert layout.terms["l"] == PlacedTriangle(LatticeCoord(1, 0), 2)


def test_eq8_terms() -> None:
    layout = lattice_geom.eq8_layout(PlacedTriangle(ORIGIN, -12), 19, 12, 20)
    terms = dict(lattice_geom.eq8_terms(layout))
    assert list(terms) == ["nk", "nl", "kl", "n", "k", "l", "t"]
    assert terms["nl"].sign == 1
    assert terms["nl"].triangle == PlacedTriangle(LatticeCoord(0, -20), 27)
    assert terms["l"].sign == -1


def test_solve_params() -> None:
    n, k, l = lattice_geom.solve_params(  # noqa: E741
        PlacedTriangle(ORIGIN, 2), PlacedTriangle(LatticeCoord(-1, -2), 6),
    )
    assert (n, k, l) == (1, 1, 2)


def test_solve_params__rational() -> None:
    base = PlacedTriangle(LatticeCoord(Fraction(1, 2), 0), Fraction(3, 2))
    target = PlacedTriangle(ORIGIN, 3)
    params = lattice_geom.solve_params(base, target)
    assert params == (Fraction(1), Fraction(1, 2), Fraction(0))
    assert lattice_geom.eq8_layout(base, *params).big == target


def test_solve_params__inverts_layout() -> None:
    base = PlacedTriangle(LatticeCoord(3, -1), -4)
    for n, k, l in [(2, -3, 1), (0, 0, 0), (-5, 4, 4)]:  # noqa: E741
        big = lattice_geom.eq8_layout(base, n, k, l).big
        assert lattice_geom.solve_params(base, big) == (n, k, l)


def test_congruent_translate() -> None:
    a = PlacedTriangle(LatticeCoord(1, 1), 3)
    b = PlacedTriangle(LatticeCoord(-2, 4), 3)
    assert lattice_geom.congruent_translate(a, b) == LatticeCoord(-3, 3)
    assert a.translated(LatticeCoord(-3, 3)) == b
    assert lattice_geom.congruent_translate(a, PlacedTriangle(ORIGIN, -3)) is None


def test_placed_triangle_str() -> None:
    assert str(PlacedTriangle(LatticeCoord(12, 20), -12)) == "<-12>@(12, 20)"
    assert PlacedTriangle(LatticeCoord(Fraction(1, 2), 0), 1).is_integral() is False
