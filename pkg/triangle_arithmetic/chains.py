# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

"""
Signed integer chains on the triangular lattice.

A chain assigns an integer multiplicity to finitely many simplices: unit
faces only (mode N2), or faces, edges and vertices (mode N20). A signed
collection of placed triangles builds a target in the geometric sense when
the difference of their chains is empty, and projecting a chain onto
``(faces, up - down[, V - E + F])`` gives the embedding of the labels, which
is why geometric truth implies arithmetic truth.

In mode N20 a positive size is the *closed* triangle (all faces, edges and
vertices), a negative size is the *open* triangle (faces, interior edges and
interior vertices) and size zero is a single vertex.
"""

from __future__ import annotations

import dataclasses
import enum
import functools
import logging
import typing

from . import errors
from .lattice_geom import (
    LatticeCoord,
    PlacedTriangle,
    SignedTriangle,
)
from .ring_core import Mode, OrthoPair, TriangleLabel, TriVec3, embed2_ortho, embed3


class SimplexKind(enum.Enum):
    FACE_UP = "face_up"
    FACE_DOWN = "face_down"
    #: Spans (i, j)-(i+1, j).
    EDGE_H = "edge_h"
    #: Spans (i, j)-(i, j+1).
    EDGE_V = "edge_v"
    #: Spans (i+1, j)-(i, j+1).
    EDGE_D = "edge_d"
    VERTEX = "vertex"

    # Members are singletons, so identity hashing agrees with equality.
    __hash__ = object.__hash__


_KIND_ORDER = {kind: index for index, kind in enumerate(SimplexKind)}
_FACES = (SimplexKind.FACE_UP, SimplexKind.FACE_DOWN)
_EDGES = (SimplexKind.EDGE_H, SimplexKind.EDGE_V, SimplexKind.EDGE_D)

# Point reflection (i, j) -> (-i, -j) maps each simplex id onto another
# simplex id shifted by these offsets.
_REFLECTED_KIND = {
    SimplexKind.FACE_UP: (SimplexKind.FACE_DOWN, -1, -1),
    SimplexKind.FACE_DOWN: (SimplexKind.FACE_UP, -1, -1),
    SimplexKind.EDGE_H: (SimplexKind.EDGE_H, -1, 0),
    SimplexKind.EDGE_V: (SimplexKind.EDGE_V, 0, -1),
    SimplexKind.EDGE_D: (SimplexKind.EDGE_D, -1, -1),
    SimplexKind.VERTEX: (SimplexKind.VERTEX, 0, 0),
}


class SimplexId(typing.NamedTuple):
    kind: SimplexKind
    i: int
    j: int

    def sort_key(self) -> typing.Tuple[int, int, int]:
        return (_KIND_ORDER[self.kind], self.i, self.j)


@dataclasses.dataclass(frozen=True)
class Chain:
    mode: Mode
    #: Canonical form: zero multiplicities are never stored.
    cells: typing.Mapping[SimplexId, int] = dataclasses.field(default_factory=dict)

    @classmethod
    def from_counts(
        cls,
        mode: Mode,
        counts: typing.Mapping[SimplexId, int],
    ) -> Chain:
        return cls(mode, {simplex: value for simplex, value in counts.items() if value})

    def is_empty(self) -> bool:
        return not self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def __add__(self, other: Chain) -> Chain:
        if other.mode is not self.mode:
            raise ValueError(f"Cannot add a {other.mode.value} chain to a {self.mode.value} chain")
        counts = dict(self.cells)
        for simplex, value in other.cells.items():
            counts[simplex] = counts.get(simplex, 0) + value
        return Chain.from_counts(self.mode, counts)

    def __neg__(self) -> Chain:
        return self.scaled(-1)

    def __sub__(self, other: Chain) -> Chain:
        return self + (-other)

    def scaled(self, coeff: int) -> Chain:
        return Chain.from_counts(
            self.mode, {simplex: coeff * value for simplex, value in self.cells.items()},
        )

    def sorted_items(self) -> typing.List[typing.Tuple[SimplexId, int]]:
        return sorted(self.cells.items(), key=lambda item: item[0].sort_key())


_UpSimplex = typing.Tuple[SimplexKind, int, int, bool]


@functools.lru_cache(maxsize=None)
def _up_simplices(size: int) -> typing.Tuple[_UpSimplex, ...]:
    """
    Every simplex of the closed up-triangle of ``size`` anchored at the
    origin, flagged with whether it lies on the boundary.
    """
    simplices: typing.List[_UpSimplex] = []
    for a in range(size + 1):
        for b in range(size + 1 - a):
            simplices.append((SimplexKind.VERTEX, a, b, a == 0 or b == 0 or a + b == size))
            if a + b <= size - 1:
                simplices.append((SimplexKind.FACE_UP, a, b, False))
                simplices.append((SimplexKind.EDGE_H, a, b, b == 0))
                simplices.append((SimplexKind.EDGE_V, a, b, a == 0))
                simplices.append((SimplexKind.EDGE_D, a, b, a + b == size - 1))
            if a + b <= size - 2:
                simplices.append((SimplexKind.FACE_DOWN, a, b, False))
    return tuple(simplices)


def _integral(p: PlacedTriangle) -> typing.Tuple[int, int, int]:
    if not p.is_integral():
        raise errors.NonIntegerPlacementError(
            f"Chains need integer placements, got {p}",
        )
    return int(p.anchor.i), int(p.anchor.j), int(p.size)


_Offset = typing.Tuple[SimplexKind, int, int]


@functools.lru_cache(maxsize=None)
def _template(size: int, mode: Mode) -> typing.Tuple[_Offset, ...]:
    """
    The simplices of the chain of ``<size>`` in ``mode`` as offsets from its
    anchor: faces only in N2, and for negative sizes the point reflection of
    the up-triangle (without its boundary in N20).
    """
    if size == 0:
        return ((SimplexKind.VERTEX, 0, 0),) if mode is Mode.N20 else ()
    offsets: typing.List[_Offset] = []
    for kind, a, b, boundary in _up_simplices(abs(size)):
        if mode is Mode.N2 and kind not in _FACES:
            continue
        if size > 0:
            offsets.append((kind, a, b))
        elif mode is Mode.N2 or not boundary:
            reflected, di, dj = _REFLECTED_KIND[kind]
            offsets.append((reflected, di - a, dj - b))
    return tuple(offsets)


def _simplices(
    p: PlacedTriangle,
    mode: Mode,
) -> typing.Iterator[SimplexId]:
    x, y, size = _integral(p)
    for kind, di, dj in _template(size, mode):
        yield SimplexId(kind, x + di, y + dj)


def accumulate(
    counts: typing.Dict[SimplexId, int],
    p: PlacedTriangle,
    mode: Mode,
    coeff: int,
) -> None:
    """Add ``coeff`` times the chain of ``p`` to ``counts`` in place."""
    x, y, size = _integral(p)
    get = counts.get
    for kind, di, dj in _template(size, mode):
        simplex = SimplexId(kind, x + di, y + dj)
        counts[simplex] = get(simplex, 0) + coeff


def face_chain(p: PlacedTriangle) -> Chain:
    """
    The unit cells of ``p``, each with multiplicity one.

    Raises
    ------
    NonIntegerPlacementError
        If the anchor or the size is not an integer.
    """
    counts: typing.Dict[SimplexId, int] = {}
    accumulate(counts, p, Mode.N2, 1)
    return Chain(Mode.N2, counts)


def n20_chain(p: PlacedTriangle, sign: int = 1) -> Chain:
    counts: typing.Dict[SimplexId, int] = {}
    accumulate(counts, p, Mode.N20, sign)
    return Chain(Mode.N20, counts)


def chain_of(p: PlacedTriangle, mode: Mode, sign: int = 1) -> Chain:
    if mode is Mode.N2:
        return face_chain(p).scaled(sign)
    return n20_chain(p, sign)


def euler_characteristic(chain: Chain) -> int:
    """Signed V - E + F of the chain."""
    total = 0
    for simplex, value in chain.cells.items():
        if simplex.kind is SimplexKind.VERTEX:
            total += value
        elif simplex.kind in _EDGES:
            total -= value
        else:
            total += value
    return total


def project(chain: Chain) -> typing.Union[OrthoPair, TriVec3]:
    faces = up_minus_down = 0
    for simplex, value in chain.cells.items():
        if simplex.kind is SimplexKind.FACE_UP:
            faces += value
            up_minus_down += value
        elif simplex.kind is SimplexKind.FACE_DOWN:
            faces += value
            up_minus_down -= value
    if chain.mode is Mode.N2:
        return OrthoPair(faces, up_minus_down)
    return TriVec3(faces, up_minus_down, euler_characteristic(chain))


def embedding_of(term: SignedTriangle, mode: Mode) -> typing.Union[OrthoPair, TriVec3]:
    """The embedding ``sign * <size>`` the projection of the term's chain must equal."""
    label = TriangleLabel(int(term.triangle.size), term.sign)
    if mode is Mode.N2:
        return embed2_ortho(label)
    return embed3(label)


def geom_check(
    terms: typing.Iterable[typing.Tuple[int, PlacedTriangle]],
    target: typing.Tuple[int, PlacedTriangle],
    mode: Mode,
) -> Chain:
    """
    The residual ``sum(sign_i * chain(p_i)) - sign_target * chain(target)``.

    An empty residual certifies that the placed terms build the target.
    """
    counts: typing.Dict[SimplexId, int] = {}
    for sign, placed in terms:
        accumulate(counts, placed, mode, sign)
    target_sign, target_placed = target
    accumulate(counts, target_placed, mode, -target_sign)
    return Chain.from_counts(mode, counts)


@dataclasses.dataclass(frozen=True)
class Eq26Placement:
    target: PlacedTriangle
    #: Closed unit triangles, open unit triangles and the -<0> corrections.
    terms: typing.Tuple[SignedTriangle, ...]
    #: Lattice point -> number of -<0> removed there.
    corrections: typing.Mapping[LatticeCoord, int]


def eq26_placement(anchor: LatticeCoord, n: int) -> Eq26Placement:
    """
    Build ``<n>`` from closed ``<1>`` on every up-cell, open ``<-1>`` on every
    down-cell and points removed where closed unit triangles overlap.

    Boundary points other than the corners are covered twice and interior
    points three times, so one and two points are removed there.
    """
    if n < 1:
        raise ValueError(f"The counting placement needs n >= 1, got {n}")
    x, y = int(anchor.i), int(anchor.j)
    terms: typing.List[SignedTriangle] = []
    for a in range(n):
        for b in range(n - a):
            terms.append(SignedTriangle(1, PlacedTriangle(LatticeCoord(x + a, y + b), 1)))
    for a in range(n - 1):
        for b in range(n - 1 - a):
            # The open <-1> anchored at (a+1, b+1) covers D(a, b).
            terms.append(
                SignedTriangle(1, PlacedTriangle(LatticeCoord(x + a + 1, y + b + 1), -1)),
            )
    corrections: typing.Dict[LatticeCoord, int] = {}
    for a in range(n + 1):
        for b in range(n + 1 - a):
            on_edges = (a == 0) + (b == 0) + (a + b == n)
            if on_edges >= 2:
                continue
            removed = 1 if on_edges == 1 else 2
            point = LatticeCoord(x + a, y + b)
            corrections[point] = removed
            terms.extend([SignedTriangle(-1, PlacedTriangle(point, 0))] * removed)
    return Eq26Placement(
        target=PlacedTriangle(LatticeCoord(x, y), n),
        terms=tuple(terms),
        corrections=corrections,
    )


def b_chain(
    a: int,
    t: int,
    at: LatticeCoord,
    corrections: typing.Sequence[LatticeCoord],
) -> Chain:
    """
    A chain for the vector ``b_vec(a, t)`` as ``<-a+t> - 3<t>``, which is
    ``<-1> - 3<0>`` for ``a, t = 1, 0``.

    The placement of the pieces is free; only the projection is fixed.
    """
    if len(corrections) != 3:
        raise ValueError(f"Expected three subtracted copies, got {len(corrections)}")
    counts: typing.Dict[SimplexId, int] = {}
    accumulate(counts, PlacedTriangle(at, -a + t), Mode.N20, 1)
    for point in corrections:
        accumulate(counts, PlacedTriangle(point, t), Mode.N20, -1)
    return Chain.from_counts(Mode.N20, counts)


_logger = logging.getLogger(__name__)


def placement_search(
    sizes: typing.Sequence[typing.Tuple[int, int]],
    target: PlacedTriangle,
    window_radius: int,
    *,
    mode: Mode = Mode.N2,
    budget: int = 2_000_000,
    logger: logging.Logger = _logger,
) -> typing.Optional[typing.Tuple[SignedTriangle, ...]]:
    """
    Look for anchors making ``sum(sign * <size>)`` build ``target``.

    Every anchor is confined to the square window of ``window_radius``
    around the target anchor, so ``None`` only means that no placement
    exists inside that window.

    Parameters
    ----------
    sizes
        The ``(sign, size)`` pieces to place.
    target
        The triangle to build.
    window_radius
        Maximum distance of an anchor from the target anchor, per axis.
    budget
        Maximum number of candidate placements to try.

    Raises
    ------
    SearchBudgetExceeded
        When more than ``budget`` placements were tried.
    """
    tx, ty, _ = _integral(target)
    pieces = [SignedTriangle(sign, PlacedTriangle(target.anchor, size)) for sign, size in sizes]

    lhs = embedding_of(SignedTriangle(1, target), mode)
    rhs_terms = [embedding_of(piece, mode) for piece in pieces]
    if isinstance(lhs, OrthoPair):
        total2 = (
            sum(typing.cast(OrthoPair, e).s2 for e in rhs_terms),
            sum(typing.cast(OrthoPair, e).s1 for e in rhs_terms),
        )
        consistent = total2 == (lhs.s2, lhs.s1)
    else:
        total3 = TriVec3(0, 0, 0)
        for e in rhs_terms:
            total3 = total3 + typing.cast(TriVec3, e)
        consistent = total3 == lhs
    if not consistent:
        logger.debug("Sizes are not arithmetically equal to %s; nothing to search", target)
        return None

    # Zero-size pieces have no area and can sit anywhere.
    if mode is Mode.N2:
        fixed = [piece for piece in pieces if piece.triangle.size == 0]
        free = [piece for piece in pieces if piece.triangle.size != 0]
    else:
        fixed, free = [], pieces

    shapes: typing.Dict[typing.Tuple[int, int], typing.List[SimplexId]] = {}
    for piece in free:
        key = (piece.sign, int(piece.triangle.size))
        if key not in shapes:
            shapes[key] = list(_simplices(PlacedTriangle(LatticeCoord(0, 0), key[1]), mode))

    def in_window(i: int, j: int) -> bool:
        return abs(i - tx) <= window_radius and abs(j - ty) <= window_radius

    def anchors_covering(key: typing.Tuple[int, int], cell: SimplexId) -> typing.List[LatticeCoord]:
        found = {
            LatticeCoord(cell.i - offset.i, cell.j - offset.j)
            for offset in shapes[key]
            if offset.kind is cell.kind and in_window(cell.i - offset.i, cell.j - offset.j)
        }
        return sorted(found)

    window = [
        LatticeCoord(i, j)
        for i in range(tx - window_radius, tx + window_radius + 1)
        for j in range(ty - window_radius, ty + window_radius + 1)
    ]

    residual: typing.Dict[SimplexId, int] = {}
    accumulate(residual, target, mode, -1)
    remaining: typing.Dict[typing.Tuple[int, int], int] = {}
    for piece in free:
        key = (piece.sign, int(piece.triangle.size))
        remaining[key] = remaining.get(key, 0) + 1
    placed: typing.List[SignedTriangle] = []
    explored = 0

    def apply(key: typing.Tuple[int, int], anchor: LatticeCoord, coeff: int) -> None:
        for offset in shapes[key]:
            simplex = SimplexId(offset.kind, offset.i + int(anchor.i), offset.j + int(anchor.j))
            value = residual.get(simplex, 0) + coeff * key[0]
            if value:
                residual[simplex] = value
            else:
                residual.pop(simplex, None)

    def search() -> bool:
        nonlocal explored
        if not any(remaining.values()):
            return not residual
        if residual:
            cell = min(residual, key=SimplexId.sort_key)
            options = [
                (key, anchor)
                for key, count in remaining.items() if count
                for anchor in anchors_covering(key, cell)
            ]
        else:
            # Whatever is left has to cancel out on its own.
            key = next(key for key, count in remaining.items() if count)
            options = [(key, anchor) for anchor in window]
        for key, anchor in options:
            explored += 1
            if explored > budget:
                raise errors.SearchBudgetExceeded(budget)
            if explored % 100_000 == 0:
                logger.debug("Placement search explored %d nodes", explored)
            apply(key, anchor, 1)
            remaining[key] -= 1
            placed.append(SignedTriangle(key[0], PlacedTriangle(anchor, key[1])))
            if search():
                return True
            placed.pop()
            remaining[key] += 1
            apply(key, anchor, -1)
        return False

    if not search():
        logger.debug("No placement within radius %d after %d nodes", window_radius, explored)
        return None
    return tuple(placed) + tuple(fixed)
