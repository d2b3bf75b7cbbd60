# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

"""
SVG figures of placed triangles, chains and dissections.

Lattice coordinates go through :func:`lattice_geom.to_cartesian`, so every
triangle is equilateral on screen. Colours follow fixed roles: positive
pieces are dark gray, negative (or downward) pieces red, cancelled
placements green and point corrections yellow.
"""

from __future__ import annotations

import dataclasses
import enum
import pathlib
import typing

import svgwrite

from .chains import Chain, eq26_placement, SimplexKind
from .dissection import DissectionResult
from .lattice_geom import (
    eq8_layout,
    eq8_terms,
    LatticeCoord,
    ORIGIN,
    PlacedTriangle,
    SignedTriangle,
    to_cartesian,
    vertices,
)


class Role(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    CANCELLED = "cancelled"
    CORRECTION = "correction"
    OUTLINE = "outline"


@dataclasses.dataclass(frozen=True)
class Style:
    fill: typing.Mapping[Role, str] = dataclasses.field(default_factory=lambda: {
        Role.POSITIVE: "#555555",
        Role.NEGATIVE: "#d62728",
        Role.CANCELLED: "#2ca02c",
        Role.CORRECTION: "#ffd700",
        Role.OUTLINE: "none",
    })
    stroke: str = "#000000"
    stroke_width: float = 0.04
    fill_opacity: float = 0.6
    font_family: str = "sans-serif"
    #: Label height relative to a unit side, capped for large pieces.
    font_size: float = 0.45
    max_font_size: float = 2.5
    point_radius: float = 0.12
    margin: float = 1.0


Segment = typing.Tuple[LatticeCoord, LatticeCoord]
Shape = typing.Union[PlacedTriangle, LatticeCoord, Segment]


@dataclasses.dataclass(frozen=True)
class SceneItem:
    shape: Shape
    role: Role
    label: typing.Optional[str] = None


@dataclasses.dataclass(frozen=True)
class Scene:
    items: typing.Tuple[SceneItem, ...] = ()

    def __add__(self, other: Scene) -> Scene:
        return Scene(self.items + other.items)

    def points(self) -> typing.List[typing.Tuple[float, float]]:
        found: typing.List[typing.Tuple[float, float]] = []
        for item in self.items:
            found.extend(_screen(coord) for coord in _coords(item.shape))
        return found


def _coords(shape: Shape) -> typing.Tuple[LatticeCoord, ...]:
    if isinstance(shape, PlacedTriangle):
        return vertices(shape)
    if isinstance(shape, LatticeCoord):
        return (shape,)
    return tuple(shape)


def _screen(coord: LatticeCoord) -> typing.Tuple[float, float]:
    x, y = to_cartesian(coord)
    # SVG grows downwards.
    return (round(x, 4), round(-y, 4) + 0.0)


def _centroid(points: typing.Sequence[typing.Tuple[float, float]]) -> typing.Tuple[float, float]:
    return (
        round(sum(x for x, _ in points) / len(points), 4),
        round(sum(y for _, y in points) / len(points), 4),
    )


def piece_role(piece: SignedTriangle) -> Role:
    if piece.sign < 0 or piece.triangle.size < 0:
        return Role.NEGATIVE
    return Role.POSITIVE


def to_svg(scene: Scene, style: Style = Style()) -> str:
    """Render ``scene`` as an SVG 1.1 document; equal scenes give equal text."""
    points = scene.points()
    drawing = svgwrite.Drawing(profile="full")
    if points:
        min_x = min(x for x, _ in points) - style.margin
        min_y = min(y for _, y in points) - style.margin
        width = max(x for x, _ in points) + style.margin - min_x
        height = max(y for _, y in points) + style.margin - min_y
        drawing.viewbox(round(min_x, 4), round(min_y, 4), round(width, 4), round(height, 4))
    else:
        drawing.viewbox(0, 0, 0, 0)

    for item in scene.items:
        shape = item.shape
        fill = style.fill[item.role]
        if isinstance(shape, PlacedTriangle):
            corners = [_screen(coord) for coord in vertices(shape)]
            if len(corners) == 1:
                drawing.add(drawing.circle(
                    center=corners[0], r=style.point_radius, fill=fill, class_=item.role.value,
                ))
            else:
                drawing.add(drawing.polygon(
                    corners,
                    fill=fill,
                    fill_opacity=1 if item.role is Role.OUTLINE else style.fill_opacity,
                    stroke=style.stroke,
                    stroke_width=style.stroke_width,
                    class_=item.role.value,
                ))
            size = min(style.max_font_size, style.font_size * max(1, abs(float(shape.size)) / 3))
            anchor = _centroid(corners)
        elif isinstance(shape, LatticeCoord):
            anchor = _screen(shape)
            drawing.add(drawing.circle(
                center=anchor, r=style.point_radius, fill=fill,
                stroke=style.stroke, stroke_width=style.stroke_width / 2,
                class_=item.role.value,
            ))
            size = style.font_size
            anchor = (round(anchor[0] + 2 * style.point_radius, 4), anchor[1])
        else:
            start, end = (_screen(coord) for coord in shape)
            drawing.add(drawing.line(
                start=start, end=end,
                stroke=fill, stroke_width=3 * style.stroke_width,
                class_=item.role.value,
            ))
            size = style.font_size
            anchor = _centroid([start, end])
        if item.label is not None:
            drawing.add(drawing.text(
                item.label,
                insert=anchor,
                font_size=round(size, 4),
                font_family=style.font_family,
                text_anchor="middle",
                dominant_baseline="middle",
            ))
    return typing.cast(str, drawing.tostring())


def write_svg(scene: Scene, path: typing.Union[str, pathlib.Path], style: Style = Style()) -> None:
    pathlib.Path(path).write_text(to_svg(scene, style), encoding="utf-8")


def pieces_scene(
    pieces: typing.Iterable[SignedTriangle],
    labels: bool = True,
) -> Scene:
    items = []
    for piece in pieces:
        label = None
        if labels:
            size = piece.triangle.size
            label = f"-({size})" if piece.sign < 0 else str(size)
        items.append(SceneItem(piece.triangle, piece_role(piece), label))
    return Scene(tuple(items))


def chain_scene(chain: Chain) -> Scene:
    """
    One item per simplex with non-zero multiplicity: unit triangles for
    faces, segments for edges and points for vertices. Multiplicities other
    than one are written next to the simplex.
    """
    items = []
    for simplex, value in chain.sorted_items():
        role = Role.POSITIVE if value > 0 else Role.NEGATIVE
        label = None if value == 1 else str(value)
        i, j = simplex.i, simplex.j
        shape: Shape
        if simplex.kind is SimplexKind.FACE_UP:
            shape = PlacedTriangle(LatticeCoord(i, j), 1)
        elif simplex.kind is SimplexKind.FACE_DOWN:
            shape = PlacedTriangle(LatticeCoord(i + 1, j + 1), -1)
        elif simplex.kind is SimplexKind.EDGE_H:
            shape = (LatticeCoord(i, j), LatticeCoord(i + 1, j))
        elif simplex.kind is SimplexKind.EDGE_V:
            shape = (LatticeCoord(i, j), LatticeCoord(i, j + 1))
        elif simplex.kind is SimplexKind.EDGE_D:
            shape = (LatticeCoord(i + 1, j), LatticeCoord(i, j + 1))
        else:
            shape = LatticeCoord(i, j)
            role = Role.CORRECTION if value < 0 else role
        items.append(SceneItem(shape, role, label))
    return Scene(tuple(items))


def layout_scene(base: PlacedTriangle, n: int, k: int, l: int) -> Scene:  # noqa: E741
    """The seven terms of the addition identity inside the outline of the big triangle."""
    layout = eq8_layout(base, n, k, l)
    outline = Scene((SceneItem(layout.big, Role.OUTLINE),))
    terms = [term for _, term in eq8_terms(layout)]
    return outline + pieces_scene(terms)


def eq26_scene(n: int, anchor: LatticeCoord = ORIGIN) -> Scene:
    """
    The counting placement of ``<n>``: closed unit triangles, open unit
    triangles and the removed points, each point labelled with how many
    closed unit triangles cover it.
    """
    placement = eq26_placement(anchor, n)
    items = [SceneItem(placement.target, Role.OUTLINE)]
    for term in placement.terms:
        if term.triangle.size != 0:
            items.append(SceneItem(term.triangle, piece_role(term)))
    for point, removed in sorted(placement.corrections.items()):
        items.append(SceneItem(point, Role.CORRECTION, str(removed + 1)))
    return Scene(tuple(items))


def dissection_scene(result: DissectionResult) -> Scene:
    """Target outline, cancelled placements in green and every final piece labelled."""
    items = [SceneItem(result.target, Role.OUTLINE)]
    items.extend(
        SceneItem(cancellation.triangle, Role.CANCELLED) for cancellation in result.cancellations
    )
    return Scene(tuple(items)) + pieces_scene(piece for _, piece in result.pieces)
