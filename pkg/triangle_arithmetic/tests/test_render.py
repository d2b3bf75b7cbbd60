# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

from __future__ import annotations

import pathlib

from .. import chains, render
from ..dissection import DissectionResult
from ..lattice_geom import LatticeCoord, ORIGIN, PlacedTriangle, SignedTriangle
from ..render import Role, Scene, SceneItem


def test_empty_scene() -> None:
    svg = render.to_svg(Scene())
    assert "<svg" in svg
    assert "<polygon" not in svg
    assert 'viewBox="0 0 0 0"' in svg


def test_deterministic(dissection_a: DissectionResult) -> None:
    scene = render.dissection_scene(dissection_a)
    assert render.to_svg(scene) == render.to_svg(render.dissection_scene(dissection_a))


def test_dissection_scene(dissection_a: DissectionResult) -> None:
    svg = render.to_svg(render.dissection_scene(dissection_a))
    assert svg.count("<polygon") == 1 + 7 + 15
    assert svg.count('class="positive"') + svg.count('class="negative"') == 15
    assert svg.count('class="negative"') == 6
    assert svg.count('class="cancelled"') == 7
    assert svg.count("<text") == 15
    assert ">-12</text>" in svg


def test_eq26_scene() -> None:
    svg = render.to_svg(render.eq26_scene(3))
    assert svg.count('class="correction"') == 7
    assert svg.count('<polygon') == 1 + 6 + 3
    assert svg.count('class="positive"') == 6
    assert svg.count('class="negative"') == 3
    assert svg.count(">2</text>") == 6
    assert svg.count(">3</text>") == 1


def test_layout_scene() -> None:
    scene = render.layout_scene(PlacedTriangle(ORIGIN, 2), 1, 1, 2)
    assert len(scene.items) == 8
    assert scene.items[0].role is Role.OUTLINE
    assert scene.items[0].shape == PlacedTriangle(LatticeCoord(-1, -2), 6)


def test_pieces_scene__labels() -> None:
    scene = render.pieces_scene([
        SignedTriangle(1, PlacedTriangle(ORIGIN, 3)),
        SignedTriangle(-1, PlacedTriangle(ORIGIN, 2)),
    ])
    assert [item.label for item in scene.items] == ["3", "-(2)"]
    assert [item.role for item in scene.items] == [Role.POSITIVE, Role.NEGATIVE]
    assert all(
        item.label is None
        for item in render.pieces_scene(
            [SignedTriangle(1, PlacedTriangle(ORIGIN, 3))], labels=False,
        ).items
    )


def test_chain_scene() -> None:
    scene = render.chain_scene(chains.n20_chain(PlacedTriangle(LatticeCoord(4, 4), 0), sign=-1))
    assert scene.items == (SceneItem(LatticeCoord(4, 4), Role.CORRECTION, "-1"),)
    faces = render.chain_scene(chains.face_chain(PlacedTriangle(ORIGIN, 2)))
    assert len(faces.items) == 4
    assert '<line' in render.to_svg(
        render.chain_scene(chains.n20_chain(PlacedTriangle(ORIGIN, 1))),
    )


def test_point_triangle_is_a_circle() -> None:
    svg = render.to_svg(Scene((SceneItem(PlacedTriangle(ORIGIN, 0), Role.POSITIVE),)))
    assert "<circle" in svg
    assert "<polygon" not in svg


def test_write_svg(tmp_path: pathlib.Path) -> None:
    path = tmp_path / "eq26.svg"
    scene = render.eq26_scene(2)
    render.write_svg(scene, path)
    assert path.read_text(encoding="utf-8") == render.to_svg(scene)
