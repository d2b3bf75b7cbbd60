# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

from __future__ import annotations

from unittest import mock

import pytest

from .. import errors
from ..dissection import (
    builtin_dissection,
    DissectionResult,
    DissectionScript,
    ExpansionStep,
    interpret,
    PieceRef,
    verify_perfect,
)
from ..dissection_parser import ROOT
from ..lattice_geom import LatticeCoord, ORIGIN, PlacedTriangle, SignedTriangle

PERFECT_SIZES = (-12, -11, -8, -7, -5, -2, 2, 3, 5, 7, 8, 9, 11, 19, 20)


@pytest.mark.parametrize("which", ["a", "b"])
def test_builtin__perfect(which: str, request: pytest.FixtureRequest) -> None:
    result: DissectionResult = request.getfixturevalue(f"dissection_{which}")
    assert result.piece_count == 15
    assert result.signed_sizes == PERFECT_SIZES
    assert result.sum_of_squares == 1521
    assert len(result.cancellations) == 7
    assert result.steps == 7
    report = verify_perfect(result, result.target)
    assert report.passed, report.failures()
    assert report.failures() == []


def test_builtin_a__placements(dissection_a: DissectionResult) -> None:
    placed = {
        (int(piece.triangle.size), piece.triangle.anchor) for _, piece in dissection_a.pieces
    }
    assert placed == {
        (19, LatticeCoord(0, 20)),
        (20, LatticeCoord(0, 0)),
        (-12, LatticeCoord(12, 20)),
        (11, LatticeCoord(28, 0)),
        (-11, LatticeCoord(28, 11)),
        (9, LatticeCoord(19, 11)),
        (-7, LatticeCoord(19, 20)),
        (7, LatticeCoord(12, 13)),
        (-2, LatticeCoord(19, 13)),
        (2, LatticeCoord(17, 11)),
        (-5, LatticeCoord(17, 13)),
        (8, LatticeCoord(20, 0)),
        (-8, LatticeCoord(20, 8)),
        (3, LatticeCoord(17, 8)),
        (5, LatticeCoord(12, 8)),
    }


def test_builtin_a__cancellations(dissection_a: DissectionResult) -> None:
    by_tag = {c.tag: c for c in dissection_a.cancellations}
    assert sorted(by_tag) == ["1", "2", "3", "4", "5", "6", "7"]
    assert by_tag["1"].triangle == PlacedTriangle(LatticeCoord(12, 20), 7)
    assert by_tag["1"].positive == PieceRef(("nl", "nk", "nk"))
    assert by_tag["1"].negative == PieceRef(("n",))
    assert by_tag["2"].triangle == PlacedTriangle(LatticeCoord(12, 0), 8)
    assert by_tag["6"].triangle == PlacedTriangle(LatticeCoord(17, 11), -3)


def test_builtin_a__moved_anchor() -> None:
    result = interpret(builtin_dissection("a"), LatticeCoord(-3, 5))
    assert result.target == PlacedTriangle(LatticeCoord(-3, 5), 39)
    anchors = {piece.triangle.anchor for _, piece in result.pieces}
    assert LatticeCoord(-3, 25) in anchors
    assert verify_perfect(result, result.target).passed


def test_builtin_dissection__unknown() -> None:
    with pytest.raises(ValueError, match="Unknown builtin dissection 'c'"):
        builtin_dissection("c")


def test_interpret__logs(logger: mock.Mock) -> None:
    interpret(builtin_dissection("b"), logger=logger)
    # One record per step and one per cancellation.
    assert logger.debug.call_count == 14


def test_single_step() -> None:
    # <4> = <1+1+2+0> leaves the two size-2 terms in different places.
    script = DissectionScript(4, ORIGIN, (ExpansionStep(ROOT, (1, 1, 2, 0)),))
    result = interpret(script)
    assert result.piece_count == 6
    twos = [piece for _, piece in result.pieces if piece.triangle.size == 2]
    assert len(twos) == 2
    assert twos[0].triangle.anchor != twos[1].triangle.anchor
    assert {piece.sign for piece in twos} == {1, -1}
    report = verify_perfect(result, result.target)
    assert not report.all_positive
    assert report.exact_tiling
    assert report.repeated_sizes == (1, 2, 3)
    assert not report.passed


def test_residual_not_empty() -> None:
    script = DissectionScript(4, ORIGIN, (ExpansionStep(ROOT, (1, 1, 1, 0)),))
    with pytest.raises(errors.ResidualNotEmptyError, match="'root'"):
        interpret(script)


def test_unknown_piece() -> None:
    script = DissectionScript(
        4, ORIGIN, (
            ExpansionStep(ROOT, (1, 1, 2, 0)),
            ExpansionStep(PieceRef(("t",)), (0, 0, 0, 0)),
        ),
    )
    with pytest.raises(errors.UnknownPieceError, match="root.t"):
        interpret(script)


def test_cancellation_mismatch() -> None:
    step = ExpansionStep(ROOT, (1, 1, 2, 0), tags={"nk": "x", "l": "x"})
    with pytest.raises(errors.CancellationMismatchError, match="Tag 'x' pairs"):
        interpret(DissectionScript(4, ORIGIN, (step,)))


def test_unmatched_tag() -> None:
    step = ExpansionStep(ROOT, (1, 1, 2, 0), tags={"nk": "x"})
    with pytest.raises(errors.CancellationMismatchError, match="Unmatched tag"):
        interpret(DissectionScript(4, ORIGIN, (step,)))


def test_verify_perfect__repeated_piece() -> None:
    unit = SignedTriangle(1, PlacedTriangle(ORIGIN, 1))
    report = verify_perfect([unit, unit], PlacedTriangle(ORIGIN, 1))
    assert report.repeated_sizes == (1,)
    assert not report.exact_tiling
    assert not report.squares_match
    assert len(report.failures()) == 3


def test_verify_perfect__trivial_tiling() -> None:
    report = verify_perfect(
        [SignedTriangle(1, PlacedTriangle(ORIGIN, 2))], PlacedTriangle(ORIGIN, 2),
    )
    assert report.passed
    assert report.piece_count == 1


def test_expanding_a_tagged_piece() -> None:
    # The k piece is tagged, then expanded before its partner shows up.
    script = DissectionScript(
        4, ORIGIN, (
            ExpansionStep(ROOT, (1, 1, 2, 0), tags={"k": "x"}),
            ExpansionStep(PieceRef(("k",)), (0, 0, 0, 1)),
            ExpansionStep(PieceRef(("nk",)), (1, 0, 0, 1), tags={"kl": "x"}),
        ),
    )
    with pytest.raises(errors.CancellationMismatchError, match="unmatched tag 'x'"):
        interpret(script)


def test_interpret__verify(logger: mock.Mock) -> None:
    result = interpret(builtin_dissection("a"), verify=True, logger=logger)
    assert result.report is not None
    assert result.report.passed
    assert logger.debug.call_count == 15
    assert interpret(builtin_dissection("a")).report is None


def test_interpret__verify_single_step() -> None:
    script = DissectionScript(4, ORIGIN, (ExpansionStep(ROOT, (1, 1, 2, 0)),))
    report = interpret(script, verify=True).report
    assert report is not None
    assert report.failures()[0] == "some pieces are negative or empty"
