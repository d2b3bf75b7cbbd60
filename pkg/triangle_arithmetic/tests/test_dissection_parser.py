# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

from __future__ import annotations

import pytest

from .. import errors
from ..builtin_scripts import DISSECTION_A, DISSECTION_B
from ..dissection_parser import parse_script, PieceRef, ROOT
from ..lattice_geom import LatticeCoord, ORIGIN


def _diagnostics(text: str) -> list[tuple[int, int, str]]:
    with pytest.raises(errors.ScriptSyntaxError) as excinfo:
        parse_script(text)
    return list(excinfo.value.diagnostics)


def test_builtin_a() -> None:
    script = parse_script(DISSECTION_A)
    assert script.target_size == 39
    assert script.anchor == ORIGIN
    assert len(script.steps) == 7
    assert script.steps[0].target == ROOT
    assert script.steps[0].params == (19, 12, 20, -12)
    assert script.steps[1].target == PieceRef(("nl",))
    assert script.steps[1].params == (11, 16, 11, -11)
    assert script.steps[5].params == (8, 8, 8, -8)
    assert dict(script.steps[0].tags) == {"n": "1", "l": "2"}


def test_builtin_b() -> None:
    script = parse_script(DISSECTION_B)
    assert len(script.steps) == 7
    assert script.steps[1].target == PieceRef(("t",))
    assert script.steps[6].params == (8, 1, 8, -8)
    assert script.steps[6].line == 9


def test_target_anchor_and_comments() -> None:
    script = parse_script(
        "# a comment\n"
        "\n"
        "target 4 at 3,-2   # trailing comment\n"
        "expand root = 1 1 2 0\n",
    )
    assert script.anchor == LatticeCoord(3, -2)
    assert script.steps[0].line == 4


def test_size_mismatch() -> None:
    (diagnostic,) = _diagnostics("target 5\nexpand root = 1 1 2 0\n")
    line, column, message = diagnostic
    assert line == 2
    assert column == 15
    assert message == "size mismatch: 1+1+2+0 = 4 but 'root' has size 5"


def test_unpaired_tag() -> None:
    (diagnostic,) = _diagnostics("target 4\nexpand root = 1 1 2 0 tags nk=x\n")
    assert diagnostic[0] == 2
    assert diagnostic[2] == "unpaired tag 'x'"


def test_same_sign_pair() -> None:
    (diagnostic,) = _diagnostics("target 4\nexpand root = 1 1 2 0 tags nk=x,nl=x\n")
    assert diagnostic[2] == "tag 'x' pairs two pieces of the same sign"


def test_overused_tag() -> None:
    (diagnostic,) = _diagnostics("target 4\nexpand root = 1 1 2 0 tags nk=x,nl=x,n=x\n")
    assert diagnostic[2] == "tag 'x' is used 3 times, expected 2"


def test_tag_on_empty_term() -> None:
    (diagnostic,) = _diagnostics("target 4\nexpand root = 1 1 2 0 tags t=x\n")
    assert diagnostic[2] == "tag 'x' is placed on the empty term 't'"


def test_duplicate_expansion() -> None:
    (diagnostic,) = _diagnostics(
        "target 4\nexpand root = 1 1 2 0\nexpand root = 1 1 2 0\n",
    )
    assert diagnostic[0] == 3
    assert diagnostic[2] == "'root' is already expanded on line 2"


def test_never_created_piece() -> None:
    (diagnostic,) = _diagnostics("target 4\nexpand root.nk = 1 1 0 0\n")
    assert diagnostic[2] == "'root.nk' refers to a piece that was never created"


def test_cancelled_piece_cannot_be_expanded() -> None:
    diagnostics = _diagnostics(
        "target 4\n"
        "expand root = 1 1 2 0 tags nk=x,l=x\n"
        "expand root.nk = 1 1 0 0\n",
    )
    assert (3, 8, "'root.nk' was already cancelled by tag 'x'") in diagnostics


def test_all_problems_reported() -> None:
    diagnostics = _diagnostics(
        "expand root = 1 1 2 0\n"
        "frobnicate\n"
        "target 4\n"
        "target 5\n"
        "expand root = 1 1 2 0 tags zz=1\n",
    )
    assert [message for _, _, message in diagnostics] == [
        "'expand' before the 'target' line",
        "unknown statement 'frobnicate'",
        "the target is already defined",
        "unknown slot 'zz', expected one of nk, nl, kl, n, k, l, t",
    ]


def test_missing_target() -> None:
    (diagnostic,) = _diagnostics("# nothing here\n")
    assert diagnostic == (1, 1, "missing 'target <size>' line")


def test_malformed_statements() -> None:
    diagnostics = _diagnostics("target four\n")
    assert diagnostics[0] == (1, 1, "expected 'target <size> [at <i>,<j>]'")
    diagnostics = _diagnostics("target 4\nexpand root = 1 1 2\n")
    assert diagnostics[0][2].startswith("expected 'expand <ref>")


def test_format() -> None:
    with pytest.raises(errors.ScriptSyntaxError) as excinfo:
        parse_script("target 5\nexpand root = 1 1 2 0\n")
    assert excinfo.value.format() == (
        "line 2, column 15: size mismatch: 1+1+2+0 = 4 but 'root' has size 5"
    )


def test_piece_ref() -> None:
    ref = PieceRef.parse("root.nl.kl")
    assert ref == PieceRef(("nl", "kl"))
    assert str(ref) == "root.nl.kl"
    assert ref.child("t") == PieceRef(("nl", "kl", "t"))
    assert str(ROOT) == "root"


@pytest.mark.parametrize("text", ["trunk", "root.xx", "root..nk"])
def test_piece_ref__invalid(text: str) -> None:
    with pytest.raises(ValueError, match="Invalid piece reference"):
        PieceRef.parse(text)
