# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

"""
Parser for dissection scripts.

A script is line oriented, ``#`` starts a comment::

    target <size> [at <i>,<j>]
    expand <ref> = <n> <k> <l> <t> [tags <slot>=<tag>(,<slot>=<tag>)*]

``<ref>`` is ``root`` or a dotted path of term names such as ``root.nl.kl``.
Every tag must be used exactly twice, on one positive and one negative
piece.
"""

from __future__ import annotations

import dataclasses
import re
import typing

from . import errors
from ._typing_compat import Final
from .identity import EQ8_TERMS, eq8_coefficient
from .lattice_geom import LatticeCoord

SLOT_SUBSETS: Final = dict(EQ8_TERMS)
SLOT_NAMES: Final = tuple(SLOT_SUBSETS)

_INT = r"[+-]?\d+"
_TARGET_RE = re.compile(
    rf"target\s+(?P<size>{_INT})(?:\s+at\s+(?P<i>{_INT})\s*,\s*(?P<j>{_INT}))?\s*$",
)
_EXPAND_RE = re.compile(
    rf"expand\s+(?P<ref>\S+)\s*=\s*(?P<n>{_INT})\s+(?P<k>{_INT})\s+(?P<l>{_INT})\s+(?P<t>{_INT})"
    r"(?:\s+tags\s+(?P<tags>\S.*?))?\s*$",
)
_TAG_RE = re.compile(r"\s*(?P<slot>\w+)\s*=\s*(?P<tag>\w+)\s*$")


@dataclasses.dataclass(frozen=True, order=True)
class PieceRef:
    #: Term names leading from the root to the piece.
    path: typing.Tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: str) -> PieceRef:
        head, *rest = text.split(".")
        if head != "root" or any(part not in SLOT_SUBSETS for part in rest):
            raise ValueError(f"Invalid piece reference '{text}'")
        return cls(tuple(rest))

    def child(self, slot: str) -> PieceRef:
        return PieceRef(self.path + (slot,))

    def __str__(self) -> str:
        return ".".join(("root",) + self.path)


ROOT: Final = PieceRef()


@dataclasses.dataclass(frozen=True)
class ExpansionStep:
    target: PieceRef
    params: typing.Tuple[int, int, int, int]
    #: Term name -> cancellation tag.
    tags: typing.Mapping[str, str] = dataclasses.field(default_factory=dict)
    line: int = 0


@dataclasses.dataclass(frozen=True)
class DissectionScript:
    target_size: int
    anchor: LatticeCoord
    steps: typing.Tuple[ExpansionStep, ...]


class _ScriptChecker:
    """Tracks the pieces a script creates so references can be checked as it is read."""

    def __init__(self, target_size: int) -> None:
        self.sizes: typing.Dict[PieceRef, int] = {ROOT: target_size}
        self.signs: typing.Dict[PieceRef, int] = {ROOT: 1}
        self.consumed: typing.Dict[PieceRef, str] = {}
        #: tag -> [(line, column, sign)]
        self.tag_uses: typing.Dict[str, typing.List[typing.Tuple[int, int, int]]] = {}

    def expand(
        self,
        step: ExpansionStep,
        tag_columns: typing.Mapping[str, int],
        ref_column: int,
        params_column: int,
    ) -> typing.List[typing.Tuple[int, int, str]]:
        problems: typing.List[typing.Tuple[int, int, str]] = []
        ref = step.target
        if ref in self.consumed:
            problems.append((step.line, ref_column, f"'{ref}' was already {self.consumed[ref]}"))
            return problems
        if ref not in self.sizes:
            problems.append((step.line, ref_column, f"'{ref}' refers to a piece that was never created"))
            return problems
        size = self.sizes[ref]
        if sum(step.params) != size:
            n, k, l, t = step.params  # noqa: E741
            problems.append((
                step.line, params_column,
                f"size mismatch: {n}+{k}+{l}+{t} = {sum(step.params)} but '{ref}' has size {size}",
            ))
            return problems
        self.consumed[ref] = "expanded"
        increments = dict(zip("nkl", step.params[:3]))
        t = step.params[3]
        for slot, subset in SLOT_SUBSETS.items():
            child = ref.child(slot)
            child_size = t + sum(increments[c] for c in subset)
            if child_size == 0:
                continue
            self.sizes[child] = child_size
            self.signs[child] = self.signs[ref] * eq8_coefficient(subset)
        for slot, tag in step.tags.items():
            child = ref.child(slot)
            if child not in self.sizes:
                problems.append((
                    step.line, tag_columns[slot],
                    f"tag '{tag}' is placed on the empty term '{slot}'",
                ))
                continue
            self.consumed[child] = f"cancelled by tag '{tag}'"
            self.tag_uses.setdefault(tag, []).append((step.line, tag_columns[slot], self.signs[child]))
        return problems

    def unpaired(self) -> typing.List[typing.Tuple[int, int, str]]:
        problems = []
        for tag, uses in self.tag_uses.items():
            line, column, _ = uses[-1]
            if len(uses) == 1:
                problems.append((line, column, f"unpaired tag '{tag}'"))
            elif len(uses) > 2:
                problems.append((line, column, f"tag '{tag}' is used {len(uses)} times, expected 2"))
            elif uses[0][2] == uses[1][2]:
                problems.append((line, column, f"tag '{tag}' pairs two pieces of the same sign"))
        return problems


def _parse_tags(
    text: str,
    offset: int,
    line_number: int,
    problems: typing.List[typing.Tuple[int, int, str]],
) -> typing.Tuple[typing.Dict[str, str], typing.Dict[str, int]]:
    tags: typing.Dict[str, str] = {}
    columns: typing.Dict[str, int] = {}
    position = offset
    for item in text.split(","):
        column = position + 1 + (len(item) - len(item.lstrip()))
        position += len(item) + 1
        match = _TAG_RE.match(item)
        if match is None:
            problems.append((line_number, column, f"malformed tag '{item.strip()}', expected <slot>=<tag>"))
            continue
        slot = match["slot"]
        if slot not in SLOT_SUBSETS:
            problems.append((
                line_number, column,
                f"unknown slot '{slot}', expected one of {', '.join(SLOT_NAMES)}",
            ))
            continue
        if slot in tags:
            problems.append((line_number, column, f"slot '{slot}' is tagged twice"))
            continue
        tags[slot] = match["tag"]
        columns[slot] = column
    return tags, columns


def parse_script(text: str) -> DissectionScript:
    """
    Parse and statically check a dissection script.

    Raises
    ------
    ScriptSyntaxError
        With one ``(line, column, message)`` diagnostic per problem found.
    """
    problems: typing.List[typing.Tuple[int, int, str]] = []
    target: typing.Optional[typing.Tuple[int, LatticeCoord]] = None
    checker: typing.Optional[_ScriptChecker] = None
    steps: typing.List[ExpansionStep] = []
    expanded_at: typing.Dict[PieceRef, int] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        stripped = content.lstrip()
        if not stripped:
            continue
        indent = len(content) - len(stripped)

        if stripped.startswith("target"):
            match = _TARGET_RE.match(stripped)
            if match is None:
                problems.append((line_number, indent + 1, "expected 'target <size> [at <i>,<j>]'"))
                continue
            if target is not None:
                problems.append((line_number, indent + 1, "the target is already defined"))
                continue
            anchor = LatticeCoord(int(match["i"] or 0), int(match["j"] or 0))
            target = (int(match["size"]), anchor)
            checker = _ScriptChecker(target[0])
            continue

        if not stripped.startswith("expand"):
            word = stripped.split()[0]
            problems.append((line_number, indent + 1, f"unknown statement '{word}'"))
            continue
        match = _EXPAND_RE.match(stripped)
        if match is None:
            problems.append((
                line_number, indent + 1,
                "expected 'expand <ref> = <n> <k> <l> <t> [tags <slot>=<tag>,...]'",
            ))
            continue
        if checker is None:
            problems.append((line_number, indent + 1, "'expand' before the 'target' line"))
            continue

        ref_column = indent + match.start("ref") + 1
        try:
            ref = PieceRef.parse(match["ref"])
        except ValueError as exc:
            problems.append((line_number, ref_column, str(exc)))
            continue
        if ref in expanded_at:
            problems.append((
                line_number, ref_column,
                f"'{ref}' is already expanded on line {expanded_at[ref]}",
            ))
            continue

        tags: typing.Dict[str, str] = {}
        tag_columns: typing.Dict[str, int] = {}
        if match["tags"] is not None:
            tags, tag_columns = _parse_tags(
                match["tags"], indent + match.start("tags"), line_number, problems,
            )
        step = ExpansionStep(
            target=ref,
            params=(int(match["n"]), int(match["k"]), int(match["l"]), int(match["t"])),
            tags=tags,
            line=line_number,
        )
        found = checker.expand(step, tag_columns, ref_column, indent + match.start("n") + 1)
        problems.extend(found)
        if not found:
            expanded_at[ref] = line_number
            steps.append(step)

    if target is None:
        problems.append((1, 1, "missing 'target <size>' line"))
    elif checker is not None:
        problems.extend(checker.unpaired())
    if problems:
        raise errors.ScriptSyntaxError(sorted(problems))
    assert target is not None
    return DissectionScript(target_size=target[0], anchor=target[1], steps=tuple(steps))
