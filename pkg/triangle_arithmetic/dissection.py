# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

"""
Interpretation and verification of dissection scripts.

Each ``expand`` step replaces a piece by the seven terms of the addition
identity laid out inside it (zero-size terms vanish). Term signs multiply
along the expansion path, and tagged pieces are removed in pairs once their
placements are shown to coincide with opposite signs.
"""

from __future__ import annotations

import dataclasses
import logging
import typing

from . import errors
from .builtin_scripts import BUILTIN_SCRIPTS
from .chains import accumulate, geom_check, SimplexId
from .dissection_parser import (
    DissectionScript,
    ExpansionStep,
    parse_script,
    PieceRef,
    ROOT,
)
from .lattice_geom import eq8_layout, eq8_terms, LatticeCoord, PlacedTriangle, SignedTriangle
from .ring_core import Mode

__all__ = [
    "builtin_dissection",
    "Cancellation",
    "DissectionResult",
    "DissectionScript",
    "ExpansionStep",
    "interpret",
    "parse_script",
    "PerfectReport",
    "PieceRef",
    "verify_perfect",
]


@dataclasses.dataclass(frozen=True)
class Cancellation:
    tag: str
    triangle: PlacedTriangle
    positive: PieceRef
    negative: PieceRef


@dataclasses.dataclass(frozen=True)
class DissectionResult:
    target: PlacedTriangle
    pieces: typing.Tuple[typing.Tuple[PieceRef, SignedTriangle], ...]
    cancellations: typing.Tuple[Cancellation, ...]
    steps: int
    #: Set when the replay was asked to verify the result.
    report: typing.Optional[PerfectReport] = None

    @property
    def piece_count(self) -> int:
        return len(self.pieces)

    @property
    def signed_sizes(self) -> typing.Tuple[int, ...]:
        return tuple(sorted(int(piece.triangle.size) for _, piece in self.pieces))

    @property
    def sum_of_squares(self) -> int:
        return sum(size * size for size in self.signed_sizes)


def builtin_dissection(which: str) -> DissectionScript:
    """Parsed builtin script ``"a"`` or ``"b"``."""
    try:
        text = BUILTIN_SCRIPTS[which.lower()]
    except KeyError as exc:
        raise ValueError(
            f"Unknown builtin dissection '{which}'; expected one of {', '.join(BUILTIN_SCRIPTS)}",
        ) from exc
    return parse_script(text)


_logger = logging.getLogger(__name__)


def _expand(
    step: ExpansionStep,
    parent: SignedTriangle,
) -> typing.List[typing.Tuple[str, SignedTriangle]]:
    n, k, l, t = step.params  # noqa: E741
    placed = parent.triangle
    base = PlacedTriangle(placed.anchor + LatticeCoord(k, l), t)
    layout = eq8_layout(base, n, k, l)
    terms = [
        (name, term) for name, term in eq8_terms(layout) if term.triangle.size != 0
    ]
    residual = geom_check(terms=[term for _, term in terms], target=(1, placed), mode=Mode.N2)
    if not residual.is_empty():
        raise errors.ResidualNotEmptyError(str(step.target), len(residual))
    return [
        (name, SignedTriangle(parent.sign * term.sign, term.triangle)) for name, term in terms
    ]


def interpret(
    script: DissectionScript,
    root_anchor: typing.Optional[LatticeCoord] = None,
    *,
    verify: bool = False,
    logger: logging.Logger = _logger,
) -> DissectionResult:
    """
    Replay a parsed script.

    Parameters
    ----------
    script
        The parsed dissection script.
    root_anchor
        Anchor of the target triangle; defaults to the one in the script.
    verify
        Attach the :func:`verify_perfect` report of the final pieces.
    logger
        Receives one debug record per step and per cancellation.

    Raises
    ------
    UnknownPieceError
        A step expands a piece that no longer exists.
    ResidualNotEmptyError
        A step's terms do not rebuild the piece they replace.
    CancellationMismatchError
        A tag pairs pieces with different placements or equal signs, or a
        tagged piece is expanded before its partner appears.
    """
    anchor = root_anchor if root_anchor is not None else script.anchor
    target = PlacedTriangle(anchor, script.target_size)
    live: typing.Dict[PieceRef, SignedTriangle] = {ROOT: SignedTriangle(1, target)}
    pending: typing.Dict[str, typing.Tuple[PieceRef, SignedTriangle]] = {}
    cancellations: typing.List[Cancellation] = []

    for step in script.steps:
        parent = live.pop(step.target, None)
        if parent is None:
            raise errors.UnknownPieceError(str(step.target))
        for tag, (pending_ref, _) in pending.items():
            if pending_ref == step.target:
                raise errors.CancellationMismatchError(
                    f"Piece '{step.target}' carries the unmatched tag '{tag}' and cannot be expanded",
                )
        children = _expand(step, parent)
        logger.debug(
            "Expanded %s = %s into %d pieces", step.target, step.params, len(children),
        )
        for name, child in children:
            ref = step.target.child(name)
            live[ref] = child
            tag = step.tags.get(name)
            if tag is None:
                continue
            if tag not in pending:
                pending[tag] = (ref, child)
                continue
            other_ref, other = pending.pop(tag)
            if other.triangle != child.triangle or other.sign == child.sign:
                raise errors.CancellationMismatchError(
                    f"Tag '{tag}' pairs {other.sign:+d}{other.triangle} ({other_ref}) "
                    f"with {child.sign:+d}{child.triangle} ({ref})",
                )
            del live[ref]
            del live[other_ref]
            positive, negative = (ref, other_ref) if child.sign > 0 else (other_ref, ref)
            cancellations.append(Cancellation(tag, child.triangle, positive, negative))
            logger.debug("Cancelled tag %s at %s", tag, child.triangle)

    if pending:
        raise errors.CancellationMismatchError(
            f"Unmatched tag(s): {', '.join(sorted(pending))}",
        )
    result = DissectionResult(
        target=target,
        pieces=tuple(live.items()),
        cancellations=tuple(cancellations),
        steps=len(script.steps),
    )
    if verify:
        report = verify_perfect(result, target)
        logger.debug("Perfect dissection check: %s", report.failures() or "passed")
        result = dataclasses.replace(result, report=report)
    return result


@dataclasses.dataclass(frozen=True)
class PerfectReport:
    piece_count: int
    #: Every piece has sign +1 and a non-zero size.
    all_positive: bool
    #: The pieces cover every cell of the target exactly once and nothing else.
    exact_tiling: bool
    #: Signed sizes used more than once.
    repeated_sizes: typing.Tuple[int, ...]
    sum_of_squares: int
    target_square: int

    @property
    def distinct(self) -> bool:
        return not self.repeated_sizes

    @property
    def squares_match(self) -> bool:
        return self.sum_of_squares == self.target_square

    @property
    def passed(self) -> bool:
        return self.all_positive and self.exact_tiling and self.distinct and self.squares_match

    def failures(self) -> typing.List[str]:
        problems = []
        if not self.all_positive:
            problems.append("some pieces are negative or empty")
        if not self.exact_tiling:
            problems.append("pieces do not tile the target with multiplicity one")
        if not self.distinct:
            problems.append(
                "repeated sizes: " + ", ".join(str(size) for size in self.repeated_sizes),
            )
        if not self.squares_match:
            problems.append(f"sum of squares {self.sum_of_squares} != {self.target_square}")
        return problems


def verify_perfect(
    r: typing.Union[DissectionResult, typing.Sequence[SignedTriangle]],
    target: PlacedTriangle,
) -> PerfectReport:
    """
    Check that ``r`` is a perfect dissection of ``target``: an exact tiling by
    pieces of pairwise distinct signed size (mirror images count as distinct)
    whose squared sizes add up to the square of the target size.
    """
    pieces = [piece for _, piece in r.pieces] if isinstance(r, DissectionResult) else list(r)
    counts: typing.Dict[SimplexId, int] = {}
    for piece in pieces:
        accumulate(counts, piece.triangle, Mode.N2, piece.sign)
    expected: typing.Dict[SimplexId, int] = {}
    accumulate(expected, target, Mode.N2, 1)
    exact = {cell: value for cell, value in counts.items() if value} == expected

    seen: typing.Set[int] = set()
    repeated: typing.Set[int] = set()
    for piece in pieces:
        size = int(piece.triangle.size)
        (repeated if size in seen else seen).add(size)

    return PerfectReport(
        piece_count=len(pieces),
        all_positive=all(piece.sign == 1 and piece.triangle.size != 0 for piece in pieces),
        exact_tiling=exact,
        repeated_sizes=tuple(sorted(repeated)),
        sum_of_squares=sum(int(piece.triangle.size) ** 2 for piece in pieces),
        target_square=int(target.size) ** 2,
    )
