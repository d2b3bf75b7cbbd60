# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

"""
Exhaustive and randomized checks over parameter domains.

The unit tests run these on small domains; ``tri sweep`` runs the full
ones.
"""

from __future__ import annotations

import collections
import dataclasses
import itertools
import logging
import random
import typing

from .chains import eq26_placement, geom_check
from .identity import (
    arith_check,
    case_classify,
    make_eq3,
    make_eq8,
    make_eq26,
    make_eq27,
    normalize_eq8,
)
from .lattice_geom import eq8_layout, eq8_terms, LatticeCoord, ORIGIN, PlacedTriangle
from .ring_core import Mode

_logger = logging.getLogger(__name__)

Params = typing.Tuple[int, int, int, int]


@dataclasses.dataclass(frozen=True)
class SweepDomain:
    """Inclusive ranges for the increments ``n, k, l`` and for ``t``."""
    increments: typing.Tuple[int, int] = (-6, 6)
    t: typing.Tuple[int, int] = (-12, 12)

    @classmethod
    def for_mode(cls, mode: Mode) -> SweepDomain:
        if mode is Mode.N20:
            return cls(increments=(-4, 4), t=(-8, 8))
        return cls()

    def __iter__(self) -> typing.Iterator[Params]:
        low, high = self.increments
        span = range(low, high + 1)
        for t in range(self.t[0], self.t[1] + 1):
            for n, k, l in itertools.product(span, repeat=3):  # noqa: E741
                yield (n, k, l, t)

    def __len__(self) -> int:
        width = self.increments[1] - self.increments[0] + 1
        return max(0, width) ** 3 * max(0, self.t[1] - self.t[0] + 1)


@dataclasses.dataclass(frozen=True)
class Eq8SweepResult:
    mode: Mode
    checked: int
    #: Parameters whose layout leaves a non-empty residual.
    failures: typing.Tuple[Params, ...]
    #: Case number -> how many configurations fell into it.
    cases: typing.Mapping[int, int]
    #: Parameters where ``n + k + l == 0`` and "same size as the base" disagree.
    congruence_violations: typing.Tuple[Params, ...]
    #: Parameters mapped onto a big triangle already produced for the same base.
    collisions: typing.Tuple[Params, ...]

    @property
    def missing_cases(self) -> typing.Tuple[int, ...]:
        return tuple(number for number in range(1, 11) if not self.cases.get(number))

    @property
    def passed(self) -> bool:
        return not (self.failures or self.congruence_violations or self.collisions)

    def details(self) -> typing.Dict[str, typing.Any]:
        return {
            "mode": self.mode.value,
            "checked": self.checked,
            "failures": [list(params) for params in self.failures],
            "cases": {str(number): count for number, count in sorted(self.cases.items())},
            "missing_cases": list(self.missing_cases),
            "congruence_violations": [list(params) for params in self.congruence_violations],
            "collisions": [list(params) for params in self.collisions],
        }


def sweep_eq8(
    domain: typing.Optional[SweepDomain] = None,
    mode: Mode = Mode.N2,
    *,
    anchor: LatticeCoord = ORIGIN,
    logger: logging.Logger = _logger,
) -> Eq8SweepResult:
    """
    Lay out the addition identity for every configuration of ``domain`` and
    check that its chains cancel.

    Alongside, each configuration is classified (after rewriting negative
    increments), the big triangle is checked to keep the base size exactly
    when ``n + k + l == 0``, and different increments on the same base are
    checked to give different big triangles.
    """
    domain = domain if domain is not None else SweepDomain.for_mode(mode)
    failures: typing.List[Params] = []
    congruence: typing.List[Params] = []
    collisions: typing.List[Params] = []
    cases: typing.Counter[int] = collections.Counter()
    seen: typing.Dict[typing.Tuple[int, PlacedTriangle], Params] = {}
    checked = 0
    current_t = None

    for params in domain:
        n, k, l, t = params  # noqa: E741
        if t != current_t:
            current_t = t
            logger.debug("Sweeping t=%d (%d/%d checked)", t, checked, len(domain))
        base = PlacedTriangle(anchor, t)
        layout = eq8_layout(base, n, k, l)
        residual = geom_check(
            terms=[term for _, term in eq8_terms(layout)],
            target=(1, layout.big),
            mode=mode,
        )
        if not residual.is_empty():
            failures.append(params)

        if (n + k + l == 0) != (layout.big.size == base.size):
            congruence.append(params)
        key = (t, layout.big)
        if key in seen:
            collisions.append(params)
        else:
            seen[key] = params

        normalized, _ = normalize_eq8(n, k, l, t)
        cases[case_classify(*normalized.params).case_number] += 1
        checked += 1

    result = Eq8SweepResult(
        mode=mode,
        checked=checked,
        failures=tuple(failures),
        cases=dict(cases),
        congruence_violations=tuple(congruence),
        collisions=tuple(collisions),
    )
    logger.debug(
        "Swept %d configurations in mode %s: %d failure(s)", checked, mode.value, len(failures),
    )
    return result


@dataclasses.dataclass(frozen=True)
class ArithSweepResult:
    samples: int
    seed: int
    #: Family -> sampled parameters that failed where they should hold.
    failures: typing.Mapping[str, typing.Tuple[typing.Tuple[int, ...], ...]]
    #: Area-only instances whose constant residual was not exactly one.
    eq3_unexpected: typing.Tuple[typing.Tuple[int, ...], ...]

    @property
    def passed(self) -> bool:
        return not any(self.failures.values()) and not self.eq3_unexpected

    def details(self) -> typing.Dict[str, typing.Any]:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "failures": {
                family: [list(params) for params in found]
                for family, found in sorted(self.failures.items())
            },
            "eq3_unexpected": [list(params) for params in self.eq3_unexpected],
        }


def sweep_arith(
    samples: int = 100_000,
    seed: int = 0,
    *,
    bound: int = 20,
    eq27_bound: int = 10,
    logger: logging.Logger = _logger,
) -> ArithSweepResult:
    """
    Random arithmetic checks: the seven-term identity holds with the constant
    component, the six-term area identity misses it by exactly one, and the
    stepped identity for ``<na+t>`` holds.
    """
    rng = random.Random(seed)
    eq8_failures = []
    eq27_failures = []
    eq3_unexpected = []
    for index in range(samples):
        n, k, l, t = (rng.randint(-bound, bound) for _ in range(4))  # noqa: E741
        if not arith_check(make_eq8(n, k, l, t), Mode.N20).holds:
            eq8_failures.append((n, k, l, t))
        area_only = arith_check(make_eq3(n, k, l), Mode.N20)
        if area_only.residual[:2] != (0, 0) or area_only.residual[2] != 1:
            eq3_unexpected.append((n, k, l))
        a, k2, n2, t2 = (rng.randint(-eq27_bound, eq27_bound) for _ in range(4))
        if not arith_check(make_eq27(a, k2, n2, t2), Mode.N20).holds:
            eq27_failures.append((a, k2, n2, t2))
        if index and index % 10_000 == 0:
            logger.debug("Checked %d/%d random samples", index, samples)
    return ArithSweepResult(
        samples=samples,
        seed=seed,
        failures={"eq8": tuple(eq8_failures), "eq27": tuple(eq27_failures)},
        eq3_unexpected=tuple(eq3_unexpected),
    )


@dataclasses.dataclass(frozen=True)
class Eq26SweepResult:
    arith_failures: typing.Tuple[int, ...]
    geom_failures: typing.Tuple[int, ...]
    arith_range: typing.Tuple[int, int]
    geom_range: typing.Tuple[int, int]

    @property
    def passed(self) -> bool:
        return not (self.arith_failures or self.geom_failures)

    def details(self) -> typing.Dict[str, typing.Any]:
        return {
            "arith_range": list(self.arith_range),
            "geom_range": list(self.geom_range),
            "arith_failures": list(self.arith_failures),
            "geom_failures": list(self.geom_failures),
        }


def sweep_eq26(
    arith_bound: int = 10,
    geom_max: int = 8,
    *,
    logger: logging.Logger = _logger,
) -> Eq26SweepResult:
    """
    The counting identity in the arithmetic sense for ``|n| <= arith_bound``
    and with its canonical placement for ``1 <= n <= geom_max``.
    """
    arith_failures = [
        n for n in range(-arith_bound, arith_bound + 1)
        if not arith_check(make_eq26(n), Mode.N20).holds
    ]
    geom_failures = []
    for n in range(1, geom_max + 1):
        placement = eq26_placement(ORIGIN, n)
        residual = geom_check(placement.terms, (1, placement.target), Mode.N20)
        if not residual.is_empty():
            geom_failures.append(n)
        logger.debug("Counting placement of <%d>: %d residual simplices", n, len(residual))
    return Eq26SweepResult(
        arith_failures=tuple(arith_failures),
        geom_failures=tuple(geom_failures),
        arith_range=(-arith_bound, arith_bound),
        geom_range=(1, geom_max),
    )
