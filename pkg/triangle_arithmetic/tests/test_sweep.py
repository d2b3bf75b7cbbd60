# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

from __future__ import annotations

import itertools
from unittest import mock

import pytest

from .. import identity, sweep
from ..lattice_geom import LatticeCoord
from ..ring_core import Mode
from ..sweep import SweepDomain


def test_sweep_domain() -> None:
    domain = SweepDomain(increments=(-1, 1), t=(0, 1))
    assert len(domain) == 54
    params = list(domain)
    assert len(params) == 54
    assert params[0] == (-1, -1, -1, 0)
    assert params[-1] == (1, 1, 1, 1)
    assert len(SweepDomain(increments=(1, 0))) == 0


def test_sweep_domain__for_mode() -> None:
    assert SweepDomain.for_mode(Mode.N2) == SweepDomain((-6, 6), (-12, 12))
    assert SweepDomain.for_mode(Mode.N20) == SweepDomain((-4, 4), (-8, 8))


@pytest.mark.parametrize("mode", [Mode.N2, Mode.N20])
def test_sweep_eq8(mode: Mode, logger: mock.Mock) -> None:
    domain = SweepDomain(increments=(-2, 2), t=(-4, 4))
    result = sweep.sweep_eq8(domain, mode, anchor=LatticeCoord(2, -1), logger=logger)
    assert result.passed
    assert result.checked == len(domain)
    assert sum(result.cases.values()) == len(domain)
    assert logger.debug.call_count == 9 + 1
    details = result.details()
    assert details["mode"] == mode.value
    assert details["failures"] == []


def test_cases_covered() -> None:
    # Every case of the classification shows up in the default N20 domain.
    seen = set()
    for n, k, l in itertools.product(range(-4, 5), repeat=3):  # noqa: E741
        for t in range(-8, 9):
            normalized, _ = identity.normalize_eq8(n, k, l, t)
            seen.add(identity.case_classify(*normalized.params).case_number)
    assert seen == set(range(1, 11))


def test_sweep_arith(logger: mock.Mock) -> None:
    result = sweep.sweep_arith(500, seed=7, logger=logger)
    assert result.passed
    assert result.failures == {"eq8": (), "eq27": ()}
    assert result.details()["seed"] == 7


def test_sweep_eq26(logger: mock.Mock) -> None:
    result = sweep.sweep_eq26(10, 5, logger=logger)
    assert result.passed
    assert result.details() == {
        "arith_range": [-10, 10],
        "geom_range": [1, 5],
        "arith_failures": [],
        "geom_failures": [],
    }
    assert logger.debug.call_count == 5
