# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

from __future__ import annotations

import logging
from unittest import mock

import pytest

from ..dissection import builtin_dissection, DissectionResult, interpret


@pytest.fixture
def logger() -> mock.Mock:
    return mock.Mock(spec=logging.Logger)


@pytest.fixture(scope="session")
def dissection_a() -> DissectionResult:
    return interpret(builtin_dissection("a"))


@pytest.fixture(scope="session")
def dissection_b() -> DissectionResult:
    return interpret(builtin_dissection("b"))
