# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

"""
Exact arithmetic of triangle labels, signed chains on the triangular lattice
and replayable, self-verifying perfect dissections of triangles
"""

from ._version import version as __version__  # noqa
from .dissection import interpret, verify_perfect  # noqa
from .identity import arith_check, make_eq8  # noqa
from .lattice_geom import eq8_layout, LatticeCoord, PlacedTriangle  # noqa
from .ring_core import Mode, TriangleLabel  # noqa

__all__ = [
    '__version__',
    'arith_check',
    'eq8_layout',
    'interpret',
    'LatticeCoord',
    'make_eq8',
    'Mode',
    'PlacedTriangle',
    'TriangleLabel',
    'verify_perfect',
]
