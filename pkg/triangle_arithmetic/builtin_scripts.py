# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

"""
The two known ways of writing a 15-piece perfect dissection of ``<39>`` as
seven nested applications of the seven-term identity.

Term names follow :data:`identity.EQ8_TERMS`: ``root.nl`` is the
``<n + 0 + l + t>`` term of the first expansion, and so on. Tags name the
pairs of equal pieces of opposite sign that cancel.
"""

from __future__ import annotations

import typing

from ._typing_compat import Final

DISSECTION_A: Final = """\
# <39> with the positive <19>, <20> and <27> around a central <-12>
target 39
expand root = 19 12 20 -12 tags n=1,l=2
expand root.nl = 11 16 11 -11 tags k=3
expand root.nl.nk = 7 7 9 -7 tags nk=1,l=4
expand root.nl.nk.kl = 2 7 2 -2 tags nl=4,k=5
expand root.nl.nk.kl.kl = 5 5 2 -5 tags nk=5,kl=7,l=6
expand root.nl.kl = 8 8 8 -8 tags kl=2
expand root.nl.kl.nk = 3 5 3 -3 tags nk=3,k=7,t=6
"""

DISSECTION_B: Final = """\
# <39> again, this time refining the central <-19> downwards
target 39
expand root = 19 19 20 -19 tags nl=6,l=1
expand root.t = -12 -7 -7 7 tags n=2
expand root.t.nk = -5 -7 -5 5 tags nk=7,nl=2,k=3
expand root.t.nk.kl = -5 -2 -2 2 tags n=4
expand root.t.nk.kl.nk = -3 -2 -3 3 tags nk=3,nl=4,k=5
expand root.t.nk.kl.nk.kl = -11 9 -11 11 tags k=6
expand root.t.nk.kl.nk.kl.nk = 8 1 8 -8 tags nk=5,kl=1,k=7
"""

BUILTIN_SCRIPTS: Final[typing.Dict[str, str]] = {
    "a": DISSECTION_A,
    "b": DISSECTION_B,
}
