# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

from __future__ import annotations

import typing


class RingOverflowError(ArithmeticError):
    msg_format = (
        "Value {value} does not fit in a signed {bits}-bit integer"
    )

    def __init__(self, value: int, bits: int, *args: object) -> None:
        msg = self.msg_format.format(value=value, bits=bits)
        super().__init__(msg, *args)


class ParityError(ValueError):
    msg_format = (
        "Orthogonal pair ({s2}, {s1}) has odd parity and is not the image of "
        "an integer combination of <1> and <-1>"
    )

    def __init__(self, s2: int, s1: int, *args: object) -> None:
        msg = self.msg_format.format(s2=s2, s1=s1)
        super().__init__(msg, *args)


class InvalidSlotSetError(ValueError):
    pass


class NegativeSlotError(ValueError):
    msg_format = (
        "Slot '{slot}' is negative ({value}); rewrite the instance with "
        "rewrite_neg before classifying it"
    )

    def __init__(self, slot: str, value: int, *args: object) -> None:
        msg = self.msg_format.format(slot=slot, value=value)
        super().__init__(msg, *args)


class NonIntegerPlacementError(ValueError):
    pass


class SearchBudgetExceeded(RuntimeError):
    msg_format = (
        "Placement search explored more than {budget} nodes"
    )

    def __init__(self, budget: int, *args: object) -> None:
        msg = self.msg_format.format(budget=budget)
        super().__init__(msg, *args)


class ScriptSyntaxError(ValueError):
    def __init__(self, diagnostics: typing.Sequence[typing.Tuple[int, int, str]]) -> None:
        #: (line, column, message) triples, 1-based.
        self.diagnostics = tuple(diagnostics)
        super().__init__(self.format())

    def format(self) -> str:
        return "\n".join(
            f"line {line}, column {column}: {message}"
            for line, column, message in self.diagnostics
        )


class ResidualNotEmptyError(RuntimeError):
    msg_format = (
        "Expansion of '{ref}' does not cancel: residual has {size} non-zero cells"
    )

    def __init__(self, ref: str, size: int, *args: object) -> None:
        msg = self.msg_format.format(ref=ref, size=size)
        super().__init__(msg, *args)


class CancellationMismatchError(RuntimeError):
    pass


class UnknownPieceError(LookupError):
    msg_format = (
        "Piece '{ref}' does not exist or has already been consumed"
    )

    def __init__(self, ref: str, *args: object) -> None:
        msg = self.msg_format.format(ref=ref)
        super().__init__(msg, *args)


class UnsupportedSerialization(ValueError):
    msg_format = (
        "Unsupported format '{format_name}'."
    )

    def __init__(self, format_name: str, *args: object) -> None:
        msg = self.msg_format.format(format_name=format_name)
        super().__init__(msg, *args)
