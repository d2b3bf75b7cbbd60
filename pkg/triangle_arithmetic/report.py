# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

from __future__ import annotations

import dataclasses
import enum
import json
import typing

from . import errors
from ._typing_compat import Protocol

JsonValue = typing.Any


class Format(enum.Enum):
    JSON: str = "json"
    TEXT: str = "text"


@dataclasses.dataclass(frozen=True)
class Report:
    #: The command line as typed, e.g. ``verify eq8``.
    command: str
    passed: bool
    #: JSON compatible values only; the key set is fixed per command.
    details: typing.Mapping[str, JsonValue] = dataclasses.field(default_factory=dict)
    elapsed: float = 0.0

    def as_dict(self) -> typing.Dict[str, JsonValue]:
        return {
            "command": self.command,
            "passed": self.passed,
            "details": dict(self.details),
            "elapsed": round(self.elapsed, 6),
        }


class Serializer(Protocol):
    def serialize_report(self, report: Report) -> str:
        ...


class SerializerJson(Serializer):
    def serialize_report(self, report: Report) -> str:
        return json.dumps(report.as_dict(), sort_keys=True, indent=2)


class SerializerText(Serializer):
    def serialize_report(self, report: Report) -> str:
        lines = [f"{report.command}: {'PASS' if report.passed else 'FAIL'}"]
        for key, value in sorted(report.details.items()):
            lines.append(f"  {key}: {self._format_value(value)}")
        return "\n".join(lines)

    def _format_value(self, value: JsonValue) -> str:
        if isinstance(value, (list, tuple)):
            return ", ".join(self._format_value(element) for element in value) or "-"
        if isinstance(value, dict):
            return "; ".join(
                f"{key}={self._format_value(element)}" for key, element in sorted(value.items())
            ) or "-"
        if value is None:
            return "-"
        return str(value)


serializers: typing.Dict[Format, Serializer] = {
    Format.JSON: SerializerJson(),
    Format.TEXT: SerializerText(),
}


def serialize(report: Report, format: typing.Union[Format, str]) -> str:
    if isinstance(format, str):
        try:
            format = Format(format)
        except ValueError as exc:
            raise errors.UnsupportedSerialization(format) from exc
    serializer = serializers.get(format)
    if serializer is None:
        raise errors.UnsupportedSerialization(str(format))
    return serializer.serialize_report(report)
