# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

"""
Exact representations of the triangle rings and the embeddings of triangle
labels into them.

A triangle label ``<n>`` of signed side ``n`` lives in three places:

 * the ring ``P2(Z) = {x<1> + y<-1>}`` with the bilinear product
   ``(x1x2 + y1y2, x1y2 + x2y1)`` (``RingElem2``), where
   ``<n> = n(n+1)/2 <1> + n(n-1)/2 <-1>``;
 * its orthogonal form ``s2*A2 + s1*A1`` with the idempotents
   ``A2 = (<1> + <-1>)/2`` and ``A1 = (<1> - <-1>)/2`` (``OrthoPair``), where
   ``<n> = (n**2, n)``;
 * the componentwise ring ``Z x Z x Z`` (``TriVec3``), where ``<n> = (n**2, n, 1)``
   also counts the connected components.

Integers are Python integers and never wrap. Every operation that can grow its
operands takes an optional ``bits`` keyword: when given, a result outside the
signed ``bits``-bit range raises ``RingOverflowError``.
"""

from __future__ import annotations

import dataclasses
import enum
from fractions import Fraction
import typing

from . import errors


class Mode(enum.Enum):
    #: Area only: components i = 2, 1.
    N2 = "n2"
    #: Area and connected components: i = 2, 1, 0.
    N20 = "n20"


@dataclasses.dataclass(frozen=True)
class RingElem2:
    #: Coefficient of <1>.
    x: int
    #: Coefficient of <-1>.
    y: int

    def __add__(self, other: RingElem2) -> RingElem2:
        return add2(self, other)

    def __mul__(self, other: RingElem2) -> RingElem2:
        return mul2(self, other)


@dataclasses.dataclass(frozen=True)
class OrthoPair:
    #: Coefficient of A2 (the area, n**2 for a label).
    s2: int
    #: Coefficient of A1 (the signed side, n for a label).
    s1: int


@dataclasses.dataclass(frozen=True)
class TriVec3:
    #: i = 2 component.
    a: int
    #: i = 1 component.
    b: int
    #: i = 0 component.
    c: int

    def __add__(self, other: TriVec3) -> TriVec3:
        return add3(self, other)

    def __sub__(self, other: TriVec3) -> TriVec3:
        return sub3(self, other)

    def __mul__(self, other: TriVec3) -> TriVec3:
        return mul3(self, other)

    def __neg__(self) -> TriVec3:
        return TriVec3(-self.a, -self.b, -self.c)

    def as_tuple(self) -> typing.Tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclasses.dataclass(frozen=True)
class TriangleLabel:
    """
    The signed triangle ``sign*<n>``.

    ``n < 0`` is the mirrored (downward) triangle and ``n == 0`` a point.
    ``sign == -1`` is the red triangle which, laid on the black one, leaves
    the empty set.
    """
    n: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"Label sign must be +1 or -1, got {self.sign}")

    def __neg__(self) -> TriangleLabel:
        return TriangleLabel(self.n, -self.sign)

    def __str__(self) -> str:
        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}<{self.n}>"


def _checked(value: int, bits: typing.Optional[int]) -> int:
    if bits is None:
        return value
    bound = 1 << (bits - 1)
    if not -bound <= value < bound:
        raise errors.RingOverflowError(value, bits)
    return value


def add2(a: RingElem2, b: RingElem2, *, bits: typing.Optional[int] = None) -> RingElem2:
    return RingElem2(_checked(a.x + b.x, bits), _checked(a.y + b.y, bits))


def neg2(a: RingElem2) -> RingElem2:
    return RingElem2(-a.x, -a.y)


def sub2(a: RingElem2, b: RingElem2, *, bits: typing.Optional[int] = None) -> RingElem2:
    return add2(a, neg2(b), bits=bits)


def scale2(coeff: int, a: RingElem2, *, bits: typing.Optional[int] = None) -> RingElem2:
    return RingElem2(_checked(coeff * a.x, bits), _checked(coeff * a.y, bits))


def mul2(a: RingElem2, b: RingElem2, *, bits: typing.Optional[int] = None) -> RingElem2:
    x = _checked(a.x * b.x, bits) + _checked(a.y * b.y, bits)
    y = _checked(a.x * b.y, bits) + _checked(b.x * a.y, bits)
    return RingElem2(_checked(x, bits), _checked(y, bits))


def to_ortho(a: RingElem2) -> OrthoPair:
    return OrthoPair(a.x + a.y, a.x - a.y)


def from_ortho(p: OrthoPair) -> RingElem2:
    """
    Inverse of :func:`to_ortho`.

    Raises
    ------
    ParityError
        If ``s2 + s1`` is odd, the pair has no integer preimage.
    """
    if (p.s2 + p.s1) % 2:
        raise errors.ParityError(p.s2, p.s1)
    return RingElem2((p.s2 + p.s1) // 2, (p.s2 - p.s1) // 2)


def basis_coefficients(n: int) -> typing.Tuple[int, int]:
    """Number of <1> and <-1> cells in <n>: (n(n+1)/2, n(n-1)/2)."""
    return (n * (n + 1) // 2, n * (n - 1) // 2)


def embed2(label: TriangleLabel) -> RingElem2:
    x, y = basis_coefficients(label.n)
    return RingElem2(label.sign * x, label.sign * y)


def embed2_ortho(label: TriangleLabel) -> OrthoPair:
    return OrthoPair(label.sign * label.n * label.n, label.sign * label.n)


def embed3(label: TriangleLabel) -> TriVec3:
    return TriVec3(label.sign * label.n * label.n, label.sign * label.n, label.sign)


def embed_real(r: Fraction) -> typing.Tuple[Fraction, Fraction]:
    # Rational labels only exist formally: (r**2, r), with no cell structure.
    return (r * r, r)


def add3(a: TriVec3, b: TriVec3, *, bits: typing.Optional[int] = None) -> TriVec3:
    return TriVec3(
        _checked(a.a + b.a, bits),
        _checked(a.b + b.b, bits),
        _checked(a.c + b.c, bits),
    )


def sub3(a: TriVec3, b: TriVec3, *, bits: typing.Optional[int] = None) -> TriVec3:
    return add3(a, -b, bits=bits)


def scale3(coeff: int, a: TriVec3, *, bits: typing.Optional[int] = None) -> TriVec3:
    return TriVec3(
        _checked(coeff * a.a, bits),
        _checked(coeff * a.b, bits),
        _checked(coeff * a.c, bits),
    )


def mul3(a: TriVec3, b: TriVec3, *, bits: typing.Optional[int] = None) -> TriVec3:
    return TriVec3(
        _checked(a.a * b.a, bits),
        _checked(a.b * b.b, bits),
        _checked(a.c * b.c, bits),
    )


def is_n2(v: OrthoPair) -> typing.Optional[TriangleLabel]:
    """
    Return the label ``±<n>`` whose orthogonal form is ``v``, if any.

    The point ``(0, 0)`` is reported as ``+<0>``.
    """
    if v.s2 == 0:
        return TriangleLabel(0) if v.s1 == 0 else None
    sign = 1 if v.s2 > 0 else -1
    n = sign * v.s1
    if n * n != sign * v.s2:
        return None
    return TriangleLabel(n, sign)


def is_n20(v: TriVec3) -> typing.Optional[TriangleLabel]:
    if v.c not in (1, -1):
        return None
    sign = v.c
    n = sign * v.b
    if n * n != sign * v.a:
        return None
    return TriangleLabel(n, sign)


def mul_label(n: int, m: int, *, bits: typing.Optional[int] = None) -> TriangleLabel:
    """The product law <n> * <m> = <nm>."""
    return TriangleLabel(_checked(n * m, bits))


def b_vec(a: int, t: int) -> TriVec3:
    """
    The vector ``<2a + t> - 3<a + t>``.

    It is not the embedding of any label (its i = 0 component is -2) but it
    is the unit the generalised counting identities are written with.
    """
    return TriVec3(a * a - 2 * a * t - 2 * t * t, -a - 2 * t, -2)
