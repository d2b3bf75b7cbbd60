# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

"""
Symbolic identities between triangle labels.

An identity ``<n> = sum_j c_j <n_j>`` is true in the *arithmetic sense* when
``n**i == sum_j c_j * n_j**i`` for ``i = 2, 1`` (mode N2), and additionally
``i = 0`` (mode N20). This module builds the identity families used
throughout the package, checks them, and rewrites the seven-term addition
identity when some of its increments are negative.

The seven-term identity, for any integers n, k, l, t::

    <n+k+l+t> = <n+k+t> + <n+l+t> + <k+l+t>
                - <n+t> - <k+t> - <l+t>
                + <t>

Each term is named after the increments it contains (``nk``, ``nl``, ``kl``,
``n``, ``k``, ``l``, ``t``).
"""

from __future__ import annotations

import dataclasses
import itertools
import typing

from . import errors
from ._typing_compat import Final, TypeAlias
from .ring_core import Mode, TriangleLabel, TriVec3, b_vec, embed3

INCREMENTS: Final = ("n", "k", "l")

#: Term name -> increments it contains, in the order the terms are written.
EQ8_TERMS: Final[typing.Tuple[typing.Tuple[str, typing.FrozenSet[str]], ...]] = (
    ("nk", frozenset("nk")),
    ("nl", frozenset("nl")),
    ("kl", frozenset("kl")),
    ("n", frozenset("n")),
    ("k", frozenset("k")),
    ("l", frozenset("l")),
    ("t", frozenset()),
)


def eq8_coefficient(subset: typing.AbstractSet[str]) -> int:
    """+1 for the pair terms and <t>, -1 for the single-increment terms."""
    return -1 if len(subset) % 2 else 1


@dataclasses.dataclass(frozen=True)
class SumLabel:
    """
    A label written as the ordered sum ``<n + k + l + t>``.

    Slots that do not take part in a term are written as zero, so
    ``<n + 0 + 0 + t>`` is the ``n`` term.
    """
    n: int
    k: int
    l: int  # noqa: E741
    t: int

    @property
    def value(self) -> int:
        return self.n + self.k + self.l + self.t

    def __str__(self) -> str:
        parts = [str(self.n)]
        for part in (self.k, self.l, self.t):
            parts.append(f"+{part}" if part >= 0 else str(part))
        return "<" + "".join(parts) + ">"


def _sum_label(params: typing.Sequence[int], subset: typing.AbstractSet[str]) -> SumLabel:
    n, k, l, t = params  # noqa: E741
    return SumLabel(
        n if "n" in subset else 0,
        k if "k" in subset else 0,
        l if "l" in subset else 0,
        t,
    )


TermLabel: TypeAlias = typing.Union[TriangleLabel, TriVec3]


@dataclasses.dataclass(frozen=True)
class Term:
    coeff: int
    #: Either a triangle label, or a raw vector which is not itself a label
    #: (for example ``b_vec(a, t)``).
    label: TermLabel
    slots: typing.Optional[SumLabel] = None
    #: The eq8 term name (``nk``, ``n``, ...) when the term comes from the
    #: seven-term identity.
    name: typing.Optional[str] = None

    def embedding(self) -> TriVec3:
        vector = self.label if isinstance(self.label, TriVec3) else embed3(self.label)
        return TriVec3(self.coeff * vector.a, self.coeff * vector.b, self.coeff * vector.c)


@dataclasses.dataclass(frozen=True)
class IdentityInstance:
    lhs: TriangleLabel
    terms: typing.Tuple[Term, ...]
    family: str = "custom"
    params: typing.Tuple[int, ...] = ()
    lhs_slots: typing.Optional[SumLabel] = None
    #: For eq8 instances: the increments flipped by rewrite_neg, relative to
    #: the instance make_eq8 produced.
    negated: typing.FrozenSet[str] = frozenset()

    def __post_init__(self) -> None:
        for term in self.terms:
            if term.coeff == 0:
                raise ValueError(f"Coefficients must be non-zero, got a zero for {term.label}")


@dataclasses.dataclass(frozen=True)
class ArithVerdict:
    holds: bool
    mode: Mode
    #: lhs - rhs per component, ordered i = 2, 1 (and 0 in mode N20).
    residual: typing.Tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class CaseId:
    case_number: int
    canonical_case: int
    #: The slot names playing the roles of n, k, l in the matched case.
    slot_order: typing.Tuple[str, str, str] = INCREMENTS


CANONICAL_CASES: Final = {8: 3, 7: 4, 9: 2, 10: 1}


def instance_sum(inst: IdentityInstance) -> TriVec3:
    """Sum of the embeddings of the right hand side."""
    total = TriVec3(0, 0, 0)
    for term in inst.terms:
        total = total + term.embedding()
    return total


def arith_check(inst: IdentityInstance, mode: Mode) -> ArithVerdict:
    residual = embed3(inst.lhs) - instance_sum(inst)
    components = residual.as_tuple()
    if mode is Mode.N2:
        components = components[:2]
    return ArithVerdict(
        holds=not any(components),
        mode=mode,
        residual=components,
    )


def make_eq3(n: int, k: int, l: int) -> IdentityInstance:  # noqa: E741
    """``<n+k+l> = <n+k> + <n+l> + <k+l> - <n> - <k> - <l>`` (area only)."""
    params = (n, k, l, 0)
    terms = tuple(
        Term(
            coeff=eq8_coefficient(subset),
            label=TriangleLabel(_sum_label(params, subset).value),
            slots=_sum_label(params, subset),
            name=name,
        )
        for name, subset in EQ8_TERMS
        if subset
    )
    return IdentityInstance(
        lhs=TriangleLabel(n + k + l),
        terms=terms,
        family="eq3",
        params=(n, k, l),
        lhs_slots=_sum_label(params, frozenset(INCREMENTS)),
    )


def _eq8_instance(
    params: typing.Tuple[int, int, int, int],
    negated: typing.FrozenSet[str],
) -> IdentityInstance:
    terms = []
    for name, subset in EQ8_TERMS:
        slots = _sum_label(params, subset ^ negated)
        terms.append(
            Term(
                coeff=eq8_coefficient(subset),
                label=TriangleLabel(slots.value),
                slots=slots,
                name=name,
            ),
        )
    lhs_slots = _sum_label(params, frozenset(INCREMENTS) ^ negated)
    return IdentityInstance(
        lhs=TriangleLabel(lhs_slots.value),
        terms=tuple(terms),
        family="eq8",
        params=params,
        lhs_slots=lhs_slots,
        negated=negated,
    )


def make_eq8(n: int, k: int, l: int, t: int) -> IdentityInstance:  # noqa: E741
    return _eq8_instance((n, k, l, t), frozenset())


def make_open_triangle(n: int) -> IdentityInstance:
    """``<-n> = <-n-n-n+2n> = 3<0> - 3<n> + <2n>``, the open triangle construction."""
    return make_eq8(-n, -n, -n, 2 * n)


def make_eq5() -> IdentityInstance:
    """``<4> = 2<3> - 2<1>``: true in area, but not buildable from those pieces."""
    return IdentityInstance(
        lhs=TriangleLabel(4),
        terms=(Term(2, TriangleLabel(3)), Term(-2, TriangleLabel(1))),
        family="eq5",
    )


def rewrite_neg(inst: IdentityInstance, negated_slots: typing.Iterable[str]) -> IdentityInstance:
    """
    Re-root an eq8 instance so the chosen increments change sign.

    Writing ``c' = -c`` for every chosen increment and moving the difference
    into ``t' = t + sum(chosen c)`` leaves every term's value unchanged, so
    the identity and its verdicts are preserved while the slot structure is
    re-expressed. One slot gives the ``<n+k+t> = <n+k+l+t> + ...`` form, two
    slots the ``<n+t> = ...`` form and all three the ``<t> = ...`` form.

    Raises
    ------
    InvalidSlotSetError
        If ``inst`` is not an eq8 instance, or a slot is unknown or repeated.
    """
    if inst.family != "eq8" or len(inst.params) != 4:
        raise errors.InvalidSlotSetError(
            f"rewrite_neg needs an eq8 instance, got family '{inst.family}'",
        )
    chosen = list(negated_slots)
    unknown = [slot for slot in chosen if slot not in INCREMENTS]
    if unknown:
        raise errors.InvalidSlotSetError(
            f"Unknown slot(s) {', '.join(map(repr, unknown))}; expected a subset of n, k, l",
        )
    if len(set(chosen)) != len(chosen):
        raise errors.InvalidSlotSetError(f"Repeated slot in {chosen!r}")
    flipped = frozenset(chosen)
    if not flipped:
        return inst

    values = dict(zip(INCREMENTS, inst.params[:3]))
    t = inst.params[3] + sum(values[slot] for slot in flipped)
    new_params = (
        -values["n"] if "n" in flipped else values["n"],
        -values["k"] if "k" in flipped else values["k"],
        -values["l"] if "l" in flipped else values["l"],
        t,
    )
    return _eq8_instance(new_params, inst.negated ^ flipped)


def normalize_eq8(
    n: int, k: int, l: int, t: int,  # noqa: E741
) -> typing.Tuple[IdentityInstance, typing.FrozenSet[str]]:
    """Rewrite ``make_eq8(n, k, l, t)`` so that every increment is non-negative."""
    negative = [slot for slot, value in zip(INCREMENTS, (n, k, l)) if value < 0]
    return rewrite_neg(make_eq8(n, k, l, t), negative), frozenset(negative)


# Each case is a list of (increments, expected sign) conditions on t plus the
# sum of the increments. Cases 2 to 10 all assume t < 0.
_Condition: TypeAlias = typing.Tuple[str, int]
_CASES: typing.Tuple[typing.Tuple[int, typing.Tuple[_Condition, ...]], ...] = (
    (1, (("", 1),)),
    (2, (("", -1), ("n", 1), ("k", 1), ("l", 1))),
    (3, (("", -1), ("n", 1), ("k", 1), ("l", -1))),
    (4, (("", -1), ("n", 1), ("k", -1), ("l", -1), ("kl", 1))),
    (5, (("", -1), ("n", 1), ("kl", -1))),
    (6, (("", -1), ("n", -1), ("k", -1), ("l", -1), ("nk", 1), ("kl", 1), ("nl", 1))),
    (7, (("", -1), ("n", -1), ("nk", 1), ("kl", -1), ("nl", 1))),
    (8, (("", -1), ("nk", 1), ("kl", -1), ("nl", -1))),
    (9, (("", -1), ("nk", -1), ("kl", -1), ("nl", -1), ("nkl", 1))),
    (10, (("", -1), ("nkl", -1))),
)


def _holds(
    conditions: typing.Iterable[_Condition],
    values: typing.Mapping[str, int],
    t: int,
    strict: bool,
) -> bool:
    for increments, sign in conditions:
        quantity = sign * (t + sum(values[slot] for slot in increments))
        if quantity < 0 or (strict and quantity == 0):
            return False
    return True


def case_classify(n: int, k: int, l: int, t: int) -> CaseId:  # noqa: E741
    """
    Classify a non-negative configuration into the ten construction cases.

    Case conditions are matched up to a relabelling of n, k and l (the
    identity order is tried first), so every configuration gets exactly one
    case. When no case holds with strict inequalities, the first case that
    holds with ``>`` read as ``>=`` (and ``<`` as ``<=``) is returned.

    Raises
    ------
    NegativeSlotError
        If any of n, k, l is negative.
    """
    for slot, value in zip(INCREMENTS, (n, k, l)):
        if value < 0:
            raise errors.NegativeSlotError(slot, value)
    original = dict(zip(INCREMENTS, (n, k, l)))
    orders = list(itertools.permutations(INCREMENTS))
    for strict in (True, False):
        for number, conditions in _CASES:
            for order in orders:
                values = {role: original[slot] for role, slot in zip(INCREMENTS, order)}
                if _holds(conditions, values, t, strict):
                    return CaseId(
                        case_number=number,
                        canonical_case=CANONICAL_CASES.get(number, number),
                        slot_order=typing.cast(typing.Tuple[str, str, str], order),
                    )
    # The relaxed conditions cover the whole closed domain.
    raise AssertionError(f"Unclassified configuration {(n, k, l, t)}")


def _drop_zero(terms: typing.Iterable[Term]) -> typing.Tuple[Term, ...]:
    return tuple(term for term in terms if term.coeff != 0)


def make_eq26(n: int) -> IdentityInstance:
    """Count the <1>, <-1> and point pieces of <n>."""
    return IdentityInstance(
        lhs=TriangleLabel(n),
        terms=_drop_zero([
            Term(n * (n + 1) // 2, TriangleLabel(1)),
            Term(-(n - 1) * (n + 1), TriangleLabel(0)),
            Term(n * (n - 1) // 2, TriangleLabel(-1)),
        ]),
        family="eq26",
        params=(n,),
    )


def make_eq27(a: int, k: int, n: int, t: int) -> IdentityInstance:
    m = n - k
    return IdentityInstance(
        lhs=TriangleLabel(n * a + t),
        terms=_drop_zero([
            Term(m * (m + 1) // 2, TriangleLabel((k + 1) * a + t)),
            Term(-(m - 1) * (m + 1), TriangleLabel(k * a + t)),
            Term(m * (m - 1) // 2, TriangleLabel((k - 1) * a + t)),
        ]),
        family="eq27",
        params=(a, k, n, t),
    )


def make_eq28(a: int, n: int, t: int) -> IdentityInstance:
    inst = make_eq27(a, 1, n, t)
    return dataclasses.replace(inst, family="eq28", params=(a, n, t))


def make_eq29(a: int, n: int, t: int) -> IdentityInstance:
    """``<na+t>`` written with ``<a+t>``, the vector ``b_vec(a, t)`` and ``<t>``."""
    return IdentityInstance(
        lhs=TriangleLabel(n * a + t),
        terms=_drop_zero([
            Term(n * (n + 1) // 2, TriangleLabel(a + t)),
            Term((n - 1) * n // 2, b_vec(a, t)),
            Term((n - 2) * (n - 1) // 2, TriangleLabel(t)),
        ]),
        family="eq29",
        params=(a, n, t),
    )


def make_eq30(n: int) -> IdentityInstance:
    return dataclasses.replace(make_eq29(1, n, 0), family="eq30", params=(n,))


def make_eq31(n: int) -> IdentityInstance:
    return dataclasses.replace(make_eq29(3, n, -1), family="eq31", params=(n,))


def make_eq32(n: int) -> IdentityInstance:
    return dataclasses.replace(make_eq29(2, n, 1), family="eq32", params=(n,))


FAMILIES: Final[typing.Dict[str, typing.Tuple[typing.Callable[..., IdentityInstance], int]]] = {
    "eq3": (make_eq3, 3),
    "eq5": (make_eq5, 0),
    "eq8": (make_eq8, 4),
    "eq26": (make_eq26, 1),
    "eq27": (make_eq27, 4),
    "eq28": (make_eq28, 3),
    "eq29": (make_eq29, 3),
    "eq30": (make_eq30, 1),
    "eq31": (make_eq31, 1),
    "eq32": (make_eq32, 1),
    "open": (make_open_triangle, 1),
}


def family_instance(name: str, params: typing.Sequence[int]) -> IdentityInstance:
    try:
        factory, arity = FAMILIES[name]
    except KeyError as exc:
        raise ValueError(
            f"Unknown identity family '{name}'; expected one of {', '.join(FAMILIES)}",
        ) from exc
    if len(params) != arity:
        raise ValueError(
            f"Family '{name}' takes {arity} parameter(s), got {len(params)}",
        )
    return factory(*params)


def _format_coefficient(coeff: int, first: bool) -> str:
    magnitude = abs(coeff)
    prefix = ("-" if coeff < 0 else "") if first else (" - " if coeff < 0 else " + ")
    return prefix + ("" if magnitude == 1 else str(magnitude))


def format_instance(inst: IdentityInstance, slots: bool = False) -> str:
    """
    Human readable rendering, e.g. ``<4> = <2> + <3> + <3> - <1> - <1> - <2>``.

    With ``slots=True`` terms carrying a slot structure are shown in the
    zero-slot notation ``<19+12+0-12>``.
    """
    def show(label: TermLabel, structure: typing.Optional[SumLabel]) -> str:
        if slots and structure is not None:
            return str(structure)
        if isinstance(label, TriVec3):
            return f"({label.a}, {label.b}, {label.c})"
        return str(label)

    lhs = show(inst.lhs, inst.lhs_slots)
    rhs = "".join(
        _format_coefficient(term.coeff, index == 0) + show(term.label, term.slots)
        for index, term in enumerate(inst.terms)
    )
    return f"{lhs} = {rhs or '0'}"
