"""Ordinals below w^w in Cantor normal form, and the Fin/Aleph0 dimension value."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Optional


class Cmp(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1


class OrdKind(enum.Enum):
    ZERO = "Zero"
    SUCCESSOR = "Successor"
    LIMIT = "Limit"


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    """Sum of w^e * c terms, highest exponent first. Empty terms is 0."""

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = None
        for e, c in self.terms:
            if e < 0 or c < 1:
                raise ValueError(f"bad CNF term ({e}, {c})")
            if prev is not None and e >= prev:
                raise ValueError("CNF exponents must strictly decrease")
            prev = e

    @classmethod
    def nat(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("negative natural")
        return cls(((0, n),)) if n else cls()

    @property
    def is_finite(self) -> bool:
        return all(e == 0 for e, _ in self.terms)

    def finite_value(self) -> Optional[int]:
        if not self.terms:
            return 0
        if self.is_finite:
            return self.terms[0][1]
        return None

    def successor(self) -> "Ordinal":
        return ord_add(self, ONE)

    def __add__(self, other: "Ordinal") -> "Ordinal":
        return ord_add(self, other)

    def __lt__(self, other: "Ordinal") -> bool:
        return ord_cmp(self, other) is Cmp.LT

    def __str__(self) -> str:
        return render_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({render_ordinal(self)!r})"


ZERO = Ordinal()
ONE = Ordinal.nat(1)
OMEGA = Ordinal(((1, 1),))


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    lead = b.terms[0][0]
    kept = [t for t in a.terms if t[0] > lead]
    tail = list(b.terms)
    same = [t for t in a.terms if t[0] == lead]
    if same:
        tail[0] = (lead, same[0][1] + tail[0][1])
    return Ordinal(tuple(kept + tail))


def ord_cmp(a: Ordinal, b: Ordinal) -> Cmp:
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        if ea != eb:
            return Cmp.GT if ea > eb else Cmp.LT
        if ca != cb:
            return Cmp.GT if ca > cb else Cmp.LT
    if len(a.terms) == len(b.terms):
        return Cmp.EQ
    return Cmp.GT if len(a.terms) > len(b.terms) else Cmp.LT


def ord_kind(a: Ordinal) -> OrdKind:
    if not a.terms:
        return OrdKind.ZERO
    return OrdKind.SUCCESSOR if a.terms[-1][0] == 0 else OrdKind.LIMIT


def ord_max(xs: Iterable[Ordinal]) -> Ordinal:
    best = ZERO
    for x in xs:
        if best < x:
            best = x
    return best


def render_ordinal(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if e == 0:
            parts.append(str(c))
            continue
        base = "w" if e == 1 else f"w^{e}"
        parts.append(base if c == 1 else f"{base}.{c}")
    return "+".join(parts)


_TERM = re.compile(r"^(?:(\d+)|w(?:\^(\d+))?(?:\.(\d+))?)$")


def parse_ordinal(text: str) -> Ordinal:
    text = text.strip()
    if not text:
        raise ValueError("empty ordinal text")
    terms: list[tuple[int, int]] = []
    for piece in text.split("+"):
        m = _TERM.match(piece.strip())
        if not m:
            raise ValueError(f"bad ordinal term {piece!r}")
        if m.group(1) is not None:
            e, c = 0, int(m.group(1))
        else:
            e = int(m.group(2)) if m.group(2) else 1
            c = int(m.group(3)) if m.group(3) else 1
        if c == 0:
            if len(text.split("+")) == 1:
                return ZERO
            raise ValueError("zero coefficient inside a sum")
        terms.append((e, c))
    try:
        return Ordinal(tuple(terms))
    except ValueError as exc:
        raise ValueError(f"not in normal form: {text!r}") from exc


@dataclass(frozen=True)
class Dimension:
    """Membership dimension: Fin(n) with n >= 1, or Aleph0 when n is None."""

    n: Optional[int]

    def __post_init__(self):
        if self.n is not None and self.n < 1:
            raise ValueError("finite dimension must be >= 1")

    @classmethod
    def fin(cls, n: int) -> "Dimension":
        return cls(n)

    @property
    def is_aleph0(self) -> bool:
        return self.n is None

    def __str__(self) -> str:
        return "aleph0" if self.n is None else str(self.n)


ALEPH0 = Dimension(None)


def dim_sup_plus1(ds: Iterable[Dimension]) -> Dimension:
    top = 0
    for d in ds:
        if d.n is None:
            return ALEPH0
        top = max(top, d.n)
    return Dimension(top + 1)
