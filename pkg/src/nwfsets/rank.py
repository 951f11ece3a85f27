"""Ranks in V and T, membership dimension and well-foundedness classes."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .ordinal import ALEPH0, OMEGA, Dimension, Ordinal, OrdKind, ord_kind, ord_max
from .system import SetSystem


class Classification(enum.Enum):
    WF = "WF"
    NWF = "NWF"
    TNWF = "TNWF"


class NotInV(ValueError):
    pass


def classify(sys: SetSystem, s: int) -> Classification:
    if sys.is_wf(s):
        return Classification.WF
    return Classification.NWF if sys.reaches_empty(s) else Classification.TNWF


def rank_v(sys: SetSystem, s: int) -> Ordinal:
    d = sys.depth(s)
    if d is None:
        raise NotInV("not in V: a membership cycle is reachable")
    return Ordinal.nat(d)


def rank_t(sys: SetSystem, s: int) -> Ordinal:
    key = ("rank_t", s)
    hit = sys._cache.get(key)
    if hit is not None:
        return hit
    d = sys.depth(s)
    if d is not None:
        out = Ordinal.nat(d)
    elif sys.on_cycle(s):
        out = OMEGA
    else:
        # least successor above every member rank
        out = ord_max(rank_t(sys, m) for m in sys.members(s)).successor()
    sys._cache[key] = out
    return out


def dimension(sys: SetSystem, s: int) -> Dimension:
    d = sys.depth(s)
    return ALEPH0 if d is None else Dimension(d)


@dataclass(frozen=True)
class PartitionClass:
    rank: Ordinal
    limit: bool

    @property
    def layer(self) -> str:
        a = str(self.rank)
        if self.limit:
            return f"meet over b<{a} of (T_{a} - T_b)"
        return f"T_{a} - T_({a}-1)"

    def __str__(self) -> str:
        return f"{'limit' if self.limit else 'successor'} {self.rank}"


def partition_class(sys: SetSystem, s: int) -> PartitionClass:
    r = rank_t(sys, s)
    limit = ord_kind(r) is OrdKind.LIMIT
    return PartitionClass(r, limit)
