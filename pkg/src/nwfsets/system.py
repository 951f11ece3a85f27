"""Hash-consed membership graphs.

A ``SetSystem`` is an append-only arena of canonical nodes. Ordinary sets are
interned by their sorted member-id tuple; infinitely generated sets (IGS) are
interned by their generator record, so two canonical nodes are equal exactly
when their ids are. Nullity is never stored: it only exists transiently as an
item that ``mk_set`` drops.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from . import kernels

DEFAULT_MAX_NUMERAL = 12


class _Nullity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NULLITY"


NULLITY = _Nullity()


@dataclass(frozen=True)
class Unpack:
    """Item splicing the members of ``node`` into the enclosing set."""

    node: int


Item = Union[int, Unpack, _Nullity]


class Kind(enum.Enum):
    INF = "inf"
    SEMI = "semi"
    QUASI = "quasi"


@dataclass(frozen=True)
class GenSpec:
    """Generator record of an IGS node: kind, base generator, principal cycle, phase."""

    kind: Kind
    base: int
    cycle: tuple[int, ...] = ()
    phase: int = 0

    @property
    def period(self) -> int:
        return len(self.cycle) if self.kind is Kind.QUASI else 1

    def layer_generator(self, m: int, empty: int) -> int:
        """Principal generator at layer m >= 1 of the approximating sequence."""
        if self.kind is Kind.INF:
            return empty
        return self.cycle[(m - 1) % len(self.cycle)]

    def continuation(self, empty: int) -> int:
        """Generator that wraps this node into the next phase."""
        if self.kind is Kind.INF:
            return empty
        if self.kind is Kind.SEMI:
            return self.cycle[0]
        return self.cycle[self.phase]

    def with_phase(self, q: int) -> "GenSpec":
        return GenSpec(self.kind, self.base, self.cycle, q)


class SetSystem:
    """Arena of canonical set nodes; node 0 is the empty set."""

    def __init__(self, max_numeral: int = DEFAULT_MAX_NUMERAL):
        self.max_numeral = max_numeral
        self.root: Optional[int] = None
        self._members: list[tuple[int, ...]] = []
        self._tags: list[Optional[GenSpec]] = []
        self._wf: list[bool] = []
        self._reach_empty: list[bool] = []
        self._depth: list[Optional[int]] = []
        self._numeral: list[Optional[int]] = []
        self._plain: dict[tuple[int, ...], int] = {}
        self._igs: dict[GenSpec, int] = {}
        self._numerals: list[int] = []
        self._cache: dict = {}
        self.node_map: Optional[list[int]] = None
        self.empty = self._intern_plain(())

    # -- inspection ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self._members)

    def nodes(self) -> range:
        return range(len(self._members))

    def members(self, n: int) -> tuple[int, ...]:
        return self._members[n]

    def tag(self, n: int) -> Optional[GenSpec]:
        return self._tags[n]

    def is_wf(self, n: int) -> bool:
        return self._wf[n]

    def reaches_empty(self, n: int) -> bool:
        return self._reach_empty[n]

    def depth(self, n: int) -> Optional[int]:
        """Longest membership path length plus one; None when a cycle is reachable."""
        return self._depth[n]

    def numeral_value(self, n: int) -> Optional[int]:
        return self._numeral[n]

    def on_cycle(self, n: int) -> bool:
        return self._tags[n] is not None

    def contains(self, s: int, x: int) -> bool:
        return x in self._member_set(s)

    def _member_set(self, s: int) -> frozenset[int]:
        key = ("mset", s)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = frozenset(self._members[s])
        return hit

    def graph(self) -> tuple[list[int], list[int]]:
        """CSR adjacency (node -> members) over the whole arena."""
        key = ("csr", len(self))
        hit = self._cache.get(key)
        if hit is None:
            indptr = [0]
            indices: list[int] = []
            for ms in self._members:
                indices.extend(ms)
                indptr.append(len(indices))
            hit = self._cache[key] = (indptr, indices)
        return hit

    def reachable(self, s: int, include_self: bool = True) -> list[int]:
        """Nodes reachable from s (via zero or more edges when include_self)."""
        seen = {s} if include_self else set()
        stack = [s] if include_self else list(self._members[s])
        if not include_self:
            seen.update(stack)
        while stack:
            v = stack.pop()
            for w in self._members[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return sorted(seen)

    # -- construction ---------------------------------------------------------

    def _new(self, members: tuple[int, ...], tag: Optional[GenSpec]) -> int:
        nid = len(self._members)
        self._members.append(members)
        self._tags.append(tag)
        if tag is None:
            wf = all(self._wf[m] for m in members)
            self._wf.append(wf)
            self._reach_empty.append(not members or any(self._reach_empty[m] for m in members))
            self._depth.append(1 + max((self._depth[m] for m in members), default=0) if wf else None)
            k = len(members)
            vals = {self._numeral[m] for m in members}
            self._numeral.append(k if wf and vals == set(range(k)) else None)
        else:
            self._wf.append(False)
            self._reach_empty.append(False)  # patched by _igs_family
            self._depth.append(None)
            self._numeral.append(None)
        return nid

    def _intern_plain(self, members: tuple[int, ...]) -> int:
        hit = self._plain.get(members)
        if hit is not None:
            return hit
        merged = self._omega_merge(members)
        if merged is not None:
            self._plain[members] = merged
            return merged
        nid = self._new(members, None)
        self._plain[members] = nid
        return nid

    def _omega_merge(self, members: tuple[int, ...]) -> Optional[int]:
        # {*G, M} where M is an IGS whose continuation generator is G re-wraps to an IGS node
        cyc = [m for m in members if self._tags[m] is not None]
        if len(cyc) != 1:
            return None
        m = cyc[0]
        spec = self._tags[m]
        rest = set(members)
        rest.discard(m)
        if rest != self._member_set(spec.continuation(self.empty)):
            return None
        if spec.kind is Kind.QUASI:
            return self._igs[spec.with_phase((spec.phase + 1) % len(spec.cycle))]
        return m

    def _igs_family(self, kind: Kind, base: int, cycle: tuple[int, ...]) -> list[int]:
        """All phase nodes of one IGS, created together on first request."""
        period = len(cycle) if kind is Kind.QUASI else 1
        specs = [GenSpec(kind, base, cycle, q) for q in range(period)]
        if specs[0] in self._igs:
            return [self._igs[sp] for sp in specs]
        first = len(self._members)
        ids = list(range(first, first + period))
        touches_empty = any(self._members[g] for g in cycle)
        for q, sp in enumerate(specs):
            if kind is Kind.INF:
                ms: tuple[int, ...] = (ids[0],)
            elif kind is Kind.SEMI:
                ms = tuple(sorted(self._members[cycle[0]] + (ids[0],)))
            else:
                prev = (q - 1) % period
                ms = tuple(sorted(self._members[cycle[prev]] + (ids[prev],)))
            nid = self._new(ms, sp)
            self._reach_empty[nid] = touches_empty
            self._igs[sp] = nid
        return ids

    def mk_set(self, items: Iterable[Item]) -> int:
        """Set of the plain items plus the members of unpacked items; nullity is dropped."""
        acc: set[int] = set()
        for it in items:
            if it is NULLITY:
                continue
            if isinstance(it, Unpack):
                acc.update(self._members[it.node])
            else:
                acc.add(it)
        return self._intern_plain(tuple(sorted(acc)))

    def mk_numeral(self, n: int) -> int:
        if n < 0:
            raise ValueError("numerals are natural numbers")
        if n > self.max_numeral:
            raise ValueError(f"numeral {n} exceeds the configured bound {self.max_numeral}")
        while len(self._numerals) <= n:
            self._numerals.append(self._intern_plain(tuple(self._numerals)))
        return self._numerals[n]

    # -- algebra ---------------------------------------------------------

    def union(self, a: int, b: int) -> int:
        return self.mk_set([Unpack(a), Unpack(b)])

    def intersect(self, a: int, b: int) -> int:
        mb = self._member_set(b)
        return self.mk_set(m for m in self._members[a] if m in mb)

    def difference(self, a: int, b: int) -> int:
        mb = self._member_set(b)
        return self.mk_set(m for m in self._members[a] if m not in mb)

    def pair(self, x: int, y: int) -> int:
        """Kuratowski ordered pair {{x},{x,y}}."""
        return self.mk_set([self.mk_set([x]), self.mk_set([x, y])])

    def product(self, a: int, b: int) -> int:
        return self.mk_set(self.pair(x, y) for x in self._members[a] for y in self._members[b])

    def big_union(self, s: int) -> int:
        return self.mk_set(Unpack(m) for m in self._members[s])

    def big_union_k(self, s: int, k: int) -> int:
        if k < 0:
            raise ValueError("union depth must be non-negative")
        for _ in range(k):
            nxt = self.big_union(s)
            if nxt == s:
                break
            s = nxt
        return s

    def transitive_closure(self, s: int) -> int:
        return self.mk_set(self.reachable(s, include_self=False))

    def is_transitive(self, s: int) -> bool:
        ms = self._member_set(s)
        return all(z in ms for y in self._members[s] for z in self._members[y])

    def power_set(self, s: int) -> int:
        """Set of all subsets of s (only sensible for small s)."""
        subsets = kernels.subset_tuples(self._members[s])
        return self._intern_plain(tuple(sorted({self._intern_plain(t) for t in subsets})))

    # -- comparison ---------------------------------------------------------

    def same_structure(self, other: "SetSystem") -> bool:
        """Node-for-node identity of two arenas."""
        return self._members == other._members and self._tags == other._tags


class RawSystem:
    """Unnormalized membership graph: duplicates, nullity entries and untagged merges allowed.

    Cyclic nodes must carry a GenSpec whose ids refer to nodes of this raw system.
    ``canonicalize`` turns it into a SetSystem.
    """

    def __init__(self):
        self.members: list[list] = []
        self.tags: list[Optional[GenSpec]] = []
        self.root: Optional[int] = None

    def add(self, members: Sequence = (), tag: Optional[GenSpec] = None) -> int:
        self.members.append(list(members))
        self.tags.append(tag)
        return len(self.members) - 1

    def set_members(self, node: int, members: Sequence) -> None:
        self.members[node] = list(members)

    @classmethod
    def from_system(cls, sys: SetSystem) -> "RawSystem":
        raw = cls()
        for n in sys.nodes():
            raw.add(sys.members(n), sys.tag(n))
        raw.root = sys.root
        return raw
