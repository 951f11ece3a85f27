"""Independent reference implementations used to cross-check the library.

Nothing here imports library algorithms beyond reading node members.
"""
from __future__ import annotations

from itertools import combinations

EMPTY = frozenset()


# -- hereditarily finite sets as nested frozensets ------------------------------

def hf_numeral(n: int) -> frozenset:
    out = EMPTY
    for _ in range(n):
        out = out | {out}
    return out


def hf_powerset(s: frozenset) -> frozenset:
    items = list(s)
    return frozenset(frozenset(c) for k in range(len(items) + 1) for c in combinations(items, k))


def hf_stage(n: int) -> frozenset:
    """P^(n)(empty) by iterated power set."""
    s = EMPTY
    for _ in range(n):
        s = hf_powerset(s)
    return s


def hf_union(s: frozenset) -> frozenset:
    return frozenset(z for y in s for z in y)


def hf_tc(s: frozenset) -> frozenset:
    out = set()
    todo = list(s)
    while todo:
        y = todo.pop()
        if y not in out:
            out.add(y)
            todo.extend(y)
    return frozenset(out)


def hf_rank(s: frozenset) -> int:
    """Least n with s in V_n (so the empty set has rank 1)."""
    return 1 + max((hf_rank(x) for x in s), default=0)


def hf_is_transitive(s: frozenset) -> bool:
    return all(z in s for y in s for z in y)


def hf_pair(x, y) -> frozenset:
    return frozenset({frozenset({x}), frozenset({x, y})})


def hf_text(s: frozenset) -> str:
    parts = sorted((hf_text(x) for x in s), key=lambda t: (len(t), t))
    return "{" + ",".join(parts) + "}"


def to_hf(sys, n: int) -> frozenset:
    if sys.tag(n) is not None:
        raise ValueError("cyclic node")
    return frozenset(to_hf(sys, m) for m in sys.members(n))


def from_hf(sys, s: frozenset) -> int:
    return sys.mk_set(from_hf(sys, x) for x in s)


# -- graph-level oracles ---------------------------------------------------------

def reach(sys, s: int, include_self: bool = True) -> set[int]:
    seen = set()
    todo = [s] if include_self else list(sys.members(s))
    while todo:
        v = todo.pop()
        if v in seen:
            continue
        seen.add(v)
        todo.extend(sys.members(v))
    return seen


def on_cycle(sys, v: int) -> bool:
    return v in reach(sys, v, include_self=False)


def cycle_reachable(sys, s: int) -> bool:
    return any(on_cycle(sys, v) for v in reach(sys, s))


def path_classify(sys, s: int) -> str:
    """WF / NWF / TNWF by enumerating membership paths up to a length beyond the node count."""
    limit = len(reach(sys, s)) + 1
    finite_branch = False
    long_path = False
    frontier = [s]
    for _ in range(limit):
        nxt = []
        for v in frontier:
            ms = sys.members(v)
            if not ms:
                finite_branch = True
            nxt.extend(ms)
        frontier = list(set(nxt))
        if not frontier:
            break
    else:
        long_path = bool(frontier)
    if not long_path:
        return "WF"
    return "NWF" if finite_branch else "TNWF"


def naive_bisim(sys, nodes=None) -> set[tuple[int, int]]:
    """Greatest bisimulation by deleting violating pairs until nothing changes."""
    nodes = list(sys.nodes()) if nodes is None else list(nodes)
    rel = {(a, b) for a in nodes for b in nodes}
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            ma, mb = sys.members(a), sys.members(b)
            ok = all(any((x, y) in rel for y in mb) for x in ma) and all(any((x, y) in rel for x in ma) for y in mb)
            if not ok:
                rel.discard((a, b))
                changed = True
    return rel


def longest_path_len(sys, s: int) -> int:
    """Number of nodes on the longest membership path from s (acyclic only)."""
    return 1 + max((longest_path_len(sys, m) for m in sys.members(s)), default=0)


# -- ordinals below w^w as exponent -> coefficient dicts -------------------------

def cnf_dict(o) -> dict[int, int]:
    return {e: c for e, c in o.terms}


def oracle_add(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    if not b:
        return dict(a)
    lead = max(b)
    out = {e: c for e, c in a.items() if e >= lead}
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return out


def oracle_cmp(a: dict[int, int], b: dict[int, int]) -> int:
    top = max(list(a) + list(b) + [0])
    va = [a.get(e, 0) for e in range(top, -1, -1)]
    vb = [b.get(e, 0) for e in range(top, -1, -1)]
    return (va > vb) - (va < vb)
