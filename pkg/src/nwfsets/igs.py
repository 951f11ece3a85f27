"""Infinitely generated sets: constructors, finite approximants and prefix templates."""
from __future__ import annotations

from typing import Sequence, Union

from .system import GenSpec, Kind, SetSystem, Unpack

HOMOGENEITY_BOUND = 6


def _require_wf(sys: SetSystem, g: int, role: str) -> None:
    if not sys.is_wf(g):
        raise ValueError(f"{role} generator must be well-founded")


def canonical_base(sys: SetSystem, b: int) -> int:
    """Strip singleton layers {x} with x acyclic: {{0}} -> 0, {2} -> 2."""
    _require_wf(sys, b, "base")
    while True:
        ms = sys.members(b)
        if len(ms) != 1:
            return b
        b = ms[0]


def fin_generated(sys: SetSystem, gens: Sequence[int], base: int) -> int:
    """Nested set {*G_n, ... {*G_1, G_0} ...}; ``gens`` lists G_1 first."""
    for g in gens:
        _require_wf(sys, g, "principal")
    cur = base
    for g in gens:
        cur = sys.mk_set([Unpack(g), cur])
    return cur


def infiniton(sys: SetSystem, base: int) -> int:
    b = canonical_base(sys, base)
    return sys._igs_family(Kind.INF, b, ())[0]


def semi_infiniton(sys: SetSystem, g: int, base: int) -> int:
    _require_wf(sys, g, "principal")
    _require_wf(sys, base, "base")
    if g == sys.empty:
        return infiniton(sys, base)
    return sys._igs_family(Kind.SEMI, base, (g,))[0]


def validate_cycle(sys: SetSystem, cycle: Sequence[int], base: int) -> tuple[int, ...]:
    cyc = tuple(cycle)
    if len(cyc) < 2:
        raise ValueError("a quasi-infiniton needs at least two principal generators")
    for g in cyc:
        _require_wf(sys, g, "principal")
    _require_wf(sys, base, "base")
    if len(set(cyc)) != len(cyc):
        raise ValueError("duplicate principal generators")
    sizes = [len(sys.members(g)) for g in cyc]
    if any(a >= b for a, b in zip(sizes, sizes[1:])):
        raise ValueError(f"generator cardinalities must strictly increase, got {sizes}")
    return cyc


def sublimits(sys: SetSystem, cycle: Sequence[int], base: int) -> list[int]:
    cyc = validate_cycle(sys, cycle, base)
    return sys._igs_family(Kind.QUASI, base, cyc)


def quasi_infiniton(sys: SetSystem, cycle: Sequence[int], base: int, q: int = 0) -> int:
    fam = sublimits(sys, cycle, base)
    if not 0 <= q < len(fam):
        raise ValueError(f"phase {q} out of range for cycle length {len(fam)}")
    return fam[q]


def omega_invariant(sys: SetSystem, s: int) -> bool:
    return sys.tag(s) is not None


def _as_spec(sys: SetSystem, spec_or_node: Union[GenSpec, int]) -> GenSpec:
    if isinstance(spec_or_node, GenSpec):
        return spec_or_node
    spec = sys.tag(spec_or_node)
    if spec is None:
        raise ValueError("node is not infinitely generated")
    return spec


def approximant(sys: SetSystem, spec: GenSpec, depth: int) -> int:
    """H_depth of the generating sequence: depth wrappings over the base."""
    cur = spec.base
    for m in range(1, depth + 1):
        cur = sys.mk_set([Unpack(spec.layer_generator(m, sys.empty)), cur])
    return cur


def unfold(sys: SetSystem, s: int, depth: int) -> int:
    """Finite approximant of s at the given depth.

    For a quasi-infiniton the approximant at depth n tends to the sublimit of
    phase n mod l. Ordinary nodes have their members unfolded instead.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    spec = sys.tag(s)
    if spec is not None:
        return approximant(sys, spec, depth)
    if sys.is_wf(s):
        return s
    return sys.mk_set(unfold(sys, m, depth) for m in sys.members(s))


def prefix_template_holds(sys: SetSystem, spec: GenSpec, n: int, s: int) -> bool:
    """Evaluate the depth-n chain template of ``spec``'s kind on the finite set s.

    Descending n layers, each layer must contain the scheduled generator's members
    plus exactly one further member, which becomes the next layer.
    """
    y = s
    for m in range(n, 0, -1):
        gm = set(sys.members(spec.layer_generator(m, sys.empty)))
        ym = set(sys.members(y))
        if not gm <= ym:
            return False
        extra = ym - gm
        if len(extra) != 1:
            return False
        y = extra.pop()
    return True


def homogeneity_prefix_check(
    sys: SetSystem, spec: Union[GenSpec, int], n: int, k: int, bound: int = HOMOGENEITY_BOUND
) -> bool:
    if k > bound:
        raise ValueError(f"approximant depth {k} exceeds bound {bound}")
    if not 0 <= n < k:
        raise ValueError("need 0 <= n < k")
    sp = _as_spec(sys, spec)
    return prefix_template_holds(sys, sp, n, approximant(sys, sp, k))
