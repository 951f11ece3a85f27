"""Normalization of raw membership graphs into canonical SetSystems."""
from __future__ import annotations

from typing import Union

from . import igs, kernels
from .system import NULLITY, GenSpec, Kind, RawSystem, SetSystem


def _build(sys: SetSystem, spec: GenSpec) -> int:
    if spec.kind is Kind.INF:
        return igs.infiniton(sys, spec.base)
    if spec.kind is Kind.SEMI:
        return igs.semi_infiniton(sys, spec.cycle[0], spec.base)
    return igs.quasi_infiniton(sys, spec.cycle, spec.base, spec.phase)


def canonicalize(src: Union[RawSystem, SetSystem], max_numeral: int | None = None) -> SetSystem:
    """Canonical SetSystem for ``src``; ``result.node_map[i]`` is the image of node i.

    Drops nullity and duplicate members, applies the omega-invariance merges and
    shares equal subterms. Membership cycles must be tagged with a GenSpec.
    """
    if isinstance(src, SetSystem):
        limit = src.max_numeral if max_numeral is None else max_numeral
        raw = RawSystem.from_system(src)
    else:
        limit = max_numeral if max_numeral is not None else SetSystem().max_numeral
        raw = src
    n = len(raw.members)
    indptr = [0]
    indices: list[int] = []
    for i in range(n):
        deps = [m for m in raw.members[i] if m is not NULLITY]
        tag = raw.tags[i]
        if tag is not None:
            deps.append(tag.base)
            deps.extend(tag.cycle)
        for d in deps:
            if not 0 <= d < n:
                raise ValueError(f"node {i} refers to unknown node {d}")
        indices.extend(deps)
        indptr.append(len(indices))
    comp = kernels.scc(indptr, indices)
    groups: dict[int, list[int]] = {}
    for i, c in enumerate(comp):
        groups.setdefault(c, []).append(i)

    out = SetSystem(max_numeral=limit)
    image = [-1] * n
    for c in sorted(groups):
        group = groups[c]
        cyclic = len(group) > 1 or group[0] in raw.members[group[0]]
        tagged = [raw.tags[i] is not None for i in group]
        if not any(tagged) and not cyclic:
            i = group[0]
            image[i] = out.mk_set(image[m] for m in raw.members[i] if m is not NULLITY)
            continue
        if not all(tagged):
            raise ValueError(f"membership cycle through node {group[0]} lacks a generator spec")
        for i in group:
            t = raw.tags[i]
            spec = GenSpec(t.kind, image[t.base], tuple(image[g] for g in t.cycle), t.phase)
            image[i] = _build(out, spec)
        for i in group:
            got = set(out.members(image[i]))
            want = {image[m] for m in raw.members[i] if m is not NULLITY}
            if got != want:
                raise ValueError(f"node {i} does not match its generator spec")
    out.node_map = image
    if raw.root is not None:
        out.root = image[raw.root]
    return out
