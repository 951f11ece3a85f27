"""EZF equality (generator-based on IGS, extensional otherwise) and bisimulation."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .igs import canonical_base
from .serial import render
from .system import SetSystem

__all__ = ["Reason", "EqReport", "ezf_equal", "bisimilar", "bisim_classes", "canonical_base", "eq_distinguish"]


class Reason(enum.Enum):
    EXTENSIONAL = "Extensional"
    GENERATOR_MATCH = "GeneratorMatch"
    GENERATOR_MISMATCH = "GeneratorMismatch"
    MEMBER_MISMATCH = "MemberMismatch"


@dataclass(frozen=True)
class EqReport:
    equal: bool
    reason: Reason
    witness: Optional[str] = None


def _eq(sys: SetSystem, a: int, b: int, memo: dict) -> bool:
    # Structural recursion: IGS compare generator records, ordinary sets compare members.
    if a == b:
        return True
    key = (a, b) if a < b else (b, a)
    if key in memo:
        return memo[key]
    sa, sb = sys.tag(a), sys.tag(b)
    if sa is not None and sb is not None:
        res = (
            sa.kind is sb.kind
            and sa.phase == sb.phase
            and len(sa.cycle) == len(sb.cycle)
            and _eq(sys, sa.base, sb.base, memo)
            and all(_eq(sys, x, y, memo) for x, y in zip(sa.cycle, sb.cycle))
        )
    elif sa is None and sb is None:
        ma, mb = sys.members(a), sys.members(b)
        res = len(ma) == len(mb) and _members_match(sys, ma, mb, memo)
    else:
        res = False
    memo[key] = res
    return res


def _members_match(sys, ma, mb, memo) -> bool:
    return all(any(_eq(sys, x, y, memo) for y in mb) for x in ma) and all(
        any(_eq(sys, x, y, memo) for x in ma) for y in mb
    )


def _member_diff(sys: SetSystem, a: int, b: int) -> Optional[str]:
    memo: dict = {}
    ma, mb = sys.members(a), sys.members(b)
    only_a = [x for x in ma if not any(_eq(sys, x, y, memo) for y in mb)]
    only_b = [y for y in mb if not any(_eq(sys, x, y, memo) for x in ma)]
    if only_a and only_b:
        return f"member {render(sys, only_a[0])} vs member {render(sys, only_b[0])}"
    if only_a:
        return f"member {render(sys, only_a[0])} only on the left"
    if only_b:
        return f"member {render(sys, only_b[0])} only on the right"
    return None


def _spec_diff(sys: SetSystem, a: int, b: int) -> Optional[str]:
    sa, sb = sys.tag(a), sys.tag(b)
    memo: dict = {}
    if sa.kind is not sb.kind:
        return f"kind {sa.kind.value} vs {sb.kind.value}"
    if not _eq(sys, sa.base, sb.base, memo):
        return f"base generator {render(sys, sa.base)} vs {render(sys, sb.base)}"
    if len(sa.cycle) != len(sb.cycle):
        return f"cycle length {len(sa.cycle)} vs {len(sb.cycle)}"
    for i, (x, y) in enumerate(zip(sa.cycle, sb.cycle), start=1):
        if not _eq(sys, x, y, memo):
            return f"principal generator {i}: {render(sys, x)} vs {render(sys, y)}"
    if sa.phase != sb.phase:
        return f"phase {sa.phase} vs {sb.phase}"
    return None


def ezf_equal(sys: SetSystem, a: int, b: int) -> EqReport:
    equal = _eq(sys, a, b, {})
    both_igs = sys.tag(a) is not None and sys.tag(b) is not None
    if equal:
        return EqReport(True, Reason.GENERATOR_MATCH if both_igs else Reason.EXTENSIONAL)
    if both_igs:
        witness = None if bisimilar(sys, a, b) else _member_diff(sys, a, b)
        return EqReport(False, Reason.GENERATOR_MISMATCH, witness)
    return EqReport(False, Reason.MEMBER_MISMATCH, _member_diff(sys, a, b))


def eq_distinguish(sys: SetSystem, a: int, b: int) -> Optional[str]:
    if _eq(sys, a, b, {}):
        return None
    if sys.tag(a) is not None and sys.tag(b) is not None:
        return _spec_diff(sys, a, b)
    return _member_diff(sys, a, b)


def bisim_classes(sys: SetSystem) -> list[int]:
    """Block id per node under the greatest bisimulation of the whole arena (tags ignored)."""
    key = ("bisim", len(sys))
    hit = sys._cache.get(key)
    if hit is None:
        indptr, indices = sys.graph()
        hit = sys._cache[key] = kernels.bisim_blocks(indptr, indices)
    return hit


def bisimilar(sys: SetSystem, a: int, b: int) -> bool:
    blocks = bisim_classes(sys)
    return blocks[a] == blocks[b]
