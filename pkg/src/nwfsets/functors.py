"""Sets of infinitons, semi-infinitons and quasi-infinitons drawn from a set of generators."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import igs
from .system import SetSystem

MAX_QUASI_LEN = 4


@dataclass(frozen=True)
class FunctorConfig:
    quasi_max_len: int = 3

    def __post_init__(self):
        if not 2 <= self.quasi_max_len <= MAX_QUASI_LEN:
            raise ValueError(f"quasi_max_len must lie in [2, {MAX_QUASI_LEN}]")


def _wf_members(sys: SetSystem, s: int) -> tuple[int, ...]:
    if not sys.is_wf(s):
        raise ValueError("functor argument must be well-founded")
    return sys.members(s)


def functor_inf(sys: SetSystem, s: int) -> int:
    return sys.mk_set(igs.infiniton(sys, g) for g in _wf_members(sys, s))


def functor_semi(sys: SetSystem, s: int) -> int:
    ms = _wf_members(sys, s)
    return sys.mk_set(igs.semi_infiniton(sys, g, b) for g in ms for b in ms)


def quasi_cycles(sys: SetSystem, s: int, max_len: int) -> list[tuple[int, ...]]:
    """Generator cycles from members of s with strictly increasing cardinality, 2 <= l <= max_len."""
    ms = _wf_members(sys, s)
    by_size = sorted(ms, key=lambda m: (len(sys.members(m)), m))
    out = []
    for length in range(2, max_len + 1):
        for combo in combinations(by_size, length):
            sizes = [len(sys.members(g)) for g in combo]
            if all(a < b for a, b in zip(sizes, sizes[1:])):
                out.append(combo)
    return out


def quasi_candidate_count(sys: SetSystem, s: int, cfg: FunctorConfig = FunctorConfig()) -> int:
    """Number of (cycle, base, phase) choices before deduplication."""
    nbase = len(_wf_members(sys, s))
    return sum(len(c) * nbase for c in quasi_cycles(sys, s, cfg.quasi_max_len))


def functor_quasi(sys: SetSystem, s: int, cfg: FunctorConfig = FunctorConfig()) -> int:
    ms = _wf_members(sys, s)
    found = []
    for cyc in quasi_cycles(sys, s, cfg.quasi_max_len):
        for b in ms:
            found.extend(igs.sublimits(sys, cyc, b))
    return sys.mk_set(found)
