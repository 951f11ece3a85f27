"""Power-set stages, closure audits, regularity and self-membership diagnostics."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import igs, kernels
from .functors import functor_inf
from .rank import Classification, classify
from .system import Kind, SetSystem

STAGE_CAP = 5
CLOSURE_CAP = 3
RUSSELL_CAP = 4


@dataclass(frozen=True)
class Stage:
    index: int
    elements: tuple[int, ...]


def stage_node(sys: SetSystem, n: int) -> int:
    """The set P^(n)(empty) itself."""
    if not 0 <= n <= STAGE_CAP:
        raise ValueError(f"stage index must lie in [0, {STAGE_CAP}]")
    key = ("stage", n)
    hit = sys._cache.get(key)
    if hit is None:
        hit = sys.empty if n == 0 else sys.power_set(stage_node(sys, n - 1))
        sys._cache[key] = hit
    return hit


def spectrum_stage(sys: SetSystem, n: int) -> Stage:
    return Stage(n, sys.members(stage_node(sys, n)))


def _tower(n: int) -> int:
    t = 0
    for _ in range(n):
        t = 2**t
    return t


def v_stage_by_code(sys: SetSystem, n: int) -> set[int]:
    """V_n rebuilt from the Ackermann coding: codes below tower(n) are exactly its elements."""
    if not 0 <= n <= STAGE_CAP:
        raise ValueError(f"stage index must lie in [0, {STAGE_CAP}]")
    decoded: list[int] = []
    for code in range(_tower(n)):
        decoded.append(sys.mk_set(decoded[j] for j in range(code.bit_length()) if code >> j & 1))
    return set(decoded)


def check_stage_equal_v(sys: SetSystem, n: int) -> bool:
    return set(spectrum_stage(sys, n).elements) == v_stage_by_code(sys, n)


@dataclass(frozen=True)
class RegularityReport:
    holds: bool
    witness: Optional[int] = None
    vacuous: bool = False


def check_regularity(sys: SetSystem, s: int) -> RegularityReport:
    """Is there a member x of s sharing no member with s?"""
    ms = sys.members(s)
    if not ms:
        return RegularityReport(True, None, vacuous=True)
    for x in ms:
        if not any(sys.contains(s, z) for z in sys.members(x)):
            return RegularityReport(True, x)
    return RegularityReport(False)


@dataclass
class AuditReport:
    kind: str
    n: int
    checks: dict[str, int] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def _check(self, name: str, passed: bool, detail: str) -> None:
        self.checks[name] = self.checks.get(name, 0) + 1
        if not passed:
            self.violations.append(f"{name}: {detail}")


def is_numeral(sys: SetSystem, s: int) -> bool:
    return sys.numeral_value(s) is not None


def ezf_closure_audit(sys: SetSystem, n: int) -> AuditReport:
    if not 0 <= n <= CLOSURE_CAP:
        raise ValueError(f"closure audit index must lie in [0, {CLOSURE_CAP}]")
    rep = AuditReport("ezf", n)
    cur = spectrum_stage(sys, n).elements
    here = set(cur)
    up1 = set(spectrum_stage(sys, n + 1).elements)
    up2 = set(spectrum_stage(sys, n + 2).elements)
    for i, a in enumerate(cur):
        for b in cur[i:]:
            rep._check("pairing", sys.mk_set([a, b]) in up1, f"{{{a},{b}}} missing from stage {n + 1}")
    for x in cur:
        rep._check("power set", sys.power_set(x) in up2, f"P({x}) missing from stage {n + 2}")
        rep._check("union", sys.big_union(x) in here, f"union of {x} missing from stage {n}")
        for name, pred in (("transitive", sys.is_transitive), ("numeral", lambda y: is_numeral(sys, y))):
            part = sys.mk_set(y for y in sys.members(x) if pred(y))
            rep._check(f"separation[{name}]", part in here, f"subset of {x} missing from stage {n}")
    return rep


def cycle_length(sys: SetSystem, s: int) -> int:
    """Length of the membership cycle through s (1 for a self-loop), 0 when s is on none."""
    if sys.contains(s, s):
        return 1
    reach = sys.reachable(s)
    local = {v: i for i, v in enumerate(reach)}
    indptr = [0]
    indices: list[int] = []
    for v in reach:
        indices.extend(local[w] for w in sys.members(v))
        indptr.append(len(indices))
    comp = kernels.scc(indptr, indices)
    size = sum(1 for c in comp if c == comp[local[s]])
    return size if size > 1 else 0


def standard_samples(sys: SetSystem) -> list[int]:
    zero, one, two = (sys.mk_numeral(i) for i in range(3))
    inf0 = igs.infiniton(sys, zero)
    return [
        inf0,
        igs.semi_infiniton(sys, one, zero),
        *igs.sublimits(sys, [one, two], zero),
        functor_inf(sys, sys.mk_set([zero, two])),
        sys.mk_set([inf0, one]),
    ]


def russell_audit(sys: SetSystem, n: int, samples: Optional[Sequence[int]] = None) -> AuditReport:
    if not 0 <= n <= RUSSELL_CAP:
        raise ValueError(f"russell audit index must lie in [0, {RUSSELL_CAP}]")
    rep = AuditReport("russell", n)
    for x in spectrum_stage(sys, n).elements:
        rep._check(
            "stage acyclic",
            cycle_length(sys, x) == 0 and classify(sys, x) is Classification.WF,
            f"stage element {x} is self-membered or cyclic",
        )
    for s in samples if samples is not None else standard_samples(sys):
        spec = sys.tag(s)
        length = cycle_length(sys, s)
        self_loop = length == 1
        kind = spec.kind if spec is not None else None
        rep._check(
            "self-membership",
            self_loop == (kind in (Kind.INF, Kind.SEMI)),
            f"sample {s} self-membership disagrees with its tag {kind}",
        )
        rep._check(
            "longer cycle",
            (length > 1) == (kind is Kind.QUASI),
            f"sample {s} cycle length {length} disagrees with its tag {kind}",
        )
    whole = stage_node(sys, n)
    rep._check("stage not self-member", whole not in set(spectrum_stage(sys, n).elements), f"stage {n} contains itself")
    return rep
