"""Canonical text form of nodes and its inverse."""
from __future__ import annotations

from .syntax import evaluate, parse_expr
from .system import Kind, SetSystem


def _shortlex(text: str) -> tuple[int, str]:
    return (len(text), text)


def serialize(sys: SetSystem, n: int) -> str:
    """Deterministic text: members sorted shortlex by their own text, IGS via constructors."""
    key = ("ser", n)
    hit = sys._cache.get(key)
    if hit is not None:
        return hit
    spec = sys.tag(n)
    if spec is None:
        parts = sorted((serialize(sys, m) for m in sys.members(n)), key=_shortlex)
        out = "{" + ",".join(parts) + "}"
    else:
        out = _ctor(spec, lambda x: serialize(sys, x))
    sys._cache[key] = out
    return out


def _ctor(spec, show) -> str:
    if spec.kind is Kind.INF:
        return f"inf({show(spec.base)})"
    if spec.kind is Kind.SEMI:
        return f"semi({show(spec.cycle[0])};{show(spec.base)})"
    gens = ",".join(show(g) for g in spec.cycle)
    return f"quasi([{gens}];{show(spec.base)};{spec.phase})"


def render(sys: SetSystem, n: int) -> str:
    """Short form: like ``serialize`` but numerals within the configured bound print as digits."""
    key = ("pretty", n)
    hit = sys._cache.get(key)
    if hit is not None:
        return hit
    val = sys.numeral_value(n)
    spec = sys.tag(n)
    if val is not None and val <= sys.max_numeral:
        out = str(val)
    elif spec is None:
        kids = sorted(sys.members(n), key=lambda m: _shortlex(serialize(sys, m)))
        out = "{" + ",".join(render(sys, m) for m in kids) + "}"
    else:
        out = _ctor(spec, lambda x: render(sys, x))
    sys._cache[key] = out
    return out


def deserialize(sys: SetSystem, text: str) -> int:
    """Parse canonical (or any expression-language) text into a node of ``sys``."""
    return evaluate(sys, parse_expr(text))
