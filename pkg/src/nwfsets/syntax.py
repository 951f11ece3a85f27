"""Expression language: tokens, AST, recursive-descent parser and evaluator.

    expr := "{}" | "{" item ("," item)* "}" | "*" expr | nat | ident | "null"
          | "inf(" expr ")" | "semi(" expr ";" expr ")"
          | "quasi(" "[" expr ("," expr)* "]" ";" expr [";" nat] ")"
    item := expr | "*" expr
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from . import igs
from .system import NULLITY, SetSystem, Unpack as UnpackItem

KEYWORDS = frozenset({"inf", "semi", "quasi", "null"})


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int, expected: tuple[str, ...] = ()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = expected
        hint = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"line {line}, column {col}: {message}{hint}")


class EvalError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message = message
        self.line = line
        self.col = col
        where = f"line {line}, column {col}: " if line else ""
        super().__init__(f"{where}{message}")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nat>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<eqeq>==)|(?P<punct>[{}(),;\[\]*=])"
)


def tokenize(text: str, line: int = 1, col0: int = 1) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col0 + pos)
        kind = m.lastgroup
        if kind != "ws":
            tk = m.group()
            out.append(Token(tk if kind in ("punct", "eqeq") else kind, tk, line, col0 + pos))
        pos = m.end()
    out.append(Token("eof", "", line, col0 + len(text)))
    return out


# -- AST ---------------------------------------------------------------------

Pos = tuple[int, int]


@dataclass(frozen=True)
class Empty:
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Brace:
    items: tuple
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Unpack:
    expr: object
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Numeral:
    n: int
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Null:
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Inf:
    base: object
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Semi:
    gen: object
    base: object
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Quasi:
    gens: tuple
    base: object
    phase: int = 0
    pos: Pos = field(default=(0, 0), compare=False)


Expr = Union[Empty, Brace, Unpack, Numeral, Var, Null, Inf, Semi, Quasi]


class TokenStream:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        tok = self.toks[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def expect(self, *kinds: str) -> Token:
        tok = self.peek
        if tok.kind not in kinds:
            found = tok.text or "end of input"
            raise ParseError(f"unexpected {found!r}", tok.line, tok.col, kinds)
        return self.next()

    def at(self, *kinds: str) -> bool:
        return self.peek.kind in kinds


EXPR_START = ("{", "*", "nat", "ident")


def parse_expr_tokens(ts: TokenStream) -> Expr:
    tok = ts.peek
    pos = (tok.line, tok.col)
    if tok.kind == "{":
        ts.next()
        if ts.at("}"):
            ts.next()
            return Empty(pos)
        items = [parse_expr_tokens(ts)]
        while ts.at(","):
            ts.next()
            items.append(parse_expr_tokens(ts))
        ts.expect("}", ",")
        return Brace(tuple(items), pos)
    if tok.kind == "*":
        ts.next()
        return Unpack(parse_expr_tokens(ts), pos)
    if tok.kind == "nat":
        ts.next()
        return Numeral(int(tok.text), pos)
    if tok.kind == "ident":
        ts.next()
        name = tok.text
        if name == "null":
            return Null(pos)
        if name == "inf":
            ts.expect("(")
            base = parse_expr_tokens(ts)
            ts.expect(")")
            return Inf(base, pos)
        if name == "semi":
            ts.expect("(")
            gen = parse_expr_tokens(ts)
            ts.expect(";")
            base = parse_expr_tokens(ts)
            ts.expect(")")
            return Semi(gen, base, pos)
        if name == "quasi":
            ts.expect("(")
            ts.expect("[")
            gens = [parse_expr_tokens(ts)]
            while ts.at(","):
                ts.next()
                gens.append(parse_expr_tokens(ts))
            ts.expect("]", ",")
            ts.expect(";")
            base = parse_expr_tokens(ts)
            phase = 0
            if ts.at(";"):
                ts.next()
                phase = int(ts.expect("nat").text)
            ts.expect(")", ";")
            return Quasi(tuple(gens), base, phase, pos)
        return Var(name, pos)
    found = tok.text or "end of input"
    raise ParseError(f"unexpected {found!r}", tok.line, tok.col, ("expression",))


def parse_expr(text: str, line: int = 1) -> Expr:
    ts = TokenStream(tokenize(text, line))
    e = parse_expr_tokens(ts)
    ts.expect("eof")
    return e


# -- evaluation ----------------------------------------------------------------


def evaluate(sys: SetSystem, e: Expr, env: Optional[Mapping[str, int]] = None) -> int:
    env = env or {}
    try:
        return _eval(sys, e, env)
    except EvalError:
        raise
    except ValueError as exc:
        line, col = getattr(e, "pos", (0, 0))
        raise EvalError(str(exc), line, col) from exc


def _eval(sys: SetSystem, e: Expr, env: Mapping[str, int]) -> int:
    if isinstance(e, Empty):
        return sys.empty
    if isinstance(e, Brace):
        items = []
        for it in e.items:
            if isinstance(it, Null):
                items.append(NULLITY)
            elif isinstance(it, Unpack):
                if isinstance(it.expr, Null):
                    continue
                items.append(UnpackItem(_eval(sys, it.expr, env)))
            else:
                items.append(_eval(sys, it, env))
        return sys.mk_set(items)
    if isinstance(e, Numeral):
        try:
            return sys.mk_numeral(e.n)
        except ValueError as exc:
            raise EvalError(str(exc), *e.pos) from exc
    if isinstance(e, Var):
        if e.name not in env:
            raise EvalError(f"unbound variable {e.name!r}", *e.pos)
        return env[e.name]
    if isinstance(e, Null):
        raise EvalError("nullity is not a set value outside braces", *e.pos)
    if isinstance(e, Unpack):
        inner = _eval(sys, e.expr, env) if not isinstance(e.expr, Null) else sys.empty
        ms = sys.members(inner)
        if len(ms) != 1:
            raise EvalError("an unpacked expression outside braces must have exactly one member", *e.pos)
        return ms[0]
    try:
        if isinstance(e, Inf):
            return igs.infiniton(sys, _eval(sys, e.base, env))
        if isinstance(e, Semi):
            return igs.semi_infiniton(sys, _eval(sys, e.gen, env), _eval(sys, e.base, env))
        if isinstance(e, Quasi):
            gens = [_eval(sys, g, env) for g in e.gens]
            return igs.quasi_infiniton(sys, gens, _eval(sys, e.base, env), e.phase)
    except EvalError:
        raise
    except ValueError as exc:
        raise EvalError(str(exc), *e.pos) from exc
    raise EvalError(f"cannot evaluate {e!r}")
