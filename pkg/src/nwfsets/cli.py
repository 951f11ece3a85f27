"""Command language, REPL, batch runner and argument handling."""
from __future__ import annotations

import argparse
import json
import sys as _sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, TextIO, Union

from . import audit, equality, functors, igs, rank
from .dot import export_dot
from .functors import FunctorConfig
from .serial import render
from .syntax import (
    KEYWORDS,
    EvalError,
    Expr,
    ParseError,
    TokenStream,
    evaluate,
    parse_expr_tokens,
    tokenize,
)
from .system import SetSystem

# -- commands ---------------------------------------------------------------


@dataclass(frozen=True)
class Let:
    name: str
    expr: Expr


@dataclass(frozen=True)
class Query:
    op: str
    args: tuple


@dataclass(frozen=True)
class Audit:
    kind: str
    params: tuple


@dataclass(frozen=True)
class Export:
    fmt: str
    expr: Expr


@dataclass(frozen=True)
class Load:
    path: str


@dataclass(frozen=True)
class Help:
    pass


@dataclass(frozen=True)
class Assert:
    command: object
    expected: str


Command = Union[Let, Query, Audit, Export, Load, Help, Assert]

# argument shapes: e = expression, n = natural, N = optional natural
QUERY_SHAPES = {
    "show": "e",
    "rankv": "e",
    "rankt": "e",
    "dim": "e",
    "classify": "e",
    "partition": "e",
    "omega": "e",
    "transitive": "e",
    "tc": "e",
    "regular": "e",
    "eq": "ee",
    "bisim": "ee",
    "why": "ee",
    "union": "ee",
    "inter": "ee",
    "diff": "ee",
    "product": "ee",
    "bigunion": "en",
    "unfold": "en",
    "homog": "enn",
    "spectrum": "n",
    "functor inf": "e",
    "functor semi": "e",
    "functor quasi": "eN",
}
COMMAND_WORDS = frozenset({"let", "assert", "help", "load", "dot", "functor", "audit"} | {
    op.split()[0] for op in QUERY_SHAPES
})

HELP_TEXT = """\
expressions: {} {a,b} *E null 3 x inf(E) semi(G; B) quasi([G1,...,Gl]; B; q)
commands:
  let x = E                 bind a name
  E | show E                canonical short form
  rankv E | rankt E | dim E | classify E | partition E
  eq E F | bisim E F | why E F
  union|inter|diff|product E F   bigunion E k   tc E   transitive E
  unfold E k | omega E | homog E n k
  functor inf|semi E | functor quasi E [lmax]
  spectrum n | audit ezf n | audit russell n [E ...] | regular E
  dot E | load FILE | help
batch files also accept: assert <command> == <expected output>"""


def _args(ts: TokenStream, shape: str) -> tuple:
    out = []
    for ch in shape:
        if ch == "e":
            out.append(parse_expr_tokens(ts))
        elif ch == "n":
            out.append(int(ts.expect("nat").text))
        elif ch == "N" and ts.at("nat"):
            out.append(int(ts.next().text))
    return tuple(out)


def parse_command(text: str, line: int = 1, col0: int = 1) -> Optional[Command]:
    """Parse one line; blank lines and '#' comments give None."""
    stripped = text.strip()
    if not stripped or stripped.startswith("#"):
        return None
    head = stripped.split(None, 1)[0]
    if head == "assert":
        body_start = text.index("assert") + len("assert")
        body = text[body_start:]
        if "==" not in body:
            raise ParseError("assert needs '== expected'", line, col0 + body_start, ("==",))
        cmd_text, expected = body.split("==", 1)
        inner = parse_command(cmd_text, line, col0 + body_start)
        if inner is None or isinstance(inner, Assert):
            raise ParseError("assert needs a command", line, col0 + body_start)
        return Assert(inner, expected.strip())
    if head == "load":
        path = stripped[len("load"):].strip()
        if not path:
            raise ParseError("load needs a path", line, col0 + len(text), ("path",))
        return Load(path)
    ts = TokenStream(tokenize(text, line, col0))
    tok = ts.peek
    cmd: Command
    if tok.kind == "ident" and tok.text in COMMAND_WORDS:
        word = ts.next().text
        if word == "help":
            cmd = Help()
        elif word == "let":
            name = ts.expect("ident")
            if name.text in KEYWORDS or name.text in COMMAND_WORDS:
                raise ParseError(f"{name.text!r} is reserved", name.line, name.col)
            ts.expect("=")
            cmd = Let(name.text, parse_expr_tokens(ts))
        elif word == "dot":
            cmd = Export("dot", parse_expr_tokens(ts))
        elif word == "functor":
            kind = ts.expect("ident")
            op = f"functor {kind.text}"
            if op not in QUERY_SHAPES:
                raise ParseError(f"unknown functor {kind.text!r}", kind.line, kind.col, ("inf", "semi", "quasi"))
            cmd = Query(op, _args(ts, QUERY_SHAPES[op]))
        elif word == "audit":
            kind = ts.expect("ident")
            if kind.text == "ezf":
                cmd = Audit("ezf", (int(ts.expect("nat").text),))
            elif kind.text == "russell":
                n = int(ts.expect("nat").text)
                samples = []
                while not ts.at("eof"):
                    samples.append(parse_expr_tokens(ts))
                cmd = Audit("russell", (n, tuple(samples)))
            else:
                raise ParseError(f"unknown audit {kind.text!r}", kind.line, kind.col, ("ezf", "russell"))
        else:
            cmd = Query(word, _args(ts, QUERY_SHAPES[word]))
    else:
        cmd = Query("show", (parse_expr_tokens(ts),))
    ts.expect("eof")
    return cmd


# -- evaluation ---------------------------------------------------------------


class AssertionFailure(Exception):
    def __init__(self, expected: str, got: str):
        self.expected = expected
        self.got = got
        super().__init__(f"expected {expected!r}, got {got!r}")


@dataclass
class Result:
    text: str
    node: Optional[int] = None
    data: object = None


class Session:
    """One environment of named sets over a shared SetSystem."""

    def __init__(self, max_numeral: int = 12, quasi_max_len: int = 3):
        self.sys = SetSystem(max_numeral=max_numeral)
        self.cfg = FunctorConfig(quasi_max_len)
        self.env: dict[str, int] = {}

    def value(self, e: Expr) -> int:
        return evaluate(self.sys, e, self.env)

    def show(self, n: int) -> Result:
        return Result(render(self.sys, n), node=n)

    def execute(self, cmd: Command) -> Result:
        s = self.sys
        if isinstance(cmd, Help):
            return Result(HELP_TEXT)
        if isinstance(cmd, Let):
            n = self.value(cmd.expr)
            self.env[cmd.name] = n
            return Result(f"{cmd.name} = {render(s, n)}", node=n)
        if isinstance(cmd, Export):
            return Result(export_dot(s, self.value(cmd.expr)).rstrip("\n"))
        if isinstance(cmd, Load):
            count = run_file(self, Path(cmd.path))
            return Result(f"loaded {count} commands from {cmd.path}")
        if isinstance(cmd, Assert):
            got = self.execute(cmd.command)
            if got.text != cmd.expected:
                raise AssertionFailure(cmd.expected, got.text)
            return got
        if isinstance(cmd, Audit):
            if cmd.kind == "ezf":
                rep = audit.ezf_closure_audit(s, cmd.params[0])
            else:
                samples = [self.value(e) for e in cmd.params[1]] or None
                rep = audit.russell_audit(s, cmd.params[0], samples)
            total = sum(rep.checks.values())
            if rep.ok:
                return Result(f"ok: 0 violations in {total} checks", data=rep)
            return Result(f"failed: {len(rep.violations)} violations; {rep.violations[0]}", data=rep)
        return self._query(cmd)

    def _query(self, q: Query) -> Result:
        s = self.sys
        op = q.op
        if op == "spectrum":
            st = audit.spectrum_stage(s, q.args[0])
            return Result(str(len(st.elements)), data=st)
        vals = [self.value(a) if not isinstance(a, int) else a for a in q.args]
        x = vals[0]
        if op == "show":
            return self.show(x)
        if op == "rankv":
            return Result(str(rank.rank_v(s, x)))
        if op == "rankt":
            return Result(str(rank.rank_t(s, x)))
        if op == "dim":
            return Result(str(rank.dimension(s, x)))
        if op == "classify":
            return Result(rank.classify(s, x).value)
        if op == "partition":
            return Result(str(rank.partition_class(s, x)))
        if op == "omega":
            return Result(_bool(igs.omega_invariant(s, x)))
        if op == "transitive":
            return Result(_bool(s.is_transitive(x)))
        if op == "tc":
            return self.show(s.transitive_closure(x))
        if op == "regular":
            rep = audit.check_regularity(s, x)
            if not rep.holds:
                return Result("fails")
            if rep.vacuous:
                return Result("holds vacuously")
            return Result(f"holds, witness {render(s, rep.witness)}")
        if op == "eq":
            return Result(_bool(equality.ezf_equal(s, x, vals[1]).equal))
        if op == "bisim":
            return Result(_bool(equality.bisimilar(s, x, vals[1])))
        if op == "why":
            return Result(equality.eq_distinguish(s, x, vals[1]) or "equal")
        if op in ("union", "inter", "diff", "product"):
            fn = {"union": s.union, "inter": s.intersect, "diff": s.difference, "product": s.product}[op]
            return self.show(fn(x, vals[1]))
        if op == "bigunion":
            return self.show(s.big_union_k(x, vals[1]))
        if op == "unfold":
            return self.show(igs.unfold(s, x, vals[1]))
        if op == "homog":
            return Result(_bool(igs.homogeneity_prefix_check(s, x, vals[1], vals[2])))
        if op == "functor inf":
            return self.show(functors.functor_inf(s, x))
        if op == "functor semi":
            return self.show(functors.functor_semi(s, x))
        if op == "functor quasi":
            cfg = FunctorConfig(vals[1]) if len(vals) > 1 else self.cfg
            return self.show(functors.functor_quasi(s, x, cfg))
        raise EvalError(f"unknown command {op!r}")

    def run_line(self, text: str, line: int = 1) -> Optional[Result]:
        cmd = parse_command(text, line)
        if cmd is None:
            return None
        try:
            return self.execute(cmd)
        except (EvalError, ParseError, AssertionFailure, BatchError):
            raise
        except (ValueError, OSError) as exc:
            col = len(text) - len(text.lstrip()) + 1
            raise EvalError(str(exc), line, col) from exc


def _bool(b: bool) -> str:
    return "true" if b else "false"


def envelope(session: Session, command: str, res: Result) -> dict:
    out = {"command": command, "result": res.text, "rank_strings": None, "classification": None}
    if res.node is not None:
        s = session.sys
        ranks = {"rank_t": str(rank.rank_t(s, res.node))}
        if s.is_wf(res.node):
            ranks["rank_v"] = str(rank.rank_v(s, res.node))
        out["rank_strings"] = ranks
        out["classification"] = rank.classify(s, res.node).value
    return out


# -- batch and REPL -------------------------------------------------------------


class BatchError(Exception):
    def __init__(self, path: Path, line: int, inner: Exception):
        self.path = path
        self.line = line
        self.inner = inner
        super().__init__(f"{path}:{line}: {inner}")


def run_file(session: Session, path: Path, out: Optional[TextIO] = None, as_json: bool = False) -> int:
    """Execute every command of a batch file; returns the number of commands run."""
    count = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, text in enumerate(fh, start=1):
            text = text.rstrip("\n")
            try:
                res = session.run_line(text, lineno)
            except BatchError:
                raise
            except (ParseError, EvalError, AssertionFailure) as exc:
                raise BatchError(path, lineno, exc) from exc
            if res is None:
                continue
            count += 1
            if out is not None:
                _emit(out, session, text.strip(), res, as_json)
    return count


def _emit(out: TextIO, session: Session, command: str, res: Result, as_json: bool) -> None:
    if as_json:
        out.write(json.dumps(envelope(session, command, res)) + "\n")
    else:
        out.write(res.text + "\n")


def _exit_code(exc: BaseException) -> int:
    while isinstance(exc, BatchError):
        exc = exc.inner
    return 1 if isinstance(exc, AssertionFailure) else 2


def repl(session: Session, inp: TextIO, out: TextIO, err: TextIO, as_json: bool = False) -> int:
    interactive = inp.isatty()
    lineno = 0
    while True:
        if interactive:
            out.write("> ")
            out.flush()
        text = inp.readline()
        if not text:
            return 0
        lineno += 1
        try:
            res = session.run_line(text.rstrip("\n"), lineno)
        except (ParseError, EvalError, AssertionFailure, BatchError) as exc:
            err.write(f"error: {exc}\n")
            if not interactive:
                return _exit_code(exc)
            continue
        if res is not None:
            _emit(out, session, text.strip(), res, as_json)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nwfsets", description="Evaluate expressions over finitely presented non-well-founded sets.")
    p.add_argument("--batch", metavar="FILE", help="run commands from FILE ('assert' lines allowed)")
    p.add_argument("--dot", metavar="EXPR", help="write the DOT membership graph of EXPR")
    p.add_argument("-o", "--output", metavar="FILE", help="destination for --dot (default stdout)")
    p.add_argument("--json", action="store_true", help="emit one JSON envelope per result")
    p.add_argument("--max-numeral", type=int, default=12, help="largest numeral literal (default 12)")
    p.add_argument("--quasi-max-len", type=int, default=3, help="cycle bound for 'functor quasi' (2..4, default 3)")
    p.add_argument("command", nargs="*", help="a single command to evaluate")
    return p


def main(argv: Optional[list[str]] = None, stdin: TextIO = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or _sys.stdin
    stdout = stdout or _sys.stdout
    stderr = stderr or _sys.stderr
    args = build_parser().parse_args(argv)
    try:
        session = Session(args.max_numeral, args.quasi_max_len)
    except ValueError as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    try:
        if args.dot is not None:
            res = session.execute(Export("dot", _parse_single_expr(args.dot)))
            if args.output:
                Path(args.output).write_text(res.text + "\n", encoding="utf-8")
            else:
                stdout.write(res.text + "\n")
            return 0
        if args.batch:
            run_file(session, Path(args.batch), stdout, args.json)
            return 0
        if args.command:
            text = " ".join(args.command)
            res = session.run_line(text)
            if res is not None:
                _emit(stdout, session, text, res, args.json)
            return 0
    except (ParseError, EvalError, AssertionFailure, BatchError) as exc:
        stderr.write(f"error: {exc}\n")
        return _exit_code(exc)
    except (ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    return repl(session, stdin, stdout, stderr, args.json)


def _parse_single_expr(text: str) -> Expr:
    ts = TokenStream(tokenize(text))
    e = parse_expr_tokens(ts)
    ts.expect("eof")
    return e


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
