import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nwfsets import SetSystem, infiniton, render, serialize
from nwfsets.syntax import ParseError
from nwfsets.cli import Assert, Audit, Export, Help, Let, Load, Query, Session, main, parse_command
from nwfsets.dot import export_dot
from nwfsets.syntax import Brace, Numeral, Quasi, Semi, parse_expr


def run(cmd):
    return Session().run_line(cmd).text


def test_parse_examples():
    e = parse_expr("{ {}, {{}} }")
    assert isinstance(e, Brace) and len(e.items) == 2
    assert Session().value(e) == Session().value(parse_expr("2"))
    assert parse_expr("semi({1}; 0)") == Semi(Brace((Numeral(1),)), Numeral(0))
    q = parse_expr("quasi([{1},{0,1}]; {}; 1)")
    assert isinstance(q, Quasi) and len(q.gens) == 2 and q.phase == 1
    assert parse_expr("quasi([1,2];0)").phase == 0


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_expr("{1,,2}")
    err = info.value
    assert (err.line, err.col) == (1, 4)
    assert err.expected


def test_command_shapes():
    assert isinstance(parse_command("let x = {1}"), Let)
    assert isinstance(parse_command("rankv 3"), Query)
    assert parse_command("functor quasi {1,2} 2").op == "functor quasi"
    assert isinstance(parse_command("audit russell 2 inf(0)"), Audit)
    assert isinstance(parse_command("dot inf(0)"), Export)
    assert isinstance(parse_command("load f.txt"), Load)
    assert isinstance(parse_command("help"), Help)
    assert isinstance(parse_command("assert rankv 3 == 4"), Assert)
    assert parse_command("# comment") is None
    assert parse_command("{1}").op == "show"


@pytest.mark.parametrize(
    "cmd, want",
    [
        ("rankv 3", "4"),
        ("dim 2", "3"),
        ("eq inf({}) inf({{}})", "true"),
        ("eq inf(0) inf(2)", "false"),
        ("bisim inf(0) inf(2)", "true"),
        ("why inf(0) inf(2)", "base generator 0 vs 2"),
        ("regular inf({})", "fails"),
        ("regular semi(1;0)", "holds, witness 0"),
        ("regular {}", "holds vacuously"),
        ("classify semi(1;0)", "NWF"),
        ("classify inf(0)", "TNWF"),
        ("rankt {inf(0),1}", "w+1"),
        ("rankt inf(0)", "w"),
        ("dim inf(0)", "aleph0"),
        ("partition 2", "successor 3"),
        ("omega {inf(0)}", "true"),
        ("transitive 3", "true"),
        ("tc {{1}}", "{0,1,{1}}"),
        ("union {0} {1}", "2"),
        ("inter 3 {1,5}", "{1}"),
        ("diff 3 {1}", "{0,2}"),
        ("unfold inf(0) 2", "{1}"),
        ("homog quasi([1,2];0) 2 3", "false"),
        ("homog inf(0) 2 5", "true"),
        ("spectrum 4", "16"),
        ("functor inf {0,1}", "inf(0)"),
        ("functor semi {0}", "inf(0)"),
        ("functor quasi {0}", "0"),
        ("audit ezf 1", "ok: 0 violations in 5 checks"),
        ("{1, *{2}}", "{1,2}"),
        ("{*null, 0}", "1"),
    ],
)
def test_eval_examples(cmd, want):
    assert run(cmd) == want


def test_let_shadowing():
    s = Session()
    s.run_line("let x = 1")
    s.run_line("let y = {x}")
    s.run_line("let x = 2")
    assert s.run_line("x").text == "2"
    assert s.run_line("y").text == "{1}"
    assert set(s.env) == {"x", "y"}


def write(tmp_path, body):
    p = tmp_path / "cmds.txt"
    p.write_text(body)
    return str(p)


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def test_batch_success(tmp_path):
    path = write(tmp_path, "# known values\nassert rankv 3 == 4\nassert regular inf({}) == fails\n\nlet z = semi(1;0)\n")
    code, out, _ = call(["--batch", path])
    assert code == 0
    assert out.splitlines() == ["4", "fails", "z = semi(1;0)"]


def test_batch_assertion_failure(tmp_path):
    path = write(tmp_path, "rankv 1\nassert rankv 3 == 5\nrankv 2\n")
    code, out, err = call(["--batch", path])
    assert code == 1 and ":2:" in err and out == "2\n"


def test_batch_syntax_error(tmp_path):
    path = write(tmp_path, "rankv 1\nrankv 2\nrankv {1,\n")
    code, _, err = call(["--batch", path])
    assert code == 2 and ":3:" in err


def test_batch_eval_error(tmp_path):
    code, _, err = call(["--batch", write(tmp_path, "rankv inf(0)\n")])
    assert code == 2 and "not in V" in err
    code, _, err = call(["--batch", write(tmp_path, "rankv nope\n")])
    assert code == 2


def test_load_command(tmp_path):
    inner = write(tmp_path, "let a = 3\n")
    s = Session()
    assert s.run_line(f"load {inner}").text.startswith("loaded 1")
    assert s.run_line("a").text == "3"


def test_json_envelope():
    code, out, _ = call(["--json", "rankt", "{inf(0),1}"])
    assert code == 0
    env = json.loads(out)
    assert set(env) == {"command", "result", "rank_strings", "classification"}
    assert env["result"] == "w+1" and env["rank_strings"] is None
    code, out, _ = call(["--json", "{inf(0),1}"])
    env = json.loads(out)
    assert env["rank_strings"] == {"rank_t": "w+1"} and env["classification"] == "NWF"
    env = json.loads(call(["--json", "3"])[1])
    assert env["rank_strings"] == {"rank_t": "4", "rank_v": "4"} and env["classification"] == "WF"


def test_dot_to_file(tmp_path):
    dest = tmp_path / "g.dot"
    code, _, _ = call(["--dot", "inf({})", "-o", str(dest)])
    text = dest.read_text()
    assert code == 0 and text.startswith("digraph")
    assert "n0 -> n0 [style=dashed];" in text and text.count("->") == 1


def test_dot_cycle_edges_dashed():
    s = SetSystem()
    n = s.mk_numeral
    from nwfsets import semi_infiniton, sublimits

    semi = export_dot(s, semi_infiniton(s, s.mk_set([n(1)]), s.empty))
    assert semi.count("[style=dashed]") == 1
    q0, _ = sublimits(s, [n(1), n(2)], n(0))
    quasi = export_dot(s, q0)
    assert quasi.count("[style=dashed]") == 2
    assert "doublecircle" in quasi


def test_dot_is_deterministic():
    a, b = SetSystem(), SetSystem()
    b.mk_numeral(7)  # different arena ids for the same sets
    xa = a.mk_set([infiniton(a, a.mk_numeral(2)), a.mk_numeral(3)])
    xb = b.mk_set([b.mk_numeral(3), infiniton(b, b.mk_numeral(2))])
    assert export_dot(a, xa) == export_dot(b, xb)


def test_repl_stream():
    code, out, err = call([], "let x = 2\nrankv x\nbad {\nrankv 0\n")
    assert code == 2 and out.splitlines() == ["x = 2", "3"] and "error" in err
    code, out, _ = call([], "rankv 1\n# note\n")
    assert code == 0 and out == "2\n"


wf_exprs = st.recursive(
    st.one_of(st.integers(0, 4).map(str), st.just("{}")),
    lambda inner: st.lists(inner, max_size=3).map(lambda xs: "{" + ",".join(xs) + "}"),
    max_leaves=6,
)
exprs = st.recursive(
    st.one_of(
        wf_exprs,
        wf_exprs.map(lambda e: f"inf({e})"),
        st.tuples(wf_exprs, wf_exprs).map(lambda p: f"semi({p[0]};{p[1]})"),
        st.tuples(wf_exprs, st.integers(0, 1)).map(lambda p: f"quasi([1,{{0,1,{p[0]}}}];{p[0]};{p[1]})"),
    ),
    lambda inner: st.lists(inner, max_size=3).map(lambda xs: "{" + ",".join(xs) + "}"),
    max_leaves=8,
)


@settings(max_examples=150, deadline=None)
@given(text=exprs)
def test_parse_render_identity(text):
    s = Session()
    node = s.value(parse_expr(text))
    canon = serialize(s.sys, node)
    assert serialize(s.sys, s.value(parse_expr(canon))) == canon
    assert s.value(parse_expr(canon)) == node
    pretty = render(s.sys, node)
    assert s.value(parse_expr(pretty)) == node
