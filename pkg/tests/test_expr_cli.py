import io
import json

import pytest
from hypothesis import given, strategies as st

from arithcordial import graphs as gr
from arithcordial.cli import run
from arithcordial.errors import ParseError
from arithcordial.expr import graph_from_expr, parse_graph_expr


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


# -- expressions -------------------------------------------------------------------


def test_expr_examples():
    assert graph_from_expr("ladder:5") == gr.ladder(5)
    g = graph_from_expr("join(empty:7, kayak:3,0,3)")
    assert g.order == 13
    g = graph_from_expr("corona(cycle:6, empty:1)")
    assert (g.order, g.size) == (12, 12)
    assert graph_from_expr(" tensor ( complete:3 ,path:2 ) ") == gr.tensor(gr.complete(3), gr.path(2))


def test_expr_file_atom(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("3\n0 1\n1 2\n")
    assert graph_from_expr(f"join(file:{path}, empty:1)") == gr.join(gr.path(3), gr.empty(1))


@pytest.mark.parametrize(
    "text", ["", "path", "path:", "path:x", "join(path:2)", "join(path:2,path:3", "kayak:3,0", "foo:3", "path:3)"]
)
def test_expr_errors(text):
    with pytest.raises(ParseError) as info:
        parse_graph_expr(text)
    assert info.value.position is not None
    assert info.value.expected


def test_expr_error_position():
    with pytest.raises(ParseError) as info:
        parse_graph_expr("join(path:2 path:3)")
    assert info.value.position == 12
    assert "','" in info.value.expected


atoms = st.one_of(
    st.builds(lambda n: f"path:{n}", st.integers(1, 5)),
    st.builds(lambda n: f"cycle:{n}", st.integers(3, 5)),
    st.builds(lambda n: f"star:{n}", st.integers(2, 5)),
    st.builds(lambda n: f"empty:{n}", st.integers(1, 3)),
    st.builds(lambda n, m: f"snake:{n},{m}", st.integers(1, 2), st.integers(3, 4)),
)
exprs = st.recursive(
    atoms,
    lambda inner: st.builds(
        lambda op, a, b: f"{op}( {a} ,{b})", st.sampled_from(["join", "corona", "tensor"]), inner, inner
    ),
    max_leaves=3,
)


@given(exprs)
def test_expr_round_trip(text):
    tree = parse_graph_expr(text)
    canon = str(tree)
    assert str(parse_graph_expr(canon)) == canon
    assert parse_graph_expr(canon).evaluate() == tree.evaluate()


# -- command line ------------------------------------------------------------------


def test_verify_identity_triangle(tmp_path):
    labels = tmp_path / "l.json"
    labels.write_text(json.dumps({"labels": {"0": 1, "1": 2, "2": 3}}))
    out = tmp_path / "r.json"
    code, _ = call("verify", "--graph-expr", "cycle:3", "--labels", str(labels),
                   "--structure", "legendre@3:sum", "--out", str(out))
    assert code == 0
    data = json.loads(out.read_text())
    assert (data["e0"], data["e1"], data["cordial"]) == (2, 1, True)
    for key in ("command", "structure", "graph", "report", "elapsed_seconds"):
        assert key in data


def test_zeta_table():
    code, text = call("zeta", "--structure", "legendre@7:sum", "--table")
    assert code == 0
    assert "A0={3,5,6}" in text and "A1={1,2,4}" in text


def test_zeta_props():
    code, text = call("zeta", "--structure", "neg-legendre@7:product", "--props")
    assert code == 0
    assert "multiplicativity: fail" in text


def test_search_exit_codes():
    assert call("search", "--graph-expr", "complete:4", "--structure", "legendre@3:sum")[0] == 1
    code, text = call("search", "--graph-expr", "cycle:3", "--structure", "legendre@3:sum", "--count")
    assert code == 0 and "count=6" in text


FAMILIES = [
    ["--family", "star-jacobi", "--eta", "15", "--m", "2"],
    ["--family", "ladder", "--p", "7"],
    ["--family", "snake", "--n", "3", "--p", "5"],
    ["--family", "corona-path", "--p", "13", "--g", "cycle:4"],
    ["--family", "tensor-complete", "--p", "5", "--g", "path:3"],
    ["--family", "join-kayak", "--p", "11"],
    ["--family", "join-path-cycle", "--p", "41"],
    ["--family", "corona-k1", "--p", "13", "--g", "path:6"],
    ["--family", "corona-gh", "--p", "5", "--m", "1", "--g", "cycle:4",
     "--h", "file:{k4e}"],
]


@pytest.mark.parametrize("fam", FAMILIES, ids=lambda f: f[1])
def test_construct_then_verify_round_trip(tmp_path, fam):
    k4e = tmp_path / "h.txt"
    k4e.write_text("4\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    fam = [a.replace("{k4e}", str(k4e)) for a in fam]
    rep, gfile, lfile = tmp_path / "rep.json", tmp_path / "g.json", tmp_path / "l.json"
    code, _ = call("construct", *fam, "--out", str(rep), "--graph-out", str(gfile),
                   "--labels-out", str(lfile))
    built = json.loads(rep.read_text())
    assert code == (0 if built["cordial"] else 1)
    if fam[1] == "join-path-cycle":
        assert built["e1"] - built["e0"] == 1
    else:
        assert code == 0
    rep2 = tmp_path / "rep2.json"
    code2, _ = call("verify", "--graph", str(gfile), "--labels", str(lfile),
                    "--structure", built["structure"], "--out", str(rep2))
    again = json.loads(rep2.read_text())
    assert code2 == code
    assert again["report"] == built["report"]


def test_construct_table_output():
    code, text = call("construct", "--family", "ladder", "--p", "5")
    assert code == 0 and "e0=7 e1=6 -> cordial" in text


def test_equiv_commands(tmp_path):
    psi = tmp_path / "psi.json"
    code, _ = call("equiv", "--eta", "15", "--m", "1", "--variant", "-1", "--zeta1", "jacobi-factor:3",
                   "--zeta2", "jacobi-factor:5", "--emit-psi", str(psi), "--check")
    assert code == 0
    assert json.loads(psi.read_text())["psi"]["8"] == 7
    assert call("equiv", "--eta", "15", "--zeta1", "jacobi-factor:3", "--zeta2", "jacobi-factor:5",
                "--psi", str(psi))[0] == 0
    ident = tmp_path / "id.json"
    ident.write_text(json.dumps({"psi": {str(x): x for x in range(1, 15)}}))
    code, text = call("equiv", "--eta", "15", "--zeta1", "jacobi-factor:3", "--zeta2", "jacobi-factor:5",
                      "--psi", str(ident))
    assert code == 1 and "(1, 7)" in text
    assert call("equiv", "--eta", "7", "--zeta1", "legendre", "--zeta2", "neg-legendre")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["verify", "--graph-expr", "cycle:3", "--labels", "/nonexistent.json", "--structure", "legendre@3:sum"],
        ["search", "--graph-expr", "cycle(3", "--structure", "legendre@3:sum"],
        ["search", "--graph-expr", "cycle:3", "--structure", "legendre@9:sum"],
        ["search", "--graph-expr", "path:13", "--structure", "legendre@5:sum"],
        ["construct", "--family", "ladder"],
        ["construct", "--family", "ladder", "--p", "9"],
        ["construct", "--family", "corona-k1", "--p", "13", "--g", "complete:6"],
        ["zeta", "--structure", "wat@7:sum"],
        ["equiv", "--eta", "15", "--zeta1", "jacobi-factor:3", "--zeta2", "jacobi-factor:5", "--psi", "/nope"],
    ],
)
def test_malformed_inputs_exit_2(argv, capsys):
    assert call(*argv)[0] == 2


def test_bad_labels_file(tmp_path):
    bad = tmp_path / "l.json"
    bad.write_text("{not json")
    assert call("verify", "--graph-expr", "cycle:3", "--labels", str(bad), "--structure", "legendre@3:sum")[0] == 2
    bad.write_text(json.dumps({"labels": {"0": 1, "1": 1, "2": 3}}))
    assert call("verify", "--graph-expr", "cycle:3", "--labels", str(bad), "--structure", "legendre@3:sum")[0] == 2
