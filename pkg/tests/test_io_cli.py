import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhborel import io as qio
from qhborel.cli import main
from qhborel.linalg import Field

DUAL_NUMBERS = {
    "composition": "right-to-left",
    "field": "rational",
    "quiver": {"vertices": 1, "arrows": [{"name": "x", "src": 1, "tgt": 1}]},
    "relations": [[{"coefficient": "1", "path": ["x", "x"]}]],
    "order": [],
}


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def example_text(which, *extra):
    desc = qio.auslander_description(*extra) if which == "auslander" else qio.two_source_description()
    return qio.emit(desc)


# ----------------------------------------------------------------------------
# descriptions

@pytest.mark.parametrize("desc", [
    lambda: qio.auslander_description(1),
    lambda: qio.auslander_description(3),
    lambda: qio.auslander_description(2, 3, Field(7)),
    lambda: qio.two_source_description(),
])
def test_emit_parse_emit_is_a_fixed_point(desc):
    text = qio.emit(desc())
    assert qio.emit(qio.parse(text)) == text


@given(st.integers(1, 4))
def test_built_examples_have_expected_sizes(n):
    ws = qio.build(qio.parse(qio.emit(qio.auslander_description(n))))
    assert ws.A.dim == sum(n - max(i, j) + 1 for i in range(1, n + 1) for j in range(1, n + 1))
    assert ws.subalgebras["B"].sub.dim == 2 ** n - 1


def test_two_source_description_builds():
    ws = qio.build(qio.parse(qio.emit(qio.two_source_description())))
    assert (ws.A.dim, ws.algebra.dim) == (5, 9)
    assert ws.subalgebras["B"].sub.dim == 5
    assert ws.action is not None and ws.action.order == 2
    with pytest.raises(ValueError):
        qio.two_source_description(Field(2))


def test_parse_errors_carry_a_location():
    with pytest.raises(qio.ParseError) as e:
        qio.parse('{"composition": "right-to-left",\n "field": }')
    assert e.value.where == "line 2, column 11"
    bad = dict(DUAL_NUMBERS, composition="left-to-right")
    with pytest.raises(qio.ParseError) as e:
        qio.parse(bad)
    assert e.value.where == "composition"
    bad = json.loads(json.dumps(DUAL_NUMBERS))
    bad["relations"][0][0]["coefficient"] = "1/0"
    with pytest.raises(qio.ParseError) as e:
        qio.parse(bad)
    assert "relations" in e.value.where
    with pytest.raises(qio.ParseError):
        qio.parse(dict(DUAL_NUMBERS, order=[[1]]))


def test_unknown_arrow_is_rejected():
    bad = json.loads(json.dumps(DUAL_NUMBERS))
    bad["relations"][0][0]["path"] = ["x", "z"]
    with pytest.raises(qio.ParseError):
        qio.build(qio.parse(bad))


# ----------------------------------------------------------------------------
# command line

def test_check_on_dual_numbers(tmp_path, capsys, monkeypatch):
    f = tmp_path / "dual.json"
    f.write_text(json.dumps(DUAL_NUMBERS))
    code, out, _ = run(capsys, monkeypatch, ["--json", "check", str(f)])
    assert code == 1
    rep = json.loads(out)
    assert rep["quasi_hereditary"] is False
    assert rep["failures"] == ["End(Delta1) has dimension 2"]


def test_synthesize_from_piped_example(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["--json", "synthesize", "-"], example_text("auslander", 3))
    assert code == 0
    rep = json.loads(out)
    assert rep["dims"] == {"A": 14, "R": 21, "B": 7}
    assert rep["report"]["regular"] is True


def test_skew_on_two_source(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["--json", "skew", "-"], example_text("two-source"))
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] == "obstructed"
    polys = {p["g"] for p in rep["char_poly_table"].values()}
    assert {"(t - 1)^8*(t + 1)", "(t - 1)^9", "(t - 1)^6*(t + 1)^3", "(t - 1)^5*(t + 1)^4"} == polys


def test_other_commands_run(capsys, monkeypatch):
    text = example_text("auslander", 2)
    for argv in (["check", "-"], ["standard-modules", "-"], ["ext", "-", "--up-to", "2"],
                 ["minimal-model", "-"], ["reconstruct", "-"], ["verify-borel", "-", "--sub", "B"]):
        code, out, _ = run(capsys, monkeypatch, argv, text)
        assert code == 0, argv
        assert out.startswith("composition: right-to-left\n")
    text = example_text("two-source")
    code, out, _ = run(capsys, monkeypatch, ["--json", "conjugate", "-", "--sub", "B", "--sub2", "gB"], text)
    assert code == 0 and json.loads(out)["status"] == "found"


def test_reports_are_byte_identical(capsys, monkeypatch):
    text = example_text("two-source")
    outs = [run(capsys, monkeypatch, ["--seed", "5", "skew", "-"], text)[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_error_exit_codes(tmp_path, capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["check", "-"], '{"composition": ')
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, monkeypatch, ["check", str(tmp_path / "missing.json")])
    assert code == 2
    code, _, err = run(capsys, monkeypatch, ["skew", "-"], example_text("auslander", 2))
    assert code == 2 and "group" in err
    code, _, _ = run(capsys, monkeypatch, ["example", "auslander"])
    assert code == 2


def test_example_emit_to_file(tmp_path, capsys, monkeypatch):
    path = tmp_path / "a.json"
    code, out, _ = run(capsys, monkeypatch, ["example", "auslander", "--n", "2", "--emit", str(path)])
    assert code == 0 and out == ""
    assert path.read_text() == example_text("auslander", 2)
