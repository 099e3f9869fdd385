import io
import json

import pytest

from lkg0.cli import EXIT_ERROR, EXIT_NO, EXIT_OK, ENGINES, main, cmd_diff
from lkg0.oracle import GenParams
from lkg0.parser import parse_sequents
from lkg0.proof import Provable, Unprovable
from lkg0.oracle import tt_valid

PAB = "p(a)&p(b), ~p(a)|~p(b)"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- prove ----------------------------------------------------------------------------

def test_prove_full_text_proof(capsys):
    code, out, _ = run(capsys, "prove", "--engine", "full", "--proof", "text", PAB)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "PROVABLE"
    numbered = [ln for ln in lines[1:] if ln.strip()]
    assert len(numbered) == 5
    assert "∧ from" in numbered[-1]


def test_prove_countermodel(capsys):
    code, out, _ = run(capsys, "prove", "p, q", "--countermodel")
    assert code == EXIT_NO
    assert "UNPROVABLE" in out and "p=false q=false" in out


def test_prove_par_stats(capsys):
    code, out, _ = run(capsys, "prove", "--engine", "par", "--stats", "p&q, r&s")
    assert code == EXIT_NO
    assert "top_level_branches=4" in out


def test_prove_default_engine_is_pv(capsys):
    code, out, _ = run(capsys, "prove", "~p | p")
    assert code == EXIT_OK and out.strip() == "PROVABLE"


def test_prove_compat_top(capsys):
    code, out, _ = run(capsys, "prove", "--engine", "full", "--proof", "json",
                       "--compat-top", PAB)
    assert code == EXIT_OK
    doc = json.loads(out[out.index("{"):])
    assert doc["lines"][0]["i"] == 0 and doc["lines"][0]["sequent"] == ["T"]


def test_prove_file(tmp_path, capsys):
    f = tmp_path / "in.seq"
    f.write_text("# two cases\np | ~p\n\np, q\n", encoding="utf-8")
    code, out, _ = run(capsys, "prove", "--file", str(f))
    assert code == EXIT_NO
    assert out.splitlines() == ["line 2: PROVABLE", "line 4: UNPROVABLE"]


def test_prove_parse_error(capsys):
    code, _, err = run(capsys, "prove", "p & (q")
    assert code == EXIT_ERROR
    assert "column" in err


@pytest.mark.parametrize("argv", [
    ["prove"],
    ["prove", "p", "--file", "x.seq"],
    ["prove", "p", "--out", "x.json"],
    ["prove", "--file", "/nonexistent/in.seq"],
])
def test_prove_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_ERROR


def test_unknown_engine_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["prove", "--engine", "magic", "p"])
    assert info.value.code == EXIT_ERROR


# -- check ---------------------------------------------------------------------------

@pytest.fixture
def proof_file(tmp_path, capsys):
    path = tmp_path / "pab.json"
    assert main(["prove", "--engine", "full", "--proof", "json", "--out", str(path), PAB]) == 0
    capsys.readouterr()
    return path


def test_check_emitted_proof(proof_file, capsys):
    code, out, _ = run(capsys, "check", str(proof_file))
    assert code == EXIT_OK and out.strip() == "OK"


def test_check_edited_rule(proof_file, capsys):
    doc = json.loads(proof_file.read_text())
    doc["lines"][4]["rule"] = "Or"
    proof_file.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "check", str(proof_file))
    assert code == EXIT_NO
    assert "REJECTED" in out and "line 5:" in out


def test_check_truncated(proof_file, capsys):
    text = proof_file.read_text()
    proof_file.write_text(text[: len(text) // 2])
    assert run(capsys, "check", str(proof_file))[0] == EXIT_ERROR


def test_check_succ_plus_needs_pv_mode(tmp_path, capsys):
    path = tmp_path / "p.json"
    assert main(["prove", "--proof", "json", "--out", str(path), "p, ~p, q & r"]) == 0
    assert run(capsys, "check", str(path))[0] == EXIT_NO
    assert run(capsys, "check", "--mode", "pv", str(path))[0] == EXIT_OK


def test_check_list_of_proofs(tmp_path, capsys):
    src = tmp_path / "in.seq"
    src.write_text("p | ~p\n" + PAB + "\n")
    path = tmp_path / "all.json"
    assert main(["prove", "--engine", "full", "--file", str(src), "--proof", "json",
                 "--out", str(path)]) == 0
    code, out, _ = run(capsys, "check", str(path))
    assert code == EXIT_OK
    assert out.splitlines()[-2:] == ["proof 1: OK", "proof 2: OK"]


# -- oracle --------------------------------------------------------------------------

def test_oracle_valid(capsys):
    code, out, _ = run(capsys, "oracle", "~p | p")
    assert code == EXIT_OK and out.strip() == "VALID"


def test_oracle_invalid(capsys):
    code, out, _ = run(capsys, "oracle", "p&q, ~p")
    assert code == EXIT_NO and out.strip() == "INVALID p=true q=false"


def test_oracle_limit(capsys):
    wide = ", ".join(f"a{i}" for i in range(25))
    code, _, err = run(capsys, "oracle", wide)
    assert code == EXIT_ERROR and "25" in err


def test_oracle_limit_env(monkeypatch, capsys):
    monkeypatch.setenv("LKG_ATOM_LIMIT", "30")
    wide = ", ".join(f"a{i}" for i in range(25))
    assert run(capsys, "oracle", wide)[0] == EXIT_NO


# -- diff ------------------------------------------------------------------------------

def test_diff_count_zero(capsys):
    code, out, _ = run(capsys, "diff", "--count", "0")
    assert code == EXIT_OK and out == ""


def test_diff_small_corpus(capsys):
    code, out, err = run(capsys, "diff", "--count", "200", "--seed", "7")
    assert code == EXIT_OK and out == ""
    assert "200" in err


def test_diff_negative_count(capsys):
    assert run(capsys, "diff", "--count", "-1")[0] == EXIT_ERROR


def _always_yes(s, stats, workers=None):
    return Provable(build=lambda: None)


def test_diff_catches_broken_engine():
    engines = dict(ENGINES, broken=_always_yes)
    buf = io.StringIO()
    bad = cmd_diff(GenParams(seed=1, max_connectives=8), 50, buf, engines)
    assert bad > 0
    cases = parse_sequents(buf.getvalue())
    assert len(cases) == bad
    # every reported sequent reproduces the disagreement
    for _, seq in cases:
        assert not tt_valid(seq)
        assert _always_yes(seq, None).provable


def test_diff_catches_bad_countermodel():
    def lying(s, stats, workers=None):
        v = ENGINES["pv"](s, stats)
        if v.provable:
            return v
        return Unprovable({a: True for a in v.countermodel} | {"zz": True}, v.failing)

    buf = io.StringIO()
    bad = cmd_diff(GenParams(seed=2, max_connectives=6), 60, buf, {"lying": lying})
    assert bad > 0
    assert "countermodel does not falsify" in buf.getvalue()
