import io
import json

import pytest

from _gen import CORPUS
from causal_alp.cli import main
from causal_alp.formats import models_from_json
from causal_alp.semantics import STABLE, abductive_models


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def path(name):
    return CORPUS / f"{name}.alp"


def test_models_with_observation():
    code, out, _ = run("models", path("sprinkler_observed"))
    assert code == 0
    assert out == "explanation {} world {s,w,d}\n"


def test_models_sprinkler_both_semantics():
    for sem in ("stable", "supported"):
        code, out, _ = run("models", path("sprinkler"), "--semantics", sem)
        assert code == 0
        assert out.splitlines() == ["explanation {} world {s,w,d}",
                                    "explanation {c} world {c,r,w,d}"]


def test_models_restricted_explanation_without_models():
    code, out, err = run("models", path("farmer"), "--explanation", "h")
    assert code == 1 and out == "" and "no models" in err


def test_models_empty_file():
    assert run("models", path("empty")) == (0, "explanation {} world {}\n", "")


def test_stdin_input():
    code, out, _ = run("models", "-", stdin="abducible c.\nr :- c.\n")
    assert code == 0
    assert out.splitlines() == ["explanation {} world {}", "explanation {c} world {c,r}"]


def test_json_round_trip(sprinkler):
    code, out, _ = run("models", path("sprinkler"), "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["semantics"] == "stable"
    assert data["alphabet"] == ["c", "r", "s", "w", "d"]
    assert data["abducibles"] == ["c"]
    assert set(models_from_json(data)) == set(abductive_models(sprinkler, STABLE))


def test_parse_error_exit_code():
    code, out, err = run("models", "-", stdin="p :- .\n")
    assert code == 2 and out == ""
    assert err.startswith("<stdin>:1:")


def test_abducible_head_reported():
    code, _, err = run("models", "-", stdin="abducible a.\na :- b.\n")
    assert code == 2 and "abducible" in err


def test_missing_file_and_bad_usage(tmp_path):
    assert run("models", tmp_path / "nope.alp")[0] == 2
    assert run("models")[0] == 2
    assert run("models", path("sprinkler"), "--atom-limit", "0")[0] == 2


def test_atom_limit():
    code, _, err = run("models", path("sprinkler"), "--atom-limit", "3")
    assert code == 2 and err


def test_intervene():
    code, out, _ = run("intervene", path("sprinkler"), "--do", "s=true")
    assert code == 0
    assert out.splitlines() == ["explanation {} world {s,w,d}",
                                "explanation {c} world {c,r,s,w,d}"]
    code, out, _ = run("intervene", path("sprinkler"), "--do", "s=true", "--emit-program")
    assert code == 0
    assert out == "abducible c.\nr :- c.\ns.\nw :- r.\nw :- s.\nd :- w.\n"
    assert run("intervene", path("sprinkler"))[1] == run("models", path("sprinkler"))[1]


def test_intervene_errors():
    code, _, err = run("intervene", path("sprinkler_observed"), "--do", "s=true")
    assert code == 2 and "counterfactual unsupported" in err
    code, _, err = run("intervene", path("sprinkler"), "--do", "c=true")
    assert code == 2 and "abducible" in err
    assert run("intervene", path("sprinkler"), "--do", "s")[0] == 2


def test_check_irrelevance_farmer():
    code, out, _ = run("check", path("farmer"), "--principle", "irrelevance")
    assert code == 1
    assert out.startswith("FAIL irrelevance")
    assert "witness" in out
    code, out, _ = run("check", path("farmer"), "--principle", "irrelevance", "--format", "json")
    data = json.loads(out)
    assert data["holds"] is False and data["consistent"] is False
    assert data["inconsistent_explanation"] == ["h"]
    assert set(data["counterexample"]) == {"kind", "S", "world", "domain", "program"}


def test_check_other_principles():
    assert run("check", path("houses"), "--principle", "stratified")[:2] == (0, "PASS stratified\n")
    assert run("check", path("farmer"), "--principle", "stratified")[0] == 1
    assert run("check", path("sprinkler"), "--principle", "consistency")[:2] == (0, "PASS consistency\n")
    code, out, _ = run("check", path("farmer"), "--principle", "consistency")
    assert code == 1 and out.rstrip().endswith("{h}")
    assert run("check", path("sprinkler"), "--principle", "irrelevance")[0] == 0


def test_check_non_interference():
    code, out, _ = run("check", path("sprinkler"), "--principle", "non-interference",
                       "--do", "s=true", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["equivalent"]
    assert data["sub_alphabet"] == ["c", "r"]
    for key in ("reducts_of_program", "stable_models_below", "reducts_after_intervention"):
        assert sorted(map(tuple, data[key])) == [(), ("c", "r")]
    code, _, _ = run("check", path("sprinkler"), "--principle", "non-interference",
                     "--set", "s,r", "--do", "s=true")
    assert code == 2


def test_bochman_output():
    code, out, _ = run("bochman", path("houses"))
    assert code == 0
    assert out.splitlines()[0] == "external: sf1, sf2, not f1, not sf1, not f2, not sf2"
    assert "f2 => f1" in out.splitlines()
    data = json.loads(run("bochman", path("sprinkler_observed"), "--format", "json")[1])
    assert data["observations"] == [["not s"]]
    assert {"cause": ["c"], "effect": "r"} in data["knowledge"]


@pytest.mark.parametrize("name", sorted(p.stem for p in CORPUS.glob("*.alp")))
def test_bochman_worlds_match_stable_models(name):
    boch = json.loads(run("bochman", path(name), "--worlds", "--format", "json")[1])
    models = json.loads(run("models", path(name), "--format", "json")[1])
    assert boch["worlds"] == models["models"]


def test_cm_output():
    code, out, _ = run("cm", path("sprinkler"))
    assert code == 0
    assert out == "external: c\nr := c\ns := not c\nw := r or s\nd := w\n"
    data = json.loads(run("cm", path("sprinkler"), "--worlds", "--format", "json")[1])
    assert data["equations"]["w"] == [["r"], ["s"]]
    supported = json.loads(run("models", path("sprinkler"), "--semantics", "supported",
                               "--format", "json")[1])
    assert data["solutions"] == supported["models"]
    assert run("cm", path("sprinkler_observed"))[0] == 2


def test_graph_output():
    code, out, _ = run("graph", path("farmer"))
    assert code == 0 and out.startswith("digraph")
    data = json.loads(run("graph", path("farmer"), "--format", "json")[1])
    assert data["stratified"] is False
    assert {"from": "t", "to": "p", "sign": "-"} in data["edges"]


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
