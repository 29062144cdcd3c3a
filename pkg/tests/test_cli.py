import json
import subprocess
import sys

import pytest

from caustic.algebra import ONE, CausalValue, options_for, value_of
from caustic.cli import SolveConfig, main, run_solve
from caustic.engine import EngineConfig, Interpretation, causal_stable_models
from caustic.errors import AtomFalse
from caustic.export import export_dot, export_json, values_from_json
from caustic.syntax import parse_program

import example_programs


@pytest.fixture
def write(tmp_path):
    def _write(text, name="prog.lp"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def solve(path, **kw):
    return run_solve(path, SolveConfig(**kw))


def test_causal_text(write):
    code, out, err = solve(write(example_programs.P1), omit_normal_heads=True)
    assert code == 0 and err == ""
    assert out.splitlines() == [
        "Answer 1: dead harvey shoot",
        "dead = harvey·r2·r1",
        "harvey = harvey",
        "shoot = harvey·r2",
    ]


def test_explain_filters_atoms(write):
    code, out, _ = solve(write(example_programs.P2), explain_atoms=("dead",))
    assert code == 0
    assert out.splitlines() == [
        "Answer 1: harvey head",
        "dead = 0",
        "Answer 2: dead harvey shoot tails",
        "dead = harvey·r3^tails·r2^shoot·r1^dead",
    ]


def test_strip_atom_edges_text(write):
    _, out, _ = solve(write(example_programs.P1), explain_atoms=("dead",), strip_atom_edges=True)
    assert out.splitlines()[1] == "dead = r2·r1"


def test_standard_text(write):
    code, out, _ = solve(write(example_programs.P2), mode="standard")
    assert code == 0
    assert out == "harvey head\ndead harvey shoot tails\n"


def test_no_models(write):
    code, out, err = solve(write("a.\n:- a.\n"))
    assert (code, out, err) == (1, "", "no models\n")


def test_parse_error_exit_code(write):
    code, out, err = solve(write("r1: a :- b\n"))
    assert code == 2 and out == ""
    assert ":2:1: expected '.', found 'end of input'" in err


def test_validation_errors_all_reported(write):
    code, _, err = solve(write("r1: a :- b.\nr1: c :- b.\nr2: x :- r2.\nb.\n"))
    assert code == 2
    assert len(err.splitlines()) == 2


def test_missing_file(tmp_path):
    code, _, err = solve(str(tmp_path / "nope.lp"))
    assert code == 2 and "cannot read" in err


def test_bound_error(write):
    code, _, err = run_solve(write("".join(f"a{i}.\n" for i in range(5))),
                             SolveConfig(engine=EngineConfig(max_atoms=3)))
    assert code == 2 and "max_atoms" in err


def test_config_rejects_bad_combinations():
    with pytest.raises(ValueError):
        SolveConfig(format="dot")
    with pytest.raises(ValueError):
        SolveConfig(format="dot", all_atoms=True, mode="standard")


# -- dot --------------------------------------------------------------------------

def test_dot_heartbeat_justifications(write):
    code, out, _ = solve(write(example_programs.P3_HEARTBEAT), format="dot",
                         explain_atoms=("no_heartbeat",), omit_normal_heads=True)
    assert code == 0
    assert "digraph no_heartbeat_j1 {" in out and "digraph no_heartbeat_j2 {" in out
    assert '"joker_stab" -> "r3";' in out and '"r3" -> "r4";' in out
    for edge in ['"harvey" -> "r2";', '"r2" -> "r1";', '"loaded" -> "r1";', '"r1" -> "r4";']:
        assert edge in out
    assert '"r4" [shape=box];' in out and '"harvey" [shape=ellipse];' in out
    assert "no_heartbeat" not in out.split("{", 1)[1].split("}")[0]


def test_dot_value_one_is_empty_digraph():
    model = Interpretation({"a": ONE})
    assert export_dot(model, "a") == "digraph a_j1 {\n}\n"


def test_dot_false_atom():
    p = parse_program(example_programs.P6_WET)
    (model, _) = causal_stable_models(p)
    with pytest.raises(AtomFalse):
        export_dot(model, "dead")


def test_dot_false_atom_cli_warns(write):
    code, out, err = solve(write(example_programs.P6_WET), format="dot", explain_atoms=("dead",))
    assert code == 0
    assert "'dead' is false" in err
    assert "digraph" not in out


def test_dot_all(write):
    code, out, _ = solve(write(example_programs.P1), format="dot", all_atoms=True)
    assert code == 0
    assert out.count("digraph") == 3


# -- json -------------------------------------------------------------------------

def test_json_dead_graph_edges(write):
    _, out, _ = solve(write(example_programs.P1), format="json")
    data = json.loads(out)
    assert data["mode"] == "causal"
    (model,) = data["models"]
    (graph,) = model["values"]["dead"]["graphs"]
    # five vertices harvey, r2, shoot, r1, dead in a chain: 5 loops + 10 ordered pairs
    assert len(graph) == 15
    assert model["values"]["dead"]["term"] == "harvey·r2^shoot·r1^dead"


def test_json_false_atoms_listed(write):
    _, out, _ = solve(write(example_programs.P2), format="json")
    first = json.loads(out)["models"][0]
    assert first["values"]["dead"] == {"term": "0", "graphs": []}


def test_json_roundtrip():
    p = parse_program(example_programs.P5)
    models = causal_stable_models(p)
    text = export_json(models, "causal", p.atoms, options_for(p.atoms, p.normal_labels))
    back = values_from_json(text)
    assert [{a: m[a] for a in sorted(p.atoms)} for m in models] == back


def test_json_program5_models_share_atoms(write):
    _, out, _ = solve(write(example_programs.P5), format="json")
    models = json.loads(out)["models"]
    assert len(models) == 2
    assert models[0]["atoms"] == models[1]["atoms"] == ["a", "b"]


def test_json_deterministic(write):
    path = write(example_programs.P11)
    outs = {solve(path, format="json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_json_standard(write):
    _, out, _ = solve(write(example_programs.P2), format="json", mode="standard")
    assert json.loads(out) == {"mode": "standard", "models": [
        {"atoms": ["harvey", "head"], "values": {}},
        {"atoms": ["dead", "harvey", "shoot", "tails"], "values": {}},
    ]}


def test_values_from_json_handles_zero():
    text = export_json([Interpretation({"a": value_of("x.y")})], "causal", ["a", "b"])
    (vals,) = values_from_json(text)
    assert vals["b"] == CausalValue.of([]) and vals["a"] == value_of("x.y")


# -- entry points -------------------------------------------------------------------

def test_jobs_give_same_output(write):
    path = write(example_programs.P6)
    serial = run_solve(path, SolveConfig())
    parallel = run_solve(path, SolveConfig(engine=EngineConfig(jobs=2)))
    assert serial == parallel


def test_main(write, capsys):
    assert main(["solve", write(example_programs.P4_NAIVE2), "--explain", "head"]) == 0
    assert capsys.readouterr().out == "Answer 1: head\nhead = head\n"


def test_main_usage_error(write):
    with pytest.raises(SystemExit) as info:
        main(["solve", write(example_programs.P1), "--format", "dot"])
    assert info.value.code == 2


def test_env_max_atoms(write, monkeypatch):
    monkeypatch.setenv("CAUSTIC_MAX_ATOMS", "2")
    assert main(["solve", write(example_programs.P1)]) == 2


def test_module_entry_point(write):
    proc = subprocess.run([sys.executable, "-m", "caustic.cli", "solve", write(example_programs.P7),
                           "--mode", "standard"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "infection\nfever infection\n"
