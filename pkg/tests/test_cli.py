import json
import subprocess
import sys

import pytest

from minoruniv import corpus
from minoruniv.cli import main


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.json"
    p.write_text(json.dumps(corpus.k4().to_json()))
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr()


def test_census(capsys):
    code, out = run(capsys, "census", "-n", 2)
    assert code == 0 and out.out.strip() == "77 105 30"


def test_generate_too_large(capsys):
    code, out = run(capsys, "generate", "-n", 9)
    assert code == 2 and "error" in out.err


def test_generate_json_and_dot(capsys):
    code, out = run(capsys, "generate", "-n", 1)
    data = json.loads(out.out)
    assert code == 0 and len(data["vertices"]) == 11
    code, out = run(capsys, "generate", "-n", 1, "--format", "dot")
    assert code == 0 and out.out.startswith("graph")


def test_stats_histogram(capsys):
    code, out = run(capsys, "stats", "-n", 2)
    rows = json.loads(out.out)["levels"]
    assert code == 0 and rows[-1]["face_lengths"] == {"7": 30}


def test_reduce_and_ears(capsys, tmp_path, k4_file):
    star = tmp_path / "star.json"
    star.write_text(json.dumps(corpus.star(4).to_json()))
    code, out = run(capsys, "reduce", star)
    assert code == 0 and set(json.loads(out.out)) == {"graph", "witness"}
    code, out = run(capsys, "ears", k4_file, "--seed", 3)
    assert code == 0 and len(json.loads(out.out)["ears"]) == 2


def test_embed_then_verify(capsys, tmp_path, k4_file):
    model = tmp_path / "m.json"
    code, _ = run(capsys, "embed", k4_file, "--out", model)
    assert code == 0
    code, out = run(capsys, "verify", model)
    assert code == 0 and json.loads(out.out)["ok"]


def test_verify_failure_exit_1(capsys, tmp_path, k4_file):
    model = tmp_path / "m.json"
    run(capsys, "embed", k4_file, "--out", model)
    data = json.loads(model.read_text())
    key = next(iter(data["branch_paths"]))
    del data["branch_paths"][key]
    model.write_text(json.dumps(data))
    code, out = run(capsys, "verify", model)
    assert code == 1 and not json.loads(out.out)["ok"]


def test_bad_input_exit_2(capsys, tmp_path):
    code, _ = run(capsys, "embed", tmp_path / "missing.json")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_probe(capsys):
    code, out = run(capsys, "probe-slice", "-n", 0, "-d", 2, "--trials", 5, "--seed", 1)
    data = json.loads(out.out)
    assert code == 0 and data["seed"] == 1 and data["target"] == 3


def test_pipe_through_stdin(k4_file):
    emb = subprocess.run([sys.executable, "-m", "minoruniv.cli", "embed", str(k4_file)],
                         capture_output=True, check=True)
    ver = subprocess.run([sys.executable, "-m", "minoruniv.cli", "verify", "-"],
                         input=emb.stdout, capture_output=True)
    assert ver.returncode == 0


def test_embed_byte_identical(tmp_path, k4_file):
    outs = []
    for i, seed in enumerate(("1", "2")):
        out = tmp_path / f"m{i}.json"
        env = {"PYTHONHASHSEED": seed, "PATH": ""}
        subprocess.run([sys.executable, "-m", "minoruniv.cli", "embed-any", str(k4_file), "--seed", "5", "--out", str(out)],
                       check=True, env=env)
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
