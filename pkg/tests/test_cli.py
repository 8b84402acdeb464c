"""End-to-end command line behavior: verdicts, JSON, exit codes."""

import json
import subprocess
import sys

import pytest

from locaut.cli import main
from locaut.leibniz import BlockMap, build_module, build_semidirect
from locaut.linalg import Matrix
from locaut.sln import MnModel, SlnModel


def write_json(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def transpose_file(tmp_path, n=2):
    model = SlnModel(n)
    return write_json(tmp_path, f"transpose{n}.json", model.transpose_map().to_json())


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# -- classify-sln -----------------------------------------------------------


def test_classify_sln_text(tmp_path, capsys):
    path = transpose_file(tmp_path)
    code, out, _ = run(capsys, ["classify-sln", "--n", "2", "--map", path])
    assert code == 0
    assert out.splitlines()[0] == "verdict: AntiAutomorphism"


def test_classify_sln_json(tmp_path, capsys):
    path = transpose_file(tmp_path)
    code, out, _ = run(capsys, ["classify-sln", "--n", "2", "--map", path, "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "AntiAutomorphism"
    assert data["shape"]["sigma"] == "transpose"
    assert data["obstruction"] is None


def test_classify_sln_not_local_exit_zero(tmp_path, capsys):
    model = SlnModel(2)
    path = write_json(tmp_path, "double.json", model.scalar_map(2).to_json())
    code, out, _ = run(capsys, ["classify-sln", "--n", "2", "--map", path, "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "NotLocal"
    assert data["obstruction"]["kind"] == "lambda_not_unit"
    assert data["obstruction"]["lambda"] == "2"


def test_classify_sln_json_deterministic(tmp_path, capsys):
    path = transpose_file(tmp_path, 3)
    _, out1, _ = run(capsys, ["classify-sln", "--n", "3", "--map", path, "--json"])
    _, out2, _ = run(capsys, ["classify-sln", "--n", "3", "--map", path, "--json"])
    assert out1 == out2


def test_classify_sln_wrong_size(tmp_path, capsys):
    path = write_json(tmp_path, "small.json", Matrix.identity(2).to_json())
    code, _, err = run(capsys, ["classify-sln", "--n", "2", "--map", path])
    assert code == 2
    assert "expected a 3x3 matrix" in err


def test_classify_sln_missing_file(capsys):
    code, _, err = run(capsys, ["classify-sln", "--n", "2", "--map", "/nonexistent.json"])
    assert code == 2
    assert "cannot read" in err


def test_classify_sln_bad_json(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _, err = run(capsys, ["classify-sln", "--n", "2", "--map", str(p)])
    assert code == 2
    assert "not valid JSON" in err


# -- classify-mn ------------------------------------------------------------


def test_classify_mn_transpose(tmp_path, capsys):
    model = MnModel(2)
    path = write_json(tmp_path, "mnT.json", model.map_matrix(lambda x: x.T).to_json())
    code, out, _ = run(capsys, ["classify-mn", "--n", "2", "--map", path, "--json"])
    assert code == 0
    assert json.loads(out)["verdict"] == "AntiAutomorphism"


def test_classify_mn_scaling(tmp_path, capsys):
    model = MnModel(2)
    path = write_json(tmp_path, "mn2.json", model.map_matrix(lambda x: x + x).to_json())
    code, out, _ = run(capsys, ["classify-mn", "--n", "2", "--map", path, "--json"])
    assert code == 0
    assert json.loads(out)["obstruction"]["kind"] == "identity_not_fixed"


# -- witness ----------------------------------------------------------------


def test_witness_at_nilpotent(tmp_path, capsys):
    model = SlnModel(2)
    dpath = transpose_file(tmp_path)
    xpath = write_json(tmp_path, "e12.json", model.e(0, 1).to_json())
    code, out, _ = run(capsys, ["witness", "--n", "2", "--map", dpath, "--at", xpath])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "epsilon: 1"
    assert lines[1] == "sigma: identity"
    assert json.loads(lines[2].split("conjugator: ")[1]) == [["0", "1"], ["1", "0"]]


def test_witness_json_found(tmp_path, capsys):
    model = SlnModel(2)
    dpath = transpose_file(tmp_path)
    xpath = write_json(tmp_path, "e12.json", model.e(0, 1).to_json())
    code, out, _ = run(capsys, ["witness", "--n", "2", "--map", dpath, "--at", xpath, "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["found"] is True
    assert data["shape"]["epsilon"] == 1


def test_witness_not_found(tmp_path, capsys):
    model = SlnModel(2)
    dpath = write_json(tmp_path, "double.json", model.scalar_map(2).to_json())
    xpath = write_json(tmp_path, "h1.json", model.h(0).to_json())
    code, out, _ = run(capsys, ["witness", "--n", "2", "--map", dpath, "--at", xpath, "--json"])
    assert code == 0
    assert json.loads(out) == {"found": False}


def test_witness_rejects_trace(tmp_path, capsys):
    dpath = transpose_file(tmp_path)
    xpath = write_json(tmp_path, "one.json", Matrix.identity(2).to_json())
    code, _, err = run(capsys, ["witness", "--n", "2", "--map", dpath, "--at", xpath])
    assert code == 2
    assert "traceless" in err


# -- leibniz-build ----------------------------------------------------------


def test_leibniz_build_summary(capsys):
    code, out, _ = run(capsys, ["leibniz-build", "--n", "2", "--module", "vm:2", "--json"])
    assert code == 0
    data = json.loads(out)
    assert (data["dim"], data["dim_s"], data["dim_i"]) == (6, 3, 3)
    assert data["simple"] is True
    assert data["algebra"]["dim"] == 6


def test_leibniz_build_with_extension(tmp_path, capsys):
    path = write_json(tmp_path, "id3.json", Matrix.identity(3).to_json())
    code, out, _ = run(
        capsys,
        ["leibniz-build", "--n", "2", "--module", "vm:2", "--map", path, "--omega", "1", "--json"],
    )
    assert code == 0
    data = json.loads(out)
    assert data["extension"] is not None
    bm = BlockMap.from_json(data["extension"])
    assert not bm.coupling.is_zero()


def test_leibniz_build_non_extendable(tmp_path, capsys):
    model = SlnModel(3)
    path = write_json(tmp_path, "negT.json", model.map_matrix(lambda x: -(x.T)).to_json())
    code, out, _ = run(
        capsys,
        ["leibniz-build", "--n", "3", "--module", "natural", "--map", path, "--json"],
    )
    assert code == 0
    assert json.loads(out)["extension"] is None


def test_leibniz_build_bad_module(capsys):
    code, _, err = run(capsys, ["leibniz-build", "--n", "3", "--module", "vm:2"])
    assert code == 2
    assert "sl_2" in err


def test_leibniz_build_rejects_anti_s_map(tmp_path, capsys):
    path = transpose_file(tmp_path)
    code, _, err = run(
        capsys, ["leibniz-build", "--n", "2", "--module", "vm:2", "--map", path]
    )
    assert code == 2
    assert "not an automorphism" in err


# -- leibniz-decide ---------------------------------------------------------


def block_map_file(tmp_path, name, s, si, i):
    return write_json(tmp_path, name, {"s": s.to_json(), "si": si.to_json(), "i": i.to_json()})


def test_leibniz_decide_local(tmp_path, capsys):
    path = block_map_file(
        tmp_path, "ident.json", Matrix.identity(3), Matrix.zeros(3, 3), Matrix.identity(3)
    )
    code, out, _ = run(
        capsys, ["leibniz-decide", "--n", "2", "--module", "vm:2", "--map", path, "--json"]
    )
    assert code == 0
    assert json.loads(out) == {"verdict": "LocalAutomorphism", "certificate": None}


def test_leibniz_decide_not_local(tmp_path, capsys):
    model = SlnModel(2)
    path = block_map_file(
        tmp_path, "trans.json", model.transpose_map(), Matrix.zeros(3, 3), Matrix.identity(3)
    )
    code, out, _ = run(
        capsys, ["leibniz-decide", "--n", "2", "--module", "vm:2", "--map", path, "--json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "NotLocal"
    assert data["certificate"]["kind"] == "bracket_square"


def test_leibniz_decide_size_mismatch(tmp_path, capsys):
    path = block_map_file(
        tmp_path, "small.json", Matrix.identity(2), Matrix.zeros(2, 2), Matrix.identity(2)
    )
    code, _, err = run(
        capsys, ["leibniz-decide", "--n", "2", "--module", "vm:2", "--map", path]
    )
    assert code == 2
    assert "block sizes" in err


# -- filiform-demo ----------------------------------------------------------


def test_filiform_demo(capsys):
    code, out, _ = run(
        capsys, ["filiform-demo", "--n", "4", "--samples", "24", "--seed", "7", "--json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 4
    assert data["delta_is_automorphism"] is False
    assert data["samples"] == 24
    assert data["all_verified"] is True
    counts = data["witness_counts"]
    assert counts["phi"] + counts["psi"] == 24


def test_filiform_demo_deterministic(capsys):
    argv = ["filiform-demo", "--n", "5", "--samples", "16", "--json"]
    _, out1, _ = run(capsys, argv)
    _, out2, _ = run(capsys, argv)
    assert out1 == out2


# -- selfcheck --------------------------------------------------------------


def test_selfcheck_passes(capsys):
    code, out, _ = run(capsys, ["selfcheck"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "seed: 20240817"
    passes = [ln for ln in lines if ln.startswith("PASS")]
    assert len(passes) == 10
    assert not any(ln.startswith("FAIL") for ln in lines)
    assert lines[-1] == "failures: 0"


def test_selfcheck_json(capsys):
    code, out, _ = run(capsys, ["selfcheck", "--json", "--seed", "5"])
    assert code == 0
    data = json.loads(out)
    assert data["seed"] == 5
    assert data["failures"] == 0
    assert all(c["status"] == "PASS" for c in data["checks"])


# -- process-level checks ---------------------------------------------------


def test_console_script_bytes_identical(tmp_path):
    model = SlnModel(2)
    path = write_json(tmp_path, "neg.json", model.scalar_map(-1).to_json())
    argv = [sys.executable, "-c",
            "import sys; from locaut.cli import main; sys.exit(main(sys.argv[1:]))",
            "classify-sln", "--n", "2", "--map", path, "--json"]
    r1 = subprocess.run(argv, capture_output=True)
    r2 = subprocess.run(argv, capture_output=True)
    assert r1.returncode == 0
    assert r1.stdout == r2.stdout
    assert json.loads(r1.stdout)["verdict"] == "AntiAutomorphism"


def test_unknown_command_exits_2():
    r = subprocess.run(
        [sys.executable, "-c",
         "import sys; from locaut.cli import main; sys.exit(main(sys.argv[1:]))",
         "frobnicate"],
        capture_output=True,
    )
    assert r.returncode == 2
