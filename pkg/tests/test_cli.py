import json
import pathlib

import pytest

from callan.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"

CTABLE_CSV = """\
n\\k,0,1,2,3,4,5
0,1,1,1,1,1,1
1,1,3,7,15,31,63
2,1,7,31,115,391,1267
3,1,15,115,675,3451,16275
4,1,31,391,3451,25231,164731
5,1,63,1267,16275,164731,1441923
"""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_genocchi_listing(capsys):
    code, out, _ = run(capsys, "genocchi", "--max", "6")
    assert code == 0
    assert out.splitlines() == ["0 0", "1 1", "2 -1", "3 0", "4 1", "5 0", "6 -3"]


def test_genocchi_negative_max(capsys):
    code, _, err = run(capsys, "genocchi", "--max", "-1")
    assert code == 2 and "nonnegative" in err


def test_ctable_csv(capsys):
    code, out, _ = run(capsys, "number", "--family", "ctable", "--n", "5", "--k", "5")
    assert code == 0
    assert out == CTABLE_CSV


def test_ctable_defaults_to_five(capsys):
    code, out, _ = run(capsys, "number", "--family", "ctable")
    assert code == 0 and out == CTABLE_CSV


def test_number_values(capsys):
    code, out, _ = run(capsys, "number", "--family", "b", "--n", "2", "--k", "-2")
    assert code == 0 and out.strip() == "14"
    code, out, _ = run(capsys, "number", "--family", "c", "--n", "4", "--k", "1")
    assert code == 0 and out.strip() == "-1/30"


def test_number_requires_indices(capsys):
    code, _, err = run(capsys, "number", "--family", "b")
    assert code == 2 and "--n" in err


def test_enumerate_count_only(capsys):
    code, out, _ = run(capsys, "enumerate", "--kind", "mbarred",
                       "--k", "1", "--n", "1", "--m", "1", "--count-only")
    assert code == 0 and out.strip() == "5"


def test_enumerate_callan_count(capsys):
    code, out, _ = run(capsys, "enumerate", "--kind", "callan",
                       "--k", "2", "--n", "2", "--count-only")
    assert code == 0 and out.strip() == "14"


def test_enumerate_mbarred_json_lines(capsys):
    code, out, _ = run(capsys, "enumerate", "--kind", "mbarred",
                       "--k", "2", "--n", "1", "--json")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7
    for line in lines:
        obj = json.loads(line)
        assert (obj["m"], obj["k"], obj["n"]) == (0, 2, 1)


def test_enumerate_dumont(capsys):
    code, out, _ = run(capsys, "enumerate", "--kind", "dumont", "--n", "4")
    assert code == 0
    assert sorted(out.splitlines()) == ["2 1 4 3", "3 4 2 1", "4 2 1 3"]


def test_enumerate_dumont_odd_rejected(capsys):
    code, _, err = run(capsys, "enumerate", "--kind", "dumont", "--n", "5")
    assert code == 2 and "even" in err


def test_map_phi_golden(tmp_path, capsys):
    doc = json.loads((GOLDEN / "phi_a1.json").read_text())
    src = tmp_path / "in.json"
    src.write_text(json.dumps(doc["input"]))
    code, out, _ = run(capsys, "map", "--which", "phi", "--input", str(src))
    assert code == 0
    result = json.loads(out)
    assert result["case"] == "A1"
    assert result["result"] == doc["output"]


def test_map_pipeline_psi_stages(tmp_path, capsys):
    doc = json.loads((GOLDEN / "psi_b.json").read_text())
    src = tmp_path / "in.json"
    src.write_text(json.dumps(doc["input"]))
    code, out, _ = run(capsys, "map", "--which", "psi-b", "--input", str(src))
    assert code == 0
    stage_one = json.loads(out)["result"]
    assert stage_one == doc["output"]
    mid = tmp_path / "mid.json"
    mid.write_text(json.dumps(stage_one))
    code, out, _ = run(capsys, "map", "--which", "psi-r", "--input", str(mid))
    assert code == 0
    code2, out2, _ = run(capsys, "map", "--which", "psi", "--input", str(src))
    assert code2 == 0
    assert json.loads(out)["result"] == json.loads(out2)["result"]


def test_map_domain_error_exits_one(tmp_path, capsys):
    doc = json.loads((GOLDEN / "phi_a1.json").read_text())
    src = tmp_path / "out.json"
    src.write_text(json.dumps(doc["output"]))  # star-only: not in phi's domain
    code, _, err = run(capsys, "map", "--which", "phi", "--input", str(src))
    assert code == 1 and "extra red block" in err


def test_map_missing_file(capsys):
    code, _, err = run(capsys, "map", "--which", "phi", "--input", "/no/such.json")
    assert code == 2 and "cannot read" in err


def test_verify_human_output(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "thm1")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "17 reports, 17 passed, 0 failed"
    assert all(line.startswith("pass") for line in lines[:-1])


def test_verify_json_lines(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "prop-rec",
                       "--max-weight", "4", "--json")
    assert code == 0
    for line in out.splitlines():
        report = json.loads(line)
        assert report["status"] == "pass"
        assert report["claim_id"] == "prop-rec"


def test_verify_pb_zero_claim(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "pb-zero", "--json")
    assert code == 0
    assert len(out.splitlines()) == 20


def test_verify_unknown_claim_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--claim", "bogus"])
    assert exc.value.code == 2
