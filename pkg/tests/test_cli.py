"""CLI surface: subcommands, exit codes, JSON report shape, byte-identical
reruns, and the documented anchors (z_2 coefficients on kS3, the second
indicator vector on kQ8, commutator counts on S3).

Exit codes: 0 ok, 1 hard check failure, 2 parse/load error, 3 verification
failure or refused precondition, 4 cap exceeded.
"""

import json

import pytest

from hopfcomm.cli import main
from hopfcomm.group import quaternion_group

S3_SPEC = {"name": "S3", "perm_generators": [[[1, 2]], [[1, 2, 3]]]}
C2_SPEC = {"name": "C2", "cayley": [[0, 1], [1, 0]]}


@pytest.fixture(scope="module")
def specdir(tmp_path_factory):
    d = tmp_path_factory.mktemp("specs")
    (d / "s3.json").write_text(json.dumps(S3_SPEC))
    (d / "c2.json").write_text(json.dumps(C2_SPEC))
    G = quaternion_group()
    q8 = {"name": "Q8", "cayley": [list(r) for r in G.table],
          "labels": list(G.labels)}
    (d / "q8.json").write_text(json.dumps(q8))
    return d


@pytest.fixture(scope="module")
def ks3_dump(specdir):
    path = specdir / "ks3_dump.json"
    assert main(["build", "group", str(specdir / "s3.json"),
                 "-o", str(path)]) == 0
    return path


def run_json(capsys, argv, code=0):
    assert main(argv) == code
    return json.loads(capsys.readouterr().out)


# ---------------------------------------------------------------------------
# chartab


def test_chartab_s3_json(specdir, capsys):
    doc = run_json(capsys, ["chartab", str(specdir / "s3.json")])
    assert doc["schema"] == "hopfcomm/1"
    assert doc["degrees"] == [1, 1, 2]
    assert sorted(c["size"] for c in doc["classes"]) == [1, 2, 3]
    assert doc["table"][0] == ["1", "1", "1"]
    assert any(e["stage"] == "dixon" and e["outcome"] == "ok"
               for e in doc["events"])


def test_chartab_c2_values(specdir, capsys):
    doc = run_json(capsys, ["chartab", str(specdir / "c2.json")])
    assert doc["table"] == [["1", "1"], ["1", "-1"]]


def test_chartab_markdown(specdir, capsys):
    assert main(["chartab", str(specdir / "s3.json"), "--markdown"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("| S3")
    assert "| chi_2" in out and "()" in out


def test_chartab_bad_spec_exit2(specdir, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "X", "perm_generators": [[[0, 1]]]}))
    assert main(["chartab", str(bad)]) == 2
    bad.write_text("{not json")
    assert main(["chartab", str(bad)]) == 2
    assert main(["chartab", str(tmp_path / "absent.json")]) == 2


# ---------------------------------------------------------------------------
# build


def test_build_double_dump(specdir, capsys):
    doc = run_json(capsys, ["build", "double", str(specdir / "s3.json")])
    assert doc["schema"] == "hopfcomm/1"
    assert doc["dim"] == 36 and doc["kind"] == "double"
    assert "r_matrix" in doc
    assert sorted(doc["irred"]["degrees"]) == [1, 1, 2, 2, 2, 2, 3, 3]
    assert doc["group_name"] == "S3"


def test_build_writes_output_file(ks3_dump):
    doc = json.loads(ks3_dump.read_text())
    assert doc["dim"] == 6 and doc["kind"] == "group"
    assert doc["irred"]["degrees"] == [1, 1, 2]


# ---------------------------------------------------------------------------
# compute


def test_compute_z2_both_routes(ks3_dump, capsys):
    doc = run_json(capsys, ["compute", "z", "--n", "2",
                            "--hopf", str(ks3_dump)])
    res = doc["result"]
    assert res["e_basis_coefficients"] == ["1", "1", "1/4"]
    assert res["routes_agree"] is True
    assert res["direct_route_vector"] == res["idempotent_route_vector"]


def test_compute_root2_q8_indicators(specdir, capsys):
    doc = run_json(capsys, ["compute", "root", "--m", "2",
                            "--group", str(specdir / "q8.json")])
    assert doc["result"]["character_coefficients"] == ["1", "1", "1", "1", "-1"]
    assert doc["result"]["m"] == 2


def test_compute_frob_counts_commutators(ks3_dump, capsys):
    doc = run_json(capsys, ["compute", "frob", "--hopf", str(ks3_dump)])
    res = doc["result"]
    assert res["character_coefficients"] == ["6", "6", "3"]
    by_label = dict(zip(res["labels"], res["values"]))
    assert by_label["()"] == "18"
    assert by_label["(1 2)"] == "0"
    assert by_label["(1 2 3)"] == "9"


def test_compute_fn_rejects_n_zero(ks3_dump):
    assert main(["compute", "fn", "--n", "0", "--hopf", str(ks3_dump)]) == 2


def test_compute_hprime(ks3_dump, capsys):
    doc = run_json(capsys, ["compute", "hprime", "--hopf", str(ks3_dump)])
    assert doc["result"]["dim"] == 3
    assert len(doc["result"]["basis"]) == 3


def test_compute_classdata(ks3_dump, capsys):
    doc = run_json(capsys, ["compute", "classdata", "--hopf", str(ks3_dump)])
    assert doc["result"]["class_dims"] == [1, 2, 3]


def test_compute_classdata_refused_on_dual(specdir):
    code = main(["compute", "classdata", "--group", str(specdir / "s3.json"),
                 "--kind", "dualgroup"])
    assert code == 3


def test_compute_needs_an_instance():
    assert main(["compute", "z"]) == 2


# ---------------------------------------------------------------------------
# verify


def test_verify_all_ks3(ks3_dump, capsys):
    doc = run_json(capsys, ["verify", "--suite", "all",
                            "--hopf", str(ks3_dump)])
    assert set(doc["suites"]) == {"sec1", "sec2", "sec3", "sec4"}
    assert doc["summary"]["fail"] == 0
    assert doc["instance"] == {"kind": "group", "dim": 6, "cyc_order": 6,
                               "group": "S3", "source": "dump"}


def test_verify_sec4_trivial_r_matrix_skips(ks3_dump, tmp_path, capsys):
    data = json.loads(ks3_dump.read_text())
    data["r_matrix"] = [[0, 0, "1"]]  # R = 1 (x) 1, fine on cocommutative kS3
    path = tmp_path / "ks3_trivial_r.json"
    path.write_text(json.dumps(data))
    doc = run_json(capsys, ["verify", "--suite", "sec4", "--hopf", str(path)])
    assert doc["summary"]["fail"] == 0
    skip = [e for e in doc["suites"]["sec4"]
            if e["check"] == "factorizable_applicable"]
    assert skip and skip[0]["status"] == "evidence"
    assert "not bijective" in skip[0]["witness"]


def test_verify_sec4_on_dual_is_single_evidence(specdir, capsys):
    doc = run_json(capsys, ["verify", "--suite", "sec4",
                            "--group", str(specdir / "s3.json"),
                            "--kind", "dualgroup"])
    entries = doc["suites"]["sec4"]
    assert [e["check"] for e in entries] == ["classdata_applicable"]
    assert entries[0]["status"] == "evidence"
    assert doc["summary"]["fail"] == 0


def test_verify_corrupted_dump_exit3(ks3_dump, tmp_path):
    data = json.loads(ks3_dump.read_text())
    data["mult"][3][3] = "2"
    path = tmp_path / "corrupt.json"
    path.write_text(json.dumps(data))
    assert main(["verify", "--suite", "sec1", "--hopf", str(path)]) == 3


def test_verify_wrong_schema_exit2(ks3_dump, tmp_path):
    data = json.loads(ks3_dump.read_text())
    data["schema"] = "other/9"
    path = tmp_path / "schema.json"
    path.write_text(json.dumps(data))
    assert main(["verify", "--hopf", str(path)]) == 2


def test_verify_rerun_is_byte_identical(ks3_dump, capsys):
    argv = ["verify", "--suite", "sec3", "--hopf", str(ks3_dump)]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_timing_flag_opt_in(ks3_dump, capsys):
    doc = run_json(capsys, ["compute", "z", "--hopf", str(ks3_dump)])
    assert "timing_ms" not in doc
    doc = run_json(capsys, ["compute", "z", "--hopf", str(ks3_dump),
                            "--timing"])
    assert "timing_ms" in doc


# ---------------------------------------------------------------------------
# oracle


def test_oracle_commutator_word_against_frob(specdir, capsys):
    doc = run_json(capsys, ["oracle", str(specdir / "s3.json"),
                            "--word", "[x1,x2]", "--against", "frob"])
    by_class = {c["class"]: c["count"] for c in doc["counts_by_class"]}
    assert by_class["()"] == 18
    assert by_class["(1 2)"] == 0
    assert by_class["(1 2 3)"] == 9
    assert doc["count_is_class_function"] is True
    assert doc["checks"] and all(e["status"] == "pass" for e in doc["checks"])


def test_oracle_square_word_against_root(specdir, capsys):
    doc = run_json(capsys, ["oracle", str(specdir / "q8.json"),
                            "--word", "x1^2", "--against", "root:2"])
    by_class = {c["class"]: c["count"] for c in doc["counts_by_class"]}
    assert by_class["1"] == 2 and by_class["-1"] == 6
    assert all(e["status"] == "pass" for e in doc["checks"])


def test_oracle_iterated_word(specdir, capsys):
    doc = run_json(capsys, ["oracle", str(specdir / "s3.json"),
                            "--word", "[[x1,x2],x3]", "--against", "iterated"])
    assert all(e["status"] == "pass" for e in doc["checks"])
    assert doc["arity"] == 3 and doc["tuples"] == 216


def test_oracle_wrong_functional_fails(specdir, capsys):
    # cube-root counts are identically 1 on Q8, square counts are not
    code = main(["oracle", str(specdir / "q8.json"),
                 "--word", "x1^2", "--against", "root:3"])
    assert code == 1
    doc = json.loads(capsys.readouterr().out)
    assert any(e["status"] == "fail" for e in doc["checks"])


def test_oracle_word_syntax_exit2(specdir):
    assert main(["oracle", str(specdir / "s3.json"), "--word", "[x1,x2"]) == 2


def test_oracle_unknown_functional_exit2(specdir):
    assert main(["oracle", str(specdir / "s3.json"), "--word", "x1^2",
                 "--against", "nope"]) == 2


def test_oracle_enum_cap_exit4(specdir, monkeypatch):
    monkeypatch.setenv("HOPFCOMM_CAP", "enum=10")
    assert main(["oracle", str(specdir / "s3.json"), "--word", "[x1,x2]"]) == 4


def test_build_dim_cap_exit4(specdir, monkeypatch):
    monkeypatch.setenv("HOPFCOMM_CAP", "dim=8")
    assert main(["build", "double", str(specdir / "s3.json")]) == 4


def test_bad_subcommand_exit2():
    assert main(["bogus"]) == 2
