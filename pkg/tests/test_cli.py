import json

from steinlab.cli import run


def test_classify_table():
    code, out = run(["steinberg", "classify", "--n", "2", "--q", "2"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3  # header + two simples
    assert lines[0].split("\t")[:3] == ["lambda", "digits", "dim"]
    dims = sorted(line.split("\t")[2] for line in lines[1:])
    assert dims == ["1", "2"]


def test_dimtable_lines_functor():
    code, out = run(["functor", "dimtable", "--ring", "F_2",
                     "--coeff", "F_3", "--functor", "gr1",
                     "--rank", "4"])
    assert code == 0
    data = json.loads(out)
    assert data["dims"] == [0, 1, 3, 7, 15]
    assert data["fit"] == ["-1", "1"]
    assert data["fit_ok"] is True


def test_factor_power_map():
    code, out = run(["emlpoly", "factor", "--ring", "F_9",
                     "--map", "pow4"])
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 2  # identity and the Frobenius


def test_partition_digits():
    code, out = run(["partition", "digits", "--lam", "3,2",
                     "--p", "2", "--r", "2"])
    assert code == 0
    data = json.loads(out)
    assert data["digits"] == [[1, 0], [1, 1]]


def test_schur_eval():
    code, out = run(["schur", "eval", "--lam", "2,1", "--n", "3",
                     "--coeff", "Q"])
    assert code == 0
    assert json.loads(out)["dimension"] == 8


def test_degree_reports_sentinel():
    code, out = run(["functor", "degree", "--ring", "F_2",
                     "--coeff", "F_3", "--functor", "gr1",
                     "--rank", "4"])
    assert code == 0
    data = json.loads(out)
    assert data["degree"] is None
    assert data["not_polynomial_up_to"] == 4


def test_usage_error_is_code_1():
    code, _ = run(["no-such-module"])
    assert code == 1
    code, _ = run(["schur", "eval", "--lam", "2,1"])  # missing required
    assert code == 1


def test_precondition_error_is_code_2():
    # socle needs every part strictly below q
    code, out = run(["schur", "socle", "--lam", "5", "--n", "2",
                     "--coeff", "F_2"])
    assert code == 2
    assert out.startswith("error:")


def test_cap_exceeded_is_code_3():
    code, out = run(["steinberg", "classify", "--n", "4", "--q", "2"])
    assert code == 3
    assert "cap" in out.lower()


def test_reruns_are_byte_identical():
    argv = ["steinberg", "classify", "--n", "3", "--q", "2"]
    assert run(argv) == run(argv)


def test_format_json_for_tables():
    code, out = run(["--format", "json", "steinberg", "classify",
                     "--n", "2", "--q", "2"])
    assert code == 0
    data = json.loads(out)
    assert len(data["rows"]) == 2


def test_batch_empty(tmp_path):
    mf = tmp_path / "jobs.json"
    mf.write_text("[]")
    code, out = run(["batch", str(mf)])
    assert code == 0
    report = json.loads(out)
    assert report["jobs"] == 0 and report["failures"] == 0


def test_batch_mixed_and_parallel(tmp_path):
    jobs = [
        {"args": ["partition", "conj", "--lam", "3,1"]},
        {"args": ["steinberg", "classify", "--n", "4", "--q", "2"]},
        {"args": ["schur", "eval", "--lam", "1,1", "--n", "2",
                  "--coeff", "Q"]},
    ]
    mf = tmp_path / "jobs.json"
    mf.write_text(json.dumps(jobs))
    code, out = run(["batch", str(mf)])
    assert code == 0
    report = json.loads(out)
    assert report["jobs"] == 3
    assert report["failures"] == 1
    assert report["results"][1]["code"] == 3
    assert json.loads(report["results"][2]["output"])["dimension"] == 1
    # the same manifest with worker threads gives the same report
    code2, out2 = run(["--jobs", "3", "batch", str(mf)])
    assert (code2, out2) == (code, out)


def test_unique_subcommand():
    code, out = run(["steinberg", "unique", "--n", "2", "--q", "2",
                     "--lam", "1,1", "--lam2", "0,0"])
    assert code == 0
    data = json.loads(out)
    assert data["isomorphic"] is True
    assert data["relation"] == "det^(p-1) twist"
