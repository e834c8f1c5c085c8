import json

import pytest

from spechtgram.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_det_worked_example(capsys):
    assert run(capsys, "det", "2,1^5") == (0, "7\n", "")


def test_dmap(capsys):
    assert run(capsys, "dmap", "3,3,1")[1] == "3\n"


def test_det_of_odd_partition_is_domain_error(capsys):
    status, _, err = run(capsys, "det", "1,1")
    assert status == 1 and "odd" in err


def test_bad_partition_is_domain_error(capsys):
    status, _, err = run(capsys, "dim", "3,5")
    assert status == 1 and "'5'" in err


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["det", "2,1", "--bogus"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["hooks", "7,4,3"], "9 8 7 5 3 2 1\n5 4 3 1\n3 2 1\n"),
        (["beta", "7,4,3", "-m", "5"], "11,7,5,1,0\n"),
        (["core", "7,4,3", "-q", "8"], "3,2,1\nremoved: (1,2):8\n"),
        (["oddrank", "3,3,1"], "3\n"),
        (["dim", "3,3,1"], "21\n"),
        (["parity", "1,1"], "odd a2_parity=1\n"),
        (["dmap", "1"], "0\n"),
    ],
)
def test_text_outputs(capsys, argv, expected):
    assert run(capsys, *argv) == (0, expected, "")


def test_branches_odd_json(capsys):
    status, out, _ = run(capsys, "branches", "2,1^5", "--odd", "--json")
    doc = json.loads(out)
    assert {d["mu"] for d in doc} == {"3,3,1", "7", "5,1,1", "3,1,1,1,1"}
    assert {"mu": "3,3,1", "h1": 5, "h2": 3} in doc


def test_classes_json(capsys):
    _, out, _ = run(capsys, "classes", "2,1^5", "--json")
    doc = json.loads(out)
    assert [c["d_image"] for c in doc] == ["3", "1,1,1"]
    assert doc[0]["case_label"] == "DIST2_H2BIG_ALPHA_BAD"
    assert doc[0]["distinguished"] == "7"


def test_verify_lines(capsys):
    status, out, _ = run(capsys, "verify", "--max-n", "8")
    assert status == 0
    assert out.splitlines()[-1] == "n=8 even=14 violations=0"


def test_verify_json(capsys):
    _, out, _ = run(capsys, "verify", "--max-n", "7", "--json")
    doc = json.loads(out)
    assert doc[-1]["n"] == 7 and doc[-1]["violations"] == []
    assert {"lambda": "2,1,1,1,1,1", "a2_parity": 0, "square_class": 7} in doc[-1]["partitions"]


def test_oracle(capsys):
    status, out, _ = run(capsys, "oracle", "2,2", "--prime", "2", "--prime", "3")
    assert status == 0
    assert out == "det=12\nfactorization=2^2 * 3^1\na^(2)=2\na^(3)=1\n"
    _, out, _ = run(capsys, "oracle", "2,1", "--gram")
    doc = json.loads(out)
    assert doc["det"] == 3 and len(doc["gram"]) == 2


def test_oracle_budget(capsys):
    status, _, err = run(capsys, "oracle", "3,3,2", "--budget", "10")
    assert status == 1 and "budget" in err


def test_stats_csv(tmp_path, capsys):
    path = tmp_path / "out.csv"
    status, out, _ = run(capsys, "stats", "--max-n", "12", "--csv", str(path))
    assert status == 0
    assert path.read_text() == out
    assert out.splitlines()[12] == "12,20,32,32,-4"


def test_stats_cap(capsys):
    status, _, err = run(capsys, "stats", "--max-n", "41")
    assert status == 1 and "cap" in err
