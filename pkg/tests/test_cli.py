import json

from frobcm.cli import build_table1_record, build_verify_record, main
from frobcm.rings import parse_ring, scroll21


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_table1_text(capsys):
    code, out, _ = run(capsys, ["table1"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 12  # header + 11 family rows
    scroll3 = next(line for line in lines if line.startswith("scroll:3"))
    assert "1/3" in scroll3 and "2" in scroll3 and "3*2^i/2" in scroll3


def test_table1_json(capsys):
    code, out, _ = run(capsys, ["table1", "--format", "json"])
    assert code == 0
    record = json.loads(out)
    by_family = {row["family"]: row for row in record["rows"]}
    assert by_family["scroll21"]["s"]["num"] == 5
    assert by_family["scroll21"]["s"]["den"] == 12
    assert by_family["veronese2"]["ehk"] == {"num": 2, "den": 1, "approx": 2.0}


def test_table1_csv_row_count(capsys):
    code, out, _ = run(
        capsys, ["table1", "--format", "csv", "--families", "scroll:2,veronese2"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3  # header + 2 rows


def test_decompose_text(capsys):
    code, out, _ = run(capsys, ["decompose", "--ring", "scroll:2", "--p", "3", "--e", "1"])
    assert code == 0
    assert "M(0)=5" in out and "M(1)=4" in out
    assert "routes agree exactly" in out


def test_decompose_large_veronese(capsys):
    code, out, _ = run(
        capsys,
        ["decompose", "--ring", "veronese2", "--p", "3", "--e", "2", "--format", "json"],
    )
    assert code == 0
    record = json.loads(out)
    mults = record["decompositions"]["paper_index_sets"]["multiplicities"]
    assert mults == {"R": 365, "A": 364}


def test_decompose_rejects_even_characteristic_veronese(capsys):
    code, _, err = run(capsys, ["decompose", "--ring", "veronese2", "--p", "2", "--e", "1"])
    assert code == 2
    assert "odd characteristic" in err


def test_decompose_route_diff_shows_boundary_gap(capsys):
    code, out, _ = run(
        capsys,
        ["decompose", "--ring", "scroll21", "--p", "3", "--e", "1", "--format", "json"],
    )
    assert code == 0
    record = json.loads(out)
    assert record["route_diff"] == {"BorC": 1}


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, ["verify", "--ring", "scroll21", "--q", "3,5"])
    assert code == 0
    assert "FAIL" not in out
    assert "checks passed" in out


def test_verify_syzygy_counts_sets(capsys):
    code, out, _ = run(
        capsys, ["verify", "--ring", "scroll:4", "--q", "5", "--suite", "syzygy"]
    )
    assert code == 0
    assert "3 syzygy sets checked" in out


def test_verify_unknown_suite(capsys):
    code, _, _ = run(
        capsys, ["verify", "--ring", "scroll:4", "--q", "5", "--suite", "nope"]
    )
    assert code == 2


def test_verify_bad_ring(capsys):
    code, _, err = run(capsys, ["verify", "--ring", "grassmannian", "--q", "3"])
    assert code == 2
    assert "unknown ring" in err


def test_json_round_trip_and_determinism(capsys):
    argv = ["decompose", "--ring", "scroll21", "--p", "3", "--e", "1", "--format", "json"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second
    parsed = json.loads(first)
    assert json.loads(json.dumps(parsed)) == parsed


def test_record_round_trip_equality():
    record = build_table1_record([parse_ring("scroll:3")], 4)
    encoded = json.dumps(record, sort_keys=True)
    assert json.loads(encoded) == json.loads(json.dumps(json.loads(encoded), sort_keys=True))
    report = build_verify_record(scroll21(), [3], "counts")
    assert report["ok"] is True
    assert json.loads(json.dumps(report)) == report


def test_exit_status_reflects_failures():
    report = build_verify_record(scroll21(), [3], "all")
    assert report["ok"] == all(c["ok"] for c in report["checks"])
