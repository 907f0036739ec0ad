import json

import pytest

from milnorcert.app.main import main
from milnorcert.app.milnor.criteria import check_theorem1
from milnorcert.app.milnor.families import braid


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_sum_roots(capsys):
    code, report = _run(capsys, "sum-roots", "--m", "12", "0", "3", "4", "8", "9")
    assert code == 0
    assert report["is_zero"] is True
    assert report["value"] == "0"
    assert report["nonvanishing_guaranteed"] is False

    code, report = _run(capsys, "sum-roots", "--m", "6", "--search", "2")
    assert code == 0
    assert report["vanishing_subsets"] == [[0, 3], [1, 4], [2, 5]]


def test_generate_writes_arrangement(capsys, tmp_path):
    path = tmp_path / "hessian.arr"
    code, report = _run(capsys, "generate", "hessian", "--b", "3", "-o", str(path))
    assert code == 0
    assert report["d"] == 12
    assert report["census"] == {"2": 12, "4": 9}
    assert path.read_text().startswith("# milnorcert arrangement")


def test_generate_aliases(capsys):
    code, report = _run(capsys, "generate", "remark26ii")
    assert code == 0
    assert report["family"] == "perturbed_grid"
    assert report["d"] == 40
    assert report["arrangement"].startswith("# milnorcert arrangement")

    code, report = _run(capsys, "generate", "remark26i", "--m", "4", "--a", "2")
    assert code == 0
    assert report["d"] == 20

    assert _run(capsys, "generate", "ghessian")[0] == 2
    assert _run(capsys, "generate", "fano")[0] == 2


def test_analyze(capsys, write_arrangement, generic6):
    path = write_arrangement(generic6)
    code, report = _run(capsys, "analyze", str(path))
    assert code == 0
    assert report["arrangement_hash"] == generic6.content_hash
    assert report["seed"] == 0
    assert {o["status"] for o in report["orders"]} == {"Vanishes"}


def test_analyze_strict(capsys, write_arrangement, braid_lines):
    path = write_arrangement(braid_lines)
    code, report = _run(capsys, "analyze", str(path), "--m", "3")
    assert code == 0
    assert report["orders"][0]["status"] == "Inconclusive"
    assert report["orders"][0]["r"] == 3
    code, _ = _run(capsys, "analyze", str(path), "--m", "3", "--strict")
    assert code == 3


def test_analyze_output_is_reproducible(capsys, write_arrangement, braid_lines, tmp_path):
    path = write_arrangement(braid_lines)
    main(["analyze", str(path), "--jobs", "1", "-o", str(tmp_path / "a.json")])
    main(["analyze", str(path), "--jobs", "3", "-o", str(tmp_path / "b.json")])
    capsys.readouterr()
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_dim_both_methods_agree(capsys, write_arrangement, braid_lines):
    path = write_arrangement(braid_lines)
    code, report = _run(capsys, "dim", str(path), "--m", "3", "--method", "both")
    assert code == 0
    (entry,) = report["orders"]
    assert entry["monodromy"] == entry["fox"] == 1
    assert entry["agree"] is True
    assert report["diagram_method"] == "sweep"


def test_dim_all_orders(capsys, write_arrangement, braid_lines):
    path = write_arrangement(braid_lines)
    code, report = _run(capsys, "dim", str(path), "--method", "all")
    assert code == 0
    assert [o["m"] for o in report["orders"]] == [2, 3, 6]
    assert report["first_betti_number"] == 7
    by_m = {o["m"]: o for o in report["orders"]}
    assert by_m[3]["criteria"] == "Inconclusive"
    assert by_m[3]["monodromy_conjugate"] == 1
    assert by_m[2]["criteria"] == "Vanishes"


def test_dim_tracked(capsys, write_arrangement, braid_lines):
    path = write_arrangement(braid_lines)
    code, report = _run(capsys, "dim", str(path), "--m", "3", "--method", "both", "--diagram", "track", "--seed", "3")
    assert code == 0
    assert report["diagram_method"] == "track"
    assert report["orders"][0]["monodromy"] == 1


def test_dim_line_search(capsys, write_arrangement, braid_lines):
    path = write_arrangement(braid_lines)
    code, report = _run(capsys, "dim", str(path), "--m", "3", "--d-index", "search")
    assert code == 0
    assert report["d_index"] == 5
    assert report["orders"][0]["monodromy"] == 1

    code, report = _run(capsys, "dim", str(path), "--m", "3", "--d-index", "2")
    assert code == 0
    assert report["d_index"] == 2
    assert report["orders"][0]["monodromy"] == 1


def test_dim_rejects_unknown_line_choice(capsys, write_arrangement, braid_lines):
    path = write_arrangement(braid_lines)
    with pytest.raises(SystemExit) as info:
        main(["dim", str(path), "--m", "3", "--d-index", "nearest"])
    assert info.value.code == 2
    assert "search" in capsys.readouterr().err


def test_section(capsys, write_arrangement, tmp_path):
    path = write_arrangement(braid(4))
    out = tmp_path / "section.json"
    code, report = _run(capsys, "section", str(path), "--seed", "2", "-o", str(out))
    assert code == 0
    assert report["seed"] == 2
    assert json.loads(out.read_text()) == report
    assert "ambient_dim = 3" in report["arrangement"]


def test_verify_cert(capsys, write_arrangement, generic6, braid_lines, tmp_path):
    path = write_arrangement(generic6)
    cert_path = tmp_path / "cert.json"
    cert_path.write_text(check_theorem1(generic6, 3).model_dump_json())
    code, report = _run(capsys, "verify-cert", str(path), str(cert_path))
    assert code == 0
    assert report["verified"] is True
    assert report["theorem"] == "T1-connected"

    other = write_arrangement(braid_lines, name="other.arr")
    code, report = _run(capsys, "verify-cert", str(other), str(cert_path))
    assert code == 3
    assert report["verified"] is False

    (tmp_path / "broken.json").write_text("{")
    code, _ = _run(capsys, "verify-cert", str(path), str(tmp_path / "broken.json"))
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "missing.arr"],
        ["sum-roots", "--m", "1", "0"],
        ["dim", "missing.arr", "--m", "3"],
    ],
)
def test_bad_input_exits_2(capsys, tmp_path, argv):
    code, report = _run(capsys, *[str(tmp_path / a) if a.endswith(".arr") else a for a in argv])
    assert code == 2
    assert report is None


def test_malformed_file_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.arr"
    path.write_text("ambient_dim = 3\n1, 0, 0\n0, 1\n")
    code, _ = _run(capsys, "analyze", str(path))
    assert code == 2


def test_higher_rank_dim_exits_2(capsys, write_arrangement):
    path = write_arrangement(braid(4))
    code, _ = _run(capsys, "dim", str(path), "--m", "2")
    assert code == 2
