import hashlib
import json
from pathlib import Path

import pytest

from src.cli.export import resolve_report_path, write_report
from src.cli.main import main
from src.utils.fingerprint import canonical_json

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_basis_degree_3(capsys):
    code, out = run(capsys, "basis", "--q", "2", "--n", "2", "--m", "2", "--degree", "3")
    assert code == 0
    assert out.strip() == "x1^2*x2 + x1*x2^2"


def test_basis_degree_1_empty(capsys):
    code, out = run(capsys, "basis", "--q", "2", "--n", "2", "--m", "2", "--degree", "1")
    assert code == 0
    assert out.strip() == ""


def test_basis_top_q3(capsys):
    code, out = run(capsys, "basis", "--q", "3", "--n", "2", "--m", "2", "--degree", "16")
    assert code == 0
    assert out.strip() == "x1^8*x2^8"


@pytest.mark.parametrize("q", ["2", "3"])
def test_hilbert_match(capsys, q):
    code, out = run(capsys, "hilbert", "--q", q, "--n", "2", "--m", "2")
    assert code == 0
    assert "confere" in out


def test_hilbert_json_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["hilbert", "--p", "2", "--n", "2", "--m", "2", "--format", "json", "--out", str(a)]) == 0
    assert main(["hilbert", "--q", "2", "--n", "2", "--m", "2", "--format", "json", "--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    report = json.loads(a.read_text(encoding="utf-8"))
    assert report["schema"] == 1
    assert report["match"] is True
    assert report["series"] == [1, 0, 1, 1, 1, 0, 1]
    assert a.read_text(encoding="utf-8").endswith("}\n")


def test_hilbert_csv(tmp_path, capsys):
    out = tmp_path / "series.csv"
    assert main(["hilbert", "--q", "2", "--n", "2", "--m", "2", "--out", str(out)]) == 0
    capsys.readouterr()
    assert out.read_text(encoding="utf-8").splitlines()[0] == "degree,computed,conjectured,diff"


def test_hilbert_parabolic_numerator_variant(capsys):
    code, out = run(capsys, "hilbert", "--q", "2", "--alpha", "1,1", "--m", "2", "--numerator-index", "1")
    assert code == 1
    assert "inexact division" in out


def test_invalid_field_is_usage_error(capsys):
    code, _ = run(capsys, "hilbert", "--q", "6", "--n", "2", "--m", "2")
    assert code == 2


def test_alpha_dimension_mismatch(capsys):
    code, _ = run(capsys, "hilbert", "--q", "2", "--n", "3", "--alpha", "1,1", "--m", "2")
    assert code == 2


def test_missing_subcommand():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_steenrod_apply(capsys):
    code, out = run(
        capsys, "steenrod", "--q", "3", "--m", "2", "--family", "ykprime", "--kprime", "0", "--op", "1"
    )
    assert code == 0
    assert "= 1·y_1" in out


def test_steenrod_generation(capsys):
    code, _ = run(capsys, "steenrod", "--q", "3", "--m", "2", "--mode", "generation", "--format", "json")
    assert code == 0


def test_steenrod_sum_check(capsys):
    code, out = run(
        capsys, "steenrod", "--q", "3", "--m", "2", "--mode", "sum-check", "--t", "1", "--r-list", "0,1",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_series_fpoly(capsys):
    code, out = run(capsys, "series", "--q", "2", "--fpoly")
    assert code == 0
    assert "suporte: [0, 2, 3, 4, 5, 6, 8]" in out
    assert "palíndromo: True" in out


def test_series_conjectured(capsys):
    code, out = run(capsys, "series", "--q", "2", "--n", "2", "--m", "2")
    assert code == 0
    assert out.strip() == "1 + t^2 + t^3 + t^4 + t^6"


def test_series_power_scalar(capsys):
    code, out = run(capsys, "series", "--q", "3", "--power-scalar", "--format", "json")
    assert code == 0
    assert json.loads(out)["coefficient"] == 35


def test_lucas(capsys):
    code, out = run(capsys, "lucas", "--p", "2", "--N", "12", "--M", "4")
    assert code == 0
    assert out.strip() == "1"


def test_lucas_rejects_prime_power(capsys):
    code, _ = run(capsys, "lucas", "--p", "4", "--N", "3", "--M", "1")
    assert code == 2


def test_families_verify(capsys):
    code, _ = run(capsys, "families", "--q", "2", "--family", "ykprime", "--m", "3", "--k", "1", "--verify")
    assert code == 0


def test_families_print(capsys):
    code, out = run(capsys, "families", "--q", "2", "--family", "ynk", "--n", "2", "--k", "1")
    assert code == 0
    assert out.strip() == "x1^2*x2 + x1*x2^2"


def test_families_products(capsys):
    code, _ = run(capsys, "families", "--q", "3", "--products", "--format", "json")
    assert code == 0


def test_families_unknown_tag(capsys):
    code, _ = run(capsys, "families", "--q", "2", "--family", "nope")
    assert code == 2


@pytest.mark.parametrize(
    "argv,golden",
    [
        (["hilbert", "--q", "2", "--n", "2", "--m", "2"], "hilbert_q2_n2_m2.json"),
        (["series", "--q", "2", "--alpha", "1,1", "--m", "2"], "series_q2_alpha11_m2.json"),
    ],
)
def test_report_matches_golden_file(tmp_path, capsys, argv, golden):
    out = tmp_path / "report.json"
    assert main(argv + ["--format", "json", "--out", str(out)]) == 0
    capsys.readouterr()
    report = json.loads(out.read_text(encoding="utf-8"))
    fingerprint = report.pop("fingerprint")
    expected = (DATA / golden).read_text(encoding="utf-8").strip().encode("utf-8")
    assert canonical_json(report).encode("utf-8") == expected
    assert fingerprint == hashlib.sha256(expected).hexdigest()


def test_bare_out_name_goes_to_report_dir(tmp_path):
    assert resolve_report_path("q2.json", tmp_path) == tmp_path / "q2.json"
    nested = tmp_path / "sub" / "q2.json"
    assert resolve_report_path(nested, tmp_path / "other") == nested
    path = write_report({"schema": 1}, None, "q2.json", report_dir=tmp_path)
    assert path == tmp_path / "q2.json"
    assert json.loads(path.read_text(encoding="utf-8")) == {"schema": 1}


def test_cli_out_uses_report_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr("src.cli.export.REPORT_DIR", tmp_path)
    assert main(["series", "--q", "2", "--n", "2", "--m", "2", "--out", "conj.json"]) == 0
    capsys.readouterr()
    assert json.loads((tmp_path / "conj.json").read_text(encoding="utf-8"))["series"] == [1, 0, 1, 1, 1, 0, 1]
