import json
import subprocess
import sys

from ntcert import cli


def run_cli(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_covering_report(capsys):
    code, doc = run_cli(["covering-report", "7"], capsys)
    assert code == 0
    assert doc["schema"] == "v1"
    assert doc["n_solutions"] == [2, 4]
    assert doc["quotient_genus"] == 1
    assert doc["triangle"]["fixed_points_on_curve"] is True


def test_covering_report_bad_prime(capsys):
    code, _ = run_cli(["covering-report", "5"], capsys)
    assert code == 2


def test_degree_plan(capsys):
    code, doc = run_cli(["degree-plan", "3", "20"], capsys)
    assert code == 0
    assert doc["N"] == 7
    assert doc["achievable"][:3] == [5, 7, 8]
    assert doc["checks"] == {"corner": True, "degree_law": True}


def test_modular_verify(capsys):
    code, doc = run_cli(["modular-verify", "--order", "12"], capsys)
    assert code == 0
    assert doc["printed_coefficients_match"] is True
    assert doc["j_identity_match"] is True
    assert doc["closed_form_match"] is True


def test_modular_verify_failure_exit_code(capsys, monkeypatch):
    def broken(order):
        return {
            "order": order,
            "printed_coefficients_match": True,
            "j_identity_match": False,
            "closed_form_match": True,
            "first_mismatch": {"exponent": 5, "lhs": "1", "rhs": "2"},
        }

    monkeypatch.setattr(cli.qseries, "verify_eta_identity", broken)
    code, doc = run_cli(["modular-verify"], capsys)
    assert code == 3
    assert doc["first_mismatch"]["exponent"] == 5


def test_fermat_search(capsys):
    code, doc = run_cli(["fermat-search", "3", "--bound", "20"], capsys)
    assert code == 0
    assert doc["nontrivial"] == []
    assert doc["solutions_found"] == 121
    assert "solutions" not in doc
    code, doc = run_cli(["fermat-search", "3", "--bound", "2", "--full"], capsys)
    assert code == 0
    assert ["1", 1, 0] not in doc["solutions"]
    assert [1, 1, 0] in doc["solutions"]


def test_family_scan_degenerate_exit(capsys):
    code, _ = run_cli(["family-scan", "--a1", "1", "--a4", "0"], capsys)
    assert code == 2


def test_family_scan_invalid_height(capsys):
    code, _ = run_cli(["family-scan", "--s-height-max", "0"], capsys)
    assert code == 2


def test_family_scan_document(tmp_path, capsys):
    out = tmp_path / "scan.json"
    code = cli.main(
        ["family-scan", "--a1", "1", "--a4", "1", "--s-height-max", "3", "--out", str(out)]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["schema"] == "v1"
    assert doc["summary"]["fibers_tested"] == 15
    assert doc["summary"]["accepted"] == len(doc["certificates"])
    cert = doc["certificates"][0]
    for key in (
        "s",
        "t",
        "fiber",
        "disc",
        "sqrt_disc",
        "galois_class",
        "point",
        "torsion_primes",
        "torsion_bound",
        "nontorsion_checked_to",
        "disjointness",
    ):
        assert key in cert
    assert cert["galois_class"] == "C3"


def test_family_scan_byte_determinism(tmp_path):
    args = ["family-scan", "--s-height-max", "3"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(args + ["--out", str(a)]) == 0
    assert cli.main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_family_scan_jobs_identical_bytes(tmp_path):
    a = tmp_path / "serial.json"
    b = tmp_path / "parallel.json"
    assert cli.main(["family-scan", "--s-height-max", "3", "--out", str(a)]) == 0
    assert (
        cli.main(["family-scan", "--s-height-max", "3", "--jobs", "2", "--out", str(b)])
        == 0
    )
    assert a.read_bytes() == b.read_bytes()


def test_config_file_merge_and_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"a1": "2", "a4": "3", "s_height_max": 2}))
    code, doc = run_cli(["family-scan", "--config", str(cfg)], capsys)
    assert code == 0
    assert doc["config"]["a1"] == "2"
    assert doc["config"]["s_height_max"] == 2
    code, doc = run_cli(
        ["family-scan", "--config", str(cfg), "--a1", "1", "--s-height-max", "3"], capsys
    )
    assert code == 0
    assert doc["config"]["a1"] == "1"  # CLI wins
    assert doc["config"]["a4"] == "3"  # config fills the gap
    assert doc["config"]["s_height_max"] == 3


def test_explicit_torsion_primes(capsys):
    # 5 and 17 are good for the curve and unramified in every height-2 fiber
    code, doc = run_cli(
        ["family-scan", "--s-height-max", "2", "--torsion-primes", "5,17"], capsys
    )
    assert code == 0
    assert doc["config"]["torsion_primes"] == [5, 17]
    assert all(c["torsion_primes"] == [5, 17] for c in doc["certificates"])
    # 7 ramifies in the s=1 fiber, so forcing it must fail cleanly
    code, _ = run_cli(
        ["family-scan", "--s-height-max", "2", "--torsion-primes", "5,7"], capsys
    )
    assert code == 2


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "ntcert.cli", "degree-plan", "3", "10"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["N"] == 7


def test_invalid_rational_flag_exits_2(capsys):
    code, _ = run_cli(["family-scan", "--a1", "abc"], capsys)
    assert code == 2


def test_bad_config_file_exits_2(tmp_path, capsys):
    cfg = tmp_path / "broken.json"
    cfg.write_text("[1, 2, 3]")
    code, _ = run_cli(["family-scan", "--config", str(cfg)], capsys)
    assert code == 2
    code, _ = run_cli(["family-scan", "--config", str(tmp_path / "missing.json")], capsys)
    assert code == 2


def test_certificate_fiber_round_trips(tmp_path):
    from fractions import Fraction

    from ntcert.jsonio import poly_from_list
    from ntcert.exact import parse_rational
    from ntcert.cubicfield import galois_class

    out = tmp_path / "scan.json"
    assert cli.main(["family-scan", "--s-height-max", "2", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    for cert in doc["certificates"]:
        fiber = poly_from_list(cert["fiber"])
        disc = parse_rational(cert["disc"])
        sqrt_disc = parse_rational(cert["sqrt_disc"])
        assert fiber.discriminant() == disc == sqrt_disc**2
        K = galois_class(fiber)
        assert K.galois_class.value == cert["galois_class"]
        # the certified point satisfies the reconstructed fiber: y = t is the
        # curve section, x is the generator, so fiber(theta) = 0 by definition
        assert parse_rational(cert["t"]) == parse_rational(cert["point"]["y"][0])
