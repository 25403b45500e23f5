import os
import subprocess

import pytest

import mixlink


def test_parse_and_evaluate():
    assert mixlink.parse("z1^2 + z2^2") == "z1^2 + z2^2"
    assert mixlink.evaluate("z1*~z1", [2 + 1j]) == pytest.approx(5.0)
    with pytest.raises(ValueError):
        mixlink.parse("z1^")


def test_weights_of_pullback():
    g = mixlink.pullback("z1^2 + z2^2", [2, 2], [1, 1])
    w = mixlink.weights(g)
    assert w["radial"]["weights"] == [1, 1]
    assert w["radial"]["degree"] == 6
    assert w["polar"]["degree"] == 2
    assert mixlink.covering_degree([2, 2], [1, 1]) == 1


def test_c_certificate_sign():
    g = mixlink.pullback("z1^2 + z2^2", [2, 2], [1, 1])
    assert mixlink.c_certificate(g, [0.6 + 0.1j, 0.3 - 0.5j])["total"] > 0
    anti = mixlink.pullback("z1^2 + z2^2", [1, 1], [2, 2])
    assert mixlink.c_certificate(anti, [0.6 + 0.1j, 0.3 - 0.5j])["total"] < 0


def test_analyze_and_identity():
    rep = mixlink.analyze("z1^3 + z2^2")
    assert rep["convenient"]
    res = mixlink.identity_check("z1^2 + z2^2", "cab", trials=50, a=2, b=1)
    assert res["verdict"] == "pass"


def test_certify_contact():
    out = mixlink.certify("z1^2 + z2^2", check="contact", radius=[1.0], samples=40, a=2, b=1)
    assert [r["verdict"] for r in out["reports"]] == ["certified-on-samples"]
    assert out["exit_code"] == 0


def test_cli_binary():
    cli = os.environ.get("MIXLINK_CLI")
    if not cli:
        pytest.skip("command-line binary not configured")
    proc = subprocess.run([cli, "analyze", "-e", "z1^2+z2^2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "radial weight: (1,1) m_r=2" in proc.stdout
