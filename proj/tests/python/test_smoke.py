"""Smoke tests for the Python bindings and the CLI binary."""

import os
import subprocess

import pytest

import tworay


def test_blowup_invariants():
    inv = tworay.blowup_invariants(12, tworay.Center.point())
    assert inv.as_tuple() == (14, 4, -2, 1)
    line = tworay.blowup_invariants(8, tworay.Center.curve(1, 0))
    assert line.as_tuple() == (10, 3, -2, 1)
    with pytest.raises(ValueError):
        tworay.Center.curve(0, 0)


def test_lattice_ops():
    inv = tworay.YInvariants(2, 4, -2, 1)
    assert tworay.triple_product(inv, (1, 0), (1, 0), (1, 0)) == 2
    assert tworay.d_intersections(tworay.blowup_invariants(13, tworay.Center.point()), 1, 1)[0] == -3
    assert tworay.omega_d_squared(tworay.blowup_invariants(6, tworay.Center.point()), 2, 1) == -25
    assert tworay.rr_h0(4, 2) == 20
    assert tworay.allowed_hw3(4, 11) == [1]
    pt9 = tworay.blowup_invariants(9, tworay.Center.point())
    assert tworay.e1_derived(pt9, 1, 1) == (14, 2, -2, 0)
    assert tworay.section_lower_bound(pt9, tworay.Center.point()) == 1


def test_tables():
    rows = tworay.flop_table("point")
    assert len(rows) == 15
    assert rows == tworay.golden_table("point")
    assert max(r["g"] for r in rows) == 13
    line4 = tworay.flop_table("line", g_min=4, g_max=4)
    assert len(line4) == 4
    assert all(r["type"] == "E1" for r in line4)


def test_divcont_and_defect():
    assert tworay.divcont_solutions("line") == [(4, 3, 2), (6, 1, 2)]
    omega, kind = tworay.divcont_parity_witness("conic", 6, 1, 1)
    assert omega == -2
    assert kind == "NotDiv4"


def test_nonfano():
    verdict = tworay.nonfano_search()
    assert verdict["all_excluded"]
    [e1] = verdict["e1"]
    assert (e1["g"], e1["d"], e1["h"], e1["beta"], e1["gamma"], e1["v"]) == (8, 4, 1, 2, 2, 4)
    assert e1["rule"] == "R2"
    raw = tworay.nonfano_search(curated=False, geometric=False)
    assert not raw["all_excluded"]
    assert len(raw["type_d"]) == 3


def test_gbound_and_identity():
    assert tworay.gbound_scan(40) == 12
    assert tworay.gbound_scan(60, "point") == 13
    assert tworay.identity_sweep()


def test_verify():
    ok, checks = tworay.verify()
    assert ok, [c["check"] for c in checks if not c["pass"]]


@pytest.mark.skipif("TWORAY_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_byte_identical():
    cli = os.environ["TWORAY_CLI"]
    a = subprocess.run([cli, "verify", "--format", "json"], capture_output=True)
    b = subprocess.run([cli, "verify", "--format", "json"], capture_output=True)
    assert a.returncode == 0
    assert a.stdout == b.stdout

    usage = subprocess.run([cli, "tables", "sphere"], capture_output=True)
    assert usage.returncode == 2
    empty = subprocess.run([cli, "tables", "conic", "--g-min", "13", "--g-max", "40"],
                           capture_output=True)
    assert empty.returncode == 0
