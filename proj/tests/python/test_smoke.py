import json
import os
import pathlib
import subprocess
from fractions import Fraction

import jsonschema
import pytest

import orbimod

ROOT = pathlib.Path(os.environ.get("ORBIMOD_ROOT", pathlib.Path(__file__).resolve().parents[2]))
FIXTURES = ROOT / "tests" / "fixtures"
SCHEMA = json.loads((ROOT / "docs" / "schema.json").read_text())


def validator(section, command):
    return jsonschema.Draft202012Validator({"$defs": SCHEMA["$defs"], **SCHEMA[section][command]})


def bundle(genus, alphas, pair, l):
    return orbimod.RankTwoVBundle(orbimod.OrbifoldSurface(genus, alphas), [pair] * len(alphas), l)


def test_surface_values_are_fractions():
    m = orbimod.OrbifoldSurface(0, [2, 3, 7])
    assert m.euler_characteristic == Fraction(-1, 42)
    assert m.hyperbolic
    k = orbimod.canonical_bundle(m)
    assert k.y == [1, 2, 6]
    assert k.c1 == Fraction(1, 42)
    assert orbimod.fuchsian_presentation(m) == "<q1, q2, q3 | q1^2, q2^3, q3^7, q1 q2 q3>"


def test_domain_errors_raise_value_error():
    with pytest.raises(ValueError):
        orbimod.OrbifoldSurface(0, [1])
    with pytest.raises(orbimod.DomainError):
        orbimod.enumerate_strata(bundle(0, [2] * 6, (0, 1), 0))


def test_line_bundles():
    m = orbimod.OrbifoldSurface(2, [2])
    k2 = orbimod.power(orbimod.canonical_bundle(m), 2)
    assert orbimod.chi_line(k2) == 4
    assert orbimod.h0_forced(k2) == ("known", 4)
    line = orbimod.LineVBundle(m, 3, [1])
    assert orbimod.chi_line(line) + orbimod.chi_line(orbimod.serre_partner(line)) == 0
    assert orbimod.tensor(line, orbimod.dual(line)).is_trivial()


def test_strata_and_poincare():
    e = bundle(0, [5, 5, 5, 5], (0, 1), 1)
    strata = orbimod.enumerate_strata(e)
    assert len(strata) == 5
    assert sorted(s["index"] for s in strata) == [0, 2, 2, 2, 2]
    assert orbimod.poincare_coefficients(e) == [1, 0, 5]
    assert orbimod.euler_characteristic_moduli(e) == 6

    torus = bundle(1, [2], (0, 1), 0)
    assert orbimod.poincare_coefficients(torus) is None
    assert orbimod.poincare_text(torus) == "P(N0) + 4t^2"
    assert orbimod.euler_characteristic_moduli(torus, 2) == 6
    assert orbimod.enumerate_strata(torus)[0]["value_over_2pi"] == Fraction(1, 2)


def test_reducibility_and_spectral():
    assert orbimod.reducible_exists(bundle(0, [2] * 6, (0, 1), 0)) == {"m": 1, "eps": [1, -1, -1, -1, -1, -1]}
    assert orbimod.reducible_exists(bundle(1, [2], (0, 1), 0)) is None
    d = orbimod.spectral_data(bundle(2, [2], (0, 1), 0))
    assert (d["branch_points"], d["spectral_genus"], d["fibre"], d["fibre_dim"]) == (6, 6, "prym", 4)
    assert orbimod.spectral_data(bundle(1, [2], (0, 1), 0))["fibre"] == "jacobian"


def test_reps():
    m = orbimod.OrbifoldSurface(2, [2])
    assert orbimod.milnor_wood(m, Fraction(5, 2))
    assert not orbimod.milnor_wood(m, Fraction(3))
    assert orbimod.teichmuller_dimension(m) == 4
    lam = orbimod.LineVBundle(orbimod.OrbifoldSurface(0, [3]), 0, [0])
    assert orbimod.compatible_rotation_numbers(lam) == [[0], [2]]


@pytest.mark.parametrize(
    "command,fixture",
    [
        ("strata", "torus_one_point"),
        ("strata", "sphere_four_fives"),
        ("strata", "genus_two_mixed"),
        ("poincare", "poincare_torus"),
        ("surface", "surface_genus_two"),
        ("bundle", "bundle_six_halves"),
        ("spectral", "genus_two_mixed"),
        ("reps", "reps_surface"),
        ("reps", "sphere_four_fives"),
    ],
)
def test_reports_round_trip_through_schema(command, fixture):
    document = (FIXTURES / f"{fixture}.json").read_text()
    validator("inputs", command).validate(json.loads(document))
    code, out, err = orbimod.run(command, document)
    assert code == 0, err
    assert err == ""
    validator("outputs", command).validate(json.loads(out))
    assert orbimod.run(command, document)[1] == out


def test_schema_error_path():
    code, out, err = orbimod.run("bundle", (FIXTURES / "invalid_alpha.json").read_text())
    assert code == 2
    assert out == ""
    payload = json.loads(err)
    validator("$defs", "error").validate(payload)
    assert payload["error"]["path"] == "cone_points[0].alpha"


def test_report_helper():
    doc = orbimod.report("poincare", json.loads((FIXTURES / "sphere_four_fives.json").read_text()))
    assert doc["poincare"]["coeffs"] == [1, 0, 5]
    with pytest.raises(ValueError):
        orbimod.report("surface", {"genus": 0, "alphas": []})


def test_check_command_passes():
    code, out, _ = orbimod.run("check")
    report = json.loads(out)
    validator("outputs", "check").validate(report)
    assert code == 0
    assert report["failed"] == 0
    assert report["passed"] == len(report["suites"])


@pytest.mark.skipif("ORBIMOD_EXE" not in os.environ, reason="executable path not provided")
def test_executable_reads_stdin_and_files():
    exe = os.environ["ORBIMOD_EXE"]
    path = FIXTURES / "sphere_four_fives.json"
    from_file = subprocess.run([exe, "strata", "--input", str(path)], capture_output=True, text=True, check=True)
    from_stdin = subprocess.run([exe, "strata"], input=path.read_text(), capture_output=True, text=True, check=True)
    assert from_file.stdout == from_stdin.stdout
    bad = subprocess.run([exe, "strata", "--format", "yaml"], input="{}", capture_output=True, text=True)
    assert bad.returncode == 2
    missing = subprocess.run([exe, "strata", "--input", str(path) + ".missing"], capture_output=True, text=True)
    assert missing.returncode == 2
