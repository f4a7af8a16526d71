"""Smoke tests for the pyspinver module built by CMake."""

import pyspinver
import pytest


def test_pipeline_names():
    names = pyspinver.pipelines()
    assert "genus4-spin3-roundtrip" in names
    assert "genus4-odd-invariants" in names
    assert len(names) == 6


def test_invariants_rational():
    report = pyspinver.run("genus4-odd-invariants", prime=0)
    assert report["field"] == "rational"
    assert report["pass"] is True
    names = [c["name"] for c in report["checks"]]
    assert "exchange_eigenspace_dims" in names
    assert all(c["pass"] for c in report["checks"])


def test_roundtrip_prime():
    report = pyspinver.run("genus4-spin3-roundtrip", prime=10007, seed=1)
    assert report["pass"] is True
    assert report["exhausted"] is False
    names = [c["name"] for c in report["checks"]]
    assert "recovered_pencil_matches" in names


def test_deterministic_json():
    a = pyspinver.run_json("genus3-spin4-even", prime=10007, seed=2)
    b = pyspinver.run_json("genus3-spin4-even", prime=10007, seed=2)
    assert a == b


def test_unknown_pipeline_raises():
    with pytest.raises(pyspinver.SpinverError):
        pyspinver.run("not-a-pipeline")
