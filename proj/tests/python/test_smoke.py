import os
import subprocess

import pytest

import symcap


def test_weights():
    assert symcap.continued_fraction("22/9") == "[2;2,4]"
    assert symcap.integral_weights(22, 9) == [9, 9, 4, 4, 1, 1, 1, 1]
    assert symcap.weight_expansion("5/2") == ["1", "1", "1/2", "1/2"]


def test_capacities_match_ellipsoid():
    assert symcap.capacities("2:1,1", 30) == symcap.ellipsoid_capacities("1", "2", 30)
    assert symcap.capacities("1", 6) == ["0", "1", "1", "2", "2", "2", "3"]


def test_stats_and_cut():
    s = symcap.stats("2:1,1")
    assert s["a0"] == "3 + 2*sqrt(2)"
    assert symcap.stats("1")["a0"] == "7/2 + 3/2*sqrt(5)"
    assert symcap.cut("0 0\n2 0\n0 2\n") == "2:"


def test_cremona_and_classes():
    chain = symcap.cremona_chain("5:2,2,2,2,2")
    assert chain[-1] == "3:1,1,1,1"
    assert symcap.is_exceptional("3; 2,1,1,1,1,1,1")
    assert not symcap.is_exceptional("5; 3,3,1,1,1,1,1,1,1,1")
    assert symcap.mu("1; | 1,1", "1", "2") == "2"


def test_staircase():
    d = symcap.staircase(3, 6)
    assert d["t"] == 11
    assert all(s["perfect"] and s["obstructive"] for s in d["steps"])
    centers = [s["center"] for s in d["steps"]]
    assert centers[0] == "3"


def test_domain_errors():
    with pytest.raises(symcap.DomainError):
        symcap.capacities("1:2", 5)
    with pytest.raises(ValueError):
        symcap.weight_expansion("1/2")


def test_run_cli():
    code, out, err = symcap.run_cli(["weights", "22/9"])
    assert code == 0
    assert "W(22,9) = 9,9,4,4,1,1,1,1" in out
    assert symcap.run_cli(["weights", "--nope"])[0] == 2


@pytest.mark.skipif("SYMCAP_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary_matches_module():
    args = ["capacities", "--tuple", "3:1,1", "--K", "20"]
    out = subprocess.run([os.environ["SYMCAP_CLI"], *args], capture_output=True, text=True, check=True).stdout
    assert out == symcap.run_cli(args)[1]
