import json
import os
import subprocess

import pytest

import koszul_homology as kh


SQUARES = "ring 2\nmon x1^2\nmon x1*x2\nmon x2^2\n"


def test_parse_and_generators():
    ideal = kh.MonomialIdeal.parse(SQUARES)
    assert ideal.num_vars == 2
    assert ideal.generators == [(2, 0), (1, 1), (0, 2)]
    assert len(ideal) == 3
    assert ideal.contains([3, 1])
    assert not ideal.contains([1, 0])


def test_constructor_minimalizes():
    ideal = kh.MonomialIdeal(2, [[2, 0], [2, 1], [0, 1]])
    assert ideal.generators == [(2, 0), (0, 1)]


def test_betti_table_squares():
    table = kh.betti_table(kh.MonomialIdeal.parse(SQUARES))
    assert table.entries() == {
        (0, (2, 0)): 1,
        (0, (1, 1)): 1,
        (0, (0, 2)): 1,
        (1, (2, 1)): 1,
        (1, (1, 2)): 1,
    }
    assert table.totals() == [3, 2]
    assert table.alternating_sum() == 1


@pytest.mark.parametrize("n", [3, 4, 5])
def test_maximal_ideal_totals(n):
    from math import comb

    table = kh.betti_table(kh.MonomialIdeal.maximal(n), strategy="mv")
    assert table.totals() == [comb(n, i + 1) for i in range(n)]


def test_strategies_agree_with_oracle():
    ideal = kh.MonomialIdeal.random(n=4, g=6, min_deg=3, max_deg=7, seed=11)
    expected = kh.betti_table(ideal, strategy="simplicial").entries()
    assert kh.betti_table(ideal, strategy="mv", threads=2).entries() == expected
    for a in kh.lcm_lattice(ideal):
        for i in range(ideal.num_vars):
            value = kh.koszul_homology_dim(ideal, a, i)
            assert value == expected.get((i, a), 0)
            assert kh.taylor_betti(ideal, i, a) == value


def test_json_rendering():
    doc = json.loads(kh.betti_table(kh.MonomialIdeal.maximal(3)).to_json(stats=True))
    assert doc["totals"] == [3, 3, 1]
    assert doc["stats"]["minimal_total"] == 7


def test_families():
    ideal = kh.MonomialIdeal.parse(SQUARES)
    assert kh.is_generic(ideal)
    assert kh.scarf_betti(ideal).entries() == kh.betti_table(ideal).entries()
    q = kh.is_quasi_stable(ideal)
    assert q["quasi_stable"] and q["basis"] == [(2, 0), (1, 1), (0, 2)]
    assert not kh.is_quasi_stable(kh.MonomialIdeal(2, [[1, 0]]))["quasi_stable"]


def test_errors():
    with pytest.raises(kh.ParseError):
        kh.MonomialIdeal.parse("ring 2\ngen 1 0 0\n")
    with pytest.raises(kh.PreconditionError):
        kh.scarf_betti(kh.MonomialIdeal(3, [[1, 1, 0], [0, 1, 1]]))
    with pytest.raises(kh.InfeasibleError):
        kh.MonomialIdeal.random(n=2, g=3, min_deg=1, max_deg=1, seed=0)
    with pytest.raises(kh.DimensionError):
        kh.koszul_homology_dim(kh.MonomialIdeal.maximal(2), [1, 1, 1], 0)
    assert issubclass(kh.ParseError, kh.KoszulError)


@pytest.mark.skipif("KOSZUL_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes(tmp_path):
    cli = os.environ["KOSZUL_CLI"]
    good = tmp_path / "good.txt"
    good.write_text(SQUARES)
    bad = tmp_path / "bad.txt"
    bad.write_text("ring 2\ngen 1 0 0\n")
    out = subprocess.run([cli, "betti", str(good), "--json"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["totals"] == [3, 2]
    assert subprocess.run([cli, "betti", str(bad)], capture_output=True).returncode == 2
    nongeneric = tmp_path / "ng.txt"
    nongeneric.write_text("ring 3\nmon x1*x2\nmon x2*x3\n")
    assert subprocess.run([cli, "betti", str(nongeneric), "--strategy", "scarf"], capture_output=True).returncode == 3
    classify = subprocess.run([cli, "classify", str(nongeneric)], capture_output=True, text=True)
    assert "generic false" in classify.stdout
