import json
import os
import subprocess

import pytest

import qgc


def test_counting():
    assert qgc.arrangements(4, 3) == 64
    assert qgc.multiset_count(4, 3) == 20
    assert qgc.arrangements(64, 64) == 64**64
    words = [c.spell() for c in qgc.enumerate_multisets(3, 2)]
    assert words == ["AA", "AB", "AC", "BB", "BC", "CC"]
    assert qgc.class_size(qgc.canonicalize("GAU")) == 6
    assert qgc.canonicalize("GAU").spell() == "AGU"
    with pytest.raises(qgc.Error):
        qgc.multiset_count(0, 3)
    with pytest.raises(qgc.CapacityExceeded):
        qgc.enumerate_multisets(30, 30)


def test_codes():
    code = qgc.builtin_standard_code()
    assert code.name == "Standard" and code.id == 1
    assert qgc.translate(code, "AUG") == "M"
    assert code.translate("uaa") == "*"
    assert qgc.parse_table(qgc.serialize_table(code)) == code
    assert qgc.normalize_alphabet("atg", "dna-to-rna") == "AUG"
    with pytest.raises(qgc.FormatError):
        qgc.parse_table("name = x\nAAs = FF\n")
    with pytest.raises(qgc.Error):
        qgc.normalize_alphabet("AXG")


def test_symmetry():
    report = qgc.analyze(qgc.builtin_standard_code())
    assert report["symmetry"]["class_count"] == 20
    assert report["symmetry"]["coherent_count"] == 4
    assert report["violation"]["same_class_pairs"] == 96
    invariant = qgc.synthetic_code(3, "invariant")
    assert qgc.multiset_invariance_violation(invariant)["incoherent_pairs"] == 0


def test_grover_and_physics():
    assert abs(qgc.solve_n(3) - 20.19) <= 0.05
    assert abs(qgc.solve_q(4.0) - 1.0) <= 1e-9
    run = qgc.simulate(4, 1, marked=2)
    assert abs(run.amplitudes[2] - 1.0) <= 1e-12
    assert abs(qgc.simulate(20, 3).final_probability - qgc.success_probability(20, 3)) <= 1e-10
    with pytest.raises(qgc.CapacityExceeded):
        qgc.simulate(100, 1, max_n=64)

    params = qgc.PhysicalParams()
    dp = qgc.momentum_uncertainty(params)
    assert abs(dp - 6.2e-20) / 6.2e-20 <= 0.02
    assert abs(qgc.kinetic_energy(dp, params.mass) - 1.2e-15) / 1.2e-15 <= 0.05
    assert qgc.scale_comparison(params, 3.0).energy_ratio == 1.0 / 9.0
    with pytest.raises(qgc.Error):
        qgc.momentum_uncertainty(qgc.PhysicalParams(delta_x=0.0))


CLI_CASES = [
    ["count", "--k", "4", "--r", "3"],
    ["count", "--k", "30", "--r", "30", "--no-enumerate"],
    ["analyze", "--builtin", "standard"],
    ["grover", "solve-n", "--q", "3"],
    ["grover", "solve-q", "--n", "20.2"],
    ["grover", "simulate", "--n", "20", "--q", "3"],
    ["energy", "--scale", "3"],
]


@pytest.mark.skipif("QGC_CLI" not in os.environ, reason="CLI path not provided")
@pytest.mark.parametrize("args", CLI_CASES, ids=lambda a: "-".join(a[:2]))
def test_cli_json_matches_schema(args):
    jsonschema = pytest.importorskip("jsonschema")
    with open(os.environ["QGC_SCHEMA"]) as f:
        schema = json.load(f)
    out = subprocess.run([os.environ["QGC_CLI"], "--format", "json", *args],
                         check=True, capture_output=True, text=True).stdout
    jsonschema.validate(json.loads(out), schema)
