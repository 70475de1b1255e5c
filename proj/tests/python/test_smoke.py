"""End-to-end checks of the python bindings against pinned values."""

import json
import math

import pytest

import usdkit


def test_filtering_boundary_case():
    inst = usdkit.FilteringInstance(0.15, [0.5, 0.5], [0.6, 0.3])
    usdkit.validate(inst)
    r = usdkit.q_min_filtering(inst)
    assert r["q_min"] == pytest.approx(0.34125, abs=1e-15)
    assert r["label"] == "CaseIII"
    assert r["certificate"]["argmin"] == pytest.approx(1.0, abs=1e-12)
    assert r["certificate"]["gap"] <= 1e-9


def test_validation_raises():
    bad = usdkit.FilteringInstance(0.35, [0.5, 0.6], [0.9, 0.1])
    with pytest.raises(usdkit.ValidationError):
        usdkit.validate(bad)
    assert not usdkit.is_valid(bad)
    kinds = [kind for kind, _ in usdkit.check(bad)]
    assert "WeightSumError" in kinds


def test_pure_pair_and_delta_q():
    inst = usdkit.PurePairInstance(0.15, [0.02, 0.98], [0.5, 0.0])
    d = usdkit.delta_q(inst)
    assert d["label"] == "b"
    assert d["delta_q"] == pytest.approx(0.004002475308189609, abs=1e-12)
    assert d["q_mixed"] == pytest.approx(d["q_pure"] + d["delta_q"], abs=1e-12)


def test_rank_n_split():
    inst = usdkit.RankNPairInstance(0.15, [0.5, 0.5], [0.5, 0.5], [0.2, 0.5])
    r = usdkit.q_min_mixed_mixed(inst)
    assert r["q_min"] == pytest.approx(0.2526642842854285, abs=1e-12)
    assert r["label"] == "m=1"
    kinds = [p["kind"] for p in r["pairs"]]
    assert kinds == ["Identified", "Neglected"]
    assert usdkit.rank_n_regime(inst) == "MixedSmallSStar"


def test_coherence_values():
    assert usdkit.l1_coherence([0.5, 0.5]) == pytest.approx(1.0, abs=1e-12)
    assert usdkit.relative_entropy_coherence([0.5, 0.5]) == 1.0
    with pytest.raises(usdkit.NormalizationError):
        usdkit.l1_coherence([0.5, 0.6])


def test_photon_distributions():
    dist = usdkit.poisson_weights(1.0)
    assert dist.kind == "poisson"
    assert dist.n_max == 14
    assert dist.renormalized
    assert sum(dist.weights) == pytest.approx(1.0, abs=1e-14)
    assert dist.weights[0] * (1.0 - dist.tail_mass) == pytest.approx(
        math.exp(-1.0), abs=1e-15
    )
    binom = usdkit.binomial_weights(10, 1.0)
    assert len(binom.weights) == 11
    assert usdkit.mean_index(binom.weights) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(usdkit.RangeError):
        usdkit.binomial_weights(10, 3.2)


def test_oracle_agreement():
    inst = usdkit.FilteringInstance(0.15, [0.5, 0.5], [0.6, 0.3])
    report = usdkit.verify_instance(inst)
    assert report["pass"]
    assert report["kind"] == "filtering"
    argmin, value = usdkit.minimize_filtering(inst)
    assert value == pytest.approx(0.34125, abs=1e-9)
    assert argmin == pytest.approx(1.0, abs=1e-6)


def test_instance_json_round_trip():
    inst = usdkit.PurePairInstance(0.15, [0.5, 0.5], [0.3, 0.1], [0.0, 0.5])
    text = usdkit.to_json(inst)
    back = usdkit.parse_instance(text)
    assert isinstance(back, usdkit.PurePairInstance)
    assert back.phases == pytest.approx(inst.phases)


def test_sweep_csv_and_verify():
    csv = usdkit.sweep_csv(json.dumps({"target": "RegionMap", "grid": 30}))
    header = csv.splitlines()[0]
    assert header.startswith("# {")
    assert '"grid":30' in header
    assert "s11,s12,label" in csv

    curve = usdkit.sweep_csv(json.dumps({"target": "Example1Binomial",
                                         "dist": "binomial",
                                         "binomial_n": 10}))
    assert "alpha,coherence,delta_q,q_mixed,q_pure,label" in curve

    summary = usdkit.verify_json(json.dumps({"target": "Verify", "count": 50,
                                             "seed": 11}))
    assert summary["pass"]
    assert summary["total"] == 3 * 50 + 3
    assert summary["failures"] == 0
