"""Binding smoke tests; the heavy property checks live in the C++ suite."""

import json

import pytest

import hsc


def example_pair():
    return hsc.hypergraph(3, 4, [([1], [0, 0, 0]), ([2], [0, 1, 1])])


def test_roundtrip_and_ids():
    h = example_pair()
    assert h.n == 3
    assert h.k == 4
    doc = json.loads(h.to_json())
    assert doc["n"] == 3
    assert doc["edges"][0]["head"] == [2]  # 1-based on the wire
    assert hsc.from_json(h.to_json()) == h


def test_reach_and_verify():
    h = example_pair()
    r = hsc.walk_reach(h, [0])
    assert r["accessible"] == [0, 1, 2]
    assert hsc.inaccessible_set(h, [1]) == [0, 2]
    assert hsc.target_accessible(h, [0], [2])

    v = hsc.verify(h, [0])
    assert v["controllable"]
    assert not hsc.verify(h, [1])["controllable"]


def test_matching_and_dilation():
    h = example_pair()
    count, uncovered = hsc.matching_lower_bound(h)
    assert count == 1
    assert uncovered == [0]
    assert not hsc.has_dilation(h, [0])
    assert hsc.find_dilation_exact(h, []) == {"nodes": [0], "distinct_heads": 0}


def test_selection_methods():
    h = example_pair()
    for method in ("matching", "greedy", "mag", "optimal"):
        s = hsc.select(h, method)
        assert s["method"] == method
        assert s["lower_bound"] == 1
        assert s["controllable"]
        assert s["drivers"] == [0]


def test_generate_and_controls():
    h = hsc.generate(n=20, k=4, alpha=1.0, seed=3)
    assert h.n == 20
    assert h.num_state_edges == 20
    again = hsc.generate(n=20, k=4, alpha=1.0, seed=3)
    assert again == h

    d = hsc.with_drivers(h, [0, 5])
    assert d.num_controls == 2
    assert hsc.strip_controls(d) == h


def test_oracle_agreement():
    cv = hsc.cross_validate(example_pair(), [0], trials=5, seed=2)
    assert cv["structural_verdict"]
    assert cv["fraction_full_rank"] == 1.0


def test_errors():
    with pytest.raises(ValueError):
        hsc.hypergraph(2, 4, [([5], [0, 0, 0])])
    big = hsc.generate(n=25, k=4, alpha=1.0, seed=1)
    with pytest.raises(RuntimeError):
        hsc.select(big, "optimal")
