import json
import math
from pathlib import Path

import numpy as np
import pytest

import gnnbench as gb

DATA = Path(__file__).resolve().parents[2] / "data"


def complete(n):
    return gb.Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_graph_roundtrip():
    k3 = gb.Graph.from_graph6("Bw")
    assert k3.n == 3 and k3.edge_count() == 3
    assert k3.to_graph6() == "Bw"
    assert k3 == complete(3)
    a = k3.adjacency()
    assert a.shape == (3, 3) and a.sum() == 6
    assert gb.Graph.from_adjacency(a) == k3
    with pytest.raises(ValueError):
        gb.Graph.from_graph6("B")


def test_matlang():
    k3 = complete(3)
    assert gb.eval_sentence("ones' * A * ones", k3) == 6.0
    assert gb.minimal_fragment("tr(A^3)") == ("L2", False)
    np.testing.assert_array_equal(gb.eval_expr("A * ones", k3), np.full((3, 1), 2.0))
    with pytest.raises(ValueError):
        gb.eval_sentence("A +", k3)


def test_wl_and_statistic():
    c6 = gb.Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    tt = gb.Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert gb.wl_equivalent(c6, tt, "1wl")
    assert not gb.wl_equivalent(c6, tt, "2fwl")
    assert gb.wl_signature(c6) == gb.wl_signature(tt)
    assert gb.fwl3_tensor_statistic(complete(3)) == gb.fwl3_tensor_statistic(complete(3))


def test_spectral():
    lam, u = gb.eig_sym(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert lam == pytest.approx([-1.0, 1.0])
    np.testing.assert_allclose(u.T @ u, np.eye(2), atol=1e-12)
    supports = gb.dense_supports(complete(4))
    assert len(supports) == 5
    np.testing.assert_allclose(supports[0], np.eye(4), atol=1e-12)
    assert gb.lambda_max(gb.Graph(2, [(0, 1)])) == pytest.approx(2.0)


def test_graphlets():
    k4 = complete(4)
    assert [gb.count_pattern(k4, p) for p in ("3star", "tri", "tailedtri", "4cycle")] == [4, 4, 12, 3]
    assert gb.enumerate_pattern(k4, "4cycle") == 3
    assert gb.custom_sentence(complete(3)) == pytest.approx(12 * math.exp(-4))


def test_models():
    names = gb.model_names()
    assert len(names) == 8 and "gnnml3" in names
    for name in names:
        assert 28500 <= gb.parameter_count(name) <= 31500
        e = gb.embed(name, complete(4), 3)
        assert len(e) == 10
        assert e == gb.embed(name, complete(4), 3)


def test_golden_suite():
    checks = gb.golden_suite()
    assert len(checks) == 40
    assert all(c["pass"] for c in checks)


def test_sr25_distinguishability():
    graphs = gb.load_dataset(str(DATA / "sr25.g6"))
    assert len(graphs) == 15
    assert gb.wl_census(graphs) == (105, 105)
    report = gb.distinguish_report(graphs, "runs = 2\nmodels = gin,gnnml3", dataset="sr25")
    assert report["pair_count"] == 105
    assert [m["undistinguished"] for m in report["methods"]] == [105, 105]
    json.dumps(report)
