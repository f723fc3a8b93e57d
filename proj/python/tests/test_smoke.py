import json
import pathlib

import pytest

import graphburn as gb

ROOT = pathlib.Path(__file__).resolve().parents[2]


def test_tight_example_trace():
    g = gb.tight_example()
    dm = gb.apsp(g)
    order = [g.find_label(c) for c in "KAEIGJ"]
    res = gb.bgp(g, dm, g.find_label("N"), gb.TieBreakPolicy.preference_list(order))
    assert gb.format_sequence(res.sequence, g) == "N,K,A,E,I,G,J"
    assert res.valid and len(res) == 7


def test_exact_and_verify():
    g = gb.path(9)
    dm = gb.apsp(g)
    res = gb.burning_number_exact(g)
    assert res.burning_number == 3
    assert gb.verify(res.witness, g, dm)
    assert gb.is_feasible(g, dm, 2) is None
    assert gb.verify([2, 6, 8], g, dm)
    assert not gb.verify([2], g, dm)


def test_distances_and_simulation():
    g = gb.Graph(4, [(0, 1), (1, 2)])
    dm = gb.apsp(g)
    assert dm[0, 2] == 2
    assert dm.at(0, 3) is None
    burned, rounds = gb.simulate([1, 3], g)
    assert burned
    assert rounds == [[1], [0, 1, 2, 3]]
    assert gb.covering_radius([1, 3, 3], 3) == 1
    with pytest.raises(gb.NotInSequence):
        gb.covering_radius([1], 0)


def test_solvers_on_generated_graphs():
    g = gb.grid2d(33, 33)
    assert (g.num_vertices, g.num_edges) == (1089, 2112)
    dm = gb.apsp(g)
    best = gb.bgp_plus(g, dm)
    assert best.valid and len(best) <= 16
    seq = gb.alg1_known_b(g, dm, 3, 0)
    assert len(seq) == 7


def test_parsing_errors():
    assert gb.parse_edge_list("1 2\n2 3").num_vertices == 3
    with pytest.raises(gb.ParseError):
        gb.parse_edge_list("1 x\n")
    with pytest.raises(gb.UnsupportedFormat):
        gb.parse_matrix_market("%%MatrixMarket matrix array real general\n1 1\n1\n")
    with pytest.raises(gb.BudgetExceeded):
        gb.burning_number_exact(gb.path(30))


def test_bench_report_is_deterministic():
    manifest = str(ROOT / "bench" / "table2.manifest")
    a = gb.run_bench(manifest, "json", timing=False)
    b = gb.run_bench(manifest, "json", timing=False)
    assert a == b
    report = json.loads(a)
    names = [row["name"] for row in report["instances"]]
    assert "line49nodes" in names
    assert not report["failed"]
