import pytest

import tropseg

T1 = "(((1:0.2,2:0.2):0.2,3:0.4):0.6,4:1.0);"
T2 = "(((2:0.2,3:0.2):0.2,1:0.4):0.6,4:1.0);"


def test_parse_and_write():
    t = tropseg.parse_newick(T1)
    assert t.leaf_labels == ["1", "2", "3", "4"]
    assert t.height == pytest.approx(1.0)
    assert tropseg.write_newick(tropseg.parse_newick(t.newick())) == t.newick()


def test_parse_error_is_raised():
    with pytest.raises(tropseg.ParseError, match="byte"):
        tropseg.parse_newick("((1:1,2:1):1,3:2")
    assert issubclass(tropseg.ParseError, tropseg.Error)


def test_ultrametric_round_trip():
    u = tropseg.ultrametric_of(tropseg.parse_newick(T1))
    assert u.entries == pytest.approx([0.4, 0.8, 2, 0.8, 2, 2])
    back = tropseg.tree_of(u)
    assert tropseg.topology_of(back) == tropseg.topology_of(tropseg.parse_newick(T1))
    with pytest.raises(tropseg.NotUltrametricError):
        tropseg.tree_of(tropseg.Ultrametric(["1", "2", "3"], [0.0, 3.0, 1.0]))


def test_tropical_segment():
    seg = tropseg.tropical_segment([0, 0, 0], [0, 3, 1])
    assert seg.bends() == [[0, 3, 1], [0, 2, 0], [0, 0, 0]]
    assert seg.length == 3
    assert tropseg.trop_dist([0, 0, 0], [0, 3, 1]) == 3
    assert tropseg.in_tropical_hull([[0, 0, 0], [0, 3, 1]], [0, 2, 0])


def test_tree_segment():
    seg = tropseg.tree_segment(tropseg.parse_newick(T1), tropseg.parse_newick(T2))
    assert [pytest.approx(b) for b in seg.bend_points] == [
        [0.8, 0.8, 2, 0.4, 2, 2],
        [0.8, 0.8, 2, 0.8, 2, 2],
        [0.4, 0.8, 2, 0.8, 2, 2],
    ]
    seq = tropseg.topology_sequence(seg)
    assert [t.shape() for t in seq] == ["((1,(2,3)),4)", "((1,2,3),4)", "(((1,2),3),4)"]
    assert seg.csv().splitlines()[0].startswith("index,lambda,u_1_2")


def test_theorem_checks():
    a, b = tropseg.parse_newick(T1), tropseg.parse_newick(T2)
    assert tropseg.check_nni_theorem(a, b)
    assert not tropseg.star_on_segment(a, b)
    assert tropseg.check_clade_preservation(a, a, ["1", "2"])
    assert len(tropseg.segment_to_star(a)) == 3
    assert len(tropseg.nni_neighbors(a)) == 4


def test_simulation():
    r = tropseg.estimate_star_probability(5, 500, seed=2)
    assert r["hits"] == 0
    r3 = tropseg.estimate_star_probability(3, 2000)
    assert r3["rate"] == pytest.approx(2 / 3, abs=0.05)
    c = tropseg.check_nni_conjecture(6, 100, pairs="one-nni")
    assert c["multi_nni"] == 0
    t = tropseg.random_equidistant_tree(7, 2.0, seed=4)
    assert tropseg.is_equidistant(t) and t.height == pytest.approx(2.0)
