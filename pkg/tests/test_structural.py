import pytest

from connforce.errors import NotSingleCliqueError, PreconditionError
from connforce.exact import connected_forcing_number, count_minimum_connected_forcing_sets
from connforce.forcing import is_connected_forcing_set
from connforce.generators import (
    all_connected_graphs,
    complete,
    cycle,
    flower_snark,
    path,
    random_single_clique_graph,
    random_tree,
    star,
)
from connforce.graph import new_graph
from connforce.structural import (
    Extremal,
    classify_extremal,
    detect_single_clique,
    flower_snark_upper_set,
    single_clique_connected_forcing,
    tree_connected_forcing,
    tree_count_minimum_sets,
)
from connforce.structure import is_path_graph

from conftest import double_star, net, spider, triangle_with_pendant


class TestTrees:
    def test_path(self):
        value, w = tree_connected_forcing(path(7))
        assert value == 1 and w.members() == (0,)

    def test_single_vertex(self):
        value, w = tree_connected_forcing(new_graph(1, []))
        assert value == 1 and w.members() == (0,)

    def test_star(self):
        value, w = tree_connected_forcing(star(4))
        assert value == 3 and w.members() == (0, 1, 2)

    def test_double_star(self):
        value, w = tree_connected_forcing(double_star())
        assert value == 4 and is_connected_forcing_set(double_star(), w)
        assert tree_count_minimum_sets(double_star()) == 4

    def test_spider(self):
        g = spider(3, 2)
        assert tree_count_minimum_sets(g) == 3 == count_minimum_connected_forcing_sets(g)

    def test_not_a_tree(self):
        with pytest.raises(PreconditionError):
            tree_connected_forcing(cycle(4))

    def test_count_rejects_paths(self):
        with pytest.raises(PreconditionError):
            tree_count_minimum_sets(path(4))

    @pytest.mark.parametrize("seed", range(60))
    def test_random_against_brute_force(self, seed):
        t = random_tree(4 + seed % 8, seed)
        value, w = tree_connected_forcing(t)
        oracle = connected_forcing_number(t, collect_all=True)
        assert value == oracle.value == len(w)
        assert is_connected_forcing_set(t, w)
        if not is_path_graph(t):
            assert tree_count_minimum_sets(t) == len(oracle.witnesses)


class TestSingleClique:
    def test_triangle(self):
        value, w = single_clique_connected_forcing(complete(3))
        assert value == 2 and len(w) == 2

    def test_triangle_with_pendant(self):
        g = triangle_with_pendant()
        value, w = single_clique_connected_forcing(g)
        assert value == 2 and is_connected_forcing_set(g, w)

    def test_net(self):
        value, w = single_clique_connected_forcing(net())
        assert value == 3 and w.members() == (0, 1, 2)

    def test_only_leafless_clique_vertex_cannot_be_dropped(self):
        # triangle 0,1,2 with leaves 3,4 on 1 and 5,6 on 2; vertex 0 is the
        # only clique vertex without a leaf and nothing else can force it
        g = new_graph(7, [(0, 1), (1, 2), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
        value, w = single_clique_connected_forcing(g)
        assert value == 5 == connected_forcing_number(g).value
        assert is_connected_forcing_set(g, w)

    def test_rejects_other_graphs(self):
        with pytest.raises(NotSingleCliqueError):
            single_clique_connected_forcing(cycle(5))

    def test_detect(self):
        assert detect_single_clique(net()).clique.members() == (0, 1, 2)
        assert detect_single_clique(net()).is_single_clique_graph
        assert not detect_single_clique(cycle(4)).is_single_clique_graph
        assert not detect_single_clique(path(4)).is_single_clique_graph
        # two triangles sharing a vertex: two big blocks
        bowtie = new_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        assert not detect_single_clique(bowtie).is_single_clique_graph

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_exhaustive_small(self, n):
        for g in all_connected_graphs(n, up_to_isomorphism=True):
            if detect_single_clique(g).is_single_clique_graph:
                value, w = single_clique_connected_forcing(g)
                assert value == connected_forcing_number(g).value == len(w)
                assert is_connected_forcing_set(g, w)

    def test_random_sample(self):
        import random

        rng = random.Random(99)
        for _ in range(40):
            g = random_single_clique_graph(rng)
            value, w = single_clique_connected_forcing(g)
            assert value == connected_forcing_number(g).value
            assert is_connected_forcing_set(g, w)


class TestExtremal:
    @pytest.mark.parametrize(
        "g, kind",
        [
            (path(2), Extremal.FC_IS_1),
            (path(5), Extremal.FC_IS_1),
            (complete(4), Extremal.FC_IS_N_MINUS_1_COMPLETE),
            (complete(3), Extremal.FC_IS_N_MINUS_1_COMPLETE),
            (star(5), Extremal.FC_IS_N_MINUS_1_STAR),
            (cycle(5), Extremal.NEITHER),
            (double_star(), Extremal.NEITHER),
        ],
    )
    def test_examples(self, g, kind):
        assert classify_extremal(g) is kind

    def test_single_vertex_rejected(self):
        with pytest.raises(PreconditionError):
            classify_extremal(new_graph(1, []))


class TestFlowerSnark:
    @pytest.mark.parametrize("k", [3, 5, 7, 9])
    def test_upper_set(self, k):
        s = flower_snark_upper_set(k)
        assert len(s) == k + 2
        assert is_connected_forcing_set(flower_snark(k), s)

    @pytest.mark.parametrize("k", [1, 4, 6])
    def test_bad_k(self, k):
        with pytest.raises(PreconditionError):
            flower_snark_upper_set(k)

    def test_brute_force_j12(self):
        assert connected_forcing_number(flower_snark(3)).value <= 5
