"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line (visible even
without ``-s``) and then asserts the same verdict.
"""

import random

import pytest

from connforce import verify
from connforce.forcing import forcing_chains, forcing_closure
from connforce.graph import VertexSet, is_connected_mask, new_graph
from connforce.structure import is_path_graph, leaves

pytestmark = pytest.mark.slow


@pytest.fixture
def report(capsys):
    def emit(number, title, checks):
        failed = [c for c in checks if not c.observation and not c.passed]
        verdict = "FAIL" if failed else "PASS"
        with capsys.disabled():
            print(f"\ncriterion {number}: {verdict} - {title}")
            for c in checks:
                print("    " + c.line())
        assert not failed, "; ".join(f"{c.name}: {c.detail}" for c in failed)

    return emit


@pytest.fixture(scope="module")
def tree_checks():
    return verify.suite_trees()


def test_criterion_1_tree_formula(report, tree_checks):
    report(1, "tree formula against brute force", tree_checks[:1])


def test_criterion_2_tree_counting(report, tree_checks):
    report(2, "tree counting formula against exhaustive count", tree_checks[1:2])


def test_criterion_3_single_clique(report):
    report(3, "single-clique formula against brute force", verify.suite_clique())


def test_criterion_4_family_values(report):
    checks = verify.family_value_checks()
    checks += [c for c in verify.pendant_family_checks() if "spread" not in c.name]
    report(4, "exact values for hypercubes, tori and the pendant families", checks)


def test_criterion_5_flower_snark(report):
    report(5, "flower snark construction and brute-force bound", verify.suite_snark())


def test_criterion_6_extremal(report):
    report(6, "Fc = 1 and Fc = n-1 characterisation for n <= 6", verify.suite_extremal())


def test_criterion_7_bounds(report):
    corpus = verify.small_graph_corpus(6) + verify.random7_corpus()
    rows = [verify._bounds_instance(g) for g in corpus]
    spreads = [verify._spread_instance(g) for g in corpus]
    labels = [
        ("f_le_fc", "F <= Fc"),
        ("fc_ge_leaves", "Fc >= L for non-paths"),
        ("fc_ge_pathcover", "Fc >= P"),
        ("r1r2_in_all", "R1 and R2 lie in every minimum connected forcing set"),
        ("all_but_one_leaves", "all-but-one reduced leaves per support vertex"),
        ("fc_reduced", "Fc(G) = Fc(reduced G) for non-paths"),
    ]
    checks = [verify._tally(label, [bool(r[key]) for r in rows], "graphs") for key, label in labels]
    checks.append(verify._tally("|f(G;v)| <= 1 for every vertex", spreads, "graphs"))
    report(7, "bound suite on all connected graphs n <= 6 plus 1000 at n = 7", checks)


def _random_order_closure(g, start, rng):
    colored = set(start)
    while True:
        moves = [
            unc[0]
            for v in colored
            if len(unc := [u for u in g.neighbors(v) if u not in colored]) == 1
        ]
        if not moves:
            return colored
        colored.add(rng.choice(moves))


def _engine_instance(rng):
    n = rng.randint(1, 10)
    p = rng.choice((0.2, 0.35, 0.5, 0.8))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    if rng.random() < 0.7:
        order = list(range(n))
        rng.shuffle(order)
        edges += [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    g = new_graph(n, edges)
    s = VertexSet.of(n, [v for v in range(n) if rng.random() < 0.3])
    extra = VertexSet.of(n, [v for v in range(n) if rng.random() < 0.3])
    return g, s, s | extra


def test_criterion_8_engine_properties(report):
    rng = random.Random(8)
    counts = dict.fromkeys(["confluence", "monotone", "superset", "chains", "leaves"], 0)
    failures = dict.fromkeys(counts, 0)
    instances = 1500
    for _ in range(instances):
        g, s, t = _engine_instance(rng)
        trace = forcing_closure(g, s)
        final = trace.final
        counts["confluence"] += 1
        if any(_random_order_closure(g, s, rng) != set(final) for _ in range(5)):
            failures["confluence"] += 1
        counts["monotone"] += 1
        if not final.issubset(forcing_closure(g, t).final):
            failures["monotone"] += 1
        if final == g.all_vertices():
            counts["superset"] += 1
            if forcing_closure(g, t).final != g.all_vertices():
                failures["superset"] += 1
        chains = forcing_chains(trace, g)
        counts["chains"] += 1
        for c in chains:
            sub, _ = g.induced_subgraph(c)
            if not (sub.m == sub.n - 1 and sub.max_degree() <= 2):
                failures["chains"] += 1
                break
        if (s and final == g.all_vertices() and is_connected_mask(g, s.mask)
                and is_connected_mask(g, g.all_vertices().mask) and not is_path_graph(g)):
            counts["leaves"] += 1
            lv = set(leaves(g))
            if any(sum(v in lv for v in c) > 1 for c in chains):
                failures["leaves"] += 1
    names = {
        "confluence": "closure is independent of force order",
        "monotone": "closure is monotone",
        "superset": "supersets of forcing sets force",
        "chains": "forcing chains induce paths",
        "leaves": "at most one leaf per chain for connected forcing sets of non-paths",
    }
    checks = [
        verify.Check(names[k], failures[k] == 0, f"{counts[k] - failures[k]}/{counts[k]} instances")
        for k in counts
    ]
    report(8, f"engine properties on {instances} seeded random (graph, set) pairs, n <= 10", checks)
