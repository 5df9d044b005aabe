"""Acceptance suite: one PASS/FAIL line per criterion, with its time limit.

Run with ``pytest tests/test_acceptance.py`` (lines are printed even when
output capture is on) or directly as ``python3 tests/test_acceptance.py``.
"""

import itertools
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from boxicity.constructions import (
    boxrep_degree2_bipartite,
    boxrep_fully_subdivided,
    boxrep_line_graph,
    boxrep_subdivided_complete,
    clique_side_doubling,
    lift_critical_clique_rep,
    line_graph_dimension_bound,
    with_clique,
)
from boxicity.graphs import (
    Graph,
    check_isomorphism,
    complete_graph,
    critical_clique_partition,
    cycle_graph,
    full_subdivision,
    greedy_coloring,
    hypercube_subdivision_isomorphism,
    path_graph,
    quotient_by_partition,
    random_multigraph,
)
from boxicity.intervals import (
    BoxRep,
    IntervalRep,
    interval_graph_of,
    separate_box_endpoints,
    verify_box_representation,
)
from boxicity.oracle import check_subdivision_lower_bound, exact_boxicity
from boxicity.suitable import (
    build_simply_3_suitable,
    ceil_log2_log2,
    extract_family_from_boxrep,
    is_simply_3_suitable,
    min_simply_3_suitable_size,
)

from conftest import ACCEPTANCE_LINES

OCTAHEDRON = Graph(6, tuple((u, v) for u, v in itertools.combinations(range(6), 2) if v - u != 3))


def _report(line: str) -> None:
    ACCEPTANCE_LINES.append(line)
    if __name__ == "__main__":
        print(line, flush=True)


@contextmanager
def criterion(number: int, title: str, limit: float):
    """Time the block, print one line, then fail if the block failed or ran late."""
    start = time.perf_counter()
    failure = None
    try:
        yield
    except AssertionError as exc:
        failure = exc
    elapsed = time.perf_counter() - start
    late = elapsed >= limit
    status = "FAIL" if failure or late else "PASS"
    detail = f" ({failure})" if failure else (" (time limit exceeded)" if late else "")
    _report(f"{status} criterion {number}: {title} [{elapsed:.2f} s, limit {limit:g} s]{detail}")
    if failure:
        raise failure
    assert not late, f"criterion {number} took {elapsed:.2f} s, limit {limit} s"


def n_of(n: int) -> int:
    return ceil_log2_log2(n) + 1


def test_criterion_01_minimum_family_sizes():
    with criterion(1, "minimum simply 3-suitable sizes for n=2..6 are 1,2,2,3,3", 60):
        got = [min_simply_3_suitable_size(n) for n in range(2, 7)]
        assert got == [1, 2, 2, 3, 3] == [n_of(n) for n in range(2, 7)], got


def test_criterion_02_family_construction():
    with criterion(2, "constructed families are suitable with the formula size (n=2..64, 256, 65536)", 60):
        for n in list(range(2, 65)) + [256, 65536]:
            fam = build_simply_3_suitable(n)
            assert len(fam) == n_of(n), (n, len(fam))
            check = is_simply_3_suitable(fam)
            assert check.ok, (n, check.witness)


def test_criterion_03_subdivided_complete_upper_bound():
    with criterion(3, "subdivided K_n rep is valid with ceil(log2 log2 n)+2 dims (n=3..50)", 30):
        for n in range(3, 51):
            sub = boxrep_subdivided_complete(n)
            assert sub.dims == ceil_log2_log2(n) + 2, (n, sub.dims)
            assert verify_box_representation(sub.graph, sub.rep).valid, n


def test_criterion_04_family_extraction():
    with criterion(4, "families extracted from reps of subdivided K_n are suitable (n=3..20, oracle n=3)", 30):
        for n in range(3, 21):
            rep = separate_box_endpoints(boxrep_subdivided_complete(n).rep)
            fam, check = extract_family_from_boxrep(rep, n)
            assert len(fam) == 2 * rep.k and check.ok, n
        g, _ = full_subdivision(complete_graph(3))
        cert = exact_boxicity(g)
        fam, check = extract_family_from_boxrep(separate_box_endpoints(cert.as_boxrep()), 3)
        assert cert.k == 2 and len(fam) == 4 and check.ok


def test_criterion_05_fully_subdivided_from_coloring():
    with criterion(5, "100 random fully subdivided graphs: valid, exact dims, every dim a supergraph", 60):
        rnd = random.Random(20240505)
        done = 0
        while done < 100:
            n = rnd.randint(5, 40)
            density = 0.1 + 0.8 * done / 99
            h = Graph(n, tuple(e for e in itertools.combinations(range(n), 2) if rnd.random() < density))
            if h.m == 0:
                continue
            col = greedy_coloring(h)
            sub = boxrep_fully_subdivided(h, col)
            assert sub.dims == max(1, n_of(col.c)) + 2, (n, col.c, sub.dims)
            assert verify_box_representation(sub.graph, sub.rep).valid, n
            edges = set(sub.graph.edges)
            assert all(edges <= set(interval_graph_of(d).edges) for d in sub.rep.dims)
            done += 1


def test_criterion_06_line_graphs():
    with criterion(6, "100 random multigraphs: line graph rep valid and within the degree bound", 120):
        rnd = random.Random(20240606)
        for _ in range(100):
            n = rnd.randint(4, 15)
            m = rnd.randint(1, 40)
            h = random_multigraph(n, m, seed=rnd.randrange(1 << 31))
            g, rep, _ = boxrep_line_graph(h)
            assert verify_box_representation(g, rep).valid, (n, m)
            bound = line_graph_dimension_bound(g.max_degree())
            assert rep.k <= bound, (n, m, rep.k, bound)


def test_criterion_07_oracle_ground_truth():
    with criterion(7, "exact boxicity: K4=1, P4=1, C4=2, C6=2, octahedron=3", 60):
        cases = [(complete_graph(4), 1), (path_graph(4), 1), (cycle_graph(4), 2), (cycle_graph(6), 2), (OCTAHEDRON, 3)]
        got = [exact_boxicity(g).k for g, _ in cases]
        assert got == [k for _, k in cases], got


def test_criterion_08_hypercube_structure():
    with criterion(8, "hypercube weight-1/2 layer is the subdivided K_d (d=3,4,5); lower bound at n=3", 10):
        for d in (3, 4, 5):
            part, sub, mapping = hypercube_subdivision_isomorphism(d)
            assert check_isomorphism(part, sub, mapping), d
        assert check_subdivision_lower_bound(3).holds


def _random_degree2_bipartite(rnd):
    nx = rnd.randint(2, 8)
    options = [(u,) for u in range(nx)] + list(itertools.combinations(range(nx), 2))
    ys = rnd.sample(options, rnd.randint(1, min(len(options), 10))) + [()] * rnd.randint(0, 2)
    edges = [(u, nx + j) for j, nb in enumerate(ys) for u in nb]
    return Graph(nx + len(ys), tuple(edges)), list(range(nx)), list(range(nx, nx + len(ys)))


def _twin_blowup(rnd):
    base_n = rnd.randint(2, 7)
    pairs = list(itertools.combinations(range(base_n), 2))
    base = [p for p in pairs if rnd.random() < 0.5]
    sizes = [rnd.randint(1, 3) for _ in range(base_n)]
    owner = [b for b in range(base_n) for _ in range(sizes[b])]
    rnd.shuffle(owner)
    n = len(owner)
    adj = set(base)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if owner[u] == owner[v] or tuple(sorted((owner[u], owner[v]))) in adj]
    return Graph(n, tuple(edges))


def test_criterion_09_doubling_and_lifting():
    with criterion(9, "50 clique-side doublings and 50 critical-clique lifts are valid", 30):
        rnd = random.Random(20240909)
        for i in range(50):
            gb, x, y = _random_degree2_bipartite(rnd)
            rep = boxrep_degree2_bipartite(gb, x, y)
            side = y if i % 2 == 0 else x
            out = clique_side_doubling(gb, rep, side)
            assert out.k == 2 * rep.k
            assert verify_box_representation(with_clique(gb, side), out).valid, i
        for i in range(50):
            g = _twin_blowup(rnd)
            part = critical_clique_partition(g)
            quotient, _ = quotient_by_partition(g, part)
            qrep = exact_boxicity(quotient).as_boxrep()
            assert verify_box_representation(quotient, qrep).valid
            assert verify_box_representation(g, lift_critical_clique_rep(g, part, qrep)).valid, i


def _cli(*args, cwd):
    return subprocess.run(
        [sys.executable, "-m", "boxicity", *map(str, args)], cwd=cwd, capture_output=True, text=True
    )


def test_criterion_10_cli_chains(tmp_path):
    with criterion(10, "gen -> construct -> verify chains exit 0 with byte-identical outputs", 10):
        runs = []
        for trial in range(2):
            d = Path(tmp_path) / str(trial)
            d.mkdir()
            steps = [
                ("gen", "complete", 4, "-o", "k4.txt"),
                ("subdivide", "k4.txt", "-o", "k4s.txt"),
                ("construct", "subdivision", "k4.txt", "-o", "k4rep.txt"),
                ("verify", "k4s.txt", "k4rep.txt"),
                ("gen", "random-multigraph", 8, 20, 42, "-o", "h.txt"),
                ("linegraph", "h.txt", "-o", "lg.txt"),
                ("construct", "linegraph", "h.txt", "-o", "lrep.txt"),
                ("verify", "lg.txt", "lrep.txt"),
            ]
            outs = []
            for step in steps:
                res = _cli(*step, cwd=d)
                assert res.returncode == 0, (step, res.stderr)
                outs.append(res.stdout)
            assert outs[3] == "valid, dims=3\n", outs[3]
            files = sorted(p.name for p in d.iterdir())
            runs.append((outs, [(name, (d / name).read_bytes()) for name in files]))
        assert runs[0] == runs[1]


if __name__ == "__main__":
    import tempfile

    failed = 0
    for name, fn in sorted(globals().items()):
        if not name.startswith("test_criterion_"):
            continue
        try:
            if "tmp_path" in fn.__code__.co_varnames[: fn.__code__.co_argcount]:
                with tempfile.TemporaryDirectory() as tmp:
                    fn(tmp)
            else:
                fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
