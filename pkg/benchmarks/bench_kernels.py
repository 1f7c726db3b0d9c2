"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--trials 500]

Each workload runs once per available backend; the table shows the best of
``--repeat`` wall-clock times and the speedup of the compiled kernels.
"""
import argparse
import random
import time
from itertools import combinations

from divgraph import kernels
from divgraph.divisor import build_B, make_integer_set
from divgraph.graph import SimpleGraph, diameter, find_subgraph, girth, girth_gt4
from divgraph.patterns import catalog
from divgraph.verify import FuzzConfig, fuzz

FUNCS = ("distance_matrix", "component_labels", "shortest_cycle", "shortest_cycle_at_least", "find_embedding")


def use(backend):
    impl = kernels.backends()[backend]
    for name in FUNCS:
        setattr(kernels, name, getattr(impl, name))


def fresh(g):
    # Drop cached kernel results so every run recomputes them.
    return SimpleGraph(g.vertices, g.edges())


def random_bipartite(rng, m, n, p):
    left = [("p", i) for i in range(m)]
    right = [("x", j) for j in range(n)]
    return SimpleGraph(left + right, [(a, b) for a in left for b in right if rng.random() < p])


def workloads(trials):
    rng = random.Random(0)
    sparse = [random_bipartite(rng, 30, 30, 0.08) for _ in range(20)]
    dense = build_B(make_integer_set([a * b for a, b in combinations([2, 3, 5, 7, 11, 13, 17, 19], 2)])).graph
    grid_like = random_bipartite(rng, 12, 12, 0.2)

    def diameters():
        for g in sparse:
            diameter(fresh(g))

    def girths():
        for g in sparse:
            g = fresh(g)
            girth(g)
            girth_gt4(g)

    def inc_k4_search():
        for _ in range(20):
            find_subgraph(fresh(grid_like), catalog("IncK4"))

    def inc_k4_dense():
        find_subgraph(fresh(dense), catalog("IncK4"))
        find_subgraph(fresh(dense), catalog("ScriptG"))

    def fuzz_trials():
        fuzz(FuzzConfig(trials=trials, seed=1))

    return {
        "diameter (20 x 60 vertices)": diameters,
        "girth + girth_gt4 (20 x 60 vertices)": girths,
        "Inc(K4) search, sparse host": inc_k4_search,
        "Inc(K4)/ScriptG search, dense host": inc_k4_dense,
        f"fuzz ({trials} trials, end to end)": fuzz_trials,
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--trials", type=int, default=500)
    args = parser.parse_args()

    backends = sorted(kernels.backends())
    jobs = workloads(args.trials)
    print(f"{'workload':42} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for name, job in jobs.items():
        times = {}
        for b in backends:
            use(b)
            best = float("inf")
            for _ in range(args.repeat):
                t = time.perf_counter()
                job()
                best = min(best, time.perf_counter() - t)
            times[b] = best
        cols = " ".join(f"{times[b]:9.3f}s" for b in backends)
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "       -"
        print(f"{name:42} {cols} {speed}")


if __name__ == "__main__":
    main()
