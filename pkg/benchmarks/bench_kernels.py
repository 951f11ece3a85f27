"""Time the graph kernels under both backends.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import timeit

from nwfsets import kernels


def random_graph(n, max_out, seed):
    rng = random.Random(seed)
    indptr, indices = [0], []
    for _ in range(n):
        indices.extend(sorted({rng.randrange(n) for _ in range(rng.randrange(max_out + 1))}))
        indptr.append(len(indices))
    return indptr, indices


def stage_graph():
    """Membership graph of the fifth cumulative stage (65536 sets)."""
    from nwfsets import SetSystem, spectrum_stage

    s = SetSystem()
    spectrum_stage(s, 5)
    return s.graph()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.available_backends()
    stage = stage_graph()
    cases = [
        ("scc random 20k", "scc", random_graph(20_000, 3, 1)),
        ("bisim random 20k", "bisim_blocks", random_graph(20_000, 3, 2)),
        ("scc stage-5", "scc", stage),
        ("bisim stage-5", "bisim_blocks", stage),
        ("subsets of 16", "subset_tuples", (list(range(16)),)),
    ]
    names = sorted(backends)
    print(f"{'case':<20}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, fn, graph in cases:
        times = {}
        for name in names:
            f = getattr(backends[name], fn)
            times[name] = min(timeit.repeat(lambda: f(*graph), number=1, repeat=args.repeat))
        row = f"{label:<20}" + "".join(f"{times[n] * 1000:>10.1f}ms" for n in names)
        if "compiled" in times:
            row += f"{times['python'] / times['compiled']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
