"""Time the compiled and pure-Python Smith normal form kernels.

    python benchmarks/bench_snf.py [--repeat 3] [--seed 0]

Inputs are boundary matrices of small spaces and seeded sparse random
matrices.  Both kernels are fed the same flat lists and must agree.
"""

import argparse
import random
import timeit

from declab.homology import _snf_py, normalized_chains
from declab.sset import boundary, horn, product, simplex

try:
    from declab.homology import _snf_c
except ImportError:
    _snf_c = None


def boundary_cases():
    spaces = {
        "boundary(5)": boundary(5),
        "horn(5,2)": horn(5, 2),
        "product(simplex(2),simplex(2))": product(simplex(2), simplex(2)),
        "product(boundary(2),simplex(2))": product(boundary(2), simplex(2)),
    }
    for name, X in spaces.items():
        C = normalized_chains(X, 3)
        for n in range(1, len(C.boundaries)):
            M = C.boundaries[n]
            if M.rows and M.cols:
                yield f"{name} d{n}", M.rows, M.cols, M.flat()


def sparse_cases(seed, sizes=(20, 40, 60), density=0.08):
    rng = random.Random(seed)
    for n in sizes:
        flat = [rng.choice((-1, 1)) if rng.random() < density else 0 for _ in range(n * n)]
        yield f"sparse {n}x{n}", n, n, flat


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _snf_c is None:
        print("compiled kernel not built; only the Python kernel is timed")
    print(f"{'case':<44} {'shape':>9} {'python ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for name, m, n, flat in [*boundary_cases(), *sparse_cases(args.seed)]:
        py = min(timeit.repeat(lambda: _snf_py.smith(m, n, list(flat)), number=1, repeat=args.repeat))
        row = f"{name:<44} {f'{m}x{n}':>9} {py * 1e3:>10.2f}"
        if _snf_c is not None:
            try:
                same = list(_snf_c.smith(m, n, flat)) == list(_snf_py.smith(m, n, list(flat)))
                fast = min(timeit.repeat(lambda: _snf_c.smith(m, n, flat), number=1, repeat=args.repeat))
                row += f" {fast * 1e3:>12.2f} {py / fast:>7.1f}x"
                if not same:
                    row += "  MISMATCH"
            except OverflowError:
                row += f" {'overflow':>12}"
        print(row)


if __name__ == "__main__":
    main()
