"""Enumerate every pair of full flags on F_q^n and compare the distance vectors
they realize with the images of all Motzkin words of length n.

    python scripts/ground_truth.py --n 4 --q 2
"""

import argparse
import collections
import itertools
import time

from motzkinflags.bijection import phi, psi
from motzkinflags.flag import distance_vector, full_flags
from motzkinflags.motzkin import enumerate_paths


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--q", type=int, default=2)
    args = p.parse_args()

    t0 = time.perf_counter()
    flags = list(full_flags(args.n, args.q))
    hits = collections.Counter(
        tuple(distance_vector(f, g)) for f, g in itertools.product(flags, repeat=2)
    )
    predicted = {tuple(phi(w)) for w in enumerate_paths(args.n)}
    print(f"{len(flags)} full flags on F_{args.q}^{args.n}, {len(flags) ** 2} ordered pairs")
    print(f"{'vector':<16} {'path':<10} {'area':>4} {'pairs':>8}")
    for v in sorted(predicted):
        print(f"{','.join(map(str, v)):<16} {psi(v):<10} {sum(v):>4} {hits.get(v, 0):>8}")
    extra = set(hits) - predicted
    missing = predicted - set(hits)
    status = "match" if not extra and not missing else f"MISMATCH extra={sorted(extra)} missing={sorted(missing)}"
    print(f"{len(hits)} realized vs {len(predicted)} predicted: {status} ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
