"""Print the area table T(n,k), the disjoint-code table and the count sequences.

    python scripts/reproduce_tables.py --max-n 8
"""

import argparse

from motzkinflags.cli import area_table, disjoint_table
from motzkinflags.motzkin import catalan_number, elevated_number, motzkin_number, riordan_number


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=8)
    args = p.parse_args()

    print("Motzkin paths of length n by area, T(n,k):")
    print(area_table(args.max_n))
    print()
    print("Zero-free distance vectors on F_q^n by flag distance d, T(n-2,d-n+1):")
    print(disjoint_table(args.max_n))
    print()
    width = max(len(str(motzkin_number(args.max_n))), 8)
    print(f"{'n':>3} {'M_n':>{width}} {'C_n':>{width}} {'E_n':>{width}} {'R_n':>{width}}")
    for n in range(args.max_n + 1):
        cells = (motzkin_number(n), catalan_number(n), elevated_number(n), riordan_number(n))
        print(f"{n:>3} " + " ".join(f"{c:>{width}}" for c in cells))


if __name__ == "__main__":
    main()
