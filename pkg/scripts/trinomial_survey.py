"""Tabulate which trinomial cones x^a + y^b + z^c style blocks admit a surjection from affine space.

Enumerates single-variable blocks with a common exponent sum (so the
hypersurface is a cone) plus two-variable blocks, and prints counts.
"""

import argparse
import itertools
from collections import Counter

from conelift.trinomial import TrinomialHypersurface, admits_surjection_from_affine_space


def blocks_with_sum(total, max_len):
    for n in range(1, max_len + 1):
        for parts in itertools.product(range(1, total + 1), repeat=n):
            if sum(parts) == total and list(parts) == sorted(parts):
                yield parts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=8)
    ap.add_argument("--max-block", type=int, default=2)
    ap.add_argument("--show", action="store_true", help="list every cone")
    args = ap.parse_args()

    tally = Counter()
    for d in range(1, args.max_degree + 1):
        blocks = list(blocks_with_sum(d, args.max_block))
        for l in itertools.combinations_with_replacement(blocks, 3):
            v = admits_surjection_from_affine_space(TrinomialHypersurface(l))
            tally[(d, v.surjection)] += 1
            if args.show:
                print(d, l, "surjection" if v.surjection else "none", v.verdict.witness)
    print("degree  with-surjection  without")
    for d in range(1, args.max_degree + 1):
        print(f"{d:>6}  {tally[(d, True)]:>15}  {tally[(d, False)]:>7}")


if __name__ == "__main__":
    main()
