#!/usr/bin/env python3
"""Print the rank-2 coefficient sequences, cutoffs, and a sample system.

Usage: python scripts/rank2_tables.py [max_c]
"""

import sys

from crystalpoly import a_sequence, l_max, rank2_system, weight


def main():
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    print("c1 c2 | l_max | a_0..a_7")
    for c1 in range(top + 1):
        for c2 in range(top + 1):
            if (c1 == 0) != (c2 == 0):
                continue  # mixed zeros are not valid pairing profiles
            lm = l_max(c1, c2)
            seq = [a_sequence(c1, c2, l) for l in range(8)]
            print(f"{c1:2d} {c2:2d} | {str(lm) if lm is not None else 'inf':>5} | {seq}")

    print("\nsample: c1=c2=2 (affine), weight (1,1), window 6")
    print(rank2_system(2, 2, weight(1, 1), window=6).render_text())


if __name__ == "__main__":
    main()
