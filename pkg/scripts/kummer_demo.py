#!/usr/bin/env python3
"""Run the Kummer cover construction for one prime and print the result.

Usage: python3 scripts/kummer_demo.py [q]
"""

import sys

from zomo import kummer


def main():
    q = int(sys.argv[1]) if len(sys.argv) > 1 else 19
    golden = None
    try:
        golden = kummer.load_golden(q)
    except kummer.KummerError:
        pass
    out = kummer.build_kummer(q, golden)
    print("q = %d  h = %d  epsilon = %d" % (out.q, out.h, out.epsilon))
    print("chosen Q = %r, slope m = %d" % (out.Q, out.m))
    print("genus = %d" % out.genus)
    print("z^3 = %s" % out.equation)
    if golden is not None:
        print("matches stored reference: %s (up to a cube constant: %s)"
              % (out.matched_golden, out.matched_up_to_cube))
    print("%d distinct equations over all choices" % len(out.all_equations))


if __name__ == "__main__":
    main()
