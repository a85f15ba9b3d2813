#!/usr/bin/env python3
"""Sweep the type-(4,2) constructions over small parameters and tabulate
the certified signatures, together with the dual {3,5} family.

Usage:
    python scripts/signature_sweep.py [k1,l1 k2,l2 ...]
"""

import sys
import time

from anosovforms.anosov import certify
from anosovforms.pfaffian import dual_automorphism, scheuneman_dual
from anosovforms.recipes import recipe_count

DEFAULT_PAIRS = [(2, 3), (3, 2), (5, 2), (6, 5), (7, 2), (10, 3), (11, 2)]


def main() -> None:
    pairs = DEFAULT_PAIRS
    if len(sys.argv) > 1:
        pairs = []
        for arg in sys.argv[1:]:
            k, l = arg.split(",")
            pairs.append((int(k), int(l)))

    print(f"{'k':>3} {'l':>3} {'sig':>7} {'type':>8} {'classified':>10} "
          f"{'dual sig':>9} {'dual type':>10} {'secs':>6}")
    for k, l in pairs:
        t0 = time.monotonic()
        out = recipe_count(k, l)
        alpha = out.matrix.submatrix(range(4), range(4))
        dual = scheuneman_dual(out.algebra)
        _, dual_map = dual_automorphism(alpha, out.algebra, dual)
        dual_cert = certify(dual, dual_map)
        dt = time.monotonic() - t0
        sig = "{%d,%d}" % out.certificate.signature
        dsig = "{%d,%d}" % dual_cert.signature
        print(f"{k:>3} {l:>3} {sig:>7} {str(out.certificate.algebra_type):>8} "
              f"{out.provenance['classified']:>10} {dsig:>9} "
              f"{str(dual_cert.algebra_type):>10} {dt:>6.2f}")


if __name__ == "__main__":
    main()
