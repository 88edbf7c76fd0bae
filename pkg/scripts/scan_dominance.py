"""Dominance map and inequality families over the tail half of [0, nmax].

Also prints, for b_{l,2} >= b_{l,1}, the last n at which it fails, which is
how far the tail window has to reach before the inequality settles.
"""

import argparse

from hooklab import report
from hooklab.oracle import PartitionClass
from hooklab.qseries import hook_count_series


def crossover(ell: int, n_max: int) -> int | None:
    b1 = hook_count_series(PartitionClass.regular(ell), 1, n_max)
    b2 = hook_count_series(PartitionClass.regular(ell), 2, n_max)
    fails = [n for n in range(n_max + 1) if b2[n] < b1[n]]
    return fails[-1] if fails else None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=200)
    ap.add_argument("--ell-max", type=int, default=6)
    ap.add_argument("--with-t4", action="store_true", help="add oracle-only t = 4, 5 cells")
    args = ap.parse_args()

    ts = (1, 2, 3, 4, 5) if args.with_t4 else (1, 2, 3)
    rep = report.scan(range(2, args.ell_max + 1), ts, args.nmax)
    print("ell  " + "  ".join(f"t={t}" for t in ts))
    for ell in range(2, args.ell_max + 1):
        row = []
        for t in ts:
            c = rep.cell(ell, t)
            mark = c.letter or "?"
            row.append((mark if c.asserted else mark + "*").ljust(3))
        print(f"{ell:<4} " + "  ".join(row))
    print("(* oracle evidence only)\n")
    for chk in rep.inequalities:
        where = f"l={chk.ell}" + (f" t={chk.t}" if chk.t else "")
        status = "holds" if chk.holds else f"fails on [{chk.failures[0]}, {chk.failures[-1]}]"
        print(f"{chk.family:<13} {where:<8} {status}")
    print("\nlast failure of b2 >= b1 up to n = 3 * nmax:")
    for ell in range(2, args.ell_max + 2):
        print(f"  l={ell}: {crossover(ell, 3 * args.nmax)}")


if __name__ == "__main__":
    main()
