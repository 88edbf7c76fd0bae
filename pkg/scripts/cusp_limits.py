"""z * B(e^{-2 pi z}) and z * D(e^{-2 pi z}) against their predicted limits."""

import argparse

from hooklab import report
from hooklab.cli import int_list
from hooklab.oracle import Kind


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ell", type=int_list, default=[2, 3, 5])
    ap.add_argument("--t", type=int_list, default=[1, 2, 3])
    args = ap.parse_args()

    zs = report.CUSP_Z
    print(f"{'':14}{'target':>11}" + "".join(f"{'err z=' + format(z, 'g'):>13}" for z in zs) + "   const")
    for ell in args.ell:
        for t in args.t:
            for kind in Kind:
                c = report.cusp_check(kind, ell, t)
                const = "" if c.constant_term is None else f"{c.constant_term:8.4f}"
                flag = "" if c.converges else "  <- no convergence"
                errs = "".join(f"{e:13.2e}" for e in c.errors)
                print(f"{kind.value[0]} l={ell} t={t}    {c.target:11.7f}{errs}   {const}{flag}")


if __name__ == "__main__":
    main()
