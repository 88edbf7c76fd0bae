"""Print the d/b, b/main and d/main ratio table.

    python3 scripts/reproduce_table2.py                 # n = 100, 500
    python3 scripts/reproduce_table2.py --n 100,500,1000,5000 --cache-dir .cache
"""

import argparse
import time

from hooklab import report
from hooklab.cli import int_list


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int_list, default=[100, 500])
    ap.add_argument("--ell", type=int_list, default=[3, 4, 5])
    ap.add_argument("--t", type=int_list, default=[2, 3])
    ap.add_argument("--cache-dir", default=None)
    args = ap.parse_args()

    start = time.perf_counter()
    tab = report.table2(args.n, args.ell, args.t, cache_dir=args.cache_dir)
    for line in tab.csv_lines():
        print(line)
    print(f"# {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
