"""Print c^nu_{lam,mu} for every triple up to a size, by all three methods.

    python3 scripts/coefficient_table.py --max-nu 5 --nonzero
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from lrpictures.crystal import lr_coefficient_crystal
from lrpictures.oracle import lr_coefficient_ballot
from lrpictures.pictures import enumerate_pictures
from lrpictures.shapes import SkewShape, partitions, render_partition, subpartitions


@dataclass
class TableConfig:
    max_nu: int = 5
    nonzero: bool = False


def rows(cfg: TableConfig):
    for n in range(cfg.max_nu + 1):
        for nu in partitions(n):
            for lam in subpartitions(nu):
                for mu in partitions(n - lam.size):
                    c_cry = lr_coefficient_crystal(lam, mu, nu)
                    if cfg.nonzero and c_cry == 0:
                        continue
                    c_pic = len(enumerate_pictures(mu, SkewShape(nu, lam)))
                    c_bal = lr_coefficient_ballot(lam, mu, nu)
                    yield lam, mu, nu, c_cry, c_pic, c_bal


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-nu", type=int, default=TableConfig.max_nu)
    ap.add_argument("--nonzero", action="store_true", help="skip zero coefficients")
    args = ap.parse_args()
    cfg = TableConfig(args.max_nu, args.nonzero)
    w = csv.writer(sys.stdout)
    w.writerow(["lambda", "mu", "nu", "crystal", "pictures", "ballot"])
    disagree = 0
    for lam, mu, nu, *cs in rows(cfg):
        disagree += len(set(cs)) > 1
        w.writerow([render_partition(lam), render_partition(mu), render_partition(nu), *cs])
    if disagree:
        print(f"# {disagree} disagreements", file=sys.stderr)
    return 1 if disagree else 0


if __name__ == "__main__":
    raise SystemExit(main())
