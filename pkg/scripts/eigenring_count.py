"""Count eigenring sizes of every monic irreducible, non right-invariant f.

For degree-2 f over a quadratic tower the right nucleus has exactly q^m
elements; this script tabulates the sizes for any small tower and degree.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from skewlab import oracles
from skewlab.petit import PetitAlgebra, eigenring
from skewlab.skew_poly import is_right_invariant
from skewlab.text import parse_tower


@dataclass
class Config:
    tower: str = "GF(2)^2/y^2+y+1"
    degree: int = 2


def run(cfg):
    T = parse_tower(cfg.tower)
    sizes = Counter()
    for f in oracles.all_monic(T, cfg.degree):
        if is_right_invariant(f) or not oracles.is_irreducible(f):
            continue
        sizes[T.q ** eigenring(PetitAlgebra(f)).dim_over_F] += 1
    return sizes


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tower", default=Config.tower)
    ap.add_argument("--degree", type=int, default=Config.degree)
    cfg = Config(**vars(ap.parse_args()))
    sizes = run(cfg)
    print(f"tower {cfg.tower}, degree {cfg.degree}")
    for size, count in sorted(sizes.items()):
        print(f"  |Nuc_r| = {size}: {count} polynomials")


if __name__ == "__main__":
    main()
