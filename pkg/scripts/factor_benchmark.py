"""Time the factoriser on random monic polynomials and report which route
settled each irreducible factor."""

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from skewlab.reducibility import factorize
from skewlab.skew_poly import SkewPoly
from skewlab.text import parse_tower


@dataclass
class Config:
    tower: str = "GF(3)^2/y^2+1"
    count: int = 200
    min_degree: int = 2
    max_degree: int = 5
    seed: int = 0


def run(cfg):
    T = parse_tower(cfg.tower)
    rng = random.Random(cfg.seed)
    routes = Counter()
    lengths = Counter()
    t0 = time.perf_counter()
    for _ in range(cfg.count):
        m = rng.randint(cfg.min_degree, cfg.max_degree)
        f = SkewPoly(T, [rng.randrange(T.order) for _ in range(m)] + [1])
        fa = factorize(f)
        assert fa.product(T) == f
        lengths[fa.l] += 1
        routes.update(c.kind for c in fa.certificates)
    return time.perf_counter() - t0, routes, lengths


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(default), default=default)
    cfg = Config(**vars(ap.parse_args()))
    secs, routes, lengths = run(cfg)
    print(f"{cfg.count} polynomials over {cfg.tower} in {secs:.2f}s")
    print("certificates:", dict(sorted(routes.items())))
    print("l distribution:", dict(sorted(lengths.items())))


if __name__ == "__main__":
    main()
