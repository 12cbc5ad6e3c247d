"""Tabulate four-step verdicts against the true irreducibility of every monic f.

Shows how often the test says TRUE, how often it has to STOP, and how many
STOPs the mclm certificate resolves.  ``--literal-step3`` reproduces the
unsound branch and reports its false positives.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from skewlab import oracles
from skewlab.errors import HypothesisViolated
from skewlab.reducibility import decide
from skewlab.text import parse_tower


@dataclass
class Config:
    tower: str = "GF(2)^3/y^3+y+1"
    degree: int = 2
    literal_step3: bool = False


def run(cfg):
    T = parse_tower(cfg.tower)
    table = Counter()
    false_true = []
    for f in oracles.all_monic(T, cfg.degree):
        try:
            v = decide(f, literal_step3=cfg.literal_step3, certify=True, witness=False)
        except HypothesisViolated:
            table[("HYPOTHESIS_VIOLATED", "-")] += 1
            continue
        irr = oracles.is_irreducible(f)
        table[(v.kind, "irreducible" if irr else "reducible")] += 1
        if v.kind == "REDUCIBLE_TRUE" and irr:
            false_true.append(str(f))
    return table, false_true


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tower", default=Config.tower)
    ap.add_argument("--degree", type=int, default=Config.degree)
    ap.add_argument("--literal-step3", action="store_true")
    cfg = Config(**vars(ap.parse_args()))
    table, false_true = run(cfg)
    for (kind, truth), count in sorted(table.items()):
        print(f"{kind:24s} {truth:12s} {count}")
    if false_true:
        print("TRUE on irreducible input:", ", ".join(false_true))


if __name__ == "__main__":
    main()
