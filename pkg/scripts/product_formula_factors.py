"""Tabulate weight / product-formula for each convention of n over words with A's."""

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

from multicatalan.core import all_words
from multicatalan.counting import N_CONVENTIONS, det_weight_check


@dataclass
class Config:
    m_max: int = 6


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--m-max", type=int, default=Config.m_max)
    cfg = Config(**vars(p.parse_args()))
    print("convention,r,alpha_exp,beta_exp,words")
    for conv in N_CONVENTIONS:
        tally: Counter = Counter()
        for m in range(1, cfg.m_max + 1):
            for r in range(1, m + 1):
                for w in all_words(m, r):
                    f = det_weight_check(w)[conv]["weight_over_formula"]
                    tally[(r, None if f is None else (f["a"], f["b"]))] += 1
        for (r, f), n in sorted(tally.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))):
            a, b = ("-", "-") if f is None else f
            print(f"{conv},{r},{a},{b},{n}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
