"""Test every candidate reading of the alternative-tableau rules against the q = 1 law."""

import argparse
import json
import sys
from dataclasses import dataclass

from multicatalan.chain import DEFAULT_GRID
from multicatalan.cli import parse_grid
from multicatalan.qone import sweep_rulesets


@dataclass
class Config:
    m_max: int = 5
    grid: tuple = DEFAULT_GRID
    out: str | None = None


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--m-max", type=int, default=Config.m_max)
    p.add_argument("--grid", type=parse_grid, default=DEFAULT_GRID)
    p.add_argument("--out")
    cfg = Config(**vars(p.parse_args()))
    rep = sweep_rulesets(cfg.m_max, cfg.grid)
    for row in rep["results"]:
        status = "pass" if row["pass"] else f"fail in {len(row['failed_sectors'])} sectors"
        print(f"{row['rules']['name']:>20}: {status}")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(rep, fh, indent=2, ensure_ascii=False)
    return 0 if rep["passing"] else 1


if __name__ == "__main__":
    sys.exit(main())
