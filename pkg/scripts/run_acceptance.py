"""Run the acceptance criteria and print one line per criterion."""

import argparse
import sys
from dataclasses import dataclass, field

from multicatalan.acceptance import run


@dataclass
class Config:
    criteria: list[int] = field(default_factory=list)  # empty means all


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("criteria", nargs="*", type=int)
    cfg = Config(**vars(p.parse_args()))
    results = run(cfg.criteria or None)
    return 0 if all(ok for ok, _ in results.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
