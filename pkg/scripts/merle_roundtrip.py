"""Enumerate Puiseux characteristics and check every criterion on Merle's polygon."""

import time
from collections import Counter
from dataclasses import dataclass

from _config import parse_config
from jacnp.criteria import CRITERIA, recover_characteristic
from jacnp.semigroup import char_to_semigroup, enumerate_characteristics, merle_polygon


@dataclass
class Config:
    max_b0: int = 30
    max_entry: int = 60


def main(cfg: Config):
    start = time.perf_counter()
    by_genus = Counter()
    failures = 0
    for c in enumerate_characteristics(cfg.max_b0, cfg.max_entry):
        by_genus[c.g] += 1
        P = merle_polygon(char_to_semigroup(c))
        ok = all(fn(P).passed for fn in CRITERIA.values()) and recover_characteristic(P) == c
        if not ok:
            failures += 1
            print("FAIL", list(c), P)
    total = sum(by_genus.values())
    print(f"{total} characteristics (b0 <= {cfg.max_b0}, entries <= {cfg.max_entry}) "
          f"in {time.perf_counter() - start:.1f}s, {failures} failures")
    for g in sorted(by_genus):
        print(f"  g = {g}: {by_genus[g]}")


if __name__ == "__main__":
    main(parse_config(Config, __doc__))
