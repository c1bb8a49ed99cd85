"""Compare the three criteria on random special convenient integral polygons.

Reduction and abrasion must agree everywhere.  The gamma criterion is only
claimed for polygons that are already jacobian polygons of some curve, so its
disagreements on arbitrary polygons are counted and listed, not treated as
errors.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from _config import parse_config
from jacnp.criteria import abrasion_criterion, gamma_criterion, reduction_criterion
from jacnp.polygon import Polygon


@dataclass
class Config:
    samples: int = 20000
    seed: int = 1
    max_r: int = 4
    max_L: int = 200
    max_M: int = 12
    show: int = 5


def sample(rng, cfg):
    terms, last = [], Fraction(1)
    for _ in range(rng.randint(1, cfg.max_r)):
        M = rng.randint(1, cfg.max_M)
        lo = int(last * M) + 1
        if lo > cfg.max_L:
            break
        L = rng.randint(lo, cfg.max_L)
        terms.append((L, M))
        last = Fraction(L, M)
    return Polygon.from_terms(terms or [(2, 1)])


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    passes = red_abr = gamma_diff = 0
    examples = []
    for _ in range(cfg.samples):
        P = sample(rng, cfg)
        red, abr, gam = reduction_criterion(P), abrasion_criterion(P), gamma_criterion(P)
        passes += red.passed
        red_abr += red.passed != abr.passed
        if gam.passed != red.passed:
            gamma_diff += 1
            if len(examples) < cfg.show:
                examples.append((P, red, gam))
    print(f"{cfg.samples} polygons, {passes} pass reduction")
    print(f"reduction vs abrasion disagreements: {red_abr}")
    print(f"gamma vs reduction disagreements:    {gamma_diff}")
    for P, red, gam in examples:
        print(f"  {P}: reduction {'pass' if red.passed else f'fails ({red.condition}, stage {red.stage})'}, "
              f"gamma {'pass' if gam.passed else 'fail'} on {[str(g) for g in gam.gamma or ()]}")


if __name__ == "__main__":
    main(parse_config(Config, __doc__))
