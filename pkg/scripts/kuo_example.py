"""Walk through the three criteria on Kuo's pair and on the positive control."""

from dataclasses import dataclass

from _config import parse_config
from jacnp.criteria import CRITERIA
from jacnp.jacobian import jacobian_analysis
from jacnp.polyalg import parse_poly
from jacnp.transform import abrade, reduce


@dataclass
class Config:
    poly: str = "(y^2-x^3)^2-x^7"
    control: str = "(y^2-x^3)^2-4*x^5*y-x^7"
    max_shear: int = 16


def describe(text):
    res = jacobian_analysis(parse_poly(text))
    P = res.polygon
    print(f"f = {text}")
    print(f"  jacobian polygon  {P}   (shears {res.shears_used})")
    if P.r >= 2:
        print(f"  reduce            {reduce(P)}")
        print(f"  abrade            {abrade(P)}")
    for name, fn in CRITERIA.items():
        v = fn(P)
        if v.passed:
            print(f"  {name:<9} pass  characteristic {list(v.characteristic)}, semigroup {list(v.semigroup)}")
        else:
            print(f"  {name:<9} fail  condition {v.condition}, stage {v.stage}: {v.reason}")


def main(cfg: Config):
    describe(cfg.poly)
    describe(cfg.control)


if __name__ == "__main__":
    main(parse_config(Config, __doc__))
