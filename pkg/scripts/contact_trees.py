"""Print the Kuo-Lu tree and its polygon for a roots file, optionally against a polynomial."""

from dataclasses import dataclass
from pathlib import Path

from _config import parse_config
from jacnp.contact import build_tree, load_roots, tree_polygon
from jacnp.jacobian import jacobian_polygon
from jacnp.polyalg import parse_poly

DATA = Path(__file__).resolve().parent.parent / "data" / "roots"


@dataclass
class Config:
    roots: str = str(DATA / "tree_pair_g.json")
    poly: str = "(y^3-x^5)^2-9*x^11"


def main(cfg: Config):
    tree = build_tree(load_roots(cfg.roots))
    for B in tree.internal_nodes():
        print(f"ball h={B.h} t={B.t} q={B.q} members={list(B.members)}")
    P = tree_polygon(tree)
    print(f"tree polygon:      {P}")
    if cfg.poly:
        Q = jacobian_polygon(parse_poly(cfg.poly))
        print(f"jacobian polygon:  {Q}   ({'match' if P == Q else 'MISMATCH'})")


if __name__ == "__main__":
    main(parse_config(Config, __doc__))
