#!/usr/bin/env python3
"""Generate ready-to-use JSON input files for the locaut CLI.

Writes matrices (maps and points) plus two block maps into a directory, so
the README examples can be run verbatim.
"""

import argparse
import json
import random
from dataclasses import dataclass
from pathlib import Path

from locaut.classify import random_unimodular
from locaut.leibniz import BlockMap
from locaut.linalg import Matrix, inverse
from locaut.sln import SlnModel


@dataclass
class Config:
    out_dir: Path = Path("inputs")
    n_values: tuple = (2, 3, 4)
    seed: int = 20240817


def dump(cfg: Config, name: str, payload) -> None:
    path = cfg.out_dir / name
    path.write_text(json.dumps(payload, indent=2) + "\n")
    print(f"wrote {path}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Config.out_dir)
    parser.add_argument("--seed", type=int, default=Config.seed)
    args = parser.parse_args(argv)
    cfg = Config(out_dir=args.out_dir, seed=args.seed)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)

    rng = random.Random(cfg.seed)
    for n in cfg.n_values:
        model = SlnModel(n)
        dump(cfg, f"transpose{n}.json", model.transpose_map().to_json())
        dump(cfg, f"negation{n}.json", model.scalar_map(-1).to_json())
        dump(cfg, f"double{n}.json", model.scalar_map(2).to_json())
        g = random_unimodular(n, rng)
        ginv = inverse(g)
        conj = model.map_matrix(lambda x: g @ x @ ginv)
        dump(cfg, f"conjugation{n}.json", conj.to_json())
        dump(cfg, f"point_e12_{n}.json", model.e(0, 1).to_json())
        dump(cfg, f"point_h_{n}.json", model.strongly_regular_element().to_json())

    model = SlnModel(2)
    ident = BlockMap(Matrix.identity(3), Matrix.zeros(3, 3), Matrix.identity(3))
    dump(cfg, "blockmap_identity_vm2.json", ident.to_json())
    anti = BlockMap(model.transpose_map(), Matrix.zeros(3, 3), Matrix.identity(3))
    dump(cfg, "blockmap_transpose_vm2.json", anti.to_json())
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
