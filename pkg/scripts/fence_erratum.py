"""Compare the two closed forms for the closed fence C_n[K2] against brute force."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from sombor.closed_forms import Variant, closed_sombor_coindex
from sombor.families import FamilySpec, generate_family
from sombor.invariants import sombor_coindex


@dataclass
class FenceConfig:
    n_min: int = 3
    n_max: int = 12


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-min", type=int, default=FenceConfig.n_min)
    p.add_argument("--n-max", type=int, default=FenceConfig.n_max)
    cfg = FenceConfig(**vars(p.parse_args(argv)))

    print(f"{'n':>3} {'brute':>16} {'as_published':>16} {'corrected':>16} {'published-brute':>16}")
    for n in range(cfg.n_min, cfg.n_max + 1):
        spec = FamilySpec.of("closed_fence", n)
        brute = sombor_coindex(generate_family(spec))
        pub = closed_sombor_coindex(spec, Variant.AS_PUBLISHED).value
        cor = closed_sombor_coindex(spec, Variant.CORRECTED).value
        print(f"{n:3d} {brute:16.9f} {pub:16.9f} {cor:16.9f} {pub - brute:16.9f}")


if __name__ == "__main__":
    main()
