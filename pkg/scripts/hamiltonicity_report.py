"""Print hamiltonian color pairs and 2-factor cycle lengths for the reference graphs."""
from __future__ import annotations

import sys

from egc import families as fam
from egc.colorings import q4_mols_colorings, zigzag_factorization
from egc.families import TORUS, CutoutSpec
from egc.graph_core import proper_coloring
from egc.hamiltonicity import hamiltonian_pairs, pair_cycle_lengths, q3_factorizations


def show(label, g, c) -> None:
    pairs = hamiltonian_pairs(g, c)
    print(f"{label}: {len(pairs)} hamiltonian pair(s) {pairs}")
    for pair, lens in pair_cycle_lengths(g, c).items():
        print(f"    {pair}: {lens}")


def main() -> int:
    for name in ("dodecahedron", "coxeter"):
        g = fam.named(name)
        show(name, g, proper_coloring(g))
    q3 = fam.hypercube(3)
    straight, twisted = q3_factorizations()
    show("q3 coordinate", q3, straight)
    show("q3 twisted", q3, twisted)
    show("q4 F1", fam.hypercube(4), q4_mols_colorings()[1])
    for params in ((22, 5, 1), (26, 7, 3)):
        spec = CutoutSpec(TORUS, *params)
        show(f"zigzag {params}", fam.cutout(spec), zigzag_factorization(spec))
    return 0


if __name__ == "__main__":
    sys.exit(main())
