"""Cornerpoints sit over homological critical values.

For every sampled cornerpoint of two small filtrations (the three-vertex
path and a hollow triangle), finds explicit witness pairs showing that the
inclusion-induced homology map fails to be an isomorphism across each
cornerpoint coordinate; then shows that off-grid probes are regular values
(no witness exists).

Run:  python3 demos/critical_values_demo.py
"""
from fractions import Fraction

import perspaces as ps
from perspaces.grades import Grade

G = Grade.of


def describe(cx, name) -> None:
    print(f"\n=== {name} ===")
    for k in range(cx.dimension + 1):
        for c in ps.sample_space(cx, k):
            tail = "inf" if c.v is None else str(c.v)
            rep = ps.check_cornerpoint_critical(cx, k, c)
            print(f"degree {k}, cornerpoint ({c.u}, {tail}):")
            w = rep.witness_u
            print(
                f"  u is critical: betti {w.betti_below} below vs"
                f" {w.betti_above} above, map rank {w.rank}"
            )
            if rep.witness_v is not None:
                w = rep.witness_v
                print(
                    f"  v is critical: betti {w.betti_below} below vs"
                    f" {w.betti_above} above, map rank {w.rank}"
                )
            assert rep.ok


def main() -> None:
    path = ps.fixtures.e1()
    triangle = ps.fixtures.c1()
    describe(path, "three-vertex path, two parameters")
    describe(triangle, "hollow triangle, all grades (0, 0)")

    print("\nOff-grid probes are regular values (sublevels do not change):")
    for u in (G(1, "1/2"), G("1/2", "-1/2"), G(5, 5)):
        w = ps.is_homological_critical(path, 0, u)
        print(f"  probe {u}: witness = {w}")
        assert w is None


if __name__ == "__main__":
    main()
