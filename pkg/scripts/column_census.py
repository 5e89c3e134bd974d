"""How hard is each fixture to distinguish: t, perfect columns, pseudo data.

For every bundled diagram with nonzero determinant this prints the group,
the exact minimum number t of coloring-matrix columns separating all arc
pairs, how many single columns do it alone, and what the pseudo-coloring
searches return. The non-alternating rows are the interesting ones: they
are exactly where pseudo colorings show up.

Usage: python3 scripts/column_census.py [--base N]
"""

from __future__ import annotations

import argparse
import sys

from gkh.coloring import (
    ZeroDeterminantError,
    coloring_group,
    distinguishing_report,
)
from gkh.fixtures import fixture_diagram, fixture_names
from gkh.pseudo import PseudoError, pseudo_from_inverse_columns, tunnel_pseudo


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--base", type=int, default=None)
    args = parser.parse_args()

    print(f"{'name':<11} {'group':<18} {'t':>4} {'perfect':>8} {'pseudo':>7} tunnel")
    for name in fixture_names():
        d = fixture_diagram(name)
        try:
            group = coloring_group(d, args.base)
        except ZeroDeterminantError:
            print(f"{name:<11} {'infinite':<18} {'-':>4} {'-':>8} {'-':>7} -")
            continue
        r = distinguishing_report(d, args.base)
        pseudos = pseudo_from_inverse_columns(d, args.base)
        try:
            tunnel = tunnel_pseudo(d)
            tunnel_note = (
                f"eps {tunnel.epsilon:+d} at "
                f"({tunnel.plus_crossing},{tunnel.eps_crossing})"
            )
        except PseudoError:
            tunnel_note = "-"
        label = (
            " + ".join(f"Z_{n}" for n in group.invariant_factors)
            if group.invariant_factors
            else "trivial"
        )
        t_label = str(r.t) if r.t is not None else "none"
        print(
            f"{name:<11} {label:<18} {t_label:>4} {len(r.perfect_columns):>8} "
            f"{len(pseudos):>7} {tunnel_note}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
