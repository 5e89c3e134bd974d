"""Recheck every bundled fixture and print the verification table.

Usage: python3 scripts/verify_fixtures.py
"""

from __future__ import annotations

import sys

from gkh.coloring import ZeroDeterminantError, coloring_group, link_determinant
from gkh.fixtures import fixture, fixture_diagram, fixture_names
from gkh.verify import hypotheses_of, verify_gkh


def main() -> int:
    bad = 0
    print(f"{'name':<11} {'det':>5} {'factors':<16} {'flags':<7} verdict")
    for name in fixture_names():
        e = fixture(name)
        d = fixture_diagram(name)
        hyp = hypotheses_of(d)
        det = link_determinant(d)
        factors = coloring_group(d).invariant_factors if det else ()
        expected_ok = (
            det == e.determinant
            and factors == e.factors
            and hyp.alternating == e.alternating
            and hyp.reduced == e.reduced
            and hyp.prime == e.prime
        )
        flags = "".join(
            c if f else "-"
            for c, f in [("a", hyp.alternating), ("r", hyp.reduced), ("p", hyp.prime)]
        )
        if det == 0:
            verdict = "determinant 0, skipped"
        else:
            try:
                r = verify_gkh(d, name=name)
            except ZeroDeterminantError:
                verdict = "determinant 0, skipped"
            else:
                if r.guaranteed:
                    verdict = "pass" if r.passed else "FAIL"
                else:
                    verdict = f"{'pass' if r.passed else 'fails'} (not guaranteed)"
                verdict += f", t={r.t}, s={r.s}"
        if not expected_ok:
            verdict += "  EXPECTED VALUES MISMATCH"
            bad += 1
        print(f"{name:<11} {det:>5} {str(list(factors)):<16} {flags:<7} {verdict}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
