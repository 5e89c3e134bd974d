"""End-to-end verification that coloring matrices distinguish arcs.

The property under test, for a reduced alternating prime diagram with
nonzero determinant: (a) arcs map injectively into the rows of the
coloring matrix mod n1, (b) every arc pair is separated by some column,
and (c) s = number of invariant factors colorings built from the Smith
form suffice to separate everything. Reports are total: hypotheses are
recorded, the checks run regardless, and failures are listed rather than
raised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from math import gcd

from .codec import BraidWord
from .coloring import (
    ColoringGroup,
    CoverageError,
    FoxColoring,
    ZeroDeterminantError,
    coloring_group,
    coloring_matrix,
    crossing_matrix,
    distinguishing_report,
    link_determinant,
    minimal_distinguishing_set,
    _reduced_matrix,
)
from .diagram import Diagram, braid_closure, connected_sum
from .linalg import block_diag, smith_normal_form
from .pseudo import pseudo_from_inverse_columns


class VerifyError(Exception):
    pass


class GenerationError(VerifyError):
    pass


@dataclass(frozen=True)
class Hypotheses:
    """What the theorems assume; prime means the diagrammatic cut test."""

    alternating: bool
    reduced: bool
    prime: bool
    determinant: int
    components: int

    @property
    def satisfied(self) -> bool:
        return self.alternating and self.reduced and self.prime and self.determinant != 0


@dataclass(frozen=True)
class VerificationReport:
    name: str | None
    hypotheses: Hypotheses
    group: ColoringGroup
    base_arc: int
    part_a: bool
    part_b: bool
    failures: tuple[tuple[int, int], ...]
    t: int | None
    t_columns: tuple[int, ...]
    perfect_columns: tuple[int, ...]
    part_c: bool
    s: int
    distinguishing: tuple[FoxColoring, ...]
    inverse_pseudo_count: int

    @property
    def passed(self) -> bool:
        return self.part_a and self.part_b and self.part_c

    @property
    def guaranteed(self) -> bool:
        """Whether the hypotheses promise a pass in the first place."""
        return self.hypotheses.satisfied

    @property
    def pseudo_free(self) -> bool:
        return self.inverse_pseudo_count == 0


def hypotheses_of(d: Diagram) -> Hypotheses:
    return Hypotheses(
        alternating=d.is_alternating,
        reduced=d.is_reduced,
        prime=d.is_prime_diagram,
        determinant=link_determinant(d),
        components=len(d.spans),
    )


def verify_gkh(d: Diagram, name: str | None = None, base: int | None = None) -> VerificationReport:
    """Run parts (a), (b), (c) and the pseudo-coloring nonexistence check.

    Never aborts on failed hypotheses, so non-examples produce readable
    reports; a zero determinant is the one hard error.
    """
    hyp = hypotheses_of(d)
    if hyp.determinant == 0:
        raise ZeroDeterminantError("determinant 0: nothing to verify")
    group = coloring_group(d, base)
    cm = coloring_matrix(d, base)
    rows = cm.extended_rows()
    part_a = len(set(rows)) == len(rows)
    report = distinguishing_report(d, base)
    part_b = report.injective
    try:
        chosen = minimal_distinguishing_set(d, base)
        part_c = True
    except CoverageError:
        chosen = minimal_distinguishing_set(d, base, verify=False)
        part_c = False
    return VerificationReport(
        name=name,
        hypotheses=hyp,
        group=group,
        base_arc=cm.base_arc,
        part_a=part_a,
        part_b=part_b,
        failures=report.failures,
        t=report.t,
        t_columns=report.t_columns,
        perfect_columns=report.perfect_columns,
        part_c=part_c,
        s=group.s,
        distinguishing=chosen,
        inverse_pseudo_count=len(pseudo_from_inverse_columns(d, base)),
    )


@dataclass(frozen=True)
class ConnectedSumReport:
    """Checks specific to composite diagrams built as iterated sums."""

    diagram: Diagram
    group: ColoringGroup
    direct_sum_factors: tuple[int, ...]
    junction_pairs: tuple[tuple[int, int], ...]
    joining_equal: bool
    failures: tuple[tuple[int, int], ...]

    @property
    def group_matches(self) -> bool:
        return self.group.invariant_factors == self.direct_sum_factors

    @property
    def failures_are_junctions(self) -> bool:
        return {frozenset(p) for p in self.failures} == {
            frozenset(p) for p in self.junction_pairs
        }

    @property
    def passed(self) -> bool:
        return self.joining_equal and self.failures_are_junctions and self.group_matches


def verify_connected_sum(parts: list[Diagram]) -> ConnectedSumReport:
    """Verify the composite picture: summands keep their groups, and only
    the arcs joining consecutive summands resist distinguishing.

    Each part must be nonempty with nonzero determinant; a single part
    degenerates to the plain distinguishing checks with no junctions.
    """
    if not parts:
        raise VerifyError("need at least one summand")
    blocks = []
    for part in parts:
        if link_determinant(part) == 0:
            raise ZeroDeterminantError("summand with determinant 0")
        blocks.append(_reduced_matrix(part, None))
    total = parts[0]
    for part in parts[1:]:
        total = connected_sum(total, part)
    group = coloring_group(total)
    combined = smith_normal_form(block_diag(blocks)).diagonal
    direct_sum = tuple(sorted((x for x in combined if x > 1), reverse=True))
    junction_pairs = total.junction_arc_pairs
    cm = coloring_matrix(total)
    rows = cm.extended_rows()
    joining_equal = all(rows[a] == rows[b] for a, b in junction_pairs)
    report = distinguishing_report(total)
    return ConnectedSumReport(
        diagram=total,
        group=group,
        direct_sum_factors=direct_sum,
        junction_pairs=junction_pairs,
        joining_equal=joining_equal,
        failures=report.failures,
    )


def brute_force_coloring_count(d: Diagram, k: int, limit: int = 1 << 24) -> int:
    """Count Fox k-colorings by checking every assignment, no linear algebra.

    Deliberately dumb so it can stand as an oracle against the closed
    form; the assignment space k**arcs is capped by limit.
    """
    arcs = len(d.arcs)
    if k < 1:
        raise VerifyError("modulus must be >= 1")
    if k ** arcs > limit:
        raise VerifyError(f"{k}**{arcs} assignments exceed the limit {limit}")
    triples = [
        (d.arc_of(c.over_in), d.arc_of(c.under_in), d.arc_of(c.under_out))
        for c in d.crossings
    ]
    count = 0
    for colors in product(range(k), repeat=arcs):
        if all((2 * colors[b] - colors[a] - colors[c]) % k == 0 for b, a, c in triples):
            count += 1
    return count


def closed_form_count(d: Diagram, k: int) -> int:
    """k * product of gcd(n_i, k) over the invariant factors.

    Free factors of the reduced coloring group enter as gcd(0, k) = k, so
    split diagrams with determinant 0 still get an exact count.
    """
    c = _reduced_matrix(d, None)
    diagonal = smith_normal_form(c).diagonal
    total = k
    for x in diagonal:
        total *= gcd(x, k) if x else k
    return total * k ** (c.cols - len(diagonal))


def random_alternating_diagram(
    max_crossings: int, seed: int, max_attempts: int = 400
) -> Diagram:
    """A random reduced alternating prime diagram with nonzero determinant.

    Draws braid words whose letter signs follow generator parity, which
    makes the closure alternating, then filters. Deterministic per seed.
    """
    if max_crossings < 3:
        raise GenerationError("need at least 3 crossings")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        strands = rng.randint(2, 4)
        length = rng.randint(3, max_crossings)
        polarity = rng.choice((0, 1))
        letters = []
        for _ in range(length):
            g = rng.randint(1, strands - 1)
            letters.append(g if g % 2 == polarity else -g)
        if {abs(x) for x in letters} != set(range(1, strands)):
            continue
        d = braid_closure(BraidWord(strands, tuple(letters)))
        if (
            d.is_alternating
            and d.is_reduced
            and d.is_prime_diagram
            and link_determinant(d) != 0
        ):
            return d
    raise GenerationError(f"no usable diagram after {max_attempts} attempts")
