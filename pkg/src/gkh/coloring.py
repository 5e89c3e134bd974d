"""Fox colorings: crossing matrices, coloring groups, distinguishing data.

A Fox k-coloring assigns an element of Z_k to every arc so that twice the
over-arc color equals the sum of the two under-arc colors at each crossing.
The crossing matrix C' encodes these relations with one row per crossing
and one column per arc; deleting a base row and column gives the reduced
matrix C whose |det| is the diagram determinant and whose cokernel is the
reduced coloring group.

With n1 the largest invariant factor of that group, L = n1 * C^(-1) is an
integer matrix and its columns mod n1 are Fox n1-colorings with the base
arc colored 0. The distinguishing report records which arc pairs those
columns separate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import gcd, prod

from .diagram import Diagram
from .linalg import (
    IntMatrix,
    count_solutions_mod,
    determinant,
    scaled_inverse,
    smith_normal_form,
)


class ColoringError(Exception):
    pass


class ZeroDeterminantError(ColoringError):
    pass


class EnumerationLimitError(ColoringError):
    """Enumeration space too large; carries the count as a fallback."""

    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(
            f"enumeration space exceeds {limit}; the count alone is {count}"
        )


class CoverageError(ColoringError):
    pass


@dataclass(frozen=True)
class FoxColoring:
    """Arc colors in Z_modulus; modulus 1 means only the zero coloring."""

    modulus: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ColoringError("modulus must be >= 1")
        object.__setattr__(
            self, "colors", tuple(c % self.modulus for c in self.colors)
        )


@dataclass(frozen=True)
class ColoringGroup:
    """Reduced coloring group as invariant factors n1 >= ... >= ns >= 2."""

    invariant_factors: tuple[int, ...]

    @property
    def determinant(self) -> int:
        return prod(self.invariant_factors)

    @property
    def annihilator(self) -> int:
        """The largest factor n1; 1 for the trivial group."""
        return self.invariant_factors[0] if self.invariant_factors else 1

    @property
    def s(self) -> int:
        return len(self.invariant_factors)


def crossing_matrix(d: Diagram) -> IntMatrix:
    """C'(D): rows crossings, columns arcs, row 2*over - under_in - under_out."""
    width = len(d.arcs)
    rows = []
    for c in d.crossings:
        row = [0] * width
        row[d.arc_of(c.over_in)] += 2
        row[d.arc_of(c.under_in)] -= 1
        row[d.arc_of(c.under_out)] -= 1
        rows.append(row)
    return IntMatrix.from_rows(rows)


def _resolve_base(d: Diagram, base: int | None) -> int:
    count = len(d.arcs)
    if base is None:
        return count - 1
    if not 0 <= base < count:
        raise ColoringError(f"base arc {base} out of range for {count} arcs")
    return base


def reduced_crossing_matrix(c_prime: IntMatrix, base: int | None = None) -> IntMatrix:
    """C(D): the crossing matrix with the base row and column deleted.

    base indexes an arc, default the last one; the row of the same index
    goes with it, which matches moving the base to the end and dropping
    the final row and column.
    """
    if not c_prime.is_square:
        raise ColoringError("crossing matrix must be square to reduce")
    if base is None:
        base = c_prime.rows - 1
    if not 0 <= base < c_prime.rows:
        raise ColoringError(f"base arc {base} out of range for {c_prime.rows} arcs")
    return c_prime.without_row_col(base, base)


def _reduced_matrix(d: Diagram, base: int | None) -> IntMatrix:
    cprime = crossing_matrix(d)
    if not cprime.is_square:
        raise ZeroDeterminantError(
            "some component never passes under; the crossing matrix is not square"
        )
    return reduced_crossing_matrix(cprime, _resolve_base(d, base))


def link_determinant(d: Diagram, base: int | None = None) -> int:
    """delta(D) = |det C(D)|; 0 when the crossing matrix is not square."""
    try:
        return abs(determinant(_reduced_matrix(d, base)))
    except ZeroDeterminantError:
        return 0


def coloring_group(d: Diagram, base: int | None = None) -> ColoringGroup:
    c = _reduced_matrix(d, base)
    diag = smith_normal_form(c).diagonal
    if any(x == 0 for x in diag):
        raise ZeroDeterminantError("determinant 0: the reduced coloring group is infinite")
    return ColoringGroup(tuple(sorted((x for x in diag if x > 1), reverse=True)))


@dataclass(frozen=True)
class ColoringMatrix:
    """The pair C, L = n1 * C^(-1) for a chosen base arc."""

    base_arc: int
    modulus: int
    arc_count: int
    c: IntMatrix
    l: IntMatrix

    @cached_property
    def l_mod(self) -> IntMatrix:
        return self.l.mod(self.modulus)

    @property
    def arc_indices(self) -> tuple[int, ...]:
        """Arc behind each row/column of the reduced matrices."""
        return tuple(a for a in range(self.arc_count) if a != self.base_arc)

    def extended_rows(self) -> tuple[tuple[int, ...], ...]:
        """One row of L mod n1 per arc, the base arc contributing zeros."""
        width = self.l.cols
        rows = []
        k = 0
        for a in range(self.arc_count):
            if a == self.base_arc:
                rows.append((0,) * width)
            else:
                rows.append(self.l_mod.row(k))
                k += 1
        return tuple(rows)

    def column_coloring(self, j: int) -> FoxColoring:
        """The Fox n1-coloring read off column j of L, base arc colored 0."""
        if not 0 <= j < self.l.cols:
            raise ColoringError(f"column {j} out of range for {self.l.cols} columns")
        rows = self.extended_rows()
        return FoxColoring(self.modulus, tuple(r[j] for r in rows))


def coloring_matrix(d: Diagram, base: int | None = None) -> ColoringMatrix:
    group = coloring_group(d, base)
    c = _reduced_matrix(d, base)
    n1 = group.annihilator
    # n1 annihilates the cokernel, so n1 * C^(-1) is integral
    l = scaled_inverse(c, n1)
    return ColoringMatrix(
        base_arc=_resolve_base(d, base),
        modulus=n1,
        arc_count=len(d.arcs),
        c=c,
        l=l,
    )


def is_fox_coloring(d: Diagram, colors, k: int) -> bool:
    """Check the coloring relation at every crossing, colors indexed by arc."""
    colors = tuple(colors)
    if len(colors) != len(d.arcs):
        raise ColoringError(
            f"{len(colors)} colors for {len(d.arcs)} arcs"
        )
    if k < 1:
        raise ColoringError("modulus must be >= 1")
    return all(
        (
            2 * colors[d.arc_of(c.over_in)]
            - colors[d.arc_of(c.under_in)]
            - colors[d.arc_of(c.under_out)]
        )
        % k
        == 0
        for c in d.crossings
    )


def count_colorings(d: Diagram, k: int) -> int:
    """Number of Fox k-colorings, constant colorings included."""
    return count_solutions_mod(crossing_matrix(d), k)


def enumerate_colorings(d: Diagram, k: int, limit: int = 1 << 24) -> tuple[FoxColoring, ...]:
    """All Fox k-colorings, via the Smith form of the crossing matrix.

    Bails out once the assignment space k**arcs passes limit; the error
    still carries the count, so callers can fall back to it.
    """
    cprime = crossing_matrix(d)
    if k ** cprime.cols > limit:
        raise EnumerationLimitError(count_solutions_mod(cprime, k), limit)
    snf = smith_normal_form(cprime)
    axes = []
    for x in snf.diagonal:
        g = gcd(x, k) if x else k
        axes.append(range(0, k, k // g))
    axes.extend([range(k)] * (cprime.cols - len(snf.diagonal)))
    out = []
    for y in product(*axes):
        out.append(FoxColoring(k, snf.v.mul_vector(y)))
    return tuple(out)


@dataclass(frozen=True)
class DistinguishingReport:
    """Which arc pairs the columns of L mod n1 tell apart, and how few suffice.

    separators lists every arc pair i < j with the least column whose
    colorings differ on the two arcs, or None; t is the size of a smallest
    set of columns separating all pairs, with t_columns the first such set
    in lexicographic order.
    """

    base_arc: int
    modulus: int
    arc_count: int
    separators: tuple[tuple[int, int, int | None], ...]
    perfect_columns: tuple[int, ...]
    t: int | None
    t_columns: tuple[int, ...]

    @property
    def column_count(self) -> int:
        return self.arc_count - 1

    @property
    def failures(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j, c in self.separators if c is None)

    @property
    def injective(self) -> bool:
        return not self.failures


def distinguishing_report(d: Diagram, base: int | None = None) -> DistinguishingReport:
    cm = coloring_matrix(d, base)
    rows = cm.extended_rows()
    n1 = cm.modulus
    width = cm.l.cols
    separators = []
    masks = [0] * width
    pair_index = 0
    for i, j in combinations(range(cm.arc_count), 2):
        least = None
        for col in range(width):
            if (rows[i][col] - rows[j][col]) % n1 != 0:
                if least is None:
                    least = col
                masks[col] |= 1 << pair_index
        separators.append((i, j, least))
        pair_index += 1
    perfect = tuple(
        col
        for col in range(width)
        if len({rows[a][col] % n1 for a in range(cm.arc_count)}) == cm.arc_count
    )
    t, t_columns = _minimum_cover(masks, pair_index)
    if any(least is None for _, _, least in separators):
        t, t_columns = None, ()
    return DistinguishingReport(
        base_arc=cm.base_arc,
        modulus=n1,
        arc_count=cm.arc_count,
        separators=tuple(separators),
        perfect_columns=perfect,
        t=t,
        t_columns=t_columns,
    )


def _minimum_cover(masks, pair_count):
    """Smallest column set covering all pairs, exact, lexicographic first."""
    full = (1 << pair_count) - 1
    if full == 0:
        return 0, ()
    if sum_mask(masks) != full:
        return None, ()
    for size in range(1, len(masks) + 1):
        for combo in combinations(range(len(masks)), size):
            acc = 0
            for c in combo:
                acc |= masks[c]
            if acc == full:
                return size, combo
    return None, ()


def sum_mask(masks) -> int:
    acc = 0
    for m in masks:
        acc |= m
    return acc


def minimal_distinguishing_set(
    d: Diagram, base: int | None = None, verify: bool = True
) -> tuple[FoxColoring, ...]:
    """One Fox n1-coloring per invariant factor, read off the Smith form.

    For each factor n_i the coloring is (n1 / n_i) times the matching
    column of V, where C = U^(-1) D V^(-1); together they separate exactly
    the arc pairs that any n1-colorings can. With verify=True a pair left
    together by all of them raises CoverageError.
    """
    c = _reduced_matrix(d, base)
    group = coloring_group(d, base)
    n1 = group.annihilator
    snf = smith_normal_form(c)
    base_arc = _resolve_base(d, base)
    arc_count = len(d.arcs)
    picked = [(x, i) for i, x in enumerate(snf.diagonal) if x > 1]
    picked.sort(key=lambda p: -p[0])
    colorings = []
    for factor, i in picked:
        col = snf.v.col(i)
        scale = n1 // factor
        colors = []
        k = 0
        for a in range(arc_count):
            if a == base_arc:
                colors.append(0)
            else:
                colors.append(scale * col[k] % n1)
                k += 1
        colorings.append(FoxColoring(n1, tuple(colors)))
    assert all(is_fox_coloring(d, f.colors, n1) for f in colorings)
    if verify:
        left_together = [
            (i, j)
            for i, j in combinations(range(arc_count), 2)
            if all(f.colors[i] == f.colors[j] for f in colorings)
        ]
        if left_together:
            raise CoverageError(
                f"arc pairs {left_together} are not distinguished"
            )
    return tuple(colorings)
