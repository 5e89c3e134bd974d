"""Pseudo colorings: integer assignments failing the Fox relation at two crossings.

An epsilon-pseudo coloring satisfies the crossing relation everywhere
except at two crossings, where 2b - a - c equals +1 and epsilon (+1 or
-1). Reduced prime alternating diagrams admit none, so finding one
certifies non-alternation; conversely every non-alternating diagram
yields one through a tunnel, a stretch of strand passing under twice in
a row. Integral columns of C^(-1) are the other source.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .coloring import _reduced_matrix, _resolve_base, crossing_matrix
from .diagram import Diagram
from .linalg import IntMatrix, rational_inverse, smith_normal_form


class PseudoError(Exception):
    pass


@dataclass(frozen=True)
class PseudoColoring:
    """Integer arc colors whose defect is +1 at one crossing, epsilon at another."""

    colors: tuple[int, ...]
    defects: tuple[int, ...]
    plus_crossing: int
    eps_crossing: int
    epsilon: int
    column: int | None = None

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise PseudoError("epsilon must be +1 or -1")
        if self.plus_crossing == self.eps_crossing:
            raise PseudoError("the two defective crossings must differ")
        expected = {self.plus_crossing: 1, self.eps_crossing: self.epsilon}
        actual = {i: v for i, v in enumerate(self.defects) if v}
        if actual != expected:
            raise PseudoError(f"defects {actual} do not match {expected}")


@dataclass(frozen=True)
class RowRelation:
    """Primitive integer vector r with r . rows of C'(D) = 0."""

    coefficients: tuple[int, ...]


@dataclass(frozen=True)
class Classification:
    """What an integer arc assignment is: a Fox coloring over Z, a pseudo
    coloring, or neither."""

    kind: str
    colors: tuple[int, ...]
    defects: tuple[int, ...]
    pseudo: PseudoColoring | None = None


def _normalized(vector: tuple[int, ...]) -> tuple[int, ...]:
    content = 0
    for x in vector:
        content = gcd(content, x)
    if content > 1:
        vector = tuple(x // content for x in vector)
    lead = next((x for x in vector if x), 0)
    if lead < 0:
        vector = tuple(-x for x in vector)
    return vector


def row_relation_basis(d: Diagram) -> tuple[RowRelation, ...]:
    """A lattice basis for the left kernel of C'(D), each vector normalized."""
    cprime = crossing_matrix(d)
    transposed = cprime.transpose()
    snf = smith_normal_form(transposed)
    diag = snf.diagonal
    out = []
    for i in range(transposed.cols):
        if i >= len(diag) or diag[i] == 0:
            vector = snf.v.col(i)
            assert all(x == 0 for x in transposed.mul_vector(vector))
            out.append(RowRelation(_normalized(tuple(vector))))
    return tuple(out)


def row_relation(d: Diagram) -> RowRelation:
    """The relation among the rows of C'(D), when it is unique up to scale."""
    basis = row_relation_basis(d)
    if len(basis) != 1:
        raise PseudoError(
            f"left kernel of the crossing matrix has rank {len(basis)}, not 1"
        )
    return basis[0]


def classify_assignment(
    d: Diagram, colors, column: int | None = None
) -> Classification:
    """Compute the defects C'(D) . colors and classify the assignment.

    Defects {-1,-1} are negated to {+1,+1} so the reported convention is
    always +1 and epsilon; on a +1/+1 tie the lower crossing index is the
    plus crossing.
    """
    colors = tuple(colors)
    cprime = crossing_matrix(d)
    if len(colors) != cprime.cols:
        raise PseudoError(f"{len(colors)} colors for {cprime.cols} arcs")
    defects = tuple(cprime.mul_vector(colors))
    nonzero = [(i, v) for i, v in enumerate(defects) if v]
    if not nonzero:
        return Classification("fox", colors, defects)
    if len(nonzero) == 2 and {abs(v) for _, v in nonzero} == {1}:
        if all(v == -1 for _, v in nonzero):
            colors = tuple(-x for x in colors)
            defects = tuple(-x for x in defects)
            nonzero = [(i, -v) for i, v in nonzero]
        plus = min(i for i, v in nonzero if v == 1)
        eps_i, epsilon = next((i, v) for i, v in nonzero if i != plus)
        pseudo = PseudoColoring(
            colors=colors,
            defects=defects,
            plus_crossing=plus,
            eps_crossing=eps_i,
            epsilon=epsilon,
            column=column,
        )
        return Classification("pseudo", colors, defects, pseudo)
    return Classification("neither", colors, defects)


def pseudo_from_inverse_columns(
    d: Diagram, base: int | None = None
) -> tuple[PseudoColoring, ...]:
    """Pseudo colorings read off the integral columns of C(D)^(-1).

    Each integral column, extended by 0 on the base arc, has defect +1 at
    its own crossing; the base row defect follows from the row relation
    and the classification keeps exactly the unit cases.
    """
    c = _reduced_matrix(d, base)
    base_arc = _resolve_base(d, base)
    inverse = rational_inverse(c)
    found = []
    for j in range(c.cols):
        entries = [inverse[i][j] for i in range(c.rows)]
        if any(x.denominator != 1 for x in entries):
            continue
        column = [int(x) for x in entries]
        colors = column[:base_arc] + [0] + column[base_arc:]
        result = classify_assignment(d, colors, column=j)
        if result.kind == "pseudo":
            found.append(result.pseudo)
    return tuple(found)


def _passages(d: Diagram) -> tuple[tuple[tuple[int, bool], ...], ...]:
    """Per component, the crossings met along the strand with an under flag."""
    out = []
    for start, end in d.spans:
        walk = []
        for e in range(start, end + 1):
            crossing, slot = d._head_of[e]
            walk.append((crossing, slot == "under"))
        out.append(tuple(walk))
    return tuple(out)


def tunnel_pseudo(d: Diagram) -> PseudoColoring:
    """A +1-pseudo coloring from a tunnel, two consecutive underpasses.

    The arc between the two underpasses gets color -1 and every other arc
    0, leaving defect +1 at both tunnel crossings. Alternating diagrams
    have no tunnel and are rejected.
    """
    if d.is_alternating:
        raise PseudoError("alternating diagram: no tunnel exists")
    for (start, _), walk in zip(d.spans, _passages(d)):
        if len(walk) < 2:
            # a lone underpass wraps onto itself and gives defect 2
            continue
        for i, (_, under_here) in enumerate(walk):
            j = (i + 1) % len(walk)
            if under_here and walk[j][1]:
                tunnel_arc = d.arc_of(start + j)
                colors = [0] * len(d.arcs)
                colors[tunnel_arc] = -1
                result = classify_assignment(d, colors)
                assert result.kind == "pseudo" and result.pseudo is not None
                return result.pseudo
    raise PseudoError("no usable tunnel: only degenerate underpass loops")
