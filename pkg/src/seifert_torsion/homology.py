"""Integer Smith normal form and the homology it computes.

smith_normal_form is a deterministic elimination over the integers: pick the
minimum-absolute-value nonzero entry of the working submatrix (ties broken by
lowest (row, col)), move it to the pivot position, reduce its row and column
Euclidean-style, and enforce the divisibility chain before moving on.  All
row operations are mirrored on U and all column operations on V, so
U * A * V = D holds exactly with U, V unimodular.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import product as _cartesian
from math import prod

from .errors import CapExceeded, ChernNumberZero, ChernZeroWarning
from .seifert import (
    IntegerMatrix,
    SeifertData,
    chern_number,
    relation_matrix,
    validate_seifert,
)


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = D with U, V unimodular and D in Smith normal form."""

    u: IntegerMatrix
    d: IntegerMatrix
    v: IntegerMatrix

    def diagonal(self) -> tuple[int, ...]:
        return self.d.diagonal()


@dataclass(frozen=True)
class AbelianGroupDecomposition:
    """Z^rank plus a product of cyclic groups of the given invariant factors.

    Factors are > 1 and each divides the next.
    """

    rank: int
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be >= 0")
        factors = tuple(self.invariant_factors)
        for i, f in enumerate(factors):
            if f < 2:
                raise ValueError(f"invariant factor {f} < 2")
            if i and factors[i] % factors[i - 1]:
                raise ValueError("invariant factors must form a divisibility chain")
        object.__setattr__(self, "invariant_factors", factors)

    def torsion_order(self) -> int:
        return prod(self.invariant_factors)


@dataclass(frozen=True)
class ModuliDescription:
    """Connected components and dimension of the flat-connection moduli space."""

    component_count: int
    component_dimension: int
    gauge_rank: int
    torsion_factors: tuple[int, ...]


def _swap_rows(m, u, i, j):
    m[i], m[j] = m[j], m[i]
    u[i], u[j] = u[j], u[i]


def _swap_cols(m, v, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]
    for row in v:
        row[i], row[j] = row[j], row[i]


def _negate_row(m, u, i):
    m[i] = [-e for e in m[i]]
    u[i] = [-e for e in u[i]]


def _place_pivot(m, u, v, t) -> bool:
    """Move the min-|entry| of the submatrix m[t:, t:] to (t, t), made positive.

    Ties go to the smallest (row, col).  Returns False when the submatrix is
    all zero.
    """
    rows, cols = len(m), len(m[0])
    best = None
    best_abs = None
    for i in range(t, rows):
        for j in range(t, cols):
            val = m[i][j]
            if val and (best is None or abs(val) < best_abs):
                best, best_abs = (i, j), abs(val)
    if best is None:
        return False
    i, j = best
    if i != t:
        _swap_rows(m, u, i, t)
    if j != t:
        _swap_cols(m, v, j, t)
    if m[t][t] < 0:
        _negate_row(m, u, t)
    return True


def smith_normal_form(a: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form over Z, deterministic for a given input.

    The diagonal of D is nonnegative, zeros come last, and each nonzero
    entry divides the next.
    """
    rows, cols = a.rows, a.cols
    m = a.to_rows()
    u = IntegerMatrix.identity(rows).to_rows()
    v = IntegerMatrix.identity(cols).to_rows()

    for t in range(min(rows, cols)):
        if not _place_pivot(m, u, v, t):
            break
        while True:
            pivot = m[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = m[i][t] // pivot
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if m[i][t]:
                    clean = False  # remainder smaller than the pivot survives
            for j in range(t + 1, cols):
                q = m[t][j] // pivot
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                if m[t][j]:
                    clean = False
            if not clean:
                _place_pivot(m, u, v, t)  # a strictly smaller pivot exists
                continue
            # row and column t are clear; force pivot | every remaining entry
            pivot = m[t][t]
            bad = next(
                (
                    i
                    for i in range(t + 1, rows)
                    if any(m[i][j] % pivot for j in range(t + 1, cols))
                ),
                None,
            )
            if bad is None:
                break
            m[t] = [x + y for x, y in zip(m[t], m[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]

    return SmithDecomposition(
        IntegerMatrix.from_rows(u),
        IntegerMatrix.from_rows(m),
        IntegerMatrix.from_rows(v),
    )


def first_homology(data: SeifertData) -> AbelianGroupDecomposition:
    """H1 as Z^rank plus cyclic factors, from the abelianized relations.

    The genus generators contribute Z^{2g} directly; the cokernel of the
    relation matrix contributes the rest.  rank = 2g exactly when c1 != 0,
    and 2g + 1 when c1 = 0.
    """
    d = validate_seifert(data)
    snf = smith_normal_form(relation_matrix(d))
    diag = snf.diagonal()
    free = sum(1 for e in diag if e == 0)
    factors = tuple(e for e in diag if e > 1)
    return AbelianGroupDecomposition(2 * d.genus + free, factors)


def torsion_h2_order(data: SeifertData, gauge_rank: int = 1) -> int:
    """Order of the torsion classes of rank-N flat bundles: |Tors H1| ** N.

    When c1 = 0 the identity behind this power law is not asserted; the
    value is still returned, with a ChernZeroWarning.
    """
    d = validate_seifert(data)
    if gauge_rank < 1:
        raise ValueError(f"gauge rank must be >= 1, got {gauge_rank}")
    order = first_homology(d).torsion_order()
    if chern_number(d) == 0:
        warnings.warn(
            "c1 = 0: torsion-power identity not asserted for this datum",
            ChernZeroWarning,
            stacklevel=2,
        )
    return order**gauge_rank


def moduli_description(data: SeifertData, gauge_rank: int = 1) -> ModuliDescription:
    """Flat-moduli description for gauge rank N: requires c1 != 0.

    The moduli space is a disjoint union of |Tors H1|^N tori of dimension
    2 g N; torsion_factors lists the invariant factors of the full torsion
    label group (N copies of the H1 factors, re-sorted into a chain).
    """
    d = validate_seifert(data)
    if gauge_rank < 1:
        raise ValueError(f"gauge rank must be >= 1, got {gauge_rank}")
    if chern_number(d) == 0:
        raise ChernNumberZero()
    h1 = first_homology(d)
    factors = tuple(sorted(h1.invariant_factors * gauge_rank))
    return ModuliDescription(
        component_count=h1.torsion_order() ** gauge_rank,
        component_dimension=2 * d.genus * gauge_rank,
        gauge_rank=gauge_rank,
        torsion_factors=factors,
    )


def enumerate_torsion_characters(
    decomposition: AbelianGroupDecomposition, cap: int = 100_000
) -> list[tuple[int, ...]]:
    """All characters of the torsion part, in lexicographic order.

    A character of Z/f1 x ... x Z/fk is the exponent tuple (e1, ..., ek)
    with 0 <= ei < fi.  Raises CapExceeded if the group order exceeds cap.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    order = decomposition.torsion_order()
    if order > cap:
        raise CapExceeded(order, cap)
    return list(_cartesian(*(range(f) for f in decomposition.invariant_factors)))
