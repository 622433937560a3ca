"""Dense exact linear algebra over fields.

Systems are affine-linear: named variables, a coefficient matrix, and a
right-hand side, all over one exact field.  Elimination uses the fixed
pivoting rule "first nonzero entry in column order", which makes every
reduced form, kernel basis, and report deterministic.

The operations are rank, affine solving (inconsistency is a status, not
an error), projection of the solution set onto a subset of the variables
(``eliminate``), and row-space comparison of two systems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .rings import Element, Ring, RingMismatchError

Row = list[Element]


class LinearSystem:
    """An affine-linear system  A x = b  with named variables."""

    def __init__(self, variables: Sequence[str], rows: Iterable[Sequence[Element]],
                 rhs: Iterable[Element], ring: Ring):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")
        self.ring = ring
        self.rows = [list(r) for r in rows]
        self.rhs = list(rhs)
        if len(self.rows) != len(self.rhs):
            raise ValueError("row/rhs count mismatch")
        for row in self.rows:
            if len(row) != len(self.variables):
                raise ValueError("row width does not match variable count")
            for entry in row:
                if entry.ring != ring:
                    raise RingMismatchError("matrix entry from a foreign ring")
        for entry in self.rhs:
            if entry.ring != ring:
                raise RingMismatchError("rhs entry from a foreign ring")

    def __repr__(self):
        return (f"LinearSystem({len(self.rows)} equations, "
                f"{len(self.variables)} variables over {self.ring!r})")

    def residuals(self, assignment: dict[str, Element]) -> list[Element]:
        """A x - b for a full assignment; all zero iff it solves the system."""
        out = []
        for row, b in zip(self.rows, self.rhs):
            acc = self.ring.zero()
            for var, coeff in zip(self.variables, row):
                acc = acc + coeff * assignment[var]
            out.append(acc - b)
        return out


@dataclass
class SolutionSet:
    """Outcome of solving an affine system exactly."""

    status: str  # "affine" or "inconsistent"
    variables: tuple[str, ...] = ()
    particular: dict[str, Element] = field(default_factory=dict)
    kernel_basis: list[dict[str, Element]] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        if self.status != "affine":
            raise ValueError("inconsistent system has no dimension")
        return len(self.kernel_basis)

    def is_consistent(self) -> bool:
        return self.status == "affine"


def _row_echelon(rows: list[Row], ring: Ring) -> tuple[list[Row], list[int]]:
    """In-place forward elimination; returns (rows, pivot column indices)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows: Iterable[Sequence[Element]], ring: Ring) -> int:
    """Row rank under exact Gaussian elimination."""
    work = [list(r) for r in rows]
    _, pivots = _row_echelon(work, ring)
    return len(pivots)


def transpose(rows: Sequence[Sequence[Element]]) -> list[Row]:
    if not rows:
        return []
    return [list(col) for col in zip(*rows)]


def solve_affine(system: LinearSystem) -> SolutionSet:
    """Particular solution plus kernel basis, or the inconsistent status."""
    ring = system.ring
    n = len(system.variables)
    augmented = [row + [b] for row, b in zip(system.rows, system.rhs)]
    augmented, pivots = _row_echelon(augmented, ring)
    if n in pivots:
        return SolutionSet(status="inconsistent", variables=system.variables)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]

    particular = {v: ring.zero() for v in system.variables}
    for r, c in enumerate(pivots):
        particular[system.variables[c]] = augmented[r][n]

    kernel_basis = []
    for fc in free_cols:
        vec = {v: ring.zero() for v in system.variables}
        vec[system.variables[fc]] = ring.one()
        for r, c in enumerate(pivots):
            vec[system.variables[c]] = -augmented[r][fc]
        kernel_basis.append(vec)

    return SolutionSet(status="affine", variables=system.variables,
                       particular=particular, kernel_basis=kernel_basis)


def eliminate(system: LinearSystem, aux: Iterable[str]) -> LinearSystem:
    """Project the solution set onto the non-auxiliary variables.

    Columns are reordered so the auxiliaries come first; after forward
    elimination, the rows with no auxiliary support describe exactly the
    projection (this is where exactness over a field matters).
    """
    aux = list(aux)
    for name in aux:
        if name not in system.variables:
            raise KeyError(f"unknown variable {name!r}")
    aux_set = set(aux)
    keep = [v for v in system.variables if v not in aux_set]
    aux_idx = [system.variables.index(v) for v in aux]
    keep_idx = [system.variables.index(v) for v in keep]

    ring = system.ring
    reordered = [[row[i] for i in aux_idx] + [row[i] for i in keep_idx] + [b]
                 for row, b in zip(system.rows, system.rhs)]
    reordered, pivots = _row_echelon(reordered, ring)
    na = len(aux)
    out_rows, out_rhs = [], []
    for r, c in enumerate(pivots):
        if c < na:
            continue  # row still involves an auxiliary; not part of the projection
        out_rows.append(reordered[r][na:na + len(keep)])
        out_rhs.append(reordered[r][-1])
    return LinearSystem(keep, out_rows, out_rhs, ring)


def rowspace_equal(s1: LinearSystem, s2: LinearSystem) -> bool:
    """True iff the augmented row spaces coincide (mutual containment)."""
    if set(s1.variables) != set(s2.variables):
        raise ValueError("variable sets differ")
    order = s1.variables
    idx2 = [s2.variables.index(v) for v in order]
    rows1 = [row + [b] for row, b in zip(s1.rows, s1.rhs)]
    rows2 = [[row[i] for i in idx2] + [b] for row, b in zip(s2.rows, s2.rhs)]
    ring = s1.ring
    r1 = rank(rows1, ring)
    r2 = rank(rows2, ring)
    if r1 != r2:
        return False
    return rank(rows1 + rows2, ring) == r1
