"""Exact linear algebra: rank, affine solving, elimination, row spaces."""

import itertools
import random

import pytest

from stablelimit import (LinearSystem, PrimeField, QuadraticField, eliminate,
                         rank, rowspace_equal, solve_affine)
from stablelimit.linalg import transpose

F7 = PrimeField(7)
F49 = QuadraticField(7)


def mat(rows, ring=F7):
    return [[ring.from_int(x) for x in row] for row in rows]


def rand_mat(rng, nrows, ncols, ring=F7):
    return [[ring.from_int(rng.randrange(7)) for _ in range(ncols)]
            for _ in range(nrows)]


# ----------------------------------------------------------------------
# rank


def test_rank_examples():
    identity = mat([[1 if i == j else 0 for j in range(5)] for i in range(5)])
    assert rank(identity, F7) == 5
    assert rank(mat([[0, 0], [0, 0], [0, 0]]), F7) == 0
    assert rank([], F7) == 0


def reversed_pivot_rank(rows, ring):
    """Independent second elimination running columns right to left."""
    work = [list(reversed(r)) for r in rows]
    r = 0
    ncols = len(work[0]) if work else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work))
                    if not work[i][c].is_zero()), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = work[r][c].inverse()
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i != r and not work[i][c].is_zero():
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
    return r


def test_rank_against_dual_pivoting_oracle():
    rng = random.Random(7)
    for _ in range(30):
        rows = rand_mat(rng, 6, 9)
        assert rank(rows, F7) == reversed_pivot_rank(rows, F7)


def test_rank_transpose_invariance():
    rng = random.Random(13)
    for _ in range(100):
        rows = rand_mat(rng, rng.randrange(1, 7), rng.randrange(1, 7))
        assert rank(rows, F7) == rank(transpose(rows), F7)


def test_rank_plus_nullity():
    rng = random.Random(19)
    for _ in range(60):
        ncols = rng.randrange(1, 7)
        rows = rand_mat(rng, rng.randrange(1, 7), ncols)
        names = [f"v{i}" for i in range(ncols)]
        system = LinearSystem(names, rows, [F7.zero()] * len(rows), F7)
        sol = solve_affine(system)
        assert sol.is_consistent()
        assert rank(rows, F7) + sol.dimension == ncols


# ----------------------------------------------------------------------
# affine solving


def test_solve_affine_examples():
    s = LinearSystem(("x", "y"), mat([[1, 1]]), [F7.one()], F7)
    sol = solve_affine(s)
    assert sol.is_consistent() and sol.dimension == 1
    assert all(v.is_zero() for v in s.residuals(sol.particular))

    s2 = LinearSystem(("x",), mat([[1], [1]]),
                      [F7.zero(), F7.one()], F7)
    assert solve_affine(s2).status == "inconsistent"


def test_solutions_satisfy_system_exactly():
    rng = random.Random(29)
    for _ in range(50):
        ncols = rng.randrange(1, 6)
        nrows = rng.randrange(1, 6)
        rows = rand_mat(rng, nrows, ncols, F49)
        # make the system consistent by construction
        secret = [F49.random_element(rng) for _ in range(ncols)]
        rhs = []
        for row in rows:
            acc = F49.zero()
            for c, v in zip(row, secret):
                acc = acc + c * v
            rhs.append(acc)
        names = [f"v{i}" for i in range(ncols)]
        system = LinearSystem(names, rows, rhs, F49)
        sol = solve_affine(system)
        assert sol.is_consistent()
        assert all(v.is_zero() for v in system.residuals(sol.particular))
        for vec in sol.kernel_basis:
            shifted = {n: sol.particular[n] + vec[n] for n in names}
            assert all(v.is_zero() for v in system.residuals(shifted))


def test_deterministic_kernel_basis():
    rng = random.Random(37)
    rows = rand_mat(rng, 3, 5)
    names = tuple(f"v{i}" for i in range(5))
    s = LinearSystem(names, rows, [F7.zero()] * 3, F7)
    first = solve_affine(s)
    second = solve_affine(LinearSystem(names, [list(r) for r in rows],
                                       [F7.zero()] * 3, F7))
    assert first.kernel_basis == second.kernel_basis
    assert first.particular == second.particular


# ----------------------------------------------------------------------
# elimination vs exhaustive enumeration


def enumerate_solutions(int_rows, int_rhs, nvars):
    """All assignments over GF(7) satisfying the integer system."""
    out = set()
    for point in itertools.product(range(7), repeat=nvars):
        ok = True
        for row, b in zip(int_rows, int_rhs):
            acc = 0
            for c, v in zip(row, point):
                acc += c * v
            if acc % 7 != b % 7:
                ok = False
                break
        if ok:
            out.add(point)
    return out


def test_eliminate_examples():
    s = LinearSystem(("x", "y", "m"),
                     mat([[1, 0, -1], [0, 1, -1]]),
                     [F7.zero(), F7.zero()], F7)
    projected = eliminate(s, ["m"])
    expected = LinearSystem(("x", "y"), mat([[1, -1]]), [F7.zero()], F7)
    assert rowspace_equal(projected, expected)
    # eliminating nothing returns an equivalent system
    assert rowspace_equal(eliminate(s, []), s)


def test_eliminate_idempotent_on_removed_variables():
    s = LinearSystem(("x", "y", "m"),
                     mat([[1, 2, 3], [0, 1, 1]]),
                     [F7.one(), F7.zero()], F7)
    once = eliminate(s, ["m"])
    again = eliminate(once, [])
    assert rowspace_equal(once, again)


def test_eliminate_against_enumeration_oracle():
    rng = random.Random(101)
    cases = 0
    while cases < 200:
        nvars = rng.choice((2, 2, 3, 3, 3, 4, 4, 5))
        nrows = rng.randrange(0, nvars + 1)
        int_rows = [[rng.randrange(7) for _ in range(nvars)]
                    for _ in range(nrows)]
        int_rhs = [rng.randrange(7) for _ in range(nrows)]
        naux = rng.randrange(1, nvars)
        names = [f"v{i}" for i in range(nvars)]
        aux = names[:naux]
        keep = names[naux:]
        system = LinearSystem(names, mat(int_rows), [F7.from_int(b)
                                                     for b in int_rhs], F7)
        projected = eliminate(system, aux)

        full = enumerate_solutions(int_rows, int_rhs, nvars)
        oracle = {pt[naux:] for pt in full}
        proj_rows = [[c.payload for c in row] for row in projected.rows]
        proj_rhs = [b.payload for b in projected.rhs]
        computed = enumerate_solutions(proj_rows, proj_rhs, len(keep))
        assert computed == oracle
        cases += 1


# ----------------------------------------------------------------------
# row spaces


def test_rowspace_equal_examples():
    rng = random.Random(53)
    rows = rand_mat(rng, 3, 5)
    names = tuple(f"v{i}" for i in range(5))
    zero3 = [F7.zero()] * 3
    s = LinearSystem(names, rows, zero3, F7)
    # a row-permuted, row-scaled copy spans the same space
    scaled = [[F7.from_int(3) * x for x in rows[2]],
              [F7.from_int(5) * x for x in rows[0]],
              list(rows[1])]
    assert rowspace_equal(s, LinearSystem(names, scaled, zero3, F7))
    # one extra independent row breaks equality
    extra = rows + [[F7.from_int(x) for x in (1, 0, 0, 0, 0)]]
    if rank(extra, F7) > rank(rows, F7):
        bigger = LinearSystem(names, extra, [F7.zero()] * 4, F7)
        assert not rowspace_equal(s, bigger)


def test_rowspace_equal_respects_rhs():
    names = ("x",)
    a = LinearSystem(names, mat([[1]]), [F7.zero()], F7)
    b = LinearSystem(names, mat([[1]]), [F7.one()], F7)
    assert not rowspace_equal(a, b)


def test_rowspace_variable_mismatch():
    a = LinearSystem(("x",), mat([[1]]), [F7.zero()], F7)
    b = LinearSystem(("y",), mat([[1]]), [F7.zero()], F7)
    with pytest.raises(ValueError):
        rowspace_equal(a, b)
