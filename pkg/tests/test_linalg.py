import random

import pytest

from uniserial.linalg import (
    I,
    ONE,
    ZERO,
    Matrix,
    Scalar,
    algebra_radical,
    column_space_basis,
    format_scalar,
    in_span,
    inverse,
    kernel_basis,
    parse_scalar,
    rank,
    rref,
    solve,
)


def S(x, y=0):
    return Scalar(x, y)


def M(rows):
    return Matrix.from_rows([[S(e) if not isinstance(e, Scalar) else e for e in r] for r in rows])


def test_scalar_arithmetic_exact():
    a = parse_scalar("1/2+1/3*i")
    b = parse_scalar("2/3-i")
    assert a + b == parse_scalar("7/6-2/3*i")
    assert a * b == parse_scalar("2/3-5/18*i")
    assert (a / b) * b == a
    assert -a == parse_scalar("-1/2-1/3*i")
    assert a.conjugate() == parse_scalar("1/2-1/3*i")


@pytest.mark.parametrize(
    "text",
    ["0", "1", "-2", "1/2", "-7/3", "i", "-i", "2*i", "-5/3*i", "i/3", "1/2+1/3*i", "1/2-i", "3+2*i"],
)
def test_scalar_parse_format_roundtrip(text):
    s = parse_scalar(text)
    assert parse_scalar(format_scalar(s)) == s


@pytest.mark.parametrize("bad", ["", "1.5", "x", "i+i", "1+2", "1/0", "++1"])
def test_scalar_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_rref_identity():
    r, pivots = rref(Matrix.identity(2))
    assert r == Matrix.identity(2)
    assert pivots == [0, 1]


def test_rref_zero():
    z = Matrix.zero(3, 3)
    r, pivots = rref(z)
    assert r == z
    assert pivots == []


def test_rref_rank_one():
    # hand elimination: r2 <- r2 - 2*r1
    r, pivots = rref(M([[1, 2], [2, 4]]))
    assert r == M([[1, 2], [0, 0]])
    assert pivots == [0]


def test_kernel_identity_empty():
    assert kernel_basis(Matrix.identity(3)) == []


def test_kernel_zero_full():
    basis = kernel_basis(Matrix.zero(2, 2))
    assert len(basis) == 2
    assert basis[0] == (ONE, ZERO)
    assert basis[1] == (ZERO, ONE)


def test_kernel_row():
    m = M([[1, 1]])
    (v,) = kernel_basis(m)
    assert m.apply(v) == (ZERO,)
    assert v[0] == -v[1]


def test_solve_identity():
    b = (S(3), S(1, 2))
    assert solve(Matrix.identity(2), b) == b


def test_solve_underdetermined():
    a = M([[1, 1]])
    x = solve(a, (S(1),))
    assert a.apply(x) == (S(1),)


def test_solve_inconsistent():
    assert solve(M([[1], [1]]), (S(1), S(2))) is None


def test_solve_rejects_bad_shape():
    with pytest.raises(ValueError):
        solve(M([[1], [1]]), (S(1),))


def test_radical_scalars_semisimple():
    assert algebra_radical([Matrix.identity(2)]) == []


def test_radical_dual_numbers():
    n = M([[0, 1], [0, 0]])
    rad = algebra_radical([Matrix.identity(2), n])
    assert len(rad) == 1
    # trace-form kernel is spanned by the nilpotent generator
    assert rad[0].column(1)[0] and rad[0].column(0) == (ZERO, ZERO)


def test_radical_full_matrix_algebra():
    e = [M([[1, 0], [0, 0]]), M([[0, 1], [0, 0]]), M([[0, 0], [1, 0]]), M([[0, 0], [0, 1]])]
    assert algebra_radical(e) == []


def test_radical_rejects_nonsquare():
    with pytest.raises(ValueError):
        algebra_radical([Matrix.zero(2, 3)])


def test_radical_elements_nilpotent():
    # upper triangular 3x3 algebra: radical = strictly upper part, all nilpotent
    basis = []
    for i in range(3):
        for j in range(i, 3):
            rows = [[S(1) if (r, c) == (i, j) else S(0) for c in range(3)] for r in range(3)]
            basis.append(Matrix.from_rows(rows))
    rad = algebra_radical(basis)
    assert len(rad) == 3
    for n in rad:
        p = n
        for _ in range(2):
            p = p * n
        assert p.is_zero()


def test_rank_nullity_randomized():
    rng = random.Random(7)
    for _ in range(25):
        rows = rng.randint(0, 5)
        cols = rng.randint(0, 5)
        m = Matrix(rows, cols, [[S(rng.randint(-3, 3), rng.randint(-1, 1)) for _ in range(cols)] for _ in range(rows)])
        ker = kernel_basis(m)
        assert rank(m) + len(ker) == cols
        for v in ker:
            assert all(not e for e in m.apply(v))


def test_solve_verifies_by_substitution_randomized():
    rng = random.Random(11)
    for _ in range(25):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = Matrix(rows, cols, [[S(rng.randint(-2, 2)) for _ in range(cols)] for _ in range(rows)])
        x0 = tuple(S(rng.randint(-2, 2)) for _ in range(cols))
        b = m.apply(x0)
        x = solve(m, b)
        assert x is not None
        assert m.apply(x) == b


def test_inverse_and_span_helpers():
    m = M([[1, 1], [0, 1]])
    mi = inverse(m)
    assert m * mi == Matrix.identity(2)
    assert inverse(M([[1, 1], [2, 2]])) is None
    basis = column_space_basis([(S(1), S(2)), (S(2), S(4)), (S(0), S(1))], 2)
    assert len(basis) == 2
    assert in_span(basis, (S(5), S(7)))
    assert not in_span([(S(1), S(0))], (S(0), S(1)))


def test_gaussian_entries_in_elimination():
    m = Matrix.from_rows([[I, ONE], [ONE, I.conjugate()]])
    # second row is -i times the first, so rank 1
    assert rank(m) == 1
    (v,) = kernel_basis(m)
    assert m.apply(v) == (ZERO, ZERO)
