import doctest
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import thcr.intlinalg as intlinalg
from thcr.intlinalg import (
    IntMatrix,
    IntPolynomial,
    NoRealEigenvalueError,
    NotAnEigenvalueError,
    SingularMatrixError,
    char_poly,
    count_real_roots,
    count_real_roots_above,
    cyclotomic,
    det,
    euler_phi,
    integer_rank,
    is_quasi_unipotent,
    jordan_growth_exponent,
    spectral_radius_interval,
)


# --- independent oracles ------------------------------------------------------

def minor_det(rows):
    """Determinant by cofactor expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        total += (-1) ** j * rows[0][j] * minor_det(minor)
    return total


def charpoly_by_interpolation(rows):
    """det(xI - P) via exact evaluation at n+1 points plus Lagrange interpolation."""
    n = len(rows)
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        shifted = [
            [(x if i == j else 0) - rows[i][j] for j in range(n)] for i in range(n)
        ]
        ys.append(minor_det(shifted))
    coeffs = [Fraction(0)] * (n + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for k, xk in enumerate(xs):
            if k == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                new[d + 1] += c
                new[d] -= c * xk
            basis = new
            denom *= xi - xk
        for d, c in enumerate(basis):
            coeffs[d] += yi * c / denom
    assert all(c.denominator == 1 for c in coeffs)
    return tuple(int(c) for c in coeffs)


def square_lists(dim, lo=-5, hi=5):
    return st.lists(
        st.lists(st.integers(lo, hi), min_size=dim, max_size=dim),
        min_size=dim,
        max_size=dim,
    )


# --- characteristic polynomial ------------------------------------------------

def test_char_poly_scalar():
    assert char_poly(IntMatrix([[2]])) == IntPolynomial(-2, 1)


def test_char_poly_identity_2x2():
    assert char_poly(IntMatrix([[1, 0], [0, 1]])) == IntPolynomial(1, -2, 1)


def test_char_poly_rotation():
    # cofactor expansion by hand: det([[x, 1], [-1, x]]) = x**2 + 1
    assert char_poly(IntMatrix([[0, -1], [1, 0]])) == IntPolynomial(1, 0, 1)


@given(st.integers(1, 4).flatmap(square_lists))
def test_char_poly_matches_interpolation_oracle(rows):
    assert char_poly(IntMatrix(rows)).coeffs == charpoly_by_interpolation(rows)


@given(st.integers(1, 4).flatmap(square_lists))
def test_det_matches_cofactor_oracle(rows):
    assert det(IntMatrix(rows)) == minor_det(rows)


# --- spectral radius interval ---------------------------------------------------

def test_spectral_radius_scalar_exact():
    assert spectral_radius_interval(IntMatrix([[2]])) == intlinalg.RationalInterval(2, 2)


def test_spectral_radius_identity_exact():
    ident = IntMatrix([[1, 0], [0, 1]])
    assert spectral_radius_interval(ident) == intlinalg.RationalInterval(1, 1)


def test_spectral_radius_golden_ratio():
    fib = IntMatrix([[1, 1], [1, 0]])
    chi = char_poly(fib)  # x**2 - x - 1, increasing through its largest root
    interval = spectral_radius_interval(fib, Fraction(1, 10**9))
    assert interval.width <= Fraction(1, 10**9)
    assert chi.evaluate(interval.lo) <= 0 <= chi.evaluate(interval.hi)
    assert count_real_roots_above(chi, interval.hi) == 0


def test_spectral_radius_singular_rejected():
    with pytest.raises(SingularMatrixError):
        spectral_radius_interval(IntMatrix([[1, 1], [1, 1]]))


def test_spectral_radius_no_real_eigenvalue():
    with pytest.raises(NoRealEigenvalueError):
        spectral_radius_interval(IntMatrix([[0, -1], [1, 0]]))


@settings(deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: square_lists(d, 0, 4)))
def test_spectral_radius_certificate_on_cone_preserving(rows):
    # Entrywise nonnegative matrices preserve the positive orthant, so the
    # largest real root is the spectral radius and |det| >= 1 forces it >= 1.
    matrix = IntMatrix(rows)
    assume(det(matrix) != 0)
    width = Fraction(1, 10**6)
    interval = spectral_radius_interval(matrix, width)
    chi = char_poly(matrix)
    assert interval.lo >= 1 - width
    assert count_real_roots_above(chi, interval.hi) == 0
    assert chi.evaluate(interval.lo) == 0 or count_real_roots_above(chi, interval.lo) >= 1


# --- quasi-unipotence -----------------------------------------------------------

def test_quasi_unipotent_identity():
    assert is_quasi_unipotent(IntMatrix([[1, 0], [0, 1]]))


def test_quasi_unipotent_rotation():
    assert is_quasi_unipotent(IntMatrix([[0, -1], [1, 0]]))


def test_quasi_unipotent_scalar_two():
    assert not is_quasi_unipotent(IntMatrix([[2]]))


def test_quasi_unipotent_more_cases():
    assert is_quasi_unipotent(IntMatrix([[-1]]))
    assert is_quasi_unipotent(IntMatrix([[1, 1], [0, 1]]))  # unipotent shear
    assert is_quasi_unipotent(IntMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]]))  # 3-cycle
    assert not is_quasi_unipotent(IntMatrix([[1, 1], [1, 0]]))
    assert not is_quasi_unipotent(IntMatrix([[2, 0], [0, 3]]))
    # det = -1 but a real eigenvalue pair off the unit circle
    assert not is_quasi_unipotent(IntMatrix([[2, 1], [1, 1]]))


def test_quasi_unipotent_float_oracle_sample():
    numpy = pytest.importorskip("numpy")
    rng = random.Random(12345)
    checked = 0
    while checked < 100:
        dim = rng.choice([2, 3])
        rows = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim)]
        matrix = IntMatrix(rows)
        if det(matrix) == 0:
            continue
        checked += 1
        eigvals = numpy.linalg.eigvals(numpy.array(rows, dtype=float))
        oracle = bool(max(abs(abs(v) - 1.0) for v in eigvals) <= 1e-6)
        assert is_quasi_unipotent(matrix) == oracle


def test_quasi_unipotent_with_fixed_vector_has_radius_one():
    # When 1 is an eigenvalue the largest real root of a quasi-unipotent
    # action is exactly 1.
    for rows in ([[1]], [[1, 1], [0, 1]], [[0, 1, 0], [0, 0, 1], [1, 0, 0]]):
        matrix = IntMatrix(rows)
        assert is_quasi_unipotent(matrix)
        assert 1 in spectral_radius_interval(matrix)


def test_cyclotomic_small():
    assert cyclotomic(1) == IntPolynomial(-1, 1)
    assert cyclotomic(2) == IntPolynomial(1, 1)
    assert cyclotomic(4) == IntPolynomial(1, 0, 1)
    assert cyclotomic(6) == IntPolynomial(1, -1, 1)
    assert euler_phi(12) == 4


# --- Jordan growth exponent -----------------------------------------------------

def test_jordan_diagonal():
    assert jordan_growth_exponent(IntMatrix([[2]]), 2) == 0


def test_jordan_shear():
    # rank(P - I) = 1, rank((P - I)**2) = 0
    assert jordan_growth_exponent(IntMatrix([[1, 1], [0, 1]]), 1) == 1


def test_jordan_block_two():
    assert jordan_growth_exponent(IntMatrix([[2, 1], [0, 2]]), 2) == 1


def test_jordan_rejects_non_eigenvalue():
    with pytest.raises(NotAnEigenvalueError):
        jordan_growth_exponent(IntMatrix([[2]]), 3)


def _random_unimodular(rng, dim):
    """Product of integer shears; returns (Q, Q_inverse)."""
    q = IntMatrix.identity(dim)
    q_inv = IntMatrix.identity(dim)
    for _ in range(6):
        i, j = rng.sample(range(dim), 2)
        k = rng.randint(-2, 2)
        shear = [[1 if a == b else 0 for b in range(dim)] for a in range(dim)]
        shear[i][j] = k
        unshear = [row[:] for row in shear]
        unshear[i][j] = -k
        q = q @ IntMatrix(shear)
        q_inv = IntMatrix(unshear) @ q_inv
    return q, q_inv


def test_jordan_invariant_under_similarity():
    rng = random.Random(99)
    base_cases = [
        (IntMatrix([[1, 1], [0, 1]]), 1),
        (IntMatrix([[2, 1], [0, 2]]), 2),
        (IntMatrix([[2, 0, 0], [0, 2, 1], [0, 0, 2]]), 2),
        (IntMatrix([[3, 1, 0], [0, 3, 1], [0, 0, 3]]), 3),
    ]
    for matrix, eigenvalue in base_cases:
        expected = jordan_growth_exponent(matrix, eigenvalue)
        for _ in range(5):
            q, q_inv = _random_unimodular(rng, matrix.dim)
            conjugate = q @ matrix @ q_inv
            assert jordan_growth_exponent(conjugate, eigenvalue) == expected


# --- root counting and plumbing -------------------------------------------------

def test_count_real_roots_full_line():
    chi = char_poly(IntMatrix([[2, 0], [0, 3]]))
    assert count_real_roots(chi) == 2
    assert count_real_roots(chi, 1, None) == 2
    assert count_real_roots_above(chi, 2) == 1
    assert count_real_roots_above(chi, 3) == 0


def test_count_real_roots_rejects_root_endpoint():
    chi = char_poly(IntMatrix([[2]]))
    with pytest.raises(ValueError):
        count_real_roots(chi, 2, None)


def test_integer_rank():
    assert integer_rank(IntMatrix([[1, 2], [2, 4]])) == 1
    assert integer_rank(IntMatrix([[0, 0], [0, 0]])) == 0
    assert integer_rank(IntMatrix([[1, 0], [0, 1]])) == 2


def test_matrix_validation():
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        IntMatrix([])


def test_doctests():
    failures, _ = doctest.testmod(intlinalg)
    assert failures == 0
