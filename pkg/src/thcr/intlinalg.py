"""Exact integer and rational linear algebra for endomorphism actions.

Characteristic polynomials, Sturm-certified isolation of the dominant real
eigenvalue, quasi-unipotence via cyclotomic factorization, and Jordan block
sizes for integer eigenvalues.  Everything runs over Z or Q, so every answer
is a certificate rather than a floating-point estimate.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction
from functools import lru_cache


class SingularMatrixError(ValueError):
    """Raised where an invertible matrix is required."""


class NoRealEigenvalueError(ValueError):
    """The characteristic polynomial has no real root to isolate."""


class NotAnEigenvalueError(ValueError):
    """The requested value is not a root of the characteristic polynomial."""


@dataclasses.dataclass(init=False, eq=True, frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of x**i.

    >>> IntPolynomial(-2, 1)
    IntPolynomial(-2, 1)
    >>> IntPolynomial(-2, 1).evaluate(5)
    3
    """

    coeffs: tuple[int, ...]

    def __init__(self, *coeffs: int):
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs[:end]))

    def degree(self) -> int:
        """Degree of the leading term; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1]

    def evaluate(self, x):
        """Horner evaluation; exact for int or Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(*(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return IntPolynomial(*a)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(*(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPolynomial(*out)

    def divmod_monic(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder by a monic divisor, over Z.

        >>> IntPolynomial(-1, 0, 1).divmod_monic(IntPolynomial(1, 1))
        (IntPolynomial(-1, 1), IntPolynomial())
        """
        if divisor.is_zero() or divisor.leading() != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree()
        quot = [0] * max(len(rem) - d, 0)
        for i in range(len(rem) - d - 1, -1, -1):
            q = rem[i + d]
            if q == 0:
                continue
            quot[i] = q
            for j, c in enumerate(divisor.coeffs):
                rem[i + j] -= q * c
        return IntPolynomial(*quot), IntPolynomial(*rem[:d])

    def __repr__(self):
        return f"IntPolynomial({', '.join(str(c) for c in self.coeffs)})"


@dataclasses.dataclass(init=False, eq=True, frozen=True)
class IntMatrix:
    """Square matrix with arbitrary-precision integer entries."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if not data:
            raise ValueError("matrix must be nonempty")
        if any(len(row) != len(data) for row in data):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", data)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def scalar(cls, dim: int, value: int) -> "IntMatrix":
        return cls([[value if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> "IntMatrix":
        return cls.scalar(dim, 1)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dim))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_dim(other)
        return IntMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_dim(other)
        return IntMatrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_dim(other)
        n = self.dim
        cols = list(zip(*other.rows))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def apply(self, vector: tuple[int, ...]) -> tuple[int, ...]:
        if len(vector) != self.dim:
            raise ValueError("vector length does not match matrix dimension")
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.rows)

    def _check_dim(self, other: "IntMatrix") -> None:
        if self.dim != other.dim:
            raise ValueError("matrix dimensions differ")


@dataclasses.dataclass(init=False, eq=True, frozen=True)
class RationalInterval:
    """Closed interval with exact rational endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __init__(self, lo, hi):
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, value) -> "RationalInterval":
        return cls(value, value)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, value) -> bool:
        return self.lo <= Fraction(value) <= self.hi


DEFAULT_RADIUS_WIDTH = Fraction(1, 10**9)


def det(matrix: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = matrix.dim
    a = [list(row) for row in matrix.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def integer_rank(matrix: IntMatrix) -> int:
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    n = matrix.dim
    a = [list(row) for row in matrix.rows]
    prev = 1
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, n) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(rank + 1, n):
            for j in range(col + 1, n):
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) // prev
            a[i][col] = 0
        prev = a[rank][col]
        rank += 1
    return rank


def char_poly(matrix: IntMatrix) -> IntPolynomial:
    """Characteristic polynomial det(xI - P), monic with integer coefficients.

    Uses the Faddeev-LeVerrier recurrence; every division is exact.

    >>> char_poly(IntMatrix([[0, -1], [1, 0]]))
    IntPolynomial(1, 0, 1)
    """
    n = matrix.dim
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = IntMatrix.scalar(n, 0)
    product = None
    for k in range(1, n + 1):
        base = product if product is not None else IntMatrix.scalar(n, 0)
        work = base + IntMatrix.scalar(n, coeffs[n - k + 1])
        product = matrix @ work
        t = product.trace()
        if t % k:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        coeffs[n - k] = -(t // k)
    return IntPolynomial(*coeffs)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("argument must be positive")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, by dividing x**n - 1 by lower ones.

    >>> cyclotomic(4)
    IntPolynomial(1, 0, 1)
    """
    if n < 1:
        raise ValueError("argument must be positive")
    poly = IntPolynomial(*([-1] + [0] * (n - 1) + [1]))
    for d in range(1, n):
        if n % d == 0:
            poly, rem = poly.divmod_monic(cyclotomic(d))
            assert rem.is_zero()
    return poly


def is_quasi_unipotent(matrix: IntMatrix) -> bool:
    """True iff every eigenvalue is a root of unity.

    Decided exactly: the characteristic polynomial must factor into
    cyclotomic polynomials.  Kronecker's theorem bounds the candidates,
    since any cyclotomic factor of a degree-l polynomial has index d with
    phi(d) <= l, hence d <= 2*l*l.  A determinant of absolute value != 1
    rules the property out immediately.
    """
    chi = char_poly(matrix)
    n = matrix.dim
    determinant = (-1) ** n * chi.evaluate(0)
    if abs(determinant) != 1:
        return False
    f = chi
    for d in range(1, 2 * n * n + 1):
        if euler_phi(d) > n:
            continue
        phi_d = cyclotomic(d)
        while f.degree() >= phi_d.degree():
            quot, rem = f.divmod_monic(phi_d)
            if not rem.is_zero():
                break
            f = quot
        if f.degree() == 0:
            break
    return f.degree() == 0


def jordan_growth_exponent(matrix: IntMatrix, eigenvalue: int) -> int:
    """Size of the largest Jordan block for an integer eigenvalue, minus one.

    Computed from the exact rank sequence of (P - rI)**k: the nullities
    strictly increase until k reaches the largest block size.
    """
    chi = char_poly(matrix)
    if chi.evaluate(eigenvalue) != 0:
        raise NotAnEigenvalueError(f"{eigenvalue} is not an eigenvalue")
    n = matrix.dim
    shifted = matrix - IntMatrix.scalar(n, eigenvalue)
    ranks = [n]
    power = IntMatrix.identity(n)
    while True:
        power = power @ shifted
        ranks.append(integer_rank(power))
        if ranks[-1] == ranks[-2]:
            return len(ranks) - 3


# --- Sturm machinery over Q -------------------------------------------------
#
# Sturm chains are held as lists of Fraction coefficient lists (low to high).


def _fp_trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _fp_eval(coeffs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _fp_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    quot = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    lead = b[-1]
    while len(rem) >= len(b) and _fp_trim(rem):
        shift = len(rem) - len(b)
        q = rem[-1] / lead
        quot[shift] = q
        for i, c in enumerate(b):
            rem[shift + i] -= q * c
        rem.pop()
        _fp_trim(rem)
    return _fp_trim(quot), _fp_trim(rem)


def _fp_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while _fp_trim(b):
        _, r = _fp_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _fp_from_int(poly: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in poly.coeffs]


def squarefree_part(poly: IntPolynomial) -> IntPolynomial:
    """The radical of an integer polynomial: same roots, all simple."""
    if poly.degree() < 1:
        return poly
    f = _fp_from_int(poly)
    g = _fp_gcd(f, _fp_from_int(poly.derivative()))
    if len(g) <= 1:
        return poly
    quot, rem = _fp_divmod(f, g)
    assert not rem
    scale = math.lcm(*(c.denominator for c in quot))
    ints = [int(c * scale) for c in quot]
    content = math.gcd(*(abs(c) for c in ints))
    if ints[-1] < 0:
        content = -content
    return IntPolynomial(*(c // content for c in ints))


def _sturm_chain(coeffs: list[Fraction]) -> list[list[Fraction]]:
    chain = [list(coeffs)]
    deriv = _fp_trim([i * c for i, c in enumerate(coeffs)][1:])
    if deriv:
        chain.append(deriv)
        while chain[-1] and len(chain[-1]) > 1:
            _, rem = _fp_divmod(chain[-2], chain[-1])
            if not rem:
                break
            chain.append([-c for c in rem])
    return chain


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _variations_at(chain: list[list[Fraction]], x: Fraction) -> int:
    return _variations([_sign(_fp_eval(p, x)) for p in chain])


def _variations_at_infinity(chain: list[list[Fraction]], positive: bool) -> int:
    signs = []
    for p in chain:
        if not p:
            signs.append(0)
            continue
        s = _sign(p[-1])
        if not positive and (len(p) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    # synthetic division by (x - root); remainder must be zero
    out = [Fraction(0)] * (len(coeffs) - 1)
    carry = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + carry * root
        out[i - 1] = carry
    assert coeffs[0] + carry * root == 0
    return out


def count_real_roots_above(poly: IntPolynomial, bound) -> int:
    """Number of distinct real roots strictly greater than ``bound``."""
    sf = _fp_from_int(squarefree_part(poly))
    bound = Fraction(bound)
    while _fp_eval(sf, bound) == 0:
        sf = _deflate(sf, bound)
    if len(sf) <= 1:
        return 0
    chain = _sturm_chain(sf)
    return _variations_at(chain, bound) - _variations_at_infinity(chain, positive=True)


def count_real_roots(poly: IntPolynomial, lo=None, hi=None) -> int:
    """Distinct real roots in (lo, hi); ``None`` endpoints mean infinity.

    Finite endpoints must not themselves be roots.
    """
    sf = _fp_from_int(squarefree_part(poly))
    if len(sf) <= 1:
        return 0
    chain = _sturm_chain(sf)
    for endpoint in (lo, hi):
        if endpoint is not None and _fp_eval(sf, Fraction(endpoint)) == 0:
            raise ValueError("endpoint is a root; nudge it or use count_real_roots_above")
    at_lo = (
        _variations_at_infinity(chain, positive=False)
        if lo is None
        else _variations_at(chain, Fraction(lo))
    )
    at_hi = (
        _variations_at_infinity(chain, positive=True)
        if hi is None
        else _variations_at(chain, Fraction(hi))
    )
    return at_lo - at_hi


def spectral_radius_interval(matrix: IntMatrix, width=DEFAULT_RADIUS_WIDTH) -> RationalInterval:
    """Certified rational enclosure of the largest real eigenvalue.

    Sturm sign counts drive a bisection; exact rational roots are returned
    as zero-width intervals.  For an action preserving a full-dimensional
    cone (every numerical pullback action does) the largest real eigenvalue
    is the spectral radius, which is the intended use.

    Raises ``SingularMatrixError`` for singular input and
    ``NoRealEigenvalueError`` when no real eigenvalue exists, which cannot
    happen for cone-preserving actions.
    """
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    chi = char_poly(matrix)
    if chi.evaluate(0) == 0:
        raise SingularMatrixError("matrix is singular")
    sf = squarefree_part(chi)
    fsf = _fp_from_int(sf)
    chain = _sturm_chain(fsf)
    total = _variations_at_infinity(chain, positive=False) - _variations_at_infinity(
        chain, positive=True
    )
    if total == 0:
        raise NoRealEigenvalueError("no real eigenvalue; matrix cannot preserve a cone")

    def roots_above(x: Fraction) -> int:
        return _variations_at(chain, x) - _variations_at_infinity(chain, positive=True)

    bound = 1 + max(abs(Fraction(c, sf.leading())) for c in sf.coeffs[:-1])
    lo, hi = -bound, Fraction(bound)
    # invariant: the largest real root lies in (lo, hi]
    while hi - lo > width:
        if hi - lo < 1:
            candidate = Fraction(math.floor(hi))
            if lo < candidate <= hi and _fp_eval(fsf, candidate) == 0:
                if roots_above(candidate) == 0:
                    return RationalInterval(candidate, candidate)
        mid = (lo + hi) / 2
        if _fp_eval(fsf, mid) == 0:
            if roots_above(mid) == 0:
                return RationalInterval(mid, mid)
            lo = mid
        elif roots_above(mid) >= 1:
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)
