"""Dynamics of divisor classes under an integer pullback action.

The action is an invertible integer matrix on the numerical divisor group
Z^l, together with a list of curve functionals describing positivity: a
class counts as ample here exactly when it pairs strictly positively with
every supplied curve.  That convention is faithful when the curve list is
a full dual description of the nef cone (as for toric inputs) and an
approximation otherwise.

On top of the orbit and partial-sum sequences this module builds the
left/right ampleness classifier.  Its exact certificates:

* an invertible integer action whose eigenvalues do not all lie on the
  unit circle has spectral radius strictly above one (unit-circle algebraic
  integers are roots of unity), which rules out left ampleness;
* an eigenvector that is positive against every curve, with integer
  eigenvalue >= 1, certifies right ampleness;
* when all eigenvalues are roots of unity the action behaves like an
  automorphism, where left and right ampleness agree but depend on
  eventual ampleness of the twist sequence, which numerical data alone
  cannot decide; a user-supplied flag asserts it.
"""

from __future__ import annotations

import dataclasses
import enum
from fractions import Fraction
from typing import Optional

from . import citations
from .intlinalg import (
    DEFAULT_RADIUS_WIDTH,
    IntMatrix,
    NoRealEigenvalueError,
    RationalInterval,
    char_poly,
    count_real_roots_above,
    det,
    is_quasi_unipotent,
    spectral_radius_interval,
)


class WitnessSearchExhausted(RuntimeError):
    """No witness found within the configured search bounds."""


class UnsupportedActionError(ValueError):
    """The requested computation is not supported on this action."""


@dataclasses.dataclass(frozen=True)
class DivisorClass:
    """Coordinates of a divisor class in the numerical group Z^l."""

    coords: tuple[int, ...]

    def scaled(self, k: int) -> "DivisorClass":
        return DivisorClass(tuple(k * c for c in self.coords))


@dataclasses.dataclass(frozen=True)
class CurveFunctional:
    """Intersection-with-a-curve functional; pairing is the dot product."""

    coords: tuple[int, ...]


def pairing(divisor: DivisorClass, curve: CurveFunctional) -> int:
    if len(divisor.coords) != len(curve.coords):
        raise ValueError("divisor and curve live in different ranks")
    return sum(d * c for d, c in zip(divisor.coords, curve.coords))


@dataclasses.dataclass(init=False, frozen=True)
class NumericalActionSpec:
    """Invertible integer action plus curve functionals and metadata.

    ``dim_x`` is the dimension of the underlying space (used by the degree
    bookkeeping check); ``deg_sigma`` the degree of the endomorphism, if
    known; ``ample_flag`` a user assertion that the twist sequence is
    eventually ample, consulted only in the root-of-unity case.
    """

    matrix: IntMatrix
    curves: tuple[CurveFunctional, ...]
    dim_x: int
    deg_sigma: Optional[int]
    ample_flag: Optional[bool]

    def __init__(self, matrix, curves, dim_x=1, deg_sigma=None, ample_flag=None):
        if not isinstance(matrix, IntMatrix):
            matrix = IntMatrix(matrix)
        curves = tuple(
            c if isinstance(c, CurveFunctional) else CurveFunctional(tuple(c))
            for c in curves
        )
        if not curves:
            raise ValueError("at least one curve functional is required")
        if any(len(c.coords) != matrix.dim for c in curves):
            raise ValueError("curve length does not match the action rank")
        if dim_x < 1:
            raise ValueError("dim_x must be >= 1")
        if deg_sigma is not None and deg_sigma < 1:
            raise ValueError("deg_sigma must be >= 1")
        if det(matrix) == 0:
            raise ValueError("action matrix must be invertible over Q")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "curves", curves)
        object.__setattr__(self, "dim_x", dim_x)
        object.__setattr__(self, "deg_sigma", deg_sigma)
        object.__setattr__(self, "ample_flag", ample_flag)

    @property
    def rank(self) -> int:
        return self.matrix.dim

    @classmethod
    def from_json_dict(cls, doc: dict) -> "NumericalActionSpec":
        try:
            matrix = doc["P"]
            curves = doc["curves"]
        except KeyError as missing:
            raise ValueError(f"spec document is missing {missing}") from None
        return cls(
            matrix,
            curves,
            dim_x=doc.get("dimX", 1),
            deg_sigma=doc.get("degSigma"),
            ample_flag=doc.get("ampleFlag"),
        )

    def to_json_dict(self) -> dict:
        doc = {
            "P": [list(row) for row in self.matrix.rows],
            "curves": [list(c.coords) for c in self.curves],
            "dimX": self.dim_x,
        }
        if self.deg_sigma is not None:
            doc["degSigma"] = self.deg_sigma
        if self.ample_flag is not None:
            doc["ampleFlag"] = self.ample_flag
        return doc


class Verdict(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNDETERMINED = "Undetermined"


@dataclasses.dataclass(frozen=True)
class AmplenessReport:
    left: Verdict
    right: Verdict
    spectral_radius: Optional[RationalInterval]
    quasi_unipotent: bool
    ample_eigenvector: Optional[DivisorClass]
    reasons: tuple[str, ...]


def _check_lengths(spec: NumericalActionSpec, divisor: DivisorClass) -> None:
    if len(divisor.coords) != spec.rank:
        raise ValueError("divisor length does not match the action rank")


def orbit_pairings(
    spec: NumericalActionSpec,
    divisor: DivisorClass,
    curve: CurveFunctional,
    max_m: int,
) -> list[int]:
    """[(P**m D . C) for m = 0..max_m], by iterated exact matrix-vector products."""
    _check_lengths(spec, divisor)
    if len(curve.coords) != spec.rank:
        raise ValueError("curve length does not match the action rank")
    vec = divisor.coords
    out = [pairing(DivisorClass(vec), curve)]
    for _ in range(max_m):
        vec = spec.matrix.apply(vec)
        out.append(pairing(DivisorClass(vec), curve))
    return out


def delta_sequence(
    spec: NumericalActionSpec,
    divisor: DivisorClass,
    curve: CurveFunctional,
    max_m: int,
) -> list[int]:
    """[(sum_{i<m} P**i D . C) for m = 1..max_m]."""
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    orbit = orbit_pairings(spec, divisor, curve, max_m - 1)
    out = []
    acc = 0
    for value in orbit:
        acc += value
        out.append(acc)
    return out


@dataclasses.dataclass(frozen=True)
class GrowthFit:
    """Minimal constant fitting seq[m] <= c * m**j * radius**m on a window.

    ``prefix_constants[i]`` is the minimal constant over the first i+1
    entries; a constant that keeps climbing as the window grows flags a
    polynomial exponent j chosen too small.
    """

    bounded: bool
    constant: Fraction
    prefix_constants: tuple[Fraction, ...]


def growth_bound_check(
    seq, radius: RationalInterval, j: int, start: int = 0
) -> GrowthFit:
    """Fit the minimal c with seq[i] <= c * m**j * radius.hi**m, m = start + i.

    Entries with m < 1 are skipped (the bound is asserted for m >= 1 with
    the convention m**0 = 1).  Any finite window admits a finite constant,
    so ``bounded`` is always True; the interesting output is the constant
    and its trend.
    """
    seq = list(seq)
    if not seq:
        raise ValueError("sequence must be nonempty")
    if radius.lo <= 0:
        raise ValueError("radius must be positive")
    best = Fraction(0)
    prefix = []
    for i, value in enumerate(seq):
        m = start + i
        if m >= 1:
            envelope = Fraction(m) ** j * radius.hi**m
            best = max(best, Fraction(value) / envelope)
        prefix.append(best)
    return GrowthFit(True, best, tuple(prefix))


@dataclasses.dataclass(frozen=True)
class NonLeftAmpleWitness:
    """An ample multiple H and curve C with (Delta_m - P**m H . C) < 0, m <= horizon."""

    h: DivisorClass
    curve: CurveFunctional
    horizon: int
    multiplier: int


def non_left_ample_witness(
    spec: NumericalActionSpec,
    divisor: DivisorClass,
    ample: DivisorClass,
    horizon: int = 64,
    max_multiplier: int = 2**16,
) -> NonLeftAmpleWitness:
    """Search for the obstruction pair behind left-ampleness failure.

    Requires a real eigenvalue strictly above one (certified by Sturm
    counts).  Tries each curve with multipliers k = 1, 2, 4, ... of the
    supplied ample class until the partial-sum pairing stays strictly
    below the orbit pairing of k * ample over the whole horizon.
    """
    _check_lengths(spec, divisor)
    _check_lengths(spec, ample)
    if count_real_roots_above(char_poly(spec.matrix), 1) < 1:
        raise UnsupportedActionError(
            "no real eigenvalue above one; witness search needs spectral radius > 1"
        )
    for curve in spec.curves:
        deltas = delta_sequence(spec, divisor, curve, horizon)
        orbit = orbit_pairings(spec, ample, curve, horizon)
        k = 1
        while k <= max_multiplier:
            if all(deltas[m - 1] - k * orbit[m] < 0 for m in range(1, horizon + 1)):
                return NonLeftAmpleWitness(ample.scaled(k), curve, horizon, k)
            k *= 2
    raise WitnessSearchExhausted(
        f"no witness with multiplier <= {max_multiplier} over horizon {horizon}"
    )


def _integer_eigenvalue(matrix: IntMatrix, coords: tuple[int, ...]) -> Optional[int]:
    if all(c == 0 for c in coords):
        return None
    image = matrix.apply(coords)
    base = next(c for c in coords if c != 0)
    index = coords.index(base)
    if image[index] % base:
        return None
    lam = image[index] // base
    if all(i == lam * c for i, c in zip(image, coords)):
        return lam
    return None


def classify_ampleness(
    spec: NumericalActionSpec,
    divisor: DivisorClass,
    width: Fraction = DEFAULT_RADIUS_WIDTH,
) -> AmplenessReport:
    """Three-valued left/right ampleness verdicts with exact certificates.

    Left is No whenever the spectral radius exceeds one, which for an
    invertible integer action is equivalent to some eigenvalue lying off
    the unit circle.  Right is Yes when the divisor is positive against
    every curve and is an eigenvector with integer eigenvalue >= 1.  In
    the root-of-unity case both sides are Yes exactly when the user
    asserts eventual ampleness of the twists; otherwise they stay
    Undetermined.  Undetermined is an honest value, not an error.
    """
    _check_lengths(spec, divisor)
    matrix = spec.matrix
    quasi_unipotent = is_quasi_unipotent(matrix)
    reasons: list[str] = []
    if quasi_unipotent:
        interval: Optional[RationalInterval] = RationalInterval.point(1)
    else:
        try:
            interval = spectral_radius_interval(matrix, width)
        except NoRealEigenvalueError:
            interval = None
            reasons.append("no-real-eigenvalue-action-cannot-preserve-a-cone")

    left = Verdict.UNDETERMINED
    right = Verdict.UNDETERMINED
    eigenvector: Optional[DivisorClass] = None

    positive = all(pairing(divisor, c) > 0 for c in spec.curves)
    lam = _integer_eigenvalue(matrix, divisor.coords)
    if positive and lam is not None and lam >= 1:
        right = Verdict.YES
        eigenvector = divisor
        reasons.append(citations.RIGHT_FROM_AMPLE_EIGENVECTOR)

    if quasi_unipotent:
        if spec.ample_flag is True:
            left = Verdict.YES
            right = Verdict.YES
            reasons.append(citations.UNIT_CIRCLE_EQUIVALENCE)
        else:
            reasons.append(citations.UNIT_CIRCLE_FLAG_NEEDED)
    else:
        left = Verdict.NO
        reasons.append(citations.RADIUS_EXCEEDS_ONE_WHEN_NOT_UNIT_CIRCLE)
        reasons.append(citations.LEFT_FAILS_ABOVE_ONE)

    return AmplenessReport(
        left=left,
        right=right,
        spectral_radius=interval,
        quasi_unipotent=quasi_unipotent,
        ample_eigenvector=eigenvector,
        reasons=tuple(reasons),
    )


def degree_consistency(spec: NumericalActionSpec, divisor: DivisorClass) -> bool:
    """Check ((P**m D)**dim_x) == deg_sigma**m * (D**dim_x) for m = 1..5.

    Self-intersection numbers are only computed on rank-one actions, where
    the class (d) has (D**dim_x) = d**dim_x; higher ranks would need the
    full intersection form and are reported as unsupported.
    """
    _check_lengths(spec, divisor)
    if spec.deg_sigma is None:
        raise ValueError("deg_sigma is required for the degree check")
    if spec.rank != 1:
        raise UnsupportedActionError(
            "self-intersection bookkeeping is only supported on rank-one actions"
        )
    d = divisor.coords[0]
    vec = divisor.coords
    for m in range(1, 6):
        vec = spec.matrix.apply(vec)
        if vec[0] ** spec.dim_x != spec.deg_sigma**m * d**spec.dim_x:
            return False
    return True
