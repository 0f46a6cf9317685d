"""Gysin pushforward along the complete flag bundle of a rank-n vector
bundle, realized as the symmetric-group symmetrization operator.

The default route antisymmetrizes the fiber class and divides once by the
product of variable differences (a single exact division instead of n!
rational-function reductions); the literal sum of rational functions over the
symmetric group is kept alongside for cross-validation.  Results come back
twice: as a symmetric polynomial in the splitting variables a_1..a_n and
rewritten in the elementary symmetric basis, whose generators correspond to
the Chern classes of the bundle.
"""

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .algebra import MultiPoly, RatFun, exact_divide
from .errors import (
    InvariantViolation,
    NotPolynomialError,
    NotSymmetricError,
    PreconditionError,
)
from .symfun import EBasisPoly, is_symmetric, to_elementary_basis
from .weyl import WeylElement, act_on_poly, permutation_sign


@dataclass(frozen=True)
class FiberClass:
    """A polynomial fiber class on the flag bundle of a rank-n bundle."""

    rank: int
    poly: MultiPoly  # in the a-variables

    def __post_init__(self):
        if self.rank < 1:
            raise PreconditionError("bundle rank must be at least 1")
        if self.poly.prefix != "a":
            raise PreconditionError("fiber classes use the a-variables")
        if self.poly.nvars != self.rank:
            raise PreconditionError("fiber class ring size does not match the rank")


@dataclass(frozen=True)
class PushforwardResult:
    symmetric_poly: MultiPoly
    chern_form: EBasisPoly


@lru_cache(maxsize=None)
def _vandermonde(n):
    total = MultiPoly.constant(n, "a", 1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total = total * (
                MultiPoly.variable(n, "a", i) - MultiPoly.variable(n, "a", j)
            )
    return total


def _sym_elements(n):
    for perm in permutations(range(n)):
        yield WeylElement(perm, (1,) * n)


def _antisymmetrize(p):
    n = p.nvars
    total = MultiPoly.zero(n, p.prefix)
    for w in _sym_elements(n):
        image = act_on_poly(w, p)
        if permutation_sign(w.perm) < 0:
            image = -image
        total = total + image
    return total


def _negate_variables(p):
    return MultiPoly._make(
        p.nvars,
        p.prefix,
        {e: -c if sum(e) & 1 else c for e, c in p.terms.items()},
    )


def flag_pushforward(b, dual_roots=False):
    """Pushforward of a fiber class along the complete flag bundle.

    Antisymmetrize, then divide exactly by the product of differences; the
    output degree drops by n(n-1)/2 and the result is symmetric.  With
    `dual_roots` the variables are negated before the change to the
    elementary basis, switching the sign convention that ties the splitting
    variables to the Chern roots of the bundle.
    """
    n = b.rank
    numerator = _antisymmetrize(b.poly)
    if numerator.is_zero():
        symmetric = MultiPoly.zero(n, "a")
    else:
        symmetric = numerator
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                factor = MultiPoly.variable(n, "a", i) - MultiPoly.variable(n, "a", j)
                symmetric = exact_divide(symmetric, factor)
                if symmetric is None:
                    raise InvariantViolation(
                        "antisymmetrized class is not divisible by the difference product"
                    )
    basis_input = _negate_variables(symmetric) if dual_roots else symmetric
    try:
        chern = to_elementary_basis(basis_input)
    except NotSymmetricError as exc:
        raise InvariantViolation("pushforward result is not symmetric") from exc
    return PushforwardResult(symmetric, chern)


def flag_pushforward_weyl_sum(b):
    """The literal symmetrization: sum over the symmetric group of the
    permuted class over the permuted difference product.  Slower than the
    division route; retained for cross-validation."""
    n = b.rank
    van = _vandermonde(n)
    total = RatFun.zero(n, "a")
    for w in _sym_elements(n):
        total = total + RatFun(act_on_poly(w, b.poly), act_on_poly(w, van))
    try:
        return total.as_poly()
    except NotPolynomialError as exc:
        raise InvariantViolation(
            "symmetrization sum did not reduce to a polynomial"
        ) from exc


@dataclass(frozen=True)
class ProjectionCheck:
    lhs: MultiPoly  # pushforward of (pullback times fiber class)
    rhs: MultiPoly  # pullback class times pushforward of the fiber class
    holds: bool


def projection_formula_check(c, b):
    """Verify that a basic class factors out of the pushforward.

    `c` must be symmetric (pullbacks from the base are, under the splitting
    identification).  Returns both sides of the identity."""
    if c.prefix != "a" or c.nvars != b.rank:
        raise PreconditionError("basic class must live in the fiber-class ring")
    if not is_symmetric(c):
        raise PreconditionError("basic class must be a symmetric polynomial")
    lhs = flag_pushforward(FiberClass(b.rank, c * b.poly)).symmetric_poly
    rhs = c * flag_pushforward(b).symmetric_poly
    return ProjectionCheck(lhs, rhs, lhs == rhs)


def pushforward_value_at(b, point):
    """Exact scalar value of the symmetrization sum at an integer point."""
    n = b.rank
    van = _vandermonde(n)
    total = Fraction(0)
    for w in _sym_elements(n):
        y = tuple(point[p] for p in w.perm)
        num = b.poly.evaluate(y)
        den = van.evaluate(y)
        total += num / den
    return total


def pushforward_cross_check(b, result, seed=0, count=3):
    """True when point evaluation of the symmetrization sum matches the
    division-route result at `count` random distinct-coordinate points."""
    rng = random.Random(seed)
    for _ in range(count):
        point = tuple(rng.sample(range(1, 9999), b.rank))
        if pushforward_value_at(b, point) != result.evaluate(point):
            return False
    return True


def staircase_class(n):
    """The monomial a_1^(n-1) a_2^(n-2) ... a_(n-1); its pushforward is the
    fiber integral of the top class and equals 1."""
    exps = tuple(n - 1 - i for i in range(n))
    return FiberClass(n, MultiPoly(n, "a", {exps: Fraction(1)}))


def fixed_point_count(n):
    return math.factorial(n)
