"""The localization engine: fixed-point restrictions, equivariant Euler
classes, the flag-manifold integral as a Weyl sum of rational functions, and
the closed-form Grassmannian Chern number sum over coordinate subspaces.

The symbolic route sums fully reduced rational functions term by term and is
the authority.  A seeded evaluation route substitutes random integer points
with pairwise distinct coordinates into every summand and adds exact scalars;
it exists as a cross-check and as a fast path when the answer is a constant.
"""

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .algebra import MultiPoly, RatFun
from .errors import InvariantViolation, NotPolynomialError, PreconditionError
from .symfun import elementary_symmetric
from .weyl import (
    RootSystem,
    act_on_poly,
    build_root_system,
    weyl_elements,
    weyl_order,
)


@dataclass(frozen=True)
class FlagIntegralProblem:
    """An integrand over the complete flag manifold of a root system."""

    root_system: RootSystem
    integrand: MultiPoly  # in the y-variables

    def __post_init__(self):
        if self.integrand.prefix != "y":
            raise PreconditionError("flag integrands use the y-variables")
        if self.integrand.nvars != self.root_system.nvars:
            raise PreconditionError("integrand ring size does not match the root system")


@dataclass(frozen=True)
class GrassmannProblem:
    """A Chern monomial c_1(S)^m_1 ... c_k(S)^m_k on G(k, C^n)."""

    n: int
    k: int
    exponents: tuple

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise PreconditionError("need 1 <= k < n")
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if len(self.exponents) != self.k:
            raise PreconditionError("need one exponent per Chern class c_1..c_k")
        if any(e < 0 for e in self.exponents):
            raise PreconditionError("exponents must be non-negative")

    @property
    def weighted_degree(self):
        return sum(r * e for r, e in enumerate(self.exponents, start=1))

    @property
    def target_degree(self):
        return self.k * (self.n - self.k)


@dataclass(frozen=True)
class Subset:
    """A k-subset of {1..n} together with its complement, both increasing."""

    indices: tuple
    complement: tuple


def subsets_lex(n, k):
    """All k-subsets of {1..n} in lexicographic order."""
    universe = range(1, n + 1)
    for combo in combinations(universe, k):
        chosen = set(combo)
        yield Subset(combo, tuple(i for i in universe if i not in chosen))


@lru_cache(maxsize=None)
def _root_product(rs):
    """Product of the linear forms of all positive roots, in u-variables."""
    total = MultiPoly.constant(rs.nvars, "u", 1)
    for root in rs.positive_roots:
        total = total * MultiPoly.linear_form(rs.nvars, "u", root)
    return total


def restrict_at_fixed_point(w, p):
    """Restriction of a class in the y-variables to the fixed point w:
    rename y_i to u_i, then let w act."""
    return act_on_poly(w, p.with_prefix("u"))


def euler_class_at_fixed_point(w, rs):
    """Equivariant Euler class of the normal bundle at the fixed point w:
    w applied to the product of positive-root linear forms."""
    return act_on_poly(w, _root_product(rs))


def _rat_sum(summands, nvars, threads=1):
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            summands = list(pool.map(lambda f: f(), summands))
    else:
        summands = (f() for f in summands)
    total = RatFun.zero(nvars, "u")
    for s in summands:
        total = total + s
    return total


def flag_integral(problem, threads=1):
    """The Weyl sum of restriction over Euler class, reduced to a polynomial.

    For an integrand of degree equal to the number of positive roots the
    result is a constant (the ordinary integral); below that degree it is 0;
    above it is the non-constant pushforward polynomial in the u-variables.
    """
    rs = problem.root_system
    f_u = problem.integrand.with_prefix("u")
    product = _root_product(rs)

    def make_summand(w):
        return lambda: RatFun(act_on_poly(w, f_u), act_on_poly(w, product))

    total = _rat_sum(
        [make_summand(w) for w in weyl_elements(rs)], rs.nvars, threads
    )
    try:
        return total.as_poly()
    except NotPolynomialError as exc:
        raise InvariantViolation(
            "localization sum did not reduce to a polynomial"
        ) from exc


def grassmannian_chern_number(problem, threads=1):
    """Sum over coordinate k-planes of the Chern monomial in the elementary
    symmetric polynomials of the chosen variables, divided by the product of
    differences against the complementary variables.

    Returns an exact rational (asserted integral) when the weighted degree
    sum(r * m_r) matches k(n-k), the rational 0 below that, and the reduced
    polynomial above it.
    """
    n, k = problem.n, problem.k

    def make_summand(subset):
        def build():
            num = MultiPoly.constant(n, "u", 1)
            for r, e in enumerate(problem.exponents, start=1):
                if e:
                    num = num * elementary_symmetric(r, subset.indices, n, "u") ** e
            den = MultiPoly.constant(n, "u", 1)
            for i in subset.indices:
                for j in subset.complement:
                    den = den * (
                        MultiPoly.variable(n, "u", i) - MultiPoly.variable(n, "u", j)
                    )
            return RatFun(num, den)

        return build

    total = _rat_sum([make_summand(s) for s in subsets_lex(n, k)], n, threads)
    try:
        reduced = total.as_poly()
    except NotPolynomialError as exc:
        raise InvariantViolation(
            "localization sum did not reduce to a polynomial"
        ) from exc

    if problem.weighted_degree > problem.target_degree:
        return reduced
    if not reduced.is_constant():
        raise InvariantViolation("expected a constant localization total")
    value = reduced.constant_value()
    if problem.weighted_degree < problem.target_degree:
        if value:
            raise InvariantViolation("under-degree Chern monomial did not vanish")
        return Fraction(0)
    if value.denominator != 1:
        raise InvariantViolation(f"Chern number {value} is not an integer")
    return value


def euler_characteristic(family, rank, method="symbolic", seed=0):
    """Number of torus fixed points of the flag manifold: the Weyl group
    order, recomputed as the integral of the top class and asserted equal."""
    rs = build_root_system(family, rank)
    order = weyl_order(family, rank)
    top = MultiPoly.constant(rs.nvars, "y", 1)
    for root in rs.positive_roots:
        top = top * MultiPoly.linear_form(rs.nvars, "y", root)
    problem = FlagIntegralProblem(rs, top)
    if method == "symbolic":
        value = flag_integral(problem).constant_value()
    elif method == "evaluate":
        value = flag_integral_evaluated(problem, seed=seed)
    else:
        raise PreconditionError(f"unknown method {method!r}")
    if value != order:
        raise InvariantViolation(
            f"fixed-point count {value} does not match the Weyl group order {order}"
        )
    return order


# ---------------------------------------------------------------------------
# Evaluation route
# ---------------------------------------------------------------------------


def sample_points(nvars, seed, count=3, low=1, high=9999):
    """Integer points with pairwise distinct coordinates; for the classical
    root data distinct positive values keep every root form nonzero."""
    rng = random.Random(seed)
    return [tuple(rng.sample(range(low, high), nvars)) for _ in range(count)]


def _int_terms(p):
    """(integer terms, denominator scale): p = sum(c * monomial) / scale."""
    scale = 1
    for c in p.terms.values():
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    terms = [(int(c * scale), exps) for exps, c in p.terms.items()]
    return terms, scale


def _eval_int_terms(terms, point):
    total = 0
    for coeff, exps in terms:
        v = coeff
        for x, e in zip(point, exps):
            if e:
                v *= x**e
        total += v
    return total


def _transformed_point(w, point):
    return tuple(s * point[p] for p, s in zip(w.perm, w.signs))


def flag_integral_value_at(problem, point):
    """Exact scalar Weyl sum of the integrand over the Euler class at one
    integer point; the image of the point under each group element feeds the
    same expanded integrand and the factored root product."""
    rs = problem.root_system
    terms, scale = _int_terms(problem.integrand)
    roots = rs.positive_roots
    total = Fraction(0)
    for w in weyl_elements(rs):
        y = _transformed_point(w, point)
        den = 1
        for root in roots:
            den *= sum(c * v for c, v in zip(root, y) if c)
        if den == 0:
            raise ZeroDivisionError("point lies on a root hyperplane")
        total += Fraction(_eval_int_terms(terms, y), den * scale)
    return total


def flag_integral_evaluated(problem, seed=0, count=3):
    """Constant value of a flag integral via point evaluation.

    Only valid when the result is a constant, i.e. the integrand degree does
    not exceed the number of positive roots.  All sampled points must agree
    exactly; the symbolic route remains the authority.
    """
    rs = problem.root_system
    if problem.integrand.total_degree() > len(rs.positive_roots):
        raise PreconditionError(
            "evaluation route needs a constant result; integrand degree is too high"
        )
    values = [
        flag_integral_value_at(problem, point)
        for point in sample_points(rs.nvars, seed)[:count]
    ]
    if any(v != values[0] for v in values):
        raise InvariantViolation("evaluation route produced inconsistent values")
    return values[0]


def flag_evaluation_cross_check(problem, result, seed=0, count=3):
    """True when the scalar sum of summands matches the symbolic result at
    `count` random points."""
    for point in sample_points(problem.root_system.nvars, seed, count):
        if flag_integral_value_at(problem, point) != result.evaluate(point):
            return False
    return True


def grassmann_value_at(problem, point):
    """Exact scalar value of the Grassmannian localization sum at a point."""
    n, k = problem.n, problem.k
    total = Fraction(0)
    for subset in subsets_lex(n, k):
        chosen = [point[i - 1] for i in subset.indices]
        num = 1
        for r, e in enumerate(problem.exponents, start=1):
            if e:
                sigma = sum(math.prod(c) for c in combinations(chosen, r))
                num *= sigma**e
        den = 1
        for i in subset.indices:
            for j in subset.complement:
                den *= point[i - 1] - point[j - 1]
        total += Fraction(num, den)
    return total


def grassmann_evaluation_cross_check(problem, result, seed=0, count=3):
    """True when point evaluation of the subset sum matches the result."""
    for point in sample_points(problem.n, seed, count):
        value = grassmann_value_at(problem, point)
        expected = result.evaluate(point) if isinstance(result, MultiPoly) else result
        if value != expected:
            return False
    return True
