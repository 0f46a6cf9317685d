"""Exact arithmetic kernel: sparse multivariate polynomials over arbitrary
precision rationals, and canonically reduced rational functions.

Polynomials live in a ring fixed by a variable count `nvars` and a display
prefix (one of ``u``, ``y``, ``a``, ``c``).  Monomials are exponent tuples of
length `nvars`; coefficients are `fractions.Fraction` and never stored when
zero.  The monomial order used throughout (printing, leading terms, division)
is graded lexicographic.

Rational functions are kept fully reduced with a unique canonical form: the
numerator/denominator pair has unit GCD and the denominator has coprime
integer coefficients with a positive graded-lex leading coefficient.
"""

import math
from fractions import Fraction

from .errors import (
    InvariantViolation,
    NotPolynomialError,
    PreconditionError,
    RingMismatchError,
)

# Arbitrary-precision exact rational scalar; the coefficient type everywhere.
BigRational = Fraction

VALID_PREFIXES = ("u", "y", "a", "c")


def _grlex(item):
    """Sort key for (exponents, coefficient) pairs: graded lexicographic."""
    exps = item[0]
    return (sum(exps), exps)


class MultiPoly:
    """A sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "prefix", "terms")

    def __init__(self, nvars, prefix, terms=None):
        if nvars < 1:
            raise PreconditionError("ring needs at least one variable")
        if prefix not in VALID_PREFIXES:
            raise PreconditionError(f"unknown variable prefix {prefix!r}")
        self.nvars = nvars
        self.prefix = prefix
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise PreconditionError("monomial length does not match ring")
            if any(e < 0 or int(e) != e for e in exps):
                raise PreconditionError("exponents must be non-negative integers")
            coeff = Fraction(coeff)
            if coeff:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _make(cls, nvars, prefix, terms):
        # internal fast path: trusts that terms are clean
        self = object.__new__(cls)
        self.nvars = nvars
        self.prefix = prefix
        self.terms = terms
        return self

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars, prefix="u"):
        return cls._make(nvars, prefix, {})

    @classmethod
    def constant(cls, nvars, prefix, value):
        value = Fraction(value)
        if not value:
            return cls.zero(nvars, prefix)
        return cls._make(nvars, prefix, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars, prefix, index):
        """The single variable <prefix><index>, 1-based index."""
        if not 1 <= index <= nvars:
            raise PreconditionError(f"variable index {index} out of range 1..{nvars}")
        exps = tuple(1 if i == index - 1 else 0 for i in range(nvars))
        return cls._make(nvars, prefix, {exps: Fraction(1)})

    @classmethod
    def linear_form(cls, nvars, prefix, coeffs):
        """Sum of coeffs[i] * variable(i+1); coeffs has length nvars."""
        if len(coeffs) != nvars:
            raise PreconditionError("coefficient vector length does not match ring")
        terms = {}
        for i, c in enumerate(coeffs):
            c = Fraction(c)
            if c:
                exps = tuple(1 if j == i else 0 for j in range(nvars))
                terms[exps] = c
        return cls._make(nvars, prefix, terms)

    # -- structure --------------------------------------------------------

    def _check_ring(self, other):
        if self.nvars != other.nvars or self.prefix != other.prefix:
            raise RingMismatchError("incompatible rings")

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.nvars: Fraction(1)}

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        """The value of a constant polynomial as a Fraction."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise PreconditionError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self):
        """Maximum total degree of any term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading_term(self):
        """(exponents, coefficient) of the graded-lex leading term, or None."""
        if not self.terms:
            return None
        exps = max(self.terms, key=lambda e: (sum(e), e))
        return exps, self.terms[exps]

    def with_prefix(self, prefix):
        """The same polynomial with variables renamed to another prefix."""
        if prefix == self.prefix:
            return self
        if prefix not in VALID_PREFIXES:
            raise PreconditionError(f"unknown variable prefix {prefix!r}")
        return MultiPoly._make(self.nvars, prefix, dict(self.terms))

    def signed_content(self):
        """Fraction c with p/c integer-primitive and positive leading coeff.

        Returns 1 for the zero polynomial.
        """
        if not self.terms:
            return Fraction(1)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        if self.leading_term()[1] < 0:
            content = -content
        return content

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, self.prefix, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_ring(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            s = terms.get(exps, Fraction(0)) + coeff
            if s:
                terms[exps] = s
            elif exps in terms:
                del terms[exps]
        return MultiPoly._make(self.nvars, self.prefix, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._make(
            self.nvars, self.prefix, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, self.prefix, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return MultiPoly.zero(self.nvars, self.prefix)
            return MultiPoly._make(
                self.nvars, self.prefix, {e: c * other for e, c in self.terms.items()}
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_ring(other)
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                s = terms.get(exps)
                s = ca * cb if s is None else s + ca * cb
                terms[exps] = s
        return MultiPoly._make(
            self.nvars, self.prefix, {e: c for e, c in terms.items() if c}
        )

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise PreconditionError("exponent must be a non-negative integer")
        result = MultiPoly.constant(self.nvars, self.prefix, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, self.prefix, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.prefix == other.prefix
            and self.terms == other.terms
        )

    __hash__ = None

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, point):
        """Exact value at a point given as a sequence of rationals."""
        if len(point) != self.nvars:
            raise PreconditionError("point length does not match ring")
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            v = coeff
            for x, e in zip(point, exps):
                if e:
                    v *= x**e
            total += v
        return total

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exps, coeff in sorted(self.terms.items(), key=_grlex, reverse=True):
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"{self.prefix}{i + 1}")
                elif e > 1:
                    factors.append(f"{self.prefix}{i + 1}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not chunks:
                chunks.append(body if coeff > 0 else "-" + body)
            else:
                chunks.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self):
        return f"MultiPoly({self})"


def poly_ring_one(nvars, prefix="u"):
    return MultiPoly.constant(nvars, prefix, 1)


def exact_divide(p, q):
    """Return p / q when q divides p exactly, else None.

    Multivariate division by the single divisor q under graded-lex order;
    exactness means the remainder vanishes.
    """
    p._check_ring(q)
    if q.is_zero():
        raise PreconditionError("division by the zero polynomial")
    if p.is_zero():
        return MultiPoly.zero(p.nvars, p.prefix)
    qlead_exps, qlead_coeff = q.leading_term()
    rem = dict(p.terms)
    quot = {}
    while rem:
        rexps = max(rem, key=lambda e: (sum(e), e))
        diff = tuple(a - b for a, b in zip(rexps, qlead_exps))
        if any(d < 0 for d in diff):
            return None
        t = rem[rexps] / qlead_coeff
        quot[diff] = t
        for exps, coeff in q.terms.items():
            target = tuple(a + b for a, b in zip(diff, exps))
            s = rem.get(target, Fraction(0)) - t * coeff
            if s:
                rem[target] = s
            elif target in rem:
                del rem[target]
    return MultiPoly._make(p.nvars, p.prefix, quot)


# ---------------------------------------------------------------------------
# GCD machinery.  Internally everything runs on plain dicts mapping exponent
# tuples to Python ints (primitive integer polynomials); the public entry
# point converts to and from MultiPoly.  Strategy: monomial content, then
# trial division, then heuristic evaluate/interpolate GCD, then a primitive
# pseudo-remainder sequence as the guaranteed fallback.
# ---------------------------------------------------------------------------

_HEU_TRIES = 6


class _HeuristicFailed(Exception):
    pass


def _int_lead(d):
    return max(d, key=lambda e: (sum(e), e))


def _int_content(d):
    g = 0
    for c in d.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def _int_scale(d, k):
    return {e: c * k for e, c in d.items()}


def _int_quo_ground(d, k):
    return {e: c // k for e, c in d.items()}


def _int_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            exps = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(exps)
            out[exps] = ca * cb if s is None else s + ca * cb
    return {e: c for e, c in out.items() if c}


def _int_sub(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return out


def _int_try_divide(a, b):
    """Exact division in Z[x..]; None when b does not divide a."""
    blead = _int_lead(b)
    bc = b[blead]
    rem = dict(a)
    quot = {}
    while rem:
        rexps = max(rem, key=lambda e: (sum(e), e))
        diff = tuple(x - y for x, y in zip(rexps, blead))
        if any(d < 0 for d in diff):
            return None
        t, r = divmod(rem[rexps], bc)
        if r:
            return None
        quot[diff] = t
        for exps, coeff in b.items():
            target = tuple(x + y for x, y in zip(diff, exps))
            s = rem.get(target, 0) - t * coeff
            if s:
                rem[target] = s
            elif target in rem:
                del rem[target]
    return quot


def _int_primitive(d):
    if not d:
        return d
    g = _int_content(d)
    if g > 1:
        d = _int_quo_ground(d, g)
    return d


def _eval_var(d, j, x):
    """Substitute variable j by the integer x."""
    out = {}
    for exps, coeff in d.items():
        e = exps[j]
        if e:
            coeff = coeff * x**e
            exps = exps[:j] + (0,) + exps[j + 1 :]
        s = out.get(exps)
        out[exps] = coeff if s is None else s + coeff
    return {e: c for e, c in out.items() if c}


def _interp_var(d, j, x):
    """Recover a polynomial in variable j from its value at x by balanced
    base-x digits, coefficient-wise."""
    out = {}
    h = d
    power = 0
    half = x // 2
    while h:
        nxt = {}
        for exps, coeff in h.items():
            r = coeff % x
            if r > half:
                r -= x
            if r:
                out[exps[:j] + (power,) + exps[j + 1 :]] = r
            q = (coeff - r) // x
            if q:
                nxt[exps] = q
        h = nxt
        power += 1
    return out


def _active_vars(f, g):
    nv = len(next(iter(f))) if f else len(next(iter(g)))
    active = []
    for i in range(nv):
        if any(e[i] for e in f) or any(e[i] for e in g):
            active.append(i)
    return active


def _heu_gcd(f, g):
    """Heuristic GCD of nonzero integer polynomials, verified by division.

    Evaluates both polynomials at a large integer, takes the GCD one level
    down, interpolates back and checks the candidate by exact division.
    Raises _HeuristicFailed when no evaluation point works; the caller then
    falls back to the pseudo-remainder route.
    """
    active = _active_vars(f, g)
    if not active:
        zero = next(iter(f))
        return {zero: math.gcd(next(iter(f.values())), next(iter(g.values())))}
    j = active[0]

    common = math.gcd(_int_content(f), _int_content(g))
    if common > 1:
        f = _int_quo_ground(f, common)
        g = _int_quo_ground(g, common)

    f_norm = max(abs(c) for c in f.values())
    g_norm = max(abs(c) for c in g.values())
    b = 2 * min(f_norm, g_norm) + 29
    x = max(
        min(b, 99 * math.isqrt(b)),
        2 * min(f_norm // abs(f[_int_lead(f)]), g_norm // abs(g[_int_lead(g)])) + 4,
    )

    for _ in range(_HEU_TRIES):
        ff = _eval_var(f, j, x)
        gg = _eval_var(g, j, x)
        if ff and gg:
            h = _heu_gcd(ff, gg)
            h = _int_primitive(_interp_var(h, j, x))
            if h and _int_try_divide(f, h) is not None and _int_try_divide(g, h) is not None:
                if common > 1:
                    h = _int_scale(h, common)
                return h
        x = 73794 * x * math.isqrt(math.isqrt(x)) // 27011
    raise _HeuristicFailed


def _deg_in(d, j):
    return max((e[j] for e in d), default=-1)


def _coeff_of(d, j, k):
    """Coefficient of x_j^k as a polynomial with slot j zeroed."""
    out = {}
    for exps, coeff in d.items():
        if exps[j] == k:
            out[exps[:j] + (0,) + exps[j + 1 :]] = coeff
    return out


def _shift_var(d, j, k):
    return {e[:j] + (e[j] + k,) + e[j + 1 :]: c for e, c in d.items()}


def _content_in(d, j):
    """GCD of the x_j-coefficients (a polynomial in the other variables)."""
    cont = None
    for k in range(_deg_in(d, j) + 1):
        coef = _coeff_of(d, j, k)
        if not coef:
            continue
        cont = coef if cont is None else _int_gcd(cont, coef)
        if len(cont) == 1 and not any(next(iter(cont))) and abs(next(iter(cont.values()))) == 1:
            break
    return cont


def _prem(f, g, j):
    """A pseudo-remainder of f by g with respect to variable j."""
    dg = _deg_in(g, j)
    lc_g = _coeff_of(g, j, dg)
    r = f
    while r and _deg_in(r, j) >= dg:
        dr = _deg_in(r, j)
        lc_r = _coeff_of(r, j, dr)
        r = _int_sub(_int_mul(r, lc_g), _int_mul(_shift_var(g, j, dr - dg), lc_r))
    return r


def _prs_gcd(f, g):
    """Primitive pseudo-remainder-sequence GCD; always correct, used as the
    fallback when the heuristic gives up."""
    active_f = {i for i in _active_vars(f, f)}
    active_g = {i for i in _active_vars(g, g)}
    shared = sorted(active_f & active_g)
    if not shared:
        nv = len(next(iter(f)))
        return {(0,) * nv: math.gcd(_int_content(f), _int_content(g))}
    j = min(shared, key=lambda i: _deg_in(f, i) + _deg_in(g, i))

    cont_f = _content_in(f, j)
    cont_g = _content_in(g, j)
    pp_f = _int_try_divide(f, cont_f)
    pp_g = _int_try_divide(g, cont_g)
    cont = _int_gcd(cont_f, cont_g)

    a, b = pp_f, pp_g
    if _deg_in(a, j) < _deg_in(b, j):
        a, b = b, a
    while True:
        r = _prem(a, b, j)
        if not r:
            h = b
            break
        if _deg_in(r, j) == 0:
            nv = len(next(iter(f)))
            h = {(0,) * nv: 1}
            break
        a, b = b, _int_try_divide(r, _content_in(r, j))
    return _int_mul(cont, h)


def _int_gcd(f, g):
    """GCD of integer polynomial dicts; dispatcher over all strategies."""
    if not f:
        return _int_primitive(g)
    if not g:
        return _int_primitive(f)
    nv = len(next(iter(f)))

    # monomial content comes out first
    mins_f = [min(e[i] for e in f) for i in range(nv)]
    mins_g = [min(e[i] for e in g) for i in range(nv)]
    shift = tuple(min(a, b) for a, b in zip(mins_f, mins_g))
    if any(mins_f):
        f = {tuple(e[i] - mins_f[i] for i in range(nv)): c for e, c in f.items()}
    if any(mins_g):
        g = {tuple(e[i] - mins_g[i] for i in range(nv)): c for e, c in g.items()}

    f = _int_primitive(f)
    g = _int_primitive(g)

    def finish(h):
        if h[_int_lead(h)] < 0:
            h = {e: -c for e, c in h.items()}
        if any(shift):
            h = _shift_all(h, shift)
        return h

    const_f = not any(any(e) for e in f)
    const_g = not any(any(e) for e in g)
    if const_f or const_g:
        return finish({(0,) * nv: 1})
    if f == g:
        return finish(dict(f))

    df, dg = max(sum(e) for e in f), max(sum(e) for e in g)
    if df <= dg and _int_try_divide(g, f) is not None:
        return finish(dict(f))
    if dg <= df and _int_try_divide(f, g) is not None:
        return finish(dict(g))

    try:
        return finish(_heu_gcd(f, g))
    except _HeuristicFailed:
        return finish(_prs_gcd(f, g))


def _shift_all(d, shift):
    return {tuple(a + b for a, b in zip(e, shift)): c for e, c in d.items()}


def _to_int_dict(p):
    """Primitive integer dict for a rational polynomial (scale dropped)."""
    den_lcm = 1
    for c in p.terms.values():
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    d = {e: int(c * den_lcm) for e, c in p.terms.items()}
    return _int_primitive(d)


def poly_gcd(p, q):
    """A greatest common divisor, normalized to have coprime integer
    coefficients and a positive graded-lex leading coefficient.

    Nonzero constants count as units, so any nonzero constant input gives 1.
    Raises when both arguments are zero.
    """
    p._check_ring(q)
    if p.is_zero() and q.is_zero():
        raise PreconditionError("gcd(0, 0) is undefined")
    if p.is_zero() or q.is_zero():
        nz = q if p.is_zero() else p
        content = nz.signed_content()
        return MultiPoly._make(
            nz.nvars, nz.prefix, {e: c / content for e, c in nz.terms.items()}
        )
    h = _int_gcd(_to_int_dict(p), _to_int_dict(q))
    return MultiPoly._make(p.nvars, p.prefix, {e: Fraction(c) for e, c in h.items()})


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RatFun:
    """A fraction of two polynomials in canonical reduced form.

    gcd(num, den) is a unit and den has coprime integer coefficients with a
    positive graded-lex leading coefficient, which makes the representation
    unique; equal fractions compare structurally equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        num._check_ring(den)
        if den.is_zero():
            raise PreconditionError("zero denominator")
        if num.is_zero():
            self.num = num
            self.den = poly_ring_one(num.nvars, num.prefix)
            return
        g = poly_gcd(num, den)
        if not g.is_one():
            num = exact_divide(num, g)
            den = exact_divide(den, g)
            if num is None or den is None:
                raise InvariantViolation("gcd does not divide its arguments")
        content = den.signed_content()
        if content != 1:
            inv = 1 / content
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num, den):
        # internal: trusts that num/den is already canonical
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @classmethod
    def zero(cls, nvars, prefix="u"):
        return cls._reduced(
            MultiPoly.zero(nvars, prefix), poly_ring_one(nvars, prefix)
        )

    @classmethod
    def from_poly(cls, p):
        return cls._reduced(p, poly_ring_one(p.nvars, p.prefix))

    def _check_ring(self, other):
        self.num._check_ring(other.num)

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def as_poly(self):
        """The numerator when the fraction is actually a polynomial."""
        if not self.den.is_one():
            raise NotPolynomialError("not a polynomial")
        return self.num

    def __add__(self, other):
        if isinstance(other, MultiPoly):
            other = RatFun.from_poly(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        self._check_ring(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b = self.num, self.den
        c, d = other.num, other.den
        g = poly_gcd(b, d)
        if g.is_one():
            num = a * d + c * b
            if num.is_zero():
                return RatFun.zero(a.nvars, a.prefix)
            den = b * d
        else:
            b1 = exact_divide(b, g)
            d1 = exact_divide(d, g)
            num = a * d1 + c * b1
            if num.is_zero():
                return RatFun.zero(a.nvars, a.prefix)
            g2 = poly_gcd(num, g)
            if not g2.is_one():
                num = exact_divide(num, g2)
                den = b1 * exact_divide(d, g2)
            else:
                den = b1 * d
        content = den.signed_content()
        if content != 1:
            inv = 1 / content
            num = num * inv
            den = den * inv
        return RatFun._reduced(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._reduced(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, MultiPoly):
            other = RatFun.from_poly(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            other = RatFun.from_poly(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        self._check_ring(other)
        if self.is_zero() or other.is_zero():
            return RatFun.zero(self.num.nvars, self.num.prefix)
        a, b = self.num, self.den
        c, d = other.num, other.den
        g1 = poly_gcd(a, d)
        if not g1.is_one():
            a = exact_divide(a, g1)
            d = exact_divide(d, g1)
        g2 = poly_gcd(c, b)
        if not g2.is_one():
            c = exact_divide(c, g2)
            b = exact_divide(b, g2)
        num = a * c
        den = b * d
        content = den.signed_content()
        if content != 1:
            inv = 1 / content
            num = num * inv
            den = den * inv
        return RatFun._reduced(num, den)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            if isinstance(other, MultiPoly):
                other = RatFun.from_poly(other)
            else:
                if not self.den.is_one():
                    return False
                return self.num == other
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        num = str(self.num)
        den = str(self.den)
        if len(self.num.terms) > 1:
            num = f"({num})"
        if len(self.den.terms) > 1:
            den = f"({den})"
        return f"{num} / {den}"

    def __repr__(self):
        return f"RatFun({self})"
