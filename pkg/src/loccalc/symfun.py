"""Symmetric function toolkit: elementary symmetric polynomials, conversion
of symmetric polynomials to the elementary basis, and a small Schubert
calculus engine driven by the Pieri rules.

The Schubert side is deliberately minimal: products with the single-row and
single-column special classes (Pieri and dual Pieri rules) are enough to
integrate monomials in the Chern classes of the tautological subbundle of a
Grassmannian, which is exactly what the localization engine is tested
against.
"""

from fractions import Fraction
from itertools import combinations

from .algebra import MultiPoly
from .errors import InvariantViolation, NotSymmetricError, PreconditionError


class Partition:
    """A weakly decreasing tuple of positive parts (trailing zeros trimmed)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise PreconditionError("partition parts must be non-negative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PreconditionError("partition parts must be weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    def size(self):
        return sum(self.parts)

    def fits_in_box(self, k, m):
        """At most k parts, each at most m."""
        return len(self.parts) <= k and all(p <= m for p in self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __repr__(self):
        return f"Partition({list(self.parts)})"


def elementary_symmetric(r, var_indices, nvars, prefix="u"):
    """The r-th elementary symmetric polynomial over a subset of variables.

    `var_indices` are 1-based.  r = 0 gives 1; r beyond the subset size gives
    the zero polynomial; negative r is an error.
    """
    if r < 0:
        raise PreconditionError("elementary symmetric degree must be non-negative")
    var_indices = tuple(var_indices)
    if len(set(var_indices)) != len(var_indices):
        raise PreconditionError("variable indices must be distinct")
    if any(not 1 <= i <= nvars for i in var_indices):
        raise PreconditionError("variable index out of range")
    if r > len(var_indices):
        return MultiPoly.zero(nvars, prefix)
    terms = {}
    for combo in combinations(var_indices, r):
        exps = [0] * nvars
        for i in combo:
            exps[i - 1] = 1
        terms[tuple(exps)] = Fraction(1)
    return MultiPoly._make(nvars, prefix, terms)


def _swap_vars(p, i, j):
    out = {}
    for exps, coeff in p.terms.items():
        e = list(exps)
        e[i], e[j] = e[j], e[i]
        out[tuple(e)] = coeff
    return MultiPoly._make(p.nvars, p.prefix, out)


def symmetry_witness(p):
    """None when p is symmetric, else a 1-based pair (i, i+1) whose
    transposition changes p.  Adjacent transpositions generate the whole
    symmetric group, so checking them suffices."""
    for i in range(p.nvars - 1):
        if _swap_vars(p, i, i + 1) != p:
            return (i + 1, i + 2)
    return None


def is_symmetric(p):
    return symmetry_witness(p) is None


class EBasisPoly:
    """A polynomial written in the elementary symmetric generators.

    `terms` maps exponent vectors over (e_1, ..., e_l) to coefficients,
    where l is the number of ring variables of the source polynomial.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms):
        self.nvars = nvars
        self.terms = {tuple(e): Fraction(c) for e, c in terms.items() if c}

    def expand(self, prefix="u"):
        """Multiply the elementary polynomials back out."""
        basis = [
            elementary_symmetric(r, range(1, self.nvars + 1), self.nvars, prefix)
            for r in range(self.nvars + 1)
        ]
        total = MultiPoly.zero(self.nvars, prefix)
        for exps, coeff in self.terms.items():
            piece = MultiPoly.constant(self.nvars, prefix, coeff)
            for r, e in enumerate(exps):
                if e:
                    piece = piece * basis[r + 1] ** e
            total = total + piece
        return total

    def as_chern_poly(self):
        """The same data as a polynomial in variables c1..cl, for display."""
        return MultiPoly(self.nvars, "c", self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, EBasisPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    __hash__ = None

    def __str__(self):
        return str(self.as_chern_poly())

    def __repr__(self):
        return f"EBasisPoly({self})"


def to_elementary_basis(p):
    """Rewrite a symmetric polynomial in the elementary symmetric basis.

    Classical leading-term subtraction: the graded-lex leading exponent of a
    symmetric polynomial is weakly decreasing, and the elementary monomial
    with matching leading term is e_i raised to the successive differences.
    Raises NotSymmetricError (with a witness transposition) on asymmetric
    input; expanding the result reproduces the input exactly.
    """
    witness = symmetry_witness(p)
    if witness is not None:
        i, j = witness
        raise NotSymmetricError(
            f"not symmetric: swapping {p.prefix}{i} and {p.prefix}{j} changes the polynomial",
            witness,
        )
    n = p.nvars
    basis = [
        elementary_symmetric(r, range(1, n + 1), n, p.prefix) for r in range(n + 1)
    ]
    work = p
    out = {}
    while work.terms:
        exps, coeff = work.leading_term()
        if any(exps[i] < exps[i + 1] for i in range(n - 1)):
            raise InvariantViolation("leading exponent of a symmetric polynomial is not a partition")
        mu = tuple(exps[i] - exps[i + 1] for i in range(n - 1)) + (exps[n - 1],)
        piece = MultiPoly.constant(n, p.prefix, coeff)
        for r, e in enumerate(mu):
            if e:
                piece = piece * basis[r + 1] ** e
        work = work - piece
        out[mu] = coeff
    return EBasisPoly(n, out)


# ---------------------------------------------------------------------------
# Pieri-rule Schubert calculus on a k x m box
# ---------------------------------------------------------------------------


def _padded(lam, k):
    return lam.parts + (0,) * (k - len(lam.parts))


def pieri_product(lam, r, k, m):
    """Multiply by the single-row class: all ways to add r boxes to `lam`,
    no two in the same column, inside the k x m box."""
    if not lam.fits_in_box(k, m):
        raise PreconditionError(f"{lam} does not fit in the {k}x{m} box")
    if not 0 <= r <= m:
        raise PreconditionError(f"row class degree {r} out of range 0..{m}")
    parts = _padded(lam, k)
    out = []

    def rec(i, remaining, built):
        if i == k:
            if remaining == 0:
                out.append(Partition(built))
            return
        upper = m if i == 0 else parts[i - 1]
        room = min(upper - parts[i], remaining)
        for add in range(room + 1):
            rec(i + 1, remaining - add, built + [parts[i] + add])

    rec(0, r, [])
    return sorted(out, key=lambda q: q.parts, reverse=True)


def dual_pieri_product(lam, r, k, m):
    """Multiply by the single-column class: all ways to add r boxes to `lam`,
    no two in the same row, inside the k x m box."""
    if not lam.fits_in_box(k, m):
        raise PreconditionError(f"{lam} does not fit in the {k}x{m} box")
    if not 0 <= r <= k:
        raise PreconditionError(f"column class degree {r} out of range 0..{k}")
    parts = _padded(lam, k)
    out = []
    for rows in combinations(range(k), r):
        mu = list(parts)
        for i in rows:
            mu[i] += 1
        if mu[0] > m:
            continue
        if any(mu[i] < mu[i + 1] for i in range(k - 1)):
            continue
        out.append(Partition(mu))
    return sorted(out, key=lambda q: q.parts, reverse=True)


def schubert_integral(expr, k, m):
    """Integral of a formal combination of Schubert classes over the
    Grassmannian with a k x m box: the coefficient of the full box."""
    for lam in expr:
        if not lam.fits_in_box(k, m):
            raise PreconditionError(f"{lam} does not fit in the {k}x{m} box")
    full = Partition((m,) * k)
    return Fraction(expr.get(full, 0))


def grassmann_chern_number_pieri(n, k, exponents):
    """Integral of c_1(S)^m_1 ... c_k(S)^m_k over G(k, C^n) by iterated
    Pieri products, independent of the localization engine.

    The tautological subbundle has c_i(S) = (-1)^i times the single-column
    class of height i, so the product of column classes is accumulated by the
    dual Pieri rule and the sign is applied at the end.
    """
    if not 1 <= k < n:
        raise PreconditionError("need 1 <= k < n")
    exponents = tuple(int(e) for e in exponents)
    if len(exponents) != k or any(e < 0 for e in exponents):
        raise PreconditionError("need one non-negative exponent per Chern class c_1..c_k")
    m = n - k
    classes = {Partition(): Fraction(1)}
    for r, mult in enumerate(exponents, start=1):
        for _ in range(mult):
            step = {}
            for lam, coeff in classes.items():
                for mu in dual_pieri_product(lam, r, k, m):
                    step[mu] = step.get(mu, Fraction(0)) + coeff
            classes = step
    sign = -1 if sum(r * e for r, e in enumerate(exponents, start=1)) & 1 else 1
    return sign * schubert_integral(classes, k, m)
