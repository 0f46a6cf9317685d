"""Root systems and Weyl groups of the classical families A, B, C, D.

Weyl group elements are signed permutations: the element with permutation
``p`` and signs ``s`` substitutes variable i by ``s[i]`` times variable
``p[i]`` (0-based internally).  Family A uses the U(n) convention: rank n
comes with n+1 variables permuted by the full symmetric group and no sign
flips; families B and C flip signs freely, family D only an even number of
them.
"""

import math
from dataclasses import dataclass
from itertools import permutations, product

from .algebra import MultiPoly, RatFun
from .errors import PreconditionError, RingMismatchError

FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    nvars: int
    positive_roots: tuple  # integer coefficient vectors of length nvars


def build_root_system(family, rank):
    """Standard positive-root data for a classical family and rank.

    D needs rank >= 2; D_2 is accepted although it degenerates to A_1 x A_1.
    """
    if family not in FAMILIES:
        raise PreconditionError(f"unsupported family {family!r}; choose one of A, B, C, D")
    if rank < 1:
        raise PreconditionError("rank must be at least 1")
    if family == "D" and rank < 2:
        raise PreconditionError("family D needs rank >= 2")

    nvars = rank + 1 if family == "A" else rank
    roots = []

    def vec(entries):
        v = [0] * nvars
        for idx, c in entries:
            v[idx] += c
        return tuple(v)

    for i in range(nvars):
        for j in range(i + 1, nvars):
            roots.append(vec([(i, 1), (j, -1)]))
            if family in ("B", "C", "D"):
                roots.append(vec([(i, 1), (j, 1)]))
    if family == "B":
        for i in range(nvars):
            roots.append(vec([(i, 1)]))
    elif family == "C":
        for i in range(nvars):
            roots.append(vec([(i, 2)]))
    return RootSystem(family, rank, nvars, tuple(roots))


def weyl_order(family, rank):
    """Order of the Weyl group, in closed form."""
    if family == "A":
        return math.factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * math.factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    raise PreconditionError(f"unsupported family {family!r}")


@dataclass(frozen=True)
class WeylElement:
    """A signed permutation: variable i maps to signs[i] * variable perm[i]."""

    perm: tuple
    signs: tuple

    @classmethod
    def identity(cls, nvars):
        return cls(tuple(range(nvars)), (1,) * nvars)

    def __mul__(self, other):
        # composition in action order: act(v * w, p) == act(v, act(w, p))
        perm = tuple(self.perm[j] for j in other.perm)
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(len(self.perm)))
        return WeylElement(perm, signs)

    def inverse(self):
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i in range(n):
            perm[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        return WeylElement(tuple(perm), tuple(signs))

    def __str__(self):
        entries = [
            f"{p + 1}{'+' if s > 0 else '-'}" for p, s in zip(self.perm, self.signs)
        ]
        return "[" + ",".join(entries) + "]"


def weyl_elements(rs):
    """Yield each Weyl group element exactly once, in a deterministic order."""
    n = rs.nvars
    if rs.family == "A":
        for perm in permutations(range(n)):
            yield WeylElement(perm, (1,) * n)
        return
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            if rs.family == "D" and math.prod(signs) != 1:
                continue
            yield WeylElement(perm, signs)


def permutation_sign(perm):
    """Sign of a permutation from its inversion count."""
    inv = 0
    n = len(perm)
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv & 1 else 1


def act_on_poly(w, p):
    """Substitute variable i by signs[i] * variable perm[i] throughout p."""
    if len(w.perm) != p.nvars:
        raise RingMismatchError("element size does not match polynomial ring")
    perm, signs = w.perm, w.signs
    out = {}
    for exps, coeff in p.terms.items():
        ne = [0] * p.nvars
        neg = False
        for i, e in enumerate(exps):
            if e:
                ne[perm[i]] = e
                if signs[i] < 0 and e & 1:
                    neg = not neg
        out[tuple(ne)] = -coeff if neg else coeff
    return MultiPoly._make(p.nvars, p.prefix, out)


def act_on_ratfun(w, r):
    """Apply the substitution to numerator and denominator, re-canonicalized."""
    return RatFun(act_on_poly(w, r.num), act_on_poly(w, r.den))


def act_on_root(w, root):
    """The image of an integer root vector under the signed permutation."""
    if len(w.perm) != len(root):
        raise RingMismatchError("element size does not match root length")
    out = [0] * len(root)
    for i, c in enumerate(root):
        if c:
            out[w.perm[i]] += w.signs[i] * c
    return tuple(out)
