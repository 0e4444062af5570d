"""Joseph polynomials of torus-stable slices and Macdonald
representations.

A :class:`Presentation` records a multiplicity-free ambient weight list, the
subset spanned by a linear slice, and extra equation weights.  Its
K-polynomial is the product of Euler factors 1 - e^{-wt} over the
complementary weights and the equations; the Joseph polynomial is the lowest
nonzero graded piece of that character.  The block products
:func:`macdonald_poly` give the same polynomials up to positive scalar for
the slices attached to marked partitions, and :func:`macdonald_span` spans
the Weyl-group representation they generate.
"""

from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import Iterable

from .algebra import (
    LaurentChar,
    Matrix,
    MultiPoly,
    lowest_term,
    perm_sign,
    row_reduce,
)
from .partitions import BiPartition, Partition, from_bipartition
from .weyl import act_on_poly, block_boundaries, weyl_group

Weight = tuple[int, ...]


class Presentation:
    """Ambient weights, spanned weights, and equation weights of a
    torus-stable linear slice."""

    __slots__ = ("ambient", "span", "equations")

    def __init__(
        self,
        ambient: Iterable[Iterable[int]],
        span: Iterable[Iterable[int]] = (),
        equations: Iterable[Iterable[int]] = (),
    ):
        ambient = tuple(tuple(int(c) for c in w) for w in ambient)
        if not ambient:
            raise ValueError("ambient weight list must be nonempty")
        n = len(ambient[0])
        for w in ambient:
            if len(w) != n or not any(w):
                raise ValueError(f"bad ambient weight {w}")
        if len(set(ambient)) != len(ambient):
            raise ValueError("ambient weights must be distinct")
        span = tuple(tuple(int(c) for c in w) for w in span)
        if not set(span) <= set(ambient):
            raise ValueError("span must consist of ambient weights")
        if len(set(span)) != len(span):
            raise ValueError("span weights must be distinct")
        equations = tuple(tuple(int(c) for c in w) for w in equations)
        for w in equations:
            if len(w) != n or not any(w):
                raise ValueError(f"bad equation weight {w}")
        if len(equations) > len(span):
            raise ValueError("more equations than spanned weights")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "span", span)
        object.__setattr__(self, "equations", equations)

    def __setattr__(self, name, value):
        raise AttributeError("Presentation is immutable")

    @property
    def nvars(self) -> int:
        return len(self.ambient[0])

    def __repr__(self) -> str:
        return (
            f"Presentation(ambient={list(self.ambient)}, "
            f"span={list(self.span)}, equations={list(self.equations)})"
        )


def k_polynomial(p: Presentation) -> LaurentChar:
    """Product of Euler factors over the missing weights and equations."""
    n = p.nvars
    ch = LaurentChar.one(n)
    spanned = set(p.span)
    for wt in p.ambient:
        if wt not in spanned:
            ch = ch * LaurentChar.euler_factor(wt)
    for wt in p.equations:
        ch = ch * LaurentChar.euler_factor(wt)
    return ch


def joseph_poly(p: Presentation) -> MultiPoly:
    """Lowest graded piece of the K-polynomial of p."""
    return lowest_term(k_polynomial(p))


def _square_vandermonde(indices, nvars: int) -> MultiPoly:
    """prod_{k < l in indices} (e_k^2 - e_l^2), expanded as the
    antisymmetrized sum over permutations to avoid intermediate blowup."""
    m = len(indices)
    terms = {}
    for p in permutations(range(m)):
        exp = [0] * nvars
        for t, var in enumerate(indices):
            exp[var - 1] = 2 * (m - 1 - p[t])
        terms[tuple(exp)] = perm_sign(p)
    return MultiPoly(nvars, terms)


def macdonald_poly(bp: BiPartition) -> MultiPoly:
    """The block product attached to a bi-partition via its flag blocks.

    Blocks before the |mu| anchor contribute the square-difference product
    over their variable range; blocks after it contribute the same product
    times the plain product of their variables.
    """
    bp = BiPartition(Partition(bp.mu), Partition(bp.nu))
    mp = from_bipartition(bp)
    d = block_boundaries(mp)
    n = bp.size
    mu1 = bp.mu.part(1)
    f = MultiPoly.one(n)
    for b in range(len(d) - 1):
        idx = list(range(d[b] + 1, d[b + 1] + 1))
        f = f * _square_vandermonde(idx, n)
        if b >= mu1:
            for k in idx:
                f = f * MultiPoly.variable(k, n)
    return f


def macdonald_poly_direct(mu, nu) -> MultiPoly:
    """The same family written directly on the two partitions: one
    square-difference block per part of mu, one per part of nu shifted past
    |mu|, and the product of all variables past |mu|.

    The mu blocks tile the first |mu| variables with the smallest part
    first; the nu blocks tile the rest largest part first.  The asymmetry
    matches the flag-block order of :func:`macdonald_poly`, which walks the
    mu side of the flag from the shortest column up.
    """
    mu, nu = Partition(mu), Partition(nu)
    n = mu.size + nu.size
    f = MultiPoly.one(n)
    for i in range(1, len(mu) + 1):
        idx = list(range(mu.sum_after(i) + 1, mu.sum_from(i) + 1))
        f = f * _square_vandermonde(idx, n)
    for i in range(1, len(nu) + 1):
        idx = [
            mu.size + k
            for k in range(nu.sum_before(i) + 1, nu.sum_through(i) + 1)
        ]
        f = f * _square_vandermonde(idx, n)
    for k in range(mu.size + 1, n + 1):
        f = f * MultiPoly.variable(k, n)
    return f


def macdonald_span(seed: MultiPoly, n: int) -> tuple[int, list[MultiPoly]]:
    """Dimension and reduced basis of the span of the Weyl-group orbit of
    seed.

    The full group is enumerated, so the rank is capped at 5.  The basis is
    the reduced row echelon form over the graded-lexicographic monomial
    order, largest monomial first, hence deterministic.
    """
    if n > 5:
        raise ValueError(f"rank {n} too large for full group enumeration")
    if seed.nvars != n:
        raise ValueError("seed has the wrong number of variables")
    images = [act_on_poly(w, seed) for w in weyl_group(n)]
    monomials = sorted(
        {e for f in images for e in f.terms},
        key=lambda e: (sum(e), e),
        reverse=True,
    )
    if not monomials:
        return 0, []
    mat = Matrix(
        [[Fraction(f.terms.get(e, 0)) for e in monomials] for f in images]
    )
    red, pivots = row_reduce(mat)
    basis = [
        MultiPoly(
            n,
            {
                monomials[c]: red.rows[r][c]
                for c in range(len(monomials))
                if red.rows[r][c]
            },
        )
        for r in range(len(pivots))
    ]
    return len(pivots), basis


def _tableau_count(lam: Partition) -> int:
    """Standard Young tableaux of shape lam, by the hook length formula."""
    t = lam.transpose()
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + t[j] - i - 1
    return factorial(lam.size) // hooks


def irrep_dim(bp: BiPartition) -> int:
    """Dimension of the irreducible hyperoctahedral representation
    labelled by bp: binomial(n, |mu|) times the two tableau counts."""
    bp = BiPartition(Partition(bp.mu), Partition(bp.nu))
    n = bp.size
    return comb(n, bp.mu.size) * _tableau_count(bp.mu) * _tableau_count(bp.nu)


def sign_flip_symmetry(f: MultiPoly) -> str:
    """Behaviour under the subgroup of coordinate sign flips: "invariant"
    when every exponent is even, "anti_invariant" when every exponent of
    every variable is odd, else "neither"."""
    if not f.terms:
        return "invariant"
    parities = set()
    for exp in f.terms:
        parities.update(e % 2 for e in exp)
    if parities == {0}:
        return "invariant"
    if parities == {1}:
        return "anti_invariant"
    return "neither"
