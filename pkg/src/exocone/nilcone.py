"""The exotic nilpotent cone: points, defining equations, and orbits.

A point is a pair (x1, x2) with x1 a vector of length 2n and x2 an
alternating 2n x 2n matrix.  The cone is cut out by the coefficients of the
Pfaffian characteristic polynomial of x2 (:func:`invariant_polys`); its
symplectic-group orbits are classified by marked partitions, computed
pointwise by :func:`marked_invariant` and realized by
:func:`representative`.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .algebra import (
    Matrix,
    MultiPoly,
    jordan_type,
    kernel_basis,
    pfaffian,
    rank,
    solve_linear,
)
from .partitions import MarkedPartition, Partition, markings_of, to_bipartition
from .weyl import block_boundaries


def symplectic_form(n: int) -> Matrix:
    """The form J with J[i, n+i] = -1 and J[n+i, i] = 1 (0-based blocks)."""
    size = 2 * n
    ent = {}
    for i in range(n):
        ent[(i, n + i)] = -1
        ent[(n + i, i)] = 1
    return Matrix.from_entries(size, size, ent)


def alt_coords(n: int) -> tuple[tuple[int, int], ...]:
    """Upper-triangle coordinates (i, j), 1-based, i < j, row-major; the
    variable order of :func:`invariant_polys`."""
    size = 2 * n
    return tuple(
        (i, j) for i in range(1, size + 1) for j in range(i + 1, size + 1)
    )


class ExoticVector:
    """A point (x1, x2) of the exotic representation space."""

    __slots__ = ("n", "x1", "x2")

    def __init__(self, n: int, x1: Iterable, x2: Matrix):
        x1 = tuple(x1)
        if len(x1) != 2 * n:
            raise ValueError(f"x1 must have length {2 * n}")
        if x2.nrows != 2 * n or (n and x2.ncols != 2 * n):
            raise ValueError(f"x2 must be {2 * n} x {2 * n}")
        for i in range(2 * n):
            if x2.rows[i][i]:
                raise ValueError("x2 has a nonzero diagonal entry")
            for j in range(i + 1, 2 * n):
                if x2.rows[i][j] != -x2.rows[j][i]:
                    raise ValueError("x2 is not alternating")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "x2", x2)

    def __setattr__(self, name, value):
        raise AttributeError("ExoticVector is immutable")

    @classmethod
    def zero(cls, n: int) -> "ExoticVector":
        return cls(n, (0,) * (2 * n), Matrix.zeros(2 * n, 2 * n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExoticVector):
            return NotImplemented
        return (
            self.n == other.n and self.x1 == other.x1 and self.x2 == other.x2
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"ExoticVector(n={self.n}, x1={list(self.x1)})"

    def to_json(self) -> dict:
        upper = []
        for i, j in alt_coords(self.n):
            c = self.x2.rows[i - 1][j - 1]
            if c:
                upper.append([i, j, str(Fraction(c))])
        return {
            "n": self.n,
            "x1": [str(Fraction(c)) for c in self.x1],
            "x2_upper": upper,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ExoticVector":
        n = data["n"]
        x1 = [Fraction(c) for c in data["x1"]]
        ent = {}
        for i, j, c in data["x2_upper"]:
            c = Fraction(c)
            ent[(i - 1, j - 1)] = c
            ent[(j - 1, i - 1)] = -c
        return cls(n, x1, Matrix.from_entries(2 * n, 2 * n, ent))


def weight_vector(n: int, wt: Iterable[int]) -> tuple:
    """The x1 basis vector of torus weight wt = +-eps_i."""
    wt = tuple(wt)
    support = [(k, c) for k, c in enumerate(wt) if c]
    if len(wt) != n or len(support) != 1 or abs(support[0][1]) != 1:
        raise ValueError(f"{wt} is not a weight of the vector factor")
    k, c = support[0]
    vec = [0] * (2 * n)
    vec[k if c > 0 else n + k] = 1
    return tuple(vec)


def weight_matrix(n: int, wt: Iterable[int]) -> Matrix:
    """An x2 basis matrix of torus weight wt, for wt a sum of two distinct
    signed coordinates eps_i +- eps_j."""
    wt = tuple(wt)
    support = [(k, c) for k, c in enumerate(wt) if c]
    if len(wt) != n or len(support) != 2 or any(abs(c) != 1 for _, c in support):
        raise ValueError(f"{wt} is not a weight of the alternating factor")
    (i, ci), (j, cj) = support
    row = i if ci > 0 else n + i
    col = j if cj > 0 else n + j
    return Matrix.from_entries(
        2 * n, 2 * n, {(row, col): 1, (col, row): -1}
    )


@lru_cache(maxsize=None)
def invariant_polys(n: int) -> tuple[MultiPoly, ...]:
    """The defining equations P_1, ..., P_n of the nilpotent locus in the
    alternating factor.

    sum_i t^{n-i} P_i(x) = Pf(t*J - x) up to the constant Pf(J) = +-1,
    which is divided out so that P_0 = 1.  Variables follow
    :func:`alt_coords`; P_i is homogeneous of degree i.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    coords = alt_coords(n)
    nv = len(coords)
    col = {pair: k for k, pair in enumerate(coords)}
    jrows = symplectic_form(n).rows
    size = 2 * n

    def entry(i: int, j: int) -> MultiPoly:
        terms = {}
        if jrows[i][j]:
            terms[(1,) + (0,) * nv] = jrows[i][j]
        if i != j:
            k = col[(i + 1, j + 1)] if i < j else col[(j + 1, i + 1)]
            exp = tuple(
                1 if m == k + 1 else 0 for m in range(nv + 1)
            )
            terms[exp] = -1 if i < j else 1
        return MultiPoly(nv + 1, terms)

    mat = Matrix([[entry(i, j) for j in range(size)] for i in range(size)])
    pf = pfaffian(mat)
    buckets = {}
    for exp, c in pf.terms.items():
        buckets.setdefault(exp[0], {})[exp[1:]] = c
    lead = buckets.get(n, {})
    unit = lead.get((0,) * nv, 0)
    if list(lead) != [(0,) * nv] or unit not in (1, -1):
        raise AssertionError("t^n coefficient is not a unit constant")
    return tuple(
        MultiPoly(nv, buckets.get(n - i, {})) * unit for i in range(1, n + 1)
    )


def is_in_nilcone(v: ExoticVector) -> bool:
    """Whether all defining equations vanish at v (the x1 part is free)."""
    if v.n == 0:
        return True
    vals = [v.x2.rows[i - 1][j - 1] for i, j in alt_coords(v.n)]
    return all(p.evaluate(vals) == 0 for p in invariant_polys(v.n))


def as_endomorphism(v: ExoticVector) -> Matrix:
    """The composition x2 * J, conjugation-covariant in the symplectic
    group."""
    return v.x2 @ symplectic_form(v.n)


def exotic_jordan(v: ExoticVector) -> Partition:
    """The halved Jordan type of the endomorphism of v.

    The Jordan type of x2 * J on a cone point has every part with even
    multiplicity; the partition of n listing each size once per pair is
    returned.  Raises when the type does not pair up.
    """
    jt = jordan_type(as_endomorphism(v))
    if len(jt) % 2 or any(jt[2 * k] != jt[2 * k + 1] for k in range(len(jt) // 2)):
        raise ValueError(f"Jordan type {list(jt)} does not pair up")
    return Partition(jt[0::2])


def marked_invariant(v: ExoticVector) -> MarkedPartition:
    """The marked partition classifying the orbit of v.

    The partition part is the halved Jordan type; the marks are the unique
    compatible tuple for which x1 decomposes as sum over marked indices k
    of M^{lam_k - a_k} xi_k with xi_k in ker M^{lam_k} and
    M^{lam_k - 1} xi_k != 0.  Uniqueness is re-checked by testing every
    candidate marking.
    """
    if not is_in_nilcone(v):
        raise ValueError("vector is not in the exotic nilcone")
    lam = exotic_jordan(v)
    m = as_endomorphism(v)
    x1 = tuple(Fraction(c) for c in v.x1)
    powers: dict[int, Matrix] = {}
    winners = [
        marks
        for marks in markings_of(lam)
        if _marks_match(m, x1, lam, marks, powers)
    ]
    if len(winners) != 1:
        raise AssertionError(
            f"{len(winners)} markings match {list(lam)}; want exactly one"
        )
    return MarkedPartition(lam, winners[0])


def _mpow(m: Matrix, k: int, powers: dict) -> Matrix:
    if k not in powers:
        powers[k] = m ** k
    return powers[k]


def _marks_match(m, x1, lam, marks, powers) -> bool:
    live = [k for k, a in enumerate(marks) if a]
    if not live:
        return not any(x1)
    cols = []
    spans = []
    walls = []
    offsets = []
    for k in live:
        basis = kernel_basis(_mpow(m, lam[k], powers))
        shift = _mpow(m, lam[k] - marks[k], powers)
        top = _mpow(m, lam[k] - 1, powers)
        offsets.append(len(cols))
        cols.extend(shift.apply(b) for b in basis)
        spans.append([top.apply(b) for b in basis])
        walls.append(_column_span(_mpow(m, lam[k], powers)))
    sol = solve_linear(Matrix(zip(*cols)), x1)
    if sol is None:
        return False
    particular, null = sol
    # Each live index needs M^{lam_k - 1} xi_k outside im M^{lam_k} for some
    # solution; a nonzero image alone does not force xi_k to span a summand
    # of size lam_k.  The image is linear in the coefficients, so it stays
    # inside the wall on the whole affine solution set exactly when the
    # particular solution and every kernel direction land inside; finitely
    # many proper subspaces cannot cover the set over the rationals.
    for pos in range(len(live)):
        lo = offsets[pos]
        images = spans[pos]
        hi = lo + len(images)
        wall, wall_rank = walls[pos]
        if _escapes(particular[lo:hi], images, wall, wall_rank):
            continue
        if any(_escapes(nv[lo:hi], images, wall, wall_rank) for nv in null):
            continue
        return False
    return True


def _column_span(m: Matrix) -> tuple[list[tuple], int]:
    cols = [col for col in zip(*m.rows) if any(col)]
    return cols, rank(Matrix(cols)) if cols else 0


def _escapes(coeffs, images, wall, wall_rank) -> bool:
    total = [0] * (len(images[0]) if images else 0)
    for c, img in zip(coeffs, images):
        if c:
            total = [a + c * b for a, b in zip(total, img)]
    if not any(total):
        return False
    if not wall:
        return True
    return rank(Matrix(wall + [tuple(total)])) > wall_rank


def representative(mp: MarkedPartition) -> ExoticVector:
    """A deterministic point with marked invariant mp.

    Slot s of the flag threads one Jordan chain through every block with at
    least s slots, in flag order, with unit coefficients; the chain lengths
    recover the parts of lam.  The mark a_s places a unit x1 entry at the
    slot-s position of the a_s-th block on that chain.
    """
    n = mp.size
    d = block_boundaries(mp)
    sizes = [d[k + 1] - d[k] for k in range(len(d) - 1)]
    if sorted(sizes, reverse=True) != list(mp.lam.transpose()):
        raise AssertionError(f"block sizes {sizes} do not transpose to lam")
    x1 = [0] * (2 * n)
    ent = {}
    for s in range(1, (max(sizes) if sizes else 0) + 1):
        hosts = [k for k, c in enumerate(sizes) if c >= s]
        pos = [d[k] + s for k in hosts]
        for a, b in zip(pos, pos[1:]):
            # arrow from the later block to the earlier one: the
            # endomorphism sends the basis vector at b to the one at a
            ent[(a - 1, b + n - 1)] = 1
            ent[(b + n - 1, a - 1)] = -1
        mark = mp.marks[s - 1] if s <= len(mp.marks) else 0
        if mark:
            x1[pos[mark - 1] - 1] = 1
    return ExoticVector(n, x1, Matrix.from_entries(2 * n, 2 * n, ent))


def orbit_dim(mp: MarkedPartition) -> int:
    """Dimension of the orbit labelled by mp: the unmarked flag blocks give
    4 * sum_{i<j} c_i c_j, the marks add 2 |mu|."""
    base = MarkedPartition(mp.lam)
    d = block_boundaries(base)
    sizes = [d[k + 1] - d[k] for k in range(len(d) - 1)]
    pairs = sum(
        sizes[i] * sizes[j]
        for i in range(len(sizes))
        for j in range(i + 1, len(sizes))
    )
    return 4 * pairs + 2 * to_bipartition(mp).mu.size


def cone_dim(n: int) -> int:
    """Dimension of the whole exotic nilpotent cone."""
    return 2 * n * n
