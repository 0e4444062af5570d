"""Exact arithmetic: multivariate polynomials, Laurent characters of a
torus, ring-generic matrices, Pfaffians, and nilpotent Jordan data.

Coefficients stay in int or fractions.Fraction throughout; nothing here
touches floating point.  Matrix entries only need the ring operations they
are actually used with, so the same code runs over rationals, finite-field
scalars, and polynomials.
"""

from fractions import Fraction
from typing import Iterable

from .partitions import Partition

_SCALARS = (int, Fraction)


class MultiPoly:
    """A polynomial in nvars variables with exact coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients.  Display and
    serialization order terms by graded lexicographic order, largest first,
    with variable 1 most significant.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        data = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length != {nvars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            acc = data.get(exp, 0) + c
            if acc:
                data[exp] = acc
            else:
                data.pop(exp, None)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        """The i-th variable, 1-based."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        exp = tuple(1 if j == i - 1 else 0 for j in range(nvars))
        return cls(nvars, {exp: 1})

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        if isinstance(other, _SCALARS):
            return MultiPoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data = dict(self.terms)
        for exp, c in other.terms.items():
            acc = data.get(exp, 0) + c
            if acc:
                data[exp] = acc
            else:
                data.pop(exp, None)
        return MultiPoly(self.nvars, data)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return MultiPoly(self.nvars)
            return MultiPoly(
                self.nvars, {e: c * other for e, c in self.terms.items()}
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError("mixed variable counts")
        data = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                acc = data.get(exp, 0) + c1 * c2
                if acc:
                    data[exp] = acc
                else:
                    data.pop(exp, None)
        return MultiPoly(self.nvars, data)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, _SCALARS):
            return self.terms == MultiPoly.constant(self.nvars, other).terms
        return NotImplemented

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.text()!r})"

    def degree(self) -> int:
        """Total degree; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def homogeneous_component(self, k: int) -> "MultiPoly":
        return MultiPoly(
            self.nvars, {e: c for e, c in self.terms.items() if sum(e) == k}
        )

    def evaluate(self, values):
        """Evaluate at a point; values must multiply with the coefficients."""
        values = tuple(values)
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = 0
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(values, exp):
                for _ in range(e):
                    term = term * v
            total = total + term
        return total

    def sorted_terms(self) -> list:
        return sorted(
            self.terms.items(),
            key=lambda kv: (sum(kv[0]), kv[0]),
            reverse=True,
        )

    def text(self, var: str = "e") -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                f"{var}{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp)
                if e
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not chunks:
                chunks.append(f"-{body}" if c < 0 else body)
            else:
                chunks.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(chunks)

    def to_json(self) -> dict:
        return {
            "vars": self.nvars,
            "terms": [
                {"c": str(Fraction(c)), "e": list(e)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MultiPoly":
        return cls(
            data["vars"],
            [(tuple(t["e"]), Fraction(t["c"])) for t in data["terms"]],
        )


def linear_form(wt: Iterable[int]) -> MultiPoly:
    """The linear polynomial <wt, e> = sum wt_i * e_i."""
    wt = tuple(wt)
    n = len(wt)
    return MultiPoly(
        n,
        {
            tuple(1 if j == i else 0 for j in range(n)): c
            for i, c in enumerate(wt)
            if c
        },
    )


class LaurentChar:
    """A finite integer combination of torus characters e^wt.

    ``terms`` maps integer weight tuples to nonzero integer coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        data = {}
        for wt, c in items:
            wt = tuple(int(w) for w in wt)
            if len(wt) != nvars:
                raise ValueError(f"weight {wt} has length != {nvars}")
            c = int(c)
            acc = data.get(wt, 0) + c
            if acc:
                data[wt] = acc
            else:
                data.pop(wt, None)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentChar is immutable")

    @classmethod
    def one(cls, nvars: int) -> "LaurentChar":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def exp_weight(cls, wt: Iterable[int]) -> "LaurentChar":
        wt = tuple(wt)
        return cls(len(wt), {wt: 1})

    @classmethod
    def euler_factor(cls, wt: Iterable[int]) -> "LaurentChar":
        """1 - e^{-wt}."""
        wt = tuple(int(w) for w in wt)
        n = len(wt)
        return cls(n, [((0,) * n, 1), (tuple(-w for w in wt), -1)])

    def __add__(self, other):
        if not isinstance(other, LaurentChar) or other.nvars != self.nvars:
            return NotImplemented
        data = dict(self.terms)
        for wt, c in other.terms.items():
            acc = data.get(wt, 0) + c
            if acc:
                data[wt] = acc
            else:
                data.pop(wt, None)
        return LaurentChar(self.nvars, data)

    def __neg__(self):
        return LaurentChar(self.nvars, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentChar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentChar) or other.nvars != self.nvars:
            return NotImplemented
        data = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                wt = tuple(a + b for a, b in zip(w1, w2))
                acc = data.get(wt, 0) + c1 * c2
                if acc:
                    data[wt] = acc
                else:
                    data.pop(wt, None)
        return LaurentChar(self.nvars, data)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentChar(self.nvars, {(0,) * self.nvars: other})
        if not isinstance(other, LaurentChar):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"LaurentChar({self.nvars}, {dict(self.terms)!r})"


def graded_pieces(ch: LaurentChar, max_degree: int) -> list[MultiPoly]:
    """Expand each e^wt as a power series in the linear form <wt, e> and
    collect the homogeneous pieces of degree 0..max_degree."""
    n = ch.nvars
    out = [MultiPoly.zero(n) for _ in range(max_degree + 1)]
    for wt, c in ch.terms.items():
        form = linear_form(wt)
        power = MultiPoly.one(n)
        factorial = 1
        for k in range(max_degree + 1):
            if k:
                power = power * form
                factorial *= k
            out[k] = out[k] + power * Fraction(c, factorial)
    return out


def lowest_term(ch: LaurentChar) -> MultiPoly:
    """The lowest nonzero graded piece of ch.

    If every piece of degree < #support vanishes, the exponential
    coefficients satisfy a full Vandermonde system and ch itself is zero,
    so the search is capped there.
    """
    if not ch.terms:
        raise ValueError("the zero character has no lowest term")
    n = ch.nvars
    running = {wt: MultiPoly.one(n) for wt in ch.terms}
    factorial = 1
    for k in range(len(ch.terms)):
        if k:
            factorial *= k
            for wt in running:
                running[wt] = running[wt] * linear_form(wt)
        piece = MultiPoly.zero(n)
        for wt, c in ch.terms.items():
            piece = piece + running[wt] * Fraction(c, factorial)
        if piece:
            return piece
    raise RuntimeError("no nonzero graded piece within the support bound")


class Matrix:
    """A rectangular matrix over any commutative ring with int interop."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, nrows: int, ncols: int, zero=0) -> "Matrix":
        return cls([[zero] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int, one=1, zero=0) -> "Matrix":
        return cls(
            [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: dict) -> "Matrix":
        """Build from a {(i, j): value} dict, 0-based, zeros elsewhere."""
        return cls(
            [
                [entries.get((i, j), 0) for j in range(ncols)]
                for i in range(nrows)
            ]
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def __repr__(self) -> str:
        return f"Matrix({[list(r) for r in self.rows]!r})"

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.__matmul__(other)
        return Matrix([[a * other for a in r] for r in self.rows])

    def __rmul__(self, other):
        return Matrix([[other * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.transpose().rows
        return Matrix(
            [[_dot(r, c) for c in cols] for r in self.rows]
        )

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            raise ValueError("negative matrix power")
        if self.nrows != self.ncols:
            raise ValueError("matrix power needs a square matrix")
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.rows else Matrix([])

    def apply(self, vec) -> tuple:
        vec = tuple(vec)
        if len(vec) != self.ncols:
            raise ValueError("shape mismatch")
        return tuple(_dot(r, vec) for r in self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def det(self):
        """Determinant by cofactor expansion; fine for small matrices and
        works over any commutative ring."""
        if self.nrows != self.ncols:
            raise ValueError("determinant needs a square matrix")
        return _det(self.rows)


def _dot(row, col):
    total = 0
    for a, b in zip(row, col):
        total = total + a * b
    return total


def _det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    rest = rows[1:]
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = [r[:j] + r[j + 1:] for r in rest]
        term = entry * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def pfaffian(m: Matrix):
    """Pfaffian of an alternating matrix by first-row expansion.

    Works over any commutative ring.  Requires a zero diagonal and
    m[j][i] == -m[i][j]; raises on odd size.
    """
    rows = m.rows
    size = len(rows)
    if size != m.ncols:
        raise ValueError("pfaffian needs a square matrix")
    if size % 2:
        raise ValueError("pfaffian needs even size")
    for i in range(size):
        if rows[i][i]:
            raise ValueError("nonzero diagonal")
        for j in range(i + 1, size):
            if rows[i][j] != -rows[j][i]:
                raise ValueError("matrix is not alternating")
    return _pf(rows, tuple(range(size)))


def _pf(rows, idx):
    if not idx:
        return 1
    i0 = idx[0]
    total = 0
    for pos in range(1, len(idx)):
        entry = rows[i0][idx[pos]]
        if not entry:
            continue
        term = entry * _pf(rows, idx[1:pos] + idx[pos + 1:])
        total = total + term if pos % 2 else total - term
    return total


def _field_rows(m: Matrix) -> list[list]:
    # ints are promoted to Fraction so that / is exact; true field
    # entries (Fraction, finite-field scalars) pass through untouched
    return [
        [Fraction(e) if isinstance(e, int) else e for e in row]
        for row in m.rows
    ]


def _rref(rows: list[list]):
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        pr = next((i for i in range(r, nr) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        scale = rows[r][c]
        rows[r] = [e / scale for e in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m: Matrix) -> int:
    return len(_rref(_field_rows(m))[1])


def row_reduce(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns, over an exact field."""
    rows, pivots = _rref(_field_rows(m))
    return Matrix(rows), tuple(pivots)


def perm_sign(p) -> int:
    """Sign of a permutation given as a sequence of distinct comparables."""
    p = tuple(p)
    inversions = sum(
        1
        for a in range(len(p))
        for b in range(a + 1, len(p))
        if p[a] > p[b]
    )
    return -1 if inversions % 2 else 1


def kernel_basis(m: Matrix) -> list[tuple]:
    """A basis of the right kernel, one vector per free column."""
    rows, pivots = _rref(_field_rows(m))
    nc = m.ncols
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * nc
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return basis


def solve_linear(m: Matrix, rhs) -> tuple[tuple, list[tuple]] | None:
    """All solutions of m x = rhs as (particular, kernel basis);
    None when inconsistent."""
    rhs = tuple(rhs)
    if len(rhs) != m.nrows:
        raise ValueError("shape mismatch")
    aug = _field_rows(m)
    for row, b in zip(aug, rhs):
        row.append(Fraction(b) if isinstance(b, int) else b)
    if not aug:
        return (), []
    rows, pivots = _rref(aug)
    if m.ncols in pivots:
        return None
    particular = [0] * m.ncols
    for r, pc in enumerate(pivots):
        particular[pc] = rows[r][-1]
    return tuple(particular), kernel_basis(m)


def jordan_type(m: Matrix):
    """Jordan type of a nilpotent matrix over an exact field, as the
    partition listing block sizes.

    rank(m^{k-1}) - rank(m^k) counts the blocks of size >= k; raises when
    m is not nilpotent.
    """
    if m.nrows != m.ncols:
        raise ValueError("jordan type needs a square matrix")
    n = m.nrows
    ranks = [n]
    power = m
    k = 1
    while True:
        r = rank(power)
        ranks.append(r)
        if r == 0:
            break
        if k >= n:
            raise ValueError("matrix is not nilpotent")
        power = power @ m
        k += 1
    parts = []
    for size in range(len(ranks) - 1, 0, -1):
        at_least = ranks[size - 1] - ranks[size]
        at_least_next = ranks[size] - ranks[size + 1] if size < len(ranks) - 1 else 0
        parts.extend([size] * (at_least - at_least_next))
    parts.sort(reverse=True)
    return Partition(parts)
