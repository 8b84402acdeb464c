"""Exact dense linear algebra over Q(i).

Matrices are immutable.  All eliminations are plain Gauss-Jordan with
division: Q(i) is a field and the triple-of-ints scalar keeps entries
normalized, so fraction-free pivoting buys nothing here.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .exact import GR_ONE, GR_ZERO, GaussianRational, Polynomial, format_scalar, parse_scalar

Vector = tuple


def _coerce_entry(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


class Matrix:
    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, rows):
        data = tuple(tuple(_coerce_entry(x) for x in row) for row in rows)
        if not data:
            raise ValueError("matrix needs at least one row")
        ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        self.data = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls(((0,) * c,) * r)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        es = list(entries)
        n = len(es)
        return cls(tuple(tuple(es[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_column(cls, v) -> "Matrix":
        return cls(tuple((x,) for x in v))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int):
        return self.data[i]

    def column(self, j: int):
        return tuple(r[j] for r in self.data)

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.data))

    def trace(self) -> GaussianRational:
        if self.nrows != self.ncols:
            raise ValueError("trace of non-square matrix")
        acc = GR_ZERO
        for i in range(self.nrows):
            acc = acc + self.data[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.data for x in row)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def flatten(self):
        return tuple(x for row in self.data for x in row)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.data, other.data)
            )
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.data, other.data)
            )
        )

    def __neg__(self):
        return Matrix(tuple(tuple(-a for a in row) for row in self.data))

    def __mul__(self, scalar):
        s = _coerce_entry(scalar)
        return Matrix(tuple(tuple(a * s for a in row) for row in self.data))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matmul")
        bt = list(zip(*other.data))
        out = []
        for row in self.data:
            out_row = []
            for col in bt:
                acc = GR_ZERO
                for a, b in zip(row, col):
                    if a.a or a.b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(tuple(out_row))
        return Matrix(tuple(out))

    def apply(self, v):
        """Matrix times coordinate vector."""
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.data:
            acc = GR_ZERO
            for a, x in zip(row, v):
                if (a.a or a.b) and (x.a or x.b):
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in row) for row in self.data)
        return f"Matrix[{body}]"

    def to_json(self):
        return [[format_scalar(x) for x in row] for row in self.data]

    @classmethod
    def from_json(cls, data) -> "Matrix":
        return cls(tuple(tuple(parse_scalar(x) for x in row) for row in data))


def _rref_in_place(rows: list, ncols: int):
    """Reduced row echelon form; returns pivot column list."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            e = rows[i][c]
            if e.a or e.b:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f.a or f.b:
                ri = rows[i]
                rows[i] = [x - f * p for x, p in zip(ri, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: Matrix):
    rows = [list(r) for r in m.data]
    pivots = _rref_in_place(rows, m.ncols)
    return Matrix(tuple(tuple(r) for r in rows)), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


class Subspace:
    """A subspace of Q(i)^n held in a canonical reduced-echelon basis."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, vectors):
        rows = [[_coerce_entry(x) for x in v] for v in vectors]
        for v in rows:
            if len(v) != ambient:
                raise ValueError("vector has wrong ambient dimension")
        if rows:
            _rref_in_place(rows, ambient)
        basis = [tuple(r) for r in rows if any(x.a or x.b for x in r)]
        self.ambient = ambient
        self.basis = tuple(basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        v = [_coerce_entry(x) for x in v]
        if len(v) != self.ambient:
            return False
        for row in self.basis:
            p = next(j for j, x in enumerate(row) if x.a or x.b)
            f = v[p]
            if f.a or f.b:
                v = [x - f * y for x, y in zip(v, row)]
        return all(not (x.a or x.b) for x in v)

    def coordinates(self, v):
        """Coefficients of v in the canonical basis, or None if outside."""
        v = [_coerce_entry(x) for x in v]
        coeffs = []
        for row in self.basis:
            p = next(j for j, x in enumerate(row) if x.a or x.b)
            f = v[p]
            coeffs.append(f)
            if f.a or f.b:
                v = [x - f * y for x, y in zip(v, row)]
        if any(x.a or x.b for x in v):
            return None
        return tuple(coeffs)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def kernel(m: Matrix) -> Subspace:
    rows = [list(r) for r in m.data]
    pivots = _rref_in_place(rows, m.ncols)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [GR_ZERO] * m.ncols
        v[f] = GR_ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(tuple(v))
    return Subspace(m.ncols, basis)


def solve_linear(a: Matrix, b) -> Vector | None:
    """One exact solution of a x = b (free variables set to 0), or None."""
    rows = [list(r) + [_coerce_entry(x)] for r, x in zip(a.data, b)]
    if len(b) != a.nrows:
        raise ValueError("right-hand side has wrong length")
    pivots = _rref_in_place(rows, a.ncols + 1)
    if a.ncols in pivots:
        return None
    x = [GR_ZERO] * a.ncols
    for r, p in enumerate(pivots):
        x[p] = rows[r][a.ncols]
    return tuple(x)


def det(m: Matrix) -> GaussianRational:
    if not m.is_square():
        raise ValueError("determinant of non-square matrix")
    rows = [list(r) for r in m.data]
    n = m.nrows
    acc = GR_ONE
    sign = 1
    for c in range(n):
        pr = None
        for i in range(c, n):
            e = rows[i][c]
            if e.a or e.b:
                pr = i
                break
        if pr is None:
            return GR_ZERO
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            sign = -sign
        piv = rows[c][c]
        acc = acc * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            f = rows[i][c]
            if f.a or f.b:
                f = f * inv
                rows[i] = [x - f * p for x, p in zip(rows[i], rows[c])]
    return acc if sign == 1 else -acc


def inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise ValueError("inverse of non-square matrix")
    n = m.nrows
    rows = [list(r) + [GR_ONE if i == j else GR_ZERO for j in range(n)] for i, r in enumerate(m.data)]
    pivots = _rref_in_place(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix(tuple(tuple(r[n:]) for r in rows))


def charpoly(m: Matrix) -> Polynomial:
    """Characteristic polynomial det(tI - m), monic, via Faddeev-LeVerrier.

    Exact in characteristic zero: the only divisions are by 1..n.
    """
    if not m.is_square():
        raise ValueError("charpoly of non-square matrix")
    n = m.nrows
    coeffs_desc = [GR_ONE]
    work = Matrix.identity(n)
    for k in range(1, n + 1):
        work = m @ work
        c = -(work.trace() / k)
        coeffs_desc.append(c)
        if k < n:
            work = work + Matrix.diagonal([c] * n)
    return Polynomial(tuple(reversed(coeffs_desc)))


# ---------------------------------------------------------------------------
# Polynomial matrices and invariant factors


def _poly_matrix_char(m: Matrix) -> list:
    """tI - m as a mutable grid of Polynomial entries."""
    n = m.nrows
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(Polynomial((-m.data[i][j], GR_ONE)))
            else:
                row.append(Polynomial((-m.data[i][j],)))
        grid.append(row)
    return grid


def _smith_diagonal(grid: list) -> list:
    """Diagonalize a polynomial matrix in place; returns the diagonal.

    Classic Smith reduction over the Euclidean domain Q(i)[t]: repeatedly move
    a minimal-degree entry to the pivot, kill its row and column with division
    steps, then enforce that the pivot divides the rest of the submatrix.
    """
    nr = len(grid)
    nc = len(grid[0]) if nr else 0
    diag = []
    pos = 0
    while pos < min(nr, nc):
        while True:
            # minimal-degree nonzero entry of the trailing submatrix
            best = None
            for i in range(pos, nr):
                for j in range(pos, nc):
                    e = grid[i][j]
                    if not e.is_zero() and (best is None or e.degree < grid[best[0]][best[1]].degree):
                        best = (i, j)
            if best is None:
                return diag + [Polynomial()] * (min(nr, nc) - pos)
            bi, bj = best
            if bi != pos:
                grid[pos], grid[bi] = grid[bi], grid[pos]
            if bj != pos:
                for row in grid:
                    row[pos], row[bj] = row[bj], row[pos]
            pivot = grid[pos][pos]
            dirty = False
            for i in range(pos + 1, nr):
                if not grid[i][pos].is_zero():
                    q = grid[i][pos] // pivot
                    grid[i] = [a - q * b for a, b in zip(grid[i], grid[pos])]
                    dirty = dirty or not grid[i][pos].is_zero()
            for j in range(pos + 1, nc):
                if not grid[pos][j].is_zero():
                    q = grid[pos][j] // pivot
                    for i in range(nr):
                        grid[i][j] = grid[i][j] - q * grid[i][pos]
                    dirty = dirty or not grid[pos][j].is_zero()
            if dirty:
                continue
            # row and column are clear; enforce divisibility downstream
            offender = None
            for i in range(pos + 1, nr):
                for j in range(pos + 1, nc):
                    if not (grid[i][j] % pivot).is_zero():
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            grid[pos] = [a + b for a, b in zip(grid[pos], grid[offender])]
        diag.append(grid[pos][pos].monic())
        pos += 1
    return diag


def invariant_factors(m: Matrix) -> tuple:
    """Non-unit invariant factors of tI - m, monic, in divisibility order."""
    diag = _smith_diagonal(_poly_matrix_char(m))
    factors = [p for p in diag if p.degree >= 1]
    for p, q in zip(factors, factors[1:]):
        assert (q % p).is_zero(), "invariant factor chain broken"
    return tuple(factors)


# ---------------------------------------------------------------------------
# Intertwiners and similarity


def intertwiner_space(pairs) -> Subspace:
    """All a with A a = a B for every pair (A, B), as a subspace of Q(i)^(n*n).

    Refines incrementally: keeps a basis of the current solution space and
    imposes one pair at a time, so the large n^2 x n^2 system is only ever
    solved against a few surviving directions.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError("need at least one pair")
    n = pairs[0][0].nrows
    for a, b in pairs:
        if a.nrows != n or a.ncols != n or b.nrows != n or b.ncols != n:
            raise ValueError("pairs must be square matrices of equal size")
    basis = [Matrix(tuple(tuple(1 if (i, j) == (r, c) else 0 for c in range(n)) for r in range(n)))
             for i in range(n) for j in range(n)]
    for a, b in pairs:
        if not basis:
            break
        cols = [(a @ m - m @ b).flatten() for m in basis]
        constraint = Matrix(zip(*cols))
        coeff_space = kernel(constraint)
        new_basis = []
        for coeffs in coeff_space.basis:
            acc = Matrix.zeros(n, n)
            for c, m in zip(coeffs, basis):
                if c.a or c.b:
                    acc = acc + m * c
            new_basis.append(acc)
        basis = new_basis
    return Subspace(n * n, [m.flatten() for m in basis])


def matrix_from_flat(v, n: int) -> Matrix:
    return Matrix(tuple(tuple(v[i * n + j] for j in range(n)) for i in range(n)))


_RANDOM_TRIES = 64
_GRID_CAP = 200_000


def invertible_element(space: Subspace, n: int, persistent: bool = False) -> Matrix | None:
    """An invertible n x n matrix inside a subspace of flattened matrices.

    det is a polynomial of degree <= n in each basis coefficient, so an
    exhaustive grid over {0..n}^dim is a complete zero test.  The grid is only
    walked in full for dim <= 3 or when it stays below a documented cap;
    beyond that, deterministic pseudo-random integer points are tried, which
    finds a witness immediately whenever invertible elements are dense.  With
    persistent=True the search never gives up (use only when existence is
    guaranteed); termination is then almost sure rather than bounded.
    """
    k = space.dim
    if k == 0:
        return None
    mats = [matrix_from_flat(v, n) for v in space.basis]

    def candidate(coeffs) -> Matrix | None:
        acc = Matrix.zeros(n, n)
        for c, m in zip(coeffs, mats):
            if c:
                acc = acc + m * GaussianRational(c)
        if acc.is_zero():
            return None
        return acc if not det(acc).is_zero() else None

    if k <= 3:
        for coeffs in product(range(n + 1), repeat=k):
            got = candidate(coeffs)
            if got is not None:
                return got
        return None

    rng = random.Random(0x1E7E57)
    for _ in range(_RANDOM_TRIES):
        got = candidate(tuple(rng.randint(-n, n) for _ in range(k)))
        if got is not None:
            return got
    if (n + 1) ** k <= _GRID_CAP:
        for coeffs in product(range(n + 1), repeat=k):
            got = candidate(coeffs)
            if got is not None:
                return got
        return None
    if not persistent:
        return None
    spread = n + 1
    while True:
        for _ in range(_RANDOM_TRIES):
            got = candidate(tuple(rng.randint(-spread, spread) for _ in range(k)))
            if got is not None:
                return got
        spread *= 2


def similarity_witness(x: Matrix, y: Matrix) -> Matrix | None:
    """Invertible a with a x a^-1 = y, or None when x and y are not similar.

    Similarity over Q(i) is equivalent to equality of invariant factors, and
    both are insensitive to field extension, so the answer is definitive.
    The invertible intertwiner is searched first; invariant factors are only
    computed to certify the negative answer (or to force persistence when the
    quick search comes back empty-handed despite similarity).
    """
    if x.nrows != y.nrows or not x.is_square() or not y.is_square():
        raise ValueError("similarity needs square matrices of equal size")
    n = x.nrows
    space = intertwiner_space([(y, x)])  # a with y a = a x, i.e. a x a^-1 = y
    if space.dim == 0:
        return None
    a = invertible_element(space, n)
    if a is None:
        if invariant_factors(x) != invariant_factors(y):
            return None
        a = invertible_element(space, n, persistent=True)
        assert a is not None
    assert y @ a == a @ x
    return a
