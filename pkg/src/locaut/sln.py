"""Coordinate model of sl_n over Q(i) and canonical preserver shapes.

Basis order is fixed everywhere: root vectors e_ij (i != j) in lexicographic
order of (i, j), then the simple-coroot Cartan elements h_k = E_kk - E_k+1,k+1.
Linear maps on sl_n are (n^2-1) x (n^2-1) matrices in these coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import StructureAlgebra
from .exact import GR_ONE, GR_ZERO, GaussianRational
from .linalg import Matrix, Subspace, inverse, kernel


def _unit_matrix(n: int, i: int, j: int) -> Matrix:
    return Matrix(tuple(tuple(1 if (r, c) == (i, j) else 0 for c in range(n)) for r in range(n)))


class SlnModel:
    """sl_n with a fixed ordered basis and exact coordinate maps."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("sl_n needs n >= 2")
        self.n = n
        self.dim = n * n - 1
        self.off_pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
        self.labels = [f"e{i+1}{j+1}" for i, j in self.off_pairs] + [
            f"h{k+1}" for k in range(n - 1)
        ]
        basis = [_unit_matrix(n, i, j) for i, j in self.off_pairs]
        for k in range(n - 1):
            basis.append(_unit_matrix(n, k, k) - _unit_matrix(n, k + 1, k + 1))
        self.basis = tuple(basis)
        self._off_index = {pair: a for a, pair in enumerate(self.off_pairs)}

    def e(self, i: int, j: int) -> Matrix:
        """Root vector E_ij (1-indexed arguments not used: i, j are 0-based)."""
        return self.basis[self._off_index[(i, j)]]

    def h(self, k: int) -> Matrix:
        return self.basis[len(self.off_pairs) + k]

    def coords(self, x: Matrix):
        if x.nrows != self.n or x.ncols != self.n:
            raise ValueError("matrix has wrong size for this model")
        if not x.trace().is_zero():
            raise ValueError("matrix is not traceless")
        out = [x[i, j] for i, j in self.off_pairs]
        partial = GR_ZERO
        for k in range(self.n - 1):
            partial = partial + x[k, k]
            out.append(partial)
        return tuple(out)

    def matrix(self, v) -> Matrix:
        if len(v) != self.dim:
            raise ValueError("coordinate vector has wrong length")
        acc = Matrix.zeros(self.n, self.n)
        for c, b in zip(v, self.basis):
            if isinstance(c, GaussianRational):
                if c.a or c.b:
                    acc = acc + b * c
            else:
                acc = acc + b * GaussianRational(c)
        return acc

    @staticmethod
    def bracket(x: Matrix, y: Matrix) -> Matrix:
        return x @ y - y @ x

    def structure_algebra(self) -> StructureAlgebra:
        table = [
            [self.coords(self.bracket(a, b)) for b in self.basis]
            for a in self.basis
        ]
        return StructureAlgebra(self.dim, self.labels, table)

    def map_matrix(self, f) -> Matrix:
        """Coordinate matrix of the linear map x -> f(x) on sl_n."""
        cols = [self.coords(f(b)) for b in self.basis]
        return Matrix(zip(*cols))

    def apply_map(self, d: Matrix, x: Matrix) -> Matrix:
        return self.matrix(d.apply(self.coords(x)))

    def identity_map(self) -> Matrix:
        return Matrix.identity(self.dim)

    def scalar_map(self, lam) -> Matrix:
        lam = lam if isinstance(lam, GaussianRational) else GaussianRational(lam)
        return self.map_matrix(lambda x: x * lam)

    def transpose_map(self) -> Matrix:
        return self.map_matrix(lambda x: x.T)

    # -- roots -------------------------------------------------------------

    def positive_roots(self):
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) ]

    def all_roots(self):
        return list(self.off_pairs)

    @staticmethod
    def root_value(h: Matrix, i: int, j: int) -> GaussianRational:
        """alpha_ij(h) = h_ii - h_jj for diagonal h."""
        return h[i, i] - h[j, j]

    def strongly_regular_element(self) -> Matrix:
        """diag(4, 4^2, ..., 4^n) minus its trace average; verified regular."""
        powers = [4 ** (k + 1) for k in range(self.n)]
        avg = Fraction(sum(powers), self.n)
        h0 = Matrix.diagonal([Fraction(p) - avg for p in powers])
        assert self.is_strongly_regular(h0)
        return h0

    def is_strongly_regular(self, h: Matrix) -> bool:
        """Pairwise-distinct root values and centralizer equal to the Cartan."""
        for i in range(self.n):
            for j in range(self.n):
                if i != j and not h[i, j].is_zero():
                    return False
        values = {}
        for (i, j) in self.off_pairs:
            v = self.root_value(h, i, j)
            if v.is_zero():
                return False
            key = (v.a, v.b, v.d)
            if key in values:
                return False
            values[key] = (i, j)
        ad = self.map_matrix(lambda x, h=h: self.bracket(h, x))
        cent = kernel(ad)
        if cent.dim != self.n - 1:
            return False
        return all(cent.contains(self.coords(self.h(k))) for k in range(self.n - 1))

    # -- square-zero elements ---------------------------------------------

    def square_zero_spanning_set(self):
        """Square-zero matrices spanning sl_n: the e_ij plus rank-one fills.

        The fills are (E_k + E_k+1)(E_k - E_k+1)^T, which recover the Cartan
        directions modulo off-diagonal terms.
        """
        out = [self.e(i, j) for i, j in self.off_pairs]
        for k in range(self.n - 1):
            m = (
                _unit_matrix(self.n, k, k)
                - _unit_matrix(self.n, k, k + 1)
                + _unit_matrix(self.n, k + 1, k)
                - _unit_matrix(self.n, k + 1, k + 1)
            )
            assert (m @ m).is_zero()
            out.append(m)
        span = Subspace(self.dim, [self.coords(m) for m in out])
        assert span.dim == self.dim
        return out


class MnModel:
    """Full matrix algebra M_n with flattened row-major coordinates."""

    def __init__(self, n: int):
        self.n = n
        self.dim = n * n
        self.basis = tuple(
            _unit_matrix(n, i, j) for i in range(n) for j in range(n)
        )
        self.labels = [f"e{i+1}{j+1}" for i in range(n) for j in range(n)]

    def coords(self, x: Matrix):
        if x.nrows != self.n or x.ncols != self.n:
            raise ValueError("matrix has wrong size for this model")
        return x.flatten()

    def matrix(self, v) -> Matrix:
        return Matrix(tuple(tuple(v[i * self.n + j] for j in range(self.n)) for i in range(self.n)))

    def map_matrix(self, f) -> Matrix:
        cols = [self.coords(f(b)) for b in self.basis]
        return Matrix(zip(*cols))

    def apply_map(self, d: Matrix, x: Matrix) -> Matrix:
        return self.matrix(d.apply(self.coords(x)))


SIGMA_ID = "identity"
SIGMA_T = "transpose"

# Fit order is part of the observable contract: families are tried in this
# sequence and the first invertible fit wins.
SHAPE_FAMILIES = ((1, SIGMA_ID), (1, SIGMA_T), (-1, SIGMA_ID), (-1, SIGMA_T))


@dataclass(frozen=True)
class CanonicalShape:
    """x -> epsilon * a * sigma(x) * a^-1 with sigma identity or transpose."""

    epsilon: int
    sigma: str
    a: Matrix

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        if self.sigma not in (SIGMA_ID, SIGMA_T):
            raise ValueError(f"unknown sigma {self.sigma!r}")

    def apply(self, x: Matrix) -> Matrix:
        y = x.T if self.sigma == SIGMA_T else x
        out = self.a @ y @ inverse(self.a)
        return out if self.epsilon == 1 else -out

    def is_automorphism_family(self) -> bool:
        return (self.epsilon, self.sigma) in ((1, SIGMA_ID), (-1, SIGMA_T))

    def to_json(self):
        return {"epsilon": self.epsilon, "sigma": self.sigma, "a": self.a.to_json()}

    @classmethod
    def from_json(cls, data) -> "CanonicalShape":
        return cls(int(data["epsilon"]), data["sigma"], Matrix.from_json(data["a"]))


def shape_map_matrix(model: SlnModel, shape: CanonicalShape) -> Matrix:
    return model.map_matrix(shape.apply)


def shape_preserves_bracket(model: SlnModel, shape: CanonicalShape) -> bool:
    """Direct bracket check on all basis pairs; cross-validates the family label."""
    for x in model.basis:
        fx = shape.apply(x)
        for y in model.basis:
            lhs = shape.apply(model.bracket(x, y))
            if lhs != model.bracket(fx, shape.apply(y)):
                return False
    return True
