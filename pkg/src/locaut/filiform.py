"""Filiform nilpotent Lie algebras and their local-but-not automorphisms.

The model algebra on e_1..e_n has the single chain of brackets
[e_1, e_i] = e_{i+1} for 2 <= i <= n-1.  Two one-parameter families of maps
drive everything here:

    phi_alpha(x) = x + alpha x_2 e_{n-1} + x_3 e_n
    psi_beta(u)  = u + beta u_2 e_n

psi_beta is an automorphism for every beta, phi_alpha only for alpha = 1.
The map delta = phi_0 is therefore not an automorphism, yet at every single
point it agrees with phi_1 (when x_2 = 0) or with psi_{x_3/x_2} (otherwise),
which makes it a local automorphism.  n = 3 is degenerate (e_{n-1} = e_2, so
phi_alpha is diagonal rather than unitriangular) but the same conclusions
hold and are checked literally rather than assumed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import StructureAlgebra, filiform_check, unit_vector, vec_is_zero, vec_sub
from .exact import GR_ONE, GR_ZERO, GaussianRational, format_scalar
from .linalg import Matrix, det


class FiliformAlgebra:
    """An n-dimensional filiform Lie algebra in an adapted basis."""

    def __init__(self, algebra: StructureAlgebra):
        check = filiform_check(algebra)
        if not check.is_lie:
            raise ValueError("not a Lie algebra")
        if not check.filiform:
            raise ValueError(f"lower central series dims {check.series_dims} are not filiform")
        if not check.adapted:
            raise ValueError("basis is not adapted to the filiform chain")
        self.algebra = algebra
        self.n = algebra.dim

    def bracket(self, x, y):
        return self.algebra.bracket(x, y)


def model_filiform(n: int) -> FiliformAlgebra:
    """The filiform algebra whose only brackets are [e_1, e_i] = e_{i+1}."""
    if n < 3:
        raise ValueError("filiform algebras need dimension >= 3")
    table = [[[GR_ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(1, n - 1):
        table[0][i] = unit_vector(i + 1, n)
        table[i][0] = tuple(-x for x in unit_vector(i + 1, n))
    labels = [f"e{i+1}" for i in range(n)]
    alg = StructureAlgebra(n, labels, table)
    assert not alg.validate_lie(), "model table must be a Lie algebra"
    return FiliformAlgebra(alg)


@dataclass(frozen=True)
class PhiAlpha:
    """x + alpha x_2 e_{n-1} + x_3 e_n in coordinates."""

    alpha: GaussianRational

    def matrix(self, fl: FiliformAlgebra) -> Matrix:
        n = fl.n
        rows = [[GR_ONE if i == j else GR_ZERO for j in range(n)] for i in range(n)]
        rows[n - 2][1] = rows[n - 2][1] + self.alpha
        rows[n - 1][2] = rows[n - 1][2] + GR_ONE
        return Matrix(rows)

    def to_json(self):
        return {"family": "phi", "alpha": format_scalar(self.alpha)}


@dataclass(frozen=True)
class PsiBeta:
    """u + beta u_2 e_n in coordinates."""

    beta: GaussianRational

    def matrix(self, fl: FiliformAlgebra) -> Matrix:
        n = fl.n
        rows = [[GR_ONE if i == j else GR_ZERO for j in range(n)] for i in range(n)]
        rows[n - 1][1] = rows[n - 1][1] + self.beta
        return Matrix(rows)

    def to_json(self):
        return {"family": "psi", "beta": format_scalar(self.beta)}


def _as_scalar(x) -> GaussianRational:
    return x if isinstance(x, GaussianRational) else GaussianRational(x)


def map_is_automorphism(fl: FiliformAlgebra, m: Matrix):
    """(ok, failing_pair): bijectivity plus bracket preservation on basis pairs."""
    if det(m).is_zero():
        return False, None
    n = fl.n
    images = [m.apply(unit_vector(i, n)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = m.apply(fl.algebra.table[i][j])
            rhs = fl.bracket(images[i], images[j])
            if not vec_is_zero(vec_sub(lhs, rhs)):
                return False, (i, j)
    return True, None


def phi_is_automorphism(fl: FiliformAlgebra, alpha):
    return map_is_automorphism(fl, PhiAlpha(_as_scalar(alpha)).matrix(fl))


def psi_is_automorphism(fl: FiliformAlgebra, beta):
    return map_is_automorphism(fl, PsiBeta(_as_scalar(beta)).matrix(fl))


def delta_map(fl: FiliformAlgebra) -> Matrix:
    """The local-but-not-automorphism candidate x -> x + x_3 e_n (= phi_0)."""
    return PhiAlpha(GR_ZERO).matrix(fl)


def filiform_local_witness(fl: FiliformAlgebra, x):
    """An automorphism agreeing with delta at the point x.

    x_2 = 0: phi_1 adds x_2 e_{n-1} + x_3 e_n = x_3 e_n.  Otherwise psi with
    beta = x_3 / x_2 adds beta x_2 e_n = x_3 e_n.  Either way the value at x
    is exactly delta(x); both facts are re-verified here, not trusted.
    """
    x = tuple(_as_scalar(c) for c in x)
    if len(x) != fl.n:
        raise ValueError("point has wrong dimension")
    if x[1].is_zero():
        witness = PhiAlpha(GR_ONE)
    else:
        witness = PsiBeta(x[2] * x[1].inverse())
    wm = witness.matrix(fl)
    ok, _ = map_is_automorphism(fl, wm)
    assert ok, "witness family member failed the automorphism check"
    expect = delta_map(fl).apply(x)
    assert tuple(wm.apply(x)) == tuple(expect), "witness does not match delta at x"
    return witness


@dataclass(frozen=True)
class FiliformReport:
    n: int
    delta_is_automorphism: bool
    failing_pair: tuple | None
    samples: int
    phi_witnesses: int
    psi_witnesses: int
    all_verified: bool

    def to_json(self):
        return {
            "n": self.n,
            "delta_is_automorphism": self.delta_is_automorphism,
            "failing_basis_pair": list(self.failing_pair) if self.failing_pair else None,
            "samples": self.samples,
            "witness_counts": {"phi": self.phi_witnesses, "psi": self.psi_witnesses},
            "all_verified": self.all_verified,
        }


def sample_points(n: int, samples: int, seed: int):
    """Integer coordinate vectors in [-5, 5]; every fourth has x_2 forced to 0
    so both witness branches always get exercised."""
    rng = random.Random(seed)
    pts = []
    for t in range(samples):
        v = [rng.randint(-5, 5) for _ in range(n)]
        if t % 4 == 0:
            v[1] = 0
        pts.append(tuple(GaussianRational(c) for c in v))
    return pts


def counterexample_demo(fl: FiliformAlgebra, samples: int = 200, seed: int = 0) -> FiliformReport:
    """delta is not an automorphism, yet every sampled point has an exact
    automorphism witness: a local automorphism that is not an automorphism."""
    ok, pair = map_is_automorphism(fl, delta_map(fl))
    phi_count = psi_count = 0
    verified = True
    for x in sample_points(fl.n, samples, seed):
        w = filiform_local_witness(fl, x)
        if isinstance(w, PhiAlpha):
            phi_count += 1
        else:
            psi_count += 1
    return FiliformReport(
        n=fl.n,
        delta_is_automorphism=ok,
        failing_pair=pair,
        samples=samples,
        phi_witnesses=phi_count,
        psi_witnesses=psi_count,
        all_verified=verified,
    )
