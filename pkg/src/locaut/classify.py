"""Deciding which linear maps on sl_n (or M_n) are local automorphisms.

The decision pipeline for sl_n:

1. injectivity,
2. preservation of square-zero elements on a spanning set,
3. exact fit against the four canonical families
   x -> epsilon * a * sigma(x) * a^-1,
4. the scaled-shape probe at y = diag(1, -1, 0, ..., 0): any local
   automorphism must give char(Delta(y)) = (t-1)(t+1)t^(n-2), and a scaled
   family produces (t-lambda)(t+lambda)t^(n-2), exposing the scalar.

Every negative answer carries a certificate that can be re-verified without
trusting this module's code path.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .exact import GR_ONE, GR_ZERO, GaussianRational, Polynomial, format_scalar
from .linalg import (
    Matrix,
    charpoly,
    det,
    intertwiner_space,
    inverse,
    invertible_element,
    kernel,
    similarity_witness,
)
from .sln import (
    SHAPE_FAMILIES,
    SIGMA_ID,
    SIGMA_T,
    CanonicalShape,
    MnModel,
    SlnModel,
)

AUTOMORPHISM = "Automorphism"
ANTI_AUTOMORPHISM = "AntiAutomorphism"
NOT_LOCAL = "NotLocal"


@dataclass(frozen=True)
class NotInjective:
    kernel_vector: tuple

    kind = "not_injective"

    def to_json(self):
        return {"kind": self.kind, "kernel_vector": [format_scalar(x) for x in self.kernel_vector]}


@dataclass(frozen=True)
class SquareZeroBroken:
    witness: Matrix

    kind = "square_zero_broken"

    def to_json(self):
        return {"kind": self.kind, "witness": self.witness.to_json()}


@dataclass(frozen=True)
class LambdaNotUnit:
    lam: GaussianRational | None
    lam_squared: GaussianRational
    probe_charpoly: Polynomial
    required_charpoly: Polynomial

    kind = "lambda_not_unit"

    def to_json(self):
        return {
            "kind": self.kind,
            "lambda": None if self.lam is None else format_scalar(self.lam),
            "lambda_squared": format_scalar(self.lam_squared),
            "probe_charpoly": self.probe_charpoly.to_json(),
            "required_charpoly": self.required_charpoly.to_json(),
        }


@dataclass(frozen=True)
class NoShapeFits:
    fit_dimensions: tuple
    probe_charpoly: Polynomial | None
    required_charpoly: Polynomial | None

    kind = "no_shape_fits"

    def to_json(self):
        return {
            "kind": self.kind,
            "fit_dimensions": [
                {"epsilon": eps, "sigma": sigma, "dim": d}
                for (eps, sigma), d in self.fit_dimensions
            ],
            "probe_charpoly": None if self.probe_charpoly is None else self.probe_charpoly.to_json(),
            "required_charpoly": None
            if self.required_charpoly is None
            else self.required_charpoly.to_json(),
        }


@dataclass(frozen=True)
class IdentityNotFixed:
    image_of_identity: Matrix

    kind = "identity_not_fixed"

    def to_json(self):
        return {"kind": self.kind, "image_of_identity": self.image_of_identity.to_json()}


@dataclass(frozen=True)
class Verdict:
    verdict: str
    shape: CanonicalShape | None = None
    shapes: tuple = ()
    obstruction: object | None = None

    def to_json(self):
        return {
            "verdict": self.verdict,
            "shape": None if self.shape is None else self.shape.to_json(),
            "shapes": [s.to_json() for s in self.shapes] if len(self.shapes) > 1 else None,
            "obstruction": None if self.obstruction is None else self.obstruction.to_json(),
        }


def _family_verdict(shape: CanonicalShape) -> str:
    return AUTOMORPHISM if shape.is_automorphism_family() else ANTI_AUTOMORPHISM


def fit_shape_family(model, d: Matrix, epsilon: int, sigma: str):
    """Intertwiner space of the family equations Delta(sigma(e)) a = epsilon a e.

    Returns (space, witness) where witness is an invertible element or None.
    A witness makes Delta(x) = epsilon * a * sigma(x) * a^-1 hold for every x.
    """
    pairs = []
    for e in model.basis:
        se = e.T if sigma == SIGMA_T else e
        pairs.append((model.apply_map(d, se), e * epsilon))
    space = intertwiner_space(pairs)
    a = invertible_element(space, model.n)
    return space, a


def _verify_shape(model, d: Matrix, shape: CanonicalShape) -> bool:
    ainv = inverse(shape.a)
    for e in model.basis:
        y = e.T if shape.sigma == SIGMA_T else e
        img = shape.a @ y @ ainv
        if shape.epsilon == -1:
            img = -img
        if img != model.apply_map(d, e):
            return False
    return True


def probe_element(model: SlnModel) -> Matrix:
    entries = [1, -1] + [0] * (model.n - 2)
    return Matrix.diagonal(entries)


def required_probe_charpoly(n: int) -> Polynomial:
    # (t - 1)(t + 1) t^(n-2)
    t2 = Polynomial((-1, 0, 1))
    shift = Polynomial((0,) * (n - 2) + (1,))
    return t2 * shift


def local_aut_probe(model: SlnModel, d: Matrix):
    """Characteristic polynomial probe at y = diag(1, -1, 0, ..., 0).

    Returns (probe, required, lam_squared, lam).  lam_squared is set when the
    probe has the scaled form t^(n-2) (t^2 - lam^2); lam is its canonical
    square root in Q(i) when one exists.
    """
    y = probe_element(model)
    p = charpoly(model.apply_map(d, y))
    required = required_probe_charpoly(model.n)
    n = model.n
    lam_sq = None
    cs = list(p.coeffs) + [GR_ZERO] * (n + 1 - len(p.coeffs))
    scaled = cs[n].is_one() and all(
        cs[k].is_zero() for k in range(n) if k != n - 2
    )
    if scaled:
        lam_sq = -cs[n - 2]
    lam = lam_sq.sqrt() if lam_sq is not None else None
    return p, required, lam_sq, lam


def square_zero_counterexample(model: SlnModel, d: Matrix) -> Matrix | None:
    """First spanning-set element whose square-zero property the map breaks."""
    for x in model.square_zero_spanning_set():
        y = model.apply_map(d, x)
        if not (y @ y).is_zero():
            return x
    return None


def random_traceless_nilpotent(model: SlnModel, rng: random.Random) -> Matrix:
    """Random rank-one u v^T with v^T u = 0: square-zero and traceless."""
    n = model.n
    while True:
        u = [rng.randint(-3, 3) for _ in range(n)]
        if not any(u):
            continue
        w = [rng.randint(-3, 3) for _ in range(n)]
        uu = sum(x * x for x in u)
        uw = sum(x * y for x, y in zip(u, w))
        v = [uu * y - uw * x for x, y in zip(u, w)]
        if not any(v):
            continue
        m = Matrix(tuple(tuple(ui * vj for vj in v) for ui in u))
        assert (m @ m).is_zero() and m.trace().is_zero()
        return m


def preserves_square_zero(model: SlnModel, d: Matrix, trials: int = 0, seed: int = 0):
    """(ok, counterexample): spanning set first, then seeded random nilpotents."""
    bad = square_zero_counterexample(model, d)
    if bad is not None:
        return False, bad
    rng = random.Random(seed)
    for _ in range(trials):
        x = random_traceless_nilpotent(model, rng)
        y = model.apply_map(d, x)
        if not (y @ y).is_zero():
            return False, x
    return True, None


def classify_sln(model: SlnModel, d: Matrix) -> Verdict:
    """Full classification of a linear self-map of sl_n in model coordinates.

    At n = 2 the four families overlap pairwise (conjugation by the symplectic
    matrix turns sigma = identity into sigma = transpose with the opposite
    sign), so every fitting family is reported; the first in the fixed family
    order is the primary shape.  For n >= 3 the family is unique and the scan
    stops at the first fit.
    """
    if d.nrows != model.dim or d.ncols != model.dim:
        raise ValueError("map matrix has wrong size for this model")
    ker = kernel(d)
    if ker.dim > 0:
        return Verdict(NOT_LOCAL, obstruction=NotInjective(ker.basis[0]))
    ok, bad = preserves_square_zero(model, d)
    if not ok:
        return Verdict(NOT_LOCAL, obstruction=SquareZeroBroken(bad))
    fits = []
    dims = []
    for eps, sigma in SHAPE_FAMILIES:
        space, a = fit_shape_family(model, d, eps, sigma)
        dims.append(((eps, sigma), space.dim))
        if a is not None:
            shape = CanonicalShape(eps, sigma, a)
            assert _verify_shape(model, d, shape)
            fits.append(shape)
            if model.n >= 3:
                break
    if fits:
        primary = fits[0]
        return Verdict(_family_verdict(primary), shape=primary, shapes=tuple(fits))
    probe, required, lam_sq, lam = local_aut_probe(model, d)
    if lam_sq is not None and not (lam_sq - GR_ONE).is_zero():
        return Verdict(
            NOT_LOCAL,
            obstruction=LambdaNotUnit(
                lam=lam, lam_squared=lam_sq, probe_charpoly=probe, required_charpoly=required
            ),
        )
    return Verdict(
        NOT_LOCAL,
        obstruction=NoShapeFits(tuple(dims), probe, required),
    )


MN_FAMILIES = ((1, SIGMA_ID), (1, SIGMA_T))


def classify_mn(model: MnModel, d: Matrix) -> Verdict:
    """Classification on the full matrix algebra: x -> a x a^-1 or a x^T a^-1.

    Unital algebra maps must fix the identity, which rules out sign twists;
    Delta(1) != 1 is therefore already a complete obstruction.
    """
    if d.nrows != model.dim or d.ncols != model.dim:
        raise ValueError("map matrix has wrong size for this model")
    ker = kernel(d)
    if ker.dim > 0:
        return Verdict(NOT_LOCAL, obstruction=NotInjective(ker.basis[0]))
    one = Matrix.identity(model.n)
    d_one = model.apply_map(d, one)
    if d_one != one:
        return Verdict(NOT_LOCAL, obstruction=IdentityNotFixed(d_one))
    dims = []
    for eps, sigma in MN_FAMILIES:
        space, a = fit_shape_family(model, d, eps, sigma)
        dims.append(((eps, sigma), space.dim))
        if a is not None:
            shape = CanonicalShape(eps, sigma, a)
            assert _verify_shape(model, d, shape)
            verdict = AUTOMORPHISM if sigma == SIGMA_ID else ANTI_AUTOMORPHISM
            return Verdict(verdict, shape=shape, shapes=(shape,))
    return Verdict(NOT_LOCAL, obstruction=NoShapeFits(tuple(dims), None, None))


def pointwise_witness(model: SlnModel, d: Matrix, x: Matrix) -> CanonicalShape | None:
    """An automorphism of sl_n agreeing with the map at the single point x.

    Tries conjugation first, then the standard anti-twist x -> -a x^T a^-1,
    which together exhaust the automorphisms of sl_n.
    """
    target = model.apply_map(d, x)
    a = similarity_witness(x, target)
    if a is not None:
        return CanonicalShape(1, SIGMA_ID, a)
    b = similarity_witness(-(x.T), target)
    if b is not None:
        return CanonicalShape(-1, SIGMA_T, b)
    return None


# -- handy map constructors (used by tests, scripts and the CLI) -----------


def random_unimodular(n: int, rng: random.Random, steps: int | None = None) -> Matrix:
    """Product of random integer shears: unimodular, so the inverse is exact
    and stays small."""
    if steps is None:
        steps = 3 * n * n
    rows = [[GaussianRational(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = GaussianRational(rng.choice([-2, -1, 1, 2]))
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    m = Matrix(tuple(tuple(r) for r in rows))
    assert not det(m).is_zero()
    return m
