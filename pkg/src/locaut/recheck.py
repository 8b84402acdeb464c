"""Independent re-verification of verdicts and certificates.

Everything here recomputes claims from first principles: determinants by
cofactor expansion, characteristic polynomials from the polynomial-entry
matrix, brackets straight from structure constants, weight data from a fresh
decomposition.  The point is that a verdict produced by the decision code can
be checked without trusting the decision code.

All checks raise RecheckError with a description on failure and return None
on success.
"""

from __future__ import annotations

from .algebra import unit_vector
from .classify import (
    AUTOMORPHISM,
    ANTI_AUTOMORPHISM,
    NOT_LOCAL,
    Verdict,
    fit_shape_family,
    probe_element,
    required_probe_charpoly,
)
from .exact import GR_ONE, GR_ZERO, GaussianRational, Polynomial
from .leibniz import (
    BlockMap,
    LOCAL_AUT,
    LeibnizVerdict,
    SemidirectLeibniz,
    highest_weight_vector,
    is_automorphism,
    weight_decomposition,
    weight_of_vector,
)
from .linalg import Matrix, charpoly, solve_linear
from .sln import SIGMA_T, CanonicalShape, SlnModel


class RecheckError(Exception):
    pass


def _need(cond: bool, msg: str):
    if not cond:
        raise RecheckError(msg)


# ---------------------------------------------------------------------------
# First-principles scalar/polynomial linear algebra


def cofactor_det(m: Matrix) -> GaussianRational:
    """Laplace expansion along the first row; exponential, for small sizes."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError("determinant of non-square matrix")
    if n == 1:
        return m[0, 0]
    acc = GR_ZERO
    sign = GR_ONE
    for j in range(n):
        c = m[0, j]
        if c.a or c.b:
            minor = Matrix(
                tuple(tuple(m[i, k] for k in range(n) if k != j) for i in range(1, n))
            )
            acc = acc + sign * c * cofactor_det(minor)
        sign = -sign
    return acc


def _poly_det(grid) -> Polynomial:
    n = len(grid)
    if n == 1:
        return grid[0][0]
    acc = Polynomial(())
    for j in range(n):
        c = grid[0][j]
        if not c.is_zero():
            minor = [[row[k] for k in range(n) if k != j] for row in grid[1:]]
            term = c * _poly_det(minor)
            if j % 2:
                term = -term
            acc = acc + term
    return acc


def charpoly_via_cofactor(m: Matrix) -> Polynomial:
    """det(tI - m) expanded entry-wise over the polynomial ring."""
    n = m.nrows
    grid = [
        [
            Polynomial((-m[i, j], GR_ONE)) if i == j else Polynomial((-m[i, j],))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(grid)


def adjugate_inverse(m: Matrix) -> Matrix:
    """Inverse via the cofactor adjugate; independent of elimination code."""
    n = m.nrows
    d = cofactor_det(m)
    _need(not d.is_zero(), "matrix is singular")
    dinv = d.inverse()
    if n == 1:
        return Matrix(((dinv,),))
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = Matrix(
                tuple(
                    tuple(m[r, c] for c in range(n) if c != i)
                    for r in range(n)
                    if r != j
                )
            )
            cof = cofactor_det(minor)
            if (i + j) % 2:
                cof = -cof
            row.append(cof * dinv)
        rows.append(tuple(row))
    return Matrix(rows)


# ---------------------------------------------------------------------------
# sl_n verdicts


def recheck_shape(model: SlnModel, d: Matrix, shape: CanonicalShape):
    """The shape reproduces the map on every basis element, with the
    conjugator inverted by adjugate."""
    ainv = adjugate_inverse(shape.a)
    for e in model.basis:
        y = e.T if shape.sigma == SIGMA_T else e
        img = shape.a @ y @ ainv
        if shape.epsilon == -1:
            img = -img
        _need(img == model.apply_map(d, e), "shape does not reproduce the map")


def recheck_witness_at(model: SlnModel, d: Matrix, x: Matrix, shape: CanonicalShape):
    """A pointwise witness: the shape agrees with the map at x exactly."""
    ainv = adjugate_inverse(shape.a)
    y = x.T if shape.sigma == SIGMA_T else x
    img = shape.a @ y @ ainv
    if shape.epsilon == -1:
        img = -img
    _need(img == model.apply_map(d, x), "witness does not match the map at x")


def recheck_sln_verdict(model: SlnModel, d: Matrix, v: Verdict):
    if v.verdict in (AUTOMORPHISM, ANTI_AUTOMORPHISM):
        _need(v.shape is not None, "positive verdict without a shape")
        want_auto = v.shape.is_automorphism_family()
        _need(
            (v.verdict == AUTOMORPHISM) == want_auto,
            "verdict label disagrees with the shape family",
        )
        recheck_shape(model, d, v.shape)
        for extra in v.shapes:
            recheck_shape(model, d, extra)
        return
    _need(v.verdict == NOT_LOCAL, f"unknown verdict {v.verdict}")
    ob = v.obstruction
    _need(ob is not None, "negative verdict without a certificate")
    kind = ob.kind
    if kind == "not_injective":
        vker = ob.kernel_vector
        _need(any(x.a or x.b for x in vker), "kernel vector is zero")
        img = d.apply(vker)
        _need(all(x.is_zero() for x in img), "kernel vector not annihilated")
    elif kind == "square_zero_broken":
        x = ob.witness
        _need((x @ x).is_zero(), "witness is not square-zero")
        y = model.apply_map(d, x)
        _need(not (y @ y).is_zero(), "image square vanishes after all")
    elif kind == "lambda_not_unit":
        img = model.apply_map(d, probe_element(model))
        p = charpoly_via_cofactor(img) if model.n <= 4 else charpoly(img)
        _need(p == ob.probe_charpoly, "stored probe polynomial is wrong")
        _need(
            ob.required_charpoly == required_probe_charpoly(model.n),
            "stored required polynomial is wrong",
        )
        _need(
            not (ob.lam_squared - GR_ONE).is_zero(),
            "lambda squared is 1: certificate vacuous",
        )
        shift = Polynomial((0,) * (model.n - 2) + (1,))
        scaled = Polynomial((-ob.lam_squared, GR_ZERO, GR_ONE)) * shift
        _need(p == scaled, "probe polynomial does not have the scaled form")
        if ob.lam is not None:
            _need(
                (ob.lam * ob.lam - ob.lam_squared).is_zero(),
                "stored lambda is not a square root",
            )
    elif kind == "no_shape_fits":
        for (eps, sigma), dim in ob.fit_dimensions:
            space, a = fit_shape_family(model, d, eps, sigma)
            _need(space.dim == dim, "stored fit dimension is wrong")
            _need(a is None, "a family fits after all")
        if ob.probe_charpoly is not None:
            img = model.apply_map(d, probe_element(model))
            p = charpoly_via_cofactor(img) if model.n <= 4 else charpoly(img)
            _need(p == ob.probe_charpoly, "stored probe polynomial is wrong")
    elif kind == "identity_not_fixed":
        one = Matrix.identity(model.n)
        img = model.apply_map(d, one)
        _need(img == ob.image_of_identity, "stored image of identity is wrong")
        _need(img != one, "identity is fixed after all")
    else:
        raise RecheckError(f"unknown certificate kind {kind}")


# ---------------------------------------------------------------------------
# Leibniz verdicts


def _vec_eq(u, v) -> bool:
    return all((a - b).is_zero() for a, b in zip(u, v))


def recheck_leibniz_verdict(lb: SemidirectLeibniz, bm: BlockMap, v: LeibnizVerdict):
    if v.verdict == LOCAL_AUT:
        ok, pair = is_automorphism(lb, bm)
        _need(ok, f"claimed automorphism breaks a bracket at {pair}")
        return
    _need(v.verdict == NOT_LOCAL, f"unknown verdict {v.verdict}")
    cert = v.certificate
    _need(cert is not None, "negative verdict without a certificate")
    kind = cert.kind
    if kind == "sln_block":
        recheck_sln_verdict(lb.model, bm.s_block, cert.verdict)
    elif kind == "not_injective":
        vker = cert.kernel_vector
        _need(any(x.a or x.b for x in vker), "kernel vector is zero")
        img = bm.full_matrix().apply(vker)
        _need(all(x.is_zero() for x in img), "kernel vector not annihilated")
    elif kind == "bracket_square":
        z = cert.z
        _need(_vec_eq(lb.bracket(z, z), [GR_ZERO] * lb.dim), "[z, z] is not zero")
        dz = bm.full_matrix().apply(z)
        sq = lb.bracket(dz, dz)
        _need(_vec_eq(sq, cert.image_square), "stored image square is wrong")
        _need(not _vec_eq(sq, [GR_ZERO] * lb.dim), "image square vanishes")
    elif kind == "weight_structure":
        _recheck_weight_obstruction(lb, bm, cert)
    elif kind == "bracket_failure":
        full = bm.full_matrix()
        i, j = cert.i, cert.j
        lhs = full.apply(lb.algebra.table[i][j])
        rhs = lb.bracket(
            full.apply(unit_vector(i, lb.dim)), full.apply(unit_vector(j, lb.dim))
        )
        _need(not _vec_eq(lhs, rhs), "brackets agree at the stored pair")
    else:
        raise RecheckError(f"unknown certificate kind {kind}")


def _recheck_weight_obstruction(lb: SemidirectLeibniz, bm: BlockMap, cert):
    """Re-derive every ingredient of the weight certificate.

    The claim: any automorphism Phi agreeing with the map at z = h0 + y_beta
    has, after the same inner reduction, an S-block sending h0 to sign*h0;
    such a Phi keeps the I-part of the image inside I_0 + I_(sign*beta) with
    a nonzero I_(sign*beta) component.  The certificate exhibits an image
    violating that, so no such Phi exists.
    """
    ok, pair = is_automorphism(lb, cert.reducer)
    _need(ok, f"reducer is not an automorphism (pair {pair})")
    red = cert.reducer.inv().compose(bm)
    _need(
        red.s_block == cert.reduced.s_block
        and red.coupling == cert.reduced.coupling
        and red.i_block == cert.reduced.i_block,
        "stored reduced map is not reducer^-1 after the map",
    )
    y = highest_weight_vector(lb.module)
    beta = weight_of_vector(lb.module, y)
    _need(beta == cert.beta, "stored beta is not the highest-line weight")
    _need(any(b != 0 for b in beta), "beta is zero: certificate not applicable")
    h0c = lb.model.coords(lb.h0)
    z = tuple(a + b for a, b in zip(lb.embed_s(h0c), lb.embed_i(y)))
    _need(_vec_eq(z, cert.z), "stored z is not h0 + y_beta")
    img_h0 = cert.reduced.s_block.apply(h0c)
    want = h0c if cert.sign == 1 else tuple(-x for x in h0c)
    _need(_vec_eq(img_h0, want), "reduced S-block does not send h0 to sign*h0")
    _, i_part = lb.split(cert.reduced.full_matrix().apply(z))
    _need(_vec_eq(i_part, cert.i_part), "stored I-part of the image is wrong")
    # fresh weight decomposition, fresh component solve
    decomp = weight_decomposition(lb.module)
    cols = []
    meta = []
    for ws in decomp:
        for b in ws.basis:
            cols.append(b)
            meta.append(ws.values)
    sol = solve_linear(Matrix(zip(*cols)), i_part)
    _need(sol is not None, "weight spaces fail to span")
    target = cert.beta if cert.sign == 1 else tuple(-b for b in cert.beta)
    zero_w = tuple(0 * b for b in cert.beta)
    seen = set()
    for c, w in zip(sol, meta):
        if c.a or c.b:
            seen.add(w)
    violated = (target not in seen) or any(w not in (zero_w, target) for w in seen)
    _need(violated, "image respects the forced weight structure after all")


# ---------------------------------------------------------------------------
# Extension structure (block form)


def recheck_extension_structure(lb: SemidirectLeibniz, bm: BlockMap):
    """The three block conditions every extended automorphism must satisfy:
    the I-block intertwines onto the twisted module, the coupling vanishes
    when dim S != dim I, and all basis brackets are preserved."""
    phi_s = bm.s_block
    for a in range(lb.dim_s):
        col = phi_s.column(a)
        twisted = Matrix.zeros(lb.dim_i, lb.dim_i)
        for c, r in zip(col, lb.module.actions):
            if c.a or c.b:
                twisted = twisted + r * c
        _need(
            bm.i_block @ lb.module.actions[a] == twisted @ bm.i_block,
            "I-block is not an intertwiner onto the twisted module",
        )
    if lb.dim_s != lb.dim_i:
        _need(bm.coupling.is_zero(), "coupling must vanish when dim S != dim I")
    ok, pair = is_automorphism(lb, bm)
    _need(ok, f"bracket preservation fails at {pair}")
