"""Structure-constant algebras: identities, ideals, quotients, filiformity."""

from locaut.algebra import (
    StructureAlgebra,
    filiform_check,
    unit_vector,
    vec_is_zero,
)
from locaut.exact import GR_ZERO, GaussianRational
from locaut.filiform import model_filiform
from locaut.sln import SlnModel


def zero_table(n):
    return [[[GR_ZERO] * n for _ in range(n)] for _ in range(n)]


def heisenberg():
    # [e1, e2] = e3, antisymmetric, all else zero
    t = zero_table(3)
    t[0][1] = unit_vector(2, 3)
    t[1][0] = [-x for x in unit_vector(2, 3)]
    return StructureAlgebra(3, ["e1", "e2", "e3"], t)


def square_line():
    # [e1, e1] = e2: Leibniz but not Lie
    t = zero_table(2)
    t[0][0] = unit_vector(1, 2)
    return StructureAlgebra(2, ["e1", "e2"], t)


def test_sl2_is_lie():
    alg = SlnModel(2).structure_algebra()
    assert alg.validate_lie() == []
    assert alg.validate_leibniz() == []


def test_corrupted_sl2_fails_validation():
    alg = SlnModel(2).structure_algebra()
    table = [[list(alg.table[i][j]) for j in range(alg.dim)] for i in range(alg.dim)]
    table[0][1] = list(unit_vector(0, alg.dim))
    bad = StructureAlgebra(alg.dim, alg.labels, table)
    assert bad.validate_lie() != []


def test_bracket_bilinearity():
    alg = heisenberg()
    x = (GaussianRational(2), GaussianRational(3), GR_ZERO)
    y = (GaussianRational(1), GaussianRational(-1), GaussianRational(5))
    lhs = alg.bracket(x, y)
    # 2*(-1)*[e1,e2] + 3*1*[e2,e1] = -2e3 - 3e3
    assert lhs == (GR_ZERO, GR_ZERO, GaussianRational(-5))


def test_heisenberg_center_and_series():
    alg = heisenberg()
    assert alg.validate_lie() == []
    c = alg.center()
    assert c.dim == 1
    assert c.contains(alg.unit(2))
    dims = [s.dim for s in alg.lower_central_series()]
    assert dims == [1, 0]
    assert alg.right_annihilated_by(c)


def test_square_line_is_leibniz_not_lie():
    alg = square_line()
    assert alg.validate_leibniz() == []
    assert alg.validate_lie() != []


def test_squares_ideal():
    alg = square_line()
    sq = alg.squares_ideal()
    assert sq.dim == 1
    assert sq.contains(alg.unit(1))
    # Lie algebras have no nonzero squares
    assert heisenberg().squares_ideal().dim == 0


def test_liezation_of_square_line():
    alg = square_line()
    quotient, free, project = alg.liezation()
    assert quotient.dim == 1
    assert free == [0]
    assert quotient.validate_lie() == []
    assert vec_is_zero(project(alg.unit(1)))
    assert project(alg.unit(0)) == (alg.unit(0)[0],)


def test_liezation_of_lie_algebra_is_identity():
    alg = heisenberg()
    quotient, free, _ = alg.liezation()
    assert quotient.dim == 3
    assert free == [0, 1, 2]
    assert quotient.table == alg.table


def test_json_roundtrip():
    for alg in (heisenberg(), square_line(), SlnModel(2).structure_algebra()):
        data = alg.to_json()
        back = StructureAlgebra.from_json(data)
        assert back.dim == alg.dim
        assert back.labels == alg.labels
        assert back.table == alg.table


def test_json_default_labels():
    data = square_line().to_json()
    del data["labels"]
    back = StructureAlgebra.from_json(data)
    assert back.labels == ("e1", "e2")


def test_filiform_check_positive():
    chk = filiform_check(model_filiform(4).algebra)
    assert chk.is_lie and chk.filiform and chk.adapted
    assert chk.series_dims == (2, 1, 0)


def test_filiform_check_abelian_negative():
    abelian = StructureAlgebra(4, [f"e{i}" for i in range(4)], zero_table(4))
    chk = filiform_check(abelian)
    assert chk.is_lie
    assert not chk.filiform


def test_filiform_check_shallow_negative():
    # [e1,e2]=e3 in dim 4: nilpotent of class 2, not filiform
    t = zero_table(4)
    t[0][1] = unit_vector(2, 4)
    t[1][0] = [-x for x in unit_vector(2, 4)]
    chk = filiform_check(StructureAlgebra(4, ["a", "b", "c", "d"], t))
    assert chk.is_lie
    assert not chk.filiform


def test_filiform_check_non_adapted_basis():
    # same tower but the first chain step is scaled: still filiform, not adapted
    n = 4
    t = zero_table(n)
    two_e3 = [x + x for x in unit_vector(2, n)]
    t[0][1] = two_e3
    t[1][0] = [-x for x in two_e3]
    t[0][2] = unit_vector(3, n)
    t[2][0] = [-x for x in unit_vector(3, n)]
    chk = filiform_check(StructureAlgebra(n, ["e1", "e2", "e3", "e4"], t))
    assert chk.filiform
    assert not chk.adapted
