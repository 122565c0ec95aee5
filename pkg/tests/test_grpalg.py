"""Groups, group algebras, structure-constant algebras, unit arithmetic,
falsification, standard polynomials, and the vanishing checks."""

import random

import pytest

from lpifc.errors import (
    ArityMismatch,
    InvalidParameter,
    NonInvertibleOrder,
    NotAUnit,
    TooLargeForExhaustive,
    ZeroPolynomial,
)
from lpifc.exactalg import Field, UniPoly
from lpifc.grpalg import (
    FinAlgebra,
    FiniteGroup,
    bac_check,
    build_group,
    cyclic_group,
    dihedral_group,
    falsify_lpi,
    finitecondi_witness,
    group_algebra,
    hat,
    load_algebra,
    load_group,
    matrix2_algebra,
    p1_check,
    poly_at,
    product_group,
    quaternion_group,
    square_zero_algebra,
    standard_poly,
    standard_poly_exhaustive,
    standard_poly_sampled,
    structural_predicates,
    symmetric_group,
)
from lpifc.laurent import parse_laurent

Q = Field(0)
F2 = Field(2)
F3 = Field(3)


# -- groups -------------------------------------------------------------------


def test_cyclic_three():
    g = cyclic_group(3)
    assert g.order == 3
    assert g.table == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert g.is_abelian


def test_sym3_nonabelian_order_six():
    g = symmetric_group(3)
    assert g.order == 6
    assert not g.is_abelian


def test_sym_bound():
    with pytest.raises(InvalidParameter):
        symmetric_group(5)


def test_quaternion_every_subgroup_normal():
    g = quaternion_group()
    assert g.order == 8
    for x in range(g.order):
        subgroup = set(g.cyclic_subgroup(x))
        for h in range(g.order):
            hinv = g.inverse(h)
            conj = {g.mult(g.mult(h, s), hinv) for s in subgroup}
            assert conj == subgroup


def test_dihedral_and_products():
    d4 = dihedral_group(4)
    assert d4.order == 8 and not d4.is_abelian
    v4 = product_group(cyclic_group(2), cyclic_group(2))
    assert v4.order == 4 and v4.is_abelian
    assert build_group("cyclic:2xcyclic:3").order == 6


def test_bad_group_spec():
    with pytest.raises(InvalidParameter):
        build_group("cyclic:x")
    with pytest.raises(InvalidParameter):
        build_group("frobnicate:3")


def test_group_table_validation():
    with pytest.raises(InvalidParameter):
        FiniteGroup([[0, 1], [1, 1]])  # not a group


# -- algebras ------------------------------------------------------------------


def test_group_algebra_of_cyclic():
    A = group_algebra(cyclic_group(3), Q)
    g = A.basis(1)
    assert g * g == A.basis(2)
    assert g * g * g == A.one()


def test_hat_examples():
    A = group_algebra(cyclic_group(3), Q)
    e = hat(A, 1, normalized=True)  # (1+g+g^2)/3
    assert e * e == e
    assert hat(A, A.group.identity) == A.one()
    B = group_algebra(cyclic_group(2), F2)
    with pytest.raises(NonInvertibleOrder):
        hat(B, 1, normalized=True)


def test_unit_inverse_examples():
    A = square_zero_algebra(F2, 1)  # F2[x]/(x^2)
    one_plus_x = A.one() + A.basis(1)
    assert one_plus_x.inverse() == one_plus_x  # (1+x)^2 = 1 in char 2
    with pytest.raises(NotAUnit):
        A.basis(1).inverse()  # x is nilpotent
    assert A.one().inverse() == A.one()


def test_regular_representation_inverse_random():
    rng = random.Random(43)
    algebras = [
        group_algebra(symmetric_group(3), F3),
        group_algebra(cyclic_group(5), Q),
        matrix2_algebra(F3),
    ]
    for A in algebras:
        found = 0
        while found < 100:
            a = A.random_element(rng)
            try:
                inv = a.inverse()
            except NotAUnit:
                continue
            assert a * inv == A.one() and inv * a == A.one()
            found += 1


def test_structure_file_roundtrip(tmp_path):
    # F3[x]/(x^2) as a structure-constant file
    path = tmp_path / "dual_numbers.alg"
    path.write_text(
        """# dual numbers over F3
algebra
dim 2
label 0 1
label 1 x
unity 1 0
sc 0 0 0 1
sc 0 1 1 1
sc 1 0 1 1
"""
    )
    A = load_algebra(str(path), F3)
    assert A.dim == 2
    x = A.basis(1)
    assert (x * x).is_zero
    assert (A.one() + x) * (A.one() - x) == A.one()


def test_group_file_roundtrip(tmp_path):
    path = tmp_path / "s3.grp"
    path.write_text("perm-group\ndegree 3\ngen 1 0 2\ngen 1 2 0\n")
    g = load_group(str(path))
    assert g.order == 6
    assert not g.is_abelian


def test_invalid_structure_constants_rejected():
    # basis 1, u, v with u*u = v, u*v = 1, v*u = 0: then (uu)u = 0 != u = u(uv)
    e0, e1, e2, z = (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)
    bad_sc = [
        [e0, e1, e2],
        [e1, e2, e0],
        [e2, z, z],
    ]
    with pytest.raises(InvalidParameter):
        FinAlgebra(Q, bad_sc, e0)


# -- falsification ----------------------------------------------------------------


def test_falsify_commutator_on_abelian_group_finds_nothing():
    A = group_algebra(cyclic_group(6), F2)
    result = falsify_lpi(parse_laurent("X*Y - Y*X", F2), A, trials=80, seed=2)
    assert not result.found


def test_falsify_commutator_on_sym3():
    A = group_algebra(symmetric_group(3), F2)
    result = falsify_lpi(parse_laurent("X*Y - Y*X", F2), A, trials=80, seed=2)
    assert result.found
    assert result.value is not None


def test_falsify_zero_polynomial():
    A = group_algebra(cyclic_group(2), Q)
    from lpifc.laurent import LaurentPoly

    assert not falsify_lpi(LaurentPoly.zero(Q), A, trials=5).found


def test_falsify_deterministic_with_seed():
    A = group_algebra(symmetric_group(3), F3)
    f = parse_laurent("X*Y - Y*X", F3)
    r1 = falsify_lpi(f, A, trials=50, seed=7)
    r2 = falsify_lpi(f, A, trials=50, seed=7)
    assert r1.to_dict() == r2.to_dict()


# -- standard polynomials -----------------------------------------------------------


def test_s2_is_the_commutator():
    A = group_algebra(cyclic_group(4), Q)
    a, b = A.basis(1), A.basis(2)
    assert standard_poly(2, [a, b]).is_zero  # commuting elements


def test_s2_on_matrix_units():
    A = matrix2_algebra(F2)
    assert standard_poly(2, [A.basis(0), A.basis(1)]) == A.basis(1)  # e12


def test_s4_vanishes_exhaustively_on_m2_f2():
    result = standard_poly_exhaustive(matrix2_algebra(F2), 4)
    assert result.holds
    assert result.checked == 16**4


def test_s4_sampled_on_m2_f3():
    result = standard_poly_sampled(matrix2_algebra(F3), 4, samples=100000, seed=5)
    assert result.holds
    assert result.checked == 100000


def test_s3_does_not_vanish_on_m2():
    result = standard_poly_sampled(matrix2_algebra(F2), 3, samples=200, seed=1)
    assert not result.holds


def test_standard_poly_arity():
    A = matrix2_algebra(F2)
    with pytest.raises(ArityMismatch):
        standard_poly(3, [A.one()])


def test_exhaustive_guard():
    with pytest.raises(TooLargeForExhaustive):
        standard_poly_exhaustive(group_algebra(symmetric_group(4), F3), 4)


# -- vanishing checks ----------------------------------------------------------------


def test_p1_holds_on_square_zero_algebra():
    result = p1_check(square_zero_algebra(F2, 2), UniPoly.parse("T^2", F2))
    assert result.holds
    assert result.checked == 8 * 8  # eight square-zero elements


def test_p1_fails_on_matrix_algebra():
    result = p1_check(matrix2_algebra(F2), UniPoly.parse("T", F2))
    assert not result.holds
    assert result.witness is not None


def test_p1_rejects_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        p1_check(square_zero_algebra(F2, 2), UniPoly.zero(F2))


def test_p1_sampled_mode():
    result = p1_check(square_zero_algebra(F2, 2), UniPoly.parse("T^2", F2),
                      mode="sampled", samples=200, seed=3)
    assert result.holds


def test_bac_holds_after_p1():
    A = square_zero_algebra(F2, 2)
    g = UniPoly.parse("T^2", F2)
    assert p1_check(A, g).holds
    result = bac_check(A, g)
    assert result.holds
    # quadruple count: sum over bc = 0 pairs of |square-zero| * |algebra|
    table_pairs = 0
    elems = [A.elem((a, b, c, d)) for a in range(2) for b in range(2) for c in range(2) for d in range(2)]
    for b in elems:
        for c in elems:
            if (b * c).is_zero:
                table_pairs += 1
    assert result.checked == table_pairs * 8 * 16


def test_bac_trivial_on_zero_a():
    # a = 0 always satisfies the chain; exercised inside the exhaustive scan
    A = square_zero_algebra(F2, 1)
    assert bac_check(A, UniPoly.parse("T", F2)).holds


def test_bac_precondition_rejected():
    # M2(F2) fails the square-zero vanishing for g = T, so the chain check
    # refuses to run
    with pytest.raises(InvalidParameter):
        bac_check(matrix2_algebra(F2), UniPoly.parse("T", F2))


def test_finitecondi_witness_q2():
    w = finitecondi_witness(2, UniPoly.parse("T", F2))
    assert str(w.r) == "1"
    assert w.g_of_ab == w.a.algebra.basis(0)  # e11


def test_finitecondi_witness_q3():
    w = finitecondi_witness(3, UniPoly.parse("T^2+T", F3))
    assert not w.g_of_r.is_zero
    assert not w.g_of_ab.is_zero


def test_finitecondi_degree_precondition():
    with pytest.raises(InvalidParameter):
        finitecondi_witness(2, UniPoly.parse("T^2+T", F2))


# -- structural predicates --------------------------------------------------------------


def test_abelian_group_algebra_all_idempotents_central():
    report = structural_predicates(group_algebra(cyclic_group(4), F3))
    assert report.idempotent_mode == "exhaustive"
    assert report.all_idempotents_central
    assert report.normalizer_criterion_holds


def test_qs3_noncentral_idempotent_found():
    report = structural_predicates(group_algebra(symmetric_group(3), Q))
    assert report.idempotent_mode == "averaging"
    assert not report.all_idempotents_central
    assert report.normalizer_criterion_holds
    assert report.normalizer_pairs_checked == 36


def test_normalizer_criterion_small_groups():
    groups = [
        cyclic_group(12),
        symmetric_group(3),
        quaternion_group(),
        dihedral_group(5),
        dihedral_group(6),
        product_group(cyclic_group(2), cyclic_group(2)),
    ]
    for g in groups:
        for field in (F2, Q):
            report = structural_predicates(group_algebra(g, field))
            assert report.normalizer_criterion_holds, (g.name, field)


def test_poly_at_constant_term_uses_unity():
    A = matrix2_algebra(Q)
    g = UniPoly.parse("T + 2", Q)
    assert poly_at(g, A.zero()) == A.one().scale(Q(2))


def test_p1_exhaustive_falls_back_without_index_tables():
    # 12-dim group algebra over F2: 4096 elements, within the enumeration
    # guard but past the index-table bound; the direct scan takes over
    A = group_algebra(cyclic_group(12), F2)
    g = UniPoly.parse("T", F2)
    result = p1_check(A, g, mode="exhaustive")
    # commutative algebra in char 2: (a+b)^2 = a^2 + b^2, so square-zero
    # elements are closed under sums and products of two of them can be
    # nonzero: T does not vanish
    assert result.checked > 0
