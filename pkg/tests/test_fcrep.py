"""The 2x2 polynomial-matrix representation: images, unit pairs, evaluation,
the leading-term table, L-membership, the conjugation system, and witness
extraction."""

import random

import pytest

from lpifc.errors import InvalidLetter, StillInL, ZeroPolynomial
from lpifc.exactalg import Field, Mat2Poly, UniPoly, mat_inv, scalar_mat
from lpifc.fcrep import (
    FCMat,
    alternating_monomials,
    eval_laurent,
    eval_word,
    extract_g,
    g_at_alphabeta,
    in_L,
    p1_fails_on_fc,
    phi_beta,
    phi_eval,
    phi_images_independent,
    phi_monomial,
    table_leading_term,
    thekey_solve,
    unit_pair,
)
from lpifc.laurent import LaurentPoly, parse_laurent
from lpifc.words import Letter, Word, parse_word, word_invariants

Q = Field(0)
F2 = Field(2)
F3 = Field(3)


# -- the representation ---------------------------------------------------------


def test_phi_alpha_decomposition():
    m = phi_eval("a", Q)
    assert (str(m.x), str(m.A), str(m.B), str(m.C), str(m.D)) == ("0", "0", "1", "0", "0")


def test_phi_alphabeta_is_T_e11():
    m = phi_eval("a*b", Q)
    assert m.to_mat2() == Mat2Poly(Q, ((UniPoly.T(Q), UniPoly.zero(Q)), (UniPoly.zero(Q), UniPoly.zero(Q))))
    assert (str(m.x), str(m.A)) == ("0", "1")


def test_phi_kills_squares():
    assert phi_eval("a*a", Q).is_zero
    assert phi_eval("b*b", Q).is_zero


def test_phi_image_closed_under_ring_ops():
    rng = random.Random(23)
    for _ in range(200):
        def rand_fc():
            return FCMat(
                Q,
                x=Q(rng.randint(-3, 3)),
                A=UniPoly(Q, [rng.randint(-2, 2) for _ in range(rng.randint(0, 3))]),
                B=UniPoly(Q, [rng.randint(-2, 2) for _ in range(rng.randint(0, 3))]),
                C=UniPoly(Q, [rng.randint(-2, 2) for _ in range(rng.randint(0, 3))]),
                D=UniPoly(Q, [rng.randint(-2, 2) for _ in range(rng.randint(0, 3))]),
            )

        m1, m2 = rand_fc(), rand_fc()
        FCMat.decompose(m1.to_mat2() * m2.to_mat2())
        FCMat.decompose(m1.to_mat2() + m2.to_mat2())


def test_faithfulness_desk_scale():
    assert phi_images_independent(Q, 8)
    assert phi_images_independent(F2, 8)
    assert len(alternating_monomials(8)) == 17


# -- unit pairs ---------------------------------------------------------------------


def test_primary_pair_displays():
    up = unit_pair("primary", Q)
    one, T = UniPoly.one(Q), UniPoly.T(Q)
    t2 = UniPoly.monomial(Q, 2)
    assert up.u == Mat2Poly(Q, ((one + t2, T), (T, one)))
    assert up.v == Mat2Poly(Q, ((one - T + t2, t2), (T, one + T)))
    assert up.u.det() == one and up.v.det() == one


def test_alternate_pair_units():
    up = unit_pair("alternate", Q)
    assert up.u.det().degree == 0
    assert up.v.det().degree == 0
    assert up.u * up.u_inv == Mat2Poly.identity(Q)


def test_unit_inverse_agrees_with_factorwise_series():
    # (1+n)^-1 = 1 - n for the square-zero factors; the primary unit
    # u = (1+aba)(1+b) then inverts factorwise as (1-b)(1-aba)
    one = Mat2Poly.identity(Q)
    aba = phi_monomial((0, 1, 0), Q)
    b = phi_beta(Q)
    up = unit_pair("primary", Q)
    assert up.u_inv == (one - b) * (one - aba)


def test_swapped_pair_swaps():
    primary = unit_pair("primary", Q)
    swapped = unit_pair("swapped", Q)
    assert swapped.u == primary.v and swapped.v == primary.u


# -- evaluation --------------------------------------------------------------------


def test_eval_identity_word():
    up = unit_pair("primary", Q)
    assert eval_word(Word.identity(), up) == Mat2Poly.identity(Q)


def test_eval_single_x():
    up = unit_pair("primary", Q)
    assert eval_word(parse_word("X"), up) == up.u


def test_eval_yinv_x_hand_checked():
    up = unit_pair("primary", Q)
    m = eval_word(parse_word("Y^-1*X"), up)
    expected = Mat2Poly(
        Q,
        (
            (UniPoly(Q, (1, 1, 1)), UniPoly.T(Q)),
            (UniPoly(Q, (0, 0, -1)), UniPoly(Q, (1, -1))),
        ),
    )
    assert m == expected
    # T^2 coefficient e11 - e21 = sgn * (e21 - e11) with sgn = -1
    assert m.coeff_at(2) == scalar_mat(Q, ((1, 0), (-1, 0)))


def test_eval_word_inverse_is_matrix_inverse():
    from lpifc.search import enum_words

    up = unit_pair("primary", Q)
    for w in enum_words(3):
        assert eval_word(w.inv(), up) == mat_inv(eval_word(w, up))


def test_eval_laurent_commutator():
    up = unit_pair("primary", Q)
    img = eval_laurent(parse_laurent("X*Y - Y*X", Q), up)
    assert not img.is_zero
    assert img.coeff_at(4) == scalar_mat(Q, ((0, 1), (0, 0)))


def test_eval_laurent_zero_and_xminus1():
    up = unit_pair("primary", Q)
    assert eval_laurent(LaurentPoly.zero(Q), up).is_zero
    img = eval_laurent(parse_laurent("X - 1", Q), up)
    T, t2 = UniPoly.T(Q), UniPoly.monomial(Q, 2)
    assert img == Mat2Poly(Q, ((t2, T), (T, UniPoly.zero(Q))))


def test_single_word_consistency_with_table():
    # a single-word polynomial c*w has obstruction sgn(w)*c*table(B,E), and
    # the evaluation coefficient agrees
    from lpifc.laurent import obstruction_matrix

    up = unit_pair("primary", Q)
    for text, c in (("X*Y^-1", 3), ("X^-1*Y*X", -2)):
        w = parse_word(text)
        f = LaurentPoly(Q, {w: c})
        invs = word_invariants(w)
        expected = table_leading_term(invs.B, invs.E, Q)
        expected = tuple(tuple(Q(invs.sgn * c) * e for e in row) for row in expected)
        assert obstruction_matrix(f) == expected
        assert eval_laurent(f, up).coeff_at(2 * invs.C) == expected


def test_cancelling_cells_consistent():
    # X^2 and X*Y^-1*X share (B, E, sgn, C): both routes vanish together
    from lpifc.exactalg import scalar_mat_is_zero
    from lpifc.laurent import obstruction_matrix

    f = parse_laurent("X^2 - X*Y^-1*X", Q)
    up = unit_pair("primary", Q)
    assert scalar_mat_is_zero(obstruction_matrix(f))
    assert scalar_mat_is_zero(eval_laurent(f, up).coeff_at(4))


def test_degree_equals_twice_cumulus_small():
    from lpifc.search import enum_words

    up = unit_pair("primary", Q)
    for w in enum_words(3):
        invs = word_invariants(w)
        img = eval_word(w, up)
        assert img.degree == 2 * invs.C
        expected = table_leading_term(invs.B, invs.E, Q)
        expected = tuple(tuple(Q(invs.sgn) * e for e in row) for row in expected)
        assert img.coeff_at(2 * invs.C) == expected


def test_alternate_pair_degree_bound_small():
    from lpifc.words import words_of_weight_at_most

    up = unit_pair("alternate", Q)
    for w in words_of_weight_at_most(4):
        assert eval_word(w, up).degree <= 2 * w.weight


# -- the leading-term table ------------------------------------------------------------


def test_table_entries():
    assert table_leading_term(Letter.X, Letter.X, Q) == scalar_mat(Q, ((1, 0), (0, 0)))
    assert table_leading_term(Letter.XINV, Letter.Y, Q) == scalar_mat(Q, ((0, 0), (1, 1)))
    assert table_leading_term(Letter.YINV, Letter.XINV, Q) == scalar_mat(Q, ((0, -1), (0, 1)))


def test_table_rejects_identity_marker():
    with pytest.raises(InvalidLetter):
        table_leading_term(Letter.ONE, Letter.X, Q)


# -- L membership ------------------------------------------------------------------------


def test_in_l_zero():
    assert in_L(FCMat.decompose(Mat2Poly.zero(Q)))


def test_in_l_unit_minus_one():
    up = unit_pair("primary", Q)
    m = FCMat.decompose(up.u - Mat2Poly.identity(Q))
    assert (str(m.A), str(m.B), str(m.C), str(m.D)) == ("T", "T", "1", "0")
    assert not in_L(m)  # T*T + T + 1 = T^2 + T + 1 != 0


def test_in_l_cancelling_sum():
    m = FCMat(Q, x=Q(0), A=UniPoly.zero(Q), B=UniPoly.one(Q), C=UniPoly(Q, (-1,)), D=UniPoly.zero(Q))
    assert in_L(m)


# -- the conjugation system ---------------------------------------------------------------


def test_thekey_zero_space_char_zero_and_three():
    for field in (Q, F3):
        report = thekey_solve(field, degree_bound=4)
        assert report.zero_space
        assert all(holds for _, holds in report.relations)
        # the four displayed memberships suffice, no extended conjugators
        assert len(report.stages) == 4


def test_thekey_char2_needs_extended_conjugators():
    report = thekey_solve(F2, degree_bound=4)
    assert report.zero_space
    assert len(report.stages) > 4
    # the displayed elimination relations genuinely fail in characteristic 2
    assert not all(holds for _, holds in report.relations)


def test_thekey_char2_without_extension_reports_residual():
    from lpifc.fcrep import default_conjugators

    report = thekey_solve(F2, degree_bound=4, conjugators=default_conjugators(F2), extended=False)
    assert not report.zero_space
    assert report.final_dim > 0
    assert report.residual_basis


def test_thekey_degree_cap_independence():
    for d in (2, 3, 6):
        assert thekey_solve(Q, degree_bound=d).zero_space


# -- witness extraction ---------------------------------------------------------------------


def test_extract_g_x_minus_one():
    up = unit_pair("primary", Q)
    witness = extract_g(parse_laurent("X - 1", Q), up)
    assert witness.g == UniPoly.monomial(Q, 2)  # T^2
    assert (witness.sigma, witness.tau) == ("a", "ab")  # (a, b) gives zero first


def test_extract_g_rejects_zero():
    up = unit_pair("primary", Q)
    with pytest.raises(ZeroPolynomial):
        extract_g(LaurentPoly.zero(Q), up)


def test_extract_g_commutator_nonzero():
    up = unit_pair("primary", Q)
    witness = extract_g(parse_laurent("X*Y - Y*X", Q), up)
    assert not witness.g.is_zero
    assert witness.g.constant_term.is_zero


def test_extract_g_random_inputs():
    from lpifc.search import enum_words, random_laurent

    rng = random.Random(29)
    up = unit_pair("primary", Q)
    pool = list(enum_words(2))
    produced = 0
    while produced < 50:
        f = random_laurent(rng, Q, pool)
        if eval_laurent(f, up).is_zero:
            continue
        witness = extract_g(f, up)
        assert not witness.g.is_zero
        assert witness.g.constant_term.is_zero
        produced += 1


def test_extract_g_skips_conjugation_outside_l():
    f = parse_laurent("X - 1", Q)
    witness = extract_g(f, up := unit_pair("primary", Q), conj_bound=0)
    assert witness.conjugator == "1"  # not in L, no conjugation needed


def test_extract_g_conjugation_rescue():
    # this input evaluates to a nonzero element *inside* L; a single
    # elementary conjugation rescues it (g frozen as a regression value)
    up = unit_pair("primary", Q)
    f = parse_laurent("X^-1*Y^-1*X - 2*X^-1*Y*X^-1 + Y", Q)
    r = eval_laurent(f, up)
    assert not r.is_zero
    assert FCMat.decompose(r).in_l()
    witness = extract_g(f, up)
    assert witness.conjugator == "(1+a)"
    assert str(witness.g) == "-T^5 - 2*T^4 - 2*T^3 - 4*T^2"
    assert witness.g.constant_term.is_zero


def test_extract_g_still_in_l_when_bound_zero():
    up = unit_pair("primary", Q)
    f = parse_laurent("X^-1*Y^-1*X - 2*X^-1*Y*X^-1 + Y", Q)
    with pytest.raises(StillInL):
        extract_g(f, up, conj_bound=0)


# -- the failing-property exhibit -------------------------------------------------------------


def test_p1_fails_examples():
    assert p1_fails_on_fc(UniPoly.T(Q))
    assert p1_fails_on_fc(UniPoly.one(Q))
    assert p1_fails_on_fc(UniPoly.parse("T^2 - T", Q))
    with pytest.raises(ZeroPolynomial):
        p1_fails_on_fc(UniPoly.zero(Q))


def test_g_at_alphabeta_shape():
    g = UniPoly.parse("T^2 - T + 3", Q)
    m = g_at_alphabeta(g)
    assert m.entry(0, 0) == g
    assert m.entry(1, 1) == UniPoly(Q, (3,))
    assert m.entry(0, 1).is_zero and m.entry(1, 0).is_zero
    # matches the honest evaluation of g at the image of ab
    ab = phi_monomial((0, 1), Q)
    direct = Mat2Poly.identity(Q).scale(Q(3)) + ab * ab - ab
    assert m == direct


def test_thekey_char2_residual_structure():
    # without the extended conjugators the char-2 residual space is exactly
    # x = 0, D = T*A, B = C = T*(1+T)*A (hand-derived from the membership
    # equations); every reported basis vector satisfies these relations
    from lpifc.fcrep import default_conjugators

    report = thekey_solve(F2, degree_bound=5, conjugators=default_conjugators(F2), extended=False)
    assert report.final_dim > 0
    T = UniPoly.T(F2)
    t_one_plus_t = UniPoly(F2, (0, 1, 1))  # T + T^2
    for entry in report.residual_basis:
        x = entry["x"]
        A = UniPoly.parse(entry["A"], F2) if entry["A"] != "0" else UniPoly.zero(F2)
        B = UniPoly.parse(entry["B"], F2) if entry["B"] != "0" else UniPoly.zero(F2)
        C = UniPoly.parse(entry["C"], F2) if entry["C"] != "0" else UniPoly.zero(F2)
        D = UniPoly.parse(entry["D"], F2) if entry["D"] != "0" else UniPoly.zero(F2)
        assert x == "0"
        assert D == T * A
        assert B == t_one_plus_t * A
        assert C == t_one_plus_t * A


def test_thekey_char2_closes_with_1_plus_aba():
    for bound in (2, 4, 6):
        report = thekey_solve(F2, degree_bound=bound)
        assert report.zero_space
        assert report.stages[-1].conjugator == "1+aba"


def test_swapped_pair_evaluates_swapped_polynomial():
    # evaluating f at the swapped pair equals evaluating f(Y,X) at the
    # primary pair
    primary = unit_pair("primary", Q)
    swapped = unit_pair("swapped", Q)
    for text in ("X*Y - Y*X", "1 + X + Y^-1", "X^2*Y^-1 - 3*X"):
        f = parse_laurent(text, Q)
        assert eval_laurent(f, swapped) == eval_laurent(f.swap_xy(), primary)


def test_eval_laurent_rejects_many_variables():
    from lpifc.errors import InvalidParameter
    from lpifc.laurent import reduce_to_two_vars

    f = LaurentPoly(Q, {Word.generator(2): 1, Word.identity(): -1})
    up = unit_pair("primary", Q)
    with pytest.raises(InvalidParameter):
        eval_laurent(f, up)
    # the documented route: reduce first, then evaluate
    reduced = reduce_to_two_vars(f, nvars=3)
    assert not eval_laurent(reduced, up).is_zero
