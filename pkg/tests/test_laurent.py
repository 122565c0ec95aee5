"""Laurent polynomials: parsing, support, cumulus, obstruction matrix,
transforms, and the many-to-two variable reduction."""

import random

import pytest

from lpifc.errors import ParseError, ZeroPolynomial
from lpifc.exactalg import Field, scalar_mat, scalar_mat_is_zero
from lpifc.laurent import (
    LaurentPoly,
    max_cumulus,
    obstruction_matrix,
    parse_laurent,
    reduce_to_two_vars,
    transform,
)
from lpifc.words import Word, parse_word, word_invariants

Q = Field(0)
F2 = Field(2)
F3 = Field(3)


# -- parsing -------------------------------------------------------------------


def test_parse_commutator():
    f = parse_laurent("X*Y - Y*X", Q)
    assert f.terms == {parse_word("X*Y"): Q(1), parse_word("Y*X"): Q(-1)}


def test_parse_modular_reduction_drops_term():
    f = parse_laurent("1 + 2*X^-1*Y", F2)
    assert f.terms == {Word.identity(): F2(1)}


def test_parse_cancelling_terms():
    assert parse_laurent("X - X", Q).is_zero


def test_parse_rational_coefficients():
    f = parse_laurent("3/2*X - 1", Q)
    assert f.coeff(parse_word("X")) == Q.from_fraction(3, 2)
    assert f.coeff(Word.identity()) == Q(-1)


def test_parse_error_offset():
    with pytest.raises(ParseError):
        parse_laurent("X + ", Q)


def test_render_parse_cycle():
    for text in ("X*Y - Y*X", "1 + 2*X^-1*Y", "X^2*Y^-3 + 5", "-X + Y"):
        f = parse_laurent(text, Q)
        assert parse_laurent(f.render(), Q) == f


# -- cumulus ----------------------------------------------------------------------


def test_max_cumulus_examples():
    assert max_cumulus(parse_laurent("X*Y - Y*X", Q)) == 2
    assert max_cumulus(parse_laurent("1", Q)) == 0
    assert max_cumulus(parse_laurent("1 + X^-1*Y", Q)) == 1


def test_max_cumulus_zero_poly_rejected():
    with pytest.raises(ZeroPolynomial):
        max_cumulus(LaurentPoly.zero(Q))


# -- obstruction matrix -------------------------------------------------------------


def test_obstruction_commutator():
    assert obstruction_matrix(parse_laurent("X*Y - Y*X", Q)) == scalar_mat(Q, ((0, 1), (0, 0)))


def test_obstruction_constant_is_zero_matrix():
    assert scalar_mat_is_zero(obstruction_matrix(parse_laurent("5", Q)))


def test_obstruction_single_generator():
    assert obstruction_matrix(parse_laurent("X", Q)) == scalar_mat(Q, ((1, 0), (0, 0)))


def test_obstruction_linearity_on_shared_cumulus():
    rng = random.Random(5)
    words = [w for w in _cumulus_pool(2) if word_invariants(w).C == 2]
    for _ in range(40):
        support = rng.sample(words, 3)
        f = LaurentPoly(Q, {support[0]: 1, support[1]: 2})
        g = LaurentPoly(Q, {support[1]: 1, support[2]: -1})
        a, b = Q(3), Q.from_fraction(1, 2)
        combo = f.scale(a) + g.scale(b)
        if combo.is_zero or max_cumulus(combo) != 2:
            continue
        lhs = obstruction_matrix(combo)
        fo, go = obstruction_matrix(f), obstruction_matrix(g)
        rhs = tuple(
            tuple(a * fo[i][j] + b * go[i][j] for j in range(2)) for i in range(2)
        )
        assert lhs == rhs


def _cumulus_pool(c_max):
    from lpifc.search import enum_words

    return list(enum_words(c_max))


def test_single_max_cumulus_word_forces_nonzero_obstruction():
    # the decision rule: a unique maximal-cumulus support word certifies non-identity
    rng = random.Random(9)
    pool = _cumulus_pool(3)
    for w in pool:
        f = LaurentPoly(Q, {w: Q(rng.randint(1, 5)), Word.identity(): Q(1)})
        assert not scalar_mat_is_zero(obstruction_matrix(f))


# -- transforms ----------------------------------------------------------------------


def test_transform_swap():
    assert transform(parse_laurent("X*Y - Y*X", Q), "swapXY") == parse_laurent("Y*X - X*Y", Q)


def test_transform_left_mul():
    f = parse_laurent("X + X*Y", Q)
    assert transform(f, "leftMul", parse_word("X^-1")) == parse_laurent("1 + Y", Q)


def test_transform_invert_x():
    assert transform(parse_laurent("X - 1", Q), "invertX") == parse_laurent("X^-1 - 1", Q)


# -- variable reduction ----------------------------------------------------------------


def test_reduce_one_variable():
    f = LaurentPoly(Q, {Word.generator(0): 1, Word.identity(): -1})
    reduced = reduce_to_two_vars(f, nvars=1)
    assert reduced == parse_laurent("X*Y*X^-1 - 1", Q)


def test_reduce_two_variable_product():
    f = LaurentPoly(Q, {Word.generator(0) * Word.generator(1): 1})
    reduced = reduce_to_two_vars(f, nvars=2)
    assert reduced == parse_laurent("X*Y*X*Y*X^-2", Q)


def test_reduce_zero():
    assert reduce_to_two_vars(LaurentPoly.zero(Q)).is_zero


def test_reduce_preserves_nonzeroness_random():
    rng = random.Random(17)
    for _ in range(100):
        nvars = rng.randint(1, 3)
        terms = {}
        for _ in range(rng.randint(1, 4)):
            blocks = []
            gen = rng.randrange(nvars)
            for _ in range(rng.randint(1, 3)):
                exp = rng.choice([-2, -1, 1, 2])
                blocks.append((gen, exp))
                gen = (gen + rng.randint(1, max(nvars - 1, 1))) % nvars if nvars > 1 else gen
            w = Word.from_blocks(blocks)
            terms[w] = Q(rng.choice([-2, -1, 1, 2, 3]))
        f = LaurentPoly(Q, terms)
        assert reduce_to_two_vars(f, nvars=nvars).is_zero == f.is_zero


def test_parse_zero_denominator_over_finite_field():
    from lpifc.errors import ZeroModulus

    with pytest.raises(ZeroModulus):
        parse_laurent("1/2*X", F2)


def test_parse_rejects_malformed_inputs():
    bad = ["", "+X", "X ++ Y", "2*", "X^", "X^-", "*X", "X//2", "Z"]
    for text in bad:
        with pytest.raises(ParseError):
            parse_laurent(text, Q)


def test_parse_offsets_point_into_input():
    for text, offset in [("X + $", 4), ("X*Y - @", 6)]:
        with pytest.raises(ParseError) as exc:
            parse_laurent(text, Q)
        assert exc.value.offset == offset
