"""The faithful representation of the square-zero relative free algebra
K[alpha, beta : alpha^2 = beta^2 = 0] into 2x2 polynomial matrices, and
everything built on top of it: unit pairs, word/Laurent evaluation, the
leading-term table, the L-ideal membership test, the conjugation linear
system, and witness-polynomial extraction.

The representation sends alpha to e12 and beta to T*e21.  Its image is
exactly the set of matrices [[x+T*A, B], [T*C, x+T*D]] with x in K and
A, B, C, D in K[T]; :class:`FCMat` stores that decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    DecompositionFailure,
    InvalidLetter,
    InvalidParameter,
    NoSigmaTau,
    ParseError,
    StillInL,
    ZeroPolynomial,
)
from .exactalg import Field, FieldElem, Mat2Poly, ScalarMat, UniPoly, scalar_mat
from .laurent import LaurentPoly
from .linalg import nullspace, rank
from .parsing import TokenStream, read_coefficient
from .words import Letter, Word

# -- the representation ----------------------------------------------------


def phi_alpha(field: Field) -> Mat2Poly:
    return Mat2Poly.from_scalars(field, ((0, 1), (0, 0)))


def phi_beta(field: Field) -> Mat2Poly:
    z = UniPoly.zero(field)
    return Mat2Poly(field, ((z, z), (UniPoly.T(field), z)))


def phi_monomial(mon: Sequence[int], field: Field) -> Mat2Poly:
    """Image of an alternating-letter monomial; 0 = alpha, 1 = beta.

    Repeated letters are allowed and map to zero, matching the relations
    alpha^2 = beta^2 = 0 (e12 and T*e21 square to zero).
    """
    out = Mat2Poly.identity(field)
    a, b = phi_alpha(field), phi_beta(field)
    for letter in mon:
        out = out * (a if letter == 0 else b)
    return out


def parse_fc_expr(text: str, field: Field) -> dict[tuple[int, ...], FieldElem]:
    """Parse expressions in the square-zero generators, e.g. ``1 + a*b - b*a*b``.

    Letters are ``a`` and ``b``; coefficients are integer or ``a/b`` literals.
    """
    ts = TokenStream(text)
    terms: dict[tuple[int, ...], FieldElem] = {}
    first = True
    while True:
        tok = ts.peek()
        if tok.kind == "end":
            if first:
                raise ts.error("empty expression")
            break
        sign = 1
        if tok.kind in "+-":
            if first and tok.kind == "+":
                raise ts.error("expression cannot start with '+'")
            ts.next()
            sign = -1 if tok.kind == "-" else 1
        elif not first:
            raise ts.error("expected '+' or '-' between terms")
        first = False

        coeff = field(sign)
        letters: list[int] = []
        saw_factor = False
        while True:
            tok = ts.peek()
            if tok.kind == "int":
                coeff = coeff * read_coefficient(ts, field)
                saw_factor = True
            elif tok.kind == "name":
                if tok.text not in ("a", "b"):
                    raise ParseError(f"unknown generator {tok.text!r}; expected a or b", tok.offset)
                ts.next()
                letters.append(0 if tok.text == "a" else 1)
                saw_factor = True
            elif tok.kind == "*":
                if not saw_factor:
                    raise ts.error("term cannot start with '*'")
                ts.next()
                if ts.peek().kind not in ("int", "name"):
                    raise ts.error("expected a factor after '*'")
                continue
            else:
                break
        if not saw_factor:
            raise ts.error("expected a term")
        mon = tuple(letters)
        acc = terms.get(mon, field.zero) + coeff
        if acc.is_zero:
            terms.pop(mon, None)
        else:
            terms[mon] = acc
    return terms


def phi_eval(expr: str | Mapping[tuple[int, ...], object], field: Field) -> "FCMat":
    """Evaluate an expression in the square-zero generators through the
    representation and decompose the result."""
    if isinstance(expr, str):
        expr = parse_fc_expr(expr, field)
    total = Mat2Poly.zero(field)
    for mon, coeff in expr.items():
        total = total + phi_monomial(mon, field).scale(field(coeff))
    return FCMat.decompose(total)


@dataclass(frozen=True)
class FCMat:
    """An element of the represented algebra as [[x+T*A, B], [T*C, x+T*D]]."""

    field: Field
    x: FieldElem
    A: UniPoly
    B: UniPoly
    C: UniPoly
    D: UniPoly

    @classmethod
    def decompose(cls, m: Mat2Poly) -> "FCMat":
        field = m.field
        m11, m12, m21, m22 = m.entry(0, 0), m.entry(0, 1), m.entry(1, 0), m.entry(1, 1)
        if not m21.constant_term.is_zero:
            raise DecompositionFailure("lower-left entry has a nonzero constant term")
        x = m11.constant_term
        if m22.constant_term != x:
            raise DecompositionFailure("diagonal constant terms differ")
        return cls(
            field,
            x=x,
            A=UniPoly(field, m11.coeffs[1:]),
            B=m12,
            C=UniPoly(field, m21.coeffs[1:]),
            D=UniPoly(field, m22.coeffs[1:]),
        )

    def to_mat2(self) -> Mat2Poly:
        xpoly = UniPoly(self.field, (self.x,))
        return Mat2Poly(
            self.field,
            ((xpoly + self.A.shift(1), self.B), (self.C.shift(1), xpoly + self.D.shift(1))),
        )

    @property
    def is_zero(self) -> bool:
        return self.x.is_zero and all(p.is_zero for p in (self.A, self.B, self.C, self.D))

    def in_l(self) -> bool:
        """Membership in L: x = 0 and T*A + B + C + D = 0."""
        return self.x.is_zero and (self.A.shift(1) + self.B + self.C + self.D).is_zero

    def to_dict(self) -> dict:
        return {"x": str(self.x), "A": str(self.A), "B": str(self.B), "C": str(self.C), "D": str(self.D)}

    def __str__(self) -> str:
        return f"(x={self.x}, A={self.A}, B={self.B}, C={self.C}, D={self.D})"


def in_L(m: FCMat) -> bool:
    return m.in_l()


# -- unit pairs and evaluation ----------------------------------------------


@dataclass(frozen=True)
class UnitPair:
    """Images of a pair of units together with their exact inverses."""

    kind: str
    u: Mat2Poly
    v: Mat2Poly
    u_inv: Mat2Poly
    v_inv: Mat2Poly

    def __post_init__(self):
        for m in (self.u, self.v):
            det = m.det()
            if det.degree != 0:
                raise InvalidParameter("unit images must have constant nonzero determinant")
        assert self.u * self.u_inv == Mat2Poly.identity(self.u.field)
        assert self.v * self.v_inv == Mat2Poly.identity(self.v.field)


def _one_plus(field: Field, mon: tuple[int, ...], sign: int = 1) -> Mat2Poly:
    return Mat2Poly.identity(field) + phi_monomial(mon, field).scale(field(sign))


def unit_pair(kind: str, field: Field) -> UnitPair:
    """The shipped unit pairs.

    ``primary``: u = (1+aba)(1+b), v = (1+aba)(1+(1-a)b(1+a));
    ``alternate``: u = (1+b)(1+aba), v = (1+(1-a)b(1+a))(1+(1+a)b(1-a));
    ``swapped``: the primary pair with u and v exchanged.
    """
    one = Mat2Poly.identity(field)
    a = phi_alpha(field)
    b = phi_beta(field)
    inner = (one - a) * b * (one + a)  # (1-a) b (1+a)
    if kind in ("primary", "swapped"):
        u = _one_plus(field, (0, 1, 0)) * (one + b)
        v = _one_plus(field, (0, 1, 0)) * (one + inner)
        # Fixed displays of the primary pair, asserted at construction.
        T = UniPoly.T(field)
        t2 = UniPoly.monomial(field, 2)
        assert u == Mat2Poly(field, ((UniPoly.one(field) + t2, T), (T, UniPoly.one(field))))
        assert v == Mat2Poly(
            field,
            ((UniPoly.one(field) - T + t2, t2), (T, UniPoly.one(field) + T)),
        )
        if kind == "swapped":
            u, v = v, u
    elif kind == "alternate":
        u = (one + b) * _one_plus(field, (0, 1, 0))
        inner2 = (one + a) * b * (one - a)
        v = (one + inner) * (one + inner2)
    else:
        raise InvalidParameter(f"unknown unit pair kind {kind!r}")
    return UnitPair(kind=kind, u=u, v=v, u_inv=u.inv(), v_inv=v.inv())


def eval_word(w: Word, up: UnitPair) -> Mat2Poly:
    """The image of a word: the block product of unit powers and inverses."""
    field = up.u.field
    out = Mat2Poly.identity(field)
    for gen, exp in w.blocks:
        if gen > 1:
            raise InvalidParameter("evaluation needs a two-variable word; reduce first")
        base = (up.u if exp > 0 else up.u_inv) if gen == 0 else (up.v if exp > 0 else up.v_inv)
        out = out * base ** abs(exp)
    return out


def eval_laurent(f: LaurentPoly, up: UnitPair) -> Mat2Poly:
    """The falsifier: a nonzero value certifies f is not an identity of the
    unit group.  A zero value is inconclusive."""
    if f.nvars > 2:
        raise InvalidParameter(
            "evaluation needs a two-variable polynomial; apply reduce_to_two_vars first"
        )
    field = up.u.field
    out = Mat2Poly.zero(field)
    for w, c in f.terms.items():
        out = out + eval_word(w, up).scale(field(c))
    return out


_TABLE_ENTRIES = {
    # (beginning group, end group) -> integer entry grid
    (0, 0): ((1, 0), (0, 0)),  # e11
    (0, 1): ((0, 1), (0, 0)),  # e12
    (0, 2): ((1, 1), (0, 0)),  # e11+e12
    (1, 0): ((0, 0), (1, 0)),  # e21
    (1, 1): ((0, 0), (0, 1)),  # e22
    (1, 2): ((0, 0), (1, 1)),  # e21+e22
    (2, 0): ((-1, 0), (1, 0)),  # e21-e11
    (2, 1): ((0, -1), (0, 1)),  # e22-e12
    (2, 2): ((-1, -1), (1, 1)),  # e21+e22-e11-e12
}


def table_leading_term(b: Letter, e: Letter, field: Field) -> ScalarMat:
    """The sign-stripped leading coefficient of the primary-pair image of a
    word, keyed by its beginning and end letters.

    The full leading term of a word w of cumulus c is
    T^{2c} * sgn(w) * table_leading_term(B(w), E(w)).
    """
    if b == Letter.ONE or e == Letter.ONE:
        raise InvalidLetter("the identity marker has no table row")
    row = 0 if b in (Letter.X, Letter.Y) else (1 if b == Letter.XINV else 2)
    col = 0 if e == Letter.X else (2 if e == Letter.Y else 1)
    return scalar_mat(field, _TABLE_ENTRIES[(row, col)])


# -- faithfulness at desk scale ---------------------------------------------


def alternating_monomials(max_len: int) -> list[tuple[int, ...]]:
    """The alternating-word basis monomials of length 0..max_len."""
    out: list[tuple[int, ...]] = [()]
    for length in range(1, max_len + 1):
        for start in (0, 1):
            out.append(tuple((start + i) % 2 for i in range(length)))
    return out


def phi_images_independent(field: Field, max_len: int) -> bool:
    """Exact rank check that the images of the alternating basis up to the
    given length are linearly independent."""
    mons = alternating_monomials(max_len)
    mats = [phi_monomial(m, field) for m in mons]
    degs = [m.degree for m in mats if not m.is_zero]
    top = int(max(degs)) if degs else 0
    rows = []
    for m in mats:
        row = []
        for i in range(2):
            for j in range(2):
                for d in range(top + 1):
                    row.append(m.entry(i, j).coeff(d))
        rows.append(row)
    return rank(field, rows) == len(rows)


# -- the conjugation linear system ------------------------------------------
#
# The generic element s = [[x+T*A, B], [T*C, x+T*D]] is linear in the unknown
# coefficients of x, A, B, C, D, so requiring u s u^-1 to lie in L for each
# conjugating unit u is a linear system over K.  Polynomials are capped at a
# configurable degree; every T-coefficient of every membership condition
# becomes one equation row.

_LinForm = list  # dense row of FieldElem over the unknown vector
_LinPoly = list  # list of _LinForm, index = T-degree


def _lp_zero(field: Field, n_unknowns: int) -> _LinPoly:
    return []


def _lp_add(field: Field, p: _LinPoly, q: _LinPoly, n: int) -> _LinPoly:
    out = []
    for k in range(max(len(p), len(q))):
        a = p[k] if k < len(p) else [field.zero] * n
        b = q[k] if k < len(q) else [field.zero] * n
        out.append([x + y for x, y in zip(a, b)])
    return out


def _lp_scale_poly(field: Field, p: _LinPoly, poly: UniPoly, n: int) -> _LinPoly:
    if not p or poly.is_zero:
        return []
    out = [[field.zero] * n for _ in range(len(p) + len(poly.coeffs) - 1)]
    for i, row in enumerate(p):
        for j, c in enumerate(poly.coeffs):
            if c.is_zero:
                continue
            target = out[i + j]
            for k, val in enumerate(row):
                if not val.is_zero:
                    target[k] = target[k] + c * val
    return out


def _lp_shift(field: Field, p: _LinPoly, n: int) -> _LinPoly:
    if not p:
        return []
    return [[field.zero] * n] + [list(r) for r in p]


def _linmat_mul_const(field: Field, left: Mat2Poly | None, mat, right: Mat2Poly | None, n: int):
    """(left) * mat * (right) where mat has linear-form-polynomial entries."""
    m = mat
    if left is not None:
        le = left.e
        m = [
            [
                _lp_add(
                    field,
                    _lp_scale_poly(field, mat[0][j], le[i][0], n),
                    _lp_scale_poly(field, mat[1][j], le[i][1], n),
                    n,
                )
                for j in range(2)
            ]
            for i in range(2)
        ]
    if right is not None:
        re = right.e
        m = [
            [
                _lp_add(
                    field,
                    _lp_scale_poly(field, m[i][0], re[0][j], n),
                    _lp_scale_poly(field, m[i][1], re[1][j], n),
                    n,
                )
                for j in range(2)
            ]
            for i in range(2)
        ]
    return m


def _row_is_zero(row) -> bool:
    return all(c.is_zero for c in row)


@dataclass
class ThekeyStage:
    conjugator: str
    equations: int
    nullspace_dim: int


@dataclass
class ThekeyReport:
    """Outcome of the conjugation linear system.

    ``relations`` records whether the three elimination relations
    C = 0, A = D, B = -(1+T)*A hold on the solution space after the two
    elementary a-conjugations; ``zero_space`` reports whether the final
    space is trivial.
    """

    field: Field
    degree_bound: int
    stages: list[ThekeyStage]
    relations: list[tuple[str, bool]]
    final_dim: int
    residual_basis: list[dict]

    @property
    def zero_space(self) -> bool:
        return self.final_dim == 0

    def to_dict(self) -> dict:
        return {
            "field": repr(self.field),
            "degree_bound": self.degree_bound,
            "stages": [
                {"conjugator": s.conjugator, "equations": s.equations, "nullspace_dim": s.nullspace_dim}
                for s in self.stages
            ],
            "relations": [{"relation": r, "holds": h} for r, h in self.relations],
            "zero_space": self.zero_space,
            "final_dim": self.final_dim,
            "residual_basis": self.residual_basis,
        }


def default_conjugators(field: Field) -> list[tuple[str, Mat2Poly]]:
    """The conjugating units used by the displayed elimination."""
    return [
        ("1", Mat2Poly.identity(field)),
        ("1+a", _one_plus(field, (0,))),
        ("1-a", _one_plus(field, (0,), -1)),
        ("1+b", _one_plus(field, (1,))),
    ]


def extended_conjugators(field: Field) -> list[tuple[str, Mat2Poly]]:
    """Further unit conjugators, appended only while the space is nonzero."""
    a_plus = _one_plus(field, (0,))
    b_plus = _one_plus(field, (1,))
    return [
        ("1-b", _one_plus(field, (1,), -1)),
        ("1+aba", _one_plus(field, (0, 1, 0))),
        ("1-aba", _one_plus(field, (0, 1, 0), -1)),
        ("1+bab", _one_plus(field, (1, 0, 1))),
        ("1-bab", _one_plus(field, (1, 0, 1), -1)),
        ("(1+a)(1+b)", a_plus * b_plus),
        ("(1+b)(1+a)", b_plus * a_plus),
    ]


def thekey_solve(
    field: Field,
    degree_bound: int = 4,
    conjugators: list[tuple[str, Mat2Poly]] | None = None,
    extended: bool = True,
) -> ThekeyReport:
    """Solve the membership system: which s lie in L together with all their
    conjugates under the given unit list?

    Unknowns are x and the coefficients of A, B, C, D up to the degree bound.
    Over characteristic != 2 the four displayed memberships already force the
    zero space; over characteristic 2 the extended conjugator list is
    consumed until the space collapses or the list is exhausted.
    """
    d = degree_bound
    if d < 1:
        raise InvalidParameter("degree bound must be at least 1")
    n = 1 + 4 * (d + 1)  # x plus four polynomials

    def unknown_row(index: int) -> list[FieldElem]:
        row = [field.zero] * n
        row[index] = field.one
        return row

    ix = 0
    iA, iB, iC, iD = 1, 1 + (d + 1), 1 + 2 * (d + 1), 1 + 3 * (d + 1)

    # Generic s as a matrix of linear-form polynomials.
    def poly_of(base: int) -> _LinPoly:
        return [unknown_row(base + k) for k in range(d + 1)]

    x_poly: _LinPoly = [unknown_row(ix)]
    s_mat = [
        [_lp_add(field, x_poly, _lp_shift(field, poly_of(iA), n), n), poly_of(iB)],
        [_lp_shift(field, poly_of(iC), n), _lp_add(field, x_poly, _lp_shift(field, poly_of(iD), n), n)],
    ]

    def membership_rows(u: Mat2Poly) -> list[list[FieldElem]]:
        conj = _linmat_mul_const(field, u, s_mat, u.inv(), n)
        rows = []
        # Constant term of the lower-left entry must vanish identically.
        if conj[1][0] and not _row_is_zero(conj[1][0][0]):
            raise DecompositionFailure("conjugate left the represented subalgebra")
        x_row = conj[0][0][0] if conj[0][0] else [field.zero] * n
        x_row2 = conj[1][1][0] if conj[1][1] else [field.zero] * n
        if any(not (a - b).is_zero for a, b in zip(x_row, x_row2)):
            raise DecompositionFailure("diagonal constant terms differ identically")
        rows.append(list(x_row))
        a_part = conj[0][0][1:]
        b_part = conj[0][1]
        c_part = conj[1][0][1:]
        d_part = conj[1][1][1:]
        # T*A' + B' + C' + D' = 0, coefficient by coefficient.
        shifted_a = _lp_shift(field, a_part, n)
        total = _lp_add(field, _lp_add(field, shifted_a, b_part, n), _lp_add(field, c_part, d_part, n), n)
        rows.extend(list(r) for r in total)
        return [r for r in rows if not _row_is_zero(r)]

    conj_list = list(default_conjugators(field)) if conjugators is None else list(conjugators)
    equations: list[list[FieldElem]] = []
    stages: list[ThekeyStage] = []
    relations: list[tuple[str, bool]] = []

    def current_dim() -> int:
        if not equations:
            return n
        return len(nullspace(field, equations, n))

    def basis_to_fcmat(vec: list[FieldElem]) -> FCMat:
        return FCMat(
            field,
            x=vec[ix],
            A=UniPoly(field, vec[iA : iA + d + 1]),
            B=UniPoly(field, vec[iB : iB + d + 1]),
            C=UniPoly(field, vec[iC : iC + d + 1]),
            D=UniPoly(field, vec[iD : iD + d + 1]),
        )

    def check_relations() -> list[tuple[str, bool]]:
        basis = nullspace(field, equations, n) if equations else []
        one_plus_t = UniPoly(field, (1, 1))
        c_zero = all(basis_to_fcmat(v).C.is_zero for v in basis)
        a_eq_d = all(basis_to_fcmat(v).A == basis_to_fcmat(v).D for v in basis)
        b_rel = all(
            basis_to_fcmat(v).B == -(one_plus_t * basis_to_fcmat(v).A) for v in basis
        )
        return [("C = 0", c_zero), ("A = D", a_eq_d), ("B = -(1+T)*A", b_rel)]

    processed = 0
    for label, u in conj_list:
        new = membership_rows(u)
        equations.extend(new)
        stages.append(ThekeyStage(label, len(new), current_dim()))
        processed += 1
        if processed == 3:
            # After s itself and the two elementary a-conjugations: the
            # displayed elimination relations.
            relations = check_relations()
    if processed < 3:
        relations = check_relations()

    if extended and current_dim() > 0 and conjugators is None:
        for label, u in extended_conjugators(field):
            new = membership_rows(u)
            equations.extend(new)
            stages.append(ThekeyStage(label, len(new), current_dim()))
            if current_dim() == 0:
                break

    final_basis = nullspace(field, equations, n) if equations else []
    residual = [basis_to_fcmat(v).to_dict() for v in final_basis]
    return ThekeyReport(
        field=field,
        degree_bound=d,
        stages=stages,
        relations=relations,
        final_dim=len(final_basis),
        residual_basis=residual,
    )


# -- witness-polynomial extraction ------------------------------------------


@dataclass(frozen=True)
class ExtractedWitness:
    """The one-variable polynomial read off a nonvanishing evaluation,
    together with the route that produced it."""

    g: UniPoly
    sigma: str
    tau: str
    conjugator: str


def _conjugator_words(field: Field, bound: int) -> Iterable[tuple[str, Mat2Poly]]:
    """Products of the elementary units (1 +- a), (1 +- b) up to the bound,
    in deterministic order: length ascending, then factor-index lex."""
    factors = [
        ("(1+a)", _one_plus(field, (0,))),
        ("(1-a)", _one_plus(field, (0,), -1)),
        ("(1+b)", _one_plus(field, (1,))),
        ("(1-b)", _one_plus(field, (1,), -1)),
    ]
    frontier: list[tuple[str, Mat2Poly]] = [("1", Mat2Poly.identity(field))]
    for _ in range(bound):
        new_frontier = []
        for label, m in frontier:
            for flabel, fm in factors:
                new_frontier.append((label + flabel if label != "1" else flabel, m * fm))
        frontier = new_frontier
        yield from frontier


def extract_g(f: LaurentPoly, up: UnitPair, conj_bound: int = 3) -> ExtractedWitness:
    """Extract the witness polynomial g with sigma*r*tau = g(ab) from a
    nonvanishing evaluation r of f at the unit pair.

    If r lies in L, conjugates by products of elementary units are tried up
    to the bound; an exhausted search raises StillInL (inconclusive).  The
    (sigma, tau) tie-break order is (a,b), (a,ab), (ab,b), (ab,ab).
    """
    field = up.u.field
    r = eval_laurent(f, up)
    if r.is_zero:
        raise ZeroPolynomial(
            "precondition violated: f evaluates to zero at this unit pair (nothing to extract)"
        )
    fc = FCMat.decompose(r)
    conj_label = "1"
    if fc.in_l():
        for label, u in _conjugator_words(field, conj_bound):
            cand = u * r * u.inv()
            if not FCMat.decompose(cand).in_l():
                r = cand
                conj_label = label
                break
        else:
            raise StillInL(
                f"every conjugate within bound {conj_bound} stayed in L; inconclusive"
            )

    a = phi_alpha(field)
    ab = phi_monomial((0, 1), field)  # T*e11
    b = phi_beta(field)
    routes = [("a", a, "b", b), ("a", a, "ab", ab), ("ab", ab, "b", b), ("ab", ab, "ab", ab)]
    for sig_name, sig, tau_name, tau in routes:
        prod = sig * r * tau
        if prod.is_zero:
            continue
        # sigma*r*tau lies in the span of (ab)^k, k >= 1, so the product is
        # g(T)*e11 with g(0) = 0; anything else signals an arithmetic bug.
        if not (
            prod.entry(0, 1).is_zero
            and prod.entry(1, 0).is_zero
            and prod.entry(1, 1).is_zero
            and prod.entry(0, 0).constant_term.is_zero
        ):
            raise NoSigmaTau(f"product for ({sig_name},{tau_name}) is not of the form g(T)*e11")
        return ExtractedWitness(g=prod.entry(0, 0), sigma=sig_name, tau=tau_name, conjugator=conj_label)
    raise NoSigmaTau("no sigma, tau gave a nonzero product despite r not in L")


def g_at_alphabeta(g: UniPoly) -> Mat2Poly:
    """The image of g(ab): g(0) on the diagonal plus (g(T) - g(0)) at e11."""
    field = g.field
    out = Mat2Poly.identity(field).scale(g.constant_term)
    tail = UniPoly(field, (field.zero,) + tuple(g.coeffs[1:]))
    z = UniPoly.zero(field)
    return out + Mat2Poly(field, ((tail, z), (z, z)))


def p1_fails_on_fc(g: UniPoly) -> bool:
    """The square-zero relative free algebra never has the one-variable
    vanishing property: g(ab) has a transcendental image, exhibited here."""
    if g.is_zero:
        raise ZeroPolynomial("the property is stated for nonzero polynomials")
    witness = g_at_alphabeta(g)
    assert not witness.is_zero
    return True
