"""Finite groups by multiplication table and finite-dimensional algebras by
structure constants: group algebras, matrix algebras, square-zero quotient
algebras, unit arithmetic through the left-regular representation, identity
falsification by unit sampling, standard polynomials, and the square-zero /
zero-product vanishing checks.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    ArityMismatch,
    InvalidParameter,
    NonInvertibleOrder,
    NotAUnit,
    NoWitness,
    ParseError,
    TooLargeForExhaustive,
    ZeroPolynomial,
)
from .exactalg import Field, FieldElem, UniPoly
from .laurent import LaurentPoly
from .linalg import solve

# -- finite groups -----------------------------------------------------------


class FiniteGroup:
    """A finite group as an order-n multiplication table over element labels.

    The table is validated on construction: closure, identity, inverses, and
    associativity all hold or the constructor raises.
    """

    __slots__ = ("order", "table", "identity", "inverses", "labels", "name")

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                 name: str = "group", validate: bool = True):
        n = len(table)
        self.order = n
        self.table = tuple(tuple(row) for row in table)
        self.labels = tuple(labels) if labels is not None else tuple(f"g{i}" for i in range(n))
        self.name = name
        if len(self.labels) != n:
            raise InvalidParameter("label count must equal the group order")
        if validate:
            self._validate()
        self.identity = self._find_identity()
        self.inverses = self._find_inverses()

    def _validate(self):
        n = self.order
        for i, row in enumerate(self.table):
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise InvalidParameter(f"row {i} of the multiplication table is malformed")
        t = self.table
        for i in range(n):
            for j in range(n):
                tij = t[i][j]
                for k in range(n):
                    if t[tij][k] != t[i][t[j][k]]:
                        raise InvalidParameter("multiplication table is not associative")

    def _find_identity(self) -> int:
        for e in range(self.order):
            if all(self.table[e][i] == i and self.table[i][e] == i for i in range(self.order)):
                return e
        raise InvalidParameter("multiplication table has no identity")

    def _find_inverses(self) -> tuple[int, ...]:
        inv = []
        for i in range(self.order):
            j = next((j for j in range(self.order)
                      if self.table[i][j] == self.identity and self.table[j][i] == self.identity), None)
            if j is None:
                raise InvalidParameter(f"element {i} has no inverse")
            inv.append(j)
        return tuple(inv)

    def mult(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.inverses[i]

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != self.identity:
            cur = self.table[cur][i]
            k += 1
        return k

    def cyclic_subgroup(self, i: int) -> list[int]:
        out, cur = [self.identity], i
        while cur != self.identity:
            out.append(cur)
            cur = self.table[cur][i]
        return out

    @property
    def is_abelian(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.order) for j in range(self.order))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidParameter("cyclic group order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return FiniteGroup(table, labels, name=f"cyclic({n})")


def symmetric_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 4:
        raise InvalidParameter("symmetric groups are supported for n <= 4")
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(i) = p(q(i))
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    labels = ["".join(map(str, p)) for p in perms]
    return FiniteGroup(table, labels, name=f"sym({n})")


def dihedral_group(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidParameter("dihedral parameter must be positive")
    # elements r^i s^a, product: (i,a)(j,b) = (i + j*(-1)^a mod n, a+b mod 2)
    def idx(i, a):
        return a * n + i

    table = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for a in range(2):
            for j in range(n):
                for b in range(2):
                    k = (i + (j if a == 0 else -j)) % n
                    table[idx(i, a)][idx(j, b)] = idx(k, (a + b) % 2)
    labels = []
    for a in range(2):
        for i in range(n):
            base = "1" if i == 0 else ("r" if i == 1 else f"r^{i}")
            labels.append(base if a == 0 else ("s" if i == 0 else f"{base}*s"))
    return FiniteGroup(table, labels, name=f"dihedral({n})")


def quaternion_group() -> FiniteGroup:
    # order: 1, -1, i, -i, j, -j, k, -k
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {"1": (1, "1"), "i": (1, "i"), "j": (1, "j"), "k": (1, "k")}

    def mul(x: str, y: str) -> str:
        sx = -1 if x.startswith("-") else 1
        sy = -1 if y.startswith("-") else 1
        bx, by = x.lstrip("-"), y.lstrip("-")
        rules = {
            ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
            ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
            ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
            ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
        }
        s, b = rules[(bx, by)]
        s *= sx * sy
        return b if s == 1 else f"-{b}"

    index = {lab: i for i, lab in enumerate(labels)}
    table = [[index[mul(x, y)] for y in labels] for x in labels]
    return FiniteGroup(table, labels, name="quaternion8")


def product_group(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    n, m = g.order, h.order

    def idx(i, j):
        return i * m + j

    table = [[0] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(m):
            for k in range(n):
                for l in range(m):
                    table[idx(i, j)][idx(k, l)] = idx(g.table[i][k], h.table[j][l])
    labels = [f"({g.labels[i]},{h.labels[j]})" for i in range(n) for j in range(m)]
    return FiniteGroup(table, labels, name=f"{g.name}x{h.name}")


def build_group(spec: str) -> FiniteGroup:
    """Build a group from a spec string: ``cyclic:N``, ``sym:N``,
    ``dihedral:N``, ``quaternion8``, or products joined with ``x`` such as
    ``cyclic:2xcyclic:3``."""
    parts = spec.split("x")
    groups = []
    for part in parts:
        name, _, arg = part.partition(":")
        if name == "cyclic":
            groups.append(cyclic_group(_int_arg(arg, part)))
        elif name == "sym":
            groups.append(symmetric_group(_int_arg(arg, part)))
        elif name == "dihedral":
            groups.append(dihedral_group(_int_arg(arg, part)))
        elif name == "quaternion8":
            groups.append(quaternion_group())
        else:
            raise InvalidParameter(f"unknown group kind {name!r}")
    out = groups[0]
    for g in groups[1:]:
        out = product_group(out, g)
    return out


def _int_arg(arg: str, part: str) -> int:
    if not arg or not arg.isdigit():
        raise InvalidParameter(f"group spec {part!r} needs an integer parameter")
    return int(arg)


# -- finite-dimensional algebras ---------------------------------------------


class AlgebraElem:
    """An element of a FinAlgebra as a coefficient vector over the basis."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "FinAlgebra", coeffs: Sequence):
        if len(coeffs) != algebra.dim:
            raise InvalidParameter("coefficient vector length must equal the dimension")
        self.algebra = algebra
        self.coeffs = tuple(algebra.field(c) for c in coeffs)

    def _check(self, other: "AlgebraElem"):
        if other.algebra is not self.algebra:
            raise InvalidParameter("elements belong to different algebras")

    def __add__(self, other: "AlgebraElem") -> "AlgebraElem":
        self._check(other)
        return AlgebraElem(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "AlgebraElem") -> "AlgebraElem":
        self._check(other)
        return AlgebraElem(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "AlgebraElem":
        return AlgebraElem(self.algebra, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElem):
            self._check(other)
            return AlgebraElem(self.algebra, self.algebra.mul_vec(self.coeffs, other.coeffs))
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "AlgebraElem":
        c = self.algebra.field(c)
        return AlgebraElem(self.algebra, tuple(a * c for a in self.coeffs))

    def __pow__(self, n: int) -> "AlgebraElem":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def key(self) -> tuple:
        return tuple(c.v for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElem)
            and other.algebra is self.algebra
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.key()))

    def is_unit(self) -> bool:
        try:
            self.inverse()
            return True
        except NotAUnit:
            return False

    def inverse(self) -> "AlgebraElem":
        """Inverse through the left-regular representation."""
        alg = self.algebra
        lmat = alg.left_mult_matrix(self.coeffs)
        x = solve(alg.field, lmat, list(alg.unity))
        if x is None:
            raise NotAUnit(f"{self} is not a unit")
        cand = AlgebraElem(alg, x)
        if not (self * cand == alg.one() and cand * self == alg.one()):
            raise NotAUnit(f"{self} has no two-sided inverse")
        return cand

    def render(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            label = self.algebra.labels[i]
            if label == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(label)
            else:
                parts.append(f"{c}*{label}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"AlgebraElem({self.render()!r})"


class FinAlgebra:
    """A unital associative algebra of finite dimension given by structure
    constants: sc[i][j] is the coefficient vector of e_i * e_j."""

    __slots__ = ("field", "dim", "sc", "unity", "labels", "name", "group")

    def __init__(self, field: Field, sc, unity: Sequence, labels: Sequence[str] | None = None,
                 name: str = "algebra", group: FiniteGroup | None = None, validate: bool = True):
        d = len(sc)
        self.field = field
        self.dim = d
        self.sc = tuple(tuple(tuple(field(c) for c in vec) for vec in row) for row in sc)
        self.unity = tuple(field(c) for c in unity)
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(d))
        self.name = name
        self.group = group
        if len(self.unity) != d or len(self.labels) != d:
            raise InvalidParameter("unity/label length must equal the dimension")
        if any(len(row) != d or any(len(vec) != d for vec in row) for row in self.sc):
            raise InvalidParameter("structure constant tensor must be dim^3")
        if validate:
            self._validate()

    def _validate(self):
        one = self.unity
        for i in range(self.dim):
            basis = tuple(
                self.field.one if k == i else self.field.zero for k in range(self.dim)
            )
            if self.mul_vec(one, basis) != basis or self.mul_vec(basis, one) != basis:
                raise InvalidParameter("unity vector does not act as a two-sided identity")
        for i in range(self.dim):
            for j in range(self.dim):
                left = self.sc[i][j]
                for k in range(self.dim):
                    basis_k = tuple(
                        self.field.one if t == k else self.field.zero for t in range(self.dim)
                    )
                    lhs = self.mul_vec(left, basis_k)
                    rhs = self.mul_vec_basis_left(i, self.sc[j][k])
                    if lhs != rhs:
                        raise InvalidParameter("structure constants are not associative")

    def mul_vec(self, u: Sequence[FieldElem], v: Sequence[FieldElem]) -> tuple[FieldElem, ...]:
        out = [self.field.zero] * self.dim
        for i, ui in enumerate(u):
            if ui.is_zero:
                continue
            for j, vj in enumerate(v):
                if vj.is_zero:
                    continue
                c = ui * vj
                vec = self.sc[i][j]
                for k, s in enumerate(vec):
                    if not s.is_zero:
                        out[k] = out[k] + c * s
        return tuple(out)

    def mul_vec_basis_left(self, i: int, v: Sequence[FieldElem]) -> tuple[FieldElem, ...]:
        out = [self.field.zero] * self.dim
        for j, vj in enumerate(v):
            if vj.is_zero:
                continue
            for k, s in enumerate(self.sc[i][j]):
                if not s.is_zero:
                    out[k] = out[k] + vj * s
        return tuple(out)

    def left_mult_matrix(self, a: Sequence[FieldElem]) -> list[list[FieldElem]]:
        cols = []
        for j in range(self.dim):
            basis_j = tuple(self.field.one if t == j else self.field.zero for t in range(self.dim))
            cols.append(self.mul_vec(a, basis_j))
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def elem(self, coeffs: Sequence) -> AlgebraElem:
        return AlgebraElem(self, coeffs)

    def zero(self) -> AlgebraElem:
        return AlgebraElem(self, (0,) * self.dim)

    def one(self) -> AlgebraElem:
        return AlgebraElem(self, self.unity)

    def basis(self, i: int) -> AlgebraElem:
        return AlgebraElem(self, tuple(1 if k == i else 0 for k in range(self.dim)))

    def basis_elem_of_group(self, g: int) -> AlgebraElem:
        return self.basis(g)

    def random_element(self, rng) -> AlgebraElem:
        return AlgebraElem(self, tuple(self.field.random(rng) for _ in range(self.dim)))

    def __repr__(self) -> str:
        return f"FinAlgebra({self.name}, dim={self.dim}, over {self.field!r})"


def group_algebra(g: FiniteGroup, field: Field) -> FinAlgebra:
    d = g.order
    zero, one = field.zero, field.one
    sc = [
        [tuple(one if k == g.table[i][j] else zero for k in range(d)) for j in range(d)]
        for i in range(d)
    ]
    unity = tuple(one if k == g.identity else zero for k in range(d))
    # Associativity is inherited from the validated group table.
    return FinAlgebra(field, sc, unity, labels=g.labels, name=f"{repr(field)}[{g.name}]",
                      group=g, validate=False)


def matrix2_algebra(field: Field) -> FinAlgebra:
    labels = ("e11", "e12", "e21", "e22")
    pos = {0: (0, 0), 1: (0, 1), 2: (1, 0), 3: (1, 1)}
    zero, one = field.zero, field.one
    sc = []
    for i in range(4):
        row = []
        for j in range(4):
            (a, b), (c, d) = pos[i], pos[j]
            vec = [zero] * 4
            if b == c:
                for k, (x, y) in pos.items():
                    if (x, y) == (a, d):
                        vec[k] = one
            row.append(tuple(vec))
        sc.append(row)
    unity = (one, zero, zero, one)
    return FinAlgebra(field, sc, unity, labels=labels, name=f"M2({field!r})", validate=False)


def square_zero_algebra(field: Field, nvars: int = 2) -> FinAlgebra:
    """The commutative quotient on square-zero generators: K[x]/(x^2) for one
    variable, K[x,y]/(x^2,y^2) for two.  Basis = square-free monomials."""
    if nvars not in (1, 2):
        raise InvalidParameter("square-zero algebras are shipped for 1 or 2 variables")
    masks = list(range(1 << nvars))
    names = {0: "1", 1: "x", 2: "y", 3: "x*y"}
    zero, one = field.zero, field.one
    sc = []
    for m1 in masks:
        row = []
        for m2 in masks:
            vec = [zero] * len(masks)
            if m1 & m2 == 0:
                vec[m1 | m2] = one
            row.append(tuple(vec))
        sc.append(row)
    unity = tuple(one if m == 0 else zero for m in masks)
    labels = tuple(names[m] for m in masks)
    return FinAlgebra(field, sc, unity, labels=labels,
                      name=f"{field!r}[{'x' if nvars == 1 else 'x,y'}]/sq", validate=False)


# -- import format ------------------------------------------------------------


def load_algebra(path: str, field: Field) -> FinAlgebra:
    """Read the structure-constant text format::

        algebra
        dim 4
        label 0 one        # optional
        unity 1 0 0 0
        sc i j k coeff     # e_i * e_j has coefficient coeff at e_k

    Unlisted structure entries are zero; coefficients are ints or a/b.
    """
    dim = None
    labels: dict[int, str] = {}
    unity = None
    triples: list[tuple[int, int, int, FieldElem]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "algebra":
                continue
            if parts[0] == "dim":
                dim = int(parts[1])
            elif parts[0] == "label":
                labels[int(parts[1])] = parts[2]
            elif parts[0] == "unity":
                unity = [_parse_scalar(tok, field, lineno) for tok in parts[1:]]
            elif parts[0] == "sc":
                i, j, k = int(parts[1]), int(parts[2]), int(parts[3])
                triples.append((i, j, k, _parse_scalar(parts[4], field, lineno)))
            else:
                raise ParseError(f"unknown directive {parts[0]!r} in algebra file", lineno)
    if dim is None or unity is None:
        raise ParseError("algebra file needs 'dim' and 'unity' lines", 0)
    sc = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, k, c in triples:
        sc[i][j][k] = sc[i][j][k] + c
    label_list = [labels.get(i, f"e{i}") for i in range(dim)]
    return FinAlgebra(field, sc, unity, labels=label_list, name="file-algebra", validate=True)


def load_group(path: str) -> FiniteGroup:
    """Read a permutation-generator group file::

        perm-group
        degree 3
        gen 1 2 0
        gen 1 0 2

    Generators are image lists; the group is their closure, with elements
    ordered lexicographically for a deterministic table.
    """
    degree = None
    gens: list[tuple[int, ...]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "perm-group":
                continue
            if parts[0] == "degree":
                degree = int(parts[1])
            elif parts[0] == "gen":
                gens.append(tuple(int(t) for t in parts[1:]))
            else:
                raise ParseError(f"unknown directive {parts[0]!r} in group file", lineno)
    if degree is None or not gens:
        raise ParseError("group file needs 'degree' and at least one 'gen' line", 0)
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise InvalidParameter(f"generator {g} is not a permutation of degree {degree}")
    identity = tuple(range(degree))
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in elements:
                    elements.add(q)
                    nxt.append(q)
        frontier = nxt
    ordered = sorted(elements)
    index = {p: i for i, p in enumerate(ordered)}
    table = [[index[tuple(p[q[i]] for i in range(degree))] for q in ordered] for p in ordered]
    labels = ["".join(map(str, p)) for p in ordered]
    return FiniteGroup(table, labels, name="file-group")


def _parse_scalar(tok: str, field: Field, lineno: int) -> FieldElem:
    try:
        if "/" in tok:
            num, den = tok.split("/")
            return field.from_fraction(int(num), int(den))
        return field(int(tok))
    except ValueError as exc:
        raise ParseError(f"bad scalar {tok!r}: {exc}", lineno) from exc


# -- group algebra specifics ---------------------------------------------------


def hat(algebra: FinAlgebra, g: int, normalized: bool = False) -> AlgebraElem:
    """The sum over the cyclic subgroup generated by g; the normalized variant
    divides by the subgroup order and squares to itself."""
    if algebra.group is None:
        raise InvalidParameter("hat requires a group algebra")
    subgroup = algebra.group.cyclic_subgroup(g)
    vec = [algebra.field.zero] * algebra.dim
    for h in subgroup:
        vec[h] = vec[h] + algebra.field.one
    elem = AlgebraElem(algebra, vec)
    if not normalized:
        return elem
    m = len(subgroup)
    p = algebra.field.characteristic
    if p and m % p == 0:
        raise NonInvertibleOrder(f"order {m} is not invertible in characteristic {p}")
    return elem.scale(algebra.field.from_fraction(1, m))


def is_unit(a: AlgebraElem) -> bool:
    return a.is_unit()


def inverse(a: AlgebraElem) -> AlgebraElem:
    return a.inverse()


def poly_at(g: UniPoly, a: AlgebraElem) -> AlgebraElem:
    """Evaluate a one-variable polynomial at an algebra element (the constant
    term multiplies the unity)."""
    out = a.algebra.one().scale(g.constant_term)
    power = a.algebra.one()
    for k in range(1, len(g.coeffs)):
        power = power * a
        c = g.coeffs[k]
        if not c.is_zero:
            out = out + power.scale(c)
    return out


# -- identity falsification on unit groups ------------------------------------


@dataclass
class FalsifyResult:
    found: bool
    trials: int
    trial: int | None = None
    units: list[str] = dc_field(default_factory=list)
    value: str | None = None

    def to_dict(self) -> dict:
        return {
            "found": self.found,
            "trials": self.trials,
            "trial": self.trial,
            "units": self.units,
            "value": self.value,
        }


def _sample_unit(algebra: FinAlgebra, rng: random.Random, strategy: int) -> AlgebraElem:
    if strategy == 0 and algebra.group is not None:
        return algebra.basis(rng.randrange(algebra.dim))
    if strategy == 1:
        # 1 + nilpotent, when a sampled element happens to be nilpotent
        for _ in range(4):
            a = algebra.random_element(rng)
            power = a
            for _ in range(algebra.dim + 1):
                if power.is_zero:
                    return algebra.one() + a
                power = power * a
    for _ in range(12):
        a = algebra.random_element(rng)
        if a.is_unit():
            return a
    return algebra.one()


def eval_laurent_in_algebra(f: LaurentPoly, units: Sequence[AlgebraElem]) -> AlgebraElem:
    """Evaluate a Laurent polynomial at a tuple of units of an algebra."""
    algebra = units[0].algebra
    inverses = {}
    out = algebra.zero()
    for w, c in f.terms.items():
        term = algebra.one()
        for gen, exp in w.blocks:
            if gen >= len(units):
                raise InvalidParameter("not enough units supplied for the variable count")
            u = units[gen]
            if exp > 0:
                base = u
            else:
                if gen not in inverses:
                    inverses[gen] = u.inverse()
                base = inverses[gen]
            for _ in range(abs(exp)):
                term = term * base
        out = out + term.scale(c)
    return out


def falsify_lpi(f: LaurentPoly, algebra: FinAlgebra, trials: int = 200, seed: int = 0) -> FalsifyResult:
    """Sample unit tuples and evaluate f; the first nonzero evaluation is a
    counterexample witness.  Sampling mixes uniform group elements,
    1 + nilpotent constructions, and rejection-sampled invertibles."""
    if f.is_zero:
        return FalsifyResult(found=False, trials=trials)
    rng = random.Random(seed)
    k = max(f.nvars, 1)
    for t in range(trials):
        units = tuple(_sample_unit(algebra, rng, (t + i) % 3) for i in range(k))
        value = eval_laurent_in_algebra(f, units)
        if not value.is_zero:
            return FalsifyResult(
                found=True,
                trials=trials,
                trial=t,
                units=[u.render() for u in units],
                value=value.render(),
            )
    return FalsifyResult(found=False, trials=trials)


# -- standard polynomials ------------------------------------------------------


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def standard_poly(k: int, elements: Sequence[AlgebraElem]) -> AlgebraElem:
    """S_k: the signed sum of all k! permutation products."""
    if len(elements) != k:
        raise ArityMismatch(f"S_{k} needs exactly {k} elements, got {len(elements)}")
    algebra = elements[0].algebra
    out = algebra.zero()
    for perm in itertools.permutations(range(k)):
        term = algebra.one()
        for i in perm:
            term = term * elements[i]
        out = out + term.scale(_permutation_sign(perm))
    return out


# -- exhaustive element tables -------------------------------------------------

ENUM_LIMIT = 2**20
TABLE_LIMIT = 2048


class ElementTable:
    """All elements of a small algebra over a finite field, with integer
    index tables for multiplication, addition, and negation (numpy int32)."""

    def __init__(self, algebra: FinAlgebra, enum_limit: int = ENUM_LIMIT,
                 table_limit: int = TABLE_LIMIT):
        field = algebra.field
        if not field.is_finite:
            raise TooLargeForExhaustive("exhaustive enumeration needs a finite field")
        count = field.order ** algebra.dim
        if count > enum_limit:
            raise TooLargeForExhaustive(
                f"{count} elements exceed the exhaustive bound {enum_limit}"
            )
        self.algebra = algebra
        raw = list(range(field.order))
        self.vectors = [tuple(v) for v in itertools.product(raw, repeat=algebra.dim)]
        self.index = {v: i for i, v in enumerate(self.vectors)}
        self.n = count
        self.zero_idx = self.index[(0,) * algebra.dim]
        self.one_idx = self.index[tuple(c.v for c in algebra.unity)]
        if count > table_limit:
            raise TooLargeForExhaustive(
                f"{count} elements exceed the index-table bound {table_limit}"
            )
        p = field.order
        n, d = self.n, algebra.dim
        self.add = np.zeros((n, n), dtype=np.int32)
        self.mul = np.zeros((n, n), dtype=np.int32)
        self.neg = np.zeros(n, dtype=np.int32)
        elems = [algebra.elem(v) for v in self.vectors]
        for i, u in enumerate(elems):
            self.neg[i] = self.index[tuple(((-x) % p) for x in self.vectors[i])]
            for j, v in enumerate(elems):
                self.add[i, j] = self.index[tuple((a + b) % p for a, b in zip(self.vectors[i], self.vectors[j]))]
                self.mul[i, j] = self.index[(u * v).key()]

    def elem(self, i: int) -> AlgebraElem:
        return self.algebra.elem(self.vectors[i])

    def poly_values(self, g: UniPoly) -> np.ndarray:
        """Index of g(element) for every element, computed exactly once each."""
        out = np.zeros(self.n, dtype=np.int32)
        for i in range(self.n):
            out[i] = self.index[poly_at(g, self.elem(i)).key()]
        return out

    def square_zero_indices(self) -> np.ndarray:
        diag = self.mul[np.arange(self.n), np.arange(self.n)]
        return np.nonzero(diag == self.zero_idx)[0].astype(np.int32)


@dataclass
class CheckResult:
    holds: bool
    checked: int
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {"holds": self.holds, "checked": self.checked, "witness": self.witness}


def standard_poly_exhaustive(algebra: FinAlgebra, k: int = 4,
                             max_tuples: int = 2**24) -> CheckResult:
    """Check S_k = 0 over every k-tuple of algebra elements."""
    table = ElementTable(algebra)
    n = table.n
    if n**k > max_tuples:
        raise TooLargeForExhaustive(f"{n}^{k} tuples exceed the bound {max_tuples}")
    grids = np.indices((n,) * k).reshape(k, -1).astype(np.int32)
    return _standard_poly_on_tuples(table, k, grids)


def standard_poly_sampled(algebra: FinAlgebra, k: int, samples: int, seed: int = 0) -> CheckResult:
    """Check S_k = 0 over seeded random k-tuples."""
    table = ElementTable(algebra)
    rng = np.random.default_rng(seed)
    grids = rng.integers(0, table.n, size=(k, samples), dtype=np.int32)
    return _standard_poly_on_tuples(table, k, grids)


def _standard_poly_on_tuples(table: ElementTable, k: int, grids: np.ndarray) -> CheckResult:
    acc = np.full(grids.shape[1], table.zero_idx, dtype=np.int32)
    for perm in itertools.permutations(range(k)):
        prod = grids[perm[0]]
        for t in perm[1:]:
            prod = table.mul[prod, grids[t]]
        if _permutation_sign(perm) < 0:
            prod = table.neg[prod]
        acc = table.add[acc, prod]
    bad = np.nonzero(acc != table.zero_idx)[0]
    if bad.size == 0:
        return CheckResult(holds=True, checked=grids.shape[1])
    first = int(bad[0])
    witness = {
        "elements": [table.elem(int(grids[t][first])).render() for t in range(k)],
        "value": table.elem(int(acc[first])).render(),
    }
    return CheckResult(holds=False, checked=grids.shape[1], witness=witness)


# -- square-zero and zero-product vanishing checks -----------------------------


def p1_check(algebra: FinAlgebra, g: UniPoly, mode: str = "exhaustive",
             samples: int = 2000, seed: int = 0) -> CheckResult:
    """Does g(ab) = 0 for all a, b with a^2 = b^2 = 0?

    Exhaustive mode scans every square-zero pair; sampled mode draws random
    elements and keeps the square-zero ones.
    """
    if g.is_zero:
        raise ZeroPolynomial("the vanishing property is stated for nonzero polynomials")
    if g.field != algebra.field:
        raise InvalidParameter("polynomial and algebra must share the field")
    if mode == "exhaustive":
        try:
            table = ElementTable(algebra)
        except TooLargeForExhaustive:
            return _p1_exhaustive_direct(algebra, g)
        sq0 = table.square_zero_indices()
        gvals = table.poly_values(g)
        ab = table.mul[np.ix_(sq0, sq0)]
        vals = gvals[ab]
        bad = np.argwhere(vals != table.zero_idx)
        checked = int(sq0.size) ** 2
        if bad.size == 0:
            return CheckResult(holds=True, checked=checked)
        i, j = int(bad[0][0]), int(bad[0][1])
        witness = {
            "a": table.elem(int(sq0[i])).render(),
            "b": table.elem(int(sq0[j])).render(),
            "value": table.elem(int(vals[i, j])).render(),
        }
        return CheckResult(holds=False, checked=checked, witness=witness)
    if mode != "sampled":
        raise InvalidParameter(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    square_zero: list[AlgebraElem] = []
    for _ in range(samples):
        a = algebra.random_element(rng)
        if (a * a).is_zero:
            square_zero.append(a)
    checked = 0
    for a in square_zero:
        for b in square_zero:
            checked += 1
            val = poly_at(g, a * b)
            if not val.is_zero:
                return CheckResult(
                    holds=False,
                    checked=checked,
                    witness={"a": a.render(), "b": b.render(), "value": val.render()},
                )
    return CheckResult(holds=True, checked=checked)


def _p1_exhaustive_direct(algebra: FinAlgebra, g: UniPoly) -> CheckResult:
    """Exhaustive scan without index tables: enumerate all elements, filter
    the square-zero ones, test every pair with exact arithmetic."""
    field = algebra.field
    if not field.is_finite:
        raise TooLargeForExhaustive("exhaustive enumeration needs a finite field")
    count = field.order ** algebra.dim
    if count > ENUM_LIMIT:
        raise TooLargeForExhaustive(f"{count} elements exceed the exhaustive bound {ENUM_LIMIT}")
    square_zero = []
    for vec in itertools.product(range(field.order), repeat=algebra.dim):
        a = algebra.elem(vec)
        if (a * a).is_zero:
            square_zero.append(a)
    if len(square_zero) ** 2 > 2**22:
        raise TooLargeForExhaustive(
            f"{len(square_zero)}^2 square-zero pairs exceed the pair bound 2^22"
        )
    checked = 0
    for a in square_zero:
        for b in square_zero:
            checked += 1
            val = poly_at(g, a * b)
            if not val.is_zero:
                return CheckResult(
                    holds=False,
                    checked=checked,
                    witness={"a": a.render(), "b": b.render(), "value": val.render()},
                )
    return CheckResult(holds=True, checked=checked)


def bac_check(algebra: FinAlgebra, g: UniPoly, mode: str = "exhaustive",
              samples: int = 2000, seed: int = 0) -> CheckResult:
    """With h = T*g(T): does h(bacr) = 0 for all a^2 = 0, bc = 0, and all r?

    Precondition: the algebra passes the square-zero vanishing check for g.
    """
    if g.is_zero:
        raise ZeroPolynomial("the vanishing property is stated for nonzero polynomials")
    p1 = p1_check(algebra, g, mode=mode, samples=samples, seed=seed)
    if not p1.holds:
        raise InvalidParameter(
            "precondition violated: the algebra fails the square-zero vanishing "
            f"property for g (witness {p1.witness})"
        )
    h = UniPoly.T(algebra.field) * g
    if mode == "exhaustive":
        table = ElementTable(algebra)
        sq0 = table.square_zero_indices()
        hvals = table.poly_values(h)
        n = table.n
        all_idx = np.arange(n, dtype=np.int32)
        checked = 0
        for b in range(n):
            zero_c = np.nonzero(table.mul[b] == table.zero_idx)[0].astype(np.int32)
            if zero_c.size == 0:
                continue
            ba = table.mul[b, sq0]  # over a in sq0
            for c in zero_c:
                bac = table.mul[ba, c]
                bacr = table.mul[bac[:, None], all_idx[None, :]]
                vals = hvals[bacr]
                checked += int(vals.size)
                bad = np.argwhere(vals != table.zero_idx)
                if bad.size:
                    i, j = int(bad[0][0]), int(bad[0][1])
                    return CheckResult(
                        holds=False,
                        checked=checked,
                        witness={
                            "a": table.elem(int(sq0[i])).render(),
                            "b": table.elem(b).render(),
                            "c": table.elem(int(c)).render(),
                            "r": table.elem(j).render(),
                            "value": table.elem(int(vals[i, j])).render(),
                        },
                    )
        return CheckResult(holds=True, checked=checked)
    if mode != "sampled":
        raise InvalidParameter(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        a = algebra.random_element(rng)
        if not (a * a).is_zero:
            continue
        b = algebra.random_element(rng)
        c = algebra.random_element(rng)
        if not (b * c).is_zero:
            continue
        r = algebra.random_element(rng)
        checked += 1
        val = poly_at(h, b * a * c * r)
        if not val.is_zero:
            return CheckResult(
                holds=False,
                checked=checked,
                witness={"a": a.render(), "b": b.render(), "c": c.render(),
                         "r": r.render(), "value": val.render()},
            )
    return CheckResult(holds=True, checked=checked)


# -- the matrix-algebra witness -------------------------------------------------


@dataclass
class FinitecondiWitness:
    q: int
    r: FieldElem
    a: AlgebraElem
    b: AlgebraElem
    g_of_r: FieldElem
    g_of_ab: AlgebraElem

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "r": str(self.r),
            "a": self.a.render(),
            "b": self.b.render(),
            "g_of_r": str(self.g_of_r),
            "g_of_ab": self.g_of_ab.render(),
        }


def finitecondi_witness(q: int, g: UniPoly) -> FinitecondiWitness:
    """A 2x2 matrix witness that g does not vanish on all square-zero pairs
    of M2(F_q): r with g(r) != 0, a = r*e12, b = e21.

    Requires 0 <= deg g < q (a nonzero polynomial with fewer roots than field
    elements); the scan cannot fail under that precondition.
    """
    field = Field(q)
    if g.is_zero:
        raise ZeroPolynomial("the witness is stated for nonzero polynomials")
    if g.field != field:
        raise InvalidParameter(f"polynomial must live over F_{q}")
    if g.degree >= q:
        raise InvalidParameter(f"precondition deg g < q violated: deg g = {g.degree}, q = {q}")
    algebra = matrix2_algebra(field)
    for r in field.elements():
        if not g(r).is_zero:
            a = algebra.elem((0, 1, 0, 0)).scale(r)  # r*e12
            b = algebra.elem((0, 0, 1, 0))  # e21
            return FinitecondiWitness(
                q=q, r=r, a=a, b=b, g_of_r=g(r), g_of_ab=poly_at(g, a * b)
            )
    raise NoWitness("every field element is a root despite deg g < q; arithmetic bug")


# -- structural predicates on group algebras ------------------------------------


@dataclass
class StructuralReport:
    algebra: str
    idempotent_mode: str
    idempotents_checked: int
    all_idempotents_central: bool
    noncentral_idempotent: str | None
    normalizer_pairs_checked: int
    normalizer_criterion_holds: bool
    normalizer_counterexample: dict | None

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "idempotent_mode": self.idempotent_mode,
            "idempotents_checked": self.idempotents_checked,
            "all_idempotents_central": self.all_idempotents_central,
            "noncentral_idempotent": self.noncentral_idempotent,
            "normalizer_pairs_checked": self.normalizer_pairs_checked,
            "normalizer_criterion_holds": self.normalizer_criterion_holds,
            "normalizer_counterexample": self.normalizer_counterexample,
        }


def _is_central(algebra: FinAlgebra, e: AlgebraElem) -> bool:
    return all(e * algebra.basis(i) == algebra.basis(i) * e for i in range(algebra.dim))


def _averaging_idempotents(algebra: FinAlgebra) -> list[AlgebraElem]:
    group = algebra.group
    field = algebra.field
    out = [algebra.zero(), algebra.one()]
    p = field.characteristic
    for g in range(group.order):
        m = group.element_order(g)
        if p and m % p == 0:
            continue
        out.append(hat(algebra, g, normalized=True))
    if not (p and group.order % p == 0):
        total = algebra.elem([1] * algebra.dim).scale(field.from_fraction(1, group.order))
        out.append(total)
    out.extend([algebra.one() - e for e in list(out)])
    unique: dict[tuple, AlgebraElem] = {}
    for e in out:
        if (e * e == e) and e.key() not in unique:
            unique[e.key()] = e
    return list(unique.values())


def structural_predicates(algebra: FinAlgebra, max_elements: int = 2**16) -> StructuralReport:
    """Centrality of idempotents and the normalizer criterion
    (g-1)h*hat(g) = 0  <=>  h normalizes the cyclic subgroup of g,
    checked over every pair (g, h)."""
    group = algebra.group
    if group is None:
        raise InvalidParameter("structural predicates require a group algebra")
    field = algebra.field

    idempotents: list[AlgebraElem]
    if field.is_finite and field.order ** algebra.dim <= max_elements:
        mode = "exhaustive"
        idempotents = []
        for vec in itertools.product(range(field.order), repeat=algebra.dim):
            e = algebra.elem(vec)
            if e * e == e:
                idempotents.append(e)
    else:
        mode = "averaging"
        idempotents = _averaging_idempotents(algebra)

    noncentral = next((e for e in idempotents if not _is_central(algebra, e)), None)

    pairs_checked = 0
    counterexample = None
    for g in range(group.order):
        hat_g = hat(algebra, g)
        subgroup = set(group.cyclic_subgroup(g))
        g_minus_1 = algebra.basis(g) - algebra.one()
        for h in range(group.order):
            pairs_checked += 1
            lhs_zero = (g_minus_1 * algebra.basis(h) * hat_g).is_zero
            hinv = group.inverse(h)
            conj = {group.mult(group.mult(h, x), hinv) for x in subgroup}
            normalizes = conj == subgroup
            if lhs_zero != normalizes:
                counterexample = {
                    "g": group.labels[g],
                    "h": group.labels[h],
                    "criterion_zero": lhs_zero,
                    "normalizes": normalizes,
                }
                break
        if counterexample:
            break

    return StructuralReport(
        algebra=algebra.name,
        idempotent_mode=mode,
        idempotents_checked=len(idempotents),
        all_idempotents_central=noncentral is None,
        noncentral_idempotent=noncentral.render() if noncentral is not None else None,
        normalizer_pairs_checked=pairs_checked,
        normalizer_criterion_holds=counterexample is None,
        normalizer_counterexample=counterexample,
    )
