"""Command-line front end.

Exit codes: 0 = success / verified / no counterexample found (inconclusive
results included); 1 = a property was violated or a counterexample/witness
was found (and printed); 2 = usage or parse error.

Verdicts for identity checks are strictly three-valued: "NOT an LPI
(certificate attached)", "no obstruction found (inconclusive)", or an input
error; there is no positive verdict.

JSON output (--json) is canonical (sorted keys); identical invocations with
the same seed are byte-identical.  Wall-clock timings are emitted only under
--timings.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import expand as expand_mod
from . import fcrep, grpalg, search
from .errors import (
    InvalidParameter,
    NoSigmaTau,
    ParseError,
    StillInL,
    TooLargeForExhaustive,
    ZeroModulus,
    ZeroPolynomial,
)
from .exactalg import Field, UniPoly, render_scalar_mat, scalar_mat_is_zero
from .laurent import max_cumulus, obstruction_matrix, parse_laurent
from .words import parse_word, word_invariants

NOT_LPI = "NOT an LPI of U(F_C) (certificate attached)"
INCONCLUSIVE = "no obstruction found (inconclusive)"


def _field_from(args) -> Field:
    return Field(args.field)


def _emit(args, record: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _report_record(args, report: search.CampaignReport) -> dict:
    return report.to_dict(include_timing=getattr(args, "timings", False))


# -- subcommand handlers -----------------------------------------------------


def cmd_word(args) -> int:
    w = parse_word(args.expr)
    invs = word_invariants(w)
    record = {"word": w.render(), **invs.to_dict()}
    _emit(args, record, [f"word: {w.render()}"] + [f"  {k} = {v}" for k, v in invs.to_dict().items()])
    return 0


def cmd_obstruct(args) -> int:
    field = _field_from(args)
    f = parse_laurent(args.expr, field)
    if f.is_zero:
        raise InvalidParameter("the zero polynomial has no obstruction matrix")
    mat = obstruction_matrix(f)
    nonzero = not scalar_mat_is_zero(mat)
    verdict = NOT_LPI if nonzero else INCONCLUSIVE
    record = {
        "input": f.render(),
        "field": repr(field),
        "cumulus": max_cumulus(f),
        "matrix": render_scalar_mat(mat),
        "nonzero": nonzero,
        "verdict": verdict,
    }
    _emit(
        args,
        record,
        [
            f"input: {f.render()} over {field!r}",
            f"max cumulus: {record['cumulus']}",
            f"obstruction matrix: {record['matrix']}",
            f"verdict: {verdict}",
        ],
    )
    return 1 if nonzero else 0


def cmd_eval(args) -> int:
    field = _field_from(args)
    f = parse_laurent(args.expr, field)
    up = fcrep.unit_pair(args.units, field)
    img = fcrep.eval_laurent(f, up)
    nonzero = not img.is_zero
    verdict = NOT_LPI if nonzero else INCONCLUSIVE
    record = {
        "input": f.render(),
        "field": repr(field),
        "units": args.units,
        "matrix": img.render(),
        "degree": None if img.is_zero else int(img.degree),
        "nonzero": nonzero,
        "verdict": verdict,
    }
    _emit(
        args,
        record,
        [
            f"input: {f.render()} over {field!r} (units: {args.units})",
            f"evaluation: {img}",
            f"verdict: {verdict}",
        ],
    )
    return 1 if nonzero else 0


def cmd_in_l(args) -> int:
    field = _field_from(args)
    m = fcrep.phi_eval(args.expr, field)
    member = m.in_l()
    record = {
        "input": args.expr,
        "field": repr(field),
        "decomposition": m.to_dict(),
        "in_l": member,
    }
    _emit(
        args,
        record,
        [f"decomposition: {m}", f"in L: {member}"],
    )
    return 0


def cmd_extract_g(args) -> int:
    field = _field_from(args)
    f = parse_laurent(args.expr, field)
    up = fcrep.unit_pair(args.units, field)
    try:
        witness = fcrep.extract_g(f, up, conj_bound=args.conj_bound)
    except StillInL as exc:
        record = {
            "input": f.render(),
            "field": repr(field),
            "units": args.units,
            "status": "inconclusive",
            "detail": str(exc),
        }
        _emit(args, record, [f"inconclusive: {exc}"])
        return 0
    record = {
        "input": f.render(),
        "field": repr(field),
        "units": args.units,
        "conj_bound": args.conj_bound,
        "g": str(witness.g),
        "sigma": witness.sigma,
        "tau": witness.tau,
        "conjugator": witness.conjugator,
        "verdict": NOT_LPI,
    }
    _emit(
        args,
        record,
        [
            f"g(T) = {witness.g}",
            f"route: sigma={witness.sigma}, tau={witness.tau}, conjugator={witness.conjugator}",
            f"verdict: {NOT_LPI}",
        ],
    )
    return 1


def cmd_thekey(args) -> int:
    field = _field_from(args)
    report = fcrep.thekey_solve(field, degree_bound=args.degree_bound)
    record = report.to_dict()
    lines = [f"conjugation system over {field!r}, degree bound {args.degree_bound}"]
    for stage in report.stages:
        lines.append(f"  after {stage.conjugator}: nullspace dim {stage.nullspace_dim}")
    for rel, holds in report.relations:
        lines.append(f"  relation {rel}: {'holds' if holds else 'fails'}")
    lines.append(f"solution space: {'zero' if report.zero_space else f'dim {report.final_dim}'}")
    _emit(args, record, lines)
    return 0 if report.zero_space else 1


def cmd_expand(args) -> int:
    field = _field_from(args)
    f = parse_laurent(args.expr, field)
    ts = expand_mod.expand(f, bound=args.trunc)
    record = {
        "input": f.render(),
        "field": repr(field),
        "truncation": ts.bound,
        "components": ts.to_dict(),
    }
    lines = [f"expansion of {f.render()} (truncation {ts.bound})"]
    for key, val in record["components"].items():
        lines.append(f"  T-degree ({key}): {val}")
    if ts.is_zero:
        record["minimal_degree"] = None
        lines.append("all components vanish within the truncation")
    else:
        m, mds = expand_mod.minimal_degree(ts)
        record["minimal_degree"] = m
        record["minimal_multidegrees"] = [list(md) for md in mds]
        record["minimal_component_sum"] = expand_mod.minimal_component_sum(ts).render()
        lines.append(f"minimal total degree: {m} at {record['minimal_multidegrees']}")
        lines.append(f"minimal component sum: {record['minimal_component_sum']}")
    _emit(args, record, lines)
    return 0


def _campaign_exit(args, report: search.CampaignReport, lines_head: list[str]) -> int:
    record = _report_record(args, report)
    lines = lines_head + [
        f"checked: {report.checked}, passed: {report.passed}, failed: {report.failed}",
    ]
    for failure in report.failures[:10]:
        lines.append(f"  FAILURE {failure}")
    _emit(args, record, lines)
    return 0 if report.failed == 0 else 1


def cmd_verify_tables(args) -> int:
    field = _field_from(args)
    report = search.verify_tables(args.cmax, field)
    return _campaign_exit(args, report, [f"leading-term table sweep, c <= {args.cmax}, {field!r}"])


def cmd_support3(args) -> int:
    field = _field_from(args)
    report = search.support3_campaign(
        c_max=args.cmax, fields=[field], coeff_samples=args.coeff_samples, seed=args.seed
    )
    return _campaign_exit(args, report, [f"three-term-support campaign, c <= {args.cmax}, {field!r}"])


def cmd_cprime_bound(args) -> int:
    field = _field_from(args)
    report = search.cprime_bound_campaign(args.cmax, field, samples=args.samples, seed=args.seed)
    return _campaign_exit(args, report, [f"alternate-pair degree bound, weight <= {args.cmax}, {field!r}"])


def _algebra_from(spec: str, field: Field) -> grpalg.FinAlgebra:
    if spec == "m2":
        return grpalg.matrix2_algebra(field)
    if spec == "sqzero1":
        return grpalg.square_zero_algebra(field, 1)
    if spec == "sqzero2":
        return grpalg.square_zero_algebra(field, 2)
    if spec.startswith("group:"):
        return grpalg.group_algebra(grpalg.build_group(spec[len("group:"):]), field)
    if spec.startswith("file:"):
        return grpalg.load_algebra(spec[len("file:"):], field)
    raise InvalidParameter(
        f"unknown algebra spec {spec!r}; use m2, sqzero1, sqzero2, group:SPEC, or file:PATH"
    )


def cmd_grpalg(args) -> int:
    field = _field_from(args)
    if args.group:
        algebra = grpalg.group_algebra(grpalg.build_group(args.group), field)
    elif args.group_file:
        algebra = grpalg.group_algebra(grpalg.load_group(args.group_file), field)
    elif args.algebra_file:
        algebra = grpalg.load_algebra(args.algebra_file, field)
    else:
        raise InvalidParameter("grpalg needs --group, --group-file, or --algebra-file")

    if args.lpi:
        f = parse_laurent(args.lpi, field)
        result = grpalg.falsify_lpi(f, algebra, trials=args.trials, seed=args.seed)
        record = {
            "algebra": algebra.name,
            "input": f.render(),
            **result.to_dict(),
        }
        if result.found:
            lines = [
                f"counterexample on {algebra.name} at trial {result.trial}:",
                f"  units: {result.units}",
                f"  value: {result.value}",
            ]
        else:
            lines = [f"no counterexample found on {algebra.name} after {result.trials} trials"]
        _emit(args, record, lines)
        return 1 if result.found else 0

    if args.predicates:
        report = grpalg.structural_predicates(algebra)
        record = report.to_dict()
        lines = [
            f"structural predicates on {algebra.name}:",
            f"  idempotents checked ({report.idempotent_mode}): {report.idempotents_checked}",
            f"  all idempotents central: {report.all_idempotents_central}",
            f"  normalizer criterion: {report.normalizer_criterion_holds}"
            f" over {report.normalizer_pairs_checked} pairs",
        ]
        if report.noncentral_idempotent:
            lines.append(f"  noncentral idempotent: {report.noncentral_idempotent}")
        _emit(args, record, lines)
        ok = report.all_idempotents_central and report.normalizer_criterion_holds
        return 0 if ok else 1

    record = {
        "algebra": algebra.name,
        "dim": algebra.dim,
        "field": repr(field),
        "labels": list(algebra.labels),
    }
    _emit(args, record, [f"{algebra.name}: dimension {algebra.dim} over {field!r}"])
    return 0


def cmd_p1(args) -> int:
    field = _field_from(args)
    algebra = _algebra_from(args.algebra, field)
    g = UniPoly.parse(args.g, field)
    result = grpalg.p1_check(algebra, g, mode=args.mode, samples=args.samples, seed=args.seed)
    record = {
        "algebra": algebra.name,
        "g": str(g),
        "mode": args.mode,
        **result.to_dict(),
    }
    lines = [f"square-zero vanishing of g = {g} on {algebra.name}: {'holds' if result.holds else 'fails'}"]
    if result.witness:
        lines.append(f"  witness: {result.witness}")
    _emit(args, record, lines)
    return 0 if result.holds else 1


def cmd_bac(args) -> int:
    field = _field_from(args)
    algebra = _algebra_from(args.algebra, field)
    g = UniPoly.parse(args.g, field)
    result = grpalg.bac_check(algebra, g, mode=args.mode, samples=args.samples, seed=args.seed)
    record = {
        "algebra": algebra.name,
        "g": str(g),
        "h": str(UniPoly.T(field) * g),
        "mode": args.mode,
        **result.to_dict(),
    }
    lines = [
        f"zero-product chain h = T*g with g = {g} on {algebra.name}: "
        f"{'holds' if result.holds else 'fails'}"
    ]
    if result.witness:
        lines.append(f"  witness: {result.witness}")
    _emit(args, record, lines)
    return 0 if result.holds else 1


def cmd_finitecondi(args) -> int:
    field = Field(args.q)
    g = UniPoly.parse(args.g, field)
    witness = grpalg.finitecondi_witness(args.q, g)
    record = {"g": str(g), **witness.to_dict()}
    _emit(
        args,
        record,
        [
            f"witness over F_{args.q} for g = {g}:",
            f"  r = {witness.r}, a = {witness.a.render()}, b = {witness.b.render()}",
            f"  g(ab) = {witness.g_of_ab.render()} (g(r) = {witness.g_of_r})",
        ],
    )
    return 1  # a counterexample witness was found and printed


def cmd_standard_poly(args) -> int:
    field = _field_from(args)
    algebra = _algebra_from(args.algebra, field)
    if args.elements:
        elems = []
        for chunk in args.elements.split(";"):
            coeffs = [int(tok) for tok in chunk.split(",")]
            elems.append(algebra.elem(coeffs))
        value = grpalg.standard_poly(args.k, elems)
        record = {
            "algebra": algebra.name,
            "k": args.k,
            "elements": [e.render() for e in elems],
            "value": value.render(),
            "zero": value.is_zero,
        }
        _emit(args, record, [f"S_{args.k} = {value.render()}"])
        return 0
    if args.mode == "exhaustive":
        result = grpalg.standard_poly_exhaustive(algebra, k=args.k)
    else:
        result = grpalg.standard_poly_sampled(algebra, k=args.k, samples=args.samples, seed=args.seed)
    record = {"algebra": algebra.name, "k": args.k, "mode": args.mode, **result.to_dict()}
    lines = [
        f"S_{args.k} on {algebra.name} ({args.mode}): "
        f"{'vanishes' if result.holds else 'does not vanish'} over {result.checked} tuples"
    ]
    if result.witness:
        lines.append(f"  witness: {result.witness}")
    _emit(args, record, lines)
    return 0 if result.holds else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpifc",
        description="Exact verification toolkit for Laurent polynomial identities of unit groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, field=True, seed=False, units=False):
        p.add_argument("--json", action="store_true", help="emit canonical JSON")
        p.add_argument("--timings", action="store_true", help="include wall-clock durations in JSON")
        if field:
            p.add_argument("--field", type=int, default=0, metavar="Q",
                           help="coefficient field: 0 for the rationals, a prime p for F_p")
        if seed:
            p.add_argument("--seed", type=int, default=0)
        if units:
            p.add_argument("--units", choices=("primary", "alternate", "swapped"),
                           default="primary")

    p = sub.add_parser("word", help="invariants of a word")
    p.add_argument("expr")
    common(p, field=False)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("obstruct", help="obstruction matrix of a Laurent polynomial")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("eval", help="evaluate a Laurent polynomial at a unit pair")
    p.add_argument("expr")
    common(p, units=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("in-l", help="decompose an a,b-expression and test membership in L")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=cmd_in_l)

    p = sub.add_parser("extract-g", help="extract the witness polynomial from a falsified input")
    p.add_argument("expr")
    common(p, units=True)
    p.add_argument("--conj-bound", type=int, default=3)
    p.set_defaults(func=cmd_extract_g)

    p = sub.add_parser("thekey", help="solve the conjugation membership system")
    common(p)
    p.add_argument("--degree-bound", type=int, default=4)
    p.set_defaults(func=cmd_thekey)

    p = sub.add_parser("expand", help="truncated power-series expansion")
    p.add_argument("expr")
    common(p)
    p.add_argument("--trunc", type=int, default=None, help="total-degree truncation bound")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify-tables", help="leading-term table campaign")
    common(p)
    p.add_argument("--cmax", type=int, default=3)
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("support3", help="three-term-support falsification campaign")
    common(p, seed=True)
    p.add_argument("--cmax", type=int, default=2)
    p.add_argument("--coeff-samples", type=int, default=5)
    p.set_defaults(func=cmd_support3)

    p = sub.add_parser("cprime-bound", help="alternate-pair degree bound campaign")
    common(p, seed=True)
    p.add_argument("--cmax", type=int, default=3)
    p.add_argument("--samples", type=int, default=50)
    p.set_defaults(func=cmd_cprime_bound)

    p = sub.add_parser("grpalg", help="group-algebra tools: info, falsify, predicates")
    common(p, seed=True)
    p.add_argument("--group", help="group spec, e.g. cyclic:6, sym:3, quaternion8, cyclic:2xcyclic:2")
    p.add_argument("--group-file", help="permutation-generator group file")
    p.add_argument("--algebra-file", help="structure-constant file")
    p.add_argument("--lpi", help="Laurent polynomial to falsify on the unit group")
    p.add_argument("--predicates", action="store_true", help="idempotent/normalizer predicates")
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_grpalg)

    p = sub.add_parser("p1", help="square-zero vanishing check g(ab) = 0")
    common(p, seed=True)
    p.add_argument("--algebra", required=True, help="m2 | sqzero1 | sqzero2 | group:SPEC | file:PATH")
    p.add_argument("--g", required=True, help="one-variable polynomial, e.g. 'T^2'")
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--samples", type=int, default=2000)
    p.set_defaults(func=cmd_p1)

    p = sub.add_parser("bac", help="zero-product chain check h(bacr) = 0 with h = T*g")
    common(p, seed=True)
    p.add_argument("--algebra", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--samples", type=int, default=2000)
    p.set_defaults(func=cmd_bac)

    p = sub.add_parser("finitecondi", help="matrix witness r, a = r*e12, b = e21 with g(ab) != 0")
    common(p, field=False)
    p.add_argument("--q", type=int, required=True, help="prime field size")
    p.add_argument("--g", required=True)
    p.set_defaults(func=cmd_finitecondi)

    p = sub.add_parser("standard-poly", help="standard polynomial S_k evaluation and sweeps")
    common(p, seed=True)
    p.add_argument("--algebra", required=True)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--elements", help="semicolon-separated coefficient vectors to evaluate at")
    p.set_defaults(func=cmd_standard_poly)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ParseError, InvalidParameter, ZeroModulus, ZeroPolynomial,
            TooLargeForExhaustive) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NoSigmaTau,) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
