# -*- coding: utf-8 -*-
"""
Copyright (c) The Really Nice Codes developers 2026.

This file is part of Really Nice Codes.

Really Nice Codes is free software: you can redistribute it and/or modify it
under the terms of the GNU Affero General Public License as published by the
Free Software Foundation, either version 3 of the License, or (at your option)
 any later version.

Really Nice Codes is distributed in the hope that it will be useful, but
WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY
or FITNESS FOR A PARTICULAR PURPOSE.
See the GNU General Public License for more details.

You should have received a copy of the GNU Affero General Public License
along with Really Nice Codes. If not, see:
<https://www.gnu.org/licenses/agpl-3.0.html>.

Command line front end:

    rn_codes.py classify|dual|selfdual|oracle [flags]

Exit codes: 0 success, 2 invalid input, 3 budget exceeded.
"""

import argparse
import logging
import sys

from dataclasses import dataclass

import pandas as pd

import code_core
import oracle
import report_engine
import self_dual
import settings

from errors import (AlgebraError, BudgetExceeded, DomainError, InvalidInput,
                    NonUnitError, NotAnIdeal, ShapeRejected,
                    UnsupportedCharacteristic)
from quotient_poly import delta_substitute, s_elem, to_yadic
from utils import dumps, read_json, records_frame, write_output

logger = logging.getLogger("rn_codes")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
NO_SELFDUAL = "self-dual (1 + alpha u^2)-constacyclic codes exist only for p = 2"


@dataclass
class Ring:
    """The ring as configured and the delta = 1 ring the work happens in."""

    original: object
    params: object
    delta0: object = None

    def transform(self):

        if self.delta0 is None:

            return None

        ctx = self.params.ctx

        return {"map": "x -> delta0 x",
                "delta": list(ctx.to_coeffs(self.original.delta_elem)),
                "delta0": list(ctx.to_coeffs(self.delta0)),
                "alpha_reduced": list(ctx.to_coeffs(self.params.alpha_elem))}


def prepare_ring(config):

    params = config.ring_params()

    if params.delta == 1:

        return Ring(params, params)

    reduced, delta0 = params.reduced()
    logger.info("reducing delta = %s to 1 with delta0 = %s", params.delta,
                int(delta0))

    return Ring(params, reduced, delta0)


"""
Input parsing.
"""


def _generator(ring, layers, coords):

    if not isinstance(layers, list) or len(layers) > 3:

        raise InvalidInput("a generator is a list of at most three u-layers")

    padded = list(layers) + [[]] * (3 - len(layers))

    if ring.delta0 is not None:

        if coords != "monomial":

            raise InvalidInput("delta != 1 needs generators in monomial "
                               "coordinates")

        mono = s_elem(ring.original, padded)

        return to_yadic(ring.params, delta_substitute(ring.original, mono,
                                                      ring.delta0))

    f = s_elem(ring.params, padded)

    return to_yadic(ring.params, f) if coords == "monomial" else f


def load_code(ring, data):
    """
    Parse {"a": ...} triples, {"gens": [...]} generator lists and
    {"basis": [...]} raw bases.

    Returns
    -------
    triple : GeneratorTriple
        Canonical triple of the ideal.
    given : GeneratorTriple or None
        The triple exactly as supplied, for triple input.
    """

    params = ring.params

    if not isinstance(data, dict):

        raise InvalidInput("input must be a JSON object")

    if "a" in data:

        given = code_core.GeneratorTriple.from_json(params.ctx, data)
        violations = code_core.validate_triple(params, given)

        if violations:

            raise InvalidInput(violations[0])

        return code_core.canonicalize(params, code_core.generators(
            params, given)), given

    coords = data.get("coords", "yadic")

    if coords not in ("yadic", "monomial"):

        raise InvalidInput(f"unknown coordinates {coords!r}")

    if "gens" in data:

        if not isinstance(data["gens"], list):

            raise InvalidInput("'gens' must be a list of generators")

        gens =[_generator(ring, layers, coords) for layers in data["gens"]]

        return code_core.canonicalize(params, gens), None

    if "basis" in data:

        if not isinstance(data["basis"], list) or not all(
                isinstance(vec, list) and len(vec) == 3 * params.n
                for vec in data["basis"]):

            raise InvalidInput(f"basis rows must be lists of {3 * params.n} "
                               "field elements")

        rows =[_generator(ring, [vec[i * params.n:(i + 1) * params.n]
                                  for i in range(3)], coords).reshape(-1)
                for vec in data["basis"]]
        basis = oracle.ideal_from_rows(params, rows) if rows else \
            oracle.zero_ideal(params)

        return code_core.triple_from_basis(basis), None

    raise InvalidInput("input needs a triple, 'gens' or 'basis'")


def _integer(value, name):

    if isinstance(value, bool) or not isinstance(value, (int, str)):

        raise InvalidInput(f"{name} must be an integer, got {value!r}")

    try:

        return int(value)

    except ValueError as err:

        raise InvalidInput(f"{name} must be an integer, got {value!r}") \
            from err


def _field_tuple(params, values, name):

    if not isinstance(values, list):

        raise InvalidInput(f"{name} must be a coefficient list")

    return tuple(int(params.ctx.elem(v)) for v in values)


def load_selfdual_input(ring, data):
    """Triple input, or {"t", "g", "h"} shorthand for Ideal(k, t, g, h)."""

    if isinstance(data, dict) and "a" not in data and "t" in data:

        params = ring.params
        unknown = set(data) - {"k", "t", "g", "h"}

        if unknown:

            raise InvalidInput(f"unknown keys: {sorted(unknown)}")

        if _integer(data.get("k", params.k), "k") != params.k:

            raise InvalidInput("k in the input differs from --k")

        form = self_dual.SelfDualForm(
            params.k, _integer(data["t"], "t"),
            _field_tuple(params, data.get("g", []), "g"),
            _field_tuple(params, data.get("h", []), "h"))

        return form.triple(params)

    triple, _ = load_code(ring, data)

    return triple


"""
Commands. Each returns (report, rows) where rows is a DataFrame for CSV or
None.
"""


def _base_report(config, ring):

    return {"command": config.command, "config": config.as_dict(),
            "ring": ring.params.to_json(), "transform": ring.transform()}


def cmd_classify(config, ring):

    params = ring.params
    triple, given = load_code(ring, read_json(config.input))
    profile = triple.profile
    classes = code_core.classify(params.n, profile)
    class_c = code_core.validate_class_C(params, triple) \
        if code_core.CodeClass.C in classes else None
    report = _base_report(config, ring)
    report.update({
        "triple": triple.to_json(params.ctx),
        "consistent": None if given is None else given == triple,
        "profile": list(profile.as_tuple()),
        "classes": sorted(str(c) for c in classes),
        "violations": code_core.validate_triple(params, triple),
        "class_C": None if class_c is None else class_c.to_json(),
        "size_exponent": code_core.code_size(params, profile),
    })

    return report, None


def cmd_dual(config, ring):

    params = ring.params
    triple, _ = load_code(ring, read_json(config.input))
    ann, path = code_core.annihilator(params, triple)
    perp = code_core.dual(params, triple)
    dual_params = params.dual_params()
    sizes = (code_core.code_size(params, triple.profile)
             + code_core.code_size(params, ann.profile))
    report = _base_report(config, ring)
    report.update({
        "triple": triple.to_json(params.ctx),
        "annihilator": ann.to_json(params.ctx),
        "annihilator_path": path,
        "dual": perp.to_json(params.ctx),
        "dual_ring": dual_params.to_json(),
        "size_sum": sizes,
        "size_sum_ok": sizes == 3 * params.n,
        "selfdual": dual_params == params and perp == triple,
    })

    return report, None


def _census_summary(params, total, families, outside=True):

    return {"N": total, "families": len(families),
            "outside_C": 1 if outside else 0,
            "total": total + len(families) + (1 if outside else 0)}


def _code_records(params):

    records = []

    for form in self_dual.enumerate_monomial(params):

        records.append({"source": "monomial",
                        "triple": form.triple(params).to_json(params.ctx)})

    for member in self_dual.degree2_families(params):

        records.append({"source": f"family {member.label}",
                        "triple": member.form.triple(params).to_json(
                            params.ctx)})

    records.append({"source": "outside C",
                    "triple": self_dual.outside_C_selfdual(params).to_json(
                        params.ctx)})

    return records


def _selfdual_check(config, ring):

    params = ring.params
    triple = load_selfdual_input(ring, read_json(config.input))
    basis = code_core.span(params, triple)
    verdict = {"triple": triple.to_json(params.ctx),
               "definitional": oracle.is_selfdual(basis)}

    try:

        form = self_dual.selfdual_shape_check(params, triple)

    except ShapeRejected as err:

        verdict.update({"shape": err.reason, "selfdual": verdict[
            "definitional"]})

        return verdict

    general = self_dual.is_selfdual_general(params, form)
    verdict.update({"shape": "ok", "selfdual": general.selfdual,
                    "conditions": general.to_json()})

    for s in range(form.c):

        if self_dual.monomial_g(params, s) == form.g:

            spec = self_dual.MonomialSpec(params.k, s)
            verdict.update({
                "s": s, "w": spec.w,
                "monomial": self_dual.is_selfdual_monomial(params, form.t,
                                                           spec, form.h),
                "M_system": self_dual.is_selfdual_msystem(params, form.t,
                                                          spec, form.h)})

            break

    return verdict


def cmd_selfdual(config, ring):

    params = ring.params
    report = _base_report(config, ring)
    report["mode"] = config.mode

    if params.p != 2:

        if config.mode == "check":

            report.update({"selfdual": False, "note": NO_SELFDUAL})

        else:

            report.update({"codes": [], "N": 0, "note": NO_SELFDUAL})

        return report, None

    if config.mode == "check":

        report.update(_selfdual_check(config, ring))

        return report, None

    if config.mode == "enumerate":

        codes = _code_records(params)
        report.update({"codes": codes, "count": len(codes)})

        return report, records_frame(codes)

    table, total = self_dual.count_selfdual(params)
    report["census"] = table.to_dict(orient="records")
    report["N"] = total

    if config.mode == "census":

        families = self_dual.degree2_families(params)
        codes = _code_records(params)
        report["summary"] = _census_summary(params, total, families)
        report["codes"] = codes

    return report, table


def _crosscheck(params, budget):

    ideals = oracle.enumerate_ideals(params, budget)
    mismatches = []

    def flag(triple, check):

        mismatches.append({"check": check,
                           "triple": triple.to_json(params.ctx)})

    for basis in ideals:

        triple = code_core.triple_from_basis(basis)

        if code_core.span(params, triple) != basis:

            flag(triple, "triple does not regenerate the ideal")

        if basis.dim != code_core.code_size(params, triple.profile):

            flag(triple, "dimension differs from the size exponent")

        brute_ann = oracle.brute_annihilator(basis)
        ann, path = code_core.annihilator(params, triple)

        if code_core.span(params, ann) != brute_ann:

            flag(triple, f"annihilator ({path}) differs from the nullspace")

        if basis.dim + brute_ann.dim != 3 * params.n:

            flag(triple, "dim C + dim Ann(C) != 3 p^k")

        if params.p == 2:

            brute_perp = oracle.brute_dual(basis)

            if oracle.reciprocal_basis(brute_ann) != brute_perp:

                flag(triple, "C-perp differs from Ann(C)*")

            try:

                form = self_dual.selfdual_shape_check(params, triple)

            except ShapeRejected:

                continue

            if self_dual.is_selfdual_general(params, form).selfdual != \
                    (brute_perp == basis):

                flag(triple,
                     "three-condition verdict differs from the definition")

    return {"ideal_count": len(ideals), "mismatches": mismatches}


def _ideal_bijection(params, budget):

    ideals = oracle.enumerate_ideals(params, budget)
    triples = set(code_core.canonical_triples(params, budget))
    seen = {}
    collisions = []

    for basis in ideals:

        triple = code_core.triple_from_basis(basis)

        if triple in seen:

            collisions.append(triple)

        seen[triple] = basis

    unmatched_ideals = [tr for tr in seen if tr not in triples]
    unmatched_triples = [tr for tr in triples if tr not in seen]
    mismatches = ([{"check": "ideal without a consistent triple",
                    "triple": tr.to_json(params.ctx)}
                   for tr in unmatched_ideals]
                  + [{"check": "triple without an ideal",
                      "triple": tr.to_json(params.ctx)}
                     for tr in unmatched_triples]
                  + [{"check": "two ideals share a triple",
                      "triple": tr.to_json(params.ctx)}
                     for tr in collisions])

    return {"ideal_count": len(ideals), "triple_count": len(triples),
            "bijection": not mismatches, "mismatches": mismatches}


def cmd_oracle(config, ring):

    params = ring.params
    report = _base_report(config, ring)
    report["scope"] = config.scope

    if config.scope == "ideals":

        report.update(_ideal_bijection(params, config.budget))

    elif config.scope == "selfdual":

        if params.p != 2:

            found = oracle.brute_selfdual_scan(params, config.budget)
            report.update({
                "selfdual_count": len(found),
                "dual_ring": params.dual_params().to_json(),
                "same_ring": params.dual_params() == params,
                "mismatches": [{"check": "self-dual in odd characteristic",
                                "triple": code_core.triple_from_basis(
                                    basis).to_json(params.ctx)}
                               for basis in found],
                "note": NO_SELFDUAL})

        else:

            reconciliation = self_dual.reconcile_selfdual(params,
                                                          config.budget)
            body = reconciliation.to_json(params)
            report.update(body)
            report["selfdual_count"] = body["found"]
            report["mismatches"] = (
                [{"check": "not covered by the formulas", "triple": tr}
                 for tr in body["surplus"]]
                + [{"check": "predicted but not self-dual", "triple": tr}
                   for tr in body["missing"]])

    else:

        report.update(_crosscheck(params, config.budget))

    rows = records_frame(report["mismatches"]) if report["mismatches"] \
        else pd.DataFrame(columns=["check", "triple"])

    return report, rows


COMMANDS = {"classify": cmd_classify,
            "dual": cmd_dual,
            "selfdual": cmd_selfdual,
            "oracle": cmd_oracle}


"""
Rendering and the entry point.
"""


def render(config, report, rows):

    if config.format == "json":

        return dumps(report)

    if config.format == "csv":

        frame = rows if rows is not None else records_frame([report])

        return frame.to_csv(index=False)

    title = f"{config.command} report"

    if config.command == "selfdual" and "census" in report:

        table = pd.DataFrame(report["census"])
        summary = report.get("summary", {"N": report["N"]})

        return report_engine.get_census_report(report["config"], table,
                                               summary).getvalue()

    return report_engine.get_summary_report(title, report["config"],
                                            report).getvalue()


def build_parser():

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="characteristic")
    common.add_argument("--m", type=int, help="extension degree")
    common.add_argument("--modulus",
                        help="little-endian irreducible modulus, e.g. [1,1,1]")
    common.add_argument("--k", type=int, help="length exponent, n = p^k")
    common.add_argument("--alpha", help="alpha as int or coefficient list")
    common.add_argument("--delta", help="delta as int or coefficient list")
    common.add_argument("--format", choices=settings.FORMATS)
    common.add_argument("--budget", type=int, help="sweep size limit")
    common.add_argument("--out", help="output file, stdout by default")
    common.add_argument("--in", dest="input",
                        help="input JSON file, stdin by default")
    common.add_argument("--config", help="TOML job file")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="rn_codes",
        description="(delta + alpha u^2)-constacyclic codes of length p^k "
                    "over F_{p^m}[u]/<u^3>.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common],
                   help="canonical triple, profile and classes of a code")
    sub.add_parser("dual", parents=[common],
                   help="annihilator and Euclidean dual of a code")
    selfdual = sub.add_parser("selfdual", parents=[common],
                              help="self-dual checks, lists and counts")
    selfdual.add_argument("--mode", choices=settings.MODES)
    oracle_parser = sub.add_parser("oracle", parents=[common],
                                   help="brute-force verification suites")
    oracle_parser.add_argument("--scope", "--mode", dest="scope",
                               choices=settings.SCOPES)

    return parser


def setup_logging(verbose):

    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(levelname)s "
                               "%(message)s",
                        stream=sys.stderr)


def main(argv=None):

    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    flags = {key: getattr(args, key, None)
             for key in ("p", "m", "modulus", "k", "alpha", "delta", "mode",
                         "scope", "format", "budget", "out", "input")}
    flags["command"] = args.command

    try:

        config = settings.get_job_config(flags, args.config)
        ring = prepare_ring(config)
        report, rows = COMMANDS[config.command](config, ring)
        write_output(render(config, report, rows), config.out)

    except BudgetExceeded as err:

        logger.error("budget exceeded: %s", err)

        return EXIT_BUDGET

    except (InvalidInput, ShapeRejected, NotAnIdeal, DomainError,
            NonUnitError, UnsupportedCharacteristic) as err:

        logger.error("invalid input: %s", err)
        print(f"error: {err}", file=sys.stderr)

        return EXIT_INVALID

    except AlgebraError as err:

        logger.error("%s", err)

        return EXIT_INVALID

    return EXIT_OK


if __name__ == "__main__":

    sys.exit(main())
