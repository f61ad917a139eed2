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

Canonical generator triples of ideals of S, torsion profiles, the six-class
partition, class C structure and annihilators/duals.

An ideal is written <<f0, f1, f2>> with
    f0 = (x-1)^a + u (x-1)^t g + u^2 h
    f1 = u (x-1)^b + u^2 r
    f2 = u^2 (x-1)^c
and all polynomials in (x-1)-adic coefficients. a = n means f0 is absent,
b = n that f1 is absent and c = n that f2 is absent.
"""

import enum
import itertools
import logging
import math

from dataclasses import dataclass, field

import numpy as np

import oracle

from errors import BudgetExceeded, InvalidInput, NotAnIdeal, ShapeRejected
from quotient_poly import (degree, inv_mod_nilpotent, reciprocal, sbar,
                           sbar_mul, shift, trim, valuation)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorTriple:

    a: int
    t: int
    g: tuple
    b: int
    r: tuple
    c: int
    h: tuple

    @classmethod
    def build(cls, a, t, g, b, r, c, h):
        """Accepts FieldArrays or integer sequences for g, r and h."""

        return cls(int(a), int(t), trim(g), int(b), trim(r), int(c),
                   trim(h))

    def poly(self, params, name):

        return sbar(params, getattr(self, name))

    @property
    def profile(self):

        return TorsionProfile(self.a, self.b, self.c)

    def to_json(self, ctx):

        def encode(coeffs):

            return [list(ctx.to_coeffs(ctx.GF(v))) for v in coeffs]

        return {"a": self.a, "t": self.t, "g": encode(self.g),
                "b": self.b, "r": encode(self.r),
                "c": self.c, "h": encode(self.h)}

    @classmethod
    def from_json(cls, ctx, data):

        expected = {"a", "t", "g", "b", "r", "c", "h"}
        unknown = set(data) - expected

        if unknown:

            raise InvalidInput(f"unknown triple keys: {sorted(unknown)}")

        missing = expected - set(data)

        if missing:

            raise InvalidInput(f"missing triple keys: {sorted(missing)}")

        def decode(coeffs):

            if not isinstance(coeffs, list):

                raise InvalidInput("polynomials must be coefficient lists")

            return [int(ctx.elem(v)) for v in coeffs]

        try:

            return cls.build(int(data["a"]), int(data["t"]),
                             decode(data["g"]), int(data["b"]),
                             decode(data["r"]), int(data["c"]),
                             decode(data["h"]))

        except (TypeError, ValueError) as err:

            raise InvalidInput(f"malformed triple: {err}") from err

    def __str__(self):

        return (f"a={self.a} t={self.t} g={list(self.g)} b={self.b} "
                f"r={list(self.r)} c={self.c} h={list(self.h)}")


@dataclass(frozen=True)
class TorsionProfile:

    a: int
    b: int
    c: int

    def __post_init__(self):

        if not self.a >= self.b >= self.c >= 0:

            raise InvalidInput(f"torsion degrees {self.as_tuple()} are not a "
                               "chain a >= b >= c >= 0")

    def as_tuple(self):

        return (self.a, self.b, self.c)


class CodeClass(enum.Enum):

    A = "A"
    A_PRIME = "A'"
    B = "B"
    B_PRIME = "B'"
    C = "C"
    C_PRIME = "C'"

    def __str__(self):

        return self.value


@dataclass(frozen=True)
class AnnihilatorWitness:
    """g r = alpha + (x-1)^c l in S-bar."""

    l: tuple


@dataclass
class ClassCReport:

    case: int = None
    violations: list = field(default_factory=list)

    @property
    def valid(self):

        return not self.violations

    def to_json(self):

        return {"valid": self.valid, "case": self.case,
                "violations": list(self.violations)}


"""
Triples and their generators.
"""


def validate_triple(params, tr):
    """
    Degree and unit constraints of the unique generator form.

    Returns
    -------
    violations : list of str
        Empty when the triple is well formed.
    """

    n = params.n
    violations = []
    g, r, h = (tr.poly(params, name) for name in ("g", "r", "h"))

    if not n >= tr.a >= tr.b >= tr.c >= 0:

        violations.append(f"torsion degrees must satisfy {n} >= a >= b >= c "
                          f">= 0, got ({tr.a}, {tr.b}, {tr.c})")

        return violations

    if tr.t < 0:

        violations.append("t must be nonnegative")

    if tr.g:

        if g[0] == 0:

            violations.append("g must be a unit (g(1) != 0)")

        if tr.t + degree(g) >= tr.b:

            violations.append(f"t + deg(g) = {tr.t + degree(g)} must be "
                              f"< b = {tr.b}")

    elif tr.t != 0:

        violations.append("t must be 0 when g = 0")

    if tr.r and degree(r) >= tr.c:

        violations.append(f"deg(r) = {degree(r)} must be < c = {tr.c}")

    if tr.h and degree(h) >= tr.c:

        violations.append(f"deg(h) = {degree(h)} must be < c = {tr.c}")

    if tr.a == n and (tr.g or tr.h or tr.t):

        violations.append("a = p^k leaves no f0, so t, g and h must vanish")

    if tr.b == n and tr.r:

        violations.append("b = p^k leaves no f1, so r must vanish")

    return violations


def generators(params, tr):
    """The present members of f0, f1, f2 as (3, n) yadic arrays."""

    n = params.n
    gens = []

    if tr.a < n:

        f0 = params.GF.Zeros((3, n))
        f0[0, tr.a] = 1
        f0[1] = shift(params, tr.poly(params, "g"), tr.t)
        f0[2] = tr.poly(params, "h")
        gens.append(f0)

    if tr.b < n:

        f1 = params.GF.Zeros((3, n))
        f1[1, tr.b] = 1
        f1[2] = tr.poly(params, "r")
        gens.append(f1)

    if tr.c < n:

        f2 = params.GF.Zeros((3, n))
        f2[2, tr.c] = 1
        gens.append(f2)

    return gens


def span(params, tr):

    return oracle.span_ideal(params, generators(params, tr))


"""
Canonical form from an arbitrary ideal.
"""


def triple_from_basis(basis):
    """
    Read the unique generators off the RREF of an ideal.

    Layer-0 pivots of an ideal are exactly positions a..n-1, so the row with
    pivot (0, a) is f0 itself: its u-layer vanishes on positions >= b and its
    u^2-layer on positions >= c. The same holds for the row with pivot (1, b).
    """

    params = basis.params
    n = params.n
    rows = {pivot: row.reshape(3, n)
            for pivot, row in zip(basis.pivots, basis.rows)}

    def first_pivot(level):

        found = [pivot - level * n for pivot in basis.pivots
                 if level * n <= pivot < (level + 1) * n]

        return min(found) if found else n

    a, b, c = (first_pivot(level) for level in range(3))
    t, g, r, h = 0, (), (), ()

    if a < n:

        f0 = rows[a]
        t = valuation(f0[1])

        if t < n:

            g = f0[1][t:]

        else:

            t = 0

        h = f0[2]

    if b < n:

        r = rows[n + b][2]

    return GeneratorTriple.build(a, t, g, b, r, c, h)


def canonicalize(params, gens):
    """Unique generator triple of the ideal generated by gens."""

    return triple_from_basis(oracle.span_ideal(params, gens))


def is_consistent(params, tr):
    """The generators of tr span an ideal whose canonical triple is tr."""

    if validate_triple(params, tr):

        return False

    return canonicalize(params, generators(params, tr)) == tr


def torsion_profile(params, code):
    """
    (a, b, c) of a triple, or of an IdealBasis computed from its pivots.
    """

    if isinstance(code, GeneratorTriple):

        return code.profile

    if not oracle.is_closed(code):

        raise NotAnIdeal("torsion codes are only defined for ideals")

    tr = triple_from_basis(code)

    return tr.profile


def classify(n, profile):
    """Every class whose defining inequalities hold for the profile."""

    a, b, c = profile.as_tuple()
    classes = set()

    if c == 0 and a + b <= n:

        classes.add(CodeClass.A)

    if c == 0 and a + b >= n:

        classes.add(CodeClass.A_PRIME)

    if a == n and b + c <= n:

        classes.add(CodeClass.B)

    if a == n and b + c >= n:

        classes.add(CodeClass.B_PRIME)

    if a < n and c > 0 and a + c <= n:

        classes.add(CodeClass.C)

    if a < n and c > 0 and a + c >= n:

        classes.add(CodeClass.C_PRIME)

    return frozenset(classes)


def code_size(params, profile):
    """log_{p^m} |C| = 3 p^k - (a + b + c)."""

    return 3 * params.n - sum(profile.as_tuple())


def canonical_triples(params, budget=oracle.DEFAULT_BUDGET):
    """
    Every consistent triple, by sweeping all well formed candidates.
    """

    n = params.n
    q = params.ctx.order
    candidates = []

    def polys(length):

        return itertools.product(range(q), repeat=length)

    def units(length):

        for coeffs in polys(length):

            if coeffs and coeffs[0] != 0:

                yield coeffs

    total = 0

    for a in range(n + 1):

        for b in range(a + 1):

            for c in range(b + 1):

                # f0 part: (t, g) pairs plus g = 0, and h
                if a < n:

                    g_count = 1 + sum((q - 1) * q ** (b - t - 1)
                                      for t in range(b))
                    h_count = q ** c

                else:

                    g_count, h_count = 1, 1

                r_count = q ** c if b < n else 1
                total += g_count * h_count * r_count

    if total > budget:

        raise BudgetExceeded(f"{total} candidate triples exceed the sweep "
                             f"budget {budget}")

    for a in range(n + 1):

        for b in range(a + 1):

            for c in range(b + 1):

                gts = [(0, ())]

                if a < n:

                    gts += [(t, g) for t in range(b)
                            for g in units(b - t)]

                hs = list(polys(c)) if a < n else [()]
                rs = list(polys(c)) if b < n else [()]

                for (t, g), h, r in itertools.product(gts, hs, rs):

                    candidates.append(GeneratorTriple.build(a, t, g, b, r,
                                                            c, h))

    found = [tr for tr in candidates if is_consistent(params, tr)]
    logger.info("%d of %d candidate triples are consistent", len(found),
                len(candidates))

    return found


"""
Class C structure and annihilators.
"""


def validate_class_C(params, tr):
    """
    Structure conditions for class C: b = p^k - a + t, g a unit,
    r = alpha g^{-1} mod (x-1)^c, the bound on c, then the two-case split.
    """

    n = params.n
    report = ClassCReport()
    bad = report.violations
    g, r, h = (tr.poly(params, name) for name in ("g", "r", "h"))

    if CodeClass.C not in classify(n, tr.profile):

        bad.append(f"profile {tr.profile.as_tuple()} is not in class C")

        return report

    if tr.b != n - tr.a + tr.t:

        bad.append(f"b = {tr.b} must equal p^k - a + t = {n - tr.a + tr.t}")

    if g[0] == 0:

        bad.append("g must be a unit")

        return report

    expected_r = params.alpha_elem * inv_mod_nilpotent(params, g, tr.c)

    if np.any(r[:tr.c] != expected_r[:tr.c]) or degree(r) >= tr.c:

        bad.append("r must equal alpha g^{-1} mod (x-1)^c")

    other = 2 * tr.a - n - tr.t
    bound = min(tr.t, other)

    if tr.t != other and tr.c > bound:

        bad.append(f"c = {tr.c} must be <= min(t, 2a - p^k - t) = {bound}")

    if 1 <= tr.c <= bound:

        report.case = 1

        if not math.ceil((n + 2) / 2) <= tr.a <= n - 1:

            bad.append("case 1 needs ceil((p^k + 2)/2) <= a <= p^k - 1")

        if not 1 <= tr.t <= 2 * tr.a - n - 1:

            bad.append("case 1 needs 1 <= t <= 2a - p^k - 1")

        if tr.a + tr.c > n:

            bad.append("case 1 needs a + c <= p^k")

        if degree(g) >= n - tr.a:

            bad.append(f"case 1 needs deg(g) < p^k - a = {n - tr.a}")

    else:

        report.case = 2
        half = n // 2

        if params.p != 2 or params.k < 2:

            bad.append("case 2 needs p = 2 and k >= 2")

            return report

        if not 0 <= tr.t < n // 4:

            bad.append(f"case 2 needs 0 <= t < 2^(k-2) = {n // 4}")

        if tr.a != tr.t + half:

            bad.append(f"case 2 needs a = t + 2^(k-1) = {tr.t + half}")

        if not tr.t < tr.c <= half - tr.t:

            bad.append("case 2 needs t < c <= 2^(k-1) - t")

        if degree(g) >= half - tr.t:

            bad.append(f"case 2 needs deg(g) < 2^(k-1) - t = {half - tr.t}")

        width = max(tr.c - tr.t, 0)

        if np.any(r[:width] != g[:width]):

            bad.append("case 2 needs r = g mod (x-1)^(c-t)")

    if degree(h) >= tr.c:

        bad.append("deg(h) must be < c")

    return report


def annihilator_witness(params, tr):
    """l with g r = alpha + (x-1)^c l."""

    product = sbar_mul(params, tr.poly(params, "g"), tr.poly(params, "r"))
    product[0] -= params.alpha_elem

    if np.any(product[:tr.c] != 0):

        raise ShapeRejected("g r is not alpha mod (x-1)^c")

    l = params.GF.Zeros(params.n)
    l[:params.n - tr.c] = product[tr.c:]

    return AnnihilatorWitness(trim(l))


def annihilator_classC(params, tr):
    """Generator triple of Ann(C) for C in class C, in closed form."""

    report = validate_class_C(params, tr)

    if not report.valid:

        raise ShapeRejected(report.violations[0])

    n = params.n
    l = sbar(params, annihilator_witness(params, tr).l)
    h = tr.poly(params, "h")
    a, t, c = tr.a, tr.t, tr.c
    h_new = -l - shift(params, h, n - a - c)
    h_new[n - a:] = 0

    return GeneratorTriple.build(n - c, a - c - t, -tr.poly(params, "r"),
                                 a - t, -tr.poly(params, "g"), n - a, h_new)


def annihilator_general(basis):

    return oracle.brute_annihilator(basis)


def annihilator(params, tr):
    """
    Ann(C) as a triple. Returns (triple, path) where path says whether the
    closed form or the linear-algebra route was taken.
    """

    if validate_class_C(params, tr).valid:

        return annihilator_classC(params, tr), "closed-form"

    ann = annihilator_general(span(params, tr))

    return triple_from_basis(ann), "linear-algebra"


def dual(params, code):
    """
    Euclidean dual C-perp = Ann(C)*.

    A triple yields a triple and an IdealBasis an IdealBasis. The result
    belongs to params.dual_params(), which is params itself for p = 2.
    """

    if isinstance(code, oracle.IdealBasis):

        return oracle.reciprocal_basis(annihilator_general(code)) \
            if params.p == 2 else oracle.brute_dual(code)

    if params.p != 2:

        return triple_from_basis(oracle.brute_dual(span(params, code)))

    ann, _ = annihilator(params, code)
    stars = [reciprocal(params, f) for f in generators(params, ann)]

    return canonicalize(params, stars)


def eta_roundtrip(params, tr):
    """Ann(Ann(C)) == C for a class C or C' triple."""

    ann, _ = annihilator(params, tr)
    back, _ = annihilator(params, ann)

    return back == tr
