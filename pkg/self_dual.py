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

Self-dual (1 + alpha u^2)-constacyclic codes of length 2^k.

A self-dual ideal in class C has the shape Ideal(k, t, g, h):
a = 2^{k-1} + t, b = 2^{k-1}, c = 2^{k-1} - t and r = alpha g^{-1} mod
(x+1)^c. Here x + 1 = x - 1, so the yadic coordinates of quotient_poly are
the (x+1)-adic ones.
"""

import itertools
import logging
import math
import time

from dataclasses import dataclass, field

import numpy as np
import pandas as pd

import code_core
import linalg
import oracle

from errors import BudgetExceeded, ShapeRejected, UnsupportedCharacteristic
from quotient_poly import (degree, inv_mod_nilpotent, reciprocal_sbar, sbar,
                           sbar_mul, star_divide, trim, x_power)

logger = logging.getLogger(__name__)


def _require_char2(params):

    if params.p != 2:

        raise UnsupportedCharacteristic(
            "self-dual (1 + alpha u^2)-constacyclic codes need p = 2")


@dataclass(frozen=True)
class SelfDualForm:

    k: int
    t: int
    g: tuple
    h: tuple

    @property
    def half(self):

        return 2 ** (self.k - 1)

    @property
    def a(self):

        return self.half + self.t

    @property
    def b(self):

        return self.half

    @property
    def c(self):

        return self.half - self.t

    def r(self, params):
        """alpha g^{-1} mod (x+1)^c."""

        g = sbar(params, self.g)

        return params.alpha_elem * inv_mod_nilpotent(params, g, self.c)

    def triple(self, params):

        return code_core.GeneratorTriple.build(self.a, self.t, self.g,
                                               self.b, self.r(params),
                                               self.c, self.h)

    def to_json(self, params):

        return self.triple(params).to_json(params.ctx)


@dataclass
class DualForm:

    G: tuple
    H: tuple


@dataclass
class ConditionReport:

    gg_star: bool
    g_squared: bool
    h_fixed: bool
    dual: DualForm

    @property
    def selfdual(self):

        return self.gg_star and self.g_squared and self.h_fixed

    def to_json(self):

        return {"selfdual": self.selfdual,
                "g_gstar_is_alpha": self.gg_star,
                "g_squared_is_alpha": self.g_squared,
                "H_equals_h": self.h_fixed,
                "G": list(self.dual.G), "H": list(self.dual.H)}


@dataclass(frozen=True)
class MonomialSpec:
    """g = sqrt(alpha) x^s; 2^w exactly divides s, w = k - 2 for s = 0."""

    k: int
    s: int

    @property
    def w(self):

        if self.s == 0:

            return self.k - 2

        return (self.s & -self.s).bit_length() - 1


@dataclass
class MSystem:

    t: int
    dim: int
    M: object
    d: object
    rank: int
    alt_rank: int

    @property
    def nullity(self):

        return self.dim - self.rank

    @property
    def alt_nullity(self):

        return self.t - self.alt_rank


@dataclass
class HSolution:

    consistent: bool
    particular: object
    kernel: object

    def count(self, q):

        return q ** len(self.kernel) if self.consistent else 0


@dataclass(frozen=True)
class FamilyMember:

    label: str
    beta: int
    form: SelfDualForm


@dataclass
class Reconciliation:

    scan: str
    found: int
    monomial: int
    families: int
    outside: int
    surplus: list = field(default_factory=list)
    missing: list = field(default_factory=list)

    @property
    def expected(self):

        return self.monomial + self.families + self.outside

    def to_json(self, params):

        return {"scan": self.scan, "found": self.found,
                "expected": self.expected, "monomial": self.monomial,
                "families": self.families, "outside_C": self.outside,
                "surplus": [tr.to_json(params.ctx) for tr in self.surplus],
                "missing": [tr.to_json(params.ctx) for tr in self.missing]}


"""
Shape and the dual formula.
"""


def _mod(f, c):

    out = f.copy()
    out[c:] = 0

    return out


def selfdual_shape_check(params, tr):
    """
    Accept a triple of the form Ideal(k, t, g, h) or raise ShapeRejected
    naming the first identity that fails.
    """

    _require_char2(params)
    n = params.n
    half = n // 2
    violations = code_core.validate_triple(params, tr)

    if violations:

        raise ShapeRejected(violations[0])

    t = tr.a - half
    c = half - t

    if not 0 <= t < half:

        raise ShapeRejected(f"a = {tr.a} must satisfy 2^(k-1) <= a < 2^k")

    if tr.b != half:

        raise ShapeRejected(f"b = {tr.b} must equal 2^(k-1) = {half}")

    if tr.c != c:

        raise ShapeRejected(f"c = {tr.c} must equal 2^(k-1) - t = {c}")

    if tr.t != t:

        raise ShapeRejected(f"t = {tr.t} must equal a - 2^(k-1) = {t}")

    g = tr.poly(params, "g")

    if g[0] == 0:

        raise ShapeRejected("g must be a unit")

    if degree(g) >= c:

        raise ShapeRejected(f"deg(g) must be < 2^(k-1) - t = {c}")

    form = SelfDualForm(params.k, t, tr.g, tr.h)
    r = tr.poly(params, "r")

    if np.any(r != form.r(params)):

        raise ShapeRejected("r must equal alpha g^{-1} mod (x+1)^c")

    if 4 * t < n and np.any(r[:c - t] != g[:c - t]):

        raise ShapeRejected("t < 2^(k-2) needs r = g mod (x+1)^(c-t)")

    return form


def _h_image(params, form, h):
    """x^{2^{k-1}+t} h*(x) in S-bar."""

    return sbar_mul(params, x_power(params, form.a), reciprocal_sbar(params, h))


def dual_form(params, form):
    """
    (G, H) with C-perp = Ideal(k, t, G, H):
        G = (alpha g^{-1})* mod (x+1)^c
        H = alpha (x+1)^t + x^a h* + q g*  mod (x+1)^c
    """

    _require_char2(params)
    c = form.c
    g = sbar(params, form.g)
    h = sbar(params, form.h)
    division = star_divide(params, g, form.t)
    H = _h_image(params, form, h)
    H = H + sbar_mul(params, division.q, reciprocal_sbar(params, g))

    if form.t < c:

        H[form.t] += params.alpha_elem

    return DualForm(trim(_mod(division.G, c)), trim(_mod(H, c)))


def is_selfdual_general(params, form):
    """
    Three conditions: g g* = alpha mod (x+1)^c, g^2 = alpha mod
    (x+1)^{c-t} when t < 2^{k-2}, and H = h.
    """

    _require_char2(params)
    n = params.n
    c = form.c
    g = sbar(params, form.g)
    alpha = sbar(params, [params.alpha])
    gg_star = sbar_mul(params, g, reciprocal_sbar(params, g))
    cond1 = bool(np.all(gg_star[:c] == alpha[:c]))
    cond2 = True

    if 4 * form.t < n:

        width = c - form.t
        squared = sbar_mul(params, g, g)
        cond2 = bool(np.all(squared[:width] == alpha[:width]))

    dual = dual_form(params, form)
    cond3 = dual.H == trim(form.h)

    return ConditionReport(cond1, cond2, cond3, dual)


"""
The sigma system for g.
"""


def sigma(params, s, g):
    """
    sigma_s = sum_{i<=s} sum_{j<=s-i} binom(2^k - j, s-i-j) g_i g_j, the
    s-th (x+1)-adic coefficient of g g*.
    """

    GF = params.GF
    coeffs = [GF(int(params.ctx.elem(v))) for v in g]
    n = params.n
    total = GF(0)

    for i in range(min(s, len(coeffs) - 1) + 1):

        for j in range(min(s - i, len(coeffs) - 1) + 1):

            if math.comb(n - j, s - i - j) % 2:

                total += coeffs[i] * coeffs[j]

    return total


def solve_g_system(params, t, max_deg, budget=oracle.DEFAULT_BUDGET):
    """
    Every g of degree <= max_deg with g_0 = sqrt(alpha) and sigma_s = 0 for
    1 <= s < 2^{k-1} - t, by exhaustive sweep.
    """

    _require_char2(params)
    c = params.n // 2 - t
    max_deg = min(max_deg, c - 1)
    q = params.ctx.order
    sweep = q ** max_deg

    if sweep > budget:

        raise BudgetExceeded(f"sweeping {sweep} polynomials exceeds the "
                             f"budget {budget}")

    root = int(params.ctx.sqrt_char2(params.alpha_elem))
    found = []

    for tail in itertools.product(range(q), repeat=max_deg):

        g = (root,) + tail

        if all(sigma(params, s, g) == 0 for s in range(1, c)):

            found.append(trim(g))

    logger.debug("g system t=%d: %d solutions of degree <= %d", t,
                 len(found), max_deg)

    return found


"""
Monomial g and the linear system for h.
"""


def monomial_g(params, s):
    """sqrt(alpha) x^s in (x+1)-adic coordinates."""

    root = params.ctx.sqrt_char2(params.alpha_elem)

    return trim(root * x_power(params, s))


def _t_range_ok(params, t, spec):
    """2^{k-2} <= t, or 2^{k-2} - 2^w <= t < 2^{k-2}."""

    n = params.n

    if n <= 4 * t:

        return True

    return n - 2 ** (spec.w + 2) <= 4 * t


def is_selfdual_monomial(params, t, spec, h):
    """
    Self-duality of Ideal(k, t, sqrt(alpha) x^s, h) from the h congruence
    alone.
    """

    _require_char2(params)
    c = params.n // 2 - t

    if not 0 <= spec.s < c or not _t_range_ok(params, t, spec):

        return False

    form = SelfDualForm(params.k, t, monomial_g(params, spec.s), trim(h))
    target = _h_image(params, form, sbar(params, h))

    if t < c:

        target[t] += params.alpha_elem

    return bool(np.all(target[:c] == sbar(params, h)[:c]))


def _m_matrix(params, top, dim):

    M = params.GF.Zeros((dim, dim))

    for i in range(dim):

        for j in range(i):

            M[i, j] = math.comb(top - j, i - j) % 2

    return M


def build_M(params, t):
    """
    M(2^k, t): entry (i, j) = binom(2^{k-1} + t - j, i - j) mod 2 for
    i > j, with d_t = alpha when t < dim. The rank of M(2^k, 2^{k-1} - t)
    rides along for comparison.
    """

    _require_char2(params)
    half = params.n // 2
    dim = half - t
    M = _m_matrix(params, half + t, dim)
    d = params.GF.Zeros(dim)

    if t < dim:

        d[t] = params.alpha_elem

    alt = _m_matrix(params, params.n - t, t)

    return MSystem(t, dim, M, d, linalg.rank(M), linalg.rank(alt))


def solve_h_system(params, system):
    """Gaussian elimination for M h = d; consistency is computed."""

    particular, kernel = linalg.solve(system.M, system.d)

    return HSolution(particular is not None, particular, kernel)


def solutions_for(params, solution):
    """Every h of a solved system, as trimmed tuples."""

    if not solution.consistent:

        return

    q = params.ctx.order

    for combo in itertools.product(range(q), repeat=len(solution.kernel)):

        h = solution.particular.copy()

        for scale, row in zip(combo, solution.kernel):

            h = h + params.GF(scale) * row

        yield trim(h)


def is_selfdual_msystem(params, t, spec, h):
    """Third decision path: the t range plus M(2^k, t) h = d."""

    c = params.n // 2 - t

    if not 0 <= spec.s < c or not _t_range_ok(params, t, spec):

        return False

    system = build_M(params, t)

    return bool(np.all(system.M @ sbar(params, h)[:c] == system.d))


def census_terms(params):
    """(t, s) pairs of the monomial census in a fixed order."""

    n = params.n
    terms = []

    for s in range(n // 4 + 1):

        spec = MonomialSpec(params.k, s)
        low = max(math.ceil((n - 2 ** (spec.w + 2)) / 4), 1)

        for t in range(low, n // 2 - s):

            terms.append((t, s))

    return terms


def count_selfdual(params):
    """
    N(2^k) for g = sqrt(alpha) x^s together with a table of every
    N(2^k, t, s), each from the solved system and from the closed formula.

    Returns
    -------
    table : pandas.DataFrame
    total : int
    """

    _require_char2(params)
    q = params.ctx.order
    half = params.n // 2
    rows = []

    for t, s in census_terms(params):

        system = build_M(params, t)
        solution = solve_h_system(params, system)
        count = solution.count(q)
        formula = q ** math.ceil((half - t + 1) / 2) if t else 0
        diagnostics = []

        if count != formula:

            diagnostics.append(f"solved count {count} != formula {formula}")

        if system.nullity != math.ceil((half - t + 1) / 2):

            diagnostics.append(f"nullity {system.nullity} differs from "
                               "ceil((2^(k-1) - t + 1)/2)")

        for note in diagnostics:

            logger.warning("k=%d t=%d s=%d: %s", params.k, t, s, note)

        rows.append({"k": params.k, "t": t, "s": s,
                     "w": MonomialSpec(params.k, s).w, "dim": system.dim,
                     "rank": system.rank, "nullity": system.nullity,
                     "alt_rank": system.alt_rank,
                     "consistent": solution.consistent, "count": count,
                     "formula": formula,
                     "diagnostics": "; ".join(diagnostics)})

    columns = ["k", "t", "s", "w", "dim", "rank", "nullity", "alt_rank",
               "consistent", "count", "formula", "diagnostics"]
    table = pd.DataFrame(rows, columns=columns)

    return table, int(table["count"].sum())


def enumerate_monomial(params):
    """Every self-dual Ideal(k, t, sqrt(alpha) x^s, h)."""

    forms = []

    for t, s in census_terms(params):

        solution = solve_h_system(params, build_M(params, t))

        for h in solutions_for(params, solution):

            forms.append(SelfDualForm(params.k, t, monomial_g(params, s), h))

    return forms


"""
Degree two exceptions and the ideal outside class C.
"""


def degree2_families(params):
    """
    The self-dual codes with c = 3 and deg(g) = 2 that are not monomial:
    for k = 3 (t = 1)
        g = r + beta (x+1)^2, h_0 = alpha + r beta + beta^2, beta not in {0, r}
        g = r x + beta (x+1)^2, h_0 = beta^2 + alpha, beta != 0
    and for k >= 4 (t = 2^{k-1} - 3)
        g = r + beta (x+1)^2, h_0 = r beta + beta^2, beta not in {0, r}
        g = r x + beta (x+1)^2, h_0 = beta^2, beta != 0
    with r = sqrt(alpha) and h_1, h_2 free.
    """

    _require_char2(params)

    if params.k < 3:

        return []

    GF = params.GF
    alpha = params.alpha_elem
    root = params.ctx.sqrt_char2(alpha)
    t = params.n // 2 - 3
    labels = ("i", "ii") if params.k == 3 else ("iii", "iv")
    members = []

    for beta in GF.elements:

        if beta == 0:

            continue

        plain = [root, 0, beta]
        linear = [root, root, beta]

        if params.k == 3:

            h0s = (alpha + root * beta + beta * beta, beta * beta + alpha)

        else:

            h0s = (root * beta + beta * beta, beta * beta)

        choices = []

        if beta != root:

            choices.append((labels[0], plain, h0s[0]))

        choices.append((labels[1], linear, h0s[1]))

        for label, g, h0 in choices:

            for h1, h2 in itertools.product(GF.elements, repeat=2):

                form = SelfDualForm(params.k, t, trim(g), trim([h0, h1, h2]))
                members.append(FamilyMember(label, int(beta), form))

    return members


def outside_C_selfdual(params):
    """<<u (x+1)^{2^{k-1}}, u^2>> as a triple."""

    _require_char2(params)
    n = params.n

    return code_core.GeneratorTriple.build(n, 0, (), n // 2, (), 0, ())


"""
Definitional scans and reconciliation.
"""


def profile_selfdual_scan(params, budget=oracle.DEFAULT_BUDGET * 10):
    """
    Self-dual ideals found by checking C = C-perp on every consistent triple
    with torsion profile (a, 2^{k-1}, 2^k - a), the only profiles a
    self-dual code can have.
    """

    _require_char2(params)
    started = time.time()
    n = params.n
    half = n // 2
    q = params.ctx.order
    candidates = 0

    for a in range(half, n + 1):

        c = n - a
        units = 1 + sum((q - 1) * q ** (half - t - 1) for t in range(half))
        candidates += (units if a < n else 1) * q ** (2 * c)

    if candidates > budget:

        raise BudgetExceeded(f"{candidates} candidate triples exceed the "
                             f"budget {budget}")

    found = []

    for a in range(half, n + 1):

        c = n - a
        gts = [(0, ())]

        if a < n:

            gts += [(t, g) for t in range(half)
                    for g in itertools.product(range(q), repeat=half - t)
                    if g[0] != 0]

        hs = list(itertools.product(range(q), repeat=c)) if a < n else [()]
        rs = list(itertools.product(range(q), repeat=c))

        for (t, g), h, r in itertools.product(gts, hs, rs):

            tr = code_core.GeneratorTriple.build(a, t, g, half, r, c, h)

            if code_core.validate_triple(params, tr):

                continue

            basis = code_core.span(params, tr)

            if code_core.triple_from_basis(basis) != tr:

                continue

            if oracle.is_selfdual(basis):

                found.append(tr)

    logger.info("profile scan: %d self-dual codes among %d candidates in "
                "%.1f s", len(found), candidates, time.time() - started)

    return found


def definitional_selfduals(params, budget=oracle.DEFAULT_BUDGET):
    """
    Self-dual triples by the definition: full lattice enumeration when |S|
    fits the budget, the profile scan otherwise.
    """

    try:

        ideals = oracle.brute_selfdual_scan(params, budget)

        return "lattice", [code_core.triple_from_basis(b) for b in ideals]

    except BudgetExceeded:

        logger.info("lattice too large, falling back to the profile scan")

        return "profile", profile_selfdual_scan(params)


def reconcile_selfdual(params, budget=oracle.DEFAULT_BUDGET):
    """
    Compare the definitional self-dual codes with the monomial census, the
    degree two families and the ideal outside class C. Codes the formulas
    do not cover are reported, not rejected.
    """

    _require_char2(params)
    scan, found = definitional_selfduals(params, budget)
    monomial = {form.triple(params) for form in enumerate_monomial(params)}
    families = {member.form.triple(params)
                for member in degree2_families(params)}
    outside = {outside_C_selfdual(params)}
    predicted = monomial | families | outside
    found_set = set(found)
    report = Reconciliation(scan, len(found_set), len(monomial),
                            len(families), len(outside))
    report.surplus = sorted(found_set - predicted, key=str)
    report.missing = sorted(predicted - found_set, key=str)

    if report.surplus:

        logger.warning("%d self-dual codes outside the monomial census and "
                       "the degree two families", len(report.surplus))

    if report.missing:

        logger.warning("%d predicted codes fail the definitional check",
                       len(report.missing))

    return report
