"""The named verification scenarios.

Each scenario re-derives one finite claim from first principles and
compares the result with the published value, producing a structured
report.  Scenarios are pure and deterministic; expensive intermediates
(the symbolic rigidity derivation, the diagonal rows) are cached and
shared.  A scenario that needs a published value states it under the
provenance tag "published"; values frozen from an independent oracle of
this package carry "derived".
"""

from __future__ import annotations

import time
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import cgdata, deformation
from .curvelocal import (ChartGerm, branch_locus, classify,
                         infinitely_near_multiplicity,
                         intersection_multiplicity, multiplicity_at)
from .deformation import F49
from .linalg import LinearSystem, rank, rowspace_equal, solve_affine
from .linser import (PassThrough, TangentDirection, distinct_fiber_counts,
                     series_dimension, split_sections_vanishing)
from .picard import (DivisorClass, Lattice, blowup, double_cover_stats,
                     gram_determinant, intersect, quadric_lattice, signature,
                     verify_class_relation)
from .poly import MPoly, VarRegistry, parse_poly
from .report import VerificationReport
from .rings import Element, PrimeField, ZMod, hensel_lift

F7 = PrimeField(cgdata.PRIME)
Z343 = ZMod(cgdata.PRIME, 3)

_BE = VarRegistry(("be",))


# ----------------------------------------------------------------------
# shared construction helpers


def coefficient_value(name: str, ring, r: Element) -> Element:
    c0, c1, c2 = cgdata.COEFF_POLYS[name]
    return (ring.from_int(c0) + ring.from_int(c1) * r
            + ring.from_int(c2) * r * r)


def build_quintic(ring, r: Element) -> MPoly:
    """The quintic family member at parameter r, over the given ring."""
    values = {n: coefficient_value(n, ring, r) for n in cgdata.COEFF_POLYS}
    out = MPoly.zero(cgdata.XYZT, ring)
    for multiplier_text, orbit_text in cgdata.QUINTIC_ORBITS:
        factor = ring.one()
        for piece in multiplier_text.split("*"):
            factor = factor * (values[piece] if piece in values
                               else ring.from_int(int(piece)))
        out = out + parse_poly(orbit_text, cgdata.XYZT, ring).scale(factor)
    return out


@lru_cache(maxsize=None)
def degeneration_forms(ring_key: str):
    ring = {"F7": F7, "Z343": Z343}[ring_key]
    return tuple(parse_poly(t, cgdata.XYZT, ring)
                 for t in (cgdata.F1, cgdata.F2, cgdata.F3, cgdata.F5))


def restrict_to_quadric(p: MPoly, ring) -> MPoly:
    """Pull a form in x,y,z,t back along the quadric parametrization."""
    sub = {name: parse_poly(text, cgdata.AB, ring)
           for name, text in cgdata.QUADRIC_PARAM.items()}
    out = MPoly.zero(cgdata.AB, ring)
    cache: dict[tuple[int, ...], MPoly] = {}
    for exps, coeff in p.terms.items():
        if exps not in cache:
            term = MPoly.constant(cgdata.AB, ring.one())
            for name, e in zip(cgdata.XYZT.names, exps):
                if e:
                    term = term * sub[name] ** e
            cache[exps] = term
        out = out + cache[exps].scale(coeff)
    return out


def unit_match(p: MPoly, target: MPoly) -> Element | None:
    """The unit u with p = u * target, fixed from the leading monomial of
    the target and then verified everywhere; None if no unit works."""
    for exps, c in target.sorted_terms():
        cp = p.terms.get(exps)
        if cp is None:
            return None
        u = cp * c.inverse()
        return u if (target.scale(u) - p).is_zero() else None
    return None


@lru_cache(maxsize=None)
def curve_pair(ring_key: str) -> tuple[MPoly, MPoly]:
    ring = {"F7": F7, "F49": F49}[ring_key]
    return (parse_poly(cgdata.G1, cgdata.AB, ring),
            parse_poly(cgdata.G2, cgdata.AB, ring))


def delta_restrict(g: MPoly) -> MPoly:
    """Restriction to the diagonal with denominators cleared: substitute
    the first-factor pair (1-be, 1+be) at be' = 1; univariate in be."""
    ring = g.ring
    sub = {
        "al": parse_poly(cgdata.DELTA_NUMERATOR, cgdata.AB, ring),
        "al'": parse_poly(cgdata.DELTA_DENOMINATOR, cgdata.AB, ring),
        "be'": MPoly.constant(cgdata.AB, ring.one()),
    }
    restricted = g.substitute(sub)
    terms = {}
    for exps, c in restricted.terms.items():
        assert exps[0] == exps[1] == exps[3] == 0
        terms[(exps[2],)] = c
    return MPoly(_BE, ring, terms)


def chart_germ(g: MPoly, chart: int) -> ChartGerm:
    """The germ of a bidegree form at a chart origin."""
    u, v = cgdata.CHARTS[chart]
    ring = g.ring
    one = MPoly.constant(cgdata.AB, ring.one())
    fixed = {n: one for n in cgdata.AB.names if n not in (u, v)}
    return ChartGerm(f"chart{chart}", g.substitute(fixed), (u, v))


def q_point(k: int) -> tuple[Element, Element]:
    (are, aim), (bre, bim) = cgdata.Q_POINTS[k]
    return (F49.element((are % 7, aim % 7)), F49.element((bre % 7, bim % 7)))


def translated_germ(g: MPoly, alpha: Element, beta: Element) -> ChartGerm:
    """Germ of g at an affine point of chart 4, moved to the origin."""
    affine = g.substitute({
        "al'": MPoly.constant(cgdata.AB, g.ring.one()),
        "be'": MPoly.constant(cgdata.AB, g.ring.one()),
    })
    moved = affine.translate({"al": alpha, "be": beta})
    return ChartGerm("chart4", moved, ("al", "be"))


_S = VarRegistry(("s",))


def fiber_param(ring):
    """Parametrize the fiber through a translated germ's origin: the
    first local coordinate moves, the second stays at zero."""
    s = MPoly.variable(_S, ring, "s")
    return (s, MPoly.zero(_S, ring))


def diagonal_param(beta0: Element, order: int = 12):
    """Series parametrization of the diagonal through (alpha0, beta0),
    in coordinates already translated so the point is the origin."""
    one = F49.one()
    u = one + beta0
    uinv = u.inverse()
    s = MPoly.variable(_S, F49, "s")
    inv_series = MPoly.zero(_S, F49)
    for k in range(order + 1):
        inv_series = inv_series + MPoly(_S, F49,
                                        {(k,): uinv * ((-uinv) ** k)})
    alpha0 = (one - beta0) * uinv
    numerator = MPoly.constant(_S, one - beta0) - s
    alpha_s = (numerator * inv_series).truncate("s", order) \
        - MPoly.constant(_S, alpha0)
    return (alpha_s, s)


# ----------------------------------------------------------------------
# scenario: expansion


def scenario_expansion() -> VerificationReport:
    rep = VerificationReport(
        "expansion",
        citation=("7-adic expansion of the quintic at the lifted root: "
                  "plane * quadric^2 plus 7- and 49-correction terms, "
                  "exactly modulo 343"))
    root = hensel_lift(cgdata.CUBIC_COEFFS, cgdata.PRIME,
                       cgdata.SIMPLE_ROOT_MOD_P, 3)
    rep.check("root mod 7^3", root, 143)
    r = Z343.from_int(root)
    quintic = build_quintic(Z343, r)
    f1, f2, f3, f5 = degeneration_forms("Z343")
    target = (f1 * f2 * f2 + f2.scale(Z343.from_int(7)) * f3
              + f5.scale(Z343.from_int(49)))

    lam = None
    matched = None
    for exps, cq in quintic.sorted_terms():
        if cq.payload % cgdata.PRIME != 0:
            matched = dict(zip(cgdata.XYZT.names, exps))
            lam = target.terms.get(exps, Z343.zero()) * cq.inverse()
            break
    rep.note(f"unit fixed at monomial {matched} (unit = {lam!r})")
    if not rep.require("a unit scalar exists", lam is not None):
        return rep
    rep.check("unit * quintic equals the expansion mod 343",
              (quintic.scale(lam) - target).is_zero(), True)
    rep.check("matching unit", str(lam), "1", tag="derived")

    # modulo 7 the family degenerates to plane * quadric^2
    q7 = build_quintic(F7, F7.from_int(cgdata.SIMPLE_ROOT_MOD_P))
    f1_7, f2_7, _, _ = degeneration_forms("F7")
    lam7 = unit_match(q7, f1_7 * f2_7 * f2_7)
    rep.check("mod 7 fiber is unit * plane * quadric^2",
              lam7 is not None, True)

    # sensitivity control: a unit perturbation of one 49-level coefficient
    # must break the congruence
    bump = next(iter(f5.terms))
    f5_bad = f5 + MPoly(cgdata.XYZT, Z343, {bump: Z343.one()})
    bad_target = (f1 * f2 * f2 + f2.scale(Z343.from_int(7)) * f3
                  + f5_bad.scale(Z343.from_int(49)))
    rep.require("negative control: perturbed correction term fails",
                not (quintic.scale(lam) - bad_target).is_zero(),
                "perturbing one coefficient went undetected")
    return rep


# ----------------------------------------------------------------------
# scenario: branch


def scenario_branch() -> VerificationReport:
    rep = VerificationReport(
        "branch",
        citation=("on the quadric, the doubled-fiber discriminant "
                  "splits as the product of the two bidegree-(3,3) "
                  "branch curves"))
    f1, _, f3, f5 = degeneration_forms("F7")
    four = MPoly.constant(cgdata.XYZT, F7.from_int(4))
    section = f3 * f3 - four * f1 * f5
    restricted = restrict_to_quadric(section, F7)
    g1, g2 = curve_pair("F7")
    u = unit_match(restricted, g1 * g2)
    rep.require("discriminant section restricts to unit * g1 * g2",
                u is not None)
    rep.note(f"splitting unit: {u!r}")

    b1 = restrict_to_quadric(parse_poly(cgdata.B1_SECTION, cgdata.XYZT, F7), F7)
    b2 = restrict_to_quadric(parse_poly(cgdata.B2_SECTION, cgdata.XYZT, F7), F7)
    rep.require("first cubic section restricts to unit * g1",
                unit_match(b1, g1) is not None)
    rep.require("second cubic section restricts to unit * g2",
                unit_match(b2, g2) is not None)

    # the middle form vanishes on the diagonal exactly at the six
    # intersection points, once each
    f3_delta = delta_restrict(restrict_to_quadric(f3, F7))
    target = parse_poly(cgdata.F3_ON_DELTA, _BE, F7)
    rep.require("middle form on the diagonal matches the six-point divisor",
                unit_match(f3_delta, target) is not None)

    # symmetry control: the product is insensitive to swapping the factors
    rep.require("swapping the two curve factors preserves the identity",
                unit_match(restricted, g2 * g1) is not None)
    return rep


# ----------------------------------------------------------------------
# scenario: delta


def conjugate_point(pt: tuple[Element, Element]) -> tuple[Element, Element]:
    return (F49.conjugate(pt[0]), F49.conjugate(pt[1]))


def scenario_delta() -> VerificationReport:
    rep = VerificationReport(
        "delta",
        citation=("diagonal restrictions of the branch curves factor as "
                  "(be^2+1) times the square of an irreducible quadratic; "
                  "the six intersection points match the published list"))
    # the diagonal is the plane section of the quadric: its chart-4
    # equation must be the restriction of the linear form
    f1, _, _, _ = degeneration_forms("F7")
    one = MPoly.constant(cgdata.AB, F7.one())
    f1_chart4 = restrict_to_quadric(f1, F7).substitute(
        {"al'": one, "be'": one})
    chart_eq = parse_poly(cgdata.DELTA_CHART4, cgdata.AB, F7)
    rep.require("diagonal chart equation is the plane restricted to the "
                "quadric", unit_match(f1_chart4, chart_eq) is not None)

    g1, g2 = curve_pair("F7")
    d1 = delta_restrict(g1)
    d2 = delta_restrict(g2)
    t1 = parse_poly(cgdata.G1_ON_DELTA, _BE, F7)
    t2 = parse_poly(cgdata.G2_ON_DELTA, _BE, F7)
    rep.require("first curve on the diagonal factors as published",
                unit_match(d1, t1) is not None)
    rep.require("second curve on the diagonal factors as published",
                unit_match(d2, t2) is not None)

    # the root set over GF(49), with the diagonal's alpha-coordinates,
    # must match the published six points up to one global conjugation
    computed = set()
    d1_49 = d1.change_ring(F49)
    d2_49 = d2.change_ring(F49)
    one = F49.one()
    for x in F49.all_elements():
        on1 = d1_49.evaluate({"be": x}).is_zero()
        on2 = d2_49.evaluate({"be": x}).is_zero()
        if on1 or on2:
            alpha = (one - x) * (one + x).inverse()
            computed.add(((alpha.payload), (x.payload)))
    published = {tuple((c.payload) for c in q_point(k)) for k in range(1, 7)}
    conjugated = set()
    for k in range(1, 7):
        a, b = (conjugate_point(q_point(k)))
        conjugated.add((a.payload, b.payload))
    if computed == published:
        rep.note("point identification: direct labeling matched")
        rep.check("six diagonal points match the published list", True, True)
    elif computed == conjugated:
        rep.note("point identification: matched after one global conjugation")
        rep.check("six diagonal points match the published list", True, True)
    else:
        rep.check("six diagonal points match the published list", False, True)

    # quadratic factors: no roots over GF(7), two roots over GF(49)
    for label, text in (("first", "be^2+4*be+6"), ("second", "be^2+6*be+6")):
        q7 = parse_poly(text, _BE, F7)
        roots7 = sum(1 for v in range(7)
                     if q7.evaluate({"be": F7.from_int(v)}).is_zero())
        q49 = parse_poly(text, _BE, F49)
        roots49 = sum(1 for x in F49.all_elements()
                      if q49.evaluate({"be": x}).is_zero())
        rep.check(f"{label} quadratic: roots over GF(7)", roots7, 0,
                  tag="derived")
        rep.check(f"{label} quadratic: roots over GF(49)", roots49, 2,
                  tag="derived")
    return rep


# ----------------------------------------------------------------------
# scenario: singularities


def _horner_eval(table, a, b):
    """Evaluate a coefficient table at GF(49) points given as int pairs."""
    acc = (0, 0)
    for row in reversed(table):
        inner = (0, 0)
        for pay in reversed(row):
            inner = ((inner[0] * b[0] - inner[1] * b[1] + pay[0]) % 7,
                     (inner[0] * b[1] + inner[1] * b[0] + pay[1]) % 7)
        acc = ((acc[0] * a[0] - acc[1] * a[1] + inner[0]) % 7,
               (acc[0] * a[1] + acc[1] * a[0] + inner[1]) % 7)
    return acc


@lru_cache(maxsize=None)
def rational_singular_points() -> frozenset:
    """All GF(49)-rational singular points of the curve union, scanned
    exhaustively over the four charts; canonical projective labels."""
    g1, g2 = curve_pair("F49")
    product = g1 * g2
    found = set()
    for chart in (1, 2, 3, 4):
        u, v = cgdata.CHARTS[chart]
        germ = chart_germ(product, chart)
        tables = [_chart_tables(germ.poly, chart)]
        for name in (u, v):
            tables.append(_chart_tables(germ.poly.partial_derivative(name),
                                        chart))
        els = [(a, b) for a in range(7) for b in range(7)]
        for pa in els:
            for pb in els:
                if all(_horner_eval(t, pa, pb) == (0, 0) for t in tables):
                    found.add(_projective_label(chart, pa, pb))
    return frozenset(found)


def _chart_tables(poly: MPoly, chart: int):
    u, v = cgdata.CHARTS[chart]
    iu, iv = cgdata.AB.index[u], cgdata.AB.index[v]
    if poly.is_zero():
        return [[(0, 0)]]
    du = max(e[iu] for e in poly.terms)
    dv = max(e[iv] for e in poly.terms)
    table = [[(0, 0)] * (dv + 1) for _ in range(du + 1)]
    for exps, c in poly.terms.items():
        pay = c.payload if isinstance(c.payload, tuple) else (c.payload, 0)
        table[exps[iu]][exps[iv]] = pay
    return table


def _inv49(p):
    n = (p[0] * p[0] + p[1] * p[1]) % 7
    ninv = pow(n, -1, 7)
    return ((p[0] * ninv) % 7, (-p[1] * ninv) % 7)


def _mul49(p, q):
    return ((p[0] * q[0] - p[1] * q[1]) % 7, (p[0] * q[1] + p[1] * q[0]) % 7)


def _projective_label(chart: int, pa, pb):
    """Projective coordinates ((a0,a1),(b0,b1)) normalized canonically."""
    # chart coordinate conventions: the local pair is listed in cgdata
    u, v = cgdata.CHARTS[chart]
    first = {"al": (pa, (1, 0)), "al'": ((1, 0), pa)}[u]
    second = {"be": (pb, (1, 0)), "be'": ((1, 0), pb)}[v]

    def normalize(pair):
        p0, p1 = pair
        if p1 != (0, 0):
            return ("affine", _mul49(p0, _inv49(p1)))
        return ("infinity", (1, 0))
    return (normalize(first), normalize(second))


def scenario_singularities() -> VerificationReport:
    rep = VerificationReport(
        "singularities",
        citation=("the eight first-order rigidity conditions hold "
                  "verbatim for the undeformed pair; the two transverse "
                  "diagonal points are nodes of the union"))
    from .curvelocal import _divide_by_linear
    g1, g2 = curve_pair("F49")
    partner = {1: g2, 2: g1, 3: g1, 4: g2}
    own = {1: g1, 2: g2, 3: g2, 4: g1}
    double_for = {1: "first", 4: "first", 2: "second", 3: "second"}

    for chart in (1, 2, 3, 4):
        u, v = cgdata.CHARTS[chart]
        for label, g in (("first", g1), ("second", g2)):
            germ = chart_germ(g, chart)
            rep.require(
                f"{label} curve passes through chart-{chart} origin",
                germ.poly.coefficient({}).is_zero())
        germ = chart_germ(own[chart], chart)
        pgerm = chart_germ(partner[chart], chart)
        rep.require(
            f"double curve is singular at chart-{chart} origin",
            germ.poly.graded_part(1, (u, v)).is_zero())
        cone = germ.poly.graded_part(2, (u, v))
        line = pgerm.poly.graded_part(1, (u, v))
        lam = unit_match(cone, line * line)
        rep.require(
            f"chart {chart}: tangent cone is a scale of the partner "
            f"line squared", lam is not None)
        if lam is not None:
            rep.note(f"chart {chart}: cone scale {lam!r} "
                     f"({double_for[chart]} curve)")
        cubic = germ.poly.graded_part(3, (u, v))
        rep.require(
            f"chart {chart}: cubic part divisible by the tangent line",
            cubic.is_zero() or _divide_by_linear(cubic, line, u, v) is not None)
        verdict = classify(germ)
        rep.check(f"chart {chart}: double-point classification",
                  verdict.kind, "tacnode_or_degeneration", tag="derived")

    product = g1 * g2
    for k in (1, 2):
        alpha, beta = q_point(k)
        verdict = classify(translated_germ(product, alpha, beta))
        rep.check(f"union at transverse point {k}", verdict.kind, "node")

    # multiplicity profile of the first curve across the chart origins
    profile = tuple(multiplicity_at(chart_germ(g1, chart))
                    for chart in (1, 2, 3, 4))
    rep.check("first-curve multiplicities at the four origins",
              list(profile), [2, 1, 1, 2], tag="derived")

    # exhaustive rational-point smoothness scan: the union is singular
    # only at the four origins and the two transverse diagonal points
    sing = rational_singular_points()
    rep.check("rational singular points of the union", len(sing), 6,
              tag="derived")
    rep.note("smoothness over the algebraic closure at non-rational "
             "points is certified only through the rational scan and the "
             "local analysis at the six singular points; recorded as a "
             "partial check")
    return rep


# ----------------------------------------------------------------------
# scenario: deform-derive


@lru_cache(maxsize=None)
def derived_system_cached(skip_cubic: bool = False):
    return deformation.derive_rigidity_system(skip_cubic)


def _published_system_28() -> LinearSystem:
    rows = deformation.rows_from_texts(cgdata.PUBLISHED_28,
                                       cgdata.MAIN_UNKNOWNS)
    zero = F49.zero()
    return LinearSystem(cgdata.MAIN_UNKNOWNS, rows, [zero] * len(rows), F49)


def _elimination_system_28() -> LinearSystem:
    texts = tuple(f"{var}-({text})" for var, text
                  in cgdata.PUBLISHED_SUBSTITUTIONS.items()) \
        + cgdata.LEFTOVER_RELATIONS
    rows = deformation.rows_from_texts(texts, cgdata.MAIN_UNKNOWNS)
    zero = F49.zero()
    return LinearSystem(cgdata.MAIN_UNKNOWNS, rows, [zero] * len(rows), F49)


def scenario_deform_derive() -> VerificationReport:
    rep = VerificationReport(
        "deform-derive",
        citation=("the machine-derived first-order rigidity system "
                  "coincides with the published 28-equation display; "
                  "diagonal constraint rows rebuilt two independent ways"))
    derived = derived_system_cached(False)
    rep.require("all order-zero identities hold for the undeformed pair",
                derived.classical_ok)
    rep.check("derived system rank", derived.rank, 28, tag="derived")
    published = _published_system_28()
    rep.check("derived row space equals the published 28-equation display",
              rowspace_equal(derived.system, published), True)

    elimination = _elimination_system_28()
    elim_equal = rowspace_equal(derived.system, elimination)
    rep.computed["published elimination list matches derived relations"] = \
        elim_equal
    rep.provenance["published elimination list matches derived relations"] = \
        "derived"
    if not elim_equal:
        dr = rank(derived.system.rows, F49)
        sub_items = list(cgdata.PUBLISHED_SUBSTITUTIONS)
        labels = []
        for k, row in enumerate(elimination.rows):
            if rank(derived.system.rows + [row], F49) != dr:
                if k < len(sub_items):
                    labels.append(f"elimination of {sub_items[k]}")
                else:
                    labels.append("leftover "
                                  + cgdata.LEFTOVER_RELATIONS[k - len(sub_items)])
        rep.computed["rows outside the derived span"] = labels
        rep.provenance["rows outside the derived span"] = "derived"
        rep.flag("published elimination list disagrees with the derived "
                 f"relations at: {', '.join(labels)}; the published "
                 "28-equation display is the consistent one")
        # the discrepancy is load-bearing for one published system
        feasible = _corrected_system_feasible("system-I5")
        rep.computed["fifth system feasible under corrected relations"] = \
            feasible
        rep.provenance["fifth system feasible under corrected relations"] = \
            "derived"
        if not feasible:
            rep.flag("under the corrected relations the fifth published "
                     "system normalization becomes infeasible; its "
                     "published feasibility rests on the discrepant "
                     "elimination row")

    # diagonal rows: the cleared-denominator construction must agree with
    # direct evaluation of the coefficient cloud at each point ...
    drows = deformation.diagonal_rows()
    direct = _direct_value_rows()
    for name, curve, k in (("B1Q1", "1", 1), ("B1Q2", "1", 2),
                           ("B2Q1", "2", 1), ("B2Q2", "2", 2),
                           ("B1Q3", "1", 3), ("B1Q4", "1", 4),
                           ("B2Q5", "2", 5), ("B2Q6", "2", 6)):
        scale = (F49.one() + deformation.q_beta(k)) ** 3
        same = all((a - scale * b).is_zero()
                   for a, b in zip(drows[name], direct[f"val{curve}@{k}"]))
        rep.require(f"{name}: cleared row is the unit multiple of the "
                    f"direct evaluation row", same)
    # ... and the derivative rows must agree with the chain-rule route
    chain = _chain_rule_rows()
    for name in ("dB1Q3", "dB1Q4", "dB2Q5", "dB2Q6"):
        same = all((a - b).is_zero()
                   for a, b in zip(drows[name], chain[name]))
        rep.require(f"{name}: derivative row matches the chain-rule "
                    f"construction", same)

    # sensitivity control: dropping the cubic-divisibility condition
    # must strictly shrink the row space
    weakened = derived_system_cached(True)
    rep.check("negative control: weakened derivation rank",
              weakened.rank, 26, tag="derived")
    rep.require("negative control: dropped condition detected",
                not rowspace_equal(weakened.system, published),
                "weakened system unexpectedly matches the published one")
    return rep


def _corrected_system_feasible(system_id: str) -> bool:
    """Feasibility of a published system when the 28 corrected relations
    replace the published elimination list (40-unknown computation)."""
    spec = next(s for s in cgdata.SYSTEM_SPECS if s[0] == system_id)
    _, zero_rows, unit_rows, _, _ = spec
    derived = derived_system_cached(False)
    drows = deformation.diagonal_rows()
    zero, one = F49.zero(), F49.one()
    rows = [list(r) for r in derived.system.rows]
    rhs = [zero] * len(rows)
    for name in zero_rows:
        rows.append(drows[name])
        rhs.append(zero)
    for name in unit_rows:
        rows.append(drows[name])
        rhs.append(one)
    sol = solve_affine(LinearSystem(cgdata.MAIN_UNKNOWNS, rows, rhs, F49))
    return sol.is_consistent()


@lru_cache(maxsize=None)
def _direct_value_rows() -> dict[str, list[Element]]:
    """First-principles value rows: the two coefficient clouds evaluated
    at the six points' affine coordinates."""
    reg = deformation._AFFINE
    out = {}
    for tag, prefix in (("1", "a"), ("2", "b")):
        cloud = parse_poly("+".join(f"{prefix}{i}{j}*y^{i}*x^{j}"
                                    for i in range(4) for j in range(4)),
                           reg, F49)
        for k in range(1, 7):
            alpha, beta = q_point(k)
            sub = {"y": MPoly.constant(reg, alpha),
                   "x": MPoly.constant(reg, beta)}
            out[f"val{tag}@{k}"] = deformation._row_of_linear_form(
                cloud.substitute(sub), reg, cgdata.MAIN_UNKNOWNS)
    return out


@lru_cache(maxsize=None)
def _chain_rule_rows() -> dict[str, list[Element]]:
    """Derivative rows rebuilt by the product/chain rule on
    (1+be)^3 * cloud(alpha(be), be) instead of differentiating the
    cleared polynomial: an independent construction path."""
    reg = deformation._AFFINE
    out = {}
    one = F49.one()
    for tag, prefix, points in (("1", "a", (3, 4)), ("2", "b", (5, 6))):
        cloud = parse_poly("+".join(f"{prefix}{i}{j}*y^{i}*x^{j}"
                                    for i in range(4) for j in range(4)),
                           reg, F49)
        d_alpha = cloud.partial_derivative("y")
        d_beta = cloud.partial_derivative("x")
        for k in points:
            beta = deformation.q_beta(k)
            alpha = (one - beta) * (one + beta).inverse()
            sub = {"y": MPoly.constant(reg, alpha),
                   "x": MPoly.constant(reg, beta)}
            u = one + beta
            row_val = deformation._row_of_linear_form(
                cloud.substitute(sub), reg, cgdata.MAIN_UNKNOWNS)
            row_da = deformation._row_of_linear_form(
                d_alpha.substitute(sub), reg, cgdata.MAIN_UNKNOWNS)
            row_db = deformation._row_of_linear_form(
                d_beta.substitute(sub), reg, cgdata.MAIN_UNKNOWNS)
            three_u2 = F49.from_int(3) * u * u
            minus_two_u = F49.from_int(-2) * u
            u3 = u ** 3
            row = [three_u2 * a + minus_two_u * b + u3 * c
                   for a, b, c in zip(row_val, row_da, row_db)]
            out[f"dB{tag}Q{k}"] = row
    return out


# ----------------------------------------------------------------------
# scenarios: the published linear systems


PUBLISHED_GENERATOR_COUNTS = {
    "system-I1": 16, "system-I2": 16, "system-I3": 16, "system-I4": 16,
    "system-I5": 17, "system-I6": 17, "system-I7": 17,
    "system-lefschetz": 11,
}


def make_system_scenario(spec):
    system_id, zero_rows, unit_rows, kind, published_dim = spec

    def run() -> VerificationReport:
        rep = VerificationReport(
            system_id,
            citation=(f"published deformation system ({kind} direction "
                      f"{unit_rows[0]}): consistency over GF(49) and "
                      "essential dimension"))
        rep.check("generator count",
                  len(cgdata.LEFTOVER_RELATIONS) + len(zero_rows)
                  + len(unit_rows),
                  PUBLISHED_GENERATOR_COUNTS[system_id])
        consistent, dim = deformation.solve_published_system(spec)
        rep.check("system is consistent", consistent, True)
        if consistent:
            rep.computed["essential dimension"] = dim
            rep.expected["essential dimension"] = published_dim
            rep.provenance["essential dimension"] = "published"
            if dim != published_dim:
                rep.flag(
                    f"essential dimension over the 19 unknowns is {dim}; "
                    f"the published label {published_dim} counts spectator "
                    "polynomial variables of the original run (its stated "
                    "correction accounts for one of the two)")
        return rep

    return run


def scenario_lefschetz() -> VerificationReport:
    spec = cgdata.LEFSCHETZ_SPEC
    system_id, zero_rows, unit_rows, kind, published_dim = spec
    rep = VerificationReport(
        system_id,
        citation=("flex-destroying deformation system: keep the two "
                  "transverse points, rotate the first curve off its "
                  "doubled fiber contacts"))
    rep.check("generator count",
              len(cgdata.LEFTOVER_RELATIONS) + len(zero_rows)
              + len(unit_rows),
              PUBLISHED_GENERATOR_COUNTS[system_id])
    consistent, dim = deformation.solve_published_system(spec)
    rep.check("system is consistent", consistent, True)
    if consistent:
        rep.computed["essential dimension"] = dim
        rep.expected["essential dimension"] = published_dim
        rep.provenance["essential dimension"] = "published"
        if dim != published_dim:
            rep.flag(
                f"essential dimension over the 19 unknowns is {dim}; the "
                f"published label {published_dim} counts spectator "
                "variables (and a parameter entangled in the published "
                "derivative rows)")
        rep.note("derivative rows imposed at the points themselves "
                 "(value of the fiber-direction derivative), the reading "
                 "under which consistency certifies a flex-destroying "
                 "first-order deformation")
    return rep


# ----------------------------------------------------------------------
# scenario: basis-count


def scenario_basis_count() -> VerificationReport:
    rep = VerificationReport(
        "basis-count",
        citation=("the seven published deformation systems realize the "
                  "seven-dimensional obstruction basis: three move one "
                  "tangency point off the diagonal, four rotate one "
                  "tangency direction"))
    specs = cgdata.SYSTEM_SPECS
    rep.check("number of systems", len(specs), 7)
    signatures = {(s[1], s[2]) for s in specs}
    rep.check("systems pairwise distinct", len(signatures), 7,
              tag="definitional")
    point_moving = [s for s in specs if s[3] == "point-moving"]
    tangency = [s for s in specs if s[3] == "tangency"]
    rep.check("point-moving systems", len(point_moving), 3)
    rep.check("tangency systems", len(tangency), 4)
    for s in point_moving:
        rep.require(f"{s[0]}: single unit row of value type",
                    len(s[2]) == 1 and not s[2][0].startswith("d"))
    for s in tangency:
        rep.require(f"{s[0]}: single unit row of derivative type",
                    len(s[2]) == 1 and s[2][0].startswith("d"))
    expected_units = {("B1Q4",), ("B2Q5",), ("B2Q6",), ("dB1Q3",),
                      ("dB1Q4",), ("dB2Q5",), ("dB2Q6",)}
    rep.check("unit rows cover the published seven directions",
              sorted(s[2][0] for s in specs),
              sorted(u[0] for u in expected_units))
    return rep


# ----------------------------------------------------------------------
# scenario: ramification


def scenario_ramification() -> VerificationReport:
    rep = VerificationReport(
        "ramification",
        citation=("branch loci of the two curves under both rulings, "
                  "triple contact of the doubled branch fibers, and the "
                  "flex-destroying system's consistency"))
    g1, g2 = curve_pair("F7")
    second_of = {"first": cgdata.SECOND_PAIR, "second": cgdata.FIRST_PAIR}
    moving_of = {"first": cgdata.FIRST_PAIR, "second": cgdata.SECOND_PAIR}

    expectations = {
        ("g1", "first"): "(be^2+be'^2)^2",
        ("g2", "first"): "be^4+4*be^2*be'^2+be'^4",
        ("g2", "second"): "(al^2+al'^2)^2",
        ("g1", "second"): "al^4+4*al^2*al'^2+al'^4",
    }
    curves = {"g1": g1, "g2": g2}
    for (curve, ruling), target_text in expectations.items():
        disc = branch_locus(curves[curve], moving_of[ruling],
                            second_of[ruling])
        target = parse_poly(target_text, cgdata.AB, F7)
        rep.require(f"branch locus of {curve}, {ruling} ruling, is "
                    f"unit * {target_text}", unit_match(disc, target) is not None)

    # the doubled branch points are exactly the transverse diagonal
    # points, each a double root of the discriminant
    i_unit = F49.i()
    disc1 = branch_locus(curve_pair("F49")[0], cgdata.FIRST_PAIR,
                         cgdata.SECOND_PAIR)
    for label, beta in (("+i", i_unit), ("-i", -i_unit)):
        vals = {"be": beta, "be'": F49.one(),
                "al": F49.zero(), "al'": F49.zero()}
        v0 = disc1.evaluate(vals)
        v1 = disc1.partial_derivative("be").evaluate(vals)
        v2 = disc1.partial_derivative("be").partial_derivative("be") \
            .evaluate(vals)
        rep.require(f"discriminant vanishes to order exactly 2 at {label}",
                    v0.is_zero() and v1.is_zero() and not v2.is_zero())

    # flex contacts: the doubled-branch fibers meet the curve with
    # multiplicity three at the transverse points
    g1_49, g2_49 = curve_pair("F49")
    for k in (1, 2):
        alpha, beta = q_point(k)
        germ1 = translated_germ(g1_49, alpha, beta)
        contact = intersection_multiplicity(
            germ1, fiber_param(F49))
        rep.check(f"fiber contact of first curve at transverse point {k}",
                  contact, 3)
    # mirrored statement for the second ruling: roles interchanged
    swapped = _swap_rulings(g2_49)
    for k in (1, 2):
        alpha, beta = q_point(k)
        germ2 = translated_germ(swapped, beta, alpha)
        contact = intersection_multiplicity(germ2, fiber_param(F49))
        rep.check(f"fiber contact of second curve at transverse point {k}, "
                  "second ruling", contact, 3, tag="derived")

    # diagonal contacts: simple at the transverse points, double at the
    # first curve's tangency points
    for k, expected in ((1, 1), (3, 2), (4, 2)):
        alpha, beta = q_point(k)
        germ = translated_germ(g1_49, alpha, beta)
        contact = intersection_multiplicity(germ, diagonal_param(beta),
                                            truncation=10)
        rep.check(f"diagonal contact of first curve at point {k}",
                  contact, expected)

    consistent, _ = deformation.solve_published_system(cgdata.LEFSCHETZ_SPEC)
    rep.check("flex-destroying system is consistent", consistent, True)
    return rep


def _swap_rulings(g: MPoly) -> MPoly:
    """Exchange the two projective factors."""
    ring = g.ring
    sub = {"al": MPoly.variable(cgdata.AB, ring, "be"),
           "al'": MPoly.variable(cgdata.AB, ring, "be'"),
           "be": MPoly.variable(cgdata.AB, ring, "al"),
           "be'": MPoly.variable(cgdata.AB, ring, "al'")}
    return g.substitute(sub)


# ----------------------------------------------------------------------
# scenario: lattice


def _blowup_lattice():
    """The rank-12 lattice: quadric blown up at the two transverse
    diagonal points and twice over each chart origin."""
    lat = quadric_lattice()
    names = ["n1", "n2"] + [x for k in range(1, 5) for x in (f"g{k}", f"e{k}")]
    for name in names:
        lat, _ = blowup(lat, name)
    return lat


def _extended_lattice(lat: Lattice):
    """Continue to rank 20: two infinitely-near blowups over each of the
    four tangency points of the diagonal with the branch curves."""
    for k in range(3, 7):
        lat, _ = blowup(lat, f"c{k}")
        lat, _ = blowup(lat, f"f{k}")
    return lat


def _curve_classes(lat: Lattice):
    """Divisor classes of the configuration, with every multiplicity
    taken from the local curve analysis rather than asserted."""
    g1_49, g2_49 = curve_pair("F49")

    def mult_data(g):
        per_chart = {}
        for chart in (1, 2, 3, 4):
            germ = chart_germ(g, chart)
            m0 = multiplicity_at(germ)
            # the infinitely-near center is the direction of the union's
            # tangent cone, carried by whichever curve is smooth there
            # (the double curve's cone is that same line squared; checked
            # in the singularities scenario)
            m1 = infinitely_near_multiplicity(germ, _cone_direction(chart))
            per_chart[chart] = (m0, m1)
        return per_chart

    m1_data = mult_data(g1_49)
    m2_data = mult_data(g2_49)

    def curve_class(mults):
        coeffs = {"h1": 3, "h2": 3, "n1": -1, "n2": -1}
        for chart, (m0, m1) in mults.items():
            coeffs[f"g{chart}"] = -m0
            coeffs[f"e{chart}"] = -m1
        return lat.cls(coeffs)

    b1 = curve_class(m1_data)
    b2 = curve_class(m2_data)
    rulings = [lat.cls({"h1": 1, "g1": -1, "g2": -1}),
               lat.cls({"h1": 1, "g3": -1, "g4": -1}),
               lat.cls({"h2": 1, "g1": -1, "g3": -1}),
               lat.cls({"h2": 1, "g2": -1, "g4": -1})]
    gbar = [lat.cls({f"g{k}": 1, f"e{k}": -1}) for k in range(1, 5)]
    ebar = [lat.cls({f"e{k}": 1}) for k in range(1, 5)]
    nbar = [lat.cls({"n1": 1}), lat.cls({"n2": 1})]
    return b1, b2, rulings, gbar, ebar, nbar, (m1_data, m2_data)


def scenario_lattice() -> VerificationReport:
    rep = VerificationReport(
        "lattice",
        citation=("divisor-class identities on the blown-up quadric, the "
                  "double-cover invariants of the resolved limit surface, "
                  "and its canonical class as one sixth of a fiber"))
    lat = _blowup_lattice()
    rep.check("rank after the ten blowups", lat.rank, 12)
    rep.check("intersection form unimodular",
              int(abs(gram_determinant(lat))), 1, tag="definitional")
    rep.check("signature", list(signature(lat)), [1, 11],
              tag="definitional")

    b1, b2, rulings, gbar, ebar, nbar, mults = _curve_classes(lat)
    rep.check("first-curve multiplicity pattern",
              {str(k): list(v) for k, v in mults[0].items()},
              {"1": [2, 2], "2": [1, 1], "3": [1, 1], "4": [2, 2]},
              tag="derived")

    sigma_11 = lat.cls({"h1": 1, "h2": 1})
    sum_g = sum(gbar[1:], gbar[0])
    sum_e = sum(ebar[1:], ebar[0])
    sum_rulings = sum(rulings[1:], rulings[0])
    two_n = 2 * nbar[0] + 2 * nbar[1]

    fiber = b1 + b2 + two_n
    rep.check("triple-fiber relation (ruling form)",
              verify_class_relation(fiber, 3 * (sum_rulings + sum_g)), True)
    rep.check("triple-fiber relation (pullback form)",
              verify_class_relation(
                  fiber, 6 * sigma_11 - 3 * sum_g - 6 * sum_e), True)
    rep.note("validated encoding: first-level exceptional symbols are "
             "proper transforms, second-level are total classes")

    branch = b1 + b2 + sum_g
    bundle = lat.cls({"h1": 3, "h2": 3, "n1": -1, "n2": -1,
                      "g1": -1, "g2": -1, "g3": -1, "g4": -1,
                      "e1": -2, "e2": -2, "e3": -2, "e4": -2})
    rep.check("branch relation: branch curve is twice the bundle",
              verify_class_relation(
                  branch,
                  2 * (3 * sigma_11 - nbar[0] - nbar[1] - 3 * sum_e - sum_g)),
              True)
    rep.check("bundle class consistent", verify_class_relation(
        branch, 2 * bundle), True, tag="definitional")

    K = lat.canonical
    twist = -2 * sigma_11 + nbar[0] + nbar[1] + sum_g + 2 * sum_e
    rep.check("duality twist equals the canonical class",
              verify_class_relation(twist, K), True, tag="derived")
    rep.computed["first curve . twist"] = str(intersect(b1, twist))
    rep.computed["second curve . twist"] = str(intersect(b2, twist))
    rep.expected["first curve . twist"] = "-4"
    rep.expected["second curve . twist"] = "-4"
    rep.provenance["first curve . twist"] = "published"
    rep.provenance["second curve . twist"] = "published"
    if intersect(b1, twist) != -4 or intersect(b2, twist) != -4:
        rep.status = "fail"
        rep.note("identity failed: curve . twist -- the exact value is "
                 "+2 (adjunction: the curve classes are smooth rational "
                 "of square -4, and the twist is the canonical class); "
                 "the published -4 is incompatible with the published "
                 "triple-fiber relation, which pins the same multiplicity "
                 "data used here")

    # double-cover invariants, then contraction of the four (-1)-curves
    stats = double_cover_stats(branch, bundle, K, chi_base=1)
    rep.check("cover canonical square before contraction",
              str(stats.k_squared), "-4", tag="derived")
    rep.check("resolved-surface canonical square",
              str(stats.k_squared + 4), "0")
    rep.check("holomorphic Euler characteristic", str(stats.chi), "1")

    # section count of the adjoint class: bidegree (1,1) through the four
    # origins with the tangent-cone directions
    conditions = []
    for chart in (1, 2, 3, 4):
        pt = _chart_origin_point(chart)
        conditions.append(PassThrough(pt))
        conditions.append(TangentDirection(pt, _cone_direction(chart)))
    rep.check("adjoint sections vanish", series_dimension((1, 1),
              conditions, F49), 0)

    # canonical class of the resolved surface: six times it is a fiber
    gamma = sum(gbar[1:], gbar[0])
    six_k = 6 * (stats.adjoint) - 3 * gamma
    rep.check("six times the resolved canonical class is the fiber class",
              verify_class_relation(six_k, fiber), True)
    per_basis = all(intersect(six_k, lat.basis(n)) ==
                    intersect(fiber, lat.basis(n)) for n in lat.names)
    rep.check("fiber identity against every basis class", per_basis, True)
    third = Fraction(1, 3) * fiber
    half = Fraction(1, 2) * fiber
    rep.check("multiple-fiber decomposition",
              verify_class_relation(
                  Fraction(1, 6) * fiber, -1 * fiber + half + 2 * third),
              True, tag="definitional")

    # extended lattice: the diagonal separates from the branch curve
    lat1 = _extended_lattice(lat)
    rep.check("extended rank", lat1.rank, 20)
    rep.check("extended signature", list(signature(lat1)), [1, 19],
              tag="definitional")
    delta1 = lat1.cls({"h1": 1, "h2": 1, "n1": -1, "n2": -1,
                       "c3": -1, "f3": -1, "c4": -1, "f4": -1,
                       "c5": -1, "f5": -1, "c6": -1, "f6": -1})
    b1_ext = _extend(lat1, b1, {"c3": -1, "f3": -1, "c4": -1, "f4": -1})
    b2_ext = _extend(lat1, b2, {"c5": -1, "f5": -1, "c6": -1, "f6": -1})
    gbar_ext = [_extend(lat1, g, {}) for g in gbar]
    cbar = [lat1.cls({f"c{k}": 1, f"f{k}": -1}) for k in range(3, 7)]
    branch1 = b1_ext + b2_ext + sum(gbar_ext[1:], gbar_ext[0]) \
        + sum(cbar[1:], cbar[0])
    rep.check("diagonal is disjoint from the extended branch curve",
              str(intersect(delta1, branch1)), "0", tag="derived")
    rep.check("diagonal self-intersection upstairs (etale preimage)",
              str(intersect(delta1, delta1)), "-8", tag="derived")
    fbars = [lat1.cls({f"f{k}": 1}) for k in range(3, 7)]
    meets = [str(intersect(delta1, f)) for f in fbars]
    rep.check("diagonal meets each second-level tangency exceptional once",
              meets, ["1", "1", "1", "1"], tag="derived")
    # each of the four contractions raises the square by one
    rep.check("component self-intersection after contraction",
              str(intersect(delta1, delta1) + 4), "-4")

    # preimages of the first-level transverse exceptionals: (-2)-curves
    for k, n in enumerate(nbar, start=1):
        rep.check(f"transverse exceptional {k}: branch contacts",
                  str(intersect(n, branch)), "2", tag="derived")
        rep.check(f"transverse exceptional {k}: preimage square",
                  str(2 * intersect(n, n)), "-2")
    # preimages of the second-level origin exceptionals: elliptic, and
    # square -1 after contracting the four (-1)-curves
    for k, e in enumerate(ebar, start=1):
        rep.check(f"origin exceptional {k}: branch contacts",
                  str(intersect(e, branch)), "4", tag="derived")
        g_meet = intersect(e, gbar[k - 1])
        rep.check(f"origin exceptional {k}: square after contraction",
                  str(2 * intersect(e, e) + g_meet * g_meet), "-1")

    # configuration sanity of the proper transforms
    rep.check("first-level exceptional squares",
              sorted(str(intersect(g, g)) for g in gbar),
              ["-2", "-2", "-2", "-2"], tag="definitional")
    rep.check("first/second-level meeting numbers",
              sorted(str(intersect(g, e)) for g, e in zip(gbar, ebar)),
              ["1", "1", "1", "1"], tag="definitional")

    # extended-lattice canonical bookkeeping
    L1 = lat1.cls({"h1": 3, "h2": 3, "n1": -1, "n2": -1,
                   "g1": -1, "g2": -1, "g3": -1, "g4": -1,
                   "e1": -2, "e2": -2, "e3": -2, "e4": -2,
                   "f3": -1, "f4": -1, "f5": -1, "f6": -1})
    rep.check("extended branch is twice the extended bundle",
              verify_class_relation(branch1, 2 * L1), True, tag="derived")
    K1 = lat1.canonical
    sum_c = sum(cbar[1:], cbar[0])
    sum_f = sum(fbars[1:], fbars[0])
    sum_e1 = _extend(lat1, ebar[0], {})
    for e in ebar[1:]:
        sum_e1 = sum_e1 + _extend(lat1, e, {})
    adjoint_display = lat1.cls({"h1": 1, "h2": 1}) - sum_e1 + sum_c + sum_f
    rep.check("adjoint display on the extended lattice",
              verify_class_relation(K1 + L1, adjoint_display), True)
    return rep


def _extend(lat1: Lattice, cls: DivisorClass, extra: dict) -> DivisorClass:
    coeffs = {n: c for n, c in zip(cls.lattice.names, cls.coeffs) if c}
    coeffs.update(extra)
    return lat1.cls(coeffs)


def _chart_origin_point(chart: int):
    one, zero = F49.one(), F49.zero()
    inf = (one, zero)
    fin = (zero, one)
    first = inf if cgdata.CHARTS[chart][0] == "al'" else fin
    second = inf if cgdata.CHARTS[chart][1] == "be'" else fin
    return (first, second)


def _cone_direction(chart: int):
    g1_49, g2_49 = curve_pair("F49")
    smooth = {1: g2_49, 2: g1_49, 3: g1_49, 4: g2_49}[chart]
    line = chart_germ(smooth, chart).poly.graded_part(
        1, cgdata.CHARTS[chart])
    u, v = cgdata.CHARTS[chart]
    p = line.coefficient({u: 1})
    q = line.coefficient({v: 1})
    return (q, -p)


# ----------------------------------------------------------------------
# scenario: diophantine


def multiple_fiber_scan(target: int, bound: int) -> list[tuple[int, int, int]]:
    """All (lambda, m1, m2) with lambda*(m1*m2 - m1 - m2) = target,
    2 <= m1 < m2 <= bound coprime, lambda >= 1, by exhaustive scan."""
    out = []
    for m1 in range(2, bound + 1):
        for m2 in range(m1 + 1, bound + 1):
            if gcd(m1, m2) != 1:
                continue
            v = m1 * m2 - m1 - m2
            if v > 0 and target % v == 0:
                out.append((target // v, m1, m2))
    return sorted(out)


def scenario_diophantine() -> VerificationReport:
    rep = VerificationReport(
        "diophantine",
        citation=("the multiple-fiber equation lambda*(m1*m2-m1-m2) = 2 "
                  "has the single coprime solution lambda=2, (2,3)"))
    rep.check("solutions up to bound 100", multiple_fiber_scan(2, 100),
              [(2, 2, 3)])
    rep.check("solutions up to bound 3", multiple_fiber_scan(2, 3),
              [(2, 2, 3)])
    rep.check("regression: target 3 solution set",
              multiple_fiber_scan(3, 100), [(1, 2, 5), (3, 2, 3)],
              tag="derived")
    return rep


# ----------------------------------------------------------------------
# scenario: gamma


def scenario_gamma() -> VerificationReport:
    rep = VerificationReport(
        "gamma",
        citation=("a bidegree-(2,2) curve through the four double points "
                  "with the tangent-cone directions exists: eight "
                  "conditions on nine coefficients"))
    conditions = []
    for chart in (1, 2, 3, 4):
        pt = _chart_origin_point(chart)
        conditions.append(PassThrough(pt))
        conditions.append(TangentDirection(pt, _cone_direction(chart)))
    dim = series_dimension((2, 2), conditions, F49)
    rep.check("unconstrained section count",
              series_dimension((2, 2), (), F49), 9)
    rep.require("constrained dimension is positive", dim >= 1)
    rep.check("constrained dimension (regression)", dim, 1, tag="derived")
    dim_minus = series_dimension((2, 2), conditions[:-1], F49)
    rep.check("dropping one direction condition", dim_minus, 2,
              tag="derived")
    # the five-point vanishing behind the cotangent count, with its
    # positional hypothesis checked first
    pts = [q_point_projective(2)] + [_chart_origin_point(c)
                                     for c in (1, 2, 3, 4)]
    fibers = distinct_fiber_counts(pts)
    rep.check("positional hypothesis: distinct fibers", list(fibers),
              [3, 3])
    rep.check("split-bundle sections vanishing at the five points",
              split_sections_vanishing(pts, F49), 0)
    rep.check("split-bundle sections, no conditions",
              split_sections_vanishing((), F49), 6, tag="definitional")
    rep.check("split-bundle sections, one point",
              split_sections_vanishing((q_point_projective(2),), F49), 4,
              tag="derived")
    rep.note("the count is verified on the characteristic-7 configuration; "
             "the characteristic-zero existence statement is a dimension "
             "count of the same shape, not a computation performed here")
    return rep


def q_point_projective(k: int):
    alpha, beta = q_point(k)
    one = F49.one()
    return ((alpha, one), (beta, one))


# ----------------------------------------------------------------------
# registry and runner

SCENARIOS = {
    "expansion": scenario_expansion,
    "branch": scenario_branch,
    "delta": scenario_delta,
    "singularities": scenario_singularities,
    "deform-derive": scenario_deform_derive,
    **{spec[0]: make_system_scenario(spec) for spec in cgdata.SYSTEM_SPECS},
    "system-lefschetz": scenario_lefschetz,
    "basis-count": scenario_basis_count,
    "ramification": scenario_ramification,
    "lattice": scenario_lattice,
    "diophantine": scenario_diophantine,
    "gamma": scenario_gamma,
}

assert tuple(SCENARIOS) == cgdata.SCENARIO_IDS


def run_scenario(scenario_id: str) -> VerificationReport:
    if scenario_id not in SCENARIOS:
        raise KeyError(f"unknown scenario {scenario_id!r}")
    start = time.perf_counter()
    try:
        rep = SCENARIOS[scenario_id]()
    except Exception as exc:  # noqa: BLE001 - reported, not swallowed
        rep = VerificationReport(scenario_id, status="error")
        rep.note(f"{type(exc).__name__}: {exc}")
    rep.millis = (time.perf_counter() - start) * 1000.0
    return rep


def run_many(ids=None, jobs: int = 1) -> list[VerificationReport]:
    ids = list(ids) if ids else list(cgdata.SCENARIO_IDS)
    for sid in ids:
        if sid not in SCENARIOS:
            raise KeyError(f"unknown scenario {sid!r}")
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_scenario, ids))
    else:
        reports = [run_scenario(sid) for sid in ids]
    order = {sid: k for k, sid in enumerate(cgdata.SCENARIO_IDS)}
    reports.sort(key=lambda r: order[r.scenario_id])
    return reports
