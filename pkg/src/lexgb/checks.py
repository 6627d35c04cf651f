"""Structural checks on zero-dimensional lex bases.

Each check verifies one divisibility or membership statement about the
basis and returns a witnessed verdict.  Checks whose statement needs the
ideal to be radical run in observed mode when the basis lacks the
radical-by-construction flag.  Indices in witnesses are 1-based, matching
the ascending order of the basis.
"""

from __future__ import annotations

from .groebner import (
    GroebnerBasis,
    buchberger,
    elimination_basis,
    is_groebner_basis,
    normal_form,
    structure_facts,
)
from .poly import content_divide, divides_univariate
from .report import FAIL, PASS, SKIPPED, CheckReport, gated_report
from . import specialize


def check_basis_integrity(G: GroebnerBasis) -> CheckReport:
    """Sorted, minimal, monic, tail-reduced, and closed under S-pair reduction."""
    name = "basis_integrity"
    witnesses = []
    if G.unit_ideal:
        if len(G.elements) != 1 or not G.elements[0].is_constant():
            witnesses.append({"reason": "unit flag on a non-unit basis"})
        return CheckReport(name, FAIL if witnesses else PASS, witnesses)
    elems = G.elements
    for g in elems:
        if g.is_zero():
            witnesses.append({"reason": "zero element"})
            return CheckReport(name, FAIL, witnesses)
    heads = [g.lm() for g in elems]
    for i in range(1, len(elems)):
        if not heads[i - 1] < heads[i]:
            witnesses.append({"i": i + 1, "reason": "leading monomials not strictly ascending"})
    for i, g in enumerate(elems):
        if g.lc() != G.field.one:
            witnesses.append({"i": i + 1, "reason": "not monic"})
        for j, h in enumerate(heads):
            if j != i and h.divides(heads[i]):
                witnesses.append({"i": i + 1, "j": j + 1, "reason": "head divisible by another head"})
        for m, _ in g.terms[1:]:
            if any(h.divides(m) for h in heads):
                witnesses.append({"i": i + 1, "monomial": m.text(), "reason": "tail monomial reducible"})
                break
    if not witnesses and not is_groebner_basis(elems):
        witnesses.append({"reason": "an S-polynomial does not reduce to zero"})
    return CheckReport(name, FAIL if witnesses else PASS, witnesses)


def check_structure(G: GroebnerBasis) -> CheckReport:
    """Zero-dimensionality shape: pure powers of x, y, z head the staircase
    and the elements between and after them sit in the expected bands."""
    name = "structure"
    facts = structure_facts(G)
    if not facts.zero_dim:
        return CheckReport(name, FAIL, [{"reason": facts.missing}])
    witnesses = [
        {"i": i, "reason": "element outside its band"} for i in facts.band_violations
    ]
    notes = f"ell2={facts.ell2}, pure_z_degree={facts.pure_z_degree}"
    return CheckReport(name, FAIL if witnesses else PASS, witnesses, notes)


def check_lazard_2d(G2: GroebnerBasis) -> CheckReport:
    """Bivariate chain: in k[x, y] the leading x-coefficients divide backwards
    along the basis and each one divides its own element (Lazard's theorem)."""
    name = "lazard_2d"
    elems = G2.elements
    witnesses = []
    for i in range(len(elems)):
        for j in range(i):
            ok, _ = divides_univariate(elems[i].lc_x(), elems[j].lc_x())
            if not ok:
                witnesses.append(
                    {
                        "i": i + 1,
                        "j": j + 1,
                        "divisor": elems[i].lc_x().text(),
                        "dividend": elems[j].lc_x().text(),
                    }
                )
        q, bad = content_divide(elems[i], elems[i].lc_x())
        if q is None:
            witnesses.append(
                {
                    "i": i + 1,
                    "block": bad[0].text(),
                    "coefficient": bad[1].text(),
                    "reason": "leading x-coefficient does not divide the element",
                }
            )
    return CheckReport(name, FAIL if witnesses else PASS, witnesses)


def check_lc_chain_same_zdeg(G: GroebnerBasis) -> CheckReport:
    """For j <= i with equal z exponent in the heads, lc_x(g_i) divides lc_x(g_j)."""
    name = "lc_chain_same_zdeg"
    elems = G.elements
    witnesses = []
    for i in range(len(elems)):
        for j in range(i):
            if elems[i].lm().c != elems[j].lm().c:
                continue
            ok, _ = divides_univariate(elems[i].lc_x(), elems[j].lc_x())
            if not ok:
                witnesses.append(
                    {
                        "i": i + 1,
                        "j": j + 1,
                        "divisor": elems[i].lc_x().text(),
                        "dividend": elems[j].lc_x().text(),
                    }
                )
    return CheckReport(name, FAIL if witnesses else PASS, witnesses)


def check_lc_chain_componentwise(G: GroebnerBasis) -> CheckReport:
    """For j < i with both head exponents in y and z no larger than g_i's,
    lc_x(g_i) divides lc_x(g_j)."""
    name = "lc_chain_componentwise"
    elems = G.elements
    witnesses = []
    for i in range(len(elems)):
        mi = elems[i].lm()
        for j in range(i):
            mj = elems[j].lm()
            if not (mj.b <= mi.b and mj.c <= mi.c):
                continue
            ok, _ = divides_univariate(elems[i].lc_x(), elems[j].lc_x())
            if not ok:
                witnesses.append(
                    {
                        "i": i + 1,
                        "j": j + 1,
                        "divisor": elems[i].lc_x().text(),
                        "dividend": elems[j].lc_x().text(),
                    }
                )
    return CheckReport(name, FAIL if witnesses else PASS, witnesses)


def check_lc_x_divides_lc_xy(G: GroebnerBasis) -> CheckReport:
    """The leading coefficient in k[x] divides the one in k[x, y], blockwise."""
    name = "lc_x_divides_lc_xy"
    elems = G.elements
    witnesses = []
    for i in range(1, len(elems)):
        q, bad = content_divide(elems[i].lc_xy(), elems[i].lc_x())
        if q is None:
            witnesses.append(
                {"i": i + 1, "block": bad[0].text(), "coefficient": bad[1].text()}
            )
    return CheckReport(name, FAIL if witnesses else PASS, witnesses)


def check_lc_x_divides_poly(G: GroebnerBasis) -> CheckReport:
    """Radical instances: lc_x(g_i) divides every k[x] coefficient of g_i."""
    name = "lc_x_divides_poly"
    elems = G.elements
    witnesses = []
    for i in range(1, len(elems)):
        q, bad = content_divide(elems[i], elems[i].lc_x())
        if q is None:
            witnesses.append(
                {"i": i + 1, "block": bad[0].text(), "coefficient": bad[1].text()}
            )
    return gated_report(name, G.radical, witnesses)


def check_membership_lc_xy(G: GroebnerBasis) -> CheckReport:
    """Radical instances: past the elimination prefix, each g_i lies in the
    ideal generated by its k[x, y] leading coefficient together with g_1."""
    name = "membership_lc_xy"
    facts = structure_facts(G)
    elems = G.elements
    witnesses = []
    for i in range(facts.ell2, len(elems)):
        H = buchberger([elems[i].lc_xy(), elems[0]])
        r = normal_form(elems[i], H)
        if not r.is_zero():
            witnesses.append(
                {"i": i + 1, "normal_form": r.text(), "modulo": [elems[i].lc_xy().text(), elems[0].text()]}
            )
    return gated_report(name, G.radical, witnesses)


CHECK_ORDER = (
    "basis_integrity",
    "structure",
    "lazard_2d",
    "lc_chain_same_zdeg",
    "lc_chain_componentwise",
    "lc_x_divides_lc_xy",
    "lc_x_divides_poly",
    "membership_lc_xy",
    "specialization_image",
    "gianni_kalkbrener",
    "fiber_membership",
)


def verify_all(G: GroebnerBasis, checks=None) -> list[CheckReport]:
    """Run every check in fixed order and return their reports.

    basis_integrity and structure act as gatekeepers: when either fails
    the remaining checks are reported as skipped.  `checks` optionally
    restricts which non-gatekeeper checks run.
    """
    if checks is not None:
        unknown = set(checks) - set(CHECK_ORDER)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")

    table = {
        "lc_chain_same_zdeg": check_lc_chain_same_zdeg,
        "lc_chain_componentwise": check_lc_chain_componentwise,
        "lc_x_divides_lc_xy": check_lc_x_divides_lc_xy,
        "lc_x_divides_poly": check_lc_x_divides_poly,
        "membership_lc_xy": check_membership_lc_xy,
        "specialization_image": specialize.check_specialization_image,
        "gianni_kalkbrener": specialize.check_gianni_kalkbrener,
        "fiber_membership": specialize.check_fiber_membership,
    }

    def selected(name):
        return checks is None or name in checks

    reports = [check_basis_integrity(G)]
    gate_open = reports[0].verdict == PASS
    if not gate_open:
        reports.append(CheckReport("structure", SKIPPED, [], "gatekeeper check failed"))
    elif G.unit_ideal:
        reports.append(CheckReport("structure", SKIPPED, [], "unit ideal"))
        gate_open = False
    else:
        structure = check_structure(G)
        reports.append(structure)
        gate_open = structure.verdict == PASS

    for name in CHECK_ORDER[2:]:
        if not selected(name):
            continue
        if not gate_open:
            reports.append(CheckReport(name, SKIPPED, [], "gatekeeper check failed"))
            continue
        if name == "lazard_2d":
            reports.append(check_lazard_2d(elimination_basis(G)))
        else:
            reports.append(table[name](G))
    return reports


def all_ok(reports) -> bool:
    return all(r.ok for r in reports)
