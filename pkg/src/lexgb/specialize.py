"""Specialization of x (and y): image bases, degree preservation, solving.

All root finding is an exhaustive scan over a prime field; the rational
mode has no residue enumeration, so these operations require prime-field
coefficients.
"""

from __future__ import annotations

from .field import PrimeField
from .groebner import GroebnerBasis, buchberger, is_groebner_basis, normal_form, structure_facts
from .poly import MONOMIAL_ONE, Monomial, Polynomial, divides_univariate
from .report import CheckReport, SKIPPED, gated_report


class NonSplitError(RuntimeError):
    """A univariate eliminant has an irreducible factor of degree > 1."""

    def __init__(self, poly: Polynomial, cofactor_degree: int):
        self.poly = poly
        self.cofactor_degree = cofactor_degree
        super().__init__(
            f"{poly.text()} does not split: a degree-{cofactor_degree} factor has no roots"
        )


def _require_prime_field(p: Polynomial):
    if not isinstance(p.field, PrimeField):
        raise ValueError("root scans need prime-field coefficients")


def roots_univariate(f: Polynomial) -> list:
    """All roots of f in F_p, ascending; f must be a nonzero element of k[x]."""
    _require_prime_field(f)
    if f.is_zero():
        raise ValueError("the zero polynomial has every point as a root")
    if not f.in_kx():
        raise ValueError(f"{f.text()} is not univariate in x")
    zero = f.field.zero
    return [v for v in f.field.elements() if f.evaluate((v, zero, zero)) == zero]


def _as_kx(h: Polynomial, axis: int) -> Polynomial:
    """Rewrite a polynomial univariate in the given axis (0=x, 1=y, 2=z) into k[x]."""
    terms = []
    for m, c in h.terms:
        e = (m.a, m.b, m.c)
        for other in range(3):
            if other != axis and e[other] != 0:
                raise ValueError(f"{h.text()} is not univariate in axis {axis}")
        terms.append((Monomial(e[axis], 0, 0), c))
    return Polynomial(h.field, terms)


def split_roots(f: Polynomial, axis: int = 0):
    """Roots of a univariate polynomial plus the degree of its root-free part.

    The cofactor degree is 0 exactly when f is a product of linear factors
    over F_p (counted with multiplicity).
    """
    g = _as_kx(f, axis)
    roots = roots_univariate(g)
    field = g.field
    cofactor = g
    for r in roots:
        linear = Polynomial(field, [(Monomial(1, 0, 0), field.one), (MONOMIAL_ONE, -r)])
        while True:
            ok, q = divides_univariate(linear, cofactor)
            if not ok:
                break
            cofactor = q
    return roots, cofactor.max_degrees()[0]


def check_specialization_image(G: GroebnerBasis) -> CheckReport:
    """At every root alpha of g_1, each remaining element either vanishes or
    keeps a nonvanishing leading x-coefficient; nonzero images have leading
    term lc_x(alpha) * lm_yz, and together they still satisfy the S-pair
    criterion in k[y, z]."""
    name = "specialization_image"
    if not isinstance(G.field, PrimeField):
        return CheckReport(name, SKIPPED, [], "requires prime-field coefficients")
    facts = structure_facts(G)
    if not facts.zero_dim:
        return CheckReport(name, SKIPPED, [], f"not zero-dimensional: {facts.missing}")
    field = G.field
    zero = field.zero
    witnesses = []
    for alpha in roots_univariate(G.elements[0]):
        images = []
        for idx in range(1, len(G.elements)):
            g = G.elements[idx]
            img = g.substitute_x(alpha)
            if img.is_zero():
                continue
            lc_at = g.lc_x().evaluate((alpha, zero, zero))
            if lc_at == zero:
                witnesses.append(
                    {
                        "alpha": int(alpha),
                        "i": idx + 1,
                        "image": img.text(),
                        "reason": "nonzero image though the leading x-coefficient vanishes",
                    }
                )
                continue
            if img.lm() != g.lm_yz() or img.lc() != lc_at:
                witnesses.append(
                    {
                        "alpha": int(alpha),
                        "i": idx + 1,
                        "image_head": img.lt().text(),
                        "expected_head": f"{int(lc_at)}*{g.lm_yz().text()}",
                        "reason": "leading term of the image was not preserved",
                    }
                )
            images.append(img)
        if images and not is_groebner_basis(images):
            witnesses.append(
                {"alpha": int(alpha), "reason": "specialized set fails the S-pair criterion"}
            )
    return gated_report(name, G.radical, witnesses)


def check_gianni_kalkbrener(G: GroebnerBasis) -> CheckReport:
    """At every solution (alpha, beta) of the elimination prefix, each element
    with z in its head keeps its z degree after specialization (or vanishes)."""
    name = "gianni_kalkbrener"
    if not isinstance(G.field, PrimeField):
        return CheckReport(name, SKIPPED, [], "requires prime-field coefficients")
    facts = structure_facts(G)
    if not facts.zero_dim:
        return CheckReport(name, SKIPPED, [], f"not zero-dimensional: {facts.missing}")
    field = G.field
    zero = field.zero
    prefix = G.elements[: facts.ell2]
    witnesses = []
    for alpha in roots_univariate(G.elements[0]):
        for beta in field.elements():
            if any(h.evaluate((alpha, beta, zero)) != zero for h in prefix):
                continue
            for idx, g in enumerate(G.elements):
                if g.lm().c == 0:
                    continue
                img = g.substitute_x(alpha).substitute_y(beta)
                if img.is_zero():
                    continue
                if img.lm().c != g.lm().c:
                    witnesses.append(
                        {
                            "alpha": int(alpha),
                            "beta": int(beta),
                            "i": idx + 1,
                            "image_z_degree": img.lm().c,
                            "head_z_degree": g.lm().c,
                        }
                    )
    return gated_report(name, G.radical, witnesses)


def check_fiber_membership(G: GroebnerBasis) -> CheckReport:
    """Where lc_x(g_i) is not a unit and alpha is one of its roots missed by
    lc_x(g_{i+1}): g_i vanishes at x = alpha and g_{i+1} lies in the ideal
    generated by x - alpha and lc_xy(g_{i+1}) at x = alpha."""
    name = "fiber_membership"
    if not isinstance(G.field, PrimeField):
        return CheckReport(name, SKIPPED, [], "requires prime-field coefficients")
    facts = structure_facts(G)
    if not facts.zero_dim:
        return CheckReport(name, SKIPPED, [], f"not zero-dimensional: {facts.missing}")
    field = G.field
    zero = field.zero
    elems = G.elements
    witnesses = []
    qualified = False
    for i in range(len(elems) - 1):
        lcx = elems[i].lc_x()
        if lcx.is_constant():
            continue
        for alpha in roots_univariate(lcx):
            if elems[i + 1].lc_x().evaluate((alpha, zero, zero)) == zero:
                continue
            qualified = True
            if not elems[i].substitute_x(alpha).is_zero():
                witnesses.append(
                    {
                        "i": i + 1,
                        "alpha": int(alpha),
                        "reason": "element does not vanish on its fiber",
                    }
                )
            linear = Polynomial(field, [(Monomial(1, 0, 0), field.one), (MONOMIAL_ONE, -alpha)])
            fiber_gen = elems[i + 1].lc_xy().substitute_x(alpha)
            H = buchberger([linear, fiber_gen])
            r = normal_form(elems[i + 1], H)
            if not r.is_zero():
                witnesses.append(
                    {
                        "i": i + 2,
                        "alpha": int(alpha),
                        "normal_form": r.text(),
                        "modulo": [linear.text(), fiber_gen.text()],
                    }
                )
    if not qualified:
        return CheckReport(
            name, SKIPPED, [], "no non-unit leading x-coefficient with the successor nonvanishing"
        )
    return gated_report(name, G.radical, witnesses)


def solve_system(G: GroebnerBasis) -> tuple[tuple[int, int, int], ...]:
    """All F_p solutions of a zero-dimensional system, by back-substitution.

    Roots of g_1 give the x values; each specialization is solved for y,
    then for z, by exhaustive scans that must satisfy every specialized
    element.  Raises NonSplitError when an eliminant has an irreducible
    factor of degree > 1 (solutions would then live in an extension field).
    """
    if G.unit_ideal:
        return ()
    if not isinstance(G.field, PrimeField):
        raise ValueError("solving needs prime-field coefficients")
    facts = structure_facts(G)
    if not facts.zero_dim:
        raise ValueError(f"not zero-dimensional: {facts.missing}")
    field = G.field
    zero = field.zero

    roots, stuck = split_roots(G.elements[0], axis=0)
    if stuck:
        raise NonSplitError(G.elements[0], stuck)

    solutions = []
    for alpha in roots:
        slice_yz = [h for h in (g.substitute_x(alpha) for g in G.elements) if not h.is_zero()]
        y_only = [h for h in slice_yz if h.max_degrees()[2] == 0]
        if y_only:
            eliminant = min(y_only, key=lambda h: h.lm().lex_key())
            betas, stuck = split_roots(eliminant, axis=1)
            if stuck:
                raise NonSplitError(eliminant, stuck)
            betas = [b for b in betas if all(h.evaluate((zero, b, zero)) == zero for h in y_only)]
        else:
            betas = list(field.elements())
        for beta in betas:
            slice_z = [h for h in (g.substitute_y(beta) for g in slice_yz) if not h.is_zero()]
            # the monic pure z power always survives, so the slice is nonempty
            if any(h.is_constant() for h in slice_z):
                continue
            eliminant = min(slice_z, key=lambda h: h.lm().lex_key())
            gammas, stuck = split_roots(eliminant, axis=2)
            if stuck:
                raise NonSplitError(eliminant, stuck)
            for gamma in gammas:
                if all(h.evaluate((zero, zero, gamma)) == zero for h in slice_z):
                    solutions.append((int(alpha), int(beta), int(gamma)))
    solutions.sort()
    return tuple(solutions)
