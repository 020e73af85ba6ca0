"""The equations of the surface of a pair in affine 4-space.

The surface of ``(P, Q)`` is cut out by ``yu = xP(x)``, ``vx = uQ(u)`` and
``yv = P(x)Q(u)``. Right hand sides are rendered fully expanded with
monomials in degree-lexicographic order, and also factored over QQ.
"""

from collections import namedtuple

import sympy
from sympy import QQ

from zigzag.PairClass import classify_case
from zigzag.util.rationals import format_rational

import logging
logger = logging.getLogger(__name__)

X, Y, U, V = sympy.symbols('x y u v')
RHS_GENS = (X, U)


Equation = namedtuple('Equation', ['lhs', 'rhs'])
Equation.__doc__ = """``lhs = rhs`` with ``rhs`` a ``sympy.Poly`` in ``x, u``."""


def _coeff_text(c, has_monomial, compact):
    """Coefficient prefix for a term; ``c`` is positive."""
    if c == 1 and has_monomial:
        return ""
    text = str(c.p) if c.q == 1 else "%i/%i" % (c.p, c.q)
    if has_monomial:
        text += "" if compact else "*"
    return text


def _monomial_text(monom, gens, compact):
    parts = []
    for g, e in zip(gens, monom):
        if e == 0:
            continue
        parts.append(str(g) if e == 1 else "%s^%i" % (g, e))
    return ("" if compact else "*").join(parts)


def render_terms(terms, gens, compact = False):
    """Render ``[(monom, coeff), ...]`` (already ordered) as ``"x^2 - 3/2*x + 1"``.

    ``compact`` drops spaces and multiplication signs: ``"x^2-3/2x+1"``.
    """
    if len(terms) == 0:
        return "0"
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    out = []
    for k, (monom, coeff) in enumerate(terms):
        coeff = sympy.Rational(coeff)
        mono = _monomial_text(monom, gens, compact)
        body = _coeff_text(abs(coeff), mono != "", compact) + mono
        if k == 0:
            out.append(("-" if coeff < 0 else "") + body)
        else:
            out.append((minus if coeff < 0 else plus) + body)
    return "".join(out)


def render_expanded(poly):
    """Fully expanded, monomials in graded lexicographic order (``x`` before ``u``)."""
    return render_terms(poly.terms(order = 'grlex'), poly.gens)


def render_factored(poly):
    """Factored over QQ, e.g. ``x(x-1)u(u-1)``.

    Factors are grouped by their first variable, bare powers of a variable
    first, then by degree.
    """
    coeff, factors = poly.factor_list()
    coeff = sympy.Rational(coeff)
    entries = []
    for f, k in factors:
        lc = sympy.Rational(f.LC())
        if lc != 1:
            coeff *= lc**k
            f = f.monic()
        terms = f.terms(order = 'grlex')
        text = render_terms(terms, f.gens, compact = True)
        if len(terms) > 1:
            text = "(%s)" % text
        if k > 1:
            text += "^%i" % k
        entries.append(((_leading_gen(f), len(terms) > 1, f.total_degree(), str(terms)), text))
    entries.sort(key = lambda e: e[0])
    body = "".join(text for _, text in entries)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return (str(coeff.p) if coeff.q == 1 else "%i/%i" % (coeff.p, coeff.q)) + body


def _leading_gen(f):
    """Index of the first generator occurring in ``f``."""
    for i, g in enumerate(f.gens):
        if f.degree(g) > 0:
            return i
    return len(f.gens)


class SurfaceEquations(object):
    """The three defining equations of the surface of ``(P, Q)``."""

    def __init__(self, equations):
        self.equations = list(equations)

    def lines(self, factored = False):
        render = render_factored if factored else render_expanded
        return ["%s = %s" % (e.lhs, render(e.rhs)) for e in self.equations]

    def to_text(self, factored = False):
        return "\n".join(self.lines(factored)) + "\n"

    def to_json(self):
        out = []
        for e in self.equations:
            out.append({
                'lhs' : e.lhs,
                'rhs' : render_expanded(e.rhs),
                'factored' : render_factored(e.rhs),
                'terms' : [
                    {
                        'coeff' : format_rational(c),
                        'monomial' : {str(g) : k for g, k in zip(e.rhs.gens, m) if k > 0},
                    } for m, c in e.rhs.terms(order = 'grlex')
                ],
            })
        return {'equations' : out}


def emit_equations(P, Q):
    """``yu = xP(x)``, ``vx = uQ(u)`` and ``yv = P(x)Q(u)``.

    :param Poly P:
    :param Poly Q:
    :rtype: SurfaceEquations
    """
    classify_case(P, Q)
    px = P.as_expr(X)
    qu = Q.as_expr(U)
    rhs = [
        ('yu', X * px),
        ('vx', U * qu),
        ('yv', px * qu),
    ]
    return SurfaceEquations(
        Equation(lhs, sympy.Poly(sympy.expand(expr), *RHS_GENS, domain = QQ))
        for lhs, expr in rhs
    )
