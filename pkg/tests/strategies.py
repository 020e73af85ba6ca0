import sympy
from hypothesis.strategies import composite, integers, lists, sampled_from, builds, one_of, just

from zigzag.poly import Poly
from zigzag.PairClass import PairClass


def rationals(max_numerator = 6, max_denominator = 4):
    return builds(
        sympy.Rational,
        integers(-max_numerator, max_numerator),
        integers(1, max_denominator)
    )


def nonzero_rationals(max_numerator = 6, max_denominator = 4):
    return rationals(max_numerator, max_denominator).filter(lambda r: r != 0)


@composite
def polys(draw, min_degree = 1, max_degree = 4, unit = None):
    """Nonzero polynomials; ``unit`` forces ``p(0) != 0`` (True) or ``p(0) = 0`` (False)."""
    n = draw(integers(min_degree, max_degree))
    coeffs = draw(lists(rationals(), min_size = n, max_size = n))
    coeffs.append(draw(nonzero_rationals()))
    if unit is True and coeffs[0] == 0:
        coeffs[0] = draw(nonzero_rationals())
    elif unit is False and n >= 1:
        coeffs[0] = 0
    return Poly(coeffs)


def monic_polys(min_degree = 1, max_degree = 3, unit = None):
    return polys(min_degree, max_degree, unit).map(Poly.monic)


@composite
def pairs(draw, case = None, max_degree = 3):
    if case == 'I':
        P = draw(polys(max_degree = max_degree, unit = True))
        Q = draw(polys(max_degree = max_degree))
    elif case == 'II':
        P = draw(polys(max_degree = max_degree, unit = False))
        Q = draw(polys(max_degree = max_degree, unit = True))
    elif case == 'III':
        P = draw(polys(max_degree = max_degree, unit = False))
        Q = draw(polys(max_degree = max_degree, unit = False))
    else:
        P = draw(polys(max_degree = max_degree))
        Q = draw(polys(max_degree = max_degree))
    return PairClass(P, Q)


@composite
def isomorphic_images(draw, pair):
    """A pair isomorphic to ``pair`` through random substitutions."""
    alpha, beta, gamma, delta = (draw(nonzero_rationals(4, 3)) for _ in range(4))
    t = draw(rationals(3, 2)) if pair.P[0] != 0 else 0
    return PairClass(
        pair.P.compose_affine(beta).scale(alpha),
        pair.Q.compose_affine(delta, t).scale(gamma)
    )


def standard_types(max_length = 4, max_weight = 6):
    return lists(integers(2, max_weight), min_size = 0, max_size = max_length).map(
        lambda xs: (0, -1) + tuple(-x for x in xs)
    )


def strategies():
    return sampled_from(('leftmost', 'rightmost', 'random'))


def seeds():
    return one_of(just(None), integers(0, 2**16))


@composite
def small_pairs(draw, max_degree = 2):
    """Pairs with coefficients in {-1, 0, 1}, so that isomorphic pairs are drawn often."""
    def poly():
        n = draw(integers(1, max_degree))
        coeffs = draw(lists(sampled_from([-1, 0, 1]), min_size = n, max_size = n))
        return Poly(coeffs + [draw(sampled_from([-1, 1, 2]))])
    return PairClass(poly(), poly())
