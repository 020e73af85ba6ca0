"""Isomorphisms of standard pairs.

Two pairs ``[P, Q]`` and ``[P', Q']`` are isomorphic iff
``P'(w) = alpha * P(beta * w)`` and ``Q'(w) = gamma * Q(delta * w + t)``,
where the translation ``t`` is only allowed when ``P(0) P'(0) != 0``. A pair
with ``P(0) = 0`` is never isomorphic to one with ``P'(0) != 0``.

Isomorphisms are realised by triangular maps ``(x, y) -> (a x + b y, c y)``;
``IsoWitness.triple`` converts a witness into such a triple.
"""

import functools

from zigzag.poly import SubstitutionWitness, scale_equivalences, affine_equivalences
from zigzag.util.rationals import as_rational, format_rational

import logging
logger = logging.getLogger(__name__)


class IsoWitness(object):
    """The substitution data ``(alpha, beta, gamma, delta, t)`` of a pair isomorphism.

    ``p`` holds ``(alpha, beta)`` and ``q`` holds ``(gamma, delta, t)``.
    """

    def __init__(self, p, q):
        assert p.t == 0
        self.p = p
        self.q = q

    alpha = property(lambda self: self.p.alpha)
    beta = property(lambda self: self.p.beta)
    gamma = property(lambda self: self.q.alpha)
    delta = property(lambda self: self.q.beta)
    t = property(lambda self: self.q.t)

    @classmethod
    def identity(cls):
        return cls(SubstitutionWitness.identity(), SubstitutionWitness.identity())

    def apply(self, pair):
        """The image pair; equal coefficientwise to the target of the isomorphism."""
        from zigzag.PairClass import PairClass
        return PairClass(self.p.apply(pair.P), self.q.apply(pair.Q))

    def order_key(self):
        return self.p.order_key() + self.q.order_key()

    def triple(self, r0):
        """The triangular map ``(a, b, c)`` inducing this isomorphism from a source with ``vanishing_order(P) = r0``."""
        a = 1 / self.beta
        if r0 == 0:
            return (a, self.t / self.beta, self.delta / self.beta)
        assert self.t == 0
        return (a, as_rational(0), self.delta / self.beta**(r0 + 1))

    def to_json(self):
        return {
            'alpha' : format_rational(self.alpha),
            'beta' : format_rational(self.beta),
            'gamma' : format_rational(self.gamma),
            'delta' : format_rational(self.delta),
            't' : format_rational(self.t),
        }

    def __eq__(self, other):
        if not isinstance(other, IsoWitness):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return "IsoWitness(alpha=%s, beta=%s, gamma=%s, delta=%s, t=%s)" % (
            self.alpha, self.beta, self.gamma, self.delta, self.t
        )


def pairs_isomorphic(c1, c2):
    """Decide whether two pairs are isomorphic.

    Args:
        c1 (PairClass): source.
        c2 (PairClass): target.
    Returns:
        The smallest ``IsoWitness`` from ``c1`` to ``c2``, or ``None``.
    """
    return _pairs_isomorphic(c1.P, c1.Q, c2.P, c2.Q)


@functools.lru_cache(maxsize = 65536)
def _pairs_isomorphic(P1, Q1, P2, Q2):
    p1_unit = P1[0] != 0
    if p1_unit != (P2[0] != 0):
        return None
    if (Q1[0] != 0) != (Q2[0] != 0) and not p1_unit:
        return None
    ps = scale_equivalences(P1, P2)
    if ps.is_empty:
        return None
    qs = affine_equivalences(Q1, Q2, allow_shift = p1_unit)
    if qs.is_empty:
        return None
    return IsoWitness(ps.representative(), qs.representative())


def triangular_image(pair, a, b, c):
    """The pair obtained by transporting ``pair`` through ``(x, y) -> (a x + b y, c y)``.

    With ``r0 = vanishing_order(P)`` the image is
    ``[P(w / a), Q((c w + b) / a)]`` when ``r0 = 0`` and
    ``[P(w / a), Q(c w / a^(r0 + 1))]`` otherwise, each up to a constant.
    """
    from zigzag.PairClass import PairClass
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    assert a != 0 and c != 0
    r0 = pair.r0
    P = pair.P.compose_affine(1 / a)
    if r0 == 0:
        Q = pair.Q.compose_affine(c / a, b / a)
    else:
        Q = pair.Q.compose_affine(c / a**(r0 + 1))
    return PairClass(P, Q)


def maps_onto(source, target, triple):
    """Whether the triangular map ``triple = (a, b, c)`` sends ``source`` onto ``target``."""
    image = triangular_image(source, *triple)
    return image.P.is_proportional_to(target.P) and image.Q.is_proportional_to(target.Q)
