"""Substitution-equivalence solvers.

``scale_equivalences`` solves ``p2(w) = alpha * p(beta * w)`` and
``affine_equivalences`` solves ``q2(w) = gamma * q(delta * w + t)``. Every
isomorphism and stabilizer question about pairs reduces to these two.
"""

import functools

import sympy

from zigzag.poly.Poly import Poly
from zigzag.poly.SolutionSet import SolutionSet, SubstitutionWitness, MonomialFamily

import logging
logger = logging.getLogger(__name__)


def rational_roots_of(r, n):
    """All rational ``x`` with ``x^n = r`` (``r`` nonzero, ``n >= 1``)."""
    r = sympy.Rational(r)
    assert r != 0 and n >= 1
    if r < 0 and n % 2 == 0:
        return []
    num, num_exact = sympy.integer_nthroot(abs(r.p), n)
    den, den_exact = sympy.integer_nthroot(r.q, n)
    if not (num_exact and den_exact):
        return []
    root = sympy.Rational(num, den)
    if n % 2 == 0:
        return [root, -root]
    return [root if r > 0 else -root]


def depress(q):
    """Shift ``q`` so that its subleading coefficient vanishes.

    Returns:
        ``(qhat, s)`` with ``qhat(w) = q(w + s)``.
    """
    n = q.degree()
    assert n >= 1, "Can't depress a constant"
    s = -q[n - 1] / (n * q[n])
    return q.shift(s), s


def scale_equivalences(p, p2):
    """All ``(alpha, beta)`` with ``p2(w) = alpha * p(beta * w)``.

    Two polynomials with different degrees or different supports are never
    equivalent and give the empty set. A monomial gives the one-parameter
    family; otherwise ``beta`` is pinned by the two lowest nonzero
    coefficients and each candidate is checked by re-substitution.

    :param Poly p: Source, nonzero.
    :param Poly p2: Target, nonzero.
    :rtype: SolutionSet
    """
    if p.is_zero or p2.is_zero:
        raise ValueError("Scale equivalences are only defined for nonzero polynomials.")
    if p.degree() != p2.degree():
        return SolutionSet.empty()
    support = p.support()
    if support != p2.support():
        return SolutionSet.empty()

    if len(support) == 1:
        n = support[0]
        return SolutionSet.monomial_family(MonomialFamily(p[n], p2[n], n, 0, 0))

    i, j = support[0], support[1]
    ratio = (p2[j] * p[i]) / (p2[i] * p[j])
    witnesses = []
    for beta in rational_roots_of(ratio, j - i):
        witness = SubstitutionWitness(p2[i] / (p[i] * beta**i), beta)
        if witness.apply(p) == p2:
            witnesses.append(witness)
    return SolutionSet.finite(witnesses)


def affine_equivalences(q, q2, allow_shift):
    """All ``(gamma, delta, t)`` with ``q2(w) = gamma * q(delta * w + t)``.

    With ``allow_shift = False`` this is ``scale_equivalences`` (``t = 0``).
    Otherwise both sides are depressed, the depressed forms are matched by
    scaling and the translation is recovered as ``t = s - delta * s2``.

    Returns:
        SolutionSet: witnesses are ``SubstitutionWitness(gamma, delta, t)``.
    """
    if not allow_shift:
        return scale_equivalences(q, q2)
    if q.is_zero or q2.is_zero:
        raise ValueError("Affine equivalences are only defined for nonzero polynomials.")
    if q.degree() != q2.degree():
        return SolutionSet.empty()
    if q.degree() == 0:
        raise ValueError("Affine equivalences of constants are not a one-parameter family.")

    qhat, s = depress(q)
    qhat2, s2 = depress(q2)
    inner = scale_equivalences(qhat, qhat2)
    if inner.is_empty:
        return SolutionSet.empty()
    if inner.is_family:
        n = q.degree()
        logger.debug("%s is a translated monomial; affine equivalences form a family." % q)
        return SolutionSet.monomial_family(MonomialFamily(qhat[n], qhat2[n], n, s, s2))

    witnesses = []
    for w in inner.witnesses:
        witness = SubstitutionWitness(w.alpha, w.beta, s - w.beta * s2)
        assert witness.apply(q) == q2
        witnesses.append(witness)
    return SolutionSet.finite(witnesses)


@functools.lru_cache(maxsize = 4096)
def stabilizer(p, allow_shift):
    """The self-equivalences of ``p``; a group under ``SubstitutionWitness.compose``."""
    return affine_equivalences(p, p, allow_shift)
