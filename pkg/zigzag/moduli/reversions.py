"""Reversions of standard pairs and when two of them are equivalent.

A reversion of ``[P, Q]`` is determined by a rational center ``lambda`` on
``F \\ C``. If ``P(0) != 0`` its target is ``[Q(w + lambda), P]``; otherwise
all reversions are equivalent and the target is ``[Q, P]``.
"""

import functools

from zigzag.poly import stabilizer
from zigzag.moduli.isomorphism import pairs_isomorphic
from zigzag.util.rationals import as_rational

import logging
logger = logging.getLogger(__name__)


def apply_reversion(pair, center):
    """The target class of the reversion of ``pair`` with center ``center``.

    Case transitions are ``Ia -> I`` (``Q(center) != 0``), ``Ib -> II``
    (``Q(center) = 0``), ``II -> I`` and ``III -> III``.
    """
    from zigzag.PairClass import PairClass
    center = as_rational(center)
    if pair.P[0] != 0:
        return PairClass(pair.Q.shift(center), pair.P)
    return PairClass(pair.Q, pair.P)


def transport_center(triple, center):
    """Where the triangular automorphism ``(a, b, c)`` moves a reversion center: ``(a center - b) / c``."""
    a, b, c = (as_rational(x) for x in triple)
    return (a * as_rational(center) - b) / c


def pull_back_center(triple, center):
    """Inverse of ``transport_center``."""
    a, b, c = (as_rational(x) for x in triple)
    return (c * as_rational(center) + b) / a


def reversions_equivalent_by_targets(pair, lambda1, lambda2):
    """Whether the two reversions have isomorphic targets."""
    if pair.P[0] == 0:
        return True
    t1 = apply_reversion(pair, lambda1)
    t2 = apply_reversion(pair, lambda2)
    return pairs_isomorphic(t1, t2) is not None


def reversions_equivalent_by_transport(pair, lambda1, lambda2):
    """Whether an automorphism of ``pair`` moves ``lambda1`` to ``lambda2``.

    Only the ``Q`` part of an automorphism acts on centers, so this asks for
    a witness ``(gamma, delta, t)`` of ``Q(w) ~ Q(delta w + t)`` with
    ``delta * lambda1 + t = lambda2``.
    """
    if pair.P[0] == 0:
        return True
    lambda1, lambda2 = as_rational(lambda1), as_rational(lambda2)
    stab = stabilizer(pair.Q, True)
    if stab.is_family:
        # Q ~ (w - s)^n: delta * (lambda1 - s) = lambda2 - s has a nonzero solution.
        s = stab.family.source_shift
        return (lambda1 == s) == (lambda2 == s)
    return any(w.beta * lambda1 + w.t == lambda2 for w in stab.witnesses)


def reversions_equivalent(pair, lambda1, lambda2):
    """Decide whether the reversions of ``pair`` centered at ``lambda1`` and ``lambda2`` are equivalent.

    Always true when ``P(0) = 0``. Both characterisations are evaluated and
    must agree.
    """
    return _reversions_equivalent(pair.P, pair.Q, as_rational(lambda1), as_rational(lambda2))


@functools.lru_cache(maxsize = 65536)
def _reversions_equivalent(P, Q, lambda1, lambda2):
    from zigzag.PairClass import PairClass
    pair = PairClass(P, Q)
    by_targets = reversions_equivalent_by_targets(pair, lambda1, lambda2)
    by_transport = reversions_equivalent_by_transport(pair, lambda1, lambda2)
    assert by_targets == by_transport, "Reversion equivalence tests disagree on %s at %s, %s" % (pair, lambda1, lambda2)
    return by_targets
