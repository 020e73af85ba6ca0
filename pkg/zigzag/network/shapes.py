"""Predicted shapes of fibration graphs."""

from zigzag.errors import CaseMismatchError
from zigzag.PairClass import PairClass, CASE_I, CASE_III
from zigzag.moduli import pairs_isomorphic
from zigzag.util.rationals import as_rational

import logging
logger = logging.getLogger(__name__)


SELF_LOOP = 'self-loop'
TWO_VERTEX_EDGE = 'two-vertex-edge'


def classify_type_iii(seed):
    """The fibration graph of a pair with ``P(0) = Q(0) = 0``.

    All reversions of such a pair end at ``[Q, P]``, so the graph is a single
    vertex with a loop when ``[P, Q]`` and ``[Q, P]`` are isomorphic, and two
    vertices joined by one edge otherwise.

    Raises:
        CaseMismatchError: if ``seed`` is not of case III.
    """
    if seed.case != CASE_III:
        raise CaseMismatchError('classify_type_iii', CASE_III, seed.case)
    if pairs_isomorphic(seed, seed.swapped()) is not None:
        return SELF_LOOP
    return TWO_VERTEX_EDGE


def carpet_prediction(seed, centers, depth):
    """The vertices a breadth-first window of depth ``depth`` should find around a case I seed.

    Reverting ``[P(w + a), Q(w + b)]`` at ``c`` gives ``[Q(w + b + c), P(w + a)]``
    and shifting the second polynomial does not change the class, so the
    window is the seed, then the ``[Q(w + b), P]`` and from depth 2 on the
    ``[P(w + a), Q]``, for ``a, b`` among the centers. Classes are listed
    once, in that order.
    """
    if seed.case != CASE_I:
        raise CaseMismatchError('carpet_prediction', CASE_I, seed.case)
    centers = [as_rational(c) for c in centers]
    P, Q = seed.P, seed.Q
    candidates = [seed]
    if depth >= 1:
        candidates.extend(PairClass(Q.shift(b), P) for b in centers)
    if depth >= 2:
        candidates.extend(PairClass(P.shift(a), Q) for a in centers)
    out = []
    for c in candidates:
        if not any(c == v for v in out):
            out.append(c)
    return out
