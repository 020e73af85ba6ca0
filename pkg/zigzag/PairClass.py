from zigzag.errors import DegreeTooSmallError, SerializationError
from zigzag.poly import Poly, multiplicity_profile, vanishing_order
from zigzag.ZigzagType import ZigzagType
from zigzag.util.jsonio import require_keys

import logging
logger = logging.getLogger(__name__)


CASE_I = 'I'
CASE_II = 'II'
CASE_III = 'III'
CASES = (CASE_I, CASE_II, CASE_III)


def _check_degrees(P, Q):
    for role, p in (('P', P), ('Q', Q)):
        if p.degree() < 1:
            raise DegreeTooSmallError(role, p.degree())


def classify_case(P, Q):
    """The construction case of ``(P, Q)``.

    ``I`` if ``P(0) != 0``, ``II`` if ``P(0) = 0 != Q(0)`` and ``III`` if
    ``P(0) = Q(0) = 0``.

    Raises:
        DegreeTooSmallError: if ``P`` or ``Q`` is constant.
    """
    _check_degrees(P, Q)
    if P[0] != 0:
        return CASE_I
    if Q[0] != 0:
        return CASE_II
    return CASE_III


class PairClass(object):
    """The isomorphism class ``[P, Q]`` of a standard pair.

    ``P`` and ``Q`` are one representative; the class has zigzag type
    ``(0, -1, -a, -b)`` with ``a = deg P + 1`` and ``b = deg Q + 1``.

    Equality is isomorphism of pairs (``zigzag.moduli.pairs_isomorphic``),
    never equality of coefficients; use ``same_representative`` for the
    latter. The hash only depends on isomorphism invariants, so classes can
    key dicts and sets.

    Args:
        P (Poly): degree at least 1.
        Q (Poly): degree at least 1.
    """
    def __init__(self, P, Q):
        if not isinstance(P, Poly):
            P = Poly(P)
        if not isinstance(Q, Poly):
            Q = Poly(Q)
        self.case = classify_case(P, Q)
        self.P = P
        self.Q = Q

    @classmethod
    def from_json(cls, data):
        require_keys(data, ('P', 'Q'), "pair")
        out = cls(Poly.from_json(data['P']), Poly.from_json(data['Q']))
        if 'case' in data and data['case'] != out.case:
            raise SerializationError("Pair is of case %s, not %s as stated." % (out.case, data['case']))
        return out

    def to_json(self):
        return {
            'P' : self.P.to_json(),
            'Q' : self.Q.to_json(),
            'case' : self.case,
        }

    @property
    def zigzag_type(self):
        return ZigzagType.of_degrees(self.P.degree(), self.Q.degree())

    @property
    def r0(self):
        """Multiplicity of 0 as a root of ``P``."""
        return vanishing_order(self.P)

    @property
    def s0(self):
        """Multiplicity of 0 as a root of ``Q``."""
        return vanishing_order(self.Q)

    def swapped(self):
        """``[Q, P]``."""
        return PairClass(self.Q, self.P)

    def same_representative(self, other):
        return self.P == other.P and self.Q == other.Q

    def label(self):
        """``"I [-2/1,0/1,1/1] [-3/1,0/1,1/1]"``: case tag and representative coefficients."""
        return "%s [%s] [%s]" % (self.case, ",".join(self.P.to_json()), ",".join(self.Q.to_json()))

    def _invariants(self):
        return (
            self.case,
            self.P.degree(),
            self.Q.degree(),
            multiplicity_profile(self.P),
            multiplicity_profile(self.Q),
        )

    def __eq__(self, other):
        if not isinstance(other, PairClass):
            return NotImplemented
        if self.same_representative(other):
            return True
        from zigzag.moduli import pairs_isomorphic
        return pairs_isomorphic(self, other) is not None

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self._invariants())

    def __str__(self):
        return "[%s, %s]" % (self.P, self.Q)

    def __repr__(self):
        return "PairClass(%s, %s)" % (self.P, self.Q)
