import itertools

import sympy

from zigzag.poly import stabilizer
from zigzag.moduli.isomorphism import maps_onto
from zigzag.util.rationals import as_rational, format_rational, order_key

import logging
logger = logging.getLogger(__name__)


class AutPairDescription(object):
    """The automorphisms ``(x, y) -> (a x + b y, c y)`` of a standard pair.

    ``a`` is constrained by the scale stabilizer of ``P``: ``P(w / a)`` must
    be proportional to ``P(w)``. If ``r0 = vanishing_order(P)`` is 0, ``(b, c)``
    must satisfy ``Q((c w + b) / a) ~ Q(w)`` (the affine stabilizer of ``Q``);
    otherwise ``b`` is free and ``Q(c w / a^(r0 + 1)) ~ Q(w)`` (the scale
    stabilizer of ``Q``).

    Infinite parts are described, never enumerated: ``sample()`` returns
    finitely many members.

    :param PairClass pair: The pair.
    """

    # Free values tried by ``sample()``.
    SAMPLE_VALUES = (1, -1, 2, sympy.Rational(1, 2))

    def __init__(self, pair):
        self.pair = pair
        self.r0 = pair.r0
        self.b_free = self.r0 >= 1
        self.a_constraint = stabilizer(pair.P, False)
        self.bc_constraint = stabilizer(pair.Q, not self.b_free)

    @property
    def a_values(self):
        """The finite set of admissible ``a``, or ``None`` when every nonzero ``a`` is admissible."""
        if self.a_constraint.is_family:
            return None
        return sorted(set(1 / w.beta for w in self.a_constraint.witnesses), key = order_key)

    def _a_ok(self, a):
        if self.a_constraint.is_family:
            return True
        return any(w.beta == 1 / a for w in self.a_constraint.witnesses)

    def _q_witness_ok(self, delta, t):
        if self.bc_constraint.is_family:
            return self.bc_constraint.family.at(delta).t == t
        return any(w.beta == delta and w.t == t for w in self.bc_constraint.witnesses)

    def contains(self, a, b, c):
        """Whether ``(a, b, c)`` is an automorphism of the pair."""
        a, b, c = as_rational(a), as_rational(b), as_rational(c)
        if a == 0 or c == 0 or not self._a_ok(a):
            return False
        if self.b_free:
            return self._q_witness_ok(c / a**(self.r0 + 1), 0)
        return self._q_witness_ok(c / a, b / a)

    def triples_for(self, a, values = None):
        """Sample triples with first entry ``a``."""
        a = as_rational(a)
        if values is None:
            values = self.SAMPLE_VALUES
        out = []
        for w in self.bc_constraint.sample(values):
            if self.b_free:
                c = w.beta * a**(self.r0 + 1)
                out.extend((a, as_rational(b), c) for b in itertools.chain((0,), values))
            else:
                out.append((a, a * w.t, a * w.beta))
        return out

    def sample(self, values = None):
        """Finitely many automorphisms, deduplicated, in a deterministic order."""
        if values is None:
            values = self.SAMPLE_VALUES
        a_values = self.a_values
        if a_values is None:
            a_values = [as_rational(v) for v in values]
        seen = set()
        out = []
        for a in a_values:
            for triple in self.triples_for(a, values):
                if triple in seen:
                    continue
                seen.add(triple)
                assert maps_onto(self.pair, self.pair, triple)
                out.append(triple)
        return out

    def diagonal(self, values = None):
        """The ``b = 0`` members of ``sample()``."""
        return [t for t in self.sample(values) if t[1] == 0]

    @property
    def is_finite(self):
        return not (self.b_free or self.a_constraint.is_family or self.bc_constraint.is_family)

    def describe(self):
        a_values = self.a_values
        if a_values is None:
            a_part = "a in k*"
        else:
            a_part = "a in {%s}" % ", ".join(format_rational(a) for a in a_values)
        if self.b_free:
            rest = "b in k, Q(c w / a^%i) ~ Q(w)" % (self.r0 + 1)
        else:
            rest = "Q((c w + b) / a) ~ Q(w)"
        return "%s, %s" % (a_part, rest)

    def to_json(self):
        a_values = self.a_values
        return {
            'r0' : self.r0,
            'b_free' : self.b_free,
            'a_values' : None if a_values is None else [format_rational(a) for a in a_values],
            'a_constraint' : self.a_constraint.to_json(),
            'bc_constraint' : self.bc_constraint.to_json(),
            'description' : self.describe(),
        }


def aut_pair_group(pair):
    """Describe the automorphism group of ``pair``."""
    return AutPairDescription(pair)
