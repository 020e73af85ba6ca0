from collections import namedtuple

import sympy

from zigzag.util.rationals import as_rational, format_rational, order_key


class SubstitutionWitness(namedtuple('SubstitutionWitness', ['alpha', 'beta', 't'])):
    """A substitution ``p2(w) = alpha * p(beta * w + t)``.

    For the scale problem ``t`` is always zero. In the notation of pair
    isomorphisms the P-witness is read as ``(alpha, beta)`` and the Q-witness
    as ``(gamma, delta, t)``.
    """

    __slots__ = ()

    def __new__(cls, alpha, beta, t = 0):
        alpha = as_rational(alpha)
        beta = as_rational(beta)
        if alpha == 0 or beta == 0:
            raise ValueError("Witness (%s, %s, %s) is not invertible." % (alpha, beta, t))
        return super().__new__(cls, alpha, beta, as_rational(t))

    @classmethod
    def identity(cls):
        return cls(1, 1, 0)

    def apply(self, p):
        return p.compose_affine(self.beta, self.t).scale(self.alpha)

    def compose(self, other):
        """The witness of applying ``self`` and then ``other``."""
        return SubstitutionWitness(
            self.alpha * other.alpha,
            self.beta * other.beta,
            self.beta * other.t + self.t
        )

    def inverse(self):
        return SubstitutionWitness(1 / self.alpha, 1 / self.beta, -self.t / self.beta)

    def order_key(self):
        return order_key(self.beta) + order_key(self.alpha) + order_key(self.t)

    def to_json(self):
        return {
            'alpha' : format_rational(self.alpha),
            'beta' : format_rational(self.beta),
            't' : format_rational(self.t),
        }


class MonomialFamily(namedtuple('MonomialFamily',
                                ['source_coeff', 'target_coeff', 'degree', 'source_shift', 'target_shift'])):
    """All witnesses between ``kappa * (w - s)^n`` and ``kappa2 * (w - s2)^n``.

    Every nonzero ``beta`` works, with ``alpha = kappa2 / (kappa * beta^n)``
    and ``t = s - beta * s2``. Scale problems have ``s = s2 = 0``.
    """

    __slots__ = ()

    def at(self, beta):
        beta = as_rational(beta)
        assert beta != 0
        return SubstitutionWitness(
            self.target_coeff / (self.source_coeff * beta**self.degree),
            beta,
            self.source_shift - beta * self.target_shift
        )

    def contains(self, witness):
        return witness == self.at(witness.beta)

    def to_json(self):
        return {
            'source_coeff' : format_rational(self.source_coeff),
            'target_coeff' : format_rational(self.target_coeff),
            'degree' : self.degree,
            'source_shift' : format_rational(self.source_shift),
            'target_shift' : format_rational(self.target_shift),
        }


class SolutionSet(object):
    """The set of substitution witnesses between two polynomials.

    ``kind`` is one of ``EMPTY``, ``FINITE`` or ``ONE_PARAMETER_MONOMIAL``.
    Finite sets keep their witnesses deduplicated and sorted by
    ``SubstitutionWitness.order_key``; a one-parameter family is represented
    by its ``beta = 1`` member.
    """

    EMPTY = 'empty'
    FINITE = 'finite'
    ONE_PARAMETER_MONOMIAL = 'one-parameter-monomial'

    # Betas tried by ``sample()`` on a family.
    SAMPLE_BETAS = (1, -1, 2, sympy.Rational(1, 2), -2, 3)

    def __init__(self, kind, witnesses = (), family = None):
        assert kind in (self.EMPTY, self.FINITE, self.ONE_PARAMETER_MONOMIAL)
        assert (family is not None) == (kind == self.ONE_PARAMETER_MONOMIAL)
        self.kind = kind
        self.family = family
        if kind == self.FINITE:
            ws = sorted(set(witnesses), key = SubstitutionWitness.order_key)
            if len(ws) == 0:
                self.kind = self.EMPTY
            self._witnesses = tuple(ws)
        else:
            self._witnesses = ()

    @classmethod
    def empty(cls):
        return cls(cls.EMPTY)

    @classmethod
    def finite(cls, witnesses):
        return cls(cls.FINITE, witnesses)

    @classmethod
    def monomial_family(cls, family):
        return cls(cls.ONE_PARAMETER_MONOMIAL, family = family)

    @property
    def is_empty(self):
        return self.kind == self.EMPTY

    @property
    def is_family(self):
        return self.kind == self.ONE_PARAMETER_MONOMIAL

    def __bool__(self):
        return not self.is_empty

    @property
    def witnesses(self):
        """The finite witness list; for a family, its representative only."""
        if self.is_family:
            return (self.family.at(1),)
        return self._witnesses

    def representative(self):
        """The smallest witness, or ``None`` for the empty set."""
        if self.is_empty:
            return None
        return self.witnesses[0]

    def contains(self, witness):
        if self.is_family:
            return self.family.contains(witness)
        return witness in self._witnesses

    def sample(self, betas = None):
        """Finitely many members: all of a finite set, or ``at(beta)`` for a family."""
        if not self.is_family:
            return list(self._witnesses)
        if betas is None:
            betas = self.SAMPLE_BETAS
        return [self.family.at(b) for b in betas]

    def to_json(self):
        out = {'kind' : self.kind}
        if self.kind == self.FINITE:
            out['witnesses'] = [w.to_json() for w in self._witnesses]
        elif self.is_family:
            out['family'] = self.family.to_json()
        return out

    def __repr__(self):
        if self.is_family:
            return "SolutionSet(%s, %r)" % (self.kind, self.family)
        return "SolutionSet(%s, %r)" % (self.kind, list(self._witnesses))
