"""Root data of rational polynomials at Galois-orbit granularity.

Nothing here isolates individual roots: multiplicities come from the
squarefree decomposition and orbits from factorisation over QQ.
"""

from collections import namedtuple

from zigzag.errors import UndefinedProfileError
from zigzag.poly.Poly import Poly


class MultiplicityProfile(object):
    """``count`` distinct roots (over the algebraic closure) of each ``multiplicity``.

    Entries are ``(multiplicity, count)`` with decreasing multiplicity and
    positive counts.
    """

    def __init__(self, entries):
        agg = {}
        for m, c in entries:
            assert m >= 1 and c >= 0
            agg[m] = agg.get(m, 0) + c
        self.entries = tuple(sorted(((m, c) for m, c in agg.items() if c > 0), reverse = True))

    @property
    def degree(self):
        return sum(m * c for m, c in self.entries)

    @property
    def n_distinct(self):
        return sum(c for _, c in self.entries)

    @property
    def is_squarefree(self):
        return all(m == 1 for m, _ in self.entries)

    def as_dict(self):
        return dict(self.entries)

    def to_json(self):
        return [[m, c] for m, c in self.entries]

    def __eq__(self, other):
        if isinstance(other, MultiplicityProfile):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "MultiplicityProfile(%r)" % (self.entries,)


RootOrbit = namedtuple('RootOrbit', ['factor', 'multiplicity'])
RootOrbit.__doc__ = """The conjugate roots of a monic irreducible ``factor``, each with ``multiplicity``."""
RootOrbit.size = property(lambda self: self.factor.degree())


def multiplicity_profile(p):
    """Multiplicities of the roots of ``p`` from its squarefree decomposition.

    Raises:
        UndefinedProfileError: for the zero polynomial.
    """
    if p.is_zero:
        raise UndefinedProfileError('multiplicity_profile')
    _, factors = p.as_sympy().sqf_list()
    return MultiplicityProfile((k, f.degree()) for f, k in factors)


def vanishing_order(p):
    """Multiplicity of 0 as a root of ``p``."""
    if p.is_zero:
        raise UndefinedProfileError('vanishing_order')
    return p.support()[0]


def root_orbits(p):
    """Galois orbits of the nonzero roots of ``p``.

    Returns:
        ``(zero_multiplicity, orbits)`` where ``orbits`` is a list of
        ``RootOrbit`` sorted by orbit size and then by the coefficients of the
        factor.
    """
    if p.is_zero:
        raise UndefinedProfileError('root_orbits')
    r0 = vanishing_order(p)
    _, factors = p.as_sympy().factor_list()
    orbits = []
    for f, k in factors:
        f = Poly.from_sympy(f).monic()
        if f == Poly.monomial(1):
            continue
        orbits.append(RootOrbit(f, k))
    orbits.sort(key = lambda o: (o.factor.degree(), o.factor.coeffs, -o.multiplicity))
    return r0, orbits
