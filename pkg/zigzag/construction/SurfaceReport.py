from collections import namedtuple

from zigzag.PairClass import classify_case, CASE_I, CASE_II, CASE_III
from zigzag.construction.dual_graphs import dual_graph

import logging
logger = logging.getLogger(__name__)


Singularity = namedtuple('Singularity', ['component', 'kind', 'order', 'chain'])
Singularity.__doc__ = """A singular point of the surface supported on ``component``.

``kind`` is ``"cyclic-quotient"`` with ``order`` set, or ``"chain"`` for the
point resolved by ``chainB_0 > E_3 > chainA_0`` with ``chain`` the two block
lengths.
"""

FiberComponent = namedtuple('FiberComponent', ['component', 'multiplicity', 'orbit'])


class SurfaceReport(object):
    """Smoothness, singular points and degenerate fibre of the surface of a pair."""

    CYCLIC_QUOTIENT = 'cyclic-quotient'
    CHAIN = 'chain'

    def __init__(self, case, smooth, singularities, fiber_multiplicities):
        assert not (case == CASE_III and smooth)
        assert not (smooth and len(singularities) > 0)
        self.case = case
        self.smooth = smooth
        self.singularities = list(singularities)
        self.fiber_multiplicities = list(fiber_multiplicities)

    @property
    def reduced_fiber(self):
        """Whether every component of the degenerate fibre has multiplicity 1."""
        return all(f.multiplicity == 1 for f in self.fiber_multiplicities)

    def multiplicity(self, component):
        for f in self.fiber_multiplicities:
            if f.component == component:
                return f.multiplicity
        raise KeyError(component)

    def to_json(self):
        sings = []
        for s in self.singularities:
            entry = {'component' : s.component, 'kind' : s.kind}
            if s.kind == self.CYCLIC_QUOTIENT:
                entry['order'] = s.order
            else:
                entry['chain'] = list(s.chain)
            sings.append(entry)
        return {
            'case' : self.case,
            'smooth' : self.smooth,
            'reduced_fiber' : self.reduced_fiber,
            'singularities' : sings,
            'fiber_multiplicities' : [
                {'component' : f.component, 'multiplicity' : f.multiplicity, 'orbit' : f.orbit}
                for f in self.fiber_multiplicities
            ],
        }

    def to_text(self):
        lines = ["case %s, %s" % (self.case, "smooth" if self.smooth else "singular")]
        for f in self.fiber_multiplicities:
            orbit = "" if f.orbit == 1 else " (x%i)" % f.orbit
            lines.append("  %s%s: multiplicity %i" % (f.component, orbit, f.multiplicity))
        for s in self.singularities:
            if s.kind == self.CYCLIC_QUOTIENT:
                lines.append("  singular point on %s: cyclic quotient of order %i" % (s.component, s.order))
            else:
                lines.append("  singular point on %s: chain [%i] > -3 > [%i]" % ((s.component,) + tuple(s.chain)))
        return "\n".join(lines) + "\n"


def surface_report(P, Q):
    """Singularities and fibre multiplicities of the surface of ``(P, Q)``.

    The surface is smooth iff the case is I or II and ``P`` and ``Q`` are
    squarefree. Multiplicities of fibre components are ``r_i`` for ``A_i``
    and ``s_j`` for ``B_j`` in case I; in cases II and III a ``B_j`` has
    ``(r0 + 1) s_j`` and, in case III, ``B_0`` has ``(s0 + 1)(r0 + 1) - 1``.
    """
    case = classify_case(P, Q)
    g = dual_graph(P, Q)
    r0 = P.support()[0]
    s0 = Q.support()[0]

    fibers = []
    sings = []

    def add(node, multiplicity):
        fibers.append(FiberComponent(node.name, multiplicity, node.orbit))
        if node.multiplicity >= 2:
            sings.append(Singularity(node.name, SurfaceReport.CYCLIC_QUOTIENT, node.multiplicity, None))

    if case == CASE_II:
        add(g.component('A_0'), r0)
    for node in g.curves('A_'):
        if node.name != 'A_0':
            add(node, node.multiplicity)
    if case == CASE_III:
        fibers.append(FiberComponent('B_0', (s0 + 1) * (r0 + 1) - 1, 1))
        sings.append(Singularity('B_0', SurfaceReport.CHAIN, None, (s0 - 1, r0 - 1)))
    for node in g.curves('B_'):
        if node.name == 'B_0':
            continue
        factor = 1 if case == CASE_I else r0 + 1
        add(node, factor * node.multiplicity)

    smooth = case in (CASE_I, CASE_II) and P.is_squarefree() and Q.is_squarefree()
    return SurfaceReport(case, smooth, sings, fibers)
