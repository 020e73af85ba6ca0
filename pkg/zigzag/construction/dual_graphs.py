"""The dual graphs attached to a pair ``(P, Q)``.

The boundary is ``F(0) - C(-1) - E_1(-a) - E_2(-b)``. Every Galois orbit of
nonzero roots of ``P`` gives a (-1)-curve ``A_i`` on ``E_1`` carrying a block
of ``r_i - 1`` (-2)-curves; every orbit of roots of ``Q`` (nonzero ones if
``P(0) = 0``) gives a (-1)-curve ``B_j`` on ``E_2`` with a block of
``s_j - 1``. The root 0 of ``w P(w)`` is ``E_2`` itself in case I; in case II
it is a (-2)-curve ``A_0`` on ``E_2`` and in case III the chain
``E_2 - B_0 - chainB_0 - A_0(-3) - chainA_0``.
"""

from zigzag.PairClass import classify_case, CASE_I, CASE_II, CASE_III
from zigzag.poly import Poly, root_orbits, vanishing_order
from zigzag.poly.roots import RootOrbit
from zigzag.construction.DualGraph import DualGraph
from zigzag.util.rationals import as_rational

import logging
logger = logging.getLogger(__name__)


def q_root_orbits(P, Q):
    """The orbits indexed by ``B_1, B_2, ...``.

    When ``P(0) != 0`` the root 0 of ``Q`` is an ordinary orbit and comes
    first; otherwise it is handled as ``B_0``.
    """
    s0, orbits = root_orbits(Q)
    if P[0] != 0 and s0 > 0:
        orbits = [RootOrbit(Poly.monomial(1), s0)] + orbits
    return orbits


def dual_graph(P, Q):
    """The dual graph of the boundary and degenerate fibre of the pair ``(P, Q)``.

    :rtype: DualGraph
    """
    case = classify_case(P, Q)
    g = DualGraph(case)

    g.add_node('F', 0)
    g.add_node('C', -1)
    g.add_node('E_1', -(P.degree() + 1))
    g.add_node('E_2', -(Q.degree() + 1))
    g.add_edge('F', 'C')
    g.add_edge('C', 'E_1')
    g.add_edge('E_1', 'E_2')

    r0, p_orbits = root_orbits(P)
    for i, orbit in enumerate(p_orbits, start = 1):
        name = g.add_node('A_%i' % i, -1, orbit = orbit.size, multiplicity = orbit.multiplicity)
        g.add_edge('E_1', name)
        g.attach_chain(name, 'chainA_%i' % i, orbit.multiplicity - 1, orbit = orbit.size)

    if case == CASE_II:
        g.add_node('A_0', -2, multiplicity = r0)
        g.add_edge('E_2', 'A_0')
        g.attach_chain('A_0', 'chainA_0', r0 - 1)
    elif case == CASE_III:
        s0 = vanishing_order(Q)
        g.add_node('B_0', -1, multiplicity = s0)
        g.add_edge('E_2', 'B_0')
        end = g.attach_chain('B_0', 'chainB_0', s0 - 1)
        g.add_node('A_0', -3, multiplicity = r0)
        g.add_edge(end, 'A_0')
        g.attach_chain('A_0', 'chainA_0', r0 - 1)

    for j, orbit in enumerate(q_root_orbits(P, Q), start = 1):
        name = g.add_node('B_%i' % j, -1, orbit = orbit.size, multiplicity = orbit.multiplicity)
        g.add_edge('E_2', name)
        g.attach_chain(name, 'chainB_%i' % j, orbit.multiplicity - 1, orbit = orbit.size)

    logger.debug("Dual graph of case %s: %i nodes" % (case, len(g.nodes)))
    return g


def section_augmented_graph(P, Q, center):
    """``dual_graph(P, Q)`` plus the sections ``D_0, ..., D_l`` through the point ``center`` of ``F``.

    Every ``D_i`` meets ``F``. ``D_i`` (``i >= 1``) has weight 0 and meets the
    last component of the chain of ``A_i``. ``D_0`` depends on the case:

    * ``Ia`` (``P(0) != 0``, ``Q(center) != 0``): weight 0, meets ``E_2``.
    * ``Ib`` (``P(0) != 0``, ``Q(center) = 0``): weight -1, meets the last
      component of the chain of the ``B_j`` of the root ``center``.
    * ``II`` and ``III``: weight 0, meets the last component of the chain of ``A_0``.
    """
    center = as_rational(center)
    g = dual_graph(P, Q)

    if g.case == CASE_I:
        if Q(center) != 0:
            g.section_case = 'Ia'
            g.add_node('D_0', 0)
            g.add_edge('F', 'D_0')
            g.add_edge('D_0', 'E_2')
        else:
            g.section_case = 'Ib'
            factor = Poly([-center, 1])
            j = [o.factor for o in q_root_orbits(P, Q)].index(factor) + 1
            g.add_node('D_0', -1)
            g.add_edge('F', 'D_0')
            g.add_edge('D_0', g.chain_end('B_%i' % j))
    else:
        g.section_case = g.case
        g.add_node('D_0', 0)
        g.add_edge('F', 'D_0')
        g.add_edge('D_0', g.chain_end('A_0'))

    for node in g.curves('A_'):
        i = int(node.name[2:])
        if i == 0:
            continue
        name = g.add_node('D_%i' % i, 0, orbit = node.orbit)
        g.add_edge('F', name)
        g.add_edge(name, g.chain_end(node.name))

    return g
