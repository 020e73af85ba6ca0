from collections import namedtuple, OrderedDict

import numpy as np

import graphviz

from zigzag.errors import SerializationError

import logging
logger = logging.getLogger(__name__)


DualNode = namedtuple('DualNode', ['name', 'weight', 'block', 'orbit', 'multiplicity'])
DualNode.__doc__ = """A curve of a dual graph, or a block of ``weight`` many (-2)-curves when ``block`` is set.

``orbit`` is the number of conjugate curves the node stands for and
``multiplicity`` the root multiplicity it comes from (``None`` on the
boundary).
"""


class DualGraph(object):
    """Weighted dual graph of a boundary zigzag and the degenerate fibre.

    Nodes are kept in insertion order; the boundary ``F, C, E_1, E_2`` is
    always inserted first. Chains of (-2)-curves are collapsed into a single
    block node ``chainA_i``/``chainB_j`` whose weight is the chain length;
    empty chains are omitted.

    :param str case: The construction case of the pair.
    """

    BOUNDARY = ('F', 'C', 'E_1', 'E_2')

    def __init__(self, case):
        self.case = case
        self.section_case = None
        self._nodes = OrderedDict()
        self._edges = []
        self._ends = {}

    def add_node(self, name, weight, block = False, orbit = 1, multiplicity = None):
        assert name not in self._nodes, "Duplicate node %s" % name
        self._nodes[name] = DualNode(name, int(weight), block, orbit, multiplicity)
        return name

    def add_edge(self, u, v):
        assert u in self._nodes and v in self._nodes
        self._edges.append((u, v))

    def attach_chain(self, anchor, name, length, orbit = 1):
        """Hang a block of ``length`` (-2)-curves off ``anchor``.

        Returns:
            The far end of the chain: the block, or ``anchor`` if ``length`` is 0.
        """
        assert length >= 0
        end = anchor
        if length > 0:
            self.add_node(name, length, block = True, orbit = orbit)
            self.add_edge(anchor, name)
            end = name
        self._ends[anchor] = end
        return end

    def chain_end(self, name):
        """The last component of the block hanging off ``name`` (``name`` itself if there is none)."""
        return self._ends.get(name, name)

    # -- Queries

    @property
    def nodes(self):
        return list(self._nodes.values())

    @property
    def edges(self):
        return list(self._edges)

    def component(self, name):
        return self._nodes[name]

    def __contains__(self, name):
        return name in self._nodes

    def boundary(self):
        return [self._nodes[n] for n in self.BOUNDARY]

    def neighbours(self, name):
        out = []
        for u, v in self._edges:
            if u == name:
                out.append(v)
            elif v == name:
                out.append(u)
        return out

    def blocks(self):
        return [n for n in self._nodes.values() if n.block]

    def curves(self, prefix):
        """Non-block nodes whose name starts with ``prefix``, e.g. ``"A_"``."""
        return [n for n in self._nodes.values() if not n.block and n.name.startswith(prefix)]

    def adjacency_matrix(self):
        names = list(self._nodes)
        index = {n : i for i, n in enumerate(names)}
        out = np.zeros(shape = (len(names), len(names)), dtype = int)
        for u, v in self._edges:
            out[index[u], index[v]] += 1
            out[index[v], index[u]] += 1
        return out

    # -- Export

    @staticmethod
    def node_label(node):
        if node.block:
            return "%s[%i]" % (node.name, node.weight)
        return "%s:%i" % (node.name, node.weight)

    def to_dot(self):
        dot = graphviz.Graph('dual_graph')
        for node in self._nodes.values():
            attrs = {}
            if node.block:
                attrs['shape'] = 'box'
            if node.orbit > 1:
                attrs['xlabel'] = "x%i" % node.orbit
            dot.node(node.name, self.node_label(node), **attrs)
        for u, v in self._edges:
            dot.edge(u, v)
        return dot.source

    def to_json(self):
        return {
            'case' : self.case,
            'section_case' : self.section_case,
            'nodes' : [
                {
                    'name' : n.name,
                    'weight' : n.weight,
                    'block' : n.block,
                    'orbit' : n.orbit,
                    'multiplicity' : n.multiplicity,
                } for n in self._nodes.values()
            ],
            'edges' : [[u, v] for u, v in self._edges],
        }

    @classmethod
    def from_json(cls, data):
        try:
            g = cls(data['case'])
            g.section_case = data.get('section_case')
            for n in data['nodes']:
                g.add_node(n['name'], n['weight'], n['block'], n['orbit'], n['multiplicity'])
            for u, v in data['edges']:
                g.add_edge(u, v)
        except (KeyError, TypeError, ValueError, AssertionError) as e:
            raise SerializationError("Malformed dual graph: %s" % e)
        return g

    def __repr__(self):
        return "DualGraph(case=%s, %i nodes, %i edges)" % (self.case, len(self._nodes), len(self._edges))
