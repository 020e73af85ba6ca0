from collections import namedtuple

import numpy as np

from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

import graphviz

from zigzag.errors import SerializationError
from zigzag.moduli import apply_reversion
from zigzag.util import progress
from zigzag.util.rationals import as_rational, format_rational, parse_rational
from zigzag.util.jsonio import dumps, require_keys

import logging
logger = logging.getLogger(__name__)


Arrow = namedtuple('Arrow', ['src', 'dst', 'center'])
Arrow.__doc__ = """A reversion class from vertex ``src`` to vertex ``dst``, with one center realising it."""


class FibrationGraph(object):
    """A finite window of the graph of fibered completions of a surface.

    Vertices are pairwise non-isomorphic pair classes in discovery order.
    There is at most one arrow per ordered pair of vertices; the reverse of
    an arrow is stored as its own arrow when it was explored. ``frontier``
    holds the vertices that were discovered but not expanded.
    """

    def __init__(self, vertices = (), arrows = (), frontier = ()):
        self.vertices = list(vertices)
        self.arrows = [Arrow(*a) for a in arrows]
        self.frontier = list(frontier)
        self._buckets = {}
        for i, v in enumerate(self.vertices):
            self._buckets.setdefault(hash(v), []).append(i)

    def index_of(self, pair):
        """Index of the vertex isomorphic to ``pair``, or ``None``."""
        for i in self._buckets.get(hash(pair), []):
            if self.vertices[i] == pair:
                return i
        return None

    def add_vertex(self, pair):
        assert self.index_of(pair) is None
        self.vertices.append(pair)
        i = len(self.vertices) - 1
        self._buckets.setdefault(hash(pair), []).append(i)
        return i

    def has_arrow(self, src, dst):
        return any(a.src == src and a.dst == dst for a in self.arrows)

    def edges(self):
        """Unordered vertex pairs joined by an arrow, in order of first appearance; loops are ``(i, i)``."""
        out = []
        seen = set()
        for a in self.arrows:
            key = (min(a.src, a.dst), max(a.src, a.dst))
            if key not in seen:
                seen.add(key)
                out.append(key)
        return out

    def adjacency_matrix(self):
        n = len(self.vertices)
        out = np.zeros(shape = (n, n), dtype = int)
        for i, j in self.edges():
            out[i, j] = 1
            out[j, i] = 1
        return out

    def n_components(self):
        if len(self.vertices) == 0:
            return 0
        n_ccs, _ = connected_components(csr_matrix(self.adjacency_matrix()), directed = False)
        return n_ccs

    def cycle_rank(self):
        """``E - V + C``, counting an arrow and its reverse once and loops as edges."""
        return len(self.edges()) - len(self.vertices) + self.n_components()

    def subgraph_of(self, other):
        """Whether every vertex and arrow of ``self`` has an isomorphic counterpart in ``other``."""
        mapping = []
        for v in self.vertices:
            i = other.index_of(v)
            if i is None:
                return False
            mapping.append(i)
        return all(other.has_arrow(mapping[a.src], mapping[a.dst]) for a in self.arrows)

    # -- Export

    def to_json(self):
        return {
            'vertices' : [v.to_json() for v in self.vertices],
            'arrows' : [
                {'src' : a.src, 'dst' : a.dst, 'center' : format_rational(a.center)}
                for a in self.arrows
            ],
            'frontier' : list(self.frontier),
        }

    @classmethod
    def from_json(cls, data):
        from zigzag.PairClass import PairClass
        require_keys(data, ('vertices', 'arrows', 'frontier'), "fibration graph")
        vertices = [PairClass.from_json(v) for v in data['vertices']]
        arrows = []
        for a in data['arrows']:
            require_keys(a, ('src', 'dst', 'center'), "arrow")
            if not all(isinstance(a[k], int) and 0 <= a[k] < len(vertices) for k in ('src', 'dst')):
                raise SerializationError("Arrow %r points outside the %i vertices." % (a, len(vertices)))
            if not isinstance(a['center'], str):
                raise SerializationError("Arrow center must be a \"p/q\" string, got %r." % (a['center'],))
            arrows.append(Arrow(a['src'], a['dst'], parse_rational(a['center'])))
        frontier = data['frontier']
        if not all(isinstance(i, int) and 0 <= i < len(vertices) for i in frontier):
            raise SerializationError("Frontier %r points outside the %i vertices." % (frontier, len(vertices)))
        return cls(vertices, arrows, frontier)

    def to_dot(self):
        """DOT source; an arrow and its reverse are drawn as one two-headed edge."""
        dot = graphviz.Digraph('fibration_graph')
        for i, v in enumerate(self.vertices):
            attrs = {}
            if i in self.frontier:
                attrs['style'] = 'dashed'
            dot.node('v%i' % i, v.label(), **attrs)
        for i, j in self.edges():
            first = next(a for a in self.arrows if (min(a.src, a.dst), max(a.src, a.dst)) == (i, j))
            attrs = {'label' : format_rational(first.center)}
            if i != j and self.has_arrow(first.dst, first.src):
                attrs['dir'] = 'both'
            dot.edge('v%i' % first.src, 'v%i' % first.dst, **attrs)
        return dot.source

    def export(self, format):
        """Render as ``"dot"`` or ``"json"`` text."""
        if format == 'dot':
            return self.to_dot()
        if format == 'json':
            return dumps(self.to_json())
        raise ValueError("Unknown graph format `%s`; expected dot or json." % format)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return "FibrationGraph(%i vertices, %i arrows, %i on the frontier)" % (
            len(self.vertices), len(self.arrows), len(self.frontier)
        )


class FibrationExplorer(object):
    """Breadth-first exploration of the fibration graph around a seed.

    Every expanded vertex is reverted at every center, in the given order.
    Targets are identified with the first isomorphic vertex already found;
    the first center reaching a vertex labels the arrow.

    Args:
        centers (list): Rational reversion centers, nonempty.
        depth (int): Number of BFS levels to expand.
    """

    def __init__(self, centers, depth):
        centers = [as_rational(c) for c in centers]
        if len(centers) == 0:
            raise ValueError("Need at least one reversion center.")
        if depth < 0:
            raise ValueError("Depth must be nonnegative, got %i." % depth)
        self.centers = centers
        self.depth = depth

    def run(self, seed):
        """Explore from ``seed``.

        :param PairClass seed: The start vertex.
        :rtype: FibrationGraph
        """
        g = FibrationGraph([seed])
        level = [0]
        for d in range(self.depth):
            if len(level) == 0:
                break
            discovered = []
            for i in progress(level, desc = "Level %i" % d):
                for center in self.centers:
                    target = apply_reversion(g.vertices[i], center)
                    j = g.index_of(target)
                    if j is None:
                        j = g.add_vertex(target)
                        discovered.append(j)
                    if not g.has_arrow(i, j):
                        g.arrows.append(Arrow(i, j, center))
                        logger.debug("Arrow %i -> %i at %s" % (i, j, center))
            level = discovered
        g.frontier = list(level)
        logger.info("Explored %i vertices, %i arrows, %i on the frontier" % (len(g.vertices), len(g.arrows), len(g.frontier)))
        return g


def build_graph(seed, centers, depth):
    """Explore the fibration graph around ``seed``; see ``FibrationExplorer``."""
    return FibrationExplorer(centers, depth).run(seed)


def cycle_rank(g):
    return g.cycle_rank()


def export(g, format):
    return g.export(format)
