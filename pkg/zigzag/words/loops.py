from zigzag.errors import LetterError

import logging
logger = logging.getLogger(__name__)


class LoopProfile(object):
    """How a closed word runs around the fibration graph.

    ``loops`` are the lengths of the simple cycles the cyclically reduced
    path decomposes into, in the order they close; ``conjugator_length`` is
    the number of edges stripped from both ends to make it cyclically
    reduced. The image of an algebraic subgroup is at most one loop of
    length 1 up to conjugation.
    """

    def __init__(self, loops, conjugator_length, vertices):
        self.loops = list(loops)
        self.conjugator_length = conjugator_length
        self.vertices = list(vertices)

    @property
    def algebraic_shaped(self):
        return self.loops in ([], [1])

    def to_json(self):
        return {
            'loops' : self.loops,
            'conjugator_length' : self.conjugator_length,
            'algebraic_shaped' : self.algebraic_shaped,
            'vertices' : [v.to_json() for v in self.vertices],
        }

    def __repr__(self):
        return "LoopProfile(loops=%s, conjugator_length=%i)" % (self.loops, self.conjugator_length)


def _vertex_id(vertices, pair):
    for i, v in enumerate(vertices):
        if v == pair:
            return i
    vertices.append(pair)
    return len(vertices) - 1


def pi1_loop_profile(word):
    """Project a closed word onto the fibration graph and decompose the path into loops.

    Reversions become edges between isomorphism classes; automorphisms and
    fibered modifications are erased. Backtracks are cancelled, with a loop
    at a vertex its own inverse.

    Raises:
        LetterError: if ``word`` is not closed.
    """
    if not word.is_closed():
        raise LetterError("Only closed words have a loop profile; %s ends at %s." % (word.base, word.end))

    vertices = []
    start = _vertex_id(vertices, word.base)
    edges = []
    current = start
    for letter in word:
        if not letter.is_reversion:
            continue
        nxt = _vertex_id(vertices, letter.target)
        edge = (current, nxt)
        if len(edges) > 0 and edges[-1] == (nxt, current):
            edges.pop()
        else:
            edges.append(edge)
        current = nxt

    conjugator_length = 0
    while len(edges) >= 2 and edges[0] == (edges[-1][1], edges[-1][0]):
        edges = edges[1:-1]
        conjugator_length += 1

    loops = []
    if len(edges) > 0:
        stack = [edges[0][0]]
        for u, v in edges:
            if u == v:
                loops.append(1)
                continue
            if v in stack:
                i = len(stack) - 1 - stack[::-1].index(v)
                loops.append(len(stack) - i)
                del stack[i + 1:]
            else:
                stack.append(v)

    logger.debug("Loop profile of a word with %i letters: %s" % (len(word), loops))
    return LoopProfile(loops, conjugator_length, vertices)
