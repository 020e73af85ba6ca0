"""Composition of triangular letters and reduction of birational words.

A word is reduced by repeatedly rewriting one local pattern:

* merge two adjacent triangular letters, dropping identities;
* cancel two reversions, possibly around one automorphism, when the second
  starts at the center undoing the first once pulled back through it;
* merge two reversions through a pair whose polynomials are both linear.

Rewrites of the first kind always come first, then cancellations, then
merges of reversions; within a kind the strategy picks the occurrence.
"""

import numpy as np

from zigzag.errors import LetterError
from zigzag.moduli import pull_back_center
from zigzag.words.Letter import Letter
from zigzag.words.BirWord import BirWord

import logging
logger = logging.getLogger(__name__)


def compose_fibered(l1, l2):
    """The triangular letter of applying ``l1`` and then ``l2``.

    ``(a1, c1, R1)`` followed by ``(a2, c2, R2)`` is
    ``(a2 a1, c2 c1, a2 R1(y) + c1 R2(c1 y))``; the result is an
    automorphism letter when that ``R`` is constant.

    Raises:
        LetterError: if either letter is a reversion, or the letters don't chain.
    """
    if not (l1.is_triangular and l2.is_triangular):
        raise LetterError("Only automorphisms and fibered modifications compose, got %r and %r." % (l1, l2))
    if not l1.target.same_representative(l2.source):
        l1 = compose_fibered(l1, Letter.isomorphism(l1.target, l2.source))
    a = l2.a * l1.a
    c = l2.c * l1.c
    R = l1.R.scale(l2.a) + l2.R.compose_affine(l1.c).scale(l1.c)
    if R.degree() < 1:
        return Letter.automorphism(l1.source, a, R[0], c, target = l2.target)
    return Letter.fibered(l1.source, a, c, R, target = l2.target)


class WordReducer(object):
    """Reduce birational words to words admitting no local simplification.

    Args:
        strategy (str): Which occurrence of the highest priority rewrite is
            applied first: ``"leftmost"``, ``"rightmost"`` or ``"random"``.
        seed (int): Seed for the ``"random"`` strategy.
    """

    LEFTMOST = 'leftmost'
    RIGHTMOST = 'rightmost'
    RANDOM = 'random'
    STRATEGIES = (LEFTMOST, RIGHTMOST, RANDOM)

    DROP = 'drop'
    MERGE = 'merge'
    CANCEL = 'cancel'
    COLLAPSE = 'collapse'

    def __init__(self, strategy = LEFTMOST, seed = None):
        if strategy not in self.STRATEGIES:
            raise ValueError("Unknown reduction strategy `%s`; expected one of %s." % (strategy, ", ".join(self.STRATEGIES)))
        self.strategy = strategy
        self._rng = np.random.default_rng(seed)

    def run(self, word):
        """Reduce ``word``.

        :param BirWord word: The word.
        :rtype: BirWord
        """
        letters = self._normalize(word)
        n_rewrites = 0
        while True:
            tiers = self._rewrites(letters)
            if len(tiers) == 0:
                break
            start, stop, kind = self._choose(tiers[0])
            letters = letters[:start] + self._apply(letters[start:stop], kind) + letters[stop:]
            n_rewrites += 1
            logger.debug("%s at %i: %i letters left" % (kind, start, len(letters)))
        out = BirWord(word.base, letters)
        logger.debug("Reduced %i letters to %i (length %i) in %i rewrites" % (len(word), len(out), out.length, n_rewrites))
        return out

    def has_rewrite(self, word):
        return len(self._rewrites(self._normalize(word))) > 0

    # -- Internals

    def _normalize(self, word):
        """Make the chain exact by inserting isomorphism letters between mismatched representatives."""
        out = []
        end = word.base
        for letter in word.letters:
            if not end.same_representative(letter.source):
                out.append(Letter.isomorphism(end, letter.source))
            out.append(letter)
            end = letter.target
        return out

    def _rewrites(self, letters):
        """Applicable rewrites ``(start, stop, kind)`` grouped by priority; empty tiers are omitted."""
        merges, cancels, collapses = [], [], []
        n = len(letters)
        for i, letter in enumerate(letters):
            if letter.is_identity():
                merges.append((i, i + 1, self.DROP))
            if letter.is_triangular:
                if i + 1 < n and letters[i + 1].is_triangular:
                    merges.append((i, i + 2, self.MERGE))
                continue
            j = i + 1
            middle = None
            if j < n and letters[j].kind == Letter.AUT:
                middle = letters[j]
                j += 1
            if j >= n or not letters[j].is_reversion:
                continue
            if self._cancels(letter, middle, letters[j]):
                cancels.append((i, j + 1, self.CANCEL))
            elif letter.target.P.degree() == 1 and letter.target.Q.degree() == 1:
                collapses.append((i, j + 1, self.COLLAPSE))
        return [t for t in (merges, cancels, collapses) if len(t) > 0]

    @staticmethod
    def _cancels(first, middle, second):
        if first.undo_center is None or second.center is None:
            return False
        center = second.center
        if middle is not None:
            center = pull_back_center(middle.triple, center)
        return center == first.undo_center

    def _choose(self, candidates):
        if self.strategy == self.LEFTMOST:
            return candidates[0]
        if self.strategy == self.RIGHTMOST:
            return candidates[-1]
        return candidates[self._rng.integers(len(candidates))]

    def _apply(self, window, kind):
        if kind == self.DROP:
            return []
        if kind == self.MERGE:
            return [compose_fibered(window[0], window[1])]
        source, target = window[0].source, window[-1].target
        if kind == self.CANCEL:
            if source.same_representative(target):
                return []
            return [Letter.isomorphism(source, target)]
        assert kind == self.COLLAPSE
        return [Letter.merged_reversion(source, target)]


def reduce_word(word, strategy = WordReducer.LEFTMOST, seed = None):
    """Reduce ``word``; see ``WordReducer``."""
    return WordReducer(strategy, seed).run(word)
