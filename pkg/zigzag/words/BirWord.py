from zigzag.errors import NonComposableWordError, SerializationError
from zigzag.moduli import pairs_isomorphic
from zigzag.words.Letter import Letter
from zigzag.util.jsonio import require_keys

import logging
logger = logging.getLogger(__name__)


def _composes(end, source):
    return end.same_representative(source) or pairs_isomorphic(end, source) is not None


class BirWord(object):
    """A finite sequence of letters starting at ``base``.

    Consecutive letters only need to chain up to isomorphism: the target of
    each letter must be isomorphic to the source of the next one. Words are
    immutable; ``+`` concatenates and ``inverse()`` reverses.

    :param PairClass base: The start of the word.
    :param list letters: Letters in application order.
    """

    def __init__(self, base, letters = ()):
        self.base = base
        self.letters = tuple(letters)
        end = base
        for i, letter in enumerate(self.letters):
            if not _composes(end, letter.source):
                raise NonComposableWordError(i)
            end = letter.target

    @property
    def end(self):
        if len(self.letters) == 0:
            return self.base
        return self.letters[-1].target

    def is_closed(self):
        return self.end == self.base

    @property
    def length(self):
        """Number of letters that are not automorphisms."""
        return sum(l.length for l in self.letters)

    def is_reduced(self):
        from zigzag.words.reduction import WordReducer
        return not WordReducer().has_rewrite(self)

    def inverse(self):
        return BirWord(self.end, [l.inverse() for l in reversed(self.letters)])

    def __add__(self, other):
        if not isinstance(other, BirWord):
            return NotImplemented
        if not _composes(self.end, other.base):
            raise NonComposableWordError(len(self.letters), "word ending at letter %i does not compose with the next word")
        return BirWord(self.base, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, key):
        return self.letters[key]

    def to_json(self):
        """``{"base": pair, "letters": [...]}``.

        A letter whose source is not the previous target coefficient for
        coefficient also records its ``"source"``.
        """
        letters = []
        end = self.base
        for letter in self.letters:
            data = letter.to_json()
            if not end.same_representative(letter.source):
                data['source'] = letter.source.to_json()
            letters.append(data)
            end = letter.target
        return {
            'base' : self.base.to_json(),
            'letters' : letters,
        }

    @classmethod
    def from_json(cls, data):
        from zigzag.PairClass import PairClass
        require_keys(data, ('base', 'letters'), "word")
        if not isinstance(data['letters'], list):
            raise SerializationError("`letters` must be a list.")
        base = PairClass.from_json(data['base'])
        letters = []
        end = base
        for entry in data['letters']:
            if not isinstance(entry, dict):
                raise SerializationError("Every letter must be a JSON object, got %r." % (entry,))
            source = PairClass.from_json(entry['source']) if 'source' in entry else end
            letter = Letter.from_json(entry, source)
            letters.append(letter)
            end = letter.target
        return cls(base, letters)

    def __eq__(self, other):
        if not isinstance(other, BirWord):
            return NotImplemented
        return self.base.same_representative(other.base) and self.letters == other.letters

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "BirWord(%s: %s)" % (self.base, " ".join(repr(l) for l in self.letters))
