from zigzag.errors import LetterError, SerializationError
from zigzag.poly import Poly
from zigzag.moduli import pairs_isomorphic, maps_onto, apply_reversion, transport_center
from zigzag.util.rationals import as_rational, format_rational, parse_rational
from zigzag.util.jsonio import require_keys

import logging
logger = logging.getLogger(__name__)


class Letter(object):
    """One step of a birational word between standard pairs.

    Triangular letters (``aut`` and ``fib``) carry ``(a, c, R)`` and stand for
    ``(x, y) -> (a x + y R(y), c y)``; an ``aut`` letter has constant ``R = b``.
    Reversion letters carry the center on the source and the center on the
    target that undoes them. Merged reversions (two reversions through a pair
    of degrees ``(1, 1)``) have both centers unresolved (``None``).

    Build letters with the classmethods, never with ``__init__``.
    """

    AUT = 'aut'
    FIBERED = 'fib'
    REVERSION = 'rev'
    KINDS = (AUT, FIBERED, REVERSION)

    def __init__(self, kind, source, target, a = None, c = None, R = None, center = None, undo_center = None):
        assert kind in self.KINDS
        self.kind = kind
        self.source = source
        self.target = target
        self.a = a
        self.c = c
        self.R = R
        self.center = center
        self.undo_center = undo_center

    # -- Constructors

    @classmethod
    def automorphism(cls, source, a, b, c, target = None):
        """The triangular isomorphism ``(x, y) -> (a x + b y, c y)`` from ``source`` to ``target`` (default ``source``).

        Raises:
            LetterError: if ``(a, b, c)`` does not map ``source`` onto ``target``.
        """
        if target is None:
            target = source
        a, b, c = as_rational(a), as_rational(b), as_rational(c)
        if a == 0 or c == 0:
            raise ValueError("Triangular letters need a, c nonzero, got a = %s, c = %s." % (a, c))
        if not maps_onto(source, target, (a, b, c)):
            raise LetterError("(%s, %s, %s) does not map %s onto %s." % (a, b, c, source, target))
        return cls(cls.AUT, source, target, a = a, c = c, R = Poly([b]))

    @classmethod
    def fibered(cls, source, a, c, R, target = None):
        """A fibered modification ``(x, y) -> (a x + y R(y), c y)`` with ``deg R >= 1``."""
        if target is None:
            target = source
        if not isinstance(R, Poly):
            R = Poly(R)
        a, c = as_rational(a), as_rational(c)
        if a == 0 or c == 0:
            raise ValueError("Triangular letters need a, c nonzero, got a = %s, c = %s." % (a, c))
        if R.degree() < 1:
            raise LetterError("A fibered modification needs deg R >= 1; %s is an automorphism." % R)
        if not maps_onto(source, target, (a, R[0], c)):
            raise LetterError("(%s, %s, %s) does not map %s onto %s." % (a, R[0], c, source, target))
        return cls(cls.FIBERED, source, target, a = a, c = c, R = R)

    @classmethod
    def isomorphism(cls, source, target):
        """The automorphism letter of the smallest isomorphism witness from ``source`` to ``target``."""
        witness = pairs_isomorphic(source, target)
        if witness is None:
            raise LetterError("%s is not isomorphic to %s." % (source, target))
        return cls.automorphism(source, *witness.triple(source.r0), target = target)

    @classmethod
    def reversion(cls, source, center, target = None):
        """The reversion of ``source`` centered at ``center``.

        Without ``target`` the letter ends at ``apply_reversion(source, center)``
        itself. Otherwise it ends at ``target``, which must be isomorphic to
        that class, and the undoing center is transported along the
        isomorphism.
        """
        center = as_rational(center)
        raw = apply_reversion(source, center)
        undo = as_rational(0)
        if target is None:
            target = raw
        elif not target.same_representative(raw):
            witness = pairs_isomorphic(raw, target)
            if witness is None:
                raise LetterError(
                    "The reversion of %s at %s ends at %s, which is not isomorphic to %s." % (source, center, raw, target)
                )
            undo = transport_center(witness.triple(raw.r0), 0)
        logger.debug("rev(%s): %s -> %s" % (center, source, target))
        return cls(cls.REVERSION, source, target, center = center, undo_center = undo)

    @classmethod
    def merged_reversion(cls, source, target):
        """A reversion whose center is unresolved."""
        logger.warning("Reversion %s -> %s has an unresolved center." % (source, target))
        return cls(cls.REVERSION, source, target)

    # -- Properties

    @property
    def is_triangular(self):
        return self.kind != self.REVERSION

    @property
    def is_reversion(self):
        return self.kind == self.REVERSION

    @property
    def is_resolved(self):
        return not self.is_reversion or self.center is not None

    @property
    def b(self):
        assert self.is_triangular
        return self.R[0]

    @property
    def triple(self):
        """``(a, b, c)``; for a fibered letter the linear part of the map."""
        assert self.is_triangular
        return (self.a, self.R[0], self.c)

    @property
    def length(self):
        """0 for automorphisms, 1 otherwise."""
        return 0 if self.kind == self.AUT else 1

    def is_identity(self):
        return self.kind == self.AUT and \
               self.triple == (1, 0, 1) and \
               self.source.same_representative(self.target)

    def inverse(self):
        if self.is_reversion:
            return Letter(self.REVERSION, self.target, self.source, center = self.undo_center, undo_center = self.center)
        a, c = self.a, self.c
        R = self.R.compose_affine(1 / c).scale(-1 / (a * c))
        return Letter(self.kind, self.target, self.source, a = 1 / a, c = 1 / c, R = R)

    # -- Serialization

    def to_json(self):
        out = {'kind' : self.kind}
        if self.is_reversion:
            out['center'] = None if self.center is None else format_rational(self.center)
            out['undo_center'] = None if self.undo_center is None else format_rational(self.undo_center)
        elif self.kind == self.FIBERED:
            out['a'] = format_rational(self.a)
            out['c'] = format_rational(self.c)
            out['R'] = self.R.to_json()
        else:
            out['a'] = format_rational(self.a)
            out['b'] = format_rational(self.b)
            out['c'] = format_rational(self.c)
        out['target'] = self.target.to_json()
        return out

    @classmethod
    def from_json(cls, data, source):
        """Rebuild a letter starting at ``source``; ``"target"`` is optional except for merged reversions."""
        from zigzag.PairClass import PairClass
        require_keys(data, ('kind',), "letter")
        kind = data['kind']
        target = PairClass.from_json(data['target']) if data.get('target') is not None else None
        if kind == cls.REVERSION:
            if data.get('center') is None:
                if target is None:
                    raise SerializationError("A reversion with unresolved center needs a target.")
                return cls.merged_reversion(source, target)
            return cls.reversion(source, _rational_field(data, 'center'), target = target)
        if kind == cls.FIBERED:
            require_keys(data, ('a', 'c', 'R'), "fibered letter")
            return cls.fibered(
                source,
                _rational_field(data, 'a'),
                _rational_field(data, 'c'),
                Poly.from_json(data['R']),
                target = target
            )
        if kind == cls.AUT:
            require_keys(data, ('a', 'b', 'c'), "automorphism letter")
            return cls.automorphism(
                source,
                _rational_field(data, 'a'),
                _rational_field(data, 'b'),
                _rational_field(data, 'c'),
                target = target
            )
        raise SerializationError("Unknown letter kind `%s`; expected one of %s." % (kind, ", ".join(cls.KINDS)))

    # -- Identity

    def _data(self):
        return (self.kind, self.a, self.c, self.R, self.center, self.undo_center)

    def __eq__(self, other):
        if not isinstance(other, Letter):
            return NotImplemented
        return self._data() == other._data() and \
               self.source.same_representative(other.source) and \
               self.target.same_representative(other.target)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self._data())

    def __repr__(self):
        if self.is_reversion:
            return "rev(%s)" % ("?" if self.center is None else self.center)
        if self.kind == self.FIBERED:
            return "fib(%s, %s, %s)" % (self.a, self.c, self.R)
        return "aut(%s, %s, %s)" % self.triple


def _rational_field(data, key):
    value = data[key]
    if not isinstance(value, str):
        raise SerializationError("`%s` must be a \"p/q\" string, got %r." % (key, value))
    return parse_rational(value)
