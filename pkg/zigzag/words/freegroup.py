"""Zeta cycles and certificates that a family of them generates a free group.

For a pair ``[P, Q]`` with ``P(0) != 0`` and ``a != 0`` the zeta word is the
closed word of four reversions

    ``[P, Q] -> [Q, P] -> [P(w + a), Q] -> [Q(w + a), P] -> [P, Q]``

with centers ``0, a, a, 0``. Products of zeta words are written as lists of
syllables ``(a, +1)`` / ``(a, -1)`` in application order, so the product
``zeta_a zeta_b`` is ``[(b, 1), (a, 1)]``.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor

from zigzag.errors import CaseMismatchError, ZetaPreconditionError, FreeFamilyError, LetterError
from zigzag.PairClass import PairClass, CASE_I
from zigzag.moduli import IsoWitness, pairs_isomorphic
from zigzag.words.Letter import Letter
from zigzag.words.BirWord import BirWord
from zigzag.words.reduction import WordReducer
from zigzag.util import progress
from zigzag.util.config import REPAIR_SHIFTS
from zigzag.util.rationals import as_rational, format_rational, parse_rational

import logging
logger = logging.getLogger(__name__)


CYCLE_NAMES = ('[P, Q]', '[Q, P]', '[P(w + a), Q]', '[Q(w + a), P]')
CYCLE_CENTERS = ('0', 'a', 'a', '0')


def zeta_classes(base, a):
    """The four classes of the zeta cycle of ``base`` at ``a``, in the order of ``CYCLE_NAMES``."""
    P, Q = base.P, base.Q
    return (base, PairClass(Q, P), PairClass(P.shift(a), Q), PairClass(Q.shift(a), P))


def zeta_word(base, a):
    """The zeta word of ``base`` at ``a``.

    Raises:
        CaseMismatchError: if ``base`` is not of case I.
        ZetaPreconditionError: if ``a = 0`` or two classes of the cycle are isomorphic.
    """
    if base.case != CASE_I:
        raise CaseMismatchError('zeta_word', CASE_I, base.case)
    a = as_rational(a)
    if a == 0:
        raise ZetaPreconditionError("a = 0", base, base, IsoWitness.identity())
    classes = zeta_classes(base, a)
    for (i, c1), (j, c2) in itertools.combinations(enumerate(classes), 2):
        witness = pairs_isomorphic(c1, c2)
        if witness is not None:
            raise ZetaPreconditionError("%s ~ %s" % (CYCLE_NAMES[i], CYCLE_NAMES[j]), c1, c2, witness)

    letters = []
    for k, center in enumerate((0, a, a, 0)):
        source, target = classes[k], classes[(k + 1) % 4]
        try:
            letters.append(Letter.reversion(source, center, target = target))
        except LetterError:
            raise ZetaPreconditionError(
                "the reversion of %s at %s misses %s" % (CYCLE_NAMES[k], CYCLE_CENTERS[k], CYCLE_NAMES[(k + 1) % 4]),
                source, target, None
            )
    return BirWord(base, letters)


def zeta_product(base, syllables, zetas = None):
    """The product of zeta words given as ``[(a, +-1), ...]`` in application order.

    ``zetas`` optionally caches zeta words by parameter.
    """
    if zetas is None:
        zetas = {}
    letters = []
    for a, sign in syllables:
        a = as_rational(a)
        if a not in zetas:
            zetas[a] = zeta_word(base, a)
        word = zetas[a] if sign > 0 else zetas[a].inverse()
        letters.extend(word.letters)
    return BirWord(base, letters)


def syllable_sequences(parameters, max_syllables):
    """All freely reduced syllable sequences of length ``1 .. max_syllables``."""
    syllables = [(a, sign) for a in parameters for sign in (1, -1)]
    for k in range(1, max_syllables + 1):
        for seq in itertools.product(syllables, repeat = k):
            if any(x[0] == y[0] and x[1] == -y[1] for x, y in zip(seq, seq[1:])):
                continue
            yield seq


def predicted_length(syllables):
    """Reduced length of a zeta product over a certified family with nonnegative parameters.

    Every syllable contributes four reversions; an inverse syllable followed
    by a direct one loses the two reversions through ``[P, Q]``.
    """
    junctions = sum(1 for x, y in zip(syllables, syllables[1:]) if x[1] < 0 and y[1] > 0)
    return 4 * len(syllables) - 2 * junctions


def _reduced_length(base, syllables, zetas):
    return WordReducer().run(zeta_product(base, syllables, zetas)).length


def _reduce_chunk(payload):
    base_json, chunk = payload
    base = PairClass.from_json(base_json)
    zetas = {}
    return [
        _reduced_length(base, [(parse_rational(a), sign) for a, sign in seq], zetas)
        for seq in chunk
    ]


class FreeFamilyCertificate(object):
    """The outcome of certifying a parameter family.

    ``checks`` lists every verified non-isomorphism; ``failure`` is the first
    violated condition as a ``FreeFamilyError``, or ``None``.
    """

    def __init__(self, base, family, max_syllables):
        self.base = base
        self.family = list(family)
        self.max_syllables = max_syllables
        self.shift = 0
        self.checks = []
        self.lengths = {}
        self.unexpected_lengths = 0
        self.failure = None

    @property
    def ok(self):
        return self.failure is None

    @property
    def words_checked(self):
        return sum(self.lengths.values())

    @property
    def min_length(self):
        return min(self.lengths) if len(self.lengths) > 0 else None

    def record(self, condition, a, b):
        self.checks.append((condition, a, b))

    def to_json(self):
        fmt = lambda x: None if x is None else format_rational(x)
        out = {
            'base' : self.base.to_json(),
            'family' : [format_rational(a) for a in self.family],
            'shift' : format_rational(self.shift),
            'ok' : self.ok,
            'checks' : [
                {'condition' : cond, 'a' : fmt(a), 'b' : fmt(b), 'isomorphic' : False}
                for cond, a, b in self.checks
            ],
            'spot_reduction' : {
                'max_syllables' : self.max_syllables,
                'words' : self.words_checked,
                'min_length' : self.min_length,
                'lengths' : {str(k) : self.lengths[k] for k in sorted(self.lengths)},
                'unexpected_lengths' : self.unexpected_lengths,
            },
            'failure' : None,
        }
        if self.failure is not None:
            f = self.failure
            out['failure'] = {
                'condition' : f.condition,
                'a' : fmt(f.a),
                'b' : fmt(f.b),
                'witness' : None if f.witness is None else f.witness.to_json(),
            }
        return out


class FreeFamilyCertifier(object):
    """Certify that the zeta words of a family generate a free group.

    For all distinct nonzero ``a, b`` in the family the following pairs of
    classes must be non-isomorphic, so that no junction of two zeta words
    cancels:

    * the four classes of every zeta cycle,
    * ``[Q(w + b), P]`` and ``[Q, P]``,
    * ``[P(w + a), Q]`` and ``[P(w + b), Q]``,
    * ``[Q(w + a), P]`` and ``[Q(w + b), P]``.

    Afterwards every freely reduced product of at most ``max_syllables``
    zeta words is reduced and must stay nonempty.

    Args:
        family (list): Rational parameters; must contain 0 and no duplicates.
        max_syllables (int): Longest products that are spot-reduced.
        jobs (int): Worker processes for the spot-reduction. Output order
            does not depend on it.
    """

    CHUNK_SIZE = 64

    def __init__(self, family, max_syllables = 3, jobs = 1):
        if max_syllables < 0:
            raise ValueError("max_syllables must be nonnegative, got %i." % max_syllables)
        if jobs < 1:
            raise ValueError("jobs must be positive, got %i." % jobs)
        self.family = [as_rational(a) for a in family]
        self.max_syllables = max_syllables
        self.jobs = jobs

    def run(self, base):
        """Certify the family at ``base``.

        :param PairClass base: A pair of case I.
        :rtype: FreeFamilyCertificate
        """
        if base.case != CASE_I:
            raise CaseMismatchError('certify_free_family', CASE_I, base.case)
        cert = FreeFamilyCertificate(base, self.family, self.max_syllables)
        try:
            self._check_parameters()
            parameters = [a for a in self.family if a != 0]
            zetas = self._check_cycles(base, parameters, cert)
            self._check_junctions(base, parameters, cert)
            self._spot_reduce(base, parameters, zetas, cert)
        except FreeFamilyError as e:
            logger.info("Certification of %s failed: %s" % (base, e))
            cert.failure = e
            return cert
        logger.info("Certified %i parameters at %s: %i checks, %i words" % (
            len(self.family), base, len(cert.checks), cert.words_checked
        ))
        return cert

    def _check_parameters(self):
        if 0 not in self.family:
            raise FreeFamilyError("family contains 0", None, None, None)
        seen = set()
        for a in self.family:
            if a in seen:
                raise FreeFamilyError("distinct parameters", a, a, None)
            seen.add(a)

    def _check_cycles(self, base, parameters, cert):
        zetas = {}
        for a in parameters:
            try:
                zetas[a] = zeta_word(base, a)
            except ZetaPreconditionError as e:
                raise FreeFamilyError("zeta cycle: %s" % e.condition, a, None, e.witness)
            cert.record("zeta cycle", a, None)
        return zetas

    @staticmethod
    def _require_distinct(cert, condition, a, b, first, second):
        witness = pairs_isomorphic(first, second)
        if witness is not None:
            raise FreeFamilyError(condition, a, b, witness)
        cert.record(condition, a, b)

    def _check_junctions(self, base, parameters, cert):
        P, Q = base.P, base.Q
        QP = PairClass(Q, P)
        for b in parameters:
            self._require_distinct(cert, "[Q(w + b), P] !~ [Q, P]", None, b, PairClass(Q.shift(b), P), QP)
        for a, b in itertools.combinations(parameters, 2):
            self._require_distinct(
                cert, "[P(w + a), Q] !~ [P(w + b), Q]", a, b,
                PairClass(P.shift(a), Q), PairClass(P.shift(b), Q)
            )
            self._require_distinct(
                cert, "[Q(w + a), P] !~ [Q(w + b), P]", a, b,
                PairClass(Q.shift(a), P), PairClass(Q.shift(b), P)
            )

    def _spot_reduce(self, base, parameters, zetas, cert):
        sequences = list(syllable_sequences(parameters, self.max_syllables))
        if self.jobs == 1:
            lengths = [
                _reduced_length(base, seq, zetas)
                for seq in progress(sequences, desc = "Reducing zeta words")
            ]
        else:
            chunks = [
                [[(format_rational(a), sign) for a, sign in seq] for seq in sequences[i:i + self.CHUNK_SIZE]]
                for i in range(0, len(sequences), self.CHUNK_SIZE)
            ]
            base_json = base.to_json()
            with ProcessPoolExecutor(max_workers = self.jobs) as pool:
                results = pool.map(_reduce_chunk, [(base_json, chunk) for chunk in chunks])
                lengths = list(itertools.chain.from_iterable(progress(results, desc = "Reducing zeta words", total = len(chunks))))

        nonnegative = all(a >= 0 for a in parameters)
        for seq, length in zip(sequences, lengths):
            if length == 0:
                raise FreeFamilyError("nonempty reduction", seq[0][0], seq[-1][0], None)
            cert.lengths[length] = cert.lengths.get(length, 0) + 1
            if nonnegative and length != predicted_length(seq):
                cert.unexpected_lengths += 1
        if cert.unexpected_lengths > 0:
            logger.warning("%i zeta products reduced to an unexpected length." % cert.unexpected_lengths)


def certify_free_family(base, family, max_syllables = 3, jobs = 1):
    """Certify ``family`` at ``base``; see ``FreeFamilyCertifier``."""
    return FreeFamilyCertifier(family, max_syllables, jobs).run(base)


def repair_shift(base, family, max_shift = None, max_syllables = 3, jobs = 1):
    """Certify ``family``, replacing ``Q(w)`` by ``Q(w + t)`` for ``t = 1 .. max_shift`` until it succeeds.

    ``[P, Q(w + t)]`` is isomorphic to ``base``. The returned certificate
    records the shift used; if no shift works it is the last failure.
    """
    if max_shift is None:
        max_shift = REPAIR_SHIFTS
    certifier = FreeFamilyCertifier(family, max_syllables, jobs)
    cert = certifier.run(base)
    if cert.ok or cert.failure.condition in ("family contains 0", "distinct parameters"):
        return cert
    for t in range(1, max_shift + 1):
        candidate = PairClass(base.P, base.Q.shift(t))
        cert = certifier.run(candidate)
        cert.shift = as_rational(t)
        if cert.ok:
            logger.warning("Certified %s only after replacing Q(w) by Q(w + %i)." % (base, t))
            return cert
    logger.warning("No shift up to %i repairs the family at %s." % (max_shift, base))
    return cert


def find_free_family(base, size = 3, max_parameter = 20, max_shift = None, max_syllables = 3, jobs = 1):
    """Pick ``size`` positive integer parameters up to ``max_parameter`` whose zeta words certify at ``base``.

    Parameters are taken greedily: ``a`` is kept when the family so far,
    extended by ``a``, passes every isomorphism check. Products of zeta words
    are only reduced for the final family. As in ``repair_shift``, ``Q(w)`` is
    replaced by ``Q(w + t)`` for ``t = 1 .. max_shift`` while no family is
    found.

    Returns:
        The ``FreeFamilyCertificate`` of the family found, or of the last one tried.
    """
    if base.case != CASE_I:
        raise CaseMismatchError('find_free_family', CASE_I, base.case)
    if size < 1:
        raise ValueError("size must be positive, got %i." % size)
    if max_shift is None:
        max_shift = REPAIR_SHIFTS
    cert = None
    for t in range(0, max_shift + 1):
        candidate = base if t == 0 else PairClass(base.P, base.Q.shift(t))
        family = [as_rational(0)]
        for a in range(1, max_parameter + 1):
            if len(family) > size:
                break
            if FreeFamilyCertifier(family + [a], max_syllables = 0).run(candidate).ok:
                family.append(as_rational(a))
        if len(family) > size:
            cert = FreeFamilyCertifier(family, max_syllables, jobs).run(candidate)
        else:
            cert = FreeFamilyCertificate(candidate, family, max_syllables)
            cert.failure = FreeFamilyError("%i parameters up to %i" % (size, max_parameter), None, None, None)
        cert.shift = as_rational(t)
        if cert.ok:
            logger.info("Found free family %s at %s (shift %i)." % (family, base, t))
            return cert
    logger.warning("No free family of %i parameters up to %i at %s." % (size, max_parameter, base))
    return cert
