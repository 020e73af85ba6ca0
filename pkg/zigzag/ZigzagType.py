"""Types of zigzags and the move sequence of a reversion.

A zigzag ``B_0 > B_1 > ... > B_r`` is recorded by its type, the sequence
of self-intersections of its components. A *standard* type starts with
``(0, -1)`` and continues with entries ``<= -2``.

A reversion is traced on the *displayed* boundary, the standard type read
backwards (``(-a_r, ..., -a_1, -1, 0)``). The moves are:

* ``theta_0``: ``(..., y, -1, 0) -> (..., y + 1, 0, -1)``.
* ``phi_i``: swap the two neighbours of the 0-curve.
* ``theta_i``: contract the (-1)-curve left of the 0-curve and blow up the
  point where the 0-curve meets its right neighbour.

After ``theta_0, phi_1, theta_1, ..., phi_r, theta_r`` the displayed
boundary is the reversed standard type ``(0, -1, -a_r, ..., -a_1)``.
"""

from zigzag.errors import NonStandardTypeError, SerializationError

import logging
logger = logging.getLogger(__name__)


class ZigzagType(object):
    """An immutable sequence of self-intersection numbers."""

    def __init__(self, seq):
        self.seq = tuple(int(x) for x in seq)

    @classmethod
    def of_degrees(cls, deg_p, deg_q):
        """The type ``(0, -1, -a, -b)`` of a pair with ``a = deg P + 1`` and ``b = deg Q + 1``."""
        return cls((0, -1, -(deg_p + 1), -(deg_q + 1)))

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in data):
            raise SerializationError("A zigzag type must be a JSON integer array, got %r." % (data,))
        return cls(data)

    def to_json(self):
        return list(self.seq)

    @property
    def is_standard(self):
        return validate_standard_type(self)

    def __len__(self):
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def __getitem__(self, i):
        return self.seq[i]

    def __eq__(self, other):
        if isinstance(other, ZigzagType):
            return self.seq == other.seq
        if isinstance(other, tuple):
            return self.seq == other
        return NotImplemented

    def __hash__(self):
        return hash(self.seq)

    def __repr__(self):
        return "ZigzagType(%s)" % (self.seq,)


class MoveTrace(object):
    """The labelled intermediate types of a reversion.

    ``steps`` is a list of ``(label, ZigzagType)``; the types are displayed
    boundaries, so ``final`` is directly the standard type of the target.
    """

    def __init__(self, initial, steps):
        self.initial = initial
        self.steps = list(steps)

    @property
    def final(self):
        if len(self.steps) == 0:
            return self.initial
        return self.steps[-1][1]

    @property
    def labels(self):
        return [label for label, _ in self.steps]

    def to_json(self):
        return {
            'initial' : self.initial.to_json(),
            'steps' : [{'move' : label, 'type' : z.to_json()} for label, z in self.steps],
            'final' : self.final.to_json(),
        }

    def to_text(self):
        lines = ["%s" % (self.initial.seq,)]
        for label, z in self.steps:
            lines.append("  --%s--> %s" % (label, z.seq))
        return "\n".join(lines) + "\n"


def validate_standard_type(z):
    """``True`` iff ``z`` is ``(0, -1)`` followed by entries all ``<= -2``."""
    seq = tuple(z)
    if len(seq) < 2 or seq[0] != 0 or seq[1] != -1:
        return False
    return all(x <= -2 for x in seq[2:])


def reversion_trace(z):
    """Trace the moves of a reversion of a standard zigzag.

    :param ZigzagType z: A standard type ``(0, -1, -a_1, ..., -a_r)``.
    :returns: A ``MoveTrace`` with ``2r + 1`` steps (none for ``r = 0``).
    :raises NonStandardTypeError: if ``z`` is not standard.
    """
    if not isinstance(z, ZigzagType):
        z = ZigzagType(z)
    if not validate_standard_type(z):
        raise NonStandardTypeError(z.seq)
    r = len(z) - 2
    if r == 0:
        return MoveTrace(z, [])

    d = list(reversed(z.seq))
    steps = []

    # theta_0
    d[-3] += 1
    d[-2], d[-1] = 0, -1
    steps.append(("theta_0", ZigzagType(d)))

    for i in range(1, r + 1):
        k = d.index(0)
        d[k - 1], d[k + 1] = d[k + 1], d[k - 1]
        steps.append(("phi_%i" % i, ZigzagType(d)))

        k = d.index(0)
        assert d[k - 1] == -1
        if k >= 2:
            d[k - 2] += 1
        d[k - 1], d[k], d[k + 1] = 0, -1, d[k + 1] - 1
        steps.append(("theta_%i" % i, ZigzagType(d)))

    trace = MoveTrace(z, steps)
    assert validate_standard_type(trace.final)
    logger.debug("Reversion of %s ends at %s" % (z.seq, trace.final.seq))
    return trace
