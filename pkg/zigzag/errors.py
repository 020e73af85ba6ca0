
class ZigzagError(Exception):
    """An error occuring in the zigzag calculus."""
    pass

class UndefinedProfileError(ZigzagError):
    """Root data was requested for the zero polynomial."""
    def __init__(self, operation):
        super().__init__("%s: undefined profile for the zero polynomial." % operation)
        self.operation = operation

class DegreeTooSmallError(ZigzagError):
    """One of the polynomials of a pair is constant."""
    def __init__(self, role, degree):
        super().__init__("degree too small: %s has degree %i, expected at least 1." % (role, degree))
        self.role = role
        self.degree = degree

class NonStandardTypeError(ZigzagError):
    """A zigzag type is not of the form (0,-1,-a_1,...,-a_r) with all a_i >= 2."""
    def __init__(self, seq):
        super().__init__("Zigzag type %s is not standard." % (tuple(seq),))
        self.seq = tuple(seq)

class CaseMismatchError(ZigzagError):
    """An operation was called on a pair from the wrong construction case."""
    def __init__(self, operation, expected, actual):
        super().__init__("%s requires a pair of case %s, got case %s." % (operation, expected, actual))
        self.operation = operation
        self.expected = expected
        self.actual = actual

class LetterError(ZigzagError):
    """A letter of a birational word is malformed or used with the wrong kind."""
    pass

class NonComposableWordError(LetterError):
    """Consecutive letters of a word do not chain up to isomorphism."""
    def __init__(self, index, reason = "letter %i does not compose with the letters before it"):
        super().__init__(reason % index)
        self.index = index

class ZetaPreconditionError(ZigzagError):
    """The four classes of a zeta cycle are not pairwise non-isomorphic."""
    def __init__(self, condition, first, second, witness):
        super().__init__(
            "zeta cycle is degenerate: %s (%s is isomorphic to %s via %s)." % (condition, first, second, witness)
        )
        self.condition = condition
        self.first = first
        self.second = second
        self.witness = witness

class FreeFamilyError(ZigzagError):
    """A junction condition of a free family certificate is violated."""
    def __init__(self, condition, a, b, witness):
        super().__init__(
            "free family condition `%s` fails for a = %s, b = %s (witness %s)." % (condition, a, b, witness)
        )
        self.condition = condition
        self.a = a
        self.b = b
        self.witness = witness

class SerializationError(ZigzagError, ValueError):
    """Malformed JSON payload or rational string."""
    pass
