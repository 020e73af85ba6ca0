import functools

import sympy
from sympy import QQ

from zigzag.errors import SerializationError
from zigzag.util.rationals import as_rational, format_rational, parse_rational

W = sympy.Symbol('w')

class Poly(object):
    """A dense univariate polynomial in ``w`` with exact rational coefficients.

    Coefficients are stored lowest degree first with trailing zeros stripped,
    so ``Poly([-1, 0, 1])`` is ``w^2 - 1`` and ``Poly([])`` is the zero
    polynomial. Instances are immutable and hash/compare structurally;
    equivalence of polynomials under substitutions lives in
    ``zigzag.poly.equivalence``.

    Heavy lifting (composition, gcd, squarefree decomposition, factorisation
    over QQ) is delegated to a cached ``sympy.Poly`` over ``QQ``.

    Args:
        coeffs (iterable): ints, ``sympy.Rational`` s or ``"p/q"`` strings,
            lowest degree first.
    """

    def __init__(self, coeffs = ()):
        cs = [as_rational(c) for c in coeffs]
        while len(cs) > 0 and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)
        self._sympy = None

    @classmethod
    def from_sympy(cls, p):
        if not isinstance(p, sympy.Poly):
            p = sympy.Poly(p, W, domain = QQ)
        if p.is_zero:
            return cls()
        return cls([sympy.Rational(c) for c in reversed(p.all_coeffs())])

    @classmethod
    def monomial(cls, degree, coefficient = 1):
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_roots(cls, roots, leading = 1):
        """``leading * prod(w - r)`` over ``roots`` (repeated entries give multiple roots)."""
        out = cls([leading])
        for r in roots:
            out = out * cls([-as_rational(r), 1])
        return out

    @classmethod
    def from_json(cls, data):
        """Inverse of ``to_json``: a list of ``"p/q"`` strings, lowest degree first."""
        if not isinstance(data, (list, tuple)):
            raise SerializationError("A polynomial must be a JSON array of \"p/q\" strings, got %r." % (data,))
        coeffs = []
        for c in data:
            if isinstance(c, bool) or not isinstance(c, (str, int)):
                raise SerializationError("Bad polynomial coefficient %r." % (c,))
            coeffs.append(parse_rational(c) if isinstance(c, str) else c)
        return cls(coeffs)

    def to_json(self):
        return [format_rational(c) for c in self._coeffs]

    # -- Basic accessors

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def is_zero(self):
        return len(self._coeffs) == 0

    def degree(self):
        """Degree; ``-1`` for the zero polynomial."""
        return len(self._coeffs) - 1

    def __getitem__(self, i):
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return sympy.Integer(0)

    @property
    def leading_coefficient(self):
        assert not self.is_zero
        return self._coeffs[-1]

    def support(self):
        """Indices of the nonzero coefficients, increasing."""
        return tuple(i for i, c in enumerate(self._coeffs) if c != 0)

    def is_monomial(self):
        return len(self.support()) == 1

    def __call__(self, x):
        x = as_rational(x)
        acc = sympy.Integer(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def as_sympy(self):
        if self._sympy is None:
            coeffs = list(reversed(self._coeffs)) or [0]
            self._sympy = sympy.Poly(coeffs, W, domain = QQ)
        return self._sympy

    def as_expr(self, var = W):
        """The polynomial as a sympy expression in ``var``."""
        return self.as_sympy().as_expr().subs(W, var)

    # -- Arithmetic

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self._coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [sympy.Integer(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, alpha):
        """``alpha * p``."""
        alpha = as_rational(alpha)
        return Poly([alpha * c for c in self._coeffs])

    def compose_affine(self, beta, t = 0):
        """``p(beta * w + t)``."""
        beta = as_rational(beta)
        t = as_rational(t)
        if t == 0:
            return Poly([c * beta**i for i, c in enumerate(self._coeffs)])
        return Poly(_compose_affine(self._coeffs, beta, t))

    def shift(self, t):
        """``p(w + t)``."""
        return self.compose_affine(1, t)

    def times_w(self):
        """``w * p(w)``."""
        if self.is_zero:
            return Poly()
        return Poly((0,) + self._coeffs)

    def diff(self):
        return Poly([i * c for i, c in enumerate(self._coeffs)][1:])

    def gcd(self, other):
        """Monic gcd."""
        return Poly.from_sympy(self.as_sympy().gcd(_coerce(other).as_sympy()))

    def monic(self):
        assert not self.is_zero
        return self.scale(1 / self.leading_coefficient)

    def is_squarefree(self):
        assert not self.is_zero
        return self.as_sympy().is_sqf

    def is_proportional_to(self, other):
        """``self == c * other`` for some nonzero rational ``c``."""
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        if self.support() != other.support():
            return False
        return self.scale(other.leading_coefficient) == other.scale(self.leading_coefficient)

    # -- Identity

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self == Poly([other])
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self._coeffs)

    def __str__(self):
        return str(self.as_expr())

    def __repr__(self):
        return "Poly(%s)" % self


@functools.lru_cache(maxsize = 65536)
def _compose_affine(coeffs, beta, t):
    outer = sympy.Poly(list(reversed(coeffs)) or [0], W, domain = QQ)
    inner = sympy.Poly([beta, t], W, domain = QQ)
    return tuple(reversed(outer.compose(inner).all_coeffs()))


def _coerce(x):
    if isinstance(x, Poly):
        return x
    return Poly([x])
