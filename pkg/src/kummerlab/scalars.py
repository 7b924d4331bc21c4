"""Exact scalar arithmetic: rationals and one quadratic extension.

A scalar is either a ``fractions.Fraction`` (including plain ints, which
coerce on the way in) or a ``QuadExt`` element a + b*sqrt(m) with rational
a, b and a fixed squarefree integer m not in {0, 1}.  Representation
conventions:

* QuadExt instances always have b != 0; arithmetic that lands back in Q
  returns a Fraction, so equality and hashing never need cross-type rules.
* m is stored squarefree.  The factory ``quadext`` pulls square factors of
  m into b, so quadext(0, 1, 24) is 2*sqrt(6).
* Elements of extensions with different m never mix: combining them raises
  NestedExtension.  One square root is all the geometry here ever needs.

No floating point enters anywhere in this module.
"""

from fractions import Fraction

import sympy

from .errors import NestedExtension

Rat = (int, Fraction)


def rat(x):
    """Coerce ints/strings/Fractions to Fraction; reject floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _split_square(n):
    # n = s * k^2 with s squarefree (sign kept on s); returns (s, k)
    if n == 0:
        return 0, 1
    s, k = (1 if n > 0 else -1), 1
    for p, e in sympy.factorint(abs(n)).items():
        k *= p ** (e // 2)
        if e % 2:
            s *= p
    return s, k


class QuadExt:
    """a + b*sqrt(m) with Fraction a, b (b nonzero) and squarefree int m.

    Construct through ``quadext``; the raw constructor trusts its inputs.
    Supports +, -, *, /, ** with other elements of the same extension and
    with rationals on either side.
    """

    __slots__ = ("a", "b", "m")

    def __init__(self, a, b, m):
        self.a = a
        self.b = b
        self.m = m

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.m})"

    def __str__(self):
        return f"({self.a} + {self.b}*sqrt({self.m}))"

    def conjugate(self):
        return QuadExt(self.a, -self.b, self.m)

    def norm(self):
        return self.a * self.a - self.m * self.b * self.b

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.m) == (other.a, other.b, other.m)
        if isinstance(other, Rat):
            return False  # b != 0 by invariant
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.m))

    def __bool__(self):
        return True  # zero is never a QuadExt

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.m != self.m:
                raise NestedExtension(
                    f"cannot mix sqrt({self.m}) and sqrt({other.m})",
                    m1=self.m, m2=other.m)
            return other.a, other.b
        if isinstance(other, Rat):
            return rat(other), Fraction(0)
        return None

    def __add__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        return _wrap(self.a + oa, self.b + ob, self.m)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.m)

    def __sub__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        return _wrap(self.a - oa, self.b - ob, self.m)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        return _wrap(self.a * oa + self.m * self.b * ob,
                     self.a * ob + self.b * oa, self.m)

    __rmul__ = __mul__

    def _inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadExt with zero norm")
        return QuadExt(self.a / n, -self.b / n, self.m)

    def __truediv__(self, other):
        if isinstance(other, Rat):
            q = rat(other)
            return _wrap(self.a / q, self.b / q, self.m)
        if isinstance(other, QuadExt):
            return self * other._inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        inv = self._inverse()
        return inv * other

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Fraction(1)
        base = self
        while k:
            if k & 1:
                out = base * out
            base = base * base
            k >>= 1
        return out


def _wrap(a, b, m):
    if b == 0:
        return a
    return QuadExt(a, b, m)


def quadext(a, b, m):
    """Build a + b*sqrt(m), normalizing m to its squarefree core."""
    a, b = rat(a), rat(b)
    if not isinstance(m, int):
        raise TypeError("m must be an integer")
    if b == 0:
        return a
    if m == 0:
        return a
    s, k = _split_square(m)
    if s == 1:
        return a + b * k
    return QuadExt(a, b * k, s)


def is_rational(x):
    return isinstance(x, Rat)


def extension_of(x):
    """The m of the extension x lives in, or None for rationals."""
    return x.m if isinstance(x, QuadExt) else None


def join_extension(m1, m2):
    """Common extension of two optional m's; NestedExtension if both differ."""
    if m1 is None:
        return m2
    if m2 is None or m1 == m2:
        return m1
    raise NestedExtension(f"sqrt({m1}) and sqrt({m2}) needed together",
                          m1=m1, m2=m2)


def sqrt_scalar(q):
    """Exact square root of a rational: a Fraction if q is a perfect
    square, otherwise b*sqrt(m) with m the squarefree core of q."""
    q = rat(q)
    if q == 0:
        return Fraction(0)
    s, k = _split_square(q.numerator * q.denominator)
    root = Fraction(k, q.denominator)
    if s == 1:
        return root
    return QuadExt(Fraction(0), root, s)


def scalar_to_json(x):
    if isinstance(x, Rat):
        q = rat(x)
        return f"{q.numerator}/{q.denominator}"
    if isinstance(x, QuadExt):
        return {"a": scalar_to_json(x.a), "b": scalar_to_json(x.b), "m": x.m}
    raise TypeError(f"not a scalar: {x!r}")


def scalar_from_json(obj):
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, dict) and set(obj) == {"a", "b", "m"}:
        return quadext(Fraction(obj["a"]), Fraction(obj["b"]), obj["m"])
    raise TypeError(f"not a serialized scalar: {obj!r}")


def sign(q):
    """Sign of a rational as -1, 0, or 1."""
    q = rat(q)
    return (q > 0) - (q < 0)
