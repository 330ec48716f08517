"""Exact arithmetic on univariate integer polynomials and rational functions.

Everything downstream (Hilbert-scheme series, quiver recursion, the identity
suite) is built on :class:`IntPoly`: a dense, immutable polynomial with
arbitrary-precision integer coefficients and a variable tag ('t' or 'q').
The tag is advisory metadata; binary operations refuse to mix tags so that
point counts in q and Poincare polynomials in t cannot be combined by
accident.

:class:`RatFunc` is a fully reduced fraction of two IntPoly, normalized to a
canonical representative so that equal fractions compare identical.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from . import _kernels

VARIABLES = ("t", "q")

#: Degree of the zero polynomial.  Deliberately not an int: it must never be
#: usable as a coefficient index.
NEG_INFINITY = float("-inf")


class VariableMismatchError(ValueError):
    """Raised when a binary operation mixes 't'- and 'q'-polynomials."""


class NotDivisibleError(ArithmeticError):
    """Raised by exact division when the quotient does not exist.

    ``remainder`` is the division remainder scaled by ``denominator`` so it
    can be carried as an integer polynomial (``denominator`` is 1 whenever
    the remainder itself is integral, which covers every divisor used in
    this package).
    """

    def __init__(self, message: str, remainder: "IntPoly", denominator: int = 1):
        super().__init__(message)
        self.remainder = remainder
        self.denominator = denominator


class ParseError(ValueError):
    """Syntax error in the plain polynomial grammar, with a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class IntPoly:
    """Dense univariate polynomial over the integers.

    ``coeffs`` is an ascending-by-exponent tuple with a nonzero last entry;
    the zero polynomial stores an empty tuple.  Instances are immutable and
    safe to share across threads.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "t"):
        if var not in VARIABLES:
            raise ValueError(f"unknown variable tag {var!r}; expected one of {VARIABLES}")
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be ints, got {type(c).__name__}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "t") -> "IntPoly":
        return cls((), var)

    @classmethod
    def one(cls, var: str = "t") -> "IntPoly":
        return cls((1,), var)

    @classmethod
    def constant(cls, c: int, var: str = "t") -> "IntPoly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "t") -> "IntPoly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls([0] * exponent + [coeff], var)

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree, or NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def __getitem__(self, exponent: int) -> int:
        """Coefficient of the given exponent (0 beyond the degree)."""
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.var))

    def _check_var(self, other: "IntPoly") -> None:
        if self.var != other.var:
            raise VariableMismatchError(
                f"cannot combine a polynomial in {self.var!r} with one in {other.var!r}"
            )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly.constant(other, self.var)
        if not isinstance(other, IntPoly):
            return NotImplemented
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly.constant(other, self.var)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self).__add__(other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs], self.var)
        if not isinstance(other, IntPoly):
            return NotImplemented
        self._check_var(other)
        return IntPoly(_kernels.mul_dense(list(self.coeffs), list(other.coeffs)), self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = IntPoly.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- division ----------------------------------------------------------

    def div_exact(self, divisor: "IntPoly") -> "IntPoly":
        """Quotient q with self = q * divisor, or raise NotDivisibleError.

        Schoolbook long division over the rationals followed by an
        integrality check of the quotient (the integer fast path computes
        the same quotient coefficients when they exist).
        """
        if not isinstance(divisor, IntPoly):
            raise TypeError("divisor must be an IntPoly")
        self._check_var(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        q = _kernels.div_exact_int(list(self.coeffs), list(divisor.coeffs))
        if q is not None:
            return IntPoly(q, self.var)
        # Rational division to tell "nonzero remainder" from "rational quotient".
        quot, rem = _divmod_rational(self.coeffs, divisor.coeffs)
        if any(rem):
            rem_poly, den = _clear_denominators(rem)
            suffix = "" if den == 1 else f" (scaled by {den})"
            raise NotDivisibleError(
                f"not divisible: remainder {IntPoly(rem_poly, self.var)}{suffix}",
                IntPoly(rem_poly, self.var),
                den,
            )
        raise NotDivisibleError(
            "not divisible: quotient is not an integer polynomial",
            IntPoly.zero(self.var),
        )

    def divides(self, multiple: "IntPoly") -> bool:
        """True iff self divides ``multiple`` exactly.  self must be nonzero."""
        if not isinstance(multiple, IntPoly):
            raise TypeError("argument must be an IntPoly")
        if self.is_zero:
            raise ZeroDivisionError("zero polynomial divides nothing")
        try:
            multiple.div_exact(self)
        except NotDivisibleError:
            return False
        return True

    # -- evaluation and reshaping ------------------------------------------

    def evaluate(self, x: int) -> int:
        """Value at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_at_one(self) -> int:
        """Sum of coefficients; the Euler characteristic for Poincare polynomials."""
        return sum(self.coeffs)

    def substitute_square(self, var: str = "t") -> "IntPoly":
        """Substitute the variable by the square of a new one: x^k -> y^(2k)."""
        if self.is_zero:
            return IntPoly.zero(var)
        out = [0] * (2 * len(self.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return IntPoly(out, var)

    def is_palindromic(self) -> bool:
        """Coefficient symmetry c_k = c_(deg-k); rejects the zero polynomial."""
        if self.is_zero:
            raise ValueError("palindromicity is undefined for the zero polynomial")
        return self.coeffs == self.coeffs[::-1]

    def truncate(self, max_degree: int) -> "IntPoly":
        """Drop every term of exponent above max_degree."""
        if max_degree < 0:
            return IntPoly.zero(self.var)
        return IntPoly(self.coeffs[: max_degree + 1], self.var)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by var^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs, self.var)

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs, ascending."""
        return [(e, c) for e, c in enumerate(self.coeffs) if c]

    # -- content and sign helpers -------------------------------------------

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_positive(self) -> "IntPoly":
        """self divided by its content, sign-flipped to a positive leading coefficient."""
        if self.is_zero:
            return self
        c = self.content()
        if self.coeffs[-1] < 0:
            c = -c
        return IntPoly([x // c for x in self.coeffs], self.var)

    # -- emitters ------------------------------------------------------------

    def __str__(self) -> str:
        return emit_plain(self)

    def __repr__(self) -> str:
        return f"IntPoly({emit_plain(self)!r}, var={self.var!r})"

    def to_latex(self) -> str:
        return emit_latex(self)


# ---------------------------------------------------------------------------
# gcd


def gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive, positive-leading-coefficient gcd over the rationals.

    Fraction-free Euclid on pseudo-remainders, stripping integer content at
    every step to keep the coefficients from blowing up.
    """
    if not isinstance(a, IntPoly) or not isinstance(b, IntPoly):
        raise TypeError("gcd expects two IntPoly arguments")
    a._check_var(b)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    ca = list(a.primitive_positive().coeffs)
    cb = list(b.primitive_positive().coeffs)
    if len(ca) < len(cb):
        ca, cb = cb, ca
    while cb:
        ca, cb = cb, _pseudo_rem_primitive(ca, cb)
    return IntPoly(ca, a.var).primitive_positive()


def _pseudo_rem_primitive(a: list, b: list) -> list:
    """Primitive part of the pseudo-remainder of a by b (b nonzero)."""
    r = list(a)
    lead = b[-1]
    nb = len(b)
    while len(r) >= nb:
        lr = r[-1]
        shift = len(r) - nb
        r = [lead * c for c in r]
        for j in range(nb):
            r[shift + j] -= lr * b[j]
        del r[-1]
        while r and r[-1] == 0:
            del r[-1]
        if r:
            c = math.gcd(*r)
            if c > 1:
                r = [x // c for x in r]
    return r


# ---------------------------------------------------------------------------
# rational long division (non-hot path; exact Fractions)


def _divmod_rational(a: tuple, b: tuple):
    """Long division of coefficient tuples over the rationals."""
    rem = [Fraction(c) for c in a]
    nb = len(b)
    lead = Fraction(b[-1])
    if len(rem) < nb:
        return [], rem
    quot = [Fraction(0)] * (len(rem) - nb + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + nb - 1]
        if c:
            qc = c / lead
            quot[i] = qc
            for j in range(nb):
                rem[i + j] -= qc * b[j]
    while rem and not rem[-1]:
        rem.pop()
    return quot, rem


def _clear_denominators(coeffs) -> tuple[list, int]:
    """Scale a Fraction list to integers; returns (int coeffs, common denominator)."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in coeffs], den


# ---------------------------------------------------------------------------
# plain grammar: parser and emitters
#
#   poly  := term (('+'|'-') term)*
#   term  := coeff | coeff '*' var ('^' exp)? | var ('^' exp)?
#   coeff := '-'? digits ;  var := 't' | 'q' ;  exp := digits
#
# Whitespace is allowed around tokens.  The emitter writes ascending
# exponents, omits zero terms, and omits coefficient-1 and exponent-1
# decorations ("1+t^2+4*t^4", "2*t").

_TOKEN = re.compile(r"\s*(?:(\d+)|([tq])|([-+*^]))")

_MAX_EXPONENT = 100_000


def parse_poly(text: str, default_var: str = "t") -> IntPoly:
    """Parse the plain polynomial grammar; raises ParseError with a position."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", at)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial", 0)

    coeffs: dict[int, int] = {}
    var = None
    i = 0

    def peek(kind, value=None):
        if i >= len(tokens):
            return False
        k, v, _ = tokens[i]
        return k == kind and (value is None or v == value)

    def fail(message):
        at = tokens[i][2] if i < len(tokens) else len(text)
        raise ParseError(message, at)

    first = True
    while i < len(tokens):
        sign = 1
        if not first:
            if peek("op", "+"):
                i += 1
            elif peek("op", "-"):
                sign = -1
                i += 1
            else:
                fail("expected '+' between terms")
        first = False
        if peek("op", "-"):
            sign = -sign
            i += 1
        coeff = None
        exponent = None
        if peek("int"):
            coeff = int(tokens[i][1])
            i += 1
            if peek("op", "*"):
                i += 1
                if not peek("var"):
                    fail("expected variable after '*'")
            elif peek("var") or peek("int"):
                fail("missing '*' between coefficient and variable")
            else:
                exponent = 0
        if exponent is None:
            if not peek("var"):
                fail("expected a term")
            v = tokens[i][1]
            if var is None:
                var = v
            elif var != v:
                fail(f"mixed variables {var!r} and {v!r}")
            i += 1
            if peek("op", "^"):
                i += 1
                if not peek("int"):
                    fail("expected exponent digits after '^'")
                exponent = int(tokens[i][1])
                if exponent > _MAX_EXPONENT:
                    fail(f"exponent larger than {_MAX_EXPONENT}")
                i += 1
            else:
                exponent = 1
        if coeff is None:
            coeff = 1
        coeffs[exponent] = coeffs.get(exponent, 0) + sign * coeff

    if var is None:
        var = default_var
    if not coeffs:
        return IntPoly.zero(var)
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return IntPoly(out, var)


def emit_plain(p: IntPoly) -> str:
    """Inverse of parse_poly on normalized polynomials."""
    if p.is_zero:
        return "0"
    parts = []
    for e, c in p.terms():
        if e == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append(p.var if e == 1 else f"{p.var}^{e}")
        else:
            parts.append(f"{c}*{p.var}" if e == 1 else f"{c}*{p.var}^{e}")
    return "+".join(parts)


def emit_latex(p: IntPoly) -> str:
    """Ascending-power LaTeX, matching the usual display style."""
    if p.is_zero:
        return "0"
    out = []
    for e, c in p.terms():
        sign = "-" if c < 0 else ("+" if out else "")
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = p.var if e == 1 else (f"{p.var}^{e}" if e < 10 else f"{p.var}^{{{e}}}")
            body = var if mag == 1 else f"{mag}{var}"
        out.append(sign + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# rational functions


class RatFunc:
    """Reduced fraction num/den of integer polynomials, canonically normalized.

    The representative is unique: num and den share no polynomial factor over
    the rationals and no integer content, and den has a positive leading
    coefficient.  Equal fractions therefore compare identical componentwise.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            var = den.var if isinstance(den, IntPoly) else "t"
            num = IntPoly.constant(num, var)
        if den is None:
            den = IntPoly.one(num.var)
        elif isinstance(den, int):
            den = IntPoly.constant(den, num.var)
        num._check_var(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = IntPoly.zero(num.var), IntPoly.one(num.var)
        else:
            g = gcd(num, den)
            if g.degree > 0:
                num = num.div_exact(g)
                den = den.div_exact(g)
            c = math.gcd(num.content(), den.content())
            if den.coeffs[-1] < 0:
                c = -c
            if c != 1:
                num = IntPoly([x // c for x in num.coeffs], num.var)
                den = IntPoly([x // c for x in den.coeffs], den.var)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def var(self) -> str:
        return self.num.var

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, IntPoly)):
            if isinstance(other, int):
                other = IntPoly.constant(other, self.var)
            return RatFunc(other)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def as_poly(self) -> IntPoly:
        """The numerator when the denominator is 1, else NotDivisibleError."""
        return self.num.div_exact(self.den)

    def __str__(self) -> str:
        if self.den == IntPoly.one(self.var):
            return emit_plain(self.num)
        return f"({emit_plain(self.num)})/({emit_plain(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({emit_plain(self.num)!r}, {emit_plain(self.den)!r}, var={self.var!r})"
