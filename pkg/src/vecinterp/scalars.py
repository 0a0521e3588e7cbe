"""Coefficient fields.

Two scalar types share one arithmetic surface (``+ - * /``, unary minus,
``conjugate()``, ``abs_square()``, ``is_zero(scale)``, ``magnitude()``):

* :class:`GaussianRational`: exact numbers ``re + i*im`` with rational parts.
  This is the default everywhere; degree and height decisions are discrete,
  so exactness matters.
* :class:`ApproxComplex`: binary64 complex numbers carrying a zero
  tolerance, for larger experiments where exactness is too expensive.

Code that builds scalars from nothing (``0``, ``1``, JSON) goes through a
field object, :data:`EXACT` or an :class:`ApproxField` instance.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

from .errors import ValidationError

__all__ = [
    "GaussianRational",
    "ApproxComplex",
    "ExactField",
    "ApproxField",
    "EXACT",
    "abs_square",
    "field_of",
    "parse_rational",
]

DEFAULT_TOL = 1e-9


def parse_rational(text):
    """Parse ``"p/q"``, ``"p"`` or an int into a canonical ``mpq``."""
    if isinstance(text, bool):
        raise ValidationError(f"expected a rational string, got {text!r}")
    if isinstance(text, (int, Rational)):
        return mpq(text)
    if not isinstance(text, str):
        raise ValidationError(f"expected a rational string, got {text!r}")
    try:
        return mpq(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"invalid rational {text!r}: {exc}") from None


_MPQ = type(mpq(0))
_ZERO = mpq(0)


def _to_mpq(x):
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        return mpq(Fraction(x))
    return mpq(x)


class GaussianRational:
    """Exact element of Q(i); ``re`` and ``im`` are canonical ``gmpy2.mpq``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + _to_mpq(im)
        self.re = re if type(re) is _MPQ else _to_mpq(re)
        self.im = im if type(im) is _MPQ else _to_mpq(im)

    @classmethod
    def _raw(cls, re, im) -> GaussianRational:
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)):
            return GaussianRational._raw(mpq(other), _ZERO)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussianRational._raw(a * c, b)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c, d = o.re, o.im
        den = c * c + d * d
        if not den:
            raise ZeroDivisionError("division by zero Gaussian rational")
        a, b = self.re, self.im
        return GaussianRational._raw((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> GaussianRational:
        return GaussianRational._raw(self.re, -self.im)

    def abs_square(self) -> GaussianRational:
        return GaussianRational._raw(self.re * self.re + self.im * self.im, _ZERO)

    def inverse(self) -> GaussianRational:
        return GaussianRational._raw(mpq(1), _ZERO) / self

    def is_zero(self, scale: float = 1.0) -> bool:
        return not self.re and not self.im

    def magnitude(self) -> float:
        return abs(complex(float(self.re), float(self.im)))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "-" if self.im < 0 else "+"
        return f"({self.re} {sign} {abs(self.im)}i)"

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}


class ApproxComplex:
    """binary64 complex number with a relative zero tolerance.

    ``is_zero(scale)`` is true when ``|x| <= zero_tol * max(scale, 1)``; the
    caller supplies the magnitude of the surrounding data as ``scale``.
    """

    __slots__ = ("value", "zero_tol")

    def __init__(self, value=0.0, zero_tol: float = DEFAULT_TOL):
        if isinstance(value, ApproxComplex):
            value = value.value
        elif isinstance(value, GaussianRational):
            value = complex(value)
        if zero_tol < 0:
            raise ValueError("zero_tol must be nonnegative")
        self.value = complex(value)
        self.zero_tol = float(zero_tol)

    def _coerce(self, other):
        if isinstance(other, ApproxComplex):
            return other.value
        if isinstance(other, GaussianRational):
            return complex(other)
        if isinstance(other, (int, float, complex, Rational)):
            return complex(other)
        return NotImplemented

    def _wrap(self, v):
        return ApproxComplex(v, self.zero_tol)

    def __add__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError("division by zero ApproxComplex")
        return self._wrap(self.value / o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.value == 0:
            raise ZeroDivisionError("division by zero ApproxComplex")
        return self._wrap(o / self.value)

    def __neg__(self):
        return self._wrap(-self.value)

    def __pos__(self):
        return self

    def conjugate(self) -> ApproxComplex:
        return self._wrap(self.value.conjugate())

    def abs_square(self) -> ApproxComplex:
        return self._wrap(complex(self.value.real ** 2 + self.value.imag ** 2))

    def inverse(self) -> ApproxComplex:
        return self._wrap(1.0) / self

    def is_zero(self, scale: float = 1.0) -> bool:
        return abs(self.value) <= self.zero_tol * max(float(scale), 1.0)

    def magnitude(self) -> float:
        return abs(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ApproxComplex(self.value - o, self.zero_tol).is_zero(
            max(abs(self.value), abs(o))
        )

    __hash__ = None

    def __complex__(self):
        return self.value

    def __repr__(self):
        return f"ApproxComplex({self.value!r}, zero_tol={self.zero_tol!r})"

    def to_json(self) -> dict:
        # + 0.0 folds negative zero
        return {"re": repr(self.value.real + 0.0), "im": repr(self.value.imag + 0.0)}


def abs_square(a):
    """``|a|^2`` as a scalar of the same field (real part only)."""
    return a.abs_square()


class ExactField:
    name = "exact"
    tol = 0.0

    def __init__(self):
        self.zero = GaussianRational(0)
        self.one = GaussianRational(1)

    def __call__(self, re=0, im=0) -> GaussianRational:
        if isinstance(re, ApproxComplex):
            raise TypeError("cannot convert an approximate value to an exact one")
        return GaussianRational(re, im)

    def is_zero(self, x, scale: float = 1.0) -> bool:
        return x.is_zero(scale)

    def from_json(self, obj) -> GaussianRational:
        re, im = _split_json_scalar(obj)
        return GaussianRational._raw(parse_rational(re), parse_rational(im))

    def to_json(self, x) -> dict:
        return x.to_json()

    def __repr__(self):
        return "EXACT"


class ApproxField:
    name = "approx"

    def __init__(self, tol: float = DEFAULT_TOL):
        if not tol > 0:
            raise ValidationError("approximate backend requires tol > 0")
        self.tol = float(tol)
        self.zero = ApproxComplex(0.0, self.tol)
        self.one = ApproxComplex(1.0, self.tol)

    def __call__(self, re=0, im=0) -> ApproxComplex:
        if isinstance(re, (ApproxComplex, GaussianRational)):
            return ApproxComplex(complex(re) + complex(im), self.tol)
        return ApproxComplex(complex(float(re), 0.0) + complex(im) * 1j, self.tol)

    def is_zero(self, x, scale: float = 1.0) -> bool:
        return x.is_zero(scale)

    def from_json(self, obj) -> ApproxComplex:
        re, im = _split_json_scalar(obj)
        try:
            r = float(parse_rational(re)) if not isinstance(re, float) else re
            i = float(parse_rational(im)) if not isinstance(im, float) else im
        except ValidationError:
            try:
                r, i = float(re), float(im)
            except (TypeError, ValueError):
                raise ValidationError(f"invalid scalar {obj!r}") from None
        return ApproxComplex(complex(r, i), self.tol)

    def to_json(self, x) -> dict:
        return ApproxComplex(x, self.tol).to_json()

    def __repr__(self):
        return f"ApproxField(tol={self.tol!r})"


def _split_json_scalar(obj):
    if isinstance(obj, dict):
        extra = set(obj) - {"re", "im"}
        if extra:
            raise ValidationError(f"unexpected scalar keys {sorted(extra)}")
        return obj.get("re", "0"), obj.get("im", "0")
    if isinstance(obj, (str, int)) and not isinstance(obj, bool):
        return obj, "0"
    raise ValidationError(f"expected a scalar object {{'re':..,'im':..}}, got {obj!r}")


EXACT = ExactField()


def field_of(x):
    """Return a field object producing scalars compatible with ``x``."""
    if isinstance(x, ApproxComplex):
        return ApproxField(x.zero_tol) if x.zero_tol > 0 else ApproxField()
    return EXACT
