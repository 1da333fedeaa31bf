"""Exact base fields: the rationals, prime fields and real/imaginary quadratic fields.

Elements are ordinary Python objects with arithmetic operators, so the
linear algebra layer can stay generic:

* rationals are ``gmpy2.mpq`` values (always in lowest terms, positive
  denominator);
* prime-field residues are :class:`Fp` instances;
* quadratic-field elements are :class:`Quad` instances ``a + b*sqrt(d)``.

A field object knows its zero and one, coerces ints/strings/fractions into
elements (``F(3)``, ``F("2/3")``) and formats elements back to the string
forms used in JSON files: ``"p/q"``, ``"v mod p"`` and ``"a+b*sqrt(d)"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

import gmpy2
from gmpy2 import mpq

from .errors import FieldMismatch, SpecError, UnsupportedExtension

MPQ = type(mpq())

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def _to_mpq(x: Any) -> mpq:
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Fraction, MPQ)):
        return mpq(x)
    if isinstance(x, str):
        m = _RATIONAL_RE.match(x)
        if not m:
            raise SpecError(f"not a rational scalar: {x!r}")
        num, den = m.group(1), m.group(2)
        if den is not None and int(den) == 0:
            raise SpecError(f"zero denominator in scalar {x!r}")
        return mpq(int(num), int(den) if den else 1)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def _format_mpq(x: mpq) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _is_squarefree(d: int) -> bool:
    d = abs(d)
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class Field:
    """Common interface of the exact fields."""

    zero: Any
    one: Any

    def __call__(self, x: Any) -> Any:
        raise NotImplementedError

    def parse(self, s: str) -> Any:
        return self(s)

    def format(self, x: Any) -> str:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    def contains(self, x: Any) -> bool:
        raise NotImplementedError

    @property
    def characteristic(self) -> int:
        return 0

    def extension_map(self, other: "Field"):
        """Return the embedding ``self -> other`` for supported extensions."""
        if other == self:
            return lambda x: x
        if isinstance(self, Rationals) and isinstance(other, QuadraticField):
            return other
        raise UnsupportedExtension(f"no supported extension {self} -> {other}")


@dataclass(frozen=True)
class Rationals(Field):
    def __post_init__(self):
        object.__setattr__(self, "zero", mpq(0))
        object.__setattr__(self, "one", mpq(1))

    def __call__(self, x: Any) -> mpq:
        if isinstance(x, Quad):
            if x.b != 0:
                raise FieldMismatch(f"{x} is not rational")
            return x.a
        if isinstance(x, Fp):
            raise FieldMismatch("prime-field residue is not a rational")
        return _to_mpq(x)

    def format(self, x: Any) -> str:
        return _format_mpq(self(x))

    def descriptor(self) -> dict:
        return {"kind": "rational"}

    def contains(self, x: Any) -> bool:
        return type(x) is MPQ

    def __str__(self) -> str:
        return "QQ"


class Fp:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = int(v) % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Fp(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} mod {self.p}"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not (2 <= self.p < 2**31) or not gmpy2.is_prime(self.p):
            raise SpecError(f"field.p: {self.p} is not a prime below 2^31")
        object.__setattr__(self, "zero", Fp(0, self.p))
        object.__setattr__(self, "one", Fp(1, self.p))

    def __call__(self, x: Any) -> Fp:
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatch(f"GF({x.p}) element in GF({self.p})")
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, str):
            s = x.strip()
            if "mod" in s:
                v, _, p = s.partition("mod")
                if int(p) != self.p:
                    raise FieldMismatch(f"scalar {x!r} is not in GF({self.p})")
                s = v
            q = _to_mpq(s)
            return Fp(q.numerator, self.p) / Fp(q.denominator, self.p)
        if isinstance(x, (Fraction, MPQ)):
            q = mpq(x)
            return Fp(int(q.numerator), self.p) / Fp(int(q.denominator), self.p)
        raise TypeError(f"cannot convert {type(x).__name__} to GF({self.p})")

    def format(self, x: Any) -> str:
        return f"{self(x).v} mod {self.p}"

    def descriptor(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def contains(self, x: Any) -> bool:
        return isinstance(x, Fp) and x.p == self.p

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self) -> str:
        return f"GF({self.p})"


class Quad:
    """``a + b*sqrt(d)`` with rational ``a``, ``b``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = mpq(a)
        self.b = mpq(b)
        self.d = d

    def _coerce(self, other):
        if isinstance(other, Quad):
            if other.d != self.d:
                raise FieldMismatch(f"sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, (int, MPQ, Fraction)):
            return Quad(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quad(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quad(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quad(self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def __neg__(self):
        return Quad(-self.a, -self.b, self.d)

    def conjugate(self) -> "Quad":
        return Quad(self.a, -self.b, self.d)

    def norm(self) -> mpq:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "Quad":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in quadratic field")
        return Quad(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Quad(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Quad):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, MPQ, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return QuadraticField(self.d).format(self)


_QUAD_RE = re.compile(
    r"^\s*(?P<a>[+-]?\d+(?:/\d+)?)?\s*"
    r"(?:(?P<sign>[+-])?\s*(?P<b>\d+(?:/\d+)?)?\s*\*?\s*sqrt\(\s*(?P<d>[+-]?\d+)\s*\))?\s*$"
)


@dataclass(frozen=True)
class QuadraticField(Field):
    """The field Q(sqrt(d)) for squarefree ``d`` different from 0 and 1."""

    d: int

    def __post_init__(self):
        if self.d in (0, 1) or not _is_squarefree(self.d):
            raise SpecError(f"field.d: {self.d} must be squarefree and not 0 or 1")
        object.__setattr__(self, "zero", Quad(0, 0, self.d))
        object.__setattr__(self, "one", Quad(1, 0, self.d))

    def __call__(self, x: Any) -> Quad:
        if isinstance(x, Quad):
            if x.d != self.d:
                raise FieldMismatch(f"sqrt({x.d}) element in Q(sqrt({self.d}))")
            return x
        if isinstance(x, Fp):
            raise FieldMismatch("prime-field residue in a quadratic field")
        if isinstance(x, str):
            return self._parse(x)
        return Quad(_to_mpq(x), 0, self.d)

    def _parse(self, s: str) -> Quad:
        if "sqrt" not in s:
            return Quad(_to_mpq(s), 0, self.d)
        m = _QUAD_RE.match(s)
        if not m or m.group("d") is None:
            raise SpecError(f"not a quadratic scalar: {s!r}")
        if int(m.group("d")) != self.d:
            raise FieldMismatch(f"scalar {s!r} is not in Q(sqrt({self.d}))")
        a = _to_mpq(m.group("a")) if m.group("a") else mpq(0)
        b = _to_mpq(m.group("b")) if m.group("b") else mpq(1)
        if m.group("sign") == "-":
            b = -b
        elif m.group("sign") is None and m.group("a") is not None:
            # "3sqrt(2)" style: the leading number is the sqrt coefficient
            a, b = mpq(0), a * b
        return Quad(a, b, self.d)

    def format(self, x: Any) -> str:
        x = self(x)
        sign = "-" if x.b < 0 else "+"
        return f"{_format_mpq(x.a)}{sign}{_format_mpq(abs(x.b))}*sqrt({self.d})"

    def descriptor(self) -> dict:
        return {"kind": "quadratic", "d": self.d}

    def contains(self, x: Any) -> bool:
        return isinstance(x, Quad) and x.d == self.d

    def __str__(self) -> str:
        return f"QQ(sqrt({self.d}))"


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_descriptor(desc: dict | None) -> Field:
    """Build a field from its JSON descriptor (``None`` means the rationals)."""
    if desc is None:
        return QQ
    if not isinstance(desc, dict):
        raise SpecError("field: expected an object like {\"kind\": \"rational\"}")
    kind = desc.get("kind", "rational")
    if kind == "rational":
        return QQ
    if kind == "prime":
        if "p" not in desc:
            raise SpecError("field.p: missing for prime field")
        return GF(int(desc["p"]))
    if kind == "quadratic":
        if "d" not in desc:
            raise SpecError("field.d: missing for quadratic field")
        return QuadraticField(int(desc["d"]))
    raise SpecError(f"field.kind: unknown field kind {kind!r}")
