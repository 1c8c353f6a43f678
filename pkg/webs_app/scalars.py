# webs_app/scalars.py
"""
Exact fields used by every evaluation: Q, Q(i), F_p and F_p[x]/(x^2+1).

A FieldSpec names the field; make_field(spec) returns the (cached) arithmetic
object. Elements are plain values so they pickle and hash:

    Q        -> fractions.Fraction
    F_p      -> int in [0, p)
    Q(i)     -> (Fraction, Fraction)   meaning a + b*i
    F_{p^2}  -> (int, int)             only when -1 is a non-residue mod p
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Tuple, Union

from sympy import isprime
from sympy.ntheory import digits, sqrt_mod

from .exceptions import FieldError

Scalar = Any
Number = Union[int, Fraction]

_FIELD_RE = re.compile(r'^\s*(q|Q|0|\d+)\s*(\(i\))?\s*$')


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0
    adjoin_i: bool = False

    def __post_init__(self):
        p = self.characteristic
        if p == 2:
            raise FieldError('characteristic 2 is not supported')
        if p < 0 or (p != 0 and not isprime(p)):
            raise FieldError(f'characteristic must be 0 or an odd prime, got {p}')

    @classmethod
    def parse(cls, text: str) -> 'FieldSpec':
        """Parse 'q', 'q(i)', '5', '3(i)'."""
        m = _FIELD_RE.match(str(text))
        if not m:
            raise FieldError(f'cannot parse field spec {text!r}')
        head, tail = m.groups()
        char = 0 if head in ('q', 'Q') else int(head)
        return cls(char, tail is not None)

    @property
    def label(self) -> str:
        head = 'q' if self.characteristic == 0 else str(self.characteristic)
        return head + ('(i)' if self.adjoin_i else '')

    @property
    def has_i(self) -> bool:
        return self.adjoin_i or self.characteristic % 4 == 1

    def __str__(self):
        return self.label


QQ = FieldSpec(0)
QQ_I = FieldSpec(0, True)


def gen_binom(n: int, k: int) -> int:
    """Binomial coefficient for any integer n: n(n-1)...(n-k+1)/k!, zero for k < 0."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    # C(n, k) = (-1)^k C(k - n - 1, k)
    return (-1) ** k * math.comb(k - n - 1, k)


class RationalField:
    characteristic = 0

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __repr__(self):
        return 'Q'

    def coerce(self, value: Number) -> Fraction:
        if isinstance(value, tuple):
            raise FieldError('Q has no imaginary unit')
        return Fraction(value)

    __call__ = coerce

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError('inverse of zero')
        return 1 / x

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, n: int):
        return x ** n

    def is_zero(self, x) -> bool:
        return x == 0

    def format(self, x) -> str:
        return str(x)

    def parse(self, text: str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f'not a rational: {text!r}') from exc

    def sqrt_minus_one(self):
        raise FieldError('Q does not contain a square root of -1; use q(i)')


class PrimeField:
    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.characteristic
        self.characteristic = self.p
        self.zero = 0
        self.one = 1
        self._i = None
        if self.p % 4 == 1:
            self._i = sqrt_mod(self.p - 1, self.p)

    def __repr__(self):
        return f'F_{self.p}'

    def coerce(self, value: Number) -> int:
        if isinstance(value, Fraction):
            num, den = value.numerator % self.p, value.denominator % self.p
            if den == 0:
                raise FieldError(f'{value} has a denominator divisible by {self.p}')
            return num * pow(den, -1, self.p) % self.p
        if isinstance(value, tuple):
            raise FieldError(f'F_{self.p} element cannot be a pair')
        return int(value) % self.p

    __call__ = coerce

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def neg(self, x):
        return -x % self.p

    def mul(self, x, y):
        return x * y % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError(f'inverse of zero mod {self.p}')
        return pow(x, -1, self.p)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, n: int):
        if n < 0:
            x, n = self.inv(x), -n
        return pow(x, n, self.p)

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def format(self, x) -> str:
        return str(x)

    def parse(self, text: str):
        try:
            return self.coerce(Fraction(text.strip()))
        except ValueError as exc:
            raise FieldError(f'not an element of F_{self.p}: {text!r}') from exc

    def sqrt_minus_one(self):
        if self._i is None:
            raise FieldError(f'-1 is not a square mod {self.p}; use {self.p}(i)')
        return self._i


class QuadraticField:
    """base[i] with i^2 = -1, built only when the base lacks a square root of -1."""

    def __init__(self, spec: FieldSpec, base):
        self.spec = spec
        self.base = base
        self.characteristic = base.characteristic
        self.zero = (base.zero, base.zero)
        self.one = (base.one, base.zero)

    def __repr__(self):
        return f'{self.base!r}(i)'

    def coerce(self, value) -> Tuple:
        if isinstance(value, tuple):
            return (self.base.coerce(value[0]), self.base.coerce(value[1]))
        return (self.base.coerce(value), self.base.zero)

    __call__ = coerce

    def add(self, x, y):
        b = self.base
        return (b.add(x[0], y[0]), b.add(x[1], y[1]))

    def sub(self, x, y):
        b = self.base
        return (b.sub(x[0], y[0]), b.sub(x[1], y[1]))

    def neg(self, x):
        return (self.base.neg(x[0]), self.base.neg(x[1]))

    def mul(self, x, y):
        b = self.base
        re_ = b.sub(b.mul(x[0], y[0]), b.mul(x[1], y[1]))
        im_ = b.add(b.mul(x[0], y[1]), b.mul(x[1], y[0]))
        return (re_, im_)

    def inv(self, x):
        b = self.base
        norm = b.add(b.mul(x[0], x[0]), b.mul(x[1], x[1]))
        if b.is_zero(norm):
            raise ZeroDivisionError('inverse of zero')
        n_inv = b.inv(norm)
        return (b.mul(x[0], n_inv), b.neg(b.mul(x[1], n_inv)))

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, n: int):
        if n < 0:
            x, n = self.inv(x), -n
        out = self.one
        while n:
            if n & 1:
                out = self.mul(out, x)
            x, n = self.mul(x, x), n >> 1
        return out

    def is_zero(self, x) -> bool:
        return self.base.is_zero(x[0]) and self.base.is_zero(x[1])

    def format(self, x) -> str:
        b = self.base
        re_, im_ = x
        if b.is_zero(im_):
            return b.format(re_)
        im_text = b.format(im_)
        if im_text == '1':
            im_text = ''
        elif im_text == '-1':
            im_text = '-'
        if b.is_zero(re_):
            return f'{im_text}i'
        if im_text.startswith('-'):
            return f'{b.format(re_)}{im_text}i'
        return f'{b.format(re_)}+{im_text}i'

    def parse(self, text: str):
        """Parse 'a', 'bi', 'a+bi', 'a-bi', 'i' with rational or residue parts."""
        body = text.replace(' ', '')
        zero = self.base.zero
        if not body.endswith('i'):
            return (self.base.parse(body), zero)
        body = body[:-1]
        cut = max(body.rfind('+'), body.rfind('-'))
        real, imag = (body[:cut], body[cut:]) if cut > 0 else ('', body)
        if imag in ('', '+'):
            imag = '1'
        elif imag == '-':
            imag = '-1'
        re_ = self.base.parse(real) if real else zero
        return (re_, self.base.parse(imag))

    def sqrt_minus_one(self):
        return (self.base.zero, self.base.one)


@lru_cache(maxsize=None)
def make_field(spec: FieldSpec):
    p = spec.characteristic
    if p == 0:
        base = RationalField(FieldSpec(0))
        return QuadraticField(spec, base) if spec.adjoin_i else base
    if spec.adjoin_i and p % 4 == 3:
        return QuadraticField(spec, PrimeField(FieldSpec(p)))
    return PrimeField(spec)


def sqrt_minus_one(spec: FieldSpec) -> Scalar:
    """Return s with s*s == -1 in make_field(spec)."""
    field = make_field(spec)
    return field.sqrt_minus_one()


def lucas_binom(n: int, k: int, p: int) -> int:
    """C(n, k) mod p for n, k >= 0 as the product of binomials of base-p digits."""
    if k < 0 or k > n:
        return 0
    out = 1
    # digits() lists the base first, then the most significant digit
    n_digits, k_digits = digits(n, p)[1:][::-1], digits(k, p)[1:][::-1]
    for i, a in enumerate(n_digits):
        b = k_digits[i] if i < len(k_digits) else 0
        if b > a:
            return 0
        out = out * math.comb(a, b) % p
    return out


def binom(n: int, k: int, spec: FieldSpec) -> Scalar:
    """C(n, k) reduced into the field; zero for k < 0 or k > n >= 0."""
    p = spec.characteristic
    if p and n >= 0:
        return make_field(spec).coerce(lucas_binom(n, k, p))
    return make_field(spec).coerce(gen_binom(n, k))
