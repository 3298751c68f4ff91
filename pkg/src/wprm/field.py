"""Finite fields F_q with exp/log tables.

Elements are plain ``int`` handles in ``range(q)``.  For a prime ``q`` the
handle is the residue; for ``q = p**k`` it is the base-``p`` packing
``c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` of the polynomial class
``c_0 + c_1 t + ...`` modulo the field's primitive modulus.

All downstream determinism rests on one fixed total order of the elements:
``0`` first, then ``g^0, g^1, ..., g^{q-2}``.  :meth:`Field.order_key` maps
an element to its position in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import DivisionByZero, LogOfZero, NotAPrimePower

MAX_Q = 1 << 16


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k`` or raise :class:`NotAPrimePower`."""
    if q < 2:
        raise NotAPrimePower(f"q={q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise NotAPrimePower(f"q={q} has at least two distinct prime factors")
    return p, k


def _order_mod(a: int, p: int) -> int:
    x, k = a % p, 1
    while x != 1:
        x = x * a % p
        k += 1
    return k


class Field:
    """The finite field with ``q`` elements.

    Use :func:`field_new` rather than calling the constructor, so that equal
    fields are shared.
    """

    def __init__(self, q: int):
        if q > MAX_Q:
            raise NotAPrimePower(f"q={q} exceeds the supported maximum {MAX_Q}")
        p, deg = prime_power(q)
        self.q, self.p, self.deg = q, p, deg
        self.is_prime = deg == 1
        self.modulus: tuple[int, ...] | None = None  # low-to-high coefficients, monic
        if self.is_prime:
            g = next(a for a in range(1, q) if _order_mod(a, q) == q - 1) if q > 2 else 1
            exp = [1] * (q - 1)
            for i in range(1, q - 1):
                exp[i] = exp[i - 1] * g % q
        else:
            self.modulus, exp = self._primitive_modulus()
            # rebase on the smallest generator in the integer encoding
            log_t = {e: i for i, e in enumerate(exp)}
            g = next(a for a in range(2, q) if gcd(log_t[a], q - 1) == 1)
            step = log_t[g]
            exp = [exp[i * step % (q - 1)] for i in range(q - 1)]
        self.g = g
        self.exp_table: tuple[int, ...] = tuple(exp)
        log = [0] * q
        for i, e in enumerate(exp):
            log[e] = i
        self.log_table: tuple[int, ...] = tuple(log)  # entry 0 is a placeholder

        self._exp_np = np.array(exp, dtype=np.int64)
        self._log_np = np.array(log, dtype=np.int64)
        key = [0] * q
        for i, e in enumerate(exp):
            key[e] = i + 1
        self._key = tuple(key)
        self._key_np = np.array(key, dtype=np.int64)
        self._ordered = (0,) + self.exp_table
        self._ordered_np = np.array(self._ordered, dtype=np.int64)
        self._digits = [p**i for i in range(deg)]
        if q <= 256:
            self._add_tab = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        else:
            self._add_tab = None
        self._neg = tuple(self._neg_slow(a) for a in range(q))

    # -- construction helpers -------------------------------------------------

    def _poly_times_t(self, a: int, mod: tuple[int, ...]) -> int:
        """Multiply the packed polynomial ``a`` by ``t`` and reduce modulo ``mod``."""
        p, k = self.p, self.deg
        digits = [(a // p**i) % p for i in range(k)]
        top = digits[-1]
        shifted = [0] + digits[:-1]
        out = [(shifted[i] - top * mod[i]) % p for i in range(k)]
        return sum(c * p**i for i, c in enumerate(out))

    def _primitive_modulus(self) -> tuple[tuple[int, ...], list[int]]:
        # scan monic t^k + sum c_i t^i by increasing packed value of (c_0..c_{k-1})
        p, k, q = self.p, self.deg, self.q
        for code in range(1, q):
            mod = tuple((code // p**i) % p for i in range(k))
            if mod[0] == 0:
                continue
            powers = [1]
            x = 1
            for _ in range(q - 2):
                x = self._poly_times_t(x, mod)
                if x == 1:
                    break
                powers.append(x)
            else:
                if self._poly_times_t(x, mod) == 1:
                    return mod + (1,), powers
        raise AssertionError(f"no primitive polynomial of degree {k} over F_{p}")  # pragma: no cover

    def _add_slow(self, a: int, b: int) -> int:
        if self.is_prime:
            return (a + b) % self.q
        p = self.p
        return sum((((a // s) + (b // s)) % p) * s for s in self._digits)

    def _neg_slow(self, a: int) -> int:
        if self.is_prime:
            return (-a) % self.q
        p = self.p
        return sum(((-(a // s)) % p) * s for s in self._digits)

    # -- scalar arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_tab is not None:
            return self._add_tab[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return self.exp_table[-self.log_table[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise DivisionByZero("negative power of 0")
            return 1 if n == 0 else 0
        return self.exp_table[self.log_table[a] * n % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete logarithm to base ``g``, in ``range(q - 1)``."""
        if a == 0:
            raise LogOfZero("log of 0")
        return self.log_table[a]

    def exp(self, k: int) -> int:
        return self.exp_table[k % (self.q - 1)]

    # -- element order --------------------------------------------------------

    def order_key(self, a: int) -> int:
        """Position of ``a`` in the order 0, g^0, g^1, ..."""
        return self._key[a]

    def elements(self) -> tuple[int, ...]:
        """All elements in the fixed order."""
        return self._ordered

    def nonzero(self) -> tuple[int, ...]:
        return self.exp_table

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element handle of F_{self.q}")
        return FieldElement(self, value)

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> F_q (prime subfield)."""
        return n % self.p

    # -- vectorised arithmetic on integer arrays ------------------------------

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.is_prime:
            return (a + b) % self.q
        if self.p == 2:
            return a ^ b
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for s in self._digits:
            out += (((a // s) + (b // s)) % self.p) * s
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.is_prime:
            return (-a) % self.q
        if self.p == 2:
            return a.copy()
        out = np.zeros_like(a)
        for s in self._digits:
            out += ((-(a // s)) % self.p) * s
        return out

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.is_prime:
            return (a * b) % self.q
        out = self._exp_np[(self._log_np[a] + self._log_np[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vlog(self, a):
        """Discrete logs of an array; entries for 0 are meaningless."""
        return self._log_np[np.asarray(a, dtype=np.int64)]

    def vexp(self, k):
        return self._exp_np[np.asarray(k, dtype=np.int64) % (self.q - 1)]

    def vkey(self, a):
        return self._key_np[np.asarray(a, dtype=np.int64)]

    def matmul(self, a, b):
        """Matrix product over F_q of integer arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.is_prime and a.shape[-1] * (self.q - 1) ** 2 < 2**62:
            return (a @ b) % self.q
        out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
        for j in range(a.shape[-1]):
            out = self.vadd(out, self.vmul(a[..., j, None], b[j]))
        return out

    def __repr__(self) -> str:
        return f"Field(q={self.q})"

    def __reduce__(self):
        return (field_new, (self.q,))


@lru_cache(maxsize=None)
def field_new(q: int) -> Field:
    """The deterministic field with ``q`` elements (``2 <= q <= 2**16``)."""
    if not isinstance(q, int) or isinstance(q, bool):
        raise NotAPrimePower(f"q must be an integer, got {q!r}")
    return Field(q)


@dataclass(frozen=True)
class FieldElement:
    """An element bound to its field, with operator overloading."""

    field: Field
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.div(o, self.value))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def log(self) -> int:
        return self.field.log(self.value)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field.q == other.field.q and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))

    def __repr__(self) -> str:
        return f"F{self.field.q}({self.value})"


def discrete_log(a: FieldElement) -> int:
    return a.field.log(a.value)
