"""Exact coefficient fields: prime fields GF(p) and the rationals.

Scalars are plain Python objects: ``int`` residues in ``0..p-1`` for GF(p)
and :class:`fractions.Fraction` for QQ.  Matrices are numpy arrays, ``int64``
for GF(p) (so ``p < 2**31`` keeps every product of two residues inside 63
bits) and ``object`` arrays of ``Fraction`` for QQ.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

import numpy as np

P_MAX = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


class Field:
    """Common interface of the two coefficient fields."""

    name: str
    characteristic: int

    def __eq__(self, other):
        return type(self) is type(other) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash((type(self).__name__, self.characteristic))

    def __repr__(self):
        return self.name

    # scalars
    def __call__(self, value):
        raise NotImplementedError

    def add(self, a, b):
        return self(a + b)

    def sub(self, a, b):
        return self(a - b)

    def mul(self, a, b):
        return self(a * b)

    def neg(self, a):
        return self(-a)

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # arrays
    dtype: type

    def array(self, rows) -> np.ndarray:
        arr = np.array(rows, dtype=self.dtype)
        return self.reduce(arr)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = 1
        return out

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.reduce(a @ b)

    def scale(self, arr: np.ndarray, c) -> np.ndarray:
        return self.reduce(arr * c)


class GF(Field):
    """The prime field with ``p`` elements, ``2 <= p < 2**31``."""

    dtype = np.int64

    def __init__(self, p: int):
        p = int(p)
        if not (2 <= p < P_MAX) or not _is_prime(p):
            raise ValueError(f"GF(p) needs a prime 2 <= p < 2^31, got {p}")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, value):
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    def inv(self, a):
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + self.name)
        return pow(a, -1, self.p)

    def reduce(self, arr):
        return np.mod(arr, self.p)

    def matmul(self, a, b):
        inner = a.shape[-1] if a.ndim else 1
        if inner == 0:
            return self.zeros(a.shape[:-1] + b.shape[1:])
        # accumulate in chunks so partial sums never pass 2^63
        chunk = max(1, (2**63 - 1) // ((self.p - 1) ** 2 or 1))
        if inner <= chunk:
            return np.mod(a @ b, self.p)
        out = self.zeros(a.shape[:-1] + b.shape[1:])
        for start in range(0, inner, chunk):
            part = a[..., start:start + chunk] @ b[start:start + chunk]
            out = np.mod(out + np.mod(part, self.p), self.p)
        return out


class Rationals(Field):
    """The field QQ with exact ``Fraction`` arithmetic."""

    dtype = object
    characteristic = 0
    name = "QQ"

    def __call__(self, value):
        return Fraction(value)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return Fraction(1) / Fraction(a)

    def array(self, rows):
        arr = np.array(rows, dtype=object)
        flat = arr.reshape(-1)
        for i, v in enumerate(flat):
            flat[i] = Fraction(v)
        return arr

    def zeros(self, shape):
        arr = np.empty(shape, dtype=object)
        arr.reshape(-1)[:] = Fraction(0)
        return arr


QQ = Rationals()

_GF_RE = re.compile(r"^\s*(?:GF|F|Z/)\(?\s*(\d+)\s*\)?\s*$", re.IGNORECASE)


def parse_field(text: str) -> Field:
    """Parse ``"GF(7)"`` or ``"QQ"``."""
    t = text.strip()
    if t.upper() in ("QQ", "Q"):
        return QQ
    m = _GF_RE.match(t)
    if not m:
        raise ValueError(f"unknown field {text!r} (expected 'GF(p)' or 'QQ')")
    return GF(int(m.group(1)))
