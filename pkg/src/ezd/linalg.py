"""Dense exact linear algebra over a :class:`~ezd.field.Field`.

Vectors are rows.  A :class:`Subspace` stores its basis in reduced row echelon
form, which is unique, so two subspaces are equal exactly when their bases
are equal entrywise.
"""

from __future__ import annotations

import numpy as np

from ezd.field import GF, Field

# below this many entries, plain Python lists beat numpy call overhead
SMALL_ENTRIES = 1024


def _rref_small(p: int, rows: list, ncols: int):
    """Row reduction over GF(p) on lists of ints (already reduced mod p)."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if rows[i][c]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        piv = rows[r]
        inv = pow(piv[c], -1, p)
        if inv != 1:
            piv = rows[r] = [v * inv % p for v in piv]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], piv)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(field: Field, m) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``m`` with zero rows dropped, plus pivot columns."""
    a = field.reduce(np.array(m, dtype=field.dtype, copy=True))
    if a.ndim != 2:
        raise ValueError("rref needs a 2-d matrix")
    if isinstance(field, GF) and a.size <= SMALL_ENTRIES:
        rows, pivots = _rref_small(field.p, a.tolist(), a.shape[1])
        out = np.array(rows, dtype=field.dtype) if rows else field.zeros((0, a.shape[1]))
        return out, pivots
    nrows, ncols = a.shape
    pivots = []
    r = 0
    nz_cols = np.flatnonzero((a != 0).any(axis=0)) if nrows else ()
    for c in nz_cols:
        if r == nrows:
            break
        nz = (a[r:, c] != 0).nonzero()[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        lead = a[r, c]
        if lead != 1:
            a[r] = field.scale(a[r], field.inv(lead))
        col = a[:, c]
        hit = (col != 0).nonzero()[0]
        if hit.size > 1:
            hit = hit[hit != r]
            a[hit] = field.reduce(a[hit] - field.reduce(col[hit, None] * a[r]))
        pivots.append(int(c))
        r += 1
    return a[:r].copy(), pivots


def rank(field: Field, m) -> int:
    return len(rref(field, m)[1])


def _null_rows(field: Field, m) -> np.ndarray:
    m = np.asarray(m)
    ncols = m.shape[1]
    if m.shape[0] == 0:
        return field.eye(ncols)
    r, pivots = rref(field, m)
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = field.zeros((len(free), ncols))
    for i, f in enumerate(free):
        out[i, f] = 1
        for k, p in enumerate(pivots):
            out[i, p] = field.neg(r[k, f])
    return out


def kernel(field: Field, m) -> "Subspace":
    """The subspace ``{v : m @ v = 0}`` of column space coordinates, as rows."""
    m = np.asarray(m)
    return Subspace(field, m.shape[1], _null_rows(field, m))


def left_kernel(field: Field, m) -> "Subspace":
    """The subspace ``{u : u @ m = 0}``."""
    m = np.asarray(m)
    return Subspace(field, m.shape[0], _null_rows(field, m.T))


def solve_left(field: Field, m, v):
    """Some ``c`` with ``c @ m == v``, or ``None`` when ``v`` is not in the row space."""
    m = np.asarray(m)
    nrows, ncols = m.shape
    aug = np.concatenate([m, field.eye(nrows)], axis=1) if nrows else field.zeros((0, ncols))
    r, pivots = rref(field, aug)
    # rows whose pivot lies in the original block carry the transformation
    v = field.reduce(np.array(v, dtype=field.dtype, copy=True))
    coeffs = field.zeros(nrows)
    for k, p in enumerate(pivots):
        if p >= ncols:
            break
        c = v[p]
        if c != 0:
            v = field.reduce(v - field.scale(r[k, :ncols], c))
            coeffs = field.reduce(coeffs + field.scale(r[k, ncols:], c))
    if np.any(v != 0):
        return None
    return coeffs


class Subspace:
    """A subspace of ``field^ambient`` with canonical RREF basis."""

    def __init__(self, field: Field, ambient: int, rows=None, *, _canonical=None):
        self.field = field
        self.ambient = int(ambient)
        if _canonical is not None:
            self.basis, self.pivots = _canonical
            return
        if rows is None or len(rows) == 0:
            self.basis, self.pivots = field.zeros((0, self.ambient)), []
            return
        rows = np.asarray(rows, dtype=field.dtype)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        if rows.shape[1] != self.ambient:
            raise ValueError(f"vectors of length {rows.shape[1]} in ambient {self.ambient}")
        self.basis, self.pivots = rref(field, rows)

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient)

    @classmethod
    def full(cls, field, ambient):
        return cls(field, ambient, _canonical=(field.eye(ambient), list(range(ambient))))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __len__(self):
        return self.dim

    def _same_ambient(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def reduce(self, v) -> np.ndarray:
        """Remainder of ``v`` after clearing the pivot columns; zero iff ``v`` is in the space."""
        v = np.asarray(v, dtype=self.field.dtype)
        if not self.pivots:
            return self.field.reduce(v.copy())
        c = v[..., self.pivots]
        return self.field.reduce(v - self.field.matmul(c, self.basis))

    def contains(self, v) -> bool:
        v = np.asarray(v)
        if v.shape[-1] != self.ambient:
            raise ValueError(f"vector of length {v.shape[-1]} in ambient {self.ambient}")
        return not np.any(self.reduce(v) != 0)

    __contains__ = contains

    def contains_space(self, other: "Subspace") -> bool:
        self._same_ambient(other)
        return other.dim == 0 or not np.any(self.reduce(other.basis) != 0)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_space(self)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.pivots == other.pivots
            and not np.any(self.basis != other.basis)
        )

    def __hash__(self):
        return hash((self.ambient, tuple(self.pivots), tuple(map(tuple, self.basis.tolist()))))

    def __add__(self, other: "Subspace") -> "Subspace":
        return self.sum(other)

    def sum(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        rest = self.reduce(other.basis)
        rest = rest[(rest != 0).any(axis=1)]
        if rest.shape[0] == 0:
            return self
        return Subspace(self.field, self.ambient, np.concatenate([self.basis, rest]))

    def intersect(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        f = self.field
        stacked = np.concatenate([self.basis, f.reduce(-other.basis)])
        rel = left_kernel(f, stacked)
        if rel.dim == 0:
            return Subspace.zero(f, self.ambient)
        return Subspace(f, self.ambient, f.matmul(rel.basis[:, : self.dim], self.basis))

    __and__ = intersect

    def coordinates(self, v) -> np.ndarray:
        """Coefficients of ``v`` against the RREF basis (``v`` must lie in the space)."""
        return np.asarray(v)[..., self.pivots]

    def complement_indices(self) -> list[int]:
        """Non-pivot coordinates: the unit vectors there span a complement."""
        piv = set(self.pivots)
        return [i for i in range(self.ambient) if i not in piv]

    def projection(self) -> np.ndarray:
        """Matrix ``P`` (ambient x codim) with ``v @ P`` the class of ``v`` modulo this space."""
        f = self.field
        comp = self.complement_indices()
        p = f.zeros((self.ambient, len(comp)))
        for j, c in enumerate(comp):
            p[c, j] = 1
        if self.pivots:
            p[self.pivots, :] = f.reduce(-self.basis[:, comp])
        return p

    def quotient_dim(self, sub: "Subspace") -> int:
        return self.dim - sub.dim

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"
