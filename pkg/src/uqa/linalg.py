"""Sparse vectors over Q(q) and reduced row echelon bookkeeping.

A vector is a plain dict ``key -> Scalar`` without zero entries.  The pivot of
a row is its largest key under a caller-supplied sort key.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Optional

from .scalar import ONE, Scalar

Vector = dict


def add_scaled(v: dict, c: Scalar, w: dict) -> None:
    """v += c * w, in place."""
    if not c:
        return
    for k, x in w.items():
        y = v.get(k)
        if y is None:
            v[k] = c * x
        else:
            z = y + c * x
            if z:
                v[k] = z
            else:
                del v[k]


def scale(v: dict, c: Scalar) -> dict:
    if not c:
        return {}
    if c.is_one():
        return dict(v)
    return {k: c * x for k, x in v.items()}


def combine(vectors: Iterable[dict], coeffs: Iterable[Scalar]) -> dict:
    out: dict = {}
    for c, w in zip(coeffs, vectors):
        add_scaled(out, c, w)
    return out


class Echelon:
    """A subspace held as rows in reduced row echelon form.

    Every row has coefficient 1 at its pivot and no other row mentions that
    pivot, so the representation of a subspace is unique.
    """

    __slots__ = ("key", "rows")

    def __init__(self, key: Callable[[Hashable], object]):
        self.key = key
        self.rows: dict = {}

    def __len__(self) -> int:
        return len(self.rows)

    def copy(self) -> "Echelon":
        e = Echelon(self.key)
        e.rows = {p: dict(r) for p, r in self.rows.items()}
        return e

    def reduce(self, v: dict) -> dict:
        """Residual of v modulo the span; a fresh dict."""
        out = dict(v)
        rows = self.rows
        for p in [k for k in v if k in rows]:
            c = out.get(p)
            if c:
                add_scaled(out, -c, rows[p])
        return out

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def insert(self, v: dict) -> Optional[dict]:
        """Add v to the span.  Returns the normalized residual, or None if v was already in it."""
        r = self.reduce(v)
        if not r:
            return None
        p = max(r, key=self.key)
        c = r[p]
        if not c.is_one():
            inv = c.inverse()
            r = {k: inv * x for k, x in r.items()}
        for q, row in self.rows.items():
            x = row.get(p)
            if x:
                add_scaled(row, -x, r)
        self.rows[p] = r
        return r

    def sorted_rows(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows, key=self.key)]

    def signature(self) -> tuple:
        """Hashable canonical form of the subspace."""
        key = self.key
        return tuple(
            tuple(sorted(((k, x) for k, x in self.rows[p].items()), key=lambda kx: key(kx[0])))
            for p in sorted(self.rows, key=key)
        )


def kernel(vectors: list[dict], key: Callable[[Hashable], object]) -> list[list[Scalar]]:
    """Basis of the linear relations sum_k c_k vectors[k] = 0.

    Each vector is augmented with an identity block whose coordinates sort below
    every original coordinate; rows whose pivot lands in that block at the end
    are exactly the relations.
    """
    n = len(vectors)

    def tagged_key(t):
        tag, k = t
        return (tag, key(k)) if tag else (tag, k)

    ech = Echelon(tagged_key)
    for i, v in enumerate(vectors):
        aug = {(1, k): x for k, x in v.items()}
        aug[(0, i)] = ONE
        ech.insert(aug)
    out = []
    for p in sorted(ech.rows, key=tagged_key):
        if p[0] == 0:
            row = ech.rows[p]
            coeffs = [row.get((0, i)) for i in range(n)]
            out.append([c if c is not None else Scalar.from_int(0) for c in coeffs])
    return out
