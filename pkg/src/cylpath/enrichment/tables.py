"""Integer-indexed tables for function-complex levels.

Composition and the hom actions reduce to array lookups once every map
X × Δ[n] → Y is stored as a row of target indices.  For an m-simplex
(x, t) of X × Δ[n] the composite of f and g is g(f(x, t₁), t₂), where
(t₁, t₂) is the image of t under the chosen diagonal of Δ[n].
"""

from __future__ import annotations

import numpy as np

from ..kernel import monotone as mono
from ..kernel.maps import SimplicialMap
from ..kernel.product import ProductSet
from ..kernel.sset import FiniteSimplicialSet, SimplexRef, standard_simplex
from .complex import FunctionComplex, function_complex, slice_product

INDEX = np.int64


class Indexed:
    """Every simplex of S in dimensions 0..top, numbered level by level."""

    def __init__(self, S: FiniteSimplicialSet, top: int):
        self.S, self.top = S, top
        self.refs: list[SimplexRef] = []
        for m in range(top + 1):
            self.refs.extend(S.level(m))
        self.index = {s: i for i, s in enumerate(self.refs)}

    def __len__(self) -> int:
        return len(self.refs)


_indexed: dict[tuple[int, int], Indexed] = {}


def indexed(S: FiniteSimplicialSet, top: int) -> Indexed:
    key = (id(S), top)
    got = _indexed.get(key)
    if got is None or got.S is not S:
        got = _indexed[key] = Indexed(S, top)
    return got


def _pair_table(P: ProductSet, top: int) -> np.ndarray:
    """pairs[i, j] = index in P of (left simplex i, right simplex j), or -1 across dimensions."""
    left, right, whole = indexed(P.left, top), indexed(P.right, top), indexed(P, top)
    table = np.full((len(left), len(right)), -1, dtype=INDEX)
    for i, a in enumerate(left.refs):
        for j, b in enumerate(right.refs):
            if a.dim == b.dim:
                table[i, j] = whole.index[P.pair(a, b)]
    return table


_pairs: dict[tuple[int, int], np.ndarray] = {}


def pair_table(P: ProductSet, top: int) -> np.ndarray:
    key = (id(P), top)
    got = _pairs.get(key)
    if got is None:
        got = _pairs[key] = _pair_table(P, top)
    return got


def map_table(f: SimplicialMap, top: int) -> np.ndarray:
    """Values of f on every simplex of its domain up to ``top``, as codomain indices."""
    src, dst = indexed(f.dom, top), indexed(f.cod, top)
    return np.array([dst.index[f(s)] for s in src.refs], dtype=INDEX)


def _row_key(row: np.ndarray) -> bytes:
    return np.ascontiguousarray(row, dtype=INDEX).tobytes()


class LevelTable:
    """Level n of usSet(X, Y) with each simplex's underlying map as index rows.

    ``keys[i]`` lists the values on the nondegenerate simplices of X × Δ[n];
    ``full[i]`` lists the values on every simplex of X × Δ[n].
    """

    def __init__(self, h: FunctionComplex, n: int):
        self.h, self.n = h, n
        X, Y = h.source, h.target
        self.P = P = slice_product(X, n)
        self.top = P.bound
        self.simplices = h.level(n)
        self.position = {s: i for i, s in enumerate(self.simplices)}
        nondeg = [(x, m) for m in range(self.top + 1) for x in P.nondeg(m)]
        self.nondeg = [SimplexRef(x, mono.identity(m)) for x, m in nondeg]
        Yi = indexed(Y, self.top)
        key_of = {ref: key for key, ref in h._tables[n].items()}
        self._stored = [key_of[s] for s in self.simplices]
        self._where = {x: i for i, (x, _) in enumerate(nondeg)}
        self.keys = np.array(
            [[Yi.index[v] for v in vals] for vals in self._stored], dtype=INDEX
        ).reshape(len(self.simplices), len(nondeg))
        self._full: dict[int, np.ndarray] = {}
        self.lookup = {_row_key(row): i for i, row in enumerate(self.keys)}

    def __len__(self) -> int:
        return len(self.simplices)

    def full(self, top: int) -> np.ndarray:
        """Values on every simplex of X × Δ[n] up to dimension ``top``."""
        got = self._full.get(top)
        if got is None:
            Y = self.h.target
            Yi, Pi = indexed(Y, top), indexed(self.P, top)
            # every simplex of P is (nondegenerate base)·deg; evaluate through the stored values
            base_pos = [self._where[q.base] for q in Pi.refs]
            act = Y.act
            got = np.empty((len(self.simplices), len(Pi)), dtype=INDEX)
            for i, vals in enumerate(self._stored):
                got[i] = [
                    Yi.index[vals[b] if q.is_nondegenerate() else act(vals[b], q.deg)]
                    for b, q in zip(base_pos, Pi.refs)
                ]
            self._full[top] = got
        return got

    def find(self, rows: np.ndarray) -> np.ndarray:
        """Level indices of the maps whose nondegenerate values are ``rows`` (-1 if absent)."""
        rows = np.ascontiguousarray(rows, dtype=INDEX)
        flat = rows.reshape(int(np.prod(rows.shape[:-1])), rows.shape[-1])
        out = np.array([self.lookup.get(_row_key(r), -1) for r in flat], dtype=INDEX)
        return out.reshape(rows.shape[:-1])

    def face_index(self, i: int) -> np.ndarray:
        """d_i on level n as indices into level n-1."""
        below = level_table(self.h, self.n - 1)
        return np.array([below.position[self.h.face(s, i)] for s in self.simplices], dtype=INDEX)

    def degeneracy_index(self, j: int) -> np.ndarray:
        """s_j from level n into level n+1."""
        above = level_table(self.h, self.n + 1)
        return np.array([above.position[self.h.degeneracy(s, j)] for s in self.simplices], dtype=INDEX)


_levels: dict[tuple[int, int], LevelTable] = {}


def level_table(h: FunctionComplex, n: int) -> LevelTable:
    key = (id(h), n)
    got = _levels.get(key)
    if got is None or got.h is not h:
        got = _levels[key] = LevelTable(h, n)
    return got


def ub_table(tXY: LevelTable, tYZ: LevelTable, tXZ: LevelTable, diagonal: SimplicialMap) -> np.ndarray:
    """U[f, g] = index of the composite of f and g in level n of usSet(X, Z)."""
    n = tXY.n
    PX, PY = tXY.P, tYZ.P
    top = tXY.top
    S = standard_simplex(n)
    PXi = indexed(PX, top)
    Si = indexed(S, top)
    first, second = [], []
    for p in tXY.nondeg:
        x, t = PX.components(p)
        t1, t2 = diagonal.cod.components(diagonal(t))
        first.append(PXi.index[PX.pair(x, t1)])
        second.append(Si.index[t2])
    first = np.array(first, dtype=INDEX)
    second = np.array(second, dtype=INDEX)
    y = tXY.full(top)[:, first]
    r = pair_table(PY, top)[y, second[None, :]]
    z = tYZ.full(top)[:, r]  # (g, f, p)
    return tXZ.find(z).T


def post_table(tXY: LevelTable, tXZ: LevelTable, v: SimplicialMap) -> np.ndarray:
    """Index of v ∘ F in level n of usSet(X, Z), for each F in level n of usSet(X, Y)."""
    values = map_table(v, tXY.top)
    return tXZ.find(values[tXY.keys])


def pre_table(tXY: LevelTable, tZY: LevelTable, u: SimplicialMap) -> np.ndarray:
    """Index of F ∘ (u × id) in level n of usSet(Z, Y), for each F in level n of usSet(X, Y)."""
    PX, PZ = tXY.P, tZY.P
    PXi = indexed(PX, tZY.top)
    cols = []
    for p in tZY.nondeg:
        z, t = PZ.components(p)
        cols.append(PXi.index[PX.pair(u(z), t)])
    cols = np.array(cols, dtype=INDEX)
    return tZY.find(tXY.full(tZY.top)[:, cols])


def tables_for(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, D: int, n: int) -> LevelTable:
    return level_table(function_complex(X, Y, D), n)
