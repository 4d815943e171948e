"""Finite (possibly truncated) simplicial sets in Eilenberg–Zilber form.

A simplex is stored as ``SimplexRef(base, deg)``: a nondegenerate simplex
id together with a surjection ``deg`` given by its list of values.  Every
simplex has exactly one such form, so equality of simplices is equality
of refs.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Hashable, Iterable, Mapping, NamedTuple, Sequence

from . import monotone as mono
from .monotone import Values


class TruncationError(ValueError):
    """Raised when an operation needs data above a stored truncation."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class SimplexRef(NamedTuple):
    base: Hashable
    deg: Values

    @property
    def dim(self) -> int:
        return len(self.deg) - 1

    @property
    def base_dim(self) -> int:
        return self.deg[-1]

    def is_nondegenerate(self) -> bool:
        return self.deg[-1] == len(self.deg) - 1


def nd(base: Hashable, dim: int) -> SimplexRef:
    """The canonical ref of a nondegenerate simplex."""
    return SimplexRef(base, mono.identity(dim))


class FiniteSimplicialSet:
    """Nondegenerate simplices per dimension plus their face refs.

    ``trunc_dim`` is ``None`` for a set whose nondegenerate simplices are
    all listed; otherwise data is only faithful up to ``trunc_dim`` and any
    request above it raises :class:`TruncationError`.
    """

    def __init__(
        self,
        name: str,
        simplices: Mapping[int, Sequence[Hashable]] | None = None,
        faces: Mapping[Hashable, Sequence[SimplexRef]] | None = None,
        trunc_dim: int | None = None,
    ):
        self.name = name
        self.trunc_dim = trunc_dim
        self._nondeg: dict[int, list] = {}
        self._dims: dict[Hashable, int] = {}
        self._faces: dict[Hashable, tuple[SimplexRef, ...]] = {}
        self._order: dict[Hashable, int] = {}
        self._act_cache: dict = {}
        self._levels: dict[int, list[SimplexRef]] = {}
        self._face_tables: dict[int, dict] = {}
        self._built = -1
        self._eager = simplices is not None
        for n, ids in sorted((simplices or {}).items()):
            for x in ids:
                self._add(x, n, tuple((faces or {}).get(x, ())))
        if self._eager:
            self._top = max((n for n, ids in self._nondeg.items() if ids), default=-1)

    # -- construction -------------------------------------------------
    def _add(self, x: Hashable, n: int, faces: tuple[SimplexRef, ...]) -> None:
        if x in self._dims:
            raise ValueError(f"duplicate simplex id {x!r} in {self.name}")
        level = self._nondeg.setdefault(n, [])
        self._order[x] = len(level)
        level.append(x)
        self._dims[x] = n
        self._faces[x] = faces

    def _build(self, n: int) -> None:
        """Populate level n; lazy subclasses override."""

    def _ensure(self, n: int) -> None:
        if self._eager:
            return
        while self._built < n:
            self._built += 1
            self._nondeg.setdefault(self._built, [])
            self._build(self._built)

    # -- shape --------------------------------------------------------
    @property
    def complete(self) -> bool:
        return self.trunc_dim is None

    @property
    def top(self) -> int:
        """Highest dimension carrying a nondegenerate simplex (complete sets)."""
        if not self.complete:
            raise TruncationError(f"{self.name} is truncated; its top dimension is unknown")
        return self._top

    @property
    def bound(self) -> int:
        """Highest dimension whose nondegenerate simplices are known."""
        return self.top if self.complete else self.trunc_dim

    def check_level(self, n: int) -> None:
        if self.trunc_dim is not None and n > self.trunc_dim:
            raise TruncationError(
                f"{self.name} is truncated at {self.trunc_dim}; level {n} requested", required=n
            )

    def nondeg(self, n: int) -> list:
        self.check_level(n)
        if self.complete and n > self.top:
            return []
        self._ensure(n)
        return self._nondeg.get(n, [])

    def dim_of(self, x: Hashable) -> int:
        return self._dims[x]

    def faces_of(self, x: Hashable) -> tuple[SimplexRef, ...]:
        return self._faces[x]

    def __contains__(self, x: Hashable) -> bool:
        return x in self._dims

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"

    # -- levels -------------------------------------------------------
    def level(self, n: int) -> list[SimplexRef]:
        """All n-simplices, ordered by (base dimension, base order, deg values)."""
        got = self._levels.get(n)
        if got is None:
            self.check_level(n)
            got = [
                SimplexRef(b, s)
                for m in range(n + 1)
                for b in self.nondeg(m)
                for s in mono.surjections(n, m)
            ]
            self._levels[n] = got
        return got

    def level_sizes(self, up_to: int) -> list[int]:
        return [len(self.level(n)) for n in range(up_to + 1)]

    def face_table(self, n: int) -> dict[tuple[SimplexRef, ...], list[SimplexRef]]:
        """n-simplices bucketed by their tuple of faces (n >= 1)."""
        got = self._face_tables.get(n)
        if got is None:
            got = {}
            for s in self.level(n):
                key = tuple(self.face(s, i) for i in range(n + 1))
                got.setdefault(key, []).append(s)
            self._face_tables[n] = got
        return got

    # -- operator action ----------------------------------------------
    def act(self, s: SimplexRef, theta: Values) -> SimplexRef:
        """Canonical form of s·θ for θ : [n'] → [n] (n = dim s)."""
        key = (s, theta)
        got = self._act_cache.get(key)
        if got is not None:
            return got
        if self.trunc_dim is not None:
            self.check_level(max(len(theta), len(s.deg)) - 1)
        sur, inj = mono.factor(mono.compose(s.deg, theta))
        m = s.deg[-1]
        r = nd(s.base, m)
        if len(inj) != m + 1:
            present = set(inj)
            for j in range(m, -1, -1):
                if j not in present:
                    r = self._face(r, j)
        got = SimplexRef(r.base, mono.compose(r.deg, sur))
        self._act_cache[key] = got
        return got

    def _face(self, r: SimplexRef, j: int) -> SimplexRef:
        if r.is_nondegenerate():
            return self._faces[r.base][j]
        return self.act(r, mono.coface(r.dim, j))

    def face(self, s: SimplexRef, i: int) -> SimplexRef:
        return self.act(s, mono.coface(s.dim, i))

    def degeneracy(self, s: SimplexRef, j: int) -> SimplexRef:
        return SimplexRef(s.base, mono.compose(s.deg, mono.codegeneracy(s.dim, j)))

    def vertices(self, s: SimplexRef) -> tuple[SimplexRef, ...]:
        return tuple(self.act(s, (i,)) for i in range(s.dim + 1))


# -- standard simplices ------------------------------------------------

@lru_cache(maxsize=None)
def standard_simplex(n: int) -> FiniteSimplicialSet:
    """Δ[n]: nondegenerate m-simplices are the injections [m] ↪ [n]."""
    if n < 0:
        raise ValueError("standard simplex needs n >= 0")
    simplices = {m: list(mono.injections(m, n)) for m in range(n + 1)}
    faces = {
        v: tuple(nd(v[:i] + v[i + 1:], m - 1) for i in range(m + 1))
        for m, ids in simplices.items() if m
        for v in ids
    }
    return FiniteSimplicialSet(f"Delta[{n}]", simplices, faces)


def simplex_of(values: Iterable[int]) -> SimplexRef:
    """The simplex of a standard simplex given by a monotone map [m] → [n]."""
    sur, inj = mono.factor(tuple(values))
    return SimplexRef(inj, sur)


def values_of(s: SimplexRef) -> Values:
    """Inverse of :func:`simplex_of`."""
    return tuple(s.base[e] for e in s.deg)


def top_simplex(n: int) -> SimplexRef:
    return simplex_of(range(n + 1))


def empty_sset(name: str = "empty") -> FiniteSimplicialSet:
    return FiniteSimplicialSet(name, {}, {})
