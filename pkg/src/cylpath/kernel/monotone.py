"""Weakly increasing maps between finite ordinals [n] = {0, ..., n}.

Internally an operator is a plain tuple of values; :class:`MonotoneMap`
wraps one together with its target so it can be validated and printed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Tuple

Values = Tuple[int, ...]


@dataclass(frozen=True)
class MonotoneMap:
    values: Values
    target_dim: int

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("a monotone map needs a non-empty source ordinal")
        if any(v < 0 or v > self.target_dim for v in vals):
            raise ValueError(f"values {vals} out of range for target [{self.target_dim}]")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"values {vals} are not weakly increasing")

    @property
    def source_dim(self) -> int:
        return len(self.values) - 1

    def __call__(self, i: int) -> int:
        return self.values[i]

    def is_surjective(self) -> bool:
        return is_surjective(self.values, self.target_dim)

    def is_injective(self) -> bool:
        return is_injective(self.values)

    def after(self, other: "MonotoneMap") -> "MonotoneMap":
        """self ∘ other."""
        if other.target_dim != self.source_dim:
            raise ValueError("monotone maps are not composable")
        return MonotoneMap(compose(self.values, other.values), self.target_dim)

    @classmethod
    def identity(cls, n: int) -> "MonotoneMap":
        return cls(identity(n), n)


class Surjection(MonotoneMap):
    def __post_init__(self):
        super().__post_init__()
        if not self.is_surjective():
            raise ValueError(f"{self.values} is not onto [{self.target_dim}]")


class Injection(MonotoneMap):
    def __post_init__(self):
        super().__post_init__()
        if not self.is_injective():
            raise ValueError(f"{self.values} is not injective")


@lru_cache(maxsize=None)
def identity(n: int) -> Values:
    return tuple(range(n + 1))


def is_identity(values: Values) -> bool:
    return values == identity(len(values) - 1)


def coface(n: int, i: int) -> Values:
    """δ_i : [n-1] → [n], skipping i."""
    return tuple(k if k < i else k + 1 for k in range(n))


def codegeneracy(n: int, j: int) -> Values:
    """σ_j : [n+1] → [n], hitting j twice."""
    return tuple(k if k <= j else k - 1 for k in range(n + 2))


def constant(n: int, value: int = 0) -> Values:
    """The map [n] → [value..], e.g. σ_0^n : [n] → [0] for value 0."""
    return (value,) * (n + 1)


def compose(g: Values, f: Values) -> Values:
    """g ∘ f."""
    return tuple(g[i] for i in f)


def is_surjective(values: Values, target_dim: int) -> bool:
    return values[0] == 0 and values[-1] == target_dim and all(
        b - a <= 1 for a, b in zip(values, values[1:])
    )


def is_injective(values: Values) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


@lru_cache(maxsize=None)
def factor(values: Values) -> tuple[Values, Values]:
    """Epi-mono factorization: returns (surjection, injection) with inj ∘ sur = values."""
    image = sorted(set(values))
    pos = {v: k for k, v in enumerate(image)}
    return tuple(pos[v] for v in values), tuple(image)


@lru_cache(maxsize=None)
def surjections(n: int, m: int) -> tuple[Values, ...]:
    """All surjections [n] ↠ [m] in lexicographic order; there are C(n, m)."""
    if m > n or m < 0:
        return ()
    out = []
    for steps in combinations(range(1, n + 1), m):
        vals, cur, s = [], 0, set(steps)
        for i in range(n + 1):
            if i in s:
                cur += 1
            vals.append(cur)
        out.append(tuple(vals))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def injections(m: int, n: int) -> tuple[Values, ...]:
    """All injections [m] ↪ [n] in lexicographic order."""
    return tuple(combinations(range(n + 1), m + 1))


def monotone_maps(m: int, n: int) -> Iterator[Values]:
    """Every weakly increasing map [m] → [n]."""
    def rec(prefix, lo):
        if len(prefix) == m + 1:
            yield tuple(prefix)
            return
        for v in range(lo, n + 1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    yield from rec([], 0)


def jointly_injective(a: Values, b: Values) -> bool:
    return all((x1, y1) != (x2, y2) for x1, y1, x2, y2 in zip(a, b, a[1:], b[1:]))


@lru_cache(maxsize=None)
def lattice_paths(n: int, p: int, q: int) -> tuple[tuple[Values, Values], ...]:
    """Pairs of surjections [n]↠[p], [n]↠[q] that are jointly injective."""
    out = []

    def rec(a, b):
        if len(a) == n + 1:
            if a[-1] == p and b[-1] == q:
                out.append((tuple(a), tuple(b)))
            return
        x, y = a[-1], b[-1]
        for dx, dy in ((0, 1), (1, 0), (1, 1)):
            if x + dx <= p and y + dy <= q:
                a.append(x + dx)
                b.append(y + dy)
                rec(a, b)
                a.pop()
                b.pop()

    rec([0], [0])
    return tuple(sorted(out))
