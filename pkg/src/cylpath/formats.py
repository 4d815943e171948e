"""Plain-text documents for simplicial sets (``.sset``) and maps (``.smap``).

A simplicial set document::

    sset delta1 trunc none
    simplex v0 0
    simplex v1 0
    simplex e 1
    face e 0 v1 0
    face e 1 v0 0

``face X I Y VALUES`` says d_I X is Y degenerated by the surjection whose
value list is VALUES (comma separated; ``0`` alone for a vertex, ``0,1``
for an undegenerate edge, ``0,0`` for a degenerate edge).  The truncation
is an integer or ``none``.

A map document::

    smap swap prod prod
    send x y 0,1

sends the nondegenerate simplex x of the domain to y·VALUES in the
codomain.  Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .kernel import monotone as mono
from .kernel.maps import SimplicialMap
from .kernel.sset import FiniteSimplicialSet, SimplexRef
from .kernel.validate import validate_map, validate_sset

TOKEN = re.compile(r"[A-Za-z0-9_.\-\[\]]+\Z")


class DocumentError(ValueError):
    """A syntax or semantic error at a position in a document."""

    def __init__(self, line: int, column: int, reason: str):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.line, self.column, self.reason = line, column, reason


@dataclass
class _Line:
    number: int
    words: list[tuple[int, str]]  # (column, word)

    def col(self, i: int) -> int:
        return self.words[i][0] if i < len(self.words) else (self.words[-1][0] + len(self.words[-1][1]) if self.words else 1)

    def word(self, i: int) -> str:
        return self.words[i][1]

    def fail(self, i: int, reason: str) -> DocumentError:
        return DocumentError(self.number, self.col(i), reason)


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        words = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]
        if words:
            yield _Line(number, words)


def _expect(line: _Line, count: int, shape: str) -> None:
    if len(line.words) != count:
        raise line.fail(min(len(line.words), count), f"expected `{shape}`")


def _token(line: _Line, i: int) -> str:
    w = line.word(i)
    if not TOKEN.match(w):
        raise line.fail(i, f"{w!r} is not an identifier")
    return w


def _int(line: _Line, i: int, what: str) -> int:
    w = line.word(i)
    if not w.isdigit():
        raise line.fail(i, f"{what} must be a non-negative integer, got {w!r}")
    return int(w)


def _values(line: _Line, i: int) -> tuple[int, ...]:
    w = line.word(i)
    parts = w.split(",")
    if not all(p.isdigit() for p in parts):
        raise line.fail(i, f"degeneracy {w!r} must be comma-separated integers")
    values = tuple(int(p) for p in parts)
    if not mono.is_surjective(values, values[-1]) or any(b < a for a, b in zip(values, values[1:])):
        raise line.fail(i, f"degeneracy {w!r} is not a surjection onto [0..{values[-1]}]")
    return values


def _values_text(values) -> str:
    return ",".join(str(v) for v in values)


# -- simplicial sets --------------------------------------------------------------


def parse_sset(text: str) -> FiniteSimplicialSet:
    lines = list(_lines(text))
    if not lines or lines[0].word(0) != "sset":
        raise DocumentError(lines[0].number if lines else 1, 1, "document must start with `sset NAME trunc N|none`")
    head = lines[0]
    _expect(head, 4, "sset NAME trunc N|none")
    name = _token(head, 1)
    if head.word(2) != "trunc":
        raise head.fail(2, "expected the keyword `trunc`")
    trunc = None if head.word(3) == "none" else _int(head, 3, "truncation")

    dims: dict[str, int] = {}
    order: dict[int, list[str]] = {}
    faces: dict[str, dict[int, SimplexRef]] = {}
    pending = []
    for line in lines[1:]:
        kind = line.word(0)
        if kind == "simplex":
            _expect(line, 3, "simplex ID DIM")
            x, n = _token(line, 1), _int(line, 2, "dimension")
            if x in dims:
                raise line.fail(1, f"duplicate declaration of simplex {x}")
            if trunc is not None and n > trunc:
                raise line.fail(2, f"simplex {x} has dimension {n} above the truncation {trunc}")
            dims[x] = n
            order.setdefault(n, []).append(x)
        elif kind == "face":
            _expect(line, 5, "face ID INDEX TARGET VALUES")
            pending.append(line)
        else:
            raise line.fail(0, f"unknown declaration {kind!r}")
    for line in pending:
        x, i, y = _token(line, 1), _int(line, 2, "face index"), _token(line, 3)
        values = _values(line, 4)
        if x not in dims:
            raise line.fail(1, f"unknown simplex id {x}")
        if y not in dims:
            raise line.fail(3, f"unknown face target id {y}")
        n = dims[x]
        if i > n or n == 0:
            raise line.fail(2, f"a {n}-simplex has no face {i}")
        if len(values) != n or values[-1] != dims[y]:
            raise line.fail(
                4, f"face {i} of {x} must be a {n - 1}-simplex onto the {dims[y]}-simplex {y}, got values {_values_text(values)}"
            )
        if i in faces.setdefault(x, {}):
            raise line.fail(2, f"duplicate declaration of face {i} of {x}")
        faces[x][i] = SimplexRef(y, values)
    for x, n in dims.items():
        got = faces.get(x, {})
        missing = [i for i in range(n + 1) if i not in got] if n else []
        if missing:
            where = next(l for l in lines if l.word(0) == "simplex" and l.word(1) == x)
            raise where.fail(1, f"simplex {x} lacks face {missing[0]}")
    S = FiniteSimplicialSet(
        name,
        {n: ids for n, ids in order.items()},
        {x: tuple(f[i] for i in range(len(f))) for x, f in faces.items()},
        trunc_dim=trunc,
    )
    report = validate_sset(S)
    if report.failures:
        bad = report.failures[0]
        raise DocumentError(head.number, 1, f"{bad.anchor} fails at {bad.instance}: {bad.witness}")
    return S


def _id_text(x) -> str:
    if isinstance(x, str) and TOKEN.match(x):
        return x
    if isinstance(x, tuple) and all(isinstance(v, int) for v in x):
        return "s" + "".join(str(v) for v in x)
    if isinstance(x, tuple) and len(x) == 2 and all(isinstance(r, SimplexRef) for r in x):
        return "x".join(_ref_text(r) for r in x)
    text = re.sub(r"[^A-Za-z0-9_.\-]+", "_", repr(x)).strip("_")
    return text or "x"


def _ref_text(r: SimplexRef) -> str:
    base = _id_text(r.base)
    return base if r.is_nondegenerate() else f"{base}_d{''.join(str(v) for v in r.deg)}"


def _names(S: FiniteSimplicialSet) -> dict:
    names, seen = {}, set()
    for n in range(S.bound + 1):
        for x in S.nondeg(n):
            t = _id_text(x)
            if t in seen:
                raise ValueError(f"two simplices of {S.name} print as {t}")
            seen.add(t)
            names[x] = t
    return names


def print_sset(S: FiniteSimplicialSet) -> str:
    names = _names(S)
    limit = S.bound
    out = [f"sset {_id_text(S.name)} trunc {'none' if S.complete else S.trunc_dim}"]
    for n in range(limit + 1):
        for x in S.nondeg(n):
            out.append(f"simplex {names[x]} {n}")
    for n in range(1, limit + 1):
        for x in S.nondeg(n):
            for i, f in enumerate(S.faces_of(x)):
                out.append(f"face {names[x]} {i} {names[f.base]} {_values_text(f.deg)}")
    return "\n".join(out) + "\n"


# -- maps -------------------------------------------------------------------------


def parse_map(text: str, registry: dict[str, FiniteSimplicialSet]) -> SimplicialMap:
    lines = list(_lines(text))
    if not lines or lines[0].word(0) != "smap":
        raise DocumentError(lines[0].number if lines else 1, 1, "document must start with `smap NAME DOM COD`")
    head = lines[0]
    _expect(head, 4, "smap NAME DOM COD")
    name = _token(head, 1)
    sides = []
    for i in (2, 3):
        key = _token(head, i)
        if key not in registry:
            raise head.fail(i, f"unknown simplicial set {key}; known: {', '.join(sorted(registry)) or 'none'}")
        sides.append(registry[key])
    dom, cod = sides
    dom_ids = {t: x for x, t in _names(dom).items()}
    cod_ids = {t: y for y, t in _names(cod).items()}
    assign = {}
    for line in lines[1:]:
        if line.word(0) != "send":
            raise line.fail(0, f"unknown declaration {line.word(0)!r}")
        _expect(line, 4, "send ID TARGET VALUES")
        a, b = _token(line, 1), _token(line, 2)
        if a not in dom_ids:
            raise line.fail(1, f"unknown simplex id {a} in {dom.name}")
        if b not in cod_ids:
            raise line.fail(2, f"unknown simplex id {b} in {cod.name}")
        x, y = dom_ids[a], cod_ids[b]
        values = _values(line, 3)
        if x in assign:
            raise line.fail(1, f"duplicate declaration for {a}")
        if len(values) != dom.dim_of(x) + 1 or values[-1] != cod.dim_of(y):
            raise line.fail(3, f"{a} has dimension {dom.dim_of(x)}; values {_values_text(values)} do not land on {b}")
        assign[x] = SimplexRef(y, values)
    for n in range(dom.bound + 1):
        for x in dom.nondeg(n):
            if x not in assign:
                raise head.fail(2, f"no value given for {_id_text(x)}")
    f = SimplicialMap(dom, cod, assign, name=name)
    report = validate_map(f)
    if report.failures:
        bad = report.failures[0]
        raise DocumentError(head.number, 1, f"{bad.anchor} fails at {bad.instance}: {bad.witness}")
    return f


def print_map(f: SimplicialMap, dom_name: str | None = None, cod_name: str | None = None) -> str:
    out = [f"smap {_id_text(f.label())} {dom_name or _id_text(f.dom.name)} {cod_name or _id_text(f.cod.name)}"]
    for x in f.nondeg_domain():
        y = f.on(x)
        out.append(f"send {_id_text(x)} {_id_text(y.base)} {_values_text(y.deg)}")
    return "\n".join(out) + "\n"
