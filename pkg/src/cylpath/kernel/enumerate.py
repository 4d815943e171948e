"""Exhaustive enumeration of simplicial maps between finite simplicial sets."""

from __future__ import annotations

from .maps import SimplicialMap
from .sset import FiniteSimplicialSet, TruncationError


def enumerate_maps(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, up_to: int | None = None) -> list[SimplicialMap]:
    """Every simplicial map X → Y, in a deterministic order.

    Nondegenerate simplices of X are assigned dimension by dimension; once
    the faces of a simplex are fixed, its candidates are exactly the
    simplices of Y with those faces, so no search is wasted on
    incompatible values.
    """
    bound = X.bound if up_to is None else up_to
    if X.complete and X.top > bound:
        raise TruncationError(
            f"{X.name} has nondegenerate simplices up to {X.top}, above up_to={bound}", required=X.top
        )
    if not X.complete and bound > X.trunc_dim:
        raise TruncationError(f"{X.name} is truncated at {X.trunc_dim}", required=bound)
    try:
        Y.check_level(bound)
    except TruncationError as exc:
        raise TruncationError(
            f"enumerating maps {X.name} -> {Y.name} needs {Y.name} up to {bound}", required=bound
        ) from exc

    order = [(x, n) for n in range(bound + 1) for x in X.nondeg(n)]
    if not order:
        return [SimplicialMap(X, Y, {}, up_to=bound)]
    faces = [X.faces_of(x) if n else () for x, n in order]
    assign: dict = {}
    act = Y.act

    def candidates(k):
        n = order[k][1]
        if n == 0:
            return Y.level(0)
        req = []
        for f in faces[k]:
            v = assign[f.base]
            req.append(v if f.deg[-1] == len(f.deg) - 1 else act(v, f.deg))
        return Y.face_table(n).get(tuple(req), ())

    results = []
    last = len(order) - 1
    stack = [iter(candidates(0))]
    while stack:
        k = len(stack) - 1
        c = next(stack[k], None)
        if c is None:
            stack.pop()
            continue
        assign[order[k][0]] = c
        if k == last:
            results.append(SimplicialMap(X, Y, dict(assign), up_to=bound))
        else:
            stack.append(iter(candidates(k + 1)))
    return results


def count_maps(X: FiniteSimplicialSet, Y: FiniteSimplicialSet) -> int:
    return len(enumerate_maps(X, Y))
