"""Well-formedness checks for simplicial sets and maps."""

from __future__ import annotations

from ..report import VerificationReport
from . import monotone as mono
from .maps import SimplicialMap
from .sset import FiniteSimplicialSet, SimplexRef, nd


def validate_sset(X: FiniteSimplicialSet) -> VerificationReport:
    """Field invariants plus d_i d_j = d_{j-1} d_i (i < j) on stored simplices."""
    report = VerificationReport(f"validate_sset:{X.name}")
    if X.complete:
        limit = X.top
    else:
        limit = X.trunc_dim
    shape_ok = True
    if not X.complete and X._eager:
        above = [n for n, ids in X._nondeg.items() if ids and n > X.trunc_dim]
        if above:
            shape_ok = report.record("truncation", X.name, False, f"simplices stored in dimension {max(above)} > trunc {X.trunc_dim}")
    for n in range(limit + 1):
        for x in X.nondeg(n):
            faces = X.faces_of(x) if n else ()
            if n and len(faces) != n + 1:
                shape_ok = report.record("faces", f"{X.name}:{x}", False, f"{len(faces)} faces for a {n}-simplex")
                continue
            for i, f in enumerate(faces):
                if not isinstance(f, SimplexRef) or f.base not in X:
                    shape_ok = report.record("faces", f"{X.name}:{x}", False, f"face {i} targets unknown id {f[0]!r}")
                elif X.dim_of(f.base) != f.deg[-1] or len(f.deg) != n or not mono.is_surjective(f.deg, f.deg[-1]):
                    shape_ok = report.record(
                        "faces", f"{X.name}:{x}", False, f"face {i} = {f!r} is not a valid {n - 1}-simplex"
                    )
    if not shape_ok:
        return report
    for n in range(2, limit + 1):
        for x in X.nondeg(n):
            s = nd(x, n)
            for j in range(1, n + 1):
                for i in range(j):
                    lhs = X.face(X.face(s, j), i)
                    rhs = X.face(X.face(s, i), j - 1)
                    if lhs != rhs:
                        report.record(
                            "simplicial-identity",
                            f"{X.name}:{x}",
                            False,
                            f"d_{i} d_{j} = {lhs!r} but d_{j - 1} d_{i} = {rhs!r} (i={i}, j={j})",
                        )
    report.record("simplicial-identity", X.name, not report.failures, "see failures above")
    return report


def validate_map(f: SimplicialMap) -> VerificationReport:
    """Dimension preservation and face compatibility on every nondegenerate simplex."""
    report = VerificationReport(f"validate_map:{f.label()}")
    dom, cod = f.dom, f.cod
    for x in f.nondeg_domain():
        n = dom.dim_of(x)
        y = f.on(x)
        if y.dim != n or y.base not in cod or cod.dim_of(y.base) != y.deg[-1]:
            report.record("dimension", str(x), False, f"{x!r} of dimension {n} sent to {y!r}")
            continue
        for i, face in enumerate(dom.faces_of(x) if n else ()):
            lhs, rhs = f(face), cod.face(y, i)
            if lhs != rhs:
                report.record("face-compatibility", str(x), False, f"d_{i}: f(d_{i} x) = {lhs!r} but d_{i} f(x) = {rhs!r}")
    report.record("face-compatibility", f.label(), not report.failures, "see failures above")
    return report
