"""Cylinder (tensor) and path (cotensor) structures on finite simplicial sets.

A structure is a triple: an object, a structure map out of the parameter
set K, and a family of comparison isomorphisms indexed by probe objects.
The comparison maps are produced on demand, but only for declared probes.
"""

from __future__ import annotations

from typing import Callable

from ..enrichment.complex import function_complex
from ..enrichment.ops import ev, hom_action_post, hom_action_pre, sharp_inv, ub
from ..kernel.maps import SimplicialMap, compose_map, constant_map, identity_map, is_iso, yoneda
from ..kernel.product import canonical_iso, product_map, times
from ..kernel.sset import FiniteSimplicialSet, SimplexRef, nd, standard_simplex
from ..report import VerificationReport


class MissingProbe(KeyError):
    """A comparison map was requested for an object outside the probe set."""


def _dim(S: FiniteSimplicialSet) -> int:
    return S.top if S.complete else S.trunc_dim


def context_truncation(D: int, objects, parameters) -> int:
    """Truncation every function complex must carry to check levels 0..D.

    A comparison map at level D sends simplices of K × Δ[D] to maps out of
    Y × Δ[p] with p ≤ dim K + D, so carriers are read up to
    D + dim K + dim Y.
    """
    return D + max([0] + [_dim(S) for S in parameters]) + max([0] + [_dim(S) for S in objects])


class _Structure:
    kind = ""

    def __init__(self, X, K, obj, structure_map, comparison: Callable, probes, D, T, name=None):
        self.X, self.K, self.obj = X, K, obj
        self.D, self.T = D, T
        self._comparison = comparison
        self.probes = list(probes)
        self._cache: dict[int, SimplicialMap] = {}
        self.name = name or f"{self.kind}({X.name},{K.name})"
        self._structure_map = structure_map

    def has_probe(self, Y) -> bool:
        return any(Y is P for P in self.probes)

    def with_probes(self, *extra) -> "_Structure":
        for Y in extra:
            if not self.has_probe(Y):
                self.probes.append(Y)
        return self

    def comparison(self, Y: FiniteSimplicialSet) -> SimplicialMap:
        if not self.has_probe(Y):
            raise MissingProbe(f"{Y.name} is not a probe of {self.name}")
        got = self._cache.get(id(Y))
        if got is None:
            got = self._cache[id(Y)] = self._comparison(Y)
        return got

    def comparison_unchecked(self, Y: FiniteSimplicialSet) -> SimplicialMap:
        """The comparison map at Y, adding Y to the probes first."""
        return self.with_probes(Y).comparison(Y)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} obj={self.obj.name}>"


class CylinderStructure(_Structure):
    """obj, alpha : K → usSet(X, obj), and phi_Y : usSet(obj, Y) → usSet(K, usSet(X, Y))."""

    kind = "cyl"

    @property
    def alpha(self) -> SimplicialMap:
        return self._structure_map

    def phi(self, Y: FiniteSimplicialSet) -> SimplicialMap:
        return self.comparison(Y)


class PathStructure(_Structure):
    """obj, beta : K → usSet(obj, X), and psi_Y : usSet(Y, obj) → usSet(K, usSet(Y, X))."""

    kind = "path"

    @property
    def beta(self) -> SimplicialMap:
        return self._structure_map

    def psi(self, Y: FiniteSimplicialSet) -> SimplicialMap:
        return self.comparison(Y)


# -- canonical constructions ---------------------------------------------


def canonical_cylinder(X, K, probes, D: int, T: int | None = None) -> CylinderStructure:
    """obj = X × K; alpha(k) carries id_X × yoneda(k); phi curries across the associator."""
    T = context_truncation(D, [X, *probes], [K]) if T is None else T
    obj = times(X, K)
    h_X_obj = function_complex(X, obj, T)
    idX = identity_map(X)

    def alpha_rule(k):
        n = K.dim_of(k)
        return h_X_obj.ref_of_map(product_map(idX, yoneda(K, nd(k, n))))

    alpha = SimplicialMap(K, h_X_obj, rule=alpha_rule, up_to=min(K.bound, D), name=f"alpha[{X.name},{K.name}]")

    def phi_for(Y):
        src = function_complex(obj, Y, T)
        dst = function_complex(K, function_complex(X, Y, T), T)

        def rule(x):
            F = src.underlying(nd(x, src.dim_of(x)))
            n = F.dom.right.top
            rebracket = canonical_iso("assoc", X, K, standard_simplex(n)).inverse
            curried = sharp_inv(compose_map(F, rebracket), T)
            return dst.ref_of_map(curried)

        return SimplicialMap(src, dst, rule=rule, up_to=D, name=f"phi[{X.name},{K.name},{Y.name}]")

    return CylinderStructure(X, K, obj, alpha, phi_for, probes, D, T)


def canonical_path(X, K, probes, D: int, T: int | None = None) -> PathStructure:
    """obj = usSet(K, X); beta(k) evaluates at k; psi re-curries F(y, t) evaluated at k."""
    T = context_truncation(D, [X, *probes], [K]) if T is None else T
    obj = function_complex(K, X, T)
    h_obj_X = function_complex(obj, X, T)
    evaluation = ev(K, X, T)
    id_obj = identity_map(obj)

    def beta_rule(k):
        n = K.dim_of(k)
        S = standard_simplex(n)
        whole = compose_map(evaluation, compose_map(product_map(yoneda(K, nd(k, n)), id_obj), canonical_iso("swap", obj, S)))
        return h_obj_X.ref_of_map(whole)

    beta = SimplicialMap(K, h_obj_X, rule=beta_rule, up_to=min(K.bound, D), name=f"beta[{X.name},{K.name}]")

    def psi_for(Y):
        src = function_complex(Y, obj, T)
        dst = function_complex(K, function_complex(Y, X, T), T)

        def rule(x):
            F = src.underlying(nd(x, src.dim_of(x)))
            PY = F.dom
            KS = times(K, PY.right)
            whole = times(Y, KS)

            def value(z):
                a, b = z
                k, t = KS.components(b)
                return obj.evaluate(F(PY.pair(a, t)), k)

            G = SimplicialMap(whole, X, rule=value, up_to=whole.bound)
            return dst.ref_of_map(sharp_inv(G, T))

        return SimplicialMap(src, dst, rule=rule, up_to=D, name=f"psi[{X.name},{K.name},{Y.name}]")

    return PathStructure(X, K, obj, beta, psi_for, probes, D, T)


# -- checks ----------------------------------------------------------------


def check_structure_def(S: _Structure) -> VerificationReport:
    """Both composites of the defining square agree on K_n × hom_n for every probe and n ≤ D;
    every comparison map is a bijection on each of those levels."""
    report = VerificationReport(f"structure:{S.name}")
    cylinder = isinstance(S, CylinderStructure)
    for Y in S.probes:
        comp = S.comparison(Y)
        inst = f"{S.name} probe {Y.name}"
        if cylinder:
            first, second = function_complex(S.X, S.obj, S.T), comp.dom
        else:
            first, second = comp.dom, function_complex(S.obj, S.X, S.T)
        outer = comp.cod
        witness = None
        for n in range(S.D + 1):
            simplices = comp.dom.level(n)
            for k in S.K.level(n):
                m = S.alpha(k) if cylinder else S.beta(k)
                for F in simplices:
                    top = ub(m, F, first, second) if cylinder else ub(F, m, first, second)
                    bottom = outer.evaluate(comp(F), k)
                    if top != bottom:
                        witness = f"n={n} k={k} F={F}: composite {top} but evaluation {bottom}"
                        break
                if witness:
                    break
            if witness:
                break
        report.record("structure-square", inst, witness is None, witness)
        bad = _first_non_bijective_level(comp, S.D)
        report.record("comparison-bijective", inst, bad is None, bad)
    if not S.probes:
        report.warnings.append(f"{S.name}: empty probe set, nothing checked")
    return report


def _first_non_bijective_level(f: SimplicialMap, D: int) -> str | None:
    for n in range(D + 1):
        src, dst = f.dom.level(n), f.cod.level(n)
        image = {f(s) for s in src}
        if len(image) != len(src) or len(image) != len(dst):
            return f"level {n}: {len(src)} simplices onto {len(image)} of {len(dst)}"
    return None


def with_constant_alpha(S: CylinderStructure) -> CylinderStructure:
    """A deliberately broken copy whose structure map collapses K onto one vertex."""
    h = S.alpha.cod
    alpha = constant_map(S.K, h, h.level(0)[0])
    return CylinderStructure(S.X, S.K, S.obj, alpha, S._comparison, S.probes, S.D, S.T, name=f"{S.name}~const")


# -- transport along isomorphisms -------------------------------------------


def relabel(S: FiniteSimplicialSet, tag: str, up_to: int) -> SimplicialMap:
    """An isomorphism from S onto a fresh copy whose simplex ids are tagged."""
    simplices = {n: [(tag, x) for x in S.nondeg(n)] for n in range(up_to + 1)}
    faces = {
        (tag, x): tuple(f._replace(base=(tag, f.base)) for f in S.faces_of(x))
        for n in range(1, up_to + 1)
        for x in S.nondeg(n)
    }
    copy = FiniteSimplicialSet(f"{S.name}'", simplices, faces, trunc_dim=None if S.complete else up_to)
    rho = SimplicialMap(S, copy, rule=lambda x: nd((tag, x), S.dim_of(x)), up_to=up_to, name=f"relabel[{S.name}]")
    ok, _ = is_iso(rho)
    if not ok:
        raise ValueError(f"relabelling {S.name} did not give an isomorphism")
    return rho


def shuffle_structure(S: _Structure, rho: SimplicialMap) -> _Structure:
    """Transport S along an isomorphism rho out of S.obj."""
    if rho.dom is not S.obj:
        raise ValueError(f"{rho.label()} does not start at {S.obj.name}")
    ok, inv = is_iso(rho)
    if not ok:
        raise ValueError(f"{rho.label()} is not an isomorphism")
    T = S.T
    new_obj = rho.cod
    probes = list(S.probes)
    name = f"{S.name}*{rho.label()}"
    if isinstance(S, CylinderStructure):
        alpha = compose_map(hom_action_post(S.X, rho, T), S.alpha)

        def phi_for(Y):
            return compose_map(S.comparison_unchecked(Y), hom_action_pre(rho, Y, T))

        out = CylinderStructure(S.X, S.K, new_obj, alpha, phi_for, probes, S.D, T, name=name)
    else:
        beta = compose_map(hom_action_pre(inv, S.X, T), S.beta)

        def psi_for(Y):
            return compose_map(S.comparison_unchecked(Y), hom_action_post(Y, inv, T))

        out = PathStructure(S.X, S.K, new_obj, beta, psi_for, probes, S.D, T, name=name)
    out.parent, out.rho = S, rho
    return out


def level_zero_preimage(f: SimplicialMap, target: SimplexRef) -> list[SimplexRef]:
    """All vertices of f's domain sent to ``target``."""
    return [s for s in f.dom.level(0) if f(s) == target]
