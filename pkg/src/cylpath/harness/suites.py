"""Verification suites over a fixture category.

Every check compares finite combinatorial data exactly.  Instances are
visited in fixture order and enumeration order, so reports are
reproducible line for line.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..enrichment.axioms import check_enrichment_axioms
from ..enrichment.complex import function_complex
from ..enrichment.ops import degenerate_to, hom_action_post, hom_action_pre, sharp, tilde, ub, untilde
from ..kernel.maps import SimplicialMap, compose_map, identity_map
from ..kernel.product import canonical_iso, product_map
from ..report import VerificationReport
from ..tensor.derived import (
    derived_cotensor_on_object,
    derived_cotensor_on_sset,
    derived_tensor_on_object,
    derived_tensor_on_sset,
    uniqueness_solve,
)
from ..tensor.structures import check_structure_def, relabel, shuffle_structure
from .fixtures import AXIOM_OBJECTS, AuditError, FixtureCategory, fixture_category


def _vacuous(F: FixtureCategory, report: VerificationReport) -> bool:
    if F.empty:
        report.warnings.append(f"fixture set {F.name!r} is empty; nothing to check")
        return True
    F.audit()
    return False


def _first_difference(f: SimplicialMap, g: SimplicialMap) -> str:
    for x in f.nondeg_domain():
        a, b = f.on(x), g.on(x)
        if a != b:
            return f"on {x!r}: {a} vs {b}"
    return "maps differ in shape"


def _same(report, anchor, inst, lhs: SimplicialMap, rhs: SimplicialMap) -> bool:
    ok = lhs == rhs
    return report.record(anchor, inst, ok, None if ok else _first_difference(lhs, rhs))


def _is_identity(u: SimplicialMap) -> bool:
    return u.dom is u.cod and u == identity_map(u.dom)


# -- definitions and uniqueness ----------------------------------------------


def verify_cylinders(F: FixtureCategory) -> VerificationReport:
    report = VerificationReport("cylinder")
    if not _vacuous(F, report):
        for X in F.objects:
            for K in F.parameters:
                report.extend(check_structure_def(F.cylinder(X, K)))
    return report


def verify_paths(F: FixtureCategory) -> VerificationReport:
    report = VerificationReport("path")
    if not _vacuous(F, report):
        for X in F.objects:
            for K in F.parameters:
                report.extend(check_structure_def(F.path(X, K)))
    return report


def shuffle_for(S) -> SimplicialMap:
    """The swap of X × X when the cylinder object is one, else a relabelling."""
    obj = S.obj
    if getattr(obj, "left", None) is not None and obj.left is obj.right and obj.left.top > 0:
        return canonical_iso("swap", obj.left, obj.right)
    return relabel(obj, "shuffled", obj.top if obj.complete else obj.trunc_dim)


def verify_uniqueness(F: FixtureCategory) -> VerificationReport:
    report = VerificationReport("thm1")
    if _vacuous(F, report):
        return report
    for X in F.objects:
        for K in F.parameters:
            for S in (F.cylinder(X, K), F.path(X, K)):
                rho = shuffle_for(S)
                moved = shuffle_structure(S, rho)
                report.extend(check_structure_def(moved))
                f, sub = uniqueness_solve(S.with_probes(S.obj), S)
                report.extend(sub)
                _same(report, "solves-to-identity", S.name, f, identity_map(S.obj))
                S.with_probes(moved.obj)
                moved.with_probes(S.obj)
                f, sub = uniqueness_solve(S, moved)
                report.extend(sub)
                _same(report, "recovers-shuffle", f"{S.name} by {rho.label()}", f, rho)
    return report


# -- functoriality -------------------------------------------------------------


def verify_functoriality(F: FixtureCategory) -> VerificationReport:
    """Identity and composition laws, derived maps against oracles, interchange."""
    report = VerificationReport("functoriality")
    if _vacuous(F, report):
        return report
    T = F.T
    cyl, path = F.cylinder, F.path

    for X in F.objects:
        for K in F.parameters:
            C, P = cyl(X, K), path(X, K)
            idK, idX = identity_map(K), identity_map(X)
            _same(report, "identity-law", f"{X.name}(x)id", derived_tensor_on_sset(C, C, idK), identity_map(C.obj))
            _same(report, "identity-law", f"id(x){K.name}", derived_tensor_on_object(C, C, idX), identity_map(C.obj))
            _same(report, "identity-law", f"{X.name}^id", derived_cotensor_on_sset(P, P, idK), identity_map(P.obj))
            _same(report, "identity-law", f"id^{K.name}", derived_cotensor_on_object(P, P, idX), identity_map(P.obj))

    # each derived map: defining square, unique solution, oracle
    for X in F.objects:
        for K, L, u in F.parameter_arrows():
            inst = f"X={X.name} u={u.label()}:{K.name}->{L.name}"
            t = derived_tensor_on_sset(cyl(X, K), cyl(X, L), u, report)
            _same(report, "oracle-product", inst, t, product_map(identity_map(X), u))
            c = derived_cotensor_on_sset(path(X, K), path(X, L), u, report)
            _same(report, "oracle-precomposition", inst, c, hom_action_pre(u, X, T))
    for K in F.parameters:
        for X, Y, f in F.object_arrows():
            inst = f"K={K.name} f={f.label()}:{X.name}->{Y.name}"
            t = derived_tensor_on_object(cyl(X, K), cyl(Y, K), f, report)
            _same(report, "oracle-product", inst, t, product_map(f, identity_map(K)))
            c = derived_cotensor_on_object(path(X, K), path(Y, K), f, report)
            _same(report, "oracle-postcomposition", inst, c, hom_action_post(K, f, T))

    # composition in the parameter slot
    for X in F.objects:
        for K, L, u in F.parameter_arrows():
            for M in F.parameters:
                for v in F.maps(L, M):
                    vu = compose_map(v, u)
                    inst = f"X={X.name} {K.name}->{L.name}->{M.name} u={u.label()} v={v.label()}"
                    whole = derived_tensor_on_sset(cyl(X, K), cyl(X, M), vu)
                    parts = compose_map(
                        derived_tensor_on_sset(cyl(X, L), cyl(X, M), v), derived_tensor_on_sset(cyl(X, K), cyl(X, L), u)
                    )
                    _same(report, "composition-law-tensor", inst, whole, parts)
                    whole = derived_cotensor_on_sset(path(X, K), path(X, M), vu)
                    parts = compose_map(
                        derived_cotensor_on_sset(path(X, K), path(X, L), u),
                        derived_cotensor_on_sset(path(X, L), path(X, M), v),
                    )
                    _same(report, "composition-law-cotensor", inst, whole, parts)

    # composition in the object slot
    for K in F.parameters:
        for X, Y, f in F.object_arrows():
            for Z in F.objects:
                for g in F.maps(Y, Z):
                    gf = compose_map(g, f)
                    inst = f"K={K.name} {X.name}->{Y.name}->{Z.name} f={f.label()} g={g.label()}"
                    whole = derived_tensor_on_object(cyl(X, K), cyl(Z, K), gf)
                    parts = compose_map(
                        derived_tensor_on_object(cyl(Y, K), cyl(Z, K), g), derived_tensor_on_object(cyl(X, K), cyl(Y, K), f)
                    )
                    _same(report, "composition-law-tensor", inst, whole, parts)
                    whole = derived_cotensor_on_object(path(X, K), path(Z, K), gf)
                    parts = compose_map(
                        derived_cotensor_on_object(path(Y, K), path(Z, K), g),
                        derived_cotensor_on_object(path(X, K), path(Y, K), f),
                    )
                    _same(report, "composition-law-cotensor", inst, whole, parts)

    # interchange
    for X, Y, f in F.object_arrows():
        for K, L, u in F.parameter_arrows():
            inst = f"f={f.label()}:{X.name}->{Y.name} u={u.label()}:{K.name}->{L.name}"
            one = compose_map(derived_tensor_on_sset(cyl(Y, K), cyl(Y, L), u), derived_tensor_on_object(cyl(X, K), cyl(Y, K), f))
            two = compose_map(derived_tensor_on_object(cyl(X, L), cyl(Y, L), f), derived_tensor_on_sset(cyl(X, K), cyl(X, L), u))
            _same(report, "interchange-tensor", inst, one, two)
            # f : X → Y read as the object map of the cotensor: obj_{X,L} → obj_{Y,K} both ways
            one = compose_map(
                derived_cotensor_on_object(path(X, K), path(Y, K), f), derived_cotensor_on_sset(path(X, K), path(X, L), u)
            )
            two = compose_map(
                derived_cotensor_on_sset(path(Y, K), path(Y, L), u), derived_cotensor_on_object(path(X, L), path(Y, L), f)
            )
            _same(report, "interchange-cotensor", inst, one, two)
    return report


# -- object squares ---------------------------------------------------------------


def verify_object_squares(F: FixtureCategory) -> VerificationReport:
    """Vertex identities for phi and psi, and the levelwise squares of f⊗K and u^K."""
    report = VerificationReport("object-squares")
    if _vacuous(F, report):
        return report
    T = F.T
    for X in F.objects:
        for K in F.parameters:
            C, P = F.cylinder(X, K), F.path(X, K)
            for Y in F.objects:
                phi, psi = C.phi(Y), P.psi(Y)
                bad = next(
                    (
                        f
                        for f in F.maps(C.obj, Y)
                        if phi(tilde(f, T)) != tilde(compose_map(hom_action_post(X, f, T), C.alpha), T)
                    ),
                    None,
                )
                report.record("phi-on-vertices", f"{C.name} Y={Y.name}", bad is None, f"fails for {bad!r}")
                bad = next(
                    (
                        f
                        for f in F.maps(Y, P.obj)
                        if psi(tilde(f, T)) != tilde(compose_map(hom_action_pre(f, X, T), P.beta), T)
                    ),
                    None,
                )
                report.record("psi-on-vertices", f"{P.name} Y={Y.name}", bad is None, f"fails for {bad!r}")

    for K in F.parameters:
        for X, Y, f in F.object_arrows():
            CX, CY = F.cylinder(X, K), F.cylinder(Y, K)
            g = derived_tensor_on_object(CX, CY, f)
            h_X_oX, h_oX_oY = function_complex(X, CX.obj, T), function_complex(CX.obj, CY.obj, T)
            h_XY, h_Y_oY = function_complex(X, Y, T), function_complex(Y, CY.obj, T)
            tg, tf = tilde(g, T), tilde(f, T)
            witness = None
            for n in range(F.D + 1):
                for k in K.level(n):
                    lhs = ub(CX.alpha(k), degenerate_to(h_oX_oY, tg, n), h_X_oX, h_oX_oY)
                    rhs = ub(degenerate_to(h_XY, tf, n), CY.alpha(k), h_XY, h_Y_oY)
                    if lhs != rhs:
                        witness = f"n={n} k={k}: {lhs} vs {rhs}"
                        break
                if witness:
                    break
            report.record("tensor-object-square", f"K={K.name} f={f.label()}:{X.name}->{Y.name}", witness is None, witness)

            PX, PY = F.path(X, K), F.path(Y, K)
            g = derived_cotensor_on_object(PX, PY, f)  # f^K : obj_X → obj_Y
            h_oX_oY, h_oY_Y = function_complex(PX.obj, PY.obj, T), function_complex(PY.obj, Y, T)
            h_oX_X = function_complex(PX.obj, X, T)
            tg = tilde(g, T)
            witness = None
            for n in range(F.D + 1):
                for k in K.level(n):
                    lhs = ub(degenerate_to(h_oX_oY, tg, n), PY.beta(k), h_oX_oY, h_oY_Y)
                    rhs = ub(PX.beta(k), degenerate_to(h_XY, tf, n), h_oX_X, h_XY)
                    if lhs != rhs:
                        witness = f"n={n} k={k}: {lhs} vs {rhs}"
                        break
                if witness:
                    break
            report.record("cotensor-object-square", f"K={K.name} u={f.label()}:{X.name}->{Y.name}", witness is None, witness)
    return report


# -- naturality ---------------------------------------------------------------------


def _natural(report, anchor, inst, lhs: SimplicialMap, rhs: SimplicialMap) -> None:
    """One naturality equation, checked directly and after currying both sides."""
    direct = lhs == rhs
    curried = sharp(lhs) == sharp(rhs)
    report.record(anchor, inst, direct, None if direct else _first_difference(lhs, rhs))
    report.record(anchor + "-curried", inst, curried, None if curried else _first_difference(sharp(lhs), sharp(rhs)))
    report.record("curried-route-agrees", f"{anchor} {inst}", direct == curried, f"direct {direct}, curried {curried}")


def _pick(arrows):
    """First non-identity arrow, else the first arrow."""
    arrows = list(arrows)
    for a in arrows:
        if not _is_identity(a[2]):
            return a
    return arrows[0] if arrows else None


def verify_naturality(F: FixtureCategory) -> VerificationReport:
    report = VerificationReport("naturality")
    if _vacuous(F, report):
        return report
    T = F.T
    cyl, path = F.cylinder, F.path
    hom = lambda A, B: function_complex(A, B, T)  # noqa: E731
    pre = lambda u, Y: hom_action_pre(u, Y, T)  # noqa: E731
    post = lambda X, v: hom_action_post(X, v, T)  # noqa: E731

    # cylinder comparison, parameter slot
    for X in F.objects:
        for Y in F.objects:
            for K, L, u in F.parameter_arrows():
                t = derived_tensor_on_sset(cyl(X, K), cyl(X, L), u)
                lhs = compose_map(cyl(X, K).phi(Y), pre(t, Y))
                rhs = compose_map(pre(u, hom(X, Y)), cyl(X, L).phi(Y))
                _natural(report, "phi-natural-parameter", f"X={X.name} Y={Y.name} u={u.label()}:{K.name}->{L.name}", lhs, rhs)
    # cylinder comparison, object slot
    for K in F.parameters:
        for W, X, u in F.object_arrows():
            t = derived_tensor_on_object(cyl(W, K), cyl(X, K), u)
            for Y in F.objects:
                lhs = compose_map(cyl(W, K).phi(Y), pre(t, Y))
                rhs = compose_map(post(K, pre(u, Y)), cyl(X, K).phi(Y))
                _natural(report, "phi-natural-object", f"K={K.name} Y={Y.name} u={u.label()}:{W.name}->{X.name}", lhs, rhs)
    # cylinder comparison, probe slot
    for X in F.objects:
        for K in F.parameters:
            C = cyl(X, K)
            for Y, Z, u in F.object_arrows():
                lhs = compose_map(C.phi(Z), post(C.obj, u))
                rhs = compose_map(post(K, post(X, u)), C.phi(Y))
                _natural(report, "phi-natural-probe", f"{C.name} u={u.label()}:{Y.name}->{Z.name}", lhs, rhs)
    # path comparison, parameter slot
    for X in F.objects:
        for Y in F.objects:
            for K, L, u in F.parameter_arrows():
                c = derived_cotensor_on_sset(path(X, K), path(X, L), u)
                lhs = compose_map(path(X, K).psi(Y), post(Y, c))
                rhs = compose_map(pre(u, hom(Y, X)), path(X, L).psi(Y))
                _natural(report, "psi-natural-parameter", f"X={X.name} Y={Y.name} u={u.label()}:{K.name}->{L.name}", lhs, rhs)
    # path comparison, probe slot
    for X in F.objects:
        for K in F.parameters:
            P = path(X, K)
            for Y, Z, u in F.object_arrows():
                lhs = compose_map(P.psi(Y), pre(u, P.obj))
                rhs = compose_map(post(K, pre(u, X)), P.psi(Z))
                _natural(report, "psi-natural-probe", f"{P.name} u={u.label()}:{Y.name}->{Z.name}", lhs, rhs)
    # path comparison, object slot
    for K in F.parameters:
        for W, X, u in F.object_arrows():
            c = derived_cotensor_on_object(path(W, K), path(X, K), u)
            for Y in F.objects:
                lhs = compose_map(path(X, K).psi(Y), post(Y, c))
                rhs = compose_map(post(K, post(Y, u)), path(W, K).psi(Y))
                _natural(report, "psi-natural-object", f"K={K.name} Y={Y.name} u={u.label()}:{W.name}->{X.name}", lhs, rhs)

    # one instance moving all three slots at once, per structure kind
    pu, pf, pg = _pick(F.parameter_arrows()), _pick(F.object_arrows()), _pick(F.object_arrows())
    if pu and pf:
        K, L, u = pu
        W, X, f = pf
        Y, Z, v = pg
        inst = f"u={u.label()}:{K.name}->{L.name} f={f.label()}:{W.name}->{X.name} v={v.label()}:{Y.name}->{Z.name}"
        lhs = compose_map(
            cyl(W, K).phi(Z),
            compose_map(
                pre(derived_tensor_on_object(cyl(W, K), cyl(X, K), f), Z),
                compose_map(pre(derived_tensor_on_sset(cyl(X, K), cyl(X, L), u), Z), post(cyl(X, L).obj, v)),
            ),
        )
        rhs = compose_map(
            pre(u, hom(W, Z)),
            compose_map(post(L, pre(f, Z)), compose_map(post(L, post(X, v)), cyl(X, L).phi(Y))),
        )
        _natural(report, "phi-natural-jointly", inst, lhs, rhs)

        # path: parameter u, probe v : Y → Z, object f : W → X
        lhs = compose_map(
            path(X, K).psi(Y),
            compose_map(
                pre(v, path(X, K).obj),
                compose_map(
                    post(Z, derived_cotensor_on_sset(path(X, K), path(X, L), u)),
                    post(Z, derived_cotensor_on_object(path(W, L), path(X, L), f)),
                ),
            ),
        )
        rhs = compose_map(
            pre(u, hom(Y, X)),
            compose_map(post(L, pre(v, X)), compose_map(post(L, post(Z, f)), path(W, L).psi(Z))),
        )
        _natural(report, "psi-natural-jointly", inst, lhs, rhs)
    return report


# -- adjunctions ---------------------------------------------------------------------


class _VertexBijection:
    """A comparison map on vertices, read as a bijection of ordinary hom-sets."""

    def __init__(self, comparison: SimplicialMap):
        self.comparison = comparison
        self.back = {comparison(s): s for s in comparison.dom.level(0)}

    def forward(self, f: SimplicialMap) -> SimplicialMap:
        """A map out of (or into) the structure object ↦ a map K → hom."""
        return untilde(self.comparison(tilde(f, self.comparison.dom.trunc_dim)), self.comparison.cod)

    def backward(self, g: SimplicialMap) -> SimplicialMap:
        return untilde(self.back[tilde(g, self.comparison.cod.trunc_dim)], self.comparison.dom)


def _all_equal(pairs) -> str | None:
    for i, (a, b) in enumerate(pairs):
        if a != b:
            return f"instance {i}: {_first_difference(a, b)}"
    return None


def verify_adjunctions(F: FixtureCategory) -> VerificationReport:
    report = VerificationReport("adjunctions")
    if _vacuous(F, report):
        return report
    T = F.T
    hom = lambda A, B: function_complex(A, B, T)  # noqa: E731
    cyl, path = F.cylinder, F.path

    def theta(X, K, Y):
        return _VertexBijection(cyl(X, K).phi(Y))

    def psi(X, K, Y):
        return _VertexBijection(path(X, K).psi(Y))

    for X in F.objects:
        for K in F.parameters:
            for Y in F.objects:
                inst = f"X={X.name} K={K.name} Y={Y.name}"
                # maps out of the cylinder object ↔ maps K → hom(X, Y)
                B = theta(X, K, Y)
                curried, uncurried = F.maps(K, hom(X, Y)), F.maps(cyl(X, K).obj, Y)
                report.record("tensor-adjunction-count", inst, len(curried) == len(uncurried), f"{len(curried)} vs {len(uncurried)}")
                w = _all_equal([(B.forward(B.backward(g)), g) for g in curried] + [(B.backward(B.forward(f)), f) for f in uncurried])
                report.record("tensor-adjunction-roundtrip", inst, w is None, w)

                # maps into the path object of X ↔ maps K → hom(Y, X)
                B = psi(X, K, Y)
                curried, uncurried = F.maps(K, hom(Y, X)), F.maps(Y, path(X, K).obj)
                report.record("cotensor-adjunction-count", inst, len(curried) == len(uncurried), f"{len(curried)} vs {len(uncurried)}")
                w = _all_equal([(B.forward(B.backward(g)), g) for g in curried] + [(B.backward(B.forward(f)), f) for f in uncurried])
                report.record("cotensor-adjunction-roundtrip", inst, w is None, w)

                # maps out of X ⊗ K into Y ↔ maps X into the path object of Y
                A, P = theta(X, K, Y), psi(Y, K, X)
                left, right = F.maps(cyl(X, K).obj, Y), F.maps(X, path(Y, K).obj)
                there = lambda f: P.backward(A.forward(f))  # noqa: E731
                back = lambda g: A.backward(P.forward(g))  # noqa: E731
                report.record("mixed-adjunction-count", inst, len(left) == len(right), f"{len(left)} vs {len(right)}")
                w = _all_equal([(back(there(f)), f) for f in left] + [(there(back(g)), g) for g in right])
                report.record("mixed-adjunction-roundtrip", inst, w is None, w)

    # naturality of the two vertex bijections in each variable
    for X in F.objects:
        for K in F.parameters:
            for Y, Z, v in F.object_arrows():
                inst = f"X={X.name} K={K.name} v={v.label()}:{Y.name}->{Z.name}"
                BY, BZ = theta(X, K, Y), theta(X, K, Z)
                w = _all_equal(
                    (BZ.backward(compose_map(hom_action_post(X, v, T), g)), compose_map(v, BY.backward(g)))
                    for g in F.maps(K, hom(X, Y))
                )
                report.record("tensor-adjunction-natural-target", inst, w is None, w)
                PY, PZ = psi(X, K, Y), psi(X, K, Z)
                w = _all_equal(
                    (PY.backward(compose_map(hom_action_pre(v, X, T), g)), compose_map(PZ.backward(g), v))
                    for g in F.maps(K, hom(Z, X))
                )
                report.record("cotensor-adjunction-natural-source", inst, w is None, w)
    for Y in F.objects:
        for K in F.parameters:
            for W, X, f in F.object_arrows():
                inst = f"Y={Y.name} K={K.name} f={f.label()}:{W.name}->{X.name}"
                tf = derived_tensor_on_object(cyl(W, K), cyl(X, K), f)
                BW, BX = theta(W, K, Y), theta(X, K, Y)
                w = _all_equal(
                    (BW.backward(compose_map(hom_action_pre(f, Y, T), g)), compose_map(BX.backward(g), tf))
                    for g in F.maps(K, hom(X, Y))
                )
                report.record("tensor-adjunction-natural-object", inst, w is None, w)
                pf = derived_cotensor_on_object(path(W, K), path(X, K), f)
                PW, PX = psi(W, K, Y), psi(X, K, Y)
                w = _all_equal(
                    (PX.backward(compose_map(hom_action_post(Y, f, T), g)), compose_map(pf, PW.backward(g)))
                    for g in F.maps(K, hom(Y, W))
                )
                report.record("cotensor-adjunction-natural-object", inst, w is None, w)
    for X in F.objects:
        for Y in F.objects:
            for K, L, u in F.parameter_arrows():
                inst = f"X={X.name} Y={Y.name} u={u.label()}:{K.name}->{L.name}"
                tu = derived_tensor_on_sset(cyl(X, K), cyl(X, L), u)
                BK, BL = theta(X, K, Y), theta(X, L, Y)
                w = _all_equal(
                    (BK.backward(compose_map(g, u)), compose_map(BL.backward(g), tu)) for g in F.maps(L, hom(X, Y))
                )
                report.record("tensor-adjunction-natural-parameter", inst, w is None, w)
                cu = derived_cotensor_on_sset(path(X, K), path(X, L), u)
                PK, PL = psi(X, K, Y), psi(X, L, Y)
                w = _all_equal(
                    (PK.backward(compose_map(g, u)), compose_map(cu, PL.backward(g))) for g in F.maps(L, hom(Y, X))
                )
                report.record("cotensor-adjunction-natural-parameter", inst, w is None, w)
    return report


# -- orchestration ---------------------------------------------------------------------------

SUITES = ("axioms", "cylinder", "path", "thm1", "thm2", "thm3")


@dataclass
class SuiteConfig:
    suites: list[str] = field(default_factory=lambda: list(SUITES))
    fixtures: str = "default"
    D: int = 2


def verify_axioms(objects, D: int, max_truncation: int) -> VerificationReport:
    if not objects:
        report = VerificationReport("axioms")
        report.warnings.append("no objects; nothing to check")
        return report
    need = D + max(X.top if X.complete else X.trunc_dim for X in objects)
    if need > max_truncation:
        raise AuditError(
            f"level {D} needs products up to dimension {need}, above the cap of {max_truncation}; "
            f"required level D <= {max_truncation - (need - D)}",
            required=need,
        )
    return check_enrichment_axioms(objects, D)


def run_suite(config: SuiteConfig) -> VerificationReport:
    """Run the requested suites in dependency order and merge their reports."""
    unknown = [s for s in config.suites if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    F = fixture_category(config.fixtures, config.D)
    report = VerificationReport("+".join(s for s in SUITES if s in config.suites))
    if F.empty:
        report.warnings.append(f"fixture set {config.fixtures!r} is empty; nothing to check")
        return report
    for name in SUITES:
        if name not in config.suites:
            continue
        if name == "axioms":
            if config.fixtures == "default":
                objects = fixture_category(",".join(AXIOM_OBJECTS), config.D).objects
            else:
                objects = F.objects
            report.extend(verify_axioms(objects, config.D, F.max_truncation))
        elif name == "cylinder":
            report.extend(verify_cylinders(F))
        elif name == "path":
            report.extend(verify_paths(F))
        elif name == "thm1":
            report.extend(verify_uniqueness(F))
        elif name == "thm2":
            report.extend(verify_functoriality(F))
            report.extend(verify_object_squares(F))
        elif name == "thm3":
            report.extend(verify_naturality(F))
            report.extend(verify_adjunctions(F))
    return report
