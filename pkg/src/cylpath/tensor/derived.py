"""Morphisms induced between cylinder and path objects, and the comparison
isomorphism between two structures on the same (X, K).

Each morphism is solved the same way: pull a known 0-simplex back along
the comparison map at level 0, then read the vertex as a map.  An optional
report additionally certifies the answer by brute force over every map
between the two objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..enrichment.ops import hom_action_post, hom_action_pre, tilde, untilde
from ..kernel.enumerate import enumerate_maps
from ..kernel.maps import SimplicialMap, compose_map, is_iso
from ..report import VerificationReport
from .structures import CylinderStructure, MissingProbe, PathStructure, level_zero_preimage


class SolverError(RuntimeError):
    """The defining condition of a derived morphism has no unique solution."""


@dataclass
class Problem:
    """Find the map ``source → target`` whose tilde the comparison sends to ``goal``."""

    label: str
    source: object
    target: object
    comparison: SimplicialMap
    goal: SimplicialMap  # K → hom, the structure-map side of the condition
    condition: Callable[[SimplicialMap], SimplicialMap]  # candidate ↦ the other side
    T: int

    def solve(self) -> SimplicialMap:
        want = tilde(self.goal, self.T)
        hits = level_zero_preimage(self.comparison, want)
        if len(hits) != 1:
            raise SolverError(f"{self.label}: {len(hits)} vertices map to the goal")
        f = untilde(hits[0], self.comparison.dom)
        f.name = self.label
        return f

    def certify(self, f: SimplicialMap, report: VerificationReport, condition_anchor: str) -> None:
        """Square holds for f; exactly one map satisfies it; the vertex form agrees on every candidate."""
        report.record("defining-square", self.label, self.condition(f) == self.goal, "square fails for the solved map")
        want = tilde(self.goal, self.T)
        solutions, disagreements = [], []
        for g in enumerate_maps(self.source, self.target):
            square = self.condition(g) == self.goal
            vertex = self.comparison(tilde(g, self.T)) == want
            if square:
                solutions.append(g)
            if square != vertex:
                disagreements.append(g)
        report.record(
            "unique-solution",
            self.label,
            len(solutions) == 1 and solutions[0] == f,
            f"{len(solutions)} maps satisfy the square",
        )
        report.record(
            condition_anchor,
            self.label,
            not disagreements,
            f"conditions disagree on {disagreements[0].key() if disagreements else None}",
        )


def _same_T(*structures) -> int:
    Ts = {S.T for S in structures}
    if len(Ts) != 1:
        raise ValueError(f"structures use different truncations {sorted(Ts)}")
    return Ts.pop()


_memo: dict = {}


def _run(key, problem_factory, report, condition_anchor):
    got = _memo.get(key)
    if got is None:
        problem = problem_factory()
        got = _memo[key] = (problem, problem.solve())
    problem, f = got
    if report is not None:
        problem.certify(f, report, condition_anchor)
    return f


def derived_tensor_on_sset(CK: CylinderStructure, CL: CylinderStructure, u: SimplicialMap, report=None) -> SimplicialMap:
    """X ⊗ u : obj_K → obj_L, characterised by post(X, f) ∘ alpha_K = alpha_L ∘ u."""
    if CK.X is not CL.X or u.dom is not CK.K or u.cod is not CL.K:
        raise ValueError("derived_tensor_on_sset needs a shared X and u : K → L")
    T = _same_T(CK, CL)
    X = CK.X

    def make():
        return Problem(
            label=f"{X.name}(x){u.label()}",
            source=CK.obj,
            target=CL.obj,
            comparison=CK.comparison_unchecked(CL.obj),
            goal=compose_map(CL.alpha, u),
            condition=lambda f: compose_map(hom_action_post(X, f, T), CK.alpha),
            T=T,
        )

    return _run(("tK", id(CK), id(CL), id(u.dom), id(u.cod), u.key()), make, report, "vertex-condition-equivalent")


def derived_tensor_on_object(CX: CylinderStructure, CY: CylinderStructure, f: SimplicialMap, report=None) -> SimplicialMap:
    """f ⊗ K : obj_X → obj_Y, characterised by post(X, g) ∘ alpha_X = pre(f, obj_Y) ∘ alpha_Y."""
    if CX.K is not CY.K or f.dom is not CX.X or f.cod is not CY.X:
        raise ValueError("derived_tensor_on_object needs a shared K and f : X → Y")
    T = _same_T(CX, CY)

    def make():
        return Problem(
            label=f"{f.label()}(x){CX.K.name}",
            source=CX.obj,
            target=CY.obj,
            comparison=CX.comparison_unchecked(CY.obj),
            goal=compose_map(hom_action_pre(f, CY.obj, T), CY.alpha),
            condition=lambda g: compose_map(hom_action_post(CX.X, g, T), CX.alpha),
            T=T,
        )

    return _run(("tX", id(CX), id(CY), id(f.dom), id(f.cod), f.key()), make, report, "vertex-condition-equivalent")


def derived_cotensor_on_sset(PK: PathStructure, PL: PathStructure, u: SimplicialMap, report=None) -> SimplicialMap:
    """X^u : obj_L → obj_K, characterised by pre(f, X) ∘ beta_K = beta_L ∘ u."""
    if PK.X is not PL.X or u.dom is not PK.K or u.cod is not PL.K:
        raise ValueError("derived_cotensor_on_sset needs a shared X and u : K → L")
    T = _same_T(PK, PL)
    X = PK.X

    def make():
        return Problem(
            label=f"{X.name}^{u.label()}",
            source=PL.obj,
            target=PK.obj,
            comparison=PK.comparison_unchecked(PL.obj),
            goal=compose_map(PL.beta, u),
            condition=lambda f: compose_map(hom_action_pre(f, X, T), PK.beta),
            T=T,
        )

    return _run(("pK", id(PK), id(PL), id(u.dom), id(u.cod), u.key()), make, report, "vertex-condition-equivalent")


def derived_cotensor_on_object(PY: PathStructure, PX: PathStructure, u: SimplicialMap, report=None) -> SimplicialMap:
    """u^K : obj_Y → obj_X, characterised by pre(g, X) ∘ beta_X = post(obj_Y, u) ∘ beta_Y."""
    if PY.K is not PX.K or u.dom is not PY.X or u.cod is not PX.X:
        raise ValueError("derived_cotensor_on_object needs a shared K and u : Y → X")
    T = _same_T(PY, PX)

    def make():
        return Problem(
            label=f"{u.label()}^{PY.K.name}",
            source=PY.obj,
            target=PX.obj,
            comparison=PX.comparison_unchecked(PY.obj),
            goal=compose_map(hom_action_post(PY.obj, u, T), PY.beta),
            condition=lambda g: compose_map(hom_action_pre(g, PX.X, T), PX.beta),
            T=T,
        )

    return _run(("pX", id(PY), id(PX), id(u.dom), id(u.cod), u.key()), make, report, "vertex-condition-equivalent")


def uniqueness_solve(first, second) -> tuple[SimplicialMap, VerificationReport]:
    """The unique isomorphism f : obj1 → obj2 compatible with the structure maps.

    Cylinders: alpha2 = post(X, f) ∘ alpha1, solved through phi1 at obj2.
    Paths: beta1 = pre(f, X) ∘ beta2, solved through psi2 at obj1.
    """
    if type(first) is not type(second) or first.X is not second.X or first.K is not second.K:
        raise ValueError("uniqueness_solve needs two structures of one kind on the same (X, K)")
    T = _same_T(first, second)
    X = first.X
    if not first.has_probe(second.obj) or not second.has_probe(first.obj):
        missing = second.obj.name if not first.has_probe(second.obj) else first.obj.name
        raise MissingProbe(f"{missing} must be a probe of the other structure")
    if isinstance(first, CylinderStructure):
        problem = Problem(
            label=f"iso {first.name} -> {second.name}",
            source=first.obj,
            target=second.obj,
            comparison=first.comparison(second.obj),
            goal=second.alpha,
            condition=lambda f: compose_map(hom_action_post(X, f, T), first.alpha),
            T=T,
        )
    else:
        problem = Problem(
            label=f"iso {first.name} -> {second.name}",
            source=first.obj,
            target=second.obj,
            comparison=second.comparison(first.obj),
            goal=first.beta,
            condition=lambda f: compose_map(hom_action_pre(f, X, T), second.beta),
            T=T,
        )
    report = VerificationReport(f"uniqueness:{first.name}|{second.name}")
    f = problem.solve()
    problem.certify(f, report, "vertex-condition-equivalent")
    ok, _ = is_iso(f)
    report.record("is-isomorphism", problem.label, ok, "solved map is not bijective on every level")
    return f, report
