"""Finite fixture categories and the truncation audit that guards every suite."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..kernel import named
from ..kernel.enumerate import enumerate_maps
from ..kernel.maps import SimplicialMap
from ..kernel.sset import FiniteSimplicialSet
from ..tensor.structures import CylinderStructure, PathStructure, canonical_cylinder, canonical_path

MAX_TRUNCATION = 6


class AuditError(ValueError):
    """The fixtures cannot be checked at the requested level."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


def _dim(S: FiniteSimplicialSet) -> int:
    return S.top if S.complete else S.trunc_dim


@dataclass
class FixtureCategory:
    """Objects X, Y, ... and parameter sets K, L, ... checked up to level D.

    Every comparison map is materialised on the probe objects, which by
    default are the objects themselves.
    """

    objects: list[FiniteSimplicialSet]
    parameters: list[FiniteSimplicialSet]
    D: int = 2
    name: str = "custom"
    max_truncation: int = MAX_TRUNCATION
    _cyl: dict = field(default_factory=dict, repr=False)
    _path: dict = field(default_factory=dict, repr=False)
    _homs: dict = field(default_factory=dict, repr=False)

    @property
    def T(self) -> int:
        return self.D + max([0] + [_dim(K) for K in self.parameters]) + max([0] + [_dim(X) for X in self.objects])

    def audit(self) -> "FixtureCategory":
        """Raise AuditError unless every carrier the suites read can be built."""
        if self.D < 0:
            raise AuditError(f"level must be non-negative, got {self.D}")
        T = self.T
        if T > self.max_truncation:
            dk = max([0] + [_dim(K) for K in self.parameters])
            dx = max([0] + [_dim(X) for X in self.objects])
            best = self.max_truncation - dk - dx
            raise AuditError(
                f"level {self.D} needs function complexes truncated at {T} "
                f"(level {self.D} + parameter dimension {dk} + object dimension {dx}), "
                f"above the cap of {self.max_truncation}; required level D <= {best}",
                required=T,
            )
        for S in [*self.objects, *self.parameters]:
            if not S.complete and S.trunc_dim < T:
                raise AuditError(
                    f"fixture {S.name} is truncated at {S.trunc_dim} but the suites read it up to {T}",
                    required=T,
                )
        return self

    @property
    def empty(self) -> bool:
        return not self.objects or not self.parameters

    def cylinder(self, X, K) -> CylinderStructure:
        key = (id(X), id(K))
        if key not in self._cyl:
            self._cyl[key] = canonical_cylinder(X, K, list(self.objects), self.D, self.T)
        return self._cyl[key]

    def path(self, X, K) -> PathStructure:
        key = (id(X), id(K))
        if key not in self._path:
            self._path[key] = canonical_path(X, K, list(self.objects), self.D, self.T)
        return self._path[key]

    def maps(self, A, B) -> list[SimplicialMap]:
        key = (id(A), id(B))
        if key not in self._homs:
            self._homs[key] = enumerate_maps(A, B)
        return self._homs[key]

    def object_arrows(self):
        """Every map between fixture objects, as (source, target, map)."""
        for A in self.objects:
            for B in self.objects:
                for f in self.maps(A, B):
                    yield A, B, f

    def parameter_arrows(self):
        for A in self.parameters:
            for B in self.parameters:
                for u in self.maps(A, B):
                    yield A, B, u


FIXTURE_SETS = {
    "default": (["delta0", "delta1"], ["delta0", "delta1"]),
    "points": (["delta0", "two_points"], ["delta0", "two_points"]),
    "mixed": (["delta0", "delta1", "two_points"], ["delta0", "delta1"]),
    "single": (["delta0"], ["delta0"]),
    "empty": ([], []),
    "zoo": (
        ["delta0", "delta1", "delta2", "two_points", "boundary2", "horn1_2"],
        ["delta0", "delta1", "delta2", "two_points", "boundary2", "horn1_2"],
    ),
}

AXIOM_OBJECTS = ["delta0", "delta1", "delta2", "boundary2"]


def fixture_category(selection: str = "default", D: int = 2) -> FixtureCategory:
    """A named fixture set, or comma-separated built-in names used as both objects and parameters."""
    if selection in FIXTURE_SETS:
        objs, params = FIXTURE_SETS[selection]
    else:
        objs = params = [s.strip() for s in selection.split(",") if s.strip()]
    return FixtureCategory([named(o) for o in objs], [named(p) for p in params], D, name=selection)
