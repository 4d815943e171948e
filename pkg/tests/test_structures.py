import pytest

from cylpath.enrichment.complex import function_complex
from cylpath.kernel import canonical_iso, identity_map, is_iso, product, standard_simplex, times
from cylpath.tensor.structures import (
    MissingProbe,
    canonical_cylinder,
    canonical_path,
    check_structure_def,
    context_truncation,
    relabel,
    shuffle_structure,
    with_constant_alpha,
)

D0, D1 = standard_simplex(0), standard_simplex(1)
PAIRS = [(X, K) for X in (D0, D1) for K in (D0, D1)]
ids = [f"X={X.name},K={K.name}" for X, K in PAIRS]


def test_truncation_budget():
    assert context_truncation(2, [D0, D1], [D0, D1]) == 4
    assert context_truncation(0, [D0], [D0]) == 0


@pytest.mark.parametrize("X, K", PAIRS, ids=ids)
@pytest.mark.parametrize("build", [canonical_cylinder, canonical_path], ids=["cylinder", "path"])
def test_canonical_structures_satisfy_their_definition(build, X, K):
    S = build(X, K, [D0, D1], 2)
    report = check_structure_def(S)
    assert not report.failures
    assert report.counts()["structure-square"] == (2, 0)
    assert report.counts()["comparison-bijective"] == (2, 0)


def test_cylinder_over_a_point_is_the_object():
    S = canonical_cylinder(D1, D0, [D1], 2)
    assert S.obj is canonical_iso("unit_r", D1).dom
    assert S.obj.level_sizes(3) == D1.level_sizes(3)


def test_path_object_of_interval_over_interval_has_triangle_levels():
    S = canonical_path(D1, D1, [D0], 2)
    assert S.obj.level_sizes(2) == standard_simplex(2).level_sizes(2)


def test_path_object_into_a_point_has_one_simplex_per_level():
    S = canonical_path(D0, D1, [D0], 2)
    assert S.obj.level_sizes(S.T) == [1] * (S.T + 1)


def test_constant_alpha_is_caught_with_a_witness():
    S = with_constant_alpha(canonical_cylinder(D1, D1, [D1], 2))
    report = check_structure_def(S)
    bad = [c for c in report.failures if c.anchor == "structure-square"]
    assert bad and "composite" in bad[0].witness


def test_empty_probe_set_passes_vacuously_with_a_warning():
    S = canonical_cylinder(D1, D1, [], 2)
    report = check_structure_def(S)
    assert report.passed and not report.checks and report.warnings


def test_comparison_outside_the_probes_is_refused():
    S = canonical_cylinder(D1, D1, [D0], 1)
    with pytest.raises(MissingProbe):
        S.phi(D1)


def test_shuffle_by_swap_gives_a_valid_structure():
    S = canonical_cylinder(D1, D1, [D0, D1], 2)
    moved = shuffle_structure(S, canonical_iso("swap", D1, D1))
    assert not check_structure_def(moved).failures


def test_shuffle_by_identity_keeps_the_fields():
    S = canonical_cylinder(D1, D1, [D0, D1], 1)
    same = shuffle_structure(S, identity_map(S.obj))
    assert same.alpha == S.alpha
    assert same.phi(D1) == S.phi(D1)


def test_shuffle_there_and_back_restores_the_fields():
    S = canonical_path(D1, D1, [D0, D1], 1)
    rho = relabel(S.obj, "r", S.T)
    there = shuffle_structure(S, rho)
    back = shuffle_structure(there, rho.inverse)
    assert back.obj is S.obj
    assert back.beta == S.beta
    for Y in (D0, D1):
        assert back.psi(Y) == S.psi(Y)


def test_shuffle_rejects_non_isomorphisms():
    S = canonical_cylinder(D1, D1, [D0], 1)
    _, first, _ = product(D1, D1)
    assert first.dom is S.obj
    with pytest.raises(ValueError, match="not an isomorphism"):
        shuffle_structure(S, first)
    with pytest.raises(ValueError, match="does not start"):
        shuffle_structure(S, canonical_iso("unit_r", D1))


def test_relabel_is_an_isomorphism():
    P = times(D1, D1)
    rho = relabel(P, "t", P.top)
    assert is_iso(rho)[0]
    h = function_complex(D1, D1, 3)
    assert is_iso(relabel(h, "t", 3))[0]
