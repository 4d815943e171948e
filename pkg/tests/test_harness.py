import pytest

from cylpath.enrichment.complex import function_complex
from cylpath.enrichment.ops import hom_action_pre
from cylpath.harness import suites
from cylpath.harness.fixtures import AuditError, FixtureCategory, fixture_category
from cylpath.kernel import FiniteSimplicialSet, compose_map, enumerate_maps, standard_simplex, times
from cylpath.report import VerificationReport
from cylpath.tensor.derived import derived_tensor_on_sset

from oracles import chain, count_order_preserving, poset_product

D0, D1 = standard_simplex(0), standard_simplex(1)
THEOREM_SUITES = [
    suites.verify_uniqueness,
    suites.verify_functoriality,
    suites.verify_object_squares,
    suites.verify_naturality,
    suites.verify_adjunctions,
]


@pytest.mark.parametrize("suite", THEOREM_SUITES, ids=lambda s: s.__name__)
def test_single_point_fixture_passes(suite):
    report = suite(fixture_category("single"))
    assert report.checks and report.passed


@pytest.mark.parametrize("suite", THEOREM_SUITES + [suites.verify_cylinders, suites.verify_paths], ids=lambda s: s.__name__)
def test_empty_fixtures_pass_vacuously_with_a_warning(suite):
    report = suite(fixture_category("empty"))
    assert report.passed and not report.checks and report.warnings


def test_run_suite_on_empty_fixtures_warns():
    report = suites.run_suite(suites.SuiteConfig(fixtures="empty"))
    assert report.passed and report.warnings


def test_audit_names_the_required_level():
    F = fixture_category("default", 99)
    with pytest.raises(AuditError) as info:
        F.audit()
    assert info.value.required == 101
    assert "required level D <= 4" in str(info.value)


def test_audit_rejects_shallow_truncated_fixtures():
    shallow = FiniteSimplicialSet("shallow", {0: ["a"]}, {}, trunc_dim=1)
    with pytest.raises(AuditError, match="shallow"):
        FixtureCategory([shallow], [D0], 1).audit()


def test_unknown_suite_is_an_error():
    with pytest.raises(ValueError, match="unknown suite"):
        suites.run_suite(suites.SuiteConfig(suites=["thm9"]))


def test_more_fixtures_keep_the_verdicts_of_shared_instances():
    # the joint instance is chosen per fixture set, so only the per-slot lines are comparable
    def lines(name):
        text = suites.verify_naturality(fixture_category(name)).to_machine()
        return {line for line in text.splitlines() if "jointly" not in line}

    assert lines("single") <= lines("points")


def test_naturality_covers_every_slot_and_a_joint_instance(default_fixtures):
    report = suites.verify_naturality(default_fixtures)
    assert report.passed
    for side in ("phi", "psi"):
        for slot in ("parameter", "object", "probe", "jointly"):
            ok, bad = report.counts()[f"{side}-natural-{slot}"]
            assert ok > 0 and bad == 0
            assert report.counts()[f"{side}-natural-{slot}-curried"] == (ok, 0)


def test_a_false_naturality_square_fails_on_both_routes(default_fixtures):
    cyl = default_fixtures.cylinder
    u, other = enumerate_maps(D0, D1)
    t = derived_tensor_on_sset(cyl(D1, D0), cyl(D1, D1), u)
    lhs = compose_map(cyl(D1, D0).phi(D1), hom_action_pre(t, D1, 4))
    wrong = compose_map(hom_action_pre(other, function_complex(D1, D1, 4), 4), cyl(D1, D1).phi(D1))
    report = VerificationReport("probe")
    suites._natural(report, "phi-natural-parameter", "wrong vertex", lhs, wrong)
    assert report.counts() == {
        "phi-natural-parameter": (0, 1),
        "phi-natural-parameter-curried": (0, 1),
        "curried-route-agrees": (1, 0),
    }


def test_adjunction_counts_match_the_poset_oracle(default_fixtures):
    F = default_fixtures
    expected = count_order_preserving(poset_product(chain(1), chain(1)), chain(1))
    assert len(F.maps(F.cylinder(D1, D1).obj, D1)) == expected
    assert len(F.maps(D1, function_complex(D1, D1, F.T))) == expected
    report = suites.verify_adjunctions(F)
    assert report.passed
    assert report.counts()["mixed-adjunction-roundtrip"] == (8, 0)


def test_functoriality_checks_oracles_and_interchange(default_fixtures):
    report = suites.verify_functoriality(default_fixtures)
    assert report.passed
    for anchor in ("oracle-product", "oracle-precomposition", "oracle-postcomposition", "interchange-tensor", "interchange-cotensor"):
        assert report.counts()[anchor][0] > 0


def test_object_squares_hold(default_fixtures):
    report = suites.verify_object_squares(default_fixtures)
    assert report.passed
    assert report.counts()["tensor-object-square"][0] == report.counts()["cotensor-object-square"][0] > 0


def test_cylinder_object_is_the_product(default_fixtures):
    assert default_fixtures.cylinder(D1, D1).obj is times(D1, D1)
