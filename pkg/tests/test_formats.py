import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylpath import data_path
from cylpath.formats import DocumentError, parse_map, parse_sset, print_map, print_sset
from cylpath.kernel import canonical_iso, identity_map, standard_simplex, times
from cylpath.kernel.validate import validate_map
from cylpath.kernel.zoo import sub_simplex


def shipped(name):
    return data_path(name).read_text()


def test_shipped_interval_document():
    X = parse_sset(shipped("delta1.sset"))
    assert X.level_sizes(2) == [2, 3, 4]
    assert print_sset(X) == shipped("delta1.sset")


def test_shipped_swap_map():
    square = parse_sset(shipped("square.sset"))
    f = parse_map(shipped("swap.smap"), {"square": square})
    assert not validate_map(f).failures
    assert print_map(f, "square", "square") == shipped("swap.smap")
    D1 = standard_simplex(1)
    assert square.level_sizes(3) == times(D1, D1).level_sizes(3)


def test_header_only_document_is_empty():
    X = parse_sset("sset nothing trunc none\n")
    assert X.level_sizes(2) == [0, 0, 0]


def test_dangling_face_names_the_id():
    text = "sset bad trunc none\nsimplex a 0\nsimplex e 1\nface e 0 a 0\nface e 1 ghost 0\n"
    with pytest.raises(DocumentError) as info:
        parse_sset(text)
    assert "ghost" in str(info.value)
    assert (info.value.line, info.value.column) == (5, 10)


@pytest.mark.parametrize(
    "body, fragment",
    [
        ("simplex a 0\nsimplex a 0\n", "duplicate"),
        ("simplex a 0\nsimplex e 1\nface e 0 a 0,1\nface e 1 a 0\n", "must be a 0-simplex"),
        ("simplex a 0\nsimplex e 1\nface e 0 a 1\nface e 1 a 0\n", "not a surjection"),
        ("simplex a 0\nsimplex e 1\nface e 0 a 0\n", "lacks face 1"),
        ("simplex a x\n", "non-negative integer"),
        ("vertex a 0\n", "unknown declaration"),
        ("simplex a 0\nsimplex e 1\nface e 2 a 0\nface e 0 a 0\nface e 1 a 0\n", "no face 2"),
    ],
)
def test_malformed_documents_are_rejected(body, fragment):
    with pytest.raises(DocumentError, match=fragment):
        parse_sset("sset t trunc none\n" + body)


def test_simplicial_identity_violation_is_rejected():
    X = standard_simplex(2)
    lines = print_sset(X).splitlines()
    # swap the targets of d0 and d2 of the triangle
    i0 = lines.index("face s012 0 s12 0,1")
    i2 = lines.index("face s012 2 s01 0,1")
    lines[i0], lines[i2] = "face s012 0 s01 0,1", "face s012 2 s12 0,1"
    with pytest.raises(DocumentError, match="simplicial-identity"):
        parse_sset("\n".join(lines) + "\n")


def test_identity_document_parses_to_the_identity():
    D1 = standard_simplex(1)
    text = "smap id d d\nsend s0 s0 0\nsend s1 s1 0\nsend s01 s01 0,1\n"
    assert parse_map(text, {"d": D1}) == identity_map(D1)


def test_face_incompatible_map_is_rejected_with_witness():
    D1 = standard_simplex(1)
    text = "smap bad d d\nsend s0 s0 0\nsend s1 s0 0\nsend s01 s01 0,1\n"
    with pytest.raises(DocumentError, match="d_0"):
        parse_map(text, {"d": D1})


def test_map_with_unknown_codomain_is_rejected():
    with pytest.raises(DocumentError, match="unknown simplicial set"):
        parse_map("smap f a b\n", {"a": standard_simplex(0)})


def test_product_and_swap_round_trip():
    D1 = standard_simplex(1)
    swap = canonical_iso("swap", D1, D1)
    square = parse_sset(print_sset(times(D1, D1)))
    text = print_map(swap, "sq", "sq")
    again = parse_map(text, {"sq": square})
    assert print_map(again, "sq", "sq") == text


@st.composite
def subcomplexes(draw):
    n = draw(st.integers(0, 3))
    gens = draw(st.lists(st.sets(st.integers(0, n), min_size=1), min_size=1, max_size=4))
    return sub_simplex("sub", n, [tuple(sorted(g)) for g in gens])


@settings(max_examples=40, deadline=None)
@given(subcomplexes())
def test_print_parse_print_is_stable(X):
    text = print_sset(X)
    Y = parse_sset(text)
    assert print_sset(Y) == text
    assert Y.level_sizes(3) == X.level_sizes(3)
