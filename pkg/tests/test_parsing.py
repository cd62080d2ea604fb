import pytest
from hypothesis import given, strategies as st

from linequiv.groups import Cyclic, Dihedral, Generators, Metacyclic, Product, construct, spec_to_text
from linequiv.parsing import ParseError, gset_expr_text, parse_group_spec, parse_gset_expr


def test_spec_examples():
    assert parse_group_spec("D(6)") == Dihedral(6)
    assert parse_group_spec("P(C(2),C(2))") == Product(Cyclic(2), Cyclic(2))
    spec = parse_group_spec("M(7,3,2)")
    assert spec == Metacyclic(7, 3, 2)
    assert construct(spec).order == 21


def test_generators_and_whitespace():
    spec = parse_group_spec("  gens( 4 ;(0, 1,2) ; (0,1)(2,3) )  ")
    assert spec == Generators(4, ((1, 2, 0, 3), (1, 0, 3, 2)))
    assert parse_group_spec("gens(3)") == Generators(3, ())
    assert parse_group_spec("gens(3; ())") == Generators(3, ((0, 1, 2),))


@pytest.mark.parametrize("text,offset", [
    ("", 0),
    ("D(6", 3),
    ("Q(3)", 0),
    ("M(7,3,3)", 0),
    ("P(C(2), M(6,2,5))", 8),
    ("gens(3; (0,5))", 8),
    ("gens(3; (0,1)(1,2))", 8),
    ("D(6) extra", 5),
    ("C(x)", 2),
    ("C(0)", 0),
])
def test_spec_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_group_spec(text)
    assert info.value.offset == offset
    assert f"(at byte {offset})" in str(info.value)


def test_offsets_are_in_bytes():
    with pytest.raises(ParseError) as info:
        parse_group_spec("P(C(2),é)")
    assert info.value.offset == len("P(C(2),".encode())
    with pytest.raises(ParseError) as info:
        parse_gset_expr("coset(1) + é")
    assert info.value.offset == len("coset(1) + ".encode())


def test_gset_expressions():
    assert parse_gset_expr("2*coset(0) + coset(9)") == {0: 2, 9: 1}
    assert parse_gset_expr("3*(coset(1) + 2*coset(0)) + coset(1)") == {0: 6, 1: 4}
    assert parse_gset_expr("0") == {}
    assert parse_gset_expr("0*coset(2) + coset(1)") == {1: 1}
    assert gset_expr_text({0: 2, 9: 1}) == "2*coset(0) + coset(9)"
    assert gset_expr_text({}) == "0"


@pytest.mark.parametrize("text", ["coset(", "coset(1) +", "2 coset(1)", "coset(-1)", "cos(1)", "(coset(1)"])
def test_gset_expression_errors(text):
    with pytest.raises(ParseError):
        parse_gset_expr(text)


def test_class_index_range_checked():
    with pytest.raises(ParseError) as info:
        parse_gset_expr("coset(3) + coset(10)", n_classes=10)
    assert info.value.offset == len("coset(3) + coset(")


leaf = st.one_of(
    st.integers(1, 12).map(Cyclic),
    st.integers(1, 8).map(Dihedral),
    st.sampled_from([Metacyclic(7, 3, 2), Metacyclic(5, 4, 2), Metacyclic(3, 2, 2)]),
    st.sampled_from([Generators(4, ((1, 2, 0, 3), (1, 0, 3, 2))), Generators(2, ())]),
)
specs = st.recursive(leaf, lambda inner: st.builds(Product, inner, inner), max_leaves=4)


@given(specs)
def test_spec_round_trip(spec):
    assert parse_group_spec(spec_to_text(spec)) == spec


@given(st.dictionaries(st.integers(0, 20), st.integers(1, 5), max_size=5))
def test_expression_round_trip(counts):
    assert parse_gset_expr(gset_expr_text(counts)) == dict(sorted(counts.items()))
