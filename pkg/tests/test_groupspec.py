import pytest
from hypothesis import given
from hypothesis import strategies as st

from hkcat.errors import BadParameter, ParseError, UnknownFamily
from hkcat.groupspec import FAMILIES, GroupSpec, parse_group_spec, resolve_group
from hkcat.permgroup import Permutation


def test_named_spec():
    spec = parse_group_spec("PGammaL2(8)")
    assert spec.is_named and spec.family == "PGammaL2" and spec.param == 8
    assert spec.degree == 9
    assert spec.resolve().order() == 1512


def test_explicit_spec():
    spec = parse_group_spec("gens:(0 1)(2 3),(0 2)")
    assert not spec.is_named
    assert spec.degree == 4
    assert spec.resolve().order() == 8


def test_whitespace_is_ignored():
    assert parse_group_spec("  PGL2 ( 5 ) ") == parse_group_spec("PGL2(5)")
    assert parse_group_spec("gens : (0 1) , (1 2)") == parse_group_spec("gens:(0 1),(1 2)")


def test_parse_error_offset():
    with pytest.raises(ParseError) as info:
        parse_group_spec("PGL2(six)")
    assert info.value.offset == 5
    assert "INT" in info.value.expected
    assert info.value.exit_code == 2


def test_parse_error_offset_counts_bytes():
    with pytest.raises(ParseError) as info:
        parse_group_spec("gens:(0 1) é")
    assert info.value.offset == 11


def test_names_are_case_sensitive():
    with pytest.raises(UnknownFamily):
        parse_group_spec("pgl2(5)")
    with pytest.raises(UnknownFamily):
        parse_group_spec("PSL2(7)")


@pytest.mark.parametrize("text", ["AGL1(6)", "PGL2(10)", "PGL2(1)", "PGammaL2(128)", "Sn(0)"])
def test_bad_parameters(text):
    with pytest.raises(BadParameter):
        parse_group_spec(text)


@pytest.mark.parametrize("text", ["", "Sn", "Sn(3", "Sn(3)x", "gens", "gens:", "gens:(0 1),", "(0 1)"])
def test_malformed(text):
    with pytest.raises(ParseError):
        parse_group_spec(text)


@pytest.mark.parametrize("text, degree", [
    ("Sn(7)", 7), ("An(9)", 9), ("Cn(4)", 4), ("Dn(5)", 5),
    ("PGL2(5)", 6), ("PGL2(8)", 9), ("PGammaL2(9)", 10), ("AGL1(5)", 5),
])
def test_named_degrees(text, degree):
    spec = parse_group_spec(text)
    assert spec.degree == degree
    assert spec.resolve().degree == degree


def test_resolved_group_keeps_label():
    assert resolve_group("An(6)").name == "An(6)"


named_specs = st.one_of(
    st.builds(GroupSpec, st.sampled_from(["Sn", "An", "Cn", "Dn"]), st.integers(1, 40)),
    st.builds(GroupSpec, st.sampled_from(["PGL2", "PGammaL2", "AGL1"]),
              st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64])),
)


@st.composite
def explicit_specs(draw):
    n = draw(st.integers(1, 9))
    gens = draw(st.lists(st.permutations(list(range(n))), min_size=1, max_size=3))
    return GroupSpec(generators=tuple(Permutation(tuple(g)) for g in gens))


@given(st.one_of(named_specs, explicit_specs()))
def test_round_trip(spec):
    assert parse_group_spec(str(spec)) == spec


def test_family_list():
    assert set(FAMILIES) == {"Sn", "An", "Cn", "Dn", "PGL2", "PGammaL2", "AGL1"}
