import json

import pytest
from gmpy2 import mpq

from skewverify.algebra import check_relations
from skewverify.constants import D_ENTRIES_TABULATED, LAMBDA_COORDS
from skewverify.field_tower import L_ONE
from skewverify.overrides import (
    ConstantsOverride,
    NonRationalEntryError,
    OverrideParseError,
    OverrideShapeError,
    load_constants_override,
    parse_constants_override,
)

IDENTITY_LAMBDA = [[1, 0, 0], [0, 0, 0], [0, 0, 0]]


def test_default_is_default():
    o = ConstantsOverride()
    assert o.is_default
    assert all(check_relations(o.outer_aut(), o.witness()).values())


def test_lambda_only_override():
    o = parse_constants_override({"lambda": IDENTITY_LAMBDA})
    assert not o.is_default and o.c_entries is None and o.d_entries is None
    assert o.outer_aut().lam == L_ONE


def test_rational_strings_accepted():
    lam = [["1/2", 0, "-3/4"], [0, 0, 0], [0, 0, 0]]
    o = parse_constants_override({"lambda": lam})
    assert o.lam[0] == (mpq(1, 2), mpq(0), mpq(-3, 4))


def test_full_round_trip_of_builtins():
    o = parse_constants_override({"lambda": [list(t) for t in LAMBDA_COORDS]})
    assert o.outer_aut().lam == ConstantsOverride().outer_aut().lam


def test_c_shape_error():
    with pytest.raises(OverrideShapeError):
        parse_constants_override({"c": {"denominator": 1, "entries": [[[0, 0, 0]] * 3] * 2}})


def test_zero_denominator_entry():
    lam = [["1/0", 0, 0], [0, 0, 0], [0, 0, 0]]
    with pytest.raises(NonRationalEntryError):
        parse_constants_override({"lambda": lam})


def test_zero_c_denominator():
    with pytest.raises(NonRationalEntryError):
        parse_constants_override({"c": {"denominator": 0, "entries": [[[0, 0, 0]] * 3] * 3}})


@pytest.mark.parametrize("bad", [1.5, True, None, "0.5", [1]])
def test_non_rational_values_rejected(bad):
    with pytest.raises(NonRationalEntryError):
        parse_constants_override({"lambda": [[bad, 0, 0], [0, 0, 0], [0, 0, 0]]})


def test_unknown_key_and_non_object():
    with pytest.raises(OverrideShapeError):
        parse_constants_override({"mu": 1})
    with pytest.raises(OverrideShapeError):
        parse_constants_override([1, 2, 3])


def test_invalid_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json", encoding="utf-8")
    with pytest.raises(OverrideParseError):
        load_constants_override(p)


def test_load_tabulated_d_file(tmp_path):
    p = tmp_path / "d.json"
    p.write_text(json.dumps({"d": [[list(e) for e in row] for row in D_ENTRIES_TABULATED]}), encoding="utf-8")
    o = load_constants_override(p)
    assert o.source == str(p)
    rel = check_relations(o.outer_aut(), o.witness())
    assert not rel["R6"]
