from fractions import Fraction
from random import Random

import pytest

from g2kit.forms import KForm
from g2kit.liealg import heisenberg_model
from g2kit.sampling import rand_mat, rand_vec
from g2kit.serialize import (
    algebra_from_json,
    algebra_to_json,
    canonical_json,
    endo_split_to_json,
    form_from_json,
    form_to_json,
    mat_from_json,
    mat_to_json,
    parse_rational,
    rational_str,
    vec_from_json,
    vec_to_json,
)
from g2kit.so7 import decompose_endo


def test_rational_str():
    assert rational_str(Fraction(3)) == "3"
    assert rational_str(Fraction(-1, 18)) == "-1/18"
    assert rational_str(Fraction(0)) == "0"


def test_parse_rational_strings_and_ints():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational(" 5/6 ") == Fraction(5, 6)
    assert parse_rational(12) == Fraction(12)


def test_parse_rational_float_is_exact_binary():
    assert parse_rational(0.5) == Fraction(1, 2)
    assert parse_rational(0.1) == Fraction(0.1)  # exact value of the binary float
    with pytest.raises(TypeError):
        parse_rational(None)
    with pytest.raises(TypeError):
        parse_rational(True)


def test_vec_mat_roundtrip():
    rng = Random(0)
    v = rand_vec(rng)
    assert vec_from_json(vec_to_json(v)) == v
    m = rand_mat(rng)
    assert mat_from_json(mat_to_json(m)) == m
    assert mat_from_json({"matrix": mat_to_json(m)}) == m
    with pytest.raises(ValueError):
        vec_from_json(["1", "2"])
    with pytest.raises(ValueError):
        mat_from_json([["1"] * 7] * 6)


def test_form_roundtrip(standard):
    a = standard.phi
    data = form_to_json(a)
    assert data["degree"] == 3
    assert all(t["indices"] == sorted(t["indices"]) for t in data["terms"])
    assert form_from_json(data) == a
    assert form_from_json({"degree": 2, "terms": []}) == KForm.zero(2)


def test_endo_split_schema(standard):
    rng = Random(1)
    split = decompose_endo(rand_mat(rng), standard)
    data = endo_split_to_json(split)
    assert set(data) == {"scalar", "sym0", "g2part", "vector", "part_norms_sq"}
    assert set(data["part_norms_sq"]) == {"scalar", "sym0", "g2", "vector"}


def test_algebra_roundtrip():
    mla, _, _ = heisenberg_model()
    data = algebra_to_json(mla)
    assert data["dim"] == 7
    assert {"i": 0, "j": 5, "coeffs": {"6": "1"}} in data["brackets"]
    assert algebra_from_json(data) == mla
    with pytest.raises(ValueError):
        algebra_from_json({"dim": 6, "brackets": []})


def test_canonical_json_is_deterministic():
    obj = {"b": [1, 2], "a": {"y": "1/2", "x": None}}
    assert canonical_json(obj) == canonical_json({"a": {"x": None, "y": "1/2"}, "b": [1, 2]})
    assert canonical_json(obj).endswith("\n")
