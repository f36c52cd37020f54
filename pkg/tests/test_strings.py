from collections import Counter

import pytest

from gentlehom.strings import (
    StringSum,
    StringWord,
    dim_vector,
    is_valid_string,
    projective_cover,
    pd_string,
    simple_string,
    string_of_injective,
    string_of_projective,
    socle,
    syzygy,
    top,
)

D, I = 1, -1


def test_validity(fx):
    T9 = fx["T9"]
    assert is_valid_string(T9, [("a", D), ("f", D)])
    assert not is_valid_string(T9, [("a", D), ("b", D)])
    assert not is_valid_string(T9, [("b", I), ("a", I)])
    assert not is_valid_string(fx["A2"], [("a", D), ("a", I)])
    assert not is_valid_string(T9, [("a", D), ("e", D)])
    with pytest.raises(KeyError):
        is_valid_string(T9, [("zz", D)])


def test_canonical_form_ignores_orientation(fx):
    T9 = fx["T9"]
    w1 = StringWord.parse(T9, "e- d- a f g")
    w2 = StringWord.parse(T9, "g- f- a- d e")
    assert w1 == w2
    assert StringWord.parse(T9, "1_4") == simple_string(T9, "4")


def test_projective_strings(fx):
    T9 = fx["T9"]
    p1 = string_of_projective(T9, "1")
    assert set(p1.vertices) == {"5", "4", "1", "2", "6", "7"} and p1.dimension == 6
    assert top(p1) == Counter({"1": 1})
    assert socle(p1) == Counter({"5": 1, "7": 1})
    assert string_of_projective(T9, "5") == simple_string(T9, "5")
    assert string_of_projective(fx["CYC3"], "g0") == StringWord.parse(fx["CYC3"], "a1")


def test_injective_strings(fx):
    assert string_of_injective(fx["A2"], "2") == StringWord.parse(fx["A2"], "a")
    # the permitted path into 7 extends back through a, since af is not a relation
    assert string_of_injective(fx["T9"], "7") == StringWord.parse(fx["T9"], "a f g")
    i8 = string_of_injective(fx["EX72"], "8")
    assert top(i8) == Counter({"13": 1, "9": 1})
    assert socle(i8) == Counter({"8": 1})


def test_cover_of_simple(fx):
    T9 = fx["T9"]
    P, omega = projective_cover(T9, simple_string(T9, "1"))
    assert P == StringSum.of([string_of_projective(T9, "1")])
    assert omega == StringSum.of([StringWord.parse(T9, "e"), StringWord.parse(T9, "f g")])
    P, omega = projective_cover(T9, simple_string(T9, "5"))
    assert P == StringSum.of([string_of_projective(T9, "5")]) and not omega


def test_cover_of_injective(fx):
    E = fx["EX72"]
    P, omega = projective_cover(E, string_of_injective(E, "8"))
    assert Counter(top(P)) == Counter({"13": 1, "9": 1})
    assert top(omega) == Counter({"8": 1, "10": 1})


def test_pd_string(fx):
    T9 = fx["T9"]
    assert pd_string(T9, simple_string(T9, "4"), cap=3) == 1
    assert not pd_string(T9, simple_string(T9, "1"), cap=3).is_finite
    E = fx["EX72"]
    assert pd_string(E, string_of_injective(E, "8"), cap=6) == 4
    with pytest.raises(ValueError):
        pd_string(E, string_of_injective(E, "8"), cap=2)
    assert pd_string(E, string_of_injective(E, "8"), cap=5, certify=False) == 4


def test_zero_module(fx):
    A = fx["T9"]
    assert pd_string(A, StringSum()) == 0
    assert projective_cover(A, StringSum()) == (StringSum(), StringSum())


def test_dimension_additivity(fx):
    for A in fx.values():
        for v in A.vertices:
            for M in (simple_string(A, v), string_of_injective(A, v)):
                P, omega = projective_cover(A, M)
                dp, dm, do = dim_vector(A, P), dim_vector(A, M), dim_vector(A, omega)
                assert all(dp[u] == dm[u] + do[u] for u in A.vertices)


def test_top_socle_count(fx):
    for A in fx.values():
        for v in A.vertices:
            for w in (string_of_projective(A, v), string_of_injective(A, v)):
                turns = sum(1 for x, y in zip(w.letters, w.letters[1:]) if x[1] != y[1])
                assert sum(top(w).values()) + sum(socle(w).values()) == turns + 2


def test_syzygy_strings_are_valid(fx):
    for A in fx.values():
        for v in A.vertices:
            for w in syzygy(A, string_of_injective(A, v)):
                assert is_valid_string(A, w)
