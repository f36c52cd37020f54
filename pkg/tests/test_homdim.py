from collections import Counter

from gentlehom.dimension import INFINITY
from gentlehom.homdim import (
    gldim_via_polygons,
    gldim_via_threads,
    gorenstein_projectives,
    gp_count_via_ag,
    injdim,
    is_gldim_finite_via_ag,
    pd_injective,
    pd_injective_formula,
    pd_simple,
    resolution_of_injective,
    resolution_of_simple,
)
from gentlehom.presentation import opposite, validate_gentle
from gentlehom.strings import StringWord, pd_string, simple_string, top


def _sets(ladder):
    return [Counter(d) for d in ladder.degrees]


def test_gldim(fx):
    for name, want in (("CYC4", 4), ("EX72", 4), ("T9", INFINITY), ("PT", 0), ("A2", 1)):
        assert gldim_via_polygons(fx[name]) == want
        assert gldim_via_threads(fx[name]) == want


def test_pd_simple(fx):
    assert pd_simple(fx["CYC5"], "g2") == 3
    assert pd_simple(fx["EX72"], "9") == 4
    assert pd_simple(fx["T9"], "1") == INFINITY
    assert pd_simple(fx["T9"], "4") == 1


def test_ex72_pd_table(fx):
    E = fx["EX72"]
    table = {v: int(pd_simple(E, v)) for v in E.vertices}
    assert table == {"1": 2, "2": 0, "3": 1, "4": 0, "5": 1, "6": 2, "7": 1, "8": 2,
                     "9": 4, "10": 3, "11": 1, "12": 1, "13": 1, "14": 2}


def test_simple_resolutions(fx):
    lad = resolution_of_simple(fx["CYC3"], "g0")
    assert lad.degrees == (("g0",), ("g1",), ("g2",), ("g0",)) and lad.pd == 3
    lad = resolution_of_simple(fx["T9"], "1", max_terms=7)
    assert _sets(lad)[:3] == [Counter("1"), Counter("24"), Counter("3")]
    assert not lad.terminates and lad.period == (("1",), ("2",), ("3",)) and lad.period_start == 3
    lad = resolution_of_simple(fx["EX72"], "9")
    assert _sets(lad) == [Counter(["9"]), Counter(["8", "10"]), Counter(["7", "14"]),
                          Counter(["6", "13"]), Counter(["12"])]


def test_ladder_agrees_with_pd(fx):
    for A in fx.values():
        for v in A.vertices:
            assert resolution_of_simple(A, v).pd == pd_simple(A, v) == pd_string(A, simple_string(A, v))
            assert resolution_of_injective(A, v).pd == pd_injective(A, v)


def test_injdim(fx):
    assert injdim(fx["T9"]) == 1
    assert injdim(fx["EX74"]) == 2
    assert injdim(fx["NAK3"]) == 0
    assert injdim(fx["CYC3"]) == 3
    assert injdim(fx["EX72"]) == 4


def test_injdim_two_full_cycles_through_one_vertex():
    arrows = [("a", "0", "1"), ("b", "1", "0"), ("c", "0", "2"), ("d", "2", "0")]
    rels = [("a", "b"), ("b", "a"), ("c", "d"), ("d", "c")]
    A = validate_gentle(["0", "1", "2"], arrows, rels)
    assert injdim(A) == 1 == injdim(opposite(A))
    assert max(pd_injective(A, v) for v in A.vertices) == 1


def test_pd_injective(fx):
    assert pd_injective(fx["EX72"], "8") == 4
    assert pd_injective(fx["A2"], "2") == 0
    assert pd_injective(fx["T9"], "7") == 1
    for A in fx.values():
        for v in A.vertices:
            assert pd_injective_formula(A, v) == pd_injective(A, v)


def test_injective_resolutions(fx):
    lad = resolution_of_injective(fx["EX72"], "8")
    assert _sets(lad) == [Counter(["13", "9"]), Counter(["8", "10"]), Counter(["14"]),
                          Counter(["13"]), Counter(["12"])]
    assert lad.length == 4
    lad = resolution_of_injective(fx["A2"], "2")
    assert lad.degrees == (("1",),) and lad.length == 0
    assert resolution_of_injective(fx["T9"], "5").pd <= 1


def test_gorenstein_projectives(fx):
    rep = gorenstein_projectives(fx["T9"])
    assert len(rep.projectives) == 9
    assert {tuple(sorted(w.vertices)) for w in rep.nonprojectives} == {("2", "6", "7"), ("3", "8", "9"), ("1", "4", "5")}
    assert {next(iter(top(w))) for w in rep.nonprojectives} == {"1", "2", "3"}
    assert not gorenstein_projectives(fx["CYC5"]).nonprojectives
    rep = gorenstein_projectives(fx["EX74"])
    assert len(rep.nonprojectives) == 7 == rep.count_by_formula
    E = fx["EX74"]
    assert set(rep.nonprojectives) == {
        StringWord.parse(E, "1_3"), StringWord.parse(E, "1_4"), StringWord.parse(E, "d1 e1"),
        StringWord.parse(E, "e1"), StringWord.parse(E, "1_8"), StringWord.parse(E, "c3"),
        StringWord.parse(E, "1_6"),
    }


def test_gp_count_and_finiteness(fx):
    assert gp_count_via_ag(fx["EX74"]) == 7
    assert gp_count_via_ag(fx["NAK5"]) == 5
    assert gp_count_via_ag(fx["A2"]) == 0
    assert not is_gldim_finite_via_ag(fx["T9"])
    assert is_gldim_finite_via_ag(fx["CYC7"])
    assert not is_gldim_finite_via_ag(fx["NAK2"])


def test_global_relations(fx):
    for A in fx.values():
        gl = gldim_via_polygons(A)
        assert gl == max(pd_simple(A, v) for v in A.vertices)
        assert injdim(A) == max(pd_injective(A, v) for v in A.vertices) == injdim(opposite(A))
        if gl.is_finite:
            assert injdim(A) == gl
