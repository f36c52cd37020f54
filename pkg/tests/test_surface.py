import random
from collections import Counter

from gentlehom.dimension import INFINITY, Dimension
from gentlehom.surface import ag_invariant, c_numbers, surface_model, surface_stats
from gentlehom.threads import permitted_threads


def test_ag_goldens(fx):
    assert ag_invariant(fx["EX74"]).pairs == ((9, 4), (0, 4), (0, 3))
    assert ag_invariant(fx["A2"]).pairs == ((3, 1),)
    assert ag_invariant(fx["CYC3"]).pairs == ((2, 0), (1, 3))
    assert ag_invariant(fx["NAK3"]).pairs == ((3, 0), (0, 3))
    assert ag_invariant(fx["T9"]).pairs == ((9, 6), (0, 3))
    assert ag_invariant(fx["KRON"]).pairs == ((1, 1), (1, 1))
    assert ag_invariant(fx["PT"]).pairs == ((2, 0),)


def test_ag_json():
    from gentlehom.fixtures import ex74

    assert ag_invariant(ex74()).to_json() == {"pairs": [[9, 4], [0, 4], [0, 3]]}


def test_ag_start_independent(fx):
    rng = random.Random(5)
    for A in fx.values():
        base = ag_invariant(A)
        n = len(permitted_threads(A))
        for _ in range(5):
            order = list(range(n))
            rng.shuffle(order)
            assert ag_invariant(A, order) == base


def test_t9_surface(fx):
    model = surface_model(fx["T9"])
    assert len(model.boundary_components) == 2
    outer, inner = model.boundary_components
    assert outer.marked_point_count == 9 and inner.is_unmarked
    sides = Counter(frozenset(model.polygons[i].arc_sides) for i in outer.polygons)
    expected = [{"1", "4"}, {"4", "5"}, {"2", "6"}, {"6", "7"}, {"3", "8"}, {"8", "9"}, {"5"}, {"7"}, {"9"}]
    assert sides == Counter(frozenset(s) for s in expected)
    inf = model.polygons[inner.polygons[0]]
    assert inf.c_number == INFINITY and set(inf.arc_sides) == {"1", "2", "3"}


def test_cyc_polygons(fx):
    for n in range(2, 9):
        model = surface_model(fx[f"CYC{n}"])
        big = [p for p in model.polygons if p.c_number == n + 1]
        assert len(big) == 1 and big[0].arc_sides.count("g0") == 2
        assert sorted(int(p.c_number) for p in model.polygons) == [1] * (n - 1) + [n + 1]


def test_c_numbers(fx):
    assert max(c for c in c_numbers(fx["EX72"]) if c.is_finite) == 5
    poly = [p for p in surface_model(fx["EX72"]).polygons if p.c_number == 5][0]
    assert set(poly.arc_sides) == {"9", "10", "14", "13", "12"}
    assert Counter(c_numbers(fx["T9"])) == Counter([Dimension(2)] * 6 + [Dimension(1)] * 3 + [INFINITY])
    assert Counter(c_numbers(fx["A2"])) == Counter([Dimension(2), Dimension(1), Dimension(1)])


def test_surface_reproduces_ag_and_arc_slots(fx):
    for name, A in fx.items():
        model = surface_model(A)
        assert model.ag == ag_invariant(A), name
        slots = sum(len(p.arc_sides) for p in model.polygons)
        assert slots == 2 * len(A.vertices), name
        for b in model.boundary_components:
            if b.is_unmarked:
                assert len(b.polygons) == 1
            else:
                assert len(b.polygons) == b.marked_point_count


def test_stats(fx):
    for name in ("CYC3", "T9"):
        s = surface_stats(fx[name])
        assert (s.boundary_count, s.genus) == (2, 0)
    s = surface_stats(fx["PT"])
    assert (s.boundary_count, s.genus) == (1, 0)
    assert all(surface_stats(A).genus >= 0 for A in fx.values())
