from collections import Counter

from gentlehom.dimension import INFINITY
from gentlehom.threads import forbidden_tail, forbidden_threads, permitted_threads, thread_set


def _summary(threads):
    return Counter(th.arrows if th.arrows else th.vertex for th in threads)


def test_cyc3_threads(fx):
    A = fx["CYC3"]
    assert _summary(permitted_threads(A)) == Counter({("a3", "a1"): 1, ("a2",): 1, "g0": 1})
    finite, cycles = forbidden_threads(A)
    assert _summary(finite) == Counter({("a1", "a2", "a3"): 1, "g1": 1, "g2": 1})
    assert cycles == []


def test_t9_threads(fx):
    A = fx["T9"]
    perm = permitted_threads(A)
    assert _summary(perm) == Counter(
        {("c", "d", "e"): 1, ("a", "f", "g"): 1, ("b", "h", "i"): 1,
         "4": 1, "5": 1, "6": 1, "7": 1, "8": 1, "9": 1})
    finite, cycles = forbidden_threads(A)
    assert _summary(finite) == Counter(
        {("d",): 1, ("e",): 1, ("f",): 1, ("g",): 1, ("h",): 1, ("i",): 1, "5": 1, "7": 1, "9": 1})
    assert cycles == [("a", "b", "c")]


def test_kronecker_has_no_trivial_threads(fx):
    perm = permitted_threads(fx["KRON"])
    assert _summary(perm) == Counter({("b1",): 1, ("b2",): 1})


def test_isolated_vertex_threads(fx):
    finite, cycles = forbidden_threads(fx["PT"])
    assert [th.slot for th in finite] == [0, 1] and all(th.is_trivial for th in finite)
    assert len(permitted_threads(fx["PT"])) == 2 and cycles == []


def test_forbidden_tail(fx):
    for n in range(2, 9):
        assert forbidden_tail(fx[f"CYC{n}"], "a1") == n
    assert forbidden_tail(fx["T9"], "a") == INFINITY
    assert forbidden_tail(fx["T9"], "d") == 1


def test_partition_and_counts(fx):
    for name, A in fx.items():
        ts = thread_set(A)
        perm_arrows = Counter(a for th in ts.permitted for a in th.arrows)
        forb_arrows = Counter(a for th in ts.forbidden_finite for a in th.arrows)
        forb_arrows.update(a for c in ts.infinite_cycles for a in c)
        assert perm_arrows == Counter(A.arrow_ids), name
        assert forb_arrows == Counter(A.arrow_ids), name
        assert len(ts.permitted) == len(ts.forbidden_finite) == 2 * len(A.vertices) - len(A.arrows)


def test_tail_bounded_by_thread(fx):
    for A in fx.values():
        finite, _ = forbidden_threads(A)
        for th in finite:
            for k, a in enumerate(th.arrows):
                assert forbidden_tail(A, a) == th.length - k


def test_maximality(fx):
    for A in fx.values():
        for th in permitted_threads(A):
            if th.arrows:
                assert A.prev_permitted(th.first) is None and A.next_permitted(th.last) is None
        for th in forbidden_threads(A)[0]:
            if th.arrows:
                assert A.prev_forbidden(th.first) is None and A.next_forbidden(th.last) is None
