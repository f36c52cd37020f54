"""Randomised invariants over generated gentle presentations."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from gentlehom.generator import GeneratorConfig, gen_gentle
from gentlehom.homdim import (
    gldim_via_polygons,
    gldim_via_threads,
    gorenstein_projectives,
    injdim,
    pd_injective,
    pd_simple,
)
from gentlehom.io import parse_text, serialize
from gentlehom.oracle import check_equalities
from gentlehom.presentation import full_relation_cycles, opposite
from gentlehom.strings import (
    StringWord,
    dim_vector,
    is_valid_string,
    projective_cover,
    simple_string,
    string_of_injective,
    string_of_projective,
)
from gentlehom.surface import ag_invariant, surface_model, surface_stats
from gentlehom.threads import forbidden_threads, permitted_threads

presentations = st.builds(
    lambda n, seed: gen_gentle(GeneratorConfig(n, seed=seed)),
    st.integers(1, 9),
    st.integers(0, 2**32),
)
SETTINGS = settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@SETTINGS
@given(presentations)
def test_serialize_round_trip_and_opposite_involution(A):
    assert parse_text(serialize(A)) == A
    assert opposite(opposite(A)) == A


@SETTINGS
@given(presentations)
def test_thread_counts_and_ag_sums(A):
    perm = permitted_threads(A)
    finite, cycles = forbidden_threads(A)
    ag = ag_invariant(A)
    assert len(perm) == len(finite) == sum(m for m, _ in ag.pairs)
    assert sum(n for _, n in ag.pairs) == sum(t.length for t in finite) + sum(len(c) for c in cycles)
    assert sorted(ag.infinite_lengths) == sorted(len(c) for c in cycles)
    assert surface_model(A).ag == ag
    assert surface_stats(A).genus >= 0


@SETTINGS
@given(presentations, st.randoms(use_true_random=False))
def test_ag_start_order_irrelevant(A, rnd):
    order = list(range(len(permitted_threads(A))))
    rnd.shuffle(order)
    assert ag_invariant(A, order) == ag_invariant(A)


@SETTINGS
@given(presentations)
def test_opposite_preserves_invariants(A):
    B = opposite(A)
    assert gldim_via_threads(B) == gldim_via_threads(A)
    assert injdim(B) == injdim(A)
    assert ag_invariant(B) == ag_invariant(A)


@SETTINGS
@given(presentations)
def test_headline_formulas(A):
    gl = gldim_via_polygons(A)
    assert gl == gldim_via_threads(A) == max(pd_simple(A, v) for v in A.vertices)
    assert injdim(A) == max(pd_injective(A, v) for v in A.vertices)
    assert gl.is_finite == (not full_relation_cycles(A))
    assert len(gorenstein_projectives(A).nonprojectives) == sum(len(c) for c in full_relation_cycles(A))


@SETTINGS
@given(presentations)
def test_string_module_facts(A):
    for v in A.vertices:
        for w in (string_of_projective(A, v), string_of_injective(A, v), simple_string(A, v)):
            assert is_valid_string(A, w)
            rev = StringWord(tuple(reversed(w.vertices)), tuple((a, -s) for a, s in reversed(w.letters)))
            assert StringWord.make(A, rev.vertices[0], rev.letters) == w
            P, omega = projective_cover(A, w)
            dp, dm, do = dim_vector(A, P), dim_vector(A, omega), dim_vector(A, w)
            assert all(dp[u] == dm[u] + do[u] for u in A.vertices)


@settings(max_examples=40, deadline=None)
@given(presentations, st.sampled_from([2, 3]))
def test_oracle_agrees(A, p):
    report = check_equalities(A, p)
    assert report.ok, [str(c) for c in report.failures()]
