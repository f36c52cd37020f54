import pytest

from gentlehom.generator import GeneratorConfig, GeneratorError, gen_gentle
from gentlehom.io import serialize
from gentlehom.presentation import full_relation_cycles, is_connected, validate_gentle


def test_single_vertex():
    for seed in range(5):
        A = gen_gentle(GeneratorConfig(1, seed=seed))
        assert len(A.vertices) == 1 and not A.arrows


def test_seed_42():
    A = gen_gentle(GeneratorConfig(8, seed=42))
    assert len(A.vertices) == 8
    validate_gentle(A.vertices, [(a.id, a.source, a.target) for a in A.arrows], A.relations)


def test_reproducible():
    cfg = GeneratorConfig(6, seed=123)
    assert serialize(gen_gentle(cfg)) == serialize(gen_gentle(cfg))


def test_many_samples_are_gentle_and_connected():
    for seed in range(500):
        A = gen_gentle(GeneratorConfig(1 + seed % 8, seed=seed))
        assert is_connected(A)
        validate_gentle(A.vertices, [(a.id, a.source, a.target) for a in A.arrows], A.relations)


def test_target_arrows_and_no_full_cycles():
    for seed in range(30):
        A = gen_gentle(GeneratorConfig(5, target_arrow_count=6, seed=seed, allow_full_cycles=False))
        assert len(A.arrows) == 6 and not full_relation_cycles(A)


def test_budget_exhaustion_is_explicit():
    # two loops at one vertex always leave a relation-free cycle
    with pytest.raises(GeneratorError):
        gen_gentle(GeneratorConfig(1, target_arrow_count=2, seed=0, max_attempts=50, loop_probability=1.0))


def test_config_validation():
    with pytest.raises(ValueError):
        GeneratorConfig(0)
    with pytest.raises(ValueError):
        GeneratorConfig(3, target_arrow_count=7)
    with pytest.raises(ValueError):
        GeneratorConfig(4, target_arrow_count=2)
