import pytest

from disjoint_paths.classes import P1_P3, P1_P4, P4, THREE_P1, cobipartite_partition, is_h_free, split_partition
from disjoint_paths.errors import PreconditionError
from disjoint_paths.generators import GRAPH_CLASSES, gen_random_instance

CHECKS = {
    "general": lambda g: True,
    "cograph": lambda g: is_h_free(g, P4),
    "cobipartite": lambda g: cobipartite_partition(g) is not None,
    "split": lambda g: split_partition(g) is not None,
    "3p1free": lambda g: is_h_free(g, THREE_P1),
    "p1p3free": lambda g: is_h_free(g, P1_P3),
    "p1p4free": lambda g: is_h_free(g, P1_P4),
}


@pytest.mark.parametrize("cls", GRAPH_CLASSES)
@pytest.mark.parametrize("kind", ["dp", "dcs"])
def test_class_membership_and_determinism(cls, kind):
    for seed in range(15):
        inst = gen_random_instance(cls, 9, 2, seed, kind)
        assert CHECKS[cls](inst.graph)
        assert inst == gen_random_instance(cls, 9, 2, seed, kind)
        assert inst.k == 2 and inst.kind == kind


def test_split_dp_terminals_are_the_independent_side():
    inst = gen_random_instance("split", 10, 3, 4, "dp")
    terms = inst.terminal_vertices()
    assert len(terms) == 6
    assert not any(inst.graph.has_edge(a, b) for a in terms for b in terms)
    others = set(range(10)) - terms
    assert all(inst.graph.has_edge(a, b) for a in others for b in others if a != b)


def test_different_seeds_differ():
    seen = {gen_random_instance("general", 8, 2, s) for s in range(10)}
    assert len(seen) > 5


def test_infeasible_parameters():
    with pytest.raises(PreconditionError):
        gen_random_instance("general", 3, 2, 0, "dp")
    with pytest.raises(PreconditionError):
        gen_random_instance("split", 3, 2, 0, "dp")
    with pytest.raises(PreconditionError):
        gen_random_instance("general", 0, 1, 0)
    with pytest.raises(ValueError):
        gen_random_instance("planar", 5, 1, 0)
