import itertools

import pytest

from arithcordial import graphs as gr
from arithcordial.errors import LimitExceeded, SizeMismatch
from arithcordial.labeling import verify
from arithcordial.search import count_cordial_labelings, find_cordial_labeling
from arithcordial.structures import make


def brute(graph, struct):
    """(count, smallest) over every bijection, no pruning, via verify."""
    labels = sorted(struct.label_set)
    hits = [f for f in itertools.permutations(labels) if verify(graph, f, struct).cordial]
    return len(hits), (hits[0] if hits else None)


def test_examples():
    s = make("legendre", 3, labels=[1, 2, 3])
    out = find_cordial_labeling(gr.cycle(3), s)
    assert out.found == (1, 2, 3)
    assert count_cordial_labelings(gr.cycle(3), s).count == 6
    k4 = make("legendre", 3, labels=[1, 2, 3, 4])
    out = find_cordial_labeling(gr.complete(4), k4)
    assert out.found is None and out.exhausted
    assert count_cordial_labelings(gr.complete(4), k4).count == 0


def test_path2_count_is_two():
    for s in (make("legendre", 5, labels=[1, 2]), make("jacobi", 15, "product", [3, 7])):
        assert count_cordial_labelings(gr.path(2), s).count == 2


def test_trivial_graphs_take_first_bijection():
    s = make("legendre", 7, labels=[4, 2, 6])
    assert find_cordial_labeling(gr.empty(3), s).found == (2, 4, 6)
    s = make("legendre", 7, labels=[4, 2, 6])
    g = gr.Graph(3, ((1, 2),))
    assert find_cordial_labeling(g, s).found == (2, 4, 6)


def test_limits():
    with pytest.raises(LimitExceeded):
        find_cordial_labeling(gr.path(13), make("legendre", 5))
    with pytest.raises(LimitExceeded):
        count_cordial_labelings(gr.path(10), make("legendre", 5))
    with pytest.raises(SizeMismatch):
        find_cordial_labeling(gr.path(4), make("legendre", 5, labels=[1, 2, 3]))


STRUCTS = ["legendre@3:sum", "legendre@5:sum", "legendre@5:product", "jacobi@15:sum"]


def family(max_order=6):
    out = []
    for n in range(2, max_order + 1):
        out += [gr.path(n), gr.star(n)]
        if n >= 3:
            out.append(gr.cycle(n))
    return out


@pytest.mark.parametrize("spec", STRUCTS)
def test_against_brute_force(spec):
    from arithcordial.structures import parse_structure

    for g in family(6):
        s = parse_structure(spec, labels=range(1, g.order + 1))
        count, smallest = brute(g, s)
        assert count_cordial_labelings(g, s).count == count
        assert count_cordial_labelings(g, s, prune=False).count == count
        assert find_cordial_labeling(g, s).found == smallest


def test_found_is_always_cordial():
    s = make("legendre", 7, labels=range(1, 9))
    for g in (gr.ladder(4), gr.cycle(8), gr.snake(2, 4)):
        out = find_cordial_labeling(g, s)
        if out.found:
            assert verify(g, out.found, s).cordial


def test_pruning_reduces_work():
    s = make("legendre", 3, labels=range(1, 8))
    g = gr.complete(7)
    a = count_cordial_labelings(g, s)
    b = count_cordial_labelings(g, s, prune=False)
    assert a.count == b.count
    assert a.nodes_explored <= b.nodes_explored
