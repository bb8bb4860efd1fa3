import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rdvdom.pst import PrioritySearchTree


class ListModel:
    """Linear-scan reference: max weight in range, ties to the larger value."""

    def __init__(self):
        self.items = {}  # payload -> (value, weight)

    def insert(self, value, weight, payload):
        self.items[payload] = (value, weight)

    def delete(self, payload):
        del self.items[payload]

    def range_max(self, lo, hi):
        best = None
        for p, (v, w) in self.items.items():
            if lo <= v <= hi and (best is None or (w, v) > best[0]):
                best = ((w, v), p)
        return None if best is None else best[1]


def run_script(seed: int, steps: int, lo: int = 1, hi: int = 64) -> None:
    rng = random.Random(seed)
    pst = PrioritySearchTree(lo, hi)
    ref = ListModel()
    next_payload = 0
    for _ in range(steps):
        op = rng.random()
        free = [v for v in range(lo, hi + 1) if v not in {x for x, _ in ref.items.values()}]
        if op < 0.45 and free:
            v = rng.choice(free)
            w = rng.randrange(0, 40)
            pst.insert(v, w, next_payload)
            ref.insert(v, w, next_payload)
            next_payload += 1
        elif op < 0.7 and ref.items:
            p = rng.choice(sorted(ref.items))
            pst.delete(p)
            ref.delete(p)
        else:
            a, b = sorted((rng.randint(lo, hi), rng.randint(lo, hi)))
            assert pst.range_max_payload(a, b) == ref.range_max(a, b)
    pst.check_invariants()
    assert len(pst) == len(ref.items)


@pytest.mark.parametrize("seed", range(300))
def test_random_scripts(seed):
    run_script(seed, 60)


@pytest.mark.parametrize("lo, hi", [(1, 1), (0, 2), (5, 12), (-3, 3)])
def test_odd_ranges(lo, hi):
    for seed in range(20):
        run_script(seed, 40, lo, hi)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 20), st.integers(0, 5)), max_size=20, unique_by=lambda t: t[0]),
       st.integers(1, 20), st.integers(1, 20))
def test_range_max_hypothesis(entries, a, b):
    a, b = min(a, b), max(a, b)
    pst = PrioritySearchTree(1, 20)
    ref = ListModel()
    for p, (v, w) in enumerate(entries):
        pst.insert(v, w, p)
        ref.insert(v, w, p)
    pst.check_invariants()
    assert pst.range_max_payload(a, b) == ref.range_max(a, b)


def test_entry_fields_and_ties():
    pst = PrioritySearchTree(1, 8)
    pst.insert(2, 5, 100)
    pst.insert(6, 5, 101)
    e = pst.range_max(1, 8)
    assert (e.value, e.weight, e.payload) == (6, 5, 101)
    assert pst.range_max(1, 5).payload == 100
    assert pst.range_max(3, 5) is None


def test_delete_then_reinsert_same_value():
    pst = PrioritySearchTree(1, 4)
    pst.insert(3, 1, 7)
    pst.delete(7)
    pst.insert(3, 2, 8)
    assert 7 not in pst and 8 in pst
    assert pst.range_max_payload(3, 3) == 8


def test_errors():
    with pytest.raises(ValueError):
        PrioritySearchTree(3, 2)
    pst = PrioritySearchTree(1, 4)
    pst.insert(1, 0, 0)
    with pytest.raises(KeyError):
        pst.insert(2, 0, 0)
    with pytest.raises(ValueError):
        pst.insert(1, 3, 1)  # value already stored
    with pytest.raises(ValueError):
        pst.insert(5, 0, 1)
    with pytest.raises(ValueError):
        pst.insert(2, -1, 1)
    with pytest.raises(KeyError):
        pst.delete(9)
    with pytest.raises(ValueError):
        pst.range_max(3, 2)
    # failed inserts left no trace
    pst.check_invariants()
    assert len(pst) == 1 and pst.range_max_payload(1, 4) == 0
