import unittest
from typing import Tuple

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclic_mates.madj.catalog import (
    boolean_square,
    chain,
    implication,
    join,
    leq,
    lukasiewicz_tensor,
    meet,
    meet_functor,
    monotone_maps,
    named_category,
    random_universe,
    thin_functor,
    z2,
)
from cyclic_mates.madj.cyclic_mcat import build_madj
from cyclic_mates.madj.multiadjoint import verify_cycle
from cyclic_mates.madj.documents import dumps
from cyclic_mates.madj.fincat import BoundaryMismatchException, opposite, terminal
from tests.madj.fixtures import c2, c3


class TestPosets(unittest.TestCase):
    def test_chain(self):
        c = chain(4)
        self.assertEqual(c.name, "C4")
        self.assertEqual(len(c.morphisms), 10)
        self.assertEqual(c.hom(1, 3), ("1<=3",))
        self.assertEqual(c.hom(3, 1), ())

    def test_boolean_square(self):
        b = boolean_square()
        self.assertEqual(meet(b, "a", "b"), "0")
        self.assertEqual(join(b, "a", "b"), "1")
        self.assertEqual(implication(b, "a", "b"), "b")
        self.assertEqual(implication(b, "a", "0"), "b")

    def test_heyting_chain(self):
        h = chain(3, "H3")
        self.assertEqual([implication(h, 1, y) for y in range(3)], [0, 2, 2])
        self.assertEqual(implication(h, 2, 1), 1)

    def test_meet_functor(self):
        f = meet_functor(c3())
        self.assertEqual(f.target, opposite(c3()))
        self.assertEqual(f.obj_map[(2, 1)], 1)
        self.assertTrue(f.violations().ok)

    def test_thin_functor_must_be_monotone(self):
        with self.assertRaises(BoundaryMismatchException):
            thin_functor(c2(), c2(), {0: 1, 1: 0})

    def test_z2(self):
        z = z2()
        self.assertEqual(z.objects, ("*",))
        self.assertEqual(z.compose("s", "s"), "e")
        self.assertEqual(z.identity("*"), "e")


@pytest.mark.parametrize(  # type: ignore
    "n, m, count",
    [
        (1, 3, 3),
        (2, 2, 3),
        (2, 3, 6),
        (3, 2, 4),
    ],
)
def test_monotone_maps(n: int, m: int, count: int) -> None:
    assert len(monotone_maps(chain(n), chain(m))) == count


@pytest.mark.parametrize(  # type: ignore
    "values, expected",
    [
        ((), 2),
        ((1,), 1),
        ((2, 1), 1),
        ((1, 1), 0),
        ((2, 2), 2),
    ],
)
def test_lukasiewicz_tensor(values: Tuple[int, ...], expected: int) -> None:
    assert lukasiewicz_tensor(values) == expected


@pytest.mark.parametrize(  # type: ignore
    "name, objects",
    [
        ("C5", 5),
        ("H3", 3),
        ("B2", 4),
        ("Ł3", 3),
        ("Z2", 1),
    ],
)
def test_named_category(name: str, objects: int) -> None:
    c = named_category(name)
    assert c is not None
    assert c.name == name
    assert len(c.objects) == objects


def test_named_terminal() -> None:
    assert named_category("1") == terminal()
    assert named_category("Q") is None


class TestRandomUniverse(unittest.TestCase):
    def test_seeded(self):
        self.assertEqual(dumps(random_universe(7)), dumps(random_universe(7)))

    @settings(max_examples=12, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6))
    def test_closed(self, seed: int):
        universe = random_universe(seed)
        self.assertEqual(len(universe.cats), 4)
        for c in universe.cats:
            self.assertIn(opposite(c), universe.cats)
        d = build_madj(universe)
        self.assertGreaterEqual(len(d.vertical.multimaps), len(universe.cats))
        for m in d.vertical.multimaps:
            self.assertTrue(verify_cycle(m).ok, m.name)


@given(
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=0, max_value=5),
)
def test_implication_is_right_adjoint_to_meet(x: int, y: int, z: int) -> None:
    c = chain(6)
    assert leq(c, meet(c, z, x), y) == leq(c, z, implication(c, x, y))
