import itertools
import unittest
from typing import Tuple

import pytest

from cyclic_mates.madj.catalog import (
    boolean_square,
    chain,
    join,
    meet,
    meet_adjunction,
    poset,
    thin_functor,
)
from cyclic_mates.madj.fincat import (
    BoundaryMismatchException,
    NoColimitException,
    arrow_category,
    product,
    unary,
)
from cyclic_mates.madj.leibniz import (
    cube_diagram,
    hat_adjoint_check,
    hat_functor,
    hat_morphism,
    hat_preserves_adjunction_check,
)
from tests.madj.fixtures import c2, c3, load_data


def two_tops():
    """0 below p and q, both below the incomparable r and s."""
    below = {("0", "p"), ("0", "q"), ("0", "r"), ("0", "s")}
    below |= {("p", "r"), ("p", "s"), ("q", "r"), ("q", "s")}
    return poset("W", ["0", "p", "q", "r", "s"], lambda x, y: x == y or (x, y) in below)


def square_into_two_tops():
    return thin_functor(
        product([c2(), c2()]),
        two_tops(),
        {(0, 0): "0", (0, 1): "p", (1, 0): "q", (1, 1): "r"},
    )


@pytest.mark.parametrize(  # type: ignore
    "arrows, domain, codomain",
    [
        (("a<=1", "b<=1"), "1", "1"),
        (("0<=a", "0<=b"), "0", "0"),
        (("0<=1", "0<=1"), "0", "1"),
        (("a<=a", "b<=1"), "a", "a"),
    ],
)
def test_pushout_product(arrows: Tuple[str, str], domain: str, codomain: str) -> None:
    functor = load_data("meet_b2.json")
    hat = hat_morphism(functor, arrows)
    assert hat.domain == domain
    assert hat.codomain == codomain
    assert hat.morphism == f"{domain}<={codomain}"


def test_pushout_product_of_every_pair_of_arrows() -> None:
    functor = load_data("meet_b2.json")
    b2 = boolean_square()
    for a, b in itertools.product(b2.morphisms, repeat=2):
        hat = hat_morphism(functor, (a.id, b.id))
        domain = join(b2, meet(b2, a.src, b.tgt), meet(b2, a.tgt, b.src))
        codomain = meet(b2, a.tgt, b.tgt)
        assert (hat.domain, hat.codomain) == (domain, codomain)
        assert hat.morphism == f"{domain}<={codomain}"

class TestHatMorphism(unittest.TestCase):
    def test_cube_diagram(self):
        functor = load_data("meet_b2.json")
        diagram = cube_diagram(functor, ("a<=1", "b<=1"))
        self.assertEqual(diagram.obj_map, {(0, 0): "0", (0, 1): "a", (1, 0): "b"})

    def test_full_cube_agrees(self):
        functor = load_data("meet_b2.json")
        self.assertEqual(
            hat_morphism(functor, ("a<=1", "b<=1"), full=True).morphism,
            hat_morphism(functor, ("a<=1", "b<=1")).morphism,
        )

    def test_wrong_arrows(self):
        functor = load_data("meet_b2.json")
        with self.assertRaises(BoundaryMismatchException):
            hat_morphism(functor, ("a<=1",))
        with self.assertRaises(BoundaryMismatchException):
            hat_morphism(functor, ("a<=1", "1<=a"))

    def test_no_colimit(self):
        with self.assertRaises(NoColimitException):
            hat_morphism(square_into_two_tops(), ("0<=1", "0<=1"))

    def test_hat_functor(self):
        f = unary(thin_functor(c3(), c3(), {0: 1, 1: 1, 2: 1}))
        hat = hat_functor(f)
        self.assertTrue(hat.violations().ok)
        self.assertEqual(hat.target, arrow_category(c3()).category)
        self.assertEqual(set(hat.obj_map.values()), {"1<=1"})


class TestHatAdjunction(unittest.TestCase):
    def test_meet_hat_is_adjoint(self):
        report = hat_preserves_adjunction_check(meet_adjunction(chain(2)))
        self.assertTrue(report.ok, report)
        self.assertEqual(report.checked["hat_assembles"], 1)
        self.assertGreater(report.checked["hat_adjoint"], 0)

    def test_boolean_meet_hat_is_adjoint(self):
        report = hat_preserves_adjunction_check(meet_adjunction(boolean_square()))
        self.assertTrue(report.ok, report)
        self.assertEqual(report.checked["hat_assembles"], 1)

    def test_constant_hat_has_no_adjoint(self):
        f = unary(thin_functor(c3(), c3(), {0: 1, 1: 1, 2: 1}))
        report = hat_adjoint_check(f)
        self.assertEqual(set(report.laws()), {"hat_adjoint"})

    def test_missing_colimit_is_skipped(self):
        report = hat_adjoint_check(square_into_two_tops())
        self.assertTrue(report.ok)
        self.assertEqual(len(report.skipped), 1)
        self.assertFalse(report.checked)
