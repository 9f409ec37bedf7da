import unittest
from unittest import mock

import pytest

from cyclic_mates.madj.catalog import boolean_square, chain, thin_functor, z2
from cyclic_mates.madj.documents import load
from cyclic_mates.madj.fincat import (
    Cocone,
    CompositionKind,
    Functor,
    InvalidCategoryException,
    InvalidConfigurationException,
    Morphism,
    NatTransformation,
    NoColimitException,
    SizeOverflowException,
    arrow_category,
    colimit,
    compose_functors,
    compose_perms,
    compose_whisker,
    discrete,
    factor,
    fix_factor,
    identity_functor,
    identity_transformation,
    invert_perm,
    opposite,
    opposite_functor,
    product,
    punctured_cube,
    restrict_functor,
    size_limit,
    substitute,
    terminal,
    unary,
    validate_category,
    vertical,
)
from tests.madj.fixtures import c2, c3, data_path, load_data


def two_arrow_category(composition):
    return validate_category(
        "two",
        [0, 1],
        [Morphism("i0", 0, 0), Morphism("f", 0, 1), Morphism("i1", 1, 1)],
        {0: "i0", 1: "i1"},
        composition,
    )


def one_object_category(products):
    """A category on one object with morphisms i, a and b, i being the identity."""
    table = {(g, f): g if g == f else "b" for g in "iab" for f in "iab"}
    table.update({("i", x): x for x in "iab"})
    table.update({(x, "i"): x for x in "iab"})
    table.update(products)
    return validate_category(
        "M", [0], [Morphism(x, 0, 0) for x in "iab"], {0: "i"}, table
    )


class TestCategoryValidation(unittest.TestCase):
    def test_chain(self):
        c = c3()
        self.assertEqual(c.objects, (0, 1, 2))
        self.assertEqual(len(c.morphisms), 6)
        self.assertEqual(c.compose("1<=2", "0<=1"), "0<=2")
        self.assertEqual(c.hom(2, 0), ())
        self.assertEqual(c.identity(1), "1<=1")

    def test_chain_of_morphisms(self):
        c = chain(4)
        self.assertEqual(c.chain("2<=3", "1<=2", "0<=1"), "0<=3")

    def test_missing_composite(self):
        with self.assertRaises(InvalidCategoryException) as raised:
            two_arrow_category(
                [("i0", "i0", "i0"), ("f", "i0", "f"), ("i1", "i1", "i1")]
            )
        self.assertIn("MissingComposite", raised.exception.report.laws())

    def test_duplicate_id(self):
        with self.assertRaises(InvalidCategoryException) as raised:
            validate_category(
                "dup",
                [0],
                [Morphism("i", 0, 0), Morphism("i", 0, 0)],
                {0: "i"},
                [("i", "i", "i")],
            )
        self.assertIn("DuplicateId", raised.exception.report.laws())

    def test_ill_typed_composite(self):
        with self.assertRaises(InvalidCategoryException) as raised:
            two_arrow_category(
                [
                    ("i0", "i0", "i0"),
                    ("f", "i0", "i0"),
                    ("i1", "f", "f"),
                    ("i1", "i1", "i1"),
                ]
            )
        self.assertIn("DanglingEndpoint", raised.exception.report.laws())

    def test_dangling_endpoint(self):
        with self.assertRaises(InvalidCategoryException) as raised:
            validate_category("dangling", [0], [Morphism("i", 0, 1)], {0: "i"}, [])
        self.assertIn("DanglingEndpoint", raised.exception.report.laws())

    def test_semilattice_monoid(self):
        m = one_object_category({})
        self.assertEqual(m.compose("a", "b"), "b")
        self.assertEqual(m.compose("a", "a"), "a")

    def test_identity_violation(self):
        with self.assertRaises(InvalidCategoryException) as raised:
            one_object_category({("i", "a"): "b"})
        self.assertIn("IdentityViolation", raised.exception.report.laws())

    def test_assoc_violation(self):
        with self.assertRaises(InvalidCategoryException) as raised:
            one_object_category({("a", "a"): "b", ("a", "b"): "a"})
        laws = raised.exception.report.laws()
        self.assertIn("AssocViolation", laws)
        self.assertNotIn("IdentityViolation", laws)

    def test_monoid(self):
        c = z2()
        self.assertEqual(c.objects, ("*",))
        self.assertEqual(c.compose("s", "s"), "e")

    def test_loaded_document_matches_catalog(self):
        self.assertEqual(load_data("c2.json"), c2())
        self.assertEqual(load_data("c3.json"), c3())

    def test_document_with_missing_composite(self):
        with self.assertRaises(InvalidCategoryException):
            load(data_path("missing_composite.json"))


class TestConstructions(unittest.TestCase):
    def test_opposite_is_an_involution(self):
        c = c3()
        self.assertEqual(opposite(opposite(c)), c)
        self.assertEqual(opposite(c).hom(2, 0), ("0<=2",))
        self.assertEqual(opposite(c).compose("0<=1", "1<=2"), "0<=2")
        self.assertEqual(opposite(c).name, "C3^op")

    def test_product(self):
        p = product([c2(), c3()])
        self.assertEqual(len(p.objects), 6)
        self.assertEqual(len(p.morphisms), 18)
        self.assertEqual(
            p.compose(("1<=1", "1<=2"), ("0<=1", "0<=1")), ("0<=1", "0<=2")
        )
        self.assertEqual(p.factors, (c2(), c3()))

    def test_opposite_of_product(self):
        self.assertEqual(
            opposite(product([c2(), c3()])), product([opposite(c2()), opposite(c3())])
        )

    def test_terminal(self):
        t = terminal()
        self.assertEqual(t.objects, ((),))
        self.assertEqual(len(t.morphisms), 1)
        self.assertEqual(t.name, "1")

    def test_discrete(self):
        d = discrete("D", ["x", "y"])
        self.assertEqual(d.hom("x", "y"), ())
        self.assertEqual(len(d.hom("x", "x")), 1)

    def test_arrow_category(self):
        arrows = arrow_category(c2())
        self.assertEqual(arrows.category.objects, ("0<=0", "0<=1", "1<=1"))
        self.assertEqual(len(arrows.category.morphisms), 6)
        self.assertTrue(arrows.domain.violations().ok)
        self.assertTrue(arrows.codomain.violations().ok)
        self.assertEqual(arrows.domain.obj_map["0<=1"], 0)
        self.assertEqual(arrows.codomain.obj_map["0<=1"], 1)

    def test_size_limit(self):
        with size_limit(5):
            with self.assertRaises(SizeOverflowException):
                product([c3(), c3()])
        self.assertEqual(len(product([c3(), c3()]).morphisms), 36)

    def test_size_limit_from_environment(self):
        with mock.patch.dict("os.environ", {"MADJ_MAX_SIZE": "10"}):
            with self.assertRaises(SizeOverflowException):
                product([c3(), c3()])

    def test_size_limit_not_a_number(self):
        with mock.patch.dict("os.environ", {"MADJ_MAX_SIZE": "many"}):
            with self.assertRaises(InvalidConfigurationException) as raised:
                product([c3(), c3()])
        self.assertIn("MADJ_MAX_SIZE", str(raised.exception))
        with mock.patch.dict("os.environ", {"MADJ_MAX_SIZE": "many"}):
            with size_limit(200):
                self.assertEqual(len(product([c3(), c3()]).morphisms), 36)


class TestFunctors(unittest.TestCase):
    def test_identity_and_composition(self):
        f = thin_functor(c3(), c3(), {0: 0, 1: 0, 2: 1})
        self.assertTrue(f.violations().ok)
        self.assertEqual(compose_functors(identity_functor(c3()), f), f)
        self.assertEqual(compose_functors(f, f).obj_map, {0: 0, 1: 0, 2: 0})

    def test_bad_morphism_map(self):
        f = thin_functor(c2(), c2(), {0: 0, 1: 1})
        broken = Functor(f.source, f.target, f.obj_map, {**f.mor_map, "0<=1": "0<=0"})
        self.assertEqual(broken.violations().laws(), ["morphism_map"])

    def test_opposite_functor(self):
        f = thin_functor(c2(), c3(), {0: 0, 1: 2})
        g = opposite_functor(f)
        self.assertEqual(g.source, opposite(c2()))
        self.assertTrue(g.violations().ok)
        self.assertEqual(opposite_functor(g), f)

    def test_restrict_and_fix(self):
        maximum = thin_functor(
            product([c2(), c2()]),
            c2(),
            {(x, y): max(x, y) for x in range(2) for y in range(2)},
        )
        at_one = restrict_functor(maximum, 0, [None, 1])
        self.assertEqual(at_one.obj_map, {0: 1, 1: 1})
        fixed = fix_factor(maximum, 1, 0)
        self.assertEqual(fixed.obj_map, {(0,): 0, (1,): 1})
        self.assertTrue(fixed.violations().ok)

    def test_substitute_identities(self):
        maximum = thin_functor(
            product([c2(), c2()]),
            c2(),
            {(x, y): max(x, y) for x in range(2) for y in range(2)},
        )
        ident = unary(identity_functor(c2()))
        self.assertEqual(substitute(maximum, [ident, ident]), maximum)


class TestTransformations(unittest.TestCase):
    def test_identity_transformation(self):
        f = thin_functor(c3(), c3(), {0: 0, 1: 1, 2: 1})
        alpha = identity_transformation(f)
        self.assertTrue(alpha.violations().ok)
        self.assertEqual(vertical(alpha, alpha), alpha)

    def test_naturality_failure(self):
        low = thin_functor(c2(), c2(), {0: 0, 1: 0})
        high = thin_functor(c2(), c2(), {0: 1, 1: 1})
        t = NatTransformation(low, high, {0: "0<=1", 1: "0<=1"})
        self.assertTrue(t.violations().ok)
        backwards = NatTransformation(high, low, {0: "0<=1", 1: "0<=1"})
        self.assertEqual(backwards.violations().laws(), ["component", "component"])

    def test_compose_whisker(self):
        f = thin_functor(c2(), c3(), {0: 0, 1: 2})
        g = thin_functor(c3(), c2(), {0: 0, 1: 1, 2: 1})
        gf = compose_whisker(CompositionKind.FUNCTOR, g, f)
        self.assertEqual(gf, compose_functors(g, f))
        alpha = identity_transformation(g)
        whiskered = compose_whisker(CompositionKind.WHISKER_LEFT, alpha, f)
        self.assertEqual(whiskered, identity_transformation(gf))


class TestPermutations(unittest.TestCase):
    def test_inverse(self):
        perm = (2, 0, 1)
        self.assertEqual(invert_perm(perm), (1, 2, 0))
        self.assertEqual(compose_perms(perm, invert_perm(perm)), (0, 1, 2))


@pytest.mark.parametrize(
    "n, max_weight, objects, morphisms",
    [
        [1, 1, 1, 1],
        [2, 1, 3, 5],
        [2, None, 3, 5],
        [3, 1, 4, 7],
        [3, None, 7, 19],
    ],
)  # type: ignore
def test_punctured_cube(n: int, max_weight, objects: int, morphisms: int) -> None:
    cube = punctured_cube(n, max_weight)
    assert len(cube.objects) == objects
    assert len(cube.morphisms) == morphisms
    assert (1,) * n not in cube.objects


class TestColimits(unittest.TestCase):
    def test_join_in_a_chain(self):
        diagram = thin_functor(
            punctured_cube(2), c3(), {(0, 0): 0, (1, 0): 1, (0, 1): 2}
        )
        colimiting = colimit(diagram)
        self.assertEqual(colimiting.apex, 2)
        self.assertEqual(
            factor(diagram, colimiting, Cocone(2, ("0<=2", "2<=2", "1<=2"))), "2<=2"
        )

    def test_join_in_boolean_square(self):
        b2 = boolean_square()
        diagram = thin_functor(
            punctured_cube(2), b2, {(0, 0): "0", (1, 0): "a", (0, 1): "b"}
        )
        self.assertEqual(colimit(diagram).apex, "1")

    def test_no_colimit(self):
        shape = discrete("two", ["x", "y"])
        ambient = discrete("D", ["p", "q"])
        diagram = Functor(
            shape,
            ambient,
            {"x": "p", "y": "q"},
            {("id", "x"): ("id", "p"), ("id", "y"): ("id", "q")},
        )
        with self.assertRaises(NoColimitException):
            colimit(diagram)
