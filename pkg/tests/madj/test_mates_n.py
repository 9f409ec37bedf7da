import unittest

import pytest

from cyclic_mates.madj.catalog import (
    chain,
    meet_adjunction,
    thin_functor,
    z2_multiplication,
)
from cyclic_mates.madj.fincat import (
    BoundaryMismatchException,
    Functor,
    identity_functor,
    opposite,
    opposite_functor,
)
from cyclic_mates.madj.mates_n import (
    InvalidAnchorException,
    TwoCell,
    check_mate_coherence,
    compose_cells,
    dual_cell,
    identity_cell,
    mate_n,
    mate_orbit,
    paste_horizontal,
    shift_cell,
    side_identity_cell,
    thin_cell,
    triangle_report,
    validate_two_cell,
)
from cyclic_mates.madj.multiadjoint import (
    compose_multi,
    from_mutual_left,
    identity_adjunction,
)
from tests.madj.fixtures import (
    c3,
    floor_adjunction,
    twisted_z2_multiplication,
    with_primary,
)


def h3():
    return chain(3, "H3")


def top_cell() -> TwoCell:
    """Meet to meet, with the output side sending everything to the top."""
    m = meet_adjunction(h3())
    top = thin_functor(h3(), h3(), {0: 2, 1: 2, 2: 2})
    same = identity_functor(opposite(h3()))
    return thin_cell(m, m, (top, same, same), 0)


class TestTwoCells(unittest.TestCase):
    def test_identity_cell(self):
        m = meet_adjunction(h3())
        self.assertTrue(validate_two_cell(identity_cell(m)).ok)
        self.assertTrue(validate_two_cell(identity_cell(m, 2)).ok)

    def test_thin_cell(self):
        t = top_cell()
        self.assertTrue(validate_two_cell(t).ok)
        self.assertEqual(t.components[(0, 0)], "0<=2")

    def test_bad_component(self):
        t = top_cell()
        broken = TwoCell(
            t.source,
            t.target,
            t.sides,
            0,
            {rest: "2<=2" for rest in t.components},
        )
        self.assertIn("component", validate_two_cell(broken).laws())

    def test_bad_anchor(self):
        t = top_cell()
        moved = TwoCell(t.source, t.target, t.sides, 3, t.components)
        self.assertEqual(validate_two_cell(moved).laws(), ["anchor"])

    def test_side_identity_cell(self):
        top = thin_functor(h3(), h3(), {0: 2, 1: 2, 2: 2})
        t = side_identity_cell(top)
        self.assertEqual(t.source, identity_adjunction(h3()))
        self.assertTrue(validate_two_cell(t).ok)

    def test_no_cell_available(self):
        m = meet_adjunction(h3())
        bottom = thin_functor(h3(), h3(), {0: 0, 1: 0, 2: 0})
        same = identity_functor(opposite(h3()))
        with self.assertRaises(BoundaryMismatchException):
            thin_cell(m, m, (bottom, same, same), 0)


class TestMates(unittest.TestCase):
    def test_mate_of_identity(self):
        m = meet_adjunction(h3())
        self.assertEqual(mate_n(identity_cell(m), 1), identity_cell(m, 1))

    def test_mates_are_cells(self):
        t = top_cell()
        for j in (1, 2):
            mate = mate_n(t, j)
            self.assertEqual(mate.anchor, j)
            self.assertTrue(validate_two_cell(mate).ok)
            self.assertEqual(mate_n(mate, 0), t)

    def test_orbit(self):
        orbit = mate_orbit(top_cell())
        self.assertEqual([t.anchor for t in orbit], [0, 1, 2])

    def test_shift_order(self):
        t = top_cell()
        shifted = shift_cell(t)
        self.assertEqual(shifted.anchor, 0)
        self.assertTrue(validate_two_cell(shifted).ok)
        self.assertEqual(shift_cell(shift_cell(shifted)), t)

    def test_dual(self):
        t = top_cell()
        dual = dual_cell(t)
        self.assertTrue(validate_two_cell(dual).ok)
        self.assertEqual(dual_cell(dual), t)
        self.assertEqual(mate_n(dual, 1), dual_cell(mate_n(t, 1)))

    def test_coherence(self):
        t = top_cell()
        m = meet_adjunction(h3())
        report = check_mate_coherence([t, identity_cell(m)], [(identity_cell(m), t)])
        self.assertTrue(report.ok, report)
        self.assertGreater(report.checked["transitivity"], 0)
        self.assertGreater(report.checked["double_mate_is_hat_mate"], 0)

    def test_triangles(self):
        self.assertTrue(triangle_report(meet_adjunction(h3())).ok)


@pytest.mark.parametrize("j", [0, -1, 3])  # type: ignore
def test_invalid_mate_target(j: int) -> None:
    with pytest.raises(InvalidAnchorException):
        mate_n(top_cell(), j)


class TestComposition(unittest.TestCase):
    def test_paste_with_identity(self):
        t = top_cell()
        m = meet_adjunction(h3())
        self.assertEqual(paste_horizontal(identity_cell(m), t), t)
        self.assertEqual(paste_horizontal(t, identity_cell(m)), t)

    def test_paste_needs_matching_anchors(self):
        m = meet_adjunction(h3())
        with self.assertRaises(BoundaryMismatchException):
            paste_horizontal(identity_cell(m, 1), top_cell())

    def test_compose_identities(self):
        m = meet_adjunction(h3())
        unit = identity_adjunction(opposite(h3()))
        composite = compose_cells(
            identity_cell(m), [identity_cell(m), identity_cell(unit)]
        )
        self.assertEqual(composite, identity_cell(compose_multi(m, [m, unit])))
        self.assertTrue(validate_two_cell(composite).ok)

    def test_compose_needs_anchor_zero(self):
        m = meet_adjunction(h3())
        unit = identity_adjunction(opposite(h3()))
        with self.assertRaises(InvalidAnchorException):
            compose_cells(identity_cell(m, 1), [identity_cell(m), identity_cell(unit)])

    def test_unary_composites_shift_in_reverse(self):
        m = from_mutual_left(floor_adjunction())
        top = thin_functor(c3(), c3(), {0: 2, 1: 2, 2: 2})
        alpha = thin_cell(m, m, (top, identity_functor(opposite(c3()))), 0)
        beta = thin_cell(m, m, (top, opposite_functor(top)), 0)
        lhs = shift_cell(compose_cells(beta, [alpha]))
        rhs = compose_cells(shift_cell(alpha), [shift_cell(beta)])
        self.assertTrue(validate_two_cell(lhs).ok)
        self.assertEqual(lhs, rhs)


class TestTwoElementGroup(unittest.TestCase):
    def test_triangles(self):
        report = triangle_report(z2_multiplication())
        self.assertTrue(report.ok, report)
        self.assertEqual(report.checked["generalized_triangle"], 6)
        self.assertTrue(triangle_report(twisted_z2_multiplication()).ok)

    def test_functor_on_morphisms_matters(self):
        twisted = twisted_z2_multiplication()
        f0 = twisted.funs[0]
        collapsed = Functor(
            f0.source, f0.target, f0.obj_map, {k: "e" for k in f0.mor_map}
        )
        mutant = with_primary(twisted, collapsed)
        self.assertIn("generalized_triangle", triangle_report(mutant).laws())
        report = check_mate_coherence([identity_cell(mutant)])
        self.assertFalse(report.ok)
        self.assertIn("generalized_triangle", report.laws())

    def test_mates_of_a_twisting_cell(self):
        m = z2_multiplication()
        cell = TwoCell(
            m,
            m,
            tuple(identity_functor(c) for c in m.cats),
            0,
            {("*", "*"): "s"},
        )
        self.assertTrue(validate_two_cell(cell).ok)
        orbit = mate_orbit(cell)
        self.assertEqual([t.anchor for t in orbit], [0, 1, 2])
        for t in orbit:
            self.assertEqual(set(t.components.values()), {"s"})
        report = check_mate_coherence([cell])
        self.assertTrue(report.ok, report)
