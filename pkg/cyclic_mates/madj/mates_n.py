"""
2-cells between multivariable adjunctions and the cyclic action of mates on them.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from .adjoint1 import mate_component, verify_mutual_left
from .fincat import (
    BoundaryMismatchException,
    Functor,
    NatTransformation,
    compose_functors,
    identity_functor,
    opposite_functor,
    product_functor,
)
from .multiadjoint import (
    Chirality,
    MultiAdjunction,
    compose_multi,
    cyclic_shift,
    dualize,
    full_tuple,
    identity_adjunction,
    one_variable,
    others,
    rotate,
)
from .report import MadjException, Report

LOG = logging.getLogger(__name__)


class InvalidAnchorException(MadjException):
    pass


@dataclass(frozen=True, eq=False)
class TwoCell:
    """
    A 2-cell between multivariable adjunctions with the same arity.

    sides[k]: source.cats[k] -> target.cats[k]
    anchor: the slot i whose functors the components relate
    components: for each tuple of the other slots' objects, a morphism
        F'_i(S(...)) -> S_i(F_i(...)) of target.cats[i]
    """

    source: MultiAdjunction
    target: MultiAdjunction
    sides: Tuple[Functor, ...]
    anchor: int
    components: Mapping[Tuple[Any, ...], Any]

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, TwoCell):
            return NotImplemented
        return (
            self.anchor == other.anchor
            and self.components == other.components
            and self.sides == other.sides
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self) -> int:
        return hash((self.anchor, hash(self.source), hash(self.target)))

    def __str__(self) -> str:
        return self.name

    @property
    def name(self) -> str:
        return f"cell@{self.anchor}({self.source.name} => {self.target.name})"

    @property
    def size(self) -> int:
        return len(self.sides)

    def image(self, t: Sequence[Any]) -> Tuple[Any, ...]:
        """S applied to a full tuple of source objects."""
        return tuple(s.obj_map[x] for s, x in zip(self.sides, t))


def cell_transformation(t: TwoCell) -> NatTransformation:
    """The cell as a natural transformation into the opposite of the anchor's target category."""
    i = t.anchor
    return NatTransformation(
        compose_functors(opposite_functor(t.sides[i]), t.source.funs[i]),
        compose_functors(t.target.funs[i], product_functor(others(t.sides, i))),
        t.components,
    )


def validate_two_cell(t: TwoCell) -> Report:
    if t.source.chirality is Chirality.RIGHT:
        return validate_two_cell(dual_cell(t))
    report = Report(f"2-cell {t.name}")
    size = t.size
    report.check(
        "arity",
        t.source.size == size and t.target.size == size,
        t.source.n,
        t.target.n,
    )
    report.check("anchor", 0 <= t.anchor < size, t.anchor)
    if not report.ok:
        return report
    for k, s in enumerate(t.sides):
        report.check(
            "side_boundary",
            s.source == t.source.cats[k] and s.target == t.target.cats[k],
            k,
        )
    if not report.ok:
        return report
    for s in t.sides:
        report.extend(s.violations())
    if not report.ok:
        return report
    report.extend(cell_transformation(t).violations())
    return report


def _untransport(m: MultiAdjunction, i: int, j: int, t: Sequence[Any], k: Any) -> Any:
    """The element of slot i's hom-set sent to k by hom_iso(i, j, t)."""
    perm = m.hom_iso(i, j, t)
    return m.hom(i, t)[perm.index(m.cats[j].position(k))]


def mate_n(t: TwoCell, j: int) -> TwoCell:
    """
    The mate of t anchored at slot j: with the slots other than the anchor i and j
    fixed, the 1-variable mate of t along the adjunction between slots i and j.
    """
    if t.source.chirality is Chirality.RIGHT:
        return dual_cell(mate_n(dual_cell(t), j))
    size = t.size
    i = t.anchor
    if j == i or not 0 <= j < size:
        raise InvalidAnchorException(
            f"cannot move the anchor of {t.name} from {i} to {j}"
        )
    src, tgt = t.source, t.target
    side = t.sides[i]
    target_cat = tgt.cats[i]
    components: Dict[Tuple[Any, ...], Any] = {}
    for rest in itertools.product(*(c.objects for c in others(src.cats, j))):
        x = src.funs[j].obj_map[rest]
        full = full_tuple(size, j, rest, x)
        counit = _untransport(src, i, j, full, src.cats[j].identity(x))
        e = mate_component(target_cat, counit, t.components[others(full, i)], side)
        components[rest] = tgt.transport(i, j, t.image(full), e)
    return TwoCell(src, tgt, t.sides, j, components)


def mate_orbit(t: TwoCell) -> List[TwoCell]:
    """t followed by the successive mates moving the anchor forward one slot at a time."""
    orbit = [t]
    current = t
    for _ in range(t.size - 1):
        current = mate_n(current, (current.anchor + 1) % t.size)
        orbit.append(current)
    return orbit


def rotate_cell(t: TwoCell) -> TwoCell:
    """Relabel slot k+1 as slot k on both adjunctions; components are unchanged."""
    return TwoCell(
        cyclic_shift(t.source),
        cyclic_shift(t.target),
        rotate(t.sides),
        (t.anchor - 1) % t.size,
        t.components,
    )


def shift_cell(t: TwoCell) -> TwoCell:
    """The cyclic action on 2-cells: mate to the next slot, then rotate."""
    if t.size == 1:
        return t
    return rotate_cell(mate_n(t, (t.anchor + 1) % t.size))


def dual_cell(t: TwoCell) -> TwoCell:
    return TwoCell(
        dualize(t.source),
        dualize(t.target),
        tuple(opposite_functor(s) for s in t.sides),
        t.anchor,
        t.components,
    )


def identity_cell(m: MultiAdjunction, anchor: int = 0) -> TwoCell:
    f = m.funs[anchor]
    c = m.cats[anchor]
    return TwoCell(
        m,
        m,
        tuple(identity_functor(x) for x in m.cats),
        anchor,
        {a: c.identity(b) for a, b in f.obj_map.items()},
    )


def side_identity_cell(s: Functor) -> TwoCell:
    """The identity 2-cell on a functor, between the identity adjunctions of its endpoints."""
    source = identity_adjunction(s.source)
    target = identity_adjunction(s.target)
    c = target.cats[0]
    return TwoCell(
        source,
        target,
        (opposite_functor(s), s),
        0,
        {(a,): c.identity(b) for a, b in s.obj_map.items()},
    )


def thin_cell(
    source: MultiAdjunction,
    target: MultiAdjunction,
    sides: Sequence[Functor],
    anchor: int = 0,
) -> TwoCell:
    """The cell whose components are the unique morphisms available; thin categories only."""
    sides = tuple(sides)
    f, g = source.funs[anchor], target.funs[anchor]
    c = target.cats[anchor]
    components: Dict[Tuple[Any, ...], Any] = {}
    for rest, x in f.obj_map.items():
        moved = tuple(s.obj_map[y] for s, y in zip(others(sides, anchor), rest))
        hom = c.hom(g.obj_map[moved], sides[anchor].obj_map[x])
        if len(hom) != 1:
            raise BoundaryMismatchException(
                f"{len(hom)} candidate components at {rest!r} in {c.name}"
            )
        components[rest] = hom[0]
    return TwoCell(source, target, sides, anchor, components)


def paste_horizontal(beta: TwoCell, alpha: TwoCell) -> TwoCell:
    """beta * alpha for alpha: m => m' and beta: m' => m'', with components T(alpha)∘beta_S."""
    if alpha.target != beta.source or alpha.anchor != beta.anchor:
        raise BoundaryMismatchException(f"cannot paste {beta.name} after {alpha.name}")
    i = alpha.anchor
    c = beta.target.cats[i]
    t_side = beta.sides[i]
    components = {
        rest: c.compose(
            t_side.mor_map[a],
            beta.components[
                tuple(s.obj_map[y] for s, y in zip(others(alpha.sides, i), rest))
            ],
        )
        for rest, a in alpha.components.items()
    }
    return TwoCell(
        alpha.source,
        beta.target,
        tuple(compose_functors(t, s) for t, s in zip(beta.sides, alpha.sides)),
        i,
        components,
    )


def compose_cells(beta: TwoCell, alphas: Sequence[TwoCell]) -> TwoCell:
    """
    Vertical multicomposition of cells anchored at 0, over compose_multi of their
    boundaries: components beta_{(F_i0(a_i))} ∘ G'_0((alpha_i)).
    """
    if beta.anchor != 0 or any(a.anchor != 0 for a in alphas):
        raise InvalidAnchorException("vertical composition needs cells anchored at 0")
    if len(alphas) != beta.size - 1:
        raise BoundaryMismatchException(
            f"{beta.name} takes {beta.size - 1} cells, got {len(alphas)}"
        )
    for i, alpha in enumerate(alphas, start=1):
        if beta.sides[i] != opposite_functor(alpha.sides[0]):
            raise BoundaryMismatchException(
                f"side {i} of {beta.name} is not the output side of {alpha.name}"
            )
    source = compose_multi(beta.source, [a.source for a in alphas])
    target = compose_multi(beta.target, [a.target for a in alphas])
    sides = (beta.sides[0],) + tuple(s for a in alphas for s in a.sides[1:])
    outer = beta.target.funs[0]
    c = beta.target.cats[0]
    components: Dict[Tuple[Any, ...], Any] = {}
    for flat in itertools.product(*(x.objects for x in source.cats[1:])):
        chunks: List[Tuple[Any, ...]] = []
        start = 0
        for a in alphas:
            chunks.append(tuple(flat[start : start + a.size - 1]))
            start += a.size - 1
        b = tuple(a.source.funs[0].obj_map[ch] for a, ch in zip(alphas, chunks))
        moved = tuple(a.components[ch] for a, ch in zip(alphas, chunks))
        components[flat] = c.compose(beta.components[b], outer.mor_map[moved])
    return TwoCell(source, target, sides, 0, components)


def triangle_report(m: MultiAdjunction) -> Report:
    """
    Triangle identities of the 1-variable adjunction between every pair of slots, and
    for every ordered triple (i, j, k) of distinct slots: the counit in slot i of the
    adjunction between i and j equals the counit between i and k after F_i applied to
    the counit in slot k of the adjunction between k and j.
    """
    if m.chirality is Chirality.RIGHT:
        return triangle_report(dualize(m))
    report = Report(f"triangle identities of {m.name}")
    size = m.size
    tuples = list(m.tuples())
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            seen: set[Tuple[Any, ...]] = set()
            for t in tuples:
                fixed = tuple(x for k, x in enumerate(t) if k not in (i, j))
                if fixed in seen:
                    continue
                seen.add(fixed)
                one = verify_mutual_left(one_variable(m, i, j, t))
                for v in one.violations:
                    report.fail("triangle", i, j, t, detail=v.law)
                if one.ok:
                    report.check("triangle", True, i, j, t)
    for i, j, k in itertools.permutations(range(size), 3):
        for t in tuples:
            x = m.funs[j].obj_map[others(t, j)]
            t1 = t[:j] + (x,) + t[j + 1 :]
            identity = m.cats[j].identity(x)
            counit = _untransport(m, i, j, t1, identity)
            y = m.funs[k].obj_map[others(t1, k)]
            t2 = t1[:k] + (y,) + t1[k + 1 :]
            inner = _untransport(m, k, j, t1, identity)
            outer = _untransport(m, i, k, t2, m.cats[k].identity(y))
            try:
                holds = (
                    m.cats[i].compose(outer, m.slot_morphism(i, k, t1, inner))
                    == counit
                )
            except BoundaryMismatchException:
                holds = False
            report.check("generalized_triangle", holds, i, j, k, t)
    return report


def check_mate_coherence(
    cells: Sequence[TwoCell],
    horizontal_pairs: Sequence[Tuple[TwoCell, TwoCell]] = (),
) -> Report:
    """Involution, transitivity and orbit closure of mates, plus the triangle identities."""
    report = Report("mate coherence")
    boundaries: List[MultiAdjunction] = []
    for t in cells:
        report.extend(validate_two_cell(t))
        i, size = t.anchor, t.size
        mates = {j: mate_n(t, j) for j in range(size) if j != i}
        for j, m_j in mates.items():
            report.check("pairwise_involution", mate_n(m_j, i) == t, t.name, j)
            for k in range(size):
                if k in (i, j):
                    continue
                holds = mate_n(m_j, k) == mates[k]
                report.check("transitivity", holds, t.name, j, k)
                if size == 3 and (i, j, k) == (0, 1, 2):
                    report.check("double_mate_is_hat_mate", holds, t.name)
        orbit = mate_orbit(t)
        if size > 1:
            report.check("orbit_closes", mate_n(orbit[-1], i) == t, t.name)
        shifted = t
        for _ in range(size):
            shifted = shift_cell(shifted)
        report.check("sigma_order", shifted == t, t.name)
        for m in (t.source, t.target):
            if m not in boundaries:
                boundaries.append(m)
    for beta, alpha in horizontal_pairs:
        pasted = paste_horizontal(beta, alpha)
        for j in range(alpha.size):
            if j == alpha.anchor:
                continue
            report.check(
                "horizontal_composition",
                mate_n(pasted, j)
                == paste_horizontal(mate_n(beta, j), mate_n(alpha, j)),
                beta.name,
                alpha.name,
                j,
            )
    for m in boundaries:
        report.extend(triangle_report(m))
    LOG.debug(
        "Mate coherence over %d cells: %d violations",
        len(cells),
        len(report.violations),
    )
    return report
