"""
The Leibniz construction: an n-variable functor induces one on arrow categories, sending
a tuple of arrows to the map out of the colimit of the punctured cube.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .adjoint1 import MutualLeftAdjunction, NotAdjointException, adjoint_search
from .fincat import (
    BoundaryMismatchException,
    Cocone,
    FinCategory,
    Functor,
    NoColimitException,
    arrow_category,
    colimit,
    factor,
    factors_of,
    opposite_functor,
    product,
    punctured_cube,
    restrict_functor,
)
from .multiadjoint import (
    AdjointKey,
    Chirality,
    MultiAdjunction,
    NaturalityFailureException,
    dualize,
    from_primary,
)
from .report import Report

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class Obstruction:
    """The induced map out of the punctured-cube colimit, an object of the arrow category."""

    morphism: Any
    colimit: Cocone
    codomain: Any
    diagram: Functor

    @property
    def domain(self) -> Any:
        return self.colimit.apex


def _vertex(
    factors: Sequence[FinCategory], arrows: Sequence[Any], e: Sequence[int]
) -> Tuple[Any, ...]:
    return tuple(
        c.tgt(a) if bit else c.src(a) for c, a, bit in zip(factors, arrows, e)
    )


def _edge(
    factors: Sequence[FinCategory],
    arrows: Sequence[Any],
    e: Sequence[int],
    d: Sequence[int],
) -> Tuple[Any, ...]:
    """The tuple of morphisms from vertex e to vertex d of the cube."""
    return tuple(
        a if x != y else c.identity(c.tgt(a) if x else c.src(a))
        for c, a, x, y in zip(factors, arrows, e, d)
    )


def cube_diagram(
    functor: Functor, arrows: Sequence[Any], full: bool = False
) -> Functor:
    """F applied to the punctured cube spanned by the arrows."""
    factors = factors_of(functor.source)
    if len(arrows) != len(factors):
        raise BoundaryMismatchException(
            f"{functor} takes {len(factors)} arrows, got {len(arrows)}"
        )
    for c, a in zip(factors, arrows):
        if not c.has_morphism(a):
            raise BoundaryMismatchException(f"{a!r} is not a morphism of {c.name}")
    shape = punctured_cube(len(factors), None if full else 1)
    return Functor(
        shape,
        functor.target,
        {e: functor.obj_map[_vertex(factors, arrows, e)] for e in shape.objects},
        {
            m.id: functor.mor_map[_edge(factors, arrows, m.src, m.tgt)]
            for m in shape.morphisms
        },
    )


def hat_morphism(
    functor: Functor, arrows: Sequence[Any], full: bool = False
) -> Obstruction:
    """
    The map from the colimit of F over the punctured cube of the arrows to
    F(tgt a_1, ..., tgt a_n). Raises NoColimitException when the colimit is missing.
    """
    factors = factors_of(functor.source)
    diagram = cube_diagram(functor, arrows, full)
    colimiting = colimit(diagram)
    top = (1,) * len(factors)
    codomain = functor.obj_map[_vertex(factors, arrows, top)]
    legs = tuple(
        functor.mor_map[_edge(factors, arrows, e, top)] for e in diagram.source.objects
    )
    morphism = factor(diagram, colimiting, Cocone(codomain, legs))
    LOG.debug("hat of %s at %r: %r", functor, tuple(arrows), morphism)
    return Obstruction(morphism, colimiting, codomain, diagram)


def _square(
    functor: Functor,
    first: Obstruction,
    second: Obstruction,
    squares: Sequence[Tuple[Any, Any, Any, Any]],
) -> Tuple[Any, Any, Any, Any]:
    """The square between two obstruction maps induced by a tuple of squares."""
    ambient = functor.target
    legs: List[Any] = []
    for e, leg in zip(first.diagram.source.objects, second.colimit.legs):
        parts = tuple(s[3] if bit else s[2] for s, bit in zip(squares, e))
        legs.append(ambient.compose(leg, functor.mor_map[parts]))
    top = functor.mor_map[tuple(s[3] for s in squares)]
    bottom = factor(first.diagram, first.colimit, Cocone(second.domain, tuple(legs)))
    return (first.morphism, second.morphism, bottom, top)


def hat_functor(functor: Functor, full: bool = False) -> Functor:
    """F-hat from the product of the arrow categories of the factors to that of the target."""
    factors = factors_of(functor.source)
    source = product([arrow_category(c).category for c in factors])
    target = arrow_category(functor.target).category
    hats: Dict[Any, Obstruction] = {
        arrows: hat_morphism(functor, arrows, full) for arrows in source.objects
    }
    mor_map: Dict[Any, Any] = {}
    for m in source.morphisms:
        square = _square(functor, hats[m.src], hats[m.tgt], m.id)
        if not target.has_morphism(square):
            raise BoundaryMismatchException(f"{square!r} does not commute")
        mor_map[m.id] = square
    return Functor(
        source,
        target,
        {arrows: h.morphism for arrows, h in hats.items()},
        mor_map,
    )


def hat_adjoint_check(functor: Functor, full: bool = False) -> Report:
    """
    Whether F-hat has a right adjoint in each variable with the others fixed; when it
    does, the adjoints are assembled into an n-variable adjunction and checked.
    """
    report = Report(f"hat of {functor}")
    try:
        hat = hat_functor(functor, full)
    except NoColimitException as e:
        report.skip(f"colimit missing: {e}")
        return report
    report.extend(hat.violations())
    if not report.ok:
        return report

    primary = opposite_functor(hat)
    factors = factors_of(primary.source)
    n = len(factors)
    adjoints: Dict[AdjointKey, MutualLeftAdjunction] = {}
    for k in range(1, n + 1):
        others_objects = [factors[idx].objects for idx in range(n) if idx != k - 1]
        for rest in itertools.product(*others_objects):
            values = list(rest)
            values.insert(k - 1, None)
            restricted = restrict_functor(primary, k - 1, values)
            try:
                adjoints[(k, tuple(rest))] = adjoint_search(restricted)
                report.check("hat_adjoint", True, k, rest)
            except NotAdjointException as e:
                report.fail(
                    "hat_adjoint", k, rest, detail=f"no adjoint at {e.witness!r}"
                )
    if not report.ok:
        return report
    assembled = _assemble(primary, adjoints, report)
    if assembled is not None:
        LOG.debug("hat of %s assembles into %s", functor, assembled.name)
    return report


def _assemble(
    primary: Functor,
    adjoints: Dict[AdjointKey, MutualLeftAdjunction],
    report: Report,
) -> Optional[MultiAdjunction]:
    try:
        m = from_primary(primary, adjoints)
    except NaturalityFailureException as e:
        report.extend(e.report)
        return None
    report.check("hat_assembles", True, m.name)
    return m


def hat_preserves_adjunction_check(m: MultiAdjunction, full: bool = False) -> Report:
    """
    hat_adjoint_check on the functor A_1 x ... x A_n -> A_0 of the adjunction, read with
    right adjoints in every variable.
    """
    left = m if m.chirality is Chirality.LEFT else dualize(m)
    return hat_adjoint_check(dualize(left).funs[0], full)
