"""
Finite (arity-truncated) multicategories, cyclic structures on them, and the cyclic
double multicategory of multivariable adjunctions.
"""
from __future__ import annotations

import itertools
import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import (
    Any,
    Callable,
    Dict,
    Generic,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
)

from .const import ARITY_BOUND_DEFAULT
from .fincat import (
    FinCategory,
    Functor,
    SizeOverflowException,
    compose_functors,
    identity_functor,
    max_size,
    opposite,
    opposite_functor,
)
from .mates_n import (
    InvalidAnchorException,
    TwoCell,
    check_mate_coherence,
    compose_cells,
    dual_cell,
    identity_cell,
    mate_n,
    paste_horizontal,
    shift_cell,
    side_identity_cell,
)
from .multiadjoint import (
    MultiAdjunction,
    compose_multi,
    cyclic_shift,
    dualize,
    identity_adjunction,
    verify_cycle,
)
from .report import MadjException, Report, jsonable

LOG = logging.getLogger(__name__)

Ob = TypeVar("Ob")
Mor = TypeVar("Mor")


class UniverseNotClosedException(MadjException):
    def __init__(self, witness: str):
        super().__init__(witness)
        self.witness = witness

    def __str__(self) -> str:
        return json.dumps({"not_closed": jsonable(self.witness)})


def materialize(
    multimaps: Iterable[Mor], bound: Optional[int] = None
) -> Tuple[Mor, ...]:
    """Collect a generator of multimaps, rejecting it when it does not stop within the size bound."""
    limit = max_size() if bound is None else bound
    collected = tuple(itertools.islice(multimaps, limit + 1))
    if len(collected) > limit:
        raise SizeOverflowException(f"more than {limit} multimaps: not finite")
    return collected


@dataclass(frozen=True, eq=False)
class FinMulticategory(Generic[Ob, Mor]):
    """
    A multicategory truncated at arity_bound.

    Parameters
    ----------
    inputs, output: the typing of a multimap
    identity: the unary identity on an object
    compose: compose(g, [f_1, ..., f_k]) substitutes every f_i into input i of g
    closed: whether composites within the arity bound must be among multimaps
    """

    name: str
    objects: Tuple[Ob, ...]
    multimaps: Tuple[Mor, ...]
    inputs: Callable[[Mor], Tuple[Ob, ...]]
    output: Callable[[Mor], Ob]
    identity: Callable[[Ob], Mor]
    compose: Callable[[Mor, Sequence[Mor]], Mor]
    arity_bound: int = ARITY_BOUND_DEFAULT
    closed: bool = True

    def arity(self, f: Mor) -> int:
        return len(self.inputs(f))

    def with_output(self, o: Ob) -> List[Mor]:
        return [f for f in self.multimaps if self.output(f) == o]

    @cached_property
    def _by_output(self) -> List[Tuple[Ob, List[Mor]]]:
        groups: List[Tuple[Ob, List[Mor]]] = []
        for o in self.objects:
            groups.append((o, self.with_output(o)))
        return groups

    def producers(self, o: Ob) -> List[Mor]:
        for x, fs in self._by_output:
            if x == o:
                return fs
        return []

    def partial(self, g: Mor, i: int, f: Mor) -> Mor:
        """g ∘_i f: f substituted into input i (1-based), identities elsewhere."""
        return self.compose(
            g,
            [
                f if k == i else self.identity(x)
                for k, x in enumerate(self.inputs(g), start=1)
            ],
        )

    def families(
        self, g: Mor, bound: Optional[int] = None
    ) -> Iterator[Tuple[Mor, ...]]:
        """Every list of multimaps composable into g whose composite stays within the bound."""
        limit = self.arity_bound if bound is None else bound
        choices = [self.producers(x) for x in self.inputs(g)]

        def extend(k: int, remaining: int) -> Iterator[Tuple[Mor, ...]]:
            if k == len(choices):
                yield ()
                return
            for f in choices[k]:
                n = self.arity(f)
                if n <= remaining:
                    for tail in extend(k + 1, remaining - n):
                        yield (f,) + tail

        yield from extend(0, limit)


@dataclass(frozen=True, eq=False)
class CyclicStructure(Generic[Ob, Mor]):
    """An involution on objects and the cyclic action on multimaps."""

    star: Callable[[Ob], Ob]
    sigma: Callable[[Mor], Mor]


def _named(x: Any) -> Any:
    return getattr(x, "name", x)


def check_multicategory(
    mc: FinMulticategory[Any, Any], bound: Optional[int] = None
) -> Report:
    limit = mc.arity_bound if bound is None else bound
    report = Report(f"multicategory {mc.name}")
    for f in mc.multimaps:
        report.check(
            "typing",
            all(x in mc.objects for x in mc.inputs(f)) and mc.output(f) in mc.objects,
            _named(f),
        )
    for x in mc.objects:
        i = mc.identity(x)
        report.check(
            "identity_typing",
            mc.inputs(i) == (x,) and mc.output(i) == x,
            _named(x),
        )
    if not report.ok:
        return report

    for f in mc.multimaps:
        report.check(
            "left_unit", mc.compose(mc.identity(mc.output(f)), [f]) == f, _named(f)
        )
        report.check(
            "right_unit",
            mc.compose(f, [mc.identity(x) for x in mc.inputs(f)]) == f,
            _named(f),
        )

    for g in mc.multimaps:
        if mc.arity(g) == 0:
            continue
        for fs in mc.families(g, limit):
            composite = mc.compose(g, list(fs))
            report.check(
                "composite_typing",
                mc.inputs(composite) == tuple(x for f in fs for x in mc.inputs(f))
                and mc.output(composite) == mc.output(g),
                _named(g),
            )
            if mc.closed:
                report.check("closure", composite in mc.multimaps, _named(g))
            stepwise = g
            for i in range(len(fs), 0, -1):
                stepwise = mc.partial(stepwise, i, fs[i - 1])
            report.check("substitution", composite == stepwise, _named(g))

    for g in mc.multimaps:
        m = mc.arity(g)
        for i, x in enumerate(mc.inputs(g), start=1):
            for f in mc.producers(x):
                n = mc.arity(f)
                if m - 1 + n > limit:
                    continue
                gf = mc.partial(g, i, f)
                for j, y in enumerate(mc.inputs(f), start=1):
                    for h in mc.producers(y):
                        if m - 2 + n + mc.arity(h) > limit:
                            continue
                        report.check(
                            "sequential_associativity",
                            mc.partial(gf, i + j - 1, h)
                            == mc.partial(g, i, mc.partial(f, j, h)),
                            _named(g),
                            i,
                            j,
                        )
                for j in range(i + 1, m + 1):
                    for h in mc.producers(mc.inputs(g)[j - 1]):
                        if m - 2 + n + mc.arity(h) > limit:
                            continue
                        report.check(
                            "parallel_associativity",
                            mc.partial(gf, j + n - 1, h)
                            == mc.partial(mc.partial(g, j, h), i, f),
                            _named(g),
                            i,
                            j,
                        )
    LOG.debug("%s: %s", mc.name, report.checked)
    return report


def check_cyclic(
    mc: FinMulticategory[Any, Any],
    cs: CyclicStructure[Any, Any],
    bound: Optional[int] = None,
) -> Report:
    """
    The cyclic multicategory axioms: star is an involution, sigma has the right typing
    and order n+1 on n-ary maps, fixes identities up to star, and interacts with
    composition in the first and in later inputs.
    """
    limit = mc.arity_bound if bound is None else bound
    report = Report(f"cyclic structure on {mc.name}")
    for x in mc.objects:
        xs = cs.star(x)
        report.check(
            "star_involution", xs in mc.objects and cs.star(xs) == x, _named(x)
        )
        report.check(
            "identity_preserved",
            cs.sigma(mc.identity(x)) == mc.identity(xs),
            _named(x),
        )

    images: Dict[int, List[Any]] = {}
    for index, f in enumerate(mc.multimaps):
        ins, out = mc.inputs(f), mc.output(f)
        sf = cs.sigma(f)
        images[index] = [sf]
        if not ins:
            report.check("sigma_nullary", sf == f, _named(f))
            continue
        report.check(
            "sigma_typing",
            mc.inputs(sf) == ins[1:] + (cs.star(out),)
            and mc.output(sf) == cs.star(ins[0]),
            _named(f),
        )
        power = sf
        for _ in range(len(ins)):
            power = cs.sigma(power)
        report.check("sigma_order", power == f, _named(f), len(ins) + 1)
    if mc.closed:
        image_list = [fs[0] for fs in images.values()]
        for index, sf in enumerate(image_list):
            report.check(
                "sigma_bijective",
                sf in mc.multimaps and sf not in image_list[:index],
                _named(mc.multimaps[index]),
            )

    for g in mc.multimaps:
        ins = mc.inputs(g)
        m = len(ins)
        for i, x in enumerate(ins, start=1):
            for f in mc.producers(x):
                n = mc.arity(f)
                if m - 1 + n > limit or m - 1 + n == 0:
                    continue
                composite = cs.sigma(mc.partial(g, i, f))
                if i == 1:
                    if n == 0:
                        continue
                    report.check(
                        "sigma_composition_first",
                        composite == mc.partial(cs.sigma(f), n, cs.sigma(g)),
                        _named(g),
                        _named(f),
                    )
                else:
                    report.check(
                        "sigma_composition_later",
                        composite == mc.partial(cs.sigma(g), i - 1, f),
                        _named(g),
                        i,
                        _named(f),
                    )
    LOG.debug("cyclic %s: %s", mc.name, report.checked)
    return report


@dataclass(frozen=True, eq=False)
class Universe:
    """The explicit finite data a cyclic double multicategory of adjunctions is built from."""

    cats: Tuple[FinCategory, ...]
    functors: Tuple[Functor, ...] = ()
    madjs: Tuple[MultiAdjunction, ...] = ()
    twocells: Tuple[TwoCell, ...] = ()
    arity_bound: int = ARITY_BOUND_DEFAULT


@dataclass(frozen=True, eq=False)
class CyclicDoubleMulticategory:
    """
    vertical: 0-cells and vertical 1-cells (the multivariable adjunctions)
    cells: horizontal 1-cells (functors) as objects and 2-cells as multimaps
    source, target, unit, gamma: the structure maps, each given on objects and on
        multimaps
    """

    name: str
    vertical: FinMulticategory[Any, Any]
    vertical_cyclic: CyclicStructure[Any, Any]
    cells: FinMulticategory[Any, Any]
    cells_cyclic: CyclicStructure[Any, Any]
    source_obj: Callable[[Any], Any]
    source_map: Callable[[Any], Any]
    target_obj: Callable[[Any], Any]
    target_map: Callable[[Any], Any]
    unit_obj: Callable[[Any], Any]
    unit_map: Callable[[Any], Any]
    gamma_obj: Callable[[Any, Any], Any]
    gamma_map: Callable[[Any, Any], Any]
    pasting: Tuple[Tuple[Any, Any], ...] = field(default=())

    @property
    def arity_bound(self) -> int:
        return self.vertical.arity_bound


def _add(items: List[Any], x: Any) -> bool:
    if x in items:
        return False
    items.append(x)
    return True


def build_madj(universe: Universe) -> CyclicDoubleMulticategory:
    """
    The cyclic double multicategory of multivariable adjunctions on a finite universe.
    Identity functors, identity adjunctions, unit cells and cyclic orbits are added;
    opposites and boundaries must already be present.
    """
    cats = list(universe.cats)
    for c in cats:
        if opposite(c) not in cats:
            raise UniverseNotClosedException(f"opposite of {c.name}")

    functors = list(universe.functors)
    for c in cats:
        _add(functors, identity_functor(c))
    for f in functors:
        if f.source not in cats or f.target not in cats:
            raise UniverseNotClosedException(f"endpoints of {f}")
        if opposite_functor(f) not in functors:
            raise UniverseNotClosedException(f"opposite of {f}")

    madjs: List[MultiAdjunction] = []
    for m in universe.madjs:
        if m.n > universe.arity_bound:
            raise UniverseNotClosedException(f"{m.name} exceeds the arity bound")
        for c in m.cats:
            if c not in cats:
                raise UniverseNotClosedException(f"{c.name} used by {m.name}")
        current = m
        while _add(madjs, current):
            current = cyclic_shift(current)
    for c in cats:
        _add(madjs, identity_adjunction(c))

    twocells: List[TwoCell] = []
    for t in universe.twocells:
        if t.anchor != 0:
            t = mate_n(t, 0)
        if t.source not in madjs or t.target not in madjs:
            raise UniverseNotClosedException(f"boundary of {t.name}")
        for s in t.sides:
            if s not in functors:
                raise UniverseNotClosedException(f"side {s} of {t.name}")
        current = t
        while _add(twocells, current):
            current = shift_cell(current)
    for m in madjs:
        _add(twocells, identity_cell(m))
    for f in functors:
        _add(twocells, side_identity_cell(f))

    pasting = tuple(
        (beta, alpha)
        for alpha in twocells
        for beta in twocells
        if alpha.target == beta.source
    )
    LOG.debug(
        "Universe: %d categories, %d functors, %d adjunctions, %d cells",
        len(cats),
        len(functors),
        len(madjs),
        len(twocells),
    )
    vertical: FinMulticategory[FinCategory, MultiAdjunction] = FinMulticategory(
        "MAdj",
        tuple(cats),
        tuple(madjs),
        lambda m: m.cats[1:],
        lambda m: opposite(m.cats[0]),
        identity_adjunction,
        compose_multi,
        universe.arity_bound,
        closed=False,
    )
    cells: FinMulticategory[Functor, TwoCell] = FinMulticategory(
        "MAdj cells",
        tuple(functors),
        tuple(twocells),
        lambda t: t.sides[1:],
        lambda t: opposite_functor(t.sides[0]),
        side_identity_cell,
        compose_cells,
        universe.arity_bound,
        closed=False,
    )
    return CyclicDoubleMulticategory(
        "MAdj",
        vertical,
        CyclicStructure(opposite, cyclic_shift),
        cells,
        CyclicStructure(opposite_functor, shift_cell),
        lambda f: f.source,
        lambda t: t.source,
        lambda f: f.target,
        lambda t: t.target,
        identity_functor,
        identity_cell,
        compose_functors,
        paste_horizontal,
        pasting,
    )


def _transport_cell(t: TwoCell, anchor: int) -> TwoCell:
    return t if t.anchor == anchor else mate_n(t, anchor)


def conjugate(
    d: CyclicDoubleMulticategory,
    name: str,
    cat_to: Callable[[Any], Any],
    madj_to: Callable[[Any], Any],
    functor_to: Callable[[Any], Any],
    cell_to: Callable[[Any], Any],
    cat_back: Callable[[Any], Any],
    madj_back: Callable[[Any], Any],
    functor_back: Callable[[Any], Any],
    cell_back: Callable[[Any], Any],
) -> CyclicDoubleMulticategory:
    """Transport every piece of structure of d along a pair of mutually inverse relabellings."""
    a, b = d.vertical, d.cells
    vertical: FinMulticategory[Any, Any] = FinMulticategory(
        a.name,
        tuple(cat_to(x) for x in a.objects),
        tuple(madj_to(m) for m in a.multimaps),
        lambda m: tuple(cat_to(x) for x in a.inputs(madj_back(m))),
        lambda m: cat_to(a.output(madj_back(m))),
        lambda x: madj_to(a.identity(cat_back(x))),
        lambda g, fs: madj_to(a.compose(madj_back(g), [madj_back(f) for f in fs])),
        a.arity_bound,
        a.closed,
    )
    cells: FinMulticategory[Any, Any] = FinMulticategory(
        b.name,
        tuple(functor_to(f) for f in b.objects),
        tuple(cell_to(t) for t in b.multimaps),
        lambda t: tuple(functor_to(f) for f in b.inputs(cell_back(t))),
        lambda t: functor_to(b.output(cell_back(t))),
        lambda f: cell_to(b.identity(functor_back(f))),
        lambda g, fs: cell_to(b.compose(cell_back(g), [cell_back(f) for f in fs])),
        b.arity_bound,
        b.closed,
    )
    return CyclicDoubleMulticategory(
        name,
        vertical,
        CyclicStructure(
            lambda x: cat_to(d.vertical_cyclic.star(cat_back(x))),
            lambda m: madj_to(d.vertical_cyclic.sigma(madj_back(m))),
        ),
        cells,
        CyclicStructure(
            lambda f: functor_to(d.cells_cyclic.star(functor_back(f))),
            lambda t: cell_to(d.cells_cyclic.sigma(cell_back(t))),
        ),
        lambda f: cat_to(d.source_obj(functor_back(f))),
        lambda t: madj_to(d.source_map(cell_back(t))),
        lambda f: cat_to(d.target_obj(functor_back(f))),
        lambda t: madj_to(d.target_map(cell_back(t))),
        lambda x: functor_to(d.unit_obj(cat_back(x))),
        lambda m: cell_to(d.unit_map(madj_back(m))),
        lambda g, f: functor_to(d.gamma_obj(functor_back(g), functor_back(f))),
        lambda beta, alpha: cell_to(d.gamma_map(cell_back(beta), cell_back(alpha))),
        tuple((cell_to(beta), cell_to(alpha)) for beta, alpha in d.pasting),
    )


def _same(x: Any) -> Any:
    return x


def reindex_w(
    d: CyclicDoubleMulticategory, w: Mapping[int, int]
) -> CyclicDoubleMulticategory:
    """
    Re-anchor every n-ary 2-cell at slot w[n] (0 when absent) by mates; the structure
    maps are transported along the same bijections.
    """
    for n, anchor in w.items():
        if not 0 <= anchor <= n:
            raise InvalidAnchorException(f"anchor {anchor} for arity {n}")

    def to_w(t: TwoCell) -> TwoCell:
        return _transport_cell(t, w.get(t.size - 1, 0))

    def to_zero(t: TwoCell) -> TwoCell:
        return _transport_cell(t, 0)

    return conjugate(
        d,
        f"{d.name}_w",
        _same,
        _same,
        _same,
        to_w,
        _same,
        _same,
        _same,
        to_zero,
    )


def lr_duality(d: CyclicDoubleMulticategory) -> CyclicDoubleMulticategory:
    """The isomorphic instance built from right adjunctions: everything passes to its opposite."""
    name = d.name[:-2] if d.name.endswith("_R") else f"{d.name}_R"
    return conjugate(
        d,
        name,
        opposite,
        dualize,
        opposite_functor,
        dual_cell,
        opposite,
        dualize,
        opposite_functor,
        dual_cell,
    )


def check_category_object(
    d: CyclicDoubleMulticategory, bound: Optional[int] = None
) -> Report:
    """
    The structure maps are maps of cyclic multicategories, horizontal composition is
    associative and unital, and the six compatibilities of source, target, unit and
    horizontal composition with the involution and the cyclic action hold, together
    with interchange.
    """
    limit = d.arity_bound if bound is None else bound
    a, b = d.vertical, d.cells
    sa, sb = d.vertical_cyclic, d.cells_cyclic
    report = Report(f"category object {d.name}")

    for f in b.objects:
        for law, end in (("cdm_law_1", d.source_obj), ("cdm_law_1", d.target_obj)):
            report.check(law, end(sb.star(f)) == sa.star(end(f)), str(f))
        report.check(
            "source_identity",
            d.source_map(b.identity(f)) == a.identity(d.source_obj(f))
            and d.target_map(b.identity(f)) == a.identity(d.target_obj(f)),
            str(f),
        )
    for x in a.objects:
        report.check(
            "unit_boundary",
            d.source_obj(d.unit_obj(x)) == x and d.target_obj(d.unit_obj(x)) == x,
            _named(x),
        )
        report.check(
            "cdm_law_2", d.unit_obj(sa.star(x)) == sb.star(d.unit_obj(x)), _named(x)
        )
        report.check(
            "unit_identity",
            d.unit_map(a.identity(x)) == b.identity(d.unit_obj(x)),
            _named(x),
        )
        for f in b.objects:
            if d.target_obj(f) != x:
                continue
            report.check(
                "horizontal_unit",
                d.gamma_obj(d.unit_obj(x), f) == f,
                str(f),
            )
            for g in b.objects:
                if d.source_obj(g) != x:
                    continue
                gf = d.gamma_obj(g, f)
                report.check(
                    "cdm_law_3",
                    d.gamma_obj(sb.star(g), sb.star(f)) == sb.star(gf),
                    str(g),
                    str(f),
                )

    for m in a.multimaps:
        unit = d.unit_map(m)
        report.check(
            "unit_map",
            d.source_map(unit) == m
            and d.target_map(unit) == m
            and b.inputs(unit) == tuple(d.unit_obj(x) for x in a.inputs(m))
            and b.output(unit) == d.unit_obj(a.output(m)),
            _named(m),
        )
        report.check("cdm_law_5", sb.sigma(unit) == d.unit_map(sa.sigma(m)), _named(m))

    for t in b.multimaps:
        ends = ((d.source_map, d.source_obj), (d.target_map, d.target_obj))
        for end_map, end_obj in ends:
            report.check(
                "boundary_typing",
                a.inputs(end_map(t)) == tuple(end_obj(f) for f in b.inputs(t))
                and a.output(end_map(t)) == end_obj(b.output(t)),
                _named(t),
            )
            report.check(
                "cdm_law_4", end_map(sb.sigma(t)) == sa.sigma(end_map(t)), _named(t)
            )
        report.check(
            "horizontal_unit",
            d.gamma_map(d.unit_map(d.target_map(t)), t) == t
            and d.gamma_map(t, d.unit_map(d.source_map(t))) == t,
            _named(t),
        )

    for beta, alpha in d.pasting:
        pasted = d.gamma_map(beta, alpha)
        report.check(
            "gamma_boundary",
            d.source_map(pasted) == d.source_map(alpha)
            and d.target_map(pasted) == d.target_map(beta),
            _named(beta),
            _named(alpha),
        )
        report.check(
            "cdm_law_6",
            sb.sigma(pasted) == d.gamma_map(sb.sigma(beta), sb.sigma(alpha)),
            _named(beta),
            _named(alpha),
        )
        for gamma, other in d.pasting:
            if other is beta:
                report.check(
                    "horizontal_associativity",
                    d.gamma_map(d.gamma_map(gamma, beta), alpha)
                    == d.gamma_map(gamma, d.gamma_map(beta, alpha)),
                    _named(gamma),
                    _named(beta),
                    _named(alpha),
                )

    for t in b.multimaps:
        if b.arity(t) == 0:
            continue
        for fs in b.families(t, limit):
            composite = b.compose(t, list(fs))
            for end_map in (d.source_map, d.target_map):
                report.check(
                    "boundary_composition",
                    end_map(composite)
                    == a.compose(end_map(t), [end_map(f) for f in fs]),
                    _named(t),
                )
            _check_interchange(d, report, t, fs)
    LOG.debug("%s: %s", d.name, report.checked)
    return report


def _check_interchange(
    d: CyclicDoubleMulticategory, report: Report, alpha: Any, alphas: Sequence[Any]
) -> None:
    """(beta' ∘ betas) * (alpha' ∘ alphas) == (beta' * alpha') ∘ (betas * alphas)."""
    b = d.cells
    followers: Dict[int, List[Any]] = {}
    for index, x in enumerate((alpha,) + tuple(alphas)):
        followers[index] = [beta for beta, first in d.pasting if first is x]
    for outer in followers[0]:
        inner_choices = [followers[k] for k in range(1, len(alphas) + 1)]
        for inners in itertools.product(*inner_choices):
            if tuple(b.output(x) for x in inners) != b.inputs(outer):
                continue
            try:
                lhs = d.gamma_map(
                    b.compose(outer, list(inners)), b.compose(alpha, list(alphas))
                )
                rhs = b.compose(
                    d.gamma_map(outer, alpha),
                    [d.gamma_map(x, y) for x, y in zip(inners, alphas)],
                )
            except MadjException as e:
                report.skip(f"interchange at {_named(outer)} over {_named(alpha)}: {e}")
                continue
            report.check("interchange", lhs == rhs, _named(outer), _named(alpha))


def check_universe(
    d: CyclicDoubleMulticategory, bound: Optional[int] = None
) -> Report:
    """Every law the kernel knows about, over the whole universe."""
    report = Report(f"universe {d.name}")
    for m in d.vertical.multimaps:
        report.extend(verify_cycle(m))
    report.extend(check_mate_coherence(d.cells.multimaps))
    report.extend(check_multicategory(d.vertical, bound))
    report.extend(check_multicategory(d.cells, bound))
    report.extend(check_cyclic(d.vertical, d.vertical_cyclic, bound))
    report.extend(check_cyclic(d.cells, d.cells_cyclic, bound))
    report.extend(check_category_object(d, bound))
    return report


def cell_pairs(cells: Sequence[TwoCell]) -> List[Tuple[TwoCell, TwoCell]]:
    """Horizontally composable pairs (beta, alpha) among the given cells."""
    return [
        (beta, alpha)
        for alpha in cells
        for beta in cells
        if alpha.target == beta.source and alpha.anchor == beta.anchor
    ]
