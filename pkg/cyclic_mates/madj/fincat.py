"""
Finite categories given by explicit tables, functors, natural transformations,
products, opposites, arrow categories and brute-force colimits.

Every category keeps its objects and morphisms in a stored order; hom-sets, searches
and serialisations follow that order so that derived results are deterministic.
"""
from __future__ import annotations

import itertools
import logging
import math
import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from enum import Enum, unique
from functools import cached_property
from typing import (
    Any,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .const import (
    ARROW_SUFFIX,
    DEBUG_CHECKS_ENV,
    MAX_SIZE_DEFAULT,
    MAX_SIZE_ENV,
    OPPOSITE_SUFFIX,
    PRODUCT_SEPARATOR,
    TERMINAL_NAME,
)
from .report import MadjException, Report

LOG = logging.getLogger(__name__)

Perm = Tuple[int, ...]

_SIZE_LIMIT: ContextVar[Optional[int]] = ContextVar("madj_size_limit", default=None)


class InvalidCategoryException(MadjException):
    def __init__(self, report: Report):
        super().__init__(report.title)
        self.report = report

    def __str__(self) -> str:
        return str(self.report)


class BoundaryMismatchException(MadjException):
    pass


class SizeOverflowException(MadjException):
    pass


class NoColimitException(MadjException):
    pass


class InvalidConfigurationException(MadjException):
    pass


def max_size() -> int:
    """The bound on constructed categories: innermost size_limit, then MADJ_MAX_SIZE."""
    scoped = _SIZE_LIMIT.get()
    if scoped is not None:
        return scoped
    configured = os.environ.get(MAX_SIZE_ENV)
    if configured:
        try:
            return int(configured)
        except ValueError as e:
            raise InvalidConfigurationException(
                f"{MAX_SIZE_ENV} must be an integer, got {configured!r}"
            ) from e
    return MAX_SIZE_DEFAULT


@contextmanager
def size_limit(bound: Optional[int]) -> Iterator[None]:
    token = _SIZE_LIMIT.set(bound)
    try:
        yield
    finally:
        _SIZE_LIMIT.reset(token)


def debug_checks() -> bool:
    return os.environ.get(DEBUG_CHECKS_ENV, "") not in ("", "0")


def _check_size(count: int, what: str) -> None:
    bound = max_size()
    if count > bound:
        raise SizeOverflowException(f"{what} needs {count} morphisms, bound is {bound}")


@dataclass(frozen=True)
class Morphism:
    id: Any
    src: Any
    tgt: Any


@dataclass(frozen=True, eq=False)
class FinCategory:
    """
    A finite category.

    Parameters
    ----------
    name: used in diagnostics and to tell derived categories apart
    objects: stored object order
    morphisms: stored morphism order, identities included
    identities: object -> identity morphism id
    composition: (g, f) -> g∘f for every composable pair
    factors: the factor categories when this category is a product
    """

    name: str
    objects: Tuple[Any, ...]
    morphisms: Tuple[Morphism, ...]
    identities: Mapping[Any, Any]
    composition: Mapping[Tuple[Any, Any], Any]
    factors: Optional[Tuple[FinCategory, ...]] = None

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (
            self.name == other.name
            and self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.factors == other.factors
            and self.identities == other.identities
            and self.composition == other.composition
        )

    def __hash__(self) -> int:
        return hash((self.name, len(self.objects), len(self.morphisms)))

    def __str__(self) -> str:
        return self.name

    @cached_property
    def _by_id(self) -> Dict[Any, Morphism]:
        return {m.id: m for m in self.morphisms}

    @cached_property
    def _homs(self) -> Dict[Tuple[Any, Any], Tuple[Any, ...]]:
        homs: Dict[Tuple[Any, Any], List[Any]] = {}
        for m in self.morphisms:
            homs.setdefault((m.src, m.tgt), []).append(m.id)
        return {key: tuple(ids) for key, ids in homs.items()}

    @cached_property
    def _positions(self) -> Dict[Any, int]:
        positions: Dict[Any, int] = {}
        for ids in self._homs.values():
            for index, f in enumerate(ids):
                positions[f] = index
        return positions

    @cached_property
    def _object_set(self) -> frozenset[Any]:
        return frozenset(self.objects)

    def has_object(self, a: Any) -> bool:
        return a in self._object_set

    def has_morphism(self, f: Any) -> bool:
        return f in self._by_id

    def morphism(self, f: Any) -> Morphism:
        try:
            return self._by_id[f]
        except KeyError:
            raise BoundaryMismatchException(f"{f!r} is not a morphism of {self.name}")

    def src(self, f: Any) -> Any:
        return self.morphism(f).src

    def tgt(self, f: Any) -> Any:
        return self.morphism(f).tgt

    def hom(self, a: Any, b: Any) -> Tuple[Any, ...]:
        return self._homs.get((a, b), ())

    def position(self, f: Any) -> int:
        """Index of f inside its hom-set."""
        return self._positions[f]

    def identity(self, a: Any) -> Any:
        try:
            return self.identities[a]
        except KeyError:
            raise BoundaryMismatchException(f"{a!r} is not an object of {self.name}")

    def compose(self, g: Any, f: Any) -> Any:
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise BoundaryMismatchException(
                f"cannot compose {g!r} after {f!r} in {self.name}"
            )

    def chain(self, *fs: Any) -> Any:
        """chain(h, g, f) is h∘g∘f."""
        result = fs[-1]
        for g in reversed(fs[:-1]):
            result = self.compose(g, result)
        return result


def category_violations(
    name: str,
    objects: Iterable[Any],
    morphisms: Iterable[Union[Morphism, Tuple[Any, Any, Any]]],
    identities: Mapping[Any, Any],
    composition: Union[Mapping[Tuple[Any, Any], Any], Iterable[Tuple[Any, Any, Any]]],
) -> Report:
    report = Report(f"category {name}")
    objs = list(objects)
    mors = [m if isinstance(m, Morphism) else Morphism(*m) for m in morphisms]
    table = _composition_table(composition)

    seen_objects: set[Any] = set()
    for a in objs:
        report.check("DuplicateId", a not in seen_objects, a, detail="object")
        seen_objects.add(a)
    by_id: Dict[Any, Morphism] = {}
    for m in mors:
        report.check("DuplicateId", m.id not in by_id, m.id, detail="morphism")
        by_id.setdefault(m.id, m)
        report.check(
            "DanglingEndpoint",
            m.src in seen_objects and m.tgt in seen_objects,
            m.id,
            detail="endpoint is not an object",
        )
    for a in objs:
        i = identities.get(a)
        if i is None or i not in by_id:
            report.fail("IdentityViolation", a, detail="missing identity")
            continue
        report.check(
            "DanglingEndpoint",
            by_id[i].src == a and by_id[i].tgt == a,
            i,
            detail="identity is not an endomorphism of its object",
        )
    for (g, f), gf in table.items():
        known = f in by_id and g in by_id and gf in by_id
        report.check("DanglingEndpoint", known, g, f, detail="composition entry")
        if not known:
            continue
        report.check(
            "DanglingEndpoint",
            by_id[f].tgt == by_id[g].src
            and by_id[gf].src == by_id[f].src
            and by_id[gf].tgt == by_id[g].tgt,
            g,
            f,
            detail="ill-typed composite",
        )
    if not report.ok:
        return report

    outgoing: Dict[Any, List[Morphism]] = {}
    for m in mors:
        outgoing.setdefault(m.src, []).append(m)
    for f in mors:
        for g in outgoing.get(f.tgt, []):
            report.check("MissingComposite", (g.id, f.id) in table, g.id, f.id)
    if not report.ok:
        return report

    for f in mors:
        report.check(
            "IdentityViolation",
            table[(identities[f.tgt], f.id)] == f.id
            and table[(f.id, identities[f.src])] == f.id,
            f.id,
        )
        for g in outgoing.get(f.tgt, []):
            gf = table[(g.id, f.id)]
            for h in outgoing.get(g.tgt, []):
                report.check(
                    "AssocViolation",
                    table[(h.id, gf)] == table[(table[(h.id, g.id)], f.id)],
                    h.id,
                    g.id,
                    f.id,
                )
    return report


def validate_category(
    name: str,
    objects: Iterable[Any],
    morphisms: Iterable[Union[Morphism, Tuple[Any, Any, Any]]],
    identities: Mapping[Any, Any],
    composition: Union[Mapping[Tuple[Any, Any], Any], Iterable[Tuple[Any, Any, Any]]],
) -> FinCategory:
    objs = tuple(objects)
    mors = tuple(m if isinstance(m, Morphism) else Morphism(*m) for m in morphisms)
    table = _composition_table(composition)
    report = category_violations(name, objs, mors, identities, table)
    if not report.ok:
        LOG.debug("Category %s rejected: %s", name, report)
        raise InvalidCategoryException(report)
    return FinCategory(name, objs, mors, dict(identities), table)


def _composition_table(
    composition: Union[Mapping[Tuple[Any, Any], Any], Iterable[Tuple[Any, Any, Any]]]
) -> Dict[Tuple[Any, Any], Any]:
    if isinstance(composition, Mapping):
        return dict(composition)  # type: ignore
    return {(g, f): gf for g, f, gf in composition}


def discrete(name: str, objects: Sequence[Any]) -> FinCategory:
    return FinCategory(
        name,
        tuple(objects),
        tuple(Morphism(("id", a), a, a) for a in objects),
        {a: ("id", a) for a in objects},
        {(("id", a), ("id", a)): ("id", a) for a in objects},
    )


def _opposite_name(name: str) -> str:
    if name.endswith(OPPOSITE_SUFFIX):
        return name[: -len(OPPOSITE_SUFFIX)]
    if PRODUCT_SEPARATOR in name:
        return f"({name}){OPPOSITE_SUFFIX}"
    return name + OPPOSITE_SUFFIX


def opposite(c: FinCategory) -> FinCategory:
    """Same objects and morphism ids, endpoints swapped; opposite(opposite(c)) == c."""
    if c.factors is not None:
        return product([opposite(f) for f in c.factors])
    return FinCategory(
        _opposite_name(c.name),
        c.objects,
        tuple(Morphism(m.id, m.tgt, m.src) for m in c.morphisms),
        c.identities,
        {(f, g): gf for (g, f), gf in c.composition.items()},
    )


def _product_name(cats: Sequence[FinCategory]) -> str:
    if not cats:
        return TERMINAL_NAME
    if len(cats) == 1:
        return f"∏({cats[0].name})"
    return PRODUCT_SEPARATOR.join(
        f"({c.name})" if PRODUCT_SEPARATOR in c.name else c.name for c in cats
    )


def product(cats: Sequence[FinCategory]) -> FinCategory:
    """
    The product of a list of categories: objects and morphism ids are tuples and
    composition is componentwise. The empty product is the terminal category.
    """
    cats = tuple(cats)
    name = _product_name(cats)
    _check_size(math.prod(len(c.morphisms) for c in cats), name)
    _check_size(math.prod(len(c.composition) for c in cats), name)
    objects = tuple(itertools.product(*(c.objects for c in cats)))
    morphisms = tuple(
        Morphism(
            tuple(m.id for m in ms), tuple(m.src for m in ms), tuple(m.tgt for m in ms)
        )
        for ms in itertools.product(*(c.morphisms for c in cats))
    )
    identities = {
        a: tuple(c.identities[x] for c, x in zip(cats, a)) for a in objects
    }
    composition: Dict[Tuple[Any, Any], Any] = {}
    for entries in itertools.product(*(c.composition.items() for c in cats)):
        g = tuple(gf[0] for gf, _ in entries)
        f = tuple(gf[1] for gf, _ in entries)
        composition[(g, f)] = tuple(r for _, r in entries)
    return FinCategory(name, objects, morphisms, identities, composition, cats)


def terminal() -> FinCategory:
    return product([])


def factors_of(c: FinCategory) -> Tuple[FinCategory, ...]:
    if c.factors is None:
        raise BoundaryMismatchException(f"{c.name} is not a product category")
    return c.factors


class ArrowCategory(NamedTuple):
    category: FinCategory
    domain: Functor
    codomain: Functor


def arrow_category(c: FinCategory) -> ArrowCategory:
    """
    Objects are the morphisms of c; a morphism f -> g is a commuting square
    (f, g, u, v) with v∘f == g∘u.
    """
    name = (f"({c.name})" if " " in c.name else c.name) + ARROW_SUFFIX
    bound = max_size()
    squares: List[Morphism] = []
    for f in c.morphisms:
        for g in c.morphisms:
            for u in c.hom(f.src, g.src):
                for v in c.hom(f.tgt, g.tgt):
                    if c.compose(v, f.id) == c.compose(g.id, u):
                        squares.append(Morphism((f.id, g.id, u, v), f.id, g.id))
                        if len(squares) > bound:
                            raise SizeOverflowException(
                                f"{name} exceeds the bound of {bound} morphisms"
                            )
    outgoing: Dict[Any, List[Morphism]] = {}
    for s in squares:
        outgoing.setdefault(s.src, []).append(s)
    composition: Dict[Tuple[Any, Any], Any] = {}
    for first in squares:
        f, _, u1, v1 = first.id
        for second in outgoing.get(first.tgt, []):
            _, h, u2, v2 = second.id
            composition[(second.id, first.id)] = (
                f,
                h,
                c.compose(u2, u1),
                c.compose(v2, v1),
            )
    arrows = FinCategory(
        name,
        tuple(m.id for m in c.morphisms),
        tuple(squares),
        {
            m.id: (m.id, m.id, c.identity(m.src), c.identity(m.tgt))
            for m in c.morphisms
        },
        composition,
    )
    domain = Functor(
        arrows,
        c,
        {m.id: m.src for m in c.morphisms},
        {s.id: s.id[2] for s in squares},
    )
    codomain = Functor(
        arrows,
        c,
        {m.id: m.tgt for m in c.morphisms},
        {s.id: s.id[3] for s in squares},
    )
    return ArrowCategory(arrows, domain, codomain)


@dataclass(frozen=True, eq=False)
class Functor:
    """A functor given by its object and morphism tables."""

    source: FinCategory
    target: FinCategory
    obj_map: Mapping[Any, Any]
    mor_map: Mapping[Any, Any]

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Functor):
            return NotImplemented
        return (
            self.obj_map == other.obj_map
            and self.mor_map == other.mor_map
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self) -> int:
        return hash((self.source.name, self.target.name, len(self.obj_map)))

    def __str__(self) -> str:
        return f"{self.source.name} -> {self.target.name}"

    @property
    def name(self) -> str:
        return str(self)

    def on_object(self, a: Any) -> Any:
        try:
            return self.obj_map[a]
        except KeyError:
            raise BoundaryMismatchException(f"{a!r} is not in the domain of {self}")

    def on_morphism(self, f: Any) -> Any:
        try:
            return self.mor_map[f]
        except KeyError:
            raise BoundaryMismatchException(f"{f!r} is not in the domain of {self}")

    def violations(self) -> Report:
        report = Report(f"functor {self}")
        s, t = self.source, self.target
        for a in s.objects:
            report.check(
                "object_map",
                a in self.obj_map and t.has_object(self.obj_map[a]),
                a,
            )
        if not report.ok:
            return report
        for m in s.morphisms:
            image = self.mor_map.get(m.id)
            report.check(
                "morphism_map",
                image is not None
                and t.has_morphism(image)
                and t.src(image) == self.obj_map[m.src]
                and t.tgt(image) == self.obj_map[m.tgt],
                m.id,
            )
        if not report.ok:
            return report
        for a in s.objects:
            report.check(
                "preserves_identity",
                self.mor_map[s.identity(a)] == t.identity(self.obj_map[a]),
                a,
            )
        for (g, f), gf in s.composition.items():
            report.check(
                "preserves_composition",
                self.mor_map[gf] == t.compose(self.mor_map[g], self.mor_map[f]),
                g,
                f,
            )
        return report


def identity_functor(c: FinCategory) -> Functor:
    return Functor(c, c, {a: a for a in c.objects}, {m.id: m.id for m in c.morphisms})


def compose_functors(g: Functor, f: Functor) -> Functor:
    """g after f."""
    if f.target != g.source:
        raise BoundaryMismatchException(f"cannot compose {g} after {f}")
    return Functor(
        f.source,
        g.target,
        {a: g.obj_map[b] for a, b in f.obj_map.items()},
        {m: g.mor_map[n] for m, n in f.mor_map.items()},
    )


def opposite_functor(f: Functor) -> Functor:
    return Functor(opposite(f.source), opposite(f.target), f.obj_map, f.mor_map)


def product_functor(fs: Sequence[Functor]) -> Functor:
    source = product([f.source for f in fs])
    target = product([f.target for f in fs])
    return Functor(
        source,
        target,
        {a: tuple(f.obj_map[x] for f, x in zip(fs, a)) for a in source.objects},
        {
            m.id: tuple(f.mor_map[x] for f, x in zip(fs, m.id))
            for m in source.morphisms
        },
    )


def unary(f: Functor) -> Functor:
    """f seen as a functor out of the 1-fold product of its source."""
    return Functor(
        product([f.source]),
        f.target,
        {(a,): b for a, b in f.obj_map.items()},
        {(m,): n for m, n in f.mor_map.items()},
    )


def restrict_functor(f: Functor, position: int, values: Sequence[Any]) -> Functor:
    """
    The functor of one variable obtained from f (out of a product) by fixing every
    factor except `position` to the objects in `values`; values[position] is ignored.
    """
    factors = factors_of(f.source)
    free = factors[position]
    ids = [
        c.identity(v) if i != position else None
        for i, (c, v) in enumerate(zip(factors, values))
    ]

    def at(x: Any, fill: Sequence[Any]) -> Tuple[Any, ...]:
        return tuple(fill[:position]) + (x,) + tuple(fill[position + 1 :])

    return Functor(
        free,
        f.target,
        {a: f.obj_map[at(a, values)] for a in free.objects},
        {m.id: f.mor_map[at(m.id, ids)] for m in free.morphisms},
    )


def fix_factor(f: Functor, position: int, value: Any) -> Functor:
    """Fix one factor of a functor out of a product; the rest stay variable."""
    factors = factors_of(f.source)
    fixed_id = factors[position].identity(value)
    remaining = product(factors[:position] + factors[position + 1 :])
    return Functor(
        remaining,
        f.target,
        {
            a: f.obj_map[a[:position] + (value,) + a[position:]]
            for a in remaining.objects
        },
        {
            m.id: f.mor_map[m.id[:position] + (fixed_id,) + m.id[position:]]
            for m in remaining.morphisms
        },
    )


def substitute(outer: Functor, inners: Sequence[Functor]) -> Functor:
    """
    outer(inner_1(-), ..., inner_k(-)) as a functor out of the flat product of the
    inner functors' factors.
    """
    slots = factors_of(outer.source)
    if len(slots) != len(inners):
        raise BoundaryMismatchException(
            f"{outer} takes {len(slots)} arguments, got {len(inners)}"
        )
    sizes: List[int] = []
    flat: List[FinCategory] = []
    for slot, inner in zip(slots, inners):
        if inner.target != slot:
            raise BoundaryMismatchException(f"{inner} does not land in {slot.name}")
        parts = factors_of(inner.source)
        sizes.append(len(parts))
        flat.extend(parts)
    source = product(flat)

    def split(t: Tuple[Any, ...]) -> Iterator[Tuple[Any, ...]]:
        start = 0
        for size in sizes:
            yield t[start : start + size]
            start += size

    return Functor(
        source,
        outer.target,
        {
            a: outer.obj_map[
                tuple(inner.obj_map[chunk] for inner, chunk in zip(inners, split(a)))
            ]
            for a in source.objects
        },
        {
            m.id: outer.mor_map[
                tuple(
                    inner.mor_map[chunk] for inner, chunk in zip(inners, split(m.id))
                )
            ]
            for m in source.morphisms
        },
    )


@dataclass(frozen=True, eq=False)
class NatTransformation:
    """A natural transformation source => target, one component per object."""

    source: Functor
    target: Functor
    components: Mapping[Any, Any]

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, NatTransformation):
            return NotImplemented
        return (
            self.components == other.components
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self) -> int:
        return hash((hash(self.source), hash(self.target)))

    def component(self, a: Any) -> Any:
        return self.components[a]

    def violations(self) -> Report:
        report = Report(f"transformation {self.source} => {self.target}")
        f, g = self.source, self.target
        report.check(
            "boundary",
            f.source == g.source and f.target == g.target,
            str(f),
            str(g),
        )
        if not report.ok:
            return report
        c = f.target
        for a in f.source.objects:
            alpha = self.components.get(a)
            report.check(
                "component",
                alpha is not None
                and c.has_morphism(alpha)
                and c.src(alpha) == f.obj_map[a]
                and c.tgt(alpha) == g.obj_map[a],
                a,
            )
        if not report.ok:
            return report
        for m in f.source.morphisms:
            report.check(
                "naturality",
                c.compose(g.mor_map[m.id], self.components[m.src])
                == c.compose(self.components[m.tgt], f.mor_map[m.id]),
                m.id,
            )
        return report


def identity_transformation(f: Functor) -> NatTransformation:
    return NatTransformation(
        f, f, {a: f.target.identity(f.obj_map[a]) for a in f.source.objects}
    )


def vertical(beta: NatTransformation, alpha: NatTransformation) -> NatTransformation:
    if alpha.target != beta.source:
        raise BoundaryMismatchException("vertical composite of non-matching cells")
    c = alpha.source.target
    return NatTransformation(
        alpha.source,
        beta.target,
        {
            a: c.compose(beta.components[a], alpha.components[a])
            for a in alpha.source.source.objects
        },
    )


def horizontal(beta: NatTransformation, alpha: NatTransformation) -> NatTransformation:
    """beta * alpha for alpha: S => S' (A -> B) and beta: T => T' (B -> C)."""
    if alpha.source.target != beta.source.source:
        raise BoundaryMismatchException("horizontal composite of non-matching cells")
    t_after = beta.target
    c = t_after.target
    return NatTransformation(
        compose_functors(beta.source, alpha.source),
        compose_functors(beta.target, alpha.target),
        {
            a: c.compose(
                t_after.mor_map[alpha.components[a]],
                beta.components[alpha.source.obj_map[a]],
            )
            for a in alpha.source.source.objects
        },
    )


def whisker_left(alpha: NatTransformation, f: Functor) -> NatTransformation:
    """alpha F."""
    return NatTransformation(
        compose_functors(alpha.source, f),
        compose_functors(alpha.target, f),
        {a: alpha.components[f.obj_map[a]] for a in f.source.objects},
    )


def whisker_right(g: Functor, alpha: NatTransformation) -> NatTransformation:
    """G alpha."""
    return NatTransformation(
        compose_functors(g, alpha.source),
        compose_functors(g, alpha.target),
        {a: g.mor_map[alpha.components[a]] for a in alpha.source.source.objects},
    )


def opposite_transformation(alpha: NatTransformation) -> NatTransformation:
    return NatTransformation(
        opposite_functor(alpha.target),
        opposite_functor(alpha.source),
        alpha.components,
    )


@unique
class CompositionKind(Enum):
    FUNCTOR = "functor"
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"
    WHISKER_LEFT = "whisker_left"
    WHISKER_RIGHT = "whisker_right"


Composable = Union[Functor, NatTransformation]


def compose_whisker(kind: CompositionKind, outer: Any, inner: Any) -> Composable:
    """
    Dispatch for the 2-categorical compositions. `outer` is applied after `inner`:
    FUNCTOR (G, F), VERTICAL (beta, alpha), HORIZONTAL (beta, alpha),
    WHISKER_LEFT (alpha, F) and WHISKER_RIGHT (G, alpha).
    """
    result: Composable
    if kind is CompositionKind.FUNCTOR:
        result = compose_functors(outer, inner)
    elif kind is CompositionKind.VERTICAL:
        result = vertical(outer, inner)
    elif kind is CompositionKind.HORIZONTAL:
        result = horizontal(outer, inner)
    elif kind is CompositionKind.WHISKER_LEFT:
        result = whisker_left(outer, inner)
    else:
        result = whisker_right(outer, inner)
    if debug_checks():
        assert result.violations().ok, f"{kind.value} composite broke its laws"
    return result


def is_permutation(perm: Sequence[int], size: int) -> bool:
    return len(perm) == size and sorted(perm) == list(range(size))


def identity_perm(size: int) -> Perm:
    return tuple(range(size))


def compose_perms(second: Perm, first: Perm) -> Perm:
    """Apply `first`, then `second`."""
    return tuple(second[i] for i in first)


def invert_perm(perm: Perm) -> Perm:
    inverse = [0] * len(perm)
    for i, j in enumerate(perm):
        inverse[j] = i
    return tuple(inverse)


def punctured_cube(n: int, max_weight: Optional[int] = 1) -> FinCategory:
    """
    Vertices of {0,1}^n other than the top one with at most max_weight ones (all of
    them when max_weight is None), ordered componentwise. Morphism ids are pairs
    (e, d) with e <= d.
    """
    top = (1,) * n
    objects = tuple(
        e
        for e in itertools.product((0, 1), repeat=n)
        if e != top and (max_weight is None or sum(e) <= max_weight)
    )
    below = {
        e: [d for d in objects if all(x <= y for x, y in zip(e, d))] for e in objects
    }
    morphisms = tuple(Morphism((e, d), e, d) for e in objects for d in below[e])
    composition: Dict[Tuple[Any, Any], Any] = {}
    for e in objects:
        for d in below[e]:
            for z in below[d]:
                composition[((d, z), (e, d))] = (e, z)
    return FinCategory(
        f"cube{n}-" if max_weight is None else f"cube{n}-/{max_weight}",
        objects,
        morphisms,
        {e: (e, e) for e in objects},
        composition,
    )


@dataclass(frozen=True)
class Cocone:
    apex: Any
    legs: Tuple[Any, ...]


def cocones(diagram: Functor) -> Iterator[Cocone]:
    """Every cocone under `diagram` (a functor shape -> ambient), in stored order."""
    shape, ambient = diagram.source, diagram.target
    index = {j: k for k, j in enumerate(shape.objects)}
    edges = [
        m for m in shape.morphisms if m.src != m.tgt or m.id != shape.identity(m.src)
    ]
    for apex in ambient.objects:
        candidates = [ambient.hom(diagram.obj_map[j], apex) for j in shape.objects]
        for legs in itertools.product(*candidates):
            if all(
                ambient.compose(legs[index[m.tgt]], diagram.mor_map[m.id])
                == legs[index[m.src]]
                for m in edges
            ):
                yield Cocone(apex, tuple(legs))


def _factorizations(diagram: Functor, source: Cocone, target: Cocone) -> List[Any]:
    ambient = diagram.target
    return [
        m
        for m in ambient.hom(source.apex, target.apex)
        if all(
            ambient.compose(m, leg) == other
            for leg, other in zip(source.legs, target.legs)
        )
    ]


def colimit(diagram: Functor) -> Cocone:
    """
    The first initial cocone in stored order (apex order, then leg order), found by
    exhaustive search.
    """
    candidates = list(cocones(diagram))
    for candidate in candidates:
        if all(len(_factorizations(diagram, candidate, c)) == 1 for c in candidates):
            LOG.debug("colimit of %s: apex %r", diagram, candidate.apex)
            return candidate
    raise NoColimitException(f"no colimit for the diagram {diagram}")


def factor(diagram: Functor, colimiting: Cocone, cocone: Cocone) -> Any:
    """The unique morphism out of a colimit apex that is compatible with `cocone`."""
    found = _factorizations(diagram, colimiting, cocone)
    if len(found) != 1:
        raise NoColimitException(f"{colimiting.apex!r} is not a colimit apex")
    return found[0]
