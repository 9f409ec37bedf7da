"""
Named finite models: posets and chains, one-object monoids, monotone maps, the meet
adjunction of a finite Heyting lattice and the standard small multicategories.
"""
from __future__ import annotations

import itertools
import logging
import random
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .adjoint1 import NotAdjointException, adjoint_search
from .const import ARITY_BOUND_DEFAULT, TERMINAL_NAME
from .cyclic_mcat import CyclicStructure, FinMulticategory, Universe
from .fincat import (
    BoundaryMismatchException,
    FinCategory,
    Functor,
    Morphism,
    opposite,
    opposite_functor,
    product,
    terminal,
    validate_category,
)
from .multiadjoint import (
    MultiAdjunction,
    from_mutual_left,
    from_primary,
    search_adjoints,
)

LOG = logging.getLogger(__name__)

PosetMap = Tuple[Tuple[Any, ...], Any]


def leq_id(x: Any, y: Any) -> str:
    return f"{x}<={y}"


def poset(
    name: str, elements: Sequence[Any], leq: Callable[[Any, Any], bool]
) -> FinCategory:
    """The thin category with a morphism x<=y whenever leq(x, y)."""
    elements = tuple(elements)
    morphisms = [
        Morphism(leq_id(x, y), x, y) for x in elements for y in elements if leq(x, y)
    ]
    composition: Dict[Tuple[Any, Any], Any] = {}
    for x, y, z in itertools.product(elements, repeat=3):
        if leq(x, y) and leq(y, z):
            composition[(leq_id(y, z), leq_id(x, y))] = leq_id(x, z)
    return validate_category(
        name,
        elements,
        morphisms,
        {x: leq_id(x, x) for x in elements},
        composition,
    )


def chain(n: int, name: Optional[str] = None) -> FinCategory:
    """0 <= 1 <= ... <= n-1."""
    return poset(name or f"C{n}", range(n), lambda x, y: x <= y)


def boolean_square() -> FinCategory:
    """The four-element Boolean lattice with atoms a and b."""
    order = {("0", "a"), ("0", "b"), ("0", "1"), ("a", "1"), ("b", "1")}
    return poset("B2", ("0", "a", "b", "1"), lambda x, y: x == y or (x, y) in order)


def monoid(
    name: str,
    elements: Sequence[Any],
    multiply: Callable[[Any, Any], Any],
    unit: Any,
) -> FinCategory:
    """A monoid as a category with the single object "*"; multiply(g, f) is g∘f."""
    elements = tuple(elements)
    return validate_category(
        name,
        ("*",),
        [Morphism(e, "*", "*") for e in elements],
        {"*": unit},
        {(g, f): multiply(g, f) for g in elements for f in elements},
    )


def z2() -> FinCategory:
    return monoid("Z2", ("e", "s"), lambda g, f: "e" if g == f else "s", "e")


def leq(c: FinCategory, x: Any, y: Any) -> bool:
    return bool(c.hom(x, y))


def thin_functor(
    source: FinCategory, target: FinCategory, obj_map: Dict[Any, Any]
) -> Functor:
    """The functor with the given object map into a thin category; fails when it is not monotone."""
    mor_map: Dict[Any, Any] = {}
    for m in source.morphisms:
        hom = target.hom(obj_map[m.src], obj_map[m.tgt])
        if len(hom) != 1:
            raise BoundaryMismatchException(
                f"{m.id!r} has {len(hom)} possible images in {target.name}"
            )
        mor_map[m.id] = hom[0]
    return Functor(source, target, dict(obj_map), mor_map)


def monotone_maps(a: FinCategory, b: FinCategory) -> List[Functor]:
    """Every functor from a category into a thin category, in stored order."""
    maps: List[Functor] = []
    for images in itertools.product(b.objects, repeat=len(a.objects)):
        obj_map = dict(zip(a.objects, images))
        if all(leq(b, obj_map[m.src], obj_map[m.tgt]) for m in a.morphisms):
            maps.append(thin_functor(a, b, obj_map))
    return maps


def meet(c: FinCategory, x: Any, y: Any) -> Any:
    lower = [z for z in c.objects if leq(c, z, x) and leq(c, z, y)]
    for z in lower:
        if all(leq(c, w, z) for w in lower):
            return z
    raise BoundaryMismatchException(f"{x!r} and {y!r} have no meet in {c.name}")


def join(c: FinCategory, x: Any, y: Any) -> Any:
    upper = [z for z in c.objects if leq(c, x, z) and leq(c, y, z)]
    for z in upper:
        if all(leq(c, z, w) for w in upper):
            return z
    raise BoundaryMismatchException(f"{x!r} and {y!r} have no join in {c.name}")


def implication(c: FinCategory, x: Any, y: Any) -> Any:
    """The largest z with meet(z, x) <= y."""
    candidates = [z for z in c.objects if leq(c, meet(c, z, x), y)]
    for z in candidates:
        if all(leq(c, w, z) for w in candidates):
            return z
    raise BoundaryMismatchException(f"{x!r} => {y!r} does not exist in {c.name}")


def meet_functor(lattice: FinCategory) -> Functor:
    """Binary meet on the opposite lattice, the primary functor of the meet adjunction."""
    dual = opposite(lattice)
    source = product([dual, dual])
    return thin_functor(
        source, dual, {(x, y): meet(lattice, x, y) for x, y in source.objects}
    )


def meet_adjunction(lattice: FinCategory) -> MultiAdjunction:
    """
    The 2-variable adjunction (L, L^op, L^op) of a finite Heyting lattice: meet, with the
    implication in either variable found by adjoint search.
    """
    f0 = meet_functor(lattice)
    m = from_primary(f0, search_adjoints(f0))
    LOG.debug("meet adjunction of %s assembled", lattice.name)
    return m


def z2_multiplication_functor() -> Functor:
    """The group law of Z2 as a functor Z2 x Z2 -> Z2."""
    group = z2()
    source = product([group, group])
    return Functor(
        source,
        group,
        {("*", "*"): "*"},
        {m.id: group.compose(*m.id) for m in source.morphisms},
    )


def z2_multiplication() -> MultiAdjunction:
    """The 2-variable adjunction (Z2^op, Z2, Z2) of the group law of Z2."""
    f0 = z2_multiplication_functor()
    return from_primary(f0, search_adjoints(f0))


def _tensor(values: Sequence[int], op: Callable[[int, int], int], unit: int) -> int:
    result = unit
    for v in values:
        result = op(result, v)
    return result


def poset_multicategory(
    name: str,
    c: FinCategory,
    tensor: Callable[[Sequence[Any]], Any],
    arity_bound: int = ARITY_BOUND_DEFAULT,
) -> FinMulticategory[Any, PosetMap]:
    """
    M_C for a monoidal poset C: one multimap (x_1..x_k; y) exactly when
    tensor(x_1..x_k) <= y. Multimaps are the pairs (inputs, output).
    """
    multimaps: List[PosetMap] = []
    for k in range(arity_bound + 1):
        for ins in itertools.product(c.objects, repeat=k):
            for y in c.objects:
                if leq(c, tensor(ins), y):
                    multimaps.append((tuple(ins), y))
    return FinMulticategory(
        name,
        c.objects,
        tuple(multimaps),
        lambda f: f[0],
        lambda f: f[1],
        lambda x: ((x,), x),
        lambda g, fs: (tuple(x for f in fs for x in f[0]), g[1]),
        arity_bound,
    )


def poset_cyclic(star: Callable[[Any], Any]) -> CyclicStructure[Any, PosetMap]:
    """(x_1..x_n; y) goes to (x_2..x_n, y*; x_1*); nullary multimaps are fixed."""

    def sigma(f: PosetMap) -> PosetMap:
        ins, out = f
        if not ins:
            return f
        return (ins[1:] + (star(out),), star(ins[0]))

    return CyclicStructure(star, sigma)


def lukasiewicz3() -> FinCategory:
    return chain(3, "Ł3")


def lukasiewicz_tensor(values: Sequence[int]) -> int:
    """max(0, x_1 + ... + x_k - 2(k-1)) on {0, 1, 2}; the empty tensor is 2."""
    if not values:
        return 2
    return max(0, sum(values) - 2 * (len(values) - 1))


def lukasiewicz_multicategory(
    arity_bound: int = ARITY_BOUND_DEFAULT,
) -> Tuple[FinMulticategory[Any, PosetMap], CyclicStructure[Any, PosetMap]]:
    """The Łukasiewicz 3-chain with negation 2 - x: a cyclic multicategory."""
    mc = poset_multicategory("M(Ł3)", lukasiewicz3(), lukasiewicz_tensor, arity_bound)
    return mc, poset_cyclic(lambda x: 2 - x)


def heyting_meet_multicategory(
    arity_bound: int = ARITY_BOUND_DEFAULT,
) -> Tuple[FinMulticategory[Any, PosetMap], CyclicStructure[Any, PosetMap]]:
    """M_{H3} for meet, paired with the identity involution; not cyclic."""
    return (
        poset_multicategory(
            "M(H3)", chain(3, "H3"), lambda xs: _tensor(xs, min, 2), arity_bound
        ),
        poset_cyclic(lambda x: x),
    )


GroupMap = Tuple[int, int]


def cyclic_group_multicategory(
    order: int = 2, arity_bound: int = ARITY_BOUND_DEFAULT
) -> FinMulticategory[str, GroupMap]:
    """
    One object; the multimaps of each arity are the elements of Z/order, composition
    adds and the identity is 0. Multimaps are pairs (arity, value).
    """
    return FinMulticategory(
        f"Z{order} multicategory",
        ("*",),
        tuple((k, v) for k in range(arity_bound + 1) for v in range(order)),
        lambda f: ("*",) * f[0],
        lambda f: "*",
        lambda x: (1, 0),
        lambda g, fs: (sum(f[0] for f in fs), (g[1] + sum(f[1] for f in fs)) % order),
        arity_bound,
    )


def trivial_cyclic() -> CyclicStructure[str, GroupMap]:
    return CyclicStructure(lambda x: x, lambda f: f)


def shifted_cyclic(order: int) -> CyclicStructure[str, GroupMap]:
    """Adds 1 to every map with inputs; of order `order` rather than arity + 1."""
    return CyclicStructure(
        lambda x: x, lambda f: (f[0], (f[1] + 1) % order) if f[0] else f
    )


EndoMap = Tuple[int, Tuple[int, ...]]


def _evaluate(f: EndoMap, args: Sequence[int], base: int) -> int:
    index = 0
    for a in args:
        index = index * base + a
    return f[1][index]


def endomorphism_multicategory(
    size: int = 2, arity_bound: int = ARITY_BOUND_DEFAULT
) -> FinMulticategory[str, EndoMap]:
    """
    All functions X^k -> X on X = {0..size-1} with k up to the bound; a multimap is
    (k, table) with the table listed in lexicographic argument order.
    """
    multimaps: List[EndoMap] = []
    for k in range(arity_bound + 1):
        for table in itertools.product(range(size), repeat=size**k):
            multimaps.append((k, tuple(table)))

    def compose(g: EndoMap, fs: Sequence[EndoMap]) -> EndoMap:
        total = sum(f[0] for f in fs)
        table: List[int] = []
        for args in itertools.product(range(size), repeat=total):
            start = 0
            values: List[int] = []
            for f in fs:
                values.append(_evaluate(f, args[start : start + f[0]], size))
                start += f[0]
            table.append(_evaluate(g, values, size))
        return (total, tuple(table))

    return FinMulticategory(
        f"End({size})",
        ("X",),
        tuple(multimaps),
        lambda f: ("X",) * f[0],
        lambda f: "X",
        lambda x: (1, tuple(range(size))),
        compose,
        arity_bound,
    )


def named_category(name: str) -> Optional[FinCategory]:
    """Built-in categories by name: C<n>, H3, B2, Ł3, Z2 and the terminal category 1."""
    if name.startswith("C") and name[1:].isdigit():
        return chain(int(name[1:]))
    builtins: Dict[str, Callable[[], FinCategory]] = {
        "H3": lambda: chain(3, "H3"),
        "B2": boolean_square,
        "Ł3": lukasiewicz3,
        "Z2": z2,
        TERMINAL_NAME: terminal,
    }
    factory = builtins.get(name)
    return factory() if factory is not None else None


def random_universe(seed: int, max_chain: int = 3) -> Universe:
    """
    A small seeded universe over two chains: some monotone maps with their opposites,
    the unary adjunctions among them and sometimes the meet adjunction of the first.
    """
    rng = random.Random(seed)
    first, second = (chain(n) for n in sorted(rng.sample(range(2, max_chain + 2), 2)))
    cats = (first, opposite(first), second, opposite(second))
    maps = monotone_maps(first, second)
    functors: List[Functor] = []
    madjs: List[MultiAdjunction] = []
    for f in rng.sample(maps, min(2, len(maps))):
        functors.extend((f, opposite_functor(f)))
        try:
            madjs.append(from_mutual_left(adjoint_search(opposite_functor(f))))
        except NotAdjointException:
            LOG.debug("%s has no right adjoint", f)
    if rng.random() < 0.5:
        madjs.append(meet_adjunction(first))
    LOG.info("Seed %d: %d functors, %d adjunctions", seed, len(functors), len(madjs))
    return Universe(cats, tuple(functors), tuple(madjs))
