"""
Multivariable adjunctions presented cyclically.

An n-variable adjunction is a list of categories A_0..A_n with functors
F_i: A_{i+1} x ... x A_n x A_0 x ... x A_{i-1} -> A_i^op and, for each full tuple
t = (a_0, ..., a_n), bijections

    phi_i(t): A_{i-1}(F_{i-1}(...), a_{i-1}) -> A_i(F_i(...), a_i)

between consecutive hom-sets, indices taken mod n+1. Every index is treated alike, so
the cyclic shift is a pure rotation of the stored data.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum, unique
from functools import cached_property
from typing import Any, Dict, Iterator, List, Mapping, Sequence, Tuple, TypeVar

from .adjoint1 import (
    MutualLeftAdjunction,
    NotAdjointException,
    adjoint_search,
    compose_mutual,
    verify_mutual_left,
)
from .fincat import (
    BoundaryMismatchException,
    FinCategory,
    Functor,
    Perm,
    compose_perms,
    factors_of,
    fix_factor,
    identity_functor,
    identity_perm,
    invert_perm,
    is_permutation,
    opposite,
    opposite_functor,
    product,
    restrict_functor,
    substitute,
    terminal,
    unary,
)
from .report import MadjException, Report

LOG = logging.getLogger(__name__)

T = TypeVar("T")

AdjointKey = Tuple[int, Tuple[Any, ...]]


class NaturalityFailureException(MadjException):
    def __init__(self, report: Report):
        super().__init__(report.title)
        self.report = report

    def __str__(self) -> str:
        return str(self.report)


class IndexOutOfRangeException(MadjException):
    pass


@unique
class Chirality(Enum):
    LEFT = "left"
    RIGHT = "right"

    def flipped(self) -> Chirality:
        return Chirality.RIGHT if self is Chirality.LEFT else Chirality.LEFT


def others(seq: Sequence[T], i: int) -> Tuple[T, ...]:
    """The entries after i followed by the entries before i."""
    return tuple(seq[i + 1 :]) + tuple(seq[:i])


def rotate(seq: Sequence[T], k: int = 1) -> Tuple[T, ...]:
    if not seq:
        return tuple(seq)
    k %= len(seq)
    return tuple(seq[k:]) + tuple(seq[:k])


def full_tuple(size: int, i: int, rest: Sequence[Any], value: Any) -> Tuple[Any, ...]:
    """Inverse of others(): rebuild (a_0..a_n) from the other entries and a_i."""
    full: List[Any] = [None] * size
    full[i] = value
    for position, entry in zip(others(range(size), i), rest):
        full[position] = entry
    return tuple(full)


def _replace(t: Sequence[Any], i: int, value: Any) -> Tuple[Any, ...]:
    return tuple(t[:i]) + (value,) + tuple(t[i + 1 :])


@dataclass(frozen=True, eq=False)
class MultiAdjunction:
    """
    cats: A_0..A_n
    funs: F_i out of the product of others(cats, i) into cats[i]^op
    isos: isos[i][t] is phi_i(t) as an index permutation
    chirality: LEFT reads hom-sets as A_i(F_i(...), a_i); RIGHT instances carry the
        tables of their left dual and read them as A_i(a_i, F_i(...))
    """

    cats: Tuple[FinCategory, ...]
    funs: Tuple[Functor, ...]
    isos: Tuple[Mapping[Tuple[Any, ...], Perm], ...]
    chirality: Chirality = Chirality.LEFT

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, MultiAdjunction):
            return NotImplemented
        return (
            self.chirality == other.chirality
            and self.cats == other.cats
            and self.isos == other.isos
            and self.funs == other.funs
        )

    def __hash__(self) -> int:
        return hash((self.chirality, tuple(c.name for c in self.cats)))

    def __str__(self) -> str:
        return self.name

    @property
    def name(self) -> str:
        return f"madj[{self.chirality.value}]({', '.join(c.name for c in self.cats)})"

    @property
    def n(self) -> int:
        return len(self.cats) - 1

    @property
    def size(self) -> int:
        return len(self.cats)

    def tuples(self) -> Iterator[Tuple[Any, ...]]:
        return itertools.product(*(c.objects for c in self.cats))

    def hom(self, i: int, t: Sequence[Any]) -> Tuple[Any, ...]:
        i %= self.size
        return self.cats[i].hom(self.funs[i].obj_map[others(t, i)], t[i])

    @cached_property
    def _iso_cache(self) -> Dict[Tuple[int, int, Tuple[Any, ...]], Perm]:
        return {}

    def hom_iso(self, i: int, j: int, t: Sequence[Any]) -> Perm:
        """phi_j∘...∘phi_{i+1}(t): the composite bijection from slot i's hom-set to slot j's."""
        i %= self.size
        j %= self.size
        key = (i, j, tuple(t))
        cached = self._iso_cache.get(key)
        if cached is not None:
            return cached
        perm = identity_perm(len(self.hom(i, t)))
        k = i
        while k != j:
            k = (k + 1) % self.size
            perm = compose_perms(self.isos[k][key[2]], perm)
        self._iso_cache[key] = perm
        return perm

    def transport(self, i: int, j: int, t: Sequence[Any], h: Any) -> Any:
        """Image of h in slot i's hom-set under hom_iso(i, j, t)."""
        perm = self.hom_iso(i, j, t)
        return self.hom(j, t)[perm[self.cats[i % self.size].position(h)]]

    def slot_morphism(self, i: int, j: int, t: Sequence[Any], u: Any) -> Any:
        """F_i applied to identities at t with u in slot j; a morphism of A_i."""
        ids = [
            u if k == j else self.cats[k].identity(t[k])
            for k in others(range(self.size), i)
        ]
        return self.funs[i].mor_map[tuple(ids)]


def verify_cycle(m: MultiAdjunction) -> Report:
    if m.chirality is Chirality.RIGHT:
        return verify_cycle(dualize(m))
    report = Report(f"multivariable adjunction {m.name}")
    size = m.size
    report.check(
        "arity",
        size >= 1 and len(m.funs) == size and len(m.isos) == size,
        size,
    )
    if not report.ok:
        return report
    for i in range(size):
        f = m.funs[i]
        report.check(
            "boundary",
            f.source == product(others(m.cats, i)) and f.target == opposite(m.cats[i]),
            i,
        )
    if not report.ok:
        return report
    for f in m.funs:
        report.extend(f.violations())
    if not report.ok:
        return report

    tuples = list(m.tuples())
    for t in tuples:
        for i in range(size):
            perm = m.isos[i].get(t)
            source = len(m.hom(i - 1, t))
            report.check(
                "bijection",
                perm is not None
                and source == len(m.hom(i, t))
                and is_permutation(perm, source),
                i,
                t,
            )
    if not report.ok:
        return report

    for j in range(size):
        for u in m.cats[j].morphisms:
            for t in tuples:
                if t[j] != u.src:
                    continue
                t2 = _replace(t, j, u.tgt)
                for i in range(size):
                    for h in m.hom(i - 1, t):
                        moved = _act(m, i - 1, j, t, u.id, h)
                        report.check(
                            "naturality",
                            m.transport(i - 1, i, t2, moved)
                            == _act(m, i, j, t, u.id, m.transport(i - 1, i, t, h)),
                            i,
                            j,
                            u.id,
                            t,
                        )
    if not report.ok:
        return report

    for t in tuples:
        perm = identity_perm(len(m.hom(size - 1, t)))
        for i in range(size):
            perm = compose_perms(m.isos[i][t], perm)
        report.check("cycle", perm == identity_perm(len(perm)), t)
    return report


def _act(
    m: MultiAdjunction, i: int, j: int, t: Sequence[Any], u: Any, h: Any
) -> Any:
    """The action of u: t[j] -> u' on the slot-i hom-set at t, landing at t with u' in slot j."""
    i %= m.size
    if i == j:
        return m.cats[i].compose(u, h)
    return m.cats[i].compose(h, m.slot_morphism(i, j, t, u))


def one_variable(
    m: MultiAdjunction, i: int, j: int, t: Sequence[Any]
) -> MutualLeftAdjunction:
    """
    The one-variable mutual left adjunction between slots i and j with the other
    variables fixed by t (entries i and j of t are ignored):
    F_i(..., -, ...): A_j -> A_i^op and F_j(..., -, ...): A_i -> A_j^op.
    """
    size = m.size
    if not (0 <= i < size and 0 <= j < size) or i == j:
        raise IndexOutOfRangeException(f"slots {i} and {j} of {m.name}")
    f = restrict_functor(m.funs[i], others(range(size), i).index(j), others(t, i))
    g = restrict_functor(m.funs[j], others(range(size), j).index(i), others(t, j))
    phi: Dict[Tuple[Any, Any], Perm] = {}
    for a in m.cats[j].objects:
        for b in m.cats[i].objects:
            phi[(a, b)] = m.hom_iso(i, j, _replace(_replace(t, j, a), i, b))
    return MutualLeftAdjunction(f, g, phi)


def _rest(t: Sequence[Any], k: int) -> Tuple[Any, ...]:
    """The entries a_1..a_n of t other than a_k."""
    return tuple(t[idx] for idx in range(1, len(t)) if idx != k)


def _slot_values(n: int, k: int, rest: Sequence[Any]) -> Tuple[Any, ...]:
    """Arguments a_1..a_n of F_0 with a placeholder in slot k."""
    values = list(rest)
    values.insert(k - 1, None)
    return tuple(values)


def search_adjoints(f0: Functor) -> Dict[AdjointKey, MutualLeftAdjunction]:
    """One-variable mutual left adjoints of F_0 in each slot, from adjoint_search."""
    factors = factors_of(f0.source)
    n = len(factors)
    adjoints: Dict[AdjointKey, MutualLeftAdjunction] = {}
    for k in range(1, n + 1):
        choices = [factors[idx - 1].objects for idx in range(1, n + 1) if idx != k]
        for rest in itertools.product(*choices):
            restricted = restrict_functor(f0, k - 1, _slot_values(n, k, rest))
            try:
                adjoints[(k, rest)] = adjoint_search(restricted)
            except NotAdjointException as e:
                LOG.debug(
                    "Slot %d at %r has no adjoint (witness %r)", k, rest, e.witness
                )
                raise NotAdjointException((k, rest))
    return adjoints


def extract_adjoints(m: MultiAdjunction) -> Dict[AdjointKey, MutualLeftAdjunction]:
    """The one-variable adjunctions between slot 0 and each slot k of an instance."""
    adjoints: Dict[AdjointKey, MutualLeftAdjunction] = {}
    for k in range(1, m.size):
        for t in m.tuples():
            key = (k, _rest(t, k))
            if key not in adjoints:
                adjoints[key] = one_variable(m, 0, k, t)
    return adjoints


def from_primary(
    f0: Functor, adjoints: Mapping[AdjointKey, MutualLeftAdjunction]
) -> MultiAdjunction:
    """
    Assembles an n-variable adjunction from F_0 and, for every slot k and every fixed
    tuple of the remaining inputs, a mutual left adjunction (F_0(..., -, ...), G).

    The functors F_k are extended to morphisms with Mac Lane's parameter theorem and
    phi_k = Psi_k∘Psi_{k-1}^-1 where Psi_k is the supplied bijection for slot k.
    """
    factors = factors_of(f0.source)
    n = len(factors)
    size = n + 1
    cats = (opposite(f0.target),) + factors

    for k in range(1, size):
        choices = [cats[idx].objects for idx in range(1, size) if idx != k]
        for rest in itertools.product(*choices):
            key = (k, rest)
            adj = adjoints.get(key)
            if (
                adj is None
                or adj.f != restrict_functor(f0, k - 1, _slot_values(n, k, rest))
                or not verify_mutual_left(adj).ok
            ):
                raise NotAdjointException(key)

    funs: List[Functor] = [f0]
    for k in range(1, size):
        funs.append(_parameterised_adjoint(f0, cats, k, adjoints))

    tuples = list(itertools.product(*(c.objects for c in cats)))
    isos: List[Dict[Tuple[Any, ...], Perm]] = [{} for _ in range(size)]
    for t in tuples:
        psi: List[Perm] = [
            identity_perm(len(cats[0].hom(f0.obj_map[t[1:]], t[0])))
        ]
        for k in range(1, size):
            psi.append(adjoints[(k, _rest(t, k))].phi[(t[k], t[0])])
        for k in range(1, size):
            isos[k][t] = compose_perms(psi[k], invert_perm(psi[k - 1]))
        isos[0][t] = invert_perm(psi[n])

    m = MultiAdjunction(cats, tuple(funs), tuple(isos))
    report = verify_cycle(m)
    if not report.ok:
        raise NaturalityFailureException(report)
    LOG.debug("Assembled %s from its primary functor", m.name)
    return m


def _parameterised_adjoint(
    f0: Functor,
    cats: Tuple[FinCategory, ...],
    k: int,
    adjoints: Mapping[AdjointKey, MutualLeftAdjunction],
) -> Functor:
    size = len(cats)
    source = product(others(cats, k))
    a0 = cats[0]
    obj_map: Dict[Any, Any] = {}
    for rest in source.objects:
        t = full_tuple(size, k, rest, None)
        obj_map[rest] = adjoints[(k, _rest(t, k))].g.obj_map[t[0]]

    mor_map: Dict[Any, Any] = {}
    for u in source.morphisms:
        x = obj_map[u.src]
        t = full_tuple(size, k, u.src, x)
        t2 = full_tuple(size, k, u.tgt, x)
        parts = full_tuple(size, k, u.id, cats[k].identity(x))
        adj = adjoints[(k, _rest(t, k))]
        adj2 = adjoints[(k, _rest(t2, k))]
        counit = adj.untranspose(x, t[0], cats[k].identity(x))
        e = a0.chain(parts[0], counit, f0.mor_map[parts[1:]])
        mor_map[u.id] = adj2.transpose(x, t2[0], e)
    return Functor(source, opposite(cats[k]), obj_map, mor_map)


def restrict(m: MultiAdjunction, k: int, a_k: Any) -> MultiAdjunction:
    """
    Fix slot k to a_k. The bijection spanning the removed slot is the composite
    phi_{k+1}∘phi_k; when k == 0 the old slot 1 becomes the new slot 0.
    """
    if m.n == 0 or not 0 <= k <= m.n:
        raise IndexOutOfRangeException(f"slot {k} of {m.name}")
    if m.chirality is Chirality.RIGHT:
        return dualize(restrict(dualize(m), k, a_k))
    size = m.size
    keep = [i for i in range(size) if i != k]
    cats = tuple(m.cats[i] for i in keep)
    funs = tuple(
        fix_factor(m.funs[i], others(range(size), i).index(k), a_k) for i in keep
    )
    isos: List[Dict[Tuple[Any, ...], Perm]] = []
    for p, i in enumerate(keep):
        prev = keep[p - 1]
        table: Dict[Tuple[Any, ...], Perm] = {}
        for t in itertools.product(*(c.objects for c in cats)):
            full = tuple(t[:k]) + (a_k,) + tuple(t[k:])
            table[t] = m.hom_iso(prev, i, full)
        isos.append(table)
    return MultiAdjunction(cats, funs, tuple(isos), m.chirality)


def cyclic_shift(m: MultiAdjunction) -> MultiAdjunction:
    """Slot i+1 becomes slot i; applying it n+1 times gives m back."""
    size = m.size
    return MultiAdjunction(
        rotate(m.cats),
        rotate(m.funs),
        tuple(
            {rotate(t): p for t, p in m.isos[(i + 1) % size].items()}
            for i in range(size)
        ),
        m.chirality,
    )


def dualize(m: MultiAdjunction) -> MultiAdjunction:
    """Opposite categories and functors with the same bijection tables; flips chirality."""
    return MultiAdjunction(
        tuple(opposite(c) for c in m.cats),
        tuple(opposite_functor(f) for f in m.funs),
        m.isos,
        m.chirality.flipped(),
    )


def identity_adjunction(x: FinCategory) -> MultiAdjunction:
    """The unary adjunction from x to x: categories (x^op, x) with identity functors."""
    cats = (opposite(x), x)
    isos: Tuple[Dict[Tuple[Any, ...], Perm], ...] = ({}, {})
    for a0 in cats[0].objects:
        for a1 in x.objects:
            size = len(x.hom(a0, a1))
            isos[0][(a0, a1)] = identity_perm(size)
            isos[1][(a0, a1)] = identity_perm(size)
    return MultiAdjunction(
        cats,
        (unary(identity_functor(x)), unary(identity_functor(cats[0]))),
        isos,
    )


def object_pick(x: FinCategory, a: Any) -> MultiAdjunction:
    """The 0-variable adjunction with output x picking the object a."""
    base = opposite(x)
    pick = Functor(terminal(), x, {(): a}, {(): x.identity(a)})
    return MultiAdjunction(
        (base,),
        (pick,),
        ({(a0,): identity_perm(len(base.hom(a, a0))) for a0 in base.objects},),
    )


def from_mutual_left(c: MutualLeftAdjunction) -> MultiAdjunction:
    """The unary adjunction with categories (B, A) carrying (F, G, phi)."""
    isos: Tuple[Dict[Tuple[Any, ...], Perm], ...] = ({}, {})
    for b in c.b.objects:
        for a in c.a.objects:
            isos[1][(b, a)] = c.phi[(a, b)]
            isos[0][(b, a)] = invert_perm(c.phi[(a, b)])
    return MultiAdjunction((c.b, c.a), (unary(c.f), unary(c.g)), isos)


def to_mutual_left(m: MultiAdjunction) -> MutualLeftAdjunction:
    if m.n != 1:
        raise IndexOutOfRangeException(f"{m.name} is not unary")
    return one_variable(m, 0, 1, next(m.tuples()))


def output(m: MultiAdjunction) -> FinCategory:
    return opposite(m.cats[0])


def inputs(m: MultiAdjunction) -> Tuple[FinCategory, ...]:
    return m.cats[1:]


def compose_multi(g: MultiAdjunction, fs: Sequence[MultiAdjunction]) -> MultiAdjunction:
    """
    Substitutes the outputs of fs into the inputs of g. The composite's primary functor
    is G_0(F_10(...), ..., F_k0(...)) and its one-variable adjoints are composites of the
    one-variable adjoints of g and of the f_i.
    """
    chiralities = {g.chirality} | {f.chirality for f in fs}
    if chiralities == {Chirality.RIGHT}:
        return dualize(compose_multi(dualize(g), [dualize(f) for f in fs]))
    if chiralities != {Chirality.LEFT}:
        raise BoundaryMismatchException("cannot compose left and right adjunctions")
    k = g.n
    if k == 0:
        raise BoundaryMismatchException(f"{g.name} has no inputs to compose into")
    if len(fs) != k:
        raise BoundaryMismatchException(f"{g.name} takes {k} inputs, got {len(fs)}")
    for i, f in enumerate(fs, start=1):
        if g.cats[i] != opposite(f.cats[0]):
            raise BoundaryMismatchException(
                f"input {i} of {g.name} is not the output of {f.name}"
            )

    h0 = substitute(g.funs[0], [f.funs[0] for f in fs])
    blocks: List[Tuple[int, int]] = [
        (i, j) for i, f in enumerate(fs, start=1) for j in range(1, f.size)
    ]
    offsets: List[int] = []
    start = 0
    for f in fs:
        offsets.append(start)
        start += f.n
    flat_factors = factors_of(h0.source)

    inner_cache: Dict[Tuple[Any, ...], MutualLeftAdjunction] = {}
    outer_cache: Dict[Tuple[Any, ...], MutualLeftAdjunction] = {}
    adjoints: Dict[AdjointKey, MutualLeftAdjunction] = {}
    for p, (i, j) in enumerate(blocks, start=1):
        f = fs[i - 1]
        others_objects = [
            flat_factors[q].objects for q in range(len(blocks)) if q != p - 1
        ]
        for rest in itertools.product(*others_objects):
            flat = list(rest)
            flat.insert(p - 1, None)
            chunks = [
                tuple(flat[offsets[idx] : offsets[idx] + fs[idx].n]) for idx in range(k)
            ]
            local = (None,) + chunks[i - 1]
            inner_key = (i, j) + _replace(local, j, None)
            inner = inner_cache.get(inner_key)
            if inner is None:
                inner = one_variable(f, 0, j, local)
                inner_cache[inner_key] = inner
            fixed = [None] + [
                fs[idx].funs[0].obj_map[chunks[idx]] if idx != i - 1 else None
                for idx in range(k)
            ]
            outer_key = (i,) + tuple(fixed)
            outer = outer_cache.get(outer_key)
            if outer is None:
                outer = one_variable(g, 0, i, fixed)
                outer_cache[outer_key] = outer
            adjoints[(p, tuple(rest))] = compose_mutual(inner, outer)
    LOG.debug("Composing %s with %d adjunctions", g.name, k)
    return from_primary(h0, adjoints)
