"""
One-variable adjunctions in ordinary and mutual form, the adjoint search oracle and
the mates correspondence.

A mutual left adjunction between A and B is a pair F: A -> B^op, G: B -> A^op with
bijections B(Fa, b) ≅ A(Gb, a) natural in a and b. It is the same data as the ordinary
adjunction F^op ⊣ G : B -> A^op.
"""
from __future__ import annotations

import itertools
import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Tuple, Union

from .fincat import (
    BoundaryMismatchException,
    FinCategory,
    Functor,
    NatTransformation,
    Perm,
    compose_functors,
    compose_perms,
    debug_checks,
    identity_functor,
    invert_perm,
    is_permutation,
    opposite,
    opposite_functor,
    opposite_transformation,
)
from .report import MadjException, Report, jsonable

LOG = logging.getLogger(__name__)


class InvalidAdjunctionException(MadjException):
    def __init__(self, report: Report):
        super().__init__(report.title)
        self.report = report

    def __str__(self) -> str:
        return str(self.report)


class TriangleFailureException(InvalidAdjunctionException):
    pass


class NotAdjointException(MadjException):
    """No adjoint exists; witness is the object (or slot and fixed tuple) that has no representing object."""

    def __init__(self, witness: Any):
        super().__init__(witness)
        self.witness = witness

    def __str__(self) -> str:
        return json.dumps({"not_adjoint": jsonable(self.witness)})


@dataclass(frozen=True, eq=False)
class MutualLeftAdjunction:
    """
    F: A -> B^op, G: B -> A^op and phi[(a, b)], the index permutation taking
    B.hom(Fa, b) onto A.hom(Gb, a).
    """

    f: Functor
    g: Functor
    phi: Mapping[Tuple[Any, Any], Perm]

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, MutualLeftAdjunction):
            return NotImplemented
        return self.phi == other.phi and self.f == other.f and self.g == other.g

    def __hash__(self) -> int:
        return hash((hash(self.f), hash(self.g)))

    @property
    def a(self) -> FinCategory:
        return self.f.source

    @property
    def b(self) -> FinCategory:
        return self.g.source

    def transpose(self, a: Any, b: Any, h: Any) -> Any:
        """phi_{a,b}(h) for h: Fa -> b in B."""
        target = self.a.hom(self.g.obj_map[b], a)
        return target[self.phi[(a, b)][self.b.position(h)]]

    def untranspose(self, a: Any, b: Any, k: Any) -> Any:
        """The inverse of transpose, for k: Gb -> a in A."""
        source = self.b.hom(self.f.obj_map[a], b)
        return source[self.phi[(a, b)].index(self.a.position(k))]

    def swap(self) -> MutualLeftAdjunction:
        """The same adjunction read from the other side: (G, F, phi inverse)."""
        return MutualLeftAdjunction(
            self.g, self.f, {(b, a): invert_perm(p) for (a, b), p in self.phi.items()}
        )


@dataclass(frozen=True, eq=False)
class MutualRightAdjunction:
    """
    F: A -> B^op, G: B -> A^op with phi[(a, b)] taking B.hom(b, Fa) onto A.hom(a, Gb).
    The tables are those of a mutual left adjunction between A^op and B^op.
    """

    f: Functor
    g: Functor
    phi: Mapping[Tuple[Any, Any], Perm]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MutualRightAdjunction):
            return NotImplemented
        return self.phi == other.phi and self.f == other.f and self.g == other.g

    def __hash__(self) -> int:
        return hash((hash(self.f), hash(self.g)))


def right_to_left(r: MutualRightAdjunction) -> MutualLeftAdjunction:
    return MutualLeftAdjunction(opposite_functor(r.f), opposite_functor(r.g), r.phi)


def left_to_right(c: MutualLeftAdjunction) -> MutualRightAdjunction:
    return MutualRightAdjunction(opposite_functor(c.f), opposite_functor(c.g), c.phi)


@dataclass(frozen=True, eq=False)
class OrdinaryAdjunction:
    """left ⊣ right with left: A -> B, unit: 1 => right∘left and counit: left∘right => 1."""

    left: Functor
    right: Functor
    unit: NatTransformation
    counit: NatTransformation

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrdinaryAdjunction):
            return NotImplemented
        return (
            self.left == other.left
            and self.right == other.right
            and self.unit == other.unit
            and self.counit == other.counit
        )

    def __hash__(self) -> int:
        return hash((hash(self.left), hash(self.right)))


Adjunction = Union[MutualLeftAdjunction, OrdinaryAdjunction]


def verify_mutual_left(c: MutualLeftAdjunction) -> Report:
    report = Report(f"mutual left adjunction {c.f} / {c.g}")
    a_cat, b_cat = c.a, c.b
    report.check(
        "boundary",
        c.f.target == opposite(b_cat) and c.g.target == opposite(a_cat),
        str(c.f),
        str(c.g),
    )
    if not report.ok:
        return report
    report.extend(c.f.violations()).extend(c.g.violations())
    if not report.ok:
        return report

    f_obj, g_obj = c.f.obj_map, c.g.obj_map
    for a in a_cat.objects:
        for b in b_cat.objects:
            perm = c.phi.get((a, b))
            size = len(b_cat.hom(f_obj[a], b))
            report.check(
                "bijection",
                perm is not None
                and size == len(a_cat.hom(g_obj[b], a))
                and is_permutation(perm, size),
                a,
                b,
            )
    if not report.ok:
        return report

    for k in a_cat.morphisms:
        fk = c.f.mor_map[k.id]
        for b in b_cat.objects:
            for h in b_cat.hom(f_obj[k.src], b):
                report.check(
                    "naturality_a",
                    c.transpose(k.tgt, b, b_cat.compose(h, fk))
                    == a_cat.compose(k.id, c.transpose(k.src, b, h)),
                    k.id,
                    b,
                    h,
                )
    for lm in b_cat.morphisms:
        gl = c.g.mor_map[lm.id]
        for a in a_cat.objects:
            for h in b_cat.hom(f_obj[a], lm.src):
                report.check(
                    "naturality_b",
                    c.transpose(a, lm.tgt, b_cat.compose(lm.id, h))
                    == a_cat.compose(c.transpose(a, lm.src, h), gl),
                    a,
                    lm.id,
                    h,
                )
    if not report.ok:
        return report

    eta, epsilon = _unit_counit(c)
    for a in a_cat.objects:
        report.check(
            "triangle_left",
            b_cat.compose(epsilon[f_obj[a]], c.f.mor_map[eta[a]])
            == b_cat.identity(f_obj[a]),
            a,
        )
    for b in b_cat.objects:
        report.check(
            "triangle_right",
            a_cat.compose(eta[g_obj[b]], c.g.mor_map[epsilon[b]])
            == a_cat.identity(g_obj[b]),
            b,
        )
    return report


def verify_mutual_right(r: MutualRightAdjunction) -> Report:
    return verify_mutual_left(right_to_left(r))


def _unit_counit(c: MutualLeftAdjunction) -> Tuple[Dict[Any, Any], Dict[Any, Any]]:
    eta = {
        a: c.transpose(a, c.f.obj_map[a], c.b.identity(c.f.obj_map[a]))
        for a in c.a.objects
    }
    epsilon = {
        b: c.untranspose(c.g.obj_map[b], b, c.a.identity(c.g.obj_map[b]))
        for b in c.b.objects
    }
    return eta, epsilon


def unit_counit(c: MutualLeftAdjunction) -> Tuple[Dict[Any, Any], Dict[Any, Any]]:
    """
    eta_a = phi_{a,Fa}(id): GFa -> a in A and epsilon_b = phi^-1_{Gb,b}(id): FGb -> b in B.
    """
    report = verify_mutual_left(c)
    if not report.ok:
        raise InvalidAdjunctionException(report)
    return _unit_counit(c)


def triangle_violations(o: OrdinaryAdjunction) -> Report:
    report = Report(f"adjunction {o.left} ⊣ {o.right}")
    a_cat, b_cat = o.left.source, o.left.target
    report.check(
        "boundary",
        o.right.source == b_cat
        and o.right.target == a_cat
        and o.unit.source == identity_functor(a_cat)
        and o.unit.target == compose_functors(o.right, o.left)
        and o.counit.source == compose_functors(o.left, o.right)
        and o.counit.target == identity_functor(b_cat),
        str(o.left),
        str(o.right),
    )
    if not report.ok:
        return report
    report.extend(o.unit.violations()).extend(o.counit.violations())
    if not report.ok:
        return report
    for a in a_cat.objects:
        fa = o.left.obj_map[a]
        report.check(
            "triangle_left",
            b_cat.compose(
                o.counit.components[fa], o.left.mor_map[o.unit.components[a]]
            )
            == b_cat.identity(fa),
            a,
        )
    for b in b_cat.objects:
        gb = o.right.obj_map[b]
        report.check(
            "triangle_right",
            a_cat.compose(
                o.right.mor_map[o.counit.components[b]], o.unit.components[gb]
            )
            == a_cat.identity(gb),
            b,
        )
    return report


def to_ordinary(c: MutualLeftAdjunction) -> OrdinaryAdjunction:
    """F^op ⊣ G as an ordinary adjunction between A^op and B."""
    eta, epsilon = unit_counit(c)
    left = opposite_functor(c.f)
    right = c.g
    return OrdinaryAdjunction(
        left,
        right,
        NatTransformation(
            identity_functor(left.source), compose_functors(right, left), eta
        ),
        NatTransformation(
            compose_functors(left, right), identity_functor(right.source), epsilon
        ),
    )


def from_unit_counit(o: OrdinaryAdjunction) -> MutualLeftAdjunction:
    report = triangle_violations(o)
    if not report.ok:
        raise TriangleFailureException(report)
    a_cat, b_cat = o.left.source, o.left.target
    phi: Dict[Tuple[Any, Any], Perm] = {}
    for a in a_cat.objects:
        for b in b_cat.objects:
            phi[(a, b)] = tuple(
                a_cat.position(
                    a_cat.compose(o.right.mor_map[h], o.unit.components[a])
                )
                for h in b_cat.hom(o.left.obj_map[a], b)
            )
    return MutualLeftAdjunction(opposite_functor(o.left), o.right, phi)


def adjoint_search(f: Functor) -> MutualLeftAdjunction:
    """
    Finds G and phi making (F, G) a mutual left adjunction, or raises
    NotAdjointException naming the first b with no representing object.

    For each b the representing pair (Gb, p: F(Gb) -> b) is the first in stored
    order for which h |-> p∘F(h) is a bijection A(Gb, a) -> B(Fa, b) for every a.
    """
    a_cat = f.source
    b_cat = opposite(f.target)
    reps: Dict[Any, Tuple[Any, Any]] = {}
    for b in b_cat.objects:
        rep = _representing_pair(f, a_cat, b_cat, b)
        if rep is None:
            LOG.debug("No representing object for %r under %s", b, f)
            raise NotAdjointException(b)
        reps[b] = rep

    g_mor: Dict[Any, Any] = {}
    for lm in b_cat.morphisms:
        x, p = reps[lm.src]
        x2, p2 = reps[lm.tgt]
        wanted = b_cat.compose(lm.id, p)
        g_mor[lm.id] = next(
            h
            for h in a_cat.hom(x2, x)
            if b_cat.compose(p2, f.mor_map[h]) == wanted
        )
    g = Functor(b_cat, opposite(a_cat), {b: x for b, (x, _) in reps.items()}, g_mor)

    phi: Dict[Tuple[Any, Any], Perm] = {}
    for a in a_cat.objects:
        for b, (x, p) in reps.items():
            images = {
                b_cat.compose(p, f.mor_map[h]): j
                for j, h in enumerate(a_cat.hom(x, a))
            }
            phi[(a, b)] = tuple(images[k] for k in b_cat.hom(f.obj_map[a], b))
    result = MutualLeftAdjunction(f, g, phi)
    if debug_checks():
        assert verify_mutual_left(result).ok
    return result


def _representing_pair(
    f: Functor, a_cat: FinCategory, b_cat: FinCategory, b: Any
) -> Tuple[Any, Any] | None:
    for x in a_cat.objects:
        for p in b_cat.hom(f.obj_map[x], b):
            if all(_is_bijective(f, a_cat, b_cat, x, p, a, b) for a in a_cat.objects):
                LOG.debug("%r represented by %r via %r", b, x, p)
                return x, p
    return None


def _is_bijective(
    f: Functor, a_cat: FinCategory, b_cat: FinCategory, x: Any, p: Any, a: Any, b: Any
) -> bool:
    source = a_cat.hom(x, a)
    target = b_cat.hom(f.obj_map[a], b)
    if len(source) != len(target):
        return False
    return len({b_cat.compose(p, f.mor_map[h]) for h in source}) == len(target)


def compose_mutual(
    inner: MutualLeftAdjunction, outer: MutualLeftAdjunction
) -> MutualLeftAdjunction:
    """
    inner: (F: A -> X^op, G: X -> A^op), outer: (F': X^op -> C^op, G': C -> X)
    compose to (F'F, GG') with phi''_{a,c} = phi_{a,G'c} ∘ phi'_{Fa,c}.
    """
    if outer.f.source != inner.f.target:
        raise BoundaryMismatchException(
            f"cannot compose {outer.f} after {inner.f}"
        )
    phi: Dict[Tuple[Any, Any], Perm] = {}
    for a in inner.a.objects:
        x = inner.f.obj_map[a]
        for c in outer.b.objects:
            phi[(a, c)] = compose_perms(
                inner.phi[(a, outer.g.obj_map[c])], outer.phi[(x, c)]
            )
    return MutualLeftAdjunction(
        compose_functors(outer.f, inner.f), compose_functors(inner.g, outer.g), phi
    )


def mate_component(
    target: FinCategory, counit: Any, alpha: Any, t: Functor
) -> Any:
    """T(counit)∘alpha, the morphism whose transpose is a mate component."""
    return target.compose(t.mor_map[counit], alpha)


def _mutual_mate(
    alpha: NatTransformation,
    source: MutualLeftAdjunction,
    target: MutualLeftAdjunction,
    s: Functor,
    t: Functor,
) -> NatTransformation:
    if (
        s.source != source.a
        or s.target != target.a
        or t.source != source.b
        or t.target != target.b
    ):
        raise BoundaryMismatchException("sides do not match the adjunctions")
    components: Dict[Any, Any] = {}
    for b in source.b.objects:
        gb = source.g.obj_map[b]
        counit = source.untranspose(gb, b, source.a.identity(gb))
        e = mate_component(target.b, counit, alpha.components[gb], t)
        components[b] = target.transpose(s.obj_map[gb], t.obj_map[b], e)
    return NatTransformation(
        compose_functors(opposite_functor(s), source.g),
        compose_functors(target.g, t),
        components,
    )


def mate1(
    alpha: NatTransformation,
    source: Adjunction,
    target: Adjunction,
    s: Functor,
    t: Functor,
) -> NatTransformation:
    """
    The mate of a square alpha between two adjunctions with sides s (on the A side)
    and t (on the B side).

    Ordinary form: alpha: F'S => TF gives SG => G'T, with components
    G'T(epsilon_b)∘G'(alpha_Gb)∘eta'_SGb.
    Mutual form: alpha with components F'(Sa) -> T(Fa) in B' gives the cell with
    components G'(Tb) -> S(Gb) in A', namely phi'(T(epsilon_b)∘alpha_Gb).
    """
    if isinstance(source, OrdinaryAdjunction):
        assert isinstance(target, OrdinaryAdjunction)
        return _mutual_mate(
            opposite_transformation(alpha),
            from_unit_counit(source),
            from_unit_counit(target),
            opposite_functor(s),
            t,
        )
    assert isinstance(target, MutualLeftAdjunction)
    return _mutual_mate(alpha, source, target, s, t)


def unmate1(
    beta: NatTransformation,
    source: Adjunction,
    target: Adjunction,
    s: Functor,
    t: Functor,
) -> NatTransformation:
    """The inverse of mate1 for the same adjunctions and sides."""
    if isinstance(source, OrdinaryAdjunction):
        assert isinstance(target, OrdinaryAdjunction)
        return opposite_transformation(
            _mutual_mate(
                beta,
                from_unit_counit(source).swap(),
                from_unit_counit(target).swap(),
                t,
                opposite_functor(s),
            )
        )
    assert isinstance(target, MutualLeftAdjunction)
    return _mutual_mate(beta, source.swap(), target.swap(), t, s)


def squares(
    source: MutualLeftAdjunction,
    target: MutualLeftAdjunction,
    s: Functor,
    t: Functor,
) -> List[NatTransformation]:
    """Every mutual-form square with the given sides, in stored order of components."""
    f_src = compose_functors(opposite_functor(t), source.f)
    f_tgt = compose_functors(target.f, s)
    ambient = f_src.target
    choices = [
        ambient.hom(f_src.obj_map[a], f_tgt.obj_map[a]) for a in source.a.objects
    ]
    found: List[NatTransformation] = []
    for picks in itertools.product(*choices):
        cell = NatTransformation(f_src, f_tgt, dict(zip(source.a.objects, picks)))
        if cell.violations().ok:
            found.append(cell)
    return found
