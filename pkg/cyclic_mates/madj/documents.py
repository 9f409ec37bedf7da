"""
JSON documents for categories, functors, adjunctions, multivariable adjunctions, 2-cells
and universes.

JSON arrays decode to tuples throughout, so product objects and morphism ids survive a
round trip. A category reference is one of

    "name"                  an entry of the document's "categories" table, a built-in
                            category (C<n>, H3, B2, Ł3, Z2, 1) or, when it ends in
                            .json, a fincat/1 file relative to the document
    {"opposite": ref}
    {"product": [ref, ...]}
    {"arrow": ref}
    {"objects": ..., ...}   inline tables

Functor documents with "thin": true give only the object map; morphisms are implied.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from .adjoint1 import MutualLeftAdjunction, adjoint_search
from .catalog import meet_adjunction, named_category, thin_functor
from .const import (
    ARITY_BOUND_DEFAULT,
    SCHEMA_ADJ,
    SCHEMA_FINCAT,
    SCHEMA_FUNCTOR,
    SCHEMA_MADJ,
    SCHEMA_TWOCELL,
    SCHEMA_UNIVERSE,
)
from .cyclic_mcat import Universe
from .fincat import (
    FinCategory,
    Functor,
    Morphism,
    arrow_category,
    compose_functors,
    identity_functor,
    opposite,
    opposite_functor,
    product,
    validate_category,
)
from .mates_n import TwoCell, identity_cell, thin_cell
from .multiadjoint import (
    Chirality,
    MultiAdjunction,
    compose_multi,
    cyclic_shift,
    dualize,
    from_primary,
    identity_adjunction,
    object_pick,
    others,
    restrict,
    search_adjoints,
)
from .report import MadjException

LOG = logging.getLogger(__name__)

Document = Dict[str, Any]


class MalformedDocumentException(MadjException):
    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where
        self.message = message

    def __str__(self) -> str:
        return json.dumps({"malformed": self.where, "message": self.message})


def tuplify(value: Any) -> Any:
    """Turn decoded JSON arrays into tuples, recursively."""
    if isinstance(value, list):
        return tuple(tuplify(v) for v in value)  # type: ignore
    return value


def _pairs(doc: Document, key: str, where: str) -> List[Tuple[Any, Any]]:
    entries = doc.get(key, [])
    if not isinstance(entries, list):
        raise MalformedDocumentException(where, f'"{key}" must be a list of pairs')
    pairs: List[Tuple[Any, Any]] = []
    for entry in entries:  # type: ignore
        if not isinstance(entry, list) or len(entry) != 2:  # type: ignore
            raise MalformedDocumentException(where, f'bad entry {entry!r} in "{key}"')
        pairs.append((tuplify(entry[0]), tuplify(entry[1])))
    return pairs


def _require(doc: Mapping[str, Any], key: str, where: str) -> Any:
    if key not in doc:
        raise MalformedDocumentException(where, f'missing "{key}"')
    return doc[key]


@dataclass
class _Scope:
    base: Path
    where: str
    categories: Mapping[str, Any] = field(default_factory=dict)
    resolved: Dict[str, FinCategory] = field(default_factory=dict)


class DocumentLoader:
    """Reads documents and resolves the references between them; files are read once."""

    def __init__(self, base: Optional[Path] = None):
        self.base = base or Path.cwd()
        self._cache: Dict[Path, Any] = {}

    def load(self, path: Union[str, Path]) -> Tuple[str, Any]:
        """The schema of the file and the decoded object."""
        resolved = (self.base / path).resolve()
        doc = self._read(resolved)
        schema = doc.get("schema")
        return schema, self._cached(resolved, doc)

    def _read(self, path: Path) -> Document:
        try:
            with open(path, encoding="utf-8") as f:
                doc = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise MalformedDocumentException(str(path), str(e))
        if not isinstance(doc, dict):
            raise MalformedDocumentException(str(path), "not a JSON object")
        return doc  # type: ignore

    def _cached(self, path: Path, doc: Document) -> Any:
        if path not in self._cache:
            LOG.debug("Decoding %s", path)
            self._cache[path] = self.decode(doc, path.parent, str(path))
        return self._cache[path]

    def _file(self, ref: str, scope: _Scope, schema: str) -> Any:
        path = (scope.base / ref).resolve()
        doc = self._read(path)
        if doc.get("schema") != schema:
            raise MalformedDocumentException(
                str(path), f"expected schema {schema}, found {doc.get('schema')!r}"
            )
        return self._cached(path, doc)

    def decode(self, doc: Document, base: Path, where: str = "<document>") -> Any:
        scope = _Scope(base, where, doc.get("categories", {}))
        schema = doc.get("schema")
        if schema == SCHEMA_FINCAT:
            return self.category(doc, scope)
        if schema == SCHEMA_FUNCTOR:
            return self.functor(doc, scope)
        if schema == SCHEMA_ADJ:
            return self.adjunction(doc, scope)
        if schema == SCHEMA_MADJ:
            return self.madj(doc, scope)
        if schema == SCHEMA_TWOCELL:
            return self.twocell(doc, scope)
        if schema == SCHEMA_UNIVERSE:
            return self.universe(doc, scope)
        raise MalformedDocumentException(where, f"unknown schema {schema!r}")

    def category(self, ref: Any, scope: _Scope) -> FinCategory:
        if isinstance(ref, str):
            if ref in scope.resolved:
                return scope.resolved[ref]
            if ref in scope.categories:
                c = self.category(scope.categories[ref], scope)
            elif ref.endswith(".json"):
                c = self._file(ref, scope, SCHEMA_FINCAT)
            else:
                found = named_category(ref)
                if found is None:
                    raise MalformedDocumentException(
                        scope.where, f"unknown category {ref!r}"
                    )
                c = found
            scope.resolved[ref] = c
            return c
        if not isinstance(ref, dict):
            raise MalformedDocumentException(
                scope.where, f"bad category reference {ref!r}"
            )
        if "opposite" in ref:
            return opposite(self.category(ref["opposite"], scope))
        if "product" in ref:
            return product([self.category(r, scope) for r in ref["product"]])
        if "arrow" in ref:
            return arrow_category(self.category(ref["arrow"], scope)).category
        return self._tables(ref, scope)  # type: ignore

    def _tables(self, doc: Document, scope: _Scope) -> FinCategory:
        where = scope.where
        objects = tuple(tuplify(a) for a in _require(doc, "objects", where))
        morphisms: List[Morphism] = []
        for m in _require(doc, "morphisms", where):
            try:
                morphisms.append(
                    Morphism(tuplify(m["id"]), tuplify(m["src"]), tuplify(m["tgt"]))
                )
            except (KeyError, TypeError):
                raise MalformedDocumentException(where, f"bad morphism {m!r}")
        composition: Dict[Tuple[Any, Any], Any] = {}
        for entry in doc.get("composition", []):
            if not isinstance(entry, list) or len(entry) != 3:  # type: ignore
                raise MalformedDocumentException(where, f"bad composite {entry!r}")
            g, f, gf = (tuplify(x) for x in entry)  # type: ignore
            composition[(g, f)] = gf
        return validate_category(
            doc.get("name", "anonymous"),
            objects,
            morphisms,
            dict(_pairs(doc, "identities", where)),
            composition,
        )

    def functor(
        self,
        ref: Any,
        scope: _Scope,
        source: Optional[FinCategory] = None,
        target: Optional[FinCategory] = None,
    ) -> Functor:
        """A functor reference; source and target may be implied by the caller."""
        if isinstance(ref, str):
            return self._file(ref, scope, SCHEMA_FUNCTOR)
        if not isinstance(ref, dict):
            raise MalformedDocumentException(
                scope.where, f"bad functor reference {ref!r}"
            )
        if "identity" in ref:
            return identity_functor(self.category(ref["identity"], scope))
        if "opposite" in ref:
            return opposite_functor(self.functor(ref["opposite"], scope))
        if "compose" in ref:
            g, f = (self.functor(r, scope) for r in ref["compose"])
            return compose_functors(g, f)
        if "source" in ref:
            source = self.category(ref["source"], scope)
        if "target" in ref:
            target = self.category(ref["target"], scope)
        if source is None or target is None:
            raise MalformedDocumentException(
                scope.where, "functor without source or target"
            )
        if ref.get("thin"):
            objects = dict(_pairs(ref, "objects", scope.where))  # type: ignore
            return thin_functor(source, target, objects)
        return Functor(
            source,
            target,
            dict(_pairs(ref, "objects", scope.where)),  # type: ignore
            dict(_pairs(ref, "morphisms", scope.where)),  # type: ignore
        )

    def adjunction(self, doc: Document, scope: _Scope) -> MutualLeftAdjunction:
        f = self.functor(_require(doc, "f", scope.where), scope)
        if "g" not in doc:
            return adjoint_search(f)
        g = self.functor(doc["g"], scope, opposite(f.target), opposite(f.source))
        phi: Dict[Tuple[Any, Any], Any] = {}
        for entry in _require(doc, "phi", scope.where):
            a, b, perm = (tuplify(x) for x in entry)
            phi[(a, b)] = perm
        return MutualLeftAdjunction(f, g, phi)

    def madj(self, ref: Any, scope: _Scope) -> MultiAdjunction:
        if isinstance(ref, str):
            return self._file(ref, scope, SCHEMA_MADJ)
        if not isinstance(ref, dict):
            raise MalformedDocumentException(
                scope.where, f"bad adjunction reference {ref!r}"
            )
        doc: Document = ref  # type: ignore
        if "primary" in doc:
            f0 = self.functor(doc["primary"], scope)
            return from_primary(f0, search_adjoints(f0))
        if "meet" in doc:
            return meet_adjunction(self.category(doc["meet"], scope))
        if "identity" in doc:
            return identity_adjunction(self.category(doc["identity"], scope))
        if "pick" in doc:
            return object_pick(
                self.category(doc["pick"], scope),
                tuplify(_require(doc, "object", scope.where)),
            )
        if "shift" in doc:
            return cyclic_shift(self.madj(doc["shift"], scope))
        if "dual" in doc:
            return dualize(self.madj(doc["dual"], scope))
        if "restrict" in doc:
            return restrict(
                self.madj(doc["restrict"], scope),
                _require(doc, "slot", scope.where),
                tuplify(_require(doc, "object", scope.where)),
            )
        if "compose" in doc:
            parts = [self.madj(r, scope) for r in doc["compose"]]
            return compose_multi(parts[0], parts[1:])
        cats = tuple(
            self.category(r, scope) for r in _require(doc, "cats", scope.where)
        )
        funs = tuple(
            self.functor(r, scope, product(others(cats, i)), opposite(cats[i]))
            for i, r in enumerate(_require(doc, "funs", scope.where))
        )
        isos = tuple(
            {tuplify(t): tuplify(p) for t, p in table}
            for table in _require(doc, "isos", scope.where)
        )
        try:
            chirality = Chirality(doc.get("chirality", Chirality.LEFT.value))
        except ValueError:
            raise MalformedDocumentException(
                scope.where, f"bad chirality {doc['chirality']!r}"
            )
        return MultiAdjunction(cats, funs, isos, chirality)

    def twocell(self, ref: Any, scope: _Scope) -> TwoCell:
        if isinstance(ref, str):
            return self._file(ref, scope, SCHEMA_TWOCELL)
        if not isinstance(ref, dict):
            raise MalformedDocumentException(
                scope.where, f"bad 2-cell reference {ref!r}"
            )
        doc: Document = ref  # type: ignore
        if "identity" in doc:
            return identity_cell(
                self.madj(doc["identity"], scope), doc.get("anchor", 0)
            )
        source = self.madj(_require(doc, "source", scope.where), scope)
        target = self.madj(_require(doc, "target", scope.where), scope)
        refs = _require(doc, "sides", scope.where)
        sides = tuple(
            self.functor(r, scope, s, t)
            for r, s, t in zip(refs, source.cats, target.cats)
        )
        anchor = doc.get("anchor", 0)
        if doc.get("thin"):
            return thin_cell(source, target, sides, anchor)
        return TwoCell(
            source, target, sides, anchor, dict(_pairs(doc, "components", scope.where))
        )

    def universe(self, doc: Document, scope: _Scope) -> Universe:
        return Universe(
            tuple(self.category(r, scope) for r in doc.get("cats", [])),
            tuple(self.functor(r, scope) for r in doc.get("functors", [])),
            tuple(self.madj(r, scope) for r in doc.get("madjs", [])),
            tuple(self.twocell(r, scope) for r in doc.get("twocells", [])),
            doc.get("arity_bound", ARITY_BOUND_DEFAULT),
        )


def load(path: Union[str, Path]) -> Tuple[str, Any]:
    return DocumentLoader().load(path)


def dump_category(c: FinCategory) -> Document:
    """Products are written structurally, everything else as tables."""
    if c.factors is not None:
        return {"product": [dump_category(f) for f in c.factors]}
    return {
        "name": c.name,
        "objects": list(c.objects),
        "morphisms": [{"id": m.id, "src": m.src, "tgt": m.tgt} for m in c.morphisms],
        "identities": [[a, c.identities[a]] for a in c.objects],
        "composition": [[g, f, gf] for (g, f), gf in c.composition.items()],
    }


def _tables(f: Functor) -> Document:
    return {
        "objects": [[a, b] for a, b in f.obj_map.items()],
        "morphisms": [[m, n] for m, n in f.mor_map.items()],
    }


def dump_functor(f: Functor) -> Document:
    return {
        "source": dump_category(f.source),
        "target": dump_category(f.target),
        **_tables(f),
    }


def dump_adjunction(c: MutualLeftAdjunction) -> Document:
    return {
        "f": dump_functor(c.f),
        "g": _tables(c.g),
        "phi": [[a, b, list(p)] for (a, b), p in c.phi.items()],
    }


def dump_madj(m: MultiAdjunction) -> Document:
    return {
        "chirality": m.chirality.value,
        "cats": [dump_category(c) for c in m.cats],
        "funs": [_tables(f) for f in m.funs],
        "isos": [[[t, list(p)] for t, p in table.items()] for table in m.isos],
    }


def dump_twocell(t: TwoCell) -> Document:
    return {
        "source": dump_madj(t.source),
        "target": dump_madj(t.target),
        "sides": [_tables(s) for s in t.sides],
        "anchor": t.anchor,
        "components": [[k, v] for k, v in t.components.items()],
    }


def document(obj: Any) -> Document:
    """obj as a top-level document with its schema."""
    if isinstance(obj, FinCategory):
        body, schema = dump_category(obj), SCHEMA_FINCAT
    elif isinstance(obj, Functor):
        body, schema = dump_functor(obj), SCHEMA_FUNCTOR
    elif isinstance(obj, MutualLeftAdjunction):
        body, schema = dump_adjunction(obj), SCHEMA_ADJ
    elif isinstance(obj, MultiAdjunction):
        body, schema = dump_madj(obj), SCHEMA_MADJ
    elif isinstance(obj, TwoCell):
        body, schema = dump_twocell(obj), SCHEMA_TWOCELL
    elif isinstance(obj, Universe):
        body = {
            "cats": [dump_category(c) for c in obj.cats],
            "functors": [dump_functor(f) for f in obj.functors],
            "madjs": [dump_madj(m) for m in obj.madjs],
            "twocells": [dump_twocell(t) for t in obj.twocells],
            "arity_bound": obj.arity_bound,
        }
        schema = SCHEMA_UNIVERSE
    else:
        raise MalformedDocumentException(type(obj).__name__, "no document form")
    return {"schema": schema, **body}


def dumps(obj: Any, indent: Optional[int] = None) -> str:
    return json.dumps(document(obj), ensure_ascii=False, indent=indent)


def loads(text: str, base: Optional[Path] = None) -> Any:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedDocumentException("<string>", str(e))
    if not isinstance(doc, dict):
        raise MalformedDocumentException("<string>", "not a JSON object")
    loader = DocumentLoader(base)
    return loader.decode(doc, loader.base)  # type: ignore
