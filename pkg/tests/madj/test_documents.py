import json
import unittest
from pathlib import Path

import pytest

from cyclic_mates.madj.catalog import chain, meet_adjunction
from cyclic_mates.madj.const import SCHEMA_FINCAT, SCHEMA_FUNCTOR, SCHEMA_UNIVERSE
from cyclic_mates.madj.cyclic_mcat import Universe
from cyclic_mates.madj.documents import (
    DocumentLoader,
    MalformedDocumentException,
    document,
    dumps,
    load,
    loads,
    tuplify,
)
from cyclic_mates.madj.fincat import (
    InvalidCategoryException,
    opposite,
    opposite_functor,
)
from cyclic_mates.madj.mates_n import identity_cell
from cyclic_mates.madj.multiadjoint import compose_multi, identity_adjunction
from tests.madj.fixtures import (
    c3,
    data_path,
    floor_adjunction,
    floor_map,
    load_data,
    madj_data_dir,
)


class TestLoad(unittest.TestCase):
    def test_category_file(self):
        schema, c = load(data_path("c3.json"))
        self.assertEqual(schema, SCHEMA_FINCAT)
        self.assertEqual(c, c3())

    def test_thin_functor(self):
        schema, f = load(data_path("floor_op.json"))
        self.assertEqual(schema, SCHEMA_FUNCTOR)
        self.assertEqual(f, opposite_functor(floor_map()))

    def test_named_adjunctions(self):
        h3 = chain(3, "H3")
        self.assertEqual(load_data("meet_h3.json"), meet_adjunction(h3))
        self.assertEqual(
            load_data("identity_h3op.json"), identity_adjunction(opposite(h3))
        )
        self.assertEqual(
            load_data("meet_h3_cell.json"), identity_cell(meet_adjunction(h3))
        )

    def test_universe(self):
        schema, universe = load(data_path("universe_h3.json"))
        self.assertEqual(schema, SCHEMA_UNIVERSE)
        self.assertIsInstance(universe, Universe)
        self.assertEqual(len(universe.cats), 2)
        self.assertEqual(universe.arity_bound, 2)

    def test_loader_caches_files(self):
        loader = DocumentLoader(Path(madj_data_dir))
        _, first = loader.load("c3.json")
        _, second = loader.load("c3.json")
        self.assertIs(first, second)

    def test_compose_reference(self):
        h3 = chain(3, "H3")
        m = meet_adjunction(h3)
        composed = loads(
            json.dumps(
                {
                    "schema": "madj/1",
                    "compose": ["meet_h3.json", "meet_h3.json", "identity_h3op.json"],
                }
            ),
            Path(madj_data_dir),
        )
        unit = identity_adjunction(opposite(h3))
        self.assertEqual(composed, compose_multi(m, [m, unit]))

    def test_invalid_category(self):
        with self.assertRaises(InvalidCategoryException) as ctx:
            load(data_path("missing_composite.json"))
        self.assertIn("MissingComposite", ctx.exception.report.laws())


@pytest.mark.parametrize(  # type: ignore
    "text",
    [
        "[1, 2]",
        '{"schema": "nope/1"}',
        '{"schema": "fincat/1", "morphisms": []}',
        '{"schema": "functor/1", "source": "Q7", "target": "C2"}',
        '{"schema": "functor/1", "target": "C2"}',
        '{"schema": "madj/1", "pick": "C2"}',
        '{"schema": "madj/1", "cats": ["C2"], "funs": [], "isos": [], "chirality": "up"}',
        '{"schema": "adj/1", "f": 3}',
        '{"schema": "fincat/1", "objects": [0], "morphisms": [{"id": "x"}]}',
    ],
)
def test_malformed(text: str) -> None:
    with pytest.raises(MalformedDocumentException):
        loads(text)


def test_not_json() -> None:
    with pytest.raises(MalformedDocumentException) as info:
        load(data_path("not_json.json"))
    assert json.loads(str(info.value))["malformed"].endswith("not_json.json")


class TestDump(unittest.TestCase):
    def test_tuplify(self):
        self.assertEqual(tuplify([[0, 1], "a", [[2]]]), ((0, 1), "a", ((2,),)))

    def test_category(self):
        self.assertEqual(loads(dumps(c3())), c3())
        self.assertEqual(loads(dumps(opposite(c3()))), opposite(c3()))

    def test_functor(self):
        self.assertEqual(loads(dumps(floor_map())), floor_map())

    def test_adjunction(self):
        adj = floor_adjunction()
        self.assertEqual(document(adj)["schema"], "adj/1")
        self.assertEqual(loads(dumps(adj)), adj)

    def test_madj(self):
        m = meet_adjunction(chain(2))
        self.assertEqual(loads(dumps(m)), m)
        self.assertEqual(loads(dumps(identity_cell(m, 1))), identity_cell(m, 1))

    def test_universe(self):
        h3 = chain(3, "H3")
        universe = Universe((h3, opposite(h3)), madjs=(meet_adjunction(h3),))
        back = loads(dumps(universe, indent=2))
        self.assertEqual(back.cats, universe.cats)
        self.assertEqual(back.madjs, universe.madjs)

    def test_no_document_form(self):
        with self.assertRaises(MalformedDocumentException):
            document(object())
