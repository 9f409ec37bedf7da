import os
from typing import Any

from cyclic_mates.madj.adjoint1 import MutualLeftAdjunction, adjoint_search
from cyclic_mates.madj.catalog import chain, thin_functor, z2_multiplication
from cyclic_mates.madj.documents import load
from cyclic_mates.madj.fincat import FinCategory, Functor, opposite, opposite_functor
from cyclic_mates.madj.multiadjoint import MultiAdjunction

madj_dir = os.path.dirname(os.path.abspath(__file__))
madj_data_dir = os.path.join(madj_dir, "data")


def data_path(file_name: str) -> str:
    return os.path.join(madj_data_dir, file_name)


def load_data(file_name: str) -> Any:
    return load(data_path(file_name))[1]


def c2() -> FinCategory:
    return chain(2)


def c3() -> FinCategory:
    return chain(3)


def h3() -> FinCategory:
    return chain(3, "H3")


def floor_map() -> Functor:
    """0, 1 -> 0 and 2 -> 1 on C3; preserves the bottom, so it has a right adjoint."""
    return thin_functor(c3(), c3(), {0: 0, 1: 0, 2: 1})


def floor_adjunction() -> MutualLeftAdjunction:
    return adjoint_search(opposite_functor(floor_map()))


def constant_map(value: int) -> Functor:
    return thin_functor(c3(), c3(), {0: value, 1: value, 2: value})


def opposite_c3() -> FinCategory:
    return opposite(c3())


def twisted_z2_multiplication() -> MultiAdjunction:
    """The Z2 multiplication adjunction with phi_1 and phi_2 both swapping e and s."""
    m = z2_multiplication()
    t = ("*", "*", "*")
    return MultiAdjunction(m.cats, m.funs, ({t: (0, 1)}, {t: (1, 0)}, {t: (1, 0)}))


def with_primary(m: MultiAdjunction, f0: Functor) -> MultiAdjunction:
    return MultiAdjunction(m.cats, (f0,) + m.funs[1:], m.isos, m.chirality)
