"""Shared germ catalog for the test suite.

Expected integer values were fixed ahead of time by an independent
truncated-linear-algebra computation (and, for the quasi-homogeneous
entries, by the closed forms they satisfy); the engine must reproduce
them exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import pytest

from germcalc import GermInput, parse_poly

V2 = ("x", "y")
V3 = ("x", "y", "z")


@dataclass(frozen=True)
class CatalogGerm:
    name: str
    text: str
    vars: tuple[str, ...]
    mu: int
    tau: int
    quasi_homogeneous: bool
    modular_dim: int


# modular_dim values for the non weighted-homogeneous entries are recorded
# regression values (first-order data), not literature assertions
CATALOG = [
    CatalogGerm("t333_l0", "x^3+y^3+z^3", V3, 8, 8, True, 1),
    CatalogGerm("t333_l1", "x^3+y^3+z^3+x*y*z", V3, 8, 8, True, 1),
    CatalogGerm("t333_l5", "x^3+y^3+z^3+5*x*y*z", V3, 8, 8, True, 1),
    CatalogGerm("t442_l1", "x^4+y^4+z^2+x*y*z", V3, 9, 9, True, 1),
    CatalogGerm("t442_l2", "x^4+y^4+z^2+2*x*y*z", V3, 9, 9, True, 1),
    CatalogGerm("t632_l1", "x^6+y^3+z^2+x*y*z", V3, 10, 10, True, 1),
    CatalogGerm("t632_l2", "x^6+y^3+z^2+2*x*y*z", V3, 10, 10, True, 1),
    CatalogGerm("a1", "x^2+y^2+z^2", V3, 1, 1, True, 0),
    CatalogGerm("a2", "x^3+y^2+z^2", V3, 2, 2, True, 0),
    CatalogGerm("a3", "x^4+y^2+z^2", V3, 3, 3, True, 0),
    CatalogGerm("a4", "x^5+y^2+z^2", V3, 4, 4, True, 0),
    CatalogGerm("a5", "x^6+y^2+z^2", V3, 5, 5, True, 0),
    CatalogGerm("d4", "x^2*y+y^3+z^2", V3, 4, 4, True, 0),
    CatalogGerm("e6", "x^3+y^4+z^2", V3, 6, 6, True, 0),
    CatalogGerm("t433", "x^4+y^3+z^3+x*y*z", V3, 9, 8, False, 3),
    CatalogGerm("t642", "x^6+y^4+z^2+x*y*z", V3, 11, 10, False, 2),
    CatalogGerm("fermat_3_2", "x^3+y^3", V2, 4, 4, True, 0),
    CatalogGerm("fermat_4_3", "x^4+y^4+z^4", V3, 27, 27, True, 6),
    CatalogGerm("martin_t1", "x^4-x^2*y^2+y^4+y^5", V2, 9, 9, False, 1),
    CatalogGerm("martin_t14", "x^4-x^2*y^2+1/4*y^4+y^5", V2, 11, 10, False, 2),
    CatalogGerm("martin_t0", "x^4-x^2*y^2+y^5", V2, 10, 9, False, 2),
]

CATALOG_BY_NAME = {g.name: g for g in CATALOG}


@lru_cache(maxsize=None)
def cached_poly(text: str, vars: tuple[str, ...]):
    return parse_poly(text, vars)


@lru_cache(maxsize=None)
def cached_tjurina(text: str, vars: tuple[str, ...]):
    from germcalc import tjurina_number

    return tjurina_number(GermInput((cached_poly(text, vars),)))


@lru_cache(maxsize=None)
def cached_modular(text: str, vars: tuple[str, ...]):
    from germcalc import modular_tangent_space

    return modular_tangent_space(cached_poly(text, vars))


@lru_cache(maxsize=None)
def cached_derivations(text: str, vars: tuple[str, ...]):
    from germcalc import derivation_module

    return tuple(derivation_module(cached_poly(text, vars)))


@pytest.fixture(scope="session")
def catalog():
    return CATALOG
