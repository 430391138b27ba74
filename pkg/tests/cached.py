"""Constructions shared between test modules, built once per session."""

from functools import lru_cache

from finegrad.constructions import inner_grading, octonions, derivation_grading, outer_grading_sl, pauli, skew_grading, cartan_matrix_grading
from finegrad.grading import sl_algebra, universal_group


@lru_cache(maxsize=None)
def outer(text):
    return outer_grading_sl(text)


@lru_cache(maxsize=None)
def skew(text):
    return skew_grading(text)


@lru_cache(maxsize=None)
def inner(text):
    return inner_grading(text)


@lru_cache(maxsize=None)
def pauli_m(n):
    return pauli(n)


@lru_cache(maxsize=None)
def pauli_sl(n):
    g = pauli(n)
    return g.restrict(sl_algebra(g.algebra.field, n))


@lru_cache(maxsize=None)
def cartan_sl(n):
    g = cartan_matrix_grading(n)
    return g.restrict(sl_algebra(g.algebra.field, n))


@lru_cache(maxsize=None)
def g2():
    return derivation_grading(octonions()[1])


SL4_OUTER = [
    "sl-outer:m=0,s=2,d=",
    "sl-outer:m=0,s=1,d=1;1",
    "sl-outer:m=0,s=0,d=1;1;1;1",
    "sl-outer:m=1,s=1,d=",
    "sl-outer:m=1,s=0,d=1;10",
    "sl-outer:m=2,s=0,d=1",
]
SKEW_EXAMPLES = [
    "ortho:m=0,s=2,d=1",
    "ortho:m=0,s=0,d=1;1;1;1;1",
    "ortho:m=1,s=1,d=1;1",
    "sympl:m=1,s=1,d=11",
    "sympl:m=2,s=0,d=0011;1100",
    "sympl:m=3,s=0,d=000011",
]
