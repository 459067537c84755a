"""Constructors for the standard ideals used throughout the tests and scripts."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Iterable, Optional, Sequence

from .core import MonomialIdeal, check_monomial


def _mono(indices: Iterable[int], n: int):
    w = [0] * n
    for i in indices:
        w[i] += 1
    return tuple(w)


def veronese(d: int, n: int, variables: Optional[Sequence[int]] = None) -> MonomialIdeal:
    """All degree-d monomials in ``variables`` (0-based; default all n)."""
    vs = range(n) if variables is None else variables
    return MonomialIdeal.from_gens(
        (_mono(c, n) for c in combinations_with_replacement(vs, d)), n)


def squarefree_veronese(d: int, n: int,
                        variables: Optional[Sequence[int]] = None) -> MonomialIdeal:
    vs = range(n) if variables is None else variables
    return MonomialIdeal.from_gens((_mono(c, n) for c in combinations(vs, d)), n)


def principal_ideal(exps: Sequence[int]) -> MonomialIdeal:
    u = check_monomial(exps, len(exps))
    return MonomialIdeal(len(u), (u,))


def counterexample() -> MonomialIdeal:
    """The unmixed, not Cohen-Macaulay matroidal ideal in six variables."""
    pairs = [(1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6),
             (3, 5), (3, 6), (4, 5), (4, 6)]
    return MonomialIdeal.from_gens((_mono((a - 1, b - 1), 6) for a, b in pairs), 6)
