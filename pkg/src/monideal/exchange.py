"""Polymatroidal exchange, its dual form, exchange paths and products."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as _cartesian
from typing import Optional

from .core import (EXPONENT_CAP, Monomial, MonomialError, MonomialIdeal,
                   is_squarefree, require_equigenerated)


class ExchangeAxiomViolated(ValueError):
    """A required exchange does not exist; the ideal is not polymatroidal."""

    def __init__(self, message: str, state: Optional[Monomial] = None):
        super().__init__(message)
        self.state = state


@dataclass(frozen=True)
class ExchangeWitness:
    """A pair ``(u, v)`` and index ``i`` (0-based) at which an exchange fails.

    ``kind`` is ``"forward"`` (``a_i > b_i`` and no ``x_j u / x_i`` in G)
    or ``"dual"`` (``a_i < b_i`` and no ``x_i u / x_j`` in G).
    """

    u: Monomial
    v: Monomial
    i: int
    kind: str = "forward"


def _shift(u: Monomial, up: int, down: int) -> Monomial:
    """``x_up * u / x_down``."""
    w = list(u)
    w[up] += 1
    w[down] -= 1
    return tuple(w)


def _forward_partner(gens: frozenset, u: Monomial, v: Monomial, i: int) -> Optional[int]:
    """Smallest j with a_j < b_j and x_j u / x_i in G, or None."""
    for j, (a, b) in enumerate(zip(u, v)):
        if a < b and _shift(u, j, i) in gens:
            return j
    return None


def _dual_partner(gens: frozenset, u: Monomial, v: Monomial, i: int) -> Optional[int]:
    """Smallest j with a_j > b_j and x_i u / x_j in G, or None."""
    for j, (a, b) in enumerate(zip(u, v)):
        if a > b and _shift(u, i, j) in gens:
            return j
    return None


def exchange_violation(ideal: MonomialIdeal) -> Optional[ExchangeWitness]:
    """First failure of the exchange condition, or None if ``ideal`` is polymatroidal.

    Pairs are scanned in generator order (descending revlex), then by ``i``,
    so the reported witness is deterministic.
    """
    require_equigenerated(ideal)
    gens = ideal.gen_set()
    for u in ideal.gens:
        for v in ideal.gens:
            if u is v:
                continue
            for i, (a, b) in enumerate(zip(u, v)):
                if a > b and _forward_partner(gens, u, v, i) is None:
                    return ExchangeWitness(u, v, i, "forward")
    return None


def dual_exchange_violation(ideal: MonomialIdeal) -> Optional[ExchangeWitness]:
    require_equigenerated(ideal)
    gens = ideal.gen_set()
    for u in ideal.gens:
        for v in ideal.gens:
            if u is v:
                continue
            for i, (a, b) in enumerate(zip(u, v)):
                if a < b and _dual_partner(gens, u, v, i) is None:
                    return ExchangeWitness(u, v, i, "dual")
    return None


def is_polymatroidal(ideal: MonomialIdeal) -> bool:
    return exchange_violation(ideal) is None


def is_matroidal(ideal: MonomialIdeal) -> bool:
    return is_polymatroidal(ideal) and all(is_squarefree(g) for g in ideal.gens)


def check_dual_exchange(ideal: MonomialIdeal) -> bool:
    return dual_exchange_violation(ideal) is None


def distance(u: Monomial, v: Monomial) -> int:
    """Half the l1 distance between exponent vectors (an integer for equal degrees)."""
    total = sum(abs(a - b) for a, b in zip(u, v))
    return total // 2


@dataclass
class ExchangePath:
    """The walk from ``v`` towards ``u`` that proves the dual exchange.

    ``steps[0]`` is ``v`` and ``steps[-1]`` the terminal monomial ``w*``;
    ``distances[k] == distance(u, steps[k])``.  ``j0`` is the index with
    ``w*_{j0} < a_{j0}`` and ``result == x_i u / x_{j0}``.
    """

    u: Monomial
    v: Monomial
    i: int
    steps: list[Monomial] = field(default_factory=list)
    distances: list[int] = field(default_factory=list)
    j0: Optional[int] = None
    result: Optional[Monomial] = None

    @property
    def terminal(self) -> Monomial:
        return self.steps[-1]

    def __len__(self) -> int:
        return len(self.steps) - 1


def exchange_path(ideal: MonomialIdeal, u: Monomial, v: Monomial, i: int) -> ExchangePath:
    """Run the distance-reducing construction behind the dual exchange.

    Starting at ``w = v``, while some ``k != i`` has ``a_k < w_k`` (smallest
    such ``k``), move to ``x_l w / x_k`` with ``l`` the smallest index having
    ``w_l < a_l`` and ``x_l w / x_k`` in ``G(I)``.  Each move keeps ``w_i = b_i``
    and lowers the distance to ``u`` by one.  At the end every ``w_j <= a_j``
    for ``j != i``, and ``x_i u / x_{j0}`` lies in ``G(I)`` for the smallest
    ``j0`` with ``w_{j0} < a_{j0}``.
    """
    gens = ideal.gen_set()
    if u not in gens or v not in gens:
        raise MonomialError("u and v must both be minimal generators of the ideal")
    if not 0 <= i < ideal.n or not u[i] < v[i]:
        raise ValueError(f"need a_i < b_i at index {i}")
    w = v
    path = ExchangePath(u, v, i, [w], [distance(u, w)])
    while True:
        k = next((k for k in range(ideal.n) if k != i and u[k] < w[k]), None)
        if k is None:
            break
        nxt = None
        for ell in range(ideal.n):
            if w[ell] < u[ell]:
                cand = _shift(w, ell, k)
                if cand in gens:
                    nxt = cand
                    break
        if nxt is None:
            raise ExchangeAxiomViolated(
                f"no exchange for w={w} at index {k} towards u={u}", state=w)
        w = nxt
        path.steps.append(w)
        path.distances.append(distance(u, w))
    j0 = next((j for j in range(ideal.n) if j != i and w[j] < u[j]), None)
    if j0 is None:
        raise ExchangeAxiomViolated(f"terminal {w} has no deficient index", state=w)
    res = _shift(u, i, j0)
    if res not in gens:
        raise ExchangeAxiomViolated(
            f"x_{i + 1} u / x_{j0 + 1} = {res} is not a generator", state=w)
    path.j0 = j0
    path.result = res
    return path


def product(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    if left.n != right.n:
        raise MonomialError(f"ambient mismatch: {left.n} vs {right.n}")
    gens = []
    for u, v in _cartesian(left.gens, right.gens):
        w = tuple(a + b for a, b in zip(u, v))
        if any(e > EXPONENT_CAP for e in w):
            raise OverflowError(f"exponent overflow multiplying {u} by {v}")
        gens.append(w)
    return MonomialIdeal.from_gens(gens, left.n)


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative power")
    out = MonomialIdeal(ideal.n, ((0,) * ideal.n,))
    for _ in range(k):
        out = product(out, ideal)
    return out
