"""Monomials as exponent tuples, minimal generating sets and degrevlex.

A monomial ``x_1^{a_1} ... x_n^{a_n}`` is stored as the plain tuple
``(a_1, ..., a_n)``.  Tuples are hashable, compare cheaply and keep the
enumeration sweeps fast; :class:`MonomialIdeal` carries the ambient ``n``
and validates every generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Sequence, Tuple

Monomial = Tuple[int, ...]

EXPONENT_CAP = 2**31 - 1


class MonomialError(ValueError):
    """Structurally invalid monomial input (length mismatch, bad exponent)."""


class DegenerateIdeal(ValueError):
    """The zero ideal or the unit ideal was passed where neither makes sense."""


class NotEquigenerated(ValueError):
    """The generators do not all have the same degree."""


def check_monomial(u: Sequence[int], n: int, cap: int = EXPONENT_CAP) -> Monomial:
    u = tuple(u)
    if len(u) != n:
        raise MonomialError(f"monomial {u} has length {len(u)}, expected {n}")
    for e in u:
        if not isinstance(e, int) or isinstance(e, bool):
            raise MonomialError(f"exponent {e!r} is not an integer")
        if e < 0:
            raise MonomialError(f"negative exponent in {u}")
        if e > cap:
            raise MonomialError(f"exponent {e} exceeds cap {cap}")
    return u


def _same_length(u: Monomial, v: Monomial) -> None:
    if len(u) != len(v):
        raise MonomialError(f"length mismatch: {len(u)} vs {len(v)}")


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> frozenset[int]:
    """0-based indices of the variables occurring in ``u``."""
    return frozenset(i for i, e in enumerate(u) if e)


def is_squarefree(u: Monomial) -> bool:
    return all(e <= 1 for e in u)


def divides(u: Monomial, v: Monomial) -> bool:
    _same_length(u, v)
    return all(a <= b for a, b in zip(u, v))


def multiply(u: Monomial, v: Monomial, cap: int = EXPONENT_CAP) -> Monomial:
    _same_length(u, v)
    w = tuple(a + b for a, b in zip(u, v))
    if any(e > cap for e in w):
        raise OverflowError(f"exponent overflow multiplying {u} by {v}")
    return w


def gcd(u: Monomial, v: Monomial) -> Monomial:
    _same_length(u, v)
    return tuple(min(a, b) for a, b in zip(u, v))


def quotient(u: Monomial, v: Monomial) -> Monomial:
    """``u / gcd(u, v)``: the part of ``u`` not absorbed by ``v``."""
    _same_length(u, v)
    return tuple(a - b if a > b else 0 for a, b in zip(u, v))


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(i: int, n: int) -> Monomial:
    """The variable ``x_{i+1}`` (``i`` is 0-based)."""
    return tuple(1 if k == i else 0 for k in range(n))


def revlex_cmp(u: Monomial, v: Monomial) -> int:
    """Three-way degrevlex comparison with x_1 > x_2 > ... > x_n."""
    _same_length(u, v)
    du, dv = sum(u), sum(v)
    if du != dv:
        return -1 if du < dv else 1
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            # larger trailing exponent is revlex-smaller
            return -1 if a > b else 1
    return 0


def revlex_less(u: Monomial, v: Monomial) -> bool:
    return revlex_cmp(u, v) < 0


revlex_key = cmp_to_key(revlex_cmp)


def sort_revlex_desc(monomials: Iterable[Monomial]) -> list[Monomial]:
    return sorted(monomials, key=revlex_key, reverse=True)


def minimal_antichain(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Drop every monomial divisible by a distinct one; result in descending revlex."""
    # processing by ascending degree means a divisor is always seen first
    pool = sorted(set(monomials), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for m in pool:
        if not any(all(a <= b for a, b in zip(g, m)) for g in kept):
            kept.append(m)
    return sort_revlex_desc(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in ``n`` variables given by its minimal generators.

    ``gens`` is always the divisibility antichain ``G(I)`` in descending
    revlex order, so two ideals are equal iff their fields are equal.
    Build instances through :meth:`from_gens` (or :func:`minimalize`).
    """

    n: int
    gens: Tuple[Monomial, ...]

    @classmethod
    def from_gens(cls, gens: Iterable[Sequence[int]], n: int,
                  cap: int = EXPONENT_CAP) -> "MonomialIdeal":
        if n < 0:
            raise MonomialError(f"negative variable count {n}")
        checked = [check_monomial(g, n, cap) for g in gens]
        return cls(n, tuple(minimal_antichain(checked)))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, u: object) -> bool:
        """Membership in the ideal (not just in ``G(I)``)."""
        return any(all(a <= b for a, b in zip(g, u)) for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def degrees(self) -> set[int]:
        return {sum(g) for g in self.gens}

    @property
    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for g in self.gens:
            out |= support(g)
        return frozenset(out)

    def gen_set(self) -> frozenset[Monomial]:
        return frozenset(self.gens)

    def permute(self, perm: Sequence[int]) -> "MonomialIdeal":
        """Rename variable ``i`` to ``perm[i]`` (0-based)."""
        if sorted(perm) != list(range(self.n)):
            raise MonomialError(f"{perm} is not a permutation of range({self.n})")
        out = []
        for g in self.gens:
            w = [0] * self.n
            for i, e in enumerate(g):
                w[perm[i]] = e
            out.append(tuple(w))
        return MonomialIdeal(self.n, tuple(sort_revlex_desc(out)))

    def __str__(self) -> str:
        from .io import format_monomial
        body = ", ".join(format_monomial(g) for g in self.gens)
        return f"({body}) in {self.n} variables"


def minimalize(raw_gens: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    return MonomialIdeal.from_gens(raw_gens, n)


def is_generated_in_one_degree(ideal: MonomialIdeal) -> bool:
    return len(ideal.degrees) <= 1


def require_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise DegenerateIdeal("the zero ideal has no generators")
    if ideal.is_unit:
        raise DegenerateIdeal("the unit ideal is the whole ring")


def require_equigenerated(ideal: MonomialIdeal) -> int:
    """Check the ideal is proper and generated in one degree; return that degree."""
    require_proper(ideal)
    degs = ideal.degrees
    if len(degs) != 1:
        raise NotEquigenerated(f"generators have degrees {sorted(degs)}")
    return next(iter(degs))


def shrink_to_support(ideal: MonomialIdeal) -> MonomialIdeal:
    """Drop variables that divide no generator, keeping the relative order."""
    keep = sorted(ideal.support)
    gens = [tuple(g[i] for i in keep) for g in ideal.gens]
    return MonomialIdeal(len(keep), tuple(sort_revlex_desc(gens)))
