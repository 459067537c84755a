"""Linear quotients in descending revlex, q(I), depth and the CM test."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Optional, Sequence

from .core import (Monomial, MonomialIdeal, minimal_antichain, quotient,
                   require_equigenerated, sort_revlex_desc)
from .covers import minimal_vertex_covers


class NoLinearQuotients(ValueError):
    """The revlex ordering does not give linear quotients; depth and CM are undecided."""


def colon_by_monomial(gens: Iterable[Monomial], u: Monomial) -> list[Monomial]:
    """Minimal generators of ``(gens) : u``, in descending revlex."""
    return minimal_antichain(quotient(v, u) for v in gens)


def _linear_vars(colon: Sequence[Monomial]) -> Optional[tuple[int, ...]]:
    """0-based variable indices if every generator is a variable, else None."""
    out = []
    for m in colon:
        if sum(m) != 1:
            return None
        out.append(m.index(1))
    return tuple(sorted(out))


@dataclass
class QuotientReport:
    n: int
    ordering: list[Monomial]
    colon_vars: list[tuple[int, ...]] = field(default_factory=list)
    q_values: list[int] = field(default_factory=list)
    linear: bool = True
    failed_step: Optional[int] = None  # index j into ordering (0-based)
    failed_colon: Optional[list[Monomial]] = None

    @property
    def q(self) -> Optional[int]:
        if not self.linear:
            return None
        return max(self.q_values, default=0)

    @property
    def depth(self) -> Optional[int]:
        return None if not self.linear else self.n - self.q - 1


def linear_quotients(ideal: MonomialIdeal, ordering: Sequence[Monomial]) -> QuotientReport:
    """Colon ideals of ``ordering`` step by step, stopping at the first non-linear one."""
    report = QuotientReport(ideal.n, list(ordering))
    for j in range(1, len(ordering)):
        colon = colon_by_monomial(ordering[:j], ordering[j])
        vars_ = _linear_vars(colon)
        if vars_ is None:
            report.linear = False
            report.failed_step = j
            report.failed_colon = colon
            break
        report.colon_vars.append(vars_)
        report.q_values.append(len(vars_))
    return report


def linear_quotients_revlex(ideal: MonomialIdeal) -> QuotientReport:
    require_equigenerated(ideal)
    return linear_quotients(ideal, sort_revlex_desc(ideal.gens))


def q_number(ideal: MonomialIdeal) -> int:
    report = linear_quotients_revlex(ideal)
    if not report.linear:
        raise NoLinearQuotients(
            f"revlex colon at step {report.failed_step + 1} is not generated by variables")
    return report.q


def depth_quotient(ideal: MonomialIdeal) -> int:
    return ideal.n - q_number(ideal) - 1


def is_cohen_macaulay(ideal: MonomialIdeal) -> bool:
    """``h(I) == q(I) + 1``; raises :class:`NoLinearQuotients` when undecided."""
    q = q_number(ideal)
    return minimal_vertex_covers(ideal).h == q + 1


def all_linear_orderings(ideal: MonomialIdeal, max_gens: int = 7):
    """Yield a report for every generator ordering that has linear quotients.

    Factorial cost; only meant for checking that q does not depend on the order.
    """
    require_equigenerated(ideal)
    if len(ideal.gens) > max_gens:
        raise ValueError(f"{len(ideal.gens)} generators exceed max_gens={max_gens}")
    for order in permutations(ideal.gens):
        report = linear_quotients(ideal, order)
        if report.linear:
            yield report
