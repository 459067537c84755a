"""Radicals, the three Cohen-Macaulay families and the classification verdict."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum
from math import comb
from typing import Optional

from .core import (MonomialIdeal, is_squarefree, require_equigenerated,
                   require_proper, shrink_to_support)
from .covers import minimal_vertex_covers
from .exchange import ExchangeWitness, exchange_violation, is_polymatroidal
from .quotients import linear_quotients_revlex


class Verdict(str, Enum):
    PRINCIPAL = "Principal"
    VERONESE = "Veronese"
    SQUAREFREE_VERONESE = "SquarefreeVeronese"
    NOT_COHEN_MACAULAY = "NotCohenMacaulay"
    NOT_POLYMATROIDAL = "NotPolymatroidal"


CM_FAMILIES = (Verdict.PRINCIPAL, Verdict.VERONESE, Verdict.SQUAREFREE_VERONESE)


class ClassificationInconsistency(AssertionError):
    """Family membership and h == q + 1 disagree on a polymatroidal ideal."""


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    if ideal.is_zero:
        raise ValueError("radical of the zero ideal is not supported")
    return MonomialIdeal.from_gens(
        (tuple(min(e, 1) for e in g) for g in ideal.gens), ideal.n)


def is_principal(ideal: MonomialIdeal) -> bool:
    require_proper(ideal)
    return len(ideal.gens) == 1


def _support_and_degree(ideal: MonomialIdeal) -> tuple[tuple[int, ...], Optional[int]]:
    degs = ideal.degrees
    d = next(iter(degs)) if len(degs) == 1 else None
    return tuple(sorted(ideal.support)), d


def is_veronese(ideal: MonomialIdeal) -> tuple[bool, tuple[int, ...], Optional[int]]:
    """All degree-d monomials in the support variables; returns (flag, vars, d)."""
    require_proper(ideal)
    vars_, d = _support_and_degree(ideal)
    ok = d is not None and len(ideal.gens) == comb(len(vars_) + d - 1, d)
    return ok, vars_, d


def is_squarefree_veronese(ideal: MonomialIdeal) -> tuple[bool, tuple[int, ...], Optional[int]]:
    require_proper(ideal)
    vars_, d = _support_and_degree(ideal)
    ok = (d is not None and all(is_squarefree(g) for g in ideal.gens)
          and len(ideal.gens) == comb(len(vars_), d))
    return ok, vars_, d


@dataclass
class Classification:
    verdict: Verdict
    support_vars: tuple[int, ...]  # 0-based
    degree: int
    principal: bool
    veronese: bool
    squarefree_veronese: bool
    polymatroidal: bool
    h: int
    q: Optional[int]
    linear: bool
    n: int
    witness: Optional[ExchangeWitness] = field(default=None)

    @property
    def dim(self) -> int:
        return self.n - self.h

    @property
    def depth(self) -> Optional[int]:
        return None if self.q is None else self.n - self.q - 1

    @property
    def cohen_macaulay(self) -> Optional[bool]:
        return None if self.q is None else self.h == self.q + 1

    def to_dict(self) -> dict:
        out = asdict(self)
        out["verdict"] = self.verdict.value
        out["support_vars"] = [i + 1 for i in self.support_vars]
        out["dim"] = self.dim
        out["depth"] = self.depth
        out["cohen_macaulay"] = self.cohen_macaulay
        if self.witness is not None:
            w = self.witness
            out["witness"] = {"u": list(w.u), "v": list(w.v), "i": w.i + 1, "kind": w.kind}
        return out


def classify(ideal: MonomialIdeal) -> Classification:
    """Verdict for an equigenerated ideal, cross-checked against ``h == q + 1``.

    Precedence among overlapping families: Principal, then
    SquarefreeVeronese, then Veronese.
    """
    d = require_equigenerated(ideal)
    witness = exchange_violation(ideal)
    principal = is_principal(ideal)
    veronese, vars_, _ = is_veronese(ideal)
    sq_veronese = is_squarefree_veronese(ideal)[0]
    covers = minimal_vertex_covers(ideal)
    quot = linear_quotients_revlex(ideal)
    polymatroidal = witness is None

    if not polymatroidal:
        verdict = Verdict.NOT_POLYMATROIDAL
    elif principal:
        verdict = Verdict.PRINCIPAL
    elif sq_veronese:
        verdict = Verdict.SQUAREFREE_VERONESE
    elif veronese:
        verdict = Verdict.VERONESE
    else:
        verdict = Verdict.NOT_COHEN_MACAULAY

    result = Classification(verdict, vars_, d, principal, veronese, sq_veronese,
                            polymatroidal, covers.h, quot.q, quot.linear,
                            ideal.n, witness)
    if polymatroidal:
        if not quot.linear:
            raise ClassificationInconsistency(
                f"polymatroidal ideal without revlex linear quotients: {ideal}")
        if (verdict in CM_FAMILIES) != result.cohen_macaulay:
            raise ClassificationInconsistency(
                f"verdict {verdict.value} but h={covers.h}, q={quot.q} for {ideal}")
    return result


def check_radical_lemma(ideal: MonomialIdeal) -> bool:
    """For a CM polymatroidal ideal, is the radical squarefree Veronese on its support?"""
    if not is_polymatroidal(ideal):
        raise ValueError("precondition: ideal must be polymatroidal")
    quot = linear_quotients_revlex(ideal)
    if not quot.linear or minimal_vertex_covers(ideal).h != quot.q + 1:
        raise ValueError("precondition: ideal must be Cohen-Macaulay")
    return is_squarefree_veronese(shrink_to_support(radical(ideal)))[0]
