"""Exhaustive sweeps over equigenerated ideals and the classification verifier.

The search space for ``EnumSpec(n, d, cap)`` is every nonempty set of
degree-``d`` monomials in ``n`` variables with exponents ``<= cap``.  Equal
degrees make every such set an antichain, so each subset is already a
minimal generating set.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Iterator, Optional

from .classify import (CM_FAMILIES, ClassificationInconsistency, Verdict,
                       check_radical_lemma, classify, radical)
from .core import Monomial, MonomialIdeal, sort_revlex_desc
from .covers import minimal_vertex_covers
from .exchange import (ExchangeAxiomViolated, dual_exchange_violation,
                       exchange_path)
from .io import format_monomial

SUBSET_BUDGET = 2**24


class BudgetExceeded(ValueError):
    pass


class VerificationError(AssertionError):
    """A proved statement failed on some ideal; this points at a bug."""

    def __init__(self, message: str, row: "CensusRow"):
        super().__init__(f"{message}\n  row: {row.to_line()}")
        self.row = row


@dataclass(frozen=True)
class EnumSpec:
    n: int
    d: int
    cap: int = 1
    min_gens: int = 1
    max_gens: Optional[int] = None
    modulo_symmetry: bool = False

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError("need n >= 1 and d >= 1")
        if not 1 <= self.cap <= self.d:
            raise ValueError(f"cap must lie in [1, d], got {self.cap}")
        if self.min_gens < 1:
            raise ValueError("min_gens must be >= 1")
        if self.max_gens is not None and self.max_gens < self.min_gens:
            raise ValueError("max_gens < min_gens")


def monomial_pool(n: int, d: int, cap: int) -> list[Monomial]:
    """All degree-d exponent vectors with entries <= cap, descending revlex."""
    out: list[Monomial] = []

    def rec(prefix: list[int], left: int) -> None:
        if len(prefix) == n - 1:
            if left <= cap:
                out.append(tuple(prefix + [left]))
            return
        for e in range(min(cap, left), -1, -1):
            rec(prefix + [e], left - e)

    rec([], d)
    return sort_revlex_desc(out)


def _size_range(spec: EnumSpec, m: int) -> range:
    hi = m if spec.max_gens is None else min(spec.max_gens, m)
    return range(spec.min_gens, hi + 1)


def subset_count(spec: EnumSpec) -> int:
    m = len(monomial_pool(spec.n, spec.d, spec.cap))
    return sum(comb(m, k) for k in _size_range(spec, m))


def _check_budget(spec: EnumSpec, pool: list[Monomial]) -> None:
    total = sum(comb(len(pool), k) for k in _size_range(spec, len(pool)))
    if total > SUBSET_BUDGET:
        bound = spec.min_gens
        while (bound < len(pool) and sum(
                comb(len(pool), k) for k in range(spec.min_gens, bound + 2)) <= SUBSET_BUDGET):
            bound += 1
        raise BudgetExceeded(
            f"{total} subsets of a {len(pool)}-monomial pool exceed the budget of "
            f"{SUBSET_BUDGET}; use max_gens <= {bound}")


def _subsets(pool: list[Monomial], spec: EnumSpec, lo: int = 1,
             hi: Optional[int] = None) -> Iterator[tuple[int, tuple[Monomial, ...]]]:
    """(counter, generators) pairs; the binary counter runs over [lo, hi)."""
    sizes = _size_range(spec, len(pool))
    if len(pool) <= 24:
        hi = (1 << len(pool)) if hi is None else hi
        for mask in range(lo, hi):
            if bin(mask).count("1") not in sizes:
                continue
            yield mask, tuple(pool[i] for i in range(len(pool)) if mask >> i & 1)
    else:
        # pool too wide for a counter: walk combinations by size instead
        counter = 0
        for k in sizes:
            for idx in combinations(range(len(pool)), k):
                counter += 1
                yield counter, tuple(pool[i] for i in idx)


def canonical_form(ideal: MonomialIdeal) -> tuple[Monomial, ...]:
    """Smallest sorted generator matrix over variable permutations.

    Only permutations that sort variables by a permutation-invariant
    signature (the sorted exponent column) are tried; ties are expanded.
    """
    n = ideal.n
    sig = [tuple(sorted((g[i] for g in ideal.gens), reverse=True)) for i in range(n)]
    classes: dict[tuple, list[int]] = {}
    for i in range(n):
        classes.setdefault(sig[i], []).append(i)
    blocks = [classes[s] for s in sorted(classes, reverse=True)]

    best = None

    def rec(k: int, order: list[int]) -> None:
        nonlocal best
        if k == len(blocks):
            key = tuple(sorted((tuple(g[i] for i in order) for g in ideal.gens),
                               reverse=True))
            if best is None or key < best:
                best = key
            return
        for p in permutations(blocks[k]):
            rec(k + 1, order + list(p))

    rec(0, [])
    return best


def enumerate_ideals(spec: EnumSpec) -> Iterator[MonomialIdeal]:
    pool = monomial_pool(spec.n, spec.d, spec.cap)
    _check_budget(spec, pool)
    seen: set = set()
    for _, gens in _subsets(pool, spec):
        ideal = MonomialIdeal(spec.n, gens)
        if spec.modulo_symmetry:
            key = canonical_form(ideal)
            if key in seen:
                continue
            seen.add(key)
            ideal = MonomialIdeal.from_gens(key, spec.n)
        yield ideal


@dataclass
class CensusRow:
    ideal: MonomialIdeal
    is_polymatroidal: bool
    is_matroidal: bool
    h: int
    q: Optional[int]
    linear: bool
    dim: int
    depth: Optional[int]
    cm: Optional[bool]
    verdict: str
    unmixed: bool

    COLUMNS = ("ideal", "n", "polymatroidal", "matroidal", "h", "q", "linear",
               "dim", "depth", "cm", "verdict", "unmixed")

    def values(self) -> tuple:
        gens = ",".join(format_monomial(g) for g in self.ideal.gens)
        return (gens, self.ideal.n, self.is_polymatroidal, self.is_matroidal,
                self.h, self.q, self.linear, self.dim, self.depth, self.cm,
                self.verdict, self.unmixed)

    def to_line(self, sep: str = "\t") -> str:
        def fmt(x):
            if x is None:
                return "-"
            if isinstance(x, bool):
                return "yes" if x else "no"
            return str(x)
        return sep.join(fmt(x) for x in self.values())

    def to_dict(self) -> dict:
        out = dict(zip(self.COLUMNS, self.values()))
        out["gens"] = [list(g) for g in self.ideal.gens]
        return out


def census_row(ideal: MonomialIdeal) -> CensusRow:
    try:
        c = classify(ideal)
    except ClassificationInconsistency as exc:
        row = _plain_row(ideal)
        raise VerificationError(str(exc), row) from exc
    cover = minimal_vertex_covers(ideal)
    matroidal = c.polymatroidal and all(e <= 1 for g in ideal.gens for e in g)
    return CensusRow(ideal, c.polymatroidal, matroidal, c.h, c.q, c.linear,
                     c.dim, c.depth, c.cohen_macaulay, c.verdict.value,
                     cover.unmixed)


def _plain_row(ideal: MonomialIdeal) -> CensusRow:
    cover = minimal_vertex_covers(ideal)
    return CensusRow(ideal, False, False, cover.h, None, False, cover.dim, None,
                     None, "?", cover.unmixed)


def path_failures(ideal: MonomialIdeal) -> list[str]:
    """Run the exchange-path construction on every valid (u, v, i) and audit it."""
    problems = []
    for u in ideal.gens:
        for v in ideal.gens:
            for i in range(ideal.n):
                if not u[i] < v[i]:
                    continue
                try:
                    p = exchange_path(ideal, u, v, i)
                except ExchangeAxiomViolated as exc:
                    problems.append(str(exc))
                    continue
                w = p.terminal
                ok = (all(b == a - 1 for a, b in zip(p.distances, p.distances[1:]))
                      and len(p) <= p.distances[0]
                      and w[i] == v[i]
                      and all(w[j] <= u[j] for j in range(ideal.n) if j != i)
                      and p.result in ideal.gen_set()
                      and p.result == tuple(u[k] + (k == i) - (k == p.j0)
                                            for k in range(ideal.n)))
                if not ok:
                    problems.append(f"bad path for u={u} v={v} i={i}: {p}")
    return problems


def check_row(row: CensusRow, paths: bool = False) -> None:
    """Assert every proved relation on one row; raise VerificationError otherwise."""
    ideal = row.ideal
    if row.linear and row.h > row.q + 1:
        raise VerificationError("depth exceeds dim (h > q + 1)", row)
    if row.linear and row.cm != (row.h == row.q + 1):
        raise VerificationError("cm flag disagrees with h == q + 1", row)
    if minimal_vertex_covers(radical(ideal)).h != row.h:
        raise VerificationError("h(radical) != h", row)
    if not row.is_polymatroidal:
        return
    if not row.linear:
        raise VerificationError("polymatroidal ideal lacks revlex linear quotients", row)
    if dual_exchange_violation(ideal) is not None:
        raise VerificationError("dual exchange fails on a polymatroidal ideal", row)
    in_family = row.verdict in {v.value for v in CM_FAMILIES}
    if in_family != row.cm:
        raise VerificationError("CM status disagrees with family membership", row)
    if row.cm and not check_radical_lemma(ideal):
        raise VerificationError("radical of a CM polymatroidal ideal is not squarefree Veronese", row)
    if paths:
        bad = path_failures(ideal)
        if bad:
            raise VerificationError(bad[0], row)


@dataclass
class VerificationReport:
    spec: EnumSpec
    ideals: int = 0
    polymatroidal: int = 0
    matroidal: int = 0
    linear: int = 0
    cm: int = 0
    unmixed_not_cm: int = 0
    verdicts: Counter = field(default_factory=Counter)
    violations: int = 0
    seconds: float = 0.0
    rows: list[CensusRow] = field(default_factory=list, repr=False)

    def add(self, row: CensusRow) -> None:
        self.ideals += 1
        self.polymatroidal += row.is_polymatroidal
        self.matroidal += row.is_matroidal
        self.linear += row.linear
        self.cm += bool(row.cm)
        self.unmixed_not_cm += row.is_polymatroidal and row.unmixed and row.cm is False
        self.verdicts[row.verdict] += 1

    def summary(self) -> dict:
        return {"n": self.spec.n, "d": self.spec.d, "cap": self.spec.cap,
                "ideals": self.ideals, "polymatroidal": self.polymatroidal,
                "matroidal": self.matroidal, "linear": self.linear, "cm": self.cm,
                "unmixed_not_cm": self.unmixed_not_cm,
                "verdicts": dict(sorted(self.verdicts.items())),
                "violations": self.violations, "seconds": round(self.seconds, 3)}


def _process_chunk(spec: EnumSpec, lo: int, hi: Optional[int], paths: bool):
    pool = monomial_pool(spec.n, spec.d, spec.cap)
    out = []
    for counter, gens in _subsets(pool, spec, lo, hi):
        ideal = MonomialIdeal(spec.n, gens)
        row = census_row(ideal)
        check_row(row, paths)
        key = canonical_form(ideal) if spec.modulo_symmetry else None
        out.append((counter, key, row))
    return out


def _rows(spec: EnumSpec, workers: int = 1, paths: bool = False) -> list[CensusRow]:
    pool = monomial_pool(spec.n, spec.d, spec.cap)
    _check_budget(spec, pool)
    if workers > 1 and len(pool) <= 24:
        top = 1 << len(pool)
        step = -(-top // (workers * 4))
        bounds = [(lo, min(lo + step, top)) for lo in range(1, top, step)]
        with ProcessPoolExecutor(workers) as ex:
            futures = [ex.submit(_process_chunk, spec, lo, hi, paths) for lo, hi in bounds]
            results = [item for f in futures for item in f.result()]
    else:
        results = _process_chunk(spec, 1, None, paths)
    results.sort(key=lambda t: t[0])
    if not spec.modulo_symmetry:
        return [row for _, _, row in results]
    seen = set()
    rows = []
    for _, key, row in results:
        if key in seen:
            continue
        seen.add(key)
        canon = MonomialIdeal.from_gens(key, spec.n)
        if canon != row.ideal:
            row = census_row(canon)
            check_row(row)
        rows.append(row)
    return rows


def verify_classification(spec: EnumSpec, workers: int = 1,
                          paths: bool = False, keep_rows: bool = False) -> VerificationReport:
    """Check the classification and its supporting lemmas on every ideal of the sweep.

    Any violation raises :class:`VerificationError` carrying the offending row.
    With ``paths=True`` the exchange-path construction is also audited on every
    valid triple of every polymatroidal ideal.
    """
    start = time.perf_counter()
    report = VerificationReport(spec)
    for row in _rows(spec, workers, paths):
        report.add(row)
        if keep_rows:
            report.rows.append(row)
    report.seconds = time.perf_counter() - start
    return report


def census_unmixed(spec: EnumSpec, workers: int = 1) -> Iterator[CensusRow]:
    """Polymatroidal ideals that are unmixed but not Cohen-Macaulay."""
    for row in _rows(spec, workers):
        if row.is_polymatroidal and row.unmixed and row.cm is False:
            yield row


def census(spec: EnumSpec, workers: int = 1) -> list[CensusRow]:
    return _rows(spec, workers)


__all__ = [
    "BudgetExceeded", "CensusRow", "EnumSpec", "Verdict", "VerificationError",
    "VerificationReport", "canonical_form", "census", "census_row",
    "census_unmixed", "check_row", "enumerate_ideals", "monomial_pool",
    "path_failures", "subset_count", "verify_classification",
]
