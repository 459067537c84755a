"""Text and JSON formats for monomials and ideals.

Monomial grammar::

    monomial := "1" | factor ("*" factor)*
    factor   := "x" INT ("^" INT)?
    INT      := [1-9][0-9]*

Whitespace around tokens is ignored.  An ideal file starts with ``n=<INT>``
followed by one monomial per line; blank lines and ``#`` comments are skipped.
The JSON form is ``{"n": 3, "gens": [[1, 1, 0], ...]}``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .core import EXPONENT_CAP, Monomial, MonomialIdeal

_TOKEN = re.compile(r"\s*(?:(?P<int>[1-9][0-9]*)|(?P<sym>[x*^]))")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(text: str, line: int):
    """Yield ``(kind, text, column)`` with kind one of ``int``, ``x``, ``*``, ``^``."""
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        if m is None:
            col = len(text) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        value = m.group(m.lastgroup)
        kind = "int" if m.lastgroup == "int" else value
        yield kind, value, m.start(m.lastgroup) + 1
        pos = m.end()


def parse_monomial(text: str, n: int, line: int = 1) -> Monomial:
    toks = list(_tokens(text, line))
    if not toks:
        raise ParseError("empty monomial", line, 1)
    if len(toks) == 1 and toks[0][:2] == ("int", "1"):
        return (0,) * n
    exps = [0] * n
    k = 0

    def expect(kind: str):
        nonlocal k
        if k >= len(toks):
            raise ParseError(f"expected {kind!r} at end of input", line, len(text) + 1)
        tok = toks[k]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, got {tok[1]!r}", line, tok[2])
        k += 1
        return tok

    while True:
        expect("x")
        _, idx_text, col = expect("int")
        idx = int(idx_text)
        if idx > n:
            raise ParseError(f"variable x{idx} exceeds n={n}", line, col)
        power = 1
        if k < len(toks) and toks[k][0] == "^":
            k += 1
            _, p_text, _ = expect("int")
            power = int(p_text)
        exps[idx - 1] += power
        if exps[idx - 1] > EXPONENT_CAP:
            raise ParseError(f"exponent of x{idx} exceeds {EXPONENT_CAP}", line, col)
        if k == len(toks):
            break
        expect("*")
    return tuple(exps)


def format_monomial(u: Monomial) -> str:
    parts = []
    for i, e in enumerate(u, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def parse_ideal(text: str) -> MonomialIdeal:
    n = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if n is None:
            m = re.fullmatch(r"\s*n\s*=\s*(0|[1-9][0-9]*)\s*", body)
            if m is None:
                raise ParseError("first line must be 'n=<INT>'", lineno, 1)
            n = int(m.group(1))
            continue
        gens.append(parse_monomial(body, n, lineno))
    if n is None:
        raise ParseError("missing 'n=<INT>' header", 1, 1)
    return MonomialIdeal.from_gens(gens, n)


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = [f"n={ideal.n}"]
    lines.extend(format_monomial(g) for g in ideal.gens)
    return "\n".join(lines) + "\n"


def ideal_to_dict(ideal: MonomialIdeal) -> dict:
    return {"n": ideal.n, "gens": [list(g) for g in ideal.gens]}


def ideal_from_dict(doc: dict) -> MonomialIdeal:
    try:
        n = doc["n"]
        gens = doc["gens"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"structured ideal needs 'n' and 'gens': {exc}") from exc
    if not isinstance(n, int) or not isinstance(gens, list):
        raise ParseError("'n' must be an integer and 'gens' a list")
    return MonomialIdeal.from_gens(gens, n)


def load_ideal(path: str | Path) -> MonomialIdeal:
    """Read an ideal file; JSON is detected by a leading ``{``."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
        return ideal_from_dict(doc)
    return parse_ideal(text)
