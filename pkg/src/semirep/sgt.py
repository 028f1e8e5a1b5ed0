"""The ``.sgt`` table format.

::

    n 3
    1 1 1
    1 2 2
    1 2 3
    zero 1
    involution 1 2 3

Line 1 is ``n <count>``; the next ``n`` lines hold the multiplication table
as 1-based indices (row ``a``, column ``b`` gives ``a·b``).  Optional
``zero <index>`` and ``involution <n indices>`` lines follow, each at most
once.  Blank lines and lines starting with ``#`` are ignored; anything else
is an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import ParseError
from .semigroup import SemigroupTable, validate_table


@dataclass(frozen=True)
class SgtFile:
    table: SemigroupTable
    involution: Optional[tuple] = None


def _ints(tokens, lineno, n, what) -> list:
    out = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"{what}: {tok!r} is not an integer", lineno) from None
        if not 1 <= v <= n:
            raise ParseError(f"{what}: index {v} outside 1..{n}", lineno)
        out.append(v - 1)
    return out


def parse_sgt(text: str) -> SgtFile:
    lines = [
        (k, line.split())
        for k, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty input")
    lineno, head = lines[0]
    if len(head) != 2 or head[0] != "n":
        raise ParseError("first line must be 'n <count>'", lineno)
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"bad element count {head[1]!r}", lineno) from None
    if n < 1:
        raise ParseError("a semigroup needs at least one element", lineno)
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for lineno, toks in lines[1:n + 1]:
        if len(toks) != n:
            raise ParseError(f"table row has {len(toks)} entries, expected {n}", lineno)
        rows.append(_ints(toks, lineno, n, "table entry"))
    zero = involution = None
    for lineno, toks in lines[n + 1:]:
        key = toks[0]
        if key == "zero" and zero is None:
            if len(toks) != 2:
                raise ParseError("expected 'zero <index>'", lineno)
            zero = _ints(toks[1:], lineno, n, "zero")[0]
        elif key == "involution" and involution is None:
            if len(toks) != n + 1:
                raise ParseError(f"involution needs {n} indices", lineno)
            involution = tuple(_ints(toks[1:], lineno, n, "involution"))
        else:
            raise ParseError(f"unexpected content {' '.join(toks)!r}", lineno)
    return SgtFile(validate_table(rows, zero), involution)


def load_sgt(path) -> SgtFile:
    return parse_sgt(Path(path).read_text(encoding="utf-8"))


def dump_sgt(S: SemigroupTable, involution=None) -> str:
    lines = [f"n {S.n}"]
    lines += [" ".join(str(v + 1) for v in row) for row in S.mul]
    if S.zero is not None:
        lines.append(f"zero {S.zero + 1}")
    if involution is not None:
        lines.append("involution " + " ".join(str(v + 1) for v in involution))
    return "\n".join(lines) + "\n"
