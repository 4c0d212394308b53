from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from qact.errors import QasmError

KEYWORDS = frozenset(
    {"OPENQASM", "include", "qreg", "creg", "gate", "opaque", "measure", "reset", "barrier", "if", "pi"}
)
FUNCTIONS = frozenset({"sin", "cos", "tan", "exp", "ln", "sqrt"})

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<newline>\n)
  | (?P<comment>//[^\n]*)
  | (?P<real>(?:\d+\.\d*|\.\d+)(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+)
  | (?P<int>\d+)
  | (?P<id>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"[^"\n]*")
  | (?P<symbol>->|==|[;,()\[\]{}+\-*/^])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # real | int | id | keyword | string | symbol | eof
    text: str
    line: int
    column: int


def tokenize(source: str) -> Iterator[Token]:
    line, line_start, pos = 1, 0, 0
    n = len(source)
    while pos < n:
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise QasmError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        text = m.group()
        column = pos - line_start + 1
        pos = m.end()
        if kind == "newline":
            line += 1
            line_start = pos
            continue
        if kind in ("ws", "comment"):
            continue
        if kind == "id" and text in KEYWORDS:
            kind = "keyword"
        yield Token(kind, text, line, column)
    yield Token("eof", "", line, n - line_start + 1)
