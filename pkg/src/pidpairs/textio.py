"""Plain-text matrix files.

The format is line oriented: `#` starts a comment that runs to the end
of the line, tokens are separated by whitespace, and a matrix is

    ring <tag>
    rows <n>
    cols <m>
    <n*m scalar tokens in row-major order>

Integer scalars are decimal with an optional leading minus; rational
scalars are `p/q` or `p`; polynomial scalars are `poly[c0,c1,...,cd]`
with rational coefficients in increasing degree (a bare rational is
accepted as a constant polynomial on input).  Parsers report 1-based
line and column positions on failure.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .matrices import ExactMatrix
from .rings import ring_for_tag

_TOKEN = re.compile(r"\S+")
_DIM = re.compile(r"\d+\Z")


def _tokenize(text):
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        hash_at = line.find("#")
        if hash_at >= 0:
            line = line[:hash_at]
        for m in _TOKEN.finditer(line):
            out.append((m.group(), lineno, m.start() + 1))
    return out


class _TokenStream:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def _end_position(self):
        if not self.tokens:
            return 1, 1
        tok, line, col = self.tokens[-1]
        return line, col + len(tok)

    def take(self, what):
        if self.pos >= len(self.tokens):
            line, col = self._end_position()
            raise ParseError(f"unexpected end of input, expected {what}", line, col)
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_keyword(self, word):
        tok, line, col = self.take(f"'{word}'")
        if tok != word:
            raise ParseError(f"expected '{word}', found {tok!r}", line, col)

    def take_dimension(self, what):
        tok, line, col = self.take(what)
        if not _DIM.match(tok):
            raise ParseError(f"expected a non-negative {what}, found {tok!r}", line, col)
        return int(tok)

    def finished(self):
        return self.pos >= len(self.tokens)

    def trailing(self):
        return self.tokens[self.pos]


def parse_matrix(text: str) -> ExactMatrix:
    stream = _TokenStream(text)
    stream.expect_keyword("ring")
    tag, line, col = stream.take("ring tag")
    try:
        ring = ring_for_tag(tag)
    except ValueError as e:
        raise ParseError(str(e), line, col) from None
    stream.expect_keyword("rows")
    rows = stream.take_dimension("row count")
    stream.expect_keyword("cols")
    cols = stream.take_dimension("column count")
    body = []
    for i in range(rows):
        row = []
        for j in range(cols):
            tok, line, col = stream.take(f"entry ({i},{j})")
            try:
                row.append(ring.parse_token(tok))
            except ValueError as e:
                raise ParseError(str(e), line, col) from None
        body.append(row)
    if not stream.finished():
        tok, line, col = stream.trailing()
        raise ParseError(f"unexpected trailing token {tok!r}", line, col)
    return ExactMatrix(ring, rows, cols, body)


def format_matrix(M: ExactMatrix) -> str:
    lines = [f"ring {M.ring.tag}", f"rows {M.rows}", f"cols {M.cols}"]
    if M.cols:
        fmt = M.ring.format_token
        for row in M.entries:
            lines.append(" ".join(fmt(e) for e in row))
    return "\n".join(lines)


def read_matrix_file(path) -> ExactMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def write_matrix_file(path, M: ExactMatrix):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(M) + "\n")
