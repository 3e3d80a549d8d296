"""Dense exact matrices over a ring object, with value semantics.

Instances are immutable (entries are nested tuples) so they hash and
compare structurally.  Degenerate shapes (0 rows and/or 0 columns) are
first-class: identities, products and stacking all work on them, which
the module layer leans on for zero submodules and empty complements.
"""

from __future__ import annotations


class ExactMatrix:
    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring, rows, cols, entries):
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != rows:
            raise ValueError(f"expected {rows} rows, got {len(entries)}")
        for row in entries:
            if len(row) != cols:
                raise ValueError(f"expected {cols} columns, got {len(row)}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, ring, rows_list, cols=None):
        rows_list = [list(r) for r in rows_list]
        if cols is None:
            cols = len(rows_list[0]) if rows_list else 0
        return cls(ring, len(rows_list), cols, rows_list)

    @classmethod
    def identity(cls, ring, n):
        return cls.diagonal(ring, [ring.one] * n)

    @classmethod
    def zeros(cls, ring, rows, cols):
        z = ring.zero
        return cls(ring, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, ring, diag, rows=None, cols=None):
        diag = list(diag)
        if rows is None:
            rows = len(diag)
        if cols is None:
            cols = len(diag)
        if len(diag) > min(rows, cols):
            raise ValueError("diagonal longer than matrix")
        body = [[ring.zero] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            body[i][i] = d
        return cls(ring, rows, cols, body)

    @classmethod
    def column(cls, ring, vector):
        vector = list(vector)
        return cls(ring, len(vector), 1, [[v] for v in vector])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(row[j] for row in self.entries)

    def to_lists(self):
        return [list(row) for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.ring != other.ring:
            raise ValueError("ring mismatch in matrix product")
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ring = self.ring
        body = []
        for i in range(self.rows):
            srow = self.entries[i]
            out = []
            for j in range(other.cols):
                acc = ring.zero
                for k in range(self.cols):
                    acc = ring.add(acc, ring.mul(srow[k], other.entries[k][j]))
                out.append(acc)
            body.append(out)
        return ExactMatrix(ring, self.rows, other.cols, body)

    def transpose(self):
        return ExactMatrix(
            self.ring,
            self.cols,
            self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def take_cols(self, indices):
        indices = list(indices)
        return ExactMatrix(
            self.ring,
            self.rows,
            len(indices),
            [[row[j] for j in indices] for row in self.entries],
        )

    def take_rows(self, indices):
        indices = list(indices)
        return ExactMatrix(
            self.ring, len(indices), self.cols, [self.entries[i] for i in indices]
        )

    def map_entries(self, fn, ring=None):
        """Entrywise map; pass ring to move to a different scalar type
        (e.g. lifting into the fraction field)."""
        return ExactMatrix(
            ring if ring is not None else self.ring,
            self.rows,
            self.cols,
            [[fn(e) for e in row] for row in self.entries],
        )

    def is_zero_matrix(self):
        z = self.ring.is_zero
        return all(z(e) for row in self.entries for e in row)

    def format(self):
        fmt = self.ring.format_token
        return "\n".join(" ".join(fmt(e) for e in row) for row in self.entries)

    def __repr__(self):
        if self.rows == 0 or self.cols == 0:
            return f"ExactMatrix({self.ring.tag}, {self.rows}x{self.cols})"
        return f"ExactMatrix({self.ring.tag}, {self.rows}x{self.cols},\n{self.format()})"


def hstack(*mats):
    if not mats:
        raise ValueError("hstack needs at least one matrix")
    ring, rows = mats[0].ring, mats[0].rows
    for m in mats:
        if m.ring != ring or m.rows != rows:
            raise ValueError("hstack shape or ring mismatch")
    body = [sum((list(m.entries[i]) for m in mats), []) for i in range(rows)]
    return ExactMatrix(ring, rows, sum(m.cols for m in mats), body)


def vstack(*mats):
    if not mats:
        raise ValueError("vstack needs at least one matrix")
    ring, cols = mats[0].ring, mats[0].cols
    for m in mats:
        if m.ring != ring or m.cols != cols:
            raise ValueError("vstack shape or ring mismatch")
    body = [list(row) for m in mats for row in m.entries]
    return ExactMatrix(ring, sum(m.rows for m in mats), cols, body)


def block_diagonal(*mats):
    if not mats:
        raise ValueError("block_diagonal needs at least one matrix")
    ring = mats[0].ring
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    body = [[ring.zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            body[r0 + i][c0 : c0 + m.cols] = m.entries[i]
        r0 += m.rows
        c0 += m.cols
    return ExactMatrix(ring, rows, cols, body)
