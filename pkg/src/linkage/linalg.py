"""Dense exact linear algebra over a Field (row reduction, kernels, spans)."""

from __future__ import annotations

from .fields import Field


class RowSpace:
    """Row space in reduced echelon form, supporting membership and quotients."""

    def __init__(self, field: Field, width: int):
        self.field = field
        self.width = width
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def _reduce(self, vec: list) -> list:
        fld = self.field
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for i in range(self.width):
                    if row[i]:
                        v[i] = fld.sub(v[i], fld.mul(c, row[i]))
        return v

    def insert(self, vec: list) -> bool:
        """Add a vector; returns True when it enlarged the space."""
        v = self._reduce(vec)
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return False
        fld = self.field
        inv = fld.inv(v[piv])
        v = [fld.mul(c, inv) for c in v]
        # clear the new pivot from existing rows
        for row in self.rows:
            c = row[piv]
            if c:
                for i in range(self.width):
                    if v[i]:
                        row[i] = fld.sub(row[i], fld.mul(c, v[i]))
        self.rows.append(v)
        self.pivots.append(piv)
        return True

    def extend(self, vectors) -> None:
        for v in vectors:
            self.insert(v)

    def contains(self, vec) -> bool:
        return all(not c for c in self._reduce(vec))

    def reduce(self, vec) -> list:
        return self._reduce(vec)

    @property
    def rank(self) -> int:
        return len(self.rows)


def kernel_basis(columns: list[list], field: Field) -> list[list]:
    """Kernel of the map sending e_i to columns[i] (vectors of equal height)."""
    n = len(columns)
    if n == 0:
        return []
    height = len(columns[0])
    # augment each column with the identity tag and row-reduce column-wise
    space = RowSpace(field, height + n)
    out = []
    for i, col in enumerate(columns):
        tag = [field.zero] * n
        tag[i] = field.one
        v = space._reduce(list(col) + tag)
        piv = next((j for j, c in enumerate(v) if c), None)
        if piv is None or piv >= height:
            # column is dependent: tag part encodes the dependency
            out.append(v[height:])
        else:
            inv = field.inv(v[piv])
            v = [field.mul(c, inv) for c in v]
            for row in space.rows:
                c = row[piv]
                if c:
                    for k in range(space.width):
                        if v[k]:
                            row[k] = field.sub(row[k], field.mul(c, v[k]))
            space.rows.append(v)
            space.pivots.append(piv)
    return out


def rank_of(columns: list[list], field: Field) -> int:
    space = RowSpace(field, len(columns[0]) if columns else 0)
    r = 0
    for col in columns:
        if space.insert(col):
            r += 1
    return r
