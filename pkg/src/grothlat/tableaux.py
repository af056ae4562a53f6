"""Partitions, 01-sequences, and (flagged) set-valued tableaux.

A partition is a tuple of weakly decreasing nonnegative ints; trailing zeros
are stripped by :func:`normalize_shape` so equal shapes compare equal.
"""

from __future__ import annotations

from itertools import combinations

from .polyring import Poly, VarRegistry, beta_add


def normalize_shape(parts) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"not weakly decreasing: {parts}")
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def shape_contains(outer, inner) -> bool:
    outer, inner = normalize_shape(outer), normalize_shape(inner)
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def shape_boxes(shape) -> list[tuple[int, int]]:
    """Boxes (row, col), 1-based, row-reading order."""
    shape = normalize_shape(shape)
    return [(r, c) for r, row_len in enumerate(shape, 1) for c in range(1, row_len + 1)]


def zero_one_sequence(shape, n: int) -> str:
    """Boundary word of the shape read from the bottom: 0 = horizontal step,
    1 = vertical step, trailing 0s dropped; exactly n ones."""
    shape = normalize_shape(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than {n} rows")
    padded = shape + (0,) * (n - len(shape))
    out = []
    prev = 0
    for i in range(1, n + 1):
        z = padded[n - i]
        out.append("0" * (z - prev))
        out.append("1")
        prev = z
    return "".join(out)


class SetValuedTableau:
    """Shape filled with nonempty integer sets: rows weakly increase
    (max of a box <= min of its right neighbor), columns strictly increase."""

    __slots__ = ("shape", "rows")

    def __init__(self, shape, rows):
        self.shape = normalize_shape(shape)
        self.rows = tuple(tuple(frozenset(cell) for cell in row) for row in rows)
        if tuple(len(r) for r in self.rows) != self.shape:
            raise ValueError("row lengths differ from shape")
        for row in self.rows:
            for cell in row:
                if not cell or any(v < 1 for v in cell):
                    raise ValueError("cells must be nonempty sets of positive ints")
        if not self._increasing():
            raise ValueError(f"not a set-valued tableau: {self}")

    def _increasing(self) -> bool:
        for r, row in enumerate(self.rows):
            for c, cell in enumerate(row):
                if c + 1 < len(row) and max(cell) > min(row[c + 1]):
                    return False
                if r + 1 < len(self.rows) and c < len(self.rows[r + 1]):
                    if max(cell) >= min(self.rows[r + 1][c]):
                        return False
        return True

    def cell(self, r: int, c: int) -> frozenset[int]:
        return self.rows[r - 1][c - 1]

    def total_entries(self) -> int:
        return sum(len(cell) for row in self.rows for cell in row)

    def excess(self) -> int:
        """Number of entries beyond one per box."""
        return self.total_entries() - sum(self.shape)

    def max_entry(self) -> int:
        return max(max(cell) for row in self.rows for cell in row)

    def __eq__(self, other) -> bool:
        return isinstance(other, SetValuedTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __str__(self) -> str:
        return " / ".join(
            "[" + ",".join("{" + ",".join(map(str, sorted(cell))) + "}" for cell in row) + "]"
            for row in self.rows
        )

    def __repr__(self) -> str:
        return f"SetValuedTableau({self.shape}, {self!s})"


def _enumerate(shape, row_bounds) -> list[SetValuedTableau]:
    shape = normalize_shape(shape)
    if not shape:
        return [SetValuedTableau((), ())]
    boxes = shape_boxes(shape)
    results: list[SetValuedTableau] = []
    grid: dict[tuple[int, int], tuple[int, ...]] = {}

    def candidates(r: int, c: int):
        lo = 1
        if c > 1:
            lo = max(lo, grid[(r, c - 1)][-1])  # weak along the row
        if r > 1:
            lo = max(lo, grid[(r - 1, c)][-1] + 1)  # strict down the column
        hi = row_bounds[r - 1]
        values = range(lo, hi + 1)
        for size in range(1, hi - lo + 2):
            yield from combinations(values, size)

    def fill(k: int) -> None:
        if k == len(boxes):
            rows = [
                tuple(grid[(r, c)] for c in range(1, shape[r - 1] + 1))
                for r in range(1, len(shape) + 1)
            ]
            results.append(SetValuedTableau(shape, rows))
            return
        r, c = boxes[k]
        for cell in candidates(r, c):
            grid[(r, c)] = cell
            fill(k + 1)
        grid.pop((r, c), None)

    fill(0)
    return results


def enumerate_svt(shape, n: int) -> list[SetValuedTableau]:
    """All set-valued tableaux of the shape with entries in {1..n}."""
    shape = normalize_shape(shape)
    return _enumerate(shape, [n] * len(shape))


def enumerate_flagged_svt(shape, flags) -> list[SetValuedTableau]:
    """Set-valued tableaux with every row-i entry at most flags[i-1]."""
    shape = normalize_shape(shape)
    flags = tuple(flags)
    if len(flags) < len(shape):
        raise ValueError("need one flag per nonempty row")
    return _enumerate(shape, list(flags[: len(shape)]))


def registry_for(shape, n: int) -> VarRegistry:
    """Registry sized so every y_{entry + content} exists: n_y = n + shape[0]."""
    shape = normalize_shape(shape)
    lam1 = shape[0] if shape else 0
    return VarRegistry(n, n + lam1)


def tableau_weight(t: SetValuedTableau, reg: VarRegistry) -> Poly:
    """b^(excess) * prod over boxes and entries i of x_i (+) y_{i + content}."""
    total = reg.beta() ** t.excess()
    for r, row in enumerate(t.rows, 1):
        for c, cell in enumerate(row, 1):
            content = c - r
            for i in sorted(cell):
                j = i + content
                if not 1 <= j <= reg.n_y:
                    raise IndexError(
                        f"y{j} outside registry (n_y={reg.n_y}); size with registry_for"
                    )
                total = total * beta_add(reg.x(i), reg.y(j))
    return total


def factorial_grothendieck(shape, n: int, reg: VarRegistry | None = None) -> Poly:
    """Sum of tableau weights over all set-valued tableaux with entries <= n."""
    if reg is None:
        reg = registry_for(shape, n)
    total = reg.zero()
    for t in enumerate_svt(shape, n):
        total = total + tableau_weight(t, reg)
    return total


def flagged_factorial_grothendieck(shape, flags, reg: VarRegistry | None = None) -> Poly:
    """Sum of tableau weights over the flag-bounded set-valued tableaux."""
    flags = tuple(flags)
    if reg is None:
        n = max(flags) if flags else 1
        reg = registry_for(shape, n)
    total = reg.zero()
    for t in enumerate_flagged_svt(shape, flags):
        total = total + tableau_weight(t, reg)
    return total
