"""Colored square-lattice vertex models: weight tables, boundary conditions,
state enumeration, and exact partition functions.

Edge labels are ints: 0 = empty, k >= 1 is the k-th color.  Color 1 is the
*largest* color (colors decrease as the index grows), so "c beats c'" reads
``c < c'`` on ints.  A cell's configuration is the tuple (W, N, E, S) of its
four edge labels; configurations absent from a table have weight zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator

from .permutations import Permutation
from .polyring import Poly, VarRegistry, beta_add
from .tableaux import normalize_shape, zero_one_sequence

EMPTY = 0

Config = tuple[int, int, int, int]


class WeightKind(Enum):
    ONE = "1"
    XY = "x+y"              # x (+) y
    BXY = "b(x+y)"          # b * (x (+) y)
    ONE_PLUS_BXY = "1+b(x+y)"


@dataclass(frozen=True)
class TileRule:
    name: str
    kind: WeightKind
    match: Callable[[int, int, int, int], bool]


def _col(v: int) -> bool:
    return v >= 1


class WeightTable:
    """Named tile set over labels {0..n_colors}; precomputes lookups."""

    def __init__(self, name: str, n_colors: int, rules: list[TileRule]):
        self.name = name
        self.n_colors = n_colors
        self.rules = rules
        self.by_config: dict[Config, TileRule] = {}
        labels = range(n_colors + 1)
        for w in labels:
            for n in labels:
                for e in labels:
                    for s in labels:
                        for rule in rules:
                            if rule.match(w, n, e, s):
                                cfg = (w, n, e, s)
                                if cfg in self.by_config:
                                    raise ValueError(
                                        f"{name}: rules overlap on {cfg}"
                                    )
                                self.by_config[cfg] = rule
        self.successors: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for (w, n, e, s) in sorted(self.by_config):
            self.successors.setdefault((w, n), []).append((e, s))

    def rule(self, cfg: Config) -> TileRule | None:
        return self.by_config.get(cfg)


def bumpless_table(n_colors: int) -> WeightTable:
    """Tiles of the double Grothendieck model: pipes run bottom -> right."""
    return WeightTable("bumpless", n_colors, [
        TileRule("blank", WeightKind.BXY,
                 lambda w, n, e, s: w == n == e == s == 0),
        TileRule("bump", WeightKind.ONE,
                 lambda w, n, e, s: _col(w) and w == n and _col(e) and e == s and e < w),
        TileRule("cross", WeightKind.ONE,
                 lambda w, n, e, s: _col(w) and w == e and _col(n) and n == s and w < n),
        TileRule("vertical", WeightKind.ONE,
                 lambda w, n, e, s: w == e == 0 and _col(n) and n == s),
        TileRule("horizontal", WeightKind.ONE,
                 lambda w, n, e, s: n == s == 0 and _col(w) and w == e),
        TileRule("turn_nw", WeightKind.ONE_PLUS_BXY,
                 lambda w, n, e, s: e == s == 0 and _col(w) and w == n),
        TileRule("turn_se", WeightKind.ONE,
                 lambda w, n, e, s: w == n == 0 and _col(e) and e == s),
    ])


def atom_table(n_colors: int, swapped: bool = False) -> WeightTable:
    """Tiles of the colored model with paths running top -> right.

    With ``swapped`` the two colors of the double-turn tile trade places
    (the Lascoux-polynomial variant).  The all-equal double turn is kept in
    the table; a test asserts it never occurs with distinct colors.
    """
    if swapped:
        double_turn = lambda w, n, e, s: (
            _col(w) and w == s and _col(n) and n == e and n < w
        )
    else:
        double_turn = lambda w, n, e, s: (
            _col(w) and w == s and _col(n) and n == e and w < n
        )
    name = "atom_poly" if swapped else "atom"
    return WeightTable(name, n_colors, [
        TileRule("blank", WeightKind.ONE,
                 lambda w, n, e, s: w == n == e == s == 0),
        TileRule("bump", WeightKind.ONE, double_turn),
        TileRule("bounce", WeightKind.ONE,
                 lambda w, n, e, s: _col(w) and w == n == e == s),
        TileRule("cross", WeightKind.ONE,
                 lambda w, n, e, s: _col(w) and w == e and _col(n) and n == s and n < w),
        TileRule("horizontal", WeightKind.XY,
                 lambda w, n, e, s: n == s == 0 and _col(w) and w == e),
        TileRule("turn_ne", WeightKind.ONE,
                 lambda w, n, e, s: w == s == 0 and _col(n) and n == e),
        TileRule("turn_sw", WeightKind.ONE_PLUS_BXY,
                 lambda w, n, e, s: n == e == 0 and _col(w) and w == s),
    ])


def uncolored_bumpless_table() -> WeightTable:
    """Color-forgotten bumpless tiles: every all-occupied cell is a crossing
    (the colored bump resolves back to a crossing once colors are dropped)."""
    return WeightTable("bumpless_uncolored", 1, [
        TileRule("blank", WeightKind.BXY,
                 lambda w, n, e, s: w == n == e == s == 0),
        TileRule("cross", WeightKind.ONE,
                 lambda w, n, e, s: w == n == e == s == 1),
        TileRule("vertical", WeightKind.ONE,
                 lambda w, n, e, s: (w, n, e, s) == (0, 1, 0, 1)),
        TileRule("horizontal", WeightKind.ONE,
                 lambda w, n, e, s: (w, n, e, s) == (1, 0, 1, 0)),
        TileRule("turn_nw", WeightKind.ONE_PLUS_BXY,
                 lambda w, n, e, s: (w, n, e, s) == (1, 1, 0, 0)),
        TileRule("turn_se", WeightKind.ONE,
                 lambda w, n, e, s: (w, n, e, s) == (0, 0, 1, 1)),
    ])


def build_uncolored_bumpless(n: int, reg: VarRegistry | None = None) -> ModelInstance:
    """n x n grid with every bottom and right edge occupied: the states are
    exactly the bumpless pipe dreams."""
    if reg is None:
        reg = VarRegistry(n, n)
    return ModelInstance(
        table=uncolored_bumpless_table(),
        n_rows=n,
        n_cols=n,
        top=(EMPTY,) * n,
        bottom=(1,) * n,
        left=(EMPTY,) * n,
        right=(1,) * n,
        row_values=tuple(reg.x(i) for i in range(1, n + 1)),
        col_values=tuple(reg.y(j) for j in range(1, n + 1)),
        reg=reg,
        name=f"bumpless_uncolored[{n}]",
    )


def semidual_table(vex: bool = False) -> WeightTable:
    """Uncolored semidual tiles: paths run left -> bottom.  The ``vex``
    variant drops the b factor from the horizontal tile."""
    horiz_kind = WeightKind.XY if vex else WeightKind.BXY
    name = "semidual_vex" if vex else "semidual"
    return WeightTable(name, 1, [
        TileRule("blank", WeightKind.ONE,
                 lambda w, n, e, s: w == n == e == s == 0),
        TileRule("bounce", WeightKind.ONE,
                 lambda w, n, e, s: w == n == e == s == 1),
        TileRule("vertical", WeightKind.ONE,
                 lambda w, n, e, s: (w, n, e, s) == (0, 1, 0, 1)),
        TileRule("horizontal", horiz_kind,
                 lambda w, n, e, s: (w, n, e, s) == (1, 0, 1, 0)),
        TileRule("turn_ne", WeightKind.ONE_PLUS_BXY,
                 lambda w, n, e, s: (w, n, e, s) == (0, 1, 1, 0)),
        TileRule("turn_sw", WeightKind.ONE,
                 lambda w, n, e, s: (w, n, e, s) == (1, 0, 0, 1)),
    ])


def five_vertex_table() -> WeightTable:
    """Single-color restriction of the top->right model (five usable tiles)."""
    return WeightTable("five_vertex", 1, [
        TileRule("blank", WeightKind.ONE,
                 lambda w, n, e, s: w == n == e == s == 0),
        TileRule("bounce", WeightKind.ONE,
                 lambda w, n, e, s: w == n == e == s == 1),
        TileRule("horizontal", WeightKind.XY,
                 lambda w, n, e, s: (w, n, e, s) == (1, 0, 1, 0)),
        TileRule("turn_ne", WeightKind.ONE,
                 lambda w, n, e, s: (w, n, e, s) == (0, 1, 1, 0)),
        TileRule("turn_sw", WeightKind.ONE_PLUS_BXY,
                 lambda w, n, e, s: (w, n, e, s) == (1, 0, 0, 1)),
    ])


@dataclass
class ModelInstance:
    """A weight table on a rectangular grid with fixed boundary labels and
    per-row / per-column spectral values (arbitrary polynomials)."""

    table: WeightTable
    n_rows: int
    n_cols: int
    top: tuple[int, ...]
    bottom: tuple[int, ...]
    left: tuple[int, ...]
    right: tuple[int, ...]
    row_values: tuple[Poly, ...]
    col_values: tuple[Poly, ...]
    reg: VarRegistry
    name: str = ""
    # optional admissibility cut: prune(i, j, e_label, s_label) -> True to cut
    prune: Callable[[int, int, int, int], bool] | None = None
    _weight_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if len(self.top) != self.n_cols or len(self.bottom) != self.n_cols:
            raise ValueError("top/bottom boundary length mismatch")
        if len(self.left) != self.n_rows or len(self.right) != self.n_rows:
            raise ValueError("left/right boundary length mismatch")
        if len(self.row_values) != self.n_rows or len(self.col_values) != self.n_cols:
            raise ValueError("spectral value count mismatch")

    def cell_weight(self, i: int, j: int, kind: WeightKind) -> Poly:
        """Weight polynomial of a tile kind at cell (i, j), 0-based."""
        key = (i, j, kind)
        if key not in self._weight_cache:
            reg = self.reg
            if kind is WeightKind.ONE:
                val = reg.one()
            else:
                xy = beta_add(self.row_values[i], self.col_values[j])
                if kind is WeightKind.XY:
                    val = xy
                elif kind is WeightKind.BXY:
                    val = reg.beta() * xy
                elif kind is WeightKind.ONE_PLUS_BXY:
                    val = reg.one() + reg.beta() * xy
                else:
                    raise ValueError(kind)
            self._weight_cache[key] = val
        return self._weight_cache[key]


class State:
    """Edge labels of one admissible state.

    H[i][j] is the horizontal edge left of cell (i, j) for j < n_cols, and
    H[i][n_cols] is the right boundary edge of row i.  V[i][j] is the vertical
    edge above cell (i, j), with V[n_rows][j] the bottom boundary.  0-based.
    """

    __slots__ = ("instance", "H", "V")

    def __init__(self, instance: ModelInstance, H, V):
        self.instance = instance
        self.H = tuple(tuple(row) for row in H)
        self.V = tuple(tuple(row) for row in V)

    def config(self, i: int, j: int) -> Config:
        return (self.H[i][j], self.V[i][j], self.H[i][j + 1], self.V[i + 1][j])

    def rule(self, i: int, j: int) -> TileRule:
        r = self.instance.table.rule(self.config(i, j))
        if r is None:
            raise ValueError(f"inadmissible cell ({i}, {j})")
        return r

    def cells(self) -> Iterator[tuple[int, int]]:
        for i in range(self.instance.n_rows):
            for j in range(self.instance.n_cols):
                yield (i, j)

    def weight(self) -> Poly:
        total = self.instance.reg.one()
        for i, j in self.cells():
            kind = self.rule(i, j).kind
            if kind is not WeightKind.ONE:
                total = total * self.instance.cell_weight(i, j, kind)
        return total

    def markable_cells(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i, j in self.cells()
            if self.rule(i, j).kind is WeightKind.ONE_PLUS_BXY
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, State) and self.H == other.H and self.V == other.V
        )

    def __hash__(self) -> int:
        return hash((self.H, self.V))


class MarkedState:
    """A state with a chosen subset of its expandable (1 + b(x+y)) cells.

    The marked branch of such a cell contributes b(x+y); unmarked cells of
    that kind contribute 1.
    """

    __slots__ = ("state", "marks")

    def __init__(self, state: State, marks):
        marks = frozenset(marks)
        allowed = set(state.markable_cells())
        if not marks <= allowed:
            raise ValueError("marks on non-expandable cells")
        self.state = state
        self.marks = marks

    def weight(self) -> Poly:
        inst = self.state.instance
        total = inst.reg.one()
        for i, j in self.state.cells():
            kind = self.state.rule(i, j).kind
            if kind is WeightKind.ONE_PLUS_BXY:
                if (i, j) in self.marks:
                    total = total * inst.cell_weight(i, j, WeightKind.BXY)
            elif kind is not WeightKind.ONE:
                total = total * inst.cell_weight(i, j, kind)
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MarkedState)
            and self.state == other.state
            and self.marks == other.marks
        )

    def __hash__(self) -> int:
        return hash((self.state, self.marks))


def iter_states(
    instance: ModelInstance,
    pinned: dict[tuple[int, int], Config] | None = None,
) -> Iterator[State]:
    """Backtracking enumeration, row-major from the top-left; deterministic.

    ``pinned`` forces full configurations at given cells (used when completing
    a partially known state); pinned cells still must be admissible.
    """
    nr, nc = instance.n_rows, instance.n_cols
    table = instance.table
    H = [[EMPTY] * (nc + 1) for _ in range(nr)]
    V = [[EMPTY] * nc for _ in range(nr + 1)]
    for i in range(nr):
        H[i][0] = instance.left[i]
    for j in range(nc):
        V[0][j] = instance.top[j]

    def choices(i: int, j: int, w: int, n: int) -> list[tuple[int, int]]:
        if pinned and (i, j) in pinned:
            pw, pn, pe, ps = pinned[(i, j)]
            if (pw, pn) != (w, n) or table.rule((pw, pn, pe, ps)) is None:
                return []
            opts = [(pe, ps)]
        else:
            opts = table.successors.get((w, n), [])
        out = []
        for e, s in opts:
            if j == nc - 1 and e != instance.right[i]:
                continue
            if i == nr - 1 and s != instance.bottom[j]:
                continue
            if instance.prune is not None and instance.prune(i, j, e, s):
                continue
            out.append((e, s))
        return out

    def walk(i: int, j: int) -> Iterator[State]:
        if i == nr:
            yield State(instance, H, V)
            return
        ni, nj = (i, j + 1) if j + 1 < nc else (i + 1, 0)
        for e, s in choices(i, j, H[i][j], V[i][j]):
            H[i][j + 1] = e
            V[i + 1][j] = s
            yield from walk(ni, nj)

    yield from walk(0, 0)


def enumerate_states(instance: ModelInstance, **kw) -> list[State]:
    return list(iter_states(instance, **kw))


def enumerate_marked_states(instance: ModelInstance) -> list[MarkedState]:
    """Every state expanded over all subsets of its expandable cells."""
    out = []
    for st in iter_states(instance):
        cells = st.markable_cells()
        for bits in range(1 << len(cells)):
            marks = frozenset(c for k, c in enumerate(cells) if bits >> k & 1)
            out.append(MarkedState(st, marks))
    return out


def partition_function(instance: ModelInstance) -> Poly:
    """Sum of state weights over all admissible states."""
    total = instance.reg.zero()
    for st in iter_states(instance):
        total = total + st.weight()
    return total


# -- model builders ------------------------------------------------------------


def build_bumpless(w: Permutation, reg: VarRegistry | None = None) -> ModelInstance:
    """n x n double Grothendieck model: bottom boundary colored 1..n left to
    right, right boundary w-colored top to bottom, other edges empty."""
    n = w.size
    if reg is None:
        reg = VarRegistry(n, n)
    inv = w.inverse()

    def prune(i: int, j: int, e: int, s: int) -> bool:
        # pipes rise monotonically from bottom column k to right row inv(k)
        if e and (e > j + 1 or inv(e) > i + 1):
            return True
        if s and (s > j + 1 or inv(s) > i + 1):
            return True
        return False

    return ModelInstance(
        table=bumpless_table(n),
        n_rows=n,
        n_cols=n,
        top=(EMPTY,) * n,
        bottom=tuple(range(1, n + 1)),
        left=(EMPTY,) * n,
        right=tuple(w(i) for i in range(1, n + 1)),
        row_values=tuple(reg.x(i) for i in range(1, n + 1)),
        col_values=tuple(reg.y(j) for j in range(1, n + 1)),
        reg=reg,
        name=f"bumpless[{w}]",
        prune=prune,
    )


def build_atom_model(
    shape,
    w: Permutation,
    variant: str = "atom",
    reg: VarRegistry | None = None,
    col_values: tuple[Poly, ...] | None = None,
) -> ModelInstance:
    """Colored top->right model: top edges carry the shape's 01-sequence with
    the i-th 1 colored i, right edges carry w's colors, rest empty."""
    n = w.size
    shape = normalize_shape(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} too long for S_{n}")
    lam1 = shape[0] if shape else 0
    m = n + lam1
    if reg is None:
        reg = VarRegistry(n, m)
    # the grid mirrors the usual left-colored drawing, so the boundary word is
    # mirrored too: reversed 01-sequence, k-th 1 from the left colored n+1-k
    seq = zero_one_sequence(shape, n).ljust(m, "0")[::-1]
    top = []
    color = n + 1
    for ch in seq:
        if ch == "1":
            color -= 1
            top.append(color)
        else:
            top.append(EMPTY)
    if variant not in ("atom", "poly"):
        raise ValueError(f"variant must be 'atom' or 'poly', got {variant!r}")
    if col_values is None:
        col_values = tuple(reg.y(j) for j in range(1, m + 1))
    return ModelInstance(
        table=atom_table(n, swapped=(variant == "poly")),
        n_rows=n,
        n_cols=m,
        top=tuple(top),
        bottom=(EMPTY,) * m,
        left=(EMPTY,) * n,
        right=tuple(w(i) for i in range(1, n + 1)),
        row_values=tuple(reg.x(i) for i in range(1, n + 1)),
        col_values=col_values,
        reg=reg,
        name=f"{variant}[{shape},{w}]",
    )


def build_semidual(n: int, reg: VarRegistry | None = None, vex: bool = False) -> ModelInstance:
    """n x n uncolored semidual model: left and bottom edges occupied, top and
    right empty; paths run from the left edge to the bottom edge."""
    if reg is None:
        reg = VarRegistry(n, n)
    return ModelInstance(
        table=semidual_table(vex=vex),
        n_rows=n,
        n_cols=n,
        top=(EMPTY,) * n,
        bottom=(1,) * n,
        left=(1,) * n,
        right=(EMPTY,) * n,
        row_values=tuple(reg.x(i) for i in range(1, n + 1)),
        col_values=tuple(reg.y(j) for j in range(1, n + 1)),
        reg=reg,
        name=f"semidual[{n}]" + ("~vex" if vex else ""),
    )


def build_five_vertex(shape, n: int, reg: VarRegistry | None = None) -> ModelInstance:
    """Uncolored five-vertex model: top edges carry the reversed 01-sequence,
    right edges all occupied.  Row values run x_n..x_1 from the top and column
    values y_m..y_1 from the left (the orientation that makes the partition
    function a factorial Grothendieck polynomial)."""
    shape = normalize_shape(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} too long for n={n}")
    lam1 = shape[0] if shape else 0
    m = n + lam1
    if reg is None:
        reg = VarRegistry(n, m)
    if reg.n_x < n or reg.n_y < m:
        raise ValueError("registry too small for the five-vertex grid")
    seq = zero_one_sequence(shape, n).ljust(m, "0")[::-1]
    top = tuple(1 if ch == "1" else EMPTY for ch in seq)
    return ModelInstance(
        table=five_vertex_table(),
        n_rows=n,
        n_cols=m,
        top=top,
        bottom=(EMPTY,) * m,
        left=(EMPTY,) * n,
        right=(1,) * n,
        row_values=tuple(reg.x(n - i) for i in range(n)),
        col_values=tuple(reg.y(m - j) for j in range(m)),
        reg=reg,
        name=f"five_vertex[{shape},n={n}]",
    )


def functional_equation_check(w: Permutation, i: int, reg: VarRegistry | None = None) -> bool:
    """Exchange relation of the double Grothendieck model: for w s_i > w,

      b * Z(w) == [ (1 + b x_{i+1}) Z(w s_i) - (1 + b x_i) s_i Z(w s_i) ]
                  / (x_i - x_{i+1})

    as an exact polynomial identity (the division is exact by construction).
    """
    from .polyring import exact_divide, swap_x

    if not w.has_ascent(i):
        raise ValueError(f"need w*s_{i} longer than w")
    if reg is None:
        reg = VarRegistry(w.size, w.size)
    z_w = partition_function(build_bumpless(w, reg))
    z_ws = partition_function(build_bumpless(w.right_mult(i), reg))
    one, b = reg.one(), reg.beta()
    num = (one + b * reg.x(i + 1)) * z_ws - (one + b * reg.x(i)) * swap_x(z_ws, i)
    return b * z_w == exact_divide(num, reg.x(i) - reg.x(i + 1))


def atom_functional_equation_check(shape, u: Permutation, i: int,
                                   reg: VarRegistry | None = None) -> bool:
    """Constant-column exchange relation of the top->right model: for a
    descent i of u,

      Z(shape, u s_i) == (1 + b x_i)(x_{i+1} (+) y)(Z(shape, u) - s_i Z(shape, u))
                         / (x_i - x_{i+1}).
    """
    from .polyring import exact_divide, swap_x

    if u.has_ascent(i):
        raise ValueError(f"need u*s_{i} shorter than u")
    n = u.size
    shape = normalize_shape(shape)
    lam1 = shape[0] if shape else 0
    if reg is None:
        reg = VarRegistry(n, 1)
    cols = tuple(reg.y(1) for _ in range(n + lam1))

    def z(perm):
        return partition_function(
            build_atom_model(shape, perm, variant="atom", reg=reg, col_values=cols)
        )

    z_u = z(u)
    z_us = z(u.right_mult(i))
    one, b = reg.one(), reg.beta()
    num = (one + b * reg.x(i)) * beta_add(reg.x(i + 1), reg.y(1)) * (z_u - swap_x(z_u, i))
    return z_us == exact_divide(num, reg.x(i) - reg.x(i + 1))


def semidual_partition_function(w: Permutation, reg: VarRegistry | None = None) -> Poly:
    """Partition function of the shape-restricted semidual model for a
    vexillary permutation, computed as the sum of the complemented colored
    states re-weighted with the b-free horizontal tile."""
    from .bijections import phi, semidual_supported_in
    from .permutations import bounding_shape, is_vexillary
    from .permutations import NotVexillaryError

    if not is_vexillary(w):
        raise NotVexillaryError(f"{w} contains a 2143 pattern")
    if reg is None:
        reg = VarRegistry(w.size, w.size)
    big = bounding_shape(w)
    total = reg.zero()
    for s in iter_states(build_bumpless(w, reg)):
        img = phi(s, vex=True)
        if not semidual_supported_in(img, big):
            raise ValueError(f"state of {w} escapes the bounding shape")
        total = total + img.weight()
    return total


def stable_limit_partition_function(w: Permutation, n_keep: int,
                                    reg: VarRegistry | None = None) -> Poly:
    """The part of the shape-restricted semidual partition function that only
    involves x_1..x_{n_keep}: the sum over marked states whose horizontal
    tiles and marks all sit in the first n_keep rows.

    For w = 1^k x v with v vexillary and k large enough this equals the
    factorial Grothendieck polynomial of diagram_shape(v) in n_keep
    variables: the grid is tall enough that the flags stop biting.
    """
    from .bijections import phi

    if reg is None:
        reg = VarRegistry(w.size, w.size)
    total = reg.zero()
    for s in iter_states(build_bumpless(w, reg)):
        img = phi(s, vex=True)
        if any(
            i >= n_keep
            for i, j in img.cells()
            if img.rule(i, j).name == "horizontal"
        ):
            continue
        low = [c for c in img.markable_cells() if c[0] < n_keep]
        for bits in range(1 << len(low)):
            marks = frozenset(c for k, c in enumerate(low) if bits >> k & 1)
            total = total + MarkedState(img, marks).weight()
    return total


# -- rendering & export --------------------------------------------------------

_GLYPHS = {
    "blank": "· ",
    "cross": "┼ ",
    "bump": "╯╭",
    "bounce": "╮╰",
    "vertical": "│ ",
    "horizontal": "─ ",
    "turn_nw": "╯ ",
    "turn_se": "╭ ",
    "turn_ne": "╰ ",
    "turn_sw": "╮ ",
}


def render_ascii(state: State) -> str:
    """Tile glyph grid with colored boundary edges shown as digits."""
    inst = state.instance
    lines = []
    top_line = "  " + "".join(
        (str(v) if v else ".").ljust(2) for v in inst.top
    )
    lines.append(top_line)
    for i in range(inst.n_rows):
        row = "".join(_GLYPHS[state.rule(i, j).name] for j in range(inst.n_cols))
        left = str(inst.left[i]) if inst.left[i] else "."
        right = str(inst.right[i]) if inst.right[i] else "."
        lines.append(f"{left} {row}{right}")
    lines.append(
        "  " + "".join((str(v) if v else ".").ljust(2) for v in inst.bottom)
    )
    return "\n".join(lines)


def state_to_json(state: State, marks=None) -> dict:
    """JSON form: per-cell tile names plus the raw edge-color arrays."""
    inst = state.instance
    data = {
        "model": inst.name,
        "rows": inst.n_rows,
        "cols": inst.n_cols,
        "tiles": [
            [state.rule(i, j).name for j in range(inst.n_cols)]
            for i in range(inst.n_rows)
        ],
        "h_edges": [list(row) for row in state.H],
        "v_edges": [list(row) for row in state.V],
    }
    if marks is not None:
        data["marks"] = sorted([i, j] for (i, j) in marks)
    return data
