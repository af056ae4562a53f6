"""Combinatorial translations between lattice states, bumpless pipe dreams,
excited Young diagrams, nonintersecting paths, and set-valued tableaux."""

from __future__ import annotations

from .lattice import (
    EMPTY,
    MarkedState,
    ModelInstance,
    State,
    build_five_vertex,
    build_semidual,
    iter_states,
)
from .permutations import NotVexillaryError, Permutation, diagram_shape, is_vexillary
from .tableaux import SetValuedTableau, normalize_shape


# -- bumpless pipe dreams and their keys -----------------------------------------

# pipe routing inside each uncolored tile: in-edge -> out-edge, where the four
# edge slots are named by compass point and pipes travel up / right
_ROUTES = {
    "blank": {},
    "vertical": {"S": "N"},
    "horizontal": {"W": "E"},
    "turn_nw": {"W": "N"},
    "turn_se": {"S": "E"},
    "cross": {"S": "N", "W": "E"},
    "bump": {"S": "E", "W": "N"},
}


class BumplessPipeDream:
    """An n x n grid of the six color-free tiles, pipes entering at the bottom
    and leaving at the right."""

    __slots__ = ("tiles",)

    NAMES = ("blank", "cross", "vertical", "horizontal", "turn_nw", "turn_se")

    def __init__(self, tiles):
        self.tiles = tuple(tuple(row) for row in tiles)
        n = len(self.tiles)
        for row in self.tiles:
            if len(row) != n or any(t not in self.NAMES for t in row):
                raise ValueError("not a square grid of bumpless tiles")

    @property
    def size(self) -> int:
        return len(self.tiles)

    @classmethod
    def from_state(cls, state: State) -> BumplessPipeDream:
        """Forget colors; a colored double-turn cell reverts to a crossing."""
        n = state.instance.n_rows
        tiles = [
            ["cross" if state.rule(i, j).name == "bump" else state.rule(i, j).name
             for j in range(n)]
            for i in range(n)
        ]
        return cls(tiles)

    def __eq__(self, other) -> bool:
        return isinstance(other, BumplessPipeDream) and self.tiles == other.tiles

    def __hash__(self) -> int:
        return hash(self.tiles)

    def ascii(self) -> str:
        glyph = {"blank": "·", "cross": "┼", "vertical": "│",
                 "horizontal": "─", "turn_nw": "╯", "turn_se": "╭"}
        return "\n".join("".join(glyph[t] for t in row) for row in self.tiles)


def _trace_pipes(tiles, bump_cells):
    """Color every pipe edge by its bottom column; bump_cells lists the
    crossing cells currently resolved as double turns.

    Returns (h_colors, v_colors, right) with h[i][j] the color left of cell
    (i, j), v[i][j] the color above cell (i, j) (0-based), and right[i] the
    pipe exiting row i.
    """
    n = len(tiles)
    h = [[0] * (n + 1) for _ in range(n)]
    v = [[0] * n for _ in range(n + 1)]
    right = [0] * n
    for k in range(1, n + 1):
        i, j = n - 1, k - 1
        side = "S"
        v[n][j] = k
        while True:
            name = tiles[i][j]
            if name == "cross" and (i, j) in bump_cells:
                name = "bump"
            out = _ROUTES[name].get(side)
            if out is None:
                raise ValueError(f"pipe {k} stalls at ({i}, {j})")
            if out == "N":
                v[i][j] = k
                i -= 1
                side = "S"
                if i < 0:
                    raise ValueError(f"pipe {k} leaves through the top")
            else:
                h[i][j + 1] = k
                j += 1
                side = "W"
                if j >= n:
                    right[i] = k
                    break
    return h, v, right


def key_of_state(bpd: BumplessPipeDream) -> Permutation:
    """The permutation carried by a bumpless pipe dream.

    Pipes are labeled 1..n from the bottom; scanning the diagonals from the
    bottom-left corner to the top-right one, any crossing whose horizontal
    pipe is weaker than its vertical pipe (a second meeting of that pair)
    is resolved into a double turn, which reroutes everything downstream.
    The right boundary of the final routing reads off the key.
    """
    tiles = bpd.tiles
    n = bpd.size
    bumps: set[tuple[int, int]] = set()
    while True:
        h, v, right = _trace_pipes(tiles, bumps)
        offender = None
        for d in range(-(n - 1), n):  # diagonal j - i, bottom-left first
            for i in range(n):
                j = i + d
                if not 0 <= j < n:
                    continue
                if tiles[i][j] == "cross" and (i, j) not in bumps:
                    hor, ver = h[i][j], v[i][j]
                    if hor > ver:  # larger label = weaker color
                        offender = (i, j)
                        break
            if offender:
                break
        if offender is None:
            return Permutation(right)
        bumps.add(offender)


# -- the horizontal-complement map to the semidual model -------------------------


def phi(state: State, vex: bool = False) -> State:
    """Swap empty and occupied on every horizontal edge (colors dropped);
    the image is a state of the semidual model."""
    n = state.instance.n_rows
    target = build_semidual(n, reg=state.instance.reg, vex=vex)
    H = [[0 if state.H[i][j] else 1 for j in range(n + 1)] for i in range(n)]
    V = [[1 if state.V[i][j] else 0 for j in range(n)] for i in range(n + 1)]
    out = State(target, H, V)
    for i, j in out.cells():
        out.rule(i, j)  # raises if the complement were inadmissible
    return out


def phi_inverse(state: State) -> State:
    """Complement the horizontal edges back; lands in the color-free
    bumpless model."""
    from .lattice import build_uncolored_bumpless

    n = state.instance.n_rows
    target = build_uncolored_bumpless(n, reg=state.instance.reg)
    H = [[0 if state.H[i][j] else 1 for j in range(n + 1)] for i in range(n)]
    V = [[state.V[i][j] for j in range(n)] for i in range(n + 1)]
    out = State(target, H, V)
    for i, j in out.cells():
        out.rule(i, j)
    return out


def _in_shape(shape, i: int, j: int) -> bool:
    """1-based cell membership in a partition's Young diagram."""
    return i <= len(shape) and j <= shape[i - 1]


def semidual_supported_in(state: State, shape) -> bool:
    """True iff every tile with a non-unit weight (horizontal and the
    north-east turn) lies inside the shape."""
    shape = normalize_shape(shape)
    for i, j in state.cells():
        if state.rule(i, j).name in ("horizontal", "turn_ne"):
            if not _in_shape(shape, i + 1, j + 1):
                return False
    return True


def colored_crossing_inside(state: State, shape):
    """First bump or crossing cell of a colored bumpless state inside the
    shape (1-based), or None."""
    shape = normalize_shape(shape)
    for i, j in state.cells():
        if state.rule(i, j).name in ("bump", "cross") and _in_shape(shape, i + 1, j + 1):
            return (i + 1, j + 1)
    return None


# -- nonintersecting-path structure of semidual states ---------------------------

_PATH_STEPS = {
    ("horizontal", "W"): "E",
    ("turn_sw", "W"): "S",
    ("bounce", "W"): "S",
    ("vertical", "N"): "S",
    ("turn_ne", "N"): "E",
    ("bounce", "N"): "E",
}


def trace_semidual_path(state: State, row: int):
    """Follow the path entering at left edge ``row`` (1-based) until it
    leaves through the bottom; yields (cell_i, cell_j, out_side), 0-based."""
    n = state.instance.n_rows
    i, j, side = row - 1, 0, "W"
    while True:
        out = _PATH_STEPS.get((state.rule(i, j).name, side))
        if out is None:
            raise ValueError(f"path stalls at ({i}, {j})")
        yield (i, j, out)
        if out == "E":
            j += 1
            side = "W"
            if j >= n:
                raise ValueError("path leaves through the right boundary")
        else:
            i += 1
            side = "N"
            if i >= n:
                return


def read_flags(w: Permutation, states=None) -> tuple[int, ...]:
    """Flag vector read from the semidual picture: the row where each of the
    first len(diagram_shape(w)) paths crosses the right boundary of the
    bounding shape.  All states must agree; pass ``states`` to limit how many
    are checked (by default every state of the colored model for w).
    """
    from .lattice import build_bumpless
    from .permutations import bounding_shape

    if not is_vexillary(w):
        raise NotVexillaryError(f"{w} contains a 2143 pattern")
    lam = diagram_shape(w)
    big = bounding_shape(w)
    if states is None:
        states = list(iter_states(build_bumpless(w)))
    result = None
    for s in states:
        img = phi(s)
        flags = []
        for row in range(1, len(lam) + 1):
            # the bounding shape is closed to the north-west and the path
            # moves south-east, so it leaves the shape exactly once
            last = None
            for (i, j, _out) in trace_semidual_path(img, row):
                if _in_shape(big, i + 1, j + 1):
                    last = i + 1
            if last is None:
                raise ValueError(f"path {row} never enters the bounding shape")
            flags.append(last)
        flags = tuple(flags)
        if result is None:
            result = flags
        elif result != flags:
            raise ValueError(f"flag reading differs between states: {result} vs {flags}")
    if result is None:
        raise ValueError("no states supplied")
    return result


# -- excited Young diagrams -------------------------------------------------------


def state_to_eyd(ms: MarkedState):
    """Boxes = blank cells, marks = marked turn cells (all 1-based)."""
    boxes = frozenset(
        (i + 1, j + 1)
        for i, j in ms.state.cells()
        if ms.state.rule(i, j).name == "blank"
    )
    marks = frozenset((i + 1, j + 1) for (i, j) in ms.marks)
    return (boxes, marks)


def eyd_weight(eyd, reg):
    """Product of b * (x_i (+) y_j) over boxes and marks."""
    from .polyring import beta_add

    boxes, marks = eyd
    total = reg.one()
    for i, j in sorted(boxes) + sorted(marks):
        total = total * reg.beta() * beta_add(reg.x(i), reg.y(j))
    return total


def generate_eyd(inner, outer) -> frozenset:
    """All excited diagrams: closure of the inner shape (no marks) under the
    three local moves -- box slides one step down the diagonal, a box leaves
    a new mark one step down its diagonal, and marks migrate the same way.
    Every move needs the 2x2 corner it uses to be otherwise empty."""
    inner, outer = normalize_shape(inner), normalize_shape(outer)
    if not all(
        i <= len(outer) and j <= outer[i - 1]
        for i in range(1, len(inner) + 1)
        for j in range(1, inner[i - 1] + 1)
    ):
        raise ValueError(f"{inner} is not contained in {outer}")

    start = (
        frozenset((i, j) for i in range(1, len(inner) + 1) for j in range(1, inner[i - 1] + 1)),
        frozenset(),
    )

    def moves(cfg):
        boxes, marks = cfg
        occupied = boxes | marks
        for i, j in boxes:
            corner = {(i, j + 1), (i + 1, j), (i + 1, j + 1)}
            if _in_shape(outer, i + 1, j + 1) and not (corner & occupied):
                yield ((boxes - {(i, j)}) | {(i + 1, j + 1)}, marks)
                yield (boxes, marks | {(i + 1, j + 1)})
        for i, j in marks:
            corner = {(i, j + 1), (i + 1, j), (i + 1, j + 1)}
            if _in_shape(outer, i + 1, j + 1) and not (corner & occupied):
                yield (boxes, (marks - {(i, j)}) | {(i + 1, j + 1)})

    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for cfg in frontier:
            for new in moves(cfg):
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    return frozenset(seen)


def eyd_ascii(eyd, outer) -> str:
    """Boxes drawn solid, marks starred, remaining shape cells open."""
    boxes, marks = eyd
    outer = normalize_shape(outer)
    rows = []
    for i in range(1, len(outer) + 1):
        row = []
        for j in range(1, outer[i - 1] + 1):
            row.append("■" if (i, j) in boxes else "✱" if (i, j) in marks else "·")
        rows.append("".join(row))
    return "\n".join(rows)


# -- rotation into the five-vertex model and the tableau bijection ---------------

_ROTATE_NAME = {
    "blank": "blank",
    "bounce": "bounce",
    "horizontal": "horizontal",
    "turn_ne": "turn_sw",
    "turn_sw": "turn_ne",
}


def semidual_to_five_vertex(ms: MarkedState, w: Permutation):
    """Rotate the part of a (vex-weighted) semidual state inside the bounding
    shape by a half turn into the five-vertex grid and extend the paths by
    the forced diagonal staircases; marks travel with their tiles.

    Returns a MarkedState of the five-vertex model for diagram_shape(w).
    """
    from .permutations import bounding_shape

    state = ms.state
    n = state.instance.n_rows
    lam = diagram_shape(w)
    big = bounding_shape(w)
    target = build_five_vertex(lam, n, reg=state.instance.reg)
    m = target.n_cols
    pinned = {}
    mark_map = set()
    for i, j in state.cells():
        if not _in_shape(big, i + 1, j + 1):
            continue
        name = state.rule(i, j).name
        if name == "vertical":
            raise NotVexillaryError("vertical tile inside the bounding shape")
        ci, cj = n - 1 - i, m - 1 - j
        cfg = state.config(i, j)
        pinned[(ci, cj)] = (cfg[2], cfg[3], cfg[0], cfg[1])  # half turn
        if (i, j) in ms.marks:
            mark_map.add((ci, cj))
    completions = list(iter_states(target, pinned=pinned))
    if len(completions) != 1:
        raise ValueError(
            f"expected a unique staircase completion, found {len(completions)}"
        )
    return MarkedState(completions[0], frozenset(mark_map))


def _decode_layer(layer, n_parts: int):
    """Read a vertical-edge layer right-to-left as a 01-word and decode the
    partition it bounds."""
    positions = [k + 1 for k, v in enumerate(reversed(layer)) if v]
    if len(positions) != n_parts:
        raise ValueError(f"layer has {len(positions)} paths, expected {n_parts}")
    parts = [positions[i] - (i + 1) for i in range(n_parts)]
    if any(parts[i] > parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"layer {layer} is not a partition boundary")
    return tuple(p for p in reversed(parts) if p)


def theta(ms: MarkedState) -> SetValuedTableau:
    """Marked five-vertex states to set-valued tableaux.

    The vertical edges below row r encode a partition; the box added between
    consecutive layers receives the layer's value, the k-th path from the
    left writing row k.  A mark at cell (i, j) inserts the extra value
    n + 1 - i into the row of its path, in the box whose content matches the
    mark's column.
    """
    state = ms.state
    inst = state.instance
    n, m = inst.n_rows, inst.n_cols

    shapes = []
    for r in range(n + 1):
        shapes.append(_decode_layer(state.V[n - r], r))
    lam = shapes[n]
    for r in range(n):
        inner, outer = shapes[r], shapes[r + 1]
        if not all(
            inner[i] <= outer[i] for i in range(len(inner))
        ) or len(inner) > len(outer):
            raise ValueError("layers do not interlace")

    rows = [[set() for _ in range(lam[k])] for k in range(len(lam))]
    for r in range(1, n + 1):
        inner, outer = shapes[r - 1], shapes[r]
        for k in range(len(outer)):
            lo = inner[k] if k < len(inner) else 0
            for c in range(lo + 1, outer[k] + 1):
                rows[k][c - 1].add(r)

    # map each marked cell to the path through it, counted from the left
    if ms.marks:
        entry_cols = sorted(j for j, v in enumerate(inst.top) if v)
        path_of_cell = {}
        for k, j0 in enumerate(entry_cols, start=1):
            i, j, side = 0, j0, "N"
            while True:
                out = _PATH_STEPS.get((state.rule(i, j).name, side))
                if out is None:
                    raise ValueError(f"path stalls at ({i}, {j})")
                path_of_cell[(i, j, side)] = k
                if out == "E":
                    j += 1
                    side = "W"
                    if j >= m:
                        break
                else:
                    i += 1
                    side = "N"
                    if i >= n:
                        raise ValueError("path leaves through the bottom")
        for (i, j) in sorted(ms.marks):
            k = path_of_cell[(i, j, "W")]  # marked turns are entered going east
            r = n - i
            content = (m - j) - r
            col = k + content
            if not 1 <= col <= lam[k - 1]:
                raise ValueError("mark falls outside its row")
            rows[k - 1][col - 1].add(r)

    return SetValuedTableau(lam, [tuple(frozenset(c) for c in row) for row in rows])
