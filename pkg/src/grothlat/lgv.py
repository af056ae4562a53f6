"""Nonintersecting-lattice-path graphs and the path-matrix determinants.

Each grid cell contributes five nodes (edge midpoints and its center) and the
local moves: half steps W -> C -> E with the spectral weight on the second
half, a drop C -> S, the diagonal N -> E, and (in K-theory mode) an express
drop C -> C into the cell below that skips the shared edge midpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .permutations import (
    NotVexillaryError,
    Permutation,
    bounding_shape,
    diagram_shape,
    flagging,
    is_vexillary,
)
from .polyring import Poly, VarRegistry, beta_add, determinant

SCHUBERT = "schubert"
KTHEORY = "ktheory"

# node keys: ("w", r, j) is the west edge midpoint of cell (r, j) and doubles
# as the east midpoint of (r, j-1); ("c", r, j) the center; ("n", r, j) the
# north midpoint, with ("n", n+1, j) the exits through the bottom; 1-based.


@dataclass
class LgvGraph:
    n: int
    mode: str
    reg: VarRegistry
    edges: dict = field(default_factory=dict)

    def add(self, u, v, weight: Poly, kind: str) -> None:
        self.edges.setdefault(u, []).append((v, weight, kind))

    def all_edges(self):
        for u, outs in self.edges.items():
            for v, weight, kind in outs:
                yield (u, v, weight, kind)

    def start(self, a: int):
        """The a-th starting point, counted up the left edge from the bottom."""
        return ("w", self.n + 1 - a, 1)

    def end(self, b: int):
        """The b-th ending point, along the bottom edge from the left."""
        return ("n", self.n + 1, b)


def build_graph(n: int, mode: str, reg: VarRegistry | None = None) -> LgvGraph:
    """The directed path graph of an n x n grid.

    SCHUBERT mode weights the second horizontal half-steps by x_i (+) y_j and
    has no express drops; KTHEORY mode weights them by b * (x_i (+) y_j) and
    keeps the express drops.
    """
    if mode not in (SCHUBERT, KTHEORY):
        raise ValueError(f"mode must be {SCHUBERT!r} or {KTHEORY!r}")
    if reg is None:
        reg = VarRegistry(n, n)
    g = LgvGraph(n, mode, reg)
    one = reg.one()
    for r in range(1, n + 1):
        for j in range(1, n + 1):
            if mode == KTHEORY:
                step = reg.beta() * beta_add(reg.x(r), reg.y(j))
            else:
                step = reg.x(r) + reg.y(j)  # the b = 0 specialization
            g.add(("w", r, j), ("c", r, j), one, SCHUBERT)
            if j < n:
                g.add(("c", r, j), ("w", r, j + 1), step, SCHUBERT)
                g.add(("n", r, j), ("w", r, j + 1), one, SCHUBERT)
            g.add(("c", r, j), ("n", r + 1, j), one, SCHUBERT)
            if mode == KTHEORY:
                g.add(("c", r, j), ("c", r + 1, j), one, KTHEORY)
    return g


def _reachable_sums(g: LgvGraph, source) -> dict:
    """Sum of path weights from the source to every node (exact DP)."""
    reg = g.reg
    order = []
    seen = set()

    def visit(u):
        if u in seen:
            return
        seen.add(u)
        for v, _, _ in g.edges.get(u, []):
            visit(v)
        order.append(u)

    visit(source)
    sums = {source: reg.one()}
    for u in reversed(order):
        if u not in sums:
            continue
        val = sums[u]
        for v, weight, _ in g.edges.get(u, []):
            prev = sums.get(v)
            add = val * weight
            sums[v] = add if prev is None else prev + add
    return sums


def path_sum(g: LgvGraph, start, end) -> Poly:
    """Exact sum of path weights between two nodes (zero when unreachable)."""
    return _reachable_sums(g, start).get(end, g.reg.zero())


def brute_force_path_sum(g: LgvGraph, start, end) -> Poly:
    """Independent oracle: walk every path explicitly."""
    reg = g.reg
    total = reg.zero()

    def walk(u, weight: Poly):
        nonlocal total
        if u == end:
            total = total + weight
        for v, w, _ in g.edges.get(u, []):
            walk(v, weight * w)

    walk(start, reg.one())
    return total


def schubert_endpoints(w: Permutation) -> list:
    """End nodes for the flagged path family of a vexillary permutation:
    the b-th path stops just past the bounding shape's row-F_b boundary (or
    on the diagonal when its shape row is empty)."""
    if not is_vexillary(w):
        raise NotVexillaryError(f"{w} contains a 2143 pattern")
    n = w.size
    lam = diagram_shape(w)
    flags = flagging(w)
    ends = []
    for b in range(1, n + 1):
        if b <= len(lam):
            h = flags[b - 1]
            col = lam[b - 1] + h - b
        else:
            h = n
            col = n - b
        ends.append(("w", h, col + 1))
    return ends


def closed_form_p(a: int, b: int, lam, flags, n: int, reg: VarRegistry) -> Poly:
    """One-row factorial sum for the (a, b) path count at b = 0: weakly
    increasing fillings v_1 <= .. <= v_k of a row of length
    lam_b + a - b with a <= v_t <= h_b, the t-th entry contributing
    x_{v_t} + y_{v_t + t - a}."""
    lam = tuple(lam)
    lam_b = lam[b - 1] if b <= len(lam) else 0
    h = flags[b - 1] if b <= len(lam) else n
    k = lam_b + a - b
    if k < 0 or h < a:
        return reg.zero()
    total = reg.zero()

    def fill(t: int, lo: int, acc: Poly):
        nonlocal total
        if t > k:
            total = total + acc
            return
        for v in range(lo, h + 1):
            fill(t + 1, v, acc * (reg.x(v) + reg.y(v + t - a)))

    fill(1, a, reg.one())
    return total


def schubert_path_matrix(w: Permutation, reg: VarRegistry | None = None):
    """[p_ab] for the flagged family of a vexillary permutation; entries are
    path sums in the beta-free graph, rows indexed by starting height from
    the top."""
    n = w.size
    lam1 = diagram_shape(w)[0] if diagram_shape(w) else 0
    if reg is None:
        reg = VarRegistry(n, n + lam1)
    g = build_graph(n, SCHUBERT, reg)
    ends = schubert_endpoints(w)
    mat = []
    for a in range(1, n + 1):
        sums = _reachable_sums(g, ("w", a, 1))
        mat.append([sums.get(ends[b - 1], reg.zero()) for b in range(1, n + 1)])
    return mat


def lgv_determinant(w: Permutation, reg: VarRegistry | None = None) -> Poly:
    """det[p_ab]: equals the b = 0 double Grothendieck polynomial of a
    vexillary permutation."""
    return determinant(schubert_path_matrix(w, reg))


def ktheory_path_matrix(n: int, reg: VarRegistry | None = None):
    """[p_ab] over the full grid with express drops, starts counted up the
    left edge and ends along the bottom."""
    if reg is None:
        reg = VarRegistry(n, n)
    g = build_graph(n, KTHEORY, reg)
    mat = []
    for a in range(1, n + 1):
        sums = _reachable_sums(g, g.start(a))
        mat.append([sums.get(g.end(b), reg.zero()) for b in range(1, n + 1)])
    return mat


def lgv_determinant_full(n: int, reg: VarRegistry | None = None) -> Poly:
    """det[p_ab] for the K-theory graph: equals the full semidual partition
    function."""
    return determinant(ktheory_path_matrix(n, reg))
