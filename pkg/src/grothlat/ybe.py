"""Yang-Baxter (RLL) verification and R-matrix solving.

The RLL relation equates two ways of composing an R-vertex with two L-vertices
that share one vertical line.  With boundary labels (a, b, c, d, e, f) --
a, b on the left pair, c on top, d, e on the right pair, f on the bottom --
and interior edges summed out, the pinned orientation reads

  sum_{g,k,h} R(a, b, g, k) * L_j(W=g, N=c, E=d, S=h) * L_i(W=k, N=h, E=e, S=f)
  ==
  sum_{g,k,h} L_i(W=b, N=c, E=g, S=h) * L_j(W=a, N=h, E=k, S=f) * R(k, g, d, e)

where R is keyed by the four corner labels (SW, NW, NE, SE) of its crossing
picture and the x_j line runs along the top after the crossing (this spectral
assignment is calibrated so the transcribed figures satisfy the relation).
Color ints follow the package convention (1 is the largest color).
"""

from __future__ import annotations

from collections import Counter
from itertools import product

from .lattice import WeightKind, WeightTable
from .polyring import Poly, RatFunc, VarRegistry, beta_add


class KernelDimensionError(ArithmeticError):
    """The RLL linear system does not have a one-dimensional kernel."""


def l_weight_map(
    table: WeightTable, reg: VarRegistry, x: Poly, y: Poly, n_colors: int
) -> dict[tuple[int, int, int, int], Poly]:
    """Evaluate a weight table at fixed spectral values, as a config -> Poly map."""
    out = {}
    labels = range(n_colors + 1)
    for cfg in product(labels, repeat=4):
        rule = table.rule(cfg)
        if rule is None:
            continue
        if rule.kind is WeightKind.ONE:
            out[cfg] = reg.one()
        elif rule.kind is WeightKind.XY:
            out[cfg] = beta_add(x, y)
        elif rule.kind is WeightKind.BXY:
            out[cfg] = reg.beta() * beta_add(x, y)
        else:
            out[cfg] = reg.one() + reg.beta() * beta_add(x, y)
    return out


def _conserving_keys(n_colors: int) -> list[tuple[int, int, int, int]]:
    labels = range(n_colors + 1)
    return [
        (a, b, c, d)
        for a in labels for b in labels for c in labels for d in labels
        if {a, b} == {c, d}
    ]


# -- the three R-matrices transcribed from the paper's figures ------------------


def bumpless_r_matrix(reg: VarRegistry, n_colors: int = 3) -> dict:
    """R-matrix for the double Grothendieck model; keys (SW, NW, NE, SE)."""
    one, b = reg.one(), reg.beta()
    xi, xj = reg.x(1), reg.x(2)
    w_i = one + b * xi
    w_j = one + b * xj
    w_d = b * (xj - xi)
    out = {(0, 0, 0, 0): w_i}
    for d in range(1, n_colors + 1):
        out[(0, d, d, 0)] = w_i
        out[(0, d, 0, d)] = w_d
        out[(d, 0, 0, d)] = w_j
        out[(d, d, d, d)] = w_i
    for c in range(1, n_colors + 1):
        for cp in range(c + 1, n_colors + 1):  # c beats cp
            out[(cp, c, c, cp)] = w_i
            out[(c, cp, cp, c)] = w_j
            out[(cp, c, cp, c)] = w_d
    return out


def atom_r_matrix(reg: VarRegistry, y: Poly, n_colors: int = 3) -> dict:
    """R-matrix for the top->right colored model at constant column value y."""
    one, b = reg.one(), reg.beta()
    zi = beta_add(reg.x(1), y)
    zj = beta_add(reg.x(2), y)
    a_i = (one + b * zi) * zj
    a_j = (one + b * zj) * zj
    a_ji = (one + b * zj) * zi
    a_d = (zj - zi) * zj
    a_c = zj - zi
    out = {(0, 0, 0, 0): a_i}
    for d in range(1, n_colors + 1):
        out[(0, d, d, 0)] = a_i
        out[(d, 0, d, 0)] = a_d
        out[(d, 0, 0, d)] = a_j
        out[(d, d, d, d)] = a_i
    for c in range(1, n_colors + 1):
        for cp in range(c + 1, n_colors + 1):  # c beats cp
            out[(cp, c, c, cp)] = a_ji
            out[(c, cp, cp, c)] = a_i
            out[(cp, c, cp, c)] = a_c
    return out


def semidual_r_matrix(reg: VarRegistry) -> dict:
    """R-matrix for the uncolored semidual model (independent of y)."""
    one, b = reg.one(), reg.beta()
    xi, xj = reg.x(1), reg.x(2)
    return {
        (0, 0, 0, 0): one + b * xi,
        (1, 1, 1, 1): one + b * xj,
        (1, 0, 1, 0): b * (xj - xi),
        (0, 1, 1, 0): one + b * xj,
        (1, 0, 0, 1): one + b * xi,
    }


def rll_residual(
    l_i: dict, l_j: dict, r_matrix: dict, reg: VarRegistry, n_colors: int
):
    """First boundary sextuple where the two RLL compositions differ, or None."""
    labels = range(n_colors + 1)
    zero = reg.zero()
    for a, b, c, f in product(labels, repeat=4):
        for d in labels:
            for e in labels:
                lhs = zero
                rhs = zero
                for h in labels:
                    for (g, k) in product(labels, repeat=2):
                        r = r_matrix.get((a, b, g, k))
                        if r is not None:
                            lj = l_j.get((g, c, d, h))
                            if lj is not None:
                                li = l_i.get((k, h, e, f))
                                if li is not None:
                                    lhs = lhs + r * lj * li
                        r2 = r_matrix.get((k, g, d, e))
                        if r2 is not None:
                            li2 = l_i.get((b, c, g, h))
                            if li2 is not None:
                                lj2 = l_j.get((a, h, k, f))
                                if lj2 is not None:
                                    rhs = rhs + li2 * lj2 * r2
                if lhs != rhs:
                    return (a, b, c, d, e, f)
    return None


def verify_rll(table: WeightTable, r_matrix: dict, reg: VarRegistry,
               n_colors: int = 3, y: Poly | None = None,
               rotate: bool = False):
    """Check the RLL relation for a weight table against an R-matrix over all
    boundary sextuples with at most ``n_colors`` colors.

    Returns (True, None) or (False, first_failing_sextuple).  The registry
    must provide x1 (= x_i), x2 (= x_j), and y1 (the shared column value).

    ``rotate`` reads the tiles a quarter turn around, which is how the
    semidual model (whose paths run left -> bottom rather than bottom ->
    right) plugs into the same relation.
    """
    if y is None:
        y = reg.y(1)
    l_i = l_weight_map(table, reg, reg.x(1), y, n_colors)
    l_j = l_weight_map(table, reg, reg.x(2), y, n_colors)
    if rotate:
        l_i = {(n, e, s, w): v for (w, n, e, s), v in l_i.items()}
        l_j = {(n, e, s, w): v for (w, n, e, s), v in l_j.items()}
        l_i, l_j = l_j, l_i
    bad = rll_residual(l_i, l_j, r_matrix, reg, n_colors)
    return (bad is None), bad


# -- solving for the R-matrix from the linear RLL system ------------------------


def solve_r_matrix(table: WeightTable, n_colors: int = 3):
    """Solve RLL - LLR = 0 for the R-matrix of a weight table.

    The unknowns are all color-conserving configs (SW, NW, NE, SE) over
    {0, 1, .., n_colors}.  The kernel of the linear system is computed by
    elimination with pivots at the first structurally nonzero entry; the
    returned solution is the kernel vector normalized to 1 at the all-empty
    config with every other free coordinate set to 0 (the echelon
    representative, which is what the reference computation prints).  It is
    verified by substitution into every equation before it is returned.

    Raises KernelDimensionError when no such kernel vector exists (a
    mistranscribed weight table).

    Returns a dict mapping configs to RatFunc values in x1 (= z_i), x2 (= z_j),
    and b; entries that vanish are omitted.
    """
    reg = VarRegistry(2, 1)
    y = reg.y(1)
    l_i = l_weight_map(table, reg, reg.x(1), y, n_colors)
    l_j = l_weight_map(table, reg, reg.x(2), y, n_colors)

    # echelon column order: all-empty config first, then the reading order of
    # the reference listing (colors by increasing strength)
    unknowns = sorted(
        _conserving_keys(n_colors),
        key=lambda cfg: (cfg != (0, 0, 0, 0), _presented_key(cfg, n_colors)),
    )
    index = {cfg: k for k, cfg in enumerate(unknowns)}

    labels = range(n_colors + 1)
    rows: list[dict[int, Poly]] = []
    seen = set()
    for a, b, c, d, e, f in product(labels, repeat=6):
        # the vertical line enters at the bottom: inputs {a, b, f}
        if Counter((a, b, f)) != Counter((c, d, e)):
            continue
        row: dict[int, Poly] = {}
        for g, k in product(labels, repeat=2):
            cfg = (a, b, g, k)
            if cfg in index:
                coeff = reg.zero()
                for h in labels:
                    lj = l_j.get((g, c, d, h))
                    li = l_i.get((k, h, e, f))
                    if lj is not None and li is not None:
                        coeff = coeff + lj * li
                if not coeff.is_zero():
                    idx = index[cfg]
                    row[idx] = row.get(idx, reg.zero()) + coeff
            cfg2 = (k, g, d, e)
            if cfg2 in index:
                coeff = reg.zero()
                for h in labels:
                    li = l_i.get((b, c, g, h))
                    lj = l_j.get((a, h, k, f))
                    if li is not None and lj is not None:
                        coeff = coeff + li * lj
                if not coeff.is_zero():
                    idx = index[cfg2]
                    row[idx] = row.get(idx, reg.zero()) - coeff
        row = {k2: v for k2, v in row.items() if not v.is_zero()}
        if row:
            key = tuple(sorted((k2, tuple(sorted(v.terms.items()))) for k2, v in row.items()))
            if key not in seen:
                seen.add(key)
                rows.append(row)

    nvar = len(unknowns)
    all_rows = rows

    # pin the all-empty config to 1 and move it to the right-hand side;
    # a row is then (coefficients over columns >= 1, optional rhs)
    CONST = -1  # key for the right-hand side inside a row dict
    work = []
    for r in rows:
        row = dict(r)
        a0 = row.pop(0, None)
        if a0 is not None:
            row[CONST] = -a0
        if set(row) - {CONST}:
            work.append(row)
        elif row:
            raise KernelDimensionError("the all-empty config is forced to zero")

    # zero propagation: a homogeneous one-variable row forces that unknown
    zeroed: set[int] = set()
    changed = True
    while changed:
        changed = False
        kept = []
        for row in work:
            for z in zeroed:
                row.pop(z, None)
            keys = set(row) - {CONST}
            if not keys:
                if row:
                    raise KernelDimensionError("inconsistent system")
                continue
            if len(keys) == 1 and CONST not in row:
                zeroed.add(keys.pop())
                changed = True
            else:
                kept.append(row)
        work = kept

    def dedup(rows_in):
        out, seen2 = [], set()
        for r in rows_in:
            key = tuple(sorted((k2, tuple(sorted(v.terms.items()))) for k2, v in r.items()))
            if key not in seen2:
                seen2.add(key)
                out.append(r)
        return out

    # forward elimination on polynomial rows by cross-multiplication
    # (new = row * piv[col] - piv * row[col]); pivots at the first
    # structurally nonzero coefficient, no gcd reduction anywhere
    work = dedup(work)
    pivots: list[tuple[int, dict[int, Poly]]] = []
    for col in range(1, nvar):
        pivot_row = None
        for row in work:
            if min(set(row) - {CONST}) == col:
                pivot_row = row
                break
        if pivot_row is None:
            continue
        work.remove(pivot_row)
        reduced = []
        for row in work:
            if col in row:
                new = {}
                for k2 in set(row) | set(pivot_row):
                    if k2 == col:
                        continue
                    v = row.get(k2, reg.zero()) * pivot_row[col] - pivot_row.get(
                        k2, reg.zero()
                    ) * row[col]
                    if not v.is_zero():
                        new[k2] = v
                if set(new) - {CONST}:
                    reduced.append(new)
                elif new:
                    raise KernelDimensionError("inconsistent system")
            else:
                reduced.append(row)
        work = dedup(reduced)
        pivots.append((col, pivot_row))

    pivot_cols = {col for col, _ in pivots}

    # anchored representative: 1 at the all-empty config, 0 at every other
    # free coordinate, pivot coordinates by RatFunc back-substitution
    one, zero = RatFunc(reg.one()), RatFunc(reg.zero())
    values: dict[int, RatFunc] = {0: one}
    for col in range(1, nvar):
        if col not in pivot_cols:
            values[col] = zero
    for col, row in reversed(pivots):
        acc = zero
        for k2, v in row.items():
            if k2 == CONST:
                acc = acc - RatFunc(v)
            elif k2 != col and not values[k2].is_zero():
                acc = acc + RatFunc(v) * values[k2]
        values[col] = -(acc / RatFunc(row[col]))

    solution = {cfg: values[index[cfg]] for cfg in unknowns}

    for row in all_rows:
        acc = zero
        for k2, v in row.items():
            if not values[k2].is_zero():
                acc = acc + RatFunc(v) * values[k2]
        if not acc.is_zero():
            raise KernelDimensionError("solution fails substitution check")

    return {cfg: v for cfg, v in solution.items() if not v.is_zero()}


def _presented_key(cfg: tuple[int, int, int, int], n_colors: int) -> tuple:
    """Key order of the reference computation: (NW, SW, NE, SE) with color
    ints growing with color strength."""
    sw, nw, ne, se = cfg

    def cv(v: int) -> int:
        return 0 if v == 0 else n_colors + 1 - v

    return (cv(nw), cv(sw), cv(ne), cv(se))


def presented_solution(solution: dict, n_colors: int = 3) -> dict:
    """Re-key a solved R-matrix the way the reference listing prints it."""
    return {
        _presented_key(cfg, n_colors): val for cfg, val in solution.items()
    }
