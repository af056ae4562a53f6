"""Divided-difference style operators and the polynomial families they build.

All five operators act on Z[x1..xn, y.., b] through exact division by
x_i - x_{i+1}; a nonzero remainder can only come from a transcription bug.
"""

from __future__ import annotations

from enum import Enum

from .permutations import Permutation, reduced_word
from .polyring import Poly, VarRegistry, beta_add, exact_divide, substitute, swap_x


class OperatorKind(Enum):
    PARTIAL = "partial"        # (f - s_i f) / (x_i - x_{i+1})
    KDD = "kdd"                # partial((1 + b x_{i+1}) f)
    DEMAZURE = "demazure"      # partial(x_i f)
    LASCOUX = "lascoux"        # demazure((1 + b x_{i+1}) f)
    LASCOUX_ATOM = "lascoux_atom"  # lascoux(f) - f


def apply_op(kind: OperatorKind, i: int, f: Poly) -> Poly:
    reg = f.reg
    if not 1 <= i < reg.n_x:
        raise IndexError(f"operator index {i} out of range for n_x={reg.n_x}")
    if kind is OperatorKind.LASCOUX_ATOM:
        return apply_op(OperatorKind.LASCOUX, i, f) - f
    if kind is OperatorKind.PARTIAL:
        g = f
    elif kind is OperatorKind.KDD:
        g = (reg.one() + reg.beta() * reg.x(i + 1)) * f
    elif kind is OperatorKind.DEMAZURE:
        g = reg.x(i) * f
    elif kind is OperatorKind.LASCOUX:
        return apply_op(OperatorKind.DEMAZURE, i, (reg.one() + reg.beta() * reg.x(i + 1)) * f)
    else:
        raise ValueError(kind)
    return exact_divide(g - swap_x(g, i), reg.x(i) - reg.x(i + 1))


def apply_word(kind: OperatorKind, word, f: Poly) -> Poly:
    """D_{i1} ... D_{ik} f for word = (i1, ..., ik): rightmost acts first."""
    out = f
    for i in reversed(list(word)):
        out = apply_op(kind, i, out)
    return out


def top_grothendieck(n: int, reg: VarRegistry | None = None) -> Poly:
    """The longest-element polynomial: product of x_i (+) y_j over i + j <= n."""
    if reg is None:
        reg = VarRegistry(n, n)
    total = reg.one()
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            total = total * beta_add(reg.x(i), reg.y(j))
    return total


def double_grothendieck(w: Permutation, reg: VarRegistry | None = None) -> Poly:
    """Defined by the K-theoretic recursion down from the longest element,
    taking the smallest ascent at each step (path independence is a test)."""
    n = w.size
    if reg is None:
        reg = VarRegistry(n, n)
    if reg.n_x < n or reg.n_y < n - 1:
        raise ValueError(f"registry too small for S_{n}")
    cache: dict[Permutation, Poly] = {}

    def build(u: Permutation) -> Poly:
        if u in cache:
            return cache[u]
        asc = u.ascents()
        if not asc:
            val = top_grothendieck(n, reg)
        else:
            i = asc[0]
            val = apply_op(OperatorKind.KDD, i, build(u.right_mult(i)))
        cache[u] = val
        return val

    return build(w)


def double_grothendieck_via_word(w: Permutation, word, reg: VarRegistry) -> Poly:
    """Apply the K-theoretic operators along an explicit reduced word of
    w^{-1} w0 to the top polynomial; used to test path independence."""
    return apply_word(OperatorKind.KDD, word, top_grothendieck(w.size, reg))


def apply_single_y_op(kind: str, i: int, f: Poly, y: Poly) -> Poly:
    """The Lascoux operators carried over to the x (+) y variables:

        (poly) f -> [ (x_i (+) y)(1 + b x_{i+1}) f
                      - (x_{i+1} (+) y)(1 + b x_i) s_i f ] / (x_i - x_{i+1})
        (atom) f -> poly(f) - f

    At y = 0 these are the plain LASCOUX / LASCOUX_ATOM operators; the extra
    y is exactly what the constant-column lattice models satisfy.
    """
    reg = f.reg
    one, b = reg.one(), reg.beta()
    num = (
        beta_add(reg.x(i), y) * (one + b * reg.x(i + 1)) * f
        - beta_add(reg.x(i + 1), y) * (one + b * reg.x(i)) * swap_x(f, i)
    )
    p = exact_divide(num, reg.x(i) - reg.x(i + 1))
    if kind == "poly":
        return p
    if kind == "atom":
        return p - f
    raise ValueError(f"kind must be 'poly' or 'atom', got {kind!r}")


def extended_lascoux(kind: str, shape, w: Permutation, n: int,
                     reg: VarRegistry | None = None) -> Poly:
    """Apply the single-y Lascoux ('poly') or Lascoux-atom ('atom') composite
    for w to prod_i (x_i (+) y)^{shape_i}, with y taken as y1."""
    shape = tuple(shape)
    if len(shape) > n:
        raise ValueError("shape longer than the variable count")
    if reg is None:
        reg = VarRegistry(n, 1)
    y = reg.y(1)
    base = reg.one()
    for i, part in enumerate(shape, 1):
        base = base * beta_add(reg.x(i), y) ** part
    if kind not in ("poly", "atom"):
        raise ValueError(f"kind must be 'poly' or 'atom', got {kind!r}")
    out = base
    for i in reversed(reduced_word(w)):
        out = apply_single_y_op(kind, i, out, y)
    return out


def schubert_specialize(f: Poly) -> Poly:
    """Set b = 0 (the Schubert limit)."""
    return substitute(f, {"b": f.reg.zero()})
