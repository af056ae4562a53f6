"""Named verification suites: every theorem-level identity in the package,
runnable from the command line and reused by the acceptance tests.

Each check returns (name, ok, detail); a suite is a list of checks.  All
comparisons are exact polynomial identities; nothing is numerical.
"""

from __future__ import annotations

import random
from collections import Counter

from . import bijections, diffops, lattice, lgv, tableaux, ybe
from .diffops import OperatorKind, apply_op, apply_word, double_grothendieck
from .lattice import (
    MarkedState,
    build_atom_model,
    build_bumpless,
    build_five_vertex,
    build_semidual,
    enumerate_marked_states,
    enumerate_states,
    iter_states,
    partition_function,
    semidual_partition_function,
    stable_limit_partition_function,
)
from .permutations import (
    Permutation,
    all_permutations,
    bounding_shape,
    diagram_shape,
    flagging,
    is_vexillary,
    shift,
)
from .polyring import Poly, VarRegistry, swap_xy
from .tableaux import factorial_grothendieck, flagged_factorial_grothendieck

Check = tuple[str, bool, str]


def random_poly(reg: VarRegistry, rng: random.Random,
                max_terms: int = 5, max_deg: int = 4, max_coeff: int = 9) -> Poly:
    """Random sparse polynomial with small coefficients and degree."""
    total = reg.zero()
    for _ in range(rng.randint(1, max_terms)):
        exp = [0] * reg.nvars
        for _ in range(rng.randint(0, max_deg)):
            exp[rng.randrange(reg.nvars)] += 1
        c = rng.randint(-max_coeff, max_coeff)
        total = total + Poly(reg, {tuple(exp): c} if c else {})
    return total


def _done(name: str, failures: list) -> Check:
    if failures:
        return (name, False, f"first counterexample: {failures[0]}")
    return (name, True, "")


# -- Yang-Baxter ---------------------------------------------------------------


def suite_ybe(max_n: int = 4) -> list[Check]:
    reg = VarRegistry(2, 1)
    out = []
    pairs = [
        ("rll_colored_paths", lattice.atom_table(3), ybe.atom_r_matrix(reg, reg.y(1)), 3, False),
        ("rll_double_grothendieck", lattice.bumpless_table(3), ybe.bumpless_r_matrix(reg), 3, False),
        ("rll_semidual", lattice.semidual_table(), ybe.semidual_r_matrix(reg), 1, True),
    ]
    for name, table, rmat, nc, rot in pairs:
        ok, bad = ybe.verify_rll(table, rmat, reg, n_colors=nc, rotate=rot)
        out.append((name, ok, "" if ok else f"fails at boundary {bad}"))
    perturbed = ybe.bumpless_r_matrix(reg)
    perturbed[(0, 1, 1, 0)] = perturbed[(0, 1, 1, 0)] + reg.one()
    ok, bad = ybe.verify_rll(lattice.bumpless_table(3), perturbed, reg)
    out.append(("rll_detects_perturbation", not ok,
                "" if not ok else "perturbed R-matrix went unnoticed"))
    return out


# -- operator identities ---------------------------------------------------------


def suite_operators(max_n: int = 4, samples: int = 20, seed: int = 20260809) -> list[Check]:
    rng = random.Random(seed)
    reg = VarRegistry(4, 2)
    b = reg.beta()
    out = []

    squares = {
        OperatorKind.PARTIAL: lambda f, df: df.is_zero(),
        OperatorKind.DEMAZURE: lambda f, df: df == f,
        OperatorKind.KDD: lambda f, df: df == -(b * f),
        OperatorKind.LASCOUX: lambda f, df: df == f,
        OperatorKind.LASCOUX_ATOM: lambda f, df: df == -f,
    }
    for kind, relation in squares.items():
        failures = []
        for _ in range(samples):
            f = random_poly(reg, rng)
            g = apply_op(kind, 1, f)
            if not relation(g, apply_op(kind, 1, g)):
                failures.append(f)
        out.append(_done(f"square_{kind.value}", failures))

    for kind in OperatorKind:
        failures = []
        for _ in range(samples):
            f = random_poly(reg, rng)
            lhs = apply_word(kind, [1, 2, 1], f)
            rhs = apply_word(kind, [2, 1, 2], f)
            if lhs != rhs:
                failures.append(f)
            if apply_word(kind, [1, 3], f) != apply_word(kind, [3, 1], f):
                failures.append(f)
        out.append(_done(f"braid_{kind.value}", failures))
    return out


# -- headline theorems -----------------------------------------------------------


def suite_theorems(max_n: int = 4) -> list[Check]:
    out = []

    failures = []
    for n in range(2, max_n + 1):
        for w in all_permutations(n):
            inst = build_bumpless(w)
            reg = inst.reg
            z = partition_function(inst)
            if z != reg.beta() ** w.length * double_grothendieck(w, reg):
                failures.append(w)
    out.append(_done(f"main_theorem_S2..S{max_n}", failures))

    failures = []
    for n in range(2, min(max_n, 4) + 1):
        w0 = Permutation.longest(n)
        inst = build_bumpless(w0)
        states = enumerate_states(inst)
        reg = inst.reg
        expected = reg.beta() ** (n * (n - 1) // 2) * diffops.top_grothendieck(n, reg)
        if len(states) != 1 or states[0].weight() != expected:
            failures.append(w0)
    if len(enumerate_states(build_bumpless(Permutation([1, 3, 2])))) != 2:
        failures.append("s2 in S3 state count")
    out.append(_done("ground_states", failures))

    failures = []
    sample = all_permutations(3)
    if max_n >= 4:
        rng = random.Random(4)
        sample = sample + rng.sample(all_permutations(4), 10)
    for w in sample:
        n = w.size
        reg = VarRegistry(n, n)
        if swap_xy(double_grothendieck(w, reg)) != double_grothendieck(w.inverse(), reg):
            failures.append(w)
    out.append(_done("symmetry_x_y_exchange", failures))

    failures = []
    for n in range(2, max_n + 1):
        for w in all_permutations(n):
            if not is_vexillary(w):
                continue
            lam = diagram_shape(w)
            lam1 = lam[0] if lam else 0
            reg = VarRegistry(n, n + lam1)
            g = double_grothendieck(w, reg)
            flagged = (
                flagged_factorial_grothendieck(lam, flagging(w), reg)
                if lam
                else reg.one()
            )
            zd = semidual_partition_function(w, reg)
            zg = partition_function(build_bumpless(w, reg))
            if g != flagged or zd != g or zg != reg.beta() ** w.length * g:
                failures.append(w)
    out.append(_done("vexillary_flagged_theorem", failures))

    failures = []
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        for n in (2, 3):
            inst = build_five_vertex(lam, n)
            if partition_function(inst) != factorial_grothendieck(lam, n, inst.reg):
                failures.append((lam, n))
    out.append(_done("five_vertex_factorial", failures))

    failures = []
    shapes = [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]
    for lam in shapes:
        if len(lam) > 3:
            continue
        for w in all_permutations(3):
            for kind in ("atom", "poly"):
                reg = VarRegistry(3, 1)
                u = Permutation.longest(3) * w.inverse()
                cols = tuple(reg.y(1) for _ in range(3 + (lam[0] if lam else 0)))
                inst = build_atom_model(lam, u, variant=kind, reg=reg, col_values=cols)
                if partition_function(inst) != diffops.extended_lascoux(kind, lam, w, 3, reg):
                    failures.append((kind, lam, w))
    out.append(_done("extended_lascoux", failures))

    failures = []
    for w in all_permutations(3):
        for i in w.ascents():
            if not lattice.functional_equation_check(w, i):
                failures.append((w, i))
        for i in w.descents():
            if not lattice.atom_functional_equation_check((2, 1), w, i):
                failures.append(("atom", w, i))
    out.append(_done("functional_equations_S3", failures))

    failures = []
    bases = {(1,): Permutation([2, 1]), (2,): Permutation([3, 1, 2]),
             (1, 1): Permutation([2, 3, 1]), (2, 1): Permutation([1, 4, 3, 2])}
    ns = (2, 3) if max_n >= 4 else (2,)
    for lam, base in bases.items():
        for n in ns:
            k = max(n + lam[0] - base.size + 1, n - flagging(base)[0] + 1)
            wp = shift(base, k)
            reg = VarRegistry(wp.size, wp.size)
            z = stable_limit_partition_function(wp, n, reg)
            if z != factorial_grothendieck(lam, n, reg):
                failures.append((lam, n))
    out.append(_done("stable_limit", failures))
    return out


# -- bijections -------------------------------------------------------------------


def suite_bijections(max_n: int = 4) -> list[Check]:
    out = []

    failures = []
    for w in all_permutations(3):
        for s in iter_states(build_bumpless(w)):
            if bijections.key_of_state(bijections.BumplessPipeDream.from_state(s)) != w:
                failures.append(w)
    if max_n >= 4:
        for w in [Permutation([1, 4, 3, 2]), Permutation([2, 1, 4, 3]),
                  Permutation([3, 1, 4, 2])]:
            for s in iter_states(build_bumpless(w)):
                if bijections.key_of_state(bijections.BumplessPipeDream.from_state(s)) != w:
                    failures.append(w)
    out.append(_done("key_recovery", failures))

    failures = []
    for w in all_permutations(3):
        for s in iter_states(build_bumpless(w)):
            img = bijections.phi(s)
            back = bijections.phi_inverse(img)
            if bijections.BumplessPipeDream.from_state(s) != bijections.BumplessPipeDream(
                [[back.rule(i, j).name for j in range(3)] for i in range(3)]
            ):
                failures.append(w)
    out.append(_done("phi_bijection", failures))

    failures = []
    for w in all_permutations(min(max_n, 4)):
        big = bounding_shape(w)
        states = list(iter_states(build_bumpless(w)))
        if is_vexillary(w):
            for s in states:
                if bijections.colored_crossing_inside(s, big) is not None:
                    failures.append((w, "crossing inside"))
                if not bijections.semidual_supported_in(bijections.phi(s), big):
                    failures.append((w, "support"))
        else:
            if not any(bijections.colored_crossing_inside(s, big) for s in states):
                failures.append((w, "no inside crossing"))
    out.append(_done("bounding_shape_dichotomy", failures))

    failures = []
    for w in all_permutations(min(max_n, 4)):
        if not is_vexillary(w):
            continue
        inst = build_bumpless(w)
        marked = enumerate_marked_states(inst)
        eyds = [bijections.state_to_eyd(ms) for ms in marked]
        gen = bijections.generate_eyd(diagram_shape(w), bounding_shape(w))
        if len(set(eyds)) != len(marked) or set(eyds) != gen:
            failures.append(w)
            continue
        wts = Counter(tuple(sorted(ms.weight().terms.items())) for ms in marked)
        ewts = Counter(
            tuple(sorted(bijections.eyd_weight(e, inst.reg).terms.items())) for e in gen
        )
        if wts != ewts:
            failures.append(w)
    out.append(_done("excited_diagrams", failures))

    failures = []
    lam, n = (2, 1), 3
    inst = build_five_vertex(lam, n)
    marked = enumerate_marked_states(inst)
    seen = {}
    for ms in marked:
        t = bijections.theta(ms)
        if t in seen or tableaux.tableau_weight(t, inst.reg) != ms.weight():
            failures.append(t)
        seen[t] = ms
    if set(seen) != set(tableaux.enumerate_svt(lam, n)):
        failures.append("image mismatch")
    out.append(_done("tableau_bijection", failures))

    failures = []
    w = Permutation([1, 4, 3, 2])
    if bijections.read_flags(w) != (2, 3) or flagging(w) != (2, 3):
        failures.append(w)
    big = Permutation([8, 7, 1, 6, 2, 9, 5, 3, 4])
    if flagging(big) != (1, 2, 4, 6, 7):
        failures.append(big)
    first = []
    for s in iter_states(build_bumpless(big)):
        first.append(s)
        if len(first) >= 2:
            break
    if bijections.read_flags(big, states=first) != (1, 2, 4, 6, 7):
        failures.append(big)
    for w in all_permutations(min(max_n, 4)):
        if is_vexillary(w) and diagram_shape(w):
            if bijections.read_flags(w) != flagging(w):
                failures.append(w)
    out.append(_done("flag_reading", failures))

    failures = []
    w = Permutation([1, 4, 3, 2])
    lam_w, flags_w = diagram_shape(w), flagging(w)
    reg = VarRegistry(w.size, w.size + lam_w[0])
    imgs = []
    for s in iter_states(build_bumpless(w, reg)):
        sd = bijections.phi(s, vex=True)
        cells = sd.markable_cells()
        for bits in range(1 << len(cells)):
            marks = frozenset(c for k, c in enumerate(cells) if bits >> k & 1)
            ms = MarkedState(sd, marks)
            fv = bijections.semidual_to_five_vertex(ms, w)
            if fv.weight() != ms.weight():
                failures.append("rotation weight")
            imgs.append(bijections.theta(fv))
    if set(imgs) != set(tableaux.enumerate_flagged_svt(lam_w, flags_w)) or len(
        set(imgs)
    ) != len(imgs):
        failures.append("flagged image")
    out.append(_done("flagged_tableau_image", failures))
    return out


# -- LGV determinants -------------------------------------------------------------


def suite_lgv(max_n: int = 4) -> list[Check]:
    from .polyring import substitute

    out = []

    failures = []
    for n in range(2, min(max_n, 4) + 1):
        for w in all_permutations(n):
            if not is_vexillary(w):
                continue
            lam = diagram_shape(w)
            lam1 = lam[0] if lam else 0
            reg = VarRegistry(n, n + lam1)
            det = lgv.lgv_determinant(w, reg)
            if det != substitute(double_grothendieck(w, reg), {"b": reg.zero()}):
                failures.append(w)
    out.append(_done("lgv_schubert_determinant", failures))

    failures = []
    w = Permutation([1, 4, 3, 2])
    reg = VarRegistry(4, 6)
    det = lgv.lgv_determinant(w, reg)
    at_zero = substitute(det, {f"y{j}": reg.zero() for j in range(1, 7)})
    x1, x2, x3 = reg.x(1), reg.x(2), reg.x(3)
    expected = x1 * x1 * x2 + x1 * x2 * x2 + x1 * x1 * x3 + x1 * x2 * x3 + x2 * x2 * x3
    if at_zero != expected:
        failures.append("worked example")
    out.append(_done("lgv_worked_example", failures))

    failures = []
    ns = (2, 3) if max_n >= 3 else (2,)
    for n in ns:
        reg = VarRegistry(n, n)
        if lgv.lgv_determinant_full(n, reg) != partition_function(build_semidual(n, reg=reg)):
            failures.append(n)
    out.append(_done("lgv_ktheory_determinant", failures))

    failures = []
    g = lgv.build_graph(3, lgv.SCHUBERT)
    gk = lgv.build_graph(3, lgv.KTHEORY)
    if any(kind == lgv.KTHEORY for *_, kind in g.all_edges()):
        failures.append("K edges in the b=0 graph")
    for graph in (g, gk):
        for u, v, wt, kind in graph.all_edges():
            if wt != graph.reg.one() and not (u[0] == "c" and v[0] == "w"):
                failures.append("weight off the second half-step")
    for a in (1, 2):
        for b2 in (1, 2):
            if lgv.path_sum(gk, gk.start(a), gk.end(b2)) != lgv.brute_force_path_sum(
                gk, gk.start(a), gk.end(b2)
            ):
                failures.append((a, b2))
    out.append(_done("lgv_graph_structure", failures))
    return out


SUITES = {
    "ybe": suite_ybe,
    "operators": suite_operators,
    "theorems": suite_theorems,
    "bijections": suite_bijections,
    "lgv": suite_lgv,
}


def run_suites(names, max_n: int = 4) -> list[Check]:
    out = []
    for name in names:
        out.extend(SUITES[name](max_n=max_n))
    return out
