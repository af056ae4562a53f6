from itertools import product

import pytest

from grothlat.diffops import double_grothendieck, top_grothendieck
from grothlat.lattice import (
    EMPTY,
    MarkedState,
    State,
    atom_functional_equation_check,
    atom_table,
    build_atom_model,
    build_bumpless,
    build_five_vertex,
    build_semidual,
    build_uncolored_bumpless,
    bumpless_table,
    enumerate_marked_states,
    enumerate_states,
    functional_equation_check,
    iter_states,
    partition_function,
    render_ascii,
    semidual_partition_function,
    stable_limit_partition_function,
    state_to_json,
)
from grothlat.permutations import (
    Permutation,
    all_permutations,
    diagram_shape,
    flagging,
    is_vexillary,
    shift,
)
from grothlat.polyring import VarRegistry
from grothlat.tableaux import factorial_grothendieck


def test_ground_state_unique_and_weighted():
    for n in (2, 3, 4):
        w0 = Permutation.longest(n)
        inst = build_bumpless(w0)
        states = enumerate_states(inst)
        assert len(states) == 1
        reg = inst.reg
        expected = reg.beta() ** (n * (n - 1) // 2) * top_grothendieck(n, reg)
        assert states[0].weight() == expected


def test_small_state_counts():
    assert len(enumerate_states(build_bumpless(Permutation([1, 2])))) == 1
    assert len(enumerate_states(build_bumpless(Permutation([1, 3, 2])))) == 2
    assert len(enumerate_states(build_bumpless(Permutation([2, 1])))) == 1


def test_main_theorem_s3():
    for w in all_permutations(3):
        inst = build_bumpless(w)
        reg = inst.reg
        z = partition_function(inst)
        assert z == reg.beta() ** w.length * double_grothendieck(w, reg)


def test_total_states_are_alternating_sign_matrices():
    # color-free states count ASMs: 1, 2, 7, 42
    for n, count in [(1, 1), (2, 2), (3, 7), (4, 42)]:
        assert len(enumerate_states(build_uncolored_bumpless(n))) == count
        total = sum(
            len(enumerate_states(build_bumpless(w))) for w in all_permutations(n)
        )
        assert total == count


def test_admissibility_is_nonzero_weight_2x2():
    """Brute force every interior labeling of the 2x2 colored grid."""
    w = Permutation([2, 1])
    inst = build_bumpless(w)
    table = inst.table
    found = set()
    for h1, h2, v1, v2 in product(range(3), repeat=4):
        H = [[inst.left[0], h1, inst.right[0]], [inst.left[1], h2, inst.right[1]]]
        V = [list(inst.top), [v1, v2], list(inst.bottom)]
        ok = all(
            table.rule((H[i][j], V[i][j], H[i][j + 1], V[i + 1][j])) is not None
            for i in range(2)
            for j in range(2)
        )
        if ok:
            found.add((h1, h2, v1, v2))
    enumerated = {
        (s.H[0][1], s.H[1][1], s.V[1][0], s.V[1][1]) for s in iter_states(inst)
    }
    assert found == enumerated


def test_color_conservation_paths():
    """Each color's edges form one path from its bottom entry to its exit."""
    for w in all_permutations(3):
        n = w.size
        for s in iter_states(build_bumpless(w)):
            for color in range(1, n + 1):
                h_edges = {(i, j) for i in range(n) for j in range(n + 1) if s.H[i][j] == color}
                v_edges = {(i, j) for i in range(n + 1) for j in range(n) if s.V[i][j] == color}
                # walk from the bottom boundary edge
                i, j, side = n - 1, color - 1, "S"
                v_seen, h_seen = {(n, color - 1)}, set()
                while True:
                    name = s.rule(i, j).name
                    routes = {
                        "vertical": {"S": "N"}, "horizontal": {"W": "E"},
                        "turn_nw": {"W": "N"}, "turn_se": {"S": "E"},
                        "cross": {"S": "N", "W": "E"}, "bump": {"S": "E", "W": "N"},
                    }[name]
                    out = routes[side]
                    if out == "N":
                        v_seen.add((i, j))
                        i, side = i - 1, "S"
                    else:
                        h_seen.add((i, j + 1))
                        j, side = j + 1, "W"
                    if j >= n or i < 0:
                        break
                assert h_seen == h_edges
                assert v_seen == v_edges


def test_marked_expansion_sums_to_partition_function():
    for w in [Permutation([1, 3, 2]), Permutation([2, 1, 3])]:
        inst = build_bumpless(w)
        total = inst.reg.zero()
        for ms in enumerate_marked_states(inst):
            total = total + ms.weight()
        assert total == partition_function(inst)


def test_identity_has_no_markable_cells():
    inst = build_bumpless(Permutation([1, 2]))
    (state,) = enumerate_states(inst)
    assert state.markable_cells() == []


def test_marks_must_be_markable():
    inst = build_bumpless(Permutation([2, 1]))
    (state,) = enumerate_states(inst)
    with pytest.raises(ValueError):
        MarkedState(state, {(0, 0)})


def test_five_vertex_equals_factorial():
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        for n in (2, 3):
            inst = build_five_vertex(lam, n)
            assert partition_function(inst) == factorial_grothendieck(lam, n, inst.reg)


def test_five_vertex_trivial_shapes():
    inst = build_five_vertex((), 2)
    states = enumerate_states(inst)
    assert len(states) == 1 and states[0].weight() == inst.reg.one()
    inst = build_five_vertex((1,), 1)
    states = enumerate_states(inst)
    assert len(states) == 1
    reg = inst.reg
    assert partition_function(inst) == factorial_grothendieck((1,), 1, reg)


def test_semidual_counts_match_bumpless():
    for n in (2, 3):
        semidual = len(enumerate_states(build_semidual(n)))
        bumpless = len(enumerate_states(build_uncolored_bumpless(n)))
        assert semidual == bumpless


def test_atom_model_no_same_color_double_turn():
    for n in (2, 3):
        for lam in [(1,), (2, 1)]:
            if len(lam) > n:
                continue
            for u in all_permutations(n):
                for variant in ("atom", "poly"):
                    inst = build_atom_model(lam, u, variant=variant)
                    for s in iter_states(inst):
                        for i, j in s.cells():
                            assert s.rule(i, j).name != "bounce"


def test_functional_equation():
    for w in all_permutations(3):
        for i in w.ascents():
            assert functional_equation_check(w, i)
    with pytest.raises(ValueError):
        functional_equation_check(Permutation([2, 1]), 1)  # 21 * s1 < 21


def test_atom_functional_equation():
    for u in all_permutations(3):
        for i in u.descents():
            assert atom_functional_equation_check((1,), u, i)


def test_semidual_partition_function_is_grothendieck():
    for w in all_permutations(3):
        if not is_vexillary(w):
            continue
        reg = VarRegistry(3, 5)
        assert semidual_partition_function(w, reg) == double_grothendieck(w, reg)


def test_stable_limit_smallest():
    base = Permutation([2, 1])
    wp = shift(base, 2)  # 1^2 x s1 in S4
    reg = VarRegistry(4, 4)
    z = stable_limit_partition_function(wp, 2, reg)
    assert z == factorial_grothendieck((1,), 2, reg)


def test_ascii_and_json_export():
    inst = build_bumpless(Permutation([2, 1]))
    (state,) = enumerate_states(inst)
    art = render_ascii(state)
    assert "╭" in art and "┼" in art
    data = state_to_json(state)
    assert data["rows"] == data["cols"] == 2
    assert data["tiles"][0][0] == "blank"
    assert data["tiles"][1][1] == "cross"
    assert data["v_edges"][2] == [1, 2]
    marked = state_to_json(state, marks=[(0, 0)])
    assert marked["marks"] == [[0, 0]]


def test_state_equality_and_hash():
    inst = build_bumpless(Permutation([1, 3, 2]))
    states = enumerate_states(inst)
    assert len(set(states)) == len(states)
    again = enumerate_states(inst)
    assert states == again  # deterministic order


def test_weight_table_rejects_overlap():
    table = bumpless_table(2)
    assert table.rule((0, 0, 0, 0)).name == "blank"
    assert table.rule((1, 2, 1, 2)) is not None  # cross, horizontal stronger
    assert table.rule((2, 1, 2, 1)) is None
    assert atom_table(2).rule((1, 2, 2, 1)) is not None  # double turn, W stronger
    assert atom_table(2).rule((2, 1, 1, 2)) is None
    assert atom_table(2, swapped=True).rule((2, 1, 1, 2)) is not None
