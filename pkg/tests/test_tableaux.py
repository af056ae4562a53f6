import pytest

from grothlat.polyring import VarRegistry, beta_add, render, substitute
from grothlat.tableaux import (
    SetValuedTableau,
    enumerate_flagged_svt,
    enumerate_svt,
    factorial_grothendieck,
    flagged_factorial_grothendieck,
    normalize_shape,
    registry_for,
    tableau_weight,
    zero_one_sequence,
)


def test_zero_one_sequence():
    assert zero_one_sequence((5, 2, 2, 1, 0, 0), 6) == "11010110001"
    assert zero_one_sequence((), 2) == "11"
    assert zero_one_sequence((1,), 1) == "01"
    with pytest.raises(ValueError):
        zero_one_sequence((1, 1), 1)


def test_normalize_shape():
    assert normalize_shape((3, 1, 0, 0)) == (3, 1)
    with pytest.raises(ValueError):
        normalize_shape((1, 2))


def test_enumerate_counts():
    assert len(enumerate_svt((1,), 1)) == 1
    assert len(enumerate_svt((1,), 2)) == 3  # {1}, {2}, {1,2}
    assert len(enumerate_svt((), 2)) == 1


def test_flagged_is_filtered_unflagged():
    for shape in [(1,), (2,), (2, 1)]:
        for flags in [(1, 2), (2, 3), (2, 2)]:
            if len(flags) < len(shape):
                continue
            flagged = set(enumerate_flagged_svt(shape, flags))
            manual = {
                t
                for t in enumerate_svt(shape, max(flags))
                if all(
                    max(cell) <= flags[r]
                    for r, row in enumerate(t.rows)
                    for cell in row
                )
            }
            assert flagged == manual


def test_large_flags_equal_unflagged():
    shape, n = (2, 1), 3
    assert set(enumerate_flagged_svt(shape, (n, n))) == set(enumerate_svt(shape, n))


def test_tableau_weight_examples():
    reg = registry_for((1,), 2)
    t = SetValuedTableau((1,), [({1},)])
    assert tableau_weight(t, reg) == beta_add(reg.x(1), reg.y(1))
    t2 = SetValuedTableau((1,), [({1, 2},)])
    expected = reg.beta() * beta_add(reg.x(1), reg.y(1)) * beta_add(reg.x(2), reg.y(2))
    assert tableau_weight(t2, reg) == expected


def test_tableau_weight_range_check():
    reg = VarRegistry(2, 1)
    t = SetValuedTableau((1,), [({2},)])
    with pytest.raises(IndexError):
        tableau_weight(t, reg)


def test_invalid_tableaux_rejected():
    with pytest.raises(ValueError):
        SetValuedTableau((2,), [({2}, {1})])  # row decreases
    with pytest.raises(ValueError):
        SetValuedTableau((1, 1), [({1},), ({1},)])  # column not strict


def test_factorial_grothendieck_small():
    reg = registry_for((1,), 1)
    assert factorial_grothendieck((1,), 1, reg) == beta_add(reg.x(1), reg.y(1))
    reg2 = registry_for((1,), 2)
    a = beta_add(reg2.x(1), reg2.y(1))
    b = beta_add(reg2.x(2), reg2.y(2))
    assert factorial_grothendieck((1,), 2, reg2) == a + b + reg2.beta() * a * b


def test_paper_flagged_example_beta_zero():
    """The five singleton tableaux with flags (2, 3) and their product sum."""
    shape, flags = (2, 1), (2, 3)
    singles = [
        t for t in enumerate_flagged_svt(shape, flags) if t.excess() == 0
    ]
    fills = {tuple(sorted(max(c) for row in t.rows for c in row)) for t in singles}
    assert len(singles) == 5
    assert fills == {(1, 1, 2), (1, 2, 2), (1, 1, 3), (1, 2, 3), (2, 2, 3)}

    reg = registry_for(shape, 3)
    zero_b = {"b": reg.zero()}
    total = reg.zero()
    for t in singles:
        total = total + substitute(tableau_weight(t, reg), zero_b)
    x1, x2, x3 = reg.x(1), reg.x(2), reg.x(3)
    y1, y2, y3 = reg.y(1), reg.y(2), reg.y(3)
    expected = (
        (x1 + y1) * (x1 + y2) * (x2 + y1)
        + (x1 + y1) * (x2 + y3) * (x2 + y1)
        + (x1 + y1) * (x1 + y2) * (x3 + y2)
        + (x1 + y1) * (x2 + y3) * (x3 + y2)
        + (x2 + y2) * (x2 + y3) * (x3 + y2)
    )
    assert total == expected
    flagged = flagged_factorial_grothendieck(shape, flags, reg)
    assert substitute(flagged, zero_b) == expected


def test_beta_zero_counts_semistandard():
    shape, n = (2, 1), 3
    reg = registry_for(shape, n)
    at_zero = substitute(
        factorial_grothendieck(shape, n, reg), {"b": reg.zero()}
    )
    singles = [t for t in enumerate_svt(shape, n) if t.excess() == 0]
    assert len(at_zero.terms) > 0
    total = reg.zero()
    for t in singles:
        total = total + substitute(tableau_weight(t, reg), {"b": reg.zero()})
    assert at_zero == total


def test_svt_render():
    t = SetValuedTableau((2, 1), [({1}, {1, 2}), ({2},)])
    assert str(t) == "[{1},{1,2}] / [{2}]"
