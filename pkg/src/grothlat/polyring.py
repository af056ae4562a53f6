"""Exact sparse polynomial ring Z[x1..xn, y1..ym, b].

A polynomial is a dict mapping exponent tuples to nonzero int coefficients.
The exponent tuple has one entry per registered variable, ordered
x1..xn, y1..ym, b (the formal group parameter, printed as ``b``).
Zero coefficients are never stored, so two polynomials are equal iff their
term dicts are equal.  All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass


class NonzeroRemainderError(ArithmeticError):
    """Raised when an exact division leaves a remainder (upstream bug)."""


class RegistryMismatchError(ValueError):
    """Raised when operands come from different variable registries."""


@dataclass(frozen=True)
class VarRegistry:
    """Variable layout: x1..x{n_x}, y1..y{n_y}, and the parameter b."""

    n_x: int
    n_y: int

    def __post_init__(self):
        if self.n_x < 0 or self.n_y < 0:
            raise ValueError("variable counts must be nonnegative")

    @property
    def nvars(self) -> int:
        return self.n_x + self.n_y + 1

    def var_index(self, name: str) -> int:
        """Index of a variable token ('x3', 'y1', 'b') in exponent tuples."""
        if name == "b":
            return self.n_x + self.n_y
        kind, idx = name[0], int(name[1:])
        if kind == "x" and 1 <= idx <= self.n_x:
            return idx - 1
        if kind == "y" and 1 <= idx <= self.n_y:
            return self.n_x + idx - 1
        raise KeyError(f"unknown variable {name!r} in registry {self}")

    def var_names(self) -> list[str]:
        """All variable tokens in exponent-tuple order."""
        return (
            [f"x{i}" for i in range(1, self.n_x + 1)]
            + [f"y{j}" for j in range(1, self.n_y + 1)]
            + ["b"]
        )

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return self.const(1)

    def const(self, c: int) -> Poly:
        if c == 0:
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: int(c)})

    def var(self, name: str) -> Poly:
        exp = [0] * self.nvars
        exp[self.var_index(name)] = 1
        return Poly(self, {tuple(exp): 1})

    def x(self, i: int) -> Poly:
        return self.var(f"x{i}")

    def y(self, j: int) -> Poly:
        return self.var(f"y{j}")

    def beta(self) -> Poly:
        return self.var("b")


class Poly:
    """Immutable sparse polynomial over a fixed :class:`VarRegistry`."""

    __slots__ = ("reg", "terms")

    def __init__(self, reg: VarRegistry, terms: dict[tuple[int, ...], int]):
        self.reg = reg
        self.terms = terms

    # -- basic ring structure -------------------------------------------------

    def _check(self, other: Poly) -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.reg != self.reg:
            raise RegistryMismatchError(f"{self.reg} vs {other.reg}")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.reg, out)

    def __neg__(self) -> Poly:
        return Poly(self.reg, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        if not self.terms or not other.terms:
            return Poly(self.reg, {})
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly(self.reg, out)

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        out = self.reg.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: int) -> Poly:
        if c == 0:
            return self.reg.zero()
        return Poly(self.reg, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and self.reg == other.reg
            and self.terms == other.terms
        )

    __hash__ = None  # mutable dict inside; equality is structural

    def is_zero(self) -> bool:
        return not self.terms

    # -- term access ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in canonical order: total degree, then exponent vector
        (larger vectors first within a degree).  Deterministic."""
        return sorted(
            self.terms.items(),
            key=lambda t: (sum(t[0]), tuple(-e for e in t[0])),
        )

    def leading(self) -> tuple[tuple[int, ...], int]:
        """Graded-lex leading term (used by exact division)."""
        e = max(self.terms, key=lambda e: (sum(e), e))
        return e, self.terms[e]

    def coefficient(self, exp: tuple[int, ...]) -> int:
        return self.terms.get(exp, 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.reg.nvars, 0)

    def __repr__(self) -> str:
        return f"Poly({render(self)!r})"


def beta_add(p: Poly, q: Poly) -> Poly:
    """The formal group sum p + q + b*p*q."""
    p._check(q)
    return p + q + p.reg.beta() * p * q


def oplus_xy(reg: VarRegistry, i: int, j: int) -> Poly:
    """Shorthand for beta_add(x_i, y_j)."""
    return beta_add(reg.x(i), reg.y(j))


def swap_x(f: Poly, i: int) -> Poly:
    """Exchange the exponents of x_i and x_{i+1} in every term."""
    reg = f.reg
    if not 1 <= i < reg.n_x:
        raise IndexError(f"swap_x index {i} out of range for n_x={reg.n_x}")
    a, b = i - 1, i
    out: dict[tuple[int, ...], int] = {}
    for e, c in f.terms.items():
        if e[a] == e[b]:
            out[e] = out.get(e, 0) + c
        else:
            le = list(e)
            le[a], le[b] = le[b], le[a]
            key = tuple(le)
            out[key] = out.get(key, 0) + c
    return Poly(reg, {e: c for e, c in out.items() if c})


def swap_xy(f: Poly) -> Poly:
    """Exchange x_i with y_i for every i (requires n_x == n_y)."""
    reg = f.reg
    if reg.n_x != reg.n_y:
        raise RegistryMismatchError("swap_xy needs n_x == n_y")
    n = reg.n_x
    out = {}
    for e, c in f.terms.items():
        out[e[n : 2 * n] + e[:n] + e[2 * n :]] = c
    return Poly(reg, out)


def exact_divide(f: Poly, g: Poly) -> Poly:
    """Return q with f == q*g, dividing by graded-lex leading terms.

    Raises NonzeroRemainderError if g does not divide f exactly; such a
    failure always signals a bug upstream (the divided-difference numerators
    and RLL combinations in scope are exactly divisible).
    """
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("exact_divide by zero polynomial")
    reg = f.reg
    ge, gc = g.leading()
    quotient: dict[tuple[int, ...], int] = {}
    rem = f
    while not rem.is_zero():
        re, rc = rem.leading()
        qe = tuple(a - b for a, b in zip(re, ge))
        if any(v < 0 for v in qe) or rc % gc != 0:
            raise NonzeroRemainderError(
                f"leading term not divisible: {render(rem)} by {render(g)}"
            )
        qc = rc // gc
        quotient[qe] = qc
        rem = rem - Poly(reg, {qe: qc}) * g
    return Poly(reg, quotient)


def substitute(f: Poly, assignments: dict[str, Poly]) -> Poly:
    """Simultaneously substitute variables ('x1', 'y2', 'b') by polynomials.

    Unassigned variables are left alone.  Values must share f's registry.
    """
    reg = f.reg
    idx_map: dict[int, Poly] = {}
    for name, val in assignments.items():
        f._check(val)
        idx_map[reg.var_index(name)] = val
    if not idx_map:
        return f
    power_cache: dict[tuple[int, int], Poly] = {}

    def power(idx: int, k: int) -> Poly:
        key = (idx, k)
        if key not in power_cache:
            power_cache[key] = idx_map[idx] ** k
        return power_cache[key]

    total = reg.zero()
    for e, c in f.terms.items():
        kept = list(e)
        factor = None
        for idx in idx_map:
            k = e[idx]
            kept[idx] = 0
            if k:
                p = power(idx, k)
                factor = p if factor is None else factor * p
        term = Poly(reg, {tuple(kept): c})
        total = total + (term if factor is None else term * factor)
    return total


def determinant(mat: list[list[Poly]]) -> Poly:
    """Exact determinant by Laplace expansion along the first row."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        raise ValueError("determinant of empty matrix")
    reg = mat[0][0].reg
    for row in mat:
        for entry in row:
            mat[0][0]._check(entry)

    def expand(rows: tuple[int, ...], cols: tuple[int, ...]) -> Poly:
        if len(rows) == 1:
            return mat[rows[0]][cols[0]]
        r = rows[0]
        total = reg.zero()
        for pos, c in enumerate(cols):
            entry = mat[r][c]
            if entry.is_zero():
                continue
            sub = expand(rows[1:], cols[:pos] + cols[pos + 1 :])
            total = total + (entry * sub if pos % 2 == 0 else -(entry * sub))
        return total

    return expand(tuple(range(n)), tuple(range(n)))


class RatFunc:
    """Fraction of two polynomials, compared by cross-multiplication.

    No gcd normalization is performed; equality and arithmetic stay exact
    regardless of common factors.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = num.reg.one()
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        self.num = num
        self.den = den

    def __add__(self, other: RatFunc) -> RatFunc:
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RatFunc) -> RatFunc:
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: RatFunc) -> RatFunc:
        return RatFunc(self.num * other.num, self.den * other.den)

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __truediv__(self, other: RatFunc) -> RatFunc:
        return RatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def scale(self, p: Poly) -> RatFunc:
        return RatFunc(self.num * p, self.den)

    def __repr__(self) -> str:
        return f"RatFunc(({render(self.num)}) / ({render(self.den)}))"


# -- canonical text and JSON forms --------------------------------------------


def _monomial_str(reg: VarRegistry, exp: tuple[int, ...]) -> str:
    # variable print order is alphabetical: b, x1.., y1..
    parts = []
    bi = reg.var_index("b")
    if exp[bi]:
        parts.append("b" if exp[bi] == 1 else f"b^{exp[bi]}")
    for names, base in ((range(1, reg.n_x + 1), "x"), (range(1, reg.n_y + 1), "y")):
        for i in names:
            k = exp[reg.var_index(f"{base}{i}")]
            if k:
                parts.append(f"{base}{i}" if k == 1 else f"{base}{i}^{k}")
    return "*".join(parts)


def render(f: Poly) -> str:
    """Canonical text form, terms by rising degree (e.g. ``x1 + y1 + b*x1*y1``)."""
    if f.is_zero():
        return "0"
    pieces = []
    for e, c in f.sorted_terms():
        mono = _monomial_str(f.reg, e)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        pieces.append((c < 0, body))
    first_neg, first_body = pieces[0]
    out = ("-" if first_neg else "") + first_body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def parse(reg: VarRegistry, text: str) -> Poly:
    """Inverse of :func:`render` (accepts any +/- separated monomial list)."""
    text = text.strip()
    if text in ("0", ""):
        return reg.zero()
    total = reg.zero()
    i = 0
    sign = 1
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        i = 1
    while i <= len(text):
        j = i
        while j < len(text) and text[j] not in "+-":
            j += 1
        chunk = text[i:j].strip()
        if not chunk:
            raise ValueError(f"empty term in {text!r}")
        coeff = sign
        exp = [0] * reg.nvars
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"bad term {chunk!r}")
            if factor.lstrip("-").isdigit():
                coeff *= int(factor)
                continue
            if "^" in factor:
                var, _, p = factor.partition("^")
                exp[reg.var_index(var.strip())] += int(p)
            else:
                exp[reg.var_index(factor)] += 1
        total = total + Poly(reg, {tuple(exp): coeff})
        if j >= len(text):
            break
        sign = -1 if text[j] == "-" else 1
        i = j + 1
    return total


def to_json_dict(f: Poly) -> dict:
    """JSON form: exponents ordered x1..xn, y1..ym, b; coefficients as strings."""
    return {
        "nx": f.reg.n_x,
        "ny": f.reg.n_y,
        "terms": [
            {"e": list(e), "c": f"{c:+d}"} for e, c in f.sorted_terms()
        ],
    }


def from_json_dict(data: dict) -> Poly:
    reg = VarRegistry(data["nx"], data["ny"])
    terms = {}
    for t in data["terms"]:
        e = tuple(t["e"])
        if len(e) != reg.nvars:
            raise ValueError("exponent length does not match registry")
        c = int(t["c"])
        if c:
            terms[e] = terms.get(e, 0) + c
    return Poly(reg, {e: c for e, c in terms.items() if c})
