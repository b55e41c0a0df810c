"""Generator-matrix linear codes over GF(q) and their Galois duality.

The Galois inner product with parameter k pairs x with the p^k-th
power of y coordinatewise; k = 0 is Euclidean and k = e/2 (e even) is
Hermitian.  Duals, the nonsingular-Gram LCD test, the standard-form
extension constructions, and two exact minimum-distance engines
(message enumeration and support search) live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from galcd import linalg
from galcd.fields import Element, Field, sqrt_minus_one

DEFAULT_MESSAGE_BUDGET = 10**8
DEFAULT_SUPPORT_BUDGET = 10**7

_NP_TABLE_LIMIT = 2200
_CHUNK = 1 << 16


class BudgetExceeded(RuntimeError):
    """An enumeration was refused because it exceeds its configured budget."""


class LinearCode:
    """A linear code given by a full-rank generator matrix.

    Rows may be Elements or plain integers below p (read through the
    prime subfield).  A dimension-0 code is allowed as the degenerate
    dual of the full space; pass rows=() with an explicit length.
    """

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows, n: int | None = None, *, check: bool = True):
        packed = []
        for row in rows:
            prow = []
            for x in row:
                if isinstance(x, Element):
                    if x.field != field:
                        raise ValueError("matrix entry from a different field")
                    prow.append(x.code)
                else:
                    if not 0 <= int(x) < field.p:
                        raise ValueError(
                            f"integer entry {x} out of range [0, {field.p}); pass an Element"
                        )
                    prow.append(int(x))
            packed.append(tuple(prow))
        self.field = field
        self.rows = tuple(packed)
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged generator matrix")
            self.n = widths.pop()
            if n is not None and n != self.n:
                raise ValueError("explicit length disagrees with row width")
        else:
            if n is None:
                raise ValueError("length n is required for a dimension-0 code")
            self.n = n
        if self.n < 1:
            raise ValueError("code length must be positive")
        if check and self.rows:
            if linalg.rank(field, [list(r) for r in self.rows]) != len(self.rows):
                raise ValueError("generator rows are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def codes_matrix(self) -> linalg.Matrix:
        return [list(r) for r in self.rows]

    def generator(self) -> list[list[Element]]:
        return linalg.to_elements(self.field, self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (self.field, self.n, self.rows) == (other.field, other.n, other.rows)

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.rows))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.dim}] over {self.field!r})"

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "n": self.n,
            "generator": [[list(Element(self.field, c).coeffs) for c in row] for row in self.rows],
        }

    @staticmethod
    def from_json(obj: dict) -> "LinearCode":
        field = Field.from_json(obj["field"])
        rows = [[field.from_coeffs(c) for c in row] for row in obj["generator"]]
        return LinearCode(field, rows, n=obj["n"])


@dataclass(frozen=True, slots=True)
class CodeParams:
    """Length, dimension and minimum distance, exact or as an interval."""

    n: int
    dim: int
    d: int | tuple[int, int]
    exact: bool

    def __post_init__(self):
        if self.exact:
            if not isinstance(self.d, int):
                raise ValueError("exact parameters need an integer distance")
            if not 1 <= self.d <= self.n - self.dim + 1:
                raise ValueError(f"distance {self.d} violates the Singleton bound")

    @property
    def mds(self) -> bool:
        return self.exact and self.d == self.n - self.dim + 1

    def to_json(self) -> dict:
        d = self.d if isinstance(self.d, int) else list(self.d)
        return {"n": self.n, "dim": self.dim, "d": d, "exact": self.exact, "mds": self.mds}

    def __str__(self) -> str:
        d = self.d if isinstance(self.d, int) else f"{self.d[0]}..{self.d[1]}"
        return f"[{self.n},{self.dim},{d}]"


def galois_inner_product(x: Sequence[Element], y: Sequence[Element], k: int) -> Element:
    """sum_i x_i * y_i^(p^k)."""
    if len(x) != len(y):
        raise ValueError("vectors of different lengths")
    if not x:
        raise ValueError("empty vectors")
    field = x[0].field
    add, mul, frob = field.add_codes, field.mul_codes, field.frob_code
    acc = 0
    for xi, yi in zip(x, y):
        if xi.field != field or yi.field != field:
            raise ValueError("mixed fields in inner product")
        acc = add(acc, mul(xi.code, frob(yi.code, k)))
    return Element(field, acc)


def p_power_code(C: LinearCode, j: int) -> LinearCode:
    """The code generated by the entrywise p^j-th power of the generator."""
    rows = linalg.frobenius_matrix(C.field, C.codes_matrix(), j)
    out = LinearCode.__new__(LinearCode)
    out.field = C.field
    out.n = C.n
    out.rows = tuple(tuple(r) for r in rows)
    return out


def galois_dual(C: LinearCode, k: int) -> LinearCode:
    """C^perp_k, the Euclidean dual of the p^(e-k)-powered code."""
    field = C.field
    powered = linalg.frobenius_matrix(field, C.codes_matrix(), (field.e - k) % field.e)
    basis = linalg.nullspace(field, powered, width=C.n)
    out = LinearCode.__new__(LinearCode)
    out.field = field
    out.n = C.n
    out.rows = tuple(tuple(r) for r in basis)
    return out


def euclidean_parity_check(C: LinearCode) -> linalg.Matrix:
    return linalg.nullspace(C.field, C.codes_matrix(), width=C.n)


@dataclass(frozen=True, slots=True)
class LcdCheck:
    """Verdict of the nonsingular-Gram LCD test with its witness determinant."""

    lcd: bool
    det: Element


def galois_gram(C: LinearCode, k: int) -> linalg.Matrix:
    """G times the transpose of the entrywise p^(e-k) power of G."""
    field = C.field
    g = C.codes_matrix()
    powered = linalg.frobenius_matrix(field, g, (field.e - k) % field.e)
    return linalg.matmul(field, g, linalg.transpose(powered))


def is_galois_lcd(C: LinearCode, k: int) -> LcdCheck:
    det_code = linalg.det(C.field, galois_gram(C, k))
    return LcdCheck(lcd=det_code != 0, det=Element(C.field, det_code))


def extend_lcd(C: LinearCode, k: int, mode: str) -> LinearCode:
    """Extend a standard-form code [I_l | A] to a Galois LCD code.

    mode "char2" appends A again (characteristic 2); mode "pmod4"
    appends eta*A with eta^2 = -1 (requires p = 1 mod 4).  Either way
    the new Gram matrix collapses to the identity, the length becomes
    2n - l, and the minimum distance does not drop.
    """
    field = C.field
    l, n = C.dim, C.n
    if l == 0:
        raise ValueError("cannot extend a dimension-0 code")
    g = C.codes_matrix()
    for i in range(l):
        for j in range(l):
            if g[i][j] != (1 if i == j else 0):
                raise ValueError("generator is not in standard form [I | A]")
    a = [row[l:] for row in g]
    if mode == "char2":
        if field.p != 2:
            raise ValueError("char2 mode requires characteristic 2")
        extra = a
    elif mode == "pmod4":
        if field.p % 4 != 1:
            raise ValueError("pmod4 mode requires p = 1 mod 4")
        eta = sqrt_minus_one(field)
        mul = field.mul_codes
        extra = [[mul(eta.code, x) for x in row] for row in a]
    else:
        raise ValueError(f"unknown extension mode {mode!r}")
    rows = [tuple(g[i]) + tuple(extra[i]) for i in range(l)]
    out = LinearCode.__new__(LinearCode)
    out.field = field
    out.n = 2 * n - l
    out.rows = tuple(rows)
    return out


# ---------------------------------------------------------------------------
# Minimum distance
# ---------------------------------------------------------------------------

def _np_tables(field: Field) -> tuple[np.ndarray, np.ndarray]:
    """Flat q*q multiplication and addition tables as numpy arrays."""
    cached = field._cache.get("np_tables")
    if cached is not None:
        return cached
    q, p, e = field.q, field.p, field.e
    if q > _NP_TABLE_LIMIT or field._exp is None:
        raise BudgetExceeded(f"field GF({q}) too large for table-driven enumeration")
    exp = np.array(field._exp, dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    log[np.array(field._exp, dtype=np.int64)] = np.arange(q - 1, dtype=np.int64)
    idx = np.arange(q, dtype=np.int64)
    mul = exp[(log[:, None] + log[None, :]) % (q - 1)] if q > 2 else np.array([[0, 0], [0, 1]], dtype=np.int64)
    if q > 2:
        mul[0, :] = 0
        mul[:, 0] = 0
    add = np.zeros((q, q), dtype=np.int64)
    scale = 1
    rest = idx.copy()
    for _ in range(e):
        digit = rest % p
        add += ((digit[:, None] + digit[None, :]) % p) * scale
        rest //= p
        scale *= p
    tables = (mul.reshape(-1), add.reshape(-1))
    field._cache["np_tables"] = tables
    return tables


def _distance_messages(C: LinearCode, budget: int) -> int:
    field = C.field
    q, l, n = field.q, C.dim, C.n
    total = q**l
    if total > budget:
        raise BudgetExceeded(f"message enumeration needs {total} > budget {budget}")
    mul_flat, add_flat = _np_tables(field)
    g = np.array(C.codes_matrix(), dtype=np.int64)
    best = n + 1
    powers = [q**i for i in range(l)]
    for start in range(1, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        idx = np.arange(start, stop, dtype=np.int64)
        cw = np.zeros((stop - start, n), dtype=np.int64)
        for i in range(l):
            digit = (idx // powers[i]) % q
            term = mul_flat[digit[:, None] * q + g[i][None, :]]
            cw = add_flat[cw * q + term]
        w = int((cw != 0).sum(axis=1).min())
        if w < best:
            best = w
            if best == 1:
                break
    return best


def _distance_supports(C: LinearCode, budget: int) -> tuple[int | None, int]:
    """Least w with w dependent parity-check columns; returns (d, tests_run).

    d is None when the budget ran out; the caller then knows d >= the
    last fully scanned weight + 1.
    """
    field = C.field
    h = euclidean_parity_check(C)
    n, l = C.n, C.dim
    m = n - l
    if m == 0:
        return 1, 0
    cols = [tuple(row[j] for row in h) for j in range(n)]
    add, mul, neg, inv = field.add_codes, field.mul_codes, field.neg_code, field.inv_code
    tests = 0
    for w in range(1, m + 2):
        for support in combinations(range(n), w):
            tests += 1
            if tests > budget:
                return None, w - 1
            # incremental elimination; earlier passes rule out smaller supports
            basis: list[tuple[int, list[int]]] = []  # (leading index, reduced column)
            dependent = False
            for j in support:
                vec = list(cols[j])
                for lead, bvec in basis:
                    c = vec[lead]
                    if c:
                        f = neg(c)
                        vec = [add(x, mul(f, y)) if y else x for x, y in zip(vec, bvec)]
                lead = next((i for i, x in enumerate(vec) if x), None)
                if lead is None:
                    dependent = True
                    break
                scale = inv(vec[lead])
                if scale != 1:
                    vec = [mul(scale, x) for x in vec]
                basis.append((lead, vec))
            if dependent:
                return w, tests
    raise AssertionError("no dependent support up to the Singleton weight")  # unreachable


def _support_cost(n: int, dim: int) -> int:
    return sum(comb(n, w) for w in range(1, n - dim + 2))


def min_distance(
    C: LinearCode,
    strategy: str = "auto",
    *,
    budget_messages: int = DEFAULT_MESSAGE_BUDGET,
    budget_supports: int = DEFAULT_SUPPORT_BUDGET,
) -> CodeParams:
    """Exact minimum distance by message enumeration or support search.

    "messages" walks all q^dim codewords; "supports" finds the least w
    such that w columns of a parity-check matrix are dependent.  "auto"
    picks the cheaper feasible one.  If no strategy fits its budget the
    result is the interval [1, n - dim + 1] flagged inexact.
    """
    if C.dim == 0:
        raise ValueError("the zero code has no minimum distance")
    q = C.field.q
    msg_cost = q**C.dim
    sup_cost = _support_cost(C.n, C.dim)
    msg_ok = msg_cost <= budget_messages and q <= _NP_TABLE_LIMIT
    sup_ok = sup_cost <= budget_supports

    if strategy == "messages":
        if msg_cost > budget_messages:
            raise BudgetExceeded(f"message enumeration needs {msg_cost} > budget {budget_messages}")
        return CodeParams(C.n, C.dim, _distance_messages(C, budget_messages), True)
    if strategy == "supports":
        d, scanned = _distance_supports(C, budget_supports)
        if d is None:
            return CodeParams(C.n, C.dim, (scanned + 1, C.n - C.dim + 1), False)
        return CodeParams(C.n, C.dim, d, True)
    if strategy != "auto":
        raise ValueError(f"unknown strategy {strategy!r}")

    lo = 1
    if sup_ok and (not msg_ok or sup_cost <= msg_cost):
        d, scanned = _distance_supports(C, budget_supports)
        if d is not None:
            return CodeParams(C.n, C.dim, d, True)
        lo = scanned + 1
    if msg_ok:
        return CodeParams(C.n, C.dim, _distance_messages(C, budget_messages), True)
    return CodeParams(C.n, C.dim, (lo, C.n - C.dim + 1), False)
