"""Independent brute-force oracles used by the test suite.

These deliberately avoid the production decision paths: irreducibility
is checked by literal trial division, intersections by rank counting
or literal codeword enumeration, and distances by walking the whole
codebook in pure Python.
"""

from __future__ import annotations

from itertools import product

from galcd import linalg
from galcd.fields import Field
from galcd.linear import LinearCode, galois_dual


def trial_division_irreducible(coeffs, p: int) -> bool:
    """Divide by every monic polynomial of degree 1..deg//2."""
    from galcd.fields import _pmod, _ptrim

    c = _ptrim([x % p for x in coeffs])
    e = len(c) - 1
    if e < 1:
        return False
    for d in range(1, e // 2 + 1):
        for tail in range(p**d):
            div = []
            t = tail
            for _ in range(d):
                div.append(t % p)
                t //= p
            div.append(1)
            if not _pmod(c, div, p):
                return False
    return True


def codewords(C: LinearCode):
    """All codewords as tuples of codes (pure Python, no numpy)."""
    field = C.field
    rows = C.codes_matrix()
    if not rows:
        yield (0,) * C.n
        return
    add, mul = field.add_codes, field.mul_codes
    for coeffs in product(range(field.q), repeat=len(rows)):
        word = [0] * C.n
        for c, row in zip(coeffs, rows):
            if c:
                for j, x in enumerate(row):
                    if x:
                        word[j] = add(word[j], mul(c, x))
        yield tuple(word)


def brute_min_distance(C: LinearCode) -> int:
    best = C.n + 1
    for word in codewords(C):
        w = sum(1 for x in word if x)
        if 0 < w < best:
            best = w
    return best


def intersection_dim(field: Field, A: LinearCode, B: LinearCode) -> int:
    """dim(A intersect B) = dim A + dim B - dim(A + B)."""
    stacked = A.codes_matrix() + B.codes_matrix()
    return A.dim + B.dim - linalg.rank(field, stacked)


def hull_dim(C: LinearCode, k: int) -> int:
    return intersection_dim(C.field, C, galois_dual(C, k))


def literal_intersection_dim(field: Field, A: LinearCode, B: LinearCode) -> int:
    """Exhaustive codeword-set intersection; only for tiny codes."""
    sa = set(codewords(A))
    sb = set(codewords(B))
    size = len(sa & sb)
    dim = 0
    while field.q**dim < size:
        dim += 1
    assert field.q**dim == size, "intersection is not a subspace?"
    return dim
