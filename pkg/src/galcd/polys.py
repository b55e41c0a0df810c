"""Dense univariate polynomials over a Field.

Coefficients are stored constant term first with no trailing zeros;
the zero polynomial is the empty tuple and has degree -1.  All
arithmetic is exact, so polynomial equality is coefficient equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from galcd.fields import Element, Field, embed, embedding, make_field, mult_order, multiplicative_order


@dataclass(frozen=True, slots=True)
class Poly:
    field: Field
    codes: tuple[int, ...]

    def __post_init__(self):
        if self.codes and self.codes[-1] == 0:
            raise ValueError("trailing zero coefficient; use Poly.make")

    @staticmethod
    def make(field: Field, codes: Iterable[int]) -> "Poly":
        cs = list(codes)
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(field, tuple(cs))

    @staticmethod
    def from_elements(field: Field, elems: Sequence[Element]) -> "Poly":
        for el in elems:
            if el.field != field:
                raise ValueError("coefficient from a different field")
        return Poly.make(field, [el.code for el in elems])

    @staticmethod
    def from_ints(field: Field, ints: Sequence[int]) -> "Poly":
        """Coefficients given as integers through the prime subfield."""
        return Poly.make(field, [c % field.p for c in ints])

    @property
    def degree(self) -> int:
        return len(self.codes) - 1

    @property
    def is_zero(self) -> bool:
        return not self.codes

    @property
    def is_monic(self) -> bool:
        return bool(self.codes) and self.codes[-1] == 1

    def coefficient(self, i: int) -> Element:
        return Element(self.field, self.codes[i] if 0 <= i < len(self.codes) else 0)

    @property
    def elements(self) -> tuple[Element, ...]:
        return tuple(Element(self.field, c) for c in self.codes)

    def __add__(self, other: "Poly") -> "Poly":
        f = self._samefield(other)
        a, b = self.codes, other.codes
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        add = f.add_codes
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly.make(f, out)

    def __neg__(self) -> "Poly":
        neg = self.field.neg_code
        return Poly(self.field, tuple(neg(c) for c in self.codes))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        f = self._samefield(other)
        a, b = self.codes, other.codes
        if not a or not b:
            return Poly(f, ())
        out = [0] * (len(a) + len(b) - 1)
        add, mul = f.add_codes, f.mul_codes
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly.make(f, out)

    def scale(self, c: Element) -> "Poly":
        if c.field != self.field:
            raise ValueError("scalar from a different field")
        mul = self.field.mul_codes
        return Poly.make(self.field, [mul(c.code, x) for x in self.codes])

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        f = self._samefield(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        add, mul, neg = f.add_codes, f.mul_codes, f.neg_code
        inv_lead = f.inv_code(other.codes[-1])
        r = list(self.codes)
        db = other.degree
        q = [0] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            lead = r[-1]
            if lead:
                coef = mul(lead, inv_lead)
                shift = len(r) - 1 - db
                q[shift] = coef
                ncoef = neg(coef)
                for i, bc in enumerate(other.codes):
                    if bc:
                        r[shift + i] = add(r[shift + i], mul(ncoef, bc))
            r.pop()
        return Poly.make(f, q), Poly.make(f, r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero

    def monic(self) -> "Poly":
        if self.is_zero or self.is_monic:
            return self
        inv = self.field.inv_code(self.codes[-1])
        mul = self.field.mul_codes
        return Poly(self.field, tuple(mul(inv, c) for c in self.codes))

    def __call__(self, x: Element) -> Element:
        if x.field != self.field:
            raise ValueError("evaluation point from a different field")
        add, mul = self.field.add_codes, self.field.mul_codes
        acc = 0
        for c in reversed(self.codes):
            acc = add(mul(acc, x.code), c)
        return Element(self.field, acc)

    def _samefield(self, other: "Poly") -> Field:
        if self.field != other.field:
            raise ValueError(f"mixed fields: {self.field} and {other.field}")
        return self.field

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficient(i)
            if not c:
                continue
            cs = str(c)
            if i == 0:
                terms.append(cs)
            else:
                xi = "x" if i == 1 else f"x^{i}"
                terms.append(xi if cs == "1" else f"{cs}*{xi}")
        return " + ".join(terms)

    def to_json(self) -> list[list[int]]:
        return [list(Element(self.field, c).coeffs) for c in self.codes]


def poly_from_json(field: Field, arr: Sequence[Sequence[int]]) -> Poly:
    return Poly.make(field, [field.from_coeffs(a).code for a in arr])


def x_poly(field: Field) -> Poly:
    return Poly(field, (0, 1))


def xn_minus_lambda(field: Field, n: int, lam: Element) -> Poly:
    if lam.field != field or not lam:
        raise ValueError("lambda must be a nonzero element of the field")
    codes = [0] * (n + 1)
    codes[0] = field.neg_code(lam.code)
    codes[n] = 1
    return Poly.make(field, codes)


def reciprocal(f: Poly) -> Poly:
    """Monic reciprocal a0^(-1) x^deg(f) f(1/x); roots become their inverses."""
    if f.is_zero:
        raise ValueError("zero polynomial has no reciprocal")
    if f.codes[0] == 0:
        raise ValueError("reciprocal requires a nonzero constant term")
    inv0 = f.field.inv_code(f.codes[0])
    mul = f.field.mul_codes
    return Poly(f.field, tuple(mul(inv0, c) for c in reversed(f.codes)))


def frobenius_poly(f: Poly, j: int) -> Poly:
    """Apply the j-th Frobenius power to every coefficient."""
    if j < 0:
        raise ValueError("Frobenius exponent must be >= 0")
    frob = f.field.frob_code
    return Poly(f.field, tuple(frob(c, j) for c in f.codes))


def minimal_poly(coset: Iterable[int], theta: Element, base: Field) -> Poly:
    """prod_{i in coset} (x - theta^i), descended to the base field.

    The coset must be closed under multiplication by |base|; otherwise
    the product has a coefficient outside the base field and a
    ValueError is raised.
    """
    ext = theta.field
    emb = embedding(base, ext)
    prod = Poly(ext, (1,))
    for i in sorted(set(coset)):
        root = theta**i
        prod = prod * Poly.make(ext, [ext.neg_code(root.code), 1])
    try:
        codes = [emb.inv[c] for c in prod.codes]
    except KeyError:
        raise ValueError(
            "coset is not closed under multiplication by the base field size"
        ) from None
    return Poly(base, tuple(codes))


def factor_xn_minus_lambda(n: int, lam: Element) -> list[tuple[tuple[int, ...], Poly]]:
    """Irreducible factors of x^n - lambda, one per q-cyclotomic coset.

    Returns (coset, factor) pairs sorted by the smallest coset member,
    where cosets live on the exponent set {1 + r t mod rn} of a fixed
    primitive rn-th root theta with theta^n = lambda.
    """
    base = lam.field
    if math.gcd(n, base.p) != 1:
        raise ValueError(f"length {n} must be coprime to the characteristic {base.p}")
    from galcd.cosets import CosetContext, cyclotomic_cosets

    r = mult_order(lam)
    ctx = CosetContext(p=base.p, e=base.e, k=0, n=n, r=r)
    theta = constacyclic_root(base, n, lam)
    cosets = cyclotomic_cosets(ctx)
    out = []
    for coset in cosets:
        out.append((coset, minimal_poly(coset, theta, base)))
    prod = Poly(base, (1,))
    for _, mq in out:
        prod = prod * mq
    if prod != xn_minus_lambda(base, n, lam):
        raise AssertionError("factor product does not reproduce x^n - lambda")
    return out


def splitting_field(base: Field, rn: int) -> Field:
    """GF(q^m) for the least m with rn | q^m - 1."""
    m = 1 if rn == 1 else multiplicative_order(base.q % rn, rn)
    if m == 1:
        return base
    return make_field(base.p, base.e * m)


def constacyclic_root(base: Field, n: int, lam: Element) -> Element:
    """The canonical primitive rn-th root theta with theta^n = lambda."""
    from galcd.fields import primitive_rn_root

    r = mult_order(lam)
    rn = r * n
    ext = splitting_field(base, rn)
    lam_ext = embed(base, ext, lam)
    return primitive_rn_root(ext, rn, n, lam_ext)
