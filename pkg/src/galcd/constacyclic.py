"""Constacyclic codes as ideals of GF(q)[x]/(x^n - lambda).

A code is carried by its defining set P: the exponents i in the set
1 + r*Z_rn for which theta^i is a root of every codeword, where theta
is the canonical primitive rn-th root with theta^n = lambda chosen by
the deterministic rule in galcd.fields.  The generator polynomial is
always recomputed from P as the product of the coset minimal
polynomials; an explicit generator can be supplied only through
from_generator_polynomial, which validates it and recovers P by root
testing.

Defining-set labels are theta-relative.  Parameters and LCD verdicts
do not depend on the choice of theta, but the labels do, so catalogs
record theta next to every defining set.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable

from galcd.cosets import (
    CosetContext,
    DefiningSet,
    bch_lower_bound,
    dual_defining_set,
    enumerate_stable_sets,
    is_lcd_defining_set,
    tau_cycles,
    unique_order2_unit,
)
from galcd.fields import Element, Field, embed, embedding, make_field, mult_order, multiplicative_order
from galcd.linear import (
    DEFAULT_MESSAGE_BUDGET,
    DEFAULT_SUPPORT_BUDGET,
    BudgetExceeded,
    CodeParams,
    LinearCode,
    is_galois_lcd,
    min_distance,
)
from galcd.polys import Poly, minimal_poly, splitting_field, xn_minus_lambda
from galcd.fields import primitive_rn_root


@dataclass(eq=False)
class _Family:
    """Shared data for all constacyclic codes with one (field, n, lambda)."""

    field: Field
    n: int
    lam: Element
    r: int
    rn: int
    ext: Field
    theta: Element
    base_ctx: CosetContext           # k = 0; cosets do not depend on k
    cosets: tuple[tuple[int, ...], ...]
    minpolys: dict[int, Poly]        # smallest coset member -> M_Q
    theta_powers: dict[int, Element]


def build_family(field: Field, n: int, lam: Element, theta: Element | None = None) -> _Family:
    if lam.field != field or not lam:
        raise ValueError("lambda must be a nonzero element of the field")
    r = mult_order(lam)
    rn = r * n
    ctx = CosetContext(p=field.p, e=field.e, k=0, n=n, r=r)
    ext = splitting_field(field, rn)
    if theta is None:
        lam_ext = embed(field, ext, lam)
        theta = primitive_rn_root(ext, rn, n, lam_ext)
    else:
        if theta.field != ext:
            raise ValueError("theta must live in the splitting field")
        if mult_order(theta) != rn or theta**n != embed(field, ext, lam):
            raise ValueError("theta is not a primitive rn-th root with theta^n = lambda")
    from galcd.cosets import cyclotomic_cosets

    cosets = cyclotomic_cosets(ctx)
    minpolys = {c[0]: minimal_poly(c, theta, field) for c in cosets}
    powers = {i: theta**i for i in ctx.exponent_set()}
    prod = Poly(field, (1,))
    for mq in minpolys.values():
        prod = prod * mq
    if prod != xn_minus_lambda(field, n, lam):
        raise AssertionError("coset factorization does not multiply back to x^n - lambda")
    return _Family(field, n, lam, r, rn, ext, theta, ctx, cosets, minpolys, powers)


_FAMILY_CACHE: dict = {}


def _family(field: Field, n: int, lam: Element) -> _Family:
    key = (field, n, lam.code)
    fam = _FAMILY_CACHE.get(key)
    if fam is None:
        fam = build_family(field, n, lam)
        _FAMILY_CACHE[key] = fam
    return fam


@dataclass(frozen=True)
class ConstacyclicCode:
    """A lambda-constacyclic code of length n with Galois parameter k."""

    field: Field
    n: int
    lam: Element
    k: int
    P: DefiningSet
    g: Poly
    fam: _Family = dc_field(repr=False, compare=False)

    @property
    def r(self) -> int:
        return self.fam.r

    @property
    def rn(self) -> int:
        return self.fam.rn

    @property
    def theta(self) -> Element:
        return self.fam.theta

    @property
    def dim(self) -> int:
        return self.n - len(self.P)

    @property
    def check_poly(self) -> Poly:
        q, rem = divmod(xn_minus_lambda(self.field, self.n, self.lam), self.g)
        if not rem.is_zero:
            raise AssertionError("generator does not divide x^n - lambda")
        return q

    def __hash__(self):
        return hash((self.field, self.n, self.lam, self.k, self.P.residues))

    def __repr__(self) -> str:
        return (
            f"ConstacyclicCode(n={self.n}, dim={self.dim}, lam={self.lam!s}, "
            f"k={self.k}, P={list(self.P.residues)})"
        )


def _ctx_with_k(fam: _Family, k: int) -> CosetContext:
    return CosetContext(p=fam.field.p, e=fam.field.e, k=k, n=fam.n, r=fam.r)


def code_from_defining_set(
    field: Field, n: int, lam: Element, residues: Iterable[int], k: int = 0
) -> ConstacyclicCode:
    """Build the code whose roots are theta^i for i in the given set.

    The set must be a union of q-cyclotomic cosets inside 1 + r*Z_rn.
    """
    fam = _family(field, n, lam)
    P = DefiningSet(_ctx_with_k(fam, k), tuple(residues))
    g = Poly(field, (1,))
    for coset in fam.cosets:
        if coset[0] in P.residues:
            g = g * fam.minpolys[coset[0]]
    return ConstacyclicCode(field, n, lam, k, P, g, fam)


def from_generator_polynomial(
    field: Field, n: int, lam: Element, g: Poly, k: int = 0
) -> ConstacyclicCode:
    """Validated entry point for an explicit generator polynomial."""
    if g.field != field:
        raise ValueError("generator polynomial over the wrong field")
    if not g.is_monic:
        raise ValueError("generator polynomial must be monic")
    if not g.divides(xn_minus_lambda(field, n, lam)):
        raise ValueError("generator does not divide x^n - lambda")
    fam = _family(field, n, lam)
    emb = embedding(field, fam.ext)
    g_ext = Poly.make(fam.ext, [emb.fwd[c] for c in g.codes])
    roots = tuple(i for i, th in sorted(fam.theta_powers.items()) if not g_ext(th))
    if len(roots) != g.degree:
        raise AssertionError("recovered root count disagrees with the generator degree")
    P = DefiningSet(_ctx_with_k(fam, k), roots)
    return ConstacyclicCode(field, n, lam, k, P, g, fam)


def galois_dual_code(C: ConstacyclicCode) -> ConstacyclicCode:
    """The Galois dual, a lambda^(-p^(e-k))-constacyclic code.

    Computed from the check polynomial h as the coefficientwise
    p^(e-k) power of the monic reciprocal of h.  When the dual stays in
    the same constacyclic family (lambda^(1 + p^(e-k)) = 1) the result
    is cross-checked against the defining-set route.  The returned
    code carries the matched Galois parameter (e - k) mod e.
    """
    from galcd.polys import frobenius_poly, reciprocal

    field = C.field
    e, k = field.e, C.k
    h = C.check_poly
    g_dual = frobenius_poly(reciprocal(h), e - k)
    lam_dual = C.lam ** (-(field.p ** (e - k)))
    k_dual = (e - k) % e
    dual = from_generator_polynomial(field, C.n, lam_dual, g_dual, k_dual)
    if lam_dual == C.lam:
        expected = dual_defining_set(C.P)
        if dual.P.residues != expected.residues:
            raise AssertionError("polynomial and defining-set duals disagree")
    if dual.dim + C.dim != C.n:
        raise AssertionError("dual dimension mismatch")
    return dual


def is_lcd(C: ConstacyclicCode) -> bool:
    """Galois LCD test: automatic unless lambda^(1 + p^(e-k)) = 1, then by -p^k stability."""
    gate = C.lam ** (1 + C.field.p ** (C.field.e - C.k))
    if gate != C.field.one:
        return True
    return is_lcd_defining_set(C.P)


def to_generator_matrix(C: ConstacyclicCode) -> LinearCode:
    """Rows x^i * g(x) for i = 0 .. dim-1 as length-n coefficient vectors."""
    if C.dim == 0:
        raise ValueError("the zero code has no generator matrix")
    g = C.g.codes
    rows = []
    for i in range(C.dim):
        row = [0] * i + list(g) + [0] * (C.n - i - len(g))
        rows.append(tuple(row))
    out = LinearCode.__new__(LinearCode)
    out.field = C.field
    out.n = C.n
    out.rows = tuple(rows)
    return out


def code_params(
    C: ConstacyclicCode,
    strategy: str = "auto",
    *,
    budget_messages: int = DEFAULT_MESSAGE_BUDGET,
    budget_supports: int = DEFAULT_SUPPORT_BUDGET,
) -> CodeParams:
    if C.dim == 0:
        raise ValueError("the zero code has no parameters")
    return min_distance(
        to_generator_matrix(C),
        strategy,
        budget_messages=budget_messages,
        budget_supports=budget_supports,
    )


# ---------------------------------------------------------------------------
# Catalogs of LCD codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogRecord:
    code: ConstacyclicCode
    params: CodeParams | None      # None for the zero code
    lcd: bool
    bch: int | None

    @property
    def mds(self) -> bool:
        return bool(self.params and self.params.mds)

    def to_json(self) -> dict:
        C = self.code
        return {
            "p": C.field.p,
            "e": C.field.e,
            "k": C.k,
            "n": C.n,
            "lambda": C.lam.to_json(),
            "r": C.r,
            "theta": C.theta.to_json(),
            "defining_set": list(C.P.residues),
            "generator": C.g.to_json(),
            "params": self.params.to_json() if self.params else None,
            "lcd": self.lcd,
            "mds": self.mds,
            "bch_bound": self.bch,
        }


@dataclass(frozen=True)
class Catalog:
    field: Field
    n: int
    lam: Element
    k: int
    records: tuple[CatalogRecord, ...]
    t: int
    h: int | None                  # None when the non-fixed cosets do not pair
    involutive: bool

    @property
    def stable_count(self) -> int:
        return len(self.records)

    @property
    def nonzero_count(self) -> int:
        """Stable sets excluding the full one (the zero code)."""
        return self.stable_count - 1

    @property
    def census_count(self) -> int | None:
        """The 2^(t+h) - 1 census value (counts stable sets minus the zero code
        when the -p^k action is involutive on cosets)."""
        if self.h is None:
            return None
        return 2 ** (self.t + self.h) - 1

    def parameter_types(self) -> tuple[tuple[int, int, int], ...]:
        seen = []
        for rec in self.records:
            if rec.params and rec.params.exact:
                item = (rec.params.n, rec.params.dim, rec.params.d)
                if item not in seen:
                    seen.append(item)
        return tuple(sorted(seen))


def classify_all_lcd(
    field: Field,
    n: int,
    lam: Element,
    k: int,
    *,
    exact_distance: bool = True,
    budget_messages: int = DEFAULT_MESSAGE_BUDGET,
    budget_supports: int = DEFAULT_SUPPORT_BUDGET,
    max_stable_sets: int = 1 << 20,
) -> Catalog:
    """Enumerate all -p^k-stable defining sets and their exact parameters.

    Stable sets are unions of cycles of the -p^k action on cosets, so
    there are 2^(number of cycles) of them including the empty set and
    the full exponent set (the zero code).
    """
    fam = _family(field, n, lam)
    gate = lam ** (1 + field.p ** (field.e - k))
    if gate != field.one:
        raise ValueError(
            "lambda^(1 + p^(e-k)) != 1: every code in this family is Galois LCD "
            "and the stability enumeration does not apply"
        )
    ctx = _ctx_with_k(fam, k)
    cycles = tau_cycles(ctx)
    if 2 ** len(cycles) > max_stable_sets:
        raise BudgetExceeded(
            f"2^{len(cycles)} stable sets exceed the enumeration budget {max_stable_sets}"
        )
    fixed = sum(1 for c in cycles if len(c) == 1)
    moved = sum(len(c) for c in cycles if len(c) > 1)
    records = []
    for P in enumerate_stable_sets(ctx):
        code = code_from_defining_set(field, n, lam, P.residues, k)
        if code.dim == 0:
            records.append(CatalogRecord(code, None, is_lcd(code), None))
            continue
        if exact_distance:
            params = code_params(
                code,
                budget_messages=budget_messages,
                budget_supports=budget_supports,
            )
        else:
            bch = bch_lower_bound(code.P)
            params = CodeParams(code.n, code.dim, (bch, code.n - code.dim + 1), False)
        records.append(CatalogRecord(code, params, is_lcd(code), bch_lower_bound(code.P)))
    records.sort(key=lambda rec: (len(rec.code.P.residues), rec.code.P.residues))
    return Catalog(
        field=field,
        n=n,
        lam=lam,
        k=k,
        records=tuple(records),
        t=fixed,
        h=moved // 2 if moved % 2 == 0 else None,
        involutive=all(len(c) <= 2 for c in cycles),
    )


def hermitian_mds_family(
    p: int, a: int, lam: "Element | int", n: int, d: int
) -> ConstacyclicCode:
    """The [n, n+1-d, d] Hermitian LCD MDS code from consecutive exponents.

    Requires ord_rn(p^a) = 2 and that -1 is the unique involution in
    Z_rn^*; then every coset is a -p^a-fixed singleton and the defining
    set {1 + r*i : 0 <= i <= d-2} yields an MDS code whose distance is
    pinned by the consecutive-run bound against the Singleton bound.
    """
    field = make_field(p, 2 * a)
    lam_el = field.from_int(lam) if isinstance(lam, int) else lam
    if lam_el.field != field:
        raise ValueError("lambda must live in GF(p^(2a))")
    r = mult_order(lam_el)
    rn = r * n
    if rn < 2 or multiplicative_order(p**a % rn, rn) != 2:
        raise ValueError(f"p^a must have order 2 modulo rn = {rn}")
    if not unique_order2_unit(rn):
        raise ValueError(f"-1 is not the unique involution modulo rn = {rn}")
    if not 2 <= d <= n:
        raise ValueError(f"designed distance d = {d} must satisfy 2 <= d <= n = {n}")
    residues = tuple((1 + r * i) % rn for i in range(d - 1))
    code = code_from_defining_set(field, n, lam_el, residues, k=a)
    if not is_lcd(code):
        raise AssertionError("family member failed the LCD stability criterion")
    return code


def matrix_lcd_check(C: ConstacyclicCode):
    """The nonsingular-Gram verdict for a constacyclic code's generator matrix."""
    return is_galois_lcd(to_generator_matrix(C), C.k)
