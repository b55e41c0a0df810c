"""Exact arithmetic in GF(p^e) with an explicit modulus polynomial.

An element of GF(p^e) is a residue class of GF(p)[x] modulo a monic
irreducible polynomial of degree e.  Coefficient vectors are stored
constant term first, so the class of x in GF(8) has coefficients
[0, 1, 0].  Internally every element is packed into a single integer
code sum(c_i * p^i), which makes equality bit-exact and lets small
fields run on lookup tables.

Field identity is the triple (p, e, modulus): two fields with the same
triple compare (and hash) equal.  When no modulus is supplied, the
default is the monic irreducible polynomial whose coefficient tuple,
read from leading to constant term as base-p digits, encodes the
smallest integer.  For GF(8) that rule picks x^3 + x + 1, under which
the generator a satisfies a^3 = 1 + a.

Fields and elements are immutable; internal lookup tables are built at
construction and never mutated afterwards, so values can be shared
freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

_LOG_TABLE_LIMIT = 1 << 16  # build exp/log tables up to this field size
_ADD_TABLE_LIMIT = 600      # build a flat q*q addition table up to this size


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin (the 12-witness set covers all 64-bit inputs
    and is a strong probable-prime test beyond that)."""
    if m < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % p == 0:
            return m == p
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _pollard_rho(m: int) -> int:
    """A nontrivial factor of composite odd m."""
    if m % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % m
            y = (y * y + c) % m
            y = (y * y + c) % m
            d = math.gcd(abs(x - y), m)
        if d != m:
            return d
    raise AssertionError(f"rho failed on {m}")  # astronomically unlikely


def factorize(m: int) -> dict[int, int]:
    """Prime factorization: trial division for small factors, rho beyond."""
    out: dict[int, int] = {}
    for d in (2, 3, 5, 7, 11, 13):
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
    d = 17
    while d * d <= m and d < 100_000:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 2
    stack = [m] if m > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            out[v] = out.get(v, 0) + 1
            continue
        f = _pollard_rho(v)
        stack.extend((f, v // f))
    return out


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in Z_m^*.  Requires gcd(a, m) = 1; order mod 1 is 1."""
    if m == 1:
        return 1
    a %= m
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    order = 1
    x = a
    while x != 1:
        x = x * a % m
        order += 1
    return order


# ---------------------------------------------------------------------------
# Polynomials over GF(p) as plain int lists, constant term first.
# Used for modulus bookkeeping and for fields too large for tables.
# ---------------------------------------------------------------------------

def _ptrim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    # m must be monic
    r = list(a)
    dm = len(m) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - dm
            for i in range(dm):
                r[shift + i] = (r[shift + i] - lead * m[i]) % p
        r.pop()
    return _ptrim(r)


def _ppow_xq(exponent_base: int, m: Sequence[int], p: int) -> list[int]:
    """x^(p^exponent_base) mod m by repeated p-th powering."""
    h = [0, 1]  # x
    h = _pmod(h, m, p)
    for _ in range(exponent_base):
        h = _ppowmod(h, p, m, p)
    return h


def _ppowmod(a: Sequence[int], n: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while n:
        if n & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        n >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        # make b monic before reducing
        inv = pow(b[-1], -1, p)
        bm = [c * inv % p for c in b]
        a, b = b, _pmod(a, bm, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def poly_is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility over GF(p) via the distinct-prime-degree criterion."""
    c = _ptrim([x % p for x in coeffs])
    e = len(c) - 1
    if e < 1:
        return False
    if c[-1] != 1:
        inv = pow(c[-1], -1, p)
        c = [x * inv % p for x in c]
    if e == 1:
        return True
    # x^(p^e) == x mod f, and gcd(x^(p^(e/l)) - x, f) == 1 for prime l | e
    proper = {e // ell for ell in factorize(e)}
    h = [0, 1]
    for i in range(1, e + 1):
        h = _ppowmod(h, p, c, p)
        if i in proper:
            diff = list(h)
            while len(diff) < 2:
                diff.append(0)
            diff[1] = (diff[1] - 1) % p
            if len(_pgcd(diff, c, p)) != 1:
                return False
    x_again = list(h)
    while len(x_again) < 2:
        x_again.append(0)
    return x_again[1] == 1 and all(v == 0 for i, v in enumerate(x_again) if i != 1)


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree e over GF(p).

    Candidates are ordered by the integer encoded by the coefficient
    tuple read leading term first in base p, i.e. ascending
    (c_{e-1}, ..., c_1, c_0) lexicographically.
    """
    for tail in range(p**e):
        coeffs = []
        t = tail
        for _ in range(e):
            coeffs.append(t % p)
            t //= p
        cand = coeffs + [1]
        if e > 1:
            if cand[0] == 0:
                continue  # divisible by x
            has_root = False
            for point in range(p):
                acc = 0
                for c in reversed(cand):
                    acc = (acc * point + c) % p
                if acc == 0:
                    has_root = True
                    break
            if has_root:
                continue
        if poly_is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# Field and Element
# ---------------------------------------------------------------------------

class Field:
    """GF(p^e) with arithmetic on packed integer codes.

    Do not call directly in normal use; go through :func:`make_field`,
    which validates arguments and memoizes instances so table work is
    shared.
    """

    __slots__ = (
        "p", "e", "q", "modulus",
        "_exp", "_log", "_add_flat",
        "_qm1_factors", "_primitive", "_cache",
    )

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self._qm1_factors: dict[int, int] | None = None
        self._primitive: int | None = None
        self._cache: dict = {}
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._add_flat: list[int] | None = None
        if self.q <= _LOG_TABLE_LIMIT:
            self._build_log_tables()
        if self.q <= _ADD_TABLE_LIMIT:
            q = self.q
            add = self.add_codes
            self._add_flat = [add(a, b) for a in range(q) for b in range(q)]

    # -- construction helpers ------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        pa = self._decode(a)
        pb = self._decode(b)
        return self._encode(_pmod(_pmul(pa, pb, self.p), self.modulus, self.p))

    def _build_log_tables(self) -> None:
        q, p = self.q, self.p
        if q == 2:
            self._exp, self._log = [1], [0, 0]
            self._primitive = 1
            return
        for g in range(2, q):
            exp = [1] * (q - 1)
            val = 1
            ok = True
            for i in range(1, q - 1):
                val = self._raw_mul(val, g)
                if val == 1:  # order of g is i < q-1
                    ok = False
                    break
                exp[i] = val
            if ok and self._raw_mul(val, g) == 1:
                log = [0] * q
                for i, v in enumerate(exp):
                    log[v] = i
                self._exp, self._log = exp, log
                self._primitive = g
                return
        raise AssertionError("no multiplicative generator found")  # unreachable

    def _decode(self, code: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.e):
            out.append(code % p)
            code //= p
        return _ptrim(out)

    def _encode(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + c
        return code

    # -- scalar arithmetic on codes ------------------------------------------

    def add_codes(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        flat = self._add_flat
        if flat is not None:
            return flat[a * self.q + b]
        p = self.p
        out = 0
        m = 1
        while a or b:
            out += (a + b) % p * m
            a //= p
            b //= p
            m *= p
        return out

    def neg_code(self, a: int) -> int:
        p = self.p
        if self.e == 1:
            return -a % p
        out = 0
        m = 1
        while a:
            out += -a % p * m
            a //= p
            m *= p
        return out

    def sub_codes(self, a: int, b: int) -> int:
        return self.add_codes(a, self.neg_code(b))

    def mul_codes(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._raw_mul(a, b)

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow_code(a, self.q - 2)

    def pow_code(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow_code(self.inv_code(a), -n)
        if a == 0:
            return 0 if n else 1
        if self._exp is not None:
            return self._exp[self._log[a] * n % (self.q - 1)]
        result = 1
        base = a
        while n:
            if n & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            n >>= 1
        return result

    def frob_code(self, a: int, j: int) -> int:
        """a^(p^j) on codes."""
        if a == 0:
            return 0
        return self.pow_code(a, pow(self.p, j, self.q - 1) if self.q > 2 else 1)

    # -- element constructors -------------------------------------------------

    @property
    def zero(self) -> "Element":
        return Element(self, 0)

    @property
    def one(self) -> "Element":
        return Element(self, 1)

    @property
    def gen(self) -> "Element":
        """The residue class of x (equals 0 in a prime field with modulus x)."""
        if self.e > 1:
            return Element(self, self._encode([0, 1]))
        return Element(self, -self.modulus[0] % self.p)

    def from_int(self, c: int) -> "Element":
        """Map an integer through the prime subfield (so -1 becomes p-1)."""
        return Element(self, c % self.p)

    def from_coeffs(self, coeffs: Iterable[int]) -> "Element":
        cs = [c % self.p for c in coeffs]
        if len(cs) > self.e:
            if any(cs[self.e:]):
                raise ValueError(f"coefficient vector longer than degree {self.e}")
            cs = cs[: self.e]
        return Element(self, self._encode(cs))

    def from_code(self, code: int) -> "Element":
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for GF({self.q})")
        return Element(self, code)

    def elements(self):
        """Iterate all field elements in code order."""
        return (Element(self, c) for c in range(self.q))

    # -- structure -------------------------------------------------------------

    @property
    def qm1_factors(self) -> dict[int, int]:
        if self._qm1_factors is None:
            self._qm1_factors = factorize(self.q - 1) if self.q > 2 else {}
        return self._qm1_factors

    def _code_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        order = self.q - 1
        for ell in self.qm1_factors:
            while order % ell == 0 and self.pow_code(a, order // ell) == 1:
                order //= ell
        return order

    @property
    def primitive_element(self) -> "Element":
        """Multiplicative generator with the smallest integer code."""
        if self._primitive is None:
            for a in range(1, self.q):
                if self._code_order(a) == self.q - 1:
                    self._primitive = a
                    break
        return Element(self, self._primitive)

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj: dict) -> "Field":
        return make_field(obj["p"], obj["e"], obj["modulus"])


@dataclass(frozen=True, slots=True)
class Element:
    """An element of a Field, stored as a packed integer code."""

    field: Field
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        p = self.field.p
        code = self.code
        out = []
        for _ in range(self.field.e):
            out.append(code % p)
            code //= p
        return tuple(out)

    def _compat(self, other: "Element") -> None:
        if self.field != other.field:
            raise ValueError(f"mixed fields: {self.field} and {other.field}")

    def __add__(self, other: "Element") -> "Element":
        self._compat(other)
        return Element(self.field, self.field.add_codes(self.code, other.code))

    def __sub__(self, other: "Element") -> "Element":
        self._compat(other)
        return Element(self.field, self.field.sub_codes(self.code, other.code))

    def __neg__(self) -> "Element":
        return Element(self.field, self.field.neg_code(self.code))

    def __mul__(self, other: "Element") -> "Element":
        self._compat(other)
        return Element(self.field, self.field.mul_codes(self.code, other.code))

    def __truediv__(self, other: "Element") -> "Element":
        self._compat(other)
        return Element(self.field, self.field.mul_codes(self.code, self.field.inv_code(other.code)))

    def __pow__(self, n: int) -> "Element":
        return Element(self.field, self.field.pow_code(self.code, n))

    def inverse(self) -> "Element":
        return Element(self.field, self.field.inv_code(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __str__(self) -> str:
        if self.field.e == 1 or self.code < self.field.p:
            return str(self.code)
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self) -> str:
        return f"Element({list(self.coeffs)}, {self.field!r})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def element_from_json(field: Field, arr: Sequence[int]) -> Element:
    return field.from_coeffs(arr)


_FIELD_CACHE: dict[tuple[int, int, tuple[int, ...] | None], Field] = {}


def make_field(p: int, e: int, modulus: Sequence[int] | None = None) -> Field:
    """Construct (or fetch the memoized) GF(p^e).

    The modulus, when given, is a coefficient vector constant term
    first; it must be monic of degree e and irreducible over GF(p).
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    key_mod = tuple(int(c) for c in modulus) if modulus is not None else None
    key = (p, e, key_mod)
    cached = _FIELD_CACHE.get(key)
    if cached is not None:
        return cached
    if key_mod is None:
        mod = default_modulus(p, e)
    else:
        mod = tuple(c % p for c in key_mod)
        if len(mod) != e + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree e (constant term first)")
        if not poly_is_irreducible(mod, p):
            raise ValueError(f"modulus {list(mod)} is reducible over GF({p})")
    canon = (p, e, mod)
    field = _FIELD_CACHE.get(canon)
    if field is None:
        field = Field(p, e, mod)
        _FIELD_CACHE[canon] = field
    _FIELD_CACHE[key] = field
    return field


# ---------------------------------------------------------------------------
# Frobenius, orders, distinguished roots
# ---------------------------------------------------------------------------

def frobenius_pow(x: Element, j: int) -> Element:
    """x^(p^j), the j-th iterate of the Frobenius automorphism."""
    if j < 0:
        raise ValueError("Frobenius exponent must be >= 0")
    return Element(x.field, x.field.frob_code(x.code, j))


def mult_order(x: Element) -> int:
    """Order of x in the multiplicative group; requires x != 0."""
    if x.code == 0:
        raise ValueError("zero has no multiplicative order")
    return x.field._code_order(x.code)


def sqrt_minus_one(field: Field) -> Element:
    """The square root of -1 with the smallest integer code.

    Exists in characteristic 2 (where it is 1) and whenever q = 1 mod 4;
    in particular for every p = 1 mod 4.
    """
    if field.p == 2:
        return field.one
    if field.q % 4 != 1:
        raise ValueError(f"no square root of -1 in {field!r}")
    g = field.primitive_element
    eta = g ** ((field.q - 1) // 4)
    candidates = sorted([eta.code, field.neg_code(eta.code)])
    return Element(field, candidates[0])


# ---------------------------------------------------------------------------
# Subfield embeddings
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Embedding:
    """The canonical field homomorphism GF(p^e) -> GF(p^(e*m))."""

    src: Field
    dst: Field
    rho_code: int          # image of the class of x of src
    fwd: dict              # src code -> dst code
    inv: dict              # dst code -> src code (partial: subfield only)

    def __call__(self, x: Element) -> Element:
        if x.field != self.src:
            raise ValueError("element not in the source field")
        return Element(self.dst, self.fwd[x.code])

    def descend(self, y: Element) -> Element:
        if y.field != self.dst:
            raise ValueError("element not in the destination field")
        try:
            return Element(self.src, self.inv[y.code])
        except KeyError:
            raise ValueError(f"{y!r} is not in the image of {self.src!r}") from None


def _build_embedding(src: Field, dst: Field) -> Embedding:
    if src == dst:
        ident = {c: c for c in range(src.q)}
        return Embedding(src, dst, src.gen.code, ident, dict(ident))
    if src.e == 1:
        fwd = {c: c for c in range(src.p)}
        return Embedding(src, dst, fwd[src.gen.code], fwd, {v: k for k, v in fwd.items()})
    # The subfield of size src.q is the kernel of x -> x^(src.q); its
    # nonzero part is generated by g^((dst.q - 1) / (src.q - 1)).
    g = dst.primitive_element
    w = g ** ((dst.q - 1) // (src.q - 1))
    mod_consts = [Element(dst, c) for c in src.modulus]  # GF(p) coefficients embed as constants
    roots = []
    cand = dst.one
    for _ in range(src.q - 1):
        acc = dst.zero
        for c in reversed(mod_consts):
            acc = acc * cand + c
        if not acc:
            roots.append(cand.code)
        cand = cand * w
    if len(roots) != src.e:
        raise AssertionError("modulus did not split in the target subfield")
    rho = Element(dst, min(roots))
    fwd = {}
    for code in range(src.q):
        digits = []
        c = code
        for _ in range(src.e):
            digits.append(c % src.p)
            c //= src.p
        acc = dst.zero
        for d in reversed(digits):
            acc = acc * rho + Element(dst, d)
        fwd[code] = acc.code
    return Embedding(src, dst, rho.code, fwd, {v: k for k, v in fwd.items()})


def embedding(src: Field, dst: Field) -> Embedding:
    """Memoized canonical embedding; requires src.p == dst.p and src.e | dst.e."""
    if src.p != dst.p:
        raise ValueError(f"incompatible characteristics {src.p} and {dst.p}")
    if dst.e % src.e != 0:
        raise ValueError(f"GF({src.p}^{src.e}) does not embed in GF({dst.p}^{dst.e})")
    key = ("embed", src.e, src.modulus, dst.e, dst.modulus)
    emb = dst._cache.get(key)
    if emb is None:
        emb = _build_embedding(src, dst)
        dst._cache[key] = emb
    return emb


def embed(src: Field, dst: Field, x: Element) -> Element:
    return embedding(src, dst)(x)


# ---------------------------------------------------------------------------
# Roots of unity
# ---------------------------------------------------------------------------

def primitive_rn_root(ext: Field, rn: int, n: int, lam: Element) -> Element:
    """A primitive rn-th root of unity theta in ext with theta^n = lam.

    Deterministic: with g the smallest-code primitive element of ext,
    candidates g^(u*(q-1)/rn) are scanned for u = 1, 2, ... coprime to
    rn and the first one whose n-th power is lam is returned.
    """
    if lam.field != ext:
        raise ValueError("lam must be given inside the extension field")
    if rn < 1 or (ext.q - 1) % rn != 0:
        raise ValueError(f"{rn} does not divide |{ext!r}*| = {ext.q - 1}")
    g = ext.primitive_element
    step = g ** ((ext.q - 1) // rn)
    cand = ext.one
    for u in range(1, rn + 1):
        cand = cand * step
        if math.gcd(u, rn) == 1 and cand ** n == lam:
            theta = cand
            if mult_order(theta) != rn:
                raise AssertionError("candidate root has wrong order")  # unreachable
            return theta
    raise ValueError(f"no primitive {rn}-th root with theta^{n} = {lam!r}")
