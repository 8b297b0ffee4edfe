"""Arithmetic contexts for small finite fields GF(p^k).

Elements of GF(p^k) are encoded as the integers 0..q-1: the integer
``e = sum(c_i * p**i)`` stands for the residue ``sum(c_i * X**i)`` modulo a
fixed monic irreducible polynomial of degree k.  Under this encoding 0 and 1
are the additive and multiplicative identities of every field, the integers
0..p-1 always form the prime subfield, and for k = 1 the encoding is the
ordinary residue arithmetic mod p.

Construction is fully deterministic so that two fields of the same order are
byte-for-byte interchangeable:

* the modulus is the lexicographically least monic irreducible of degree k,
  comparing coefficient tuples from the constant term upward (for k = 1 this
  gives the modulus X);
* irreducibility is established by trial division against every monic
  polynomial of degree at most k // 2;
* ``generator`` is the least element index of multiplicative order q - 1.

Multiplication runs on log/antilog tables relative to ``generator`` whenever
q <= 2**16, with full q x q lookup tables layered on top for very small
fields; larger fields fall back to direct polynomial reduction.  Fields above
a configurable size bound (2**20 by default) are refused at construction.
"""

from __future__ import annotations

import itertools

DEFAULT_SIZE_BOUND = 1 << 20

_TABLE_LIMIT = 512       # full q x q add/mul tables below this order
_LOG_LIMIT = 1 << 16     # log/antilog tables below this order


class FieldSizeError(ValueError):
    """Field order exceeds the configured size bound."""


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for the supported field sizes."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    # Dense ascending coefficient lists over Z/p, den nonzero.
    num = list(num)
    dlen = len(den)
    inv_lead = pow(den[-1], -1, p)
    quot = [0] * max(0, len(num) - dlen + 1)
    for shift in range(len(num) - dlen, -1, -1):
        c = num[shift + dlen - 1]
        if c:
            c = (c * inv_lead) % p
            quot[shift] = c
            for i, dc in enumerate(den):
                num[shift + i] = (num[shift + i] - c * dc) % p
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def _is_irreducible(m: list[int], p: int) -> bool:
    # Monic ascending m of degree k; trial division by every monic divisor
    # candidate of degree 1..k//2.
    k = len(m) - 1
    for d in range(1, k // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            _, rem = _poly_divmod(m, list(lower) + [1], p)
            if not rem:
                return False
    return True


def _least_irreducible(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)  # the polynomial X
    # Constant term 0 would make the candidate divisible by X, so start at 1.
    for coeffs in itertools.product(range(1, p), *[range(p)] * (k - 1)):
        m = list(coeffs) + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial of degree %d over GF(%d)" % (k, p))


class FieldCtx:
    """Arithmetic for one finite field.

    ``add`` and ``mul`` are plain callables taking and returning element
    indices; they are bound to the fastest available implementation at
    construction time, so hot loops may hoist them into locals.  Instances
    are immutable once built and are cached by ``make_field``, so identity
    comparison is the intended equality test.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = q = p ** k
        self.modulus = tuple(modulus)

        self._digit_cache: list[tuple[int, ...]] | None = None
        if q <= _LOG_LIMIT:
            self._digit_cache = [self._digits_of(e) for e in range(q)]

        self.generator = self._find_generator()

        self.exp_table: list[int] | None = None
        self.log_table: list[int] | None = None
        if q <= _LOG_LIMIT:
            exp = [0] * (q - 1)
            log = [0] * q
            v = 1
            for i in range(q - 1):
                exp[i] = v
                log[v] = i
                v = self._raw_mul(v, self.generator)
            if v != 1:
                raise AssertionError("generator order mismatch")
            self.exp_table = exp
            self.log_table = log

        self.neg_table: list[int] | None = None
        self.inv_table: list[int] | None = None
        if q <= _LOG_LIMIT:
            self.neg_table = [self._neg_digitwise(e) for e in range(q)]
            qm1 = q - 1
            self.inv_table = [0] + [exp[(qm1 - log[a]) % qm1] for a in range(1, q)]

        # Bind add/mul to the fastest implementation available.
        self.add_table: list[list[int]] | None = None
        self.mul_table: list[list[int]] | None = None
        if p == 2:
            self.add = int.__xor__
        elif q <= _TABLE_LIMIT:
            rows = [[self._add_digitwise(a, b) for b in range(q)] for a in range(q)]
            self.add_table = rows
            self.add = lambda a, b: rows[a][b]
        else:
            self.add = self._add_digitwise

        if q <= _TABLE_LIMIT:
            exp, log, qm1 = self.exp_table, self.log_table, q - 1
            mrows = [[0] * q]
            for a in range(1, q):
                la = log[a]
                mrows.append([0] + [exp[(la + log[b]) % qm1] for b in range(1, q)])
            self.mul_table = mrows
            self.mul = lambda a, b: mrows[a][b]
        elif q <= _LOG_LIMIT:
            exp, log, qm1 = self.exp_table, self.log_table, q - 1
            self.mul = lambda a, b: exp[(log[a] + log[b]) % qm1] if a and b else 0
        else:
            self.mul = self._raw_mul

    # -- encoding helpers -------------------------------------------------

    def _digits_of(self, e: int) -> tuple[int, ...]:
        p = self.p
        out = []
        while e:
            out.append(e % p)
            e //= p
        return tuple(out)

    def _digits(self, e: int) -> tuple[int, ...]:
        if self._digit_cache is not None:
            return self._digit_cache[e]
        return self._digits_of(e)

    def element_coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficients of a over the prime field, length k, lowest first."""
        d = self._digits(a)
        return d + (0,) * (self.k - len(d))

    def element_from_coeffs(self, coeffs) -> int:
        cs = list(coeffs)
        if len(cs) > self.k:
            raise ValueError("too many coefficients for GF(%d)" % self.q)
        e = 0
        for c in reversed(cs):
            if not 0 <= c < self.p:
                raise ValueError("coefficient %r outside 0..%d" % (c, self.p - 1))
            e = e * self.p + c
        return e

    # -- raw arithmetic (used during construction and for large fields) ---

    def _add_digitwise(self, a: int, b: int) -> int:
        p = self.p
        s = 0
        mult = 1
        while a or b:
            s += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return s

    def _neg_digitwise(self, a: int) -> int:
        p = self.p
        s = 0
        mult = 1
        while a:
            c = a % p
            if c:
                s += (p - c) * mult
            a //= p
            mult *= p
        return s

    def _raw_mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        p = self.p
        va = self._digits(a)
        vb = self._digits(b)
        prod = [0] * (len(va) + len(vb) - 1)
        for i, ca in enumerate(va):
            if ca:
                for j, cb in enumerate(vb):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        if len(prod) > self.k:
            _, prod = _poly_divmod(prod, list(self.modulus), p)
        e = 0
        for c in reversed(prod):
            e = e * p + c
        return e

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        target = self.q - 1
        prime_facs = _prime_factors(target)
        for cand in range(2, self.q):
            if all(self._pow_raw(cand, target // r) != 1 for r in prime_facs):
                return cand
        raise AssertionError("no generator found for GF(%d)" % self.q)

    # -- public arithmetic -------------------------------------------------

    def neg(self, a: int) -> int:
        if self.neg_table is not None:
            return self.neg_table[a]
        return self._neg_digitwise(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.q)
        if self.inv_table is not None:
            return self.inv_table[a]
        return self._pow_raw(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.log_table is not None:
            return self.exp_table[(self.log_table[a] * e) % (self.q - 1)]
        return self._pow_raw(a, e)

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def units(self) -> range:
        return range(1, self.q)

    def __repr__(self) -> str:
        return "GF(%d)" % self.q


def mult_order(F: FieldCtx, a: int) -> int:
    """Multiplicative order of a nonzero element; always divides q - 1."""
    if a == 0:
        raise ValueError("0 has no multiplicative order")
    for d in _divisors(F.q - 1):
        if F.pow(a, d) == 1:
            return d
    raise AssertionError("order of %d not found in GF(%d)" % (a, F.q))


class ExtFieldCtx:
    """A field GF(q) together with its quadratic extension GF(q^2).

    ``embed`` carries base elements into the extension (the base generator is
    mapped to the least-index root of the base modulus), and ``frobenius`` is
    x -> x**q on the extension, computed by k-fold p-th powering.  Fixed
    points of ``frobenius`` are exactly the embedded base field.
    """

    def __init__(self, base: FieldCtx, ext: FieldCtx,
                 embed_table: tuple[int, ...], frob_table: tuple[int, ...]):
        self.base = base
        self.ext = ext
        self.embed_table = embed_table
        self.frob_table = frob_table

    def embed(self, a: int) -> int:
        return self.embed_table[a]

    def frobenius(self, x: int) -> int:
        return self.frob_table[x]

    def norm_one_elements(self) -> list[int]:
        """The x in GF(q^2) with x**(q+1) = 1; there are exactly q + 1."""
        ext, e = self.ext, self.base.q + 1
        return [x for x in ext.units if ext.pow(x, e) == 1]

    def __repr__(self) -> str:
        return "GF(%d) in GF(%d)" % (self.base.q, self.ext.q)


# One FieldCtx per (p, k): Poly equality compares fields by identity, so every
# construction path must hand back the same instance.  The size bound is a
# guard on new construction, not part of the cache key.
_FIELD_CACHE: dict[tuple[int, int], FieldCtx] = {}


def make_field(p: int, k: int, size_bound: int = DEFAULT_SIZE_BOUND) -> FieldCtx:
    """Construct (and cache) GF(p**k) with the canonical modulus."""
    if not isinstance(p, int) or not isinstance(k, int):
        raise ValueError("p and k must be integers")
    if not is_prime(p):
        raise ValueError("%r is not prime" % (p,))
    if k < 1:
        raise ValueError("extension degree must be at least 1")
    if p ** k > size_bound:
        raise FieldSizeError("GF(%d**%d) exceeds size bound %d" % (p, k, size_bound))
    F = _FIELD_CACHE.get((p, k))
    if F is None:
        F = _FIELD_CACHE[(p, k)] = FieldCtx(p, k, _least_irreducible(p, k))
    return F


def field_of_order(q: int, size_bound: int = DEFAULT_SIZE_BOUND) -> FieldCtx:
    """Construct (and cache) the field with q elements; q must be a prime power."""
    if not isinstance(q, int) or q < 2:
        raise ValueError("%r is not a prime power" % (q,))
    p = q
    for d in range(2, q):
        if d * d > q:
            break
        if q % d == 0:
            p = d
            break
    k = 0
    m = q
    while m % p == 0 and m > 1:
        m //= p
        k += 1
    if m != 1:
        raise ValueError("%d is not a prime power" % q)
    return make_field(p, k, size_bound)


def make_ext(F: FieldCtx, size_bound: int = DEFAULT_SIZE_BOUND) -> ExtFieldCtx:
    """Construct (and cache) the quadratic extension context for F."""
    cached = getattr(F, "_ext_ctx", None)
    if cached is not None:
        return cached
    ext = make_field(F.p, 2 * F.k, size_bound)

    root = None
    for x in ext.elements:
        acc = 0
        for c in reversed(F.modulus):
            acc = ext.add(ext.mul(acc, x), c)
        if acc == 0:
            root = x
            break
    if root is None:
        raise AssertionError("modulus of %r has no root in %r" % (F, ext))

    embed = []
    for a in F.elements:
        acc = 0
        for c in reversed(F.element_coeffs(a)):
            acc = ext.add(ext.mul(acc, root), c)
        embed.append(acc)

    frob = []
    for x in ext.elements:
        y = x
        for _ in range(F.k):
            y = ext.pow(y, F.p)
        frob.append(y)

    ctx = ExtFieldCtx(F, ext, tuple(embed), tuple(frob))
    F._ext_ctx = ctx
    return ctx
