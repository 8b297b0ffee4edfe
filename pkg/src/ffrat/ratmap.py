"""Rational maps over GF(q), fractional-linear substitution, and canonical
keys for the intermediate fields they generate.

A rational map f = P/Q of degree n (degree = max of the numerator and
denominator degrees after reduction) generates a subfield GF(q)(f) of the
rational function field, and two maps generate the same subfield iff the
2-dimensional coefficient spans of their reduced pairs {P, Q} coincide.  The
``SubfieldKey`` of f is the reduced row-echelon basis of that span, stored as
two coefficient vectors of length n+1 ordered from X^n down to the constant
term; it is a complete, hashable invariant for "same subfield".

An invertible matrix A = [[a, b], [c, d]] acts by the substitution
X -> (aX + b)/(cX + d): the pair (P, Q) is replaced by its homogeneous
substitute (sum_i p_i (aX+b)^i (cX+d)^(n-i), same for Q), which spans the key
of f((aX+b)/(cX+d)).  This right action factors through scalars, so
``MoebiusTransform`` stores matrices projectively normalized (first nonzero
entry of (a, b, c, d) scaled to 1).

``enumerate_subfield_keys`` lists each of the q^(2(n-1)) keys exactly once by
walking the canonical bases directly: pairs (P, Q) with P monic of degree n,
Q monic of degree m < n, gcd(P, Q) = 1 and the X^m coefficient of P zero.
"""

from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple

from ffrat.gf import FieldCtx
from ffrat.polyring import Poly, gcd, poly_str

DEFAULT_KEY_BUDGET = 10 ** 7


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured budget."""


class MoebiusTransform:
    """An invertible fractional-linear substitution X -> (aX+b)/(cX+d)."""

    __slots__ = ("field", "mat")

    def __init__(self, field: FieldCtx, mat):
        a, b, c, d = mat
        det = field.sub(field.mul(a, d), field.mul(b, c))
        if det == 0:
            raise ValueError("matrix %r is singular" % (mat,))
        for entry in (a, b, c, d):
            if entry:
                s = field.inv(entry)
                break
        mul = field.mul
        self.field = field
        self.mat = (mul(s, a), mul(s, b), mul(s, c), mul(s, d))

    @classmethod
    def identity(cls, field: FieldCtx) -> "MoebiusTransform":
        return cls(field, (1, 0, 0, 1))

    def __matmul__(self, other: "MoebiusTransform") -> "MoebiusTransform":
        if self.field is not other.field:
            raise ValueError("mixed-field composition")
        F = self.field
        a, b, c, d = self.mat
        e, f, g, h = other.mat
        add, mul = F.add, F.mul
        return MoebiusTransform(F, (add(mul(a, e), mul(b, g)),
                                    add(mul(a, f), mul(b, h)),
                                    add(mul(c, e), mul(d, g)),
                                    add(mul(c, f), mul(d, h))))

    def inverse(self) -> "MoebiusTransform":
        F = self.field
        a, b, c, d = self.mat
        return MoebiusTransform(F, (d, F.neg(b), F.neg(c), a))

    def order(self) -> int:
        """Order as a projective transformation."""
        ident = MoebiusTransform.identity(self.field)
        power = self
        d = 1
        while power != ident:
            power = power @ self
            d += 1
            if d > self.field.q + 1:
                raise AssertionError("projective order above q+1")
        return d

    def __eq__(self, other) -> bool:
        return (isinstance(other, MoebiusTransform)
                and self.field is other.field and self.mat == other.mat)

    def __hash__(self) -> int:
        return hash((self.field.q, self.mat))

    def __repr__(self) -> str:
        return "MoebiusTransform(GF(%d), %r)" % (self.field.q, self.mat)


class RationalMap:
    """A reduced rational map; build with ``normalize``."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        self.num = num
        self.den = den

    @property
    def field(self) -> FieldCtx:
        return self.num.field

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalMap)
                and self.num == other.num and self.den == other.den)

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return "RationalMap(%s)" % str(self)

    def __str__(self) -> str:
        num = poly_str(self.num)
        if self.den == Poly.one(self.field):
            return num
        den = poly_str(self.den)
        if "+" in num or "*" in num:
            num = "(%s)" % num
        if "+" in den or "*" in den:
            den = "(%s)" % den
        return "%s/%s" % (num, den)


class SubfieldKey(NamedTuple):
    """Echelon basis of the coefficient span of a degree-n map, as two
    vectors over GF(q) ordered from the X^n coefficient down to the
    constant."""
    n: int
    rows: tuple[tuple[int, ...], tuple[int, ...]]


def normalize(num: Poly, den: Poly) -> RationalMap:
    """Reduce P/Q: cancel the gcd and make the denominator monic.

    Raises ValueError for a zero denominator or a constant map (degree 0).
    """
    num._check_field(den)
    if den.is_zero:
        raise ValueError("zero denominator")
    if num.is_zero:
        raise ValueError("constant rational map")
    g = gcd(num, den)
    if g.degree > 0:
        num, den = num // g, den // g
    if max(num.degree, den.degree) < 1:
        raise ValueError("constant rational map")
    c = num.field.inv(den.lc)
    return RationalMap(num.scale(c), den.scale(c))


def _descending(f: Poly, n: int) -> list[int]:
    cs = f.coeffs
    return [cs[i] if i < len(cs) else 0 for i in range(n, -1, -1)]


def _echelon2(F: FieldCtx, v0: list[int], v1: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # Reduced row echelon form of a rank-2 matrix with rows v0, v1.
    width = len(v0)
    j0 = 0
    while v0[j0] == 0 and v1[j0] == 0:
        j0 += 1
    if v0[j0] == 0:
        v0, v1 = v1, v0
    mul, sub = F.mul, F.sub
    piv = v0[j0]
    if piv != 1:
        s = F.inv(piv)
        v0 = [mul(s, x) for x in v0]
    if v1[j0]:
        c = v1[j0]
        v1 = [sub(x, mul(c, y)) for x, y in zip(v1, v0)]
    j1 = j0 + 1
    while j1 < width and v1[j1] == 0:
        j1 += 1
    if j1 == width:
        raise ValueError("rows are linearly dependent")
    piv = v1[j1]
    if piv != 1:
        s = F.inv(piv)
        v1 = [mul(s, x) for x in v1]
    if v0[j1]:
        c = v0[j1]
        v0 = [sub(x, mul(c, y)) for x, y in zip(v0, v1)]
    return tuple(v0), tuple(v1)


def subfield_key(f: RationalMap) -> SubfieldKey:
    """Canonical invariant of the subfield GF(q)(f)."""
    n = f.degree
    rows = _echelon2(f.field, _descending(f.num, n), _descending(f.den, n))
    return SubfieldKey(n, rows)


def key_rows_as_polys(F: FieldCtx, key: SubfieldKey) -> tuple[Poly, Poly]:
    r0, r1 = key.rows
    return Poly(F, tuple(reversed(r0))), Poly(F, tuple(reversed(r1)))


def substitution_matrix(F: FieldCtx, mat, n: int) -> tuple[tuple[int, ...], ...]:
    """Matrix of the homogeneous substitution by [[a,b],[c,d]] on coefficient
    vectors of length n+1 in descending order: row i is the vector of
    (aX+b)^(n-i) (cX+d)^i, so transformed = sum_i v[i] * M[i]."""
    a, b, c, d = mat
    U = Poly(F, (b, a))
    V = Poly(F, (d, c))
    upow = [Poly.one(F)]
    vpow = [Poly.one(F)]
    for _ in range(n):
        upow.append(upow[-1] * U)
        vpow.append(vpow[-1] * V)
    return tuple(tuple(_descending(upow[n - i] * vpow[i], n)) for i in range(n + 1))


def key_image(key: SubfieldKey, M, F: FieldCtx) -> SubfieldKey:
    """Key of the substituted map, given a precomputed substitution matrix."""
    width = key.n + 1
    add, mul = F.add, F.mul
    new_rows = []
    for vec in key.rows:
        acc = [0] * width
        for i, c in enumerate(vec):
            if c:
                mi = M[i]
                if c == 1:
                    for j in range(width):
                        m = mi[j]
                        if m:
                            acc[j] = add(acc[j], m)
                else:
                    for j in range(width):
                        m = mi[j]
                        if m:
                            acc[j] = add(acc[j], mul(c, m))
        new_rows.append(acc)
    return SubfieldKey(key.n, _echelon2(F, new_rows[0], new_rows[1]))


def act(f: RationalMap, A: MoebiusTransform) -> RationalMap:
    """The substituted map f((aX+b)/(cX+d)), reduced.

    This is a right action: act(f, A @ B) == act(act(f, A), B).
    """
    F = f.field
    if A.field is not F:
        raise ValueError("transform field does not match map field")
    n = f.degree
    a, b, c, d = A.mat
    U = Poly(F, (b, a))
    V = Poly(F, (d, c))
    upow = [Poly.one(F)]
    vpow = [Poly.one(F)]
    for _ in range(n):
        upow.append(upow[-1] * U)
        vpow.append(vpow[-1] * V)

    def substitute(P: Poly) -> Poly:
        out = Poly.zero(F)
        for i in range(n + 1):
            ci = P.coeff(i)
            if ci:
                out = out + (upow[i] * vpow[n - i]).scale(ci)
        return out

    image = normalize(substitute(f.num), substitute(f.den))
    if image.degree != n:
        raise AssertionError("substitution changed the degree")
    return image


def is_fixed(key: SubfieldKey, A: MoebiusTransform) -> bool:
    """Whether the substitution by A maps the subfield onto itself."""
    M = substitution_matrix(A.field, A.mat, key.n)
    return key_image(key, M, A.field) == key


def enumerate_subfield_keys(F: FieldCtx, n: int,
                            budget: int = DEFAULT_KEY_BUDGET) -> Iterator[SubfieldKey]:
    """All q^(2(n-1)) subfield keys of degree n, in deterministic order."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    q = F.q
    total = q ** (2 * (n - 1))
    if total > budget:
        raise BudgetExceededError(
            "q=%d n=%d needs %d keys, budget is %d" % (q, n, total, budget))

    one = Poly.one(F)
    for m in range(n):
        free_positions = [i for i in range(n) if i != m]
        for p_low in itertools.product(range(q), repeat=n - 1):
            pc = [0] * (n + 1)
            pc[n] = 1
            for pos, val in zip(free_positions, p_low):
                pc[pos] = val
            P = Poly(F, pc)
            if m == 0:
                # Q = 1 is coprime to everything.
                yield SubfieldKey(n, (tuple(_descending(P, n)),
                                      tuple(_descending(one, n))))
                continue
            for q_low in itertools.product(range(q), repeat=m):
                Q = Poly(F, q_low + (1,))
                if gcd(P, Q).degree == 0:
                    yield SubfieldKey(n, (tuple(_descending(P, n)),
                                          tuple(_descending(Q, n))))
