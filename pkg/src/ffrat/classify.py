"""Canonical forms and representative tables for polynomial equivalence.

Two degree-n polynomials f, g over GF(q) are equivalent when
g = u(f(v(X))) for degree-one polynomials u, v with nonzero leading
coefficient.  Every class contains *normalized* members (monic with constant
term 0); the left factor u can always be spent to normalize, so classes
correspond to orbits of the q^(n-1) normalized polynomials under the right
substitution action f -> normalize(f(aX+b)).

``canonical_poly`` picks the orbit member whose descending coefficient tuple
is lexicographically least; ``classify_all`` walks all orbits and reports
each canonical representative with its orbit size.

For n <= 5 the classes organize into short parametric families (rows such as
"X^4 + a*(X^2+X) for a nonzero", with a running through fixed coset
representatives C_i of the i-th powers in the unit group where only the coset
matters).  ``table_families`` builds the family members for the residue class
of q and ``verify_table`` checks that they are pairwise inequivalent and
exhaust all classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ffrat import counting
from ffrat.gf import FieldCtx, mult_order
from ffrat.polyring import NEG_INFINITY, Poly, affine_substitute
from ffrat.ratmap import (BudgetExceededError, DEFAULT_KEY_BUDGET, RationalMap,
                          normalize)


def left_normalize(f: Poly) -> Poly:
    """The unique monic, constant-term-0 polynomial u(f) with u affine."""
    if f.degree < 1:
        raise ValueError("left normalization needs degree >= 1")
    cs = f.coeffs
    if cs[-1] != 1:
        inv = f.field.inv(cs[-1])
        mul = f.field.mul
        cs = tuple(mul(inv, c) for c in cs)
    return Poly._make(f.field, (0,) + cs[1:])


def _normalized_raw(F: FieldCtx, coeffs: list[int]) -> tuple[int, ...]:
    # coeffs ascending, full length, nonzero lead; returns normalized tuple.
    lead = coeffs[-1]
    if lead != 1:
        inv = F.inv(lead)
        mul = F.mul
        coeffs = [mul(inv, c) for c in coeffs]
    coeffs[0] = 0
    return tuple(coeffs)


def _substitute_raw(F: FieldCtx, coeffs, a: int, b: int) -> list[int]:
    # Horner form of f(aX + b) on a full ascending coefficient list.
    add, mul = F.add, F.mul
    res = [coeffs[-1]]
    for c in reversed(coeffs[:-1]):
        new = [0] * (len(res) + 1)
        for i, r in enumerate(res):
            if r:
                if b:
                    new[i] = add(new[i], mul(r, b))
                new[i + 1] = mul(r, a)
        new[0] = add(new[0], c)
        res = new
    return res


def normalized_polys(F: FieldCtx, n: int) -> list[tuple[int, ...]]:
    """Ascending coefficient tuples of the q^(n-1) normalized polynomials."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    return [(0,) + mid + (1,) for mid in product(range(F.q), repeat=n - 1)]


def canonical_poly(f: Poly) -> Poly:
    """Lexicographically least normalized member of the class of f,
    comparing coefficients from the top degree down."""
    F = f.field
    if f.degree < 1:
        raise ValueError("classification needs degree >= 1")
    base = left_normalize(f)
    best = None
    best_key = None
    for a in F.units:
        for b in F.elements:
            cand = _normalized_raw(F, _substitute_raw(F, base.coeffs, a, b))
            key = cand[::-1]
            if best_key is None or key < best_key:
                best_key = key
                best = cand
    return Poly._make(F, best)


@dataclass(frozen=True)
class PolyClassRep:
    """One equivalence class: its canonical member, the number of normalized
    polynomials in the class, and the table family it instantiates (None when
    no family table covers this degree)."""
    canon: Poly
    orbit_size: int
    family_tag: str | None = None


def classify_all(F: FieldCtx, n: int,
                 budget: int = DEFAULT_KEY_BUDGET) -> list[PolyClassRep]:
    """All classes of degree-n polynomials, sorted by canonical member.

    Orbit sizes sum to q^(n-1).  Classes are found by orbit closure under
    the generating substitutions X -> gX (g the field generator) and
    X -> X+1, so each normalized polynomial is visited exactly once.
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    q = F.q
    if q ** (n - 1) > budget:
        raise BudgetExceededError(
            "q=%d n=%d needs %d polynomials, budget is %d" % (q, n, q ** (n - 1), budget))
    gens = [(F.generator, 0), (1, 1)]
    seen: set[tuple[int, ...]] = set()
    found: list[tuple[tuple[int, ...], int]] = []
    for start in normalized_polys(F, n):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for a, b in gens:
                img = _normalized_raw(F, _substitute_raw(F, cur, a, b))
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        seen |= orbit
        found.append((min(tup[::-1] for tup in orbit)[::-1], len(orbit)))

    tags = _family_tag_map(F, n) if n <= 5 else {}
    reps = [PolyClassRep(Poly._make(F, canon), size, tags.get(canon))
            for canon, size in found]
    reps.sort(key=lambda r: r.canon.coeffs[::-1])
    return reps


# -- coset representatives and family tables -------------------------------


def coset_representatives(F: FieldCtx, i: int) -> list[int]:
    """Representatives of the cosets of the i-th powers in the unit group,
    chosen greedily by element index (the first is always 1)."""
    if i < 1:
        raise ValueError("power must be at least 1")
    powers = {F.pow(u, i) for u in F.units}
    reps = []
    covered: set[int] = set()
    for u in F.units:
        if u not in covered:
            reps.append(u)
            covered |= {F.mul(u, h) for h in powers}
    return reps


def least_nonsquare(F: FieldCtx) -> int:
    """The least-index unit that is not a square; q must be odd."""
    if F.q % 2 == 0:
        raise ValueError("every element of an even-order field is a square")
    squares = {F.mul(u, u) for u in F.units}
    for u in F.units:
        if u not in squares:
            return u
    raise AssertionError("no nonsquare found")


def _mono(F: FieldCtx, n: int, lower_terms: dict[int, int]) -> Poly:
    cs = [0] * (n + 1)
    cs[n] = 1
    for deg, c in lower_terms.items():
        cs[deg] = c
    return Poly(F, cs)


def table_families(F: FieldCtx, n: int) -> list[tuple[str, list[Poly]]]:
    """The representative families for degree n <= 5, as (tag, members).

    The rows depend only on the residue of q modulo 6 or 12 (and on the
    characteristic for small primes); within a row the parameters run over
    all of GF(q), its units, or the coset representatives C_i.
    """
    q, p = F.q, F.p
    units = list(F.units)
    everything = list(F.elements)
    c2 = coset_representatives(F, 2)
    c3 = coset_representatives(F, 3)
    c4 = coset_representatives(F, 4)

    if n == 1:
        return [("X", [Poly.x(F)])]

    if n == 2:
        if p == 2:
            return [("X^2+X", [_mono(F, 2, {1: 1})]),
                    ("X^2", [_mono(F, 2, {})])]
        return [("X^2", [_mono(F, 2, {})])]

    if n == 3:
        if p == 2:
            return [("X^3+X", [_mono(F, 3, {1: 1})]),
                    ("X^3", [_mono(F, 3, {})])]
        if p == 3:
            return [("X^3+X^2", [_mono(F, 3, {2: 1})]),
                    ("X^3+a*X, a in C_2", [_mono(F, 3, {1: a}) for a in c2]),
                    ("X^3", [_mono(F, 3, {})])]
        return [("X^3+a*X, a in C_2", [_mono(F, 3, {1: a}) for a in c2]),
                ("X^3", [_mono(F, 3, {})])]

    if n == 4:
        r = q % 6
        if r == 1:
            return [("X^4+a*(X^2+X), a nonzero",
                     [_mono(F, 4, {2: a, 1: a}) for a in units]),
                    ("X^4+a*X^2, a in C_2", [_mono(F, 4, {2: a}) for a in c2]),
                    ("X^4+a*X, a in C_3", [_mono(F, 4, {1: a}) for a in c3]),
                    ("X^4", [_mono(F, 4, {})])]
        if r == 2:
            return [("X^4+X^3+a*X, a in GF(q)",
                     [_mono(F, 4, {3: 1, 1: a}) for a in everything]),
                    ("X^4+X^2+a*X, a in GF(q)",
                     [_mono(F, 4, {2: 1, 1: a}) for a in everything]),
                    ("X^4+X", [_mono(F, 4, {1: 1})]),
                    ("X^4", [_mono(F, 4, {})])]
        if r in (3, 5):
            return [("X^4+a*(X^2+X), a nonzero",
                     [_mono(F, 4, {2: a, 1: a}) for a in units]),
                    ("X^4+a*X^2, a in C_2", [_mono(F, 4, {2: a}) for a in c2]),
                    ("X^4+X", [_mono(F, 4, {1: 1})]),
                    ("X^4", [_mono(F, 4, {})])]
        if r == 4:
            return [("X^4+X^3+a*X, a in GF(q)",
                     [_mono(F, 4, {3: 1, 1: a}) for a in everything]),
                    ("X^4+X^2+a*X, a in GF(q)",
                     [_mono(F, 4, {2: 1, 1: a}) for a in everything]),
                    ("X^4+a*X, a in C_3", [_mono(F, 4, {1: a}) for a in c3]),
                    ("X^4", [_mono(F, 4, {})])]
        raise AssertionError("impossible residue %d mod 6" % r)

    if n == 5:
        r = q % 12
        if r == 1 and p == 5:
            return [("X^5+X^4+a*X^2+b*X, a,b in GF(q)",
                     [_mono(F, 5, {4: 1, 2: a, 1: b})
                      for a in everything for b in everything]),
                    ("X^5+a*X^3+b*X, a in C_2, b in GF(q)",
                     [_mono(F, 5, {3: a, 1: b}) for a in c2 for b in everything]),
                    ("X^5+a*X^2, a in C_3", [_mono(F, 5, {2: a}) for a in c3]),
                    ("X^5+a*X, a in C_4", [_mono(F, 5, {1: a}) for a in c4]),
                    ("X^5", [_mono(F, 5, {})])]
        if r == 1:
            return [("X^5+a*(X^3+X^2)+b*X, a nonzero, b in GF(q)",
                     [_mono(F, 5, {3: a, 2: a, 1: b})
                      for a in units for b in everything]),
                    ("X^5+a*X^3+b*X, a in C_2, b in GF(q)",
                     [_mono(F, 5, {3: a, 1: b}) for a in c2 for b in everything]),
                    ("X^5+a*(X^2+X), a nonzero",
                     [_mono(F, 5, {2: a, 1: a}) for a in units]),
                    ("X^5+a*X^2, a in C_3", [_mono(F, 5, {2: a}) for a in c3]),
                    ("X^5+a*X, a in C_4", [_mono(F, 5, {1: a}) for a in c4]),
                    ("X^5", [_mono(F, 5, {})])]
        if r in (2, 8):
            return [("X^5+a*(X^3+X^2)+b*X, a nonzero, b in GF(q)",
                     [_mono(F, 5, {3: a, 2: a, 1: b})
                      for a in units for b in everything]),
                    ("X^5+X^3+a*X, a in GF(q)",
                     [_mono(F, 5, {3: 1, 1: a}) for a in everything]),
                    ("X^5+X^2+a*X, a in GF(q)",
                     [_mono(F, 5, {2: 1, 1: a}) for a in everything]),
                    ("X^5+X", [_mono(F, 5, {1: 1})]),
                    ("X^5", [_mono(F, 5, {})])]
        if r in (3, 11):
            return [("X^5+a*(X^3+X^2)+b*X, a nonzero, b in GF(q)",
                     [_mono(F, 5, {3: a, 2: a, 1: b})
                      for a in units for b in everything]),
                    ("X^5+a*X^3+b*X, a in C_2, b in GF(q)",
                     [_mono(F, 5, {3: a, 1: b}) for a in c2 for b in everything]),
                    ("X^5+X^2+a*X, a in GF(q)",
                     [_mono(F, 5, {2: 1, 1: a}) for a in everything]),
                    ("X^5+a*X, a in C_2", [_mono(F, 5, {1: a}) for a in c2]),
                    ("X^5", [_mono(F, 5, {})])]
        if r == 4:
            return [("X^5+a*(X^3+X^2)+b*X, a nonzero, b in GF(q)",
                     [_mono(F, 5, {3: a, 2: a, 1: b})
                      for a in units for b in everything]),
                    ("X^5+X^3+a*X, a in GF(q)",
                     [_mono(F, 5, {3: 1, 1: a}) for a in everything]),
                    ("X^5+a*(X^2+X), a nonzero",
                     [_mono(F, 5, {2: a, 1: a}) for a in units]),
                    ("X^5+a*X^2, a in C_3", [_mono(F, 5, {2: a}) for a in c3]),
                    ("X^5+X", [_mono(F, 5, {1: 1})]),
                    ("X^5", [_mono(F, 5, {})])]
        if r == 5 and p == 5:
            return [("X^5+X^4+a*X^2+b*X, a,b in GF(q)",
                     [_mono(F, 5, {4: 1, 2: a, 1: b})
                      for a in everything for b in everything]),
                    ("X^5+a*X^3+b*X, a in C_2, b in GF(q)",
                     [_mono(F, 5, {3: a, 1: b}) for a in c2 for b in everything]),
                    ("X^5+X^2", [_mono(F, 5, {2: 1})]),
                    ("X^5+a*X, a in C_4", [_mono(F, 5, {1: a}) for a in c4]),
                    ("X^5", [_mono(F, 5, {})])]
        if r in (5, 7, 9):
            rows = [("X^5+a*(X^3+X^2)+b*X, a nonzero, b in GF(q)",
                     [_mono(F, 5, {3: a, 2: a, 1: b})
                      for a in units for b in everything]),
                    ("X^5+a*X^3+b*X, a in C_2, b in GF(q)",
                     [_mono(F, 5, {3: a, 1: b}) for a in c2 for b in everything])]
            if r == 7:
                rows += [("X^5+a*(X^2+X), a nonzero",
                          [_mono(F, 5, {2: a, 1: a}) for a in units]),
                         ("X^5+a*X^2, a in C_3", [_mono(F, 5, {2: a}) for a in c3]),
                         ("X^5+a*X, a in C_2", [_mono(F, 5, {1: a}) for a in c2]),
                         ("X^5", [_mono(F, 5, {})])]
            else:
                rows += [("X^5+X^2+a*X, a in GF(q)",
                          [_mono(F, 5, {2: 1, 1: a}) for a in everything]),
                         ("X^5+a*X, a in C_4", [_mono(F, 5, {1: a}) for a in c4]),
                         ("X^5", [_mono(F, 5, {})])]
            return rows
        raise AssertionError("impossible residue %d mod 12" % r)

    raise ValueError("no representative table for degree %d" % n)


def _family_tag_map(F: FieldCtx, n: int) -> dict[tuple[int, ...], str]:
    tags: dict[tuple[int, ...], str] = {}
    for tag, members in table_families(F, n):
        for member in members:
            tags[canonical_poly(member).coeffs] = tag
    return tags


def verify_table(F: FieldCtx, n: int) -> bool:
    """Check the degree-n family table against the closed-form class count:
    members must be pairwise inequivalent and exactly exhaust the classes."""
    families = table_families(F, n)
    canons = [canonical_poly(member).coeffs
              for _, members in families for member in members]
    expected = counting.count_polynomial_classes(F.q, n)
    lowdeg = counting.count_polynomial_classes_lowdeg(F.q, n)
    return len(canons) == expected == lowdeg and len(set(canons)) == len(canons)


def degree2_rational_reps(F: FieldCtx) -> list[RationalMap]:
    """The two classes of degree-2 rational maps: X^2 and X^2+X for even q,
    X^2 and (X^2+b)/X with b the least nonsquare for odd q."""
    x2 = Poly.monomial(F, 2)
    one = Poly.one(F)
    if F.q % 2 == 0:
        return [normalize(x2, one), normalize(Poly(F, (0, 1, 1)), one)]
    b = least_nonsquare(F)
    return [normalize(x2, one), normalize(Poly(F, (b, 0, 1)), Poly.x(F))]
