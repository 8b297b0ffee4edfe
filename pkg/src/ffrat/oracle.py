"""Brute-force verification engine.

Everything in ``counting`` has an independent enumeration mirror here:

* conjugacy classes of the invertible 2x2 matrices over GF(q), with their
  centralizer orders, built directly from eigenvalue data;
* per-class fixed-subfield counts by walking every subfield key;
* Burnside averages and explicit orbit closures for both the rational and
  the polynomial action;
* direct enumerations of the coprime-pair and self-dual series.

``verify_grid`` packages the comparisons into a report of named checks, one
expected/actual pair per check, suitable for JSON serialization.  Cells whose
enumeration would exceed the budget are skipped and counted, never failed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from ffrat import classify, counting
from ffrat.gf import (ExtFieldCtx, FieldCtx, field_of_order, make_ext,
                      mult_order)
from ffrat.polyring import (Poly, conj_reverse, gcd, monic_polys, polys_upto,
                            self_dual_scalar)
from ffrat.ratmap import (BudgetExceededError, DEFAULT_KEY_BUDGET,
                          MoebiusTransform, SubfieldKey, enumerate_subfield_keys,
                          key_image, normalize, subfield_key, substitution_matrix)

VERIFY_KINDS = ("fix-formulas", "frakN", "frakM", "appendix-lemmas")


@dataclass(frozen=True)
class ConjClassRep:
    """One conjugacy class of invertible 2x2 matrices.

    kind is "central", "split" (distinct eigenvalues in GF(q)), "nonsplit"
    (conjugate eigenvalues in GF(q^2) only), or "unipotent" (one repeated
    eigenvalue, nondiagonalizable).  params identifies the class within its
    kind; matrix is a representative as a row-major (a, b, c, d) tuple.
    """
    kind: str
    params: tuple[int, ...]
    matrix: tuple[int, int, int, int]
    centralizer: int

    def moebius(self, F: FieldCtx) -> MoebiusTransform:
        return MoebiusTransform(F, self.matrix)


def enumerate_classes(F: FieldCtx) -> list[ConjClassRep]:
    """All q^2 - 1 conjugacy classes, deterministic order."""
    q = F.q
    out = []
    for a in F.units:
        out.append(ConjClassRep("central", (a,), (a, 0, 0, a),
                                q * (q - 1) ** 2 * (q + 1)))
    for a in F.units:
        for b in F.units:
            if a < b:
                out.append(ConjClassRep("split", (a, b), (a, 0, 0, b),
                                        (q - 1) ** 2))
    for t in F.elements:
        for s in F.units:
            # X^2 - tX + s irreducible over GF(q): no root.
            if all(F.add(F.sub(F.mul(x, x), F.mul(t, x)), s) for x in F.elements):
                out.append(ConjClassRep("nonsplit", (t, s),
                                        (t, F.neg(s), 1, 0), q * q - 1))
    for a in F.units:
        out.append(ConjClassRep("unipotent", (a,), (a, a, 0, a), q * (q - 1)))
    if len(out) != q * q - 1:
        raise AssertionError("expected %d classes, found %d" % (q * q - 1, len(out)))
    return out


def nonsplit_twist_order(ctx: ExtFieldCtx, t: int, s: int) -> int:
    """For an irreducible X^2 - tX + s over GF(q) with root x in GF(q^2),
    the order of conj(x)/x; always divides q + 1 and exceeds 1."""
    E = ctx.ext
    te, se = ctx.embed(t), ctx.embed(s)
    for x in E.elements:
        if E.add(E.sub(E.mul(x, x), E.mul(te, x)), se) == 0:
            d = mult_order(E, E.div(ctx.frobenius(x), x))
            if (ctx.base.q + 1) % d or d < 2:
                raise AssertionError("twist order %d invalid" % d)
            return d
    raise ValueError("X^2 - %d*X + %d has no root in the extension" % (t, s))


def expected_fix(F: FieldCtx, n: int, rep: ConjClassRep,
                 ctx: ExtFieldCtx | None = None) -> int:
    """Closed-form fixed-subfield count for one conjugacy class."""
    q = F.q
    if rep.kind == "central":
        return counting.fix_central(q, n)
    if rep.kind == "split":
        a, b = rep.params
        return counting.fix_diagonal(q, n, mult_order(F, F.div(a, b)))
    if rep.kind == "nonsplit":
        if ctx is None:
            ctx = make_ext(F)
        t, s = rep.params
        return counting.fix_nonsplit(q, n, nonsplit_twist_order(ctx, t, s))
    if rep.kind == "unipotent":
        return counting.fix_unipotent(q, n)
    raise ValueError("unknown class kind %r" % rep.kind)


def _key_list(F: FieldCtx, n: int, budget: int,
              keys: list[SubfieldKey] | None) -> list[SubfieldKey]:
    if keys is None:
        return list(enumerate_subfield_keys(F, n, budget))
    return keys


def _fix_count(F: FieldCtx, n: int, mat, keys: Iterable[SubfieldKey]) -> int:
    M = substitution_matrix(F, mat, n)
    count = 0
    for key in keys:
        if key_image(key, M, F) == key:
            count += 1
    return count


def fix_count_bruteforce(F: FieldCtx, n: int, rep: ConjClassRep,
                         budget: int = DEFAULT_KEY_BUDGET,
                         keys: list[SubfieldKey] | None = None) -> int:
    """Count the degree-n subfield keys fixed by a class representative by
    transforming every key.  ``keys`` may pass a pre-enumerated list so that
    several classes can share one enumeration."""
    return _fix_count(F, n, rep.matrix, _key_list(F, n, budget, keys))


def burnside_count_rational(F: FieldCtx, n: int,
                            budget: int = DEFAULT_KEY_BUDGET,
                            keys: list[SubfieldKey] | None = None) -> int:
    """Class count as the centralizer-weighted sum of per-class fixed
    counts; must agree with counting.count_rational_classes."""
    keys = _key_list(F, n, budget, keys)
    total = Fraction(0)
    for rep in enumerate_classes(F):
        total += Fraction(_fix_count(F, n, rep.matrix, keys), rep.centralizer)
    if total.denominator != 1:
        raise ArithmeticError("Burnside average is not integral")
    return int(total)


def burnside_count_rational_fullgroup(F: FieldCtx, n: int,
                                      budget: int = DEFAULT_KEY_BUDGET) -> int:
    """Burnside average over every invertible matrix, no conjugacy classes.

    Quadratically slower than burnside_count_rational; a debugging
    cross-check for tiny fields.
    """
    keys = _key_list(F, n, budget, None)
    q = F.q
    total = 0
    group_order = 0
    for a in F.elements:
        for b in F.elements:
            for c in F.elements:
                for d in F.elements:
                    if F.sub(F.mul(a, d), F.mul(b, c)) == 0:
                        continue
                    group_order += 1
                    total += _fix_count(F, n, (a, b, c, d), keys)
    if group_order != (q * q - 1) * (q * q - q):
        raise AssertionError("group order mismatch")
    return counting.exact_div(total, group_order)


def _gl_generators(F: FieldCtx) -> list[tuple[int, int, int, int]]:
    gens = [(1, 1, 0, 1), (1, 0, 1, 1)]
    if F.generator != 1:
        gens.append((F.generator, 0, 0, 1))
    return gens


def orbit_count_rational(F: FieldCtx, n: int,
                         budget: int = DEFAULT_KEY_BUDGET) -> int:
    """Number of orbits of subfield keys under the full substitution group,
    by closure under a generating set."""
    keys = _key_list(F, n, budget, None)
    mats = [substitution_matrix(F, g, n) for g in _gl_generators(F)]
    seen: set[SubfieldKey] = set()
    orbits = 0
    for start in keys:
        if start in seen:
            continue
        orbits += 1
        frontier = [start]
        seen.add(start)
        while frontier:
            cur = frontier.pop()
            for M in mats:
                img = key_image(cur, M, F)
                if img not in seen:
                    seen.add(img)
                    frontier.append(img)
    if len(seen) != len(keys):
        raise AssertionError("orbit closure escaped the key set")
    return orbits


def orbit_labels(F: FieldCtx, n: int,
                 budget: int = DEFAULT_KEY_BUDGET) -> dict[SubfieldKey, int]:
    """Map each subfield key to an orbit index (order of first discovery)."""
    keys = _key_list(F, n, budget, None)
    mats = [substitution_matrix(F, g, n) for g in _gl_generators(F)]
    label: dict[SubfieldKey, int] = {}
    orbits = 0
    for start in keys:
        if start in label:
            continue
        idx = orbits
        orbits += 1
        frontier = [start]
        label[start] = idx
        while frontier:
            cur = frontier.pop()
            for M in mats:
                img = key_image(cur, M, F)
                if img not in label:
                    label[img] = idx
                    frontier.append(img)
    return label


# -- polynomial action ------------------------------------------------------


def orbit_count_poly(F: FieldCtx, n: int,
                     budget: int = DEFAULT_KEY_BUDGET) -> int:
    """Orbits of normalized degree-n polynomials under right substitution by
    invertible affine maps."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if F.q ** (n - 1) > budget:
        raise BudgetExceededError(
            "q=%d n=%d needs %d polynomials, budget is %d"
            % (F.q, n, F.q ** (n - 1), budget))
    gens = [(F.generator, 0), (1, 1)]
    seen: set[tuple[int, ...]] = set()
    orbits = 0
    for start in classify.normalized_polys(F, n):
        if start in seen:
            continue
        orbits += 1
        seen.add(start)
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for a, b in gens:
                img = classify._normalized_raw(F, classify._substitute_raw(F, cur, a, b))
                if img not in seen:
                    seen.add(img)
                    frontier.append(img)
    return orbits


def burnside_count_poly(F: FieldCtx, n: int,
                        budget: int = DEFAULT_KEY_BUDGET) -> int:
    """Polynomial class count as a Burnside average over the q conjugacy
    classes of invertible affine maps (identity, the scalings, X+1)."""
    if F.q ** (n - 1) > budget:
        raise BudgetExceededError(
            "q=%d n=%d needs %d polynomials, budget is %d"
            % (F.q, n, F.q ** (n - 1), budget))
    q = F.q
    omega = classify.normalized_polys(F, n)

    def fixed_by(a: int, b: int) -> int:
        return sum(1 for f in omega
                   if classify._normalized_raw(F, classify._substitute_raw(F, f, a, b)) == f)

    total = Fraction(len(omega), q * (q - 1))
    for a in F.units:
        if a != 1:
            total += Fraction(fixed_by(a, 0), q - 1)
    total += Fraction(fixed_by(1, 1), q)
    if total.denominator != 1:
        raise ArithmeticError("Burnside average is not integral")
    return int(total)


def poly_equivalence_partitions_agree(F: FieldCtx, n: int,
                                      budget: int = DEFAULT_KEY_BUDGET) -> bool:
    """Check that two normalized polynomials are affinely equivalent exactly
    when their subfield keys lie in the same substitution orbit, by comparing
    the two partitions of the normalized polynomials."""
    omega = classify.normalized_polys(F, n)

    affine: dict[tuple[int, ...], int] = {}
    gens = [(F.generator, 0), (1, 1)]
    orbits = 0
    for start in omega:
        if start in affine:
            continue
        idx = orbits
        orbits += 1
        affine[start] = idx
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for a, b in gens:
                img = classify._normalized_raw(F, classify._substitute_raw(F, cur, a, b))
                if img not in affine:
                    affine[img] = idx
                    frontier.append(img)

    labels = orbit_labels(F, n, budget)
    one = Poly.one(F)
    by_affine: dict[int, set[tuple[int, ...]]] = {}
    by_key: dict[int, set[tuple[int, ...]]] = {}
    for f in omega:
        by_affine.setdefault(affine[f], set()).add(f)
        key = subfield_key(normalize(Poly(F, f), one))
        by_key.setdefault(labels[key], set())
        by_key[labels[key]].add(f)

    parts_affine = {frozenset(v) for v in by_affine.values()}
    parts_key = {frozenset(v) for v in by_key.values()}
    return parts_affine == parts_key


# -- direct enumerations of the counting series -----------------------------


def count_coprime_pairs(F: FieldCtx, m: int, n: int) -> int:
    """Enumeration mirror of counting.coprime_monic_pairs."""
    return sum(1 for f in monic_polys(F, m) for g in monic_polys(F, n)
               if gcd(f, g).degree == 0)


def count_coprime_pairs_upto(F: FieldCtx, n: int) -> int:
    """Enumeration mirror of counting.coprime_monic_pairs_upto."""
    return sum(count_coprime_pairs(F, m, n) for m in range(n))


def count_coprime_nonzero_const(F: FieldCtx, m: int, n: int) -> int:
    """Enumeration mirror of counting.coprime_pairs_nonzero_constant."""
    return sum(1 for f in monic_polys(F, m) if f.coeff(0)
               for g in monic_polys(F, n) if gcd(f, g).degree == 0)


def count_rational_functions(F: FieldCtx, n: int) -> int:
    """Enumeration mirror of counting.rational_function_count: reduced pairs
    (P, Q) with Q monic and max degree exactly n."""
    count = 0
    for den_deg in range(n + 1):
        for den in monic_polys(F, den_deg):
            for num in polys_upto(F, n):
                if num.is_zero:
                    continue
                if max(num.degree, den.degree) != n:
                    continue
                if gcd(num, den).degree == 0:
                    count += 1
    return count


def count_self_dual(ctx: ExtFieldCtx, i: int) -> int:
    """Enumeration mirror of counting.self_dual_count."""
    return sum(1 for g in monic_polys(ctx.ext, i)
               if self_dual_scalar(g, ctx) is not None)


def count_reversal_coprime(ctx: ExtFieldCtx, i: int) -> int:
    """Enumeration mirror of counting.reversal_coprime_count."""
    return sum(1 for g in monic_polys(ctx.ext, i)
               if gcd(g, conj_reverse(g, ctx)).degree == 0)


def count_self_dual_coprime_pairs(ctx: ExtFieldCtx, i: int, j: int) -> int:
    """Enumeration mirror of counting.self_dual_coprime_pairs."""
    left = [g for g in monic_polys(ctx.ext, i) if self_dual_scalar(g, ctx) is not None]
    right = [g for g in monic_polys(ctx.ext, j) if self_dual_scalar(g, ctx) is not None]
    return sum(1 for f in left for g in right if gcd(f, g).degree == 0)


# -- verification grid -------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    q: int
    n: int
    expected: int
    actual: int
    passed: bool
    elapsed_ms: int


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)
    skipped: int = 0

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    def to_json_obj(self) -> dict:
        return {
            "checks": [
                {"name": c.name, "q": c.q, "n": c.n,
                 "expected": str(c.expected), "actual": str(c.actual),
                 "pass": c.passed, "elapsed_ms": c.elapsed_ms}
                for c in self.checks
            ],
            "summary": {"total": self.total, "failed": self.failed,
                        "skipped": self.skipped},
        }


def _timed(name: str, q: int, n: int, expected: int, actual_fn) -> CheckResult:
    start = time.perf_counter()
    actual = actual_fn()
    ms = int((time.perf_counter() - start) * 1000)
    return CheckResult(name, q, n, expected, actual, expected == actual, ms)


def _cell_fix_formulas(q: int, n: int, budget: int) -> list[CheckResult]:
    F = field_of_order(q)
    ctx = make_ext(F)
    keys = list(enumerate_subfield_keys(F, n, budget))
    out = []
    for rep in enumerate_classes(F):
        want = expected_fix(F, n, rep, ctx)
        name = "fix-formulas/%s%r" % (rep.kind, rep.params)
        out.append(_timed(name, q, n, want,
                          lambda rep=rep: _fix_count(F, n, rep.matrix, keys)))
    return out


def _cell_frak_n(q: int, n: int, budget: int) -> list[CheckResult]:
    F = field_of_order(q)
    want = counting.count_rational_classes(q, n)
    keys = list(enumerate_subfield_keys(F, n, budget))
    out = [_timed("frakN/burnside", q, n, want,
                  lambda: burnside_count_rational(F, n, budget, keys)),
           _timed("frakN/orbit", q, n, want,
                  lambda: orbit_count_rational(F, n, budget))]
    if n <= 4:
        out.append(_timed("frakN/lowdeg", q, n, want,
                          lambda: counting.count_rational_classes_lowdeg(q, n)))
    return out


def _cell_frak_m(q: int, n: int, budget: int) -> list[CheckResult]:
    F = field_of_order(q)
    want = counting.count_polynomial_classes(q, n)
    out = [_timed("frakM/orbit", q, n, want,
                  lambda: orbit_count_poly(F, n, budget)),
           _timed("frakM/burnside", q, n, want,
                  lambda: burnside_count_poly(F, n, budget))]
    if n <= 5:
        out.append(_timed("frakM/lowdeg", q, n, want,
                          lambda: counting.count_polynomial_classes_lowdeg(q, n)))
    return out


def _cell_appendix(q: int, budget: int) -> list[CheckResult]:
    F = field_of_order(q)
    ctx = make_ext(F)
    out = []
    for m in range(4):
        for n in range(4):
            out.append(_timed("appendix/coprime-pairs[m=%d]" % m, q, n,
                              counting.coprime_monic_pairs(q, m, n),
                              lambda m=m, n=n: count_coprime_pairs(F, m, n)))
    for n in range(1, 4):
        out.append(_timed("appendix/coprime-pairs-upto", q, n,
                          counting.coprime_monic_pairs_upto(q, n),
                          lambda n=n: count_coprime_pairs_upto(F, n)))
        out.append(_timed("appendix/rational-count", q, n - 1,
                          counting.rational_function_count(q, n - 1),
                          lambda n=n: count_rational_functions(F, n - 1)))
    for m in range(4):
        for n in range(4):
            out.append(_timed("appendix/nonzero-const[m=%d]" % m, q, n,
                              counting.coprime_pairs_nonzero_constant(q, m, n),
                              lambda m=m, n=n: count_coprime_nonzero_const(F, m, n)))
    for i in range(4):
        out.append(_timed("appendix/self-dual", q, i,
                          counting.self_dual_count(q, i),
                          lambda i=i: count_self_dual(ctx, i)))
        out.append(_timed("appendix/reversal-coprime", q, i,
                          counting.reversal_coprime_count(q, i),
                          lambda i=i: count_reversal_coprime(ctx, i)))
    for i in range(3):
        for j in range(3):
            out.append(_timed("appendix/self-dual-pairs[i=%d]" % i, q, j,
                              counting.self_dual_coprime_pairs(q, i, j),
                              lambda i=i, j=j: count_self_dual_coprime_pairs(ctx, i, j)))
    for l in range(5):
        want = q ** (2 * l)
        out.append(_timed("appendix/convolution", q, l, want,
                          lambda l=l: sum(counting.self_dual_count(q, i)
                                          * counting.reversal_coprime_count(q, l - i)
                                          for i in range(l + 1))))
    return out


def _run_cell(task) -> tuple[list[CheckResult], int]:
    q, n, kind, budget = task
    try:
        if kind == "fix-formulas":
            return _cell_fix_formulas(q, n, budget), 0
        if kind == "frakN":
            return _cell_frak_n(q, n, budget), 0
        if kind == "frakM":
            return _cell_frak_m(q, n, budget), 0
        if kind == "appendix-lemmas":
            return _cell_appendix(q, budget), 0
        raise ValueError("unknown verification kind %r" % kind)
    except BudgetExceededError:
        return [], 1


def verify_grid(q_list, n_list, kinds=VERIFY_KINDS,
                budget: int = DEFAULT_KEY_BUDGET, jobs: int = 1) -> VerificationReport:
    """Run the named check kinds over a (q, n) grid.

    appendix-lemmas checks do not depend on n and run once per q.  With
    jobs > 1 the cells run in a process pool; results keep the sequential
    order either way.
    """
    for kind in kinds:
        if kind not in VERIFY_KINDS:
            raise ValueError("unknown verification kind %r" % kind)
    tasks = []
    for q in q_list:
        counting.char_and_degree(q)
        for kind in kinds:
            if kind == "appendix-lemmas":
                tasks.append((q, 0, kind, budget))
            else:
                tasks.extend((q, n, kind, budget) for n in n_list)

    if jobs > 1 and len(tasks) > 1:
        import concurrent.futures
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, tasks))
    else:
        results = [_run_cell(t) for t in tasks]

    report = VerificationReport()
    for checks, skipped in results:
        report.checks.extend(checks)
        report.skipped += skipped
    return report
