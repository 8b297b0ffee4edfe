"""Class-count tables for small fields and degrees.

Prints the number of equivalence classes of degree-n rational maps under
fractional-linear substitution on both sides, and of degree-n polynomials
under affine substitution, for every prime power q <= 9.  Each entry is
computed twice: from the general divisor-sum formula and from the short
per-residue case tables, which must agree wherever the case tables apply.

Run with:  python3 demos/count_tables.py
"""

from __future__ import annotations

from ffrat import counting

QS = [2, 3, 4, 5, 7, 8, 9]


def print_table(title, ns, general, cases):
    print(title)
    header = "  q  " + "".join("%10s" % ("n=%d" % n) for n in ns)
    print(header)
    print("  " + "-" * (len(header) - 2))
    for q in QS:
        cells = []
        for n in ns:
            value = general(q, n)
            if cases(q, n) != value:
                raise AssertionError("case table disagrees at q=%d n=%d" % (q, n))
            cells.append("%10d" % value)
        print("  %-3d%s" % (q, "".join(cells)))
    print()


def main():
    print_table("Rational maps of degree n over GF(q), up to substitution",
                [1, 2, 3, 4],
                counting.count_rational_classes,
                counting.count_rational_classes_lowdeg)
    print_table("Polynomials of degree n over GF(q), up to affine substitution",
                [1, 2, 3, 4, 5],
                counting.count_polynomial_classes,
                counting.count_polynomial_classes_lowdeg)

    # The rational count grows like q^(2n-3) / (q^2 - 1): the orbit space is
    # dominated by maps with trivial stabilizer.  Degree 6 over GF(9):
    q, n = 9, 6
    total = counting.count_rational_classes(q, n)
    keys = q ** (2 * (n - 1))
    group = (q * q - 1) * (q * q - q)
    print("Degree %d over GF(%d): %d classes from %d subfield keys" % (n, q, total, keys))
    print("free-orbit estimate %d / %d = %.1f" % (keys, group // (q - 1),
                                                  keys / (group // (q - 1))))


if __name__ == "__main__":
    main()
