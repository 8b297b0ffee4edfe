"""Representative galleries for small degrees.

Lists one canonical polynomial per affine-substitution class together with
its orbit size and parametric-family tag, shows the two degree-2 rational
representatives for several fields, and demonstrates that substitution
equivalence of normalized polynomials matches same-subfield equivalence of
their keys.

Run with:  python3 demos/classification_gallery.py
"""

from __future__ import annotations

from ffrat.classify import (canonical_poly, classify_all, degree2_rational_reps,
                            table_families)
from ffrat.gf import field_of_order
from ffrat.oracle import poly_equivalence_partitions_agree
from ffrat.polyring import Poly, poly_str


def polynomial_gallery(q, n):
    F = field_of_order(q)
    reps = classify_all(F, n)
    print("Degree-%d polynomials over GF(%d): %d classes of %d normalized polynomials"
          % (n, q, len(reps), q ** (n - 1)))
    for rep in reps:
        tag = rep.family_tag or "-"
        print("  %-16s orbit %3d   family: %s" % (poly_str(rep.canon),
                                                  rep.orbit_size, tag))
    families = table_families(F, n)
    sizes = ", ".join("%s (%d)" % (tag, len(members)) for tag, members in families)
    print("  family rows: %s" % sizes)
    print()


def main():
    polynomial_gallery(3, 4)
    polynomial_gallery(4, 3)

    print("Degree-2 rational maps (always exactly two classes):")
    for q in (2, 3, 4, 5, 7, 9):
        reps = ", ".join(str(f) for f in degree2_rational_reps(field_of_order(q)))
        print("  GF(%d): %s" % (q, reps))
    print()

    F = field_of_order(3)
    f = Poly(F, (1, 2, 0, 1))          # X^3+2X+1
    g = Poly(F, (0, 2, 0, 2))          # 2X^3+2X
    print("canonical_poly(%s) = %s" % (poly_str(f), poly_str(canonical_poly(f))))
    print("canonical_poly(%s) = %s" % (poly_str(g), poly_str(canonical_poly(g))))
    same = canonical_poly(f) == canonical_poly(g)
    print("equivalent: %s" % same)
    print()

    for q, n in [(2, 3), (3, 3)]:
        ok = poly_equivalence_partitions_agree(field_of_order(q), n)
        print("substitution orbits match subfield-key orbits for q=%d, n=%d: %s"
              % (q, n, ok))
        if not ok:
            raise AssertionError("partition mismatch at q=%d n=%d" % (q, n))


if __name__ == "__main__":
    main()
