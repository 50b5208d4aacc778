#!/usr/bin/env python3
"""Full braiding report at p = 2: quasitriangular checks, ribbon checks,
ribbon scalars on the irreducibles, and a monodromy sanity pass."""

from uqslcat import linalg
from uqslcat.braiding import (monodromy, ribbon_scalars, verify_quasitriangular,
                              verify_ribbon)
from uqslcat.qmodules import coerce_field, irreducible, tensor


def main():
    print("quasitriangular structure:")
    for k, v in verify_quasitriangular(2).items():
        print(f"  {k}: {'pass' if v else 'FAIL'}")
    print("ribbon structure:")
    for k, v in verify_ribbon(2).items():
        print(f"  {k}: {'pass' if v else 'FAIL'}")
    print("ribbon scalars:")
    for k, v in ribbon_scalars(2).items():
        print(f"  {k}: {v.to_string()}   (numerically {v.to_complex():.4f})")
    mods = [irreducible(2, a, s) for a in (1, -1) for s in (1, 2)]
    all_ok = True
    for a in mods:
        for b in mods:
            m = monodromy(a, b)
            tt = coerce_field(tensor(a, b), 8)
            for gen in ("E", "F", "K"):
                g = tt.mat(gen)
                if not linalg.mat_eq(linalg.mat_mul(m, g), linalg.mat_mul(g, m)):
                    all_ok = False
    print(f"monodromy commutes with the action on all irreducible pairs: {'pass' if all_ok else 'FAIL'}")


if __name__ == "__main__":
    main()
