#!/usr/bin/env python3
"""Regenerate the high-precision Bessel-K reference table used by the tests.

Writes the table body consumed by crates/core/tests/common/mod.rs. Needs
mpmath (40-digit working precision); run from the repository root:

    python3 scripts/gen_bessel_reference.py > /tmp/bessel_table.rs
"""
import mpmath as mp

mp.mp.dps = 40

ORDERS = [0, 1, 2, 3, 4, 5, 8, 16, 32, 64]
PER_ORDER = 20
X_MAX = 700.0


def x_min_for(nu: int) -> float:
    """Smallest argument keeping K_nu inside the f64 range (< 1e280)."""
    if nu == 0:
        return 1e-8
    lo, hi = 1e-8, 10.0
    for _ in range(200):
        mid = (lo * hi) ** 0.5
        if mp.log(mp.besselk(nu, mp.mpf(mid))) > 280 * mp.log(10):
            lo = mid
        else:
            hi = mid
    return hi * 1.05


def main() -> None:
    for nu in ORDERS:
        xmin = x_min_for(nu)
        for i in range(PER_ORDER):
            x = mp.mpf(xmin) * (mp.mpf(X_MAX) / xmin) ** (mp.mpf(i) / (PER_ORDER - 1))
            xf = float(x)
            k = mp.besselk(nu, mp.mpf(repr(xf)))
            lit = mp.nstr(k, 17, strip_zeros=False)
            if lit.endswith("."):
                lit += "0"
            print(f"    ({nu}, {xf!r}_f64, {lit}_f64),")


if __name__ == "__main__":
    main()
