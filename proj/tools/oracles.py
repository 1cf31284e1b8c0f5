#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Recomputes the reference values frozen into the unit tests (mpmath, 50 digits)."""
import itertools
import math

from mpmath import mp, mpf, erfc, sqrt, exp, log, npdf, findroot

mp.dps = 50


def sf(x):
    return erfc(mpf(x) / sqrt(2)) / 2


def quantile(alpha):
    return findroot(lambda z: sf(z) - alpha, 1.0)


def mills(z):
    return z * sf(z) / npdf(z)


def main():
    print("Phi(1.959964)      ", 1 - sf("1.959964"))
    print("log Phi(-40)       ", log(sf(40)))
    print("log Q(37)          ", log(sf(37)))
    for a in ("0.025", "1e-4", "0.05"):
        print(f"z_{a:<17}", quantile(mpf(a)))
    print("mills(10), (1)     ", mills(mpf(10)), mills(mpf(1)))
    q2 = sf(2)
    print("Q(2)               ", q2)
    print("studentised g=1    ", q2 * exp(-mpf(8) / 30))
    print("standardised g=1   ", q2 * (1 + mpf(8) / 60))
    print("noncentral         ", sf(1) * exp(-(16 - 12 + 1) * mpf("0.5") / 60))
    z05 = quantile(mpf("0.05"))
    t = z05 * (1 - mpf("0.894") * z05 / 30)
    print("skew quantile      ", t)
    print("power g=0          ", sf(z05 - 1))
    g = mpf("0.8")
    t = z05 * (1 - g * z05 / 30)
    print("power g=0.8        ", mpf("0.05") * exp((3 * t * t - 1) * g / 60) * sf(t - 1) / sf(t))
    print("rho_0.5(0.6)       ", (sqrt(mpf("0.5")) - sqrt(mpf("0.15"))) ** 2)
    print("tau(r=.25, p=1e4)  ", sqrt(2 * mpf("0.25") * log(mpf(10) ** 4)))
    print("alpha0(100, 1e4)   ", 100 * log(mpf(10) ** 4) / 10 ** 4)

    # Bootstrap-t law of the centred sample {-1, 0, 1}.
    atoms = {}
    for r in itertools.product((-1, 0, 1), repeat=3):
        if len(set(r)) == 1:
            continue
        m = sum(r) / 3
        s = math.sqrt(sum((v - m) ** 2 for v in r) / 3)
        key = round(math.sqrt(3) * m / s, 12)
        atoms[key] = atoms.get(key, 0) + 1
    print("n=3 atoms          ", {k: v / 24 for k, v in sorted(atoms.items())})


if __name__ == "__main__":
    main()
