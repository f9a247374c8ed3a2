"""Independent oracle for the frozen expected values in the C++ tests.

Uses numpy only: explicit exp() characters, dense DFT matrices, brute-force
enumeration over the full M^n phase grid (no phase pinning) and over all 2^n
sign patterns. Run: python3 tests/oracle/freeze_values.py
"""
import itertools

import numpy as np


def elements(factors):
    return list(itertools.product(*[range(n) for n in factors]))


def pairing(factors, g, gamma):
    return np.exp(2j * np.pi * sum(a * b / n for a, b, n in zip(g, gamma, factors)))


def sub(factors, a, b):
    return tuple((x - y) % n for x, y, n in zip(a, b, factors))


def a_norm(factors, f):
    els = elements(factors)
    order = len(els)
    lam = [sum(pairing(factors, g, gm) * f[k] for k, gm in enumerate(els)) / order for g in els]
    return sum(abs(v) for v in lam)


def canonical_images(factors, K, I):
    els = elements(factors)
    def delta(t):
        return sum(1 for p in I for q in I if sub(factors, p, q) == t) / len(I)
    return [np.array([delta(sub(factors, t, tj)) for t in els]) for tj in K]


def grid_max(factors, images, M):
    best = 0.0
    for ks in itertools.product(range(M), repeat=len(images)):
        f = sum(np.exp(2j * np.pi * k / M) * psi for k, psi in zip(ks, images))
        best = max(best, a_norm(factors, f))
    return best


def sign_average(a):
    vals = [abs(sum(e * x for e, x in zip(eps, a))) for eps in itertools.product([1, -1], repeat=len(a))]
    return sum(vals) / len(vals), max(vals)


if __name__ == "__main__":
    z8 = [8]
    images = canonical_images(z8, [(0,), (3,)], [(0,), (1,), (2,)])
    print("Z8 K={0,3} canonical psi_1 =", images[0].tolist())
    print("Z8 K={0,3} apply(1,1) =", (images[0] + images[1]).tolist())
    print("Z8 K={0,3} a_norm(psi_j) =", [a_norm(z8, p) for p in images])
    for M in (4, 8, 16):
        print(f"Z8 K={{0,3}} grid_max M={M}: {grid_max(z8, images, M)!r}")
    z2 = [2]
    ident = [np.array([1.0, 0.0]), np.array([0.0, 1.0])]
    print("Z2 identity grid_max M=4:", repr(grid_max(z2, ident, 4)))
    print("Z2 identity grid_max M=6:", repr(grid_max(z2, ident, 6)))
    z2x4 = [2, 4]
    images = canonical_images(z2x4, [(0, 0), (1, 1), (0, 3)], [(0, 0)])
    print("Z2xZ4 K={(0,0),(1,1),(0,3)} I={0} grid_max M=8:", repr(grid_max(z2x4, images, 8)))
    print("khinchin (1,1):", sign_average([1, 1]))
    print("khinchin (1,1,1):", sign_average([1, 1, 1]))
    print("khinchin (1, i, 2-1j):", repr(sign_average([1, 1j, 2 - 1j])[0]))
    print("khinchin (0.5, -1.5, 2, 0.25j):", repr(sign_average([0.5, -1.5, 2, 0.25j])[0]))
