#!/usr/bin/env python3
"""Newton solve for the complete hyperbolic shapes of a census manifold.

Usage: newton_shapes.py NAME

Works on SnapPy's gluing equations (all but one edge per cusp, plus each
meridian) without using SnapPy's own solver, and prints the
shapes with 17 significant digits.
"""
import cmath
import sys

import numpy as np
import snappy


def solve(name, start=0.5 + 0.8j, steps=100):
    M = snappy.Manifold(name)
    t = M.num_tetrahedra()
    eqs = M.gluing_equations(form="rect")
    # rows: t edges, then meridian and longitude of each cusp; prod z^a (1-z)^b = c
    rows = list(range(t - M.num_cusps())) + [t + 2 * k for k in range(M.num_cusps())]
    A = np.array([[float(x) for x in eqs[r][0]] for r in rows])
    B = np.array([[float(x) for x in eqs[r][1]] for r in rows])
    c = np.array([complex(eqs[r][2]) for r in rows])
    z = np.full(t, start, dtype=complex)
    for _ in range(steps):
        value = np.exp(A @ np.log(z) + B @ np.log(1 - z)) / c
        f = np.log(value)
        jac = A / z - B / (1 - z)
        dz = np.linalg.solve(jac, f)
        z = z - dz
        if np.max(np.abs(dz)) < 1e-15:
            break
    return z


def main():
    name = sys.argv[1] if len(sys.argv) > 1 else "m004"
    for k, z in enumerate(solve(name)):
        print(f"{k} {z.real:.17g} {z.imag:.17g}")


if __name__ == "__main__":
    main()
