#!/usr/bin/env python3
"""Brute-force reference values frozen into the C++ tests.

Independent of the library: re-implements the SplitMix64 network generator
and computes d_N by enumerating every relation R in X x Y with surjective
projections. Run it to regenerate the constants in test_distance.cpp.
"""
import itertools
import math

MASK = (1 << 64) - 1


def splitmix64(seed):
    state = seed & MASK
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        yield z ^ (z >> 31)


def random_network(n, low, high, seed):
    g = splitmix64(seed)
    return [[low + (high - low) * ((next(g) >> 11) * 2.0 ** -53) for _ in range(n)] for _ in range(n)]


def distortion(rel, wx, wy):
    return max(abs(wx[a][c] - wy[b][d]) for (a, b) in rel for (c, d) in rel)


def brute_force_distance(wx, wy):
    nx, ny = len(wx), len(wy)
    cells = [(i, j) for i in range(nx) for j in range(ny)]
    best = math.inf
    for mask in range(1, 1 << len(cells)):
        rel = [cells[k] for k in range(len(cells)) if mask >> k & 1]
        if {a for a, _ in rel} != set(range(nx)) or {b for _, b in rel} != set(range(ny)):
            continue
        best = min(best, distortion(rel, wx, wy))
    return 0.5 * best


if __name__ == "__main__":
    print("N1(0) vs N2([[0,1],[1,0]]):", brute_force_distance([[0]], [[0, 1], [1, 0]]))
    for sx, sy, nx, ny in [(1, 2, 3, 3), (3, 4, 2, 3), (5, 6, 3, 2), (7, 8, 3, 3)]:
        wx = random_network(nx, 0.0, 1.0, sx)
        wy = random_network(ny, 0.0, 1.0, sy)
        print(f"seeds ({sx},{sy}) sizes ({nx},{ny}): {brute_force_distance(wx, wy)!r}")
    print("random_network(2, 0, 1, 42):", random_network(2, 0.0, 1.0, 42))
