"""Independent oracle for the frozen expected values used by the C++ tests.

Run: python3 tests/oracles/derive_values.py
"""
import itertools
import math

import numpy as np

INDOOR = [
    [6.525, 6.553, 6.527, 6.520, 6.451],
    [9.145, 9.286, 8.969, 9.202, 9.126],
    [12.252, 11.917, 11.427, 11.962, 11.733],
    [15.617, 15.299, 15.045, 15.348, 15.141],
    [17.986, 17.460, 17.126, 17.359, 17.208],
    [20.486, 19.604, 19.278, 19.406, 19.182],
    [23.606, 22.576, 22.247, 22.579, 21.980],
    [25.738, 24.568, 24.125, 24.459, 23.813],
    [28.083, 26.606, 26.150, 26.394, 25.630],
]
OUTDOOR = [
    [6.302, 6.720, 6.258, 6.514, 6.553],
    [8.737, 9.152, 8.537, 8.649, 8.677],
    [10.405, 10.882, 10.250, 10.184, 10.302],
    [12.377, 13.339, 13.004, 13.279, 12.769],
    [13.587, 14.635, 14.438, 14.815, 14.170],
    [14.743, 15.934, 15.723, 16.036, 15.340],
    [16.354, 17.956, 17.696, 18.056, 17.434],
    [17.373, 19.070, 18.878, 19.336, 18.645],
    [18.422, 20.200, 19.983, 20.446, 19.690],
]


def se(table, n, col):
    return 0.0 if n == 0 else table[n - 1][col]


def enumerate_best(table, budget, cols):
    best = None
    for alloc in itertools.product(range(10), repeat=len(cols)):
        if sum(alloc) > budget:
            continue
        total = sum(se(table, n, c) for n, c in zip(alloc, cols))
        key = (round(total, 9), -sum(alloc))
        if best is None or key > best[0]:
            best = (key, alloc, total)
    return best


print("indoor full", enumerate_best(INDOOR, 9, range(5)))
print("outdoor full", enumerate_best(OUTDOOR, 9, range(5)))
print("indoor 7+24", enumerate_best(INDOOR, 9, [0, 4]))
print("partitioned 7|24 @9", max(INDOOR[8][0], INDOOR[8][4]))

c = 299792458.0
print("fspl 1m 7GHz", 20 * math.log10(4 * math.pi * 1.0 * 7e9 / c))
print("octave", 20 * math.log10(2))
print("fbw 7-10", 3 / 8.5, "fbw 7-9", 2 / 8)

# Mask monotonicity / sweep reference: optimum per budget for indoor table.
print("indoor sweep", [round(enumerate_best(INDOOR, b, range(5))[2], 3) for b in range(0, 13)])

# Capacity fixture: 4x4 matrix with entries (r + 1) + (c - r) i scaled by 0.25 plus a twist.
H = np.array([[complex(0.25 * (r + 1) + 0.1 * c, 0.05 * (c - r) + 0.02 * r * c)
               for c in range(4)] for r in range(4)])
rho = 10.0
def oracle_se(M):
    s = np.linalg.svd(M, compute_uv=False)
    return float(np.sum(np.log2(1 + rho * s**2)))
print("fixture full %.15g" % oracle_se(H))
print("fixture 3x3 %.15g" % oracle_se(H[:3, :3]))
print("fixture 1x1 %.15g" % oracle_se(H[:1, :1]))

# build_se_table fixture: 3 users, 2 frequencies, 2x2 matrices, ladder {0,1,2}, rho = 1 (0 dB).
users = {
    1: np.array([[1 + 0j, 0.5j], [0.2, -0.3 + 0.1j]]),
    2: np.array([[0.3 - 0.4j, 0.0], [0.0, 0.8]]),
    3: np.array([[-0.6 + 0.0j, 0.1 + 0.1j], [0.25j, 0.9 - 0.2j]]),
}
rho = 1.0
for f, scale in ((7.0, 1.0), (14.0, 0.5)):
    for n in (1, 2):
        vals = [oracle_se(scale * Hu[:n, :n]) for Hu in users.values()]
        print("table f=%g n=%d mean %.15g" % (f, n, sum(vals) / 3))
