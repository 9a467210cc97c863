"""Exhaustive search for a unit eps2 of K1 = Q(sqrt(3d), theta), theta^3 = 3 theta - 1,
with eps2 * tau(eps2) * tau^2(eps2) = eps0 (d = 2, eps0 = 5 + 2 sqrt 6).
tau(theta) = theta^2 - 2. Coordinates: c[i][j] * theta^i * sqrt(m)^j.
"""
from itertools import product

M = 6


def tmul(p, q):  # polynomials in theta, length 3, reduce theta^3 = 3 theta - 1
    r = [0] * 5
    for i in range(3):
        for j in range(3):
            r[i + j] += p[i] * q[j]
    for k in (4, 3):
        c = r[k]
        r[k] = 0
        r[k - 2] += 3 * c
        r[k - 3] -= c
    return r[:3]


def mul(x, y):  # x = (A, B) meaning A + B sqrt(M)
    a = tmul(x[0], y[0])
    b = tmul(x[1], y[1])
    c = tmul(x[0], y[1])
    d = tmul(x[1], y[0])
    return ([a[i] + M * b[i] for i in range(3)], [c[i] + d[i] for i in range(3)])


T2 = [-2, 0, 1]  # theta^2 - 2


def tau_poly(p):
    t = tmul(T2, T2)
    return [p[0] + p[1] * T2[0] + p[2] * t[0], p[1] * T2[1] + p[2] * t[1], p[1] * T2[2] + p[2] * t[2]]


def tau(x):
    return (tau_poly(x[0]), tau_poly(x[1]))


R = 1
found = []
for c in product(range(-R, R + 1), repeat=6):
    x = (list(c[:3]), list(c[3:]))
    n = mul(mul(x, tau(x)), tau(tau(x)))
    if n[0][1:] == [0, 0] and n[1][1:] == [0, 0] and (n[0][0], n[1][0]) == (5, 2):
        e1n = None
        found.append(c)
print(len(found), "solutions; first few:", found[:6])


# Exact check of a candidate found by the numeric scan (coordinates over 1/3 Z).
from fractions import Fraction as Fr
eps2 = ([Fr(9, 3), Fr(0), Fr(-3, 3)], [Fr(-11, 3), Fr(2, 3), Fr(4, 3)])
n = mul(mul(eps2, tau(eps2)), tau(tau(eps2)))
print("N(eps2) =", n)
eps0_inv = ([Fr(5), Fr(0), Fr(0)], [Fr(-2), Fr(0), Fr(0)])
eps1 = mul(mul(mul(eps2, eps2), tau(tau(eps2))), eps0_inv)
print("eps1 =", eps1)
print("check eps1 * tau(eps2) == eps2:", mul(eps1, tau(eps2)) == eps2)
