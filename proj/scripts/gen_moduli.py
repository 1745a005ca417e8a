#!/usr/bin/env python3
"""Regenerates src/builtin_moduli.cpp.

For every (p, n) the pinned modulus is the monic primitive polynomial of
degree n whose low coefficients (c_0 .. c_{n-1}), read as a base-p integer
with c_0 least significant, is smallest.
"""
import itertools

PRIMES = [2, 3, 5, 7, 11]
MAX_N = 13


def factor(v):
    out, d = [], 2
    while d * d <= v:
        if v % d == 0:
            out.append(d)
            while v % d == 0:
                v //= d
        d += 1
    if v > 1:
        out.append(v)
    return out


def pmod(a, f, p):
    a = a[:]
    n = len(f) - 1
    for i in range(len(a) - 1, n - 1, -1):
        c = a[i] % p
        if c:
            for j in range(n + 1):
                a[i - n + j] = (a[i - n + j] - c * f[j]) % p
    return [x % p for x in a[:n]] + [0] * max(0, n - len(a))


def pmul(a, b, f, p):
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return pmod(r, f, p)


def ppow(e, f, p):
    n = len(f) - 1
    base = pmod([0, 1] + [0] * n, f, p)
    acc = [1] + [0] * (n - 1)
    while e:
        if e & 1:
            acc = pmul(acc, base, f, p)
        base = pmul(base, base, f, p)
        e >>= 1
    return acc


def is_primitive(f, p):
    n = len(f) - 1
    q1 = p ** n - 1
    one = [1] + [0] * (n - 1)
    if f[0] == 0:
        return False
    if ppow(q1, f, p) != one:
        return False
    return all(ppow(q1 // r, f, p) != one for r in factor(q1))


def smallest(p, n):
    for idx in range(p ** n):
        low = [(idx // p ** j) % p for j in range(n)]
        f = low + [1]
        if is_primitive(f, p):
            return f
    raise RuntimeError


lines = []
for p in PRIMES:
    for n in range(1, MAX_N + 1):
        f = smallest(p, n)
        lines.append("    {%d, %d, {%s}}," % (p, n, ", ".join(map(str, f))))

print("\n".join(lines))
