"""Dense univariate polynomial arithmetic over an arbitrary field object.

A field object F provides: F.zero, F.one, add, sub, mul, neg, inv,
from_int(n), and structural equality of elements.  Polynomials are tuples of
coefficients in ascending degree with no trailing zeros; () is the zero
polynomial.
"""


def ptrim(F, coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == F.zero:
        coeffs.pop()
    return tuple(coeffs)


def pconst(F, c):
    return () if c == F.zero else (c,)


def pdeg(p):
    return len(p) - 1  # -1 for the zero polynomial


def padd(F, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else F.zero
        y = b[i] if i < len(b) else F.zero
        out.append(F.add(x, y))
    return ptrim(F, out)


def pneg(F, a):
    return tuple(F.neg(c) for c in a)


def psub(F, a, b):
    return padd(F, a, pneg(F, b))


def pmul(F, a, b):
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == F.zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return ptrim(F, out)


def pscale(F, a, c):
    if c == F.zero:
        return ()
    return ptrim(F, [F.mul(x, c) for x in a])


def pdivmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    binv = F.inv(b[-1])
    q = [F.zero] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and any(c != F.zero for c in r):
        while r and r[-1] == F.zero:
            r.pop()
        if len(r) < len(b):
            break
        k = len(r) - len(b)
        c = F.mul(r[-1], binv)
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] = F.sub(r[k + i], F.mul(c, bc))
    return ptrim(F, q), ptrim(F, r)


def pmod(F, a, b):
    return pdivmod(F, a, b)[1]


def pmonic(F, a):
    if not a:
        return a
    return pscale(F, a, F.inv(a[-1]))


def pgcd(F, a, b):
    while b:
        a, b = b, pmod(F, a, b)
    return pmonic(F, a)


def pxgcd(F, a, b):
    """(g, u, v) with u*a + v*b = g, g monic (or zero)."""
    r0, r1 = a, b
    u0, u1 = (F.one,), ()
    v0, v1 = (), (F.one,)
    while r1:
        q, r = pdivmod(F, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, psub(F, u0, pmul(F, q, u1))
        v0, v1 = v1, psub(F, v0, pmul(F, q, v1))
    if r0:
        c = F.inv(r0[-1])
        r0, u0, v0 = pscale(F, r0, c), pscale(F, u0, c), pscale(F, v0, c)
    return r0, u0, v0


def peval(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def pderiv(F, a):
    out = []
    for i, c in enumerate(a[1:], start=1):
        out.append(F.mul(F.from_int(i), c))
    return ptrim(F, out)


def ppow_mod(F, a, e, mod):
    result = (F.one,)
    base = pmod(F, a, mod)
    while e:
        if e & 1:
            result = pmod(F, pmul(F, result, base), mod)
        base = pmod(F, pmul(F, base, base), mod)
        e >>= 1
    return result
