"""Dense univariate polynomials over the rationals.

A polynomial is a list of :class:`~fractions.Fraction` coefficients indexed by
power; the zero polynomial is ``[Fraction(0)]``.  Just enough arithmetic for
Wronskians, determinants with polynomial entries and exact rational root
extraction.
"""

import math
import random
from fractions import Fraction

ZERO = (Fraction(0),)


def trim(p):
    n = len(p)
    while n > 1 and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def is_zero(p):
    return all(c == 0 for c in p)


def degree(p):
    p = trim(p)
    return -1 if is_zero(p) else len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q):
    return add(p, [-c for c in q])


def scale(p, c):
    c = Fraction(c)
    return trim([c * x for x in p])


def mul(p, q):
    if is_zero(p) or is_zero(q):
        return list(ZERO)
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for k, b in enumerate(q):
                out[i + k] += a * b
    return trim(out)


def derivative(p):
    return trim([Fraction(i) * p[i] for i in range(1, len(p))]) if len(p) > 1 else list(ZERO)


def eval_at(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divmod_(p, q):
    if is_zero(q):
        raise ZeroDivisionError("polynomial division by zero")
    p = trim(p)
    q = trim(q)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    rem = list(p)
    dq = len(q) - 1
    lead = q[-1]
    while not is_zero(rem) and len(rem) - 1 >= dq:
        shift = len(rem) - 1 - dq
        c = rem[-1] / lead
        quo[shift] = c
        for i in range(len(q)):
            rem[shift + i] -= c * q[i]
        rem = trim(rem)
    return trim(quo), rem


def gcd(p, q):
    a, b = trim(p), trim(q)
    while not is_zero(b):
        a, b = b, divmod_(a, b)[1]
    if is_zero(a):
        return list(ZERO)
    return scale(a, 1 / a[-1])


def det(matrix):
    """Determinant of a square matrix with polynomial entries.

    Laplace expansion along the first remaining row, memoised on the set of
    unused columns; fine for the small matrices that arise here.
    """
    n = len(matrix)
    if n == 0:
        return [Fraction(1)]
    memo = {}

    def minor(row, colmask):
        if row == n:
            return [Fraction(1)]
        key = colmask
        if key in memo:
            return memo[key]
        acc = list(ZERO)
        sign = 1
        for c in range(n):
            bit = 1 << c
            if not colmask & bit:
                continue
            entry = matrix[row][c]
            if not is_zero(entry):
                term = mul(entry, minor(row + 1, colmask & ~bit))
                acc = add(acc, term if sign > 0 else [-x for x in term])
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, (1 << n) - 1)


# -- integer factorisation (for rational root candidates) --------------------

def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n, rng):
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n):
    """Prime factorisation of a positive integer as a dict prime -> exponent."""
    out = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    rng = random.Random(0xC0FFEE)
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return out


def _divisors(n):
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


def rational_roots(p):
    """Rational roots of ``p`` with multiplicities, as a dict root -> mult.

    Exact: candidates come from the rational root theorem applied to the
    primitive integer model of ``p``; multiplicities by repeated deflation.
    """
    p = trim(p)
    if is_zero(p):
        raise ValueError("zero polynomial has every root")
    den = math.lcm(*(c.denominator for c in p))
    ip = [int(c * den) for c in p]
    g = math.gcd(*ip)
    ip = [c // g for c in ip]
    roots = {}
    k = 0
    while ip[k] == 0:
        k += 1
    if k:
        roots[Fraction(0)] = k
        ip = ip[k:]
    if len(ip) == 1:
        return roots
    cands = {Fraction(s * num, d) for num in _divisors(abs(ip[0]))
             for d in _divisors(abs(ip[-1])) for s in (1, -1)}
    fp = [Fraction(c) for c in ip]
    for r in sorted(cands):
        mult = 0
        while eval_at(fp, r) == 0:
            fp, rem = divmod_(fp, [-r, Fraction(1)])
            assert is_zero(rem)
            mult += 1
        if mult:
            roots[r] = mult
    return roots
