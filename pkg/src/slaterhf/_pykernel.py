"""Pure-Python closed-form integral kernel.

Every radial function in the basis is a short sum of terms
``c * r**n * exp(-z * r)``.  One- and two-electron radial integrals then
reduce to finite sums over the elementary integral

    I(m, p; n, q; l) = int int r1**m e**(-p r1) r2**n e**(-q r2)
                       * r_<**l / r_>**(l + 1) dr1 dr2

which splits into the regions ``r2 < r1`` and ``r1 < r2``.  On each region
the inner integral is an upper incomplete gamma function of integer order,
i.e. an exponential times a polynomial, so the outer integral is a sum of
factorial ratios.  All terms of that sum are positive.

This module mirrors ``_ckernel.pyx`` line for line and is used whenever
the compiled extension is unavailable.
"""

from math import sqrt

FACT = [1.0]
for _k in range(1, 40):
    FACT.append(FACT[-1] * _k)
del _k

N_VALUES = 16


def _half(m, p, n, q, l):
    # Region r2 < r1: int dr2 r2^(n+l) e^(-q r2) int_{r2}^inf r1^(m-l-1) e^(-p r1) dr1
    a = m - l - 1
    if a < 0:
        raise ValueError("radial power too low for multipole order")
    s = p + q
    nl = n + l
    total = 0.0
    pk = 1.0 / p ** (a + 1)  # p^(k - a - 1)
    sk = 1.0 / s ** (nl + 1)  # s^-(nl + k + 1)
    for k in range(a + 1):
        total += FACT[nl + k] / FACT[k] * pk * sk
        pk *= p
        sk /= s
    return FACT[a] * total


def pair_integral(m, p, n, q, l):
    """Two-region radial integral ``I(m, p; n, q; l)`` in closed form."""
    return _half(m, p, n, q, l) + _half(n, q, m, p, l)


def _radials(alpha, beta, gamma):
    n2s = 2.0 * sqrt(3.0 * beta**5 / (alpha * alpha - alpha * beta + beta * beta))
    r1s = ((2.0 * alpha**1.5, 0, alpha),)
    r2s = ((n2s, 0, beta), (-n2s * (alpha + beta) / 3.0, 1, beta))
    r2p = ((2.0 * gamma**2.5 / sqrt(3.0), 1, gamma),)
    return r1s, r2s, r2p


def _product(f, g):
    # f(r) g(r) r^2 as a term list
    return [(c * d, n + m + 2, z + y) for c, n, z in f for d, m, y in g]


def _two_electron(l, da, db):
    total = 0.0
    for c, m, p in da:
        for d, n, q in db:
            total += c * d * pair_integral(m, p, n, q, l)
    return total


def _moment(terms, k):
    # sum over term pairs of c d int r^(n + m + k) e^(-(z + y) r) dr
    total = 0.0
    for c, n, z in terms:
        for d, m, y in terms:
            e = n + m + k
            total += c * d * FACT[e] / (z + y) ** (e + 1)
    return total


def _kinetic(terms, l):
    deriv = []
    for c, n, z in terms:
        if n:
            deriv.append((c * n, n - 1, z))
        deriv.append((-c * z, n, z))
    t = _moment(deriv, 2)
    if l:
        t += l * (l + 1) * _moment(terms, 0)
    return 0.5 * t


def slater_values(alpha, beta, gamma):
    """All exponent-dependent radial quantities, in the fixed kernel order.

    Returns a tuple of 16 floats:
    kinetic and ``<1/r>`` for 1s, 2s, 2p; F0 for 1s1s, 2s2s, 1s2s, 1s2p,
    2s2p, 2p2p; F2 for 2p2p; G0 for 1s2s; G1 for 1s2p and 2s2p.
    """
    r1s, r2s, r2p = _radials(alpha, beta, gamma)
    d1s = _product(r1s, r1s)
    d2s = _product(r2s, r2s)
    d2p = _product(r2p, r2p)
    x12 = _product(r1s, r2s)
    x1p = _product(r1s, r2p)
    x2p = _product(r2s, r2p)
    return (
        _kinetic(r1s, 0),
        _moment(r1s, 1),
        _kinetic(r2s, 0),
        _moment(r2s, 1),
        _kinetic(r2p, 1),
        _moment(r2p, 1),
        _two_electron(0, d1s, d1s),
        _two_electron(0, d2s, d2s),
        _two_electron(0, d1s, d2s),
        _two_electron(0, d1s, d2p),
        _two_electron(0, d2s, d2p),
        _two_electron(0, d2p, d2p),
        _two_electron(2, d2p, d2p),
        _two_electron(0, x12, x12),
        _two_electron(1, x1p, x1p),
        _two_electron(1, x2p, x2p),
    )
