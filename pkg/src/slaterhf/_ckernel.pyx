# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled closed-form integral kernel; same algorithm as ``_pykernel``."""

from libc.math cimport sqrt, pow

cdef enum:
    MAXT = 4
    NFACT = 40

cdef double FACT[NFACT]
cdef int _i
FACT[0] = 1.0
for _i in range(1, NFACT):
    FACT[_i] = FACT[_i - 1] * _i

N_VALUES = 16


cdef struct Terms:
    int size
    double c[MAXT]
    int n[MAXT]
    double z[MAXT]


cdef double _half(int m, double p, int n, double q, int l) except? -1.0:
    cdef int a = m - l - 1
    cdef int nl = n + l
    cdef int k
    cdef double s = p + q
    cdef double total = 0.0
    cdef double pk, sk
    if a < 0:
        raise ValueError("radial power too low for multipole order")
    pk = 1.0 / pow(p, a + 1)
    sk = 1.0 / pow(s, nl + 1)
    for k in range(a + 1):
        total += FACT[nl + k] / FACT[k] * pk * sk
        pk *= p
        sk /= s
    return FACT[a] * total


cdef inline double _pair(int m, double p, int n, double q, int l) except? -1.0:
    return _half(m, p, n, q, l) + _half(n, q, m, p, l)


def pair_integral(int m, double p, int n, double q, int l):
    """Two-region radial integral ``I(m, p; n, q; l)`` in closed form."""
    return _pair(m, p, n, q, l)


cdef Terms _product(Terms *f, Terms *g):
    cdef Terms out
    cdef int i, j
    out.size = 0
    for i in range(f.size):
        for j in range(g.size):
            out.c[out.size] = f.c[i] * g.c[j]
            out.n[out.size] = f.n[i] + g.n[j] + 2
            out.z[out.size] = f.z[i] + g.z[j]
            out.size += 1
    return out


cdef double _two_electron(int l, Terms *da, Terms *db) except? -1.0:
    cdef int i, j
    cdef double total = 0.0
    for i in range(da.size):
        for j in range(db.size):
            total += da.c[i] * db.c[j] * _pair(da.n[i], da.z[i], db.n[j], db.z[j], l)
    return total


cdef double _moment(Terms *t, int k):
    cdef int i, j, e
    cdef double total = 0.0
    for i in range(t.size):
        for j in range(t.size):
            e = t.n[i] + t.n[j] + k
            total += t.c[i] * t.c[j] * FACT[e] / pow(t.z[i] + t.z[j], e + 1)
    return total


cdef double _kinetic(Terms *t, int l):
    cdef Terms d
    cdef int i
    cdef double out
    d.size = 0
    for i in range(t.size):
        if t.n[i]:
            d.c[d.size] = t.c[i] * t.n[i]
            d.n[d.size] = t.n[i] - 1
            d.z[d.size] = t.z[i]
            d.size += 1
        d.c[d.size] = -t.c[i] * t.z[i]
        d.n[d.size] = t.n[i]
        d.z[d.size] = t.z[i]
        d.size += 1
    out = _moment(&d, 2)
    if l:
        out += l * (l + 1) * _moment(t, 0)
    return 0.5 * out


def slater_values(double alpha, double beta, double gamma):
    """All exponent-dependent radial quantities, in the fixed kernel order."""
    cdef Terms r1s, r2s, r2p, d1s, d2s, d2p, x12, x1p, x2p
    cdef double n2s = 2.0 * sqrt(3.0 * pow(beta, 5) / (alpha * alpha - alpha * beta + beta * beta))
    r1s.size = 1
    r1s.c[0] = 2.0 * pow(alpha, 1.5)
    r1s.n[0] = 0
    r1s.z[0] = alpha
    r2s.size = 2
    r2s.c[0] = n2s
    r2s.n[0] = 0
    r2s.z[0] = beta
    r2s.c[1] = -n2s * (alpha + beta) / 3.0
    r2s.n[1] = 1
    r2s.z[1] = beta
    r2p.size = 1
    r2p.c[0] = 2.0 * pow(gamma, 2.5) / sqrt(3.0)
    r2p.n[0] = 1
    r2p.z[0] = gamma
    d1s = _product(&r1s, &r1s)
    d2s = _product(&r2s, &r2s)
    d2p = _product(&r2p, &r2p)
    x12 = _product(&r1s, &r2s)
    x1p = _product(&r1s, &r2p)
    x2p = _product(&r2s, &r2p)
    return (
        _kinetic(&r1s, 0),
        _moment(&r1s, 1),
        _kinetic(&r2s, 0),
        _moment(&r2s, 1),
        _kinetic(&r2p, 1),
        _moment(&r2p, 1),
        _two_electron(0, &d1s, &d1s),
        _two_electron(0, &d2s, &d2s),
        _two_electron(0, &d1s, &d2s),
        _two_electron(0, &d1s, &d2p),
        _two_electron(0, &d2s, &d2p),
        _two_electron(0, &d2p, &d2p),
        _two_electron(2, &d2p, &d2p),
        _two_electron(0, &x12, &x12),
        _two_electron(1, &x1p, &x1p),
        _two_electron(1, &x2p, &x2p),
    )
