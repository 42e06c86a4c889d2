# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled float64 kernels: nested harmonic partial sums and Monte Carlo
sampling over the unit-cube polytopes.  Mirrors ``_fallback.py`` exactly
(same counter-based random stream, same estimator per draw)."""

from libc.math cimport log, log1p, pow
from libc.stdint cimport uint64_t

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL


cdef inline uint64_t _mix(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline double _uniform(uint64_t key, uint64_t counter) nogil:
    return <double>(_mix(key + (counter + 1) * GOLDEN) >> 11) * (1.0 / 9007199254740992.0)


cpdef uint64_t stream_key(uint64_t seed, uint64_t stream):
    return _mix(seed ^ _mix(stream + GOLDEN))


def nested_harmonic_partial(int m, int k, long N):
    """sum_{n<N} S_k(n) / n^m in double precision."""
    cdef double S[64]
    cdef double total = 0.0
    cdef long n
    cdef int j
    if k >= 64:
        raise ValueError("k must be < 64")
    with nogil:
        S[0] = 1.0
        for j in range(1, k + 1):
            S[j] = 0.0
        for n in range(1, N):
            total += S[k] / pow(<double>n, m)
            for j in range(k, 0, -1):
                S[j] += S[j - 1] / n
    return total


cdef inline double _integrand(int code, double* x) nogil:
    if code == 0:
        return 1.0
    elif code == 1:
        # (1 - x) / (x y (-ln(1 - y)))
        return (1.0 - x[0]) / (x[0] * x[1] * (-log1p(-x[1])))
    elif code == 2:
        return 1.0 / log(x[0] * x[1])
    elif code == 3:
        return x[0] * x[1]
    return 0.0


cdef inline bint _inside(int kind, int dim, double* x) nogil:
    cdef int i, j
    if kind == 3:
        for j in range(1, dim):
            if x[0] + x[j] < 1.0:
                return False
        return True
    if kind == 4:
        for i in range(dim):
            for j in range(i + 1, dim):
                if x[i] + x[j] < 1.0:
                    return False
        return True
    return True


def mc_polytope(int kind, int dim, int integrand, long samples, uint64_t seed,
                uint64_t stream):
    """Return (sum, sum of squares) of the per-draw estimator.

    kind: 0 square, 1 triangle T (fold), 2 half-triangle H (fold + sort),
    3 V_m and 4 W_m (box indicator).
    """
    cdef double x[32]
    cdef double value, tmp
    cdef double s = 0.0, s2 = 0.0
    cdef double volume = 1.0
    cdef long i
    cdef int d
    cdef uint64_t key = stream_key(seed, stream)
    if dim > 32 or dim < 1:
        raise ValueError("dimension must be in [1, 32]")
    if kind == 1:
        volume = 0.5
    elif kind == 2:
        volume = 0.25
    with nogil:
        for i in range(samples):
            for d in range(dim):
                x[d] = _uniform(key, <uint64_t>i * dim + d)
            if kind == 1 or kind == 2:
                if x[0] + x[1] < 1.0:
                    x[0] = 1.0 - x[0]
                    x[1] = 1.0 - x[1]
                if kind == 2 and x[0] > x[1]:
                    tmp = x[0]
                    x[0] = x[1]
                    x[1] = tmp
                value = volume * _integrand(integrand, x)
            elif _inside(kind, dim, x):
                value = _integrand(integrand, x)
            else:
                value = 0.0
            s += value
            s2 += value * value
    return s, s2
