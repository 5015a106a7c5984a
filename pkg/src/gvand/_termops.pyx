# cython: language_level=3
"""Compiled term-map kernels; semantics mirror _termops_py exactly.

Coefficients stay Python ints (they can exceed machine words over the
integers); the win comes from compiled dict/tuple traversal in the
multiply-accumulate loops.
"""

BACKEND = "c"


cdef inline tuple _exp_add(tuple u, tuple v):
    cdef Py_ssize_t i, n = len(u)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = (<object> u[i]) + (<object> v[i])
    return tuple(out)


def add_terms(dict a, dict b, modulus):
    """Sum of two term maps as a new canonical term map."""
    cdef dict out = dict(a)
    cdef object exp, c, acc
    for exp, c in b.items():
        acc = out.get(exp, 0) + c
        if modulus:
            acc %= modulus
        if acc:
            out[exp] = acc
        elif exp in out:
            del out[exp]
    return out


def addmul_terms(dict acc, coeff, tuple expvec, dict b, modulus):
    """In-place acc += coeff * X^expvec * b.  Returns acc."""
    cdef tuple exp, key
    cdef object c, val
    for exp, c in b.items():
        key = _exp_add(expvec, exp)
        val = acc.get(key, 0) + coeff * c
        if modulus:
            val %= modulus
        if val:
            acc[key] = val
        elif key in acc:
            del acc[key]
    return acc


def mul_terms(dict a, dict b, modulus):
    """Product of two term maps as a new canonical term map."""
    cdef dict out = {}
    cdef tuple ea
    cdef object ca
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        addmul_terms(out, ca, ea, b, modulus)
    return out
