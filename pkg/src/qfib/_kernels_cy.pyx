# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernels_py: identical semantics, C-level loops.

Coefficients and packed keys stay Python ints (coefficients are arbitrary
precision and keys exceed 64 bits once k >= 3), so the speedup comes from
removing interpreter overhead around the dict operations, not from native
integer arithmetic.  See _kernels_py for the packed key layout.
"""

from cpython.dict cimport PyDict_DelItem, PyDict_GetItem, PyDict_SetItem
from cpython.object cimport PyObject

Z_BITS = 16
Q_BITS = 32
Z_MASK = (1 << Z_BITS) - 1
Q_MASK = (1 << Q_BITS) - 1

_PY_Z_MASK = Z_MASK
_PY_Q_MASK = Q_MASK


def add_terms(dict a, dict b):
    if len(b) > len(a):
        a, b = b, a
    cdef dict out = dict(a)
    cdef PyObject *hit
    for key, coeff in b.items():
        hit = PyDict_GetItem(out, key)
        if hit is not NULL:
            c = coeff + <object>hit
            if c:
                PyDict_SetItem(out, key, c)
            else:
                PyDict_DelItem(out, key)
        else:
            PyDict_SetItem(out, key, coeff)
    return out


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef PyObject *hit
    for key, coeff in b.items():
        hit = PyDict_GetItem(out, key)
        if hit is not NULL:
            c = <object>hit - coeff
            if c:
                PyDict_SetItem(out, key, c)
            else:
                PyDict_DelItem(out, key)
        else:
            PyDict_SetItem(out, key, 0 - coeff)
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    cdef list bkeys = list(b.keys())
    cdef list bvals = list(b.values())
    cdef Py_ssize_t m = len(bkeys)
    cdef Py_ssize_t j
    cdef PyObject *hit
    for ka, va in a.items():
        for j in range(m):
            key = ka + <object>bkeys[j]
            c = va * <object>bvals[j]
            hit = PyDict_GetItem(out, key)
            if hit is not NULL:
                c = c + <object>hit
                if c:
                    PyDict_SetItem(out, key, c)
                else:
                    PyDict_DelItem(out, key)
            else:
                PyDict_SetItem(out, key, c)
    return out


def scalar_mul_terms(dict a, c):
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    cdef dict out = {}
    for key, coeff in a.items():
        out[key] = coeff * c
    return out


def shift_q_terms(dict a, tuple shifts):
    cdef dict out = {}
    cdef Py_ssize_t nshift = len(shifts)
    cdef Py_ssize_t s
    for key, coeff in a.items():
        delta = 0
        for s in range(nshift):
            off, mult = <tuple>shifts[s]
            delta += ((key >> off) & _PY_Z_MASK) * mult
        out[key + delta] = coeff
    return out


def times_q_terms(dict a, e):
    cdef dict out = {}
    for key, coeff in a.items():
        out[key + e] = coeff
    return out


def eval_terms(dict a, tuple zoffsets, tuple zvals, qval):
    total = 0
    cdef Py_ssize_t nz = len(zoffsets)
    cdef Py_ssize_t s
    for key, coeff in a.items():
        term = coeff
        eq = key & _PY_Q_MASK
        if eq:
            term = term * qval**eq
        for s in range(nz):
            e = (key >> <object>zoffsets[s]) & _PY_Z_MASK
            if e:
                term = term * (<object>zvals[s]) ** e
        total = total + term
    return total


def sum_tilings_terms(int n, int maxpart, list deltas):
    cdef dict acc = {}
    if n < 0:
        return acc
    if n == 0:
        acc[0] = 1
        return acc
    cdef list stack_pos = [1]
    cdef list stack_key = [0]
    cdef int pos, rem, top, i, npos
    cdef list row
    cdef PyObject *hit
    while stack_pos:
        pos = stack_pos.pop()
        key = stack_key.pop()
        rem = n - pos + 1
        top = maxpart if maxpart < rem else rem
        for i in range(1, top + 1):
            row = <list>deltas[i - 1]
            nkey = key + <object>row[pos - 1]
            npos = pos + i
            if npos > n:
                hit = PyDict_GetItem(acc, nkey)
                if hit is not NULL:
                    PyDict_SetItem(acc, nkey, 1 + <object>hit)
                else:
                    PyDict_SetItem(acc, nkey, 1)
            else:
                stack_pos.append(npos)
                stack_key.append(nkey)
    return acc
