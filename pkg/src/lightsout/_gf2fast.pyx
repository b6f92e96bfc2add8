# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) elimination on bit-packed rows.

Drop-in replacement for lightsout._gf2pure: rows come in and go out as
Python ints, the elimination itself runs on a flat uint64 word buffer.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy


def echelon_bits(rows, Py_ssize_t ncols, bint reduced=True):
    """Row-reduce bit-packed GF(2) rows; returns (rows, pivot_columns).

    Same contract as lightsout._gf2pure.echelon_bits.
    """
    cdef Py_ssize_t m = len(rows)
    if m == 0 or ncols <= 0:
        return list(rows), []
    cdef Py_ssize_t words = (ncols + 63) >> 6
    cdef Py_ssize_t nbytes = words * 8
    cdef uint64_t* a = <uint64_t*> malloc(<size_t> (m * words) * sizeof(uint64_t))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, w, c, cw, pr, r, start
    cdef uint64_t mask, tmp
    cdef uint64_t* rowr
    cdef uint64_t* rowi
    cdef const unsigned char[::1] buf
    pivots = []
    try:
        for i in range(m):
            b = rows[i].to_bytes(nbytes, "little")
            buf = b
            memcpy(a + i * words, &buf[0], nbytes)
        r = 0
        for c in range(ncols):
            if r == m:
                break
            cw = c >> 6
            mask = (<uint64_t> 1) << (c & 63)
            pr = -1
            for i in range(r, m):
                if a[i * words + cw] & mask:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                rowr = a + r * words
                rowi = a + pr * words
                for w in range(words):
                    tmp = rowr[w]
                    rowr[w] = rowi[w]
                    rowi[w] = tmp
            rowr = a + r * words
            start = 0 if reduced else r + 1
            for i in range(start, m):
                if i != r and (a[i * words + cw] & mask):
                    rowi = a + i * words
                    for w in range(words):
                        rowi[w] ^= rowr[w]
            pivots.append(c)
            r += 1
        out = [
            int.from_bytes((<const unsigned char*> (a + i * words))[:nbytes], "little")
            for i in range(m)
        ]
    finally:
        free(a)
    return out, pivots
