# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_pykernels``; same token packing."""

from libc.stdlib cimport malloc, free


def canonical_form(tokens):
    cdef Py_ssize_t n = len(tokens)
    if n == 0:
        return ()
    cdef long *src = <long *> malloc(n * sizeof(long))
    cdef long *best = <long *> malloc(n * sizeof(long))
    cdef long *cur = <long *> malloc(n * sizeof(long))
    cdef long maxlab = 0
    cdef Py_ssize_t i, k, start
    cdef long t, lab, new, nxt, v
    cdef int have_best = 0, undecided, rejected
    cdef long *mapping
    try:
        for i in range(n):
            src[i] = tokens[i]
            if (src[i] >> 2) > maxlab:
                maxlab = src[i] >> 2
        mapping = <long *> malloc((maxlab + 1) * sizeof(long))
        try:
            for start in range(n):
                if src[start] & 2:
                    continue
                for i in range(maxlab + 1):
                    mapping[i] = 0
                nxt = 1
                undecided = have_best
                rejected = 0
                for k in range(n):
                    t = src[(start + k) % n]
                    lab = t >> 2
                    new = mapping[lab]
                    if new == 0:
                        new = nxt
                        mapping[lab] = new
                        nxt += 1
                    v = (new << 2) | (t & 3)
                    if undecided:
                        if v > best[k]:
                            rejected = 1
                            break
                        if v < best[k]:
                            undecided = 0
                    cur[k] = v
                if rejected:
                    continue
                if not have_best or not undecided:
                    for k in range(n):
                        best[k] = cur[k]
                    have_best = 1
        finally:
            free(mapping)
        if not have_best:
            raise ValueError("code has no over pass")
        return tuple([best[k] for k in range(n)])
    finally:
        free(src)
        free(best)
        free(cur)


def warping_profile(tokens):
    cdef Py_ssize_t n = len(tokens)
    if n == 0:
        return [0]
    cdef long count = 0
    cdef Py_ssize_t b
    seen = set()
    for t in tokens:
        if (t >> 2) not in seen:
            seen.add(t >> 2)
            if t & 2:
                count += 1
    out = [count]
    for b in range(n - 1):
        if tokens[b] & 2:
            count -= 1
        else:
            count += 1
        out.append(count)
    return out
