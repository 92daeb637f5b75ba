# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled matrix kernels over GF(q), table-driven.

Mirrors _kernels_py exactly; selected at import by hybridnc.kernels when the
field's add/sub tables fit in memory (order <= ADD_TABLE_LIMIT).
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef int* _load(rows, Py_ssize_t nrows, Py_ssize_t ncols) except NULL:
    cdef int* buf = <int*> PyMem_Malloc(nrows * ncols * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            buf[i * ncols + j] = row[j]
    return buf


cdef list _dump(int* buf, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef Py_ssize_t i, j
    out = []
    for i in range(nrows):
        row = [0] * ncols
        for j in range(ncols):
            row[j] = buf[i * ncols + j]
        out.append(row)
    return out


def rref(rows, int ncols, ft):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return [list(row) for row in rows], 0, []
    cdef const int[::1] exp = ft.np_exp
    cdef const int[::1] log = ft.np_log
    cdef const int[:, ::1] sub = ft.np_sub
    cdef int qm1 = ft.qm1
    cdef int* m = _load(rows, nrows, ncols)
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef int pv, f, v, il, lf, tmp
    pivots = []
    try:
        for c in range(ncols):
            pr = -1
            for i in range(r, nrows):
                if m[i * ncols + c]:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for j in range(ncols):
                    tmp = m[r * ncols + j]
                    m[r * ncols + j] = m[pr * ncols + j]
                    m[pr * ncols + j] = tmp
            pv = m[r * ncols + c]
            if pv != 1:
                il = qm1 - log[pv]
                for j in range(c, ncols):
                    v = m[r * ncols + j]
                    if v:
                        m[r * ncols + j] = exp[log[v] + il]
            for i in range(nrows):
                if i == r:
                    continue
                f = m[i * ncols + c]
                if f:
                    lf = log[f]
                    for j in range(c, ncols):
                        v = m[r * ncols + j]
                        if v:
                            m[i * ncols + j] = sub[m[i * ncols + j],
                                                   exp[log[v] + lf]]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        out = _dump(m, nrows, ncols)
    finally:
        PyMem_Free(m)
    return out, r, pivots


def rank(rows, int ncols, ft):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef const int[::1] exp = ft.np_exp
    cdef const int[::1] log = ft.np_log
    cdef const int[:, ::1] sub = ft.np_sub
    cdef int qm1 = ft.qm1
    cdef int* m = _load(rows, nrows, ncols)
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef int f, v, lf, lp, tmp
    try:
        for c in range(ncols):
            pr = -1
            for i in range(r, nrows):
                if m[i * ncols + c]:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for j in range(ncols):
                    tmp = m[r * ncols + j]
                    m[r * ncols + j] = m[pr * ncols + j]
                    m[pr * ncols + j] = tmp
            lp = log[m[r * ncols + c]]
            for i in range(r + 1, nrows):
                f = m[i * ncols + c]
                if f:
                    lf = (log[f] - lp + qm1) % qm1
                    m[i * ncols + c] = 0
                    for j in range(c + 1, ncols):
                        v = m[r * ncols + j]
                        if v:
                            m[i * ncols + j] = sub[m[i * ncols + j],
                                                   exp[log[v] + lf]]
            r += 1
            if r == nrows:
                break
    finally:
        PyMem_Free(m)
    return r


def matmul(a, b, ft):
    cdef Py_ssize_t nra = len(a)
    if nra == 0:
        return []
    if len(b) == 0:
        return [[] for _ in a]
    cdef Py_ssize_t nk = len(b)
    cdef Py_ssize_t ncols = len(b[0])
    cdef const int[::1] exp = ft.np_exp
    cdef const int[::1] log = ft.np_log
    cdef const int[:, ::1] add = ft.np_add
    cdef int* bb = _load(b, nk, ncols)
    cdef int* out = <int*> PyMem_Malloc(nra * ncols * sizeof(int))
    if out == NULL:
        PyMem_Free(bb)
        raise MemoryError()
    cdef Py_ssize_t i, j, k
    cdef int f, v, lf
    try:
        for i in range(nra * ncols):
            out[i] = 0
        for i in range(nra):
            arow = a[i]
            for k in range(nk):
                f = arow[k]
                if f:
                    lf = log[f]
                    for j in range(ncols):
                        v = bb[k * ncols + j]
                        if v:
                            out[i * ncols + j] = add[out[i * ncols + j],
                                                     exp[log[v] + lf]]
        result = _dump(out, nra, ncols)
    finally:
        PyMem_Free(bb)
        PyMem_Free(out)
    return result


def reduce_vector(vec, rows, pivots, ft):
    cdef Py_ssize_t n = len(vec)
    cdef const int[::1] exp = ft.np_exp
    cdef const int[::1] log = ft.np_log
    cdef const int[:, ::1] sub = ft.np_sub
    cdef int* v = <int*> PyMem_Malloc(n * sizeof(int))
    if v == NULL:
        raise MemoryError()
    cdef Py_ssize_t j, t
    cdef Py_ssize_t pc
    cdef int f, w, lf
    try:
        for j in range(n):
            v[j] = vec[j]
        for t in range(len(rows)):
            pc = pivots[t]
            f = v[pc]
            if f:
                row = rows[t]
                lf = log[f]
                for j in range(pc, n):
                    w = row[j]
                    if w:
                        v[j] = sub[v[j], exp[log[w] + lf]]
        out = [0] * n
        for j in range(n):
            out[j] = v[j]
    finally:
        PyMem_Free(v)
    return out
