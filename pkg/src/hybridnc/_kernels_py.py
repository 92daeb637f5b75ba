"""Pure-Python matrix kernels over GF(q).

Reference implementation of the hot elimination loops; the compiled module
in _kernels.pyx mirrors these semantics exactly.  All functions take rows as
sequences of int element-indices plus a FieldTables instance.
"""

from __future__ import annotations


def rref(rows, ncols, ft):
    """Reduced row echelon form.  Returns (rows, rank, pivot_columns);
    output keeps the original row count (zero rows sink to the bottom)."""
    work = [list(r) for r in rows]
    nrows = len(work)
    if nrows == 0 or ncols == 0:
        return work, 0, []
    exp = ft.exp
    log = ft.log
    qm1 = ft.qm1
    sub = ft.sub_table
    fsub = ft.field_sub
    r = 0
    pivots = []
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if work[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            work[r], work[pr] = work[pr], work[r]
        prow = work[r]
        pv = prow[c]
        if pv != 1:
            il = qm1 - log[pv]
            for j in range(c, ncols):
                v = prow[j]
                if v:
                    prow[j] = exp[log[v] + il]
        for i in range(nrows):
            if i == r:
                continue
            row = work[i]
            f = row[c]
            if f:
                lf = log[f]
                if sub is not None:
                    for j in range(c, ncols):
                        v = prow[j]
                        if v:
                            row[j] = sub[row[j]][exp[log[v] + lf]]
                else:
                    for j in range(c, ncols):
                        v = prow[j]
                        if v:
                            row[j] = fsub(row[j], exp[log[v] + lf])
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work, r, pivots


def rank(rows, ncols, ft):
    """Rank by forward elimination only (cheaper than full rref)."""
    work = [list(r) for r in rows]
    nrows = len(work)
    if nrows == 0 or ncols == 0:
        return 0
    exp = ft.exp
    log = ft.log
    qm1 = ft.qm1
    sub = ft.sub_table
    fsub = ft.field_sub
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if work[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            work[r], work[pr] = work[pr], work[r]
        prow = work[r]
        lp = log[prow[c]]
        for i in range(r + 1, nrows):
            row = work[i]
            f = row[c]
            if f:
                lf = (log[f] - lp) % qm1
                row[c] = 0
                if sub is not None:
                    for j in range(c + 1, ncols):
                        v = prow[j]
                        if v:
                            row[j] = sub[row[j]][exp[log[v] + lf]]
                else:
                    for j in range(c + 1, ncols):
                        v = prow[j]
                        if v:
                            row[j] = fsub(row[j], exp[log[v] + lf])
        r += 1
        if r == nrows:
            break
    return r


def matmul(a, b, ft):
    """Matrix product; b must have len(a[0]) rows."""
    if not a:
        return []
    if not b:
        return [[] for _ in a]
    ncols = len(b[0])
    exp = ft.exp
    log = ft.log
    add = ft.add_table
    fadd = ft.field_add
    out = [[0] * ncols for _ in a]
    for i, arow in enumerate(a):
        orow = out[i]
        for k, f in enumerate(arow):
            if f:
                lf = log[f]
                brow = b[k]
                if add is not None:
                    for j in range(ncols):
                        v = brow[j]
                        if v:
                            orow[j] = add[orow[j]][exp[log[v] + lf]]
                else:
                    for j in range(ncols):
                        v = brow[j]
                        if v:
                            orow[j] = fadd(orow[j], exp[log[v] + lf])
    return out


def reduce_vector(vec, rows, pivots, ft):
    """Residual of vec after eliminating against an RREF basis."""
    v = list(vec)
    exp = ft.exp
    log = ft.log
    sub = ft.sub_table
    fsub = ft.field_sub
    n = len(v)
    for row, pc in zip(rows, pivots):
        f = v[pc]
        if f:
            lf = log[f]
            if sub is not None:
                for j in range(pc, n):
                    w = row[j]
                    if w:
                        v[j] = sub[v[j]][exp[log[w] + lf]]
            else:
                for j in range(pc, n):
                    w = row[j]
                    if w:
                        v[j] = fsub(v[j], exp[log[w] + lf])
    return v
