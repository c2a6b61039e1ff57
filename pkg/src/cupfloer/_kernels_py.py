"""Pure-Python integer reduction kernels.

These are the inner loops of the exact linear algebra layer: Hermite
reduction, Smith diagonalization, residue reduction against an echelon
basis, and dense multiply.  A compiled twin with the same signatures
lives in ``_kernels.pyx``; ``intlinalg`` picks whichever imports.

All matrices are lists of lists of Python ints and are modified in
place.  Transform arguments may be ``None`` to skip tracking.

Pivot choice is minimal absolute value (entry growth is accepted at
desk scale); quotients are rounded to nearest so remainders stay
balanced during elimination.
"""


def xgcd(a, b):
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _nearest_quotient(a, p):
    # p > 0; remainder a - q*p lies in [-p/2, p/2]
    q, r = divmod(a, p)
    if 2 * r > p:
        q += 1
    return q


def mat_mul(A, B):
    """Dense product of two list-of-list integer matrices."""
    n = len(A)
    k = len(B)
    m = len(B[0]) if k else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    b = Bt[j]
                    if b:
                        Oi[j] += a * b
    return out


def row_hnf(mat, transform=None):
    """In-place row-style Hermite normal form.

    On return ``mat`` is in row echelon form with positive pivots and
    entries above each pivot reduced into [0, pivot).  ``transform``,
    when given, receives the same row operations (so if it starts as the
    identity, transform @ original == mat afterwards).  Returns the list
    of pivot columns, one per nonzero row.
    """
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        live = [i for i in range(r, nrows) if mat[i][c]]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda i: abs(mat[i][c]))
            p = live[0]
            pv = mat[p][c]
            if pv < 0:
                row = mat[p]
                for j in range(c, ncols):
                    row[j] = -row[j]
                if transform is not None:
                    trow = transform[p]
                    for j in range(len(trow)):
                        trow[j] = -trow[j]
                pv = -pv
            nxt = [p]
            prow = mat[p]
            for i in live[1:]:
                q = _nearest_quotient(mat[i][c], pv)
                if q:
                    row = mat[i]
                    for j in range(c, ncols):
                        row[j] -= q * prow[j]
                    if transform is not None:
                        trow = transform[i]
                        prow_t = transform[p]
                        for j in range(len(trow)):
                            trow[j] -= q * prow_t[j]
                if mat[i][c]:
                    nxt.append(i)
            live = nxt
        p = live[0]
        if mat[p][c] < 0:
            row = mat[p]
            for j in range(c, ncols):
                row[j] = -row[j]
            if transform is not None:
                trow = transform[p]
                for j in range(len(trow)):
                    trow[j] = -trow[j]
        if p != r:
            mat[p], mat[r] = mat[r], mat[p]
            if transform is not None:
                transform[p], transform[r] = transform[r], transform[p]
        pv = mat[r][c]
        prow = mat[r]
        for i in range(r):
            q = mat[i][c] // pv
            if q:
                row = mat[i]
                for j in range(c, ncols):
                    row[j] -= q * prow[j]
                if transform is not None:
                    trow = transform[i]
                    prow_t = transform[r]
                    for j in range(len(trow)):
                        trow[j] -= q * prow_t[j]
        pivots.append(c)
        r += 1
    return pivots


def reduce_mod_rows(v, rows, pivots, coeffs=None):
    """Reduce vector ``v`` (in place) against echelon rows.

    ``rows`` must be in row HNF with pivot columns ``pivots``.  Floor
    quotients give the canonical coset representative.  When ``coeffs``
    is a list it receives the quotient applied against each row.
    """
    n = len(v)
    for k, c in enumerate(pivots):
        val = v[c]
        if val:
            row = rows[k]
            q = val // row[c]
            if q:
                for j in range(c, n):
                    v[j] -= q * row[j]
                if coeffs is not None:
                    coeffs[k] += q


def smith(mat, left=None, left_inv=None, right=None):
    """In-place Smith diagonalization with divisibility chain.

    Maintains S = P @ M @ Q: ``left`` receives row operations (P),
    ``left_inv`` the inverse column operations (P^-1), ``right`` the
    column operations (Q).  Diagonal entries end nonnegative with
    d1 | d2 | ... .
    """
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0

    def row_add(i, j, q):
        # row_i -= q * row_j
        ri, rj = mat[i], mat[j]
        for t in range(ncols):
            ri[t] -= q * rj[t]
        if left is not None:
            li, lj = left[i], left[j]
            for t in range(len(li)):
                li[t] -= q * lj[t]
        if left_inv is not None:
            # (P^-1) column j += q * column i
            for row in left_inv:
                row[j] += q * row[i]

    def row_swap(i, j):
        mat[i], mat[j] = mat[j], mat[i]
        if left is not None:
            left[i], left[j] = left[j], left[i]
        if left_inv is not None:
            for row in left_inv:
                row[i], row[j] = row[j], row[i]

    def row_neg(i):
        ri = mat[i]
        for t in range(ncols):
            ri[t] = -ri[t]
        if left is not None:
            li = left[i]
            for t in range(len(li)):
                li[t] = -li[t]
        if left_inv is not None:
            for row in left_inv:
                row[i] = -row[i]

    def col_add(i, j, q):
        # col_i -= q * col_j
        for row in mat:
            row[i] -= q * row[j]
        if right is not None:
            for row in right:
                row[i] -= q * row[j]

    def col_swap(i, j):
        for row in mat:
            row[i], row[j] = row[j], row[i]
        if right is not None:
            for row in right:
                row[i], row[j] = row[j], row[i]

    t = 0
    bound = min(nrows, ncols)
    while t < bound:
        # locate minimal-absolute-value nonzero entry in the submatrix
        best = None
        for i in range(t, nrows):
            row = mat[i]
            for j in range(t, ncols):
                v = row[j]
                if v:
                    a = abs(v)
                    if best is None or a < best[0]:
                        best = (a, i, j)
                        if a == 1:
                            break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, nrows):
                if mat[i][t]:
                    q = _nearest_quotient(mat[i][t], abs(mat[t][t])) * (1 if mat[t][t] > 0 else -1)
                    row_add(i, t, q)
                    if mat[i][t]:
                        row_swap(t, i)
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, ncols):
                if mat[t][j]:
                    q = _nearest_quotient(mat[t][j], abs(mat[t][t])) * (1 if mat[t][t] > 0 else -1)
                    col_add(j, t, q)
                    if mat[t][j]:
                        col_swap(t, j)
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining submatrix by the pivot
            pv = mat[t][t]
            culprit = None
            for i in range(t + 1, nrows):
                row = mat[i]
                for j in range(t + 1, ncols):
                    if row[j] % pv:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            row_add(t, culprit, -1)
        if mat[t][t] < 0:
            row_neg(t)
        t += 1
