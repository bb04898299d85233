"""Pure-Python row reduction kernels.

Both functions take a list of rows (lists of ints), work on a copy and return
``(rows, pivots)``: the nonzero rows of the reduced row echelon form and the
pivot column of each row.  Pivoting is deterministic: leftmost nonzero column,
first row (in current order) carrying a nonzero entry there.
"""

from math import gcd


def rref_mod_p(rows, ncols, p):
    """Reduced row echelon form over F_p; pivots are normalized to 1."""
    a = [[x % p for x in row] for row in rows]
    nrows = len(a)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        inv = pow(pr[c], p - 2, p) if p > 2 else 1
        if inv != 1:
            pr = [(x * inv) % p for x in pr]
            a[r] = pr
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f:
                    ri = a[i]
                    a[i] = [(x - f * y) % p for x, y in zip(ri, pr)]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def rref_int(rows, ncols):
    """Fraction-free reduced echelon form of an integer matrix.

    Every returned row is primitive with a positive pivot entry and vanishes in
    all other pivot columns, so it spans the same rational row space as the
    input.
    """
    a = [list(row) for row in rows]
    nrows = len(a)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pr = _primitive(a[r])
        if pr[c] < 0:
            pr = [-x for x in pr]
        a[r] = pr
        pv = pr[c]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f:
                    g = gcd(pv, f)
                    s, t = pv // g, f // g
                    a[i] = _primitive([s * x - t * y for x, y in zip(a[i], pr)])
        pivots.append(c)
        r += 1
    return a[:r], pivots
