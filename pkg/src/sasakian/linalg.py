"""Exact rational linear algebra, dense and sparse. No floating point anywhere.

Sparse vectors are dicts {index: coefficient}; dense matrices are lists of
lists. Coefficients are Python ints or Fractions, mixed freely.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Sparse = dict


def spadd(x: Sparse, y: Sparse) -> Sparse:
    out = dict(x)
    for k, v in y.items():
        w = out.get(k, 0) + v
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


def spaxpy(acc: Sparse, c, y: Sparse) -> None:
    """acc += c * y, in place."""
    if not c:
        return
    for k, v in y.items():
        w = acc.get(k, 0) + c * v
        if w:
            acc[k] = w
        elif k in acc:
            del acc[k]


def spscale(c, x: Sparse) -> Sparse:
    if not c:
        return {}
    return {k: c * v for k, v in x.items()}


def spneg(x: Sparse) -> Sparse:
    return {k: -v for k, v in x.items()}


def spdot(x: Sparse, y: Sparse):
    if len(y) < len(x):
        x, y = y, x
    return sum(v * y[k] for k, v in x.items() if k in y)


def zeros(n: int, m: int):
    return [[0] * m for _ in range(n)]


def eye(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    """Dense product with row-sparsity skip (the tensors here are mostly zero)."""
    n, inner, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        row, oi = a[i], out[i]
        for k in range(inner):
            v = row[k]
            if v:
                bk = b[k]
                for j in range(m):
                    w = bk[j]
                    if w:
                        oi[j] += v * w
    return out


def matvec(a, x):
    return [sum(r[j] * x[j] for j in range(len(x)) if x[j]) for r in a]


def vecmat(x, a):
    m = len(a[0])
    out = [0] * m
    for i, xi in enumerate(x):
        if xi:
            row = a[i]
            for j in range(m):
                if row[j]:
                    out[j] += xi * row[j]
    return out


def outer(col, row):
    return [[ci * rj for rj in row] for ci in col]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a) -> bool:
    return all(all(x == 0 for x in row) for row in a)


def inverse(a):
    """Exact inverse via Gauss-Jordan; raises ValueError on singular input."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        d = m[col][col]
        m[col] = [x / d for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def rank(rows) -> int:
    """Rank of a list of dense rational rows."""
    if not rows:
        return 0
    rows = [[Fraction(x) for x in r] for r in rows]
    ncols = len(rows[0])
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        prow = rows[rk]
        pval = prow[col]
        for r in range(len(rows)):
            if r != rk and rows[r][col]:
                f = rows[r][col] / pval
                rows[r] = [x - f * y for x, y in zip(rows[r], prow)]
        rk += 1
        if rk == len(rows):
            break
    return rk


def kernel_of_functional(f):
    """Integer basis of the kernel of a nonzero integer functional."""
    n = len(f)
    p = next(i for i in range(n) if f[i])
    basis = []
    for j in range(n):
        if j == p:
            continue
        v = [0] * n
        v[j] = f[p]
        v[p] = -f[j]
        g = gcd(abs(v[j]), abs(v[p])) or 1
        basis.append([x // g for x in v])
    return basis


def _pattern_blocks(s):
    """Index groups of the connected nonzero off-diagonal pattern of a symmetric matrix."""
    n = len(s)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if s[i][j] != 0:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [sorted(g) for g in sorted(groups.values())]


def is_negative_definite(s) -> bool:
    """Exact definiteness test by pivoted elimination on each sparsity block."""
    for block in _pattern_blocks(s):
        if len(block) == 1:
            if s[block[0]][block[0]] >= 0:
                return False
            continue
        sub = [[-Fraction(s[i][j]) for j in block] for i in block]
        nb = len(sub)
        for k in range(nb):
            piv = sub[k][k]
            if piv <= 0:
                return False
            for i in range(k + 1, nb):
                f = sub[i][k] / piv
                if f:
                    for j in range(k, nb):
                        sub[i][j] -= f * sub[k][j]
    return True
