"""Exact rational linear algebra.

Two flavours live here: a sparse incremental echelon accumulator used for the
large span computations in the group-algebra module, and small dense routines
(RREF, nullspace, affine solve) used everywhere a full system has to be
solved.  All arithmetic is exact, over :class:`fractions.Fraction`.
"""

from fractions import Fraction
from heapq import heapify, heappop, heappush
from math import gcd


def _to_int_vec(vec):
    """Scale a sparse rational vector to integers with content 1."""
    items = [(k, v) for k, v in vec.items() if v]
    if not items:
        return {}
    denom = 1
    for _, v in items:
        d = v.denominator if isinstance(v, Fraction) else 1
        denom = denom * d // gcd(denom, d)
    out = {}
    g = 0
    for k, v in items:
        n = int(v * denom)
        out[k] = n
        g = gcd(g, n)
    if g > 1:
        out = {k: n // g for k, n in out.items()}
    return out


class SparseEchelon:
    """Row-echelon basis of sparse vectors, built incrementally.

    Vectors are dicts mapping coordinate index to a nonzero number
    (Fraction or int); rows are stored with pivot coefficient 1 and are
    forward-reduced only (no back-substitution), which is all that rank
    and membership queries need and keeps coefficient growth in check.
    """

    def __init__(self):
        self.rows = {}  # pivot index -> Fraction vector dict (pivot coeff 1)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return vec forward-reduced against the basis (Fraction dict)."""
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        if not vec:
            return {}
        heap = list(vec)
        heapify(heap)
        while heap:
            p = heappop(heap)
            c = vec.get(p)
            if not c:
                vec.pop(p, None)
                continue
            row = self.rows.get(p)
            if row is None:
                # p is the true pivot of the reduced vector
                heappush(heap, p)
                break
            for k, v in row.items():
                w = vec.get(k, 0) - c * v
                if w:
                    if k not in vec:
                        heappush(heap, k)
                    vec[k] = w
                else:
                    vec.pop(k, None)
        return {k: v for k, v in vec.items() if v}

    def add(self, vec):
        """Insert vec; return True if it increased the rank."""
        vec = self.reduce(vec)
        if not vec:
            return False
        p = min(vec)
        inv = Fraction(1) / vec[p]
        self.rows[p] = {k: v * inv for k, v in vec.items()}
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    def basis(self):
        """Basis rows sorted by pivot (integer coefficient dicts)."""
        return [self.rows[p] for p in sorted(self.rows)]


def sparse_rank(vectors, stop_at=None):
    """Rank of a family of sparse vectors; stops early at stop_at if given."""
    ech = SparseEchelon()
    for v in vectors:
        ech.add(v)
        if stop_at is not None and ech.rank >= stop_at:
            break
    return ech.rank


# ---------------------------------------------------------------------------
# dense routines


def frac_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(mat):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    mat = frac_matrix(mat)
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(mat, ncols=None):
    """Basis of the right nullspace of mat (list of coordinate lists)."""
    if not mat:
        return [[Fraction(1) if i == j else Fraction(0) for i in range(ncols)]
                for j in range(ncols or 0)]
    ncols = len(mat[0])
    rows, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(v)
    return basis


def solve_affine(mat, rhs):
    """Solve mat @ x = rhs exactly.

    Returns (particular solution or None, nullspace basis of mat).
    """
    if not mat:
        return [], []
    ncols = len(mat[0])
    aug = [row + [b] for row, b in zip(mat, rhs)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None, nullspace(mat)
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = rows[r][ncols]
    return x, nullspace(mat)


def rank(mat):
    return len(rref(mat)[0])


# ---------------------------------------------------------------------------
# integer matrices (depth computations)


def mat_mul(a, b):
    n, m = len(a), len(b[0])
    inner = len(b)
    bt = [[b[k][j] for k in range(inner)] for j in range(m)]
    return [[sum(row[k] * col[k] for k in range(inner)) for col in bt]
            for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
