"""Finite-dimensional algebras over the rationals by structure constants.

Provides the radical via the regular-representation trace form (valid in
characteristic zero), a direct separability-element solver for algebra
extensions, and the fixture algebras used by the verification suite:
upper-triangular matrices, a structural matrix algebra pair, full matrix
algebras, and the cyclic-monoid algebra with one idempotent power relation.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CapExceeded, UnitMissing
from .linalg import nullspace, rank, rref, solve_affine

DEFAULT_FINDIM_CAP = 4096


@dataclass
class StructureConstantAlgebra:
    dimension: int
    # mult[i][j] = coefficient list of b_i * b_j
    mult: list
    unit: list
    labels: list = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        if not self.labels:
            self.labels = [f"b{i}" for i in range(self.dimension)]
        self.mult = [[[Fraction(c) for c in vec] for vec in row]
                     for row in self.mult]
        self.unit = [Fraction(c) for c in self.unit]

    def multiply(self, u, v):
        n = self.dimension
        out = [Fraction(0)] * n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.mult[i][j]):
                    if c:
                        out[k] += ab * c
        return out

    def left_regular_matrix(self, u):
        """Matrix of x -> u * x in the given basis (columns = images)."""
        n = self.dimension
        cols = [self.multiply(u, _unit_vec(n, j)) for j in range(n)]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def check_associative_and_unital(self):
        n = self.dimension
        for i in range(n):
            bi = _unit_vec(n, i)
            assert self.multiply(self.unit, bi) == bi
            assert self.multiply(bi, self.unit) == bi
        for i in range(n):
            for j in range(n):
                ij = self.multiply(_unit_vec(n, i), _unit_vec(n, j))
                for k in range(n):
                    bk = _unit_vec(n, k)
                    lhs = self.multiply(ij, bk)
                    jk = self.multiply(_unit_vec(n, j), bk)
                    rhs = self.multiply(_unit_vec(n, i), jk)
                    assert lhs == rhs, (i, j, k)
        return True


def _unit_vec(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


@dataclass
class AlgebraInclusion:
    ambient: StructureConstantAlgebra
    sub_basis: list  # vectors in ambient coordinates, closed under product

    def __post_init__(self):
        A = self.ambient
        rows, _ = rref(self.sub_basis)
        self.sub_basis = rows
        span = _SpanChecker(rows)
        if not span.contains(A.unit):
            raise UnitMissing("subalgebra does not contain the unit")
        for u in rows:
            for v in rows:
                if not span.contains(A.multiply(u, v)):
                    raise ValueError("subalgebra basis not closed")

    @property
    def sub_dimension(self):
        return len(self.sub_basis)


class _SpanChecker:
    def __init__(self, rref_rows):
        self.rows = rref_rows
        self.pivots = [next(i for i, x in enumerate(r) if x)
                       for r in rref_rows]

    def contains(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                c = v[p]
                v = [a - c * b for a, b in zip(v, row)]
        return not any(v)


def radical(A):
    """Basis of J(A) = kernel of the regular trace form (char 0).

    The returned basis is verified to span a nilpotent ideal.
    """
    n = A.dimension
    regs = [A.left_regular_matrix(_unit_vec(n, i)) for i in range(n)]
    gram = [[_trace_prod(regs[i], regs[j]) for j in range(n)]
            for i in range(n)]
    basis = nullspace(gram, ncols=n)
    basis, _ = rref(basis)
    _check_nilpotent_ideal(A, basis)
    return basis


def _trace_prod(a, b):
    n = len(a)
    return sum(a[i][k] * b[k][i] for i in range(n) for k in range(n))


def _check_nilpotent_ideal(A, basis):
    if not basis:
        return
    n = A.dimension
    span = _SpanChecker(basis)
    for v in basis:
        for i in range(n):
            bi = _unit_vec(n, i)
            assert span.contains(A.multiply(bi, v))
            assert span.contains(A.multiply(v, bi))
    # nilpotency: power up the span until it dies
    current = basis
    for _ in range(n + 1):
        if not current:
            return
        prods = [A.multiply(u, v) for u in current for v in basis]
        current, _ = rref(prods)
        current = [r for r in current if any(r)]
    raise AssertionError("radical candidate is not nilpotent")


def subalgebra_closure(A, vectors):
    """Smallest product-closed subspace containing the vectors.

    The vectors must include the unit (raises UnitMissing otherwise).
    """
    rows, _ = rref(vectors)
    span = _SpanChecker(rows)
    if not span.contains(A.unit):
        raise UnitMissing("closure seed must contain the unit")
    while True:
        prods = [A.multiply(u, v) for u in rows for v in rows]
        new_rows, _ = rref(rows + prods)
        new_rows = [r for r in new_rows if any(r)]
        if len(new_rows) == len(rows):
            return AlgebraInclusion(A, new_rows)
        rows = new_rows
        span = _SpanChecker(rows)


# ---------------------------------------------------------------------------
# the relative tensor square and separability


class RelativeTensorSquare:
    """A (x)_B A as a quotient of the n^2-dimensional plain tensor square
    by span{(a_p b) (x) a_r - a_p (x) (b a_r)} over basis triples."""

    def __init__(self, A, inclusion, cap=DEFAULT_FINDIM_CAP):
        n = A.dimension
        if n * n > cap:
            raise CapExceeded("dim(A tensor A)", n * n, cap)
        self.A = A
        self.n = n
        rels = []
        for p in range(n):
            ap = _unit_vec(n, p)
            for b in inclusion.sub_basis:
                left = A.multiply(ap, b)
                for r in range(n):
                    ar = _unit_vec(n, r)
                    right = A.multiply(b, ar)
                    rel = [Fraction(0)] * (n * n)
                    for i, c in enumerate(left):
                        if c:
                            rel[i * n + r] += c
                    for j, c in enumerate(right):
                        if c:
                            rel[p * n + j] -= c
                    if any(rel):
                        rels.append(rel)
        rel_rows, rel_pivots = rref(rels)
        self.rel_rows = rel_rows
        self.rel_pivots = rel_pivots
        self.free = [c for c in range(n * n) if c not in rel_pivots]

    def project(self, vec):
        """Reduce an ambient tensor vector mod the relations; returns
        coordinates on the free (quotient) positions."""
        v = list(vec)
        for row, p in zip(self.rel_rows, self.rel_pivots):
            if v[p]:
                c = v[p]
                v = [a - c * b for a, b in zip(v, row)]
        return [v[c] for c in self.free]

    def dim(self):
        return len(self.free)

    def left_mult_ambient(self, a_vec, vec):
        """a . (u (x) v) on the plain tensor square."""
        n = self.n
        out = [Fraction(0)] * (n * n)
        for i in range(n):
            col = self.A.multiply(a_vec, _unit_vec(n, i))
            for j in range(n):
                c = vec[i * n + j]
                if c:
                    for k, x in enumerate(col):
                        if x:
                            out[k * n + j] += c * x
        return out

    def right_mult_ambient(self, vec, a_vec):
        n = self.n
        out = [Fraction(0)] * (n * n)
        for j in range(n):
            row = self.A.multiply(_unit_vec(n, j), a_vec)
            for i in range(n):
                c = vec[i * n + j]
                if c:
                    for k, x in enumerate(row):
                        if x:
                            out[i * n + k] += c * x
        return out

    def mu_ambient(self, vec):
        n = self.n
        out = [Fraction(0)] * n
        for i in range(n):
            for j in range(n):
                c = vec[i * n + j]
                if c:
                    prod = self.A.multiply(_unit_vec(n, i), _unit_vec(n, j))
                    for k, x in enumerate(prod):
                        out[k] += c * x
        return out

    def lift(self, coords):
        """Ambient representative of quotient coordinates."""
        n = self.n
        v = [Fraction(0)] * (n * n)
        for c, pos in zip(coords, self.free):
            v[pos] = c
        return v


def is_separable_extension(A, inclusion, cap=DEFAULT_FINDIM_CAP):
    """Solve {t A-central in A (x)_B A, mu(t) = 1}.

    Returns (separable: bool, witness ambient tensor vector or None).
    The witness is verified against the defining relations exactly.
    """
    rts = RelativeTensorSquare(A, inclusion, cap=cap)
    n = A.dimension
    q = rts.dim()
    # quotient basis lifts
    lifts = [rts.lift(_unit_vec(q, i)) for i in range(q)]
    rows = []
    rhs = []
    for a_idx in range(n):
        a = _unit_vec(n, a_idx)
        cols = []
        for lv in lifts:
            diff = [x - y for x, y in
                    zip(rts.left_mult_ambient(a, lv),
                        rts.right_mult_ambient(lv, a))]
            cols.append(rts.project(diff))
        for r in range(q):
            rows.append([cols[c][r] for c in range(q)])
            rhs.append(Fraction(0))
    mu_cols = [rts.mu_ambient(lv) for lv in lifts]
    for k in range(n):
        rows.append([mu_cols[c][k] for c in range(q)])
        rhs.append(A.unit[k])
    sol, _ = solve_affine(rows, rhs)
    if sol is None:
        return False, None
    witness = rts.lift(sol)
    verify_separability_witness(A, rts, witness)
    return True, witness


def verify_separability_witness(A, rts, witness):
    """Exact check: A-centrality residual zero in the quotient, mu = 1."""
    n = A.dimension
    for a_idx in range(n):
        a = _unit_vec(n, a_idx)
        diff = [x - y for x, y in
                zip(rts.left_mult_ambient(a, witness),
                    rts.right_mult_ambient(witness, a))]
        assert not any(rts.project(diff)), "centrality residual nonzero"
    assert rts.mu_ambient(witness) == A.unit, "mu(e) != 1"


def prop_rad_check(A, inclusion):
    """Radical criterion: separable iff J(A) = J(B), when J(B) is an
    ideal of A.  Returns 'separable', 'inseparable' or 'not-applicable'."""
    JB_sub = _sub_radical(A, inclusion)
    n = A.dimension
    if JB_sub:
        span = _SpanChecker(JB_sub)
        for v in JB_sub:
            for i in range(n):
                bi = _unit_vec(n, i)
                if not span.contains(A.multiply(bi, v)) or \
                        not span.contains(A.multiply(v, bi)):
                    return "not-applicable"
    JA = radical(A)
    if _same_span(JA, JB_sub, n):
        return "separable"
    return "inseparable"


def _sub_radical(A, inclusion):
    """J(B) expressed in ambient coordinates."""
    basis = inclusion.sub_basis
    m = len(basis)
    # B as its own structure-constant algebra
    span = _SpanChecker(basis)
    pivots = span.pivots

    def coords(v):
        v = list(v)
        out = []
        for row, p in zip(basis, pivots):
            c = v[p]
            out.append(c)
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        assert not any(v)
        return out

    mult = [[coords(A.multiply(basis[i], basis[j])) for j in range(m)]
            for i in range(m)]
    B = StructureConstantAlgebra(dimension=m, mult=mult,
                                 unit=coords(A.unit), name="sub")
    JB = radical(B)
    out = []
    for v in JB:
        amb = [Fraction(0)] * A.dimension
        for c, bvec in zip(v, basis):
            for k, x in enumerate(bvec):
                amb[k] += c * x
        out.append(amb)
    rows, _ = rref(out)
    return [r for r in rows if any(r)]


def _same_span(u, v, n):
    ru = [r for r in rref(u)[0] if any(r)] if u else []
    rv = [r for r in rref(v)[0] if any(r)] if v else []
    return ru == rv


# ---------------------------------------------------------------------------
# fixtures


def matrix_algebra(n):
    """M_n(Q) on the basis of matrix units e_ij (row-major)."""
    units = [(i, j) for i in range(n) for j in range(n)]
    return _matrix_span_algebra(n, [
        {(i, j): Fraction(1)} for (i, j) in units],
        name=f"M{n}",
        labels=[f"e{i+1}{j+1}" for (i, j) in units])


def _matrix_span_algebra(m, basis_mats, name="", labels=None):
    """Algebra spanned inside M_m(Q) by the given sparse matrices."""
    dim = len(basis_mats)
    flat = []
    for mat in basis_mats:
        v = [Fraction(0)] * (m * m)
        for (i, j), c in mat.items():
            v[i * m + j] = c
        flat.append(v)
    rows, _ = rref(flat)
    assert len(rows) == dim, "matrix basis not independent"
    span = _SpanChecker(rows)

    def coords(vflat):
        v = list(vflat)
        out = [Fraction(0)] * dim
        # express in the original (not echelon) basis by solving
        sol, _ = solve_affine(
            [[flat[b][k] for b in range(dim)] for k in range(m * m)], v)
        assert sol is not None, "product left the span"
        return sol

    def mat_mul_flat(u, v):
        out = [Fraction(0)] * (m * m)
        for i in range(m):
            for k in range(m):
                a = u[i * m + k]
                if a:
                    for j in range(m):
                        b = v[k * m + j]
                        if b:
                            out[i * m + j] += a * b
        return out

    mult = [[coords(mat_mul_flat(flat[i], flat[j])) for j in range(dim)]
            for i in range(dim)]
    ident = [Fraction(1) if i == j else Fraction(0)
             for i in range(m) for j in range(m)]
    unit = coords(ident)
    A = StructureConstantAlgebra(dimension=dim, mult=mult, unit=unit,
                                 labels=labels or [], name=name)
    A.embedding_size = m
    A.flat_basis = flat
    return A


def upper_triangular_algebra(n):
    """T_n(Q), upper-triangular matrices."""
    units = [(i, j) for i in range(n) for j in range(i, n)]
    return _matrix_span_algebra(
        n, [{(i, j): Fraction(1)} for (i, j) in units],
        name=f"T{n}", labels=[f"e{i+1}{j+1}" for (i, j) in units])


def strict_upper_subalgebra(A, n):
    """k1 + strictly upper triangulars inside T_n, in A's coordinates."""
    vectors = [list(A.unit)]
    for idx, lab in enumerate(A.labels):
        i, j = int(lab[1]), int(lab[2])
        if j > i:
            vectors.append(_unit_vec(A.dimension, idx))
    return AlgebraInclusion(A, vectors)


def jordan_subalgebra(A, n):
    """k1 + k(e12 + ... + e_{n-1,n}) + ... + k e_1n inside T_n."""
    vectors = [list(A.unit)]
    for shift in range(1, n):
        v = [Fraction(0)] * A.dimension
        for idx, lab in enumerate(A.labels):
            i, j = int(lab[1]), int(lab[2])
            if j - i == shift:
                v[idx] = Fraction(1)
        vectors.append(v)
    return AlgebraInclusion(A, vectors)


def structural_matrix_example():
    """The inseparable fixture: a Sweedler-Nakayama subalgebra inside a
    structural matrix algebra in M_4.

    Returns (A, inclusion).  The ambient pattern is the reflexive-transitive
    closure of {(2,1), (3,1), (4,1), (4,2), (4,3)}; it must contain e21 for
    the stated subalgebra to embed.
    """
    pattern = [(0, 0), (1, 1), (2, 2), (3, 3),
               (1, 0), (2, 0), (3, 0), (3, 1), (3, 2)]
    A = _matrix_span_algebra(
        4, [{(i, j): Fraction(1)} for (i, j) in pattern],
        name="structural",
        labels=[f"e{i+1}{j+1}" for (i, j) in pattern])
    lab = {l: idx for idx, l in enumerate(A.labels)}

    def unit_at(label):
        return _unit_vec(A.dimension, lab[label])

    b1 = [a + b for a, b in zip(unit_at("e11"), unit_at("e44"))]
    b2 = [a + b for a, b in zip(unit_at("e22"), unit_at("e33"))]
    inclusion = AlgebraInclusion(A, [b1, b2, unit_at("e21"), unit_at("e43")])
    return A, inclusion


def monoid_algebra(n):
    """Commutative monoid algebra on 1, f, ..., f^(2n-1) with f^(2n) = f^n.

    Returns (M, e) with e = f^n (an idempotent).  The decomposition
    e*M + (1-e)*M is a direct sum of two n-dimensional pieces.
    """
    assert n >= 1
    dim = 2 * n

    def reduce_power(k):
        # f^k in the basis {1, f, ..., f^(2n-1)}
        while k >= 2 * n:
            k -= n
        return k

    mult = []
    for i in range(dim):
        row = []
        for j in range(dim):
            row.append(_unit_vec(dim, reduce_power(i + j)))
        mult.append(row)
    M = StructureConstantAlgebra(dimension=dim, mult=mult,
                                 unit=_unit_vec(dim, 0),
                                 labels=[f"f^{i}" for i in range(dim)],
                                 name=f"M({2*n},{n})")
    e = _unit_vec(dim, n)
    assert M.multiply(e, e) == e
    return M, e


def monoid_decomposition_dims(M, e):
    """(dim e*M, dim (1-e)*M); their direct sum is all of M."""
    n = M.dimension
    one_minus_e = [a - b for a, b in zip(M.unit, e)]
    eM = [M.multiply(e, _unit_vec(n, i)) for i in range(n)]
    fM = [M.multiply(one_minus_e, _unit_vec(n, i)) for i in range(n)]
    de = rank(eM)
    df = rank(fM)
    assert rank(eM + fM) == de + df == n
    return de, df


def monoid_nilpotent_part_subalgebra(M, e):
    """Closure of {1, (1-e) f} -- isomorphic to Q[X]/(X^m)."""
    n = M.dimension
    one_minus_e = [a - b for a, b in zip(M.unit, e)]
    f = _unit_vec(n, 1)
    gen = M.multiply(one_minus_e, f)
    return subalgebra_closure(M, [list(M.unit), gen])


def matrix_algebra_separability_witnesses(n):
    """The n witnesses e_j = sum_i e_ij (x) e_ji for M_n over its ground
    field, as ambient tensor vectors over the matrix-unit basis."""
    A = matrix_algebra(n)
    dim = A.dimension

    def unit_index(i, j):
        return i * n + j

    out = []
    for j in range(n):
        vec = [Fraction(0)] * (dim * dim)
        for i in range(n):
            vec[unit_index(i, j) * dim + unit_index(j, i)] = Fraction(1)
        out.append(vec)
    return A, out
