"""Exact rational linear algebra inside kG, the tensor square over kH, and
the endomorphism ring of kG as a kH-bimodule.

The tensor square A (x)_B A is spanned by {g (x) g_i} for g in G and g_i in
a fixed right transversal of H, with the rewrite g_i * a = h * g_j pulling
everything back onto the canonical basis.  Left/right multiplications by
group elements permute that basis, so the A-central (Casimir) and H-central
(T) subspaces are fixed spaces of permutation actions and come out as orbit
indicator bases -- already in reduced echelon form.  The same holds for the
bimodule endomorphism space U inside the |G| x |G| matrix coordinates.
"""

from fractions import Fraction

from .errors import CapExceeded, NotInT
from .linalg import SparseEchelon, solve_affine
from .permgroup import h_orbits, right_transversal

DEFAULT_LINEAR_CAP = 4096


def _orbit_partition(size, perms):
    """Orbits of {0..size-1} under a list of index permutations."""
    seen = [False] * size
    orbits = []
    for start in range(size):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        stack = [start]
        while stack:
            x = stack.pop()
            for p in perms:
                y = p[x]
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
                    stack.append(y)
        orbits.append(tuple(sorted(orb)))
    orbits.sort(key=lambda o: o[0])
    return orbits


def _indicator(orbit):
    return {i: Fraction(1) for i in orbit}


class TensorSquare:
    """Canonical-basis model of A (x)_B A for A = kG, B = kH.

    Basis index of g (x) g_i is  g_index * n + i  with elements of G sorted
    and the transversal identity-first.
    """

    def __init__(self, G, H, cap=DEFAULT_LINEAR_CAP):
        self.G = G
        self.H = H
        self.transversal = right_transversal(G, H)
        self.n = len(self.transversal)
        self.dim = G.order * self.n
        if self.dim > cap:
            raise CapExceeded("dim(A tensor_B A)", self.dim, cap)
        self.cap = cap
        # coset factorization x = h * g_j for every x in G
        self._coset = {}
        for j, rep in enumerate(self.transversal):
            for h in H.elements:
                self._coset[h * rep] = (j, h)
        self._left_cache = {}
        self._right_cache = {}

    def basis_index(self, g, i):
        return self.G.index_of(g) * self.n + i

    def basis_pair(self, idx):
        g = self.G.elements[idx // self.n]
        return g, idx % self.n

    # --- actions (all permutations of the basis, memoized per element) ---

    def left_perm(self, a):
        """Index permutation of t -> a * t."""
        cached = self._left_cache.get(a)
        if cached is not None:
            return cached
        n = self.n
        gmap = [self.G.index_of(a * g) for g in self.G.elements]
        out = [0] * self.dim
        for idx in range(self.dim):
            out[idx] = gmap[idx // n] * n + idx % n
        self._left_cache[a] = out
        return out

    def right_perm(self, a):
        """Index permutation of t -> t * a."""
        cached = self._right_cache.get(a)
        if cached is not None:
            return cached
        n = self.n
        moves = [self._coset[rep * a] for rep in self.transversal]
        hmaps = {}
        out = [0] * self.dim
        for i, (j, h) in enumerate(moves):
            hmap = hmaps.get(h)
            if hmap is None:
                hmap = [self.G.index_of(g * h) for g in self.G.elements]
                hmaps[h] = hmap
            for gi in range(self.G.order):
                out[gi * n + i] = hmap[gi] * n + j
        self._right_cache[a] = out
        return out

    def right_action(self, t, a):
        perm = self.right_perm(a)
        return {perm[k]: v for k, v in t.items()}

    def left_action(self, t, a):
        perm = self.left_perm(a)
        return {perm[k]: v for k, v in t.items()}

    def conj_perms(self, elements):
        """Permutations t -> s^-1 * t * s for s in elements."""
        perms = []
        for s in elements:
            lp = self.left_perm(s.inverse())
            rp = self.right_perm(s)
            perms.append([lp[rp[i]] for i in range(self.dim)])
        return perms

    def mu(self, t):
        """Multiplication map g (x) g_i -> g * g_i, as a kG vector."""
        out = {}
        for idx, c in t.items():
            g, i = self.basis_pair(idx)
            k = self.G.index_of(g * self.transversal[i])
            out[k] = out.get(k, 0) + c
            if not out[k]:
                del out[k]
        return out

    def t_product_index(self, idx1, idx2):
        """Index of the T-product of two basis elements.

        (g (x) g_i) . (g' (x) g_j) = g' g h (x) g_k  where g_i g_j = h g_k.
        """
        g, i = self.basis_pair(idx1)
        gp, j = self.basis_pair(idx2)
        k, h = self._coset[self.transversal[i] * self.transversal[j]]
        return self.basis_index(gp * g * h, k)

    def t_product(self, t1, t2):
        out = {}
        for i1, c1 in t1.items():
            for i2, c2 in t2.items():
                k = self.t_product_index(i1, i2)
                out[k] = out.get(k, 0) + c1 * c2
        return {k: v for k, v in out.items() if v}

    def unit(self):
        """1 (x) 1."""
        return {self.basis_index(self.G.identity, 0): Fraction(1)}

    # --- distinguished subspaces (orbit bases) ---

    def casimir_basis(self):
        """Orbit-indicator basis of (A (x)_B A)^A."""
        perms = self.conj_perms(self.G.generators)
        return [_indicator(o) for o in _orbit_partition(self.dim, perms)]

    def t_basis(self):
        """Orbit-indicator basis of T = (A (x)_B A)^B."""
        gens = self.H.generators or [self.G.identity]
        perms = self.conj_perms(gens)
        return [_indicator(o) for o in _orbit_partition(self.dim, perms)]

    def in_t(self, t):
        gens = self.H.generators or [self.G.identity]
        for perm in self.conj_perms(gens):
            moved = {perm[k]: v for k, v in t.items()}
            if moved != t:
                return False
        return True

    def is_central(self, t):
        """A-centrality: invariance under conjugation by all generators."""
        for perm in self.conj_perms(self.G.generators):
            moved = {perm[k]: v for k, v in t.items()}
            if moved != t:
                return False
        return True

    def canonical_separability_element(self):
        """(1/[G:H]) sum_i g_i^-1 (x) g_i."""
        c = Fraction(1, self.n)
        out = {}
        for i, rep in enumerate(self.transversal):
            idx = self.basis_index(rep.inverse(), i)
            out[idx] = out.get(idx, 0) + c
        return out


def centralizer_basis(G, H):
    """H-orbit sums spanning A^B, as kG coefficient dicts."""
    orbits = h_orbits(G, H)
    return [{G.index_of(g): Fraction(1) for g in orb} for orb in orbits]


def group_vec_mul(G, u, v):
    """Product of two kG coefficient dicts."""
    out = {}
    for i, a in u.items():
        gi = G.elements[i]
        for j, b in v.items():
            k = G.index_of(gi * G.elements[j])
            out[k] = out.get(k, 0) + a * b
    return {k: v for k, v in out.items() if v}


def casimir_space(G, H, cap=DEFAULT_LINEAR_CAP):
    ts = TensorSquare(G, H, cap=cap)
    return ts, ts.casimir_basis()


def separability_elements(G, H, ts=None, cap=DEFAULT_LINEAR_CAP):
    """Classify the solutions of {t A-central, mu(t) = 1}.

    Returns (kind, witness, kernel_dim) with kind in
    {"none", "unique", "infinite"}.  The witness, when the index is
    invertible, is the canonical element (1/[G:H]) sum g_i^-1 (x) g_i.
    """
    if ts is None:
        ts = TensorSquare(G, H, cap=cap)
    cas = ts.casimir_basis()
    # affine system: sum_a c_a mu(w_a) = 1 in kG
    mus = [ts.mu(w) for w in cas]
    rows = []
    rhs = []
    for gi in range(G.order):
        rows.append([m.get(gi, Fraction(0)) for m in mus])
        rhs.append(Fraction(1) if gi == G.index_of(G.identity)
                   else Fraction(0))
    sol, kernel = solve_affine(rows, rhs)
    if sol is None:
        return "none", None, len(kernel)
    e = ts.canonical_separability_element()
    assert ts.is_central(e)
    assert ts.mu(e) == {G.index_of(G.identity): Fraction(1)}
    kind = "unique" if not kernel else "infinite"
    return kind, e, len(kernel)


def unique_separable(G, H, ts=None, cap=DEFAULT_LINEAR_CAP):
    kind, _, _ = separability_elements(G, H, ts=ts, cap=cap)
    return kind == "unique"


def idempotent_in_t(ts, e):
    if not ts.in_t(e):
        raise NotInT("element is not H-central")
    return ts.t_product(e, e) == e


def _teT_candidates(ts):
    """Spanning set of the ideal TeT.

    T.e = Casimir and w.r = w with the second leg right-multiplied by
    r = t^1 t^2 in A^B, so TeT is spanned by {Casimir basis} x {A^B basis}.
    """
    G = ts.G
    cent = centralizer_basis(G, ts.H)
    for w in ts.casimir_basis():
        for r in cent:
            vec = {}
            for gi in r:       # orbit sums have coefficient 1
                moved = ts.right_action(w, G.elements[gi])
                for k, v in moved.items():
                    vec[k] = vec.get(k, 0) + v
            yield vec


def _trace_form_signatures(ts):
    """Per-basis-point values of the trace forms that separate T's blocks.

    T is semisimple, so 1 lies in an ideal I iff every trace functional
    vanishing on I vanishes at 1.  The trace forms on T are spanned by
    t -> Tr(rho(z) rho(t)) with z running over class-sum pairs K (x) K' in
    the center of A (x) A^op acting on A (x)_B A; evaluated on a basis
    point b (x) g_j that trace counts, up to the constant factor dim,
    the h in H with (b h)^-1 in K and g_j^-1 h in K'.  Returns, for each
    basis index, a dict {(K-index, K'-index): count}.
    """
    from .permgroup import conjugacy_classes
    G, H = ts.G, ts.H
    classes = conjugacy_classes(G)
    class_of = {}
    for ci, cls in enumerate(classes):
        for g in cls:
            class_of[g] = ci
    sigs = []
    for b in G.elements:
        for j, rep in enumerate(ts.transversal):
            sig = {}
            for h in H.elements:
                key = (class_of[(b * h).inverse()],
                       class_of[rep.inverse() * h])
                sig[key] = sig.get(key, 0) + 1
            sigs.append(sig)
    return sigs, len(classes)


def is_full_in_T(G, H, e=None, ts=None, cap=DEFAULT_LINEAR_CAP):
    """Fullness of a separability idempotent in T = (A (x)_B A)^B.

    TeT = T iff 1 is in TeT, which (T being semisimple in characteristic
    zero) holds iff the trace-form image of 1 lies in the span of the
    trace-form images of a spanning set of TeT.  That image space has one
    coordinate per pair of conjugacy classes of G, so the membership test
    stays small no matter how large the tensor square is.
    """
    if ts is None:
        ts = TensorSquare(G, H, cap=cap)
    if e is None:
        e = ts.canonical_separability_element()
    if not idempotent_in_t(ts, e):
        raise NotInT("e is not an idempotent of T")
    sigs, r = _trace_form_signatures(ts)

    def project(vec):
        out = {}
        for idx, coeff in vec.items():
            for (ki, kj), cnt in sigs[idx].items():
                key = ki * r + kj
                out[key] = out.get(key, 0) + coeff * cnt
        return out

    ech = SparseEchelon()
    for vec in _teT_candidates(ts):
        ech.add(project(vec))
    return ech.contains(project(ts.unit()))


def is_full_in_T_span(G, H, e=None, ts=None, cap=DEFAULT_LINEAR_CAP):
    """Fullness via the explicit span of TeT inside T (small pairs only)."""
    if ts is None:
        ts = TensorSquare(G, H, cap=cap)
    if e is None:
        e = ts.canonical_separability_element()
    if not idempotent_in_t(ts, e):
        raise NotInT("e is not an idempotent of T")
    tdim = len(ts.t_basis())
    ech = SparseEchelon()
    for vec in _teT_candidates(ts):
        ech.add(vec)
        if ech.rank == tdim:
            return True
    return ech.rank == tdim


def t_span_brute(ts, e):
    """Span of {t_a . e . t_b} over the T-basis, for cross-checking the
    reduced TeT computation on small pairs."""
    basis = ts.t_basis()
    ech = SparseEchelon()
    for ta in basis:
        left = ts.t_product(ta, e)
        for tb in basis:
            ech.add(ts.t_product(left, tb))
    return ech


# ---------------------------------------------------------------------------
# U = End of A as an H-bimodule, in |G| x |G| matrix coordinates.
# Index of matrix entry (y, x) -- image coefficient y of basis element x --
# is  y_index * |G| + x_index.


class USpace:
    def __init__(self, G, H, cap=DEFAULT_LINEAR_CAP):
        self.G = G
        self.H = H
        self.ambient = G.order * G.order
        if self.ambient > cap:
            raise CapExceeded("dim(U ambient)", self.ambient, cap)
        perms = []
        N = G.order
        for h in (H.generators or [G.identity]):
            # F[y][x] = F[h y][h x]  and  F[y][x] = F[y h][x h]
            lp = [G.index_of(h * g) for g in G.elements]
            rp = [G.index_of(g * h) for g in G.elements]
            perms.append([lp[idx // N] * N + lp[idx % N]
                          for idx in range(self.ambient)])
            perms.append([rp[idx // N] * N + rp[idx % N]
                          for idx in range(self.ambient)])
        self.orbits = _orbit_partition(self.ambient, perms)

    def basis(self):
        return [_indicator(o) for o in self.orbits]

    @property
    def dim(self):
        return len(self.orbits)

    def projection_E(self):
        """The H-support projection as a matrix vector."""
        N = self.G.order
        return {self.G.index_of(h) * N + self.G.index_of(h): Fraction(1)
                for h in self.H.elements}

    def identity_map(self):
        N = self.G.order
        return {i * N + i: Fraction(1) for i in range(N)}

    def compose(self, f, g):
        """Matrix product f . g in sparse entry coordinates."""
        N = self.G.order
        # column -> entries of g
        gcols = {}
        for idx, v in g.items():
            y, x = divmod(idx, N)
            gcols.setdefault(x, []).append((y, v))
        frows = {}
        for idx, v in f.items():
            y, x = divmod(idx, N)
            frows.setdefault(x, []).append((y, v))
        out = {}
        for x, col in gcols.items():
            for (z, gv) in col:
                for (y, fv) in frows.get(z, ()):
                    k = y * N + x
                    out[k] = out.get(k, 0) + fv * gv
        return {k: v for k, v in out.items() if v}

    def left_mul_matrix(self, vec):
        """lambda_c for a kG coefficient dict c."""
        N = self.G.order
        out = {}
        for zi, coeff in vec.items():
            z = self.G.elements[zi]
            for x in range(N):
                y = self.G.index_of(z * self.G.elements[x])
                k = y * N + x
                out[k] = out.get(k, 0) + coeff
        return {k: v for k, v in out.items() if v}


def u_space(G, H, cap=DEFAULT_LINEAR_CAP):
    return USpace(G, H, cap=cap)


def is_full_in_U(G, H, U=None, cap=DEFAULT_LINEAR_CAP):
    """Fullness of the H-support projection E in U.

    UEU = span{lambda_c . f} with c over a basis of A^B and f over a basis
    of V = E . U (bimodule maps A -> B): alpha . E . beta factors through
    alpha(1) in A^B.
    """
    if U is None:
        U = USpace(G, H, cap=cap)
    E = U.projection_E()
    # V = span{E . beta}
    vech = SparseEchelon()
    for beta in U.basis():
        vech.add(U.compose(E, beta))
    ech = SparseEchelon()
    for c in centralizer_basis(G, H):
        lam = U.left_mul_matrix(c)
        for f in vech.basis():
            ech.add(U.compose(lam, f))
            if ech.rank == U.dim:
                return True
    return ech.rank == U.dim


def u_span_brute(U):
    """Span of {alpha . E . beta} over the U basis (small pairs only)."""
    E = U.projection_E()
    ech = SparseEchelon()
    basis = U.basis()
    for a in basis:
        left = U.compose(a, E)
        for b in basis:
            ech.add(U.compose(left, b))
    return ech


def corner_dims(G, H, ts=None, U=None, cap=DEFAULT_LINEAR_CAP):
    """(dim eTe, dim EUE) for the canonical e and E.

    eTe = mu(Casimir) . e -- left multiplication on the first tensor leg;
    EUE is the H x H matrix block of U.
    """
    if ts is None:
        ts = TensorSquare(G, H, cap=cap)
    e = ts.canonical_separability_element()
    ech = SparseEchelon()
    for w in ts.casimir_basis():
        z = ts.mu(w)
        vec = {}
        for gi, coeff in z.items():
            moved = ts.left_action(e, G.elements[gi])
            for k, v in moved.items():
                vec[k] = vec.get(k, 0) + coeff * v
        ech.add(vec)
    dim_eTe = ech.rank
    if U is None:
        U = USpace(G, H, cap=cap)
    E = U.projection_E()
    ech2 = SparseEchelon()
    for beta in U.basis():
        ech2.add(U.compose(E, U.compose(beta, E)))
    return dim_eTe, ech2.rank


def e_index(G, H):
    """sum_i g_i^-1 g_i as a kG vector; checked central and
    transversal-independent."""
    trans = right_transversal(G, H)
    out = _transversal_index_sum(G, trans)
    # second transversal: maximal coset representatives
    alt = []
    seen = set()
    for g in G.elements:
        if g in seen:
            continue
        coset = {h * g for h in H.elements}
        alt.append(max(coset))
        seen |= coset
    assert _transversal_index_sum(G, alt) == out
    for g in G.generators:
        gi = {G.index_of(g): Fraction(1)}
        assert group_vec_mul(G, gi, out) == group_vec_mul(G, out, gi)
    return out


def _transversal_index_sum(G, trans):
    out = {}
    for rep in trans:
        k = G.index_of(rep.inverse() * rep)
        out[k] = out.get(k, 0) + Fraction(1)
    return {k: v for k, v in out.items() if v}


class TProductTable:
    """T with structure constants over its orbit basis (small pairs)."""

    def __init__(self, ts):
        self.ts = ts
        self.basis = ts.t_basis()
        ech = SparseEchelon()
        for b in self.basis:
            ech.add(b)
        self._ech = ech

    def product(self, i, j):
        return self.ts.t_product(self.basis[i], self.basis[j])

    def coords(self, vec):
        """Coordinates over the orbit basis (supports are disjoint)."""
        out = {}
        for b_idx, b in enumerate(self.basis):
            rep = min(b)
            if rep in vec:
                out[b_idx] = vec[rep]
        # verify the vector is truly in T
        recon = {}
        for b_idx, c in out.items():
            for k in self.basis[b_idx]:
                recon[k] = recon.get(k, 0) + c
        if {k: v for k, v in recon.items() if v} != \
                {k: v for k, v in vec.items() if v}:
            raise NotInT("product left the H-central subspace")
        return out
