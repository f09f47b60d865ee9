"""Weil monoids: the discrete combinatorics layer.

A Weil monoid of size n and minimal degree c is the semidirect product
cN x_theta S for a finite group S and an automorphism theta; the graded
piece of degree s is {(s, sigma)} and

    (s1, sigma1)(s2, sigma2) = (s1 + s2, theta^(s2/c)(sigma1) sigma2),

which matches composition of Frobenius lifts phi^(s/c) sigma.  Group
elements are indices into a Cayley table with identity 0.
"""

from dataclasses import dataclass
from itertools import permutations, product

from .errors import NotAnAutomorphism, NotNormalized


class Group:
    """Finite group given by a Cayley table; element 0 is the identity."""

    def __init__(self, table):
        self.table = tuple(tuple(r) for r in table)
        self.n = len(self.table)
        self._validate()

    def _validate(self):
        n = self.n
        for row in self.table:
            if len(row) != n or sorted(row) != list(range(n)):
                raise ValueError("Cayley table rows must be permutations")
        for j in range(n):
            if self.table[0][j] != j or self.table[j][0] != j:
                raise ValueError("element 0 must be the identity")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        raise ValueError("Cayley table is not associative")
        self.inv = tuple(
            next(b for b in range(n) if self.mul(a, b) == 0) for a in range(n)
        )

    def mul(self, a, b):
        return self.table[a][b]

    def is_abelian(self):
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in range(self.n)
            for b in range(a + 1, self.n)
        )

    def is_automorphism(self, perm):
        if sorted(perm) != list(range(self.n)) or perm[0] != 0:
            return False
        return all(
            perm[self.mul(a, b)] == self.mul(perm[a], perm[b])
            for a in range(self.n)
            for b in range(self.n)
        )

    def automorphisms(self):
        """All automorphisms, by brute force (intended for n <= 8)."""
        out = []
        for perm in permutations(range(self.n)):
            if perm[0] == 0 and self.is_automorphism(perm):
                out.append(perm)
        return out

    @staticmethod
    def cyclic(n):
        return Group([[(a + b) % n for b in range(n)] for a in range(n)])

    @staticmethod
    def direct_product(g, h):
        n, m = g.n, h.n
        # element (a, b) has index a*m + b
        table = [
            [g.mul(a1, a2) * m + h.mul(b1, b2) for a2 in range(n) for b2 in range(m)]
            for a1 in range(n)
            for b1 in range(m)
        ]
        return Group(table)

    @staticmethod
    def symmetric(k):
        elems = sorted(permutations(range(k)))
        # put the identity first
        ident = tuple(range(k))
        elems.remove(ident)
        elems.insert(0, ident)
        index = {e: i for i, e in enumerate(elems)}
        compose = lambda a, b: tuple(a[b[i]] for i in range(k))
        table = [[index[compose(a, b)] for b in elems] for a in elems]
        return Group(table)

    def __repr__(self):
        return f"Group(order={self.n})"


def groups_of_order(n):
    """All isomorphism classes of groups of order n, for n <= 6."""
    if n == 1:
        return [Group([[0]])]
    if n in (2, 3, 5):
        return [Group.cyclic(n)]
    if n == 4:
        return [Group.cyclic(4), Group.direct_product(Group.cyclic(2), Group.cyclic(2))]
    if n == 6:
        return [Group.cyclic(6), Group.symmetric(3)]
    raise ValueError("catalog covers orders <= 6 only")


class WeilMonoid:
    """Semidirect product cN x_theta S.  Elements are pairs (s, a) with s a
    positive multiple of c and a an S-index."""

    def __init__(self, group, theta, c, galois_backing=None):
        if not group.is_automorphism(tuple(theta)):
            raise NotAnAutomorphism("theta is not an automorphism of S")
        self.S = group
        self.theta = tuple(theta)
        self.c = c
        self.n = group.n
        self.galois_backing = galois_backing  # (FieldSpec, tuple of HigherFrobenius)
        self.theta_order = self._perm_order(self.theta)
        # theta powers 0 .. order-1
        self._theta_pows = [tuple(range(self.n))]
        for _ in range(self.theta_order - 1):
            prev = self._theta_pows[-1]
            self._theta_pows.append(tuple(self.theta[prev[i]] for i in range(self.n)))

    @staticmethod
    def _perm_order(perm):
        k, cur = 1, perm
        ident = tuple(range(len(perm)))
        while cur != ident:
            cur = tuple(perm[i] for i in cur)
            k += 1
        return k

    def theta_pow(self, k, a):
        return self._theta_pows[k % self.theta_order][a]

    def mul(self, x, y):
        (s1, a1), (s2, a2) = x, y
        return (s1 + s2, self.S.mul(self.theta_pow(s2 // self.c, a1), a2))

    def power(self, x, t):
        acc = x
        for _ in range(t - 1):
            acc = self.mul(acc, x)
        return acc

    def degree_piece(self, s):
        return [(s, a) for a in range(self.n)]

    def is_abelian(self):
        return self.S.is_abelian() and self.theta == tuple(range(self.n))

    def commute(self, x, y):
        return self.mul(x, y) == self.mul(y, x)

    def is_central(self, x):
        gens = self.degree_piece(self.c)
        return all(self.commute(x, g) for g in gens)

    def centralizing_power(self, elem):
        """Least t with elem^t commuting with all of the monoid; brute force
        over t <= n * order(theta)."""
        bound = self.n * self.theta_order
        for t in range(1, bound + 1):
            if self.is_central(self.power(elem, t)):
                return t
        return None

    def realize(self, elem):
        """The concrete HigherFrobenius for a monoid element, when a Galois
        backing is present."""
        fs, lifts = self.galois_backing
        s, a = elem
        # (s, a) = (s - c, 0) * (c, a): theta^1(identity) * a = a.
        if s == self.c:
            return lifts[a]
        rest = self.realize((s - self.c, 0))
        return rest.compose(lifts[a])

    def __repr__(self):
        kind = "abelian" if self.is_abelian() else "nonabelian"
        return f"WeilMonoid(n={self.n}, c={self.c}, {kind})"


def from_pair(group, theta, c=1, galois_backing=None):
    return WeilMonoid(group, theta, c, galois_backing)


def galois_realization(fs, phi, subgroup):
    """Weil monoid generated by {phi . sigma : sigma in subgroup}.

    phi is a HigherFrobenius of degree c; the subgroup is a list of
    GaloisElements closed under composition and normalized by phi.
    """
    c = phi.s
    exps = sorted({g.j for g in subgroup})
    n = len(exps)
    if 0 not in exps:
        raise NotNormalized("subgroup must contain the identity")
    for a in exps:
        for b in exps:
            if (a + b) % fs.e not in exps:
                raise NotNormalized("exponent set is not closed under composition")
    # conjugation by phi: j -> j * p^{-c} mod e
    conj = {j: fs.frobenius(c, 0).conjugate_galois(fs.galois(j)).j for j in exps}
    if sorted(conj.values()) != exps:
        raise NotNormalized("phi does not normalize the subgroup")
    index = {j: i for i, j in enumerate(exps)}
    table = [[index[(a + b) % fs.e] for b in exps] for a in exps]
    theta = tuple(index[conj[j]] for j in exps)
    lifts = tuple(_compose_phi_sigma(fs, phi, j) for j in exps)
    monoid = WeilMonoid(Group(table), theta, c, galois_backing=(fs, lifts))
    monoid.sigma_exponents = tuple(exps)
    _check_backing_consistency(monoid)
    return monoid


def _compose_phi_sigma(fs, phi, j):
    """The lift phi . sigma_j (apply sigma_j first, then phi)."""
    from .local_field import HigherFrobenius

    # phi = (c, j0): phi o sigma_j = (c, j0 + j) by the composition law with
    # a degree-0 right factor.
    return HigherFrobenius(fs, phi.s, phi.j + j)


def _check_backing_consistency(monoid):
    """Abstract products must match composition of the backing lifts."""
    fs, lifts = monoid.galois_backing
    c, n = monoid.c, monoid.n
    for i in range(n):
        for j in range(n):
            abstract = monoid.mul((c, i), (c, j))
            concrete = lifts[i].compose(lifts[j])
            realized = monoid.realize(abstract)
            if concrete != realized:
                raise AssertionError(
                    "backing lifts do not realize the abstract star product"
                )


# ---------------------------------------------------------------------------
# labeling symbols


class LabelingSymbol:
    """Per-degree bijections {1..n} -> degree piece, built coherently from a
    base labeling omega_c and a scheme gamma (Eq. of coherent labels:
    phi_i^(s+c) = phi_gamma(s)^(c) phi_i^(s))."""

    def __init__(self, monoid, omega_c=None, gamma=None):
        self.monoid = monoid
        n, c = monoid.n, monoid.c
        self.omega_c = tuple(omega_c) if omega_c is not None else tuple(range(n))
        if sorted(self.omega_c) != list(range(n)):
            raise ValueError("omega_c must be a bijection onto S")
        if gamma is None:
            self.gamma = lambda s: 1
        elif isinstance(gamma, int):
            h = gamma
            self.gamma = lambda s: h
        else:
            self.gamma = gamma
        self._cache = {c: tuple((c, self.omega_c[i]) for i in range(n))}

    def degree_list(self, s):
        """Tuple of monoid elements (phi_1^(s), ..., phi_n^(s))."""
        c = self.monoid.c
        if s % c != 0 or s < c:
            raise ValueError("degree must be a positive multiple of c")
        if s not in self._cache:
            prev = self.degree_list(s - c)
            g = self.phi(self.gamma(s - c), c)
            self._cache[s] = tuple(self.monoid.mul(g, x) for x in prev)
        return self._cache[s]

    def phi(self, i, s):
        """phi_i^(s) for a 1-based label i."""
        return self.degree_list(s)[i - 1]

    def index_of(self, elem):
        """1-based label of a monoid element in its degree."""
        s = elem[0]
        return self.degree_list(s).index(elem) + 1

    def lift(self, i, s):
        """Concrete HigherFrobenius for phi_i^(s) (needs a Galois backing)."""
        return self.monoid.realize(self.phi(i, s))

    def is_coherent(self, max_degree=None):
        """Check Def. of coherence: phi_i^(s+c) (phi_i^(s))^-1 independent
        of i, for degrees up to max_degree."""
        m, c = self.monoid, self.monoid.c
        top = max_degree or 4 * c
        for s in range(c, top, c):
            cur, nxt = self.degree_list(s), self.degree_list(s + c)
            # left quotient z_i with z_i * cur_i = nxt_i:
            # (c, z)(s, a) = (s+c, theta^{s/c}(z) a) = (s+c, b)
            # => z = theta^{-s/c}(b a^{-1})
            quots = set()
            for (s1, a), (s2, b) in zip(cur, nxt):
                z = m.S.mul(b, m.S.inv[a])
                k = (-(s // c)) % m.theta_order
                quots.add(m.theta_pow(k, z))
            if len(quots) != 1:
                return False
        return True


def build_coherent_labeling(monoid, omega_c=None, gamma=None):
    return LabelingSymbol(monoid, omega_c, gamma)


def canonical_labeling(monoid, omega_c=None, h=1):
    return LabelingSymbol(monoid, omega_c, h)


# ---------------------------------------------------------------------------
# associative and Lie symbols


@dataclass
class SymbolTables:
    n: int
    s: int
    r: int
    star: tuple      # star[i-1][j-1] = (i*j)_{s,r}, 1-based values
    alpha: tuple     # alpha[k-1] is an n x n 0/1 matrix, alpha[k][j][i] entries
    ell: tuple       # ell[k-1][i][j] in {-1, 0, 1}

    def star_of(self, i, j):
        return self.star[i - 1][j - 1]


def symbol_tables(monoid, labeling, s=None, r=None):
    """alpha^{k(s,r)}_{ji} = 1 iff phi_i^(s) phi_j^(r) = phi_k^(s+r);
    ell^{k(s,r)}_{ij} = alpha^{k(s,r)}_{ji} - alpha^{k(r,s)}_{ij}."""
    c = monoid.c
    s = s if s is not None else c
    r = r if r is not None else c
    n = monoid.n
    star_sr = _star_table(monoid, labeling, s, r)
    star_rs = star_sr if s == r else _star_table(monoid, labeling, r, s)
    alpha_sr = _alpha_from_star(star_sr, n)
    alpha_rs = alpha_sr if s == r else _alpha_from_star(star_rs, n)
    ell = tuple(
        tuple(
            tuple(
                alpha_sr[k][j][i] - alpha_rs[k][i][j] for j in range(n)
            )
            for i in range(n)
        )
        for k in range(n)
    )
    tables = SymbolTables(n=n, s=s, r=r, star=star_sr, alpha=alpha_sr, ell=ell)
    _validate_tables(tables)
    return tables


def _star_table(monoid, labeling, s, r):
    n = monoid.n
    return tuple(
        tuple(
            labeling.index_of(monoid.mul(labeling.phi(i, s), labeling.phi(j, r)))
            for j in range(1, n + 1)
        )
        for i in range(1, n + 1)
    )


def _alpha_from_star(star, n):
    alpha = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            k = star[i][j] - 1
            alpha[k][j][i] = 1
    return tuple(tuple(tuple(r) for r in m) for m in alpha)


def _validate_tables(t):
    n = t.n
    for k in range(n):
        rows = t.alpha[k]
        if any(sum(r) > 1 for r in rows) or any(
            sum(rows[j][i] for j in range(n)) > 1 for i in range(n)
        ):
            raise AssertionError("alpha^k is not a partial permutation matrix")
    for i in range(n):
        for j in range(n):
            ks = [k for k in range(n) if t.alpha[k][j][i] == 1]
            if len(ks) != 1:
                raise AssertionError("exactly one k must have alpha^k_{ji} = 1")
    if t.s == t.r:
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    if t.ell[k][i][j] + t.ell[k][j][i] != 0:
                        raise AssertionError("ell^k is not antisymmetric")


def is_abelian(monoid):
    return monoid.is_abelian()


def centralizing_power(monoid, i, labeling=None):
    """Least t with (phi_i^(c))^t central, for a 1-based label i."""
    labeling = labeling or LabelingSymbol(monoid)
    return monoid.centralizing_power(labeling.phi(i, monoid.c))


# ---------------------------------------------------------------------------
# the graded ideal n_D in noncommutative polynomials

# A noncommutative polynomial is a dict {word: coefficient} with words being
# tuples of 1-based generator labels.


def _word_image(monoid, labeling, word):
    c = monoid.c
    acc = labeling.phi(word[0], c)
    for i in word[1:]:
        acc = monoid.mul(acc, labeling.phi(i, c))
    return acc


def ideal_generators(monoid, labeling=None):
    """The n(n-1) quadratic relators T_i T_j - T_1 T_k(i,j) with
    phi_i phi_j = phi_1 phi_k(i,j)."""
    labeling = labeling or LabelingSymbol(monoid)
    n, c = monoid.n, monoid.c
    gens = []
    for i in range(2, n + 1):
        for j in range(1, n + 1):
            target = monoid.mul(labeling.phi(i, c), labeling.phi(j, c))
            k = next(
                k
                for k in range(1, n + 1)
                if monoid.mul(labeling.phi(1, c), labeling.phi(k, c)) == target
            )
            gens.append({(i, j): 1, (1, k): -1})
    return gens


@dataclass
class GradedIdealComponent:
    degree: int
    words: tuple          # all words of length degree/c, lex order
    basis: tuple          # tuple of integer coefficient vectors (HNF rows)

    @property
    def rank(self):
        return len(self.basis)


def graded_component_basis(monoid, labeling, degree):
    """Z-basis (in Hermite normal form) of the kernel of T_mu -> phi_mu in
    the given degree."""
    c, n = monoid.c, monoid.n
    if degree % c != 0 or degree < c:
        raise ValueError("degree must be a positive multiple of c")
    length = degree // c
    words = sorted(product(range(1, n + 1), repeat=length))
    fibers = {}
    for w in words:
        fibers.setdefault(_word_image(monoid, labeling, w), []).append(w)
    index = {w: i for i, w in enumerate(words)}
    rows = []
    for fiber in fibers.values():
        base = fiber[0]  # lex-least in its fiber
        for other in fiber[1:]:
            vec = [0] * len(words)
            vec[index[other]] = 1
            vec[index[base]] = -1
            rows.append(vec)
    basis = hermite_normal_form(rows)
    return GradedIdealComponent(degree=degree, words=tuple(words), basis=basis)


def hermite_normal_form(rows):
    """Row-style HNF over Z with positive pivots and reduced entries above
    pivots; rows of zeros dropped."""
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        # find a row at or below pivot_row with nonzero entry in col
        nz = [r for r in range(pivot_row, len(mat)) if mat[r][col] != 0]
        if not nz:
            continue
        r0 = nz[0]
        mat[pivot_row], mat[r0] = mat[r0], mat[pivot_row]
        # eliminate below using the extended Euclid dance
        for r in range(pivot_row + 1, len(mat)):
            while mat[r][col] != 0:
                q = mat[pivot_row][col] // mat[r][col]
                mat[pivot_row] = [
                    a - q * b for a, b in zip(mat[pivot_row], mat[r])
                ]
                mat[pivot_row], mat[r] = mat[r], mat[pivot_row]
        if mat[pivot_row][col] < 0:
            mat[pivot_row] = [-a for a in mat[pivot_row]]
        # reduce entries above the pivot
        piv = mat[pivot_row][col]
        for r in range(pivot_row):
            q = mat[r][col] // piv
            if q:
                mat[r] = [a - q * b for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    result = [tuple(r) for r in mat[:pivot_row] if any(r)]
    return tuple(result)


def lattices_equal(basis_a, basis_b):
    return hermite_normal_form(list(basis_a)) == hermite_normal_form(list(basis_b))


# ---------------------------------------------------------------------------
# cohomology witnesses


@dataclass
class Witness:
    kind: str            # "hochschild" | "lie"
    degree: int          # degree of the pair elements (c or t*c)
    pairs: tuple         # ((X1, Y1), (X2, Y2)) for hochschild; (X, Y) for lie
    words: tuple         # section words involved
    vector: dict         # {word: int}, the class representative in n_D

    def vector_items(self):
        return tuple(sorted(self.vector.items()))


def _section_word(monoid, labeling, elem):
    """Lexicographically least word of length deg/c mapping to elem."""
    length = elem[0] // monoid.c
    for w in product(range(1, monoid.n + 1), repeat=length):
        if _word_image(monoid, labeling, w) == elem:
            return w
    raise AssertionError("element not in the image of the word map")


def hochschild_witness(monoid, labeling=None):
    """Distinct pairs (X1,Y1) != (X2,Y2) in D^(c) x D^(c) with X1Y1 = X2Y2,
    and the nonzero degree-2c vector S(X1)S(Y1) - S(X2)S(Y2).  None when
    n = 1."""
    if monoid.n == 1:
        return None
    labeling = labeling or LabelingSymbol(monoid)
    c, n = monoid.c, monoid.n
    piece = [labeling.phi(i, c) for i in range(1, n + 1)]
    prods = {}
    for i in range(n):
        for j in range(n):
            key = monoid.mul(piece[i], piece[j])
            prods.setdefault(key, []).append((i + 1, j + 1))
    for key in sorted(prods, key=lambda e: sorted(prods[e])[0]):
        pairs = sorted(prods[key])
        if len(pairs) >= 2:
            (i1, j1), (i2, j2) = pairs[0], pairs[1]
            w1, w2 = (i1, j1), (i2, j2)
            return Witness(
                kind="hochschild",
                degree=c,
                pairs=((piece[i1 - 1], piece[j1 - 1]), (piece[i2 - 1], piece[j2 - 1])),
                words=(w1, w2),
                vector={w1: 1, w2: -1},
            )
    return None


def lie_witness(monoid, labeling=None, bound=None):
    """Distinct commuting X, Y in D^(tc) for the least feasible t <= bound
    (default n), with the vector S(X)S(Y) - S(Y)S(X).  None when n = 1 or
    nothing is found within the bound."""
    if monoid.n == 1:
        return None
    labeling = labeling or LabelingSymbol(monoid)
    c = monoid.c
    bound = bound or monoid.n
    for t in range(1, bound + 1):
        piece = monoid.degree_piece(t * c)
        found = []
        for x in piece:
            for y in piece:
                if x != y and monoid.commute(x, y):
                    found.append((x, y))
        if found:
            ranked = sorted(
                found,
                key=lambda xy: (
                    _section_word(monoid, labeling, xy[0]),
                    _section_word(monoid, labeling, xy[1]),
                ),
            )
            x, y = ranked[0]
            sx = _section_word(monoid, labeling, x)
            sy = _section_word(monoid, labeling, y)
            return Witness(
                kind="lie",
                degree=t * c,
                pairs=(x, y),
                words=(sx, sy),
                vector={sx + sy: 1, sy + sx: -1},
            )
    return None


def witness_is_sound(monoid, labeling, witness):
    """The witness vector must map to zero in Z[D] and be nonzero in the
    free module on words."""
    if not any(witness.vector.values()):
        return False
    images = {}
    for word, coeff in witness.vector.items():
        elem = _word_image(monoid, labeling, word)
        images[elem] = images.get(elem, 0) + coeff
    return all(v == 0 for v in images.values())
