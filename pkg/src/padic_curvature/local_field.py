"""Exact truncated arithmetic in O_E for E = F(pi), F/Q_p unramified of
degree f, pi^e = p, together with the Galois action, higher Frobenius
lifts and higher pi-derivations.

An element of O_E/pi^nu is stored as a polynomial a_0 + a_1 pi + ... +
a_{e-1} pi^{e-1} whose coefficients live in W = Z[t]/(p^M, ghat(t)),
ghat a fixed monic lift of the residue modulus.  Multiplication folds
pi^e into p, so ring operations are carry-free; the Teichmuller digit
vector is a view computed on demand.  Coefficient i of an element of
precision rho is canonically reduced mod p^(q+1) for i < r and mod p^q
for i >= r, where rho = q*e + r; this makes equality at a precision a
plain tuple comparison.
"""

from .errors import (
    DivisionNotExact,
    InsufficientPrecision,
    NotAUnit,
    NotInBaseField,
)
from .residue import ResidueField, ResidueElement, _is_prime


# ---------------------------------------------------------------------------
# arithmetic in W = Z[t]/(p^M, ghat(t)), coefficient tuples of length f


def _w_add(a, b, pm):
    return tuple((x + y) % pm for x, y in zip(a, b))


def _w_sub(a, b, pm):
    return tuple((x - y) % pm for x, y in zip(a, b))


def _w_neg(a, pm):
    return tuple((-x) % pm for x in a)


def _w_mul(a, b, ghat, pm):
    f = len(ghat)
    prod = [0] * (2 * f - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % pm
    for k in range(2 * f - 2, f - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for j in range(f):
                prod[k - f + j] = (prod[k - f + j] - c * ghat[j]) % pm
    return tuple(prod[:f])


def _w_pow(a, n, ghat, pm):
    f = len(ghat)
    result = (1,) + (0,) * (f - 1)
    base = a
    while n > 0:
        if n & 1:
            result = _w_mul(result, base, ghat, pm)
        base = _w_mul(base, base, ghat, pm)
        n >>= 1
    return result


def _w_eval(poly_coeffs, x, ghat, pm):
    """Evaluate an integer-coefficient polynomial at x in W (Horner)."""
    f = len(ghat)
    acc = (0,) * f
    for c in reversed(poly_coeffs):
        acc = _w_mul(acc, x, ghat, pm)
        acc = _w_add(acc, ((c % pm,) + (0,) * (f - 1)), pm)
    return acc


def _w_subst(a, tau, ghat, pm):
    """Substitute t -> tau into the W element a (coefficients of powers of t)."""
    f = len(ghat)
    acc = (0,) * f
    power = (1,) + (0,) * (f - 1)
    for c in a:
        if c:
            term = tuple((c * x) % pm for x in power)
            acc = _w_add(acc, term, pm)
        power = _w_mul(power, tau, ghat, pm)
    return acc


def _w_inverse(a, ghat, p, pm, m_levels):
    """Inverse of a unit in W by Newton lifting from the residue inverse."""
    fld = ResidueField(p, len(ghat), tuple(c % p for c in ghat))
    r = fld.elem(a)
    inv0 = r.inverse().coeffs
    x = tuple(inv0)
    for _ in range(m_levels):
        # x <- x(2 - a x)
        ax = _w_mul(a, x, ghat, pm)
        two_minus = _w_sub(((2,) + (0,) * (len(ghat) - 1)), ax, pm)
        x = _w_mul(x, two_minus, ghat, pm)
    return x


# ---------------------------------------------------------------------------


class FieldSpec:
    """Configuration of E = F(pi): p, f, e, working precision nu.

    Instances are immutable by convention.  All derived data (defining
    polynomial lift, Witt Frobenius substitution, Teichmuller roots of
    unity) is computed once here.
    """

    def __init__(self, p, f, e, precision, residue_modulus=None):
        if not _is_prime(p) or p == 2:
            raise ValueError(f"p must be an odd prime, got {p}")
        if f < 1 or e < 1 or precision < 1:
            raise ValueError("f, e and the precision must all be >= 1")
        self.p = p
        self.f = f
        self.e = e
        self.nu = precision
        self.residue = ResidueField(p, f, residue_modulus)
        if e > 1 and (p ** f - 1) % e != 0:
            raise ValueError(
                f"e={e} does not divide p^f-1={p**f - 1}: "
                "no e-th root of unity in F, Galois action over F unavailable"
            )
        # coefficient ring W = Z[t]/(p^M, ghat)
        self.M = -(-precision // e) + 1  # ceil(nu/e) + one digit of headroom
        self.pM = p ** self.M
        self._ppow = [p ** k for k in range(self.M + 1)]
        self.ghat = self.residue.modulus  # monic lift with coefficients in [0, p)
        self._teich_cache = {}
        # Witt Frobenius: the root of ghat congruent to t^p mod p
        self._frob_subs = self._build_frobenius_substitutions()
        # Teichmuller e-th root of unity in W (trivial when e == 1)
        self._zeta_pows = self._build_zeta_powers()
        self._p_inv_mod_e = pow(p, -1, e) if e > 1 else 0

    # -- construction helpers --------------------------------------------

    def _build_frobenius_substitutions(self):
        f, p, pm, ghat = self.f, self.p, self.pM, self.ghat
        if f == 1:
            return [(0,)] * 1
        g_full = tuple(ghat) + (1,)  # monic, degree f
        dg = tuple((i * g_full[i]) % pm for i in range(1, f + 1))
        t = (0, 1) + (0,) * (f - 2)
        x = _w_pow(t, p, ghat, pm)
        # Newton: x <- x - g(x)/g'(x)
        for _ in range(self.M + 1):
            gx = _w_eval(g_full, x, ghat, pm)
            dgx = _w_eval(dg, x, ghat, pm)
            inv = _w_inverse(dgx, ghat, p, pm, self.M + 1)
            x = _w_sub(x, _w_mul(gx, inv, ghat, pm), pm)
        tau = x
        # subs[k] is the polynomial tau_k with Frob^k(a) = a(tau_k)
        subs = [None] * f
        subs[0] = (0, 1) + (0,) * (f - 2)
        subs[1] = tau
        for k in range(2, f):
            subs[k] = _w_subst(subs[k - 1], tau, ghat, pm)
        return subs

    def _build_zeta_powers(self):
        if self.e == 1:
            return [self.teich_w(self.residue.one().coeffs)]
        zeta_res = self.residue.element_of_order(self.e)
        if zeta_res is None:
            raise ValueError("no primitive e-th root of unity in the residue field")
        zw = self.teich_w(zeta_res.coeffs)
        pows = [(1,) + (0,) * (self.f - 1)]
        for _ in range(self.e - 1):
            pows.append(_w_mul(pows[-1], zw, self.ghat, self.pM))
        return pows

    def teich_w(self, residue_coeffs):
        """Teichmuller representative in W of a residue element (fixed point
        of x -> x^{p^f})."""
        key = tuple(residue_coeffs)
        cached = self._teich_cache.get(key)
        if cached is not None:
            return cached
        x = key
        q = self.p ** self.f
        for _ in range(self.M + 1):
            nxt = _w_pow(x, q, self.ghat, self.pM)
            if nxt == x:
                break
            x = nxt
        self._teich_cache[key] = x
        return x

    def frob_w(self, a, times):
        """Witt Frobenius applied `times` times to a W coefficient."""
        k = times % self.f
        if k == 0 or self.f == 1:
            return a
        return _w_subst(a, self._frob_subs[k], self.ghat, self.pM)

    # -- element constructors ---------------------------------------------

    def element(self, coeffs, prec=None):
        prec = self.nu if prec is None else prec
        return PadicElement(self, prec, _canonicalize(self, coeffs, prec))

    def zero(self, prec=None):
        return self.element(((0,) * self.f,) * self.e, prec)

    def one(self, prec=None):
        return self.from_int(1, prec)

    def from_int(self, n, prec=None):
        c0 = (n % self.pM,) + (0,) * (self.f - 1)
        return self.element((c0,) + ((0,) * self.f,) * (self.e - 1), prec)

    def pi(self, prec=None):
        if self.e == 1:
            return self.from_int(self.p, prec)
        coeffs = [((0,) * self.f) for _ in range(self.e)]
        coeffs[1] = (1,) + (0,) * (self.f - 1)
        return self.element(tuple(coeffs), prec)

    def teichmuller(self, r, prec=None):
        """The Teichmuller lift [r] of a residue element (or small int)."""
        if isinstance(r, int):
            r = self.residue.from_int(r)
        w = self.teich_w(r.coeffs)
        return self.element((w,) + ((0,) * self.f,) * (self.e - 1), prec)

    def from_digits(self, digits, prec=None):
        """Element with the given Teichmuller pi-digits (residue elements)."""
        prec = self.nu if prec is None else prec
        acc = self.zero(prec)
        pi_pow = self.one(prec)
        pi_ = self.pi(prec)
        for d in digits[:prec]:
            acc = acc + pi_pow * self.teichmuller(d, prec)
            pi_pow = pi_pow * pi_
        return acc.at_precision(prec)

    def galois(self, j):
        return GaloisElement(self, j % self.e)

    def galois_group(self):
        return [GaloisElement(self, j) for j in range(self.e)]

    def frobenius(self, s, sigma_exponent=0):
        return HigherFrobenius(self, s, sigma_exponent % self.e)

    # ----------------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (
            (self.p, self.f, self.e, self.nu, self.ghat)
            == (other.p, other.f, other.e, other.nu, other.ghat)
        )

    def __hash__(self):
        return hash((self.p, self.f, self.e, self.nu, self.ghat))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, f={self.f}, e={self.e}, nu={self.nu})"


def _canonicalize(fs, coeffs, prec):
    """Reduce raw coefficient tuples to the canonical form mod pi^prec."""
    if prec < 0:
        raise InsufficientPrecision("negative precision")
    q, r = divmod(min(prec, fs.nu), fs.e)
    out = []
    for i in range(fs.e):
        m = q + 1 if i < r else q
        pm = fs._ppow[m] if m <= fs.M else fs.pM
        out.append(tuple(c % pm if pm > 1 else 0 for c in coeffs[i]))
    return tuple(out)


class PadicElement:
    """Element of O_E known modulo pi^prec."""

    __slots__ = ("fs", "prec", "coeffs")

    def __init__(self, fs, prec, coeffs):
        self.fs = fs
        self.prec = prec
        self.coeffs = coeffs

    # -- ring operations ---------------------------------------------------

    def _binop(self, other, op):
        fs = self.fs
        if isinstance(other, int):
            other = fs.from_int(other, self.prec)
        prec = min(self.prec, other.prec)
        raw = tuple(
            op(a, b, fs.pM) for a, b in zip(self.coeffs, other.coeffs)
        )
        return fs.element(raw, prec)

    def __add__(self, other):
        return self._binop(other, _w_add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, _w_sub)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        fs = self.fs
        return fs.element(tuple(_w_neg(a, fs.pM) for a in self.coeffs), self.prec)

    def __mul__(self, other):
        fs = self.fs
        if isinstance(other, int):
            other = fs.from_int(other, self.prec)
        prec = min(self.prec, other.prec)
        e, ghat, pm = fs.e, fs.ghat, fs.pM
        acc = [(0,) * fs.f for _ in range(e)]
        for i, ai in enumerate(self.coeffs):
            if all(c == 0 for c in ai):
                continue
            for j, bj in enumerate(other.coeffs):
                if all(c == 0 for c in bj):
                    continue
                prod = _w_mul(ai, bj, ghat, pm)
                k = i + j
                if k >= e:  # pi^e = p
                    k -= e
                    prod = tuple((fs.p * c) % pm for c in prod)
                acc[k] = _w_add(acc[k], prod, pm)
        return fs.element(tuple(acc), prec)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.fs.one(self.prec)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        if self.residue().is_zero():
            raise NotAUnit("element is not a unit")
        # Newton: x <- x(2 - a x); quadratic pi-adic convergence
        x = self.fs.teichmuller(self.residue().inverse(), self.prec)
        steps = max(1, (self.prec - 1).bit_length() + 1)
        two = self.fs.from_int(2, self.prec)
        for _ in range(steps):
            x = x * (two - self * x)
        return x

    # -- pi and precision ----------------------------------------------------

    def divide_exact_by_pi(self):
        if self.prec < 1:
            raise InsufficientPrecision("cannot divide by pi at precision 0")
        if not self.residue().is_zero():
            raise DivisionNotExact("digit 0 is nonzero")
        fs = self.fs
        e = fs.e
        if e == 1:
            new = (tuple(c // fs.p for c in self.coeffs[0]),)
        else:
            a0 = self.coeffs[0]
            shifted = list(self.coeffs[1:])
            # a0 is divisible by p within the canonical window
            shifted.append(tuple(c // fs.p for c in a0))
            new = tuple(shifted)
        return fs.element(new, self.prec - 1)

    def times_pi(self):
        fs = self.fs
        e = fs.e
        if e == 1:
            new = (tuple((fs.p * c) % fs.pM for c in self.coeffs[0]),)
        else:
            new = (tuple((fs.p * c) % fs.pM for c in self.coeffs[-1]),) + self.coeffs[:-1]
        return fs.element(new, min(self.prec + 1, fs.nu))

    def at_precision(self, prec):
        if prec > self.prec:
            raise InsufficientPrecision(
                f"element has precision {self.prec}, need {prec}"
            )
        return self.fs.element(self.coeffs, prec)

    # -- views ---------------------------------------------------------------

    def residue(self):
        if self.prec < 1:
            raise InsufficientPrecision("no digits at precision 0")
        return self.fs.residue.elem(tuple(c % self.fs.p for c in self.coeffs[0]))

    def digits(self, count=None):
        """Teichmuller pi-digit vector (length = precision by default)."""
        count = self.prec if count is None else count
        if count > self.prec:
            raise InsufficientPrecision("asking for more digits than known")
        out = []
        cur = self
        for _ in range(count):
            r = cur.residue()
            out.append(r)
            cur = (cur - self.fs.teichmuller(r, cur.prec)).divide_exact_by_pi()
        return tuple(out)

    def digit(self, k):
        return self.digits(k + 1)[k]

    def is_zero(self):
        return all(all(c == 0 for c in w) for w in self.coeffs)

    def is_unit(self):
        return not self.residue().is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, PadicElement)
            and self.fs == other.fs
            and self.prec == other.prec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.prec, self.coeffs))

    def __repr__(self):
        return f"Padic({self.coeffs}, prec={self.prec})"


# ---------------------------------------------------------------------------
# Galois action and higher Frobenius lifts


class GaloisElement:
    """pi -> zeta_e^j pi, identity on F."""

    __slots__ = ("fs", "j")

    def __init__(self, fs, j):
        self.fs = fs
        self.j = j % fs.e

    def apply(self, a):
        fs = self.fs
        if self.j == 0:
            return a
        raw = tuple(
            _w_mul(c, fs._zeta_pows[(i * self.j) % fs.e], fs.ghat, fs.pM)
            for i, c in enumerate(a.coeffs)
        )
        return fs.element(raw, a.prec)

    def compose(self, other):
        return GaloisElement(self.fs, self.j + other.j)

    def inverse(self):
        return GaloisElement(self.fs, -self.j)

    def order(self):
        k = 1
        j = self.j
        while j % self.fs.e != 0:
            j += self.j
            k += 1
        return k

    def __eq__(self, other):
        return (
            isinstance(other, GaloisElement)
            and self.fs == other.fs
            and self.j == other.j
        )

    def __hash__(self):
        return hash(("galois", self.j))

    def __repr__(self):
        return f"Galois(j={self.j})"


class HigherFrobenius:
    """The ring automorphism phi^s sigma_j of O_E, phi the Witt Frobenius
    on F extended by phi(pi) = pi.  Composition is function composition:
    (x y)(a) = x(y(a))."""

    __slots__ = ("fs", "s", "j")

    def __init__(self, fs, s, j=0):
        if s < 1:
            raise ValueError("degree must be >= 1")
        self.fs = fs
        self.s = s
        self.j = j % fs.e

    @property
    def sigma(self):
        return GaloisElement(self.fs, self.j)

    def apply(self, a):
        fs = self.fs
        ps_mod_e = pow(fs.p, self.s, fs.e) if fs.e > 1 else 0
        raw = []
        for i, c in enumerate(a.coeffs):
            w = fs.frob_w(c, self.s)
            if self.j and fs.e > 1:
                w = _w_mul(
                    w, fs._zeta_pows[(i * self.j * ps_mod_e) % fs.e], fs.ghat, fs.pM
                )
            raw.append(w)
        return fs.element(tuple(raw), a.prec)

    def apply_inverse(self, a):
        fs = self.fs
        raw = []
        for i, c in enumerate(a.coeffs):
            if self.j and fs.e > 1:
                c = _w_mul(c, fs._zeta_pows[(-i * self.j) % fs.e], fs.ghat, fs.pM)
            raw.append(fs.frob_w(c, -self.s % fs.f if fs.f > 1 else 0))
        return fs.element(tuple(raw), a.prec)

    def compose(self, other):
        """self after other, as ring maps."""
        fs = self.fs
        if fs.e > 1:
            pinv = fs._p_inv_mod_e
            j = (other.j + self.j * pow(pinv, other.s, fs.e)) % fs.e
        else:
            j = 0
        return HigherFrobenius(fs, self.s + other.s, j)

    def conjugate_galois(self, tau):
        """phi^-1 tau phi for a GaloisElement tau (result is Galois again)."""
        fs = self.fs
        if fs.e == 1:
            return GaloisElement(fs, 0)
        return GaloisElement(fs, tau.j * pow(fs._p_inv_mod_e, self.s, fs.e))

    def __eq__(self, other):
        return (
            isinstance(other, HigherFrobenius)
            and self.fs == other.fs
            and (self.s, self.j) == (other.s, other.j)
        )

    def __hash__(self):
        return hash(("frob", self.s, self.j))

    def __repr__(self):
        return f"Frobenius(s={self.s}, j={self.j})"


# ---------------------------------------------------------------------------
# module-level operations


def teichmuller(fs, r, prec=None):
    return fs.teichmuller(r, prec)


def frobenius_apply(phi, a):
    return phi.apply(a)


def pi_derivation(phi, a):
    """delta(a) = (phi(a) - a^{p^s}) / pi; precision drops by one."""
    if a.prec < 2:
        raise InsufficientPrecision("pi-derivation needs precision >= 2")
    diff = phi.apply(a) - a ** (phi.fs.p ** phi.s)
    return diff.divide_exact_by_pi()


def epsilon_matrix(lifts):
    """eps_{ij} = (delta_i pi * (delta_j pi)^{p^c} mod pi)^{p^{-2c}} over the
    residue field, for a family of degree-c lifts."""
    fs = lifts[0].fs
    c = lifts[0].s
    if any(l.s != c for l in lifts):
        raise ValueError("all lifts must have the same degree")
    pi = fs.pi()
    d = [pi_derivation(l, pi).residue() for l in lifts]
    pc = fs.p ** c
    n = len(lifts)
    return tuple(
        tuple((d[i] * d[j] ** pc).inv_frobenius(2 * c) for j in range(n))
        for i in range(n)
    )


def norm_E_over_F(a):
    """Product of the Galois conjugates; lands in O_F."""
    fs = a.fs
    result = a
    for j in range(1, fs.e):
        result = result * fs.galois(j).apply(a)
    return result


def is_in_base_field(a):
    fs = a.fs
    return fs.e == 1 or fs.galois(1).apply(a) == a


def legendre_symbol(a):
    """+1 if the unit a of O_F is a square mod pi, else -1."""
    fs = a.fs
    if not is_in_base_field(a):
        raise NotInBaseField("element is not Galois-fixed")
    r = a.residue()
    if r.is_zero():
        raise NotAUnit("Legendre symbol of a non-unit")
    val = r ** ((fs.p ** fs.f - 1) // 2)
    if val == fs.residue.one():
        return 1
    if val == -fs.residue.one():
        return -1
    raise AssertionError("unreachable: x^((q-1)/2) must be +-1 for units")


def hensel_sqrt(a):
    """A square root of the unit a in O_E, or None if the residue of a
    is not a square."""
    fs = a.fs
    r0 = fs.residue.sqrt(a.residue())
    if r0 is None or r0.is_zero():
        return None if r0 is None else fs.zero(a.prec)
    x = fs.teichmuller(r0, a.prec)
    inv2 = fs.from_int(2, a.prec).inverse()
    for _ in range(max(1, a.prec.bit_length() + 1)):
        # x <- x - (x^2 - a) / (2x)
        x = x - (x * x - a) * inv2 * x.inverse()
    if not (x * x == a):
        return None
    return x
