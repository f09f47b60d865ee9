"""Arithmetic in the finite residue field F_{p^f} = F_p[t]/(g).

Elements are coefficient tuples of length f (coordinates with respect to
the power basis 1, t, ..., t^{f-1}).  All operations are exact.
"""

from .errors import NotAUnit


def _poly_mul_mod(a, b, modulus, p):
    """Multiply coefficient tuples mod the monic polynomial `modulus`, mod p."""
    f = len(modulus)
    prod = [0] * (2 * f - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce by t^f = -modulus (monic)
    for k in range(2 * f - 2, f - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for j in range(f):
                prod[k - f + j] = (prod[k - f + j] - c * modulus[j]) % p
    return tuple(prod[:f])


def _poly_pow_mod(a, n, modulus, p):
    f = len(modulus)
    result = (1,) + (0,) * (f - 1)
    base = a
    while n > 0:
        if n & 1:
            result = _poly_mul_mod(result, base, modulus, p)
        base = _poly_mul_mod(base, base, modulus, p)
        n >>= 1
    return result


def is_irreducible(modulus, p):
    """Irreducibility of the monic polynomial t^f + sum(modulus[i] t^i) over F_p."""
    f = len(modulus)
    if f == 1:
        return True
    t = (0, 1) + (0,) * (f - 2)
    # x^(p^f) == x, and gcd-free of proper subfield fixed points:
    # x^(p^(f/l)) != x for prime divisors l of f.
    xq = t
    for _ in range(f):
        xq = _poly_pow_mod(xq, p, modulus, p)
    if xq != t:
        return False
    for ell in range(2, f + 1):
        if f % ell == 0 and _is_prime(ell):
            xq = t
            for _ in range(f // ell):
                xq = _poly_pow_mod(xq, p, modulus, p)
            if xq == t:
                return False
    return True


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def default_modulus(p, f):
    """The least monic irreducible of degree f over F_p.

    Polynomials are enumerated by the integer value sum(c_i p^i) of their
    non-leading coefficient vector, which orders them lexicographically on
    (c_{f-1}, ..., c_0).
    """
    if f == 1:
        return (0,)
    for value in range(p ** f):
        coeffs = []
        v = value
        for _ in range(f):
            coeffs.append(v % p)
            v //= p
        coeffs = tuple(coeffs)
        if is_irreducible(coeffs, p):
            return coeffs
    raise ValueError("no irreducible polynomial found")  # unreachable


class ResidueElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def __add__(self, other):
        p = self.field.p
        return ResidueElement(
            self.field,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other):
        p = self.field.p
        return ResidueElement(
            self.field,
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self):
        p = self.field.p
        return ResidueElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        fld = self.field
        return ResidueElement(
            fld, _poly_mul_mod(self.coeffs, other.coeffs, fld.modulus, fld.p)
        )

    def __pow__(self, n):
        fld = self.field
        if n < 0:
            return self.inverse() ** (-n)
        return ResidueElement(fld, _poly_pow_mod(self.coeffs, n, fld.modulus, fld.p))

    def inverse(self):
        if self.is_zero():
            raise NotAUnit("inverse of zero residue")
        return self ** (self.field.order - 2)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def frobenius(self, times=1):
        k = times % self.field.f
        return self ** (self.field.p ** k) if k else self

    def inv_frobenius(self, times=1):
        # inverse of x -> x^p is x -> x^{p^{f-1}}
        k = (-times) % self.field.f
        return self ** (self.field.p ** k) if k else self

    def __eq__(self, other):
        return (
            isinstance(other, ResidueElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.f, self.coeffs))

    def __repr__(self):
        return f"Res{list(self.coeffs)}"


class ResidueField:
    """F_{p^f} with a fixed defining polynomial."""

    def __init__(self, p, f, modulus=None):
        self.p = p
        self.f = f
        self.modulus = tuple(modulus) if modulus is not None else default_modulus(p, f)
        if len(self.modulus) != f:
            raise ValueError("modulus length must equal f")
        if not is_irreducible(self.modulus, p):
            raise ValueError("residue modulus is reducible over F_p")
        self.order = p ** f

    def elem(self, coeffs):
        return ResidueElement(self, tuple(c % self.p for c in coeffs))

    def zero(self):
        return self.elem((0,) * self.f)

    def one(self):
        return self.elem((1,) + (0,) * (self.f - 1))

    def from_int(self, n):
        return self.elem((n % self.p,) + (0,) * (self.f - 1))

    def gen(self):
        if self.f == 1:
            return self.one()
        return self.elem((0, 1) + (0,) * (self.f - 2))

    def elements(self):
        """Iterate over all p^f elements (small fields only)."""
        for value in range(self.order):
            coeffs = []
            v = value
            for _ in range(self.f):
                coeffs.append(v % self.p)
                v //= self.p
            yield self.elem(coeffs)

    def element_of_order(self, m):
        """Some element of exact multiplicative order m, or None."""
        if (self.order - 1) % m != 0:
            return None
        for x in self.elements():
            if x.is_zero():
                continue
            y = x ** ((self.order - 1) // m)
            if _mult_order(y, m) == m:
                return y
        return None

    def sqrt(self, x):
        """A square root of x, or None.  Brute force; fields here are tiny."""
        for y in self.elements():
            if y * y == x:
                return y
        return None

    def __eq__(self, other):
        return (
            isinstance(other, ResidueField)
            and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))

    def __repr__(self):
        return f"ResidueField(p={self.p}, f={self.f})"


def _mult_order(x, bound):
    y = x
    for k in range(1, bound + 1):
        if y == x.field.one():
            return k
        y = y * x
    return None
