"""Small exact matrix helpers.

Two kinds of matrices appear: tuples-of-tuples of PadicElement ("pmat")
and tuples-of-tuples of ResidueElement ("rmat").  Sizes stay tiny (N <= 4)
so everything is written for clarity, not speed.
"""

from .errors import SingularLinearization


# -- p-adic matrices ---------------------------------------------------------


def pmat(rows):
    return tuple(tuple(r) for r in rows)


def pmat_identity(fs, n, prec=None):
    one, zero = fs.one(prec), fs.zero(prec)
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def pmat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def pmat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def pmat_neg(a):
    return tuple(tuple(-x for x in r) for r in a)


def pmat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for t in range(1, k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def pmat_scalar(c, a):
    return tuple(tuple(c * x for x in r) for r in a)


def pmat_t(a):
    return tuple(tuple(a[j][i] for j in range(len(a))) for i in range(len(a[0])))


def pmat_map(fn, a):
    return tuple(tuple(fn(x) for x in r) for r in a)


def pmat_entry_pow(a, n):
    """Entrywise n-th powers, the (p^s) superscript operation."""
    return pmat_map(lambda x: x ** n, a)


def pmat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def pmat_is_zero(a):
    return all(x.is_zero() for r in a for x in r)


def pmat_residue(a):
    return tuple(tuple(x.residue() for x in r) for r in a)


def pmat_at_precision(a, prec):
    return pmat_map(lambda x: x.at_precision(prec), a)


def pmat_inverse(a):
    """Inverse of a matrix over O_E/pi^prec; Newton lift of the residue
    inverse.  Raises SingularLinearization if the residue matrix is
    singular."""
    fs = a[0][0].fs
    n = len(a)
    prec = min(x.prec for r in a for x in r)
    rinv = rmat_inverse(pmat_residue(a))
    x = tuple(
        tuple(fs.teichmuller(rinv[i][j], prec) for j in range(n)) for i in range(n)
    )
    two_id = pmat_scalar(fs.from_int(2, prec), pmat_identity(fs, n, prec))
    for _ in range(max(1, prec.bit_length() + 1)):
        x = pmat_mul(x, pmat_sub(two_id, pmat_mul(a, x)))
    return x


def pmat_det(a):
    n = len(a)
    if n == 1:
        return a[0][0]
    acc = None
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1:] for row in a[1:])
        term = a[0][j] * pmat_det(minor)
        if j % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def pmat_digit(a, k):
    """Entrywise Teichmuller digit k, as a residue matrix."""
    return tuple(tuple(x.digit(k) for x in r) for r in a)


# -- residue matrices --------------------------------------------------------


def rmat_identity(field, n):
    one, zero = field.one(), field.zero()
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def rmat_zero(field, n, m=None):
    z = field.zero()
    return tuple(tuple(z for _ in range(m or n)) for _ in range(n))


def rmat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def rmat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def rmat_neg(a):
    return tuple(tuple(-x for x in r) for r in a)


def rmat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for t in range(1, k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def rmat_scalar(c, a):
    return tuple(tuple(c * x for x in r) for r in a)


def rmat_t(a):
    return tuple(tuple(a[j][i] for j in range(len(a))) for i in range(len(a[0])))


def rmat_map(fn, a):
    return tuple(tuple(fn(x) for x in r) for r in a)


def rmat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def rmat_is_zero(a):
    return all(x.is_zero() for r in a for x in r)


def rmat_inverse(a):
    field = a[0][0].field
    n = len(a)
    aug = [list(row) + list(idr) for row, idr in zip(a, rmat_identity(field, n))]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise SingularLinearization("residue matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [inv * x for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def rmat_det(a):
    n = len(a)
    if n == 1:
        return a[0][0]
    acc = None
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1:] for row in a[1:])
        term = a[0][j] * rmat_det(minor)
        if j % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def rmat_frobenius_pow(a, n):
    return rmat_map(lambda x: x ** n, a)


def rsolve(a_rows, b_vec, field):
    """Solve the linear system A z = b over the residue field by Gaussian
    elimination.  Returns (solution, unique) where unique is False if the
    system has a nontrivial nullspace.  Raises SingularLinearization on
    inconsistency."""
    m = len(a_rows)
    n = len(a_rows[0])
    aug = [list(row) + [b] for row, b in zip(a_rows, b_vec)]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, m) if not aug[r][col].is_zero()), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = aug[row][col].inverse()
        aug[row] = [inv * x for x in aug[row]]
        for r in range(m):
            if r != row and not aug[r][col].is_zero():
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if not aug[r][n].is_zero():
            raise SingularLinearization("inconsistent linear system")
    unique = len(pivots) == n
    sol = [field.zero()] * n
    for r, col in enumerate(pivots):
        sol[col] = aug[r][n]
    return tuple(sol), unique
