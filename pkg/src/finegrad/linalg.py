"""Dense exact matrices and subspaces over a cyclotomic field.

Vectors are tuples of Scalars.  Subspaces keep a reduced row echelon basis,
so two subspaces of the same ambient space are equal iff their bases are.
"""

from .cyclofield import Scalar

__all__ = ["Matrix", "Subspace", "rref", "nullspace", "eigenspace", "AmbientMismatch", "SingularMatrix"]


class AmbientMismatch(ValueError):
    pass


class SingularMatrix(ZeroDivisionError):
    pass


def rref(vectors, width=None):
    """Reduced row echelon form of a list of vectors.  Returns (rows, pivots).

    Pivots are searched only in the first ``width`` columns; any further
    columns (an augmented block) are carried along by the row operations.
    """
    rows = [list(v) for v in vectors if any(not x.is_zero() for x in v)]
    if not rows:
        return (), ()
    width = len(rows[0]) if width is None else width
    pivots = []
    r = 0
    for c in range(width):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r]
        inv = piv[c].inv()
        if not (inv == 1):
            piv = rows[r] = [x * inv if x else x for x in piv]
        nzc = [j for j in range(c, len(piv)) if piv[j]]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in nzc:
                        row[j] = row[j] - f * piv[j]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows[:r]), tuple(pivots)


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows, cols, data):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = tuple(data)
        assert len(self.data) == rows * cols

    @classmethod
    def from_rows(cls, field, rows):
        rows = [[field(x) for x in r] for r in rows]
        return cls(field, len(rows), len(rows[0]) if rows else 0, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, field, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, n, n, [o if i == j else z for i in range(n) for j in range(n)])

    @classmethod
    def unit(cls, field, n, i, j):
        """Matrix unit E_ij (0-based)."""
        z = field.zero
        data = [z] * (n * n)
        data[i * n + j] = field.one
        return cls(field, n, n, data)

    @classmethod
    def diag(cls, field, entries):
        n = len(entries)
        z = field.zero
        data = [z] * (n * n)
        for i, e in enumerate(entries):
            data[i * n + i] = field(e)
        return cls(field, n, n, data)

    @classmethod
    def block_diag(cls, field, blocks):
        n = sum(b.rows for b in blocks)
        data = [field.zero] * (n * n)
        off = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    data[(off + i) * n + off + j] = b.data[i * b.cols + j]
            off += b.rows
        return cls(field, n, n, data)

    @classmethod
    def from_vector(cls, field, vec, n):
        return cls(field, n, n, vec)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i):
        return self.data[i * self.cols:(i + 1) * self.cols]

    def vector(self):
        return self.data

    def __eq__(self, other):
        return isinstance(other, Matrix) and (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.field, self.rows, self.cols, [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.field, self.rows, self.cols, [a - b for a, b in zip(self.data, other.data)])

    def __neg__(self):
        return Matrix(self.field, self.rows, self.cols, [-a for a in self.data])

    def scale(self, s):
        return Matrix(self.field, self.rows, self.cols, [a * s if a else a for a in self.data])

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __matmul__(self, other):
        return Matrix(self.field, self.rows, other.cols, _matmul(self.data, other.data, self.rows, self.cols, other.cols, self.field.zero))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def transpose(self):
        r, c = self.rows, self.cols
        return Matrix(self.field, c, r, [self.data[i * c + j] for j in range(c) for i in range(r)])

    @property
    def T(self):
        return self.transpose()

    def kron(self, other):
        r1, c1, r2, c2 = self.rows, self.cols, other.rows, other.cols
        z = self.field.zero
        data = []
        for i in range(r1):
            for k in range(r2):
                for j in range(c1):
                    a = self.data[i * c1 + j]
                    for l in range(c2):
                        data.append(a * other.data[k * c2 + l] if a else z)
        return Matrix(self.field, r1 * r2, c1 * c2, data)

    def trace(self):
        acc = self.field.zero
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.data[i * self.cols + i]
        return acc

    def is_zero(self):
        return all(x.is_zero() for x in self.data)

    def inverse(self):
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        F = self.field
        aug = [list(self.row(i)) + [F.one if i == j else F.zero for j in range(n)] for i in range(n)]
        rows, piv = rref(aug, width=2 * n)
        if len(piv) < n or piv[n - 1] != n - 1:
            raise SingularMatrix("matrix is not invertible")
        return Matrix(F, n, n, [x for r in rows for x in r[n:]])

    def power(self, k):
        out = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def apply(self, v):
        """Matrix times a column vector (tuple)."""
        c = self.cols
        z = self.field.zero
        out = []
        for i in range(self.rows):
            acc = z
            for j in range(c):
                a = self.data[i * c + j]
                if a and v[j]:
                    acc = acc + a * v[j]
            out.append(acc)
        return tuple(out)

    def to_strings(self):
        return [[self.data[i * self.cols + j].to_strings() for j in range(self.cols)] for i in range(self.rows)]

    def __repr__(self):
        rows = ["[" + ", ".join(repr(self[i, j]) for j in range(self.cols)) + "]" for i in range(self.rows)]
        return "Matrix(" + ", ".join(rows) + ")"


def _matmul(a, b, n, k, m, zero):
    out = [zero] * (n * m)
    for i in range(n):
        base = i * m
        for t in range(k):
            x = a[i * k + t]
            if not x.c:
                continue
            brow = t * m
            for j in range(m):
                y = b[brow + j]
                if y.c:
                    out[base + j] = out[base + j] + x * y
    return out


def matmul_vec(a, b, n):
    """Product of two n x n matrices given as flat tuples."""
    return tuple(_matmul(a, b, n, n, n, a[0].field.zero))


def commutator_vec(a, b, n):
    ab = _matmul(a, b, n, n, n, a[0].field.zero)
    ba = _matmul(b, a, n, n, n, a[0].field.zero)
    return tuple(x - y for x, y in zip(ab, ba))


class Subspace:
    """A subspace of F^D held as a reduced row echelon basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis=(), pivots=()):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def span(cls, field, ambient_dim, vectors):
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        rows, piv = rref(vectors, width=ambient_dim)
        return cls(field, ambient_dim, rows, piv)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim)

    @classmethod
    def full(cls, field, ambient_dim):
        z, o = field.zero, field.one
        rows = tuple(tuple(o if i == j else z for j in range(ambient_dim)) for i in range(ambient_dim))
        return cls(field, ambient_dim, rows, tuple(range(ambient_dim)))

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim} differ")

    def reduce(self, v):
        """v minus its echelon projection; zero iff v lies in the subspace."""
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            f = out[p]
            if f:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        out[j] = out[j] - f * row[j]
        return tuple(out)

    def member(self, v):
        return all(x.is_zero() for x in self.reduce(v))

    __contains__ = member

    def coords(self, v):
        """Coordinates of a member v with respect to the echelon basis."""
        return tuple(v[p] for p in self.pivots)

    def contains(self, other):
        self._check(other)
        return all(self.member(v) for v in other.basis)

    def sum(self, other):
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersect(self, other):
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.field, self.ambient_dim)
        k = len(self.basis)
        # left kernel of the stacked basis matrix
        stacked = [tuple(r) for r in self.basis] + [tuple(-x for x in r) for r in other.basis]
        cols = [tuple(stacked[i][j] for i in range(len(stacked))) for j in range(self.ambient_dim)]
        ker = nullspace(self.field, cols, len(stacked))
        z = self.field.zero
        vecs = []
        for c in ker.basis:
            acc = [z] * self.ambient_dim
            for i in range(k):
                if c[i]:
                    row = self.basis[i]
                    for j in range(self.ambient_dim):
                        if row[j]:
                            acc[j] = acc[j] + c[i] * row[j]
            vecs.append(tuple(acc))
        return Subspace.span(self.field, self.ambient_dim, vecs)

    def image(self, fn, ambient_dim=None):
        """Span of fn applied to the basis."""
        vecs = [fn(v) for v in self.basis]
        return Subspace.span(self.field, self.ambient_dim if ambient_dim is None else ambient_dim, vecs)

    def restrict(self, fn):
        """Matrix (in echelon-basis coordinates, column convention) of a map preserving the subspace.

        Raises ValueError if fn does not map the subspace into itself.
        """
        cols = []
        for v in self.basis:
            w = fn(v)
            if not self.member(w):
                raise ValueError("map does not preserve the subspace")
            cols.append(self.coords(w))
        k = self.dim
        return Matrix(self.field, k, k, [cols[j][i] for i in range(k) for j in range(k)])

    def combine(self, coeffs):
        z = self.field.zero
        acc = [z] * self.ambient_dim
        for c, row in zip(coeffs, self.basis):
            if c:
                for j, x in enumerate(row):
                    if x:
                        acc[j] = acc[j] + c * x
        return tuple(acc)


def nullspace(field, rows, width):
    """Solutions x in F^width of rows * x = 0 (rows are equations)."""
    R, piv = rref(rows, width=width)
    pivset = set(piv)
    free = [c for c in range(width) if c not in pivset]
    z, o = field.zero, field.one
    vecs = []
    for f in free:
        v = [z] * width
        v[f] = o
        for row, p in zip(R, piv):
            if row[f]:
                v[p] = -row[f]
        vecs.append(tuple(v))
    return Subspace.span(field, width, vecs)


def eigenspace(A, lam):
    """Kernel of A - lam*I."""
    if A.rows != A.cols:
        raise ValueError("eigenspace of a non-square matrix")
    n = A.rows
    F = A.field
    lam = F(lam)
    rows = [tuple(A[i, j] - lam if i == j else A[i, j] for j in range(n)) for i in range(n)]
    return nullspace(F, rows, n)


def minimal_polynomial(A):
    """Monic minimal polynomial of a square matrix, ascending coefficients."""
    n = A.rows
    F = A.field
    powers = [Matrix.identity(F, n).data]
    while True:
        cur = _matmul(powers[-1], A.data, n, n, n, F.zero)
        # look for a dependency expressing cur in terms of earlier powers
        d = len(powers)
        cols = [tuple(powers[j][i] for j in range(d)) + (cur[i],) for i in range(n * n)]
        ker = nullspace(F, cols, d + 1)
        if ker.dim:
            v = ker.basis[-1]
            lead = v[d]
            if lead:
                return [x / lead for x in v]
        powers.append(tuple(cur))


def _poly_trim(p):
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def poly_gcd(a, b):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        r = list(a)
        inv = b[-1].inv()
        while len(r) >= len(b):
            c = r[-1] * inv
            k = len(r) - len(b)
            for j, x in enumerate(b):
                r[k + j] = r[k + j] - c * x
            r.pop()
            r = _poly_trim(r)
        a, b = b, r
    inv = a[-1].inv()
    return [x * inv for x in a]


def poly_derivative(p):
    return [c * k for k, c in enumerate(p)][1:]


def is_squarefree(p):
    return len(poly_gcd(p, poly_derivative(p))) == 1
