"""Finitely generated abelian groups in Smith canonical form.

Elements are plain tuples of ints in canonical coordinates: one coordinate
per invariant factor (reduced mod that factor) followed by the free
coordinates.  Groups are immutable; all element operations are methods on
the group.
"""

from math import gcd

__all__ = ["AbGroup", "smith_normal_form", "NotASubgroup"]


class NotASubgroup(ValueError):
    pass


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A):
    """Return (U, D, V) with U*A*V = D diagonal, U and V unimodular.

    A is a list of integer rows.  Diagonal entries of D are nonnegative and
    form a divisibility chain, zeros last.
    """
    A = [list(r) for r in A]
    k = len(A)
    g = len(A[0]) if k else 0
    U = _identity(k)
    V = _identity(g)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row dst += q * row src
        if q:
            A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        if q:
            for r in A:
                r[dst] += q * r[src]
            for r in V:
                r[dst] += q * r[src]

    for t in range(min(k, g)):
        while True:
            best = None
            for i in range(t, k):
                for j in range(t, g):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return U, A, V
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = A[t][t]
            dirty = False
            for i in range(t + 1, k):
                add_row(i, t, -(A[i][t] // p))
                dirty |= A[i][t] != 0
            for j in range(t + 1, g):
                add_col(j, t, -(A[t][j] // p))
                dirty |= A[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, k) for j in range(t + 1, g) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return U, A, V


def _row_basis(rows, g):
    """Integer row echelon basis of the lattice spanned by ``rows`` (at most g rows)."""
    rows = [list(r) for r in sorted({tuple(r) for r in rows}) if any(r)]
    out = []
    for c in range(g):
        live = [r for r in rows if r[c]]
        rest = [r for r in rows if not r[c]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[c] // p[c]
                r = [a - q * b for a, b in zip(r, p)]
                if r[c]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        if live:
            out.append(live[0])
        rows = rest
    return out


def _inverse_unimodular(V):
    # exact integer inverse via Gauss-Jordan over rationals
    from fractions import Fraction

    n = len(V)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(V)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c])
        M[c], M[p] = M[p], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    out = [[int(x) for x in row[n:]] for row in M]
    assert all(x.denominator == 1 for row in M for x in row[n:])
    return out


class AbGroup:
    """Z^g modulo the row span of an integer relation matrix."""

    def __init__(self, num_generators, relations=(), ambient=None, ambient_gens=None):
        relations = [list(r) for r in relations]
        for r in relations:
            if len(r) != num_generators:
                raise ValueError(f"relation {r} does not have {num_generators} entries")
        self.num_generators = num_generators
        self.relations = tuple(tuple(r) for r in relations)
        if relations and num_generators:
            _, D, V = smith_normal_form(_row_basis(relations, num_generators) or [[0] * num_generators])
            diag = [D[i][i] for i in range(min(len(D), num_generators))]
        else:
            V = _identity(num_generators)
            diag = []
        diag += [0] * (num_generators - len(diag))
        self._keep = [i for i, d in enumerate(diag) if d != 1]
        kept = [diag[i] for i in self._keep]
        self.torsion = tuple(d for d in kept if d)
        self.rank = sum(1 for d in kept if d == 0)
        # moduli per canonical coordinate, 0 meaning free
        self.moduli = self.torsion + (0,) * self.rank
        self.gen_images = tuple(self.elem([V[j][i] for i in self._keep]) for j in range(num_generators))
        Vinv = _inverse_unimodular(V) if num_generators else []
        # canonical generator k as an integer combination of presentation generators
        self.canonical_in_gens = tuple(tuple(Vinv[i]) for i in self._keep)
        self.ambient = ambient
        self.ambient_gens = tuple(ambient_gens) if ambient_gens is not None else None

    @classmethod
    def from_presentation(cls, num_generators, relations=()):
        return cls(num_generators, relations)

    @classmethod
    def from_invariants(cls, rank=0, torsion=()):
        t = len(torsion)
        rels = [[d if i == j else 0 for j in range(t + rank)] for i, d in enumerate(torsion)]
        return cls(t + rank, rels)

    # -- elements ---------------------------------------------------------
    @property
    def ngens(self):
        """Number of canonical coordinates."""
        return len(self.moduli)

    def elem(self, coords):
        coords = tuple(coords)
        if len(coords) != len(self.moduli):
            raise ValueError(f"expected {len(self.moduli)} coordinates, got {len(coords)}")
        return tuple(c % d if d else c for c, d in zip(coords, self.moduli))

    @property
    def zero(self):
        return (0,) * len(self.moduli)

    def add(self, a, b):
        return tuple((x + y) % d if d else x + y for x, y, d in zip(a, b, self.moduli))

    def neg(self, a):
        return tuple((-x) % d if d else -x for x, d in zip(a, self.moduli))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, k, a):
        return self.elem(k * x for x in a)

    def order(self, a):
        """Order of a; ``None`` for elements of infinite order."""
        a = self.elem(a)
        o = 1
        for x, d in zip(a, self.moduli):
            if d == 0:
                if x:
                    return None
            else:
                k = d // gcd(x, d)
                o = o * k // gcd(o, k)
        return o

    def eq(self, a, b):
        return self.elem(a) == self.elem(b)

    def combination(self, coeffs):
        """Image of sum(coeffs[j] * presentation generator j)."""
        acc = [0] * len(self.moduli)
        for c, img in zip(coeffs, self.gen_images):
            if c:
                for i, x in enumerate(img):
                    acc[i] += c * x
        return self.elem(acc)

    # -- structure ----------------------------------------------------------
    def iso_type(self):
        return (self.rank, self.torsion)

    def is_isomorphic(self, other):
        return self.iso_type() == other.iso_type()

    def order_of_group(self):
        if self.rank:
            return None
        o = 1
        for d in self.torsion:
            o *= d
        return o

    def elements(self):
        """All elements of a finite group, in lexicographic order."""
        if self.rank:
            raise ValueError("infinite group")
        import itertools

        return [tuple(x) for x in itertools.product(*(range(d) for d in self.torsion))]

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __repr__(self):
        parts = [f"Z_{d}" for d in self.torsion]
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        return "AbGroup(" + (" x ".join(parts) or "1") + ")"

    def direct_product(self, other):
        rels = []
        n1, n2 = self.ngens, other.ngens
        for i, d in enumerate(self.moduli):
            if d:
                rels.append([d if j == i else 0 for j in range(n1 + n2)])
        for i, d in enumerate(other.moduli):
            if d:
                rels.append([d if j == n1 + i else 0 for j in range(n1 + n2)])
        return AbGroup(n1 + n2, rels)

    def _torsion_relations(self):
        n = self.ngens
        return [[d if j == i else 0 for j in range(n)] for i, d in enumerate(self.moduli) if d]

    # -- subgroups and quotients ------------------------------------------
    def subgroup(self, gens):
        """Subgroup generated by gens, with an embedding back into self."""
        gens = [self.elem(g) for g in gens]
        k = len(gens)
        if k == 0:
            return AbGroup(0, (), ambient=self, ambient_gens=())
        M = [list(g) for g in gens] + self._torsion_relations()
        if not M[0]:
            return AbGroup(k, [[int(i == j) for j in range(k)] for i in range(k)], ambient=self, ambient_gens=gens)
        U, D, _ = smith_normal_form(M)
        nz = sum(1 for i in range(min(len(D), len(D[0]))) if D[i][i])
        rels = [U[i][:k] for i in range(nz, len(M))]
        rels = [r for r in rels if any(r)]
        return AbGroup(k, rels, ambient=self, ambient_gens=gens)

    def embed(self, a):
        """Image of an element of this subgroup in the ambient group."""
        if self.ambient is None:
            raise ValueError("not a subgroup")
        amb = self.ambient
        acc = amb.zero
        for c, combo in zip(self.elem(a), self.canonical_in_gens):
            if c:
                for coeff, g in zip(combo, self.ambient_gens):
                    if coeff:
                        acc = amb.add(acc, amb.mul(c * coeff, g))
        return acc

    def preimage(self, y):
        """Coordinates in this subgroup of an ambient element y; None if y is outside."""
        if self.ambient is None:
            raise ValueError("not a subgroup")
        amb = self.ambient
        y = amb.elem(y)
        k = len(self.ambient_gens)
        if k == 0:
            return self.zero if y == amb.zero else None
        M = [list(g) for g in self.ambient_gens] + amb._torsion_relations()
        if not M[0]:
            return self.zero
        U, D, V = smith_normal_form(M)
        yV = [sum(y[i] * V[i][j] for i in range(len(y))) for j in range(len(y))]
        w = [0] * len(M)
        for j, val in enumerate(yV):
            dj = D[j][j] if j < len(M) else 0
            if dj == 0:
                if val:
                    return None
            else:
                if val % dj:
                    return None
                w[j] = val // dj
        x = [sum(w[i] * U[i][j] for i in range(len(M))) for j in range(len(M))]
        return self.combination(x[:k])

    def contains(self, y):
        return self.preimage(y) is not None

    def quotient(self, H):
        """G / H for a subgroup H (an AbGroup built by :meth:`subgroup`) or a list of elements.

        Returns the quotient group; ``quotient.gen_images`` maps the canonical
        generators of self to the quotient.
        """
        if isinstance(H, AbGroup):
            if H.ambient is not self:
                raise NotASubgroup("quotient by a group that is not a subgroup of this one")
            gens = list(H.ambient_gens)
        else:
            gens = [self.elem(h) for h in H]
        rels = self._torsion_relations() + [list(g) for g in gens]
        return AbGroup(self.ngens, rels)

    def project(self, Q, a):
        """Image of a in a quotient Q returned by :meth:`quotient`."""
        return Q.combination(self.elem(a))
