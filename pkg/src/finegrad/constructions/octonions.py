"""Octonions by Cayley-Dickson doubling and derivation algebras."""

from ..abgroup import AbGroup
from ..cyclofield import make_field
from ..grading import Algebra, Grading, GradingError, graded_basis, matrix_algebra
from ..linalg import Subspace, commutator_vec, nullspace

__all__ = ["cayley_dickson_table", "octonions", "derivation_algebra", "derivation_grading", "normalizer", "is_abelian"]


def _cd_mul(x, y, mus):
    # (a, b)(c, d) = (ac + mu conj(d) b, d a + b conj(c))
    if not mus:
        return [x[0] * y[0]]
    h = len(x) // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    mu, rest = mus[-1], mus[:-1]
    left = [p + mu * q for p, q in zip(_cd_mul(a, c, rest), _cd_mul(_cd_conj(d), b, rest))]
    right = [p + q for p, q in zip(_cd_mul(d, a, rest), _cd_mul(b, _cd_conj(c), rest))]
    return left + right


def _cd_conj(x):
    if len(x) == 1:
        return list(x)
    h = len(x) // 2
    return _cd_conj(x[:h]) + [-v for v in x[h:]]


def cayley_dickson_table(mus=(-1, -1, -1)):
    """Structure constants e_u e_v = sign * e_w of the iterated double; returns {(u, v): (sign, w)}."""
    dim = 2 ** len(mus)
    table = {}
    for u in range(dim):
        for v in range(dim):
            x = [0] * dim
            y = [0] * dim
            x[u] = y[v] = 1
            p = _cd_mul(x, y, list(mus))
            nz = [(i, c) for i, c in enumerate(p) if c]
            assert len(nz) == 1
            table[(u, v)] = (nz[0][1], nz[0][0])
    return table


def octonions(field=None, mus=(-1, -1, -1)):
    """(algebra, Z_2^3 grading); basis e_u has degree given by the bits of u, one per doubling."""
    F = field or make_field([1])
    table = cayley_dickson_table(mus)
    dim = 2 ** len(mus)
    z = F.zero

    def product(a, b):
        out = [z] * dim
        for u, x in enumerate(a):
            if x:
                for v, y in enumerate(b):
                    if y:
                        sgn, w = table[(u, v)]
                        out[w] = out[w] + x * y * sgn
        return tuple(out)

    alg = Algebra(F, dim, Subspace.full(F, dim), product, "octonion", name="O", table=tuple(sorted(table.items())))
    k = len(mus)
    G = AbGroup.from_invariants(0, (2,) * k)
    comps = []
    for u in range(dim):
        e = tuple(F.one if i == u else z for i in range(dim))
        comps.append((tuple((u >> b) & 1 for b in range(k)), Subspace.span(F, dim, [e])))
    return alg, Grading(alg, G, comps)


def _structure_constants(alg, basis):
    sub = Subspace.span(alg.field, alg.ambient_dim, basis)
    # coordinates w.r.t. the given basis, not the echelon one
    from ..grading import _Decomposer

    dec = _Decomposer(alg.field, alg.ambient_dim, [Subspace.span(alg.field, alg.ambient_dim, [b]) for b in basis])
    assert sub.dim == len(basis)
    return [[dec.coefficients(alg.product(bi, bj)) for bj in basis] for bi in basis]


def derivation_algebra(alg, basis=None):
    """Der(alg) as a Lie algebra of k x k matrices acting on coordinates in ``basis``.

    Column l of a derivation holds the coordinates of D(b_l).
    """
    F = alg.field
    basis = list(basis if basis is not None else alg.space.basis)
    k = len(basis)
    c = _structure_constants(alg, basis)
    z = F.zero
    rows = []
    # D(b_i b_j) - D(b_i) b_j - b_i D(b_j) = 0, coordinate q; unknown D[q][l] at q*k + l
    for i in range(k):
        for j in range(k):
            cij = c[i][j]
            for q in range(k):
                row = [z] * (k * k)
                for l in range(k):
                    if cij[l]:
                        row[q * k + l] = row[q * k + l] + cij[l]
                for p in range(k):
                    if c[p][j][q]:
                        row[p * k + i] = row[p * k + i] - c[p][j][q]
                    if c[i][p][q]:
                        row[p * k + j] = row[p * k + j] - c[i][p][q]
                if any(row):
                    rows.append(tuple(row))
    der = nullspace(F, rows, k * k)
    return matrix_algebra(F, k, "bracket", der, name=f"Der({alg.name})")


def derivation_grading(grading):
    """Der(A) with the induced grading Der_a = {D : D(A_b) in A_(a+b) for all b}."""
    alg, G = grading.algebra, grading.group
    basis, degs = graded_basis(grading)
    der = derivation_algebra(alg, basis)
    k = len(basis)
    F = alg.field
    z, o = F.zero, F.one
    shifts = {}
    for q in range(k):
        for l in range(k):
            a = G.sub(degs[q], degs[l])
            v = [z] * (k * k)
            v[q * k + l] = o
            shifts.setdefault(a, []).append(tuple(v))
    comps = []
    for a, vecs in shifts.items():
        comps.append((a, der.space.intersect(Subspace.span(F, k * k, vecs))))
    if sum(s.dim for _, s in comps) != der.dim:
        raise GradingError("homogeneous derivations do not span Der")
    return der, Grading(der, G, comps)


def is_abelian(alg, sub):
    return all(not any(alg.product(u, v)) for u in sub.basis for v in sub.basis)


def normalizer(alg, sub):
    """{x in alg : product(x, sub) in sub}."""
    F = alg.field
    basis = alg.space.basis
    # x = sum c_i b_i; require reduce(product(b_i, h)) combination to vanish for each h
    cols = []
    for b in basis:
        col = []
        for h in sub.basis:
            col.extend(sub.reduce(alg.product(b, h)))
        cols.append(col)
    if not cols or not cols[0]:
        return alg.space
    rows = [tuple(cols[i][r] for i in range(len(basis))) for r in range(len(cols[0]))]
    ker = nullspace(F, rows, len(basis))
    return Subspace.span(F, alg.ambient_dim, [alg.space.combine(c) for c in ker.basis])
