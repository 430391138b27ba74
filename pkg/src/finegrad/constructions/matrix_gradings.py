"""Pauli, Cartan and inner (Kronecker) gradings on matrix algebras."""

from ..abgroup import AbGroup
from ..cyclofield import make_field, root_of_unity
from ..grading import Grading, matrix_algebra, sl_algebra
from ..linalg import Matrix, Subspace
from .descriptor import Descriptor, DescriptorError

__all__ = ["pauli_matrices", "pauli", "cartan_matrix_grading", "inner_grading", "kron_all"]


def pauli_matrices(F, n):
    """x = diag(1, e, ..., e^(n-1)) and the cyclic shift y, with yx = e xy."""
    eps = root_of_unity(F, n)
    x = Matrix.diag(F, [eps ** i for i in range(n)])
    y = Matrix.zeros(F, n)
    data = list(y.data)
    for i in range(n):
        data[i * n + (i + 1) % n] = F.one
    return x, Matrix(F, n, n, data)


def _grading_from_elements(alg, G, elements):
    """Group (degree, vector) pairs into components."""
    buckets = {}
    for deg, vec in elements:
        buckets.setdefault(G.elem(deg), []).append(vec)
    comps = [(d, Subspace.span(alg.field, alg.ambient_dim, vs)) for d, vs in buckets.items()]
    return Grading(alg, G, comps)


def pauli(n, field=None):
    """Pauli grading of M_n by Z_n^2: component (i, j) is F x^i y^j."""
    if n < 2:
        raise ValueError("Pauli grading needs n >= 2")
    F = field or make_field([n])
    x, y = pauli_matrices(F, n)
    G = AbGroup.from_invariants(0, (n, n))
    alg = matrix_algebra(F, n, "assoc")
    xs = [x.power(i) for i in range(n)]
    ys = [y.power(j) for j in range(n)]
    elems = [((i, j), (xs[i] @ ys[j]).data) for i in range(n) for j in range(n)]
    return _grading_from_elements(alg, G, elems)


def cartan_matrix_grading(m, field=None):
    """Grading of M_m by Z^(m-1) with E_ij of degree e_(i-1) - e_(j-1), e_0 = 0."""
    if m < 1:
        raise ValueError("m must be positive")
    F = field or make_field([1])
    G = AbGroup(m - 1, [])
    alg = matrix_algebra(F, m, "assoc")

    def eps(i):
        v = [0] * (m - 1)
        if i:
            v[i - 1] = 1
        return v

    elems = []
    for i in range(m):
        for j in range(m):
            deg = [a - b for a, b in zip(eps(i), eps(j))]
            elems.append((deg, Matrix.unit(F, m, i, j).data))
    return _grading_from_elements(alg, G, elems)


def kron_all(mats):
    out = mats[0]
    for M in mats[1:]:
        out = out.kron(M)
    return out


def inner_grading(desc, field=None):
    """Kronecker product of a Cartan grading and Pauli gradings.

    Returns (grading on M_n, its restriction to sl_n).
    """
    if isinstance(desc, str):
        desc = Descriptor.parse(desc)
    if desc.kind != "sl-inner":
        raise DescriptorError("inner_grading needs an sl-inner descriptor")
    desc.validate()
    m, pps = desc.m, desc.pp
    F = field or make_field([4] + list(pps))
    n = desc.n
    # presentation: m-1 free Cartan generators, then two generators per Pauli factor
    ngen = m - 1 + 2 * len(pps)
    rels = []
    for k, q in enumerate(pps):
        for t in range(2):
            r = [0] * ngen
            r[m - 1 + 2 * k + t] = q
            rels.append(r)
    G = AbGroup(ngen, rels)
    factors = []
    cart = []
    for i in range(m):
        for j in range(m):
            deg = [0] * (m - 1)
            if i:
                deg[i - 1] += 1
            if j:
                deg[j - 1] -= 1
            cart.append((deg, Matrix.unit(F, m, i, j)))
    factors.append(cart)
    for q in pps:
        x, y = pauli_matrices(F, q)
        xs = [x.power(i) for i in range(q)]
        ys = [y.power(j) for j in range(q)]
        factors.append([([i, j], xs[i] @ ys[j]) for i in range(q) for j in range(q)])
    elems = [([], None)]
    for fac in factors:
        elems = [(d1 + d2, M2 if M1 is None else M1.kron(M2)) for d1, M1 in elems for d2, M2 in fac]
    alg = matrix_algebra(F, n, "assoc")
    full = _grading_from_elements(alg, G, [(G.combination(d), M.data) for d, M in elems])
    return full, full.restrict(sl_algebra(F, n))
