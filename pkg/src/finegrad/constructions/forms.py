"""Sesquilinear forms on graded free modules over Q^(x)m and their adjoints.

An element of M_(r+2s)(D), D = Q^(x)m, is realized as the n x n block matrix
(n = 2^m (r+2s)) whose (i, j) block is x_ij in M_(2^m).  A vector of the
free module is an n x 2^m block column.
"""

from ..abgroup import AbGroup
from ..cyclofield import make_field
from ..grading import Grading, matrix_algebra
from ..linalg import Matrix, Subspace
from .descriptor import Descriptor, DescriptorError
from .qtensor import QTensor

__all__ = ["Form", "build_form", "adjoint"]


def adjoint(X, Mb, Mb_inv=None):
    """M_B^-1 (tau(x_ji)) M_B; the blockwise tau-transpose is the full transpose."""
    if Mb_inv is None:
        Mb_inv = Mb.inverse()
    return Mb_inv @ X.transpose() @ Mb


class Form:
    def __init__(self, desc, field=None):
        desc.validate()
        if desc.kind == "sl-inner":
            raise DescriptorError("inner descriptors carry no form")
        self.desc = desc
        F = self.field = field or make_field([4])
        m, r, s = desc.m, desc.r, desc.s
        self.D = QTensor(m, F)
        k = self.k = self.D.size
        R = self.blocks = r + 2 * s
        self.n = k * R
        eps = desc.epsilon or 1
        blocks = [self.D.matrix(a) for a in desc.labels]
        I, Z = Matrix.identity(F, k), Matrix.zeros(F, k)
        pair = _block_matrix(F, [[Z, I], [I.scale(eps), Z]])
        blocks += [pair] * s
        self.Mb = Matrix.block_diag(F, blocks)
        self.Mb_inv = self.Mb.inverse()

        # G~ = < T, g_1..g_R | 2t = 0, 2 g_i = deg d_i, g_(r+2i-1) + g_(r+2i) = 0 >
        nt = 2 * m
        ngen = nt + R
        rels = []
        for i in range(nt):
            rels.append([2 if j == i else 0 for j in range(ngen)])
        for i, a in enumerate(desc.labels):
            rel = [-b for b in a] + [0] * R
            rel[nt + i] = 2
            rels.append(rel)
        for i in range(s):
            rel = [0] * ngen
            rel[nt + r + 2 * i] = 1
            rel[nt + r + 2 * i + 1] = 1
            rels.append(rel)
        Gt = self.Gtilde = AbGroup(ngen, rels)
        self.t_elems = [Gt.gen_images[i] for i in range(nt)]
        self.g = [Gt.gen_images[nt + i] for i in range(R)]
        gens = list(self.t_elems) + [Gt.sub(self.g[i], self.g[0]) for i in range(1, R)]
        self.Gbar = Gt.subgroup(gens)
        self._bar_cache = {}

    # -- degrees -----------------------------------------------------------
    def t_degree(self, label):
        Gt = self.Gtilde
        acc = Gt.zero
        for b, t in zip(label, self.t_elems):
            if b:
                acc = Gt.add(acc, t)
        return acc

    def unit_degree(self, i, j, label):
        """Degree in G~ of the block matrix with x_label at block (i, j)."""
        Gt = self.Gtilde
        return Gt.add(Gt.sub(self.g[i], self.g[j]), self.t_degree(label))

    def to_bar(self, x):
        y = self._bar_cache.get(x)
        if y is None:
            y = self.Gbar.preimage(x)
            if y is None:
                raise ValueError(f"{x} is not in the subgroup G-bar")
            self._bar_cache[x] = y
        return y

    def vector_degree(self, i, label):
        return self.Gtilde.add(self.g[i], self.t_degree(label))

    # -- realized elements -------------------------------------------------
    def block_unit(self, i, j, label):
        F, k, n = self.field, self.k, self.n
        data = [F.zero] * (n * n)
        X = self.D.matrix(label)
        for a in range(k):
            for b in range(k):
                data[(i * k + a) * n + j * k + b] = X[a, b]
        return Matrix(F, n, n, data)

    def module_vector(self, i, label):
        """Basis vector v_i times x_label as an n x k block column."""
        F, k, n = self.field, self.k, self.n
        data = [F.zero] * (n * k)
        X = self.D.matrix(label)
        for a in range(k):
            for b in range(k):
                data[(i * k + a) * k + b] = X[a, b]
        return Matrix(F, n, k, data)

    def B(self, v, w):
        """B(v, w) = tau(v)^t M_B w, an element of D."""
        return v.transpose() @ self.Mb @ w

    def phi(self, X):
        return self.Mb_inv @ X.transpose() @ self.Mb

    def phi_vec(self, vec):
        return self.phi(Matrix(self.field, self.n, self.n, vec)).data

    def phi_is_involution(self):
        C = self.Mb_inv @ self.Mb.transpose()
        c = C[0, 0]
        return C == Matrix.identity(self.field, self.n).scale(c)

    # -- gradings ------------------------------------------------------------
    def presplit_grading(self):
        """The G-bar grading on M_n = M_(r+2s)(D): x_t at block (i, j) has degree g_i + t - g_j."""
        F, n = self.field, self.n
        alg = matrix_algebra(F, n, "assoc")
        buckets = {}
        for i in range(self.blocks):
            for j in range(self.blocks):
                for a in self.D.labels:
                    d = self.to_bar(self.unit_degree(i, j, a))
                    buckets.setdefault(d, []).append(self.block_unit(i, j, a).data)
        comps = [(d, Subspace.span(F, alg.ambient_dim, vs)) for d, vs in buckets.items()]
        return Grading(alg, self.Gbar, comps)

    # -- checks --------------------------------------------------------------
    def check_sesquilinear(self):
        """B(v d, w) = tau(d) B(v, w) and B(v, w d) = B(v, w) d on basis vectors."""
        labels = self.D.labels
        for i in range(self.blocks):
            for j in range(self.blocks):
                v, w = self.module_vector(i, labels[0]), self.module_vector(j, labels[0])
                base = self.B(v, w)
                for a in labels:
                    d = self.D.matrix(a)
                    if self.B(v @ d, w) != self.D.tau(d) @ base:
                        return False
                    if self.B(v, w @ d) != base @ d:
                        return False
        return True

    def check_degree_compatibility(self):
        """B(V_g, V_h) lies in D_(g+h): zero unless g + h is in T, and then homogeneous of that degree.

        Equivalently the identity coefficient of B(V_g, V_h) vanishes unless g + h = e.
        """
        Gt = self.Gtilde
        tdeg = {self.t_degree(a): a for a in self.D.labels}
        vecs = [(self.vector_degree(i, a), self.module_vector(i, a)) for i in range(self.blocks) for a in self.D.labels]
        for g, v in vecs:
            for h, w in vecs:
                val = self.B(v, w)
                if val.is_zero():
                    continue
                a = tdeg.get(Gt.add(g, h))
                if a is None:
                    return False
                # val must be a multiple of x_a
                X = self.D.matrix(a)
                ratio = None
                for x, y in zip(val.data, X.data):
                    if y.is_zero():
                        if not x.is_zero():
                            return False
                    elif ratio is None:
                        ratio = x / y
                    elif x != ratio * y:
                        return False
        return True

    def check_adjoint(self):
        """B(x v, w) = B(v, phi(x) w) for basis elements x of M_n and v, w in the D-basis.

        B is sesquilinear, so the D-basis v_1..v_(r+2s) suffices.
        """
        labels = self.D.labels
        vecs = [self.module_vector(i, labels[0]) for i in range(self.blocks)]
        for i in range(self.blocks):
            for j in range(self.blocks):
                for a in labels:
                    x = self.block_unit(i, j, a)
                    px = self.phi(x)
                    for v in vecs:
                        xv = x @ v
                        for w in vecs:
                            if self.B(xv, w) != self.B(v, px @ w):
                                return False
        return True


def _block_matrix(F, blocks):
    k = blocks[0][0].rows
    R = len(blocks)
    n = k * R
    data = [F.zero] * (n * n)
    for bi, row in enumerate(blocks):
        for bj, M in enumerate(row):
            for a in range(k):
                for b in range(k):
                    data[(bi * k + a) * n + bj * k + b] = M[a, b]
    return Matrix(F, n, n, data)


def build_form(desc, field=None):
    if isinstance(desc, str):
        desc = Descriptor.parse(desc)
    return Form(desc, field)
