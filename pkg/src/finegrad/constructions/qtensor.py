"""The graded division algebra Q^(x)m realized in M_(2^m), with its involution tau."""

import itertools

from ..abgroup import AbGroup
from ..cyclofield import make_field
from ..grading import Grading, matrix_algebra
from ..linalg import Matrix, Subspace
from .descriptor import label_sign

__all__ = ["q_matrices", "QTensor", "qtensor", "all_labels", "symplectic_form", "quadratic_form"]


def q_matrices(F):
    """I, q1, q2, q3 = q1 q2, indexed by the bit pairs 00, 10, 01, 11."""
    return {
        (0, 0): Matrix.identity(F, 2),
        (1, 0): Matrix.from_rows(F, [[1, 0], [0, -1]]),
        (0, 1): Matrix.from_rows(F, [[0, 1], [1, 0]]),
        (1, 1): Matrix.from_rows(F, [[0, 1], [-1, 0]]),
    }


def all_labels(m):
    return [tuple(b) for b in itertools.product((0, 1), repeat=2 * m)]


def symplectic_form(a, b):
    """Commutation bicharacter: x_a x_b = (-1)^beta(a,b) x_b x_a."""
    return sum(a[2 * i] * b[2 * i + 1] + a[2 * i + 1] * b[2 * i] for i in range(len(a) // 2)) % 2


def quadratic_form(a):
    """0 for tau-symmetric labels, 1 for tau-skew ones."""
    return sum(a[2 * i] & a[2 * i + 1] for i in range(len(a) // 2)) % 2


class QTensor:
    def __init__(self, m, field=None):
        self.m = m
        self.size = 2 ** m
        self.field = F = field or make_field([4])
        self.group = AbGroup.from_invariants(0, (2,) * (2 * m))
        self.labels = all_labels(m)
        q = q_matrices(F)
        self._mats = {}
        for a in self.labels:
            M = Matrix.identity(F, 1)
            for i in range(m):
                M = M.kron(q[(a[2 * i], a[2 * i + 1])])
            self._mats[a] = M

    def matrix(self, label):
        return self._mats[tuple(label)]

    def sign(self, label):
        return label_sign(label)

    def degree(self, label):
        return self.group.elem(label)

    def tau(self, X):
        # transpose on each tensor factor is the transpose of the Kronecker product
        return X.transpose()

    def grading(self):
        alg = matrix_algebra(self.field, self.size, "assoc")
        comps = [(a, Subspace.span(self.field, alg.ambient_dim, [self._mats[a].data])) for a in self.labels]
        return Grading(alg, self.group, comps)


def qtensor(m, field=None):
    return QTensor(m, field)
