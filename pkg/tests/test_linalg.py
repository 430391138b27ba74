import random

import pytest

from finegrad.constructions.qtensor import q_matrices
from finegrad.cyclofield import make_field
from finegrad.linalg import AmbientMismatch, Matrix, SingularMatrix, Subspace, eigenspace, is_squarefree, minimal_polynomial

F = make_field([4])


def e(i, n):
    return tuple(F.one if j == i else F.zero for j in range(n))


def rand_matrix(rng, n, F=F):
    z = F.zeta()
    return Matrix(F, n, n, [rng.randint(-2, 2) + rng.randint(-1, 1) * z for _ in range(n * n)])


def test_quaternion_matrices():
    q = q_matrices(F)
    q1, q2, q3 = q[(1, 0)], q[(0, 1)], q[(1, 1)]
    assert q1 @ q2 == q3
    assert q1 @ q1 == Matrix.identity(F, 2)
    assert Matrix.identity(F, 2).kron(q1) == Matrix.diag(F, [1, -1, 1, -1])


def test_trace_units():
    for i in range(3):
        for j in range(3):
            assert Matrix.unit(F, 3, i, j).trace() == (F.one if i == j else F.zero)


def test_inverse():
    rng = random.Random(0)
    A = rand_matrix(rng, 4)
    while True:
        try:
            Ai = A.inverse()
            break
        except SingularMatrix:
            A = rand_matrix(rng, 4)
    assert A @ Ai == Matrix.identity(F, 4)
    with pytest.raises(SingularMatrix):
        Matrix.unit(F, 2, 0, 0).inverse()


def test_kron_mixed_product():
    rng = random.Random(3)
    for _ in range(5):
        A, B, C, D = (rand_matrix(rng, 2) for _ in range(4))
        assert A.kron(B) @ C.kron(D) == (A @ C).kron(B @ D)


def test_subspace_examples():
    e1, e2 = e(0, 3), e(1, 3)
    assert Subspace.span(F, 3, [e1]).intersect(Subspace.span(F, 3, [e2])).dim == 0
    assert Subspace.span(F, 3, [e1, e2]).member(tuple(a + b for a, b in zip(e1, e2)))
    diag = Subspace.span(F, 16, [Matrix.unit(F, 4, i, i).data for i in range(4)])
    traceless = Subspace.span(F, 16, [tuple(a - b for a, b in zip(Matrix.unit(F, 4, 0, 0).data, Matrix.unit(F, 4, i, i).data)) for i in range(1, 4)])
    assert diag.contains(traceless) and traceless.dim == 3
    with pytest.raises(AmbientMismatch):
        Subspace.span(F, 3, [e1]).sum(Subspace.span(F, 4, [e(0, 4)]))


def test_dimension_formula():
    rng = random.Random(5)
    for _ in range(10):
        vs = [tuple(F(rng.randint(-1, 1)) for _ in range(5)) for _ in range(3)]
        ws = [tuple(F(rng.randint(-1, 1)) for _ in range(5)) for _ in range(3)]
        S, T = Subspace.span(F, 5, vs), Subspace.span(F, 5, ws)
        assert S.sum(T).dim + S.intersect(T).dim == S.dim + T.dim
        for v in vs:
            assert S.member(v)


def test_echelon_is_canonical():
    a = Subspace.span(F, 3, [e(0, 3), e(1, 3)])
    b = Subspace.span(F, 3, [tuple(x + y for x, y in zip(e(0, 3), e(1, 3))), tuple(x - y for x, y in zip(e(0, 3), e(1, 3)))])
    assert a == b and a.basis == b.basis


def test_eigenspaces():
    q = q_matrices(F)
    assert eigenspace(q[(1, 0)], F.one) == Subspace.span(F, 2, [e(0, 2)])
    assert eigenspace(q[(1, 1)], F.zeta()).dim == 1
    assert eigenspace(Matrix.identity(F, 3), F.one).dim == 3


def test_minimal_polynomial():
    q = q_matrices(F)
    assert is_squarefree(minimal_polynomial(q[(1, 1)]))
    N = Matrix.unit(F, 2, 0, 1)
    assert not is_squarefree(minimal_polynomial(N))
