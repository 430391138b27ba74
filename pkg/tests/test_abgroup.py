import itertools
import random

import pytest

from finegrad.abgroup import AbGroup, NotASubgroup, smith_normal_form


def iso(G):
    return G.iso_type()


def test_free_presentation():
    assert iso(AbGroup.from_presentation(3, [])) == (3, ())


def test_gtilde_small():
    # t, g1, g2 with 2t = 0, 2 g1 = 0: g1 + g2 torsion free
    G = AbGroup.from_presentation(3, [[2, 0, 0], [0, 2, 0]])
    assert iso(G) == (1, (2, 2))
    # (0,1;1): generator g1 with 2 g1 = 0 and g2 + g3 = 0
    G = AbGroup.from_presentation(3, [[2, 0, 0], [0, 1, 1]])
    assert iso(G) == (1, (2,))


def test_smith_form_identity():
    rng = random.Random(1)
    for _ in range(30):
        A = [[rng.randint(-6, 6) for _ in range(4)] for _ in range(3)]
        U, D, V = smith_normal_form(A)
        prod = [[sum(U[i][k] * A[k][l] * V[l][j] for k in range(3) for l in range(4)) for j in range(4)] for i in range(3)]
        assert prod == D
        diag = [D[i][i] for i in range(3) if D[i][i]]
        assert all(b % a == 0 for a, b in zip(diag, diag[1:]))


def test_smith_permutation_invariance():
    rng = random.Random(2)
    for _ in range(20):
        rels = [[rng.randint(-4, 4) for _ in range(4)] for _ in range(3)]
        base = iso(AbGroup(4, rels))
        perm = list(range(4))
        rng.shuffle(perm)
        shuffled = [[r[p] for p in perm] for r in reversed(rels)]
        assert iso(AbGroup(4, shuffled)) == base


def test_subgroups():
    Z2 = AbGroup.from_invariants(2)
    assert iso(Z2.subgroup([(1, 0)])) == (1, ())
    assert iso(Z2.subgroup([])) == (0, ())
    G = AbGroup.from_invariants(1, (2,))
    H = G.subgroup([(1, 0)])
    assert H.ambient is G
    assert G.order((1, 0)) == 2 and G.order((0, 1)) is None


def test_iso_type_distinguishes():
    a = AbGroup.from_invariants(0, (4, 2, 2))
    b = AbGroup.from_invariants(0, (2, 2, 2, 2))
    assert not a.is_isomorphic(b)
    assert a.order_of_group() == b.order_of_group() == 16
    assert a.torsion == (2, 2, 4)


def test_invariant_factors_chain():
    G = AbGroup.from_invariants(0, (6, 4))
    assert G.torsion == (2, 12)


def test_quotients():
    G = AbGroup.from_invariants(1, (2, 2))
    h = (1, 0, 0)
    Q = G.quotient([h])
    assert iso(Q) == (1, (2,))
    with pytest.raises(NotASubgroup):
        G.quotient(AbGroup.from_invariants(0, (3,)))


def test_element_ops():
    G = AbGroup.from_invariants(1, (2, 4))
    a, b = G.elem((1, 3, 5)), G.elem((1, 2, -1))
    assert G.add(a, b) == (0, 1, 4)
    assert G.sub(a, a) == G.zero
    assert G.add(a, G.neg(a)) == G.zero
    assert G.mul(4, (0, 1, 0)) == (0, 0, 0)
    assert G.order((0, 1, 0)) == 4


def test_preimage_roundtrip():
    G = AbGroup.from_invariants(0, (2, 2, 4))
    H = G.subgroup([(1, 0, 0), (0, 0, 2)])
    assert iso(H) == (0, (2, 2))
    for x in H.elements():
        y = H.embed(x)
        assert H.preimage(y) == x
    assert H.preimage((0, 1, 0)) is None
    assert sum(1 for g in G.elements() if H.contains(g)) == 4


def test_elements_finite():
    G = AbGroup.from_invariants(0, (2, 3))
    assert G.torsion == (6,)
    G = AbGroup.from_invariants(0, (2, 4))
    els = G.elements()
    assert len(els) == G.order_of_group() == 8
    assert set(els) == {G.elem(x) for x in itertools.product(range(-2, 6), range(-3, 9))}
