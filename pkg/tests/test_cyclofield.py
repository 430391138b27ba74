import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from finegrad.cyclofield import OrderUnavailable, cyclotomic_poly, make_field, root_of_unity


def test_make_field_conductor():
    assert make_field([2]).conductor == 2
    assert make_field([4, 3]).conductor == 12
    F = make_field([8])
    assert F.conductor == 8 and F.degree == 4


def test_cyclotomic_degrees():
    phi = {1: 1, 2: 1, 3: 2, 4: 2, 5: 4, 6: 2, 8: 4, 12: 4, 15: 8, 16: 8}
    for n, d in phi.items():
        assert len(cyclotomic_poly(n)) - 1 == d
    assert list(cyclotomic_poly(12)) == [1, 0, -1, 0, 1]


def test_roots_of_unity():
    F = make_field([4])
    assert root_of_unity(F, 2) == F(-1)
    z = root_of_unity(F, 4)
    assert z * z == F(-1)
    G = make_field([4, 3])
    w = root_of_unity(G, 3)
    assert w * w + w + 1 == G.zero
    with pytest.raises(OrderUnavailable):
        root_of_unity(F, 3)


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5, 8, 12])
def test_root_orders(N):
    F = make_field([N])
    for n in [d for d in range(1, N + 1) if N % d == 0]:
        z = root_of_unity(F, n)
        for k in range(1, 2 * N + 1):
            assert ((z ** k) == F.one) == (k % n == 0)


def test_scalar_examples():
    F = make_field([4])
    z = F.zeta()
    assert z * z == F(-1)
    assert (1 + z) + (1 - z) == F(2)
    G = make_field([3])
    w = G.zeta()
    assert w.inv() == w * w
    with pytest.raises(ZeroDivisionError):
        G.zero.inv()


def test_serialized_form():
    F = make_field([4])
    z = F.zeta()
    assert (F(mpq(1, 2)) + 3 * z).to_strings() == ["1/2", "3/1"]
    assert F.zero.to_strings() == []


def test_embed_subfield():
    F = make_field([12])
    w = make_field([3]).zeta()
    assert F.embed(w) == root_of_unity(F, 3)
    assert F(w) ** 3 == F.one


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 4, 5, 8, 12]), st.lists(coeff, min_size=12, max_size=12))
def test_field_laws(N, cs):
    F = make_field([N])
    d = F.degree
    a, b, c = (F.from_coeffs([mpq(x.numerator, x.denominator) for x in cs[i * 4:i * 4 + d]]) for i in range(3))
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    if a:
        assert a * a.inv() == F.one
