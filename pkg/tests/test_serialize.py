import json

import pytest
from hypothesis import given, strategies as st

from finegrad.constructions import Descriptor
from finegrad.cyclofield import make_field
from finegrad.grading import GradingError, verify_grading
from finegrad.serialize import dumps, grading_from_json, grading_to_json

from cached import g2, outer, pauli_m


@pytest.mark.parametrize("build", [lambda: pauli_m(3), lambda: outer("sl-outer:m=1,s=0,d=1;10").grading, lambda: g2()[1]])
def test_roundtrip(build):
    g = build()
    obj = grading_to_json(g)
    h = grading_from_json(json.loads(dumps(obj)))
    assert [d for d, _ in h.components] == [d for d, _ in g.components]
    assert h.subspaces() == g.subspaces()
    assert h.group.iso_type() == g.group.iso_type()
    assert verify_grading(h)
    assert dumps(grading_to_json(h)) == dumps(obj)


def test_embedding_field():
    g = pauli_m(2)
    h = grading_from_json(grading_to_json(g), make_field([4]))
    assert h.algebra.field.conductor == 4 and verify_grading(h)
    with pytest.raises(GradingError):
        grading_from_json(grading_to_json(pauli_m(3)), make_field([4]))


def test_malformed():
    obj = grading_to_json(pauli_m(2))
    del obj["group"]
    with pytest.raises(GradingError):
        grading_from_json(obj)
    obj = grading_to_json(pauli_m(2))
    obj["components"][1]["degree"] = obj["components"][0]["degree"]
    with pytest.raises(GradingError):
        grading_from_json(obj)


labels = st.integers(0, 2).flatmap(lambda m: st.tuples(
    st.just(m), st.integers(0, 2), st.lists(st.lists(st.integers(0, 1), min_size=2 * m, max_size=2 * m), min_size=0, max_size=4)))


@given(labels)
def test_descriptor_text_roundtrip(params):
    m, s, ds = params
    if s == 0 and not ds:
        return
    d = Descriptor("sl-outer", m, s, tuple(tuple(a) for a in ds)).validate()
    assert Descriptor.parse(d.to_text()) == d
    assert d.n == 2 ** m * (len(ds) + 2 * s)
