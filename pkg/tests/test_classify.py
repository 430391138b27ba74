import itertools
import random

import pytest

from finegrad.classify import (
    MODES,
    canonical,
    classify,
    descriptor_equivalent,
    enumerate_inner_sl,
    enumerate_outer_sl,
    enumerate_skew,
    equivalent_by_search,
    fingerprint,
    label_action,
    label_classes,
    partition_by_search,
)
from finegrad.constructions import Descriptor, DescriptorError


def texts(ds):
    return [d.to_text() for d in ds]


def test_inner_enumeration():
    assert texts(enumerate_inner_sl(4)) == ["sl-inner:m=4,pp=", "sl-inner:m=1,pp=4"]
    assert texts(enumerate_inner_sl(3)) == ["sl-inner:m=3,pp=", "sl-inner:m=1,pp=3"]
    assert sorted((d.m, d.pp) for d in enumerate_inner_sl(6)) == [(1, (2, 3)), (2, (3,)), (3, (2,)), (6, ())]
    eight = {(d.m, d.pp) for d in enumerate_inner_sl(8)}
    assert (2, (2, 2)) not in eight and (2, (4,)) in eight and (1, (2, 2, 2)) not in eight
    with pytest.raises(ValueError):
        enumerate_inner_sl(2)


def test_outer_enumeration():
    assert len(enumerate_outer_sl(4)) == 6
    assert texts(enumerate_outer_sl(3)) == ["sl-outer:m=0,s=1,d=1", "sl-outer:m=0,s=0,d=1;1;1"]
    reps = label_classes(1, 2)
    assert [tuple(format(a, "02b") for a in ms) for ms in reps] == [("00", "00"), ("00", "01")]
    kept = [d for d in enumerate_outer_sl(4) if (d.m, d.s) == (1, 0)]
    assert texts(kept) == ["sl-outer:m=1,s=0,d=1;01"]
    assert descriptor_equivalent(kept[0], Descriptor.parse("sl-outer:m=1,s=0,d=1;10"))


@pytest.mark.parametrize("n,eps,count", [(5, 1, 3), (6, -1, 3), (7, 1, 4), (8, -1, 7), (8, 1, 15), (9, 1, 5)])
def test_skew_counts(n, eps, count):
    assert len(enumerate_skew(n, eps)) == count


def test_skew_errors():
    with pytest.raises(ValueError):
        enumerate_skew(7, -1)
    with pytest.raises(ValueError):
        enumerate_skew(4, 1)


def test_equivalence_examples():
    a = Descriptor.parse("sl-outer:m=1,s=0,d=1;10")
    b = Descriptor.parse("sl-outer:m=1,s=0,d=1;01")
    c = Descriptor.parse("sl-outer:m=1,s=0,d=1;1")
    assert descriptor_equivalent(a, b)
    assert not descriptor_equivalent(a, c)
    assert descriptor_equivalent(a, a)
    assert equivalent_by_search(a, b) and not equivalent_by_search(a, c)
    with pytest.raises(DescriptorError):
        descriptor_equivalent(a, Descriptor.parse("ortho:m=1,s=0,d=1;10"))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_generators_preserve_form(m):
    for mode in MODES:
        assert label_action(m, "sl-outer", mode).preserves_form()


def test_orthogonal_group_orders():
    assert len(label_action(1, "ortho", "orthogonal").group_elements()) == 2
    assert len(label_action(2, "ortho", "orthogonal").group_elements()) == 72
    assert len(label_action(2, "ortho", "symplectic").group_elements()) == 720


@pytest.mark.parametrize("kind,n", [("sl-outer", 4), ("sl-outer", 8), ("ortho", 8), ("sympl", 8)])
def test_canonical_soundness(kind, n):
    descs = enumerate_outer_sl(n) if kind == "sl-outer" else enumerate_skew(n, 1 if kind == "ortho" else -1)
    for d in descs:
        c = canonical(d)
        assert c == d and descriptor_equivalent(d, c)


def test_canonical_of_random_descriptors():
    rng = random.Random(7)
    for _ in range(30):
        labels = tuple(tuple(rng.randint(0, 1) for _ in range(4)) for _ in range(3))
        d = Descriptor("sl-outer", 2, 0, labels)
        c = canonical(d)
        assert descriptor_equivalent(d, c) and equivalent_by_search(d, c)
        assert canonical(c) == c


@pytest.mark.parametrize("kind", ["sl-outer", "ortho", "sympl"])
def test_search_partition_small(kind):
    for m in (1, 2):
        for r in (1, 2, 3):
            blocks = partition_by_search(m, r, kind)
            assert sorted(min(b) for b in blocks) == label_classes(m, r, kind)


def test_orthogonal_mode_counts():
    assert len(enumerate_skew(8, 1, "orthogonal")) == 20
    assert len(enumerate_skew(8, -1, "orthogonal")) == 8


def records(alg, n):
    return classify(alg, n)


@pytest.mark.parametrize("alg,n", [("sl", 4), ("so", 5), ("sp", 6), ("sp", 8)])
def test_fingerprints_distinct(alg, n):
    fps = [fingerprint(r) for r in records(alg, n)]
    assert len(set(fps)) == len(fps)


def test_sl2_special_case():
    recs = classify("sl", 2)
    assert [r.group for r in recs] == [(1, ()), (0, (2, 2))]
    assert fingerprint(recs[1]) == ((0, (2, 2)), (1, 1, 1))


def test_type_b_family():
    for k in (2, 3, 4):
        groups = sorted(r.group for r in records("so", 2 * k + 1))
        assert groups == sorted((s, (2,) * (2 * (k - s))) for s in range(k + 1))


def test_record_json():
    r = records("sl", 4)[5]
    j = r.to_json()
    assert list(j) == ["descriptor", "kind", "group", "profile", "mode", "fingerprint_is_necessary_condition_only"]
    assert j["group"] == {"rank": 1, "torsion": [2, 2, 2]}
    assert j["mode"] == "symplectic"


def test_parallel_matches_serial():
    a = [r.to_json() for r in classify("so", 5)]
    b = [r.to_json() for r in classify("so", 5, jobs=2)]
    assert a == b


def test_so8_note():
    recs = classify("so", 8)
    assert len(recs) == 15 and all(r.notes for r in recs)
