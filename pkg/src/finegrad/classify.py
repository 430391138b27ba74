"""Equivalence classes of fine-grading descriptors.

Labels in Z_2^(2m) are encoded as ints (first bit most significant), so
integer order on sorted tuples is lexicographic order on bit strings.  The
label action is generated by symplectic transvections of the commutation
form (or only the form-preserving ones in ``orthogonal`` mode) together with
translations by the allowed labels.
"""

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .constructions.descriptor import Descriptor, DescriptorError
from .constructions.matrix_gradings import inner_grading, pauli, cartan_matrix_grading
from .constructions.outer import outer_grading_sl, skew_grading
from .constructions.qtensor import quadratic_form, symplectic_form
from .grading import component_profile, sl_algebra, universal_group

__all__ = [
    "MODES",
    "LabelAction",
    "ClassRecord",
    "label_action",
    "canonical",
    "descriptor_equivalent",
    "equivalent_by_search",
    "label_classes",
    "partition_by_search",
    "enumerate_inner_sl",
    "enumerate_outer_sl",
    "enumerate_skew",
    "fingerprint",
    "classify",
    "SO8_AUT_MERGE_NOTE",
]

MODES = ("symplectic", "orthogonal")
DEFAULT_MODE = "symplectic"

SO8_AUT_MERGE_NOTE = (
    "so_8: the 15 classes are up to conjugation in Aut(R, phi); two of them become conjugate "
    "in Aut(so_8), and three further triality gradings (Z^2 x Z_3, Z_2^3 x Z_3, Z_3^3) are not constructed"
)


def _to_int(bits):
    v = 0
    for b in bits:
        v = 2 * v + b
    return v


def _to_bits(v, m):
    return tuple((v >> (2 * m - 1 - i)) & 1 for i in range(2 * m))


def _sign_ok(kind):
    if kind == "ortho":
        return lambda a: quadratic_form(a) == 0
    if kind == "sympl":
        return lambda a: quadratic_form(a) == 1
    return lambda a: True


class LabelAction:
    """Generators of the label group for one (m, kind, mode).

    ``symplectic``: all transvections of the commutation form, generating
    Sp_2m(F_2).  ``orthogonal``: the subgroup O(Q) fixing the sign form Q,
    generated by the transvections along vectors with Q(v) = 1 together with
    permutations of tensor factors.  The linear generators are kept in
    ``transvections`` in both modes.
    """

    def __init__(self, m, kind="sl-outer", mode=DEFAULT_MODE):
        if mode not in MODES:
            raise ValueError(f"unknown label-action mode {mode!r}")
        self.m, self.kind, self.mode = m, kind, mode
        bits = [_to_bits(v, m) for v in range(4 ** m)]
        self.bits = bits
        self.valid = [_sign_ok(kind)(a) for a in bits]
        gens = []
        for v in range(1, 4 ** m):
            bv = bits[v]
            if mode == "orthogonal" and quadratic_form(bv) == 0:
                continue
            gens.append(tuple(a ^ v if symplectic_form(bits[a], bv) else a for a in range(4 ** m)))
        if mode == "orthogonal":
            # orthogonal transvections miss half of O(Q) when m = 2; swapping tensor factors supplies the rest
            for i in range(m - 1):
                swap = []
                for a in range(4 ** m):
                    b = list(bits[a])
                    b[2 * i:2 * i + 2], b[2 * i + 2:2 * i + 4] = b[2 * i + 2:2 * i + 4], b[2 * i:2 * i + 2]
                    swap.append(_to_int(b))
                gens.append(tuple(swap))
        self.transvections = gens
        if kind == "sl-outer":
            self.translations = [t for t in range(1, 4 ** m)]
        else:
            self.translations = [t for t in range(1, 4 ** m) if quadratic_form(bits[t]) == 0]
        self._canon = {}
        self.generators = gens + [tuple(a ^ t for a in range(4 ** m)) for t in self.translations]

    def preserves_form(self):
        """Every transvection preserves the commutation form on all label pairs."""
        B = [[symplectic_form(a, b) for b in self.bits] for a in self.bits]
        n = len(self.bits)
        return all(B[g[a]][g[b]] == B[a][b] for g in self.transvections for a in range(n) for b in range(n))

    def orbit(self, ms):
        ms = tuple(sorted(ms))
        seen = {ms}
        frontier = [ms]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = tuple(sorted(g[a] for a in x))
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def is_valid(self, ms):
        return all(self.valid[a] for a in ms)

    def canonical(self, ms):
        """Lexicographically least valid multiset in the orbit (memoized per orbit)."""
        ms = tuple(sorted(ms))
        c = self._canon.get(ms)
        if c is None:
            orb = self.orbit(ms)
            c = min(x for x in orb if self.is_valid(x))
            for x in orb:
                self._canon[x] = c
        return c

    def group_elements(self):
        """All linear parts as explicit permutations (closure of the transvections)."""
        n = 4 ** self.m
        ident = tuple(range(n))
        els = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for g in frontier:
                for h in self.transvections:
                    c = tuple(h[x] for x in g)
                    if c not in els:
                        els.add(c)
                        nxt.append(c)
            frontier = nxt
        return els


@lru_cache(maxsize=None)
def label_action(m, kind="sl-outer", mode=DEFAULT_MODE):
    return LabelAction(m, kind, mode)


def _multiset(desc):
    return tuple(sorted(_to_int(a) for a in desc.labels))


def _with_labels(desc, ms):
    return Descriptor(desc.kind, desc.m, desc.s, tuple(_to_bits(a, desc.m) for a in ms))


def canonical(desc, mode=DEFAULT_MODE):
    """Canonical representative of a descriptor's class."""
    if isinstance(desc, str):
        desc = Descriptor.parse(desc)
    if desc.kind == "sl-inner":
        return desc
    act = label_action(desc.m, desc.kind, mode)
    return _with_labels(desc, act.canonical(_multiset(desc)))


def descriptor_equivalent(d1, d2, mode=DEFAULT_MODE):
    if isinstance(d1, str):
        d1 = Descriptor.parse(d1)
    if isinstance(d2, str):
        d2 = Descriptor.parse(d2)
    if d1.kind != d2.kind:
        raise DescriptorError(f"cannot compare {d1.kind} with {d2.kind}")
    if d1.kind == "sl-inner":
        return (d1.m, d1.pp) == (d2.m, d2.pp)
    if (d1.m, d1.s, d1.r) != (d2.m, d2.s, d2.r):
        return False
    return canonical(d1, mode) == canonical(d2, mode)


def equivalent_by_search(d1, d2, mode=DEFAULT_MODE):
    """Direct search for a linear map sigma and translation t with sigma(t + d1) = d2 as multisets.

    Independent of the orbit-based canonical form; enumerates the whole
    linear group, so only practical for m <= 2.
    """
    if (d1.kind, d1.m, d1.s, d1.r) != (d2.kind, d2.m, d2.s, d2.r):
        return False
    act = label_action(d1.m, d1.kind, mode)
    src, dst = _multiset(d1), _multiset(d2)
    ts = [0] + list(act.translations)
    for g in _group_cache(d1.m, d1.kind, mode):
        for t in ts:
            if tuple(sorted(g[a ^ t] for a in src)) == dst:
                return True
    return False


@lru_cache(maxsize=None)
def _group_cache(m, kind, mode):
    return tuple(label_action(m, kind, mode).group_elements())


# -- enumeration ---------------------------------------------------------------


def _prime_factors(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(e, maxpart=None):
    maxpart = e if maxpart is None else maxpart
    if e == 0:
        yield ()
        return
    for k in range(min(e, maxpart), 0, -1):
        for rest in _partitions(e - k, k):
            yield (k,) + rest


def enumerate_inner_sl(n):
    if n < 3:
        raise ValueError("inner enumeration needs n >= 3; sl_2 has the Cartan and Pauli gradings")
    out = []
    for m in range(1, n + 1):
        if n % m:
            continue
        per_prime = [[tuple(p ** k for k in part) for part in _partitions(e)] for p, e in _prime_factors(n // m).items()]
        for choice in itertools.product(*per_prime):
            pp = tuple(sorted(q for c in choice for q in c))
            if pp and all(q == 2 for q in pp) and m < 3:
                continue
            out.append(Descriptor("sl-inner", m, pp=pp))
    out.sort(key=lambda d: (-d.m, d.pp))
    return out


def label_classes(m, r, kind="sl-outer", mode=DEFAULT_MODE):
    """Canonical r-multisets of valid labels, one per orbit, sorted; excluded ones kept."""
    act = label_action(m, kind, mode)
    valid_labels = [a for a in range(4 ** m) if act.valid[a]]
    seen = set()
    reps = []
    for ms in itertools.combinations_with_replacement(valid_labels, r):
        c = act.canonical(ms)
        if c not in seen:
            seen.add(c)
            reps.append(c)
    return sorted(reps)


def partition_by_search(m, r, kind="sl-outer", mode=DEFAULT_MODE):
    """Blocks of valid r-multisets under explicit group elements sigma and translations t.

    Each block is the set {sorted(sigma(a + t))} of a seed multiset, computed by
    running over the whole linear group; an oracle for :func:`label_classes`.
    """
    act = label_action(m, kind, mode)
    group = _group_cache(m, kind, mode)
    ts = [0] + list(act.translations)
    valid_labels = [a for a in range(4 ** m) if act.valid[a]]
    block_of = {}
    blocks = []
    for ms in itertools.combinations_with_replacement(valid_labels, r):
        if ms in block_of:
            continue
        images = {tuple(sorted(g[a ^ t] for a in ms)) for g in group for t in ts}
        block = frozenset(x for x in images if act.is_valid(x))
        for x in block:
            block_of[x] = len(blocks)
        blocks.append(block)
    return blocks


def _enumerate_labels(kind, n, mode, max_m):
    out = []
    m = 0
    while n % (2 ** m) == 0:
        q = n // 2 ** m
        if m > max_m:
            raise ValueError(f"n = {n} allows m = {m} > {max_m}; raise max_m to enumerate it")
        for s in range(q // 2, -1, -1):
            r = q - 2 * s
            if kind == "sympl" and m == 0 and r:
                continue
            reps = label_classes(m, r, kind, mode) if r else [()]
            for ms in reps:
                d = Descriptor(kind, m, s, tuple(_to_bits(a, m) for a in ms))
                if not d.is_excluded():
                    out.append(d)
        m += 1
    return out


def enumerate_outer_sl(n, mode=DEFAULT_MODE, max_m=3):
    """Canonical sl-outer descriptors for sl_n, excluded (non-fine) ones dropped."""
    if n < 3:
        raise ValueError("outer gradings need n >= 3")
    return _enumerate_labels("sl-outer", n, mode, max_m)


def enumerate_skew(n, eps, mode=DEFAULT_MODE, max_m=3):
    """Canonical descriptors for so_n (eps = 1) or sp_n (eps = -1)."""
    if eps not in (1, -1):
        raise ValueError("eps must be 1 or -1")
    if eps == -1 and n % 2:
        raise ValueError("symplectic involutions need n even")
    if n < 5:
        raise ValueError("skew classification needs n >= 5")
    return _enumerate_labels("ortho" if eps == 1 else "sympl", n, mode, max_m)


@dataclass
class ClassRecord:
    descriptor: str
    kind: str
    group: tuple
    profile: list
    mode: str = DEFAULT_MODE
    notes: list = dc_field(default_factory=list)

    def fingerprint(self):
        return (self.group, tuple(self.profile))

    def to_json(self):
        rank, torsion = self.group
        return {
            "descriptor": self.descriptor,
            "kind": self.kind,
            "group": {"rank": rank, "torsion": list(torsion)},
            "profile": list(self.profile),
            "mode": self.mode,
            "fingerprint_is_necessary_condition_only": True,
        }


def fingerprint(record):
    return record.fingerprint()


def construct(desc):
    """Fine grading for a descriptor, labeled by its universal group."""
    if isinstance(desc, str):
        desc = Descriptor.parse(desc)
    if desc.kind == "sl-inner":
        _, g = inner_grading(desc)
        return universal_group(g)[1]
    if desc.kind == "sl-outer":
        return outer_grading_sl(desc).grading
    return skew_grading(desc).grading


def _record(desc, mode, kind_label=None):
    g = construct(desc)
    return ClassRecord(desc.to_text(), kind_label or desc.kind, g.group.iso_type(), component_profile(g), mode)


def _sl2_records():
    out = []
    g = cartan_matrix_grading(2)
    g = universal_group(g.restrict(sl_algebra(g.algebra.field, 2)))[1]
    out.append(ClassRecord("cartan:n=2", "sl-inner", g.group.iso_type(), component_profile(g), DEFAULT_MODE))
    p = pauli(2)
    p = universal_group(p.restrict(sl_algebra(p.algebra.field, 2)))[1]
    out.append(ClassRecord("pauli:n=2", "sl-inner", p.group.iso_type(), component_profile(p), DEFAULT_MODE))
    return out


def classify(algebra, n, mode=DEFAULT_MODE, max_m=3, jobs=1):
    """ClassRecords for sl_n, so_n or sp_n."""
    if algebra == "sl":
        if n == 2:
            return _sl2_records()
        descs = enumerate_inner_sl(n) + enumerate_outer_sl(n, mode, max_m)
    elif algebra == "so":
        descs = enumerate_skew(n, 1, mode, max_m)
    elif algebra == "sp":
        descs = enumerate_skew(n, -1, mode, max_m)
    else:
        raise ValueError(f"unknown algebra {algebra!r}")
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as ex:
            records = list(ex.map(_record, descs, [mode] * len(descs)))
    else:
        records = [_record(d, mode) for d in descs]
    if algebra == "so" and n == 8:
        for r in records:
            r.notes.append("class up to conjugation in Aut(R, phi)")
    return records
