"""JSON form of gradings.

Key order is fixed: ``algebra``, ``field``, ``group``, ``components`` (then
``descriptor`` when present).  Components appear in sorted degree order, each
as ``degree``, ``dim``, ``basis``; a basis vector is a list of scalars and a
scalar is a list of "p/q" strings in ascending powers of zeta_N (zero is []).
"""

import json

from .abgroup import AbGroup
from .cyclofield import make_field
from .grading import Algebra, Grading, GradingError, matrix_algebra
from .linalg import Subspace

__all__ = ["grading_to_json", "grading_from_json", "dumps", "load_grading", "read_json", "scalar_from_strings"]


def _algebra_json(alg):
    out = {"kind": alg.kind, "name": alg.name, "dim": alg.dim, "ambient_dim": alg.ambient_dim}
    if alg.kind in ("assoc", "bracket"):
        out["n"] = alg.n
    elif alg.table is not None:
        out["table"] = [[u, v, int(sgn), w] for (u, v), (sgn, w) in alg.table]
    return out


def grading_to_json(grading, descriptor=None):
    alg = grading.algebra
    comps = []
    for deg, sub in grading.components:
        comps.append({
            "degree": list(deg),
            "dim": sub.dim,
            "basis": [[x.to_strings() for x in v] for v in sub.basis],
        })
    out = {
        "algebra": _algebra_json(alg),
        "field": {"conductor": alg.field.conductor},
        "group": grading.group.to_json(),
        "components": comps,
    }
    if descriptor is not None:
        out["descriptor"] = descriptor
    return out


def dumps(obj):
    return json.dumps(obj, indent=2) + "\n"


def scalar_from_strings(F, strs):
    from gmpy2 import mpq

    return F.from_coeffs([mpq(s) for s in strs])


def _table_product(F, dim, table):
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

    return product


def grading_from_json(obj, field=None):
    """Rebuild a Grading; the algebra is taken to be the span of the components.

    With ``field`` given, scalars are embedded into it (its conductor must be a
    multiple of the file's).
    """
    try:
        a = obj["algebra"]
        F0 = make_field([obj["field"]["conductor"]])
        F = field or F0
        if F.conductor % F0.conductor:
            raise GradingError(f"Q(zeta_{F0.conductor}) does not embed in Q(zeta_{F.conductor})")
        G = AbGroup.from_invariants(obj["group"]["rank"], tuple(obj["group"]["torsion"]))
        D = a["ambient_dim"]
        comps = []
        for c in obj["components"]:
            vecs = []
            for v in c["basis"]:
                if len(v) != D:
                    raise GradingError(f"basis vector of length {len(v)}, expected {D}")
                vecs.append(tuple(F(scalar_from_strings(F0, s)) for s in v))
            sub = Subspace.span(F, D, vecs)
            if sub.dim != c["dim"] or len(vecs) != c["dim"]:
                raise GradingError(f"component {c['degree']} does not have dimension {c['dim']}")
            comps.append((tuple(c["degree"]), sub))
    except (KeyError, TypeError, ValueError) as e:
        raise GradingError(f"malformed grading file: {e!r}") from e
    space = Subspace.zero(F, D)
    for _, s in comps:
        space = space.sum(s)
    if a["kind"] in ("assoc", "bracket"):
        if a["n"] * a["n"] != D:
            raise GradingError("matrix size does not match ambient dimension")
        alg = matrix_algebra(F, a["n"], a["kind"], space, name=a.get("name"))
    elif "table" in a:
        table = {(u, v): (sgn, w) for u, v, sgn, w in a["table"]}
        alg = Algebra(F, D, space, _table_product(F, D, table), a["kind"], name=a.get("name"), table=tuple(sorted(table.items())))
    else:
        raise GradingError(f"cannot rebuild algebra of kind {a['kind']!r}")
    if alg.dim != a["dim"]:
        raise GradingError(f"components span dimension {alg.dim}, file declares {a['dim']}")
    seen = set()
    for d, _ in comps:
        d = G.elem(d)
        if d in seen:
            raise GradingError(f"degree {list(d)} appears twice")
        seen.add(d)
    return Grading(alg, G, comps)


def read_json(path):
    with open(path) as f:
        return json.load(f)


def load_grading(path, field=None):
    return grading_from_json(read_json(path), field)
