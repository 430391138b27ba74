"""Gradings on finite dimensional algebras realized inside F^D.

An :class:`Algebra` is a subspace of F^D closed under a bilinear product;
matrix algebras flatten n x n matrices row-major (D = n^2).  A
:class:`Grading` attaches a degree in an :class:`AbGroup` to each nonzero
homogeneous component.
"""

import random
from dataclasses import dataclass, field as dc_field

from .abgroup import AbGroup
from .linalg import Matrix, Subspace, commutator_vec, eigenspace, is_squarefree, matmul_vec, minimal_polynomial, rref

__all__ = [
    "Algebra",
    "Grading",
    "Character",
    "GradingError",
    "NotAGrading",
    "DegreeCollision",
    "CompatibilityError",
    "SpectrumError",
    "VerifyReport",
    "matrix_algebra",
    "verify_grading",
    "component_profile",
    "universal_group",
    "universal_grading",
    "is_refinement",
    "character_action",
    "eigenspace_refine",
    "graded_basis",
    "ad_matrix",
    "is_ad_nilpotent",
    "is_ad_semisimple",
]


class GradingError(ValueError):
    pass


class NotAGrading(GradingError):
    pass


class DegreeCollision(GradingError):
    def __init__(self, message, collisions):
        super().__init__(message)
        self.collisions = collisions


class CompatibilityError(GradingError):
    pass


class SpectrumError(GradingError):
    pass


class Algebra:
    """A subspace of F^D closed under ``product``.

    ``kind`` names the product for serialization: ``"assoc"`` and
    ``"bracket"`` for n x n matrices, anything else for custom tables.
    """

    def __init__(self, field, ambient_dim, space, product, kind, n=None, name=None, table=None):
        self.field = field
        self.ambient_dim = ambient_dim
        self.space = space
        self.product = product
        self.kind = kind
        self.n = n
        self.name = name or kind
        self.table = table

    @property
    def dim(self):
        return self.space.dim

    def same_as(self, other):
        return (
            self.kind == other.kind
            and self.ambient_dim == other.ambient_dim
            and self.field is other.field
            and self.space == other.space
            and self.table == other.table
        )

    def subalgebra(self, space, kind=None, name=None):
        return Algebra(self.field, self.ambient_dim, space, self.product, kind or self.kind, self.n, name, self.table)

    def check_closed(self):
        for u in self.space.basis:
            for v in self.space.basis:
                if not self.space.member(self.product(u, v)):
                    return False
        return True

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim})"


def matrix_algebra(field, n, product="assoc", space=None, name=None):
    """M_n(F) (``product="assoc"``) or gl_n (``"bracket"``), optionally restricted to ``space``."""
    D = n * n
    if product == "assoc":
        fn = lambda a, b: matmul_vec(a, b, n)
    elif product == "bracket":
        fn = lambda a, b: commutator_vec(a, b, n)
    else:
        raise ValueError(f"unknown matrix product {product!r}")
    if space is None:
        space = Subspace.full(field, D)
    return Algebra(field, D, space, fn, product, n=n, name=name or (f"M_{n}" if product == "assoc" else f"gl_{n}"))


def traceless(field, n):
    z, o = field.zero, field.one
    vecs = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [z] * (n * n)
                v[i * n + j] = o
                vecs.append(tuple(v))
    for i in range(1, n):
        v = [z] * (n * n)
        v[0] = o
        v[i * n + i] = -o
        vecs.append(tuple(v))
    return Subspace.span(field, n * n, vecs)


def sl_algebra(field, n):
    return matrix_algebra(field, n, "bracket", traceless(field, n), name=f"sl_{n}")


class Grading:
    """Components are (degree, Subspace) pairs, stored sorted by degree."""

    def __init__(self, algebra, group, components):
        comps = []
        seen = set()
        for deg, sub in components:
            if sub.dim == 0:
                continue
            deg = group.elem(deg) if group is not None else deg
            if deg in seen:
                raise GradingError(f"degree {deg} used twice")
            seen.add(deg)
            comps.append((deg, sub))
        comps.sort(key=lambda c: c[0])
        self.algebra = algebra
        self.group = group
        self.components = tuple(comps)
        self._index = {deg: i for i, (deg, _) in enumerate(self.components)}

    @property
    def degrees(self):
        return [d for d, _ in self.components]

    @property
    def support(self):
        return self.degrees

    def component(self, deg):
        i = self._index.get(self.group.elem(deg))
        if i is None:
            return Subspace.zero(self.algebra.field, self.algebra.ambient_dim)
        return self.components[i][1]

    def subspaces(self):
        return [s for _, s in self.components]

    def restrict(self, algebra):
        """Intersect with a graded subalgebra; raises if the pieces fail to span it."""
        comps = [(d, s.intersect(algebra.space)) for d, s in self.components]
        if sum(s.dim for _, s in comps) != algebra.dim:
            raise NotAGrading(f"{algebra.name} is not a graded subspace")
        return Grading(algebra, self.group, comps)

    def relabel(self, group, degree_map):
        return Grading(self.algebra, group, [(degree_map(d), s) for d, s in self.components])

    def __repr__(self):
        return f"Grading({self.algebra.name}, {self.group}, {len(self.components)} components)"


def component_profile(grading):
    return sorted(s.dim for _, s in grading.components)


def graded_basis(grading):
    """Concatenated component bases with the degree of each vector."""
    basis, degs = [], []
    for d, s in grading.components:
        for v in s.basis:
            basis.append(v)
            degs.append(d)
    return basis, degs


class _Decomposer:
    """Coordinates of vectors with respect to a direct sum of subspaces."""

    def __init__(self, field, ambient_dim, subspaces):
        self.field = field
        self.owner = []
        vecs = []
        for idx, s in enumerate(subspaces):
            for v in s.basis:
                vecs.append(v)
                self.owner.append(idx)
        k = len(vecs)
        z, o = field.zero, field.one
        aug = [tuple(v) + tuple(o if i == j else z for j in range(k)) for i, v in enumerate(vecs)]
        rows, piv = rref(aug, width=ambient_dim)
        if len(piv) != k:
            raise NotAGrading("components are not independent")
        self.D = ambient_dim
        self.rows = [r[:ambient_dim] for r in rows]
        self.T = [r[ambient_dim:] for r in rows]
        self.pivots = piv

    def coefficients(self, v):
        """Coefficients of v on the concatenated bases; raises if v is outside their span."""
        z = self.field.zero
        k = len(self.owner)
        out = [z] * k
        rem = list(v)
        for row, t, p in zip(self.rows, self.T, self.pivots):
            c = rem[p]
            if c:
                for j in range(p, self.D):
                    if row[j]:
                        rem[j] = rem[j] - c * row[j]
                for j in range(k):
                    if t[j]:
                        out[j] = out[j] + c * t[j]
        if any(x for x in rem):
            raise NotAGrading("vector lies outside the sum of the components")
        return out

    def support(self, v):
        return sorted({self.owner[i] for i, c in enumerate(self.coefficients(v)) if c})


@dataclass
class VerifyReport:
    ok: bool
    direct_sum: bool = True
    violations: list = dc_field(default_factory=list)
    message: str = ""

    def __bool__(self):
        return self.ok


def verify_grading(grading, all_violations=True):
    """Check the direct sum condition and C_g * C_h inside C_{g+h} for every pair."""
    alg, G = grading.algebra, grading.group
    comps = grading.components
    total = sum(s.dim for _, s in comps)
    for d, s in comps:
        if not alg.space.contains(s):
            return VerifyReport(False, False, [], f"component {d} is not inside the algebra")
    span = Subspace.span(alg.field, alg.ambient_dim, [v for _, s in comps for v in s.basis])
    if total != alg.dim or span.dim != total:
        return VerifyReport(False, False, [], f"components do not form a direct sum decomposition ({total} vs {alg.dim})")
    index = {d: s for d, s in comps}
    violations = []
    for g, Cg in comps:
        for h, Ch in comps:
            target = index.get(G.add(g, h))
            bad = False
            for u in Cg.basis:
                for v in Ch.basis:
                    p = alg.product(u, v)
                    if target is None:
                        bad = any(x for x in p)
                    else:
                        bad = not target.member(p)
                    if bad:
                        break
                if bad:
                    break
            if bad:
                violations.append((g, h))
                if not all_violations:
                    return VerifyReport(False, True, violations, f"product of degrees {g} and {h} leaves {G.add(g, h)}")
    if violations:
        g, h = violations[0]
        return VerifyReport(False, True, violations, f"{len(violations)} pairs violate the grading, first {g}, {h}")
    return VerifyReport(True)


def universal_grading(algebra, subspaces, keys=None, key_product=None):
    """Universal group of a decomposition and the decomposition relabeled over it.

    ``keys``/``key_product`` optionally predict which piece holds each product;
    predictions are confirmed by membership, and a full decomposition is used
    whenever a prediction fails.
    """
    subspaces = [s for s in subspaces if s.dim]
    k = len(subspaces)
    if sum(s.dim for s in subspaces) != algebra.dim:
        raise NotAGrading("pieces do not add up to the algebra")
    dec = None
    key_index = {kk: i for i, kk in enumerate(keys)} if keys is not None else None
    rels = []
    for i, Si in enumerate(subspaces):
        for j, Sj in enumerate(subspaces):
            if j < i and algebra.kind == "bracket":
                continue
            hit = None
            guess = None
            if key_index is not None:
                guess = key_index.get(key_product(keys[i], keys[j]))
            for u in Si.basis:
                for v in Sj.basis:
                    p = algebra.product(u, v)
                    if not any(x for x in p):
                        continue
                    if hit is not None and subspaces[hit].member(p):
                        continue
                    if guess is not None and subspaces[guess].member(p):
                        where = [guess]
                    else:
                        if dec is None:
                            dec = _Decomposer(algebra.field, algebra.ambient_dim, subspaces)
                        where = dec.support(p)
                    if len(where) != 1 or (hit is not None and where[0] != hit):
                        raise NotAGrading(f"product of pieces {i} and {j} is not homogeneous")
                    hit = where[0]
            if hit is not None:
                rel = [0] * k
                rel[i] += 1
                rel[j] += 1
                rel[hit] -= 1
                rels.append(rel)
    U = AbGroup(k, rels)
    degs = list(U.gen_images)
    seen = {}
    collisions = []
    for i, d in enumerate(degs):
        if d in seen:
            collisions.append((seen[d], i))
        seen.setdefault(d, i)
    if collisions:
        raise DegreeCollision(f"pieces {collisions} receive the same universal degree", collisions)
    return U, Grading(algebra, U, list(zip(degs, subspaces)))


def universal_group(grading):
    """(U, grading relabeled over U)."""
    keys = grading.degrees
    G = grading.group
    return universal_grading(grading.algebra, grading.subspaces(), keys, G.add if G is not None else None)


def is_refinement(fine, coarse):
    """True iff every component of ``fine`` lies inside a component of ``coarse``."""
    if not fine.algebra.same_as(coarse.algebra):
        raise GradingError("gradings live on different algebras")
    for _, s in fine.components:
        if not any(c.contains(s) for _, c in coarse.components):
            return False
    return True


def is_proper_refinement(fine, coarse):
    return is_refinement(fine, coarse) and len(fine.components) > len(coarse.components)


class Character:
    """A homomorphism G -> F^x given by its values on the canonical generators."""

    def __init__(self, group, values, field):
        values = [field(v) for v in values]
        if len(values) != group.ngens:
            raise ValueError(f"need {group.ngens} generator values, got {len(values)}")
        for v, d in zip(values, group.moduli):
            if v.is_zero():
                raise ZeroDivisionError("character value must be nonzero")
            if d and not (v ** d == 1):
                raise ValueError(f"value {v} on a generator of order {d} is not a root of unity of that order")
        self.group = group
        self.values = tuple(values)
        self.field = field

    def __call__(self, g):
        acc = self.field.one
        for v, e in zip(self.values, self.group.elem(g)):
            if e:
                acc = acc * v ** e
        return acc

    def __mul__(self, other):
        return Character(self.group, [a * b for a, b in zip(self.values, other.values)], self.field)

    @classmethod
    def trivial(cls, group, field):
        return cls(group, [field.one] * group.ngens, field)


def character_action(grading, chi, check=True):
    """Matrix of x -> chi(deg x) x in the graded basis; optionally checked to be an automorphism."""
    F = grading.algebra.field
    basis, degs = graded_basis(grading)
    vals = [chi(d) for d in degs]
    M = Matrix.diag(F, vals)
    if check:
        alg = grading.algebra
        dec = _Decomposer(F, alg.ambient_dim, grading.subspaces())
        for i, u in enumerate(basis):
            for j, v in enumerate(basis):
                p = alg.product(u, v)
                if not any(x for x in p):
                    continue
                coeffs = dec.coefficients(p)
                lhs = [vals[i] * vals[j] * c for c in coeffs]
                rhs = [vals[t] * c for t, c in enumerate(coeffs)]
                if lhs != rhs:
                    raise GradingError("character action does not preserve the product")
    return M


def eigenspace_refine(grading, psi, orders):
    """Split each component into eigenspaces of a compatible semisimple map.

    ``psi`` maps ambient vectors to ambient vectors (a callable or a D x D
    Matrix).  Eigenvalues are sought among the roots of unity of the given
    orders.  Returns (U, refined grading over its universal group, pieces)
    where pieces lists (old degree, eigenvalue, subspace).
    """
    from .cyclofield import root_of_unity

    alg = grading.algebra
    F = alg.field
    fn = psi.apply if isinstance(psi, Matrix) else psi
    roots = []
    for n in orders:
        z = root_of_unity(F, n)
        for k in range(n):
            r = z ** k
            if r not in roots:
                roots.append(r)
    pieces = []
    for deg, C in grading.components:
        try:
            P = C.restrict(fn)
        except ValueError:
            raise CompatibilityError(f"map does not preserve the component of degree {deg}") from None
        found = 0
        for lam in roots:
            E = eigenspace(P, lam)
            if E.dim:
                vecs = [C.combine(c) for c in E.basis]
                pieces.append((deg, lam, Subspace.span(F, alg.ambient_dim, vecs)))
                found += E.dim
            if found == C.dim:
                break
        if found != C.dim:
            raise SpectrumError(f"eigenspaces exhaust only {found} of {C.dim} dimensions in degree {deg}")
    G = grading.group
    keys = [(d, lam) for d, lam, _ in pieces]
    U, refined = universal_grading(alg, [s for _, _, s in pieces], keys, lambda a, b: (G.add(a[0], b[0]), a[1] * b[1]))
    return U, refined, pieces


def ad_matrix(algebra, x):
    """Matrix of ad x = product(x, -) on the echelon basis of the algebra."""
    return algebra.space.restrict(lambda v: algebra.product(x, v))


def is_ad_nilpotent(algebra, x):
    A = ad_matrix(algebra, x)
    return A.power(max(A.rows, 1)).is_zero()


def is_ad_semisimple(algebra, x):
    return is_squarefree(minimal_polynomial(ad_matrix(algebra, x)))


def sample_elements(subspace, count=2, seed=0):
    """Basis vectors plus a few seeded random combinations."""
    rng = random.Random(seed)
    out = list(subspace.basis)
    if subspace.dim > 1:
        for _ in range(count):
            out.append(subspace.combine([rng.randint(-3, 3) or 1 for _ in range(subspace.dim)]))
    return out
