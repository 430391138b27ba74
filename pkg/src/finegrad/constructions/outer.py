"""Outer fine gradings on sl_n and the gradings on skew elements (so_n, sp_n)."""

from dataclasses import dataclass, field as dc_field

from ..cyclofield import make_field
from ..grading import Grading, GradingError, eigenspace_refine, matrix_algebra, sl_algebra, universal_group
from ..linalg import Subspace, eigenspace
from .descriptor import Descriptor, DescriptorError
from .forms import Form

__all__ = ["NotFine", "OuterGrading", "SkewGrading", "outer_grading_sl", "skew_grading", "skew_algebra"]


class NotFine(DescriptorError):
    pass


@dataclass
class OuterGrading:
    desc: Descriptor
    form: Form
    presplit: Grading
    presplit_sl: Grading
    grading: Grading
    pieces: list
    h: tuple = None
    checks: dict = dc_field(default_factory=dict)

    @property
    def group(self):
        return self.grading.group


@dataclass
class SkewGrading:
    desc: Descriptor
    form: Form
    presplit: Grading
    bar_grading: Grading
    grading: Grading
    checks: dict = dc_field(default_factory=dict)

    @property
    def group(self):
        return self.grading.group


def _coerce(desc):
    if isinstance(desc, str):
        desc = Descriptor.parse(desc)
    return desc.validate()


def outer_grading_sl(desc, field=None, allow_excluded=False):
    """Refine the G-bar grading of M_n restricted to sl_n by the eigenspaces of -phi."""
    desc = _coerce(desc)
    if desc.kind != "sl-outer":
        raise DescriptorError(f"expected an sl-outer descriptor, got {desc.kind}")
    if desc.is_excluded() and not allow_excluded:
        raise NotFine(f"{desc} is not fine (s = 0, r = 2, equal lines)")
    F = field or make_field([4])
    form = Form(desc, F)
    n = form.n
    pre = form.presplit_grading()
    pre_sl = pre.restrict(sl_algebra(F, n))
    U, refined, pieces = eigenspace_refine(pre_sl, lambda v: tuple(-x for x in form.phi_vec(v)), [4])
    out = OuterGrading(desc, form, pre, pre_sl, refined, pieces)
    out.h, out.checks = _extension_checks(form, refined, pieces)
    return out


def _coarsening_map(U, target, olds):
    """Images in ``target`` of U's canonical generators under piece -> old degree.

    Returns None if the assignment does not define a homomorphism.
    """
    images = []
    for combo in U.canonical_in_gens:
        acc = target.zero
        for c, d in zip(combo, olds):
            if c:
                acc = target.add(acc, target.mul(c, d))
        images.append(acc)
    for img, d in zip(images, U.moduli):
        if d and target.mul(d, img) != target.zero:
            return None
    for rel in U.relations:
        acc = target.zero
        for c, d in zip(rel, olds):
            if c:
                acc = target.add(acc, target.mul(c, d))
        if acc != target.zero:
            return None
    return images


def _apply(U, target, images, u):
    acc = target.zero
    for c, img in zip(U.elem(u), images):
        if c:
            acc = target.add(acc, target.mul(c, img))
    return acc


def _extension_checks(form, refined, pieces):
    """Find h generating the kernel of U -> G-bar and check U/<h> = G-bar."""
    import itertools

    from ..abgroup import AbGroup

    U, Gbar = refined.group, form.Gbar
    deg_of = {id(s): d for d, s in refined.components}
    # U's presentation generators are the pieces, in the order given to universal_grading
    olds = [old for old, _, _ in pieces]
    checks = {}
    images = _coarsening_map(U, Gbar, olds)
    checks["coarsening_is_hom"] = images is not None
    h = None
    if images is not None:
        choices = [(0, d // 2) if d % 2 == 0 else (0,) for d in U.torsion]
        cands = []
        for t in itertools.product(*choices):
            u = tuple(t) + (0,) * U.rank
            if u != U.zero and _apply(U, Gbar, images, u) == Gbar.zero:
                cands.append(u)
        if len(cands) == 1:
            h = cands[0]
    checks["h_unique"] = h is not None
    checks["h_order_2"] = h is not None and U.order(h) == 2
    checks["quotient_is_Gbar"] = h is not None and U.quotient([h]).is_isomorphic(Gbar)
    # pieces of one split component differ by exactly h
    by_old = {}
    for old, lam, sub in pieces:
        by_old.setdefault(old, []).append((lam, deg_of[id(sub)]))
    checks["splits_differ_by_h"] = h is not None and all(
        U.sub(d1, d2) == h for lst in by_old.values() for l1, d1 in lst for l2, d2 in lst if l1 == -l2
    )
    checks["phi_involutive"] = form.phi_is_involution()
    if checks["phi_involutive"]:
        checks["U_is_Gbar_x_Z2"] = U.is_isomorphic(Gbar.direct_product(AbGroup.from_invariants(0, (2,))))
    return h, checks


def skew_algebra(form):
    """K(R, phi) = {x : phi(x) = -x} as a Lie algebra inside M_n."""
    F, n = form.field, form.n
    pre = form.presplit_grading()
    pieces = []
    for d, C in pre.components:
        P = C.restrict(form.phi_vec)
        E = eigenspace(P, F(-1))
        pieces.append((d, Subspace.span(F, n * n, [C.combine(c) for c in E.basis])))
    K = Subspace.span(F, n * n, [v for _, s in pieces for v in s.basis])
    name = ("so" if form.desc.epsilon == 1 else "sp") + f"_{n}"
    alg = matrix_algebra(F, n, "bracket", K, name=name)
    return alg, pre, pieces


def skew_grading(desc, field=None, allow_excluded=False):
    """Gamma' on K(R, phi), labeled by G-bar and by its universal group."""
    desc = _coerce(desc)
    if desc.kind not in ("ortho", "sympl"):
        raise DescriptorError(f"expected an ortho or sympl descriptor, got {desc.kind}")
    if desc.is_excluded() and not allow_excluded:
        raise NotFine(f"{desc} is not fine (s = 0, r = 2, equal lines)")
    if desc.kind == "sympl" and desc.m == 0 and desc.r:
        raise DescriptorError("a symplectic form over F forces r = 0")
    F = field or make_field([4])
    form = Form(desc, F)
    if not form.phi_is_involution():
        raise GradingError(f"adjoint of {desc} is not an involution")
    alg, pre, pieces = skew_algebra(form)
    n = form.n
    bar = Grading(alg, form.Gbar, pieces)
    U, uni = universal_group(bar)
    checks = {
        "dim_K": alg.dim == (n * (n - 1) // 2 if desc.epsilon == 1 else n * (n + 1) // 2),
        "U_is_Gbar": U.is_isomorphic(form.Gbar),
    }
    return SkewGrading(desc, form, pre, bar, uni, checks)
