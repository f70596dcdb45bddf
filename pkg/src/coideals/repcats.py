"""Representations of algebras and coalgebras, and their structure theory.

Carrier conventions
-------------------
A comodule with side "right" has coaction V -> V (x) C, stored as a
(dimV*dimC) x dimV matrix under the standard tensor flattening; side "left"
stores V -> C (x) V as a (dimC*dimV) x dimV matrix.  A module with side
"right" has action V (x) A -> V (dimV x dimV*dimA); side "left" has
A (x) V -> V (dimV x dimA*dimV).

Left-sided axioms are never written out separately: a left structure is
transported across the tensor swap to a right structure over the opposite
(co)algebra and the right-sided axioms are checked there.

Structure theory is exact.  The radical comes from the trace form of the
left regular representation, valid in characteristic zero or characteristic
p strictly larger than the dimension of the algebra at hand; violating that
precondition raises instead of returning a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from .certs import CertReport, VerificationFailed
from .fields import same_field
from .hopf import AlgebraData, CoalgebraData, HopfAlgebraData, _decode, dual_algebra
from .linalg import (
    DimensionMismatchError,
    LinMap,
    Subspace,
    basis_vector,
    contains_invertible,
    induced_on_subspaces,
    kernel_of,
    left_inverse,
    map_to_vec,
    matrix_of_operator,
    solve,
    stack_maps,
    swap_map,
    vec_to_map,
)


class AmbiguousDecompositionError(ValueError):
    """Raised when the submodule search cannot certify simplicity."""


def _lab(stem, dim):
    return tuple(f"{stem}{i}" for i in range(dim))


def _witness(diff, label_lists):
    """First nonzero column of a difference map, decoded as a basis tuple."""
    if diff.is_zero():
        return None
    c = min(cc for (_, cc), _ in diff.entries())
    dims = [len(lbls) for lbls in label_lists]
    idx = _decode(c, dims)
    return "(" + ", ".join(lbls[i] for lbls, i in zip(label_lists, idx)) + ")"


# -- carriers ----------------------------------------------------------

@dataclass
class ModuleData:
    field: object
    dim: int
    action: LinMap
    over: AlgebraData
    side: str = "right"
    name: str = ""

    def __post_init__(self):
        same_field(self.field, self.over.field)
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be left or right, got {self.side!r}")
        da = self.over.dim
        want = (self.dim, self.dim * da) if self.side == "right" else (self.dim, da * self.dim)
        if (self.action.rows, self.action.cols) != want:
            raise DimensionMismatchError(
                f"{self.side} action must be {want[0]}x{want[1]}, "
                f"got {self.action.rows}x{self.action.cols}")

    def act_by(self, vec):
        """Operator on the carrier given by one coefficient vector."""
        i = LinMap.identity(self.field, self.dim)
        c = LinMap.from_column(self.field, vec)
        if self.side == "right":
            return self.action @ i.tensor(c)
        return self.action @ c.tensor(i)

    def action_operators(self):
        da = self.over.dim
        return [self.act_by(basis_vector(self.field, da, i)) for i in range(da)]


@dataclass
class ComoduleData:
    field: object
    dim: int
    coaction: LinMap
    over: CoalgebraData
    side: str = "right"
    name: str = ""

    def __post_init__(self):
        same_field(self.field, self.over.field)
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be left or right, got {self.side!r}")
        dc = self.over.dim
        want = (self.dim * dc, self.dim) if self.side == "right" else (dc * self.dim, self.dim)
        if (self.coaction.rows, self.coaction.cols) != want:
            raise DimensionMismatchError(
                f"{self.side} coaction must be {want[0]}x{want[1]}, "
                f"got {self.coaction.rows}x{self.coaction.cols}")


@dataclass
class BicomoduleData:
    """Left comodule over one coalgebra, right over another, compatibly."""
    field: object
    dim: int
    left_over: CoalgebraData
    right_over: CoalgebraData
    left_coaction: LinMap
    right_coaction: LinMap
    name: str = ""

    def left_comodule(self):
        return ComoduleData(self.field, self.dim, self.left_coaction,
                            self.left_over, "left", self.name)

    def right_comodule(self):
        return ComoduleData(self.field, self.dim, self.right_coaction,
                            self.right_over, "right", self.name)


@dataclass
class RelHopfModuleData:
    """Right comodule over a Hopf algebra that is also a right module over a
    right coideal subalgebra, with the coaction linear over the subalgebra."""
    hopf: HopfAlgebraData
    subalgebra: AlgebraData
    inclusion: LinMap
    comodule: ComoduleData
    module: ModuleData
    name: str = ""

    @property
    def field(self):
        return self.hopf.field

    @property
    def dim(self):
        return self.comodule.dim


# -- axiom checks ------------------------------------------------------

def _as_right_module(m):
    if m.side == "right":
        return m.action, m.over
    act = m.action @ swap_map(m.field, m.dim, m.over.dim)
    return act, m.over.op()


def check_module(m):
    act, alg = _as_right_module(m)
    f, dm, da = m.field, m.dim, alg.dim
    im = LinMap.identity(f, dm)
    ia = LinMap.identity(f, da)
    rep = CertReport(m.name or f"{m.side} module")
    lm, la = _lab("m", dm), alg.labels
    assoc = act @ act.tensor(ia) - act @ im.tensor(alg.mult)
    rep.add("action-associative", assoc.is_zero(), _witness(assoc, [lm, la, la]))
    unital = act @ im.tensor(alg.unit) - im
    rep.add("action-unital", unital.is_zero(), _witness(unital, [lm]))
    return rep


def _as_right_comodule(v):
    if v.side == "right":
        return v.coaction, v.over
    rho = swap_map(v.field, v.over.dim, v.dim) @ v.coaction
    return rho, v.over.cop()


def check_comodule(v):
    rho, co = _as_right_comodule(v)
    f, dv, dc = v.field, v.dim, co.dim
    iv = LinMap.identity(f, dv)
    ic = LinMap.identity(f, dc)
    rep = CertReport(v.name or f"{v.side} comodule")
    lv = _lab("v", dv)
    coassoc = rho.tensor(ic) @ rho - iv.tensor(co.comult) @ rho
    rep.add("coaction-coassociative", coassoc.is_zero(), _witness(coassoc, [lv]))
    counital = iv.tensor(co.counit) @ rho - iv
    rep.add("coaction-counital", counital.is_zero(), _witness(counital, [lv]))
    return rep


def restricted_comultiplication(h, inclusion):
    """The ambient comultiplication expressed on a subspace whose coproduct
    stays inside (subspace) (x) (ambient).

    Returns (delta, check): delta is (dimA*dimH) x dimA, and the check holds
    exactly when tensor(inclusion, id) @ delta reproduces comult @ inclusion,
    which is the right coideal condition for the subspace.
    """
    f = h.field
    retr = left_inverse(inclusion)
    if retr is None:
        raise ValueError("inclusion is not injective")
    ih = LinMap.identity(f, h.dim)
    delta = retr.tensor(ih) @ h.comult @ inclusion
    diff = inclusion.tensor(ih) @ delta - h.comult @ inclusion
    return delta, ("coproduct-stays-in-subspace", diff.is_zero(),
                   _witness(diff, [_lab("a", inclusion.cols)]))


def check_relhopf(x):
    h = x.hopf
    f = h.field
    rep = CertReport(x.name or "relative Hopf module")
    if x.comodule.side != "right" or x.module.side != "right":
        raise ValueError("relative Hopf modules are right comodules and right modules here")
    rep.merge(check_comodule(x.comodule), "comodule ")
    rep.merge(check_module(x.module), "module ")
    delta, (cname, cok, cwit) = restricted_comultiplication(h, x.inclusion)
    rep.add(cname, cok, cwit)
    if cok:
        dm, da, dh = x.comodule.dim, x.subalgebra.dim, h.dim
        im = LinMap.identity(f, dm)
        ih = LinMap.identity(f, dh)
        rho, act = x.comodule.coaction, x.module.action
        # rho(m.a) must equal m0.a(1) (x) m1*a(2), the first coproduct leg of
        # a staying inside the subalgebra
        rhs = act.tensor(h.mult) @ im.tensor(swap_map(f, dh, da).tensor(ih)) \
            @ rho.tensor(delta)
        diff = rho @ act - rhs
        rep.add("coaction-module-compatible", diff.is_zero(),
                _witness(diff, [_lab("m", dm), _lab("a", da)]))
    return rep


def check_bicomodule(x):
    f = x.field
    rep = CertReport(x.name or "bicomodule")
    rep.merge(check_comodule(x.left_comodule()), "left ")
    rep.merge(check_comodule(x.right_comodule()), "right ")
    ic = LinMap.identity(f, x.left_over.dim)
    idd = LinMap.identity(f, x.right_over.dim)
    diff = ic.tensor(x.right_coaction) @ x.left_coaction \
        - x.left_coaction.tensor(idd) @ x.right_coaction
    rep.add("coactions-commute", diff.is_zero(), _witness(diff, [_lab("v", x.dim)]))
    return rep


def check_representation(x, certify=False):
    """Axiom report for any carrier defined in this module."""
    if isinstance(x, ModuleData):
        rep = check_module(x)
    elif isinstance(x, ComoduleData):
        rep = check_comodule(x)
    elif isinstance(x, RelHopfModuleData):
        rep = check_relhopf(x)
    elif isinstance(x, BicomoduleData):
        rep = check_bicomodule(x)
    else:
        raise TypeError(f"no axiom suite for {type(x).__name__}")
    if certify and not rep.ok:
        raise VerificationFailed(rep)
    return rep


# -- standard (co)modules ----------------------------------------------

def regular_module(a, side="right"):
    """The algebra acting on itself by multiplication."""
    return ModuleData(a.field, a.dim, a.mult, a, side, name=f"regular {side} module")


def regular_comodule(h):
    """A Hopf algebra coacting on itself by its comultiplication."""
    return ComoduleData(h.field, h.dim, h.comult, h.coalgebra, "right",
                        name=f"{h.name or 'H'} regular comodule")


def trivial_comodule_at(c, grouplike, name="trivial comodule"):
    """One-dimensional comodule with coaction v -> v (x) g; its axiom report
    holds exactly when g is grouplike."""
    v = ComoduleData(c.field, 1, LinMap.from_column(c.field, grouplike), c, "right", name)
    return v, check_comodule(v)


def trivial_comodule(h):
    v, rep = trivial_comodule_at(h.coalgebra, h.unit_vector(), "unit comodule")
    if not rep.ok:
        raise VerificationFailed(rep)
    return v


def tensor_comodules(h, v, w, name=""):
    """Tensor product of right comodules over a Hopf algebra, with diagonal
    coaction v (x) w -> v0 (x) w0 (x) v1*w1."""
    if v.side != "right" or w.side != "right":
        raise ValueError("tensor of comodules is implemented for right comodules")
    f = h.field
    dh = h.dim
    iv = LinMap.identity(f, v.dim)
    iw = LinMap.identity(f, w.dim)
    ih = LinMap.identity(f, dh)
    mid = iv.tensor(swap_map(f, dh, w.dim).tensor(ih))
    out = iv.tensor(iw).tensor(h.mult) @ mid @ v.coaction.tensor(w.coaction)
    return ComoduleData(f, v.dim * w.dim, out, h.coalgebra, "right", name)


def restrict_module(m, subalg, incl):
    """View a module over a subalgebra given by structure constants plus an
    inclusion into the acting algebra's coefficient space."""
    f = m.field
    im = LinMap.identity(f, m.dim)
    act = m.action @ (im.tensor(incl) if m.side == "right" else incl.tensor(im))
    return ModuleData(f, m.dim, act, subalg, m.side, m.name)


def inflate_module(m, bigger, proj):
    """Pull a module over a quotient algebra back along the projection."""
    f = m.field
    im = LinMap.identity(f, m.dim)
    act = m.action @ (im.tensor(proj) if m.side == "right" else proj.tensor(im))
    return ModuleData(f, m.dim, act, bigger, m.side, m.name)


def corestrict_comodule(v, b, psi):
    """Push a right comodule forward along a coalgebra map into b."""
    if v.side != "right":
        raise ValueError("corestriction is implemented for right comodules")
    iv = LinMap.identity(v.field, v.dim)
    return ComoduleData(v.field, v.dim, iv.tensor(psi) @ v.coaction, b, "right", v.name)


# -- morphisms, hom spaces, cotensor -----------------------------------

def is_coalgebra_map(psi, src, dst):
    rep = CertReport("coalgebra map")
    d1 = dst.comult @ psi - psi.tensor(psi) @ src.comult
    rep.add("respects-comultiplication", d1.is_zero(), _witness(d1, [src.labels]))
    d2 = dst.counit @ psi - src.counit
    rep.add("respects-counit", d2.is_zero(), _witness(d2, [src.labels]))
    return rep


def is_algebra_map(phi, src, dst):
    rep = CertReport("algebra map")
    d1 = phi @ src.mult - dst.mult @ phi.tensor(phi)
    rep.add("respects-multiplication", d1.is_zero(),
            _witness(d1, [src.labels, src.labels]))
    d2 = phi @ src.unit - dst.unit
    rep.add("respects-unit", d2.is_zero(), None if d2.is_zero() else "(1)")
    return rep


def hom_colinear(v, w):
    """Subspace of maps V -> W commuting with the coactions, flattened
    entry-major into k^(dimW*dimV)."""
    if v.side != w.side:
        raise ValueError("hom between comodules on different sides")
    if v.over.dim != w.over.dim or v.over.comult != w.over.comult:
        raise ValueError("hom between comodules over different coalgebras")
    f = v.field
    ic = LinMap.identity(f, v.over.dim)
    if v.side == "right":
        def cond(fm):
            return w.coaction @ fm - fm.tensor(ic) @ v.coaction
    else:
        def cond(fm):
            return w.coaction @ fm - ic.tensor(fm) @ v.coaction
    op = matrix_of_operator(f, (w.dim, v.dim), (w.coaction.rows, v.dim), cond)
    return kernel_of(op)


def hom_linear(m1, m2):
    """Subspace of maps commuting with two same-sided module actions."""
    if m1.side != m2.side:
        raise ValueError("hom between modules on different sides")
    if m1.over.dim != m2.over.dim or m1.over.mult != m2.over.mult:
        raise ValueError("hom between modules over different algebras")
    f = m1.field
    ops1 = m1.action_operators()
    ops2 = m2.action_operators()

    def cond(fm):
        return stack_maps([fm @ r1 - r2 @ fm for r1, r2 in zip(ops1, ops2)])
    op = matrix_of_operator(f, (m2.dim, m1.dim), (m2.dim * len(ops1), m1.dim), cond)
    return kernel_of(op)


def comodule_morphism_ok(fm, v, w):
    ic = LinMap.identity(v.field, v.over.dim)
    if v.side == "right":
        diff = w.coaction @ fm - fm.tensor(ic) @ v.coaction
    else:
        diff = w.coaction @ fm - ic.tensor(fm) @ v.coaction
    return diff.is_zero()


def cotensor(v, w):
    """Cotensor product of a right comodule and a left comodule over one
    coalgebra, as a subspace of the flattened tensor square."""
    if v.side != "right" or w.side != "left":
        raise ValueError("cotensor takes a right comodule then a left comodule")
    if v.over.dim != w.over.dim or v.over.comult != w.over.comult:
        raise ValueError("cotensor over mismatched coalgebras")
    f = v.field
    iv = LinMap.identity(f, v.dim)
    iw = LinMap.identity(f, w.dim)
    return kernel_of(v.coaction.tensor(iw) - iv.tensor(w.coaction))


def _tensor_vec(f, a, b):
    out = []
    for x in a:
        for y in b:
            out.append(f.mul(x, y))
    return tuple(out)


def comodule_on_subspace(v, s):
    """Restrict a comodule coaction to an invariant subspace; raises if the
    subspace is not invariant.  Returns (comodule, inclusion).

    The codomain subspace (s tensor full coalgebra) has a canonical basis
    that is literally the product basis in product order, so the induced
    matrix is already in (subspace index, coalgebra index) coordinates.
    """
    f = v.field
    dc = v.over.dim
    if v.side == "right":
        rows = [_tensor_vec(f, r, basis_vector(f, dc, j)) for r in s.rows for j in range(dc)]
        amb = Subspace.from_vectors(f, v.dim * dc, rows)
    else:
        rows = [_tensor_vec(f, basis_vector(f, dc, j), r) for j in range(dc) for r in s.rows]
        amb = Subspace.from_vectors(f, dc * v.dim, rows)
    coact = induced_on_subspaces(v.coaction, s, amb)
    if coact is None:
        raise ValueError("subspace is not invariant under the coaction")
    return ComoduleData(f, s.dim, coact, v.over, v.side, v.name), s.basis_map()


def restrict_algebra(a, s, labels=()):
    """Structure constants of a subalgebra on the canonical basis of a
    subspace; raises when the subspace is not closed under the product or
    misses the unit.  Returns (algebra, inclusion)."""
    f = a.field
    d = s.dim
    ent = {}
    for i, ri in enumerate(s.rows):
        for j, rj in enumerate(s.rows):
            coords = s.coords(a.product(ri, rj))
            if coords is None:
                raise ValueError("subspace is not closed under the product")
            for k, c in enumerate(coords):
                if c != f.zero:
                    ent[(k, i * d + j)] = c
    unit = s.coords(a.unit_vector)
    if unit is None:
        raise ValueError("subspace does not contain the unit")
    sub = AlgebraData(f, d, LinMap(f, d, d * d, ent),
                      LinMap.from_column(f, unit), tuple(labels))
    return sub, s.basis_map()


def regular_relhopf(h, subalg, incl, certify=True, name=""):
    """The Hopf algebra itself as a relative Hopf module: regular coaction,
    action by right multiplication through the subalgebra inclusion."""
    f = h.field
    ih = LinMap.identity(f, h.dim)
    comod = regular_comodule(h)
    mod = ModuleData(f, h.dim, h.mult @ ih.tensor(incl), subalg, "right")
    x = RelHopfModuleData(h, subalg, incl, comod, mod,
                          name or f"{h.name or 'H'} as relative Hopf module")
    if certify:
        check_representation(x, certify=True)
    return x


# -- quotient algebras and radical -------------------------------------

def _trace(m):
    f = m.field
    t = f.zero
    for i in range(min(m.rows, m.cols)):
        t = f.add(t, m.entry(i, i))
    return t


def _char_guard(field, dim, what):
    if field.char != 0 and field.char <= dim:
        raise ValueError(
            f"trace-form radical of {what} needs characteristic 0 or p > {dim}, "
            f"got characteristic {field.char}")


def radical(a):
    """Jacobson radical of a finite-dimensional algebra, as the kernel of
    the trace form of the left regular representation."""
    _char_guard(a.field, a.dim, "an algebra")
    f = a.field
    ops = [a.left_mult_by(basis_vector(f, a.dim, i)) for i in range(a.dim)]
    gram = [[_trace(ops[i] @ ops[j]) for j in range(a.dim)] for i in range(a.dim)]
    return kernel_of(LinMap.from_rows(f, gram))


def is_semisimple_algebra(a):
    return radical(a).dim == 0


@dataclass
class CosemisimplicityResult:
    ok: bool
    dual_radical_dim: int

    def __bool__(self):
        return self.ok


def is_cosemisimple(c):
    """Cosemisimplicity of a coalgebra, decided on its dual algebra."""
    r = radical(dual_algebra(c))
    return CosemisimplicityResult(r.dim == 0, r.dim)


def quotient_algebra(a, ideal, label_fmt="[{}]"):
    """Quotient by a two-sided ideal, presented on the non-pivot coordinates
    of the ideal's canonical basis.  Returns (algebra, projection, section)."""
    f = a.field
    d = a.dim
    nonpiv = [c for c in range(d) if c not in ideal.pivots]
    qd = len(nonpiv)
    # reduction modulo the ideal: column p (pivot) becomes e_p - (pivot row)
    ent = {(j, j): f.one for j in range(d)}
    for row, p in zip(ideal.rows, ideal.pivots):
        for i, x in enumerate(row):
            if x != f.zero:
                ent[(i, p)] = f.sub(ent.get((i, p), f.zero), x)
    redm = LinMap(f, d, d, ent)
    sel = LinMap(f, qd, d, {(k, nonpiv[k]): f.one for k in range(qd)})
    proj = sel @ redm
    sect = LinMap(f, d, qd, {(nonpiv[k], k): f.one for k in range(qd)})
    if ideal.dim:
        bm = ideal.basis_map()
        idm = LinMap.identity(f, d)
        if not (proj @ a.mult @ bm.tensor(idm)).is_zero() \
                or not (proj @ a.mult @ idm.tensor(bm)).is_zero():
            raise ValueError("quotient by a subspace that is not a two-sided ideal")
    labels = tuple(label_fmt.format(a.labels[i]) for i in nonpiv)
    q = AlgebraData(f, qd, proj @ a.mult @ sect.tensor(sect), proj @ a.unit, labels)
    return q, proj, sect


def module_on_subspace(m, s):
    """Restrict a right module to an invariant subspace; raises if not
    invariant.  Returns (module, inclusion)."""
    if m.side != "right":
        raise ValueError("submodule restriction is implemented for right modules")
    f = m.field
    da = m.over.dim
    ops = m.action_operators()
    cols = {}
    for j, r in enumerate(s.rows):
        for i_a, op in enumerate(ops):
            coords = s.coords(op.apply(r))
            if coords is None:
                raise ValueError("subspace is not invariant under the action")
            for i, c in enumerate(coords):
                if c != f.zero:
                    cols[(i, j * da + i_a)] = c
    act = LinMap(f, s.dim, s.dim * da, cols)
    return ModuleData(f, s.dim, act, m.over, "right", m.name), s.basis_map()


def module_on_quotient(m, s):
    """Quotient a right module by an invariant subspace.  Returns
    (module, projection) on the non-pivot coordinates."""
    if m.side != "right":
        raise ValueError("quotient modules are implemented for right modules")
    f = m.field
    d = m.dim
    nonpiv = [c for c in range(d) if c not in s.pivots]
    qd = len(nonpiv)
    proj_ent = {}
    for j in range(d):
        red = s.reduce(basis_vector(f, d, j))
        for k, i in enumerate(nonpiv):
            if red[i] != f.zero:
                proj_ent[(k, j)] = red[i]
    proj = LinMap(f, qd, d, proj_ent)
    sect = LinMap(f, d, qd, {(nonpiv[k], k): f.one for k in range(qd)})
    im = LinMap.identity(f, m.over.dim)
    act = proj @ m.action @ sect.tensor(im)
    return ModuleData(f, qd, act, m.over, "right", m.name), proj


# -- minimal polynomials -----------------------------------------------

def matrix_minpoly(m):
    """Monic minimal polynomial of a square matrix, as a low-degree-first
    coefficient tuple."""
    f = m.field
    n = m.rows
    span = Subspace.zero(f, n * n)
    power = LinMap.identity(f, n)
    vecs = []
    while True:
        v = map_to_vec(power)
        if span.contains(v):
            coords = _coords_in(f, vecs, v)
            return tuple(f.neg(c) for c in coords) + (f.one,)
        vecs.append(v)
        span = span.sum_with(Subspace.from_vectors(f, n * n, [v]))
        power = power @ m


def _coords_in(f, vecs, target):
    cols = {}
    for j, v in enumerate(vecs):
        for i, x in enumerate(v):
            if x != f.zero:
                cols[(i, j)] = x
    sol = solve(LinMap(f, len(target), len(vecs), cols), target)
    assert sol is not None
    return sol


def factor_poly(field, coeffs):
    """Irreducible monic factors over the coefficient field via sympy.
    Returns a sorted list of (factor coeffs low-first, multiplicity)."""
    x = sympy.Symbol("x")
    if field.char == 0:
        expr = [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)]
        poly = sympy.Poly(expr, x, domain="QQ")
    else:
        poly = sympy.Poly([int(c) for c in reversed(coeffs)], x, modulus=field.char)
    out = []
    for fac, mult in poly.factor_list()[1]:
        fac = fac.monic()
        if field.char == 0:
            cs = [field.parse(str(c)) for c in reversed(fac.all_coeffs())]
        else:
            cs = [field.from_int(int(c)) for c in reversed(fac.all_coeffs())]
        out.append((tuple(cs), mult))
    out.sort(key=lambda t: (len(t[0]), [field.fmt(c) for c in t[0]]))
    return out


def poly_at_matrix(field, coeffs, m):
    n = m.rows
    acc = LinMap.zero(field, n, n)
    for c in reversed(coeffs):
        acc = acc @ m + LinMap.identity(field, n).scale(c)
    return acc


# -- submodule search and composition factors --------------------------

def matrix_algebra_closure(field, mats, n):
    """Span-closure of a set of n x n matrices under products, seeded with
    the identity.  Returns (subspace of flattened matrices, canonical basis)."""
    seed = [LinMap.identity(field, n)] + list(mats)
    span = Subspace.from_vectors(field, n * n, [map_to_vec(m) for m in seed])
    while True:
        basis = [vec_to_map(field, n, n, r) for r in span.rows]
        new = [map_to_vec(a @ b) for a in basis for b in basis
               if not span.contains(map_to_vec(a @ b))]
        if not new:
            return span, basis
        span = span.sum_with(Subspace.from_vectors(field, n * n, new))


def algebra_from_matrix_span(field, span, n):
    """Structure constants of a span-closed unital matrix algebra on the
    canonical basis of its flattened span."""
    basis = [vec_to_map(field, n, n, r) for r in span.rows]
    d = span.dim
    ent = {}
    for i in range(d):
        for j in range(d):
            coords = span.coords(map_to_vec(basis[i] @ basis[j]))
            assert coords is not None, "span is not closed under products"
            for k, c in enumerate(coords):
                if c != field.zero:
                    ent[(k, i * d + j)] = c
    unit = span.coords(map_to_vec(LinMap.identity(field, n)))
    assert unit is not None, "span does not contain the identity"
    alg = AlgebraData(field, d, LinMap(field, d, d * d, ent),
                      LinMap.from_column(field, unit))
    return alg, basis


def _span_mats(field, mats, n):
    """Canonical basis matrices of the span of the given matrices."""
    if not mats:
        return []
    sp = Subspace.from_vectors(field, n * n, [map_to_vec(m) for m in mats])
    return [vec_to_map(field, n, n, r) for r in sp.rows]


def commutant_in_span(field, basis, gens, n):
    """Elements of the span of basis commuting with every generator."""
    per = n * n
    ent = {}
    for gi, g in enumerate(gens):
        for j, b in enumerate(basis):
            v = map_to_vec(b @ g - g @ b)
            for i, x in enumerate(v):
                if x != field.zero:
                    ent[(gi * per + i, j)] = x
    ker = kernel_of(LinMap(field, len(gens) * per, len(basis), ent))
    mats = []
    for row in ker.rows:
        m = LinMap.zero(field, n, n)
        for j, c in enumerate(row):
            if c != field.zero:
                m = m + basis[j].scale(c)
        mats.append(m)
    return _span_mats(field, mats, n)


def full_commutant(field, gens, n):
    """All n x n matrices commuting with every generator."""
    def cond(x):
        return stack_maps([x @ g - g @ x for g in gens])
    op = matrix_of_operator(field, (n, n), (n * len(gens), n), cond)
    return [vec_to_map(field, n, n, r) for r in kernel_of(op).rows]


def _split_by_minpoly(field, cand, n):
    """Proper nonzero kernel of an irreducible factor of the candidate's
    minimal polynomial, or None when that polynomial is irreducible."""
    mp = matrix_minpoly(cand)
    factors = factor_poly(field, mp)
    if len(factors) == 1 and factors[0][1] == 1:
        return None
    ker = kernel_of(poly_at_matrix(field, factors[0][0], cand))
    if 0 < ker.dim < n:
        return ker
    return None


def invariant_subspace(m):
    """A proper nonzero subspace invariant under a right module action, or
    None when the module is certified simple.

    The search is complete when the algebra generated by the action
    operators is commutative, has a nonzero radical, or splits through the
    minimal polynomial of an element of its center or commutant; the one
    remaining case raises AmbiguousDecompositionError rather than guessing.
    """
    f = m.field
    n = m.dim
    if n <= 1:
        return None
    ops = m.action_operators()
    # cheap first pass: the cyclic span of each coordinate vector
    for k in range(n):
        span = Subspace.from_vectors(f, n, [basis_vector(f, n, k)])
        prev = -1
        while span.dim != prev:
            prev = span.dim
            imgs = [op.apply(r) for op in ops for r in span.rows]
            span = span.sum_with(Subspace.from_vectors(f, n, imgs))
        if 0 < span.dim < n:
            return span
    span, _ = matrix_algebra_closure(f, ops, n)
    e_alg, basis = algebra_from_matrix_span(f, span, n)
    _char_guard(f, e_alg.dim, "the action algebra")
    j = radical(e_alg)
    if j.dim > 0:
        mats = []
        for row in j.rows:
            mm = LinMap.zero(f, n, n)
            for idx, c in enumerate(row):
                if c != f.zero:
                    mm = mm + basis[idx].scale(c)
            mats.append(mm)
        cols = [mm.apply(basis_vector(f, n, k)) for mm in mats for k in range(n)]
        sub = Subspace.from_vectors(f, n, cols)
        assert 0 < sub.dim < n
        return sub
    center = commutant_in_span(f, basis, basis, n)
    cands = list(center)
    cands += [a @ b for a in center for b in center]
    cands += [a + b for a in center for b in center]
    for cand in cands:
        ker = _split_by_minpoly(f, cand, n)
        if ker is not None:
            return ker
    if len(center) == e_alg.dim:
        # commutative semisimple action algebra with no composite minimal
        # polynomial in sight: it acts as a field, so the module splits into
        # lines over it and is simple exactly when it is one line
        if n > e_alg.dim:
            cols = [b.apply(basis_vector(f, n, 0)) for b in basis]
            sub = Subspace.from_vectors(f, n, cols)
            assert 0 < sub.dim < n
            return sub
        return None
    comm = full_commutant(f, basis, n)
    cands = list(comm)
    cands += [a @ b for a in comm for b in comm]
    cands += [a + b for a in comm for b in comm]
    for cand in cands:
        ker = _split_by_minpoly(f, cand, n)
        if ker is not None:
            # invariant because the candidate commutes with the action
            return ker
    if len(comm) == len(center):
        # the commutant coincides with the (field) center, so it is a
        # division algebra and the module is simple
        return None
    raise AmbiguousDecompositionError(
        "cannot certify simplicity: the action algebra is noncommutative and "
        "no minimal polynomial split was found in its commutant")


def composition_factors(m):
    """Composition factors of a right module, as explicit modules, in the
    deterministic order produced by the subspace splittings."""
    if m.dim == 0:
        return []
    s = invariant_subspace(m)
    if s is None:
        return [m]
    sub, _ = module_on_subspace(m, s)
    quo, _ = module_on_quotient(m, s)
    return composition_factors(sub) + composition_factors(quo)


def modules_isomorphic(m1, m2):
    """Decide isomorphism of two right modules over one algebra by searching
    the intertwiner space for an invertible element."""
    if m1.dim != m2.dim:
        return False
    if m1.dim == 0:
        return True
    space = hom_linear(m1, m2)
    if space.dim == 0:
        return False
    return contains_invertible(space, m1.dim)


def distinct_modules(mods):
    """Prune to pairwise non-isomorphic modules, keeping first occurrences."""
    out = []
    for m in mods:
        if not any(modules_isomorphic(m, seen) for seen in out):
            out.append(m)
    return out


def radical_and_simples(a):
    """Radical of an algebra together with one copy of each simple right
    module, presented as modules over the original algebra."""
    j = radical(a)
    q, proj, _ = quotient_algebra(a, j)
    simples = distinct_modules(composition_factors(regular_module(q, "right")))
    return j, [inflate_module(s, a, proj) for s in simples]


def simple_comodules(c):
    """One copy of each simple right comodule, computed through the simple
    modules of the opposite of the dual algebra."""
    a_op = dual_algebra(c).op()
    _, simples = radical_and_simples(a_op)
    f = c.field
    out = []
    for s in simples:
        ops = s.action_operators()
        ent = {}
        for i, op in enumerate(ops):
            for (k, jj), v in op.entries():
                ent[(k * c.dim + i, jj)] = v
        rho = LinMap(f, s.dim * c.dim, s.dim, ent)
        v = ComoduleData(f, s.dim, rho, c, "right", s.name)
        rep = check_comodule(v)
        if not rep.ok:
            raise VerificationFailed(rep)
        out.append(v)
    return out


def socle_wrt(m, rad):
    """Elements of a right module killed by every radical basis vector."""
    f = m.field
    if rad.dim == 0:
        return Subspace.full(f, m.dim)
    return kernel_of(stack_maps([m.act_by(r) for r in rad.rows]))


@dataclass
class SemisimplicityResult:
    ok: bool
    socle_dim: int
    module_dim: int
    radical_dim: int

    def __bool__(self):
        return self.ok


def is_module_semisimple(m):
    """Semisimplicity of a right module over its acting algebra, decided by
    the socle against the algebra's radical."""
    j = radical(m.over)
    soc = socle_wrt(m, j)
    return SemisimplicityResult(soc.dim == m.dim, soc.dim, m.dim, j.dim)


# -- duality between modules and comodules ------------------------------

def comodule_to_dual_module(v):
    """Transpose dictionary on the dual carrier: a left comodule over C
    yields a left module over the dual algebra of C, a right comodule a
    right module.  The action matrix is literally the transpose of the
    coaction under the leg-pairing flattening, so the translation is exact.
    """
    a = dual_algebra(v.over)
    return ModuleData(v.field, v.dim, v.coaction.transpose(), a, v.side, v.name)


def recover_coalgebra_map(h, b, lam, certify=True):
    """Read a coalgebra map H -> B off a right coaction of b on the Hopf
    algebra's carrier via the counit, then certify that the result is a
    coalgebra map regenerating the given coaction."""
    f = h.field
    ib = LinMap.identity(f, b.dim)
    psi = h.counit.tensor(ib) @ lam
    rep = CertReport("recovered coalgebra map")
    rep.merge(is_coalgebra_map(psi, h.coalgebra, b))
    ih = LinMap.identity(f, h.dim)
    regen = ih.tensor(psi) @ h.comult - lam
    rep.add("coaction-regenerated", regen.is_zero(), _witness(regen, [h.labels]))
    if certify and not rep.ok:
        raise VerificationFailed(rep)
    return psi, rep
