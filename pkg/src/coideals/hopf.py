"""Structure data for finite-dimensional algebras, coalgebras, Hopf algebras
and bialgebra pairings, with mechanical axiom checks.

All structure maps are LinMaps over one shared field descriptor, with the
tensor-leg flattening fixed in linalg.  Nothing here is assumed: every
constructor stores raw structure constants and the check functions verify
the axioms by composing matrices, reporting the first violating basis
tuple on failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .certs import CertReport, VerificationFailed
from .fields import same_field
from .linalg import LinMap, identity_map, rank, swap_map, tensor_of_maps


def _default_labels(dim, stem="e"):
    return tuple(f"{stem}{i}" for i in range(dim))


def _decode(index, dims):
    out = []
    for d in reversed(dims):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


def first_violation(diff, labels, arity):
    """Describe the first nonzero column of a difference map as basis labels."""
    if diff.is_zero():
        return None
    cols = sorted({c for (_, c), _ in diff.entries()})
    c = cols[0]
    dims = [len(labels)] * arity
    idx = _decode(c, dims)
    return "(" + ", ".join(labels[i] for i in idx) + ")"


@dataclass
class AlgebraData:
    """Unital associative algebra by structure constants.

    mult: k^(dim^2) -> k^dim, unit: k -> k^dim.
    """

    field: object
    dim: int
    mult: LinMap
    unit: LinMap
    labels: tuple = ()

    def __post_init__(self):
        if not self.labels:
            self.labels = _default_labels(self.dim)
        assert (self.mult.rows, self.mult.cols) == (self.dim, self.dim * self.dim)
        assert (self.unit.rows, self.unit.cols) == (self.dim, 1)
        same_field(self.field, self.mult.field)
        same_field(self.field, self.unit.field)

    @classmethod
    def from_products(cls, field, dim, prod_fn, unit_vec, labels=()):
        """prod_fn(i, j) -> dict {k: coeff} for e_i * e_j."""
        ent = {}
        for i in range(dim):
            for j in range(dim):
                for k, v in prod_fn(i, j).items():
                    if v != field.zero:
                        ent[(k, i * dim + j)] = v
        mult = LinMap(field, dim, dim * dim, ent)
        unit = LinMap.from_column(field, unit_vec)
        return cls(field, dim, mult, unit, tuple(labels))

    @property
    def unit_vector(self):
        return self.unit.column(0)

    def product(self, u, v):
        """Product of two coefficient vectors."""
        f = self.field
        w = [f.zero] * (self.dim * self.dim)
        for i, a in enumerate(u):
            if a == f.zero:
                continue
            for j, b in enumerate(v):
                if b != f.zero:
                    w[i * self.dim + j] = f.mul(a, b)
        return self.mult.apply(tuple(w))

    def basis_product(self, i, j):
        return self.mult.column(i * self.dim + j)

    def left_mult_by(self, vec):
        return self.mult @ tensor_of_maps(LinMap.from_column(self.field, vec),
                                          identity_map(self.field, self.dim))

    def right_mult_by(self, vec):
        return self.mult @ tensor_of_maps(identity_map(self.field, self.dim),
                                          LinMap.from_column(self.field, vec))

    def op(self):
        return AlgebraData(self.field, self.dim,
                           self.mult @ swap_map(self.field, self.dim, self.dim),
                           self.unit, self.labels)

    def check(self):
        rep = CertReport(f"algebra dim {self.dim}")
        f, d = self.field, self.dim
        i_d = identity_map(f, d)
        assoc_diff = (self.mult @ tensor_of_maps(self.mult, i_d)
                      - self.mult @ tensor_of_maps(i_d, self.mult))
        rep.add("assoc", assoc_diff.is_zero(), first_violation(assoc_diff, self.labels, 3))
        lu = self.mult @ tensor_of_maps(self.unit, i_d) - i_d
        ru = self.mult @ tensor_of_maps(i_d, self.unit) - i_d
        unit_diff = lu if not lu.is_zero() else ru
        rep.add("unit", lu.is_zero() and ru.is_zero(),
                first_violation(unit_diff, self.labels, 1))
        return rep


@dataclass
class CoalgebraData:
    """Coassociative counital coalgebra by structure constants.

    comult: k^dim -> k^(dim^2), counit: k^dim -> k.
    """

    field: object
    dim: int
    comult: LinMap
    counit: LinMap
    labels: tuple = ()

    def __post_init__(self):
        if not self.labels:
            self.labels = _default_labels(self.dim)
        assert (self.comult.rows, self.comult.cols) == (self.dim * self.dim, self.dim)
        assert (self.counit.rows, self.counit.cols) == (1, self.dim)
        same_field(self.field, self.comult.field)
        same_field(self.field, self.counit.field)

    @classmethod
    def from_images(cls, field, dim, comult_fn, counit_fn, labels=()):
        """comult_fn(i) -> dict {(j, k): coeff}; counit_fn(i) -> scalar."""
        ent = {}
        for i in range(dim):
            for (j, k), v in comult_fn(i).items():
                if v != field.zero:
                    ent[(j * dim + k, i)] = v
        comult = LinMap(field, dim * dim, dim, ent)
        counit = LinMap(field, 1, dim,
                        {(0, i): counit_fn(i) for i in range(dim) if counit_fn(i) != field.zero})
        return cls(field, dim, comult, counit, tuple(labels))

    def cop(self):
        return CoalgebraData(self.field, self.dim,
                             swap_map(self.field, self.dim, self.dim) @ self.comult,
                             self.counit, self.labels)

    def check(self):
        rep = CertReport(f"coalgebra dim {self.dim}")
        f, d = self.field, self.dim
        i_d = identity_map(f, d)
        co_diff = (tensor_of_maps(self.comult, i_d) @ self.comult
                   - tensor_of_maps(i_d, self.comult) @ self.comult)
        rep.add("coassoc", co_diff.is_zero(), first_violation(co_diff, self.labels, 1))
        lu = tensor_of_maps(self.counit, i_d) @ self.comult - i_d
        ru = tensor_of_maps(i_d, self.counit) @ self.comult - i_d
        cu_diff = lu if not lu.is_zero() else ru
        rep.add("counit", lu.is_zero() and ru.is_zero(),
                first_violation(cu_diff, self.labels, 1))
        return rep


def dual_algebra(c):
    """Convolution algebra on the dual of a coalgebra (transpose matrices)."""
    return AlgebraData(c.field, c.dim, c.comult.transpose(), c.counit.transpose(),
                       tuple(f"{l}*" for l in c.labels))


def dual_coalgebra(a):
    return CoalgebraData(a.field, a.dim, a.mult.transpose(), a.unit.transpose(),
                         tuple(f"{l}*" for l in a.labels))


@dataclass
class HopfAlgebraData:
    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: LinMap
    name: str = ""

    def __post_init__(self):
        assert self.algebra.dim == self.coalgebra.dim
        same_field(self.algebra.field, self.coalgebra.field)
        assert (self.antipode.rows, self.antipode.cols) == (self.algebra.dim, self.algebra.dim)

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels

    @property
    def mult(self):
        return self.algebra.mult

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def comult(self):
        return self.coalgebra.comult

    @property
    def counit(self):
        return self.coalgebra.counit

    def unit_vector(self):
        return self.algebra.unit_vector


def check_hopf_axioms(h):
    """Full axiom suite; the report carries the first violating basis tuple
    for each failed check."""
    rep = CertReport(h.name or f"hopf dim {h.dim}")
    rep.merge(h.algebra.check())
    rep.merge(h.coalgebra.check())
    f, d = h.field, h.dim
    i_d = identity_map(f, d)
    # comult is an algebra map: Delta(xy) = Delta(x)Delta(y), Delta(1) = 1(x)1
    mult_hh = (tensor_of_maps(h.mult, h.mult)
               @ tensor_of_maps(i_d, tensor_of_maps(swap_map(f, d, d), i_d)))
    dm = h.comult @ h.mult - mult_hh @ tensor_of_maps(h.comult, h.comult)
    rep.add("comult-multiplicative", dm.is_zero(), first_violation(dm, h.labels, 2))
    du = h.comult @ h.unit - tensor_of_maps(h.unit, h.unit)
    rep.add("comult-unital", du.is_zero())
    # counit is an algebra map
    em = h.counit @ h.mult - tensor_of_maps(h.counit, h.counit)
    rep.add("counit-multiplicative", em.is_zero(), first_violation(em, h.labels, 2))
    one = h.counit @ h.unit
    rep.add("counit-unital", one == identity_map(f, 1))
    # antipode laws: m(S(x)id)Delta = u.eps = m(id(x)S)Delta
    ue = h.unit @ h.counit
    left = h.mult @ tensor_of_maps(h.antipode, i_d) @ h.comult - ue
    rep.add("antipode-left", left.is_zero(), first_violation(left, h.labels, 1))
    right = h.mult @ tensor_of_maps(i_d, h.antipode) @ h.comult - ue
    rep.add("antipode-right", right.is_zero(), first_violation(right, h.labels, 1))
    return rep


def antipode_bijective(h):
    """(bijective?, rank of the antipode matrix)."""
    r = rank(h.antipode)
    return r == h.dim, r


def antipode_order(h, cap=64):
    """Least n >= 1 with S^n = id, or None up to cap."""
    f, d = h.field, h.dim
    cur = identity_map(f, d)
    for n in range(1, cap + 1):
        cur = h.antipode @ cur
        if cur == identity_map(f, d):
            return n
    return None


def dual_hopf(h):
    """Dual Hopf algebra: all structure maps transposed.

    The spec of the dual is an instance-level substitution of the full
    linear dual (finite dimension); reports downstream flag this.
    """
    alg = dual_algebra(h.coalgebra)
    co = dual_coalgebra(h.algebra)
    return HopfAlgebraData(alg, co, h.antipode.transpose(),
                           name=f"{h.name}*" if h.name else "")


@dataclass
class PairingData:
    """Bialgebra pairing <.,.>: U (x) H -> k."""

    u: HopfAlgebraData
    h: HopfAlgebraData
    form: LinMap

    def __post_init__(self):
        same_field(self.u.field, self.h.field)
        assert (self.form.rows, self.form.cols) == (1, self.u.dim * self.h.dim)

    def value(self, uvec, hvec):
        f = self.u.field
        w = [f.zero] * (self.u.dim * self.h.dim)
        for i, a in enumerate(uvec):
            if a == f.zero:
                continue
            for j, b in enumerate(hvec):
                if b != f.zero:
                    w[i * self.h.dim + j] = f.mul(a, b)
        return self.form.apply(tuple(w))[0]


def check_pairing(p):
    rep = CertReport("bialgebra pairing")
    f = p.u.field
    du, dh = p.u.dim, p.h.dim
    i_u, i_h = identity_map(f, du), identity_map(f, dh)
    # <uv, x> = <u, x1><v, x2>
    lhs = p.form @ tensor_of_maps(p.u.mult, i_h)
    reorder = tensor_of_maps(i_u, tensor_of_maps(swap_map(f, du, dh), i_h))
    rhs = (tensor_of_maps(p.form, p.form) @ reorder
           @ tensor_of_maps(tensor_of_maps(i_u, i_u), p.h.comult))
    d1 = lhs - rhs
    rep.add("mult-vs-comult", d1.is_zero())
    # <u, xy> = <u1, x><u2, y>
    lhs2 = p.form @ tensor_of_maps(i_u, p.h.mult)
    rhs2 = (tensor_of_maps(p.form, p.form) @ reorder
            @ tensor_of_maps(p.u.comult, tensor_of_maps(i_h, i_h)))
    d2 = lhs2 - rhs2
    rep.add("comult-vs-mult", d2.is_zero())
    # units pair to counits
    lu = p.form @ tensor_of_maps(p.u.unit, i_h) - p.h.counit
    rep.add("unit-left", lu.is_zero())
    ru = p.form @ tensor_of_maps(i_u, p.h.unit) - p.u.counit
    rep.add("unit-right", ru.is_zero())
    return rep


def hit_action(p, side, certify=True):
    """Module structure on H over U induced by the pairing.

    side "right": x <- z = <z, x1> x2   (right U-module on H)
    side "left":  z -> x = x1 <z, x2>   (left U-module on H)

    Returns a ModuleData; with certify=True the module axioms are checked
    and VerificationFailed raised on a violation.
    """
    from .repcats import ModuleData, check_representation

    f = p.u.field
    du, dh = p.u.dim, p.h.dim
    i_u, i_h = identity_map(f, du), identity_map(f, dh)
    if side == "right":
        # H (x) U -> H: (x, z) -> (x1, x2, z) -> (x2, z, x1) -> x2 <z, x1>
        act = (tensor_of_maps(i_h, p.form)
               @ tensor_of_maps(i_h, swap_map(f, dh, du))
               @ tensor_of_maps(swap_map(f, dh, dh), i_u)
               @ tensor_of_maps(p.h.comult, i_u))
        mod = ModuleData(f, dh, act, p.u.algebra, side="right")
    elif side == "left":
        # U (x) H -> H: (z, x) -> (z, x1, x2) -> (x1, z, x2) -> x1 <z, x2>
        act = (tensor_of_maps(i_h, p.form)
               @ tensor_of_maps(swap_map(f, du, dh), i_h)
               @ tensor_of_maps(i_u, p.h.comult))
        mod = ModuleData(f, dh, act, p.u.algebra, side="left")
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if certify:
        rep = check_representation(mod)
        if not rep.ok:
            raise VerificationFailed(rep)
    return mod
