"""Structure theory tests: axiom checks for (co)modules, radicals,
composition factors, cotensor and colinear hom, with oracles stated at each
site (classical representation theory of small groups, hand-computed
radicals, and sympy-factored minimal polynomials)."""

from fractions import Fraction as Fr

import pytest

from coideals.catalog import (
    cyclic_group,
    function_algebra,
    group_algebra,
    sweedler4,
    symmetric_group_3,
)
from coideals.certs import VerificationFailed
from coideals.fields import GF, QQ
from coideals.hopf import AlgebraData, dual_algebra
from coideals.linalg import LinMap, Subspace, basis_vector, kernel_of
from coideals.repcats import (
    ComoduleData,
    ModuleData,
    check_comodule,
    check_module,
    check_relhopf,
    check_representation,
    comodule_on_subspace,
    comodule_to_dual_module,
    composition_factors,
    corestrict_comodule,
    cotensor,
    distinct_modules,
    factor_poly,
    hom_colinear,
    hom_linear,
    invariant_subspace,
    is_cosemisimple,
    is_module_semisimple,
    matrix_minpoly,
    module_on_quotient,
    module_on_subspace,
    modules_isomorphic,
    quotient_algebra,
    radical,
    radical_and_simples,
    recover_coalgebra_map,
    regular_comodule,
    regular_module,
    regular_relhopf,
    restrict_algebra,
    simple_comodules,
    socle_wrt,
    tensor_comodules,
    trivial_comodule,
    trivial_comodule_at,
)


def left_regular_comodule(h):
    # the comultiplication matrix also serves as a left coaction
    return ComoduleData(h.field, h.dim, h.comult, h.coalgebra, "left")


# -- axiom checks -------------------------------------------------------

def test_regular_structures_pass_axioms():
    for h in (sweedler4(), group_algebra(QQ, symmetric_group_3())):
        assert check_module(regular_module(h.algebra, "right")).ok
        assert check_module(regular_module(h.algebra, "left")).ok
        assert check_comodule(regular_comodule(h)).ok
        assert check_comodule(left_regular_comodule(h)).ok


def test_broken_action_reports_witness():
    a = sweedler4().algebra
    bad = ModuleData(QQ, 4, a.mult + LinMap(QQ, 4, 16, {(0, 7): Fr(1)}), a, "right")
    rep = check_module(bad)
    assert not rep.ok
    assert any(c.witness for c in rep.checks if not c.ok)


def test_left_module_axioms_are_transported():
    # left multiplication in a noncommutative algebra is a left action; the
    # same operators packaged as a right action violate associativity
    a = group_algebra(QQ, symmetric_group_3()).algebra
    left = ModuleData(QQ, 6, a.mult, a, "left")
    assert check_module(left).ok
    from coideals.linalg import swap_map
    wrong = ModuleData(QQ, 6, a.mult @ swap_map(QQ, 6, 6), a, "right")
    assert not check_module(wrong).ok


def test_trivial_comodule_needs_grouplike():
    h = group_algebra(QQ, cyclic_group(2))
    ok = trivial_comodule(h)
    assert check_comodule(ok).ok
    _, rep = trivial_comodule_at(h.coalgebra, (Fr(1), Fr(1)))
    assert not rep.ok  # 1 + g is not grouplike


# -- relative Hopf modules ---------------------------------------------

def sweedler_group_part():
    """Span of 1 and the grouplike g (indices 0 and 2): a right coideal
    subalgebra of the four-dimensional instance."""
    h = sweedler4()
    s = Subspace.from_vectors(QQ, 4, [basis_vector(QQ, 4, 0), basis_vector(QQ, 4, 2)])
    sub, incl = restrict_algebra(h.algebra, s, ("1", "g"))
    return h, s, sub, incl


def test_regular_relhopf_passes():
    h, _, sub, incl = sweedler_group_part()
    x = regular_relhopf(h, sub, incl)
    rep = check_relhopf(x)
    assert rep.ok, str(rep)


def test_relhopf_rejects_non_coideal_subalgebra():
    # span{1, x} is closed under product (x*x = 0) but Delta(x) has the
    # g (x) x term escaping the subspace
    h = sweedler4()
    s = Subspace.from_vectors(QQ, 4, [basis_vector(QQ, 4, 0), basis_vector(QQ, 4, 1)])
    sub, incl = restrict_algebra(h.algebra, s, ("1", "x"))
    with pytest.raises(VerificationFailed) as ei:
        regular_relhopf(h, sub, incl)
    failed = [c.name for c in ei.value.report.failures()]
    assert "coproduct-stays-in-subspace" in failed


def test_restrict_algebra_validation():
    h = sweedler4()
    no_unit = Subspace.from_vectors(QQ, 4, [basis_vector(QQ, 4, 1)])
    with pytest.raises(ValueError):
        restrict_algebra(h.algebra, no_unit)
    not_closed = Subspace.from_vectors(
        QQ, 4, [basis_vector(QQ, 4, i) for i in (0, 1, 2)])
    with pytest.raises(ValueError):
        restrict_algebra(h.algebra, not_closed)  # g*x = gx escapes span{1, x, g}


# -- radical and semisimplicity ----------------------------------------

def dual_numbers():
    # k[t]/(t^2): radical is the span of t (oracle: t is nilpotent and the
    # quotient by it is the field)
    return AlgebraData.from_products(
        QQ, 2, lambda i, j: {i + j: Fr(1)} if i + j < 2 else {},
        (Fr(1), Fr(0)), ("1", "t"))


def test_radical_of_dual_numbers():
    j = radical(dual_numbers())
    assert j.dim == 1
    assert j.contains((Fr(0), Fr(1)))


def test_radical_of_sweedler_algebra():
    # oracle: x and gx span a nilpotent ideal and the quotient is spanned by
    # two orthogonal idempotents (1 +- g)/2
    j = radical(sweedler4().algebra)
    assert j.dim == 2
    assert j.contains(basis_vector(QQ, 4, 1)) and j.contains(basis_vector(QQ, 4, 3))


def test_radical_char_guard():
    a = group_algebra(GF(2), cyclic_group(2)).algebra
    with pytest.raises(ValueError):
        radical(a)  # trace form invalid at p <= dim


def test_group_algebra_semisimple_char_zero():
    assert radical(group_algebra(QQ, symmetric_group_3()).algebra).dim == 0


def test_cosemisimplicity():
    assert is_cosemisimple(function_algebra(QQ, symmetric_group_3()).coalgebra).ok
    assert is_cosemisimple(group_algebra(QQ, symmetric_group_3()).coalgebra).ok
    r = is_cosemisimple(sweedler4().coalgebra)
    assert not r.ok and r.dual_radical_dim == 2


def test_quotient_algebra_of_sweedler():
    h = sweedler4()
    j = radical(h.algebra)
    q, proj, sect = quotient_algebra(h.algebra, j)
    assert q.dim == 2
    assert (proj @ sect) == LinMap.identity(QQ, 2)
    # [g]*[g] = [1] survives in the quotient
    gq = proj.apply(basis_vector(QQ, 4, 2))
    oneq = proj.apply(basis_vector(QQ, 4, 0))
    assert q.product(gq, gq) == tuple(oneq)


def test_quotient_algebra_rejects_non_ideal():
    h = sweedler4()
    s = Subspace.from_vectors(QQ, 4, [basis_vector(QQ, 4, 0)])
    with pytest.raises(ValueError):
        quotient_algebra(h.algebra, s)


def test_socle_of_sweedler_regular():
    h = sweedler4()
    m = regular_module(h.algebra, "right")
    j = radical(h.algebra)
    soc = socle_wrt(m, j)
    # oracle: v*x = 0 and v*gx = 0 force v into the span of x and gx
    assert soc.dim == 2
    res = is_module_semisimple(m)
    assert not res.ok and res.socle_dim == 2 and res.radical_dim == 2


def test_s3_regular_module_semisimple():
    a = group_algebra(QQ, symmetric_group_3()).algebra
    assert is_module_semisimple(regular_module(a, "right")).ok


# -- composition factors ------------------------------------------------

def test_composition_factors_of_s3_regular():
    # classical: the regular representation of the order-6 nonabelian group
    # in characteristic zero has factors of dimensions 1, 1, 2, 2
    a = group_algebra(QQ, symmetric_group_3()).algebra
    facs = composition_factors(regular_module(a, "right"))
    assert sorted(m.dim for m in facs) == [1, 1, 2, 2]
    uniq = distinct_modules(facs)
    assert sorted(m.dim for m in uniq) == [1, 1, 2]


def test_radical_and_simples_of_sweedler():
    j, simples = radical_and_simples(sweedler4().algebra)
    assert j.dim == 2
    assert [m.dim for m in simples] == [1, 1]
    assert not modules_isomorphic(simples[0], simples[1])
    for m in simples:
        assert check_module(m).ok


def test_rotation_module_simple_over_rationals_splits_mod_7():
    # the order-3 rotation acts irreducibly over the rationals because
    # x^2 + x + 1 is irreducible there, and splits over GF(7) where the
    # cube roots of unity live (oracle: polynomial factorization)
    for field, expect_simple in ((QQ, True), (GF(7), False)):
        a = group_algebra(field, cyclic_group(3)).algebra
        one = field.one
        rot = LinMap(field, 2, 2, {(0, 1): field.neg(one), (1, 0): one,
                                   (1, 1): field.neg(one)})
        ops = {0: LinMap.identity(field, 2), 1: rot, 2: rot @ rot}
        ent = {}
        for i, op in ops.items():
            for (r, c), v in op.entries():
                ent[(r, c * 3 + i)] = v
        act = LinMap(field, 2, 6, ent)
        m = ModuleData(field, 2, act, a, "right")
        assert check_module(m).ok
        got = invariant_subspace(m)
        assert (got is None) == expect_simple


def test_modules_isomorphic_conjugation():
    a = group_algebra(QQ, cyclic_group(2)).algebra
    reg = regular_module(a, "right")
    t = LinMap(QQ, 2, 2, {(0, 0): Fr(1), (0, 1): Fr(1), (1, 1): Fr(1)})
    tinv = LinMap(QQ, 2, 2, {(0, 0): Fr(1), (0, 1): Fr(-1), (1, 1): Fr(1)})
    conj = ModuleData(QQ, 2, t @ reg.action @ tinv.tensor(LinMap.identity(QQ, 2)), a)
    assert check_module(conj).ok
    assert modules_isomorphic(reg, conj)
    # two copies of the trivial module are not the regular module
    triv2 = ModuleData(QQ, 2, LinMap(QQ, 2, 4, {(0, 0): Fr(1), (0, 1): Fr(1),
                                                (1, 2): Fr(1), (1, 3): Fr(1)}), a)
    assert check_module(triv2).ok
    assert not modules_isomorphic(reg, triv2)


def test_submodule_and_quotient_roundtrip():
    h = sweedler4()
    m = regular_module(h.algebra, "right")
    j = radical(h.algebra)
    sub, incl = module_on_subspace(m, j)
    quo, proj = module_on_quotient(m, j)
    assert sub.dim == 2 and quo.dim == 2
    assert check_module(sub).ok and check_module(quo).ok
    assert incl.cols == 2 and proj.rows == 2
    bad = Subspace.from_vectors(QQ, 4, [basis_vector(QQ, 4, 2)])
    with pytest.raises(ValueError):
        module_on_subspace(m, bad)  # g*g = 1 escapes the span of g


# -- minimal polynomials ------------------------------------------------

def test_matrix_minpoly_against_hand_values():
    nil = LinMap(QQ, 2, 2, {(0, 1): Fr(1)})
    assert matrix_minpoly(nil) == (Fr(0), Fr(0), Fr(1))  # x^2
    diag = LinMap(QQ, 2, 2, {(0, 0): Fr(1), (1, 1): Fr(2)})
    assert matrix_minpoly(diag) == (Fr(2), Fr(-3), Fr(1))  # (x-1)(x-2)
    assert matrix_minpoly(LinMap.identity(QQ, 3)) == (Fr(-1), Fr(1))


def test_factor_poly():
    facs = factor_poly(QQ, (Fr(2), Fr(-3), Fr(1)))
    assert [(f, m) for f, m in facs] == [((Fr(-1), Fr(1)), 1), ((Fr(-2), Fr(1)), 1)]
    facs2 = factor_poly(QQ, (Fr(0), Fr(0), Fr(1)))
    assert facs2 == [((Fr(0), Fr(1)), 2)]
    # x^2 + 1 = (x + 2)(x + 3) over GF(5)
    f5 = GF(5)
    facs3 = factor_poly(f5, (1, 0, 1))
    assert len(facs3) == 2 and all(len(f) == 2 and m == 1 for f, m in facs3)
    # x^2 + x + 1 is irreducible over the rationals
    assert len(factor_poly(QQ, (Fr(1), Fr(1), Fr(1)))) == 1


# -- comodules through duals -------------------------------------------

def test_simple_comodules_of_function_algebra():
    # right comodules over functions on G are representations of G; for the
    # order-6 nonabelian group the simple dimensions are 1, 1, 2 (classical)
    c = function_algebra(QQ, symmetric_group_3()).coalgebra
    simples = simple_comodules(c)
    assert sorted(v.dim for v in simples) == [1, 1, 2]


def test_simple_comodules_of_sweedler():
    # the coradical is spanned by the grouplikes 1 and g, so the simple
    # comodules are the two grouplike lines
    h = sweedler4()
    simples = simple_comodules(h.coalgebra)
    assert [v.dim for v in simples] == [1, 1]
    cols = sorted(tuple(v.coaction.column(0)) for v in simples)
    assert cols == sorted([tuple(basis_vector(QQ, 4, 0)), tuple(basis_vector(QQ, 4, 2))])


def test_comodule_to_dual_module_axioms():
    for h in (sweedler4(), function_algebra(QQ, symmetric_group_3())):
        right = comodule_to_dual_module(regular_comodule(h))
        assert right.side == "right" and check_module(right).ok
        left = comodule_to_dual_module(
            ComoduleData(h.field, h.dim, h.comult, h.coalgebra, "left"))
        assert left.side == "left" and check_module(left).ok


# -- hom and cotensor ---------------------------------------------------

def test_colinear_endomorphisms_of_regular_comodule():
    # End of the regular comodule is the dual algebra, so its dimension is
    # the dimension of the coalgebra
    for h in (sweedler4(), function_algebra(QQ, symmetric_group_3())):
        end = hom_colinear(regular_comodule(h), regular_comodule(h))
        assert end.dim == h.dim
    # maps from the trivial comodule pick out the coinvariants of the
    # regular coaction, which is the line through 1
    h = sweedler4()
    assert hom_colinear(trivial_comodule(h), regular_comodule(h)).dim == 1


def test_hom_linear_matches_intertwiners():
    a = group_algebra(QQ, symmetric_group_3()).algebra
    reg = regular_module(a, "right")
    # dim Hom(kG, kG) over kG equals |G| (right multiplications)
    assert hom_linear(reg, reg).dim == 6


def test_cotensor_of_regular_comodules():
    # H cotensor H over H is a copy of H embedded by the comultiplication
    for h in (sweedler4(), group_algebra(QQ, symmetric_group_3())):
        v = regular_comodule(h)
        w = left_regular_comodule(h)
        ct = cotensor(v, w)
        assert ct.dim == h.dim
        for i in range(h.dim):
            assert ct.contains(tuple(h.comult.column(i)))


def test_tensor_comodules_with_trivial():
    h = function_algebra(QQ, symmetric_group_3())
    reg = regular_comodule(h)
    t = tensor_comodules(h, reg, trivial_comodule(h))
    assert check_comodule(t).ok
    assert hom_colinear(t, reg).dim == 6


def test_comodule_on_subspace():
    # the span of the grouplikes 1 and g is a subcomodule of the regular
    # comodule of the four-dimensional instance
    h = sweedler4()
    s = Subspace.from_vectors(QQ, 4, [basis_vector(QQ, 4, 0), basis_vector(QQ, 4, 2)])
    sub, incl = comodule_on_subspace(regular_comodule(h), s)
    assert sub.dim == 2 and check_comodule(sub).ok
    bad = Subspace.from_vectors(QQ, 4, [basis_vector(QQ, 4, 1)])
    with pytest.raises(ValueError):
        comodule_on_subspace(regular_comodule(h), bad)


# -- coalgebra map recovery --------------------------------------------

def test_recover_coalgebra_map_roundtrip():
    h = sweedler4()
    psi, rep = recover_coalgebra_map(h, h.coalgebra, h.comult)
    assert rep.ok
    assert psi == LinMap.identity(QQ, 4)


def test_recover_coalgebra_map_rejects_flipped_coaction():
    # the counit of the flipped comultiplication still reads off the
    # identity, but the regeneration check sees the twist
    h = sweedler4()
    with pytest.raises(VerificationFailed) as ei:
        recover_coalgebra_map(h, h.coalgebra, h.coalgebra.cop().comult)
    assert any(c.name == "coaction-regenerated" for c in ei.value.report.failures())


def test_corestriction_keeps_axioms():
    h = sweedler4()
    v = corestrict_comodule(regular_comodule(h), h.coalgebra, LinMap.identity(QQ, 4))
    assert check_comodule(v).ok
