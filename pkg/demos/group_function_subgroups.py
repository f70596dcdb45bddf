"""
Subgroups of a finite group through function algebras
=====================================================

Functions on the symmetric group on three letters form a commutative
Hopf algebra.  Each subgroup yields a coideal subalgebra, the functions
constant on its left cosets, and the quotient coalgebra is the function
coalgebra of the coset space.  The walk below runs all four subgroups
through the correspondence and the module-comodule equivalence.
"""

from coideals import (
    QQ,
    mw_equivalence_check,
    roundtrip_correspondence,
    subgroup_data,
    symmetric_group_3,
)

g = symmetric_group_3()
print("group elements:", ", ".join(g.labels))

# index sets of the four subgroups inside the label order above
subgroups = {
    "trivial": (0,),
    "order two": (0, 3),
    "order three": (0, 1, 2),
    "whole group": (0, 1, 2, 3, 4, 5),
}

for nm, idx in subgroups.items():
    # subgroup_data returns the function Hopf algebra, the coset
    # subalgebra, and the quotient coalgebra in one call
    kf, a, q = subgroup_data(QQ, g, idx)
    rep = roundtrip_correspondence(kf, subalgebras=[a], quotients=[q])
    print(f"{nm:12s} subalgebra dim {a.space.dim}, quotient dim "
          f"{q.dim}, roundtrip exact: {rep.ok}")

# the equivalence between relative Hopf modules and quotient comodules,
# certified on the regular objects and all simples of the order-two case
kf, a, q = subgroup_data(QQ, g, (0, 3))
mw = mw_equivalence_check(a)
print("equivalence certified:", mw.ok)
for nm, m, n in mw.unit_items:
    print(f"    module side  {nm}: dimensions {m} = {n}")
for nm, m, n in mw.counit_items:
    print(f"    comodule side {nm}: dimensions {m} = {n}")
