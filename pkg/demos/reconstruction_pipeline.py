"""
Reconstructing the subalgebra from its quotient coalgebra
=========================================================

Starting from a quotient module coalgebra alone, the pipeline recovers
the coideal subalgebra it came from: the translation action is read off
the projection, faithful coflatness is certified, the coinvariants are
computed, and the monad of the induced module-category structure hands
back the multiplication.  The comparison isomorphism that drives the
argument is certified separately with seeded spot checks.
"""

from coideals import (
    ComoduleData,
    QQ,
    Subspace,
    basis_vector,
    gamma_isomorphism,
    quotient_module_coalgebra,
    regular_comodule,
    sweedler4,
    theorem2_pipeline,
    verify_coideal_subalgebra,
)

h = sweedler4()
span = Subspace.from_vectors(QQ, 4, [basis_vector(QQ, 4, 0),
                                     basis_vector(QQ, 4, 2)])
a = verify_coideal_subalgebra(h, span, name="span{1,g}")
q = quotient_module_coalgebra(a)

# run the reconstruction end to end; each stage is a named certificate
res = theorem2_pipeline(q)
print("pipeline certified:", res.ok)
for stage, rep in res.stages:
    print(f"    {stage:24s} {'ok' if rep.ok else 'FAIL'}")

# the recovered subalgebra is the original one, with its multiplication
print("recovered the span exactly:", res.subalgebra.space == a.space)
print("multiplication matches:",
      (res.algebra.mult - a.algebra.mult).is_zero())
print("faithfully flat:", res.flatness.ok)

# the comparison map between the induced tensor functors: an exact
# bijection on the computed carriers, plus one hundred seeded checks
breg = ComoduleData(QQ, q.dim, q.coalgebra.comult, q.coalgebra,
                    "right", "quotient regular")
gamma = gamma_isomorphism(regular_comodule(h), breg, q, seed=20260822)
print("comparison isomorphism certified:", gamma.ok)
print("source dimension:", gamma.source.dim,
      " target dimension:", gamma.target.dim)
