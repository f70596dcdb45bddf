"""Exact workbench for coideal subalgebras of finite-dimensional Hopf
algebras, their quotient module coalgebras, and the equivalences between
the associated representation categories.

Everything is presented as matrices over the rationals or a prime field,
every claimed property is certified by an explicit check with a witness,
and every verdict is reproducible bit for bit.
"""

from .fields import GF, QQ
from .linalg import LinMap, Subspace, basis_vector, identity_map
from .certs import CertReport, VerificationFailed
from .hopf import (
    AlgebraData,
    CoalgebraData,
    HopfAlgebraData,
    PairingData,
    antipode_bijective,
    antipode_order,
    check_hopf_axioms,
    check_pairing,
    dual_hopf,
)
from .catalog import (
    coset_function_subspace,
    cyclic_group,
    function_algebra,
    group_algebra,
    subgroup_data,
    sweedler4,
    symmetric_group_3,
    taft,
)
from .repcats import (
    BicomoduleData,
    ComoduleData,
    ModuleData,
    RelHopfModuleData,
    check_comodule,
    check_module,
    check_relhopf,
    check_representation,
    corestrict_comodule,
    cotensor,
    hom_colinear,
    regular_comodule,
    regular_module,
    regular_relhopf,
    simple_comodules,
    tensor_comodules,
    trivial_comodule,
)
from .correspondence import (
    CoidealSubalgebraData,
    QuotientModuleCoalgebraData,
    c_semisimple_implication,
    classify_quantum,
    coideal_annihilator,
    coideal_as_relhopf,
    coinvariants,
    is_faithfully_coflat,
    is_faithfully_flat,
    mw_equivalence_check,
    quotient_data,
    quotient_module_coalgebra,
    roundtrip_correspondence,
    ses_cross_check,
    verify_coideal_subalgebra,
)
from .monadics import (
    adjunction_unit_counit_check,
    compare_talgebras_to_modules,
    cotensor_psi_monad,
    free_forget_monad,
    gamma_isomorphism,
    internal_hom,
    surjectivity_from_coflatness,
    theorem2_pipeline,
    unit_object_algebra,
)
from .morita import (
    coend,
    coend_pre_equivalence,
    coend_regular_isomorphism,
    cohom,
    identity_pre_equivalence,
    is_quasi_finite,
    verify_pre_equivalence,
)
from .specfile import (
    SpecData,
    SpecParseError,
    load_spec,
    parse_spec,
    save_spec,
    serialize_spec,
)
from .report import Report, content_hash

__version__ = "0.1.0"
