"""banlab: exact-arithmetic verification of normed (co)algebra constructions.

Finite-dimensional diagonal-normed spaces over Q with an archimedean or
p-adic absolute value; contracting products and coproducts; projective
tensor products; bialgebras given by structure constants with certified
operator norms; the grading / representation equivalences; and a Galois
descent laboratory around the comparison map into functions on the Galois
group.  Everything is exact rationals or certified interval enclosures,
and the CLI runs bundled verification scenarios.
"""

__version__ = "0.1.0"

from .scalar import ValuedField, build_extension, apply_galois, abs_value
from .nspace import (
    DiagSpace,
    BoundedMap,
    contracting_product,
    contracting_coproduct,
    assemble_from_family,
    delta_swap_norm,
    operator_norm,
)
from .tensor import tensor, tensor_map, bimodule_tensor
from .hopf import (
    AlgebraData,
    CoalgebraData,
    BialgebraData,
    check_algebra,
    check_coalgebra,
    check_bialgebra,
    group_bialgebra,
    grading_bialgebra,
    function_bialgebra,
    tate_coalgebra,
    dagger_chain,
)
from .comod import (
    ModuleData,
    ComoduleData,
    GradedSpace,
    check_module,
    check_comodule,
    graded_to_comodule,
    comodule_to_graded,
    rep_to_module,
    module_to_rep,
    dualize_bialgebra,
    dualize_module,
    dualize_comodule,
    finite_adjunction_check,
)
from .ind import IndObject, hom, contracting_colimit, evaluate_functor_on_ind
from .descent import (
    build_cogebroid,
    build_phi,
    pairing_reports,
    induct,
    descend,
    iwasawa_dual,
    locally_constant_approx,
)
