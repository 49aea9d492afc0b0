"""Gluing of module categories over finite-dimensional algebras."""

from .algebra import (  # noqa: F401
    Coinduced,
    Corner,
    FDAlgebra,
    FDModule,
    Induced,
    Restricted,
    coinduce,
    coinduce_morphism,
    corner_algebra,
    direct_sum,
    faithfulness_check,
    hom_dim,
    hom_space,
    induce,
    induce_counit,
    induce_morphism,
    induce_unit,
    is_isomorphic,
    left_subspace_basis,
    quotient_module,
    regular_module,
    restrict,
    restrict_morphism,
    simple_modules,
    submodule,
    zero_module,
)
from .comonad import (  # noqa: F401
    GlueCoalgebra,
    GlueData,
    PhiObj,
    TupleModule,
    TupleMorphism,
    adjunction_report,
    check_comonad_axioms,
    coalgebra_cokernel,
    coalgebra_hom_space,
    coalgebra_kernel,
    image_factorization_is_iso,
)
from .quiver import (  # noqa: F401
    algebra_from_quiver,
    builtin_examples,
    builtin_test_modules,
    module_from_spec,
)
from .resolution import (  # noqa: F401
    ProjectiveCache,
    Resolution,
    global_dimension,
    min_projective_resolution,
)
