"""baslab: exact-arithmetic computational algebra toolkit.

Subpackages and modules:
  rootsys      root systems, Weyl groups, chamber combinatorics
  hpoly        polynomials on the Cartan subalgebra, twisted Weyl action
  plambda      closed-form invariant element and nonvanishing witnesses
  weyl_oracle  independent Weyl-algebra recomputation for A1^n
  gluelab      comonad gluing of module categories over finite-dimensional algebras
  service      shared report builders behind the HTTP API and the CLI
  app          FastAPI application
  cli          command-line client
"""

__version__ = "0.1.0"

from .rootsys import (  # noqa: F401
    HElement,
    RootSystem,
    Weight,
    WeylElement,
    build_root_system,
    pairing,
    parse_type_spec,
)
from .hpoly import HPoly, divides, twist  # noqa: F401
from .plambda import (  # noqa: F401
    PLambda,
    build_p_lambda,
    degree_check,
    divisibility_check,
    find_witness,
)
from .weyl_oracle import (  # noqa: F401
    WeylOp,
    fourier,
    graded_basis,
    invariant_element,
    m_of_c,
    match_euler,
    oracle_verify,
)
