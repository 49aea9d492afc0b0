"""Report builders shared by the HTTP endpoints and the CLI.

Every function takes plain JSON-friendly inputs and returns a plain dict
whose values are JSON-native (rationals as "p/q" strings), so identical
requests produce byte-identical serialized reports.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, SpecParseError
from .plambda import build_p_lambda, find_witness_for, p_lambda_report
from .rootsys import Weight, build_root_system, parse_rational_vector
from .selftest import run_selftest
from .weyl_oracle import oracle_verify
from .gluelab import (
    GlueData,
    algebra_from_quiver,
    builtin_examples,
    builtin_test_modules,
    check_comonad_axioms,
    coalgebra_hom_space,
    corner_algebra,
    faithfulness_check,
    global_dimension,
    hom_dim,
    module_from_spec,
)

DEFAULT_CUTOFF = 12


def roots_report(type_spec: str) -> dict:
    rs = build_root_system(type_spec)
    return {
        "type": rs.type_string(),
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "positive_coroots": [[str(c) for c in h.coords] for h in rs.positive_coroots],
        "num_positive_coroots": len(rs.positive_coroots),
        "rho": [str(c) for c in rs.rho.coords],
        "weyl_order": rs.weyl_order,
        "longest_element_word": rs.longest_element().word_str(),
    }


def _parse_weight(rs, text):
    return Weight(parse_rational_vector(text, rank=rs.rank))


def plambda_report(type_spec: str, weight: str) -> dict:
    rs = build_root_system(type_spec)
    return p_lambda_report(rs, _parse_weight(rs, weight))


def witness_report(type_spec: str, weight: str, point: str) -> dict:
    rs = build_root_system(type_spec)
    lam = _parse_weight(rs, weight)
    x = _parse_weight(rs, point)
    p = build_p_lambda(rs, lam)
    res = find_witness_for(p, x)
    return {
        "type": rs.type_string(),
        "weight": [str(c) for c in lam.coords],
        "point": [str(c) for c in x.coords],
        "witness_word": res.witness.word_str(),
        "witness_reduced_word": [i + 1 for i in res.witness.word],
        "witness_matrix": [list(row) for row in res.witness.matrix],
        "value_at_x": str(res.value),
        "strategy": res.strategy,
        "expanded": p.expanded.text(),
        "degree": p.degree,
    }


def parse_factors(text) -> tuple:
    if isinstance(text, (list, tuple)):
        lam = tuple(int(v) for v in text)
    else:
        try:
            lam = tuple(int(t.strip()) for t in str(text).split(","))
        except ValueError:
            raise SpecParseError(f"cannot parse multidegree {text!r}") from None
    if not lam or any(v < 0 for v in lam):
        raise DomainError("multidegree must be a nonempty list of nonnegative integers")
    return lam


def oracle_report(factors) -> dict:
    return oracle_verify(parse_factors(factors))


def _load_algebra(example: str | None, algebra_spec: dict | None, cutoff: int):
    if example is not None:
        builtins = builtin_examples(cutoff)
        if example not in builtins:
            raise DomainError(
                f"unknown example {example!r}; choose from {sorted(builtins)}"
            )
        return builtins[example]
    if algebra_spec is None:
        raise DomainError("either an example name or an algebra spec is required")
    return algebra_from_quiver(algebra_spec, cutoff)


def glue_demo_report(example: str = "tildeA", cutoff: int = DEFAULT_CUTOFF) -> dict:
    A = _load_algebra(example, None, cutoff)
    corners = {}
    for name in A.idempotents:
        c = corner_algebra(A, name)
        y_nilpotent = None
        if c.algebra.dim == 2:
            y = c.algebra.basis_vector(1)
            y_nilpotent = all(v == 0 for v in c.algebra.multiply(y, y))
        corners[name] = {
            "dim": c.algebra.dim,
            **({"square_zero_generator": y_nilpotent} if y_nilpotent is not None else {}),
        }
    status, detail = global_dimension(A, cutoff=cutoff)
    return {
        "example": example,
        "dim": A.dim,
        "basis": list(A.labels),
        "radical_dim": len(A.radical_basis()),
        "corners": corners,
        "faithful": faithfulness_check(A),
        "global_dimension": str(status),
        "resolutions": {k: r.status_str() for k, r in detail.items()},
    }


def glue_homdim_report(example: str | None = None, algebra_spec: dict | None = None,
                       cutoff: int = DEFAULT_CUTOFF) -> dict:
    A = _load_algebra(example, algebra_spec, cutoff)
    status, detail = global_dimension(A, cutoff=cutoff)
    report = {
        "cutoff": cutoff,
        "status": str(status),
        "value": status if isinstance(status, int) else None,
        "per_simple": {k: r.status_str() for k, r in detail.items()},
    }
    if example is not None:
        report["example"] = example
    return report


def glue_axioms_report(example: str | None = None, algebra_spec: dict | None = None,
                       module_specs=None, corrupt_mu: bool = False,
                       cutoff: int = DEFAULT_CUTOFF) -> dict:
    A = _load_algebra(example, algebra_spec, cutoff)
    glue = GlueData(A)
    if module_specs:
        mods = [(f"m{i + 1}", module_from_spec(A, spec))
                for i, spec in enumerate(module_specs)]
    else:
        mods = builtin_test_modules(A, example or "custom")
    report = check_comonad_axioms(glue, mods, corrupt_mu=corrupt_mu)
    report["modules"] = [n for n, _ in mods]
    if example is not None:
        report["example"] = example
    report["corrupt_mu"] = corrupt_mu
    return report


def glue_homdim_equality_report(example: str = "hatA",
                                cutoff: int = DEFAULT_CUTOFF) -> dict:
    """Hom-dimension comparison between modules and their coalgebras."""
    A = _load_algebra(example, None, cutoff)
    glue = GlueData(A)
    mods = builtin_test_modules(A, example)
    coalgs = [(n, glue.comparison(M)) for n, M in mods]
    pairs = []
    ok = True
    for (n1, M), (_, C1) in zip(mods, coalgs):
        for (n2, N), (_, C2) in zip(mods, coalgs):
            lhs = hom_dim(M, N)
            rhs = len(coalgebra_hom_space(C1, C2))
            pairs.append({"source": n1, "target": n2,
                          "module_hom_dim": lhs, "coalgebra_hom_dim": rhs})
            ok = ok and lhs == rhs
    return {"example": example, "passed": ok, "pairs": pairs}


def selftest_report(seed: int = 0, suites=None) -> dict:
    return run_selftest(seed=seed, suites=suites)
