"""The closed-form invariant element and its nonvanishing witnesses.

For a dominant integral weight lambda the element is the product over
positive coroots av of the linear forms (av + <av, rho> - i) for
i = 1..<av, lambda>, normalized to leading constant 1.  The witness
procedure certifies, for any rational point x, a Weyl element w whose
twisted action makes the element nonvanishing at x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InternalCheckError
from .hpoly import HPoly, divides, twist
from .rootsys import HElement, RootSystem, Weight, WeylElement, pairing


@dataclass(frozen=True)
class PLambda:
    """Factored and expanded form of the invariant element for one weight."""

    rs: RootSystem
    lam: Weight
    factors: tuple  # of (HElement, Fraction shift): the form <coroot> + shift
    expanded: HPoly

    @property
    def degree(self):
        return len(self.factors)

    def factor_polys(self):
        return [HPoly.linear(h) + HPoly.const(self.rs.rank, s) for h, s in self.factors]

    def factor_texts(self):
        return [f.text() for f in self.factor_polys()]


def build_p_lambda(rs: RootSystem, lam: Weight) -> PLambda:
    """Expand the product of linear factors attached to (rs, lam).

    Requires lam dominant integral; the empty product (lam = 0) is 1.
    """
    rs._check_rank(lam)
    if not rs.is_dominant_integral(lam):
        raise DomainError(f"weight {lam} is not dominant integral")
    factors = []
    poly = HPoly.const(rs.rank, 1)
    for av in rs.positive_coroots:
        n = pairing(av, lam)
        height = av.height()
        for i in range(1, int(n) + 1):
            shift = height - i
            factors.append((av, Fraction(shift)))
            poly = poly * (HPoly.linear(av) + HPoly.const(rs.rank, shift))
    return PLambda(rs=rs, lam=lam, factors=tuple(factors), expanded=poly)


def degree_check(p: PLambda) -> bool:
    """Total degree of the expansion equals the number of linear factors."""
    expected = sum(int(pairing(av, p.lam)) for av in p.rs.positive_coroots)
    return p.expanded.total_degree() == expected


def divisibility_check(p: PLambda) -> bool:
    """Each form (av + <av,rho> - i - 1), 0 <= i < <av,lambda>, divides exactly."""
    for av in p.rs.positive_coroots:
        n = int(pairing(av, p.lam))
        height = av.height()
        for i in range(n):
            form = HPoly.linear(av) + HPoly.const(p.rs.rank, height - i - 1)
            ok, _ = divides(form, p.expanded)
            if not ok:
                return False
    return True


def evaluate_twisted(p: PLambda, w: WeylElement, x: Weight) -> Fraction:
    """Value of the w-twist of p at x, computed factor by factor.

    The twisted action is a ring map and evaluation is a ring map, so the
    value is the product of the values of the twisted linear factors; this
    avoids expanding the twisted polynomial.  Both ring-map laws are
    verified independently by the test suite.
    """
    rs = p.rs
    total = Fraction(1)
    for h, shift in p.factors:
        wh = rs.act_on_h(w, h)
        # twist of (h + shift): w(h) + <w(h) - h, rho> + shift
        const = wh.height() - h.height() + shift
        total *= pairing(wh, x) + const
        if total == 0:
            return total
    return total


@dataclass(frozen=True)
class WitnessResult:
    witness: WeylElement
    value: Fraction
    strategy: str  # which search stage certified the witness


def find_witness(rs: RootSystem, lam: Weight, x: Weight, enum_bound: int = 1152) -> WitnessResult:
    """Weyl element w with the w-twisted element nonvanishing at x.

    Tries the chamber reduction of x + rho, then of x - rho, then exhaustive
    enumeration.  Every candidate is certified by an exact nonzero
    evaluation before being returned; exhausting the group without a
    certified witness indicates an implementation bug and raises.
    """
    p = build_p_lambda(rs, lam)
    return find_witness_for(p, x, enum_bound=enum_bound)


def find_witness_for(p: PLambda, x: Weight, enum_bound: int = 1152) -> WitnessResult:
    rs = p.rs
    rs._check_rank(x)
    w_plus, _ = rs.antidominant_chamber(x + rs.rho)
    v = evaluate_twisted(p, w_plus, x)
    if v != 0:
        return WitnessResult(w_plus, v, "chamber(x+rho)")
    w_minus, _ = rs.antidominant_chamber(x - rs.rho)
    v = evaluate_twisted(p, w_minus, x)
    if v != 0:
        return WitnessResult(w_minus, v, "chamber(x-rho)")
    for w in rs.enumerate_weyl(bound=enum_bound):
        v = evaluate_twisted(p, w, x)
        if v != 0:
            return WitnessResult(w, v, "exhaustive")
    raise InternalCheckError(
        f"no witness found for lambda={p.lam} at x={x} over {rs.type_string()}; "
        "existence is guaranteed, so this indicates a bug"
    )


def p_lambda_report(rs: RootSystem, lam: Weight):
    """JSON-ready structural report for the element attached to lambda."""
    p = build_p_lambda(rs, lam)
    return {
        "type": rs.type_string(),
        "weight": [str(c) for c in lam.coords],
        "degree": p.degree,
        "degree_check": degree_check(p),
        "divisibility_check": divisibility_check(p),
        "factors": [
            {
                "coroot": [str(c) for c in h.coords],
                "shift": str(s),
                "text": (HPoly.linear(h) + HPoly.const(rs.rank, s)).text(),
            }
            for h, s in p.factors
        ],
        "expanded": p.expanded.text(),
        "expanded_terms": p.expanded.to_json(),
    }
