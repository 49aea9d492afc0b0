"""From-first-principles cross-check of the closed-form element on A1^n.

Everything here is built directly from the Weyl algebra on the 2n-dimensional
affine space with coordinates x_j, y_j: normal-ordered arithmetic, the
symplectic Fourier automorphism on each factor, the invariant tensor of a
pair of graded pieces, and the multiplication map that lands in the
polynomial algebra on the Euler operators.  None of it consults the closed
formula it is checked against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import linalg
from .errors import DomainError, InternalCheckError, RankMismatchError
from .hpoly import HPoly
from .plambda import build_p_lambda
from .rootsys import Weight, build_root_system

# Fourier convention on each factor, fixed so that the map is an algebra
# automorphism and sends the Euler operator E to -E - 2:
#   x -> dy,  y -> -dx,  dx -> -y,  dy -> x
FOURIER_CONVENTION = {"x": ("dy", 1), "y": ("dx", -1), "dx": ("y", -1), "dy": ("x", 1)}


def _falling(a, k):
    out = 1
    for t in range(k):
        out *= a - t
    return out


class WeylOp:
    """Normal-ordered differential operator on A^{2n} with rational coefficients.

    A term key is a flat tuple (a_1, b_1, c_1, d_1, ..., a_n, b_n, c_n, d_n)
    of exponents of x_j, y_j, dx_j, dy_j; within each term every coordinate
    variable stands left of every derivative.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[tuple(e)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------------

    @staticmethod
    def zero(n):
        return WeylOp(n)

    @staticmethod
    def one(n):
        return WeylOp(n, {(0,) * (4 * n): Fraction(1)})

    @staticmethod
    def generator(n, name, j):
        """Single generator of factor j: name in {x, y, dx, dy}."""
        slot = {"x": 0, "y": 1, "dx": 2, "dy": 3}[name]
        e = [0] * (4 * n)
        e[4 * j + slot] = 1
        return WeylOp(n, {tuple(e): Fraction(1)})

    @staticmethod
    def euler(n, j):
        """Euler operator of factor j: x dx + y dy."""
        e1 = [0] * (4 * n)
        e1[4 * j + 0] = 1
        e1[4 * j + 2] = 1
        e2 = [0] * (4 * n)
        e2[4 * j + 1] = 1
        e2[4 * j + 3] = 1
        return WeylOp(n, {tuple(e1): Fraction(1), tuple(e2): Fraction(1)})

    # -- ring structure -------------------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise RankMismatchError(f"factor count {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return WeylOp(self.n, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return WeylOp(self.n)
        return WeylOp(self.n, {e: c * v for e, v in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        """Normal-ordered product via [d_u, u] = 1 on each coordinate pair."""
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        n = self.n
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                # partial products over factors; each factor may branch
                partial = [((), c1 * c2)]
                for j in range(n):
                    a1, b1, cc1, d1 = e1[4 * j: 4 * j + 4]
                    a2, b2, cc2, d2 = e2[4 * j: 4 * j + 4]
                    branches = []
                    for k in range(min(cc1, a2) + 1):
                        ck = comb(cc1, k) * _falling(a2, k)
                        for l in range(min(d1, b2) + 1):
                            cl = comb(d1, l) * _falling(b2, l)
                            branches.append(
                                (
                                    (a1 + a2 - k, b1 + b2 - l, cc1 + cc2 - k, d1 + d2 - l),
                                    ck * cl,
                                )
                            )
                    partial = [
                        (pe + be, pc * bc) for pe, pc in partial for be, bc in branches if bc != 0
                    ]
                for e, c in partial:
                    s = out.get(e, 0) + c
                    if s == 0:
                        out.pop(e, None)
                    else:
                        out[e] = s
        return WeylOp(n, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise DomainError("negative power of an operator")
        out = WeylOp.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, WeylOp) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def commutator(self, other):
        return self * other - other * self

    # -- grading ------------------------------------------------------------------

    @staticmethod
    def term_weight(e, n):
        """Weight in Z^n of a monomial: (deg x + deg y - deg dx - deg dy) per factor."""
        return tuple(e[4 * j] + e[4 * j + 1] - e[4 * j + 2] - e[4 * j + 3] for j in range(n))

    def weights(self):
        return {self.term_weight(e, self.n) for e in self.terms}

    def is_homogeneous_of_weight(self, wt):
        return all(self.term_weight(e, self.n) == tuple(wt) for e in self.terms)

    # -- text ------------------------------------------------------------------------

    _SLOT_NAMES = ("x", "y", "dx", "dy")

    @staticmethod
    def _order_key(e):
        return (sum(e), e)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self._order_key(kv[0]), reverse=True)

    def text(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            names = []
            for j in range(self.n):
                for s in range(4):
                    k = e[4 * j + s]
                    if k:
                        stem = f"{self._SLOT_NAMES[s]}{j + 1}"
                        names.append(f"{stem}^{k}" if k > 1 else stem)
            mono = "*".join(names)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"WeylOp({self.text()!r})"


def fourier(op: WeylOp, j: int) -> WeylOp:
    """Fourier automorphism of factor j, identity on the other factors.

    Generator images follow FOURIER_CONVENTION; a normal-ordered monomial is
    mapped by substituting generator images in its written order and
    re-normal-ordering the factor-j part.
    """
    if not 0 <= j < op.n:
        raise DomainError(f"factor index {j} out of range")
    n = op.n
    out = WeylOp.zero(n)
    for e, c in op.terms.items():
        a, b, cc, d = e[4 * j: 4 * j + 4]
        # images: x^a y^b dx^c dy^d -> dy^a (-dx)^b (-y)^c x^d
        sign = -1 if (b + cc) % 2 else 1
        left = [0] * (4 * n)
        left[4 * j + 3] = a  # dy^a
        left[4 * j + 2] = b  # dx^b
        right = [0] * (4 * n)
        right[4 * j + 1] = cc  # y^c
        right[4 * j + 0] = d   # x^d
        prod = WeylOp(n, {tuple(left): Fraction(sign * 1)}) * WeylOp(n, {tuple(right): Fraction(1)})
        rest = list(e)
        rest[4 * j: 4 * j + 4] = [0, 0, 0, 0]
        carrier = WeylOp(n, {tuple(rest): c})
        out = out + carrier * prod
    return out


def fourier_all(op: WeylOp) -> WeylOp:
    for j in range(op.n):
        op = fourier(op, j)
    return op


# -- graded pieces and the invariant tensor --------------------------------------------


@dataclass(frozen=True)
class PolyVec:
    """Homogeneous polynomial in the x_j, y_j of fixed multidegree."""

    n: int
    multidegree: tuple
    terms: tuple  # of (exponents (a_1, b_1, ..., a_n, b_n), Fraction)

    def as_weyl_op(self):
        out = {}
        for e, c in self.terms:
            full = []
            for j in range(self.n):
                full += [e[2 * j], e[2 * j + 1], 0, 0]
            out[tuple(full)] = c
        return WeylOp(self.n, out)


def graded_basis(lam) -> list:
    """Monomial basis of the graded piece of multidegree lam; size prod(lam_j + 1)."""
    lam = tuple(int(v) for v in lam)
    if any(v < 0 for v in lam):
        raise DomainError("multidegree must be nonnegative")
    n = len(lam)
    basis = []
    for ks in itertools.product(*(range(v + 1) for v in lam)):
        e = []
        for j in range(n):
            e += [ks[j], lam[j] - ks[j]]
        basis.append(PolyVec(n=n, multidegree=lam, terms=(((tuple(e)), Fraction(1)),)))
    return basis


def _raise_op(e, j, n):
    """Action of x_j d/dy_j on a monomial exponent tuple: list of (exps, coeff)."""
    b = e[2 * j + 1]
    if b == 0:
        return []
    out = list(e)
    out[2 * j] += 1
    out[2 * j + 1] -= 1
    return [(tuple(out), Fraction(b))]


def _lower_op(e, j, n):
    """Action of y_j d/dx_j on a monomial exponent tuple."""
    a = e[2 * j]
    if a == 0:
        return []
    out = list(e)
    out[2 * j] -= 1
    out[2 * j + 1] += 1
    return [(tuple(out), Fraction(a))]


@dataclass(frozen=True)
class InvariantTensor:
    """Generator of the joint kernel of the diagonal raising/lowering operators."""

    lam: tuple
    basis: tuple  # monomial exponent tuples, shared by both tensor legs
    entries: tuple  # of ((left index, right index), Fraction)

    @property
    def dimension(self):
        return len(self.basis)


def invariant_element(lam) -> InvariantTensor:
    """Solve the diagonal-action linear system on the tensor square.

    The joint kernel of the 4n diagonal operators is also killed by their
    commutators, so it lies in the subspace of tensor pairs whose per-factor
    gradings cancel; the system is solved on that subspace and the solution
    space is asserted to be one-dimensional.
    """
    lam = tuple(int(v) for v in lam)
    n = len(lam)
    mono = [e for e, _ in (pv.terms[0] for pv in graded_basis(lam))]
    index = {e: i for i, e in enumerate(mono)}

    def grade(e):
        return tuple(e[2 * j] - e[2 * j + 1] for j in range(n))

    pairs = [
        (i, k)
        for i, ei in enumerate(mono)
        for k, ek in enumerate(mono)
        if all(a + b == 0 for a, b in zip(grade(ei), grade(ek)))
    ]
    pair_index = {p: t for t, p in enumerate(pairs)}

    rows = []
    for j in range(n):
        for op in (_raise_op, _lower_op):
            # one constraint row per tensor-basis pair hit by the image
            img = {}
            for t, (i, k) in enumerate(pairs):
                for e2, c in op(mono[i], j, n):
                    cell = img.setdefault((index[e2], k), {})
                    cell[t] = cell.get(t, 0) + c
                for e2, c in op(mono[k], j, n):
                    cell = img.setdefault((i, index[e2]), {})
                    cell[t] = cell.get(t, 0) + c
            for key in sorted(img):
                row = [Fraction(0)] * len(pairs)
                for t, c in img[key].items():
                    row[t] = c
                rows.append(row)

    kernel = linalg.nullspace(rows, n_cols=len(pairs))
    if len(kernel) != 1:
        raise InternalCheckError(
            f"invariant space for lam={lam} has dimension {len(kernel)}, expected 1"
        )
    vec = kernel[0]
    # sign convention: coefficient of (all-x monomial) (x) (all-y monomial) positive
    all_x = index[tuple(v for d in lam for v in (d, 0))]
    all_y = index[tuple(v for d in lam for v in (0, d))]
    anchor = pair_index[(all_x, all_y)]
    if vec[anchor] < 0:
        vec = [-c for c in vec]
    entries = tuple(
        ((pairs[t][0], pairs[t][1]), c) for t, c in enumerate(vec) if c != 0
    )
    return InvariantTensor(lam=lam, basis=tuple(mono), entries=entries)


def m_of_c(lam) -> WeylOp:
    """Image of the invariant tensor under f (x) g -> f * Fourier(g).

    The result is asserted to be homogeneous of weight zero.
    """
    inv = invariant_element(lam)
    n = len(inv.lam)
    total = WeylOp.zero(n)
    for (i, k), c in inv.entries:
        left = _mono_weyl(inv.basis[i], n)
        right = _mono_weyl(inv.basis[k], n)
        total = total + (left * fourier_all(right)).scale(c)
    if not total.is_homogeneous_of_weight((0,) * n):
        raise InternalCheckError(f"multiplication image for lam={lam} is not of weight zero")
    return total


def _mono_weyl(e, n):
    full = []
    for j in range(n):
        full += [e[2 * j], e[2 * j + 1], 0, 0]
    return WeylOp(n, {tuple(full): Fraction(1)})


def substitute_euler(q: HPoly, n: int) -> WeylOp:
    """Evaluate a polynomial in h_1..h_n at the Euler operators E_1..E_n."""
    if q.rank != n:
        raise RankMismatchError(f"polynomial rank {q.rank} vs factor count {n}")
    cache = [{0: WeylOp.one(n)} for _ in range(n)]
    eulers = [WeylOp.euler(n, j) for j in range(n)]
    out = WeylOp.zero(n)
    for e, c in q.terms.items():
        term = WeylOp.one(n).scale(c)
        for j, k in enumerate(e):
            if k:
                cj = cache[j]
                if k not in cj:
                    top = max(cj)
                    acc = cj[top]
                    for t in range(top + 1, k + 1):
                        acc = acc * eulers[j]
                        cj[t] = acc
                term = term * cj[k]
        out = out + term
    return out


def match_euler(a: WeylOp, q: HPoly):
    """Test a = c * q(E) for a nonzero rational c; returns (True, c) or (False, 0)."""
    target = substitute_euler(q, a.n)
    if target.is_zero():
        return (a.is_zero(), Fraction(0))
    lead = max(target.terms, key=WeylOp._order_key)
    if lead not in a.terms:
        return (False, Fraction(0))
    c = a.terms[lead] / target.terms[lead]
    if target.scale(c) == a:
        return (True, c)
    return (False, Fraction(0))


def oracle_verify(lam) -> dict:
    """Full pipeline: invariant tensor, multiplication map, closed-form match."""
    lam = tuple(int(v) for v in lam)
    if any(v < 0 for v in lam):
        raise DomainError("multidegree must be nonnegative")
    n = len(lam)
    rs = build_root_system([("A", 1)] * n)
    p = build_p_lambda(rs, Weight(tuple(Fraction(v) for v in lam)))
    inv = invariant_element(lam)
    oracle = WeylOp.zero(n)
    for (i, k), c in inv.entries:
        left = _mono_weyl(inv.basis[i], n)
        right = _mono_weyl(inv.basis[k], n)
        oracle = oracle + (left * fourier_all(right)).scale(c)
    if not oracle.is_homogeneous_of_weight((0,) * n):
        raise InternalCheckError(f"multiplication image for lam={lam} is not of weight zero")
    ok, scalar = match_euler(oracle, p.expanded)
    return {
        "lambda": list(lam),
        "dim_invariant_space": 1,
        "scalar": str(scalar),
        "pass": bool(ok and scalar != 0),
        "formula": p.expanded.text(),
        "oracle_canonical": oracle.text(),
    }
