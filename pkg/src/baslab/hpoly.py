"""Polynomials on the Cartan subalgebra and the twisted Weyl action.

An HPoly is an element of the symmetric algebra on the simple coroots
h_1..h_r, stored sparsely as {exponent tuple: rational coefficient}.
Identifying these with polynomial functions on weight space, `evaluate`
substitutes the pairings with a weight, and `twist` is the unique ring
endomorphism sending each linear generator h to w(h) + <w(h) - h, rho>.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, RankMismatchError
from .rootsys import HElement, RootSystem, Weight, WeylElement


class HPoly:
    """Sparse polynomial with rational coefficients in h_1..h_rank.

    Instances are treated as immutable; all operations return new objects.
    """

    __slots__ = ("terms", "rank")

    def __init__(self, rank: int, terms=None):
        self.rank = rank
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                c = Fraction(coeff)
                if c != 0:
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def const(rank: int, c) -> "HPoly":
        c = Fraction(c)
        return HPoly(rank, {(0,) * rank: c} if c != 0 else {})

    @staticmethod
    def linear(h: HElement) -> "HPoly":
        r = h.rank
        terms = {}
        for i, c in enumerate(h.coords):
            if c != 0:
                e = [0] * r
                e[i] = 1
                terms[tuple(e)] = c
        return HPoly(r, terms)

    @staticmethod
    def variable(rank: int, i: int) -> "HPoly":
        e = [0] * rank
        e[i] = 1
        return HPoly(rank, {tuple(e): Fraction(1)})

    # -- ring operations ----------------------------------------------------------

    def _check(self, other):
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HPoly.const(self.rank, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return HPoly(self.rank, terms)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HPoly.const(self.rank, other)
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "HPoly":
        c = Fraction(c)
        if c == 0:
            return HPoly(self.rank)
        return HPoly(self.rank, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return HPoly(self.rank, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power of a polynomial")
        out = HPoly.const(self.rank, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, HPoly) and self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    # -- evaluation and twisting -----------------------------------------------------

    def evaluate(self, x: Weight) -> Fraction:
        """Value at a weight: substitute h_i by the i-th pairing coordinate."""
        if x.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} vs {x.rank}")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for xi, ei in zip(x.coords, e):
                if ei:
                    v *= xi ** ei
            total += v
        return total

    # -- text and serialization -------------------------------------------------------

    @staticmethod
    def _order_key(e):
        return (sum(e), e)

    def sorted_terms(self):
        """Terms in descending graded-lex order, the canonical output order."""
        return sorted(self.terms.items(), key=lambda kv: self._order_key(kv[0]), reverse=True)

    def leading(self):
        """(exponent, coeff) of the graded-lex leading term; None for the zero poly."""
        if not self.terms:
            return None
        e = max(self.terms, key=self._order_key)
        return e, self.terms[e]

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"h{i + 1}^{k}" if k > 1 else f"h{i + 1}" for i, k in enumerate(e) if k
            )
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

    def to_json(self):
        return [
            {"exponents": list(e), "coeff": str(c)}
            for e, c in self.sorted_terms()
        ]

    def __repr__(self):
        return f"HPoly({self.text()!r})"


def twist(rs: RootSystem, w: WeylElement, p: HPoly) -> HPoly:
    """Twisted Weyl action on polynomials: h maps to w(h) + <w(h) - h, rho>.

    This is the unique ring endomorphism with that effect on linear
    generators; it preserves total degree and satisfies the group law
    twist(u, twist(v, p)) = twist(uv, p).
    """
    if p.rank != rs.rank:
        raise RankMismatchError(f"rank {p.rank} vs root system rank {rs.rank}")
    rs._check_rank(w)
    images = []
    for i in range(rs.rank):
        wh = rs.act_on_h(w, rs.simple_coroot(i))
        shift = wh.height() - 1  # <w(h_i) - h_i, rho>, and <h_i, rho> = 1
        images.append(HPoly.linear(wh) + HPoly.const(rs.rank, shift))
    out = HPoly(rs.rank)
    pow_cache = [{0: HPoly.const(rs.rank, 1)} for _ in range(rs.rank)]
    for e, c in p.terms.items():
        term = HPoly.const(rs.rank, c)
        for i, k in enumerate(e):
            if k:
                cache = pow_cache[i]
                if k not in cache:
                    top = max(cache)
                    acc = cache[top]
                    for j in range(top + 1, k + 1):
                        acc = acc * images[i]
                        cache[j] = acc
                term = term * cache[k]
        out = out + term
    return out


def divides(d: HPoly, p: HPoly):
    """Exact division of p by a nonzero linear form d.

    Returns (True, q) with p = d*q, or (False, None).  Reduction by the
    graded-lex leading term of d, driven by a lazy-deletion max-heap so each
    step is logarithmic; for a single divisor the remainder of the reduction
    vanishes iff the division is exact.
    """
    import heapq

    if d.is_zero():
        raise DomainError("division by the zero polynomial")
    if d.total_degree() != 1:
        raise DomainError("divisor must be a linear form")
    if d.rank != p.rank:
        raise RankMismatchError(f"rank {d.rank} vs {p.rank}")
    lead_e, lead_c = d.leading()
    var = lead_e.index(1)
    rem = dict(p.terms)
    quo = {}

    def heap_key(e):
        return (-sum(e), tuple(-x for x in e))

    heap = [(heap_key(e), e) for e in rem]
    heapq.heapify(heap)
    while heap:
        _, e = heapq.heappop(heap)
        c = rem.get(e, 0)
        if c == 0:
            continue
        if e[var] == 0:
            return False, None
        del rem[e]
        qe = list(e)
        qe[var] -= 1
        qe = tuple(qe)
        qc = c / lead_c
        quo[qe] = quo.get(qe, 0) + qc
        for de, dc in d.terms.items():
            if de == lead_e:
                continue
            te = tuple(a + b for a, b in zip(qe, de))
            old = rem.get(te, 0)
            s = old - qc * dc
            if s == 0:
                rem.pop(te, None)
            else:
                if old == 0:
                    heapq.heappush(heap, (heap_key(te), te))
                rem[te] = s
    if rem:
        return False, None
    return True, HPoly(p.rank, quo)
