"""Root systems and Weyl groups for all finite Cartan types and products.

Coordinate conventions (fixed once, everything else follows):
  * weights live in fundamental-weight coordinates (omega_i),
  * Cartan-subalgebra elements live in simple-coroot coordinates (alphavee_i),
  * the pairing <h, lambda> is then the plain dot product, and
    <alphavee_i, omega_j> = delta_ij is structural.

A Weyl group element is canonicalized by its integer matrix on weight
coordinates; the generating word is kept only as a certificate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import RankMismatchError, SpecParseError

# Weyl group orders of the simple types, used to cross-check generation.
_WEYL_ORDER = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}

_POSITIVE_COUNT = {
    ("E", 6): 36,
    ("E", 7): 63,
    ("E", 8): 120,
    ("F", 4): 24,
    ("G", 2): 6,
}


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _simple_weyl_order(family, n):
    if family == "A":
        return _factorial(n + 1)
    if family in ("B", "C"):
        return (1 << n) * _factorial(n)
    if family == "D":
        return (1 << (n - 1)) * _factorial(n)
    return _WEYL_ORDER[(family, n)]


def _simple_positive_count(family, n):
    if family == "A":
        return n * (n + 1) // 2
    if family in ("B", "C"):
        return n * n
    if family == "D":
        return n * (n - 1)
    return _POSITIVE_COUNT[(family, n)]


def _simple_cartan(family, n):
    """Cartan matrix C[i][j] = <alphavee_i, alpha_j> (Bourbaki numbering)."""
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "B":
        # last simple root short: <alphavee_n, alpha_{n-1}> = -2
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)
    elif family == "C":
        # last simple root long: <alphavee_{n-1}, alpha_n> = -2
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    elif family == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif family == "G":
        link(0, 1, -1, -3)
    return c


_VALID_RANK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class Weight:
    """Weight in fundamental-weight coordinates."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def rank(self):
        return len(self.coords)

    @property
    def integral(self):
        return all(c.denominator == 1 for c in self.coords)

    def __add__(self, other):
        _same_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        _same_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.coords))

    def scale(self, c):
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.coords))

    def __str__(self):
        return ",".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class HElement:
    """Cartan-subalgebra element in simple-coroot coordinates."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def rank(self):
        return len(self.coords)

    def __add__(self, other):
        _same_rank(self, other)
        return HElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return HElement(tuple(-a for a in self.coords))

    def scale(self, c):
        c = Fraction(c)
        return HElement(tuple(c * a for a in self.coords))

    def height(self):
        """Pairing with rho: the coordinate sum."""
        return sum(self.coords)

    def __str__(self):
        return ",".join(str(c) for c in self.coords)


def pairing(h: HElement, lam: Weight) -> Fraction:
    """<h, lambda>; exact, a plain dot product in these coordinates."""
    if h.rank != lam.rank:
        raise RankMismatchError(f"rank {h.rank} vs {lam.rank}")
    return sum(a * b for a, b in zip(h.coords, lam.coords))


def _same_rank(a, b):
    if len(a.coords) != len(b.coords):
        raise RankMismatchError(f"rank {len(a.coords)} vs {len(b.coords)}")


@dataclass(frozen=True)
class WeylElement:
    """Weyl group element: integer matrix on weight coordinates plus a word.

    Two elements are equal iff their matrices are equal; the word is a
    certificate of how the element was produced and is not canonical.
    """

    matrix: tuple  # tuple of tuple of int, acts on weight coords
    word: tuple = ()  # simple reflection indices, 0-based

    @property
    def rank(self):
        return len(self.matrix)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def is_identity(self):
        n = self.rank
        return all(self.matrix[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))

    def word_str(self):
        """Human form of the word, e.g. "s1*s2*s1"; identity is "e"."""
        if not self.word:
            return "e"
        return "*".join(f"s{i + 1}" for i in self.word)


def _mat_mul_int(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _identity_mat(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


class RootSystem:
    """Root-system data for a finite type or product of finite types.

    Products are represented block-diagonally; all operations distribute
    over the blocks.
    """

    def __init__(self, type_spec):
        spec = list(type_spec)
        if not spec:
            raise SpecParseError("empty type specification", col=0)
        for fam, n in spec:
            if fam not in _VALID_RANK or not isinstance(n, int):
                raise SpecParseError(f"unknown family {fam!r}", col=0)
            if not _VALID_RANK[fam](n):
                raise SpecParseError(f"invalid rank {n} for family {fam}", col=0)
        self.type_label = tuple((fam, n) for fam, n in spec)
        self.rank = sum(n for _, n in spec)

        # block-diagonal Cartan matrix
        cartan = [[0] * self.rank for _ in range(self.rank)]
        off = 0
        self._blocks = []
        for fam, n in spec:
            c = _simple_cartan(fam, n)
            for i in range(n):
                for j in range(n):
                    cartan[off + i][off + j] = c[i][j]
            self._blocks.append((off, n))
            off += n
        self.cartan = tuple(tuple(row) for row in cartan)

        self.rho = Weight(tuple(Fraction(1) for _ in range(self.rank)))
        self.weyl_order = 1
        for fam, n in spec:
            self.weyl_order *= _simple_weyl_order(fam, n)

        self._weight_refl = [self._simple_reflection_matrix(i) for i in range(self.rank)]
        self.positive_coroots = self._generate_positive_coroots()
        expected = sum(_simple_positive_count(fam, n) for fam, n in spec)
        if len(self.positive_coroots) != expected:
            raise AssertionError(
                f"positive coroot count {len(self.positive_coroots)} != expected {expected}"
            )
        self._weyl_cache = None

    # -- construction helpers -------------------------------------------------

    def _simple_reflection_matrix(self, i):
        """Matrix of s_i on weight coordinates: lambda - lambda_i * alpha_i."""
        n = self.rank
        m = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
        for j in range(n):
            m[j][i] -= self.cartan[j][i]
        return tuple(tuple(row) for row in m)

    def _h_reflection_apply(self, i, coords):
        """s_i on simple-coroot coordinates (contragredient action)."""
        out = list(coords)
        out[i] = coords[i] - sum(coords[j] * self.cartan[j][i] for j in range(self.rank))
        return tuple(out)

    def _generate_positive_coroots(self):
        seen = set()
        frontier = []
        for i in range(self.rank):
            v = tuple(Fraction(int(k == i)) for k in range(self.rank))
            seen.add(v)
            frontier.append(v)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    w = self._h_reflection_apply(i, v)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        pos = [v for v in seen if all(c >= 0 for c in v)]
        pos.sort(key=lambda v: (sum(v), v))
        return tuple(HElement(v) for v in pos)

    # -- elements --------------------------------------------------------------

    def identity_element(self):
        return WeylElement(_identity_mat(self.rank), ())

    def simple_reflection(self, i):
        if not 0 <= i < self.rank:
            raise IndexError(f"simple reflection index {i} out of range")
        return WeylElement(self._weight_refl[i], (i,))

    def element_of_word(self, word):
        m = _identity_mat(self.rank)
        for i in word:
            m = _mat_mul_int(m, self._weight_refl[i])
        return WeylElement(m, tuple(word))

    def compose(self, w: WeylElement, u: WeylElement):
        """Product w*u acting as (w*u)(x) = w(u(x))."""
        self._check_rank(w)
        self._check_rank(u)
        return WeylElement(_mat_mul_int(w.matrix, u.matrix), w.word + u.word)

    def inverse(self, w: WeylElement):
        self._check_rank(w)
        return self.element_of_word(tuple(reversed(w.word))) if self._word_matches(w) \
            else self._inverse_by_matrix(w)

    def _word_matches(self, w):
        return self.element_of_word(w.word).matrix == w.matrix

    def _inverse_by_matrix(self, w):
        from . import linalg

        inv = linalg.inverse([list(r) for r in w.matrix])
        m = tuple(tuple(int(x) for x in row) for row in inv)
        return WeylElement(m, tuple(reversed(w.word)))

    def _check_rank(self, obj):
        if obj.rank != self.rank:
            raise RankMismatchError(f"rank {obj.rank} vs root system rank {self.rank}")

    # -- actions ---------------------------------------------------------------

    def act_on_weight(self, w: WeylElement, lam: Weight) -> Weight:
        self._check_rank(w)
        self._check_rank(lam)
        m = w.matrix
        return Weight(
            tuple(sum(m[i][j] * lam.coords[j] for j in range(self.rank)) for i in range(self.rank))
        )

    def act_on_h(self, w: WeylElement, h: HElement) -> HElement:
        """Contragredient action: <w(h), w(lambda)> = <h, lambda>."""
        self._check_rank(w)
        self._check_rank(h)
        # matrix on h-coords is transpose of the inverse weight matrix
        inv = self.inverse(w).matrix
        return HElement(
            tuple(sum(inv[j][i] * h.coords[j] for j in range(self.rank)) for i in range(self.rank))
        )

    # -- chamber combinatorics ---------------------------------------------------

    def antidominant_chamber(self, x: Weight):
        """(w, y) with y = w^{-1}(x) antidominant and w(y) = x.

        Repeatedly applies the simple reflection with the smallest index
        whose pairing with the running point is positive; each step strictly
        decreases the number of positive coroots pairing positively, so the
        loop terminates for every rational x.
        """
        self._check_rank(x)
        y = list(x.coords)
        word = []
        while True:
            for i in range(self.rank):
                if y[i] > 0:
                    word.append(i)
                    m = self._weight_refl[i]
                    y = [sum(m[r][c] * y[c] for c in range(self.rank)) for r in range(self.rank)]
                    break
            else:
                break
        w = self.element_of_word(word)
        return w, Weight(tuple(y))

    def longest_element(self) -> WeylElement:
        w, _ = self.antidominant_chamber(self.rho)
        return w

    def enumerate_weyl(self, bound: int = 1152):
        """All Weyl group elements with BFS-shortest words; |W| must be <= bound."""
        if self.weyl_order > bound:
            raise ValueError(f"Weyl group order {self.weyl_order} exceeds bound {bound}")
        if self._weyl_cache is not None:
            return list(self._weyl_cache)
        ident = self.identity_element()
        seen = {ident.matrix: ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    u = WeylElement(_mat_mul_int(w.matrix, self._weight_refl[i]), w.word + (i,))
                    if u.matrix not in seen:
                        seen[u.matrix] = u
                        nxt.append(u)
            frontier = nxt
        elements = sorted(seen.values(), key=lambda w: (len(w.word), w.word))
        if len(elements) != self.weyl_order:
            raise AssertionError("Weyl enumeration does not match the group order")
        self._weyl_cache = tuple(elements)
        return list(elements)

    def fundamental_weight(self, i):
        return Weight(tuple(Fraction(int(j == i)) for j in range(self.rank)))

    def simple_coroot(self, i):
        return HElement(tuple(Fraction(int(j == i)) for j in range(self.rank)))

    def is_dominant_integral(self, lam: Weight) -> bool:
        self._check_rank(lam)
        return all(c.denominator == 1 and c >= 0 for c in lam.coords)

    def type_string(self):
        return "x".join(f"{fam}{n}" for fam, n in self.type_label)

    def __repr__(self):
        return f"RootSystem({self.type_string()})"


_TOKEN = re.compile(r"([A-G])([0-9]+)")


def parse_type_spec(text: str):
    """Parse "A2", "B3", "A1xA1" into a list of (family, rank)."""
    parts = text.strip().split("x")
    spec = []
    col = 0
    for part in parts:
        m = _TOKEN.fullmatch(part.strip())
        if m is None:
            raise SpecParseError(f"cannot parse root-system token {part!r}", col=col)
        spec.append((m.group(1), int(m.group(2))))
        col += len(part) + 1
    return spec


def build_root_system(spec) -> RootSystem:
    """Build a RootSystem from a spec string or a list of (family, rank)."""
    if isinstance(spec, str):
        spec = parse_type_spec(spec)
    return RootSystem(spec)


def parse_rational_vector(text: str, rank: int | None = None):
    """Parse "1/2,-3,0" into a tuple of Fractions."""
    items = [t.strip() for t in text.strip().split(",")]
    out = []
    col = 0
    for t in items:
        try:
            out.append(Fraction(t))
        except (ValueError, ZeroDivisionError):
            raise SpecParseError(f"cannot parse rational {t!r}", col=col) from None
        col += len(t) + 1
    if rank is not None and len(out) != rank:
        raise RankMismatchError(f"expected {rank} coordinates, got {len(out)}")
    return tuple(out)
