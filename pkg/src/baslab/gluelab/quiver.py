"""Path-algebra quotients from quiver specifications.

Spec format (JSON-compatible dict):

    {
      "vertices": ["v1", "v2"],
      "arrows": [{"name": "a", "src": "v1", "tgt": "v2"}, ...],
      "relations": [[{"coeff": "1", "path": ["a", "b"]}], ...],
      "idempotents": "vertices"            # or {"name": [coords]}
    }

A path is a traversal list read left to right (the first arrow is applied
first); the corresponding algebra element composes right to left, matching
the left-module convention.  Relations must be length-homogeneous (all
paths in one relation share source, target, and length): the relation ideal
is then graded by path length and the quotient is computed exactly by
row reduction degree by degree, with a length cutoff guarding
infinite-dimensional inputs.
"""

from __future__ import annotations

from fractions import Fraction

from .. import linalg
from ..errors import DomainError, SpecParseError
from .algebra import FDAlgebra, FDModule


class _Quiver:
    def __init__(self, spec):
        try:
            self.vertices = list(spec["vertices"])
            arrows = list(spec["arrows"])
        except (KeyError, TypeError) as exc:
            raise SpecParseError(f"quiver spec missing field: {exc}") from None
        if len(set(self.vertices)) != len(self.vertices):
            raise SpecParseError("duplicate vertex names")
        self.arrows = {}
        for a in arrows:
            name, src, tgt = a["name"], a["src"], a["tgt"]
            if name in self.arrows or name in self.vertices:
                raise SpecParseError(f"duplicate name {name!r}")
            if src not in self.vertices or tgt not in self.vertices:
                raise SpecParseError(f"arrow {name!r} uses unknown vertex")
            self.arrows[name] = (src, tgt)

    def path_src(self, path):
        return self.arrows[path[0]][0] if path else None

    def path_tgt(self, path):
        return self.arrows[path[-1]][1] if path else None

    def paths_of_length(self, n):
        """All composable traversals of length n, in deterministic order."""
        if n == 0:
            return [(v,) for v in self.vertices]  # trivial paths tagged by vertex
        out = [(a,) for a in sorted(self.arrows)]
        for _ in range(n - 1):
            nxt = []
            for p in out:
                tail = self.arrows[p[-1]][1]
                for a in sorted(self.arrows):
                    if self.arrows[a][0] == tail:
                        nxt.append(p + (a,))
            out = nxt
        return out


def algebra_from_quiver(spec, cutoff: int = 12) -> FDAlgebra:
    """Finite-dimensional path-algebra quotient from a quiver spec."""
    q = _Quiver(spec)
    relations = []
    for rel in spec.get("relations", []):
        combo = []
        src = tgt = length = None
        for term in rel:
            path = tuple(term["path"])
            coeff = Fraction(str(term.get("coeff", "1")))
            if not path:
                raise SpecParseError("empty path in relation")
            for a, b in zip(path, path[1:]):
                if q.arrows[a][1] != q.arrows[b][0]:
                    raise SpecParseError(f"relation path {list(path)} is not composable")
            s, t, ln = q.arrows[path[0]][0], q.arrows[path[-1]][1], len(path)
            if src is None:
                src, tgt, length = s, t, ln
            elif (s, t, ln) != (src, tgt, length):
                raise DomainError(
                    "relations must be length-homogeneous with equal endpoints; "
                    f"offending relation {rel}"
                )
            combo.append((path, coeff))
        if combo:
            relations.append((length, combo))

    # ideal span per length, as row vectors over the path list of that length
    paths_by_len = {0: q.paths_of_length(0)}
    index_by_len = {0: {p: i for i, p in enumerate(paths_by_len[0])}}

    def ensure_length(n):
        for m in range(max(paths_by_len) + 1, n + 1):
            paths_by_len[m] = q.paths_of_length(m)
            index_by_len[m] = {p: i for i, p in enumerate(paths_by_len[m])}

    def ideal_rows(n):
        rows = []
        ensure_length(n)
        idx = index_by_len[n]
        npaths = len(paths_by_len[n])
        for length, combo in relations:
            extra = n - length
            if extra < 0:
                continue
            rel_src = q.arrows[combo[0][0][0]][0]
            rel_tgt = q.arrows[combo[0][0][-1]][1]
            for pre_len in range(extra + 1):
                post_len = extra - pre_len
                ensure_length(max(pre_len, post_len))
                pres = [p for p in paths_by_len[pre_len]
                        if (pre_len == 0 and p[0] == rel_src)
                        or (pre_len > 0 and q.path_tgt(p) == rel_src)]
                posts = [p for p in paths_by_len[post_len]
                         if (post_len == 0 and p[0] == rel_tgt)
                         or (post_len > 0 and q.path_src(p) == rel_tgt)]
                for pre in pres:
                    pre_part = () if pre_len == 0 else pre
                    for post in posts:
                        post_part = () if post_len == 0 else post
                        row = [Fraction(0)] * npaths
                        for path, coeff in combo:
                            full = pre_part + path + post_part
                            row[idx[full]] += coeff
                        if any(c != 0 for c in row):
                            rows.append(row)
        return rows

    # find the nilpotency length: all paths of that length lie in the ideal
    top = None
    for n in range(1, cutoff + 1):
        ensure_length(n)
        if not paths_by_len[n]:
            top = n
            break
        rows = ideal_rows(n)
        if rows and linalg.rank(rows) == len(paths_by_len[n]):
            top = n
            break
    if top is None:
        raise DomainError(
            f"path algebra is not finite dimensional within length cutoff {cutoff}"
        )

    # per length < top: reduction data and surviving basis paths
    basis = []  # (length, path)
    reducers = {}  # length -> (red rows, pivot cols, free cols)
    for n in range(top):
        ensure_length(n)
        rows = ideal_rows(n) if n > 0 else []
        red, piv = linalg.rref(rows) if rows else ([], [])
        npaths = len(paths_by_len[n])
        free = [c for c in range(npaths) if c not in set(piv)]
        reducers[n] = (red, piv, free)
        for c in free:
            basis.append((n, paths_by_len[n][c]))

    pos = {bp: i for i, bp in enumerate(basis)}
    dim = len(basis)

    def reduce_path(n, path):
        """Coordinates of a path class in the global basis."""
        out = [Fraction(0)] * dim
        if n >= top:
            return out
        red, piv, free = reducers[n]
        idx = index_by_len[n]
        v = [Fraction(0)] * len(paths_by_len[n])
        v[idx[path]] = Fraction(1)
        for row, c in zip(red, piv):
            if v[c] != 0:
                f = v[c]
                v = [a - f * b for a, b in zip(v, row)]
        for c in free:
            if v[c] != 0:
                out[pos[(n, paths_by_len[n][c])]] = v[c]
        return out

    def concat(bp1, bp2):
        """Product of two basis path classes: class(bp1) * class(bp2).

        In traversal terms the product runs bp2 first, then bp1.
        """
        (n1, p1), (n2, p2) = bp1, bp2
        if n1 == 0 and n2 == 0:
            return reduce_path(0, p1) if p1 == p2 else [Fraction(0)] * dim
        if n1 == 0:
            return reduce_path(n2, p2) if q.path_tgt(p2) == p1[0] else [Fraction(0)] * dim
        if n2 == 0:
            return reduce_path(n1, p1) if q.path_src(p1) == p2[0] else [Fraction(0)] * dim
        if q.path_tgt(p2) != q.path_src(p1):
            return [Fraction(0)] * dim
        return reduce_path(n1 + n2, p2 + p1)

    # products of basis paths reach length 2*(top-1); classes of length >= top vanish
    structure = [[concat(b1, b2) for b2 in basis] for b1 in basis]

    def label(bp):
        n, p = bp
        if n == 0:
            return f"e_{p[0]}"
        return "*".join(reversed(p))

    labels = [label(bp) for bp in basis]
    unit = [Fraction(0)] * dim
    for v in q.vertices:
        unit[pos[(0, (v,))]] += 1

    idem_spec = spec.get("idempotents", "vertices")
    if idem_spec == "vertices":
        idems = {}
        for v in q.vertices:
            vec = [Fraction(0)] * dim
            vec[pos[(0, (v,))]] = Fraction(1)
            idems[f"e_{v}"] = vec
        complete = True
    else:
        idems = {name: [Fraction(str(c)) for c in coords]
                 for name, coords in idem_spec.items()}
        complete = False
    return FDAlgebra(labels, structure, unit, idempotents=idems,
                     orthogonal_complete=complete)


# -- built-in examples -----------------------------------------------------------------

_TWO_CYCLE = {
    "vertices": ["1", "2"],
    # x12 runs 2 -> 1 and x21 runs 1 -> 2, so e_i * x_ij = x_ij as elements
    "arrows": [
        {"name": "x12", "src": "2", "tgt": "1"},
        {"name": "x21", "src": "1", "tgt": "2"},
    ],
    "idempotents": "vertices",
}


def builtin_examples(cutoff: int = 12):
    """The three standard two-vertex algebras used throughout the test suite.

    tildeA kills the loop through vertex 2 at vertex 1 (dimension 5), hatA
    additionally kills the loop at vertex 2 (dimension 4), and
    A_free_truncated keeps both loops but kills all paths of length three
    (dimension 6).
    """
    tilde = dict(_TWO_CYCLE)
    tilde["relations"] = [[{"coeff": "1", "path": ["x21", "x12"]}]]
    hat = dict(_TWO_CYCLE)
    hat["relations"] = [
        [{"coeff": "1", "path": ["x21", "x12"]}],
        [{"coeff": "1", "path": ["x12", "x21"]}],
    ]
    trunc = dict(_TWO_CYCLE)
    trunc["relations"] = [
        [{"coeff": "1", "path": ["x21", "x12", "x21"]}],
        [{"coeff": "1", "path": ["x12", "x21", "x12"]}],
    ]
    return {
        "A_free_truncated": algebra_from_quiver(trunc, cutoff),
        "tildeA": algebra_from_quiver(tilde, cutoff),
        "hatA": algebra_from_quiver(hat, cutoff),
    }


def builtin_test_modules(A: FDAlgebra, example_name: str):
    """Six-module test set: simples, projectives, a non-split extension, regular.

    The non-split extensions are given by explicit matrices: a dimension-3
    module with two socle-covering generators for hatA, and the radical
    series quotient of the big projective for tildeA and the truncation.
    """
    from .algebra import left_subspace_basis, regular_module, simple_modules, submodule

    simples = simple_modules(A)
    reg = regular_module(A)
    mods = [("S1", simples["e_1"]), ("S2", simples["e_2"])]
    for w in ("e_1", "e_2"):
        ae = left_subspace_basis(A, A.idempotents[w], "Ae")
        mods.append((f"P{w[-1]}", submodule(reg, ae).module))
    if example_name == "hatA":
        spec = {
            "dim": 3,
            "action": {
                "e_1": [[0, 0, 0], [0, 0, 0], [0, 0, 1]],
                "e_2": [[1, 0, 0], [0, 1, 0], [0, 0, 0]],
                "x12": [[0, 0, 0], [0, 0, 0], [1, 1, 0]],
                "x21": [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
            },
        }
    else:
        # uniserial quotient with top at vertex 2 and socle at vertex 1
        base = {
            "e_1": [[0, 0], [0, 1]],
            "e_2": [[1, 0], [0, 0]],
            "x12": [[0, 0], [1, 0]],
            "x21": [[0, 0], [0, 0]],
        }
        extra = {lab: [[0, 0], [0, 0]] for lab in A.labels if lab not in base}
        spec = {"dim": 2, "action": {**base, **extra}}
    mods.append(("nonsplit", module_from_spec(A, spec)))
    mods.append(("regular", reg))
    return mods


def module_from_spec(A: FDAlgebra, spec) -> FDModule:
    """Module from {dim, action: {label: matrix}}.

    Actions must be given for every algebra basis label; matrices are lists
    of rows of rationals (strings or numbers).
    """
    try:
        dim = int(spec["dim"])
        action_spec = spec["action"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecParseError(f"module spec missing field: {exc}") from None
    action = []
    for lab in A.labels:
        if lab not in action_spec:
            raise SpecParseError(f"module spec missing action for basis element {lab!r}")
        mat = [[Fraction(str(x)) for x in row] for row in action_spec[lab]]
        if len(mat) != dim or any(len(r) != dim for r in mat):
            raise SpecParseError(f"action matrix for {lab!r} is not {dim}x{dim}")
        action.append(mat)
    return FDModule(A, dim, action)
