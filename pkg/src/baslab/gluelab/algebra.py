"""Finite-dimensional algebras by structure constants, and their modules.

Everything is exact linear algebra over the rationals.  An algebra is a
basis with structure constants, a unit vector, and a named list of
distinguished idempotents; a module is a tuple of action matrices.  The
corner functors (restriction, coinduction, induction at an idempotent) are
materialized as explicit modules together with the natural maps the gluing
machinery needs.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .. import linalg
from ..errors import DomainError, InternalCheckError


def _frac_matrix(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _frac_vector(v):
    return tuple(Fraction(x) for x in v)


class FDAlgebra:
    """Associative unital algebra over Q given by structure constants.

    structure[i][j] is the coordinate vector of basis[i] * basis[j].
    Associativity, the unit laws, and idempotency of every distinguished
    idempotent are checked on construction.
    """

    def __init__(self, labels, structure, unit, idempotents=None,
                 orthogonal_complete=False):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.structure = tuple(
            tuple(_frac_vector(structure[i][j]) for j in range(self.dim))
            for i in range(self.dim)
        )
        self.unit = _frac_vector(unit)
        self.idempotents = {name: _frac_vector(v) for name, v in (idempotents or {}).items()}
        self.orthogonal_complete = orthogonal_complete
        self._left_mult = [self.left_mult_matrix(self.basis_vector(i)) for i in range(self.dim)]
        self._validate()

    # -- element arithmetic ----------------------------------------------------

    def basis_vector(self, i):
        return tuple(Fraction(int(j == i)) for j in range(self.dim))

    def multiply(self, u, v):
        out = [Fraction(0)] * self.dim
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                c = ui * vj
                for k, s in enumerate(self.structure[i][j]):
                    if s != 0:
                        out[k] += c * s
        return tuple(out)

    def left_mult_matrix(self, u):
        """Matrix of v -> u*v in the basis."""
        cols = [self.multiply(u, self.basis_vector(j)) for j in range(self.dim)]
        return tuple(tuple(cols[j][k] for j in range(self.dim)) for k in range(self.dim))

    def is_idempotent(self, v):
        return self.multiply(v, v) == _frac_vector(v)

    def element_str(self, v):
        parts = []
        for c, lab in zip(v, self.labels):
            if c == 0:
                continue
            if c == 1:
                parts.append(lab)
            else:
                parts.append(f"{c}*{lab}")
        return " + ".join(parts) if parts else "0"

    def _validate(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = self.multiply(self.structure[i][j], self.basis_vector(k))
                    right = self.multiply(self.basis_vector(i), self.structure[j][k])
                    if left != right:
                        raise DomainError(
                            f"structure constants not associative at "
                            f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                        )
        for i in range(n):
            b = self.basis_vector(i)
            if self.multiply(self.unit, b) != b or self.multiply(b, self.unit) != b:
                raise DomainError(f"unit law fails on basis element {self.labels[i]}")
        for name, e in self.idempotents.items():
            if not self.is_idempotent(e):
                raise DomainError(f"element {name} is not idempotent")
        if self.orthogonal_complete:
            total = [Fraction(0)] * n
            for e in self.idempotents.values():
                total = [a + b for a, b in zip(total, e)]
            if tuple(total) != self.unit:
                raise DomainError("idempotents flagged complete do not sum to the unit")
            for (n1, e1), (n2, e2) in itertools.combinations(self.idempotents.items(), 2):
                if any(c != 0 for c in self.multiply(e1, e2)) or \
                        any(c != 0 for c in self.multiply(e2, e1)):
                    raise DomainError(f"idempotents {n1}, {n2} are not orthogonal")

    # -- radical (exact, characteristic zero) -----------------------------------

    def trace_form(self):
        """Gram matrix of (u, v) -> trace of left multiplication by u*v."""
        traces = [sum(self._left_mult[m][k][k] for k in range(self.dim))
                  for m in range(self.dim)]
        return [
            [sum(self.structure[i][j][m] * traces[m] for m in range(self.dim))
             for j in range(self.dim)]
            for i in range(self.dim)
        ]

    def radical_basis(self):
        """Echelon basis of the Jacobson radical (kernel of the trace form)."""
        return [
            tuple(v) for v in linalg.nullspace(self.trace_form(), n_cols=self.dim)
        ]

    def __repr__(self):
        return f"FDAlgebra(dim={self.dim}, labels={list(self.labels)})"


class FDModule:
    """Left module over an FDAlgebra: one action matrix per basis element."""

    def __init__(self, algebra: FDAlgebra, dim: int, action, validate=True):
        self.algebra = algebra
        self.dim = dim
        self.action = tuple(_frac_matrix(m) for m in action)
        if validate:
            self._validate()

    def _validate(self):
        A = self.algebra
        if len(self.action) != A.dim:
            raise DomainError("one action matrix per algebra basis element required")
        if self.dim == 0:
            return
        for m in self.action:
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise DomainError("action matrix has wrong shape")
        unit = self.act(A.unit)
        if not linalg.mat_eq(unit, linalg.identity(self.dim)):
            raise DomainError("unit does not act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = linalg.mat_mul(self.action[i], self.action[j])
                rhs = self.act(A.structure[i][j])
                if not linalg.mat_eq(lhs, rhs):
                    raise DomainError(
                        f"action violates structure constants at "
                        f"({A.labels[i]}, {A.labels[j]})"
                    )

    def act(self, u):
        """Action matrix of an algebra element given by coordinates."""
        out = linalg.zeros(self.dim, self.dim)
        for i, c in enumerate(u):
            if c != 0:
                out = linalg.mat_add(out, linalg.mat_scale(c, self.action[i]))
        return out

    def __repr__(self):
        return f"FDModule(dim={self.dim} over dim-{self.algebra.dim} algebra)"


def regular_module(A: FDAlgebra) -> FDModule:
    return FDModule(A, A.dim, [A._left_mult[i] for i in range(A.dim)], validate=False)


def zero_module(A: FDAlgebra) -> FDModule:
    return FDModule(A, 0, [[] for _ in range(A.dim)], validate=False)


def image_basis(mat):
    """Echelon basis of the column space, as vectors."""
    return [tuple(r) for r in linalg.row_space_basis(linalg.transpose(mat))]


@dataclass
class Submodule:
    module: FDModule
    inclusion: tuple  # rows: basis of the subspace in ambient coordinates


def submodule(M: FDModule, rows) -> Submodule:
    """Module structure on an action-stable subspace; raises if not stable."""
    basis = [tuple(r) for r in linalg.row_space_basis([list(r) for r in rows])] if rows else []
    d = len(basis)
    if d == 0:
        return Submodule(zero_module(M.algebra), ())
    solver = linalg.stack_solve_matrix(basis)
    action = []
    for i in range(M.algebra.dim):
        cols = []
        for v in basis:
            img = linalg.mat_vec(M.action[i], list(v))
            coords = linalg.mat_vec(solver, img)
            check = [sum(basis[s][t] * coords[s] for s in range(d)) for t in range(M.dim)]
            if check != img:
                raise DomainError("subspace is not stable under the action")
            cols.append(coords)
        action.append([[cols[j][k] for j in range(d)] for k in range(d)])
    return Submodule(FDModule(M.algebra, d, action, validate=False), tuple(basis))


@dataclass
class QuotientModule:
    module: FDModule
    projection: tuple  # matrix ambient -> quotient coordinates
    lift: tuple  # rows: lifts of the quotient basis in ambient coordinates


def quotient_module(M: FDModule, sub_rows) -> QuotientModule:
    """Quotient of M by the submodule spanned by sub_rows."""
    red, piv = linalg.rref([list(r) for r in sub_rows]) if sub_rows else ([], [])
    piv_set = set(piv)
    free = [c for c in range(M.dim) if c not in piv_set]
    d = len(free)

    def reduce_vec(v):
        v = list(v)
        for row, c in zip(red, piv):
            if v[c] != 0:
                f = v[c]
                v = [a - f * b for a, b in zip(v, row)]
        return [v[c] for c in free]

    proj = [reduce_vec([Fraction(int(k == j)) for k in range(M.dim)]) for j in range(M.dim)]
    proj = linalg.transpose(proj)  # quotient-dim x ambient-dim
    lift = [tuple(Fraction(int(k == c)) for k in range(M.dim)) for c in free]
    action = []
    for i in range(M.algebra.dim):
        cols = [linalg.mat_vec(proj, linalg.mat_vec(M.action[i], list(l))) for l in lift]
        action.append([[cols[j][k] for j in range(d)] for k in range(d)])
    return QuotientModule(FDModule(M.algebra, d, action, validate=False),
                          tuple(tuple(r) for r in proj), tuple(lift))


def direct_sum(A: FDAlgebra, modules) -> tuple:
    """(sum module, offsets); offsets[i] is the start of block i."""
    offsets = []
    total = 0
    for m in modules:
        offsets.append(total)
        total += m.dim
    action = []
    for i in range(A.dim):
        mat = linalg.zeros(total, total)
        for off, m in zip(offsets, modules):
            for r in range(m.dim):
                for c in range(m.dim):
                    mat[off + r][off + c] = m.action[i][r][c]
        action.append(mat)
    return FDModule(A, total, action, validate=False), offsets


def hom_space(M: FDModule, N: FDModule):
    """Basis of module homomorphisms M -> N, as matrices (N.dim x M.dim)."""
    if M.algebra is not N.algebra and M.algebra.labels != N.algebra.labels:
        raise DomainError("modules over different algebras")
    if M.dim == 0 or N.dim == 0:
        return []
    rows = []
    # F act_M(b) = act_N(b) F for every basis element b
    for i in range(M.algebra.dim):
        am = M.action[i]
        an = N.action[i]
        for r in range(N.dim):
            for c in range(M.dim):
                row = [Fraction(0)] * (N.dim * M.dim)
                for k in range(M.dim):
                    row[r * M.dim + k] += am[k][c]
                for k in range(N.dim):
                    row[k * M.dim + c] -= an[r][k]
                rows.append(row)
    basis = linalg.nullspace(rows, n_cols=N.dim * M.dim)
    return [
        [[v[r * M.dim + c] for c in range(M.dim)] for r in range(N.dim)]
        for v in basis
    ]


def hom_dim(M: FDModule, N: FDModule) -> int:
    return len(hom_space(M, N))


def is_isomorphic(M: FDModule, N: FDModule, seed: int = 7, tries: int = 80) -> bool:
    """Exact isomorphism test: search the Hom space for an invertible map.

    Over an infinite field a generic element of the Hom space of isomorphic
    modules is invertible, so a small randomized search with a deterministic
    seed finds one quickly; a miss only errs toward False.
    """
    if M.dim != N.dim:
        return False
    if M.dim == 0:
        return True
    homs = hom_space(M, N)
    if not homs:
        return False
    if hom_dim(N, M) != len(homs):
        return False
    for h in homs:
        if linalg.inverse(h) is not None:
            return True
    rng = random.Random(seed)
    for _ in range(tries):
        coeffs = [Fraction(rng.randint(-3, 3)) for _ in homs]
        cand = linalg.zeros(N.dim, M.dim)
        for c, h in zip(coeffs, homs):
            if c != 0:
                cand = linalg.mat_add(cand, linalg.mat_scale(c, h))
        if linalg.inverse(cand) is not None:
            return True
    return False


# -- corner algebras and the three functors ------------------------------------------


@dataclass
class Corner:
    """Corner algebra eAe with its embedding data.

    basis rows express the corner basis inside A; e_coords are the corner
    coordinates of e itself (the corner unit).
    """

    parent: FDAlgebra
    e: tuple
    algebra: FDAlgebra
    basis: tuple  # rows in A coordinates
    solver: tuple  # left inverse: A-coordinates of corner elements -> corner coords


def corner_algebra(A: FDAlgebra, e) -> Corner:
    e = _frac_vector(e if not isinstance(e, str) else A.idempotents[e])
    if not A.is_idempotent(e):
        raise DomainError("corner requires an idempotent element")
    products = [A.multiply(A.multiply(e, A.basis_vector(i)), e) for i in range(A.dim)]
    basis = [tuple(r) for r in linalg.row_space_basis([list(p) for p in products])]
    k = len(basis)
    if k == 0:
        raise DomainError("corner at the zero idempotent is empty")
    solver = linalg.stack_solve_matrix(basis)
    structure = []
    for u in basis:
        row = []
        for v in basis:
            prod = A.multiply(u, v)
            row.append(tuple(linalg.mat_vec(solver, list(prod))))
        structure.append(tuple(row))
    unit = tuple(linalg.mat_vec(solver, list(e)))
    labels = [f"c{i + 1}" for i in range(k)]
    corner = FDAlgebra(labels, structure, unit)
    return Corner(parent=A, e=e, algebra=corner, basis=tuple(basis),
                  solver=tuple(tuple(r) for r in solver))


def left_subspace_basis(A: FDAlgebra, e, side: str):
    """Echelon basis of eA (side="left-mult") or Ae (side="right-mult")."""
    vs = []
    for i in range(A.dim):
        b = A.basis_vector(i)
        vs.append(A.multiply(e, b) if side == "eA" else A.multiply(b, e))
    return [tuple(r) for r in linalg.row_space_basis([list(v) for v in vs])]


@dataclass
class Restricted:
    """F^*(M) = eM as a module over the corner algebra, with its inclusion."""

    corner: Corner
    module: FDModule
    inclusion: tuple  # rows: basis of eM in M coordinates
    solver: tuple  # maps M-coordinate vectors in eM to module coordinates


def restrict(corner: Corner, M: FDModule) -> Restricted:
    A = corner.parent
    em = M.act(corner.e)
    basis = image_basis(em)
    d = len(basis)
    if d == 0:
        return Restricted(corner, zero_module(corner.algebra), (), ())
    solver = linalg.stack_solve_matrix(basis)
    action = []
    for u in corner.basis:
        au = M.act(u)
        cols = [linalg.mat_vec(solver, linalg.mat_vec(au, list(v))) for v in basis]
        action.append([[cols[j][k] for j in range(d)] for k in range(d)])
    mod = FDModule(corner.algebra, d, action, validate=False)
    return Restricted(corner, mod, tuple(basis), tuple(tuple(r) for r in solver))


def restrict_morphism(rM: Restricted, rN: Restricted, f):
    """Component of an A-module map M -> N on the corner restriction."""
    if rM.module.dim == 0 or rN.module.dim == 0:
        return linalg.zeros(rN.module.dim, rM.module.dim)
    cols = [linalg.mat_vec(list(rN.solver), linalg.mat_vec(f, list(v)))
            for v in rM.inclusion]
    return [[cols[j][k] for j in range(len(cols))] for k in range(rN.module.dim)]


@dataclass
class Coinduced:
    """F_*(N) = Hom over the corner algebra from eA to N, as a left A-module.

    values[s] is the (N.dim x len(eA)) matrix of the s-th basis hom on the
    eA basis; value_solver recovers module coordinates from such a matrix.
    """

    corner: Corner
    source: FDModule  # N, over the corner algebra
    module: FDModule  # the A-module structure on the hom space
    ea_basis: tuple  # rows: basis of eA in A coordinates
    values: tuple  # value matrices of the hom basis
    value_solver: tuple  # left inverse on flattened value matrices
    counit_matrix: tuple  # evaluation at e: hom coordinates -> N coordinates


def coinduce(corner: Corner, N: FDModule) -> Coinduced:
    A = corner.parent
    ea = left_subspace_basis(A, corner.e, "eA")
    m = len(ea)
    dn = N.dim
    if dn == 0:
        mod = zero_module(A)
        return Coinduced(corner, N, mod, tuple(ea), (), (), ())
    ea_solver = linalg.stack_solve_matrix(ea)
    # unknown value matrix Phi (dn x m); B-linearity constraints
    rows = []
    for u_idx, u in enumerate(corner.basis):
        act_u = N.action[u_idx]
        for t in range(m):
            prod = A.multiply(u, ea[t])
            gamma = linalg.mat_vec(ea_solver, list(prod))
            for r in range(dn):
                row = [Fraction(0)] * (dn * m)
                for s in range(m):
                    if gamma[s] != 0:
                        row[r * m + s] += gamma[s]
                for r2 in range(dn):
                    if act_u[r][r2] != 0:
                        row[r2 * m + t] -= act_u[r][r2]
                rows.append(row)
    basis_vecs = linalg.nullspace(rows, n_cols=dn * m)
    values = [
        tuple(tuple(v[r * m + s] for s in range(m)) for r in range(dn))
        for v in basis_vecs
    ]
    d = len(values)
    if d == 0:
        mod = zero_module(A)
        return Coinduced(corner, N, mod, tuple(ea), (), (), ())
    flat = [[v for row in val for v in row] for val in values]
    value_solver = linalg.stack_solve_matrix(flat)
    # A-action: (a phi)(xi) = phi(xi a)
    action = []
    for i in range(A.dim):
        b = A.basis_vector(i)
        gammas = [linalg.mat_vec(ea_solver, list(A.multiply(ea[t], b))) for t in range(m)]
        cols = []
        for val in values:
            new_flat = []
            for r in range(dn):
                for t in range(m):
                    new_flat.append(sum(gammas[t][s] * val[r][s] for s in range(m)))
            cols.append(linalg.mat_vec(value_solver, new_flat))
        action.append([[cols[j][k] for j in range(d)] for k in range(d)])
    mod = FDModule(A, d, action, validate=False)
    e_coords = linalg.mat_vec(ea_solver, list(corner.e))
    counit = [
        [sum(e_coords[s] * values[j][r][s] for s in range(m)) for j in range(d)]
        for r in range(dn)
    ]
    return Coinduced(corner, N, mod, tuple(ea), tuple(values),
                     tuple(tuple(r) for r in value_solver),
                     tuple(tuple(r) for r in counit))


def coinduce_morphism(cM: Coinduced, cN: Coinduced, g):
    """F_* applied to a corner-module map g: M -> N (hom-coordinate matrix)."""
    if cM.module.dim == 0 or cN.module.dim == 0:
        return linalg.zeros(cN.module.dim, cM.module.dim)
    m = len(cM.ea_basis)
    cols = []
    for val in cM.values:
        comp = linalg.mat_mul(g, [list(r) for r in val])
        flat = [v for row in comp for v in row]
        cols.append(linalg.mat_vec(list(cN.value_solver), flat))
    return [[cols[j][k] for j in range(len(cols))] for k in range(cN.module.dim)]


@dataclass
class Induced:
    """F_!(N): the tensor product of Ae with N over the corner algebra."""

    corner: Corner
    source: FDModule
    module: FDModule  # A-module structure on the tensor quotient
    ae_basis: tuple  # rows: basis of Ae in A coordinates
    proj: tuple  # (p * N.dim) ambient tensor coords -> quotient coords


def induce(corner: Corner, N: FDModule) -> Induced:
    A = corner.parent
    ae = left_subspace_basis(A, corner.e, "Ae")
    p = len(ae)
    dn = N.dim
    if dn == 0:
        return Induced(corner, N, zero_module(A), tuple(ae), ())
    ae_solver = linalg.stack_solve_matrix(ae)
    amb = p * dn
    rel = []
    for t in range(p):
        for u_idx, u in enumerate(corner.basis):
            gam = linalg.mat_vec(ae_solver, list(A.multiply(ae[t], u)))
            act_u = N.action[u_idx]
            for r in range(dn):
                row = [Fraction(0)] * amb
                for s in range(p):
                    if gam[s] != 0:
                        row[s * dn + r] += gam[s]
                for r2 in range(dn):
                    if act_u[r2][r] != 0:
                        row[t * dn + r2] -= act_u[r2][r]
                rel.append(row)
    red, piv = linalg.rref(rel) if rel else ([], [])
    piv_set = set(piv)
    free = [c for c in range(amb) if c not in piv_set]
    d = len(free)

    def reduce_vec(v):
        v = list(v)
        for row, c in zip(red, piv):
            if v[c] != 0:
                f = v[c]
                v = [a - f * b for a, b in zip(v, row)]
        return [v[c] for c in free]

    action = []
    for i in range(A.dim):
        b = A.basis_vector(i)
        deltas = [linalg.mat_vec(ae_solver, list(A.multiply(b, ae[t]))) for t in range(p)]
        cols = []
        for c in free:
            t, r = divmod(c, dn)
            v = [Fraction(0)] * amb
            for s in range(p):
                if deltas[t][s] != 0:
                    v[s * dn + r] += deltas[t][s]
            cols.append(reduce_vec(v))
        action.append([[cols[j][k] for j in range(d)] for k in range(d)])
    proj = [reduce_vec([Fraction(int(k == j)) for k in range(amb)]) for j in range(amb)]
    proj = tuple(tuple(r) for r in linalg.transpose(proj))
    mod = FDModule(A, d, action, validate=False)
    return Induced(corner, N, mod, tuple(ae), proj)


def induce_morphism(iX: Induced, iY: Induced, g):
    """F_! applied to a corner-module map g, between materialized tensor quotients."""
    dX, dY = iX.module.dim, iY.module.dim
    if dX == 0 or dY == 0:
        return linalg.zeros(dY, dX)
    p = len(iX.ae_basis)
    dnX, dnY = iX.source.dim, iY.source.dim
    projX = [list(r) for r in iX.proj]
    cols = []
    for j in range(dX):
        e = [Fraction(int(i == j)) for i in range(dX)]
        lift = linalg.solve(projX, e)
        if lift is None:
            raise InternalCheckError("tensor quotient projection is not surjective")
        amb = [Fraction(0)] * (p * dnY)
        for c, coeff in enumerate(lift):
            if coeff == 0:
                continue
            t, r = divmod(c, dnX)
            for r2 in range(dnY):
                if g[r2][r] != 0:
                    amb[t * dnY + r2] += coeff * g[r2][r]
        cols.append(linalg.mat_vec([list(r) for r in iY.proj], amb))
    return [[cols[j][k] for j in range(dX)] for k in range(dY)]


def induce_unit(ind: Induced):
    """Unit of the induction adjunction: N -> e * F_!(N).

    Sends n to the class of e tensor n.  Returns (restriction data of the
    induced module, unit matrix in those coordinates).
    """
    corner = ind.corner
    N = ind.source
    rI = restrict(corner, ind.module)
    if N.dim == 0 or rI.module.dim == 0:
        return rI, linalg.zeros(rI.module.dim, N.dim)
    ae_solver = linalg.stack_solve_matrix(list(ind.ae_basis))
    e_coords = linalg.mat_vec(ae_solver, list(corner.e))
    dn = N.dim
    p = len(ind.ae_basis)
    cols = []
    for r in range(dn):
        v = [Fraction(0)] * (p * dn)
        for s in range(p):
            if e_coords[s] != 0:
                v[s * dn + r] += e_coords[s]
        qc = linalg.mat_vec(list(ind.proj), v)
        cols.append(linalg.mat_vec(list(rI.solver), qc))
    return rI, [[cols[j][k] for j in range(dn)] for k in range(rI.module.dim)]


def induce_counit(corner: Corner, M: FDModule):
    """Counit of the induction adjunction: F_!(eM) -> M, class of a tensor m -> a*m.

    Returns (induced data, restricted data, counit matrix).  The map is
    well defined because the tensor relations are sent to zero by the
    action, which the quotient projection has already accounted for.
    """
    rM = restrict(corner, M)
    ind = induce(corner, rM.module)
    d = ind.module.dim
    if rM.module.dim == 0 or d == 0:
        return ind, rM, linalg.zeros(M.dim, d)
    p = len(ind.ae_basis)
    dn = rM.module.dim
    amb_images = []
    for t in range(p):
        at = M.act(ind.ae_basis[t])
        for r in range(dn):
            amb_images.append(linalg.mat_vec(at, list(rM.inclusion[r])))
    # one lift per quotient basis vector: any preimage under proj works
    proj = [list(r) for r in ind.proj]
    cols = []
    for j in range(d):
        rhs = [Fraction(int(i == j)) for i in range(d)]
        lift = linalg.solve(proj, rhs)
        if lift is None:
            raise InternalCheckError("projection of the tensor quotient is not surjective")
        vec = [Fraction(0)] * M.dim
        for c, coeff in enumerate(lift):
            if coeff != 0:
                vec = [a + coeff * b for a, b in zip(vec, amb_images[c])]
        cols.append(vec)
    counit = [[cols[j][k] for j in range(d)] for k in range(M.dim)]
    return ind, rM, counit


def faithfulness_check(A: FDAlgebra, idempotent_names=None) -> bool:
    """True iff the two-sided ideal generated by the idempotents is all of A."""
    if idempotent_names is None:
        idems = list(A.idempotents.values())
    else:
        idems = [A.idempotents[n] if isinstance(n, str) else _frac_vector(n)
                 for n in idempotent_names]
    rows = []
    for e in idems:
        for i in range(A.dim):
            left = A.multiply(A.basis_vector(i), e)
            for j in range(A.dim):
                rows.append(list(A.multiply(left, A.basis_vector(j))))
    if not rows:
        return A.dim == 0
    return linalg.rank(rows) == A.dim


def simple_modules(A: FDAlgebra):
    """Tops of the projective covers attached to the distinguished idempotents.

    Requires each distinguished idempotent to be primitive (the top is then
    simple); this is validated by checking the tops are one-dimensional on
    the diagonal corner of the semisimple quotient.
    """
    rad = A.radical_basis()
    reg = regular_module(A)
    out = {}
    for name, e in A.idempotents.items():
        ae = left_subspace_basis(A, e, "Ae")
        pw = submodule(reg, ae)
        jp = []
        for u in rad:
            for v in ae:
                jp.append(A.multiply(u, v))
        # coordinates of J*Ae inside Ae
        sub_rows = []
        if pw.module.dim:
            solver = linalg.stack_solve_matrix(list(pw.inclusion))
            for v in jp:
                coords = linalg.mat_vec(solver, list(v))
                back = [sum(pw.inclusion[s][t] * coords[s] for s in range(pw.module.dim))
                        for t in range(A.dim)]
                if back != list(v):
                    raise InternalCheckError("radical does not preserve the projective")
                sub_rows.append(coords)
        top = quotient_module(pw.module, sub_rows)
        out[name] = top.module
    return out
