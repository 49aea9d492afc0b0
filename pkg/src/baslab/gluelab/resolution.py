"""Minimal projective resolutions and global dimension.

Projective covers are built from radical quotients: the top of a module is
split along the distinguished idempotents (assumed primitive, orthogonal,
and complete), lifted, and covered by the corresponding direct sum of
principal projectives.  Syzygies are kernels of the cover maps; a repeat of
an earlier syzygy up to isomorphism proves the minimal resolution is
periodic, hence infinite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .. import linalg
from ..errors import DomainError, InternalCheckError
from .algebra import (
    FDAlgebra,
    FDModule,
    direct_sum,
    is_isomorphic,
    left_subspace_basis,
    quotient_module,
    regular_module,
    simple_modules,
    submodule,
    zero_module,
)


@dataclass
class Resolution:
    """Outcome of an iterated projective-cover computation."""

    status: str  # "finite" | "infinite(periodic)" | "inconclusive(cutoff)"
    length: int | None  # projective dimension when finite
    steps: list  # per cover: dict idempotent name -> multiplicity
    syzygy_dims: list
    period: int | None = None
    period_start: int | None = None

    def status_str(self):
        if self.status == "finite":
            return str(self.length)
        if self.status == "infinite(periodic)":
            return f"infinite(periodic, period {self.period})"
        return self.status


class ProjectiveCache:
    """Principal projectives Ae_w of one algebra, shared across resolutions."""

    def __init__(self, A: FDAlgebra):
        if not A.idempotents:
            raise DomainError("resolutions need a distinguished idempotent set")
        self.A = A
        self.radical = A.radical_basis()
        reg = regular_module(A)
        self.projectives = {}
        for name, e in A.idempotents.items():
            ae = left_subspace_basis(A, e, "Ae")
            self.projectives[name] = submodule(reg, ae)
        # validate primitivity: each top must be one-dimensional
        for name in A.idempotents:
            top_dim = self._top_multiplicities_of_projective(name)
            if top_dim != 1:
                raise DomainError(
                    f"idempotent {name} is not primitive (top dimension {top_dim})"
                )

    def _top_multiplicities_of_projective(self, name):
        P = self.projectives[name].module
        jm = self._radical_subspace(P)
        return P.dim - (linalg.rank([list(r) for r in jm]) if jm else 0)

    def _radical_subspace(self, M: FDModule):
        rows = []
        for u in self.radical:
            act = M.act(u)
            for j in range(M.dim):
                col = [act[r][j] for r in range(M.dim)]
                if any(c != 0 for c in col):
                    rows.append(col)
        return rows

    def cover(self, M: FDModule):
        """(P, cover map matrix M.dim x P.dim, multiplicities) of a projective cover."""
        A = self.A
        if M.dim == 0:
            return zero_module(A), [], {name: 0 for name in A.idempotents}
        jm = self._radical_subspace(M)
        top = quotient_module(M, jm)
        mults = {}
        lifts = []  # (idempotent name, lift vector in M)
        for name, e in A.idempotents.items():
            # basis of e * top, then lift through the quotient
            e_top = top.module.act(e)
            img = [tuple(r) for r in linalg.row_space_basis(linalg.transpose(e_top))]
            mults[name] = len(img)
            for v in img:
                lift_top = [sum(top.lift[s][t] * v[s] for s in range(top.module.dim))
                            for t in range(M.dim)]
                lift = linalg.mat_vec(M.act(e), lift_top)
                lifts.append((name, lift))
        blocks = [self.projectives[name].module for name, _ in lifts]
        P, offsets = direct_sum(A, blocks)
        cols = []
        for (name, lift), off in zip(lifts, offsets):
            basis_rows = self.projectives[name].inclusion
            for r in basis_rows:
                cols.append(linalg.mat_vec(M.act(r), lift))
        cover_map = [[cols[j][k] for j in range(P.dim)] for k in range(M.dim)]
        if P.dim and linalg.rank(cover_map) != M.dim:
            raise InternalCheckError("projective cover map is not surjective")
        return P, cover_map, mults

    def syzygy(self, M: FDModule):
        """(kernel module of the cover, multiplicities of the cover)."""
        P, cover_map, mults = self.cover(M)
        if P.dim == 0:
            return zero_module(self.A), mults
        kernel = linalg.nullspace(cover_map, n_cols=P.dim)
        sub = submodule(P, kernel)
        return sub.module, mults


def min_projective_resolution(A: FDAlgebra, M: FDModule, cutoff: int = 12,
                              cache: ProjectiveCache | None = None) -> Resolution:
    """Iterate projective covers until the syzygy vanishes or repeats."""
    cache = cache or ProjectiveCache(A)
    steps = []
    dims = []
    seen = [M]
    current = M
    for i in range(cutoff + 1):
        if current.dim == 0:
            length = len(steps) - 1 if steps else 0
            return Resolution("finite", max(length, 0), steps, dims)
        syz, mults = cache.syzygy(current)
        steps.append(mults)
        dims.append(syz.dim)
        for j, old in enumerate(seen):
            if old.dim == syz.dim and old.dim > 0 and is_isomorphic(old, syz):
                return Resolution(
                    "infinite(periodic)", None, steps, dims,
                    period=len(seen) - j, period_start=j,
                )
        seen.append(syz)
        current = syz
    return Resolution("inconclusive(cutoff)", None, steps, dims)


def global_dimension(A: FDAlgebra, cutoff: int = 12):
    """(status, detail) where status is an int, "infinite(periodic)", or
    "inconclusive(cutoff)"; detail maps each simple to its resolution."""
    cache = ProjectiveCache(A)
    detail = {}
    worst = 0
    period = None
    inconclusive = False
    for name, S in simple_modules(A).items():
        res = min_projective_resolution(A, S, cutoff=cutoff, cache=cache)
        detail[name] = res
        if res.status == "finite":
            worst = max(worst, res.length)
        elif res.status == "infinite(periodic)":
            period = res.period if period is None else min(period, res.period)
        else:
            inconclusive = True
    if period is not None:
        return "infinite(periodic)", detail
    if inconclusive:
        return "inconclusive(cutoff)", detail
    return worst, detail
