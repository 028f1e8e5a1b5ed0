"""Involutions on finite semigroups: verification, enumeration, the
structure of involutions on Rees matrix semigroups, the unique
inverse-inducing involution, and the semiunitary-star criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import InvariantViolation, MultipleSurvivors, NotCorollaryForm, NotInvolution, NotReesCompatible, SizeLimit
from .grouprep import check_group_involution
from .rees import ReesSemigroup
from .semigroup import (
    SemigroupTable,
    _class_signature,
    green_structure,
    idempotents_commute,
    rational_rank,
    search_morphisms,
)

MAX_ENUMERATION_ORDER = 40


@dataclass(frozen=True)
class SSData:
    """Structure data of an involution on ``M^0(I, I, G, P)``.

    ``(a)_ij* = (z u_{phi(j)}* a* u_i^-1)_{phi(j), phi(i)}`` and
    ``p_ji* = z u_i^-1 p_{phi(i) phi(j)} u_{phi(j)}*``; group elements are
    local indices and ``g_star`` is the induced involution on ``G``.
    """

    phi: tuple
    u: tuple
    z: int
    g_star: tuple

    def v(self, G) -> tuple:
        """``v_{phi(i)} = z u_i*`` (derived, never stored)."""
        out = [None] * len(self.phi)
        for i, p in enumerate(self.phi):
            out[p] = G.mul(self.z, self.g_star[self.u[i]])
        return tuple(out)

    def to_json(self, G) -> dict:
        return {
            "phi": [p + 1 for p in self.phi],
            "u": [G.label(x) for x in self.u],
            "z": G.label(self.z),
            "g_star": [G.label(x) for x in self.g_star],
        }


@dataclass(frozen=True)
class InvolutionMap:
    map: tuple
    ss_data: Optional[SSData] = None

    def __getitem__(self, a: int) -> int:
        return self.map[a]

    def __len__(self) -> int:
        return len(self.map)

    def __iter__(self):
        return iter(self.map)


def _as_map(star) -> tuple:
    return tuple(int(v) for v in getattr(star, "map", star))


def verify_involution(S: SemigroupTable, star) -> tuple:
    """Check that ``star`` is a bijection with ``star∘star = id`` and
    ``(ab)* = b*a*`` (all ``n^2`` products); return it as a tuple."""
    star = _as_map(star)
    if sorted(star) != list(S.elements):
        raise NotInvolution("map is not a permutation of the elements")
    for a in S.elements:
        if star[star[a]] != a:
            raise NotInvolution(f"star(star({S.label(a)})) != {S.label(a)}")
    for a in S.elements:
        for b in S.elements:
            if star[S.mul[a][b]] != S.mul[star[b]][star[a]]:
                raise NotInvolution(f"(ab)* != b*a* for a={S.label(a)}, b={S.label(b)}")
    return star


def enumerate_involutions(S: SemigroupTable, max_order: int = MAX_ENUMERATION_ORDER) -> list:
    """Every involution of ``S``, in lexicographic order of the maps.

    Candidates are pruned by fixing the declared zero, sending idempotents to
    idempotents, and sending each element to one whose L- and R-class sizes
    are swapped.
    """
    if S.n > max_order:
        raise SizeLimit(f"involution enumeration is limited to order {max_order}, got {S.n}")
    green = green_structure(S)
    anti_sig = _class_signature(S, green, anti=True)
    sig = _class_signature(S, green, anti=False)
    allowed = []
    for a in S.elements:
        if S.zero is not None and a == S.zero:
            allowed.append({a})
        else:
            allowed.append({b for b in S.elements if sig[b] == anti_sig[a] and b != S.zero})
    return [InvolutionMap(f) for f in search_morphisms(S, S, anti=True, involutive=True, allowed=allowed)]


def is_inverse_inducing(S: SemigroupTable, star) -> bool:
    """``S`` is an inverse semigroup with inverse map ``star``.

    ``s s* s = s`` and ``s* s s* = s*`` alone only make ``S`` a regular
    *-semigroup (e.g. a rectangular band with the transpose); commuting
    idempotents are what make the inverse unique.
    """
    f = _as_map(star)
    m = S.mul
    return all(m[m[s][f[s]]][s] == s and m[m[f[s]][s]][f[s]] == f[s] for s in S.elements) and idempotents_commute(S)


def inverse_inducing_involution(S: SemigroupTable, involutions=None) -> Optional[InvolutionMap]:
    """The involution making ``S`` an inverse semigroup, if any (at most one exists)."""
    involutions = enumerate_involutions(S) if involutions is None else involutions
    survivors = [f for f in involutions if is_inverse_inducing(S, f)]
    if len(survivors) > 1:
        raise MultipleSurvivors(f"{len(survivors)} involutions induce an inverse structure")
    return survivors[0] if survivors else None


# --------------------------------------------------------------------------
# involutions on Rees matrix semigroups


def reconstruct_involution(R: ReesSemigroup, ss: SSData) -> tuple:
    """The map ``(a)_ij -> (z u_{phi(j)}* a* u_i^-1)_{phi(j), phi(i)}``, zero fixed."""
    G = R.group
    out = []
    for x in R.table.elements:
        c = R.coords(x)
        if c is None:
            out.append(x)
            continue
        i, j, a = c
        b = G.prod(ss.z, ss.g_star[ss.u[ss.phi[j]]], ss.g_star[a], G.inverse[ss.u[i]])
        out.append(R.element(ss.phi[j], ss.phi[i], b))
    return tuple(out)


def _sandwich_condition(R: ReesSemigroup, ss: SSData) -> bool:
    """``p_ji* = z u_i^-1 p_{phi(i) phi(j)} u_{phi(j)}*`` including the zero pattern."""
    G, P, phi = R.group, R.P, ss.phi
    for j in range(R.n):
        for i in range(R.m):
            p, q = P[j][i], P[phi[i]][phi[j]]
            if (p is None) != (q is None):
                return False
            if p is not None and ss.g_star[p] != G.prod(ss.z, G.inverse[ss.u[i]], q, ss.g_star[ss.u[phi[j]]]):
                return False
    return True


def _valid_ss(R: ReesSemigroup, ss: SSData, star: tuple) -> bool:
    G = R.group
    try:
        check_group_involution(G, ss.g_star)
    except NotInvolution:
        return False
    if not G.is_central(ss.z) or ss.g_star[ss.z] != G.inverse[ss.z]:
        return False
    return _sandwich_condition(R, ss) and reconstruct_involution(R, ss) == star


def decompose_rees_involution(R: ReesSemigroup, star) -> SSData:
    """Recover ``(phi, u, z, *_G)`` for an involution on a regular Rees semigroup.

    ``phi`` is read off the index pattern of ``(1)_ij*``.  With ``i0 = 0`` and
    ``T(a)`` the group part of ``(a)_{i0, phi(i0)}*``, every choice of
    ``c = u_{i0}`` determines the rest:
    ``a* = c^-1 T(1)^-1 T(a) c``, ``z = T(1) c (c*)^-1`` and
    ``u_i^-1 = (z u_{i0}*)^-1 T_{i, phi(i0)}(1)``.  The first ``c`` (identity
    first) whose data satisfy every condition and reproduce ``star`` exactly
    is returned.
    """
    if R.m != R.n:
        raise NotReesCompatible(f"an involution needs |I| = |J|, got {R.m} and {R.n}")
    if not R.is_regular:
        raise NotReesCompatible("sandwich matrix has a zero row or column")
    star = verify_involution(R.table, star)
    G, n = R.group, R.n
    one = G.identity

    def image(i, j, a):
        c = R.coords(star[R.element(i, j, a)])
        if c is None:
            raise NotInvolution("a nonzero element is mapped to the zero")
        return c

    phi_row = [None] * n  # phi(j) from the row index of (1)_ij*
    phi_col = [None] * n  # phi(i) from the column index
    for i in range(n):
        for j in range(n):
            r, c, _ = image(i, j, one)
            if phi_row[j] not in (None, r) or phi_col[i] not in (None, c):
                raise InvariantViolation("index pattern of the involution is not of the form (j, i) -> (phi(j), phi(i))")
            phi_row[j], phi_col[i] = r, c
    if phi_row != phi_col:
        raise InvariantViolation("row and column index maps differ")
    phi = tuple(phi_row)

    i0 = 0
    j0 = phi[i0]
    T = [image(i0, j0, a)[2] for a in G.elements]
    T1inv = G.inverse[T[one]]
    col = [image(i, j0, one)[2] for i in range(n)]  # T_{i, phi(i0)}(1)
    for c in [one] + [g for g in G.elements if g != one]:
        cinv = G.inverse[c]
        g_star = tuple(G.prod(cinv, T1inv, T[a], c) for a in G.elements)
        z = G.prod(T[one], c, G.inverse[g_star[c]])
        w_inv = G.inverse[G.mul(z, g_star[c])]
        u = tuple(G.inverse[G.mul(w_inv, col[i])] for i in range(n))
        ss = SSData(phi, u, z, g_star)
        if _valid_ss(R, ss, star):
            return ss
    raise InvariantViolation("no structure data reproduce the involution")


def _group_algebra_invertible(R: ReesSemigroup) -> bool:
    """``P`` invertible over ``C[G]``: its image under the left regular
    representation (an integer block matrix) has full rank."""
    if R.m != R.n:
        return False
    G = R.group
    k = G.order
    reg = G.regular_matrices()
    big = np.zeros((R.n * k, R.m * k), dtype=np.int64)
    for j in range(R.n):
        for i in range(R.m):
            p = R.P[j][i]
            if p is not None:
                big[j * k:(j + 1) * k, i * k:(i + 1) * k] = reg[p]
    return rational_rank(big.tolist()) == R.n * k


@dataclass(frozen=True)
class SemiunitaryConditions:
    holds: bool
    p_invertible: bool
    constant_diagonal: Optional[int]
    diagonal_ok: bool
    star_is_conjugated_inverse: bool

    def __bool__(self) -> bool:
        return self.holds


def _conditions(R: ReesSemigroup, ss: SSData) -> SemiunitaryConditions:
    G = R.group
    inv = _group_algebra_invertible(R)
    diag = {R.P[i][i] for i in range(R.n)}
    g = next(iter(diag)) if len(diag) == 1 and None not in diag else None
    diag_ok = g is not None and G.prod(g, g, ss.z) == G.identity and G.is_central(G.mul(G.inverse[g], ss.g_star[g]))
    conj = g is not None and all(ss.g_star[a] == G.prod(g, G.inverse[a], G.inverse[g]) for a in G.elements)
    return SemiunitaryConditions(inv and diag_ok and conj, inv, g, diag_ok, conj)


def corollary_data(R: ReesSemigroup, star) -> SSData:
    """Structure data for an involution in Corollary form (``phi = id``, ``u = 1``)."""
    ss = decompose_rees_involution(R, star)
    if ss.phi != tuple(range(R.n)) or any(x != R.group.identity for x in ss.u):
        raise NotCorollaryForm("involution is not of the form (a)_ij* = (z a*)_ji")
    return ss


def semiunitary_star_conditions(R: ReesSemigroup, star=None) -> SemiunitaryConditions:
    """``(1)`` P invertible over C[G]; ``(2)`` constant diagonal ``g`` with
    ``g^2 z = 1`` and ``g^-1 g*`` central; ``(3)`` ``a* = g a^-1 g^-1``.

    Without ``star`` every Corollary-form involution of ``R`` is tried and the
    first one satisfying the conditions is reported (false when none exists).
    """
    if star is not None:
        return _conditions(R, corollary_data(R, star))
    result = SemiunitaryConditions(False, _group_algebra_invertible(R), None, False, False)
    if R.m != R.n or not R.is_regular:
        return result
    for f in enumerate_involutions(R.table):
        try:
            ss = corollary_data(R, f)
        except NotCorollaryForm:
            continue
        cond = _conditions(R, ss)
        if cond.holds:
            return cond
        result = cond
    return result
