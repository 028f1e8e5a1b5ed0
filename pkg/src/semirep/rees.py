"""Rees matrix semigroups ``M^0(I, J, G, P)`` and the coordinatization of a
regular J-class of an arbitrary finite semigroup.

Conventions: ``I`` has ``m`` indices and ``J`` has ``n``; the sandwich matrix
``P`` is ``n x m`` with ``P[j][i]`` a local group index or ``None`` for 0; the
element ``(a)_{ij}`` multiplies as ``(a)_{ij} (b)_{kl} = (a p_{jk} b)_{il}``.
Indices are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .errors import NotRegular, NotRegularClass, SemigroupError
from .linalg import as_cmatrix
from .matrixrep import MatrixRep
from .semigroup import GreenStructure, GroupData, SemigroupTable, green_structure, maximal_subgroup, validate_table


def _is_monomial(P) -> bool:
    rows_ok = all(sum(v is not None for v in row) == 1 for row in P)
    cols = list(zip(*P)) if P else []
    cols_ok = all(sum(v is not None for v in col) == 1 for col in cols)
    return rows_ok and cols_ok


def _is_regular_sandwich(P) -> bool:
    if not P or not P[0]:
        return False
    return all(any(v is not None for v in row) for row in P) and all(
        any(v is not None for v in col) for col in zip(*P)
    )


@dataclass(frozen=True)
class ReesSemigroup:
    m: int
    n: int
    group: GroupData
    P: tuple
    table: SemigroupTable

    @property
    def zero(self) -> int:
        return self.m * self.n * self.group.order

    def element(self, i: int, j: int, a: int) -> int:
        return (i * self.n + j) * self.group.order + a

    def coords(self, x: int) -> Optional[tuple]:
        if x == self.zero:
            return None
        k = self.group.order
        ij, a = divmod(x, k)
        i, j = divmod(ij, self.n)
        return i, j, a

    @property
    def is_regular(self) -> bool:
        return _is_regular_sandwich(self.P)

    @property
    def is_monomial(self) -> bool:
        return _is_monomial(self.P)


def build_rees(m: int, n: int, G: GroupData, P) -> ReesSemigroup:
    """The multiplication table of ``M^0(I, J, G, P)``; the zero is the last element."""
    P = tuple(tuple(None if v is None else int(v) for v in row) for row in P)
    if len(P) != n or any(len(row) != m for row in P):
        raise SemigroupError(f"sandwich matrix must be {n} x {m}")
    for row in P:
        for v in row:
            if v is not None and v not in G.elements:
                raise SemigroupError(f"sandwich entry {v} is not a group element")
    k = G.order
    size = m * n * k
    zero = size
    rows = []
    labels = []
    for i, j, a in product(range(m), range(n), range(k)):
        row = []
        for i2, j2, b in product(range(m), range(n), range(k)):
            p = P[j][i2]
            row.append(zero if p is None else (i * n + j2) * k + G.prod(a, p, b))
        row.append(zero)
        rows.append(row)
        labels.append(f"({G.label(a)}){i + 1},{j + 1}")
    rows.append([zero] * (size + 1))
    labels.append("0")
    table = validate_table(rows, zero, labels=labels)
    return ReesSemigroup(m, n, G, P, table)


def rees_is_inverse(R: ReesSemigroup) -> bool:
    """Square index sets and exactly one nonzero sandwich entry per row and column."""
    if not R.is_regular:
        raise NotRegular("sandwich matrix has a zero row or column")
    return R.m == R.n and R.is_monomial


# --------------------------------------------------------------------------
# coordinatization of a J-class


@dataclass(frozen=True)
class ReesCoordinatization:
    """``J = disjoint union of x_i G_e y_j`` with sandwich ``P[j][i] = y_j x_i``.

    ``x``/``y`` are elements of S; ``P`` entries and the ``g`` in ``coords``
    are local indices into ``group``.  ``coords[b] = (i, j, g)`` means
    ``b = x_i g y_j``.
    """

    jclass: int
    elements: tuple
    e: int
    x: tuple
    y: tuple
    group: GroupData
    P: tuple
    coords: dict
    e_diag: tuple
    normalized: bool = False

    @property
    def s(self) -> int:
        return len(self.x)

    @property
    def t(self) -> int:
        return len(self.y)

    @property
    def is_monomial(self) -> bool:
        return _is_monomial(self.P)

    def as_rees(self) -> ReesSemigroup:
        return build_rees(self.s, self.t, self.group, self.P)


def _sandwich(S, G: GroupData, x, y, jset) -> tuple:
    pos = {g: i for i, g in enumerate(G.carrier)}
    P = []
    for yj in y:
        row = []
        for xi in x:
            p = S.mul[yj][xi]
            if p in jset:
                if p not in pos:
                    raise SemigroupError("sandwich entry lies in J but outside G_e")
                row.append(pos[p])
            else:
                row.append(None)
        P.append(tuple(row))
    return tuple(P)


def _assemble(S, green, jidx, e, G, x, y, normalized=False) -> ReesCoordinatization:
    jset = frozenset(green.jclasses[jidx])
    P = _sandwich(S, G, x, y, jset)
    coords: dict = {}
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            for g in G.elements:
                b = S.mul[S.mul[xi][G.carrier[g]]][yj]
                if b in coords or b not in jset:
                    raise SemigroupError("coset decomposition of the J-class is not a bijection")
                coords[b] = (i, j, g)
    if len(coords) != len(jset):
        raise SemigroupError(f"|J| = {len(jset)} but s*t*|G| = {len(coords)}")
    # b c lies in J exactly when p_jk != 0, and then has Rees coordinates (g p h)_il
    for b, (i, j, g) in coords.items():
        for c, (k, l, h) in coords.items():
            bc = S.mul[b][c]
            p = P[j][k]
            if p is None:
                if bc in jset:
                    raise SemigroupError("Rees product mismatch: expected to leave J")
            elif coords.get(bc) != (i, l, G.prod(g, p, h)):
                raise SemigroupError("Rees product mismatch inside J")
    e_diag = tuple(
        S.mul[x[i]][y[i]] if i < len(y) and P[i][i] == G.identity else None
        for i in range(len(x))
    )
    return ReesCoordinatization(jidx, tuple(sorted(jset)), e, tuple(x), tuple(y), G, P, coords,
                                e_diag, normalized)


def coordinatize_jclass(S: SemigroupTable, jclass: int, green: Optional[GreenStructure] = None) -> ReesCoordinatization:
    """Rees coordinates for a regular J-class.

    ``e`` is the first idempotent of the class.  ``x_1 = y_1 = e``; the other
    representatives are the smallest elements of their H-classes.  They are
    then rescaled on the right (``x_i g_i``) and left (``h_j y_j``) so that the
    first row and first column of ``P`` contain only the identity and 0.
    """
    green = green or green_structure(S)
    if not green.regular_j[jclass]:
        raise NotRegularClass(f"J-class {jclass} is not regular")
    J = green.jclasses[jclass]
    e = next(a for a in J if S.mul[a][a] == a)
    G = maximal_subgroup(S, e, green)
    L = green.lclasses[green.lclass_of[e]]
    R = green.rclasses[green.rclass_of[e]]

    def reps(cls, key_of):
        seen = {key_of[e]: e}
        for a in cls:
            seen.setdefault(key_of[a], a)
        first = seen.pop(key_of[e])
        return [first] + sorted(seen.values())

    # H-classes inside L_e are told apart by their R-class, and vice versa
    x = reps(L, green.rclass_of)
    y = reps(R, green.lclass_of)
    jset = frozenset(J)
    P = _sandwich(S, G, x, y, jset)
    for i in range(1, len(x)):
        if P[0][i] is not None:
            x[i] = S.mul[x[i]][G.carrier[G.inverse[P[0][i]]]]
    P = _sandwich(S, G, x, y, jset)
    for j in range(1, len(y)):
        if P[j][0] is not None:
            y[j] = S.mul[G.carrier[G.inverse[P[j][0]]]][y[j]]
    return _assemble(S, green, jclass, e, G, x, y)


def normalize_to_identity(S: SemigroupTable, coord: ReesCoordinatization,
                          green: Optional[GreenStructure] = None) -> ReesCoordinatization:
    """Reorder and rescale the ``y_j`` so that a monomial sandwich becomes the identity."""
    if coord.s != coord.t or not coord.is_monomial:
        raise SemigroupError("only a square monomial sandwich matrix can be normalized to I")
    green = green or green_structure(S)
    G = coord.group
    y = []
    for i in range(coord.s):
        j = next(j for j in range(coord.t) if coord.P[j][i] is not None)
        y.append(S.mul[G.carrier[G.inverse[coord.P[j][i]]]][coord.y[j]])
    new = _assemble(S, green, coord.jclass, coord.e, G, list(coord.x), y, normalized=True)
    ident = all(
        new.P[j][i] == (G.identity if i == j else None) for i in range(new.s) for j in range(new.t)
    )
    if not ident:
        raise SemigroupError("normalization did not produce the identity sandwich")
    return new


def rescale(S: SemigroupTable, coord: ReesCoordinatization, g: Sequence[int], h: Sequence[int],
            green: Optional[GreenStructure] = None) -> ReesCoordinatization:
    """Replace ``x_i -> x_i g_i`` and ``y_j -> h_j y_j`` (local group indices)."""
    green = green or green_structure(S)
    G = coord.group
    x = [S.mul[xi][G.carrier[gi]] for xi, gi in zip(coord.x, g)]
    y = [S.mul[G.carrier[hj]][yj] for yj, hj in zip(coord.y, h)]
    return _assemble(S, green, coord.jclass, coord.e, G, x, y)


# --------------------------------------------------------------------------
# standard representations


def _sigma_block(sigma, g) -> np.ndarray:
    return sigma[g]


def standard_reps(R: ReesSemigroup, sigma) -> tuple:
    """``pi^l(s) = sigma((a)_{ij} P)`` and ``pi^r(s) = sigma(P (a)_{ij})``.

    ``sigma`` is a list of ``k x k`` matrices indexed by local group element;
    zero sandwich entries become zero blocks and the semigroup zero maps to
    the zero matrix.
    """
    sigma = [as_cmatrix(s) for s in sigma]
    k = sigma[0].shape[0]
    G = R.group
    m, n = R.m, R.n
    left, right = [], []
    for x in R.table.elements:
        L = np.zeros((m * k, m * k), dtype=complex)
        Rm = np.zeros((n * k, n * k), dtype=complex)
        c = R.coords(x)
        if c is not None:
            i, j, a = c
            for l in range(m):
                p = R.P[j][l]
                if p is not None:
                    L[i * k:(i + 1) * k, l * k:(l + 1) * k] = sigma[G.mul(a, p)]
            for r in range(n):
                p = R.P[r][i]
                if p is not None:
                    Rm[r * k:(r + 1) * k, j * k:(j + 1) * k] = sigma[G.mul(p, a)]
        left.append(L)
        right.append(Rm)
    pl = MatrixRep(R.table, m * k, tuple(left), "left standard")
    pr = MatrixRep(R.table, n * k, tuple(right), "right standard")
    return pl, pr


def regular_rees_corpus(max_m: int, max_n: int, groups: Sequence[GroupData]):
    """Every regular ``M^0(m, n, G, P)`` with ``m <= max_m``, ``n <= max_n``."""
    for G in groups:
        entries = [None] + list(G.elements)
        for m in range(1, max_m + 1):
            for n in range(1, max_n + 1):
                for flat in product(entries, repeat=m * n):
                    P = tuple(tuple(flat[r * m:(r + 1) * m]) for r in range(n))
                    if _is_regular_sandwich(P):
                        yield build_rees(m, n, G, P)
