"""Finite semigroups given by multiplication tables.

Elements are the integers ``0..n-1`` and ``mul[a][b]`` is the index of the
product ``a*b``.  Green's relations are always computed in ``S^1`` (the
identity is adjoined implicitly: ``S^1 a = {a} | S a``), so no table needs
to be rewritten to ask about ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import AssociativityError, NotIdempotent, SemigroupError, ZeroAxiomError


@dataclass(frozen=True)
class SemigroupTable:
    mul: tuple
    zero: Optional[int] = None
    has_adjoined_identity: bool = False
    labels: Optional[tuple] = None

    @property
    def n(self) -> int:
        return len(self.mul)

    @property
    def elements(self) -> range:
        return range(len(self.mul))

    def __call__(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a + 1)

    def array(self) -> np.ndarray:
        return np.array(self.mul, dtype=np.int64).reshape(self.n, self.n)

    @property
    def adjoined_identity(self) -> Optional[int]:
        """Index of the adjoined identity (always the last element) or None."""
        return self.n - 1 if self.has_adjoined_identity else None

    def identity(self) -> Optional[int]:
        for e in self.elements:
            if all(self.mul[e][x] == x == self.mul[x][e] for x in self.elements):
                return e
        return None

    def idempotents(self) -> tuple:
        return tuple(a for a in self.elements if self.mul[a][a] == a)

    def is_commutative(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a] for a in self.elements for b in self.elements)

    def relabel(self, perm: Sequence[int]) -> "SemigroupTable":
        """Return the isomorphic table in which old element ``a`` is called ``perm[a]``."""
        n = self.n
        inv = [0] * n
        for a, pa in enumerate(perm):
            inv[pa] = a
        mul = tuple(
            tuple(perm[self.mul[inv[x]][inv[y]]] for y in range(n)) for x in range(n)
        )
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[inv[x]] for x in range(n))
        zero = None if self.zero is None else perm[self.zero]
        return SemigroupTable(mul, zero, False, labels)


def validate_table(raw, zero=None, *, labels=None, has_adjoined_identity=False) -> SemigroupTable:
    """Check an ``n x n`` index grid and wrap it as a :class:`SemigroupTable`.

    Raises ``AssociativityError`` naming the first failing triple in
    lexicographic order, or ``ZeroAxiomError`` for a non-absorbing zero.
    """
    rows = [list(r) for r in raw]
    n = len(rows)
    if n == 0:
        raise SemigroupError("a semigroup needs at least one element")
    if any(len(r) != n for r in rows):
        raise SemigroupError("multiplication table must be square")
    for r in rows:
        for v in r:
            if isinstance(v, bool) or int(v) != v or not 0 <= v < n:
                raise SemigroupError(f"table entry {v!r} out of range [0, {n})")
    M = np.array(rows, dtype=np.int64)
    # left[a, b, c] = (ab)c, right[a, b, c] = a(bc)
    left = M[M]
    right = M[np.arange(n)[:, None, None], M[None, :, :]]
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise AssociativityError(a, b, c)
    if zero is not None:
        if not 0 <= zero < n:
            raise SemigroupError(f"zero index {zero} out of range")
        for a in range(n):
            if M[zero, a] != zero or M[a, zero] != zero:
                raise ZeroAxiomError(a)
    if has_adjoined_identity:
        one = n - 1
        if not (np.array_equal(M[one], np.arange(n)) and np.array_equal(M[:, one], np.arange(n))):
            raise SemigroupError("element flagged as adjoined identity is not an identity")
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise SemigroupError("wrong number of labels")
    mul = tuple(tuple(int(v) for v in r) for r in rows)
    return SemigroupTable(mul, zero, has_adjoined_identity, labels)


def adjoin_identity(S: SemigroupTable) -> SemigroupTable:
    n = S.n
    rows = [list(r) + [a] for a, r in enumerate(S.mul)]
    rows.append(list(range(n + 1)))
    labels = None if S.labels is None else S.labels + ("1",)
    return validate_table(rows, S.zero, labels=labels, has_adjoined_identity=True)


def find_zero(S: SemigroupTable) -> Optional[int]:
    """The (unique) absorbing element of ``S`` if there is one, declared or not."""
    for z in S.elements:
        if all(S.mul[z][a] == z == S.mul[a][z] for a in S.elements):
            return z
    return None


# --------------------------------------------------------------------------
# Green's relations


@dataclass(frozen=True)
class GreenStructure:
    lclasses: tuple
    rclasses: tuple
    hclasses: tuple
    jclasses: tuple
    lclass_of: tuple
    rclass_of: tuple
    hclass_of: tuple
    jclass_of: tuple
    jorder: frozenset  # pairs (i, j) with J_i <= J_j, reflexive
    regular_j: tuple
    idempotents: frozenset
    regular_elements: frozenset
    principal_ideals: tuple  # S^1 a S^1 for a representative of each J-class
    used_s1: bool = True

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self.jorder

    @property
    def is_regular(self) -> bool:
        return all(self.regular_j)

    def jclass(self, a: int) -> tuple:
        return self.jclasses[self.jclass_of[a]]

    def ideal_below(self, j: int) -> frozenset:
        """``I_J``: elements whose J-class is not above ``J_j``."""
        return frozenset(
            a for a in range(len(self.jclass_of)) if not self.leq(j, self.jclass_of[a])
        )


def _partition(keys) -> tuple:
    groups: dict = {}
    for a, k in enumerate(keys):
        groups.setdefault(k, []).append(a)
    # first-appearance order == ordered by smallest element
    classes = tuple(tuple(g) for g in groups.values())
    of = [0] * len(keys)
    for i, cls in enumerate(classes):
        for a in cls:
            of[a] = i
    return classes, tuple(of)


def principal_ideals(S: SemigroupTable):
    """Return the lists ``S^1 a``, ``a S^1`` and ``S^1 a S^1`` for every ``a``."""
    M = S.array()
    n = S.n
    left, right, two = [], [], []
    for a in range(n):
        la = set(M[:, a].tolist()) | {a}
        ra = set(M[a, :].tolist()) | {a}
        # S^1 a S^1 = (S^1 a) S^1
        ja = set(M[np.array(sorted(la)), :].ravel().tolist()) | la
        left.append(frozenset(la))
        right.append(frozenset(ra))
        two.append(frozenset(ja))
    return left, right, two


def green_structure(S: SemigroupTable) -> GreenStructure:
    left, right, two = principal_ideals(S)
    n = S.n
    lclasses, lof = _partition(left)
    rclasses, rof = _partition(right)
    jclasses, jof = _partition(two)
    hclasses, hof = _partition(list(zip(lof, rof)))
    reps = [cls[0] for cls in jclasses]
    jorder = frozenset(
        (i, j)
        for i, a in enumerate(reps)
        for j, b in enumerate(reps)
        if two[a] <= two[b]
    )
    M = S.array()
    regular = frozenset(a for a in range(n) if np.any(M[M[a, :], a] == a))
    regular_j = tuple(all(a in regular for a in cls) for cls in jclasses)
    return GreenStructure(
        lclasses=lclasses,
        rclasses=rclasses,
        hclasses=hclasses,
        jclasses=jclasses,
        lclass_of=lof,
        rclass_of=rof,
        hclass_of=hof,
        jclass_of=jof,
        jorder=jorder,
        regular_j=regular_j,
        idempotents=frozenset(S.idempotents()),
        regular_elements=regular,
        principal_ideals=tuple(two[a] for a in reps),
    )


@dataclass(frozen=True)
class PrincipalSeries:
    ideals: tuple  # I_0 = {} < I_1 < ... < I_k = S
    quotient_jclass: tuple  # J-class index added at each step

    def __len__(self) -> int:
        return len(self.quotient_jclass)


def principal_series(S: SemigroupTable, green: Optional[GreenStructure] = None) -> PrincipalSeries:
    """Ascending chain of ideals, adding one minimal remaining J-class per step.

    Ties are broken by J-class index so the chain is deterministic.
    """
    green = green or green_structure(S)
    k = len(green.jclasses)
    added: list = []
    done: set = set()
    ideals = [frozenset()]
    while len(added) < k:
        for j in range(k):
            if j in done:
                continue
            below = [i for i in range(k) if i != j and green.leq(i, j)]
            if all(i in done for i in below):
                break
        done.add(j)
        added.append(j)
        ideals.append(ideals[-1] | frozenset(green.jclasses[j]))
    return PrincipalSeries(tuple(ideals), tuple(added))


def is_two_sided_ideal(S: SemigroupTable, subset) -> bool:
    subset = set(subset)
    return all(S.mul[s][a] in subset and S.mul[a][s] in subset for a in subset for s in S.elements)


# --------------------------------------------------------------------------
# Groups


@dataclass(frozen=True)
class GroupData:
    """A finite group in local indices ``0..k-1``.

    ``carrier[g]`` is the element of the ambient semigroup that local index
    ``g`` stands for (``range(k)`` for a free-standing group).
    """

    table: tuple
    identity: int
    inverse: tuple
    conj_classes: tuple
    carrier: tuple
    labels: Optional[tuple] = None

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def prod(self, *gs: int) -> int:
        r = self.identity
        for g in gs:
            r = self.table[r][g]
        return r

    def local(self, x: int) -> int:
        return self.carrier.index(x)

    def label(self, g: int) -> str:
        if self.labels is not None:
            return self.labels[g]
        return "1" if g == self.identity else f"g{g}"

    def class_of(self, g: int) -> int:
        for i, cls in enumerate(self.conj_classes):
            if g in cls:
                return i
        raise ValueError(g)

    def is_central(self, z: int) -> bool:
        return all(self.table[z][g] == self.table[g][z] for g in self.elements)

    def center(self) -> tuple:
        return tuple(g for g in self.elements if self.is_central(g))

    def is_abelian(self) -> bool:
        return len(self.center()) == self.order

    def regular_matrices(self) -> list:
        """Left regular representation as 0/1 integer matrices: ``e_h -> e_{gh}``."""
        k = self.order
        mats = []
        for g in self.elements:
            m = np.zeros((k, k), dtype=np.int64)
            for h in self.elements:
                m[self.table[g][h], h] = 1
            mats.append(m)
        return mats

    def as_semigroup(self) -> SemigroupTable:
        return SemigroupTable(self.table, None, False, self.labels)

    @classmethod
    def from_table(cls, table, carrier=None, labels=None) -> "GroupData":
        table = tuple(tuple(int(v) for v in row) for row in table)
        k = len(table)
        if carrier is None:
            carrier = tuple(range(k))
        ident = [e for e in range(k) if all(table[e][g] == g == table[g][e] for g in range(k))]
        if not ident:
            raise SemigroupError("no identity element; not a group")
        e = ident[0]
        inverse = []
        for g in range(k):
            inv = [h for h in range(k) if table[g][h] == e == table[h][g]]
            if len(inv) != 1:
                raise SemigroupError(f"element {g} has no two-sided inverse")
            inverse.append(inv[0])
        for g, h, f in product(range(k), repeat=3):
            if table[table[g][h]][f] != table[g][table[h][f]]:
                raise AssociativityError(g, h, f)
        seen: set = set()
        classes = []
        for g in range(k):
            if g in seen:
                continue
            conj = sorted({table[table[h][g]][inverse[h]] for h in range(k)})
            seen.update(conj)
            classes.append(tuple(conj))
        return cls(table, e, tuple(inverse), tuple(classes), tuple(carrier), labels)


def maximal_subgroup(S: SemigroupTable, e: int, green: Optional[GreenStructure] = None) -> GroupData:
    """``G_e = H_e``, the group of units of ``eSe``, with its structure checked."""
    if S.mul[e][e] != e:
        raise NotIdempotent(f"element {S.label(e)} is not idempotent")
    green = green or green_structure(S)
    carrier = green.hclasses[green.hclass_of[e]]
    # e first so the identity gets local index 0
    carrier = (e,) + tuple(x for x in carrier if x != e)
    pos = {x: i for i, x in enumerate(carrier)}
    try:
        table = [[pos[S.mul[x][y]] for y in carrier] for x in carrier]
    except KeyError:
        raise SemigroupError(f"H-class of {S.label(e)} is not closed under multiplication")
    labels = tuple(S.label(x) for x in carrier)
    return GroupData.from_table(table, carrier=carrier, labels=labels)


# --------------------------------------------------------------------------
# Brute-force oracles


@dataclass(frozen=True)
class InverseOracle:
    is_inverse: bool
    inverses: tuple  # per element: all b with aba=a and bab=b
    witness: Optional[int]  # first element with zero or several inverses

    @property
    def inverse_map(self) -> Optional[tuple]:
        if not self.is_inverse:
            return None
        return tuple(inv[0] for inv in self.inverses)


def brute_force_is_inverse(S: SemigroupTable) -> InverseOracle:
    M = S.array()
    n = S.n
    b = np.arange(n)
    inverses = []
    witness = None
    for a in range(n):
        aba = M[M[a, b], a]
        bab = M[M[b, a], b]
        inv = tuple(int(x) for x in np.nonzero((aba == a) & (bab == b))[0])
        inverses.append(inv)
        if len(inv) != 1 and witness is None:
            witness = a
    return InverseOracle(witness is None, tuple(inverses), witness)


def idempotents_commute(S: SemigroupTable) -> bool:
    E = S.idempotents()
    return all(S.mul[e][f] == S.mul[f][e] for e in E for f in E)


def is_regular(S: SemigroupTable) -> bool:
    M = S.array()
    return all(bool(np.any(M[M[a, :], a] == a)) for a in S.elements)


# --------------------------------------------------------------------------
# Contracted semigroup algebra


def algebra_basis(S: SemigroupTable) -> tuple:
    """Basis of the contracted algebra: every element except a declared zero."""
    return tuple(a for a in S.elements if a != S.zero)


def rational_rank(rows) -> int:
    """Exact rank of a matrix with integer or Fraction entries."""
    A = [[Fraction(v) for v in r] for r in rows]
    if not A:
        return 0
    ncols = len(A[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(A)) if A[r][col] != 0), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        p = A[rank][col]
        for r in range(len(A)):
            if r != rank and A[r][col] != 0:
                f = A[r][col] / p
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
        if rank == len(A):
            break
    return rank


def trace_form(S: SemigroupTable) -> list:
    """Gram matrix ``tr(L_a L_b)`` of the left regular representation.

    ``L_a L_b = L_{ab}`` and ``tr L_c`` counts basis elements fixed by left
    multiplication by ``c``; a product equal to the declared zero is 0.
    """
    basis = algebra_basis(S)
    fixed = {c: sum(1 for b in basis if S.mul[c][b] == b) for c in basis}
    return [
        [0 if S.mul[a][b] == S.zero else fixed[S.mul[a][b]] for b in basis] for a in basis
    ]


def is_semisimple_algebra(S: SemigroupTable) -> bool:
    gram = trace_form(S)
    return rational_rank(gram) == len(gram)


# --------------------------------------------------------------------------
# Rees quotients and morphism search


def principal_factor(S: SemigroupTable, jclass: Sequence[int]) -> tuple:
    """Rees quotient ``J^0``: the class plus a zero, products leaving J sent to 0.

    Returns ``(table, elements)`` where ``elements[k]`` is the element of S
    behind local index ``k``; the zero is the last index.
    """
    elems = tuple(sorted(jclass))
    pos = {x: i for i, x in enumerate(elems)}
    z = len(elems)
    rows = []
    for x in elems:
        rows.append([pos.get(S.mul[x][y], z) for y in elems] + [z])
    rows.append([z] * (z + 1))
    labels = tuple(S.label(x) for x in elems) + ("0",)
    return validate_table(rows, z, labels=labels), elems


def _class_signature(S: SemigroupTable, green: GreenStructure, anti: bool) -> list:
    sig = []
    for a in S.elements:
        ls = len(green.lclasses[green.lclass_of[a]])
        rs = len(green.rclasses[green.rclass_of[a]])
        js = len(green.jclasses[green.jclass_of[a]])
        sig.append((S.mul[a][a] == a, (rs, ls) if anti else (ls, rs), js))
    return sig


def search_morphisms(
    S: SemigroupTable,
    T: SemigroupTable,
    *,
    anti: bool = False,
    involutive: bool = False,
    allowed: Optional[Sequence] = None,
) -> Iterator[tuple]:
    """Yield every bijection ``f: S -> T`` with ``f(ab) = f(a)f(b)``
    (or ``f(b)f(a)`` when ``anti``), optionally with ``f o f = id``.

    Backtracking with closure propagation: whenever ``f(a)`` and ``f(c)`` are
    known the image of ``ac`` is forced.  ``allowed[a]`` restricts candidate
    images; by default candidates must agree on idempotency and L/R/J class
    sizes (sizes swapped for anti-maps).
    """
    n = S.n
    if T.n != n or (involutive and S is not T and S != T):
        return
    if allowed is None:
        gs, gt = green_structure(S), green_structure(T)
        ss, st = _class_signature(S, gs, anti), _class_signature(T, gt, False)
        allowed = [frozenset(b for b in T.elements if st[b] == ss[a]) for a in S.elements]
    else:
        allowed = [frozenset(x) for x in allowed]
    mS, mT = S.mul, T.mul

    def assign(f, used, order, queue, a, b) -> bool:
        if f[a] != -1:
            return f[a] == b
        if used[b] or b not in allowed[a]:
            return False
        f[a] = b
        used[b] = True
        order.append(a)
        queue.append(a)
        if involutive and a != b:
            return assign(f, used, order, queue, b, a)
        return True

    def propagate(f, used, order, queue) -> bool:
        while queue:
            a = queue.pop()
            for c in list(order):
                for x, y in ((a, c), (c, a)):
                    img = mT[f[y]][f[x]] if anti else mT[f[x]][f[y]]
                    if not assign(f, used, order, queue, mS[x][y], img):
                        return False
        return True

    def rec(f, used, order):
        if len(order) == n:
            yield tuple(f)
            return
        a = next(x for x in range(n) if f[x] == -1)
        for b in sorted(allowed[a]):
            if used[b]:
                continue
            f2, used2, order2 = list(f), list(used), list(order)
            queue: list = []
            if assign(f2, used2, order2, queue, a, b) and propagate(f2, used2, order2, queue):
                yield from rec(f2, used2, order2)

    yield from rec([-1] * n, [False] * n, [])


def find_isomorphism(S: SemigroupTable, T: SemigroupTable) -> Optional[tuple]:
    return next(search_morphisms(S, T), None)
