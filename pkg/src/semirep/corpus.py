"""Test and sweep corpora: exhaustive small semigroups, regular Rees matrix
semigroups, and random Corollary-form involutive Rees semigroups."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional, Sequence

import numpy as np

from .catalog import cyclic_group, symmetric_group, trivial_group
from .rees import ReesSemigroup, build_rees, regular_rees_corpus
from .semigroup import GroupData, SemigroupTable, validate_table


def _associative_so_far(t, n) -> bool:
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            if ab < 0:
                continue
            for c in range(n):
                bc = t[b][c]
                if bc < 0:
                    continue
                l, r = t[ab][c], t[a][bc]
                if l >= 0 and r >= 0 and l != r:
                    return False
    return True


def _labeled_tables(n: int) -> Iterator[tuple]:
    t = [[-1] * n for _ in range(n)]
    cells = [(a, b) for a in range(n) for b in range(n)]

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in t)
            return
        a, b = cells[k]
        for v in range(n):
            t[a][b] = v
            if _associative_so_far(t, n):
                yield from rec(k + 1)
        t[a][b] = -1

    yield from rec(0)


def canonical_form(mul) -> tuple:
    """Lexicographically smallest relabeling of a table (isomorphism invariant)."""
    n = len(mul)
    best = None
    for p in permutations(range(n)):
        inv = [0] * n
        for i, pi in enumerate(p):
            inv[pi] = i
        cand = tuple(tuple(p[mul[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
        if best is None or cand < best:
            best = cand
    return best


def enumerate_semigroups(n: int, up_to_iso: bool = False) -> list:
    """All semigroups on ``{0..n-1}`` (labeled), or one per isomorphism class
    (the lexicographically smallest table of each class, in sorted order)."""
    return list(_semigroups(n, up_to_iso))


@lru_cache(maxsize=None)
def _semigroups(n: int, up_to_iso: bool) -> tuple:
    tables = _labeled_tables(n)
    if up_to_iso:
        tables = sorted({canonical_form(t) for t in tables})
    return tuple(validate_table(t) for t in tables)


def rees_sweep(max_m: int = 2, max_n: int = 2, groups: Optional[Sequence[GroupData]] = None) -> list:
    """Every regular ``M^0(m, n, G, P)`` with ``m, n`` bounded and ``G`` in ``groups``
    (default: trivial group and C2)."""
    groups = groups if groups is not None else [trivial_group(), cyclic_group(2)]
    return list(regular_rees_corpus(max_m, max_n, groups))


@dataclass(frozen=True)
class CorollaryInstance:
    rees: ReesSemigroup
    star: tuple
    z: int
    g_star: tuple


def _group_involutions(G: GroupData) -> list:
    """Maps ``a -> h a^-1 h^-1`` that are involutions (``h^2`` central), deduplicated."""
    seen = []
    for h in G.elements:
        if not G.is_central(G.mul(h, h)):
            continue
        m = tuple(G.prod(h, G.inverse[a], G.inverse[h]) for a in G.elements)
        if m not in seen:
            seen.append(m)
    return seen


def corollary_instances(count: int, seed: int = 0, G: Optional[GroupData] = None,
                        max_size: int = 3) -> list:
    """Random involutive Rees semigroups ``M^0(I, I, G, P)`` in Corollary form:
    ``(a)_ij* = (z a*)_ji`` with ``p_ji* = z p_ij`` and central ``z`` with ``z* = z^-1``."""
    G = G or symmetric_group(3)
    rng = np.random.default_rng(seed)
    stars = _group_involutions(G)
    out = []
    while len(out) < count:
        gs = stars[int(rng.integers(len(stars)))]
        zs = [z for z in G.center() if gs[z] == G.inverse[z]]
        z = zs[int(rng.integers(len(zs)))]
        n = int(rng.integers(1, max_size + 1))
        P = [[None] * n for _ in range(n)]
        ok = True
        for i in range(n):
            for j in range(i, n):
                if rng.random() < 0.3:
                    continue  # p_ij = p_ji = 0
                if i == j:
                    # p_ii* = z p_ii
                    fixed = [p for p in G.elements if gs[p] == G.mul(z, p)]
                    if not fixed:
                        ok = False
                        break
                    P[i][i] = fixed[int(rng.integers(len(fixed)))]
                else:
                    p = int(rng.integers(G.order))
                    P[i][j] = p  # P[r][c] holds p_{rc}
                    P[j][i] = gs[G.mul(z, p)]  # p_{ji} = (z p_{ij})*
            if not ok:
                break
        if not ok:
            continue
        R = build_rees(n, n, G, P)
        if not R.is_regular:
            continue
        star = []
        for x in R.table.elements:
            c = R.coords(x)
            if c is None:
                star.append(x)
            else:
                i, j, a = c
                star.append(R.element(j, i, G.mul(z, gs[a])))
        out.append(CorollaryInstance(R, tuple(star), z, gs))
    return out


def labeled_count(n: int) -> int:
    return sum(1 for _ in _labeled_tables(n))
