"""Small named semigroups and groups used by the tests, the CLI and the corpus."""

from __future__ import annotations

from itertools import permutations, product

from .semigroup import GroupData, SemigroupTable, validate_table


def _table_from(elements, op, zero=None, labels=None) -> SemigroupTable:
    pos = {x: i for i, x in enumerate(elements)}
    rows = [[pos[op(x, y)] for y in elements] for x in elements]
    zero_idx = None if zero is None else pos[zero]
    return validate_table(rows, zero_idx, labels=labels)


# --- groups ---------------------------------------------------------------


def cyclic_group(n: int) -> GroupData:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return GroupData.from_table(table, labels=tuple(f"r{a}" if a else "1" for a in range(n)))


def trivial_group() -> GroupData:
    return cyclic_group(1)


def direct_product(G: GroupData, H: GroupData) -> GroupData:
    pairs = list(product(G.elements, H.elements))
    pos = {p: i for i, p in enumerate(pairs)}
    table = [
        [pos[(G.mul(a, c), H.mul(b, d))] for (c, d) in pairs] for (a, b) in pairs
    ]
    labels = tuple(f"({G.label(a)},{H.label(b)})" for a, b in pairs)
    return GroupData.from_table(table, labels=labels)


def symmetric_group(n: int) -> GroupData:
    """``S_n`` with ``(p*q)(x) = p(q(x))``; the identity comes first."""
    perms = sorted(permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    labels = tuple("".join(str(v + 1) for v in p) for p in perms)
    return GroupData.from_table(table, labels=labels)


def abelian_groups_up_to(order: int) -> dict:
    """Every abelian group of order <= ``order`` (for order <= 8), by name."""
    C = cyclic_group
    groups = {f"C{n}": C(n) for n in range(1, order + 1)}
    if order >= 4:
        groups["C2xC2"] = direct_product(C(2), C(2))
    if order >= 8:
        groups["C2xC4"] = direct_product(C(2), C(4))
        groups["C2xC2xC2"] = direct_product(direct_product(C(2), C(2)), C(2))
    return groups


# --- semigroups -----------------------------------------------------------


def trivial() -> SemigroupTable:
    return validate_table([[0]], labels=("e",))


def left_zero(n: int = 2) -> SemigroupTable:
    labels = ("x", "y") if n == 2 else tuple(f"x{i + 1}" for i in range(n))
    return validate_table([[a] * n for a in range(n)], labels=labels)


def right_zero(n: int = 2) -> SemigroupTable:
    return validate_table([list(range(n)) for _ in range(n)])


def chain(n: int) -> SemigroupTable:
    """Chain semilattice ``0 < 1 < ... < n-1`` with ``ab = min(a, b)``.

    The bottom is absorbing but is *not* declared as a zero, so it keeps its
    own one-dimensional representations.
    """
    return validate_table([[min(a, b) for b in range(n)] for a in range(n)])


def null_semigroup(n: int = 2) -> SemigroupTable:
    """Every product is 0 (index 0), declared as zero."""
    labels = ("0", "a") if n == 2 else None
    return validate_table([[0] * n for _ in range(n)], 0, labels=labels)


def brandt_b2() -> SemigroupTable:
    """The five-element Brandt semigroup: matrix units ``E_ij`` and 0."""
    units = [(i, j) for i in (1, 2) for j in (1, 2)]
    elements = units + ["0"]

    def op(x, y):
        if x == "0" or y == "0" or x[1] != y[0]:
            return "0"
        return (x[0], y[1])

    labels = tuple(f"E{i}{j}" for i, j in units) + ("0",)
    return _table_from(elements, op, zero="0", labels=labels)


def full_transformation_monoid(n: int) -> SemigroupTable:
    """``T_n`` with ``(fg)(x) = f(g(x))``; the identity map comes first."""
    maps = sorted(product(range(n), repeat=n), key=lambda f: (-len(set(f)), f))
    ident = tuple(range(n))
    maps.remove(ident)
    maps.insert(0, ident)
    labels = tuple("[" + "".join(str(v + 1) for v in f) + "]" for f in maps)
    return _table_from(maps, lambda f, g: tuple(f[g[x]] for x in range(n)), labels=labels)


def symmetric_inverse_monoid(n: int) -> SemigroupTable:
    """``I_n``: partial injections with ``(fg)(x) = f(g(x))``; the empty map is the zero.

    A partial map is a tuple with ``None`` for undefined points.  Elements are
    ordered by decreasing rank, so the identity is element 0.
    """
    maps = []
    for images in product(list(range(n)) + [None], repeat=n):
        defined = [v for v in images if v is not None]
        if len(defined) == len(set(defined)):
            maps.append(images)
    maps.sort(key=lambda f: (-sum(v is not None for v in f), [(-1 if v is None else v) for v in f]))

    def op(f, g):
        return tuple(None if g[x] is None else f[g[x]] for x in range(n))

    empty = (None,) * n

    def lab(f):
        parts = [f"{x + 1}>{v + 1}" for x, v in enumerate(f) if v is not None]
        return "{" + ",".join(parts) + "}"

    return _table_from(maps, op, zero=empty, labels=tuple(lab(f) for f in maps))


def group_semigroup(G: GroupData) -> SemigroupTable:
    return validate_table(G.table, labels=G.labels)


BUILTINS = {
    "trivial": trivial,
    "l2": lambda: left_zero(2),
    "r2": lambda: right_zero(2),
    "b2": brandt_b2,
    "t2": lambda: full_transformation_monoid(2),
    "i2": lambda: symmetric_inverse_monoid(2),
    "i3": lambda: symmetric_inverse_monoid(3),
    "chain2": lambda: chain(2),
    "chain3": lambda: chain(3),
    "chain4": lambda: chain(4),
    "null2": lambda: null_semigroup(2),
    "c2": lambda: group_semigroup(cyclic_group(2)),
    "c3": lambda: group_semigroup(cyclic_group(3)),
    "s3": lambda: group_semigroup(symmetric_group(3)),
}


def builtin(name: str) -> SemigroupTable:
    try:
        return BUILTINS[name.lower()]()
    except KeyError:
        raise KeyError(f"unknown builtin semigroup {name!r}; choose from {sorted(BUILTINS)}")
