"""Irreducible unitary representations of finite groups and group-level
involution checks.

The complete set of irreducibles is found numerically: a random Hermitian
matrix averaged over the regular representation lands in its commutant, whose
eigenspaces are subrepresentations.  Splitting recursively until each piece
has a one-dimensional commutant and deduplicating by character gives every
irreducible exactly once.  All randomness comes from a seeded generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import ConditionFails, FactorizationObstruction, IndefiniteError, NotEquivalent, NotInvolution, SemigroupError
from .linalg import (
    DEFAULT_EPS,
    adjoint,
    as_cmatrix,
    block_diag,
    is_invertible,
    is_unitary,
    opnorm,
    polar_decompose,
    positive_factor,
    psd_sqrt,
    solve_intertwiners,
)
from .semigroup import GroupData

CHAR_TOL = 1e-6
_CLUSTER_TOL = 1e-7


@dataclass(frozen=True, eq=False)
class GroupIrrep:
    group: GroupData
    dim: int
    images: tuple
    character: tuple  # one value per conjugacy class
    unitary: bool

    def __getitem__(self, g: int) -> np.ndarray:
        return self.images[g]

    def chi(self, g: int) -> complex:
        return self.character[self.group.class_of(g)]

    def element_character(self) -> np.ndarray:
        return np.array([self.chi(g) for g in self.group.elements])


def character_inner(G: GroupData, chi1: Sequence[complex], chi2: Sequence[complex]) -> complex:
    """Class-weighted inner product ``(1/|G|) sum_g chi1(g) conj(chi2(g))``."""
    total = sum(len(cls) * chi1[i] * np.conj(chi2[i]) for i, cls in enumerate(G.conj_classes))
    return complex(total / G.order)


def _class_character(G: GroupData, images) -> tuple:
    return tuple(complex(np.trace(images[cls[0]])) for cls in G.conj_classes)


def _make_irrep(G: GroupData, images) -> GroupIrrep:
    images = tuple(images)
    dim = images[0].shape[0]
    return GroupIrrep(G, dim, images, _class_character(G, images), all(is_unitary(m) for m in images))


def _regular_unitary(G: GroupData) -> list:
    return [m.astype(complex) for m in G.regular_matrices()]


def _split(images: list, rng: np.random.Generator, out: list, depth: int = 0) -> None:
    """Decompose a unitary representation (given by its images) into irreducibles."""
    k = images[0].shape[0]
    if k == 1:
        out.append(images)
        return
    for _ in range(8):
        X = rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k))
        H = (X + adjoint(X)) / 2
        H /= opnorm(H)
        C = sum(m @ H @ adjoint(m) for m in images) / len(images)
        C = (C + adjoint(C)) / 2
        w, V = np.linalg.eigh(C)
        clusters = [[0]]
        for i in range(1, k):
            if w[i] - w[clusters[-1][-1]] > _CLUSTER_TOL:
                clusters.append([i])
            else:
                clusters[-1].append(i)
        if len(clusters) > 1:
            for cl in clusters:
                Q = V[:, cl]
                _split([adjoint(Q) @ m @ Q for m in images], rng, out, depth + 1)
            return
        # scalar average: irreducible unless the random draw was unlucky
        if len(solve_intertwiners(images, images)) == 1:
            out.append(images)
            return
    raise SemigroupError("failed to split a reducible representation; try another seed")


def irreducible_unitary_reps(G: GroupData, seed: int = 0) -> list:
    """Every irreducible unitary representation of ``G`` up to equivalence.

    Sorted by dimension, then with the trivial representation first.
    """
    rng = np.random.default_rng(seed)
    pieces: list = []
    _split(_regular_unitary(G), rng, pieces)
    irreps: list = []
    for images in pieces:
        chi = np.array(_class_character(G, images))
        if any(np.max(np.abs(chi - np.array(r.character))) <= CHAR_TOL for r in irreps):
            continue
        irreps.append(_make_irrep(G, images))
    if sum(r.dim ** 2 for r in irreps) != G.order:
        raise SemigroupError("irreducible decomposition is incomplete")

    def key(r: GroupIrrep):
        return (r.dim, tuple((-round(c.real, 6), -round(c.imag, 6)) for c in r.character))

    irreps.sort(key=key)
    return irreps


def regular_sum(irreps: Sequence[GroupIrrep]) -> list:
    """Images of the direct sum of ``irreps`` (one block per irreducible)."""
    G = irreps[0].group
    return [block_diag([r.images[g] for r in irreps]) for g in G.elements]


def unitarize(G: GroupData, images) -> list:
    """Equivalent unitary form ``Q^{1/2} rho(g) Q^{-1/2}`` with ``Q = sum_g rho(g)* rho(g)``."""
    images = [as_cmatrix(m) for m in images]
    Q = sum(adjoint(m) @ m for m in images)
    R = psd_sqrt(Q)
    Rinv = np.linalg.inv(R)
    return [R @ m @ Rinv for m in images]


# --------------------------------------------------------------------------
# involutions on groups


def check_group_involution(G: GroupData, star: Sequence[int]) -> None:
    star = list(star)
    if sorted(star) != list(G.elements):
        raise NotInvolution("map is not a bijection of the group")
    for g in G.elements:
        if star[star[g]] != g:
            raise NotInvolution(f"star(star({G.label(g)})) != {G.label(g)}")
        for h in G.elements:
            if star[G.mul(g, h)] != G.mul(star[h], star[g]):
                raise NotInvolution(
                    f"(gh)* != h*g* for g={G.label(g)}, h={G.label(h)}"
                )


def check_group_star_condition(G: GroupData, star, irreps=None, seed: int = 0) -> bool:
    """``chi(g*) == conj(chi(g))`` for every irreducible character and element."""
    check_group_involution(G, star)
    irreps = irreps if irreps is not None else irreducible_unitary_reps(G, seed)
    return all(_star_character_ok(r, star) for r in irreps)


def _star_character_ok(sigma: GroupIrrep, star) -> bool:
    G = sigma.group
    return all(abs(sigma.chi(star[g]) - np.conj(sigma.chi(g))) <= CHAR_TOL for g in G.elements)


def star_representation_form(sigma: GroupIrrep, star, eps: float = DEFAULT_EPS) -> list:
    """An equivalent form ``s'`` of ``sigma`` with ``s'(g*) = s'(g)*``.

    Finds the unitary ``A`` with ``sigma(g*) = A sigma(g^-1) A^-1``, rescales
    so that ``A^2 = I``, factors ``A = B B*`` and conjugates by ``B^-1``.
    A Hermitian unitary ``A`` is positive definite only when ``A = I``; both
    signs are tried and ``FactorizationObstruction`` is raised if neither
    works.  Because the intertwiner is unique up to a scalar, the
    obstruction means no equivalent star-form exists.
    """
    G = sigma.group
    check_group_involution(G, star)
    if not _star_character_ok(sigma, star):
        raise ConditionFails("chi(g*) != conj(chi(g)) for this representation")
    twisted = [sigma.images[star[g]] for g in G.elements]
    inverted = [sigma.images[G.inverse[g]] for g in G.elements]
    basis = solve_intertwiners(twisted, inverted)
    if len(basis) != 1:
        raise SemigroupError(f"expected a one-dimensional intertwiner space, got {len(basis)}")
    A, _ = polar_decompose(basis[0])
    c = np.trace(A @ A) / sigma.dim
    A = A / np.sqrt(c)
    A = (A + adjoint(A)) / 2
    signature = None
    for sign in (1, -1):
        try:
            B = positive_factor(sign * A, eps)
        except IndefiniteError as err:
            signature = err.signature
            continue
        Binv = np.linalg.inv(B)
        new = [Binv @ m @ B for m in sigma.images]
        defect = max(opnorm(new[star[g]] - adjoint(new[g])) for g in G.elements)
        if defect <= 1e-8:
            return new
    raise FactorizationObstruction(
        "Hermitian intertwiner is indefinite for both signs; "
        "no equivalent star-representation exists",
        signature=signature,
    )


def unitary_intertwiner(pi1, pi2, T=None, seed: int = 0, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Unitary ``U`` with ``U pi1(s) = pi2(s) U`` from the polar part of an
    invertible intertwiner ``T`` (a random element of the hom-space unless
    given)."""
    imgs1 = [as_cmatrix(m) for m in getattr(pi1, "images", pi1)]
    imgs2 = [as_cmatrix(m) for m in getattr(pi2, "images", pi2)]
    if T is None:
        basis = solve_intertwiners(imgs2, imgs1, eps)
        if not basis or imgs1[0].shape != imgs2[0].shape:
            raise NotEquivalent("no nonzero intertwiner")
        rng = np.random.default_rng(seed)
        for _ in range(5):
            coef = rng.standard_normal(len(basis)) + 1j * rng.standard_normal(len(basis))
            T = sum(c * X for c, X in zip(coef, basis))
            if is_invertible(T, 1e-6):
                break
        else:
            raise NotEquivalent("no invertible intertwiner")
    T = as_cmatrix(T)
    if not is_invertible(T, eps):
        raise NotEquivalent("intertwiner is singular")
    U, _ = polar_decompose(T, eps)
    defect = max(opnorm(U @ a - b @ U) for a, b in zip(imgs1, imgs2))
    if defect > 1e-8 or not is_unitary(U):
        raise SemigroupError("polar part does not intertwine; inputs are not star-representations")
    return U
