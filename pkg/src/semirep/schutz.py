"""Schützenberger representations, apexes, and the representation-theoretic
decision procedures: inverse semigroups via semiunitary representation pairs,
star-representability, and complete reducibility.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import (
    FactorizationObstruction,
    IndefiniteError,
    NoApex,
    NotRegular,
    NotRegularClass,
    NotSemisimple,
    OracleMismatch,
    SemigroupError,
)
from .involution import verify_involution
from .grouprep import GroupIrrep, irreducible_unitary_reps, regular_sum
from .linalg import DEFAULT_EPS, adjoint, as_cmatrix, is_invertible, is_preunitary, opnorm, positive_factor, solve_intertwiners
from .matrixrep import MatrixRep
from .rees import ReesCoordinatization, coordinatize_jclass, normalize_to_identity
from .semigroup import GreenStructure, SemigroupTable, brute_force_is_inverse, green_structure, is_semisimple_algebra

LEFT, RIGHT = "left", "right"
STAR_TOL = 1e-8


def _is_zero_class(S: SemigroupTable, J) -> bool:
    return S.zero is not None and tuple(J) == (S.zero,)


def _coordinates(S, jclass, green, normalize=True) -> ReesCoordinatization:
    coord = coordinatize_jclass(S, jclass, green)
    if normalize and coord.s == coord.t and coord.is_monomial:
        coord = normalize_to_identity(S, coord, green)
    return coord


def schutzenberger_rep(S: SemigroupTable, J, sigma, side: str = LEFT,
                       green: Optional[GreenStructure] = None) -> MatrixRep:
    """``s -> sigma(M_J(s))`` on ``C[G_e]^s`` (left) or ``C[G_e]^t`` (right).

    ``J`` is a J-class index or a ready ``ReesCoordinatization``; ``sigma`` is a
    list of matrices indexed by local group element (or a ``GroupIrrep``).
    Left: ``s x_i = x_j g_ji`` puts ``sigma(g_ji)`` in block ``(j, i)``.
    Right: ``y_j s = h_ji y_i`` puts ``sigma(h_ji)`` in block ``(j, i)``.
    Products leaving the J-class contribute zero blocks.
    """
    if side not in (LEFT, RIGHT):
        raise ValueError("side must be 'left' or 'right'")
    green = green or green_structure(S)
    coord = J if isinstance(J, ReesCoordinatization) else None
    jclass = coord.jclass if coord else int(J)
    kind = "schutzenberger-left" if side == LEFT else "schutzenberger-right"
    if _is_zero_class(S, green.jclasses[jclass]):
        imgs = tuple(np.zeros((0, 0), dtype=complex) for _ in S.elements)
        return MatrixRep(S, 0, imgs, kind, apex=jclass, meta={"side": side})
    if not green.regular_j[jclass]:
        raise NotRegularClass(f"J-class {jclass} is not regular")
    if coord is None:
        coord = _coordinates(S, jclass, green)
    sig = [as_cmatrix(m) for m in getattr(sigma, "images", sigma)]
    k = sig[0].shape[0]
    reps = coord.x if side == LEFT else coord.y
    size = len(reps)
    images = []
    for s in S.elements:
        M = np.zeros((size * k, size * k), dtype=complex)
        for i, r in enumerate(reps):
            prod = S.mul[s][r] if side == LEFT else S.mul[r][s]
            c = coord.coords.get(prod)
            if c is None:
                continue
            if side == LEFT:
                j, _, g = c  # s x_i = x_j g
                M[j * k:(j + 1) * k, i * k:(i + 1) * k] = sig[g]
            else:
                _, j, g = c  # y_i s = g y_j
                M[i * k:(i + 1) * k, j * k:(j + 1) * k] = sig[g]
        images.append(M)
    return MatrixRep(S, size * k, tuple(images), kind, apex=jclass,
                     meta={"coord": coord, "sigma": sig, "side": side})


# --------------------------------------------------------------------------
# Theorem: inverse iff every J-class carries a semiunitary pair


@dataclass(frozen=True)
class JClassVerdict:
    jclass: int
    size: int
    group_order: int
    sandwich_normalized: bool
    semiunitary: bool
    failing_element: Optional[str]

    @property
    def semiunitary_pair_found(self) -> bool:
        return self.semiunitary

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "group_order": self.group_order,
            "sandwich_normalized": self.sandwich_normalized,
            "semiunitary": self.semiunitary,
            "failing_element": self.failing_element,
        }


@dataclass(frozen=True)
class InverseVerdict:
    is_inverse: bool
    per_jclass: tuple
    oracle_agrees: Optional[bool]
    reps: tuple = field(default=(), compare=False, repr=False)

    def to_json(self) -> dict:
        return {
            "is_inverse": self.is_inverse,
            "jclasses": [v.to_json() for v in self.per_jclass],
            "oracle_agrees": self.oracle_agrees,
        }


def _first_failure(rep: MatrixRep, eps: float) -> Optional[int]:
    for s in rep.source.elements:
        if not is_preunitary(rep.images[s], eps):
            return s
    return None


def jclass_pair(S: SemigroupTable, jclass: int, green: GreenStructure, seed: int = 0):
    """Coordinatization (normalized when possible) and the left/right
    Schützenberger representations with ``sigma`` the sum of all irreps."""
    if _is_zero_class(S, green.jclasses[jclass]):
        return None, schutzenberger_rep(S, jclass, None, LEFT, green), schutzenberger_rep(S, jclass, None, RIGHT, green)
    coord = _coordinates(S, jclass, green)
    sigma = regular_sum(irreducible_unitary_reps(coord.group, seed))
    return (coord, schutzenberger_rep(S, coord, sigma, LEFT, green),
            schutzenberger_rep(S, coord, sigma, RIGHT, green))


def is_inverse_via_reps(S: SemigroupTable, seed: int = 0, eps: float = DEFAULT_EPS,
                        oracle: bool = True, green: Optional[GreenStructure] = None) -> InverseVerdict:
    """Decide inversity by testing the canonical Schützenberger pair of every
    J-class for semiunitarity; optionally cross-check with the brute-force oracle."""
    green = green or green_structure(S)
    if not green.is_regular:
        bad = next(k for k, r in enumerate(green.regular_j) if not r)
        raise NotRegular(f"J-class {bad} (containing {S.label(green.jclasses[bad][0])}) is not regular")
    verdicts, reps = [], []
    for k, J in enumerate(green.jclasses):
        coord, left, right = jclass_pair(S, k, green, seed)
        fail = _first_failure(left, eps)
        if fail is None:
            fail = _first_failure(right, eps)
        verdicts.append(JClassVerdict(
            jclass=k,
            size=len(J),
            group_order=coord.group.order if coord else 1,
            sandwich_normalized=coord.normalized if coord else True,
            semiunitary=fail is None,
            failing_element=None if fail is None else S.label(fail),
        ))
        reps.append((left, right))
    result = all(v.semiunitary for v in verdicts)
    agrees = None
    if oracle:
        expected = brute_force_is_inverse(S).is_inverse
        agrees = expected == result
        if not agrees:
            raise OracleMismatch(f"representation verdict {result} but brute force says {expected}")
    return InverseVerdict(result, tuple(verdicts), agrees, tuple(reps))


def is_inverse_with_involution(S: SemigroupTable, star, seed: int = 0, eps: float = DEFAULT_EPS,
                               oracle: bool = True) -> bool:
    """Inverse with inverse map ``star`` iff the semiunitary pairs are also
    ``*``-representations."""
    star = verify_involution(S, star)
    green = green_structure(S)
    if not green.is_regular:
        result = False
    else:
        verdict = is_inverse_via_reps(S, seed, eps, oracle=oracle, green=green)
        result = verdict.is_inverse and all(
            rep.star_defect(star) <= STAR_TOL for pair in verdict.reps for rep in pair
        )
    if oracle:
        o = brute_force_is_inverse(S)
        expected = o.is_inverse and o.inverse_map == star
        if expected != result:
            raise OracleMismatch(f"star-representation verdict {result} but brute force says {expected}")
    return result


# --------------------------------------------------------------------------
# irreducible representations, apex, contragredient


def apex(pi: MatrixRep, green: Optional[GreenStructure] = None, eps: float = DEFAULT_EPS) -> tuple:
    """The regular J-class ``J`` with ``Ann(pi) = I_J`` and an idempotent of ``J``
    acting nonzero."""
    S = pi.source
    green = green or green_structure(S)
    ann = pi.annihilator(eps)
    for k, J in enumerate(green.jclasses):
        if not green.regular_j[k] or green.ideal_below(k) != ann:
            continue
        for e in J:
            if S.mul[e][e] == e and opnorm(pi.images[e]) > eps:
                return k, e
    raise NoApex("annihilator is not of the form I_J for a regular J-class")


def irreducible_reps(S: SemigroupTable, seed: int = 0, green: Optional[GreenStructure] = None,
                     check: bool = True) -> list:
    """``Ind_{G_e}(sigma)`` for every non-zero regular J-class and every
    irreducible ``sigma`` of its maximal subgroup (complete when C[S] is semisimple)."""
    green = green or green_structure(S)
    if check and not is_semisimple_algebra(S):
        raise NotSemisimple("the contracted semigroup algebra is not semisimple")
    out = []
    for k, J in enumerate(green.jclasses):
        if not green.regular_j[k] or _is_zero_class(S, J):
            continue
        coord = _coordinates(S, k, green)
        for idx, sigma in enumerate(irreducible_unitary_reps(coord.group, seed)):
            rep = schutzenberger_rep(S, coord, sigma.images, LEFT, green)
            meta = dict(rep.meta, irrep_index=idx, group_irrep=sigma)
            out.append(MatrixRep(S, rep.dim, rep.images, "irreducible", apex=k, meta=meta))
    return out


def contragredient(pi: MatrixRep, green: Optional[GreenStructure] = None) -> MatrixRep:
    """``Ind_{G_e}(sigma_check)`` with ``sigma_check(g) = sigma(g^-1)^T``."""
    S = pi.source
    if not is_semisimple_algebra(S):
        raise NotSemisimple("contragredient is defined up to equivalence only for semisimple C[S]")
    coord = pi.meta.get("coord")
    if coord is None:
        raise SemigroupError("contragredient needs a representation built by induction")
    G = coord.group
    sig = pi.meta["sigma"]
    dual = [sig[G.inverse[g]].T for g in G.elements]
    rep = schutzenberger_rep(S, coord, dual, pi.meta.get("side", LEFT), green)
    chi, chi_dual = np.array(pi.character()), np.array(rep.character())
    if np.max(np.abs(chi_dual - np.conj(chi))) > 1e-6:
        raise SemigroupError("contragredient character is not the conjugate character")
    return MatrixRep(S, rep.dim, rep.images, pi.kind, apex=pi.apex, meta=dict(pi.meta, sigma=dual))


def hom_dimension(pi1, pi2, eps: float = 1e-8) -> int:
    """``dim Hom_S(pi1, pi2)``: intertwiners ``X`` with ``pi2(s) X = X pi1(s)``."""
    return len(solve_intertwiners(pi2, pi1, eps))


def equivalent(pi1, pi2, eps: float = 1e-8) -> bool:
    imgs1 = getattr(pi1, "images", pi1)
    imgs2 = getattr(pi2, "images", pi2)
    if imgs1[0].shape != imgs2[0].shape:
        return False
    basis = solve_intertwiners(imgs2, imgs1, eps)
    return len(basis) == 1 and is_invertible(basis[0], 1e-6)


# --------------------------------------------------------------------------
# star-representability


@dataclass(frozen=True)
class IrrepStarResult:
    jclass: int
    irrep_index: int
    dim: int
    equivalent: bool
    star_form_defect: Optional[float] = None

    def to_json(self) -> dict:
        return {
            "jclass": self.jclass,
            "irrep_index": self.irrep_index,
            "dim": self.dim,
            "equivalent": self.equivalent,
            "star_form_defect": self.star_form_defect,
        }


@dataclass(frozen=True)
class StarVerdict:
    star_representable: bool
    semisimple: bool
    reason: Optional[str]
    irreps: tuple
    star_forms: tuple = field(default=(), compare=False, repr=False)

    def to_json(self) -> dict:
        return {
            "star_representable": self.star_representable,
            "semisimple": self.semisimple,
            "reason": self.reason,
            "irreps": [r.to_json() for r in self.irreps],
        }


def star_form(pi: MatrixRep, star, eps: float = DEFAULT_EPS) -> MatrixRep:
    """An equivalent ``pi' = B pi B^-1`` with ``pi'(s*) = pi'(s)*``.

    ``A = B* B`` must solve ``pi(s)* A = A pi(s*)``; for irreducible ``pi`` the
    solutions form a line containing a Hermitian element, which is factored
    when it is (plus or minus) positive definite.
    """
    if pi.dim == 0:
        return pi
    imgs = pi.images
    lhs = [adjoint(imgs[s]) for s in pi.source.elements]
    rhs = [imgs[star[s]] for s in pi.source.elements]
    basis = solve_intertwiners(lhs, rhs, 1e-8)
    if len(basis) != 1:
        raise FactorizationObstruction(f"expected a one-dimensional solution space, got {len(basis)}")
    X = basis[0]
    lam = np.vdot(X, adjoint(X)) / np.vdot(X, X)  # X* = lam X
    A = np.sqrt(lam) * X
    A = (A + adjoint(A)) / 2
    signature = None
    for sign in (1, -1):
        try:
            B = positive_factor(sign * A, eps)
        except IndefiniteError as err:
            signature = err.signature
            continue
        new = pi.conjugated(B)
        if new.star_defect(star) <= STAR_TOL:
            return new
    raise FactorizationObstruction(
        "Hermitian intertwiner is indefinite for both signs; no equivalent *-representation exists",
        signature=signature,
    )


def star_representable_all(S: SemigroupTable, star, seed: int = 0, eps: float = DEFAULT_EPS,
                           construct: bool = True) -> StarVerdict:
    """Every representation of ``(S, *)`` is equivalent to a ``*``-representation
    iff C[S] is semisimple and ``pi_check ≃ D(pi)∘*`` for every irreducible ``pi``.

    With ``construct`` the ``*``-forms are built explicitly; an indefinite
    Hermitian intertwiner raises ``FactorizationObstruction`` whose
    ``verdict`` attribute holds the character-level result.
    """
    star = verify_involution(S, star)
    if not is_semisimple_algebra(S):
        return StarVerdict(False, False, "contracted algebra is not semisimple", ())
    green = green_structure(S)
    results, forms = [], []
    for pi in irreducible_reps(S, seed, green, check=False):
        dual = contragredient(pi, green)
        twisted = [pi.images[star[s]].T for s in S.elements]
        results.append(IrrepStarResult(pi.apex, pi.meta["irrep_index"], pi.dim, equivalent(dual, twisted)))
    ok = all(r.equivalent for r in results)
    verdict = StarVerdict(ok, True, None if ok else "contragredient not equivalent to D(pi)∘star", tuple(results))
    if not (ok and construct):
        return verdict
    final = []
    for r, pi in zip(results, irreducible_reps(S, seed, green, check=False)):
        try:
            new = star_form(pi, star, eps)
        except FactorizationObstruction as err:
            err.verdict = verdict
            raise
        forms.append(new)
        final.append(IrrepStarResult(r.jclass, r.irrep_index, r.dim, r.equivalent, new.star_defect(star)))
    return StarVerdict(True, True, None, tuple(final), tuple(forms))


# --------------------------------------------------------------------------
# complete reducibility


def is_completely_reducible(pi: MatrixRep, eps: float = 1e-8) -> bool:
    """True iff the algebra spanned by the images has a nondegenerate trace form.

    The span of the images of a representation is closed under products; its
    trace-form kernel is its radical (characteristic 0), and a semisimple
    matrix algebra makes the space a direct sum of irreducibles plus a part
    where everything acts as zero.
    """
    if pi.dim == 0:
        return True
    vecs = np.array([m.ravel() for m in pi.images])
    _, s, Vh = np.linalg.svd(vecs, full_matrices=False)
    if s.size == 0 or s[0] <= eps:
        return True
    rank = int(np.sum(s > eps * s[0]))
    basis = [Vh[k].reshape(pi.dim, pi.dim) for k in range(rank)]
    gram = np.array([[np.trace(a @ b) for b in basis] for a in basis])
    g = np.linalg.svd(gram, compute_uv=False)
    return bool(g.min() > eps * max(1.0, g.max()))
