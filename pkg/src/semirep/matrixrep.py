from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any, Optional

import numpy as np

from .linalg import DEFAULT_EPS, adjoint, block_diag, opnorm
from .semigroup import SemigroupTable

KINDS = (
    "left standard",
    "right standard",
    "schutzenberger-left",
    "schutzenberger-right",
    "irreducible",
    "other",
)


@dataclass(frozen=True, eq=False)
class MatrixRep:
    """A map from the elements of ``source`` to ``dim x dim`` complex matrices.

    ``meta`` carries construction data (coordinatization, group
    representation, side) for representations built by Schutzenberger
    induction, so that derived representations can be rebuilt from it.
    """

    source: SemigroupTable
    dim: int
    images: tuple
    kind: str = "other"
    apex: Optional[int] = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown representation kind {self.kind!r}")
        if len(self.images) != self.source.n:
            raise ValueError("need one image per element")

    @classmethod
    def from_images(cls, S: SemigroupTable, images, kind="other", **kw) -> "MatrixRep":
        imgs = tuple(np.asarray(m, dtype=complex) for m in images)
        dim = imgs[0].shape[0] if imgs else 0
        return cls(S, dim, imgs, kind, **kw)

    def __getitem__(self, s: int) -> np.ndarray:
        return self.images[s]

    def multiplicativity_defect(self) -> float:
        S = self.source
        worst = 0.0
        for a in S.elements:
            for b in S.elements:
                d = opnorm(self.images[a] @ self.images[b] - self.images[S.mul[a][b]])
                worst = max(worst, d)
        return worst

    def is_multiplicative(self, eps: float = DEFAULT_EPS) -> bool:
        return self.multiplicativity_defect() <= eps

    def respects_zero(self, eps: float = DEFAULT_EPS) -> bool:
        z = self.source.zero
        return z is None or opnorm(self.images[z]) <= eps

    def character(self) -> tuple:
        return tuple(complex(np.trace(m)) for m in self.images)

    def annihilator(self, eps: float = DEFAULT_EPS) -> frozenset:
        return frozenset(s for s in self.source.elements if opnorm(self.images[s]) <= eps)

    def conjugated(self, B: np.ndarray, kind: Optional[str] = None) -> "MatrixRep":
        """``s -> B rho(s) B^{-1}``."""
        Binv = np.linalg.inv(B)
        imgs = tuple(B @ m @ Binv for m in self.images)
        return replace(self, images=imgs, kind=kind or self.kind)

    def star_defect(self, star) -> float:
        """``max_s |rho(s*) - rho(s)^*|``."""
        if self.dim == 0:
            return 0.0
        return max(opnorm(self.images[star[s]] - adjoint(self.images[s])) for s in self.source.elements)

    def direct_sum(self, other: "MatrixRep") -> "MatrixRep":
        imgs = tuple(block_diag([a, b]) for a, b in zip(self.images, other.images))
        return MatrixRep(self.source, self.dim + other.dim, imgs, "other")
