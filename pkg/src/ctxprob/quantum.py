"""Born-rule conditional probabilities between orthonormal-basis contexts."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .logic import Logic, OrthogonalRep

ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class BasisContext:
    """Rows of ``vectors`` are the basis elements e_1..e_n."""

    vectors: np.ndarray
    tol: float = ORTHO_TOL

    def __post_init__(self):
        v = np.array(self.vectors, dtype=complex)
        if v.ndim != 2:
            raise ValueError("basis must be a 2-d array, one vector per row")
        gram = v.conj() @ v.T
        err = np.max(np.abs(gram - np.eye(len(v)))) if len(v) else 0.0
        if err > self.tol:
            raise ValueError(f"basis is not orthonormal (max Gram deviation {err:.3g})")
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @property
    def dimension(self) -> int:
        return self.vectors.shape[1]

    def __len__(self):
        return self.vectors.shape[0]

    def projectors(self) -> list["Projector"]:
        return [Projector.from_vector(x) for x in self.vectors]


@dataclass(frozen=True)
class Projector:
    matrix: np.ndarray
    tol: float = ORTHO_TOL

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("projector must be a square matrix")
        if np.max(np.abs(m - m.conj().T)) > self.tol:
            raise ValueError("projector is not Hermitian")
        if np.max(np.abs(m @ m - m)) > self.tol:
            raise ValueError("projector is not idempotent")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_vector(cls, x) -> "Projector":
        x = np.asarray(x, dtype=complex)
        return cls(np.outer(x, x.conj()))


@dataclass(frozen=True)
class PureState:
    vector: np.ndarray
    tol: float = ORTHO_TOL

    def __post_init__(self):
        v = np.array(self.vector, dtype=complex).ravel()
        if abs(np.linalg.norm(v) - 1.0) > self.tol:
            raise ValueError("state vector is not normalised")
        v.setflags(write=False)
        object.__setattr__(self, "vector", v)


def born_cond_prob_matrix(b1: BasisContext, b2: BasisContext,
                          tol: float = ORTHO_TOL) -> np.ndarray:
    """entry(i, j) = |<e_i, f_j>|^2.

    The result is doubly stochastic for any pair of complete bases; a row or
    column sum off by more than ``tol`` means the inputs were not orthonormal
    at that tolerance and raises ``ValueError``.
    """
    if b1.dimension != b2.dimension:
        raise ValueError(f"dimension mismatch: {b1.dimension} vs {b2.dimension}")
    if len(b1) != b1.dimension or len(b2) != b2.dimension:
        raise ValueError("both contexts must be complete bases")
    m = np.abs(b1.vectors.conj() @ b2.vectors.T) ** 2
    dev = max(np.max(np.abs(m.sum(axis=0) - 1)), np.max(np.abs(m.sum(axis=1) - 1)))
    if dev > tol:
        raise ValueError(f"non-orthonormal input: Born matrix deviates from doubly "
                         f"stochastic by {dev:.3g}")
    return m


def projector_trace_prob(e: Projector, f: Projector) -> float:
    if e.matrix.shape != f.matrix.shape:
        raise ValueError("dimension mismatch")
    # sum of diagonal of E F, without forming the product
    return float(np.einsum("ij,ji->", e.matrix, f.matrix).real)


def state_probability_vector(psi: PureState, b: BasisContext) -> np.ndarray:
    if psi.vector.shape[0] != b.dimension:
        raise ValueError(f"dimension mismatch: {psi.vector.shape[0]} vs {b.dimension}")
    return np.abs(b.vectors.conj() @ psi.vector) ** 2


def random_orthonormal_basis(d: int, rng: np.random.Generator) -> BasisContext:
    """Orthonormalise a d x d matrix of standard complex Gaussians."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    # fix column phases so the distribution is Haar
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return BasisContext(q.T)


def basis_from_rep(logic: Logic, rep: OrthogonalRep, context: str,
                   tol: float = ORTHO_TOL) -> BasisContext:
    c = logic.context(context)
    return BasisContext(np.array([rep[a] for a in c.atoms]), tol=tol)
