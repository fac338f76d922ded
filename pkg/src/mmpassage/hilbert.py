"""Tensor-product Hilbert-space layout and dense operator algebra.

States live on an ordered chain of small subsystems (two qubits and a set
of interconnect modes), each truncated to a few levels.  Everything is a
dense complex numpy matrix; at the dimensions this package targets
(<= a few hundred) dense BLAS beats any sparse bookkeeping.

All container types are immutable after construction and safe to share
across worker processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-8
POSITIVITY_TOL = 1e-8


def _frozen_array(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=complex)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class SubsystemSpec:
    """One subsystem of the chain: a label, a level count and a kind."""

    label: str
    dimension: int
    kind: str  # "qubit" or "mode"

    def __post_init__(self):
        if self.dimension < 2:
            raise ValueError(f"subsystem {self.label!r}: dimension must be >= 2")
        if self.kind not in ("qubit", "mode"):
            raise ValueError(f"subsystem {self.label!r}: kind must be 'qubit' or 'mode'")


@dataclass(frozen=True)
class CompositeSpace:
    """Ordered tensor product of subsystems.

    The flat index of a product basis state is the row-major (C-order)
    ravel of its occupation tuple, i.e. the leftmost subsystem varies
    slowest.
    """

    subsystems: tuple[SubsystemSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "subsystems", tuple(self.subsystems))
        labels = [s.label for s in self.subsystems]
        if len(set(labels)) != len(labels):
            raise ValueError("subsystem labels must be unique")
        if not self.subsystems:
            raise ValueError("space needs at least one subsystem")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dimension for s in self.subsystems)

    @property
    def total_dimension(self) -> int:
        return math.prod(self.dims)

    @property
    def n_subsystems(self) -> int:
        return len(self.subsystems)

    def index_of(self, label: str) -> int:
        for i, s in enumerate(self.subsystems):
            if s.label == label:
                return i
        raise KeyError(f"no subsystem labelled {label!r}")

    def flat_index(self, occupation: Sequence[int]) -> int:
        """Flat basis index of a product state given per-subsystem occupations."""
        occ = tuple(occupation)
        if len(occ) != self.n_subsystems:
            raise ValueError(f"occupation list has {len(occ)} entries, expected {self.n_subsystems}")
        for n, s in zip(occ, self.subsystems):
            if not 0 <= n < s.dimension:
                raise ValueError(f"occupation {n} out of range for subsystem {s.label!r} (dim {s.dimension})")
        return int(np.ravel_multi_index(occ, self.dims))

    def low_excitation_basis(self) -> tuple[list[tuple[int, ...]], np.ndarray]:
        """Occupations and flat indices of the vacuum plus all one-excitation states.

        Ordering: vacuum first, then one quantum in each subsystem in chain
        order.  This is the invariant block of any excitation-preserving or
        excitation-lowering dynamics started in it.
        """
        n = self.n_subsystems
        occs = [tuple([0] * n)]
        for k in range(n):
            occ = [0] * n
            occ[k] = 1
            occs.append(tuple(occ))
        idx = np.array([self.flat_index(o) for o in occs], dtype=int)
        return occs, idx


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense complex operator tagged with the space it acts on.

    Hamiltonian-like entries are in angular frequency (rad/s); projector
    and collapse structure is dimensionless.
    """

    space: CompositeSpace
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = _frozen_array(self.matrix)
        d = self.space.total_dimension
        if m.shape != (d, d):
            raise ValueError(f"matrix shape {m.shape} does not match space dimension {d}")
        object.__setattr__(self, "matrix", m)

    def dag(self) -> "OperatorMatrix":
        return OperatorMatrix(self.space, self.matrix.conj().T)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def is_hermitian(self, tol: float = HERMITICITY_TOL) -> bool:
        return bool(np.max(np.abs(self.matrix - self.matrix.conj().T)) <= tol)

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        _check_same_space(self.space, other.space)
        return OperatorMatrix(self.space, self.matrix @ other.matrix)

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        _check_same_space(self.space, other.space)
        return OperatorMatrix(self.space, self.matrix + other.matrix)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        _check_same_space(self.space, other.space)
        return OperatorMatrix(self.space, self.matrix - other.matrix)

    def __rmul__(self, scalar: complex) -> "OperatorMatrix":
        return OperatorMatrix(self.space, scalar * self.matrix)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite state of the chain.

    The invariants are enforced at construction: hermiticity to 1e-10
    (elementwise), trace to 1e-8, minimum eigenvalue >= -1e-8.  States
    produced by integration at a relaxed tolerance carry a matching
    `positivity_tol` (truncation error shows up as slightly negative
    eigenvalues); exact constructions use the defaults.
    """

    space: CompositeSpace
    matrix: np.ndarray = field(repr=False)
    positivity_tol: float = POSITIVITY_TOL

    def __post_init__(self):
        m = _frozen_array(self.matrix)
        d = self.space.total_dimension
        if m.shape != (d, d):
            raise ValueError(f"matrix shape {m.shape} does not match space dimension {d}")
        object.__setattr__(self, "matrix", m)
        self.validate()

    def validate(self):
        m = self.matrix
        herm = float(np.max(np.abs(m - m.conj().T)))
        if herm > HERMITICITY_TOL:
            raise ValueError(f"density matrix not Hermitian: max |rho - rho^dag| = {herm:.3e}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix trace {tr} deviates from 1 beyond tolerance")
        evmin = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T)).min())
        if evmin < -self.positivity_tol:
            raise ValueError(f"density matrix not positive semidefinite: min eigenvalue {evmin:.3e}")

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


def _check_same_space(a: CompositeSpace, b: CompositeSpace):
    if a.dims != b.dims or tuple(s.label for s in a.subsystems) != tuple(s.label for s in b.subsystems):
        raise ValueError("operands live on different composite spaces")


def annihilation(dimension: int) -> np.ndarray:
    """Truncated lowering operator: <m|a|m+1> = sqrt(m+1)."""
    if dimension < 2:
        raise ValueError("annihilation operator needs dimension >= 2")
    a = np.zeros((dimension, dimension), dtype=complex)
    for m in range(dimension - 1):
        a[m, m + 1] = math.sqrt(m + 1)
    return a


def number(dimension: int) -> np.ndarray:
    """Number operator diag(0, 1, ..., d-1)."""
    return np.diag(np.arange(dimension, dtype=float)).astype(complex)


def embed(op: np.ndarray, index: int, space: CompositeSpace) -> OperatorMatrix:
    """Lift a single-subsystem operator to the full chain: I x ... x op x ... x I."""
    op = np.asarray(op, dtype=complex)
    if not 0 <= index < space.n_subsystems:
        raise IndexError(f"subsystem index {index} out of range")
    d_k = space.dims[index]
    if op.shape != (d_k, d_k):
        raise ValueError(f"operator shape {op.shape} does not match subsystem dimension {d_k}")
    left = math.prod(space.dims[:index])
    right = math.prod(space.dims[index + 1:])
    full = np.kron(np.kron(np.eye(left), op), np.eye(right))
    return OperatorMatrix(space, full)


def basis_state(space: CompositeSpace, occupation: Sequence[int]) -> DensityMatrix:
    """Pure projector onto the product level state with the given occupations."""
    v = basis_vector(space, occupation)
    return DensityMatrix(space, np.outer(v, v.conj()))


def basis_vector(space: CompositeSpace, occupation: Sequence[int]) -> np.ndarray:
    """Unit ket of a product basis state, as a flat complex vector."""
    v = np.zeros(space.total_dimension, dtype=complex)
    v[space.flat_index(occupation)] = 1.0
    return v


def expectation(rho: DensityMatrix, op: OperatorMatrix) -> complex:
    """Tr(rho op); real to ~1e-10 when op is Hermitian."""
    _check_same_space(rho.space, op.space)
    return complex(np.trace(rho.matrix @ op.matrix))
