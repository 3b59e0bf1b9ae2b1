"""Superoperators: linear maps on density matrices, with arrow combinators.

A :class:`Superoperator` from basis A to basis B stores one output density
block per ordered input pair (a1, a2), i.e. a dense |A|^2 x |B|^2 matrix.
The combinator set is ``arr`` (lift a classical function), ``compose`` (also
spelled ``>>``), and ``first`` (act on the left component of a pair while
carrying the right component unchanged), together with measurement and the
left partial trace.  Linearity means two superoperators that agree on every
basis block agree on every density, so :func:`extensional_equal` compares
blocks entrywise.

All construction is deterministic: blocks are materialized in a fixed
row-major order, so identical inputs give bit-identical matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .basis import Basis, BasisMismatchError, Label, label_text, product
from .density import DensityMatrix
from .linear import LinearOp


class Superoperator:
    """Channel-like map between density matrices; immutable."""

    __slots__ = ("input_basis", "output_basis", "_matrix", "name")

    def __init__(self, input_basis: Basis, output_basis: Basis, matrix, name: str | None = None):
        m = np.array(matrix, dtype=complex)
        shape = (input_basis.size ** 2, output_basis.size ** 2)
        if m.shape != shape:
            raise ValueError(f"expected shape {shape}, got {m.shape}")
        m.setflags(write=False)
        self.input_basis = input_basis
        self.output_basis = output_basis
        self._matrix = m
        self.name = name

    @property
    def matrix(self) -> np.ndarray:
        """Row (a1, a2) holds the flattened output block for that input pair."""
        return self._matrix

    def block(self, a1: Label, a2: Label) -> DensityMatrix:
        n_in = self.input_basis.size
        n_out = self.output_basis.size
        row = self.input_basis.index_of(a1) * n_in + self.input_basis.index_of(a2)
        return DensityMatrix(self.output_basis, self._matrix[row].reshape(n_out, n_out))

    def apply(self, d: DensityMatrix) -> DensityMatrix:
        return apply(self, d)

    def __rshift__(self, other: "Superoperator") -> "Superoperator":
        return compose(self, other)

    def __repr__(self) -> str:
        tag = self.name or f"{self.input_basis.size}->{self.output_basis.size}"
        return f"Superoperator({tag})"


def apply(s: Superoperator, d: DensityMatrix) -> DensityMatrix:
    """Weighted sum of basis blocks: sum over (a1,a2) of d(a1,a2) * block."""
    if d.basis != s.input_basis:
        raise BasisMismatchError(
            f"cannot apply channel over {s.input_basis!r} to density over {d.basis!r}"
        )
    n_out = s.output_basis.size
    flat = d.matrix.reshape(-1) @ s.matrix
    return DensityMatrix(s.output_basis, flat.reshape(n_out, n_out))


def lin2super(f: LinearOp, name: str | None = None) -> Superoperator:
    """Lift a linear operator: it acts on the vector and, conjugated, on the dual.

    Block (a1, a2) at (b1, b2) is f(a1)(b1) * conj(f(a2)(b2)).
    """
    if name is None:
        name = f"lift({f.name})" if f.name else "lift"
    return Superoperator(f.input_basis, f.output_basis,
                         np.kron(f.matrix, f.matrix.conj()), name=name)


def arr(fn: Callable[[Label], Label], input_basis: Basis, output_basis: Basis,
        name: str | None = None) -> Superoperator:
    """Lift a classical total function by applying it to both pair components."""
    n_in = input_basis.size
    n_out = output_basis.size
    target = [output_basis.index_of(fn(label)) for label in input_basis]
    m = np.zeros((n_in * n_in, n_out * n_out), dtype=complex)
    for i1 in range(n_in):
        for i2 in range(n_in):
            m[i1 * n_in + i2, target[i1] * n_out + target[i2]] = 1.0
    return Superoperator(input_basis, output_basis, m, name=name or "arr")


def identity_arr(basis: Basis) -> Superoperator:
    return arr(lambda x: x, basis, basis, name="arr(id)")


def compose(s: Superoperator, t: Superoperator) -> Superoperator:
    """Diagrammatic composition: ``s`` acts first, then ``t``."""
    if s.output_basis != t.input_basis:
        raise BasisMismatchError(
            f"cannot compose: {s.output_basis!r} feeds into {t.input_basis!r}"
        )
    return Superoperator(s.input_basis, t.output_basis, s.matrix @ t.matrix)


def first(s: Superoperator, carried: Basis) -> Superoperator:
    """Act on the left pair component, carrying the right one unchanged.

    Input basis is (s.input x carried); the carried pair indices pass
    through as an exact identity on both the vector and dual sides.
    """
    n_a = s.input_basis.size
    n_b = s.output_basis.size
    n_d = carried.size
    blocks = s.matrix.reshape(n_a, n_a, n_b, n_b)
    eye = np.eye(n_d)
    # indices: a1,d1,a2,d2 -> b1,e1,b2,e2
    m = np.einsum("ijkl,mn,op->imjoknlp", blocks, eye, eye)
    m = m.reshape((n_a * n_d) ** 2, (n_b * n_d) ** 2)
    return Superoperator(
        product([s.input_basis, carried]),
        product([s.output_basis, carried]),
        m,
        name=f"first({s.name})" if s.name else "first",
    )


def second(s: Superoperator, carried: Basis) -> Superoperator:
    """Act on the right pair component: swap in, ``first``, swap out."""
    swap_in = arr(lambda t: (t[1], t[0]), product([carried, s.input_basis]),
                  product([s.input_basis, carried]), name="arr(swap)")
    swap_out = arr(lambda t: (t[1], t[0]), product([s.output_basis, carried]),
                   product([carried, s.output_basis]), name="arr(swap)")
    out = swap_in >> first(s, carried) >> swap_out
    out.name = f"second({s.name})" if s.name else "second"
    return out


def parallel(s: Superoperator, t: Superoperator) -> Superoperator:
    """Independent action on both pair components: first(s) then second(t)."""
    return first(s, t.input_basis) >> second(t, s.output_basis)


def permute_arr(perm, basis: Basis) -> Superoperator:
    """Positional shuffle of a product basis; output slot i takes factor perm[i]."""
    factors = basis.factors
    if factors is None:
        raise ValueError("permute_arr needs a product basis")
    perm = tuple(perm)
    if sorted(perm) != list(range(len(factors))):
        raise ValueError(f"permutation {perm!r} is not a bijection on {len(factors)} positions")
    out_basis = product([factors[p] for p in perm])
    return arr(lambda t: tuple(t[p] for p in perm), basis, out_basis,
               name=f"arr(permute{perm})")


def trace_left(pair_basis: Basis) -> Superoperator:
    """Discard the left component of a binary product basis.

    Block ((a1,b1),(a2,b2)) is the unit density at (b1,b2) when a1 == a2 and
    zero otherwise, i.e. matched left indices are summed away.
    """
    factors = pair_basis.factors
    if factors is None or len(factors) != 2:
        raise ValueError("trace_left needs a binary product basis")
    left, right = factors
    n_a, n_b = left.size, right.size
    n_in = n_a * n_b
    m = np.zeros((n_in * n_in, n_b * n_b), dtype=complex)
    for a in range(n_a):
        for b1 in range(n_b):
            for b2 in range(n_b):
                m[(a * n_b + b1) * n_in + (a * n_b + b2), b1 * n_b + b2] = 1.0
    return Superoperator(pair_basis, right, m, name=f"trace_left({n_a}x{n_b})")


def measure(basis: Basis) -> Superoperator:
    """Measure a state in its basis, keeping both halves of the outcome.

    The output pair is (collapsed state, observed classical value); only
    diagonal input pairs contribute, which is exactly decoherence.
    """
    n = basis.size
    out_basis = product([basis, basis])
    n_out = out_basis.size
    m = np.zeros((n * n, n_out * n_out), dtype=complex)
    for a in range(n):
        p = a * n + a
        m[a * n + a, p * n_out + p] = 1.0
    return Superoperator(basis, out_basis, m, name=f"measure({n})")


@dataclass(frozen=True)
class EqualityReport:
    equal: bool
    max_diff: float
    worst_input: tuple[Label, Label] | None
    worst_output: tuple[Label, Label] | None

    def __str__(self) -> str:
        if self.worst_input is None:
            return f"equal={self.equal} max_diff={self.max_diff:.3e}"
        pin = ",".join(label_text(l) for l in self.worst_input)
        pout = ",".join(label_text(l) for l in self.worst_output)
        return (f"equal={self.equal} max_diff={self.max_diff:.3e} "
                f"at block ({pin}) entry ({pout})")


def max_difference(s: Superoperator, t: Superoperator) -> float:
    if s.input_basis != t.input_basis or s.output_basis != t.output_basis:
        raise BasisMismatchError("cannot compare channels with differing bases")
    return float(np.max(np.abs(s.matrix - t.matrix)))


def extensional_equal(s: Superoperator, t: Superoperator, tol: float) -> EqualityReport:
    """Blockwise comparison; by linearity this decides equality on all densities."""
    if s.input_basis != t.input_basis or s.output_basis != t.output_basis:
        raise BasisMismatchError("cannot compare channels with differing bases")
    diff = np.abs(s.matrix - t.matrix)
    max_diff = float(np.max(diff))
    row, col = np.unravel_index(int(np.argmax(diff)), diff.shape)
    n_in = s.input_basis.size
    n_out = s.output_basis.size
    worst_in = (s.input_basis.element_at(row // n_in), s.input_basis.element_at(row % n_in))
    worst_out = (s.output_basis.element_at(col // n_out), s.output_basis.element_at(col % n_out))
    return EqualityReport(max_diff <= tol, max_diff, worst_in, worst_out)
