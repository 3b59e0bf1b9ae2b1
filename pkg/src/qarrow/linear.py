"""Linear operators between bases: gates and their combinator algebra.

A :class:`LinearOp` stores one output row per input label (an
``input x output`` complex matrix), so applying it to a vector is a plain
row-vector/matrix product and composition is matrix multiplication in
diagrammatic order (first argument acts first).
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .basis import Basis, BasisMismatchError, Label, bool_basis, product
from .vector import StateVector, unit

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


class LinearOp:
    """Linear map stored densely, one StateVector row per input label."""

    __slots__ = ("input_basis", "output_basis", "_matrix", "name")

    def __init__(self, input_basis: Basis, output_basis: Basis, matrix, name: str | None = None):
        m = np.array(matrix, dtype=complex)
        if m.shape != (input_basis.size, output_basis.size):
            raise ValueError(
                f"expected shape {(input_basis.size, output_basis.size)}, got {m.shape}"
            )
        m.setflags(write=False)
        self.input_basis = input_basis
        self.output_basis = output_basis
        self._matrix = m
        self.name = name

    @property
    def matrix(self) -> np.ndarray:
        """Read-only matrix; entry [a, b] is the amplitude of b in row a."""
        return self._matrix

    def row(self, label: Label) -> StateVector:
        return StateVector(self.output_basis, self._matrix[self.input_basis.index_of(label)])

    def apply(self, v: StateVector) -> StateVector:
        from .vector import bind

        return bind(v, self)

    def __repr__(self) -> str:
        tag = self.name or f"{self.input_basis.size}->{self.output_basis.size}"
        return f"LinearOp({tag})"


def from_rows(fn: Callable[[Label], StateVector], input_basis: Basis, name: str | None = None) -> LinearOp:
    """Materialize a label-to-vector function; all rows must share one basis."""
    rows = [fn(label) for label in input_basis]
    out = rows[0].basis
    for r in rows[1:]:
        if r.basis != out:
            raise BasisMismatchError("rows returned vectors over differing bases")
    return LinearOp(input_basis, out, np.stack([r.amplitudes for r in rows]), name=name)


def fun2lin(fn: Callable[[Label], Label], input_basis: Basis, output_basis: Basis,
            name: str | None = None) -> LinearOp:
    """Lift a classical total function to the permutation-like linear map."""
    m = np.zeros((input_basis.size, output_basis.size), dtype=complex)
    for i, label in enumerate(input_basis):
        m[i, output_basis.index_of(fn(label))] = 1.0
    return LinearOp(input_basis, output_basis, m, name=name or "fun2lin")


def identity(basis: Basis) -> LinearOp:
    return LinearOp(basis, basis, np.eye(basis.size, dtype=complex), name="id")


_GATES: dict[str, LinearOp] = {}


def gate(name: str) -> LinearOp:
    """Single-qubit gates: qnot, phase, hadamard, z."""
    if not _GATES:
        b = bool_basis()
        _GATES["qnot"] = LinearOp(b, b, [[0, 1], [1, 0]], name="qnot")
        _GATES["phase"] = LinearOp(b, b, [[1, 0], [0, 1j]], name="phase")
        _GATES["hadamard"] = LinearOp(
            b, b, [[_INV_SQRT2, _INV_SQRT2], [_INV_SQRT2, -_INV_SQRT2]], name="hadamard"
        )
        _GATES["z"] = LinearOp(b, b, [[1, 0], [0, -1]], name="z")
    try:
        return _GATES[name]
    except KeyError:
        valid = ", ".join(sorted(_GATES))
        raise ValueError(f"unknown gate {name!r}; valid gates: {valid}") from None


def controlled(f: LinearOp) -> LinearOp:
    """Apply ``f`` only in the branch where the leading control qubit is True."""
    if f.input_basis != f.output_basis:
        raise ValueError("controlled() needs a square operator")
    a = f.input_basis

    def row(label):
        ctrl, val = label
        target = f.row(val) if ctrl else unit(a, val)
        return unit(bool_basis(), ctrl).tensor(target)

    return from_rows(row, product([bool_basis(), a]), name=f"controlled({f.name or 'op'})")


def adjoint(f: LinearOp) -> LinearOp:
    """Conjugate transpose; swaps input and output bases."""
    return LinearOp(f.output_basis, f.input_basis, f.matrix.conj().T,
                    name=f"adjoint({f.name})" if f.name else None)


def outer(v: StateVector, w: StateVector) -> LinearOp:
    """Outer product: entry (a1, a2) is v(a1) * conj(w(a2))."""
    if v.basis != w.basis:
        raise BasisMismatchError("outer product needs vectors over one basis")
    return LinearOp(v.basis, v.basis, np.outer(v.amplitudes, w.amplitudes.conj()))


def lin_plus(f: LinearOp, g: LinearOp) -> LinearOp:
    if f.input_basis != g.input_basis or f.output_basis != g.output_basis:
        raise BasisMismatchError("operator sum needs identical input and output bases")
    return LinearOp(f.input_basis, f.output_basis, f.matrix + g.matrix)


def lin_tensor(f: LinearOp, g: LinearOp) -> LinearOp:
    """Tensor of operators over the product bases; row (a,c) = f(a) (x) g(c)."""
    return LinearOp(
        product([f.input_basis, g.input_basis]),
        product([f.output_basis, g.output_basis]),
        np.kron(f.matrix, g.matrix),
        name=f"{f.name}(x){g.name}" if f.name and g.name else None,
    )


def compose(f: LinearOp, g: LinearOp) -> LinearOp:
    """Diagrammatic composition: ``f`` acts first, then ``g``."""
    if f.output_basis != g.input_basis:
        raise BasisMismatchError(
            f"cannot compose: {f.output_basis!r} feeds into {g.input_basis!r}"
        )
    return LinearOp(f.input_basis, g.output_basis, f.matrix @ g.matrix)
