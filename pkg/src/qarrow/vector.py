"""Amplitude vectors over a basis.

A :class:`StateVector` assigns a complex amplitude to every element of its
basis.  Vectors form a plain complex vector space: nothing here normalizes,
and the algebra is defined for arbitrary (even unphysical) amplitudes.
Sequencing is :func:`bind`, which sums over the input basis exactly as the
sum-over-paths picture suggests.
"""

from __future__ import annotations

import math

import numpy as np

from .basis import Basis, BasisMismatchError, Label, bool_basis, product


class StateVector:
    """Dense complex amplitudes indexed by a basis.  Immutable."""

    __slots__ = ("basis", "_amps")

    def __init__(self, basis: Basis, amplitudes):
        amps = np.array(amplitudes, dtype=complex)
        if amps.shape != (basis.size,):
            raise ValueError(
                f"expected {basis.size} amplitudes for {basis!r}, got shape {amps.shape}"
            )
        amps.setflags(write=False)
        self.basis = basis
        self._amps = amps

    @property
    def amplitudes(self) -> np.ndarray:
        """Read-only amplitude array in basis enumeration order."""
        return self._amps

    def amplitude(self, label: Label) -> complex:
        return complex(self._amps[self.basis.index_of(label)])

    def scale(self, k: complex) -> "StateVector":
        return StateVector(self.basis, k * self._amps)

    def bind(self, f) -> "StateVector":
        return bind(self, f)

    def tensor(self, other: "StateVector") -> "StateVector":
        return tensor(self, other)

    def dot(self, other: "StateVector") -> complex:
        return dot(self, other)

    def __add__(self, other: "StateVector") -> "StateVector":
        _require_same_basis(self, other)
        return StateVector(self.basis, self._amps + other._amps)

    def __sub__(self, other: "StateVector") -> "StateVector":
        _require_same_basis(self, other)
        return StateVector(self.basis, self._amps - other._amps)

    def __mul__(self, k) -> "StateVector":
        return self.scale(k)

    __rmul__ = __mul__

    def __neg__(self) -> "StateVector":
        return self.scale(-1)

    def __repr__(self) -> str:
        return f"StateVector({self.basis!r}, {np.array2string(self._amps, precision=4)})"


def _require_same_basis(v: StateVector, w: StateVector) -> None:
    if v.basis != w.basis:
        raise BasisMismatchError(f"vector bases differ: {v.basis!r} vs {w.basis!r}")


def unit(basis: Basis, label: Label) -> StateVector:
    """The computation terminating at ``label``: amplitude 1 there, 0 elsewhere."""
    amps = np.zeros(basis.size, dtype=complex)
    amps[basis.index_of(label)] = 1.0
    return StateVector(basis, amps)


def zero(basis: Basis) -> StateVector:
    return StateVector(basis, np.zeros(basis.size, dtype=complex))


def scale(k: complex, v: StateVector) -> StateVector:
    return v.scale(k)


def bind(v: StateVector, f) -> StateVector:
    """Sequence ``v`` through ``f``: result(b) = sum over a of v(a) * f(a)(b).

    ``f`` may be a :class:`~qarrow.linear.LinearOp` whose input basis matches
    ``v.basis``, or any callable mapping each basis label to a StateVector
    over one common output basis (the continuation form used when the output
    of one step feeds the next).
    """
    matrix = getattr(f, "matrix", None)
    if matrix is not None:
        if v.basis != f.input_basis:
            raise BasisMismatchError(
                f"cannot bind vector over {v.basis!r} through operator expecting {f.input_basis!r}"
            )
        return StateVector(f.output_basis, v.amplitudes @ matrix)
    out_basis: Basis | None = None
    acc: np.ndarray | None = None
    for amp, label in zip(v.amplitudes, v.basis):
        row = f(label)
        if out_basis is None:
            out_basis = row.basis
            acc = np.zeros(out_basis.size, dtype=complex)
        elif row.basis != out_basis:
            raise BasisMismatchError("continuation returned vectors over differing bases")
        acc += amp * row.amplitudes
    assert out_basis is not None and acc is not None
    return StateVector(out_basis, acc)


def tensor(v: StateVector, w: StateVector) -> StateVector:
    """Tensor product over the product basis; (a,b) entry is v(a) * w(b)."""
    return StateVector(product([v.basis, w.basis]), np.kron(v.amplitudes, w.amplitudes))


def dot(v: StateVector, w: StateVector) -> complex:
    """Inner product, conjugate-linear in the first argument."""
    _require_same_basis(v, w)
    return complex(np.vdot(v.amplitudes, w.amplitudes))


_NAMED: dict[str, StateVector] = {}


def named_state(name: str) -> StateVector:
    """Well-known states: qFalse, qTrue, qFT, qFmT, epr, p1, p2, p3.

    ``qFT``/``qFmT`` are the equal-weight superpositions with plus/minus
    sign; ``epr`` is the maximally entangled pair with amplitude 1/sqrt(2)
    on (F,F) and (T,T); p1..p3 are the standard tensor-product examples.
    """
    if not _NAMED:
        b = bool_basis()
        r = 1.0 / math.sqrt(2.0)
        q_false = unit(b, False)
        q_true = unit(b, True)
        q_ft = scale(r, q_false + q_true)
        q_fmt = scale(r, q_false - q_true)
        pair = product([b, b])
        epr = scale(r, unit(pair, (False, False)) + unit(pair, (True, True)))
        _NAMED.update(
            qFalse=q_false,
            qTrue=q_true,
            qFT=q_ft,
            qFmT=q_fmt,
            epr=epr,
            p1=tensor(q_ft, q_false),
            p2=tensor(q_false, q_ft),
            p3=tensor(q_ft, q_ft),
        )
    try:
        return _NAMED[name]
    except KeyError:
        valid = ", ".join(sorted(_NAMED))
        raise ValueError(f"unknown state name {name!r}; valid names: {valid}") from None
