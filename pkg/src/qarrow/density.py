"""Density matrices: statistical states over a basis.

A :class:`DensityMatrix` over basis A is a complex matrix indexed by
ordered pairs (a1, a2), with (row, column) = (a1, a2).  Construction is
purely structural: intermediate algebra values may be unphysical, so the
Hermitian / positive-semidefinite / unit-trace checks live in
:func:`diagnostics` rather than in constructors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import Basis, BasisMismatchError, Label, label_text, parse_label
from .vector import StateVector


class DensityMatrix:
    """Complex matrix over basis pairs; immutable."""

    __slots__ = ("basis", "_matrix")

    def __init__(self, basis: Basis, matrix):
        m = np.array(matrix, dtype=complex)
        if m.shape != (basis.size, basis.size):
            raise ValueError(f"expected shape {(basis.size, basis.size)}, got {m.shape}")
        m.setflags(write=False)
        self.basis = basis
        self._matrix = m

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def entry(self, a1: Label, a2: Label) -> complex:
        return complex(self._matrix[self.basis.index_of(a1), self.basis.index_of(a2)])

    def trace(self) -> complex:
        return complex(np.trace(self._matrix))

    def __add__(self, other: "DensityMatrix") -> "DensityMatrix":
        if self.basis != other.basis:
            raise BasisMismatchError("density matrices over differing bases")
        return DensityMatrix(self.basis, self._matrix + other._matrix)

    def __sub__(self, other: "DensityMatrix") -> "DensityMatrix":
        if self.basis != other.basis:
            raise BasisMismatchError("density matrices over differing bases")
        return DensityMatrix(self.basis, self._matrix - other._matrix)

    def __mul__(self, k) -> "DensityMatrix":
        return DensityMatrix(self.basis, k * self._matrix)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"DensityMatrix({self.basis!r})"


def pure_density(v: StateVector) -> DensityMatrix:
    """Embed a state vector: entry (a1, a2) = v(a1) * conj(v(a2)).

    Global phase drops out, so vectors differing by a phase embed to the
    same density matrix.
    """
    return DensityMatrix(v.basis, np.outer(v.amplitudes, v.amplitudes.conj()))


def zero_density(basis: Basis) -> DensityMatrix:
    return DensityMatrix(basis, np.zeros((basis.size, basis.size), dtype=complex))


def trace(d: DensityMatrix) -> complex:
    return d.trace()


def max_abs_diff(d1: DensityMatrix, d2: DensityMatrix) -> float:
    if d1.basis != d2.basis:
        raise BasisMismatchError("density matrices over differing bases")
    return float(np.max(np.abs(d1.matrix - d2.matrix)))


@dataclass(frozen=True)
class DiagnosticsReport:
    hermitian: bool
    psd: bool
    unit_trace: bool
    max_violation: float


def diagnostics(d: DensityMatrix, tol: float = 1e-9) -> DiagnosticsReport:
    """Physicality checks: Hermitian, positive semidefinite, unit trace.

    PSD is judged on the Hermitian part via an eigenvalue floor of ``-tol``
    (robust for rank-deficient pure states).  ``max_violation`` is the
    largest of the three deviations.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    m = d.matrix
    herm_dev = float(np.max(np.abs(m - m.conj().T)))
    eigenvalues = np.linalg.eigvalsh((m + m.conj().T) / 2.0)
    psd_dev = float(max(0.0, -np.min(eigenvalues)))
    trace_dev = float(abs(d.trace() - 1.0))
    return DiagnosticsReport(
        hermitian=herm_dev <= tol,
        psd=psd_dev <= tol,
        unit_trace=trace_dev <= tol,
        max_violation=max(herm_dev, psd_dev, trace_dev),
    )


def to_json_dict(d: DensityMatrix, precision: int | None = None) -> dict:
    """JSON-ready payload: {basis: [labels], re: [[..]], im: [[..]]}.

    With ``precision`` set, entries are rounded to that many decimals so the
    emitted file parses back bit-for-bit at the stated precision.
    """
    re = d.matrix.real
    im = d.matrix.imag
    if precision is not None:
        re = np.round(re, precision)
        im = np.round(im, precision)
    return {
        "basis": [label_text(l) for l in d.basis],
        "re": re.tolist(),
        "im": im.tolist(),
    }


def from_json_dict(payload: dict) -> DensityMatrix:
    basis = Basis(parse_label(text) for text in payload["basis"])
    m = np.array(payload["re"], dtype=float) + 1j * np.array(payload["im"], dtype=float)
    return DensityMatrix(basis, m)


def format_table(d: DensityMatrix, precision: int = 4) -> str:
    """Aligned text table with basis labels on both axes."""
    labels = [label_text(l) for l in d.basis]
    cells = [[f"{z.real:.{precision}f}{z.imag:+.{precision}f}j" for z in row] for row in d.matrix]
    width = max(
        max(len(t) for t in labels),
        max(len(c) for row in cells for c in row),
    )
    lead = max(len(t) for t in labels)
    lines = [" " * lead + "  " + "  ".join(t.rjust(width) for t in labels)]
    for label, row in zip(labels, cells):
        lines.append(label.rjust(lead) + "  " + "  ".join(c.rjust(width) for c in row))
    return "\n".join(lines)
