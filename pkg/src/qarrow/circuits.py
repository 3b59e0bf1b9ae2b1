"""Worked circuits as library artifacts.

The three-wire doubly-controlled-not is built twice: once as a single linear
operator in continuation style (each basis element threaded through the
seven-gate sequence), and once as an arrow pipeline of lifted gates glued by
explicit permutations.  The two constructions must agree, which the test
suite checks against an independently multiplied gate-matrix oracle.

Teleportation is split into the sender (entangle, measure, keep the two
classical bits) and the receiver (classically controlled corrections, then
discard the control bits); composing them is an identity channel on the
transported qubit.  ``copy`` and ``weaken`` are the two classical-function
lifts whose contrast shows which discards are physical: sharing is fine,
silently forgetting is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .basis import Basis, bool_basis, product
from .density import DensityMatrix, pure_density
from .linear import LinearOp, adjoint, controlled, from_rows, gate
from .superop import Superoperator, arr, first, lin2super, measure, trace_left
from .vector import StateVector, bind, named_state, unit


def _b() -> Basis:
    return bool_basis()


def _b2() -> Basis:
    b = bool_basis()
    return product([b, b])


def _b3() -> Basis:
    b = bool_basis()
    return product([b, b, b])


def toffoli_lin() -> LinearOp:
    """The 8x8 operator for wire order (top, middle, bottom).

    Continuation style: hadamard on bottom, controlled-phase middle->bottom,
    cnot top->middle, controlled-adjoint-phase middle->bottom, cnot
    top->middle, controlled-phase top->bottom, hadamard on bottom.
    """
    h = gate("hadamard")
    cnot = controlled(gate("qnot"))
    cphase = controlled(gate("phase"))
    caphase = controlled(adjoint(gate("phase")))

    def row(label: tuple) -> StateVector:
        top, middle, bottom = label
        return bind(h.row(bottom), lambda b1:
               bind(cphase.row((middle, b1)), lambda mb:
               bind(cnot.row((top, mb[0])), lambda tm:
               bind(caphase.row((tm[1], mb[1])), lambda mb2:
               bind(cnot.row((tm[0], mb2[0])), lambda tm2:
               bind(cphase.row((tm2[0], mb2[1])), lambda tb:
               bind(h.row(tb[1]), lambda b5:
               _unit3((tb[0], tm2[1], b5)))))))))

    return from_rows(row, _b3(), name="toffoli")


def _unit3(label: tuple) -> StateVector:
    return unit(_b3(), label)


def toffoli_super() -> Superoperator:
    """Arrow-style pipeline mirroring the circuit layout.

    Each stage routes the active wires to the front, applies the lifted gate
    with ``first``, and shuffles for the next stage.
    """
    b, bb, b3 = _b(), _b2(), _b3()
    had = lin2super(gate("hadamard"))
    cnot = lin2super(controlled(gate("qnot")))
    cphase = lin2super(controlled(gate("phase")))
    caphase = lin2super(controlled(adjoint(gate("phase"))))

    s = arr(lambda t: (t[2], (t[0], t[1])), b3, product([b, bb]))
    s = s >> first(had, bb)
    s = s >> arr(lambda t: ((t[1][1], t[0]), t[1][0]), product([b, bb]), product([bb, b]))
    s = s >> first(cphase, b)
    s = s >> arr(lambda t: ((t[1], t[0][0]), t[0][1]), product([bb, b]), product([bb, b]))
    s = s >> first(cnot, b)
    s = s >> arr(lambda t: ((t[0][1], t[1]), t[0][0]), product([bb, b]), product([bb, b]))
    s = s >> first(caphase, b)
    s = s >> arr(lambda t: ((t[1], t[0][0]), t[0][1]), product([bb, b]), product([bb, b]))
    s = s >> first(cnot, b)
    s = s >> arr(lambda t: ((t[0][0], t[1]), t[0][1]), product([bb, b]), product([bb, b]))
    s = s >> first(cphase, b)
    s = s >> arr(lambda t: (t[0][1], (t[0][0], t[1])), product([bb, b]), product([b, bb]))
    s = s >> first(had, bb)
    s = s >> arr(lambda t: (t[1][0], t[1][1], t[0]), product([b, bb]), b3)
    s.name = "toffoli"
    return s


def alice() -> Superoperator:
    """Sender half of teleportation; wire order (eprL, q) in, (m1, m2) out.

    cnot with q as control, hadamard on q, measure the pair, discard the
    collapsed half.  The output is fully decohered: a diagonal density of
    the two classical bits.
    """
    b, bb = _b(), _b2()
    s = arr(lambda t: (t[1], t[0]), bb, bb, name="arr(swap)")
    s = s >> lin2super(controlled(gate("qnot")))
    s = s >> first(lin2super(gate("hadamard")), b)
    s = s >> measure(bb)
    s = s >> trace_left(product([bb, bb]))
    s.name = "alice"
    return s


def bob() -> Superoperator:
    """Receiver half; wire order (eprR, m1, m2) in, the corrected qubit out.

    cnot controlled by m2, controlled-z by m1, then discard both bits.
    """
    b, bb, b3 = _b(), _b2(), _b3()
    cnot = lin2super(controlled(gate("qnot")))
    cz = lin2super(controlled(gate("z")))
    s = arr(lambda t: ((t[2], t[0]), t[1]), b3, product([bb, b]))
    s = s >> first(cnot, b)
    s = s >> arr(lambda t: ((t[1], t[0][1]), t[0][0]), product([bb, b]), product([bb, b]))
    s = s >> first(cz, b)
    s = s >> arr(lambda t: ((t[0][0], t[1]), t[0][1]), product([bb, b]), product([bb, b]))
    s = s >> trace_left(product([bb, b]))
    s.name = "bob"
    return s


def teleport() -> Superoperator:
    """Identity channel on the third wire; wire order (eprL, eprR, q)."""
    b, bb, b3 = _b(), _b2(), _b3()
    s = arr(lambda t: ((t[0], t[2]), t[1]), b3, product([bb, b]))
    s = s >> first(alice(), b)
    s = s >> arr(lambda t: (t[1], t[0][0], t[0][1]), product([bb, b]), b3)
    s = s >> bob()
    s.name = "teleport"
    return s


def prepare_teleport_input(q: StateVector) -> DensityMatrix:
    """Density of (entangled pair on wires 1,2) tensored with q on wire 3."""
    if q.basis != bool_basis():
        raise ValueError("teleport transports a single qubit")
    amps = np.kron(named_state("epr").amplitudes, q.amplitudes)
    return pure_density(StateVector(_b3(), amps))


def copy() -> Superoperator:
    """Share one wire onto two.  Copies classical data; entangles quantum data."""
    return arr(lambda x: (x, x), _b(), _b2(), name="copy")


def weaken() -> Superoperator:
    """Silently forget the left wire.  Not physically realizable; kept as the
    counterexample showing why discards must go through the partial trace."""
    return arr(lambda t: t[1], _b2(), _b(), name="weaken")


@dataclass(frozen=True)
class DemoCircuit:
    name: str
    description: str
    build: Callable[[], Superoperator]
    default_input: Callable[[], DensityMatrix]
    expected_output: Callable[[], DensityMatrix]


CATALOG: dict[str, DemoCircuit] = {
    "toffoli": DemoCircuit(
        name="toffoli",
        description="doubly-controlled not on (top, middle, bottom), input |T,T,F>",
        build=toffoli_super,
        default_input=lambda: pure_density(_unit3((True, True, False))),
        expected_output=lambda: pure_density(_unit3((True, True, True))),
    ),
    "teleport": DemoCircuit(
        name="teleport",
        description="teleport the superposed qubit qFT over a shared entangled pair",
        build=teleport,
        default_input=lambda: prepare_teleport_input(named_state("qFT")),
        expected_output=lambda: pure_density(named_state("qFT")),
    ),
}
