"""Line-oriented circuit files compiled to channel pipelines.

The file format is one directive per line, case-sensitive, with ``#``
comments:

    wires <name>+                 exactly once, first directive
    init <wire> <state>           state in {F, T, FT, FmT}; default is F
    init <wire> <wire> epr        entangle two wires
    gate <G> <wire>               G in {H, X, PHASE, Z, APHASE}
    cgate <G> <ctrl> <tgt>        control listed first
    measure <wire>                leaves the classical outcome on the wire
    discard <wire>                partial-traces the wire away

Routing compiles each step into permutation lifts, ``first`` applications
over the remaining wires, and partial traces: the glue one would otherwise
write by hand.  The pipeline operates on the flat tuple of live wires;
grouping into the binary pairs that ``first`` needs is done with pure
re-indexing lifts, which row-major ordering makes exact identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .basis import Basis, bool_basis, product
from .density import DensityMatrix, pure_density
from .linear import LinearOp, adjoint, controlled, gate
from .superop import Superoperator, arr, first, identity_arr, lin2super, measure, permute_arr, trace_left
from .vector import StateVector, named_state


class CircuitError(ValueError):
    """Parse or routing diagnostic carrying the offending line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


GATE_NAMES = ("H", "X", "PHASE", "Z", "APHASE")
STATE_NAMES = {"F": "qFalse", "T": "qTrue", "FT": "qFT", "FmT": "qFmT"}


def gate_op(name: str) -> LinearOp:
    if name == "APHASE":
        return adjoint(gate("phase"))
    table = {"H": "hadamard", "X": "qnot", "PHASE": "phase", "Z": "z"}
    return gate(table[name])


@dataclass(frozen=True)
class GateStep:
    gate: str
    wires: tuple[str, ...]
    line: int


@dataclass(frozen=True)
class MeasureStep:
    wire: str
    line: int


@dataclass(frozen=True)
class DiscardStep:
    wire: str
    line: int


@dataclass(frozen=True)
class StateInit:
    wire: str
    state: str
    line: int


@dataclass(frozen=True)
class EprInit:
    wires: tuple[str, str]
    line: int


@dataclass(frozen=True)
class CircuitIR:
    wires: tuple[str, ...]
    inits: tuple
    steps: tuple


def parse_circuit(text: str) -> CircuitIR:
    """Parse and validate a circuit description; raises :class:`CircuitError`."""
    wires: tuple[str, ...] | None = None
    inits: list = []
    steps: list = []
    initialized: set[str] = set()
    live: set[str] = set()
    past_inits = False

    def known_live_wire(lineno: int, w: str) -> str:
        if wires is None or w not in wires:
            raise CircuitError(lineno, f"unknown wire {w!r}")
        if w not in live:
            raise CircuitError(lineno, f"wire {w!r} used after discard")
        return w

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head, args = tokens[0], tokens[1:]

        if wires is None:
            if head != "wires":
                raise CircuitError(lineno, "first directive must be 'wires'")
            if not args:
                raise CircuitError(lineno, "'wires' needs at least one wire name")
            seen: set[str] = set()
            for w in args:
                if w in seen:
                    raise CircuitError(lineno, f"duplicate wire {w!r}")
                seen.add(w)
            wires = tuple(args)
            live = set(wires)
            continue

        if head == "wires":
            raise CircuitError(lineno, "duplicate 'wires' directive")

        if head == "init":
            if past_inits:
                raise CircuitError(lineno, "init must come before the first gate, measure or discard")
            if len(args) == 2:
                w, state = args
                known_live_wire(lineno, w)
                if state not in STATE_NAMES:
                    valid = ", ".join(STATE_NAMES)
                    raise CircuitError(lineno, f"unknown init state {state!r}; expected one of {valid}")
                if w in initialized:
                    raise CircuitError(lineno, f"wire {w!r} already initialized")
                initialized.add(w)
                inits.append(StateInit(w, state, lineno))
            elif len(args) == 3 and args[2] == "epr":
                w1, w2 = args[0], args[1]
                known_live_wire(lineno, w1)
                known_live_wire(lineno, w2)
                if w1 == w2:
                    raise CircuitError(lineno, "epr init needs two distinct wires")
                if w1 in initialized or w2 in initialized:
                    which = w1 if w1 in initialized else w2
                    raise CircuitError(lineno, f"wire {which!r} already initialized")
                initialized.update((w1, w2))
                inits.append(EprInit((w1, w2), lineno))
            else:
                raise CircuitError(
                    lineno, "malformed init; expected 'init <wire> <state>' or 'init <wire> <wire> epr'"
                )
        elif head == "gate":
            if len(args) != 2:
                raise CircuitError(lineno, "malformed gate; expected 'gate <G> <wire>'")
            g, w = args
            if g not in GATE_NAMES:
                raise CircuitError(lineno, f"unknown gate {g!r}; expected one of {', '.join(GATE_NAMES)}")
            known_live_wire(lineno, w)
            steps.append(GateStep(g, (w,), lineno))
            past_inits = True
        elif head == "cgate":
            if len(args) != 3:
                raise CircuitError(lineno, "malformed cgate; expected 'cgate <G> <ctrl> <tgt>'")
            g, ctrl, tgt = args
            if g not in GATE_NAMES:
                raise CircuitError(lineno, f"unknown gate {g!r}; expected one of {', '.join(GATE_NAMES)}")
            known_live_wire(lineno, ctrl)
            known_live_wire(lineno, tgt)
            if ctrl == tgt:
                raise CircuitError(lineno, "control and target must be distinct wires")
            steps.append(GateStep(g, (ctrl, tgt), lineno))
            past_inits = True
        elif head == "measure":
            if len(args) != 1:
                raise CircuitError(lineno, "malformed measure; expected 'measure <wire>'")
            w = known_live_wire(lineno, args[0])
            steps.append(MeasureStep(w, lineno))
            past_inits = True
        elif head == "discard":
            if len(args) != 1:
                raise CircuitError(lineno, "malformed discard; expected 'discard <wire>'")
            w = known_live_wire(lineno, args[0])
            if len(live) == 1:
                raise CircuitError(lineno, f"cannot discard {w!r}: it is the last live wire")
            live.remove(w)
            steps.append(DiscardStep(w, lineno))
            past_inits = True
        else:
            raise CircuitError(lineno, f"unknown directive {head!r}")

    if wires is None:
        raise CircuitError(1, "missing 'wires' directive")
    return CircuitIR(wires, tuple(inits), tuple(steps))


@dataclass(frozen=True)
class RoutedStage:
    description: str
    op: Superoperator


@dataclass(frozen=True)
class RoutedPipeline:
    input_wires: tuple[str, ...]
    output_wires: tuple[str, ...]
    stages: tuple[RoutedStage, ...]
    pipeline: Superoperator


def _wire_basis(names) -> Basis:
    return product([bool_basis() for _ in names])


def _front_permutation(live: list[str], operands: tuple[str, ...]) -> tuple[tuple[int, ...], list[str]]:
    order = list(operands) + [w for w in live if w not in operands]
    return tuple(live.index(w) for w in order), order


def _inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def _group_pair(j: int, k: int):
    def fn(t):
        head = t[0] if j == 1 else t[:j]
        tail = t[j] if k - j == 1 else t[j:]
        return (head, tail)

    return fn


def _ungroup_pair(j: int, k: int):
    def fn(t):
        head = (t[0],) if j == 1 else t[0]
        tail = (t[1],) if k - j == 1 else t[1]
        return head + tail

    return fn


def route(ir: CircuitIR) -> RoutedPipeline:
    """Compile validated IR to a pipeline over the flat live-wire basis."""
    live = list(ir.wires)
    stages: list[RoutedStage] = []

    def emit(description: str, op: Superoperator) -> None:
        stages.append(RoutedStage(description, op))

    def to_front(operands: tuple[str, ...]) -> tuple[int, ...]:
        perm, _ = _front_permutation(live, operands)
        if perm != tuple(range(len(live))):
            emit(f"route {','.join(operands)} to front", permute_arr(perm, _wire_basis(live)))
        return perm

    def from_front(perm: tuple[int, ...]) -> None:
        if perm != tuple(range(len(live))):
            emit("restore wire order", permute_arr(_inverse(perm), _wire_basis(live)))

    for step in ir.steps:
        k = len(live)
        if isinstance(step, GateStep):
            j = len(step.wires)
            base = gate_op(step.gate)
            op = lin2super(controlled(base) if j == 2 else base)
            perm = to_front(step.wires)
            if j == k:
                emit(f"apply {step.gate} on {','.join(step.wires)}", op)
            else:
                rest = _wire_basis(range(k - j))
                flat = _wire_basis(range(k))
                grouped_in = product([op.input_basis, rest])
                grouped_out = product([op.output_basis, rest])
                if k - j >= 2 or j >= 2:
                    emit("group operands", arr(_group_pair(j, k), flat, grouped_in))
                emit(f"apply {step.gate} on {','.join(step.wires)}", first(op, rest))
                if k - j >= 2 or j >= 2:
                    emit("ungroup operands", arr(_ungroup_pair(j, k), grouped_out, flat))
            from_front(perm)
        elif isinstance(step, MeasureStep):
            b = bool_basis()
            if k == 1:
                emit(f"measure {step.wire}", measure(b))
                emit("drop collapsed copy", trace_left(product([b, b])))
                continue
            perm = to_front((step.wire,))
            rest = _wire_basis(range(k - 1))
            flat = _wire_basis(range(k))
            grouped = product([b, rest])
            if k >= 3:
                emit("group operands", arr(_group_pair(1, k), flat, grouped))
            emit(f"measure {step.wire}", first(measure(b), rest))
            pair_b = product([b, b])
            emit(
                "expose collapsed copy",
                arr(lambda t: (t[0][0], (t[0][1], t[1])),
                    product([pair_b, rest]), product([b, product([b, rest])])),
            )
            emit("drop collapsed copy", trace_left(product([b, product([b, rest])])))
            if k >= 3:
                emit("ungroup operands", arr(_ungroup_pair(1, k), grouped, flat))
            from_front(perm)
        elif isinstance(step, DiscardStep):
            b = bool_basis()
            perm = to_front((step.wire,))
            rest = _wire_basis(range(k - 1))
            flat = _wire_basis(range(k))
            if k >= 3:
                emit("group operands", arr(_group_pair(1, k), flat, product([b, rest])))
            emit(f"discard {step.wire}", trace_left(product([b, rest])))
            live.remove(step.wire)
        else:  # pragma: no cover - parse produces only the three step kinds
            raise TypeError(f"unknown step {step!r}")

    pipeline: Superoperator | None = None
    for stage in stages:
        pipeline = stage.op if pipeline is None else pipeline >> stage.op
    if pipeline is None:
        pipeline = identity_arr(_wire_basis(ir.wires))
    return RoutedPipeline(ir.wires, tuple(live), tuple(stages), pipeline)


def initial_density(ir: CircuitIR) -> DensityMatrix:
    """Pure input density from the init directives; unmentioned wires are F."""
    chunks: list[tuple[tuple[str, ...], np.ndarray]] = []
    initialized: set[str] = set()
    for init in ir.inits:
        if isinstance(init, StateInit):
            chunks.append(((init.wire,), named_state(STATE_NAMES[init.state]).amplitudes))
            initialized.add(init.wire)
        else:
            chunks.append((init.wires, named_state("epr").amplitudes))
            initialized.update(init.wires)
    for w in ir.wires:
        if w not in initialized:
            chunks.append(((w,), named_state("qFalse").amplitudes))

    concat_order = [w for chunk in chunks for w in chunk[0]]
    amps = reduce(np.kron, [chunk[1] for chunk in chunks])
    basis = _wire_basis(ir.wires)
    if concat_order != list(ir.wires):
        src_basis = _wire_basis(concat_order)
        slot = {w: i for i, w in enumerate(ir.wires)}
        out = np.zeros(basis.size, dtype=complex)
        for idx, label in enumerate(basis):
            ordered = label if isinstance(label, tuple) else (label,)
            src = tuple(ordered[slot[w]] for w in concat_order)
            out[idx] = amps[src_basis.index_of(src if len(src) > 1 else src[0])]
        amps = out
    return pure_density(StateVector(basis, amps))
