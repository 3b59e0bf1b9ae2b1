"""Executable law suites for the vector monad and the channel arrows.

The three monad equations and the nine arrow equations are checked
numerically: each law becomes one :class:`LawReport` giving the number of
quantifier instances tried, the largest residual seen, and a description of
the worst instance.  Quantification runs over a curated operator pool plus
seeded random vectors, operators and classical functions, so a report is a
deterministic function of (seed, pool, tolerance).

Two deliberately broken implementations (:func:`skipping_bind` and
:func:`first_without_dual`) are exported as mutation fixtures: feeding them
to the suites must produce failing reports, which guards the suites against
passing vacuously.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import vector
from .basis import Basis, Label, bool_basis, label_text, product
from .linear import LinearOp, controlled, gate
from .superop import Superoperator, arr, first, identity_arr, lin2super, max_difference, measure, trace_left
from .vector import StateVector


@dataclass(frozen=True)
class LawReport:
    name: str
    cases: int
    max_residual: float
    passed: bool
    tolerance: float
    worst_case: str

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.cases} cases, max residual {self.max_residual:.3e})"


class SeededGenerator:
    """Deterministic random source for the suites.

    Backed by numpy's PCG64 bit generator, which produces an identical
    stream for a given 64-bit seed on every platform.  Amplitudes are drawn
    uniformly from the complex unit square (real and imaginary parts in
    [0, 1)).
    """

    def __init__(self, seed: int = 42):
        self.seed = seed
        self._rng = np.random.Generator(np.random.PCG64(seed))

    def amplitudes(self, n: int) -> np.ndarray:
        return self._rng.uniform(size=n) + 1j * self._rng.uniform(size=n)

    def vector(self, basis: Basis) -> StateVector:
        return StateVector(basis, self.amplitudes(basis.size))

    def linear(self, input_basis: Basis, output_basis: Basis) -> LinearOp:
        amps = self.amplitudes(input_basis.size * output_basis.size)
        return LinearOp(input_basis, output_basis,
                        amps.reshape(input_basis.size, output_basis.size), name="random")

    def qubit(self) -> StateVector:
        v = self.vector(bool_basis())
        return v.scale(1.0 / np.sqrt(vector.dot(v, v).real))

    def mapping(self, input_basis: Basis, output_basis: Basis) -> tuple[Callable[[Label], Label], str]:
        """Random total function between bases, with a printable table."""
        picks = [output_basis.element_at(int(i))
                 for i in self._rng.integers(output_basis.size, size=input_basis.size)]
        table = dict(zip(input_basis.labels, picks))
        desc = "{" + ", ".join(f"{label_text(k)}->{label_text(v)}" for k, v in table.items()) + "}"
        return (lambda x: table[x]), desc

    def permutation(self, basis: Basis) -> tuple[Callable[[Label], Label], str]:
        order = self._rng.permutation(basis.size)
        table = {basis.element_at(i): basis.element_at(int(j)) for i, j in enumerate(order)}
        desc = "{" + ", ".join(f"{label_text(k)}->{label_text(v)}" for k, v in table.items()) + "}"
        return (lambda x: table[x]), desc

    def pick(self, items: Sequence):
        return items[int(self._rng.integers(len(items)))]


def default_bases() -> list[Basis]:
    b = bool_basis()
    return [b, product([b, b]), product([b, b, b])]


def default_pool() -> list[Superoperator]:
    b = bool_basis()
    bb = product([b, b])
    return [
        lin2super(gate("hadamard")),
        lin2super(gate("qnot")),
        lin2super(controlled(gate("qnot"))),
        measure(b),
        trace_left(bb),
        arr(lambda t: (t[1], t[0]), bb, bb, name="arr(swap)"),
    ]


class _Tracker:
    """Accumulates the residual and worst-case witness for one law."""

    def __init__(self) -> None:
        self.cases = 0
        self.max_residual = 0.0
        self.worst = "none"

    def record(self, residual: float, witness: str) -> None:
        self.cases += 1
        if residual > self.max_residual or self.cases == 1:
            self.max_residual = residual
            self.worst = witness

    def report(self, name: str, tol: float) -> LawReport:
        return LawReport(name, self.cases, self.max_residual,
                         self.max_residual <= tol, tol, self.worst)


def _vec_residual(v: StateVector, w: StateVector) -> float:
    return float(np.max(np.abs(v.amplitudes - w.amplitudes)))


def check_monad_laws(gen: SeededGenerator | None = None,
                     bases: Sequence[Basis] | None = None,
                     n_cases: int = 50,
                     tol: float = 1e-9,
                     bind_fn: Callable = vector.bind) -> list[LawReport]:
    """Check the three monad equations; ``n_cases`` random draws per basis.

    ``bind_fn`` is injectable so the mutation fixtures can demonstrate the
    suite failing.
    """
    if n_cases < 1:
        raise ValueError("n_cases must be at least 1")
    gen = gen or SeededGenerator()
    bases = list(bases) if bases is not None else default_bases()

    left = _Tracker()
    for basis in bases:
        for case in range(n_cases):
            f = gen.linear(basis, gen.pick(bases))
            for x in basis:
                res = _vec_residual(bind_fn(vector.unit(basis, x), f), f.row(x))
                left.record(res, f"x={label_text(x)} over {basis!r}, case {case}")

    right = _Tracker()
    for basis in bases:
        ident = vector.unit  # return as a continuation
        for case in range(n_cases):
            v = gen.vector(basis)
            res = _vec_residual(bind_fn(v, lambda a: ident(basis, a)), v)
            right.record(res, f"random vector over {basis!r}, case {case}")

    assoc = _Tracker()
    for basis in bases:
        for case in range(n_cases):
            mid = gen.pick(bases)
            out = gen.pick(bases)
            v = gen.vector(basis)
            f = gen.linear(basis, mid)
            g = gen.linear(mid, out)
            lhs = bind_fn(bind_fn(v, f), g)
            rhs = bind_fn(v, lambda a: bind_fn(f.row(a), g))
            assoc.record(_vec_residual(lhs, rhs),
                         f"{basis!r}->{mid!r}->{out!r}, case {case}")

    return [
        left.report("monad/left-identity", tol),
        right.report("monad/right-identity", tol),
        assoc.report("monad/associativity", tol),
    ]


def _compare(track: _Tracker, lhs: Superoperator, rhs: Superoperator, witness: str) -> None:
    track.record(max_difference(lhs, rhs), witness)


def _id_times(fn: Callable[[Label], Label]) -> Callable[[Label], Label]:
    return lambda t: (t[0], fn(t[1]))


def check_arrow_laws(gen: SeededGenerator | None = None,
                     pool: Sequence[Superoperator] | None = None,
                     tol: float = 1e-9,
                     first_fn: Callable[[Superoperator, Basis], Superoperator] = first,
                     n_random: int = 20) -> list[LawReport]:
    """Check the nine arrow equations over the pool and random functions.

    Raises if the pool admits no instance of some law, so a badly shaped
    pool cannot silently produce an empty (vacuously passing) report.
    """
    gen = gen or SeededGenerator()
    pool = list(pool) if pool is not None else default_pool()
    if not pool:
        raise ValueError("arrow law pool must be non-empty")
    b = bool_basis()
    bb = product([b, b])
    fn_bases = [b, bb, Basis(("r", "g", "b"))]

    def name_of(s: Superoperator) -> str:
        return s.name or repr(s)

    left_id = _Tracker()
    right_id = _Tracker()
    for f in pool:
        _compare(left_id, identity_arr(f.input_basis) >> f, f, f"f={name_of(f)}")
        _compare(right_id, f >> identity_arr(f.output_basis), f, f"f={name_of(f)}")

    assoc = _Tracker()
    for f, g, h in itertools.product(pool, repeat=3):
        if f.output_basis != g.input_basis or g.output_basis != h.input_basis:
            continue
        _compare(assoc, (f >> g) >> h, f >> (g >> h),
                 f"f={name_of(f)}, g={name_of(g)}, h={name_of(h)}")
    if assoc.cases == 0:
        raise ValueError(
            "arrow/associativity: pool contains no composable triple; "
            f"shapes are {[(s.input_basis.size, s.output_basis.size) for s in pool]}"
        )

    arr_comp = _Tracker()
    for _ in range(n_random):
        src = gen.pick(fn_bases)
        mid = gen.pick(fn_bases)
        dst = gen.pick(fn_bases)
        fn_f, desc_f = gen.mapping(src, mid)
        fn_g, desc_g = gen.mapping(mid, dst)
        lhs = arr(lambda x: fn_g(fn_f(x)), src, dst)
        rhs = arr(fn_f, src, mid) >> arr(fn_g, mid, dst)
        _compare(arr_comp, lhs, rhs, f"f={desc_f}, g={desc_g}")

    first_arr = _Tracker()
    for _ in range(n_random):
        src = gen.pick(fn_bases)
        dst = gen.pick(fn_bases)
        carried = gen.pick([b, bb])
        fn, desc = gen.mapping(src, dst)
        lhs = first_fn(arr(fn, src, dst), carried)
        rhs = arr(lambda t: (fn(t[0]), t[1]), product([src, carried]), product([dst, carried]))
        _compare(first_arr, lhs, rhs, f"f={desc}, carried size {carried.size}")

    first_comp = _Tracker()
    for f, g in itertools.product(pool, repeat=2):
        if f.output_basis != g.input_basis:
            continue
        _compare(first_comp, first_fn(f >> g, b), first_fn(f, b) >> first_fn(g, b),
                 f"f={name_of(f)}, g={name_of(g)}")
    if first_comp.cases == 0:
        raise ValueError(
            "arrow/first-composes: pool contains no composable pair; "
            f"shapes are {[(s.input_basis.size, s.output_basis.size) for s in pool]}"
        )

    exchange = _Tracker()
    for f in pool:
        for carried_out in [b, bb]:
            fn, desc = gen.mapping(b, carried_out)
            lhs = first_fn(f, b) >> arr(_id_times(fn), product([f.output_basis, b]),
                                        product([f.output_basis, carried_out]))
            rhs = arr(_id_times(fn), product([f.input_basis, b]),
                      product([f.input_basis, carried_out])) >> first_fn(f, carried_out)
            _compare(exchange, lhs, rhs, f"f={name_of(f)}, g={desc}")

    drop = _Tracker()
    for f in pool:
        lhs = first_fn(f, b) >> arr(lambda t: t[0], product([f.output_basis, b]), f.output_basis)
        rhs = arr(lambda t: t[0], product([f.input_basis, b]), f.input_basis) >> f
        _compare(drop, lhs, rhs, f"f={name_of(f)}")

    reassoc = _Tracker()
    for f in pool:
        nested_in = product([product([f.input_basis, b]), b])
        nested_out = product([product([f.output_basis, b]), b])
        flat_in = product([f.input_basis, product([b, b])])
        flat_out = product([f.output_basis, product([b, b])])
        assoc_fn = lambda t: (t[0][0], (t[0][1], t[1]))
        lhs = first_fn(first_fn(f, b), b) >> arr(assoc_fn, nested_out, flat_out)
        rhs = arr(assoc_fn, nested_in, flat_in) >> first_fn(f, product([b, b]))
        _compare(reassoc, lhs, rhs, f"f={name_of(f)}")

    return [
        left_id.report("arrow/left-identity", tol),
        right_id.report("arrow/right-identity", tol),
        assoc.report("arrow/associativity", tol),
        arr_comp.report("arrow/arr-composes", tol),
        first_arr.report("arrow/first-arr", tol),
        first_comp.report("arrow/first-composes", tol),
        exchange.report("arrow/first-exchange", tol),
        drop.report("arrow/first-drop", tol),
        reassoc.report("arrow/first-assoc", tol),
    ]


def run_all(seed: int = 42, tol: float = 1e-9, n_cases: int = 50) -> list[LawReport]:
    """All twelve law reports with a fresh generator per suite."""
    monad = check_monad_laws(SeededGenerator(seed), n_cases=n_cases, tol=tol)
    arrow = check_arrow_laws(SeededGenerator(seed), tol=tol)
    return monad + arrow


# ---------------------------------------------------------------------------
# Mutation fixtures: intentionally wrong implementations that must make the
# suites fail.  They exist so a silently weakened suite cannot pass.

def skipping_bind(v: StateVector, f) -> StateVector:
    """Broken bind whose sum forgets the first basis element."""
    rows = [f.row(label) if isinstance(f, LinearOp) else f(label) for label in v.basis]
    out = rows[0].basis
    acc = np.zeros(out.size, dtype=complex)
    for amp, row in list(zip(v.amplitudes, rows))[1:]:
        acc += amp * row.amplitudes
    return StateVector(out, acc)


def first_without_dual(s: Superoperator, carried: Basis) -> Superoperator:
    """Broken first that reuses the primary carried index on the dual side."""
    n_a = s.input_basis.size
    n_b = s.output_basis.size
    n_d = carried.size
    blocks = s.matrix.reshape(n_a, n_a, n_b, n_b)
    eye = np.eye(n_d)
    # both carried output indices track d1; d2 is ignored
    partial = np.einsum("ijkl,mn,mp->imjknlp", blocks, eye, eye)
    m = np.broadcast_to(partial[:, :, :, None], (n_a, n_d, n_a, n_d, n_b, n_d, n_b, n_d))
    return Superoperator(
        product([s.input_basis, carried]),
        product([s.output_basis, carried]),
        m.reshape((n_a * n_d) ** 2, (n_b * n_d) ** 2),
        name="broken-first",
    )
