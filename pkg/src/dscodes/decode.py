"""Syndrome-table and maximum-likelihood decoding over joint faults.

The noise model is the abstract one where data qubits depolarize before
extraction and each extracted syndrome bit then flips independently; no
errors land on data qubits during extraction itself.  Decoding success is
always judged modulo stabilizer equivalence of the data part: the flip
part never touches the encoded state.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .code import CheckSet, Fault, iter_error_syndromes
from .symplectic import BitVector, DimensionError
from .verify import FaultBudget, check_global

__all__ = [
    "NoiseModel",
    "SyndromeTable",
    "TrialStats",
    "UncorrectableBudgetError",
    "build_table",
    "decode",
    "ml_decode",
    "run_trials",
    "sample_fault",
]


class UncorrectableBudgetError(ValueError):
    """The check set cannot distinguish all faults in the requested budget."""

    def __init__(self, report) -> None:
        self.report = report
        w = report.witness
        detail = ""
        if w is not None:
            detail = f": {w[0].describe()} vs {w[1].describe()} share syndrome {report.syndrome}"
        super().__init__(f"budget not decodable{detail}")


def _reversed_bits(word: int, width: int) -> int:
    out = 0
    for i in range(width):
        out |= ((word >> i) & 1) << (width - 1 - i)
    return out


def _table_key(e_bits: int, f_bits: int, dw: int, fw: int, n: int, m: int):
    # Minimal combined weight wins; ties break lexicographically on the
    # rendered (data vector, flip vector) bit strings, index 0 first.
    return (dw + fw, _reversed_bits(e_bits, 2 * n), _reversed_bits(f_bits, m))


def _iter_budget_faults(checkset: CheckSet, budget: FaultBudget):
    """Yield (e_bits, syndrome_bits, data_w, f_bits, flip_w) within budget."""
    m = checkset.m
    flip_layers: list[list[int]] = [[0]]
    for w in range(1, budget.flip_max + 1):
        flip_layers.append(
            [sum(1 << i for i in bits) for bits in itertools.combinations(range(m), w)]
        )

    def emit(e: int, s: int, dw: int):
        for fw in range(budget.flip_max + 1):
            if not budget.admits(dw, fw):
                break
            for f in flip_layers[fw]:
                yield e, s, dw, f, fw

    yield from emit(0, 0, 0)
    if budget.data_max >= 1:
        for e, s, dw in iter_error_syndromes(checkset, 1, budget.data_max):
            yield from emit(e, s, dw)


@dataclass(frozen=True)
class SyndromeTable:
    """Observed syndrome -> minimal representative fault, for one budget.

    Every in-budget fault's observed syndrome is a key; the stored fault
    has minimal combined weight, ties broken lexicographically on the
    (data vector, flip vector) bit strings.  Correctness of lookups modulo
    stabilizer equivalence is guaranteed by the distinguishability check
    run at construction time.
    """

    checkset: CheckSet
    budget: FaultBudget
    entries: dict[int, Fault]

    def __len__(self) -> int:
        return len(self.entries)


def build_table(checkset: CheckSet, budget: FaultBudget) -> SyndromeTable:
    """Tabulate minimal faults by observed syndrome; refuses bad budgets.

    Raises :class:`UncorrectableBudgetError` carrying the collision witness
    when two in-budget faults with different encoded effects share a
    syndrome.
    """
    report = check_global(checkset, budget)
    if not report.ok:
        raise UncorrectableBudgetError(report)
    n = checkset.n
    m = checkset.m
    best: dict[int, tuple[tuple, int, int]] = {}
    for e, s, dw, f, fw in _iter_budget_faults(checkset, budget):
        key = _table_key(e, f, dw, fw, n, m)
        observed = s ^ f
        held = best.get(observed)
        if held is None or key < held[0]:
            best[observed] = (key, e, f)
    entries = {
        observed: Fault(BitVector(e, 2 * n), BitVector(f, m))
        for observed, (_, e, f) in best.items()
    }
    return SyndromeTable(checkset, budget, entries)


def decode(table: SyndromeTable, observed: BitVector) -> Fault | None:
    """Exact lookup; None marks a detected-uncorrectable syndrome."""
    if observed.n != table.checkset.m:
        raise DimensionError(f"syndrome length {observed.n}, expected {table.checkset.m}")
    return table.entries.get(observed.bits)


@dataclass(frozen=True)
class NoiseModel:
    """Independent depolarizing data noise plus independent syndrome flips.

    Each qubit suffers X, Y, or Z with probability p/3 each; each extracted
    bit flips with probability q.
    """

    p: float
    q: float
    seed: int = 0

    def __post_init__(self) -> None:
        if not (0.0 <= self.p <= 1.0 and 0.0 <= self.q <= 1.0):
            raise ValueError(f"probabilities out of range: p={self.p}, q={self.q}")

    def rng(self) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(self.seed)))


def sample_fault(
    model: NoiseModel, n: int, m: int, rng: np.random.Generator | None = None
) -> Fault:
    """Draw one joint fault; n + m uniforms are consumed in index order."""
    if rng is None:
        rng = model.rng()
    u = rng.random(n + m)
    x = 0
    z = 0
    third = model.p / 3.0
    for q in range(n):
        if u[q] < third:
            x |= 1 << q
        elif u[q] < 2 * third:
            x |= 1 << q
            z |= 1 << q
        elif u[q] < model.p:
            z |= 1 << q
    flips = 0
    for i in range(m):
        if u[n + i] < model.q:
            flips |= 1 << i
    return Fault(BitVector(x | (z << n), 2 * n), BitVector(flips, m))


def ml_decode(
    checkset: CheckSet,
    observed: BitVector,
    model: NoiseModel,
    budget_cap: int,
) -> Fault | None:
    """Most likely fault class consistent with an observed syndrome.

    Enumerates every fault of combined weight at most ``budget_cap`` whose
    observed syndrome matches, merges data parts that differ by a
    stabilizer element by summing their probabilities (the flip part is
    determined by the data part), and returns the minimal representative
    of the best class.  Ties break like syndrome-table entries.  None
    means nothing within the cap explains the observation.
    """
    if observed.n != checkset.m:
        raise DimensionError(f"syndrome length {observed.n}, expected {checkset.m}")
    if not (0.0 < model.p < 1.0 and 0.0 < model.q < 1.0):
        raise ValueError("maximum-likelihood weighting needs p, q strictly inside (0, 1)")
    n = checkset.n
    m = checkset.m
    reduce = checkset.code.row_basis.reduce
    p3 = model.p / 3.0
    one_p = 1.0 - model.p
    q = model.q
    one_q = 1.0 - model.q

    classes: dict[int, float] = {}
    reps: dict[int, tuple[tuple, int, int]] = {}

    def consider(e: int, s: int, dw: int) -> None:
        f = s ^ observed.bits
        fw = f.bit_count()
        if dw + fw > budget_cap:
            return
        weight = (p3**dw) * (one_p ** (n - dw)) * (q**fw) * (one_q ** (m - fw))
        coset = reduce(e)
        classes[coset] = classes.get(coset, 0.0) + weight
        key = _table_key(e, f, dw, fw, n, m)
        held = reps.get(coset)
        if held is None or key < held[0]:
            reps[coset] = (key, e, f)

    consider(0, 0, 0)
    if budget_cap >= 1:
        for e, s, dw in iter_error_syndromes(checkset, 1, budget_cap):
            consider(e, s, dw)
    if not classes:
        return None
    best_coset = min(classes, key=lambda c: (-classes[c], reps[c][0]))
    _, e, f = reps[best_coset]
    return Fault(BitVector(e, 2 * n), BitVector(f, m))


@dataclass(frozen=True)
class TrialStats:
    """Outcome counts of a simulation run.

    Every trial is exactly one of: success, logical error (a correction
    was applied but acts differently on the encoded state), or flagged
    uncorrectable (the decoder declined).  ``decoding_failures`` is the
    sum of the last two.
    """

    trials: int
    logical_errors: int
    flagged_uncorrectable: int

    @property
    def decoding_failures(self) -> int:
        return self.logical_errors + self.flagged_uncorrectable

    @property
    def successes(self) -> int:
        return self.trials - self.decoding_failures

    @property
    def logical_error_rate(self) -> float:
        return self.logical_errors / self.trials


def run_trials(
    checkset: CheckSet,
    decoder: Callable[[BitVector], Fault | None],
    model: NoiseModel,
    trials: int,
) -> TrialStats:
    """Monte Carlo estimate of decoder performance under the noise model.

    Reproducible bit for bit: trial i consumes the same uniforms whether
    trials run in any order, since all randomness comes from one stream
    consumed in fixed-size blocks.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    n = checkset.n
    m = checkset.m
    rng = model.rng()
    draws = rng.random((trials, n + m))
    basis = checkset.code.row_basis
    logical = 0
    flagged = 0
    third = model.p / 3.0
    p = model.p
    q = model.q
    for row in draws:
        x = 0
        z = 0
        for qb in range(n):
            u = row[qb]
            if u < third:
                x |= 1 << qb
            elif u < 2 * third:
                x |= 1 << qb
                z |= 1 << qb
            elif u < p:
                z |= 1 << qb
        flips = 0
        for i in range(m):
            if row[n + i] < q:
                flips |= 1 << i
        e_bits = x | (z << n)
        observed = BitVector(checkset.syndrome_int(e_bits) ^ flips, m)
        correction = decoder(observed)
        if correction is None:
            flagged += 1
        elif not basis.contains(correction.data.bits ^ e_bits):
            logical += 1
    return TrialStats(trials, logical, flagged)
