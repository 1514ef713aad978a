"""Exhaustive verifiers for joint data/syndrome error correction.

``check_global`` enumerates every admissible fault, groups observed
syndromes, and demands that faults sharing a syndrome have data parts that
differ only by a stabilizer element (identical action on the encoded
state).  ``lemma1_check`` tests the cheaper sufficient condition that low
weight data errors either have heavy syndromes or are stabilizer elements.
``oa_check`` verifies the uniform local-action statistics of a stabilizer,
and the bound predicates live in :mod:`dscodes.bounds`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .bounds import BoundReport, hybrid_hamming, symmetric_hamming  # re-exported
from .code import CheckSet, Fault, StabilizerCode, iter_error_syndromes, pure_distance
from .symplectic import BitVector, DimensionError

__all__ = [
    "BoundReport",
    "CandidateCapError",
    "CollisionReport",
    "FaultBudget",
    "check_global",
    "equivalent_data",
    "fault_count",
    "hybrid_hamming",
    "lemma1_check",
    "oa_check",
    "symmetric_hamming",
]


class CandidateCapError(RuntimeError):
    """The requested enumeration exceeds the configured candidate cap."""


@dataclass(frozen=True)
class FaultBudget:
    """Admissible joint fault weights.

    ``symmetric(t)`` admits faults with data weight + flip weight <= t.
    ``asymmetric(a, b)`` admits data weight <= a and flip weight <= b
    independently, mixed faults included.
    """

    data_max: int
    flip_max: int
    combined_max: int | None = None

    @classmethod
    def symmetric(cls, t: int) -> "FaultBudget":
        return cls(t, t, t)

    @classmethod
    def asymmetric(cls, data_max: int, flip_max: int) -> "FaultBudget":
        return cls(data_max, flip_max, None)

    @classmethod
    def parse(cls, text: str) -> "FaultBudget":
        """Parse ``sym:t`` or ``asym:a,b``."""
        kind, _, arg = text.partition(":")
        try:
            if kind == "sym":
                return cls.symmetric(int(arg))
            if kind == "asym":
                a, b = arg.split(",")
                return cls.asymmetric(int(a), int(b))
        except ValueError:
            pass
        raise ValueError(f"cannot parse fault budget {text!r}; want sym:t or asym:a,b")

    def admits(self, data_weight: int, flip_weight: int) -> bool:
        if data_weight > self.data_max or flip_weight > self.flip_max:
            return False
        return self.combined_max is None or data_weight + flip_weight <= self.combined_max

    def __str__(self) -> str:
        if self.combined_max is not None:
            return f"sym:{self.combined_max}"
        return f"asym:{self.data_max},{self.flip_max}"


@dataclass(frozen=True)
class CollisionReport:
    """Outcome of a distinguishability check.

    ``ok`` iff no two admissible faults with inequivalent data parts share
    an observed syndrome; otherwise ``witness`` holds the canonical least
    offending pair and ``syndrome`` their shared observation.
    """

    ok: bool
    witness: tuple[Fault, Fault] | None = None
    syndrome: BitVector | None = None
    reason: str | None = None
    faults_checked: int = 0


def fault_count(budget: FaultBudget, n: int, m: int) -> int:
    """Number of faults the budget admits on n qubits and m syndrome bits."""
    total = 0
    for dw in range(budget.data_max + 1):
        for fw in range(budget.flip_max + 1):
            if budget.admits(dw, fw):
                total += comb(n, dw) * 3**dw * comb(m, fw)
    return total


def equivalent_data(code: StabilizerCode, e1: BitVector, e2: BitVector) -> bool:
    """True iff the two data errors act identically on the encoded state."""
    if e1.n != 2 * code.n or e2.n != 2 * code.n:
        raise DimensionError(f"expected vectors of length {2 * code.n}")
    return code.row_basis.contains(e1.bits ^ e2.bits)


def _zx_interleaved(e_bits: int, n: int) -> int:
    """Re-pack an (x|z) error vector qubit-major for canonical ordering.

    Qubit q occupies bits 2q (z) and 2q+1 (x), so integer comparison sorts
    by earliest touched qubit and, on the same qubit, I < Z < X < Y.
    """
    out = 0
    x = e_bits & ((1 << n) - 1)
    z = e_bits >> n
    for q in range(n):
        out |= ((z >> q) & 1) << (2 * q)
        out |= ((x >> q) & 1) << (2 * q + 1)
    return out


def _fault_key(e_bits: int, f_bits: int, n: int) -> tuple[int, int, int]:
    # Data-bearing faults order before pure flip patterns; see report docs.
    return (e_bits == 0, _zx_interleaved(e_bits, n), f_bits)


def _iter_faults(checkset: CheckSet, budget: FaultBudget):
    """Yield (e_bits, syndrome_bits, data_weight) with the identity first."""
    yield 0, 0, 0
    if budget.data_max >= 1:
        yield from iter_error_syndromes(checkset, 1, budget.data_max)


def _flip_patterns(m: int, max_weight: int) -> list[list[int]]:
    """Flip masks grouped by weight: patterns[w] lists all weight-w masks."""
    out: list[list[int]] = [[0]]
    for w in range(1, max_weight + 1):
        out.append([sum(1 << i for i in bits) for bits in itertools.combinations(range(m), w)])
    return out


def _make_fault(e_bits: int, f_bits: int, n: int, m: int) -> Fault:
    return Fault(BitVector(e_bits, 2 * n), BitVector(f_bits, m))


def check_global(
    checkset: CheckSet,
    budget: FaultBudget,
    *,
    all_pairs: bool = False,
    candidate_cap: int = 10**8,
) -> CollisionReport:
    """Exhaustively test distinguishability of all faults within a budget.

    The default implementation hashes faults by observed syndrome and
    compares stabilizer cosets bucket by bucket; ``all_pairs=True``
    compares every fault pair directly (differential-testing aid, cost
    quadratic in the fault count).  Budgets whose enumeration exceeds
    ``candidate_cap`` (counting pairs in all-pairs mode) are refused.

    The reported witness is canonical regardless of enumeration schedule:
    faults carrying a data error order before pure flip patterns, data
    parts compare qubit-major with I < Z < X < Y per qubit, and flip
    patterns compare by lowest flipped bit.
    """
    n = checkset.n
    m = checkset.m
    count = fault_count(budget, n, m)
    cost = count * count if all_pairs else count
    if cost > candidate_cap:
        raise CandidateCapError(
            f"budget {budget} admits {count} faults "
            f"({'pairwise ' if all_pairs else ''}cost {cost} > cap {candidate_cap})"
        )

    flips = _flip_patterns(m, budget.flip_max)
    reduce = checkset.code.row_basis.reduce

    if all_pairs:
        faults = []
        for e, s, dw in _iter_faults(checkset, budget):
            coset = reduce(e)
            for fw in range(budget.flip_max + 1):
                if not budget.admits(dw, fw):
                    break
                for f in flips[fw]:
                    faults.append((_fault_key(e, f, n), e, f, s ^ f, coset))
        best = None
        for a, b in itertools.combinations(faults, 2):
            if a[3] != b[3] or a[4] == b[4]:
                continue
            lo, hi = (a, b) if a[0] <= b[0] else (b, a)
            cand = (lo[0], hi[0], lo, hi)
            if best is None or cand[:2] < best[:2]:
                best = cand
        if best is None:
            return CollisionReport(ok=True, faults_checked=len(faults))
        lo, hi = best[2], best[3]
        return CollisionReport(
            ok=False,
            witness=(_make_fault(lo[1], lo[2], n, m), _make_fault(hi[1], hi[2], n, m)),
            syndrome=BitVector(lo[3], m),
            reason="two admissible faults with different encoded effects share a syndrome",
            faults_checked=len(faults),
        )

    # buckets: observed syndrome -> coset representative -> least fault seen
    buckets: dict[int, dict[int, tuple[tuple[int, int, int], int, int]]] = {}
    checked = 0
    for e, s, dw in _iter_faults(checkset, budget):
        coset = reduce(e)
        for fw in range(budget.flip_max + 1):
            if not budget.admits(dw, fw):
                break
            for f in flips[fw]:
                checked += 1
                key = _fault_key(e, f, n)
                bucket = buckets.setdefault(s ^ f, {})
                held = bucket.get(coset)
                if held is None or key < held[0]:
                    bucket[coset] = (key, e, f)

    best_pair = None
    best_syndrome = 0
    for observed, bucket in buckets.items():
        if len(bucket) < 2:
            continue
        lo, hi = sorted(bucket.values())[:2]
        if best_pair is None or (lo[0], hi[0]) < (best_pair[0][0], best_pair[1][0]):
            best_pair = (lo, hi)
            best_syndrome = observed
    if best_pair is None:
        return CollisionReport(ok=True, faults_checked=checked)
    lo, hi = best_pair
    return CollisionReport(
        ok=False,
        witness=(_make_fault(lo[1], lo[2], n, m), _make_fault(hi[1], hi[2], n, m)),
        syndrome=BitVector(best_syndrome, m),
        reason="two admissible faults with different encoded effects share a syndrome",
        faults_checked=checked,
    )


def lemma1_check(checkset: CheckSet, d: int) -> CollisionReport:
    """Sufficient condition for combined floor((d-1)/2)-fault correction.

    Every nonzero data error on t <= d-1 qubits must either have syndrome
    weight at least d-t or be a stabilizer element with zero syndrome.  A
    zero syndrome outside the stabilizer is an undetected logical error
    below the claimed distance and is reported as such.
    """
    if d < 1:
        raise ValueError(f"distance parameter must be positive, got {d}")
    n = checkset.n
    m = checkset.m
    basis = checkset.code.row_basis
    checked = 0
    for e, s, w in iter_error_syndromes(checkset, 1, d - 1):
        checked += 1
        if s == 0:
            if basis.contains(e):
                continue
            return CollisionReport(
                ok=False,
                witness=(_make_fault(e, 0, n, m), _make_fault(0, 0, n, m)),
                syndrome=BitVector(0, m),
                reason=f"weight-{w} error below distance {d} has zero syndrome "
                "but is not a stabilizer element",
                faults_checked=checked,
            )
        weight = s.bit_count()
        if weight < d - w:
            return CollisionReport(
                ok=False,
                witness=(_make_fault(e, 0, n, m), _make_fault(0, s, n, m)),
                syndrome=BitVector(s, m),
                reason=f"weight-{w} error has syndrome weight {weight} < {d - w}",
                faults_checked=checked,
            )
    return CollisionReport(ok=True, faults_checked=checked)


def oa_check(code: StabilizerCode, l: int) -> bool:
    """Check uniform l-local statistics of the stabilizer elements.

    For every set L of l qubits and every length-l pattern over I, X, Y, Z,
    exactly 2^(n-k)/4^l of the 2^(n-k) stabilizer elements must act as that
    pattern on L.  Requires l below the pure distance; l = 0 is trivially
    true.
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    if l == 0:
        return True
    if l > code.n:
        raise ValueError(f"l={l} exceeds qubit count {code.n}")
    if pure_distance(code, cutoff=min(l, code.n)) is not None:
        raise ValueError(f"l={l} is not below the pure distance")
    r = code.n - code.k
    if r < 2 * l:
        return False
    expected = 1 << (r - 2 * l)
    elements = [(p.x, p.z) for p in code.elements()]
    for qubits in itertools.combinations(range(code.n), l):
        counts: dict[tuple[int, ...], int] = {}
        for x, z in elements:
            pattern = tuple(((x >> q) & 1) | (((z >> q) & 1) << 1) for q in qubits)
            counts[pattern] = counts.get(pattern, 0) + 1
        if len(counts) != 4**l or any(c != expected for c in counts.values()):
            return False
    return True
