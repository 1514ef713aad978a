"""Constructions that buy syndrome-error correction with redundant checks.

Four routes from a code to a check set that also tolerates flipped
syndrome bits: appending the product of all generators (one extra parity
check), appending per-type products for CSS codes (two extra checks),
a deterministic hash-family construction for distance-5 codes (about
2 log2(n-k) + 3 extra checks), and a randomized draw whose size follows
from the binary entropy of the tolerated flip fraction.  A fifth route
searches for an alternative generating set that needs no redundancy at
all.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .code import CheckSet, StabilizerCode, iter_error_syndromes
from .symplectic import BitMatrix, PauliString, RowBasis, multiply
from .verify import FaultBudget, check_global

__all__ = [
    "PhfMatrix",
    "RandomAugmentResult",
    "RandomSearchConfig",
    "ResynthesisResult",
    "SearchFailure",
    "binary_entropy",
    "css_parity_pair",
    "double_construction",
    "generator_resynthesis",
    "parity_augment",
    "phf_matrix",
    "random_augment",
    "transform_generators",
]


class SearchFailure(RuntimeError):
    """A randomized search exhausted its attempt budget."""

    def __init__(self, message: str, attempts: int, stats: dict | None = None) -> None:
        self.attempts = attempts
        self.stats = dict(stats or {})
        super().__init__(f"{message} (after {attempts} attempts)")


def binary_entropy(x: float) -> float:
    """H2(x) = -x log2 x - (1-x) log2 (1-x) for 0 < x < 1."""
    if not 0.0 < x < 1.0:
        raise ValueError(f"binary entropy needs 0 < x < 1, got {x}")
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def parity_augment(code: StabilizerCode) -> CheckSet:
    """Append the product of all generators as one redundant check.

    The extra bit equals the parity of the other n-k syndrome bits for any
    data-only error, so a data error never produces a weight-1 observed
    syndrome and single syndrome flips (which do) stay distinguishable.
    """
    extra = functools.reduce(multiply, code.generators)
    return CheckSet(code, code.generators + (extra,))


def css_parity_pair(code: StabilizerCode) -> CheckSet:
    """Append per-type parity checks, keeping every operator CSS-type.

    Requires each generator to be X-type (z mask zero) or Z-type (x mask
    zero).  The two extra operators are the product of all X-type and the
    product of all Z-type generators, in that order.
    """
    x_type: list[PauliString] = []
    z_type: list[PauliString] = []
    for i, g in enumerate(code.generators):
        if g.z == 0:
            x_type.append(g)
        elif g.x == 0:
            z_type.append(g)
        else:
            raise TypeError(f"generator {i} ({g}) mixes X and Z; not CSS-type")
    n = code.n
    x_prod = functools.reduce(multiply, x_type, PauliString.identity(n))
    z_prod = functools.reduce(multiply, z_type, PauliString.identity(n))
    return CheckSet(code, code.generators + (x_prod, z_prod))


@dataclass(frozen=True)
class PhfMatrix:
    """An m x w binary matrix in which every column pair differs in some row."""

    entries: BitMatrix

    def __post_init__(self) -> None:
        m, w = self.entries.nrows, self.entries.ncols
        cols = [
            tuple((self.entries.rows[i] >> j) & 1 for i in range(m)) for j in range(w)
        ]
        if len(set(cols)) != w:
            raise ValueError("columns are not pairwise distinct")

    @property
    def m(self) -> int:
        return self.entries.nrows

    @property
    def w(self) -> int:
        return self.entries.ncols

    def row_selector(self, i: int) -> tuple[int, ...]:
        """Column indices whose entry in row i is 1."""
        return tuple(j for j in range(self.w) if (self.entries.rows[i] >> j) & 1)


def phf_matrix(w: int) -> PhfMatrix:
    """Smallest separating-column matrix on w columns: m = ceil(log2 w) rows.

    Column j is the m-bit binary representation of j, most significant bit
    in row 0, so any two columns differ in at least one row.
    """
    if w < 2:
        raise ValueError(f"need at least 2 columns, got {w}")
    m = math.ceil(math.log2(w))
    rows = []
    for i in range(m):
        row = 0
        for j in range(w):
            row |= ((j >> (m - 1 - i)) & 1) << j
        rows.append(row)
    return PhfMatrix(BitMatrix(tuple(rows), w))


def double_construction(code: StabilizerCode) -> CheckSet:
    """Check set correcting any two combined data/syndrome errors.

    Requires a code of distance at least 5 (caller-verified; the row count
    arithmetic needs n-k >= 8, which such codes always satisfy).  Stacks,
    in order: the n-k generators H, three identical rows each equal to the
    product of all generators, and two copies of the block N whose row i
    multiplies out the generators selected by row i of the separating
    matrix on n-k columns.  Total: (n-k) + 3 + 2*ceil(log2(n-k)) rows.
    """
    r = code.n - code.k
    if r < 8:
        raise ValueError(
            f"construction refused: n-k = {r} < 8, impossible for a distance-5 code"
        )
    gens = code.generators
    total = functools.reduce(multiply, gens)
    selector = phf_matrix(r)
    identity = PauliString.identity(code.n)
    n_block = tuple(
        functools.reduce(multiply, (gens[j] for j in selector.row_selector(i)), identity)
        for i in range(selector.m)
    )
    operators = gens + (total, total, total) + n_block + n_block
    checkset = CheckSet(code, operators)
    assert checkset.m == r + 3 + 2 * selector.m
    return checkset


@dataclass(frozen=True)
class RandomSearchConfig:
    """Parameters for the randomized redundant-check draw.

    ``delta`` is the tolerated flip fraction and must lie in (0, 1/2);
    the draw size is m = ceil((n-k) / (1 - H2(delta))).
    """

    delta: float
    seed: int
    max_attempts: int = 100

    def __post_init__(self) -> None:
        if not 0.0 < self.delta < 0.5:
            raise ValueError(f"delta must be in (0, 1/2), got {self.delta}")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be positive")


@dataclass(frozen=True)
class RandomAugmentResult:
    checkset: CheckSet
    m: int
    t: int
    attempts: int
    seed: int


def _attempt_rng(seed: int, attempt: int) -> np.random.Generator:
    # Per-attempt streams keyed by (seed, attempt) so attempt i is the same
    # whether attempts run sequentially or in parallel.
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, attempt))))


def random_augment(
    code: StabilizerCode, cfg: RandomSearchConfig, pure_dist: int | None = None
) -> RandomAugmentResult:
    """Draw m uniform stabilizer elements and verify flip tolerance.

    Samples m = ceil((n-k)/(1 - H2(delta))) uniform F_2 combinations of the
    generators (identity allowed, repetition allowed) and accepts the draw
    when every nonzero data error on fewer than ``pure_dist`` qubits has
    syndrome weight at least t = ceil(delta * m); then no combination of
    such an error with fewer than t flips can masquerade as no error.  The
    draw must also span the full generator row space.  Retries with fresh
    per-attempt streams up to ``cfg.max_attempts``.

    ``pure_dist`` defaults to an exhaustive scan for the code's pure
    distance, which the caller can pass in to skip.
    """
    r = code.n - code.k
    m = math.ceil(r / (1.0 - binary_entropy(cfg.delta)))
    t = math.ceil(cfg.delta * m)
    if pure_dist is None:
        from .code import pure_distance

        pure_dist = pure_distance(code, code.n)
        if pure_dist is None:
            raise ValueError("code has no nontrivial commuting operator; not supported")
    gen_rows = code.generator_matrix.rows
    rejections = {"rank": 0, "light_syndrome": 0}
    for attempt in range(cfg.max_attempts):
        rng = _attempt_rng(cfg.seed, attempt)
        masks = rng.integers(0, 1 << r, size=m, dtype=np.uint64)
        ops = []
        for mask in masks.tolist():
            p = PauliString.identity(code.n)
            for i in range(r):
                if (mask >> i) & 1:
                    p = multiply(p, code.generators[i])
            ops.append(p)
        basis = RowBasis(op.error_vector().bits for op in ops)
        if basis.rank != r:
            rejections["rank"] += 1
            continue
        checkset = CheckSet(code, tuple(ops))
        ok = True
        for _, s, _ in iter_error_syndromes(checkset, 1, pure_dist - 1):
            if s.bit_count() < t:
                ok = False
                break
        if ok:
            return RandomAugmentResult(checkset, m, t, attempt + 1, cfg.seed)
        rejections["light_syndrome"] += 1
    raise SearchFailure(
        f"no draw of {m} stabilizer elements reached syndrome weight {t} "
        f"on all sub-distance errors",
        cfg.max_attempts,
        rejections,
    )


@dataclass(frozen=True)
class ResynthesisResult:
    checkset: CheckSet
    transform: tuple[int, ...]
    attempts: int
    seed: int


def transform_generators(code: StabilizerCode, transform: tuple[int, ...]) -> CheckSet:
    """Check set measuring T * H: row i multiplies the generators in mask i.

    ``transform`` must be an invertible (n-k) x (n-k) bit matrix given as
    row masks; the identity transform reproduces the bare check set.
    """
    r = code.n - code.k
    if len(transform) != r:
        raise ValueError(f"transform needs {r} rows, got {len(transform)}")
    if RowBasis(transform).rank != r:
        raise ValueError("transform is singular")
    identity = PauliString.identity(code.n)
    ops = tuple(
        functools.reduce(
            multiply,
            (code.generators[i] for i in range(r) if (mask >> i) & 1),
            identity,
        )
        for mask in transform
    )
    return CheckSet(code, ops)


def generator_resynthesis(
    code: StabilizerCode,
    budget: FaultBudget,
    attempts: int,
    seed: int,
) -> ResynthesisResult:
    """Search for an alternative generating set meeting a budget unaided.

    Samples uniformly invertible (n-k) x (n-k) bit matrices T by rejection,
    measures T * H as the check set (no redundancy: m = n-k), and returns
    the first transform whose check set passes ``check_global`` at the
    budget.  Some codes admit none; the pigeonhole then exhausts the
    attempt budget.
    """
    r = code.n - code.k
    tried = 0
    singular = 0
    for attempt in range(attempts):
        rng = _attempt_rng(seed, attempt)
        rows = tuple(int(v) for v in rng.integers(0, 1 << r, size=r, dtype=np.uint64))
        if RowBasis(rows).rank != r:
            singular += 1
            continue
        tried += 1
        checkset = transform_generators(code, rows)
        if check_global(checkset, budget).ok:
            return ResynthesisResult(checkset, rows, attempt + 1, seed)
    raise SearchFailure(
        f"no invertible transform of {r} generators met budget {budget}",
        attempts,
        {"invertible_tried": tried, "singular_skipped": singular},
    )
