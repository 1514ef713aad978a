"""Randomized discovery of stabilizer codes with a target distance.

Uniformly random generator sets essentially never reach distance 5 at
useful block lengths (a random [[11,1]] code carries ~30 commuting
low-weight operators in expectation), so the search runs a seeded local
optimization instead.  The state is a commuting independent generator
set; the cost is the number of nonzero errors below the target weight
that no generator detects.  Three moves drive the cost to zero:

* plateau coordinate descent: rebuild one generator, enumerating its
  whole symplectic-orthogonal sidespace and keeping any option that is no
  worse (equal-cost moves diffuse across plateaus);
* pair rebuild: for a pair of generators, enumerate candidates for the
  first and solve the linear system that makes the second detect every
  error the rest still miss; this either reaches cost zero or fails;
* kicks: re-randomize a few generators to hop basins.

Everything is driven by one seeded generator, so outcomes are
reproducible given (seed, budget parameters).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .code import StabilizerCode, scan_distances
from .symplectic import PauliString, RowBasis

__all__ = ["SearchOutcome", "find_distance_code"]


@dataclass(frozen=True)
class SearchOutcome:
    code: StabilizerCode
    seed: int
    restarts_used: int
    certified: tuple[int | None, int | None]


def _words_to_bits(words: Sequence[int], width: int) -> np.ndarray:
    arr = np.asarray(list(words), dtype=np.int64)
    return ((arr[:, None] >> np.arange(width)) & 1).astype(np.uint8)


def _bits_to_word(bits: np.ndarray) -> int:
    word = 0
    for i, b in enumerate(bits.tolist()):
        word |= int(b) << i
    return word


def _swap_halves(word: int, n: int) -> int:
    mask = (1 << n) - 1
    return (word >> n) | ((word & mask) << n)


def _error_candidates(n: int, max_weight: int) -> np.ndarray:
    """Partner-swapped error vectors of all weight 1..max_weight Paulis.

    With halves swapped, the symplectic product against a generator row is
    a plain AND-parity, so batch syndrome checks reduce to a binary matrix
    product.
    """
    words: list[int] = []
    for w in range(1, max_weight + 1):
        for qubits in itertools.combinations(range(n), w):
            for types in itertools.product((1, 2, 3), repeat=w):
                x = 0
                z = 0
                for q, t in zip(qubits, types):
                    x |= (t & 1) << q
                    z |= (t >> 1) << q
                words.append(_swap_halves(x | (z << n), n))
    return _words_to_bits(words, 2 * n)


def _solve_affine(equations: list[tuple[int, int]], width: int):
    """Solve <mask_i, v> = rhs_i over F_2.

    Returns (particular solution, nullspace basis) as ints, or None when
    the system is inconsistent.
    """
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in equations:
        while mask:
            p = mask.bit_length() - 1
            if p not in pivots:
                pivots[p] = (mask, rhs)
                break
            pm, pr = pivots[p]
            mask ^= pm
            rhs ^= pr
        else:
            if rhs:
                return None
    free = [i for i in range(width) if i not in pivots]

    def back_substitute(free_word: int) -> int:
        v = free_word
        for p in sorted(pivots):
            mask, rhs = pivots[p]
            bit = rhs ^ ((mask & ~(1 << p) & v).bit_count() & 1)
            v |= bit << p
        return v

    particular = back_substitute(0)
    basis = [back_substitute(1 << f) ^ particular for f in free]
    return particular, [b for b in basis if b]


def _commuting_basis(others: list[int], n: int) -> list[int]:
    """Basis of the space of vectors commuting with every row in ``others``."""
    eqs = [(_swap_halves(row, n), 0) for row in others]
    solved = _solve_affine(eqs, 2 * n)
    assert solved is not None  # homogeneous systems are always consistent
    return solved[1]


def _span_elements(basis: list[int]) -> list[int]:
    """All 2^len(basis) combinations; only call for small bases."""
    out = [0] * (1 << len(basis))
    for mask in range(1, 1 << len(basis)):
        low = mask & -mask
        out[mask] = out[mask ^ low] ^ basis[low.bit_length() - 1]
    return out


def _sample_span(rng: np.random.Generator, basis: list[int]) -> int:
    mask = int(rng.integers(0, 1 << len(basis))) if basis else 0
    v = 0
    for i, b in enumerate(basis):
        if (mask >> i) & 1:
            v ^= b
    return v


class _Searcher:
    def __init__(self, n: int, k: int, target_d: int, rng: np.random.Generator) -> None:
        self.n = n
        self.r = n - k
        self.width = 2 * n
        self.rng = rng
        self.cands = _error_candidates(n, target_d - 1)
        self.rows: list[int] = []
        self.grid = np.zeros((self.r, self.width), dtype=np.uint8)

    def cost(self) -> int:
        syn = (self.cands @ self.grid.T) & 1
        return int((~syn.any(axis=1)).sum())

    def randomize(self) -> None:
        rows: list[int] = []
        while len(rows) < self.r:
            basis = _commuting_basis(rows, self.n)
            span = RowBasis(rows)
            for _ in range(64):
                v = _sample_span(self.rng, basis)
                if v and not span.contains(v):
                    rows.append(v)
                    break
            else:  # dead end; start over (not reachable below the symplectic bound)
                rows.clear()
        self.rows = rows
        self.grid = _words_to_bits(rows, self.width)

    def _set_row(self, i: int, v: int) -> None:
        self.rows[i] = v
        self.grid[i] = _words_to_bits([v], self.width)[0]

    def kick(self, count: int) -> None:
        for _ in range(count):
            i = int(self.rng.integers(self.r))
            others = [self.rows[j] for j in range(self.r) if j != i]
            basis = _commuting_basis(others, self.n)
            span = RowBasis(others)
            while True:
                v = _sample_span(self.rng, basis)
                if v and not span.contains(v):
                    self._set_row(i, v)
                    break

    def descend(self, max_sweeps: int = 25) -> int:
        """Plateau coordinate descent; returns the reached cost."""
        best = self.cost()
        stall = 0
        for _ in range(max_sweeps):
            for i in self.rng.permutation(self.r).tolist():
                others = [self.rows[j] for j in range(self.r) if j != i]
                other_grid = np.delete(self.grid, i, axis=0)
                zero_elsewhere = ~((self.cands @ other_grid.T) & 1).any(axis=1)
                undetected = self.cands[zero_elsewhere]
                options = _span_elements(_commuting_basis(others, self.n))
                option_grid = _words_to_bits(options, self.width)
                missed = ((undetected @ option_grid.T) & 1 == 0).sum(axis=0)
                current = int(((undetected @ self.grid[i]) & 1 == 0).sum())
                floor = int(missed.min())
                if floor > current:
                    continue
                pool = np.flatnonzero(missed == floor)
                self.rng.shuffle(pool)
                span = RowBasis(others)
                for idx in pool.tolist():
                    v = options[idx]
                    if v and not span.contains(v):
                        self._set_row(i, v)
                        break
            now = self.cost()
            if now == 0:
                return 0
            if now < best:
                best = now
                stall = 0
            else:
                stall += 1
                if stall >= 3:
                    break
        return self.cost()

    def pair_rebuild(self, top: int = 300, slack: int = 40) -> bool:
        """Rebuild some generator pair to detect everything; all or nothing.

        For each pair, candidates for the first slot are ranked by how few
        of the currently undetected errors they leave; the second slot is
        then an exact linear solve.  Leftover systems much larger than the
        second slot's free dimension are skipped; dependent equation sets
        stay solvable well past it, so the margin is generous.  Returns
        True when cost reached zero.
        """
        free_dim = self.width - (self.r - 1)
        pairs = list(itertools.combinations(range(self.r), 2))
        order = self.rng.permutation(len(pairs))
        for pair_idx in order.tolist():
            i, j = pairs[pair_idx]
            others = [self.rows[t] for t in range(self.r) if t not in (i, j)]
            other_grid = np.delete(self.grid, [i, j], axis=0)
            zero_elsewhere = ~((self.cands @ other_grid.T) & 1).any(axis=1)
            undetected = self.cands[zero_elsewhere]
            options = _span_elements(_commuting_basis(others, self.n))
            option_grid = _words_to_bits(options, self.width)
            detected = (undetected @ option_grid.T) & 1
            missed = (detected == 0).sum(axis=0)
            ranked = np.argsort(missed, kind="stable")[:top]
            span8 = RowBasis(others)
            commute_eqs = [(_swap_halves(row, self.n), 0) for row in others]
            for idx in ranked.tolist():
                if int(missed[idx]) > free_dim + slack:
                    break
                vi = options[idx]
                if not vi or span8.contains(vi):
                    continue
                remaining = undetected[detected[:, idx] == 0]
                eqs = commute_eqs + [(_swap_halves(vi, self.n), 0)]
                eqs += [(_bits_to_word(c), 1) for c in remaining]
                solved = _solve_affine(eqs, self.width)
                if solved is None:
                    continue
                particular, basis = solved
                span9 = RowBasis(others + [vi])
                for vj in [particular] + [particular ^ b for b in basis]:
                    if vj and not span9.contains(vj):
                        self._set_row(i, vi)
                        self._set_row(j, vj)
                        return True
        return False


def find_distance_code(
    n: int,
    k: int,
    target_d: int,
    seed: int,
    max_restarts: int = 6,
    max_kicks: int = 20,
    deadline_s: float | None = None,
) -> SearchOutcome | None:
    """Search for an [[n, k]] code with no nonzero commuting operator of
    weight below ``target_d``; None when the budget runs out.

    ``deadline_s`` bounds wall time: the walk itself is deterministic in
    (seed, budget), but a deadline can cut it short between moves, so use
    it only where a None fallback is acceptable.  Any returned code has
    already been certified by the exhaustive distance scan at cutoff
    ``target_d``.
    """
    if target_d < 2:
        raise ValueError("target distance must be at least 2")
    started = time.perf_counter()

    def out_of_time() -> bool:
        return deadline_s is not None and time.perf_counter() - started > deadline_s

    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    searcher = _Searcher(n, k, target_d, rng)
    for restart in range(1, max_restarts + 1):
        if out_of_time():
            return None
        searcher.randomize()
        cost = searcher.descend()
        kicks = 0
        while cost > 0 and kicks < max_kicks and not out_of_time():
            if searcher.pair_rebuild():
                cost = 0
                break
            searcher.kick(int(rng.integers(1, 4)))
            cost = searcher.descend()
            kicks += 1
        if cost == 0:
            mask = (1 << n) - 1
            gens = tuple(PauliString(n, row & mask, row >> n) for row in searcher.rows)
            code = StabilizerCode(gens)
            certified = scan_distances(code, target_d)
            d, d_pure = certified
            if (d is not None and d < target_d) or (d_pure is not None and d_pure < target_d):
                raise AssertionError("zero-cost state failed certification; cost model bug")
            return SearchOutcome(code, seed, restart, certified)
    return None
