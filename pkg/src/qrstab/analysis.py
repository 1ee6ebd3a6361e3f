"""Derived quantities of a stabilizer code: standard form, logical
operators, stabilizer minimum weight, minimum distance, degeneracy.

Distance conventions: d_dagger is the minimum weight of a nontrivial
stabilizer element; d_min is the minimum weight over operators that commute
with every generator but are not themselves stabilizer elements.  Both are
computed exactly when the relevant space is small enough to enumerate and
as seeded, budgeted upper bounds otherwise; every value carries its tag.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import StabilizerCode
from .errors import BudgetExhausted, InexactInputs
from .gf2 import Gf2Matrix
from .minweight import (SearchResult, isd_search, low_weight_commuting,
                        min_weight_affine, min_weight_span, pack_rows)
from .symplectic import SymplecticVector, to_pauli

EXACT_DDAG_MAX_M = 28        # enumerate 2^m stabilizer elements up to here
EXACT_DMIN_MAX_DUAL = 30     # enumerate 2^(2N-m) normalizer elements up to here
DEFAULT_BUDGET = 10_000_000
EXACT = "exact"
UPPER_BOUND = "upper_bound"


@dataclass(frozen=True)
class StandardForm:
    """Row-reduced generators plus the logical operators they induce.

    ``h1``/``h2`` are the reduced halves on the original qubit order;
    ``x_rank`` is the rank of the X half.  ``logical_x[i]`` and
    ``logical_z[i]`` anticommute with each other and commute with everything
    else (generators and the other logical pairs).
    """

    h1: Gf2Matrix
    h2: Gf2Matrix
    x_rank: int
    column_permutation: tuple[int, ...]
    logical_x: tuple[SymplecticVector, ...]
    logical_z: tuple[SymplecticVector, ...]


def standard_form(code: StabilizerCode) -> StandardForm:
    """Gaussian elimination with qubit swaps bringing H to the block shape
    (I A1 A2 | B C1 C2 ; 0 0 0 | D I E), then logical operators read off as
    X = (0 E^T I | C2^T 0 0) and Z = (0 0 0 | A2^T 0 I), with all qubit
    swaps undone afterwards.
    """
    n = code.n_qubits
    m = code.m
    K = code.k_logical
    h1 = code.h1.to_dense()
    h2 = code.h2.to_dense()
    colperm = list(range(n))

    def eliminate(block: np.ndarray, row_start: int, col_start: int) -> int:
        """Reduce ``block`` (a view-selector: h1 or h2) using row ops applied
        to both halves and qubit swaps within [col_start, n)."""
        r = row_start
        c = col_start
        while r < m and c < n:
            nz = np.nonzero(block[r:, c])[0]
            if nz.size == 0:
                swap = None
                for c2 in range(c + 1, n):
                    if np.nonzero(block[r:, c2])[0].size:
                        swap = c2
                        break
                if swap is None:
                    break
                for half in (h1, h2):
                    half[:, [c, swap]] = half[:, [swap, c]]
                colperm[c], colperm[swap] = colperm[swap], colperm[c]
                nz = np.nonzero(block[r:, c])[0]
            pr = r + int(nz[0])
            if pr != r:
                h1[[r, pr]] = h1[[pr, r]]
                h2[[r, pr]] = h2[[pr, r]]
            ones = np.nonzero(block[:, c])[0]
            for o in ones:
                if o != r:
                    h1[o] ^= h1[r]
                    h2[o] ^= h2[r]
            r += 1
            c += 1
        return r

    r = eliminate(h1, 0, 0)
    r2 = eliminate(h2, r, r)
    if r2 != m:  # pragma: no cover - impossible for independent rows
        raise ValueError("generator rows were not independent")

    a2 = h1[:r, m:]
    c2 = h2[:r, m:]
    e = h2[r:, m:]
    lx_a = np.zeros((K, n), dtype=np.uint8)
    lx_b = np.zeros((K, n), dtype=np.uint8)
    lz_a = np.zeros((K, n), dtype=np.uint8)
    lz_b = np.zeros((K, n), dtype=np.uint8)
    if K:
        lx_a[:, r:m] = e.T
        lx_a[:, m:] = np.eye(K, dtype=np.uint8)
        lx_b[:, :r] = c2.T
        lz_b[:, :r] = a2.T
        lz_b[:, m:] = np.eye(K, dtype=np.uint8)

    inv = np.argsort(colperm)
    return StandardForm(
        h1=Gf2Matrix.from_dense(h1[:, inv]),
        h2=Gf2Matrix.from_dense(h2[:, inv]),
        x_rank=r,
        column_permutation=tuple(colperm),
        logical_x=tuple(SymplecticVector(lx_a[i, inv], lx_b[i, inv]) for i in range(K)),
        logical_z=tuple(SymplecticVector(lz_a[i, inv], lz_b[i, inv]) for i in range(K)),
    )


@dataclass(frozen=True)
class DistanceValue:
    value: int
    tag: str  # "exact" or "upper_bound"
    witness: str  # Pauli string achieving the value

    @property
    def is_exact(self) -> bool:
        return self.tag == EXACT


@dataclass(frozen=True)
class DistanceReport:
    d_dagger: DistanceValue
    d_min: DistanceValue
    degenerate: bool | None  # None when either value is only a bound
    budget: int
    seed: int


def _halves_dense(code: StabilizerCode) -> tuple[np.ndarray, np.ndarray]:
    dense = code.h.to_dense()
    n = code.n_qubits
    return dense[:, :n], dense[:, n:]


def _result_to_value(res: SearchResult, exact: bool) -> DistanceValue:
    witness = to_pauli(SymplecticVector(res.a, res.b))
    return DistanceValue(res.weight, EXACT if exact else UPPER_BOUND, witness)


def d_dagger(code: StabilizerCode, budget: int = DEFAULT_BUDGET,
             seed: int = 0, exact_max_m: int = EXACT_DDAG_MAX_M) -> DistanceValue:
    """Minimum weight of a nontrivial stabilizer element.

    Exact (full 2^m enumeration) for m <= exact_max_m, otherwise a seeded
    randomized upper bound over the same row space.
    """
    ha, hb = _halves_dense(code)
    if code.m <= exact_max_m:
        res = min_weight_span(pack_rows(ha), pack_rows(hb), code.n_qubits)
        return _result_to_value(res, exact=True)
    res = isd_search(ha, hb, code.n_qubits, budget=budget, seed=seed)
    return _result_to_value(res, exact=False)


def d_min(code: StabilizerCode, budget: int = DEFAULT_BUDGET,
          seed: int = 0, exact_max_dual: int = EXACT_DMIN_MAX_DUAL) -> DistanceValue:
    """Minimum weight over the normalizer minus the stabilizer.

    The normalizer is the symplectic dual of the row space, of dimension
    2N - m; its elements split into cosets of the stabilizer indexed by the
    2^(2K) - 1 nonzero logical combinations, so enumerating coset by coset
    never touches the stabilizer itself.  Exact when 2N - m is at most
    EXACT_DMIN_MAX_DUAL, otherwise a seeded information-set upper bound over
    the normalizer span with stabilizer members filtered out.
    """
    if code.trivial:
        raise BudgetExhausted("K = 0: the normalizer equals the stabilizer")
    n = code.n_qubits
    m = code.m
    K = code.k_logical
    sf = standard_form(code)
    ha, hb = _halves_dense(code)

    # exact pre-scan: if a weight <= 2 commuting non-stabilizer element
    # exists, the distance is settled regardless of the dual-space size
    for w, a, b in low_weight_commuting(ha, hb, n, wmax=2):
        row = Gf2Matrix.from_dense(np.concatenate([a, b])[None, :])
        if not code.h.in_row_space(row):
            res = SearchResult(w, a, b, exact=True)
            return _result_to_value(res, exact=True)
    logicals = list(sf.logical_x) + list(sf.logical_z)
    logs_a = np.array([v.a for v in logicals], dtype=np.uint8)
    logs_b = np.array([v.b for v in logicals], dtype=np.uint8)

    if 2 * n - m <= exact_max_dual:
        pa, pb = pack_rows(ha), pack_rows(hb)
        lpa, lpb = pack_rows(logs_a), pack_rows(logs_b)
        best: SearchResult | None = None
        for lam in range(1, 1 << (2 * K)):
            oa = np.zeros(pa.shape[1], dtype=np.uint64)
            ob = np.zeros(pb.shape[1], dtype=np.uint64)
            for i in range(2 * K):
                if (lam >> i) & 1:
                    oa ^= lpa[i]
                    ob ^= lpb[i]
            res = min_weight_affine(pa, pb, oa, ob, n)
            if best is None or res.weight < best.weight:
                best = res
        return _result_to_value(best, exact=True)

    # bounded mode: search the normalizer span, reject stabilizer members
    norm_a = np.vstack([ha, logs_a])
    norm_b = np.vstack([hb, logs_b])

    def not_in_stabilizer(a: np.ndarray, b: np.ndarray) -> bool:
        row = Gf2Matrix.from_dense(np.concatenate([a, b])[None, :])
        return not code.h.in_row_space(row)

    res = isd_search(norm_a, norm_b, n, budget=budget, seed=seed,
                     accept=not_in_stabilizer)
    if res.weight > n:
        # fall back to the lightest plain logical representative
        ws = [(int(((logs_a[i] | logs_b[i]) != 0).sum()), i) for i in range(2 * K)]
        w0, i0 = min(ws)
        res = SearchResult(w0, logs_a[i0], logs_b[i0], exact=False)
    return _result_to_value(res, exact=False)


def classify_degeneracy(ddag: DistanceValue, dmin: DistanceValue) -> bool:
    """True iff some stabilizer element is lighter than the distance.

    Requires both inputs exact; bounds cannot settle the comparison.
    """
    if not (ddag.is_exact and dmin.is_exact):
        raise InexactInputs("degeneracy needs exact d_dagger and d_min")
    return ddag.value < dmin.value


def distance_report(code: StabilizerCode, budget: int = DEFAULT_BUDGET,
                    seed: int = 0) -> DistanceReport:
    ddag = d_dagger(code, budget=budget, seed=seed)
    dmin = d_min(code, budget=budget, seed=seed)
    degenerate = (classify_degeneracy(ddag, dmin)
                  if ddag.is_exact and dmin.is_exact else None)
    return DistanceReport(ddag, dmin, degenerate, budget, seed)


# ---------------- independent small-N oracle ----------------


def d_min_oracle(code: StabilizerCode, max_weight: int | None = None) -> int:
    """Increasing-weight brute force for cross-validation (N <= ~12).

    Enumerates every symplectic vector of weight w = 1, 2, ... and returns
    the first weight at which some vector commutes with all generators but
    lies outside the stabilizer row space.
    """
    from itertools import combinations, product

    n = code.n_qubits
    ha, hb = _halves_dense(code)
    top = max_weight or n
    for w in range(1, top + 1):
        for pos in combinations(range(n), w):
            for pattern in product(((1, 0), (0, 1), (1, 1)), repeat=w):
                a = np.zeros(n, dtype=np.uint8)
                b = np.zeros(n, dtype=np.uint8)
                for q, (xa, xb) in zip(pos, pattern):
                    a[q], b[q] = xa, xb
                if ((ha @ b + hb @ a) % 2).any():
                    continue
                row = Gf2Matrix.from_dense(np.concatenate([a, b])[None, :])
                if not code.h.in_row_space(row):
                    return w
    raise BudgetExhausted(f"no normalizer element of weight <= {top}")
