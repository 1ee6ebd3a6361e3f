"""Minimum symplectic-weight search engines.

Two regimes:

* exact enumeration of a whole GF(2) span (or a coset of one) with the
  X and Z halves packed into uint64 words, split meet-in-the-middle so the
  inner loop is pure vectorized XOR / OR / popcount;
* randomized information-set search for spaces too large to enumerate,
  working on qubit-interleaved columns so a systematic basis exposes
  low-weight elements directly.

Both report the achieving vector along with the weight.  All randomness is
seeded by the caller; identical seeds give identical results.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

WORD = 64


def pack_rows(dense: np.ndarray) -> np.ndarray:
    """(m, n) 0/1 -> (m, words) uint64 little-endian."""
    dense = np.atleast_2d(np.asarray(dense, dtype=np.uint8))
    m, n = dense.shape
    words = (n + WORD - 1) // WORD
    padded = np.zeros((m, words * WORD), dtype=np.uint8)
    padded[:, :n] = dense & 1
    return np.packbits(padded, axis=1, bitorder="little").view(np.uint64)


def unpack_row(words: np.ndarray, n: int) -> np.ndarray:
    return np.unpackbits(words.view(np.uint8), bitorder="little")[:n].copy()


@dataclass
class SearchResult:
    weight: int
    a: np.ndarray  # dense uint8, length N
    b: np.ndarray
    exact: bool
    evaluated: int = 0


def _xor_table(rows: np.ndarray) -> np.ndarray:
    """All 2^m XOR combinations of the given packed rows, combo index bit i
    selecting row i."""
    out = np.zeros((1, rows.shape[1]), dtype=np.uint64)
    for i in range(rows.shape[0]):
        out = np.vstack([out, out ^ rows[i]])
    return out


def min_weight_affine(pa: np.ndarray, pb: np.ndarray,
                      offset_a: np.ndarray, offset_b: np.ndarray,
                      n_qubits: int, exclude_zero: bool = False,
                      chunk: int = 1 << 20) -> SearchResult:
    """Exact minimum symplectic weight over {offset + span(rows)}.

    pa, pb: (m, words) packed X/Z halves of the basis rows.  Splits the span
    in half and scans one side against a table of the other; the inner loop
    touches ``chunk`` elements per vectorized step.
    """
    m, words = pa.shape
    t1 = m // 2
    A1, B1 = _xor_table(pa[:t1]), _xor_table(pb[:t1])
    A2, B2 = _xor_table(pa[t1:]) ^ offset_a, _xor_table(pb[t1:]) ^ offset_b
    # uint8 popcounts cap at 64 per word; multi-word sums fit uint32
    sentinel = 255 if words == 1 else (1 << 31) - 1
    best_w, best_idx = sentinel, None
    n1 = A1.shape[0]
    step = max(1, chunk // n1)
    for s in range(0, A2.shape[0], step):
        if words == 1:
            a = A2[s:s + step, :] ^ A1[None, :, 0]
            b = B2[s:s + step, :] ^ B1[None, :, 0]
            np.bitwise_or(a, b, out=a)
            w = np.bitwise_count(a)
        else:
            a = A2[s:s + step, None, :] ^ A1[None, :, :]
            b = B2[s:s + step, None, :] ^ B1[None, :, :]
            np.bitwise_or(a, b, out=a)
            w = np.bitwise_count(a).sum(axis=-1, dtype=np.uint32)
        if exclude_zero:
            w[w == 0] = sentinel
        idx = np.unravel_index(int(np.argmin(w)), w.shape)
        wm = int(w[idx])
        if wm < best_w:
            best_w = wm
            best_idx = (s + idx[0], idx[1])
    i2, i1 = best_idx
    va = A2[i2] ^ A1[i1]
    vb = B2[i2] ^ B1[i1]
    return SearchResult(best_w, unpack_row(va, n_qubits), unpack_row(vb, n_qubits),
                        exact=True, evaluated=(1 << m))


def min_weight_span(pa: np.ndarray, pb: np.ndarray, n_qubits: int) -> SearchResult:
    """Exact minimum symplectic weight over the nonzero elements of a span."""
    words = pa.shape[1]
    zero = np.zeros(words, dtype=np.uint64)
    return min_weight_affine(pa, pb, zero, zero, n_qubits, exclude_zero=True)


def low_weight_commuting(ha: np.ndarray, hb: np.ndarray, n_qubits: int,
                         wmax: int) -> list[tuple[int, np.ndarray, np.ndarray]]:
    """All symplectic vectors of weight <= wmax commuting with every row of
    (ha | hb), in increasing weight order.

    Used as an exact pre-scan: if the lightest of these lies outside the
    stabilizer, the distance is settled without enumerating the dual space.
    Rows are applied as successive filters so the candidate set collapses
    after the first one or two rows.
    """
    if wmax > 2:
        raise ValueError("pre-scan supports weight <= 2")
    pa, pb = pack_rows(ha), pack_rows(hb)
    words = pa.shape[1]
    patterns = ((1, 0), (0, 1), (1, 1))

    def set_bit(arr: np.ndarray, qubits: np.ndarray, on: int) -> None:
        if on:
            np.bitwise_or.at(arr, (np.arange(len(arr)), qubits // WORD),
                             np.uint64(1) << (qubits % WORD).astype(np.uint64))

    def survivors(ca: np.ndarray, cb: np.ndarray) -> np.ndarray:
        alive = np.arange(len(ca))
        for i in range(pa.shape[0]):
            if alive.size == 0:
                break
            par = (np.bitwise_count(ca[alive] & pb[i]).sum(axis=1)
                   + np.bitwise_count(cb[alive] & pa[i]).sum(axis=1)) & 1
            alive = alive[par == 0]
        return alive

    out = []
    for w in range(1, wmax + 1):
        if w == 1:
            qs = (np.arange(n_qubits),)
        else:
            qs = np.triu_indices(n_qubits, 1)
        count = len(qs[0])
        for pats in product(patterns, repeat=w):
            ca = np.zeros((count, words), dtype=np.uint64)
            cb = np.zeros_like(ca)
            for position_axis, (xa, xb) in zip(qs, pats):
                set_bit(ca, position_axis, xa)
                set_bit(cb, position_axis, xb)
            for j in survivors(ca, cb):
                out.append((w, unpack_row(ca[j], n_qubits), unpack_row(cb[j], n_qubits)))
    out.sort(key=lambda t: t[0])
    return out


# ---------------- randomized information-set search ----------------


def _interleave(basis_a: np.ndarray, basis_b: np.ndarray, perm: np.ndarray) -> np.ndarray:
    """Columns reordered as x_q, z_q pairs for the permuted qubit order."""
    r = basis_a.shape[0]
    out = np.empty((r, 2 * len(perm)), dtype=np.uint8)
    out[:, 0::2] = basis_a[:, perm]
    out[:, 1::2] = basis_b[:, perm]
    return out


def _eliminate(m: np.ndarray) -> np.ndarray:
    """In-place row reduction, pivots greedily left to right; returns m."""
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        el = np.nonzero(m[:, c])[0]
        el = el[el != r]
        if el.size:
            m[el] ^= m[r]
        r += 1
    return m


def isd_search(basis_a: np.ndarray, basis_b: np.ndarray, n_qubits: int,
               budget: int, seed: int, stop_at: int | None = None,
               accept=None) -> SearchResult:
    """Randomized low-weight search over the span of the given basis.

    Each round permutes the qubits, row-reduces the basis on interleaved
    (x, z) columns, and scores all single rows and row pairs of the reduced
    basis; systematic bases concentrate weight outside the pivot block, so
    minimum-weight elements surface quickly for structured codes.

    ``accept`` optionally filters candidates (given dense a, b vectors);
    elements failing it are scored but never returned.  ``budget`` caps the
    number of scored candidates.  Never returns the zero vector.
    """
    rng = np.random.default_rng(seed)
    r = basis_a.shape[0]
    sentinel = n_qubits + 1
    best = SearchResult(sentinel, np.zeros(n_qubits, np.uint8),
                        np.zeros(n_qubits, np.uint8), exact=False)
    evaluated = 0
    inv_cache = np.empty(n_qubits, dtype=np.int64)
    ii, jj = np.triu_indices(r, 1)
    while evaluated < budget:
        perm = rng.permutation(n_qubits)
        m = _eliminate(_interleave(basis_a, basis_b, perm))
        cands = np.vstack([m, m[ii] ^ m[jj]])
        wa = cands[:, 0::2]
        wb = cands[:, 1::2]
        w = (wa | wb).sum(axis=1)
        w = np.where(w == 0, sentinel, w)
        evaluated += len(cands)
        inv_cache[perm] = np.arange(n_qubits)
        for idx in np.argsort(w, kind="stable"):
            wm = int(w[idx])
            if wm >= best.weight:
                break
            a = wa[idx][inv_cache]
            b = wb[idx][inv_cache]
            if accept is not None and not accept(a, b):
                continue
            best = SearchResult(wm, a.copy(), b.copy(), exact=False)
            break
        if stop_at is not None and best.weight <= stop_at:
            break
    best.evaluated = evaluated
    return best
