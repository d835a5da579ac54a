"""Index-accelerated engines built on an online suffix automaton.

The automaton always describes exactly the parsed prefix ``w[:i]``: it is
extended phrase by phrase, so walking it from the root with ``w[i:]`` stops at
the longest prefix of the remainder that occurs inside the prefix. That makes
every source non-overlapping by construction.

Each state carries one auxiliary integer:

* LZ77 / C-factorization: the smallest end position of its occurrences, so the
  reported window source is the leftmost one.
* LZ-End: the smallest phrase boundary among its end positions (-1 if none).
  Boundaries are marked by walking suffix links upward from the prefix state
  until an already-marked state is met; a clone inherits the value of the
  state it was split from. Each state is marked at most once.

Memory is about ``(2 * sigma + 3) * 4 * 2n`` bytes for an input of length n over
sigma distinct bytes.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from pdlz.errors import ResourceLimitError
from pdlz.factor.types import Factorization, Phrase, Scheme, SourceRef, SrcKind

MODE_LZ77, MODE_LZEND, MODE_CFACT = 0, 1, 2
KIND_NONE, KIND_WINDOW, KIND_BOUNDARY = 0, 1, 2

# transition-table cells; 2**28 int32 cells is 1 GiB
MAX_TABLE_CELLS = 1 << 28

_KINDS = {KIND_NONE: SrcKind.NONE, KIND_WINDOW: SrcKind.WINDOW, KIND_BOUNDARY: SrcKind.BOUNDARY}


@njit(cache=True)
def _parse(codes, sigma, mode):
    n = codes.shape[0]
    cap = 2 * n + 2
    nxt = np.full((cap, sigma), -1, np.int32)
    link = np.empty(cap, np.int32)
    length = np.empty(cap, np.int32)
    aux = np.full(cap, -1, np.int32)
    link[0] = -1
    length[0] = 0
    size = 1
    last = 0

    m = max(n, 1)
    out_start = np.empty(m, np.int32)
    out_len = np.empty(m, np.int32)
    out_kind = np.empty(m, np.int8)
    out_val = np.empty(m, np.int32)
    out_sent = np.empty(m, np.int8)
    bidx = np.full(n + 1, -1, np.int32)

    nph = 0
    i = 0
    while i < n:
        s = 0
        L = 0
        best = 0
        bestv = -1
        while i + L < n:
            t = nxt[s, codes[i + L]]
            if t < 0:
                break
            s = t
            L += 1
            if mode == MODE_LZEND and aux[s] >= 0:
                best = L
                bestv = aux[s]
        if mode != MODE_LZEND:
            best = L
            if L > 0:
                bestv = aux[s] - L

        if mode == MODE_CFACT:
            if best == 0:
                plen = 1
                kind = KIND_NONE
                sent = 1
            else:
                plen = best
                kind = KIND_WINDOW
                sent = 0
        else:
            if best == n - i:
                plen = best
                sent = 0
            else:
                plen = best + 1
                sent = 1
            if best == 0:
                kind = KIND_NONE
            elif mode == MODE_LZ77:
                kind = KIND_WINDOW
            else:
                kind = KIND_BOUNDARY
                bestv = bidx[bestv]
        out_start[nph] = i
        out_len[nph] = plen
        out_kind[nph] = kind
        out_val[nph] = bestv if kind != KIND_NONE else -1
        out_sent[nph] = sent

        # append the phrase to the automaton
        for pos in range(i, i + plen):
            c = codes[pos]
            cur = size
            size += 1
            length[cur] = length[last] + 1
            if mode == MODE_LZEND:
                aux[cur] = -1
            else:
                aux[cur] = pos + 1
            p = last
            while p != -1 and nxt[p, c] < 0:
                nxt[p, c] = cur
                p = link[p]
            if p == -1:
                link[cur] = 0
            else:
                q = nxt[p, c]
                if length[p] + 1 == length[q]:
                    link[cur] = q
                else:
                    clone = size
                    size += 1
                    length[clone] = length[p] + 1
                    for a in range(sigma):
                        nxt[clone, a] = nxt[q, a]
                    link[clone] = link[q]
                    aux[clone] = aux[q]
                    while p != -1 and nxt[p, c] == q:
                        nxt[p, c] = clone
                        p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur

        i += plen
        if mode == MODE_LZEND:
            bidx[i] = nph
            s = last
            while s > 0 and aux[s] < 0:
                aux[s] = i
                s = link[s]
        nph += 1

    return out_start[:nph], out_len[:nph], out_kind[:nph], out_val[:nph], out_sent[:nph]


def _codes(w: bytes) -> tuple[np.ndarray, int]:
    arr = np.frombuffer(w, dtype=np.uint8)
    present = np.zeros(256, dtype=bool)
    present[arr] = True
    table = (np.cumsum(present) - 1).astype(np.int32)
    sigma = int(present.sum())
    return table[arr], max(sigma, 1)


def _run(w: bytes, scheme: Scheme, mode: int) -> Factorization:
    n = len(w)
    if n == 0:
        return Factorization(scheme, (), 0, engine="indexed")
    codes, sigma = _codes(w)
    if (2 * n + 2) * sigma > MAX_TABLE_CELLS:
        raise ResourceLimitError(f"indexed engine: {n} bytes over {sigma} symbols exceeds the table budget")
    starts, lens, kinds, vals, sents = _parse(codes, sigma, mode)
    phrases = tuple(
        Phrase(
            int(s),
            int(ln),
            SourceRef(_KINDS[int(k)], None if k == KIND_NONE else int(v)),
            bool(st),
        )
        for s, ln, k, v, st in zip(starts.tolist(), lens.tolist(), kinds.tolist(), vals.tolist(), sents.tolist())
    )
    return Factorization(scheme, phrases, n, engine="indexed")


def lz77(w: bytes) -> Factorization:
    return _run(w, Scheme.LZ77, MODE_LZ77)


def lzend(w: bytes) -> Factorization:
    return _run(w, Scheme.LZEND, MODE_LZEND)


def cfact(w: bytes) -> Factorization:
    return _run(w, Scheme.CFACT, MODE_CFACT)
