"""Pure-Python GF(2) elimination on bit-packed rows.

Each row is one Python int; bit j is column j.  Python's big-int XOR already
works a machine word at a time, so this fallback stays usable well past the
desk-scale sizes the library targets.  Semantics are identical to the
compiled kernel in lightsout._gf2fast.
"""

from __future__ import annotations

from typing import Sequence


def echelon_bits(
    rows: Sequence[int], ncols: int, reduced: bool = True
) -> tuple[list[int], list[int]]:
    """Row-reduce bit-packed GF(2) rows.

    Pivoting is deterministic: columns are scanned left to right and the
    first row at or below the current pivot row with a 1 in the column is
    chosen.  With ``reduced=True`` the result is the reduced row echelon
    form; with ``reduced=False`` only rows below each pivot are cleared
    (enough for rank and pivot columns).

    Returns (rows, pivot_columns).
    """
    out = list(rows)
    m = len(out)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        mask = 1 << c
        pr = -1
        for i in range(r, m):
            if out[i] & mask:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            out[r], out[pr] = out[pr], out[r]
        piv = out[r]
        start = 0 if reduced else r + 1
        for i in range(start, m):
            if i != r and out[i] & mask:
                out[i] ^= piv
        pivots.append(c)
        r += 1
    return out, pivots
