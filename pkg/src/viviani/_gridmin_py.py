"""Pure-numpy twin of the compiled grid-scan kernel.

Chunked row-wise evaluation keeps the temporaries small.  Grid layout,
scan order and tie-breaking (first minimum in iy-outer, ix-inner order)
match ``_gridmin.pyx`` so the two backends are interchangeable.
"""

import numpy as np

_ROW_CHUNK = 64


def grid_min_2d(px, py, x0, y0, nx, ny, step):
    """Minimize sum_j dist((x0+ix*step, y0+iy*step), (px[j], py[j])).

    Returns ``(best_value, best_ix, best_iy)``.
    """
    px = np.asarray(px, dtype=float)
    py = np.asarray(py, dtype=float)
    if px.size == 0 or nx <= 0 or ny <= 0:
        raise ValueError("need at least one point and a nonempty grid")
    xs = x0 + step * np.arange(nx)
    best = np.inf
    best_ix = best_iy = 0
    for row0 in range(0, ny, _ROW_CHUNK):
        rows = min(_ROW_CHUNK, ny - row0)
        ys = y0 + step * np.arange(row0, row0 + rows)
        acc = np.zeros((rows, nx))
        for j in range(px.size):
            dx = xs - px[j]
            dy = ys - py[j]
            acc += np.sqrt(dx * dx + (dy * dy)[:, None])
        flat = int(np.argmin(acc))
        val = float(acc.flat[flat])
        if val < best:
            best = val
            best_iy = row0 + flat // nx
            best_ix = flat % nx
    return best, best_ix, best_iy
