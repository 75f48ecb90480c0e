"""
Plain-text coordinate format for sparse matrices::

    %%scirank coordinate 3 3 2
    0 1 0.36787944117144233
    2 0 1.0

Indices are 0-based, triples in row-major order, weights written with
repr precision so that a round trip is exact.
"""
from pathlib import Path

import numpy as np
from scipy import sparse

from graphs.normalize import canonical

HEADER = "%%scirank coordinate"


def write_coordinate(path, m) -> int:
    m = canonical(m)
    coo = m.tocoo()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"{HEADER} {m.shape[0]} {m.shape[1]} {m.nnz}\n")
        for row, col, weight in zip(coo.row, coo.col, coo.data):
            f.write(f"{int(row)} {int(col)} {float(weight)!r}\n")
    return m.nnz


def read_coordinate(path) -> sparse.csr_matrix:
    """
    Raises:
        ValueError: on a missing header, a count mismatch or an index out of range
    """
    with open(path, "r", encoding="utf-8") as f:
        header = f.readline()
        if not header.startswith(HEADER):
            raise ValueError(f"{path}: not a scirank coordinate file")
        rows, cols, nnz = (int(x) for x in header[len(HEADER):].split())
        triples = [line.split() for line in f if line.strip()]
    if len(triples) != nnz:
        raise ValueError(f"{path}: header says {nnz} entries, found {len(triples)}")
    if not triples:
        return sparse.csr_matrix((rows, cols), dtype=float)
    r = np.array([int(t[0]) for t in triples])
    c = np.array([int(t[1]) for t in triples])
    w = np.array([float(t[2]) for t in triples])
    if r.min() < 0 or c.min() < 0 or r.max() >= rows or c.max() >= cols:
        raise ValueError(f"{path}: index out of range for a {rows}x{cols} matrix")
    return canonical(sparse.coo_matrix((w, (r, c)), shape=(rows, cols)))
