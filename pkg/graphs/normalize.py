from typing import Optional

import numpy as np
from scipy import sparse


def canonical(m) -> sparse.csr_matrix:
    """
    CSR copy with sorted indices, summed duplicates and no stored zeros
    """
    m = sparse.csr_matrix(m, dtype=float)
    m.sum_duplicates()
    m.eliminate_zeros()
    m.sort_indices()
    return m


def column_sums(m) -> np.ndarray:
    return np.asarray(m.sum(axis=0), dtype=float).ravel()


def column_normalize(m, mass: Optional[sparse.spmatrix] = None) -> sparse.csr_matrix:
    """
    Divide every column by its sum, so nonzero columns sum to 1 and zero
    columns stay zero.

    With ``mass`` the divisors are the column sums of ``mass`` instead; for a
    decayed graph and its undecayed counts a column then sums to the mean
    decay of its edges.

    Raises:
        ValueError: if ``m`` has weight in a column where ``mass`` has none
    """
    m = sparse.csc_matrix(m, dtype=float, copy=True)
    m.sum_duplicates()
    sums = column_sums(m if mass is None else mass)
    divisor = np.repeat(sums, np.diff(m.indptr))
    if np.any(divisor <= 0):
        raise ValueError("column with weight but no normalization mass")
    m.data = m.data / divisor
    return canonical(m)
