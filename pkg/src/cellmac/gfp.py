"""Row reduction over GF(p) on int64 arrays.

Two interchangeable lanes compute the reduced row echelon form: a
vectorized numpy implementation and a numba-compiled loop version.
The CELLMAC_NUMBA environment variable selects the lane: "1" requires
numba, "0" forces numpy, unset prefers numba when importable.  Both
lanes use first-nonzero pivoting, so their outputs are identical.

p must stay below 2**31 so that products of two residues fit in int64.
"""

import os

import numpy as np

MAX_PRIME = 2**31 - 1


def rref_mod_p_numpy(a, p):
    """Reduced row echelon form of a mod p.  Returns (rref, pivot columns)."""
    assert 1 < p <= MAX_PRIME
    r = np.array(a, dtype=np.int64) % p
    m, n = r.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        sel = row + int(nz[0])
        if sel != row:
            r[[row, sel]] = r[[sel, row]]
        inv = pow(int(r[row, col]), -1, p)
        r[row] = r[row] * inv % p
        f = r[:, col].copy()
        f[row] = 0
        hit = np.nonzero(f)[0]
        if hit.size:
            r[hit] = (r[hit] - np.outer(f[hit], r[row])) % p
        pivots.append(col)
        row += 1
    return r, pivots


def _build_numba_kernel():
    from numba import njit

    @njit(cache=True)
    def _rref_nb(r, p):
        m, n = r.shape
        piv = np.empty(n if n < m else m, dtype=np.int64)
        npiv = 0
        row = 0
        for col in range(n):
            if row == m:
                break
            sel = -1
            for i in range(row, m):
                if r[i, col] != 0:
                    sel = i
                    break
            if sel < 0:
                continue
            if sel != row:
                for j in range(n):
                    t = r[sel, j]
                    r[sel, j] = r[row, j]
                    r[row, j] = t
            # modular inverse by square-and-multiply
            x = r[row, col]
            e = p - 2
            acc = 1
            while e > 0:
                if e & 1:
                    acc = (acc * x) % p
                x = (x * x) % p
                e >>= 1
            for j in range(n):
                r[row, j] = (r[row, j] * acc) % p
            for i in range(m):
                if i != row and r[i, col] != 0:
                    f = r[i, col]
                    for j in range(n):
                        r[i, j] = (r[i, j] - f * r[row, j]) % p
            piv[npiv] = col
            npiv += 1
            row += 1
        return piv[:npiv]

    return _rref_nb


_NUMBA_KERNEL = None


def rref_mod_p_numba(a, p):
    """Same contract as rref_mod_p_numpy, numba lane."""
    global _NUMBA_KERNEL
    assert 1 < p <= MAX_PRIME
    if _NUMBA_KERNEL is None:
        _NUMBA_KERNEL = _build_numba_kernel()
    r = np.array(a, dtype=np.int64) % p
    if r.size == 0:
        return r, []
    piv = _NUMBA_KERNEL(r, np.int64(p))
    return r, [int(c) for c in piv]


def _pick_lane():
    flag = os.environ.get("CELLMAC_NUMBA", "").strip()
    if flag == "0":
        return "numpy"
    if flag == "1":
        import numba  # noqa: F401  raises if the accel extra is missing

        return "numba"
    try:
        import numba  # noqa: F401

        return "numba"
    except ImportError:
        return "numpy"


_LANE = _pick_lane()


def active_lane():
    return _LANE


def rref_mod_p(a, p):
    """Reduced row echelon form mod p via the configured lane."""
    if _LANE == "numba":
        return rref_mod_p_numba(a, p)
    return rref_mod_p_numpy(a, p)
