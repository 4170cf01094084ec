"""Hot loops for modular series work.

Each kernel exists twice: a numba ``@njit`` version and a pure-numpy
version with identical results.  The numba path is used by default; set
``FISHBURN_LAB_NO_NUMBA=1`` to force the numpy path (for debugging, or on
platforms without numba).  Both paths require moduli below 2**31 so that a
product of two reduced residues fits in a signed 64-bit word.
"""

import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

MAX_KERNEL_MODULUS = 1 << 31

HAVE_NUMBA = njit is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get("FISHBURN_LAB_NO_NUMBA", "") not in ("1", "true", "yes")


def base_digits(k, p):
    out = []
    while k:
        k, d = divmod(k, p)
        out.append(d)
    return out


# ---------------------------------------------------------------------------
# numpy fallbacks


def _np_convolve_mod(a, b, m, out_len):
    out = np.zeros(out_len, dtype=np.int64)
    if len(a) > len(b):
        a, b = b, a
    for i in range(min(len(a), out_len)):
        c = a[i]
        if c == 0:
            continue
        n = min(len(b), out_len - i)
        out[i:i + n] = (out[i:i + n] + c * b[:n]) % m
    return out


def _np_pochhammer_sum_dense(limit, m, inverse):
    """Sum of running products prod_{k<=n} (1 - (1-q)^{+-k}) mod m, truncated."""
    L = limit + 1
    P = np.zeros(L, dtype=np.int64)
    P[0] = 1
    total = P.copy()
    row = np.zeros(L, dtype=np.int64)  # binomial row of (1-q)^{+-k}
    row[0] = 1
    for k in range(1, L):
        if inverse:
            row = np.cumsum(row) % m
        else:
            row[1:] = (row[1:] - row[:-1]) % m
        # g = 1 - row, g[0] = 0; P has valuation k-1
        g = (-row) % m
        g[0] = 0
        width = L - (k - 1)
        src = P[k - 1:]
        new = np.zeros(width, dtype=np.int64)
        top = width - 1 if inverse else min(width - 1, k)
        for h in range(1, top + 1):
            c = g[h]
            if c:
                new[h:] = (new[h:] + c * src[:width - h]) % m
        P[:] = 0
        P[k - 1:] = new
        total = (total + P) % m
    return total


def _np_frobenius_apply(H, p, k, inverse):
    s = 1
    for d in base_digits(k, p):
        for _ in range(d):
            if s >= len(H):
                break
            if inverse:
                for r in range(s):
                    H[r::s] = np.cumsum(H[r::s]) % p
            else:
                H[s:] = (H[s:] - H[:-s]) % p
        s *= p


def _np_pochhammer_sum_frobenius(limit, p, inverse):
    """Same sum as the dense kernel, mod a prime p, using (1-q)^p = 1-q^p."""
    L = limit + 1
    P = np.zeros(L, dtype=np.int64)
    P[0] = 1
    total = P.copy()
    for k in range(1, L):
        view = P[k - 1:]
        H = view.copy()
        _np_frobenius_apply(H, p, k, inverse)
        view[:] = (view - H) % p
        total = (total + P) % p
    return total


# ---------------------------------------------------------------------------
# numba kernels


def _nb_convolve_mod(a, b, m, out_len):
    out = np.zeros(out_len, dtype=np.int64)
    na = a.shape[0]
    nb = b.shape[0]
    for i in range(min(na, out_len)):
        c = a[i]
        if c == 0:
            continue
        hi = min(nb, out_len - i)
        for j in range(hi):
            out[i + j] = (out[i + j] + c * b[j]) % m
    return out


def _nb_pochhammer_sum_dense(limit, m, inverse):
    L = limit + 1
    P = np.zeros(L, dtype=np.int64)
    P[0] = 1
    total = P.copy()
    row = np.zeros(L, dtype=np.int64)
    row[0] = 1
    new = np.zeros(L, dtype=np.int64)
    for k in range(1, L):
        if inverse:
            for h in range(1, L):
                row[h] = (row[h] + row[h - 1]) % m
        else:
            for h in range(min(k, L - 1), 0, -1):
                row[h] = (row[h] - row[h - 1]) % m
        base = k - 1
        width = L - base
        for j in range(width):
            new[j] = 0
        hmax = width - 1
        if not inverse:
            hmax = min(hmax, k)
        for h in range(1, hmax + 1):
            c = (m - row[h]) % m
            if c == 0:
                continue
            for j in range(h, width):
                new[j] = (new[j] + c * P[base + j - h]) % m
        for j in range(width):
            P[base + j] = new[j]
            total[base + j] = (total[base + j] + new[j]) % m
    return total


def _nb_pochhammer_sum_frobenius(limit, p, inverse):
    L = limit + 1
    P = np.zeros(L, dtype=np.int64)
    P[0] = 1
    total = P.copy()
    H = np.zeros(L, dtype=np.int64)
    for k in range(1, L):
        base = k - 1
        for j in range(base, L):
            H[j] = P[j]
        s = 1
        kk = k
        while kk > 0:
            d = kk % p
            kk //= p
            if s < L - base:
                for _ in range(d):
                    # operands are reduced, so one conditional correction suffices
                    if inverse:
                        for j in range(base + s, L):
                            v = H[j] + H[j - s]
                            H[j] = v - p if v >= p else v
                    else:
                        for j in range(L - 1, base + s - 1, -1):
                            v = H[j] - H[j - s]
                            H[j] = v + p if v < 0 else v
            s *= p
        for j in range(base, L):
            v = P[j] - H[j]
            if v < 0:
                v += p
            P[j] = v
            v += total[j]
            total[j] = v - p if v >= p else v
    return total


NUMPY_KERNELS = {
    "convolve_mod": _np_convolve_mod,
    "pochhammer_sum_dense": _np_pochhammer_sum_dense,
    "pochhammer_sum_frobenius": _np_pochhammer_sum_frobenius,
}

if HAVE_NUMBA:
    NUMBA_KERNELS = {
        "convolve_mod": njit(cache=True)(_nb_convolve_mod),
        "pochhammer_sum_dense": njit(cache=True)(_nb_pochhammer_sum_dense),
        "pochhammer_sum_frobenius": njit(cache=True)(_nb_pochhammer_sum_frobenius),
    }
else:  # pragma: no cover
    NUMBA_KERNELS = NUMPY_KERNELS


def kernel(name, backend=None):
    """Return the kernel `name` for `backend` ('numba', 'numpy' or None for the default)."""
    if backend is None:
        backend = "numba" if USE_NUMBA else "numpy"
    if backend == "numba":
        return NUMBA_KERNELS[name]
    if backend == "numpy":
        return NUMPY_KERNELS[name]
    raise ValueError(f"unknown backend {backend!r}")


def convolve_mod(a, b, m, out_len, backend=None):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    return kernel("convolve_mod", backend)(a, b, np.int64(m), out_len)


def pochhammer_sum_mod(limit, m, inverse=False, prime=False, backend=None):
    """Coefficients 0..limit of sum_n prod_{k=1}^n (1 - (1-q)^{+-k}) reduced mod m.

    With ``prime=True`` the modulus must be prime and the Frobenius
    factorisation of (1-q)^k is used.
    """
    if not 2 <= m < MAX_KERNEL_MODULUS:
        raise ValueError(f"kernel modulus must lie in [2, 2**31), got {m}")
    name = "pochhammer_sum_frobenius" if prime else "pochhammer_sum_dense"
    return kernel(name, backend)(int(limit), np.int64(m), bool(inverse))
