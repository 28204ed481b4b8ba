"""Characteristic polynomial modulo a word-size prime.

Two interchangeable implementations of the same routine: a numba ``@njit``
kernel and a pure-numpy fallback. The numba path is used when numba imports
and ``MONORANK_DISABLE_NUMBA`` is unset (or ``0``).

Entries must lie in ``[0, p)`` with ``p < 2**31`` so that every product of
two residues fits in int64.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    njit = None


def numba_enabled() -> bool:
    flag = os.environ.get("MONORANK_DISABLE_NUMBA", "").strip().lower()
    return njit is not None and flag in ("", "0", "false", "no")


def _charpoly_mod_numpy(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    h = a.copy()
    for m in range(1, n - 1):
        nz = np.flatnonzero(h[m:, m - 1])
        if nz.size == 0:
            continue
        piv = m + int(nz[0])
        if piv != m:
            h[[m, piv], :] = h[[piv, m], :]
            h[:, [m, piv]] = h[:, [piv, m]]
        inv = pow(int(h[m, m - 1]), p - 2, p)
        u = (h[m + 1:, m - 1] * inv) % p
        if not u.any():
            continue
        h[m + 1:, m - 1:] = (h[m + 1:, m - 1:] - np.outer(u, h[m, m - 1:]) % p) % p
        for k in np.flatnonzero(u):
            i = m + 1 + int(k)
            h[:, m] = (h[:, m] + int(u[k]) * h[:, i]) % p
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        prev = polys[k - 1, :k]
        cur = polys[k]
        cur[1:k + 1] = prev
        cur[:k] = (cur[:k] - int(h[k - 1, k - 1]) * prev) % p
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = prod * int(h[i, i - 1]) % p
            if prod == 0:
                break
            coef = int(h[i - 1, k - 1]) * prod % p
            if coef:
                cur[:i] = (cur[:i] - coef * polys[i - 1, :i]) % p
    return polys[n].copy()


def _charpoly_mod_loops(a, p):
    n = a.shape[0]
    h = a.copy()
    for m in range(1, n - 1):
        piv = -1
        for i in range(m, n):
            if h[i, m - 1] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != m:
            for j in range(n):
                t = h[m, j]
                h[m, j] = h[piv, j]
                h[piv, j] = t
            for j in range(n):
                t = h[j, m]
                h[j, m] = h[j, piv]
                h[j, piv] = t
        # modular inverse by square-and-multiply, p prime
        base = h[m, m - 1]
        e = p - 2
        inv = 1
        while e > 0:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for i in range(m + 1, n):
            if h[i, m - 1] == 0:
                continue
            u = h[i, m - 1] * inv % p
            for j in range(m - 1, n):
                h[i, j] = (h[i, j] - u * h[m, j]) % p
            for j in range(n):
                h[j, m] = (h[j, m] + u * h[j, i]) % p
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        hkk = h[k - 1, k - 1]
        for j in range(k):
            polys[k, j + 1] = polys[k - 1, j]
        for j in range(k):
            polys[k, j] = (polys[k, j] - hkk * polys[k - 1, j]) % p
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = prod * h[i, i - 1] % p
            if prod == 0:
                break
            coef = h[i - 1, k - 1] * prod % p
            if coef != 0:
                for j in range(i):
                    polys[k, j] = (polys[k, j] - coef * polys[i - 1, j]) % p
    out = np.empty(n + 1, dtype=np.int64)
    for j in range(n + 1):
        out[j] = polys[n, j]
    return out


_charpoly_mod_numba = njit(cache=True)(_charpoly_mod_loops) if njit is not None else None


def charpoly_mod(a: np.ndarray, p: int, backend: str | None = None) -> np.ndarray:
    """Coefficients (lowest first) of ``det(tI - a)`` mod ``p``.

    ``backend`` is ``"numba"``, ``"numpy"`` or ``None`` for the default.
    """
    if backend is None:
        backend = "numba" if numba_enabled() else "numpy"
    if backend == "numba":
        if _charpoly_mod_numba is None:
            raise RuntimeError("numba is not available")
        return _charpoly_mod_numba(np.ascontiguousarray(a, dtype=np.int64), np.int64(p))
    if backend == "numpy":
        return _charpoly_mod_numpy(np.asarray(a, dtype=np.int64), p)
    raise ValueError(f"unknown backend {backend!r}")
