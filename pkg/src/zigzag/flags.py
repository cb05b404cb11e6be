"""Flag enumeration and the sigma operators as permutation tables."""
from __future__ import annotations

import os

import numpy as np

from . import _kernels
from .complex import BOTTOM, TOP, Complex, ComplexError

DEFAULT_FLAG_CAP = 50_000_000


class FlagCapExceeded(RuntimeError):
    """The flag count would exceed the configured cap."""


def flag_cap() -> int:
    raw = os.environ.get("ZIGZAG_FLAG_CAP")
    return int(raw) if raw else DEFAULT_FLAG_CAP


class FlagIndex:
    """All flags of a complex with their sigma tables.

    ``flags[f]`` holds the element ids of flag ``f`` (one per dimension,
    lexicographic order).  ``sigma[i - 1][f]`` is the id of ``sigma_i(f)``.
    """

    def __init__(self, K: Complex, cap: int | None = None):
        self.complex = K
        self.dim = K.dim
        self.flags = enumerate_flag_array(K, cap if cap is not None else flag_cap())
        self.n_flags = len(self.flags)
        # flag ids fit in int32 below 2^31 flags; halves the largest tables
        self.id_dtype = np.int32 if self.n_flags < 2**31 else np.int64
        self.sigma = np.empty((K.dim + 1, self.n_flags), dtype=self.id_dtype)
        for c in range(K.dim + 1):
            self.sigma[c] = self._pair_table(c)
        self._translate = None
        self._reverse = None

    def _pair_table(self, col: int) -> np.ndarray:
        fl = self.flags
        n, w = fl.shape
        others = [j for j in range(w) if j != col]
        order = np.lexsort([fl[:, j] for j in reversed(others)]) if others else np.arange(n)
        if n % 2:
            raise ComplexError(f"odd number of flags under sigma_{col + 1}")
        # compare neighbours in sorted order one column at a time (no row copies)
        even, odd = order[0::2], order[1::2]
        same = np.ones(n // 2, dtype=bool)
        nxt = np.ones(n // 2 - 1, dtype=bool) if n > 2 else None
        for j in others:
            c = fl[:, j]
            same &= c[even] == c[odd]
            if nxt is not None:
                nxt &= c[odd[:-1]] == c[even[1:]]
        if not np.all(same):
            i = int(np.argmin(same))
            raise ComplexError(f"sigma_{col + 1} has no partner for flag {self._fmt(order[2 * i])}")
        if nxt is not None and np.any(nxt):
            i = int(np.argmax(nxt))
            raise ComplexError(
                f"sigma_{col + 1}: more than two flags share {self._fmt(order[2 * i + 1])} off position {col}"
            )
        table = np.empty(n, dtype=self.id_dtype)
        table[even] = odd
        table[odd] = even
        return table

    def _fmt(self, f) -> str:
        return str(tuple(int(x) for x in self.flags[int(f)]))

    # -- lookups ----------------------------------------------------------

    def index(self, flag) -> int:
        """Id of the flag with the given element tuple (binary search)."""
        target = tuple(int(x) for x in flag)
        lo, hi = 0, self.n_flags
        fl = self.flags
        while lo < hi:
            mid = (lo + hi) // 2
            if tuple(fl[mid].tolist()) < target:
                lo = mid + 1
            else:
                hi = mid
        if lo < self.n_flags and tuple(fl[lo].tolist()) == target:
            return lo
        raise KeyError(f"{target} is not a flag")

    def flag(self, f: int) -> tuple:
        return tuple(int(x) for x in self.flags[f])

    @property
    def translate(self) -> np.ndarray:
        """T = sigma_{d+1} ... sigma_1 as a permutation of flag ids."""
        if self._translate is None:
            t = np.arange(self.n_flags, dtype=self.id_dtype)
            for s in self.sigma:
                t = s[t]
            self._translate = t
        return self._translate

    @property
    def translate_inv(self) -> np.ndarray:
        t = np.arange(self.n_flags, dtype=self.id_dtype)
        for s in self.sigma[::-1]:
            t = s[t]
        return t

    @property
    def reverse(self) -> np.ndarray:
        """Reverse flag of every flag.

        Filling the triangular face array column by column is the word
        (s_1)(s_2 s_1)...(s_d ... s_1) in the sigma operators.
        """
        if self._reverse is None:
            r = np.arange(self.n_flags, dtype=self.id_dtype)
            for j in range(self.dim, 0, -1):
                for i in range(1, j + 1):
                    r = self.sigma[i - 1][r]
            self._reverse = r
        return self._reverse

    def is_connected(self) -> bool:
        _, n = _kernels.residue_labels(self.sigma, range(self.dim + 1))
        return n == 1

    def is_orientable(self) -> bool:
        parity, bip = _kernels.bfs_parity(self.sigma, 0)
        return bool(bip) and bool(np.all(parity >= 0))

    def residue_labels(self, colors) -> tuple:
        """Components of the flag graph using ``sigma_{c+1}`` for ``c`` in colors."""
        return _kernels.residue_labels(self.sigma, colors)

    def disconnected_residue(self):
        """First element whose flags are not connected by moves fixing it, or None."""
        d = self.dim
        for k in range(d + 1):
            colors = [c for c in range(d + 1) if c != k]
            labels, ncomp = self.residue_labels(colors)
            col = self.flags[:, k]
            # every component lies in one element; need one component per element
            n_elem = len(np.unique(col))
            if ncomp != n_elem:
                pairs = np.unique(np.stack([col, labels], axis=1), axis=0)
                elems, cnt = np.unique(pairs[:, 0], return_counts=True)
                bad = elems[cnt > 1]
                return int(bad[0]) if len(bad) else int(col[0])
        return None


def enumerate_flag_array(K: Complex, cap: int = DEFAULT_FLAG_CAP) -> np.ndarray:
    """Maximal chains as a (F, d+1) array in lexicographic order."""
    d = K.dim
    dtype = np.int32 if K.n < 2**31 else np.int64
    chains = np.arange(K.counts[0], dtype=dtype).reshape(-1, 1)
    for k in range(d):
        indptr, targets = K.up_csr(k)
        last = chains[:, -1] - int(K.offsets[k])
        deg = indptr[last + 1] - indptr[last]
        total = int(deg.sum())
        if total > cap:
            raise FlagCapExceeded(f"more than {cap} partial flags at dimension {k + 1}")
        rows = np.repeat(np.arange(len(chains)), deg)
        starts = np.repeat(indptr[last], deg)
        within = np.arange(total) - np.repeat(np.cumsum(deg) - deg, deg)
        nxt = targets[starts + within]
        chains = np.concatenate([chains[rows], nxt.reshape(-1, 1).astype(dtype)], axis=1)
    if len(chains) > cap:
        raise FlagCapExceeded(f"{len(chains)} flags exceed the cap {cap}")
    return chains


def reverse_flag(K: Complex, flag) -> tuple:
    """Reverse flag read off the anti-diagonal of the triangular face array.

    ``x[i][j]`` (row i = dimension i-1) is the middle of the interval between
    ``x[i-1][j]`` and ``x[i+1][j-1]`` other than ``x[i][j-1]``; the first
    column is the flag itself.
    """
    d = K.dim
    f = tuple(int(v) for v in flag)
    table = K.diamonds
    # x[i][j] with 1-based i, j; row 0 is the bottom
    x = {(i, 1): f[i - 1] for i in range(1, d + 2)}
    for j in range(2, d + 2):
        for i in range(1, d + 3 - j):
            lo = x[(i - 1, j)] if i > 1 else BOTTOM
            hi = x[(i + 1, j - 1)] if (i + 1, j - 1) in x else TOP
            x[(i, j)] = table.other(lo, hi, x[(i, j - 1)])
    return tuple(x[(i, d + 2 - i)] for i in range(1, d + 2))
