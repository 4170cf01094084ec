"""Fishburn numbers xi(n), partial sums F(q, N) and the companion series a(n).

    sum xi(n) q^n = sum_n (1-q; 1-q)_n
    sum a(n) q^n  = sum_n (1/(1-q); 1/(1-q))_n
    F(q, N)       = sum_{n<=N} (q; q)_n

The n-th summand of either q-series starts at q^n, so coefficients up to
``limit`` only need summands n <= limit.
"""

import os
from dataclasses import dataclass
from math import comb
from pathlib import Path

from . import _kernels
from .residues import is_prime
from .series import INTEGER, MODULAR, RATIONAL, ZZ, Series

CACHE_ENV = "FISHBURN_LAB_CACHE"
CACHE_MAGIC = "# fishburn-lab coefficient table v1"


class CacheError(Exception):
    pass


@dataclass(frozen=True)
class CoefficientTable:
    name: str
    values: tuple
    modulus: int | None = None

    @property
    def computed_to(self):
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def reduce(self, m):
        if self.modulus is not None and self.modulus % m:
            raise ValueError(f"cannot reduce mod {self.modulus} values mod {m}")
        return CoefficientTable(self.name, tuple(v % m for v in self.values), m)

    def prefix(self, limit):
        if limit > self.computed_to:
            raise ValueError(f"table only reaches index {self.computed_to}")
        return CoefficientTable(self.name, self.values[:limit + 1], self.modulus)

    def sign_alternates(self):
        return all((v > 0) == (k % 2 == 0) for k, v in enumerate(self.values) if v)


def partial_sum_F(N, ring=ZZ):
    """F(q, N) = sum_{n=0}^N (q;q)_n as an exact polynomial of degree N(N+1)/2."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    deg = N * (N + 1) // 2
    prod = [0] * (deg + 1)
    prod[0] = 1
    total = list(prod)
    top = 0
    for n in range(1, N + 1):
        # prod <- prod * (1 - q^n), in place from the top down
        top += n
        for k in range(top, n - 1, -1):
            prod[k] -= prod[k - n]
        for k in range(top + 1):
            total[k] += prod[k]
    return Series(ring, total)


def _pochhammer_sum_exact(limit, inverse):
    """Exact integer coefficients 0..limit of the xi (or a) generating function."""
    L = limit + 1
    prod = [0] * L
    prod[0] = 1
    total = list(prod)
    for k in range(1, L):
        width = L - k  # coefficients of the new product at exponents k..limit
        if inverse:
            factor = [-comb(k + h - 1, h) for h in range(width + 1)]
        else:
            factor = [(-1) ** (h + 1) * comb(k, h) for h in range(min(k, width) + 1)]
        factor[0] = 0
        new = [0] * L
        for e in range(k, L):
            acc = 0
            for h in range(1, min(len(factor) - 1, e - (k - 1)) + 1):
                acc += factor[h] * prod[e - h]
            new[e] = acc
        prod = new
        for e in range(k, L):
            total[e] += prod[e]
    return total


def _pochhammer_sum_modular(limit, m, inverse, backend=None):
    if m < _kernels.MAX_KERNEL_MODULUS:
        arr = _kernels.pochhammer_sum_mod(limit, m, inverse, prime=is_prime(m), backend=backend)
        return [int(v) for v in arr]
    return [v % m for v in _pochhammer_sum_exact(limit, inverse)]


def _compute(name, limit, ring, backend):
    inverse = name == "a"
    if ring.kind == MODULAR:
        return CoefficientTable(name, tuple(_pochhammer_sum_modular(limit, ring.modulus, inverse, backend)),
                                ring.modulus)
    values = _pochhammer_sum_exact(limit, inverse)
    if ring.kind == RATIONAL:
        values = [ring(v) for v in values]
    return CoefficientTable(name, tuple(values))


def _table(name, limit, ring, cache, backend):
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    if ring.kind not in (INTEGER, RATIONAL, MODULAR):
        raise ValueError(f"unsupported ring {ring}")
    store = _resolve_cache(cache)
    if store is not None and ring.kind != RATIONAL:
        hit = store.load(name, ring.modulus, limit)
        if hit is not None:
            return hit
    table = _compute(name, limit, ring, backend)
    if store is not None and ring.kind != RATIONAL:
        store.save(table)
    return table


def xi_coefficients(limit, ring=ZZ, cache=None, backend=None):
    """Fishburn numbers xi(0..limit), exactly or reduced into a modular ring."""
    return _table("xi", limit, ring, cache, backend)


def a_coefficients(limit, ring=ZZ, cache=None, backend=None):
    """Coefficients a(0..limit) of sum_n (1/(1-q); 1/(1-q))_n."""
    return _table("a", limit, ring, cache, backend)


def xi_series(limit, ring=ZZ):
    """xi as a truncated Series of order `limit`."""
    return Series(ring, xi_coefficients(limit, ring).values, limit)


# ---------------------------------------------------------------------------
# disk cache


def _resolve_cache(cache):
    if cache is None or cache is False:
        return None
    if isinstance(cache, TableCache):
        return cache
    return TableCache(cache)


def default_cache():
    path = os.environ.get(CACHE_ENV)
    return TableCache(path) if path else None


class TableCache:
    """Directory of coefficient tables, one text file per (name, modulus, limit).

    File layout::

        # fishburn-lab coefficient table v1
        name xi
        modulus 5        (or: modulus exact)
        limit 100
        <value 0>
        ...
        <value limit>

    A table for a larger limit also serves any smaller request.
    """

    def __init__(self, path):
        self.path = Path(path)

    def _file(self, name, modulus, limit):
        tag = "exact" if modulus is None else str(modulus)
        return self.path / f"{name}-{tag}-{limit}.txt"

    def load(self, name, modulus, limit):
        tag = "exact" if modulus is None else str(modulus)
        if not self.path.exists():
            return None
        best = None
        for f in self.path.glob(f"{name}-{tag}-*.txt"):
            try:
                n = int(f.stem.rsplit("-", 1)[1])
            except ValueError:
                continue
            if n >= limit and (best is None or n < best[0]):
                best = (n, f)
        if best is None:
            return None
        return read_table(best[1]).prefix(limit)

    def save(self, table):
        self.path.mkdir(parents=True, exist_ok=True)
        target = self._file(table.name, table.modulus, table.computed_to)
        tmp = target.with_suffix(f".tmp{os.getpid()}")
        tmp.write_text(format_table(table))
        os.replace(tmp, target)


def format_table(table):
    lines = [CACHE_MAGIC, f"name {table.name}",
             f"modulus {'exact' if table.modulus is None else table.modulus}",
             f"limit {table.computed_to}"]
    lines.extend(str(v) for v in table.values)
    return "\n".join(lines) + "\n"


def read_table(path):
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise CacheError(f"cannot read cache file {path}: {exc}") from exc
    try:
        if lines[0] != CACHE_MAGIC:
            raise ValueError("bad magic line")
        header = dict(line.split(" ", 1) for line in lines[1:4])
        name = header["name"]
        modulus = None if header["modulus"] == "exact" else int(header["modulus"])
        limit = int(header["limit"])
        values = tuple(int(v) for v in lines[4:])
        if len(values) != limit + 1:
            raise ValueError(f"expected {limit + 1} values, found {len(values)}")
    except (IndexError, KeyError, ValueError) as exc:
        raise CacheError(f"malformed cache file {path}: {exc}") from exc
    return CoefficientTable(name, values, modulus)
