"""Pentagonal residue sets, quadratic symbols and Lucas binomials."""

from dataclasses import dataclass

# residues r mod 23 with (r/23) = -1
R_MOD_23 = frozenset({5, 7, 10, 11, 14, 15, 17, 19, 20, 21, 22})

EXCLUDED = "excluded"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin; exact for n < 3.3e24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo, hi):
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(hi ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, hi + 1, i)))
    return [i for i in range(max(lo, 2), hi + 1) if sieve[i]]


def _require_prime(p):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


@dataclass(frozen=True)
class ResidueSets:
    p: int
    S: tuple
    T: tuple
    pentagonal: tuple  # k(3k-1)/2 mod p for k = 0..p-1

    def describe(self):
        fmt = lambda xs: "{" + ",".join(map(str, xs)) + "}"
        return f"S({self.p}) = {fmt(self.S)}, T({self.p}) = {fmt(self.T)}"


def residue_sets(p):
    """S(p): residues hit by generalized pentagonal numbers; T(p): residues above max S(p)."""
    _require_prime(p)
    # k -> k(3k-1)/2 mod p depends only on k mod p and covers both signs of k
    pent = tuple(k * (3 * k - 1) // 2 % p for k in range(p))
    S = tuple(sorted(set(pent)))
    T = tuple(range(S[-1] + 1, p))
    return ResidueSets(p, S, T, pent)


def kronecker_symbol(a, n):
    """Kronecker symbol (a/n) for any integers a, n."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a/n) for odd positive n
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def chi12(m):
    """The character (12/m) by residue class mod 12."""
    r = m % 12
    if r in (1, 11):
        return 1
    if r in (5, 7):
        return -1
    return 0


def member_of_R(p):
    """True iff p mod 23 lies in R; returns ``EXCLUDED`` for p = 23."""
    _require_prime(p)
    if p == 23:
        return EXCLUDED
    return p % 23 in R_MOD_23


def binomial_mod_p(n, k, p):
    """C(n, k) mod p by Lucas' theorem."""
    if k < 0 or n < 0:
        return 0
    result = 1
    while n or k:
        n, ni = divmod(n, p)
        k, ki = divmod(k, p)
        if ki > ni:
            return 0
        result = result * _small_binom(ni, ki, p) % p
    return result


def _small_binom(n, k, p):
    num = den = 1
    for j in range(k):
        num = num * (n - j) % p
        den = den * (j + 1) % p
    return num * pow(den, -1, p) % p
