"""Exact arithmetic in Q(zeta_p) and the identity checks built on it.

Elements of Q(zeta_p) are stored in the power basis 1, zeta, ..., zeta^(p-2);
zeta^(p-1) is eliminated with 1 + zeta + ... + zeta^(p-1) = 0.
"""

import random
from fractions import Fraction
from math import comb

from .fishburn import partial_sum_F
from .report import THEOREM, VerificationReport, status_from
from .residues import chi12, is_prime, residue_sets
from .series import QQ, ZZ, Series, derivative, dissect, substitute_power, theta_operator


class CyclotomicRational:
    __slots__ = ("p", "coords")

    def __init__(self, p, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != p - 1:
            raise ValueError(f"need {p - 1} coordinates, got {len(coords)}")
        self.p = p
        self.coords = coords

    @classmethod
    def from_powers(cls, p, values):
        """sum_k values[k] * zeta^k for any sequence `values` (exponents taken mod p)."""
        v = [Fraction(0)] * p
        for k, c in enumerate(values):
            v[k % p] += c
        return cls(p, [v[k] - v[p - 1] for k in range(p - 1)])

    @classmethod
    def zero(cls, p):
        return cls(p, [0] * (p - 1))

    @classmethod
    def one(cls, p):
        return cls.from_powers(p, [1])

    @classmethod
    def zeta(cls, p, k=1):
        return cls.from_powers(p, [0] * (k % p) + [1])

    def _coerce(self, other):
        if isinstance(other, CyclotomicRational):
            if other.p != self.p:
                raise ValueError("elements of different cyclotomic fields")
            return other
        return CyclotomicRational.from_powers(self.p, [other])

    def __add__(self, other):
        o = self._coerce(other)
        return CyclotomicRational(self.p, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicRational(self.p, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, CyclotomicRational):
            c = Fraction(other)
            return CyclotomicRational(self.p, [c * a for a in self.coords])
        o = self._coerce(other)
        prod = [Fraction(0)] * (2 * self.p - 3)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicRational.from_powers(self.p, prod)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CyclotomicRational):
            return self.p == other.p and self.coords == other.coords
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coords))

    def is_zero(self):
        return not any(self.coords)

    def in_span_of_powers(self, exponents):
        """Whether self is a Q-combination of zeta^e for e in `exponents` (which contains 0).

        Writing self as sum_k v_k zeta^k over all p exponents is unique up to
        adding a constant to every v_k, so this holds iff the coordinates at
        the excluded exponents are all equal.
        """
        allowed = {e % self.p for e in exponents}
        if 0 not in allowed:
            raise ValueError("exponent set must contain 0")
        ext = list(self.coords) + [Fraction(0)]
        outside = {ext[k] for k in range(self.p) if k not in allowed}
        return len(outside) <= 1

    def __repr__(self):
        return f"CyclotomicRational({self.p}, {self})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def eval_at_zeta(f, p):
    """Image of the exact polynomial f under q -> zeta_p."""
    if f.order is not None:
        raise ValueError("eval_at_zeta needs an exact polynomial")
    return CyclotomicRational.from_powers(p, f.coeffs)


# ---------------------------------------------------------------------------
# Stirling-type tables


def stirling2(max_n):
    """c[n][j], Stirling numbers of the second kind, for 0 <= j <= n+1 <= max_n+1."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    c = [[0] * (max_n + 2) for _ in range(max_n + 1)]
    c[1][1] = 1
    for n in range(1, max_n):
        for j in range(1, n + 2):
            c[n + 1][j] = j * c[n][j] + c[n][j - 1]
    return c


def c_array(p, max_N):
    """C[N][i][j] with C[N][i][0] = i^N, C[0][0][0] = 1, and
    C[N+1][i][j] = (i + jp) C[N][i][j] + p C[N][i][j-1]."""
    if max_N < 0:
        raise ValueError("max_N must be nonnegative")
    C = [[[0] * (max_N + 2) for _ in range(p)] for _ in range(max_N + 1)]
    for i in range(p):
        C[0][i][0] = 1  # includes the 0^0 = 1 convention
    for N in range(max_N):
        for i in range(p):
            C[N + 1][i][0] = i ** (N + 1)
            for j in range(1, N + 2):
                C[N + 1][i][j] = (i + j * p) * C[N][i][j] + p * C[N][i][j - 1]
    return C


# ---------------------------------------------------------------------------
# identity checks


def _random_poly(rng, max_deg=15, bound=9):
    deg = rng.randint(0, max_deg)
    return Series(ZZ, [rng.randint(-bound, bound) for _ in range(deg + 1)])


def _shift(f, k):
    return Series(f.ring, [0] * k + list(f.coeffs), f.order)


def verify_lemma2(trials=50, max_n=5, seed=0):
    """(q d/dq)^n (AB) = sum_j q^j c[n][j] (d/dq)^j (AB) on seeded random A, B."""
    rng = random.Random(seed)
    c = stirling2(max_n)
    bad = []
    for t in range(trials):
        A, B = _random_poly(rng), _random_poly(rng)
        n = 1 + t % max_n
        AB = A * B
        lhs = theta_operator(AB, n)
        rhs = Series(ZZ, [])
        for j in range(1, n + 1):
            rhs = rhs + _shift(derivative(AB, j), j) * c[n][j]
        if lhs != rhs:
            bad.append(((t, n), {"A": list(A.coeffs), "B": list(B.coeffs)}))
    return VerificationReport("lemma2", {"trials": trials, "max_n": max_n, "seed": seed},
                              status_from(bad), bad, trials, THEOREM)


def verify_lemma4(p, n, max_N):
    """(q d/dq)^N F(q,n) = sum_{j,i} C[N][i][j] q^(i+jp) A_i^(j)(q^p) for N <= max_N."""
    F = partial_sum_F(n, ZZ)
    table = dissect(F, p)
    C = c_array(p, max_N)
    bad = []
    for N in range(max_N + 1):
        lhs = F if N == 0 else theta_operator(F, N)
        rhs = Series(ZZ, [])
        for j in range(N + 1):
            for i in range(p):
                coef = C[N][i][j]
                if not coef:
                    continue
                comp = table[i] if j == 0 else derivative(table[i], j)
                rhs = rhs + _shift(substitute_power(comp, p), i + j * p) * coef
        if lhs != rhs:
            bad.append(((p, n, N), "identity fails"))
    return VerificationReport("lemma4", {"p": p, "n": n, "max_N": max_N}, status_from(bad), bad,
                              max_N + 1, THEOREM)


def component_derivative_at_one(p, j, i):
    """j-th derivative of A_p((j+1)p - 1, i, Q) at Q = 1, over Z."""
    comp = dissect(partial_sum_F((j + 1) * p - 1, ZZ), p)[i]
    if j:
        comp = derivative(comp, j)
    return comp(1)


def verify_component_vanishing(p, max_j):
    """A_p^(j)((j+1)p - 1, i, 1) = 0 for 0 <= j <= max_j and i outside S(p)."""
    S = residue_sets(p).S
    bad = []
    checked = 0
    for j in range(max_j + 1):
        table = dissect(partial_sum_F((j + 1) * p - 1, ZZ), p)
        for i in range(p):
            if i in S:
                continue
            checked += 1
            comp = table[i] if j == 0 else derivative(table[i], j)
            v = comp(1)
            if v:
                bad.append(((p, j, i), v))
    return VerificationReport("eq214", {"p": p, "max_j": max_j}, status_from(bad), bad, checked, THEOREM)


# ---------------------------------------------------------------------------
# Bernoulli route to F at roots of unity


def bernoulli_numbers(n):
    """B_0..B_n with B_1 = -1/2."""
    B = [Fraction(0)] * (n + 1)
    B[0] = Fraction(1)
    for m in range(1, n + 1):
        B[m] = -sum(comb(m + 1, k) * B[k] for k in range(m)) / (m + 1)
    return B


def bernoulli_polynomial(k):
    """B_k(x) = sum_i C(k, i) B_i x^(k-i) as a Series over Q."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    B = bernoulli_numbers(k)
    return Series(QQ, [comb(k, k - e) * B[k - e] for e in range(k + 1)])


def c_n_zeta(n, p):
    """Zagier's c_n at a primitive p-th root of unity, p >= 5.

        c_n = (-1)^n M^(2n+1) / (2n+2) * sum_{m=1}^{M/2} chi(m) zeta^((m^2-1)/24) B_{2n+2}(m/M)

    with M = 12p, the period of m -> chi(m) zeta^((m^2-1)/24).
    """
    if p < 5 or not is_prime(p):
        raise ValueError("c_n_zeta needs a prime p >= 5")
    M = 12 * p
    Bpoly = bernoulli_polynomial(2 * n + 2)
    powers = [Fraction(0)] * p
    for m in range(1, M // 2 + 1):
        ch = chi12(m)
        if ch:
            powers[(m * m - 1) // 24 % p] += ch * Bpoly(Fraction(m, M))
    scale = Fraction((-1) ** n * M ** (2 * n + 1), 2 * n + 2)
    return CyclotomicRational.from_powers(p, [scale * v for v in powers])


def b_zeta_theta(M, p):
    """(q d/dq)^M F(q) at zeta_p, using the stable partial sum F(q, (M+1)p - 1)."""
    F = partial_sum_F((M + 1) * p - 1, ZZ)
    return eval_at_zeta(F if M == 0 else theta_operator(F, M), p)


def b_zeta_bernoulli(M, p):
    """The same value from c_0..c_M: (-1)^M 24^(-M) sum_n C(M, n) c_n(zeta).

    The sign comes from expanding F(zeta e^(-t)) = e^(t/24) sum c_n (t/24)^n / n!.
    """
    acc = CyclotomicRational.zero(p)
    for n in range(M + 1):
        acc = acc + c_n_zeta(n, p) * comb(M, n)
    return acc * Fraction((-1) ** M, 24 ** M)


def verify_bernoulli_crosscheck(p, max_order):
    """b_M(zeta) from the theta operator equals b_M(zeta) from Bernoulli polynomials, M <= max_order."""
    S = residue_sets(p).S
    bad = []
    values = {}
    checked = 0
    for M in range(max_order + 1):
        a = b_zeta_theta(M, p)
        b = b_zeta_bernoulli(M, p)
        values[M] = str(a)
        checked += 1
        if a != b:
            bad.append(((p, M), {"theta_route": str(a), "bernoulli_route": str(b)}))
        checked += 1
        if not a.in_span_of_powers(S):
            bad.append(((p, M), {"pentagonal_support": "fails", "value": str(a)}))
    return VerificationReport("bernoulli", {"p": p, "max_order": max_order}, status_from(bad), bad,
                              checked, THEOREM, {"b_values": values})


def verify_stabilization(p, max_r=2, m_max=None):
    """(q d/dq)^r F(q, m) at zeta_p does not depend on m once m >= (r+1)p - 1."""
    m_max = 4 * p if m_max is None else m_max
    bad = []
    checked = 0
    for r in range(max_r + 1):
        start = (r + 1) * p - 1
        ref = None
        for m in range(start, max(m_max, start) + 1):
            F = partial_sum_F(m, ZZ)
            v = eval_at_zeta(F if r == 0 else theta_operator(F, r), p)
            if ref is None:
                ref = v
                continue
            checked += 1
            if v != ref:
                bad.append(((p, r, m), str(v)))
    return VerificationReport("stabilization", {"p": p, "max_r": max_r, "m_max": m_max},
                              status_from(bad), bad, checked, THEOREM)
