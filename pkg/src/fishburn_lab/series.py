"""Dense polynomials and truncated power series over Z, Q or Z/mZ.

A :class:`Series` is immutable.  In exact mode it is a polynomial with no
trailing zero coefficients; in truncated mode it carries exactly
``order + 1`` coefficients and every operation drops exponents above the
order.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import _kernels

INTEGER = "integer"
RATIONAL = "rational"
MODULAR = "modular"

MAX_MODULUS = 1 << 63

# below this length the Python schoolbook product beats the kernel call overhead
_KERNEL_CUTOFF = 48


@dataclass(frozen=True)
class CoefficientRing:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == MODULAR:
            if self.modulus is None or not 2 <= self.modulus < MAX_MODULUS:
                raise ValueError(f"modulus must lie in [2, 2**63), got {self.modulus}")
        elif self.kind in (INTEGER, RATIONAL):
            if self.modulus is not None:
                raise ValueError(f"{self.kind} ring takes no modulus")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    def __call__(self, x):
        """Coerce `x` into a canonical element of this ring."""
        if self.kind == INTEGER:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an integer")
                return x.numerator
            return int(x)
        if self.kind == RATIONAL:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.modulus) % self.modulus
        return int(x) % self.modulus

    def is_exact(self):
        return self.kind != MODULAR

    def __str__(self):
        if self.kind == MODULAR:
            return f"Z/{self.modulus}Z"
        return "Z" if self.kind == INTEGER else "Q"


ZZ = CoefficientRing(INTEGER)
QQ = CoefficientRing(RATIONAL)


def Zmod(m):
    return CoefficientRing(MODULAR, m)


def _canonical(ring, coeffs, order):
    coeffs = [ring(c) for c in coeffs]
    if order is None:
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
    else:
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = coeffs[:order + 1]
        coeffs.extend([ring(0)] * (order + 1 - len(coeffs)))
    return tuple(coeffs)


class Series:
    """Polynomial (``order=None``) or power series truncated after q**order."""

    __slots__ = ("ring", "coeffs", "order")

    def __init__(self, ring, coeffs=(), order=None):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", _canonical(ring, coeffs, order))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def _raw(cls, ring, coeffs, order):
        # coeffs already canonical
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def monomial(cls, ring, exponent, coeff=1, order=None):
        return cls(ring, [0] * exponent + [coeff], order)

    @classmethod
    def one(cls, ring, order=None):
        return cls(ring, [1], order)

    @property
    def is_exact(self):
        return self.order is None

    @property
    def degree(self):
        """Index of the highest nonzero coefficient; -1 for zero."""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return -1

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def valuation(self):
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return None

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        if self.order is not None and k > self.order:
            raise IndexError(f"exponent {k} lies beyond truncation order {self.order}")
        return self.ring(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.ring, self.order, self.coeffs) == (other.ring, other.order, other.coeffs)

    def __hash__(self):
        return hash((self.ring, self.order, self.coeffs))

    def __repr__(self):
        mode = "exact" if self.order is None else f"O(q^{self.order + 1})"
        return f"Series({self.ring}, {list(self.coeffs)}, {mode})"

    def __str__(self):
        return format_series(self)

    def __add__(self, other):
        return series_add(self, _lift(self, other))

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(self.ring, [self.ring(-c) for c in self.coeffs], self.order)

    def __sub__(self, other):
        return series_add(self, -_lift(self, other))

    def __rsub__(self, other):
        return series_add(_lift(self, other), -self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        c = self.ring(other)
        return Series(self.ring, [c * a for a in self.coeffs], self.order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = Series.one(self.ring, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def truncate(self, order):
        return Series(self.ring, self.coeffs, order)

    def exact(self):
        """Drop the truncation marker (coefficients kept as stored)."""
        return Series(self.ring, self.coeffs, None)

    def change_ring(self, ring):
        return Series(ring, self.coeffs, self.order)

    def __call__(self, x):
        """Evaluate at a ring element by Horner's rule (exact mode only)."""
        if self.order is not None:
            raise ValueError("cannot evaluate a truncated series")
        acc = self.ring(0)
        for c in reversed(self.coeffs):
            acc = self.ring(acc * x + c)
        return acc


def _lift(ref, x):
    if isinstance(x, Series):
        return x
    return Series(ref.ring, [x], ref.order)


def _check_compatible(a, b):
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring} vs {b.ring}")
    if a.order is None:
        return b.order
    if b.order is None:
        return a.order
    return min(a.order, b.order)


def series_add(a, b):
    order = _check_compatible(a, b)
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    out = list(x)
    for k, c in enumerate(y):
        out[k] += c
    return Series(a.ring, out, order)


def _schoolbook(a, b, out_len):
    out = [0] * out_len
    for i, x in enumerate(a):
        if x == 0 or i >= out_len:
            continue
        for j in range(min(len(b), out_len - i)):
            out[i + j] += x * b[j]
    return out


def series_mul(a, b):
    order = _check_compatible(a, b)
    ring = a.ring
    if a.is_zero() or b.is_zero():
        return Series(ring, [], order)
    out_len = len(a.coeffs) + len(b.coeffs) - 1
    if order is not None:
        out_len = min(out_len, order + 1)
    m = ring.modulus
    if (ring.kind == MODULAR and m < _kernels.MAX_KERNEL_MODULUS
            and min(len(a.coeffs), len(b.coeffs)) > _KERNEL_CUTOFF):
        out = _kernels.convolve_mod(a.coeffs, b.coeffs, m, out_len).tolist()
    else:
        out = _schoolbook(a.coeffs, b.coeffs, out_len)
    return Series(ring, out, order)


def one_minus_q_power(ring, k, order=None):
    """(1 - q)**k; for negative k a truncation order is required."""
    if k >= 0:
        return Series(ring, [(-1) ** h * comb(k, h) for h in range(k + 1)], order)
    if order is None:
        raise ValueError("(1-q)^k for k < 0 needs a truncation order")
    n = -k
    return Series(ring, [comb(n + h - 1, h) for h in range(order + 1)], order)


def pochhammer(kind, n, trunc=None, ring=ZZ):
    """(q;q)_n, (1-q;1-q)_n or (1/(1-q);1/(1-q))_n as a Series.

    `kind` is one of ``"q"``, ``"one-minus-q"``, ``"inverse-one-minus-q"``.
    The inverse kind is an infinite series and needs `trunc`.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "inverse-one-minus-q" and trunc is None:
        raise ValueError("the inverse-one-minus-q Pochhammer needs a truncation order")
    result = Series.one(ring, trunc)
    one = Series.one(ring, trunc)
    for k in range(1, n + 1):
        if kind == "q":
            factor = one - Series.monomial(ring, k, order=trunc)
        elif kind == "one-minus-q":
            factor = one - one_minus_q_power(ring, k, trunc)
        elif kind == "inverse-one-minus-q":
            factor = one - one_minus_q_power(ring, -k, trunc)
        else:
            raise ValueError(f"unknown Pochhammer kind {kind!r}")
        result = result * factor
    return result


def substitute_one_minus_q(f):
    """f(1 - q) for a polynomial f, expanded exactly."""
    if f.order is not None:
        raise ValueError("substitution q -> 1-q needs an exact polynomial")
    ring = f.ring
    acc = [ring(0)]
    for c in reversed(f.coeffs):
        # acc <- acc * (1 - q) + c
        nxt = acc + [ring(0)]
        for k in range(len(acc) - 1, -1, -1):
            nxt[k + 1] = ring(nxt[k + 1] - acc[k])
        nxt[0] = ring(nxt[0] + c)
        acc = nxt
    return Series(ring, acc)


def substitute_power(f, p):
    """f(q**p)."""
    out = [0] * (max(len(f.coeffs) - 1, 0) * p + 1)
    for k, c in enumerate(f.coeffs):
        out[k * p] = c
    order = None if f.order is None else f.order * p
    return Series(f.ring, out, order)


def derivative(f, order=1):
    if order < 1:
        raise ValueError("derivative order must be positive")
    if f.ring.kind == MODULAR:
        raise ValueError("formal derivatives are only taken over Z or Q")
    coeffs = list(f.coeffs)
    for _ in range(order):
        coeffs = [k * coeffs[k] for k in range(1, len(coeffs))]
    new_order = None if f.order is None else max(f.order - order, 0)
    return Series(f.ring, coeffs, new_order)


def theta_operator(f, order=1):
    """(q d/dq)**order applied to f."""
    if order < 1:
        raise ValueError("theta order must be positive")
    if f.ring.kind == MODULAR:
        raise ValueError("theta operator is only taken over Z or Q")
    return Series(f.ring, [k ** order * c for k, c in enumerate(f.coeffs)], f.order)


def divide_exact(f, g):
    """Return ``(quotient, True)`` if g divides f exactly, else ``(None, False)``."""
    if f.order is not None or g.order is not None:
        raise ValueError("exact division needs exact polynomials")
    if f.ring != g.ring:
        raise ValueError(f"ring mismatch: {f.ring} vs {g.ring}")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    dg = g.degree
    lead = g.coeffs[dg]
    if ring.kind == MODULAR:
        try:
            inv = pow(lead, -1, ring.modulus)
        except ValueError:
            raise ValueError(f"leading coefficient {lead} is not invertible mod {ring.modulus}") from None
    rem = list(f.coeffs)
    df = f.degree
    if df < dg:
        return (Series(ring, []), True) if df < 0 else (None, False)
    quot = [ring(0)] * (df - dg + 1)
    gc = g.coeffs
    for k in range(df - dg, -1, -1):
        top = rem[k + dg]
        if top == 0:
            continue
        if ring.kind == INTEGER:
            qk, r = divmod(top, lead)
            if r:
                return None, False
        elif ring.kind == RATIONAL:
            qk = top / lead
        else:
            qk = top * inv % ring.modulus
        quot[k] = qk
        for j in range(dg + 1):
            if gc[j]:
                rem[k + j] = ring(rem[k + j] - qk * gc[j])
    if any(c != 0 for c in rem[:dg]):
        return None, False
    return Series(ring, quot), True


@dataclass(frozen=True)
class DissectionTable:
    """Components A_i(Q) with f(q) = sum_i q**i * A_i(q**p)."""

    p: int
    components: tuple
    source_degree: int

    def __getitem__(self, i):
        return self.components[i]

    def values_at_one(self):
        return [c(c.ring(1)) for c in self.components]

    def reassemble(self):
        ring = self.components[0].ring
        out = [ring(0)] * (max(self.source_degree, 0) + 1)
        for i, comp in enumerate(self.components):
            for k, c in enumerate(comp.coeffs):
                out[i + k * self.p] = c
        return Series(ring, out)


def dissect(f, p):
    if p < 2:
        raise ValueError(f"dissection modulus must be at least 2, got {p}")
    if f.order is not None:
        raise ValueError("dissection needs an exact polynomial")
    if f.ring.kind == RATIONAL:
        raise ValueError("dissection is defined over Z or Z/mZ")
    comps = tuple(Series(f.ring, f.coeffs[i::p]) for i in range(p))
    return DissectionTable(p, comps, f.degree)


def format_series(f, var="q"):
    terms = []
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = var
        else:
            mono = f"{var}^{k}"
        if mono and c == 1:
            body = mono
        elif mono and c == -1:
            body = "-" + mono
        else:
            body = f"{c}{'*' if mono else ''}{mono}"
        terms.append(body)
    text = " + ".join(terms).replace("+ -", "- ") if terms else "0"
    if f.order is not None:
        text += f" + O({var}^{f.order + 1})"
    return text
