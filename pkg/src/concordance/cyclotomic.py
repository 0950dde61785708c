"""Exact arithmetic in Z[zeta_b], zeta_b = exp(2*pi*i/b), plus Hermitian
signatures over it.

Elements are integer combinations of powers zeta_b^k with exponents folded
mod b, i.e. residues of Z[x]/(x^b - 1) under evaluation at zeta_b.  The
kernel of that evaluation is generated by the b-th cyclotomic polynomial,
so zero testing is exact polynomial divisibility (for prime b it collapses
to "all b coefficients equal").  Sign determination of real elements uses
certified interval refinement at increasing precision; it terminates
because zero is excluded symbolically first, so no floating-point
tolerance ever decides anything.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import ctx_iv
from mpmath.libmp import to_rational

_iv = ctx_iv.MPIntervalContext()

_PHI_CACHE: dict[int, list[int]] = {}
_PRIME_CACHE: dict[int, bool] = {}


def _is_prime(n: int) -> bool:
    if n not in _PRIME_CACHE:
        if n < 2:
            _PRIME_CACHE[n] = False
        else:
            _PRIME_CACHE[n] = all(n % d for d in range(2, int(n**0.5) + 1))
    return _PRIME_CACHE[n]


def poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Long division by a monic integer polynomial; coefficients low->high."""
    assert den[-1] == 1
    rem = list(num)
    dd = len(den) - 1
    quo = [0] * max(len(rem) - dd, 0)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            quo[i - dd] = c
            for j, dv in enumerate(den):
                rem[i - dd + j] -= c * dv
    while rem and rem[-1] == 0:
        rem.pop()
    return quo, rem


def cyclotomic_coeffs(b: int) -> list[int]:
    """Coefficients (low->high) of the b-th cyclotomic polynomial."""
    if b < 1:
        raise ValueError("b must be >= 1")
    if b not in _PHI_CACHE:
        # x^b - 1 divided by the product of Phi_d over proper divisors d
        poly = [-1] + [0] * (b - 1) + [1]
        for d in range(1, b):
            if b % d == 0:
                poly, rem = poly_divmod_monic(poly, cyclotomic_coeffs(d))
                assert not rem
        _PHI_CACHE[b] = poly
    return list(_PHI_CACHE[b])


class CycloInt:
    """sum(c_k * zeta_b^k) with integer c_k; immutable after construction."""

    __slots__ = ("b", "_c")

    def __init__(self, b: int, coeffs=None):
        if b < 1:
            raise ValueError("b must be >= 1")
        self.b = b
        c: dict[int, int] = {}
        if coeffs:
            for k, v in coeffs.items():
                if v:
                    k %= b
                    nv = c.get(k, 0) + v
                    if nv:
                        c[k] = nv
                    else:
                        c.pop(k, None)
        self._c = c

    @classmethod
    def zero(cls, b: int) -> "CycloInt":
        return cls(b)

    @classmethod
    def integer(cls, b: int, n: int) -> "CycloInt":
        return cls(b, {0: n})

    @classmethod
    def root_power(cls, b: int, k: int, c: int = 1) -> "CycloInt":
        return cls(b, {k: c})

    def _check(self, other: "CycloInt"):
        if self.b != other.b:
            raise ValueError("mixed cyclotomic orders")

    def __add__(self, other: "CycloInt") -> "CycloInt":
        self._check(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return CycloInt(self.b, c)

    def __neg__(self) -> "CycloInt":
        return CycloInt(self.b, {k: -v for k, v in self._c.items()})

    def __sub__(self, other: "CycloInt") -> "CycloInt":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloInt(self.b, {k: v * other for k, v in self._c.items()})
        self._check(other)
        c: dict[int, int] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = (k1 + k2) % self.b
                c[k] = c.get(k, 0) + v1 * v2
        return CycloInt(self.b, c)

    def __rmul__(self, other):
        return self.__mul__(other)

    def mul_root(self, k: int) -> "CycloInt":
        """Multiply by zeta_b^k (exponent shift)."""
        return CycloInt(self.b, {(e + k) % self.b: v for e, v in self._c.items()})

    def conj(self) -> "CycloInt":
        return CycloInt(self.b, {(-e) % self.b: v for e, v in self._c.items()})

    def is_zero(self) -> bool:
        if not self._c:
            return True
        b = self.b
        if b == 1:
            return sum(self._c.values()) == 0
        dense = [0] * b
        for k, v in self._c.items():
            dense[k] = v
        if _is_prime(b):
            return len(set(dense)) == 1
        _, rem = poly_divmod_monic(dense, cyclotomic_coeffs(b))
        return not rem

    def is_real(self) -> bool:
        return (self - self.conj()).is_zero()

    def sign(self) -> int:
        """Sign of a real element, certified.  pre: is_real() and not is_zero()."""
        b = self.b
        if b <= 2:
            total = sum(v * (1 if b == 1 or k % 2 == 0 else -1) for k, v in self._c.items())
            if total == 0:
                raise ValueError("sign of zero requested")
            return 1 if total > 0 else -1
        # Re(self) = sum c_k cos(2 pi k / b); the value itself is real.
        items = sorted(self._c.items())
        for prec in (64, 128, 256, 512, 1024, 2048, 4096, 8192):
            _iv.prec = prec
            two_pi = 2 * _iv.pi
            total = _iv.mpf(0)
            for k, v in items:
                total += v * _iv.cos(two_pi * _iv.mpf(k) / b)
            if total.a > 0:
                return 1
            if total.b < 0:
                return -1
        raise ArithmeticError(
            "interval refinement failed to certify a sign; "
            "was the zero test skipped?"
        )

    def __eq__(self, other):
        if not isinstance(other, CycloInt):
            return NotImplemented
        return self.b == other.b and (self - other).is_zero()

    def __hash__(self):
        raise TypeError("CycloInt is not hashable (non-canonical representation)")

    def __repr__(self):
        terms = ", ".join(f"{k}: {v}" for k, v in sorted(self._c.items()))
        return f"CycloInt({self.b}, {{{terms}}})"


def hermitian_signature(M: list[list[CycloInt]]) -> int:
    """Signature of a Hermitian matrix over Z[zeta_b], exactly.

    Congruence recursion: pick a nonzero real diagonal pivot (after a
    hyperbolic column/row operation if the whole diagonal vanishes), record
    its certified sign, and pass to the Schur complement scaled by pivot^2,
    which is again integral and congruent to the rest of the form.
    Sylvester's law of inertia keeps the count invariant.
    """
    n = len(M)
    if n == 0:
        return 0
    b = M[0][0].b
    M = [row[:] for row in M]
    piv = None
    for i in range(n):
        if not M[i][i].is_zero():
            piv = i
            break
    if piv is None:
        pair = None
        for i in range(n):
            for j in range(i + 1, n):
                if not M[i][j].is_zero():
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            return 0
        i, j = pair
        # e_i <- e_i + zeta^k e_j makes the (i,i) entry 2 Re(zeta^k M[i][j]),
        # nonzero for some k because M[i][j] != 0 and zeta is not real (b > 2)
        # or the entry is real and nonzero (b <= 2, k = 0 works).
        for k in range(b):
            t = M[i][j].mul_root(k)
            if not (t + t.conj()).is_zero():
                for p in range(n):
                    M[p][i] = M[p][i] + M[p][j].mul_root(k)
                for q in range(n):
                    M[i][q] = M[i][q] + M[j][q].mul_root(-k)
                break
        else:
            raise ArithmeticError("no hyperbolic pivot found")
        piv = i
    d = M[piv][piv]
    s = d.sign()
    rest = [r for r in range(n) if r != piv]
    # scale by d^2 > 0 so the complement stays integral without touching
    # the signature (scaling by d alone would flip signs for d < 0)
    schur = [
        [(M[r][q] * d - M[r][piv] * M[piv][q]) * d for q in rest]
        for r in rest
    ]
    return s + hermitian_signature(schur)


def cyclo_det(M: list[list[CycloInt]]) -> CycloInt:
    """Determinant by cofactor expansion with column-subset memoization."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix has no determinant here")
    b = M[0][0].b
    cache: dict[int, CycloInt] = {}

    def rec(cols: int, row: int) -> CycloInt:
        if row == n:
            return CycloInt.integer(b, 1)
        if cols in cache:
            return cache[cols]
        total = CycloInt.zero(b)
        sign = 1
        for j in range(n):
            bit = 1 << j
            if cols & bit:
                continue
            if M[row][j]._c:
                total = total + sign * (M[row][j] * rec(cols | bit, row + 1))
            sign = -sign
        cache[cols] = total
        return total

    return rec(0, 0)


def cos2pi_bounds(numerator: int, denominator: int, prec: int) -> tuple[Fraction, Fraction]:
    """Exact rational enclosure of 2*cos(2*pi*numerator/denominator),
    certified by directed interval rounding at the given precision."""
    _iv.prec = prec
    x = 2 * _iv.cos(2 * _iv.pi * _iv.mpf(numerator) / denominator)
    lo_t, hi_t = x._mpi_
    lo = Fraction(*(int(v) for v in to_rational(lo_t)))
    hi = Fraction(*(int(v) for v in to_rational(hi_t)))
    return lo, hi
