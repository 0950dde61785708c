"""Seifert matrices and the invariants read off them: the Alexander
polynomial, Levine-Tristram signatures at exact roots of unity, and the
whole signature step function on the unit circle.

Everything here is exact.  Signatures come from a congruence recursion
over cyclotomic integers with certified interval signs, never from
floating-point eigenvalues; jump points are detected by cyclotomic
divisibility of the Alexander polynomial; and the arcs between jumps are
isolated with Sturm sequences after the substitution x = 2*cos(theta).

>>> V = SeifertMatrix([[-1, 1], [0, -1]])   # right-handed trefoil
>>> str(alexander(V))
'1*t^1 - 1 + 1*t^-1'
>>> levine_tristram(V, RootOfUnity(1, 2))
-2
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .cyclotomic import (
    CycloInt,
    cos2pi_bounds,
    cyclotomic_coeffs,
    hermitian_signature,
    poly_divmod_monic,
)
from .laurent import LaurentPoly, reciprocal
from .realroots import RootMarker, isolate_roots

__all__ = [
    "SeifertMatrix",
    "RootOfUnity",
    "SignatureFunction",
    "OmegaIsOne",
    "SingularAtOmega",
    "alexander",
    "levine_tristram",
    "signature_function",
    "block_sum",
    "mirror",
]


class OmegaIsOne(ValueError):
    """Signature evaluation requested at omega = 1."""


class SingularAtOmega(ValueError):
    """omega is a unit-circle root of the Alexander polynomial, where the
    form degenerates and the signature function may jump."""


class SeifertMatrix:
    """Square integer matrix V with |det(V - V^T)| = 1."""

    __slots__ = ("entries", "name")

    def __init__(self, entries: Sequence[Sequence[int]], name: str | None = None):
        rows = tuple(tuple(v for v in row) for row in entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("Seifert matrix must be square")
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise TypeError("Seifert matrix entries must be integers")
        skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
        if abs(_int_det(skew)) != 1:
            raise ValueError("|det(V - V^T)| must be 1")
        # an odd-size integer skew form has det 0, so n is forced even
        self.entries = rows
        self.name = name

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return len(self.entries) // 2

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other):
        if not isinstance(other, SeifertMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        label = f", name={self.name!r}" if self.name else ""
        return f"SeifertMatrix({[list(r) for r in self.entries]}{label})"


def _int_det(rows: list[list[int]]) -> int:
    """Exact integer determinant, fraction-free Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def block_sum(v1: SeifertMatrix, v2: SeifertMatrix) -> SeifertMatrix:
    """Block-diagonal sum; the Seifert matrix of a connected sum."""
    n1, n2 = v1.size, v2.size
    rows = [list(r) + [0] * n2 for r in v1.entries]
    rows += [[0] * n1 + list(r) for r in v2.entries]
    return SeifertMatrix(rows)


def mirror(v: SeifertMatrix) -> SeifertMatrix:
    """Seifert matrix of the mirror image: -V^T."""
    n = v.size
    return SeifertMatrix([[-v.entries[j][i] for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class RootOfUnity:
    """omega = exp(2*pi*i*numerator/denominator), stored reduced."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("denominator must be positive")
        a = self.numerator % self.denominator
        g = math.gcd(a, self.denominator)
        object.__setattr__(self, "numerator", a // g)
        object.__setattr__(self, "denominator", self.denominator // g)

    @classmethod
    def from_fraction(cls, q: Fraction) -> "RootOfUnity":
        q = Fraction(q)
        return cls(q.numerator % q.denominator, q.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def is_one(self) -> bool:
        return self.numerator == 0

    def power(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.numerator * k, self.denominator)

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity(-self.numerator, self.denominator)

    def __str__(self):
        return f"e^(2*pi*i*{self.numerator}/{self.denominator})"


def alexander(v: SeifertMatrix) -> LaurentPoly:
    """det(V - t*V^T) in balanced normal form: exponents symmetric about 0,
    positive leading coefficient, reciprocal(delta) equal to delta, and
    |delta(1)| = 1."""
    n = v.size
    if n == 0:
        return LaurentPoly.one()
    t = LaurentPoly.t_power(1)
    rows = [
        [LaurentPoly({0: v.entries[i][j]}) - t * v.entries[j][i] for j in range(n)]
        for i in range(n)
    ]
    det = _poly_det(rows)
    norm = det.associate_normal()
    d = norm.high()
    assert d % 2 == 0, "Alexander degree of a Seifert form is even"
    bal = norm.shift(-(d // 2))
    assert reciprocal(bal) == bal, "Alexander polynomial must be symmetric"
    assert abs(bal.evaluate(Fraction(1))) == 1
    return bal


def _poly_det(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant over the Laurent ring; cofactor expansion memoized on
    the set of unused columns."""
    n = len(rows)
    cache: dict[int, LaurentPoly] = {}

    def rec(cols: int, row: int) -> LaurentPoly:
        if row == n:
            return LaurentPoly.one()
        if cols in cache:
            return cache[cols]
        total = LaurentPoly.zero()
        sign = 1
        for j in range(n):
            bit = 1 << j
            if cols & bit:
                continue
            if not rows[row][j].is_zero:
                term = rows[row][j] * rec(cols | bit, row + 1)
                total = total + (term if sign > 0 else -term)
            sign = -sign
        cache[cols] = total
        return total

    return rec(0, 0)


def _int_coeffs(p: LaurentPoly) -> list[int]:
    """Associate-normal integer coefficient list, lowest degree first."""
    norm = p.associate_normal()
    return [int(norm.coeff(k)) for k in range(norm.high() + 1)]


def _cyclotomic_divides(coeffs: list[int], b: int) -> bool:
    _, rem = poly_divmod_monic(coeffs, cyclotomic_coeffs(b))
    return not rem


def levine_tristram(v: SeifertMatrix, omega: RootOfUnity) -> int:
    """Signature of (1 - omega)V + (1 - conj(omega))V^T, exactly.

    Raises OmegaIsOne at omega = 1 and SingularAtOmega when omega is a
    root of the Alexander polynomial (detected by exact divisibility by
    the cyclotomic polynomial of order denominator(omega))."""
    if not isinstance(omega, RootOfUnity):
        omega = RootOfUnity.from_fraction(omega)
    if omega.is_one:
        raise OmegaIsOne("signature is undefined at omega = 1")
    a, b = omega.numerator, omega.denominator
    delta = alexander(v)
    if _cyclotomic_divides(_int_coeffs(delta), b):
        raise SingularAtOmega(
            f"omega = {omega} is a root of the Alexander polynomial"
        )
    n = v.size
    if n == 0:
        return 0
    one_minus = CycloInt(b, {0: 1, a: -1})
    one_minus_bar = one_minus.conj()
    M = [
        [
            v.entries[i][j] * one_minus + v.entries[j][i] * one_minus_bar
            for j in range(n)
        ]
        for i in range(n)
    ]
    sig = hermitian_signature(M)
    assert sig % 2 == 0, "nonsingular even-rank form has even signature"
    return sig


def _compact_coeffs(delta: LaurentPoly) -> list[int]:
    """Integer polynomial g with delta(t) = t^g_deg * g(t + 1/t) for the
    balanced symmetric delta; the circle values are g(2*cos(theta))."""
    g_deg = delta.high()
    # basis polynomials v_j(x) = t^j + t^-j under x = t + 1/t
    basis: list[list[int]] = [[2], [0, 1]]
    while len(basis) <= g_deg:
        prev, cur = basis[-2], basis[-1]
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        basis.append(nxt)
    acc = [0] * (g_deg + 1)
    acc[0] = int(delta.coeff(0))
    for j in range(1, g_deg + 1):
        c = int(delta.coeff(j))
        if c:
            for i, bc in enumerate(basis[j]):
                acc[i] += c * bc
    while len(acc) > 1 and acc[-1] == 0:
        acc.pop()
    return acc


class SignatureFunction:
    """The Levine-Tristram signature as a step function on the circle.

    Piecewise constant with even values, symmetric under conjugation,
    jumping only at unit-circle roots of the Alexander polynomial; the
    value at omega = 1 is 0.  Angles are fractions of a full turn.
    """

    def __init__(
        self,
        delta_coeffs: list[int],
        markers: list[RootMarker],
        values: list[int],
    ):
        # markers ascend in angle (descend in x = 2 cos 2*pi*angle);
        # values[i] is the constant on the arc between marker i-1 and i
        assert len(values) == len(markers) + 1
        assert values[0] == 0, "the arc at omega = 1 carries signature 0"
        assert all(val % 2 == 0 for val in values)
        self._delta = delta_coeffs
        self._markers = markers
        self._values = values
        self._jump_cache: dict[int, bool] = {}

    def is_jump(self, q) -> bool:
        """Is exp(2*pi*i*q) a root of the Alexander polynomial?"""
        q = _as_fraction(q)
        if q == 0:
            return False
        b = q.denominator
        if b not in self._jump_cache:
            self._jump_cache[b] = _cyclotomic_divides(self._delta, b)
        return self._jump_cache[b]

    def evaluate(self, q) -> int:
        """Value at omega = exp(2*pi*i*q) for exact rational q.

        Raises SingularAtOmega at jump points (the step function has no
        value there); returns 0 at q = 0 by convention."""
        q = _as_fraction(q)
        if q == 0:
            return 0
        if self.is_jump(q):
            raise SingularAtOmega(f"signature function jumps at angle {q}")
        if q > Fraction(1, 2):
            q = 1 - q
        idx = sum(1 for m in self._markers if _marker_angle_below(m, q))
        return self._values[idx]

    def jump_angles_approx(self) -> list[float]:
        """Approximate jump angles in (0, 1/2), ascending."""
        return [_marker_angle_float(m) for m in self._markers]

    def jumps(self) -> list[tuple[float, int]]:
        """(approximate angle, jump height) per jump in (0, 1/2)."""
        return [
            (_marker_angle_float(m), self._values[i + 1] - self._values[i])
            for i, m in enumerate(self._markers)
        ]

    def arcs(self) -> list[tuple[float, float, int]]:
        """Full-circle arc list as (angle_lo, angle_hi, value) with
        approximate endpoints; exact evaluation goes through evaluate()."""
        angles = [_marker_angle_float(m) for m in self._markers]
        cuts = [0.0] + angles + [1.0 - a for a in reversed(angles)] + [1.0]
        vals = self._values + self._values[-2::-1]
        return [(cuts[i], cuts[i + 1], vals[i]) for i in range(len(vals))]

    def is_identically_zero(self) -> bool:
        return all(v == 0 for v in self._values)

    def __repr__(self):
        parts = ", ".join(
            f"({lo:.6f}, {hi:.6f}): {v}" for lo, hi, v in self.arcs()
        )
        return f"SignatureFunction({parts})"


def _as_fraction(q) -> Fraction:
    if isinstance(q, RootOfUnity):
        return q.fraction
    q = Fraction(q)
    if not 0 <= q < 1:
        q = q % 1
    return q


def _marker_angle_float(m: RootMarker) -> float:
    return math.acos(max(-1.0, min(1.0, m.float_value() / 2.0))) / (2 * math.pi)


def _marker_angle_below(m: RootMarker, q: Fraction) -> bool:
    """Certified test: is the marker's jump angle strictly below q?

    In x = 2cos(2*pi*angle) coordinates the angle order reverses, so this
    asks whether the marker's root exceeds 2*cos(2*pi*q).  Terminates
    because q is never a jump angle when called."""
    for prec in (64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384):
        lo, hi = cos2pi_bounds(q.numerator, q.denominator, prec)
        m.refine(max(hi - lo, Fraction(1, 10**9)))
        if m.lo >= hi:
            return True
        if m.hi <= lo:
            return False
    raise ArithmeticError("could not separate jump angle from sample angle")


def _select_arc_sample(
    markers: list[RootMarker],
    idx: int,
    lo_f: float,
    hi_f: float,
    is_jump: Callable[[Fraction], bool],
) -> Fraction:
    """An exact rational angle certified to lie inside arc idx (bounded
    below by marker idx-1 and above by marker idx, angle-ascending)."""
    mid = (lo_f + hi_f) / 2.0
    for den in (16, 64, 256, 1024, 4096, 16384, 65536, 1 << 18, 1 << 20):
        q = Fraction(round(mid * den), den)
        if q <= 0 or q > Fraction(1, 2):
            continue
        if not (lo_f < float(q) <= hi_f):
            continue
        if is_jump(q):
            continue
        if idx > 0 and not _marker_angle_below(markers[idx - 1], q):
            continue
        if idx < len(markers) and _marker_angle_below(markers[idx], q):
            continue
        return q
    raise ArithmeticError("no rational sample found inside arc")


def _assemble_signature_function(
    delta_coeffs: list[int],
    g_coeffs: list[int],
    value_at: Callable[[Fraction], int],
) -> SignatureFunction:
    markers = isolate_roots(g_coeffs, Fraction(-2), Fraction(2))
    markers.reverse()  # descending x = ascending angle
    jump_cache: dict[int, bool] = {}

    def is_jump(q: Fraction) -> bool:
        b = q.denominator
        if b not in jump_cache:
            jump_cache[b] = _cyclotomic_divides(delta_coeffs, b)
        return jump_cache[b]

    angle_cuts = [0.0] + [_marker_angle_float(m) for m in markers] + [0.5]
    values = []
    for i in range(len(markers) + 1):
        q = _select_arc_sample(markers, i, angle_cuts[i], angle_cuts[i + 1], is_jump)
        values.append(value_at(q))
    return SignatureFunction(delta_coeffs, markers, values)


def signature_function(v: SeifertMatrix) -> SignatureFunction:
    """The full signature step function of a Seifert matrix.

    Roots of the Alexander polynomial on the circle are isolated exactly
    via Sturm sequences in x = 2cos(theta); each arc between consecutive
    roots gets one Levine-Tristram evaluation at a certified interior
    rational angle."""
    delta = alexander(v)
    delta_coeffs = _int_coeffs(delta)
    g = _compact_coeffs(delta)
    return _assemble_signature_function(
        delta_coeffs, g, lambda q: levine_tristram(v, RootOfUnity.from_fraction(q))
    )
