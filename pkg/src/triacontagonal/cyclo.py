"""Exact arithmetic in the cyclotomic field Q(zeta_60).

Elements are stored in the power basis 1, z, ..., z^15 reduced modulo the
60th cyclotomic polynomial, as integer numerators over one positive common
denominator.  Reduction keeps the representation canonical, so equality is a
tuple comparison and elements are hashable.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

ORDER = 60
DEGREE = 16


def _poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (coefficients low-to-high) by a monic divisor."""
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    quot = [0] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        lead = rem[shift + len(den) - 1]
        if lead:
            quot[shift] = lead
            for i, c in enumerate(den):
                rem[shift + i] -= lead * c
    rem = rem[: len(den) - 1]
    return quot, rem


def cyclotomic_polynomial(n: int) -> list[int]:
    """Phi_n as integer coefficients, low degree first, by dividing x^n - 1."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def _build_modulus() -> list[int]:
    phi30 = cyclotomic_polynomial(30)
    phi60 = [0] * (2 * len(phi30) - 1)
    for k, c in enumerate(phi30):
        phi60[2 * k] = c
    _, rem = _poly_divmod([-1] + [0] * 59 + [1], phi60)
    if any(rem) or len(phi60) != DEGREE + 1:
        raise RuntimeError("Phi_60 construction does not divide x^60 - 1")
    return phi60


MODULUS: tuple[int, ...] = tuple(_build_modulus())


def _reduce_monomials(upto: int) -> list[tuple[int, ...]]:
    # x^k mod Phi_60 for k < upto, by the recurrence x^(k+1) = x * x^k.
    table = []
    cur = [1] + [0] * (DEGREE - 1)
    for _ in range(upto):
        table.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(DEGREE):
                cur[i] -= top * MODULUS[i]
    return table


# Reduced images of z^k for k in [0, 60); products need k <= 30.
_POWERS = _reduce_monomials(ORDER)


def _normalize(nums: Iterable[int], den: int) -> tuple[tuple[int, ...], int]:
    nums = tuple(nums)
    if den < 0:
        nums = tuple(-x for x in nums)
        den = -den
    g = reduce(math.gcd, nums, den)
    if g > 1:
        nums = tuple(x // g for x in nums)
        den //= g
    return nums, den


class CycNum:
    """An element of Q(zeta_60), immutable and canonical."""

    __slots__ = ("_nums", "_den", "_hash")

    def __init__(self, coeffs: Iterable[int | Fraction] = (), den: int = 1):
        coeffs = list(coeffs)
        if len(coeffs) > DEGREE:
            raise ValueError("use CycNum.from_poly for unreduced polynomials")
        coeffs += [0] * (DEGREE - len(coeffs))
        if all(isinstance(c, int) for c in coeffs):
            nums, d = coeffs, den
        else:
            fr = [Fraction(c) for c in coeffs]
            d = math.lcm(*(f.denominator for f in fr))
            nums = [f.numerator * (d // f.denominator) for f in fr]
            d *= den
        self._nums, self._den = _normalize(nums, d)
        self._hash = None

    @classmethod
    def _raw(cls, nums: tuple[int, ...], den: int) -> CycNum:
        obj = cls.__new__(cls)
        obj._nums, obj._den = _normalize(nums, den)
        obj._hash = None
        return obj

    @classmethod
    def from_poly(cls, coeffs: Sequence[int | Fraction]) -> CycNum:
        """Reduce an arbitrary polynomial in z (low degree first)."""
        acc = cls()
        for k, c in enumerate(coeffs):
            if c:
                acc = acc + cyc_power(k).scale(c)
        return acc

    @classmethod
    def rational(cls, q: int | Fraction) -> CycNum:
        return cls([q])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self._den) for n in self._nums)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._nums

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._nums[0], self._den)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self._nums == other._nums and self._den == other._den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nums, self._den))
        return self._hash

    def __repr__(self) -> str:
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"CycNum({' + '.join(terms) or '0'})"

    def __add__(self, other: CycNum | int | Fraction) -> CycNum:
        if not isinstance(other, CycNum):
            if isinstance(other, (int, Fraction)):
                other = CycNum.rational(other)
            else:
                return NotImplemented
        d1, d2 = self._den, other._den
        if d1 == d2:
            return CycNum._raw(tuple(x + y for x, y in zip(self._nums, other._nums)), d1)
        return CycNum._raw(
            tuple(x * d2 + y * d1 for x, y in zip(self._nums, other._nums)), d1 * d2
        )

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum._raw(tuple(-x for x in self._nums), self._den)

    def __sub__(self, other: CycNum | int | Fraction) -> CycNum:
        if not isinstance(other, (CycNum, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int | Fraction) -> CycNum:
        return (-self) + other

    def scale(self, q: int | Fraction) -> CycNum:
        q = Fraction(q)
        return CycNum._raw(tuple(x * q.numerator for x in self._nums), self._den * q.denominator)

    def __mul__(self, other: CycNum | int | Fraction) -> CycNum:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        prod = [0] * (2 * DEGREE - 1)
        b = other._nums
        for i, x in enumerate(self._nums):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:DEGREE]
        for k in range(DEGREE, 2 * DEGREE - 1):
            c = prod[k]
            if c:
                for i, p in enumerate(_POWERS[k]):
                    if p:
                        out[i] += c * p
        return CycNum._raw(tuple(out), self._den * other._den)

    __rmul__ = __mul__

    def conjugate(self) -> CycNum:
        """Image under z -> z^-1, i.e. complex conjugation."""
        out = [self._nums[0]] + [0] * (DEGREE - 1)
        for k in range(1, DEGREE):
            c = self._nums[k]
            if c:
                for i, p in enumerate(_POWERS[ORDER - k]):
                    if p:
                        out[i] += c * p
        return CycNum._raw(tuple(out), self._den)

    def real_part(self) -> CycNum:
        return (self + self.conjugate()).scale(Fraction(1, 2))

    def is_real(self) -> bool:
        return self.conjugate() == self

    def __complex__(self) -> complex:
        return embed_complex(self)

    def to_json(self) -> list[str]:
        return [f"{n // g}/{self._den // g}" for n in self._nums for g in [math.gcd(n, self._den)]]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> CycNum:
        if len(data) != DEGREE:
            raise ValueError(f"expected {DEGREE} coefficients, got {len(data)}")
        return cls([Fraction(s) for s in data])


def cyc_power(k: int) -> CycNum:
    """Canonical form of z^k; k is taken mod 60."""
    return CycNum._raw(_POWERS[k % ORDER], 1)


def arith(a: CycNum, b: CycNum, kind: str) -> CycNum:
    """Dispatch one ring operation by name; ``neg`` ignores ``b``."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "neg":
        return -a
    raise ValueError(f"unknown operation {kind!r}")


def conjugate(z: CycNum) -> CycNum:
    return z.conjugate()


def c_n(n: int) -> CycNum:
    """z^n + z^-n, the real number 2cos(n*pi/30)."""
    return cyc_power(n) + cyc_power(-n)


_ROOTS_OF_UNITY = [cmath.exp(1j * math.pi * k / 30) for k in range(DEGREE)]


def embed_complex(z: CycNum) -> complex:
    """Evaluate at z = exp(i*pi/30) in double precision."""
    acc = 0j
    for n, w in zip(z.numerators, _ROOTS_OF_UNITY):
        if n:
            acc += n * w
    return acc / z.denominator


def hermitian_sum(us: Sequence[CycNum], vs: Sequence[CycNum]) -> CycNum:
    """Sum of u_j * conj(v_j), accumulated unreduced and reduced once."""
    # conj(v) = sum_k v_k z^(60-k); track exponents mod 60 in a flat buffer.
    acc = [0] * ORDER
    den = 1
    terms = []
    for u, v in zip(us, vs):
        terms.append((u, v, u._den * v._den))
        den = math.lcm(den, u._den * v._den)
    for u, v, d in terms:
        f = den // d
        ua = [(i, x * f) for i, x in enumerate(u._nums) if x]
        for j, y in enumerate(v._nums):
            if y:
                for i, x in ua:
                    acc[(i - j) % ORDER] += x * y
    out = list(acc[:DEGREE])
    for k in range(DEGREE, ORDER):
        c = acc[k]
        if c:
            for i, p in enumerate(_POWERS[k]):
                if p:
                    out[i] += c * p
    return CycNum._raw(tuple(out), den)
