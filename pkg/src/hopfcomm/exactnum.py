"""Exact arithmetic in Q and in cyclotomic fields Q(zeta_N).

Every value is stored in a canonical form: ``order`` is the conductor of the
value (1 for rationals, never congruent to 2 mod 4) and ``coeffs`` are the
coordinates in the power basis {zeta^j : 0 <= j < phi(order)} reduced modulo
the cyclotomic polynomial.  Canonical form makes equality and hashing plain
coordinate comparisons, even across values built at different orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .errors import BadPrime, DenominatorCollision, DivisionByZero

Rational = Fraction
ScalarLike = Union["CycNum", Fraction, int]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer polynomials, both monic; ascending coeffs.
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[:dn]):
        raise ArithmeticError("polynomial division not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _poly_div_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # Row k = coordinates of zeta_n^k in the power basis, for 0 <= k < n.
    deg = euler_phi(n)
    phi_n = cyclotomic_poly(n)
    # x^deg = -sum_{j<deg} phi_j x^j  (phi_n is monic)
    top = tuple(-c for c in phi_n[:deg])
    rows = []
    for k in range(n):
        if k < deg:
            rows.append(tuple(1 if j == k else 0 for j in range(deg)))
        else:
            prev = rows[k - 1]
            shifted = (0,) + prev[:-1]
            carry = prev[-1]
            rows.append(tuple(s + carry * t for s, t in zip(shifted, top)))
    return tuple(rows)


@lru_cache(maxsize=None)
def _projection(n: int, m: int):
    """Solver for membership of Q(zeta_n)-vectors in the subfield Q(zeta_m).

    Returns (pivot_cols, reduced_rows) such that applying the stored
    row-reduction to a vector decides solvability of  A x = v  where the
    columns of A are the basis powers zeta_m^i embedded into Q(zeta_n).
    """
    deg_n, deg_m = euler_phi(n), euler_phi(m)
    step = n // m
    rows_n = _power_rows(n)
    # A has deg_n rows and deg_m columns.
    a = [[Fraction(rows_n[step * i][r]) for i in range(deg_m)] for r in range(deg_n)]
    # Augment with identity to record the transform.
    aug = [row + [Fraction(int(i == r)) for i in range(deg_n)] for r, row in enumerate(a)]
    pivots = []
    r = 0
    for c in range(deg_m):
        pr = next((i for i in range(r, deg_n) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(deg_n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    transform = tuple(tuple(row[deg_m:]) for row in aug)
    return pivots, transform, r


def _project_to_subfield(n: int, m: int, vec: tuple[Fraction, ...]) -> Optional[tuple[Fraction, ...]]:
    pivots, transform, rank = _projection(n, m)
    w = [sum(t * v for t, v in zip(row, vec)) for row in transform]
    if any(w[rank:]):
        return None
    deg_m = euler_phi(m)
    out = [_ZERO] * deg_m
    for i, c in enumerate(pivots):
        out[c] = w[i]
    # Rows below rank already checked; pivot rows give the coordinates.
    return tuple(out)


def _canonical(n: int, vec: list[Fraction]) -> tuple[int, tuple[Fraction, ...]]:
    # Shrink to the conductor: smallest divisor m of n (m != 2 mod 4)
    # whose cyclotomic field contains the value.
    if n == 1:
        return 1, (vec[0],)
    if not any(vec[1:]):
        return 1, (vec[0],)
    for m in divisors(n):
        if m == n or m % 4 == 2:
            continue
        proj = _project_to_subfield(n, m, tuple(vec))
        if proj is not None:
            return m, proj
    if n % 4 == 2:
        proj = _project_to_subfield(n, n // 2, tuple(vec))
        assert proj is not None  # Q(zeta_n) = Q(zeta_{n/2}) for n = 2 mod 4
        return n // 2, proj
    return n, tuple(vec)


def _reduce_power_coeffs(n: int, coeffs: list[Fraction]) -> list[Fraction]:
    # Fold coordinates on zeta^k (k >= phi(n)) back into the power basis.
    deg = euler_phi(n)
    rows = _power_rows(n)
    out = list(coeffs[:deg]) + [_ZERO] * max(0, deg - len(coeffs))
    for k in range(deg, len(coeffs)):
        c = coeffs[k]
        if c:
            row = rows[k % n] if k >= n else rows[k]
            for j, rj in enumerate(row):
                if rj:
                    out[j] += c * rj
    return out


class CycNum:
    """An element of a cyclotomic field, always in canonical form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: tuple[Fraction, ...], _canonical_input: bool = False):
        if _canonical_input:
            self.order = order
            self.coeffs = coeffs
            return
        n = int(order)
        if n < 1:
            raise ValueError("order must be positive")
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > euler_phi(n):
            vec = _reduce_power_coeffs(n, vec)
        elif len(vec) < euler_phi(n):
            vec = vec + [_ZERO] * (euler_phi(n) - len(vec))
        o, v = _canonical(n, vec)
        self.order = o
        self.coeffs = v

    # --- constructors ---

    @staticmethod
    def rational(q) -> "CycNum":
        return CycNum(1, (Fraction(q),), _canonical_input=True)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "CycNum":
        """The root of unity zeta_n^k."""
        if n < 1:
            raise ValueError("order must be positive")
        k %= n
        from math import gcd
        g = gcd(k, n) if k else n
        n2, k2 = n // g, k // g
        vec = [_ZERO] * (k2 + 1)
        vec[k2] = _ONE
        return CycNum(n2, tuple(vec))

    # --- coercion helpers ---

    @staticmethod
    def _coerce(x):
        if isinstance(x, CycNum):
            return x
        if isinstance(x, (int, Fraction)):
            return CycNum.rational(x)
        return None

    def _aligned(self, other: "CycNum"):
        if self.order == other.order:
            return self.order, list(self.coeffs), list(other.coeffs)
        n = _lcm(self.order, other.order)
        return n, _embed(self, n), _embed(other, n)

    # --- predicates and conversions ---

    def __bool__(self) -> bool:
        return any(self.coeffs)

    @property
    def is_rational(self) -> bool:
        return self.order == 1

    def as_rational(self) -> Optional[Fraction]:
        """The rational value, or None if the value is irrational."""
        return self.coeffs[0] if self.order == 1 else None

    def conjugate(self) -> "CycNum":
        """Complex conjugation (zeta -> zeta^-1)."""
        return self.galois(-1)

    def galois(self, k: int) -> "CycNum":
        """The Galois twist zeta -> zeta^k; k must be prime to the order."""
        n = self.order
        if n == 1:
            return self
        from math import gcd
        k %= n
        if gcd(k, n) != 1:
            raise ValueError(f"galois exponent {k} not prime to order {n}")
        vec = [_ZERO] * n
        for j, c in enumerate(self.coeffs):
            vec[(j * k) % n] += c
        return CycNum(n, tuple(vec))

    # --- arithmetic ---

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.order == 1 and o.order == 1:
            return CycNum(1, (self.coeffs[0] + o.coeffs[0],), _canonical_input=True)
        n, a, b = self._aligned(o)
        return CycNum(n, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, tuple(-c for c in self.coeffs), _canonical_input=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__add__(-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__add__(-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.order == 1 and o.order == 1:
            return CycNum(1, (self.coeffs[0] * o.coeffs[0],), _canonical_input=True)
        if self.order == 1:
            q = self.coeffs[0]
            if not q:
                return CycNum.rational(0)
            return CycNum(o.order, tuple(q * c for c in o.coeffs), _canonical_input=True)
        if o.order == 1:
            return o.__mul__(self)
        n, a, b = self._aligned(o)
        prod = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycNum(n, tuple(prod))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if not self:
            raise DivisionByZero("inverse of zero")
        if self.order == 1:
            return CycNum(1, (1 / self.coeffs[0],), _canonical_input=True)
        inv = _poly_inverse(list(self.coeffs), cyclotomic_poly(self.order))
        return CycNum(self.order, tuple(inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise DivisionByZero("division by zero")
        return self.__mul__(o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # --- comparisons, hashing, display ---

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.order == o.order and self.coeffs == o.coeffs

    def __hash__(self):
        if self.order == 1:
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CycNum({self})"

    def __str__(self):
        if self.order == 1:
            return str(self.coeffs[0])
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                mono = f"z{self.order}" if j == 1 else f"z{self.order}^{j}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def sort_key(self):
        return (self.order,) + tuple((c.numerator, c.denominator) for c in self.coeffs)

    # --- reduction to a prime field ---

    def reduce_mod_p(self, p: int, zeta_image: Union[int, "PrimeFieldElem", None] = None,
                     order: Optional[int] = None) -> "PrimeFieldElem":
        """Image under the ring map Q(zeta_order) -> F_p, zeta |-> zeta_image.

        ``order`` defaults to the value's own order; it may be any multiple
        compatible with ``zeta_image`` having that exact multiplicative order.
        """
        n = self.order if order is None else order
        if n % self.order:
            raise BadPrime(f"value of order {self.order} cannot reduce at order {n}")
        if (p - 1) % n:
            raise BadPrime(f"p={p} is not 1 mod {n}")
        if zeta_image is None:
            if n != 1:
                raise BadPrime("zeta_image required for non-rational orders")
            w = 1
        else:
            w = zeta_image.value if isinstance(zeta_image, PrimeFieldElem) else int(zeta_image)
            if _mult_order(w, p) != n:
                raise BadPrime(f"zeta_image {w} does not have order {n} mod {p}")
        step = pow(w, n // self.order, p) if self.order > 1 else 1
        acc = 0
        power = 1
        for c in self.coeffs:
            if c:
                if c.denominator % p == 0:
                    raise DenominatorCollision(f"denominator {c.denominator} vanishes mod {p}")
                acc = (acc + c.numerator * pow(c.denominator, -1, p) % p * power) % p
            power = power * step % p
        return PrimeFieldElem(acc % p, p)

    # --- serialization ---

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_dict(d: dict) -> "CycNum":
        return CycNum(int(d["order"]), tuple(Fraction(s) for s in d["coeffs"]))


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a // gcd(a, b) * b


def _embed(x: CycNum, n: int) -> list[Fraction]:
    # Coordinates of x in the power basis at order n (x.order divides n).
    deg = euler_phi(n)
    if x.order == 1:
        return [x.coeffs[0]] + [_ZERO] * (deg - 1)
    step = n // x.order
    rows = _power_rows(n)
    out = [_ZERO] * deg
    for j, c in enumerate(x.coeffs):
        if c:
            for i, r in enumerate(rows[step * j]):
                if r:
                    out[i] += c * r
    return out


def _mult_order(w: int, p: int) -> int:
    w %= p
    if w == 0:
        return 0
    order = 1
    acc = w
    while acc != 1:
        acc = acc * w % p
        order += 1
        if order > p:
            raise ArithmeticError("not a unit")
    return order


def _poly_inverse(a: list[Fraction], modulus: tuple[int, ...]) -> list[Fraction]:
    # Extended Euclid in Q[x]: find u with a*u = 1 mod Phi.
    def deg(f):
        for i in range(len(f) - 1, -1, -1):
            if f[i]:
                return i
        return -1

    def trim(f):
        d = deg(f)
        return f[: d + 1] if d >= 0 else []

    def poly_divmod(f, g):
        f = list(f)
        dg = deg(g)
        lead = g[dg]
        q = [_ZERO] * max(0, len(f) - dg)
        for i in range(len(f) - dg - 1, -1, -1):
            c = f[i + dg] / lead
            if c:
                q[i] = c
                for j in range(dg + 1):
                    f[i + j] -= c * g[j]
        return q, trim(f)

    r0 = [Fraction(c) for c in modulus]
    r1 = trim(list(a))
    s0, s1 = [], [_ONE]
    while True:
        q, r = poly_divmod(r0, r1)
        if deg(r) < 0:
            break
        # s_next = s0 - q*s1
        prod = [_ZERO] * (len(q) + len(s1) - 1 if q and s1 else 0)
        for i, x in enumerate(q):
            if x:
                for j, y in enumerate(s1):
                    if y:
                        prod[i + j] += x * y
        s_next = [(s0[i] if i < len(s0) else _ZERO) - (prod[i] if i < len(prod) else _ZERO)
                  for i in range(max(len(s0), len(prod)))]
        r0, r1 = r1, r
        s0, s1 = s1, trim(s_next)
    d = deg(r1)
    if d != 0:
        raise DivisionByZero("element is a zero divisor modulo the cyclotomic polynomial")
    c = r1[0]
    return [x / c for x in s1]


@dataclass(frozen=True)
class PrimeFieldElem:
    """An element of F_p."""

    value: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus)

    def __add__(self, other):
        v = other.value if isinstance(other, PrimeFieldElem) else int(other)
        return PrimeFieldElem((self.value + v) % self.modulus, self.modulus)

    def __mul__(self, other):
        v = other.value if isinstance(other, PrimeFieldElem) else int(other)
        return PrimeFieldElem(self.value * v % self.modulus, self.modulus)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))


ZERO = CycNum.rational(0)
ONE = CycNum.rational(1)


def cyc(q) -> CycNum:
    """Shorthand: a rational as a CycNum."""
    return CycNum.rational(q)


def zeta(n: int, k: int = 1) -> CycNum:
    return CycNum.zeta(n, k)
