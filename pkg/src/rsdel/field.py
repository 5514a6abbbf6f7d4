"""Exact arithmetic in F_p and in the cubic extension F_{p^3}.

Elements of F_p are canonical Python ints in [0, p).  Elements of F_{p^3}
live in the power basis {1, gamma, gamma^2} where gamma is a root of a monic
irreducible cubic g(x) = x^3 + g2*x^2 + g1*x + g0 over F_p; products reduce
through gamma^3 = -(g2*gamma^2 + g1*gamma + g0).

Python ints are arbitrary precision, so moduli up to 2^61 - 1 (and beyond)
need no widening tricks.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .errors import FieldMismatchError, ParameterError

# Deterministic Miller-Rabin witness set, valid for every n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field F_p for an odd prime p.  Elements are ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0 or not is_prime(p):
            raise ParameterError(f"modulus must be an odd prime, got {p}")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def reduce(self, x: int) -> int:
        return x % self.p

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def mul(self, x: int, y: int) -> int:
        return (x * y) % self.p

    def neg(self, x: int) -> int:
        return -x % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(x, -1, self.p)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def rand(self, rng) -> int:
        return rng.randrange(self.p)


class MonicCubic(NamedTuple):
    """Coefficients of g(x) = x^3 + g2*x^2 + g1*x + g0, low degree first."""

    g0: int
    g1: int
    g2: int

    def evaluate(self, x: int, p: int) -> int:
        return (((x + self.g2) * x + self.g1) * x + self.g0) % p


def _reduction_consts(p: int, g: MonicCubic):
    # coordinates of gamma^3 and gamma^4 in the power basis
    h0, h1, h2 = -g.g0 % p, -g.g1 % p, -g.g2 % p
    k0 = h2 * h0 % p
    k1 = (h0 + h2 * h1) % p
    k2 = (h1 + h2 * h2) % p
    return (h0, h1, h2, k0, k1, k2)


def _mul3(p, consts, x, y):
    """Schoolbook product of two coordinate triples, reduced mod the cubic.

    Works in the quotient ring whether or not the cubic is irreducible, which
    the irreducibility test below relies on.
    """
    x0, x1, x2 = x
    y0, y1, y2 = y
    h0, h1, h2, k0, k1, k2 = consts
    z3 = (x1 * y2 + x2 * y1) % p
    z4 = x2 * y2 % p
    return (
        (x0 * y0 + z3 * h0 + z4 * k0) % p,
        (x0 * y1 + x1 * y0 + z3 * h1 + z4 * k1) % p,
        (x0 * y2 + x1 * y1 + x2 * y0 + z3 * h2 + z4 * k2) % p,
    )


def _pow_x_mod_cubic(p: int, g: MonicCubic, e: int):
    """x^e in F_p[x]/(g) by square-and-multiply."""
    consts = _reduction_consts(p, g)
    result = (1, 0, 0)
    base = (0, 1, 0)
    while e:
        if e & 1:
            result = _mul3(p, consts, result, base)
        base = _mul3(p, consts, base, base)
        e >>= 1
    return result


def _trim(v):
    while v and v[-1] == 0:
        v.pop()
    return v


def _poly_rem(p, a, b):
    """Remainder of a mod b over F_p; coefficient lists, low degree first."""
    a = _trim(list(a))
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[i + shift] = (a[i + shift] - coef * bc) % p
        _trim(a)
    return a


def _no_root_by_scan(p: int, g: MonicCubic) -> bool:
    return all(g.evaluate(x, p) != 0 for x in range(p))


def _no_root_by_gcd(p: int, g: MonicCubic) -> bool:
    # gcd(x^p - x, g) collects exactly the linear factors of g, so the gcd is
    # constant iff g has no root.
    c0, c1, c2 = _pow_x_mod_cubic(p, g, p)
    a = _trim([c0, (c1 - 1) % p, c2])
    b = [g.g0 % p, g.g1 % p, g.g2 % p, 1]
    while a:
        b, a = a, _poly_rem(p, b, a)
    return len(b) == 1


def is_irreducible_cubic(p: int, g: MonicCubic) -> bool:
    """True iff g has no root in F_p.

    For a cubic that is exactly irreducibility.  Small p uses an exhaustive
    root scan; larger p checks gcd(x^p - x mod g, g) = 1 with x^p computed by
    square-and-multiply.
    """
    g = MonicCubic(g.g0 % p, g.g1 % p, g.g2 % p)
    if p < 1 << 16:
        return _no_root_by_scan(p, g)
    return _no_root_by_gcd(p, g)


def _first_irreducible_pure_cube(p: int) -> Optional[MonicCubic]:
    """Smallest g0 with x^3 + g0 irreducible, or None if the family has none.

    x^3 + g0 has a root iff -g0 is a cube.  When p = 2 (mod 3) cubing is a
    bijection so every member is reducible; when p = 1 (mod 3) cubes form an
    index-3 subgroup and (-g0)^((p-1)/3) != 1 detects a non-cube.  p = 3 has
    x^3 + g0 = (x + g0)^3, all reducible.
    """
    if p % 3 != 1:
        return None
    e = (p - 1) // 3
    for g0 in range(1, p):
        if pow(-g0 % p, e, p) != 1:
            return MonicCubic(g0, 0, 0)
    return None


def find_irreducible_cubic(p: int) -> MonicCubic:
    """First monic cubic with no root in F_p, ordered by (g2, g1, g0)."""
    if p < 3 or not is_prime(p):
        raise ParameterError(f"modulus must be an odd prime, got {p}")
    for g2 in range(p):
        for g1 in range(p):
            if g2 == 0 and g1 == 0:
                found = _first_irreducible_pure_cube(p)
                if found is not None:
                    return found
                continue
            for g0 in range(p):
                cand = MonicCubic(g0, g1, g2)
                if is_irreducible_cubic(p, cand):
                    return cand
    raise AssertionError("no irreducible cubic found; p is not prime")


class CubicField:
    """F_{p^3} = F_p[x]/(g) in the power basis {1, gamma, gamma^2}.

    Coordinate-level methods (add, sub, mul, inv, ...) take and return plain
    3-tuples of canonical ints; ExtElem wraps a tuple together with its field
    for operator syntax.  Hot loops use the tuple methods directly.
    """

    __slots__ = ("base", "g", "p", "_consts")

    def __init__(self, base: PrimeField, g: MonicCubic):
        p = base.p
        g = MonicCubic(g.g0 % p, g.g1 % p, g.g2 % p)
        if not is_irreducible_cubic(p, g):
            raise ParameterError(
                f"x^3 + {g.g2}x^2 + {g.g1}x + {g.g0} has a root mod {p}; "
                "the quotient is not a field"
            )
        self.base = base
        self.p = p
        self.g = g
        self._consts = _reduction_consts(p, g)

    def __eq__(self, other):
        return (
            isinstance(other, CubicField)
            and other.p == self.p
            and other.g == self.g
        )

    def __hash__(self):
        return hash(("CubicField", self.p, self.g))

    def __repr__(self):
        return f"CubicField(p={self.p}, g={tuple(self.g)})"

    # -- element constructors -------------------------------------------

    def elem(self, c0: int = 0, c1: int = 0, c2: int = 0) -> "ExtElem":
        p = self.p
        return ExtElem(self, (c0 % p, c1 % p, c2 % p))

    def from_coords(self, coords) -> "ExtElem":
        c0, c1, c2 = coords
        return self.elem(c0, c1, c2)

    def from_base(self, x: int) -> "ExtElem":
        return self.elem(x, 0, 0)

    @property
    def zero(self) -> "ExtElem":
        return ExtElem(self, (0, 0, 0))

    @property
    def one(self) -> "ExtElem":
        return ExtElem(self, (1, 0, 0))

    @property
    def gamma(self) -> "ExtElem":
        return ExtElem(self, (0, 1, 0))

    def rand(self, rng) -> "ExtElem":
        p = self.p
        return ExtElem(self, (rng.randrange(p), rng.randrange(p), rng.randrange(p)))

    # -- coordinate-level arithmetic -------------------------------------

    def add(self, x, y):
        p = self.p
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2]) % p)

    def sub(self, x, y):
        p = self.p
        return ((x[0] - y[0]) % p, (x[1] - y[1]) % p, (x[2] - y[2]) % p)

    def neg(self, x):
        p = self.p
        return (-x[0] % p, -x[1] % p, -x[2] % p)

    def mul(self, x, y):
        return _mul3(self.p, self._consts, x, y)

    def inv(self, x):
        """Inverse by the extended Euclidean algorithm on polynomials."""
        p = self.p
        b = _trim([x[0] % p, x[1] % p, x[2] % p])
        if not b:
            raise ZeroDivisionError("inverse of zero in F_{p^3}")
        g = self.g
        a = [g.g0, g.g1, g.g2, 1]
        # track s with s * x = r (mod g) along the remainder chain
        s_a, s_b = [], [1]
        while len(b) > 1:
            # one division step: a = q*b + r
            r = a[:]
            q = [0] * (len(a) - len(b) + 1)
            inv_lead = pow(b[-1], -1, p)
            while len(r) >= len(b) and r:
                coef = r[-1] * inv_lead % p
                shift = len(r) - len(b)
                q[shift] = coef
                for i, bc in enumerate(b):
                    r[i + shift] = (r[i + shift] - coef * bc) % p
                _trim(r)
            # s update: s_new = s_a - q * s_b
            qs = [0] * (len(q) + len(s_b) - 1) if s_b else []
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s_b):
                        qs[i + j] = (qs[i + j] + qc * sc) % p
            s_new = [0] * max(len(s_a), len(qs))
            for i, sc in enumerate(s_a):
                s_new[i] = sc
            for i, qc in enumerate(qs):
                s_new[i] = (s_new[i] - qc) % p
            a, b = b, r
            s_a, s_b = s_b, _trim(s_new)
        # b is a nonzero constant: scale s_b by its inverse
        c = pow(b[0], -1, p)
        out = [sc * c % p for sc in s_b] + [0, 0]
        return (out[0], out[1], out[2])

    def div(self, x, y):
        return self.mul(x, self.inv(y))


class ExtElem:
    """An immutable element of a CubicField.

    Supports +, -, *, / against other elements of the same field, and against
    plain ints (embedded into the base subfield).
    """

    __slots__ = ("field", "coords")

    def __init__(self, field: CubicField, coords):
        self.field = field
        self.coords = coords

    @property
    def c0(self) -> int:
        return self.coords[0]

    @property
    def c1(self) -> int:
        return self.coords[1]

    @property
    def c2(self) -> int:
        return self.coords[2]

    def decompose(self):
        """Basis coefficients (c0, c1, c2) with x = c0 + c1*gamma + c2*gamma^2."""
        return self.coords

    def is_zero(self) -> bool:
        return self.coords == (0, 0, 0)

    def _coerce(self, other):
        if isinstance(other, ExtElem):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"elements from different contexts: {self.field!r} vs {other.field!r}"
                )
            return other
        if isinstance(other, int):
            return self.field.from_base(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.field, self.field.add(self.coords, o.coords))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.field, self.field.sub(self.coords, o.coords))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.field, self.field.sub(o.coords, self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.field, self.field.mul(self.coords, o.coords))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.field, self.field.div(self.coords, o.coords))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.field, self.field.div(o.coords, self.coords))

    def __neg__(self):
        return ExtElem(self.field, self.field.neg(self.coords))

    def inverse(self):
        return ExtElem(self.field, self.field.inv(self.coords))

    def __eq__(self, other):
        if isinstance(other, ExtElem):
            return other.field == self.field and other.coords == self.coords
        if isinstance(other, int):
            return self.coords == (other % self.field.p, 0, 0)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.g, self.coords))

    def __repr__(self):
        c0, c1, c2 = self.coords
        return f"ExtElem(({c0}, {c1}, {c2}), p={self.field.p})"
