"""Exact scalar arithmetic: principal ideal domains and their fraction fields.

Elements are plain Python values (``int`` for the integers, a tuple of
``Fraction`` coefficients in increasing degree for rational polynomials)
and all arithmetic goes through a ring object.  Keeping elements as
plain values means the matrix and module layers above stay generic over
the scalar type, and equality/hashing are structural for free.

Unit normalization fixes one canonical associate per element:
nonnegative for integers, monic for polynomials.  Every gcd, lcm and
invariant factor produced by the package is normalized this way.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction


class Ring:
    """Commutative-ring operations over plain-value elements."""

    tag = "?"
    zero = None
    one = None

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return a == self.zero

    def is_unit(self, a):
        raise NotImplementedError

    def format_token(self, a) -> str:
        raise NotImplementedError

    def parse_token(self, text: str):
        raise NotImplementedError

    def __repr__(self):
        return type(self).__name__ + "()"


class PrincipalIdealDomain(Ring):
    """A PID equipped with Euclidean division.

    The two concrete instances (integers, rational polynomials) are both
    Euclidean, and everything downstream (Hermite/Smith elimination,
    exact solving) only consumes the interface below, so any Euclidean
    domain drops in.
    """

    def divmod(self, a, b):
        """Return (q, r) with a = q*b + r and r strictly smaller than b
        in the Euclidean size."""
        raise NotImplementedError

    def pivot_size(self, a) -> int:
        """Euclidean size used for pivot selection; only called on
        nonzero elements."""
        raise NotImplementedError

    def normalize_unit(self, a):
        """Return (u, m) with a = u*m, u a unit and m the canonical
        associate of a.  Zero yields (one, zero)."""
        raise NotImplementedError

    def unit_inverse(self, u):
        return self.exact_div(self.one, u)

    def divides(self, a, b) -> bool:
        if self.is_zero(a):
            return self.is_zero(b)
        return self.is_zero(self.divmod(b, a)[1])

    def exact_div(self, a, b):
        q, r = self.divmod(a, b)
        if not self.is_zero(r):
            raise ValueError(
                f"{self.format_token(b)} does not divide {self.format_token(a)}"
            )
        return q

    def gcd_ext(self, a, b):
        """Extended Euclid: (g, s, t) with g = s*a + t*b, g the
        normalized gcd.  gcd_ext(0, 0) = (0, 0, 0)."""
        r0, r1 = a, b
        s0, s1 = self.one, self.zero
        t0, t1 = self.zero, self.one
        while not self.is_zero(r1):
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        if self.is_zero(r0):
            return self.zero, self.zero, self.zero
        u, g = self.normalize_unit(r0)
        ui = self.unit_inverse(u)
        return g, self.mul(s0, ui), self.mul(t0, ui)

    def gcd(self, a, b):
        return self.gcd_ext(a, b)[0]

    def lcm(self, a, b):
        if self.is_zero(a) or self.is_zero(b):
            return self.zero
        g = self.gcd(a, b)
        return self.normalize_unit(self.exact_div(self.mul(a, b), g))[1]

    def random_element(self, rng, size):
        """Small random element for test generators; deterministic in rng."""
        raise NotImplementedError

    def random_unit(self, rng):
        raise NotImplementedError

    def random_multiplier(self, rng):
        """Small nonzero element used for random transvections; kept
        tame so repeated elementary operations do not blow entries up."""
        raise NotImplementedError

    def shrink_unit(self, values):
        """A unit u such that scaling `values` by u gives a smaller
        representation, or None when there is nothing to gain.  Over the
        integers units cannot shrink anything; over rational polynomials
        a constant can clear all denominators and common content."""
        return None


_INT_TOKEN = re.compile(r"-?\d+\Z")
_RATIONAL_TOKEN = re.compile(r"(-?\d+)(?:/(-?\d+))?\Z")
_POLY_TOKEN = re.compile(r"poly\[(.*)\]\Z")


class Integers(PrincipalIdealDomain):
    """Arbitrary-precision integers; canonical associates are >= 0."""

    tag = "int"
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a in (1, -1)

    def divmod(self, a, b):
        return divmod(a, b)

    def pivot_size(self, a):
        return abs(a)

    def normalize_unit(self, a):
        if a < 0:
            return -1, -a
        return 1, a

    def gcd(self, a, b):
        return math.gcd(a, b)

    def format_token(self, a):
        return str(a)

    def parse_token(self, text):
        if not _INT_TOKEN.match(text):
            raise ValueError(f"invalid integer scalar {text!r}")
        return int(text)

    def random_element(self, rng, size):
        return rng.randint(-size, size)

    def random_unit(self, rng):
        return rng.choice((1, -1))

    def random_multiplier(self, rng):
        return rng.choice((1, -1, 2, -2, 3, -3))

    def __eq__(self, other):
        return isinstance(other, Integers)

    def __hash__(self):
        return hash(Integers)


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class RationalPolynomials(PrincipalIdealDomain):
    """Univariate polynomials over Q, stored as coefficient tuples in
    increasing degree with no trailing zeros; zero is the empty tuple.
    Canonical associates are monic."""

    tag = "polyq"
    zero = ()
    one = (Fraction(1),)

    def from_coeffs(self, coeffs):
        return _strip([Fraction(c) for c in coeffs])

    def degree(self, a):
        # degree of the zero polynomial is -1 by convention
        return len(a) - 1

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return _strip(out)

    def neg(self, a):
        return tuple(-c for c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return tuple(out)

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return len(a) == 1

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(a)
        db, lb = len(b) - 1, b[-1]
        q = [Fraction(0)] * max(len(a) - db, 0)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] / lb
            if not c:
                continue
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
        return _strip(q), _strip(r)

    def pivot_size(self, a):
        return len(a) - 1

    def normalize_unit(self, a):
        if not a:
            return self.one, ()
        lc = a[-1]
        if lc == 1:
            return self.one, a
        return (lc,), tuple(c / lc for c in a)

    def gcd(self, a, b):
        """Monic gcd via a primitive polynomial remainder sequence over
        the integers, which keeps intermediate coefficients small where
        naive rational Euclid blows them up."""
        if not a:
            return self.normalize_unit(b)[1]
        if not b:
            return self.normalize_unit(a)[1]
        fa, fb = _primitive_int_coeffs(a), _primitive_int_coeffs(b)
        if len(fa) < len(fb):
            fa, fb = fb, fa
        while fb:
            r = _int_pseudo_rem(fa, fb)
            fa, fb = fb, _primitive_int_part(r)
        lc = Fraction(fa[-1])
        return tuple(Fraction(c) / lc for c in fa)

    def gcd_ext(self, a, b):
        """Extended Euclid with every remainder rescaled to monic; the
        rescaling keeps the cofactor coefficients moderate and makes the
        returned gcd canonical without a final normalization."""

        def monic(r, s, t):
            if r and r[-1] != 1:
                inv = (1 / r[-1],)
                return self.mul(r, inv), self.mul(s, inv), self.mul(t, inv)
            return r, s, t

        r0, s0, t0 = monic(a, self.one, self.zero)
        r1, s1, t1 = monic(b, self.zero, self.one)
        while r1:
            q, r2 = self.divmod(r0, r1)
            s2 = self.sub(s0, self.mul(q, s1))
            t2 = self.sub(t0, self.mul(q, t1))
            r0, s0, t0 = r1, s1, t1
            r1, s1, t1 = monic(r2, s2, t2)
        if not r0:
            return (), (), ()
        return r0, s0, t0

    def format_token(self, a):
        if not a:
            return "poly[0]"
        return "poly[" + ",".join(str(c) for c in a) + "]"

    def parse_token(self, text):
        m = _POLY_TOKEN.match(text)
        if m:
            inner = m.group(1)
            if not inner:
                return ()
            return _strip([_parse_rational(p) for p in inner.split(",")])
        # a bare rational reads as a constant polynomial
        return _strip([_parse_rational(text)])

    def random_element(self, rng, size):
        deg = rng.choice((0, 0, 1, 1, 2))
        return _strip([Fraction(rng.randint(-size, size)) for _ in range(deg + 1)])

    def random_unit(self, rng):
        c = rng.choice((1, -1, 2, -2, Fraction(1, 2)))
        return (Fraction(c),)

    def random_multiplier(self, rng):
        if rng.randrange(4) == 0:
            lead = Fraction(rng.choice((1, -1, 2, -2)))
            return (Fraction(rng.randint(-2, 2)), lead)
        return (Fraction(rng.choice((1, -1, 2, -2))),)

    def shrink_unit(self, values):
        den = 1
        num = 0
        for poly in values:
            for c in poly:
                den = den * c.denominator // math.gcd(den, c.denominator)
                num = math.gcd(num, c.numerator)
        if num in (0, den):
            return None
        return (Fraction(den, num),)

    def __eq__(self, other):
        return isinstance(other, RationalPolynomials)

    def __hash__(self):
        return hash(RationalPolynomials)


def _primitive_int_coeffs(a):
    """Integer coefficient list of a rational polynomial, divided by its
    content; the sign of the leading coefficient is preserved."""
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints]


def _primitive_int_part(r):
    g = 0
    for c in r:
        g = math.gcd(g, c)
    return [c // g for c in r] if g else []


def _int_pseudo_rem(A, B):
    """Pseudo-remainder of integer coefficient lists: some integer
    multiple of A reduced modulo B, with degree below deg B."""
    A = list(A)
    db, lb = len(B) - 1, B[-1]
    while A and len(A) - 1 >= db:
        la = A[-1]
        shift = len(A) - 1 - db
        A = [lb * c for c in A]
        for i, bc in enumerate(B):
            A[shift + i] -= la * bc
        while A and A[-1] == 0:
            A.pop()
    return A


def _parse_rational(text):
    m = _RATIONAL_TOKEN.match(text)
    if not m:
        raise ValueError(f"invalid rational scalar {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


@dataclass(frozen=True)
class FractionElement:
    """A reduced fraction num/den over some base PID.

    Invariant: den is nonzero and unit-normalized, gcd(num, den) is a
    unit, and zero is stored as 0/1.  Construct through
    FractionField.make so the invariant actually holds.
    """

    num: object
    den: object


class FractionField(Ring):
    """Field of fractions of a PID, with exact reduced arithmetic."""

    def __init__(self, base: PrincipalIdealDomain):
        self.base = base
        self.tag = f"frac({base.tag})"
        self.zero = FractionElement(base.zero, base.one)
        self.one = FractionElement(base.one, base.one)

    def make(self, num, den):
        base = self.base
        if base.is_zero(den):
            raise ZeroDivisionError("zero denominator")
        if base.is_zero(num):
            return self.zero
        g = base.gcd(num, den)
        num = base.exact_div(num, g)
        den = base.exact_div(den, g)
        u, den = base.normalize_unit(den)
        num = base.mul(num, base.unit_inverse(u))
        return FractionElement(num, den)

    def from_base(self, a):
        return FractionElement(a, self.base.one)

    def to_base(self, a):
        """Inverse of from_base; fails if a has a nontrivial denominator."""
        if a.den != self.base.one:
            raise ValueError(f"{self.format_token(a)} is not integral")
        return a.num

    def add(self, a, b):
        base = self.base
        num = base.add(base.mul(a.num, b.den), base.mul(b.num, a.den))
        return self.make(num, base.mul(a.den, b.den))

    def neg(self, a):
        return FractionElement(self.base.neg(a.num), a.den)

    def mul(self, a, b):
        return self.make(self.base.mul(a.num, b.num), self.base.mul(a.den, b.den))

    def invert(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverting zero")
        return self.make(a.den, a.num)

    def exact_div(self, a, b):
        return self.mul(a, self.invert(b))

    def is_zero(self, a):
        return self.base.is_zero(a.num)

    def is_unit(self, a):
        return not self.is_zero(a)

    def format_token(self, a):
        if a.den == self.base.one:
            return self.base.format_token(a.num)
        return f"{self.base.format_token(a.num)}/{self.base.format_token(a.den)}"

    def parse_token(self, text):
        raise NotImplementedError("fraction matrices have no file syntax")

    def __eq__(self, other):
        return isinstance(other, FractionField) and self.base == other.base

    def __hash__(self):
        return hash((FractionField, self.base))

    def __repr__(self):
        return f"FractionField({self.base!r})"


INTEGERS = Integers()
RATIONAL_POLYNOMIALS = RationalPolynomials()

RING_TAGS = {
    INTEGERS.tag: INTEGERS,
    RATIONAL_POLYNOMIALS.tag: RATIONAL_POLYNOMIALS,
}


def ring_for_tag(tag: str) -> PrincipalIdealDomain:
    try:
        return RING_TAGS[tag]
    except KeyError:
        raise ValueError(f"unknown ring tag {tag!r}") from None
