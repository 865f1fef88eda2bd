"""Arithmetic and classification for polynomials over GF(2).

Polynomials are bit-packed into nonnegative integers, LSB first: bit k
holds the coefficient of x^k, so 0b10011 is x^4 + x + 1. Over GF(2)
every nonzero polynomial is monic. The degree of the zero polynomial is
reported as -1, the distinguished stand-in for minus infinity.

The private ``_*_bits`` helpers work on raw ints and are shared with the
hot enumeration loops elsewhere in the package; :class:`Gf2Poly` is the
immutable public wrapper.
"""

from __future__ import annotations

from typing import Optional

# Enumeration cap: 2^16 candidates per degree scan in milliseconds, and the
# search scope never needs more. Raise at your own risk.
DEGREE_CAP = 16


def _degree_bits(a: int) -> int:
    return a.bit_length() - 1


def _mul_bits(a: int, b: int) -> int:
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod_bits(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    q = 0
    da = a.bit_length()
    while da >= db:
        shift = da - db
        a ^= b << shift
        q |= 1 << shift
        da = a.bit_length()
    return q, a


def _mod_bits(a: int, b: int) -> int:
    return _divmod_bits(a, b)[1]


def _gcd_bits(a: int, b: int) -> int:
    while b:
        a, b = b, _mod_bits(a, b)
    return a


def _lcm_bits(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return _mul_bits(a, _divmod_bits(b, _gcd_bits(a, b))[0])


def _pow_bits(a: int, d: int) -> int:
    r = 1
    while d:
        if d & 1:
            r = _mul_bits(r, a)
        d >>= 1
        if d:
            a = _mul_bits(a, a)
    return r


def _sqrt_bits(a: int) -> Optional[int]:
    """Exact square root of a bit-packed polynomial, or None.

    A polynomial over GF(2) is a square iff every exponent is even
    (Frobenius); the root keeps the same coefficients at halved exponents.
    """
    r = 0
    k = 0
    while a:
        if a & 2:
            return None
        if a & 1:
            r |= 1 << k
        a >>= 2
        k += 1
    return r


# Irreducibles are built bottom-up by trial division against the already
# enumerated irreducibles of at most half the degree, so the table is its
# own certificate.
_IRRED_BY_DEGREE: dict[int, list[int]] = {}


def _irreducible_bits(degree: int) -> list[int]:
    for d in range(1, degree + 1):
        if d in _IRRED_BY_DEGREE:
            continue
        divisors = [g for dd in range(1, d // 2 + 1) for g in _IRRED_BY_DEGREE[dd]]
        found = []
        for cand in range(1 << d, 1 << (d + 1)):
            if d > 1 and not cand & 1:
                continue  # divisible by x
            if all(_mod_bits(cand, g) for g in divisors):
                found.append(cand)
        _IRRED_BY_DEGREE[d] = found
    return _IRRED_BY_DEGREE[degree]


def _irreducible_set(max_degree: int) -> frozenset[int]:
    bits: list[int] = []
    for d in range(1, max_degree + 1):
        bits.extend(_irreducible_bits(d))
    return frozenset(bits)


def _is_irreducible_bits(a: int) -> bool:
    d = _degree_bits(a)
    if d < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if d > 2 * DEGREE_CAP:
        raise ValueError(f"degree {d} exceeds the trial-division cap {2 * DEGREE_CAP}")
    if d == 1:
        return True
    if not a & 1:
        return False  # divisible by x
    _irreducible_bits(d // 2)
    return all(
        _mod_bits(a, g)
        for dd in range(1, d // 2 + 1)
        for g in _IRRED_BY_DEGREE[dd]
    )


def _smallest_factor_bits(a: int) -> int:
    """Smallest nontrivial irreducible factor (itself when irreducible)."""
    d = _degree_bits(a)
    _irreducible_bits(max(d // 2, 1))
    for dd in range(1, d // 2 + 1):
        for g in _IRRED_BY_DEGREE[dd]:
            if _mod_bits(a, g) == 0:
                return g
    return a


class Gf2Poly:
    """Immutable polynomial over GF(2), bit-packed LSB first."""

    __slots__ = ("bits",)

    def __init__(self, bits: int | str = 0):
        if isinstance(bits, str):
            bits = Gf2Poly.parse(bits).bits
        if bits < 0:
            raise ValueError("coefficient bits must be nonnegative")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("Gf2Poly is immutable")

    @classmethod
    def parse(cls, text: str) -> "Gf2Poly":
        """Parse 'x^4+x+1' term syntax or '0x13' hex (LSB-first bits)."""
        s = "".join(text.split())
        if s.lower().startswith("0x"):
            return cls(int(s, 16))
        if s == "0":
            return cls(0)
        bits = 0
        for term in s.split("+"):
            if term == "1":
                k = 0
            elif term == "x":
                k = 1
            elif term.startswith("x^"):
                k = int(term[2:])
                if k < 0:
                    raise ValueError(f"negative exponent in {term!r}")
            else:
                raise ValueError(f"unrecognized polynomial term {term!r}")
            if bits >> k & 1:
                raise ValueError(f"repeated term {term!r}")
            bits |= 1 << k
        return cls(bits)

    @classmethod
    def from_exponents(cls, *exponents: int) -> "Gf2Poly":
        bits = 0
        for k in exponents:
            bits ^= 1 << k
        return cls(bits)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial (minus-infinity sentinel)."""
        return self.bits.bit_length() - 1

    def weight(self) -> int:
        """Number of nonzero coefficients."""
        return self.bits.bit_count()

    def is_irreducible(self) -> bool:
        """True iff the polynomial has no nontrivial factor in GF(2)[x].

        Trial division against the enumerated irreducibles of degree at
        most deg/2; inputs beyond degree 2*DEGREE_CAP are rejected.
        """
        return _is_irreducible_bits(self.bits)

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(_mul_bits(self.bits, other.bits))

    def __divmod__(self, other: "Gf2Poly") -> tuple["Gf2Poly", "Gf2Poly"]:
        q, r = _divmod_bits(self.bits, other.bits)
        return Gf2Poly(q), Gf2Poly(r)

    def __floordiv__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(_divmod_bits(self.bits, other.bits)[0])

    def __mod__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(_divmod_bits(self.bits, other.bits)[1])

    def __pow__(self, d: int) -> "Gf2Poly":
        if d < 0:
            raise ValueError("exponent must be nonnegative")
        return Gf2Poly(_pow_bits(self.bits, d))

    def __eq__(self, other) -> bool:
        if isinstance(other, Gf2Poly):
            return self.bits == other.bits
        if isinstance(other, int):
            return self.bits == other
        return NotImplemented

    def __lt__(self, other: "Gf2Poly") -> bool:
        return self.bits < other.bits

    def __le__(self, other: "Gf2Poly") -> bool:
        return self.bits <= other.bits

    def __hash__(self) -> int:
        return hash((Gf2Poly, self.bits))

    def __bool__(self) -> bool:
        return bool(self.bits)

    def to_terms(self) -> str:
        """Human-readable 'x^8+x^4+x^3+x+1' form."""
        if self.bits == 0:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            if self.bits >> k & 1:
                parts.append("1" if k == 0 else "x" if k == 1 else f"x^{k}")
        return "+".join(parts)

    def to_hex(self) -> str:
        """Lowercase hex of the LSB-first coefficient bits."""
        return hex(self.bits)

    def __str__(self) -> str:
        return self.to_terms()

    def __repr__(self) -> str:
        return f"Gf2Poly({self.to_terms()!r})"


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)
X = Gf2Poly(2)


def gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(_gcd_bits(a.bits, b.bits))


def lcm(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(_lcm_bits(a.bits, b.bits))


def enumerate_irreducibles(
    degree: int,
    max_weight: Optional[int] = None,
    cap: int = DEGREE_CAP,
) -> list[Gf2Poly]:
    """All irreducibles of exactly this degree, ascending bitstring order."""
    if not 1 <= degree <= cap:
        raise ValueError(f"degree must be in 1..{cap}, got {degree}")
    bits = _irreducible_bits(degree)
    if max_weight is not None:
        bits = [b for b in bits if b.bit_count() <= max_weight]
    return [Gf2Poly(b) for b in bits]


def smallest_factor(p: Gf2Poly) -> Gf2Poly:
    """Smallest-degree irreducible factor of p (p itself when irreducible)."""
    if p.degree < 1:
        raise ValueError("factorization is defined for degree >= 1")
    return Gf2Poly(_smallest_factor_bits(p.bits))


def factor_as_power(p: Gf2Poly) -> Optional[tuple[Gf2Poly, int]]:
    """Return (f, d) with f irreducible and p = f**d, or None.

    Frobenius squares are stripped first (all exponents even), then the
    odd part is trial-divided; d accumulates multiplicatively. The
    factorization is unique when it exists.
    """
    if p.degree < 1:
        raise ValueError("perfect-power test is defined for degree >= 1")
    bits = p.bits
    d = 1
    while True:
        root = _sqrt_bits(bits)
        if root is None:
            break
        bits = root
        d *= 2
    g = _smallest_factor_bits(bits)
    e = 0
    rem = bits
    while rem != 1:
        q, r = _divmod_bits(rem, g)
        if r:
            return None
        rem = q
        e += 1
    return Gf2Poly(g), d * e
