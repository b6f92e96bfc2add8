"""Univariate polynomial arithmetic over prime fields GF(p).

Polynomials are immutable: coefficients are stored as a tuple of residues in
ascending degree order with no trailing zeros, so the zero polynomial is the
empty tuple and its degree is reported as ``None`` (never a sentinel like -1).

The canonical text form writes terms in descending degree with ``^`` for
powers and explicit coefficients where they differ from 1, e.g. ``x^3 + x + 1``
or ``2*x^2 + 1``.  :meth:`Poly.parse` and ``str()`` round-trip exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product
from typing import Iterable, Iterator

#: Largest degree accepted by :func:`factor`.  Trial division against the
#: irreducible sieve is quadratic-ish in the sieve size; inputs here are
#: characteristic polynomials of small graphs, so a hard cap keeps misuse loud.
MAX_FACTOR_DEGREE = 24

_MAX_MODULUS = 1 << 16

_TERM_RE = re.compile(r"^(?:(\d+)\*?)?x(?:\^(\d+))?$|^(\d+)$")


def check_prime(p: int) -> int:
    """Validate a field modulus: prime and below 2**16. Returns p."""
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"field modulus must be an integer >= 2, got {p!r}")
    if p >= _MAX_MODULUS:
        raise ValueError(f"field modulus {p} out of supported range (< 2^16)")
    if p == 2:
        return p
    if p % 2 == 0:
        raise ValueError(f"field modulus {p} is not prime")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"field modulus {p} is not prime")
        d += 2
    return p


class Poly:
    """Immutable univariate polynomial over GF(p)."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs: Iterable[int], p: int):
        check_prime(p)
        c = [v % p for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "Poly":
        return cls((), p)

    @classmethod
    def one(cls, p: int) -> "Poly":
        return cls((1,), p)

    @classmethod
    def constant(cls, c: int, p: int) -> "Poly":
        return cls((c,), p)

    @classmethod
    def x(cls, p: int) -> "Poly":
        return cls((0, 1), p)

    @classmethod
    def monomial(cls, degree: int, p: int, coeff: int = 1) -> "Poly":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * degree + (coeff,), p)

    @classmethod
    def parse(cls, text: str, p: int) -> "Poly":
        """Parse the canonical text form (tolerates extra whitespace)."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        coeffs: dict[int, int] = {}
        for part in s.split("+"):
            term = part.replace(" ", "")
            if not term:
                raise ValueError(f"malformed polynomial {text!r}: empty term")
            m = _TERM_RE.match(term)
            if not m:
                raise ValueError(f"malformed polynomial term {part.strip()!r}")
            if m.group(3) is not None:
                deg, c = 0, int(m.group(3))
            else:
                deg = int(m.group(2)) if m.group(2) is not None else 1
                c = int(m.group(1)) if m.group(1) is not None else 1
            coeffs[deg] = coeffs.get(deg, 0) + c
        out = [0] * (max(coeffs) + 1)
        for deg, c in coeffs.items():
            out[deg] = c
        return cls(out, p)

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def lead(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.lead == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.p))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.p != self.p:
                raise ValueError(f"field mismatch: GF({self.p}) vs GF({other.p})")
            return other
        if isinstance(other, int):
            return Poly.constant(other, self.p)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = (out[i] + v) % self.p
        return Poly(out, self.p)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-v for v in self.coeffs], self.p)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.p)
        p = self.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly([v % p for v in out], p)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Poly.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        p = self.p
        db = other.degree
        if self.degree is None or self.degree < db:
            return Poly.zero(p), self
        rem = list(self.coeffs)
        inv = pow(other.coeffs[-1], -1, p)
        q = [0] * (len(rem) - db)
        for shift in range(len(rem) - db - 1, -1, -1):
            c = (rem[shift + db] * inv) % p
            if c:
                q[shift] = c
                for k in range(db + 1):
                    rem[shift + k] = (rem[shift + k] - c * other.coeffs[k]) % p
        return Poly(q, p), Poly(rem[:db], p)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, a: int) -> int:
        """Evaluate at a field element by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.p
        return acc

    def monic(self) -> "Poly":
        """Scale to leading coefficient 1 (zero polynomial is returned as is)."""
        if self.is_zero or self.lead == 1:
            return self
        inv = pow(self.lead, -1, self.p)
        return Poly([v * inv for v in self.coeffs], self.p)

    def compose(self, inner: "Poly") -> "Poly":
        """Substitute: returns self(inner(x))."""
        inner = self._coerce(inner)
        acc = Poly.zero(self.p)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                base = "x" if d == 1 else f"x^{d}"
                terms.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self}, p={self.p})"


def poly_key(f: Poly) -> tuple:
    """Sort key giving the canonical order: by degree, then coefficients."""
    return (len(f.coeffs), f.coeffs)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; gcd(0, f) = monic(f), gcd(0, 0) = 0."""
    if a.p != b.p:
        raise ValueError(f"field mismatch: GF({a.p}) vs GF({b.p})")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def shift_one(f: Poly) -> Poly:
    """Return f(x + 1), the variable shift used for closed-neighborhood switching."""
    return f.compose(Poly((1, 1), f.p))


def prod(factors: Iterable[Poly], p: int) -> Poly:
    """Product of polynomials over GF(p) (empty product is 1)."""
    return reduce(lambda a, b: a * b, factors, Poly.one(p))


@dataclass(frozen=True)
class Factorization:
    """Factorization into monic irreducibles: unit * prod(poly**exponent)."""

    unit: int
    factors: tuple[tuple[Poly, int], ...]
    p: int

    def expand(self) -> Poly:
        """Multiply the factorization back out."""
        acc = Poly.constant(self.unit, self.p)
        for q, e in self.factors:
            acc = acc * q**e
        return acc

    def exponent_of(self, q: Poly) -> int:
        for base, e in self.factors:
            if base == q:
                return e
        return 0

    def __str__(self) -> str:
        if not self.factors:
            return str(self.unit)
        parts = [] if self.unit == 1 else [str(self.unit)]
        for q, e in self.factors:
            parts.append(f"({q})" + (f"^{e}" if e > 1 else ""))
        return " * ".join(parts)


def _monic_candidates(p: int, degree: int) -> Iterator[Poly]:
    for lower in product(range(p), repeat=degree):
        yield Poly(lower + (1,), p)


@lru_cache(maxsize=None)
def monic_irreducibles(p: int, degree: int) -> tuple[Poly, ...]:
    """All monic irreducible polynomials of exactly `degree` over GF(p).

    Sieved by trial division against lower-degree irreducibles; cached per
    (p, degree), built lazily degree by degree.
    """
    check_prime(p)
    if degree < 1:
        raise ValueError("irreducible polynomials have degree >= 1")
    if degree == 1:
        return tuple(Poly((c, 1), p) for c in range(p))
    divisors = [q for d in range(1, degree // 2 + 1) for q in monic_irreducibles(p, d)]
    found = []
    for g in _monic_candidates(p, degree):
        if all(not (g % q).is_zero for q in divisors):
            found.append(g)
    return tuple(found)


def factor(f: Poly) -> Factorization:
    """Factor into monic irreducibles by trial division.

    Raises ValueError for the zero polynomial or degree above
    MAX_FACTOR_DEGREE.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > MAX_FACTOR_DEGREE:
        raise ValueError(
            f"degree {f.degree} exceeds the factorization cap {MAX_FACTOR_DEGREE}"
        )
    p = f.p
    unit = f.lead
    rem = f.monic()
    factors: list[tuple[Poly, int]] = []
    d = 1
    while rem.degree is not None and rem.degree > 0:
        if 2 * d > rem.degree:
            factors.append((rem, 1))
            break
        for q in monic_irreducibles(p, d):
            if rem.degree < 2 * d:
                break
            e = 0
            while True:
                quo, r = divmod(rem, q)
                if not r.is_zero:
                    break
                rem = quo
                e += 1
            if e:
                factors.append((q, e))
        d += 1
    factors.sort(key=lambda qe: poly_key(qe[0]))
    return Factorization(unit=unit, factors=tuple(factors), p=p)
