"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial carries its ring (an ordered tuple of variable names) and a
term map from exponent tuples to nonzero ``Fraction`` coefficients:

    x^2*y + 3   over (x, y)   ->   {(2, 1): Fraction(1), (0, 0): Fraction(3)}

The zero polynomial has an empty term map.  All arithmetic is exact; two
polynomials are equal iff they share the ring and the term map, so identity
testing is fully reliable.  Values are immutable after construction and safe
to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Exponent = tuple[int, ...]

_ZERO = Fraction(0)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class Polynomial:
    """Immutable exact polynomial over an ordered variable ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Iterable[str], terms: Mapping[Exponent, Fraction] | None = None):
        ring = tuple(ring)
        n = len(ring)
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for expo, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff == 0:
                    continue
                expo = tuple(expo)
                if len(expo) != n or any(e < 0 for e in expo):
                    raise ValueError(f"bad exponent {expo} for ring {ring}")
                clean[expo] = coeff
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: Iterable[str]) -> Polynomial:
        return cls(ring)

    @classmethod
    def constant(cls, ring: Iterable[str], value) -> Polynomial:
        ring = tuple(ring)
        return cls(ring, {(0,) * len(ring): _as_fraction(value)})

    @classmethod
    def variable(cls, ring: Iterable[str], name: str) -> Polynomial:
        ring = tuple(ring)
        if name not in ring:
            raise ValueError(f"unknown variable {name!r} in ring {ring}")
        expo = [0] * len(ring)
        expo[ring.index(name)] = 1
        return cls(ring, {tuple(expo): Fraction(1)})

    @classmethod
    def monomial(cls, ring: Iterable[str], expo: Exponent, coeff=1) -> Polynomial:
        return cls(ring, {tuple(expo): _as_fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.ring), _ZERO)

    def total_degree(self) -> int:
        """Max total degree of a term; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def order_at_origin(self) -> int:
        """Min total degree of a term; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return min(sum(e) for e in self.terms)

    def variables_used(self) -> set[str]:
        used: set[str] = set()
        for expo in self.terms:
            for name, e in zip(self.ring, expo):
                if e:
                    used.add(name)
        return used

    def iter_terms(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: Polynomial):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check_ring(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            out[expo] = out.get(expo, _ZERO) + coeff
        return Polynomial(self.ring, out)

    def __sub__(self, other: Polynomial) -> Polynomial:
        self._check_ring(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            out[expo] = out.get(expo, _ZERO) - coeff
        return Polynomial(self.ring, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check_ring(other)
            out: dict[Exponent, Fraction] = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    expo = tuple(a + b for a, b in zip(ea, eb))
                    out[expo] = out.get(expo, _ZERO) + ca * cb
            return Polynomial(self.ring, out)
        return self.scale(other)

    def __rmul__(self, other) -> Polynomial:
        return self.scale(other)

    def scale(self, c) -> Polynomial:
        c = _as_fraction(c)
        if c == 0:
            return Polynomial(self.ring)
        return Polynomial(self.ring, {e: c * coeff for e, coeff in self.terms.items()})

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def term_multiple(self, expo: Exponent, coeff) -> Polynomial:
        """Multiply by the single term coeff * x^expo."""
        coeff = _as_fraction(coeff)
        if coeff == 0:
            return Polynomial(self.ring)
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, expo)): c * coeff for e, c in self.terms.items()},
        )

    # -- calculus and substitution ------------------------------------------

    def partial_derivative(self, var: str) -> Polynomial:
        """Formal partial derivative with respect to a ring variable."""
        if var not in self.ring:
            raise ValueError(f"unknown variable {var!r} in ring {self.ring}")
        i = self.ring.index(var)
        out: dict[Exponent, Fraction] = {}
        for expo, coeff in self.terms.items():
            e = expo[i]
            if e == 0:
                continue
            lowered = expo[:i] + (e - 1,) + expo[i + 1 :]
            out[lowered] = out.get(lowered, _ZERO) + coeff * e
        return Polynomial(self.ring, out)

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        missing = set(self.ring) - set(point)
        if missing:
            raise ValueError(f"missing values for {sorted(missing)}")
        vals = [_as_fraction(point[name]) for name in self.ring]
        total = _ZERO
        for expo, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, expo):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute_values(self, values: Mapping[str, Fraction]) -> Polynomial:
        """Substitute exact rational values for a subset of the variables.

        The result stays in the same ring; substituted variables no longer
        occur in any term.
        """
        idx = {self.ring.index(name): _as_fraction(v) for name, v in values.items()}
        out: dict[Exponent, Fraction] = {}
        for expo, coeff in self.terms.items():
            c = coeff
            new = list(expo)
            for i, v in idx.items():
                e = expo[i]
                if e:
                    c *= v**e
                new[i] = 0
            if c == 0:
                continue
            key = tuple(new)
            out[key] = out.get(key, _ZERO) + c
        return Polynomial(self.ring, out)

    def restrict_ring(self, new_ring: Iterable[str]) -> Polynomial:
        """Reinterpret over a sub-ring; every dropped variable must be unused."""
        new_ring = tuple(new_ring)
        positions = [self.ring.index(name) for name in new_ring]
        dropped = [i for i in range(len(self.ring)) if i not in positions]
        out: dict[Exponent, Fraction] = {}
        for expo, coeff in self.terms.items():
            if any(expo[i] for i in dropped):
                raise ValueError("polynomial uses a variable outside the target ring")
            out[tuple(expo[i] for i in positions)] = coeff
        return Polynomial(new_ring, out)

    def scale_variable(self, var: str, c) -> Polynomial:
        """Apply the coordinate change var -> c * var."""
        c = _as_fraction(c)
        if c == 0:
            raise ValueError("coordinate scale must be a unit")
        i = self.ring.index(var)
        return Polynomial(self.ring, {e: coeff * c ** e[i] for e, coeff in self.terms.items()})

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({'+'.join(self.ring)}: {format_polynomial(self)})"


def _print_key(expo: Exponent):
    # degree first, then degrevlex, so printing is deterministic
    return (sum(expo), tuple(-e for e in reversed(expo)))


def format_monomial(ring: tuple[str, ...], expo: Exponent) -> str:
    parts = []
    for name, e in zip(ring, expo):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_polynomial(p: Polynomial) -> str:
    """Canonical text form; re-parsing it reproduces the polynomial."""
    if not p.terms:
        return "0"
    pieces = []
    for expo in sorted(p.terms, key=_print_key, reverse=True):
        coeff = p.terms[expo]
        mono = format_monomial(p.ring, expo)
        mag = abs(coeff)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append(("-" if coeff < 0 else "+", body))
    sign, body = pieces[0]
    text = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        text += f"{sign}{body}"
    return text
