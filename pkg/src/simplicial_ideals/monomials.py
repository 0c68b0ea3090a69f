"""Exponent-vector monomials.

A monomial in K[x_0, ..., x_n] is stored as its exponent vector, a tuple of
n+1 non-negative ints (index i <-> variable x_i, so the ambient n is
``len - 1``).  Exponents are Python ints, so overflow is impossible at any
parameter size this package accepts.  Instances are immutable and hashable.

The total order used for all deterministic listings is graded lexicographic:
compare by total degree first, then by the exponent tuple.
"""

import re

from .errors import DimensionError, MonomialParseError

_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?$")


class Monomial:
    __slots__ = ("exps",)

    def __init__(self, exps):
        exps = tuple(int(e) for e in exps)
        if len(exps) < 2:
            raise DimensionError(
                f"monomial needs at least 2 variables, got length {len(exps)}")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        self.exps = exps

    @classmethod
    def unit(cls, n):
        """The monomial 1 in n+1 variables (all exponents zero)."""
        return cls((0,) * (n + 1))

    @classmethod
    def parse(cls, text, n):
        """Parse ``x<i>^<e>`` factors joined by ``*`` into a length-n+1 monomial.

        ``^1`` may be omitted, unused variables default to exponent 0, and the
        string ``1`` denotes the unit monomial.  Whitespace around factors is
        ignored.  Repeated variables multiply (exponents add).
        """
        exps = [0] * (n + 1)
        s = text.strip()
        if not s:
            raise MonomialParseError("empty monomial string")
        for part in s.split("*"):
            tok = part.strip()
            if tok == "1":
                continue
            match = _FACTOR.fullmatch(tok)
            if match is None:
                raise MonomialParseError(f"bad monomial factor {tok!r}")
            i = int(match.group(1))
            e = int(match.group(2)) if match.group(2) is not None else 1
            if i > n:
                raise MonomialParseError(
                    f"variable x{i} out of range for n={n} (have x0..x{n})")
            exps[i] += e
        return cls(exps)

    @property
    def n(self):
        """Ambient projective dimension: number of variables minus one."""
        return len(self.exps) - 1

    @property
    def degree(self):
        """Total degree (sum of exponents)."""
        return sum(self.exps)

    def _check_same_ring(self, other):
        if len(self.exps) != len(other.exps):
            raise DimensionError(
                f"monomials of lengths {len(self.exps)} and {len(other.exps)}")

    def divides(self, other):
        """True iff every exponent of self is <= the matching one of other."""
        self._check_same_ring(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other):
        self._check_same_ring(other)
        return Monomial(max(a, b) for a, b in zip(self.exps, other.exps))

    def __mul__(self, other):
        self._check_same_ring(other)
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __lt__(self, other):
        # graded lexicographic
        return (self.degree, self.exps) < (other.degree, other.exps)

    def __str__(self):
        parts = [f"x{i}^{e}" if e > 1 else f"x{i}"
                 for i, e in enumerate(self.exps) if e]
        return "*".join(parts) or "1"

    def __repr__(self):
        return f"Monomial({self.exps})"
