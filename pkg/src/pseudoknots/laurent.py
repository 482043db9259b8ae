"""Exact Laurent polynomials in one variable with integer coefficients.

Used for the bracket polynomial (variable A) and the Jones polynomial
(variable t).  Coefficients are arbitrary-precision ints; exponents may be
negative.  Instances are immutable and hashable.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPolynomial:
    """Sparse Laurent polynomial: a map from integer exponent to nonzero int."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for exp, c in items:
            if c:
                acc[exp] = acc.get(exp, 0) + c
                if not acc[exp]:
                    del acc[exp]
        self._coeffs = acc

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPolynomial":
        return cls({exp: coeff})

    # -- inspection --------------------------------------------------------

    def items(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs sorted by exponent."""
        return sorted(self._coeffs.items())

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return min(self._coeffs)

    @property
    def max_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    def span(self) -> int:
        """max_degree - min_degree (0 for monomials)."""
        return self.max_degree - self.min_degree

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        acc = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            s = acc.get(exp, 0) + c
            if s:
                acc[exp] = s
            else:
                acc.pop(exp, None)
        out = LaurentPolynomial.zero()
        out._coeffs = acc
        return out

    def __neg__(self) -> "LaurentPolynomial":
        out = LaurentPolynomial.zero()
        out._coeffs = {e: -c for e, c in self._coeffs.items()}
        return out

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = acc.get(e, 0) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        out = LaurentPolynomial.zero()
        out._coeffs = acc
        return out

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, coeff: int, exp_shift: int = 0) -> "LaurentPolynomial":
        """Multiply by coeff * x**exp_shift."""
        if coeff == 0:
            return LaurentPolynomial.zero()
        out = LaurentPolynomial.zero()
        out._coeffs = {e + exp_shift: c * coeff for e, c in self._coeffs.items()}
        return out

    def invert_variable(self) -> "LaurentPolynomial":
        """Substitute x -> x**-1."""
        out = LaurentPolynomial.zero()
        out._coeffs = {-e: c for e, c in self._coeffs.items()}
        return out

    def map_exponents(self, fn) -> "LaurentPolynomial":
        """Apply fn to every exponent; fn must be injective on the support."""
        acc: dict[int, int] = {}
        for e, c in self._coeffs.items():
            ne = fn(e)
            if ne in acc:
                raise ValueError("exponent map is not injective on support")
            acc[ne] = c
        out = LaurentPolynomial.zero()
        out._coeffs = acc
        return out

    def evaluate_at_unit(self, x: int) -> int:
        """Exact evaluation at x in {1, -1}."""
        if x == 1:
            return sum(self._coeffs.values())
        if x == -1:
            return sum(c if e % 2 == 0 else -c for e, c in self._coeffs.items())
        raise ValueError("exact evaluation is only supported at +1 and -1")

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    # -- formatting --------------------------------------------------------

    def to_pairs_string(self) -> str:
        """Compact `exp:coeff,exp:coeff` form, exponents ascending."""
        if not self._coeffs:
            return "0:0"
        return ",".join(f"{e}:{c}" for e, c in self.items())

    @classmethod
    def from_pairs_string(cls, text: str) -> "LaurentPolynomial":
        text = text.strip()
        if text == "0:0":
            return cls.zero()
        pairs = []
        for chunk in text.split(","):
            e, _, c = chunk.partition(":")
            if not _:
                raise ValueError(f"malformed term {chunk!r}")
            pairs.append((int(e), int(c)))
        return cls(pairs)

    def pretty(self, var: str = "t") -> str:
        """Human form, e.g. `-t^-4 + t^-3 + t^-1`."""
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                base = var if e == 1 else f"{var}^{e}"
                term = base if mag == 1 else f"{mag}*{base}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.pretty()})"


A = LaurentPolynomial.monomial(1, 1)
LOOP_FACTOR = LaurentPolynomial({2: -1, -2: -1})  # delta = -A^2 - A^-2
