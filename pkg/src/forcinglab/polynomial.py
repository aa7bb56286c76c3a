"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction]


class RationalPolynomial:
    """Coefficients are stored low degree first with trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Number) -> "RationalPolynomial":
        return cls([c])

    @classmethod
    def affine(cls, c0: Number, c1: Number) -> "RationalPolynomial":
        return cls([c0, c1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> "RationalPolynomial":
        return other if isinstance(other, RationalPolynomial) else RationalPolynomial([other])

    def __add__(self, other) -> "RationalPolynomial":
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return RationalPolynomial(self.coefficient(i) + o.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "RationalPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalPolynomial":
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RationalPolynomial":
        result = RationalPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def reflect(self) -> "RationalPolynomial":
        """p(-x)."""
        return RationalPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial([other])
        return isinstance(other, RationalPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPolynomial({self})"

    def __str__(self) -> str:
        return format_polynomial(self)


def _monomial(d: int, var: str) -> str:
    return "" if d == 0 else var if d == 1 else f"{var}^{d}"


def format_polynomial(p: RationalPolynomial, var: str = "x") -> str:
    """``1/32768 + 1/8192 x^2 - 5/16384 x^4`` style, lowest degree first."""
    terms = [(d, c) for d, c in enumerate(p.coeffs) if c]
    if not terms:
        return "0"
    parts = []
    for n, (d, c) in enumerate(terms):
        mag = abs(c)
        body = str(mag) if d == 0 or mag != 1 else ""
        mono = _monomial(d, var)
        text = f"{body} {mono}".strip()
        if n == 0:
            parts.append(("-" if c < 0 else "") + text)
        else:
            parts.append(("- " if c < 0 else "+ ") + text)
    return " ".join(parts)


def parse_polynomial(text: str, var: str = "x") -> RationalPolynomial:
    """Inverse of :func:`format_polynomial`."""
    tokens = text.replace("- ", "-").replace("+ ", "+").split()
    coeffs: dict[int, Fraction] = {}
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("+-")
        if tok.startswith(var):
            c, mono = Fraction(1), tok
        else:
            c = Fraction(tok)
            mono = ""
            if i + 1 < len(tokens) and tokens[i + 1].startswith(var):
                mono = tokens[i + 1]
                i += 1
        d = 0 if mono == "" else 1 if mono == var else int(mono.split("^")[1])
        coeffs[d] = coeffs.get(d, Fraction(0)) + sign * c
        i += 1
    n = max(coeffs, default=-1) + 1
    return RationalPolynomial(coeffs.get(d, 0) for d in range(n))
