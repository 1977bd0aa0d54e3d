"""Exact scalar, polynomial, and linear-form arithmetic.

Everything here is over the Gaussian rationals.  A Scalar keeps separate
rational real and imaginary parts, so equality is decidable and every
identity holds on the nose.  Polynomials are sparse dictionaries mapping
exponent tuples (one entry per variable) to rational coefficients; the
purely imaginary content of any computation is carried by Scalars, never
by polynomial coefficients.  Linear forms are homogeneous degree-one
functionals stored as coefficient tuples and paired with vectors by the
dot product.

The canonical term order used everywhere (serialization, coordinate
vectors for linear algebra) is graded lexicographic with x1 > x2 > ...,
higher degree first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Sequence, Tuple

from .errors import ParseError

Exponent = Tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class Scalar:
    """An element of Q(i): exact rational real and imaginary parts."""

    re: Fraction = _ZERO
    im: Fraction = _ZERO

    @staticmethod
    def of(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return Scalar(_frac(value))

    @staticmethod
    def i() -> "Scalar":
        return Scalar(_ZERO, _ONE)

    @staticmethod
    def i_power(k: int) -> "Scalar":
        k %= 4
        if k == 0:
            return Scalar(_ONE)
        if k == 1:
            return Scalar(_ZERO, _ONE)
        if k == 2:
            return Scalar(-_ONE)
        return Scalar(_ZERO, -_ONE)

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __mul__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            return Scalar(self.re * f, self.im * f)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            return Scalar(self.re / f, self.im / f)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Scalar")
        return self * Scalar(other.re / n, -other.im / n)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


SCALAR_ZERO = Scalar()
SCALAR_ONE = Scalar(_ONE)


@dataclass(frozen=True)
class LinearForm:
    """A homogeneous linear functional on t, stored as rational coefficients."""

    coeffs: Tuple[Fraction, ...]

    @staticmethod
    def of(values: Iterable) -> "LinearForm":
        return LinearForm(tuple(_frac(v) for v in values))

    @staticmethod
    def zero(nvars: int) -> "LinearForm":
        return LinearForm((_ZERO,) * nvars)

    @staticmethod
    def unit(nvars: int, index: int) -> "LinearForm":
        return LinearForm(tuple(_ONE if j == index else _ZERO for j in range(nvars)))

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "LinearForm":
        return LinearForm(tuple(-a for a in self.coeffs))

    def scale(self, f) -> "LinearForm":
        f = _frac(f)
        return LinearForm(tuple(f * a for a in self.coeffs))

    def pair(self, vector: Sequence) -> Fraction:
        return sum((c * _frac(v) for c, v in zip(self.coeffs, vector)), _ZERO)

    def is_parallel(self, other: "LinearForm") -> bool:
        """True when the two forms span the same line (both nonzero)."""
        if self.is_zero() or other.is_zero():
            return False
        n = self.nvars
        for i in range(n):
            for j in range(i + 1, n):
                if self.coeffs[i] * other.coeffs[j] != self.coeffs[j] * other.coeffs[i]:
                    return False
        return True

    def primitive(self) -> Tuple[Fraction, "LinearForm"]:
        """Write self = s * g with g integer, content 1, first nonzero entry > 0.

        Returns (s, g).  Undefined for the zero form.
        """
        num_gcd = 0
        den_lcm = 1
        for c in self.coeffs:
            num_gcd = _gcd(num_gcd, abs(c.numerator))
            den_lcm = _lcm(den_lcm, c.denominator)
        if num_gcd == 0:
            raise ValueError("zero form has no primitive representative")
        scale = Fraction(num_gcd, den_lcm)
        lead = next(c for c in self.coeffs if c != 0)
        if lead < 0:
            scale = -scale
        return scale, LinearForm(tuple(c / scale for c in self.coeffs))

    def drop(self, index: int) -> "LinearForm":
        return LinearForm(self.coeffs[:index] + self.coeffs[index + 1 :])

    def to_polynomial(self) -> "Polynomial":
        terms = {}
        n = self.nvars
        for j, c in enumerate(self.coeffs):
            if c != 0:
                e = [0] * n
                e[j] = 1
                terms[tuple(e)] = c
        return Polynomial(n, terms)

    def __str__(self) -> str:
        return str(self.to_polynomial())


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _lcm(a: int, b: int) -> int:
    return abs(a * b) // _gcd(a, b) if a and b else abs(a or b)


class Polynomial:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Exponent, Fraction] | None = None):
        self.nvars = nvars
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = _frac(c)
                if c != 0:
                    clean[tuple(e)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial(nvars)

    @staticmethod
    def constant(nvars: int, value) -> "Polynomial":
        return Polynomial(nvars, {(0,) * nvars: _frac(value)})

    @staticmethod
    def variable(nvars: int, index: int) -> "Polynomial":
        e = [0] * nvars
        e[index] = 1
        return Polynomial(nvars, {tuple(e): _ONE})

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, _ZERO)

    def total_degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, _ZERO) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return Polynomial(self.nvars, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, _ZERO) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial(self.nvars, out)

    def scale(self, f) -> "Polynomial":
        f = _frac(f)
        if f == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {e: f * c for e, c in self.terms.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    # -- substitution --------------------------------------------------

    def substitute(self, var: int, replacement: "Polynomial") -> "Polynomial":
        """Replace variable `var` by `replacement` (same variable count)."""
        if replacement.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        powers: Dict[int, Polynomial] = {0: Polynomial.constant(self.nvars, 1)}
        out = Polynomial.zero(self.nvars)
        for e, c in self.terms.items():
            k = e[var]
            if k not in powers:
                powers[k] = replacement**k
            rest = list(e)
            rest[var] = 0
            out = out + (Polynomial(self.nvars, {tuple(rest): c}) * powers[k])
        return out

    def eliminate(self, var: int, replacement: "Polynomial") -> "Polynomial":
        """Substitute for `var` and drop that coordinate from the exponents.

        `replacement` is a polynomial in the remaining nvars-1 variables.
        """
        if replacement.nvars != self.nvars - 1:
            raise ValueError("replacement must live in the remaining variables")
        powers: Dict[int, Polynomial] = {0: Polynomial.constant(self.nvars - 1, 1)}
        out = Polynomial.zero(self.nvars - 1)
        for e, c in self.terms.items():
            k = e[var]
            if k not in powers:
                powers[k] = replacement**k
            rest = e[:var] + e[var + 1 :]
            out = out + (Polynomial(self.nvars - 1, {rest: c}) * powers[k])
        return out

    def change_variables(self, matrix: Sequence[Sequence]) -> "Polynomial":
        """Substitute x_i = sum_j matrix[i][j] * y_j.

        The result lives in as many variables as the matrix has columns.
        """
        rows = len(matrix)
        if rows != self.nvars:
            raise ValueError("matrix rows must match variable count")
        cols = len(matrix[0]) if rows else 0
        images = [
            LinearForm.of(matrix[i]).to_polynomial() for i in range(rows)
        ]
        out = Polynomial.zero(cols)
        for e, c in self.terms.items():
            term = Polynomial.constant(cols, c)
            for i, k in enumerate(e):
                if k:
                    term = term * (images[i] ** k)
            out = out + term
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        vals = [_frac(v) for v in point]
        total = _ZERO
        for e, c in self.terms.items():
            v = c
            for x, k in zip(vals, e):
                if k:
                    v *= x**k
            total += v
        return total

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial(
            self.nvars, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self.terms.get(tuple(exponent), _ZERO)

    # -- canonical order and text form ----------------------------------

    def ordered_terms(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in graded-lex order: higher total degree first, then lex."""
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-k for k in e))):
            yield e, self.terms[e]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.ordered_terms():
            mono = "*".join(
                f"x{j + 1}" + (f"^{k}" if k > 1 else "")
                for j, k in enumerate(e)
                if k
            )
            if not mono:
                piece = str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = "-" + mono
            else:
                piece = f"{c}*{mono}"
            if parts and not piece.startswith("-"):
                parts.append("+" + piece)
            else:
                parts.append(piece)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {str(self)!r})"


def monomials(nvars: int, degree: int) -> list[Exponent]:
    """All exponent tuples of the given total degree, in canonical order."""
    if degree < 0:
        return []
    out: list[Exponent] = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for k in range(remaining, -1, -1):
            rec(prefix + (k,), remaining - k, slots - 1)

    if nvars == 0:
        return [()] if degree == 0 else []
    rec((), degree, nvars)
    return out


# ---------------------------------------------------------------------
# Polynomial text grammar: variables x1..xl, integer or p/q literals,
# operators + - * ^, parentheses, whitespace insignificant.
# ---------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<rat>\d+/\d+)|(?P<int>\d+)|(?P<var>x\d+)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"bad polynomial text near {text[pos:pos + 12]!r}")
        tokens.append(m.group().strip())
        pos = m.end()
    return tokens


class _PolyParser:
    def __init__(self, tokens: list[str], nvars: int):
        self.tokens = tokens
        self.pos = 0
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input at {self.peek()!r}")
        return p

    def expr(self) -> Polynomial:
        if self.peek() == "-":
            self.take()
            p = -self.term()
        else:
            p = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek() == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        p = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise ParseError("exponent must be a nonnegative integer")
            p = p ** int(tok)
        return p

    def atom(self) -> Polynomial:
        tok = self.take()
        if tok is None:
            raise ParseError("unexpected end of polynomial text")
        if tok == "(":
            p = self.expr()
            if self.take() != ")":
                raise ParseError("unbalanced parentheses")
            return p
        if tok == "-":
            return -self.factor()
        if tok.startswith("x"):
            idx = int(tok[1:]) - 1
            if not 0 <= idx < self.nvars:
                raise ParseError(f"variable {tok} out of range for {self.nvars} variables")
            return Polynomial.variable(self.nvars, idx)
        if "/" in tok or tok.isdigit():
            return Polynomial.constant(self.nvars, Fraction(tok))
        raise ParseError(f"unexpected token {tok!r}")


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    return _PolyParser(_tokenize(text), nvars).parse()
