"""Exact scalars: Gaussian rationals and formal symbolic amplitudes.

Coefficients are complex numbers with arbitrary-precision rational parts.
Amplitudes are polynomials in commuting formal symbols; a symbol's
conjugate partner carries a trailing ``~`` (``alpha`` pairs with
``alpha~``), so conjugation is an involution on names.  Every value is
canonical on construction and equality is structural.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from typing import Iterable, Iterator, Mapping

Rational = int | Fraction

_IDENT_RE = _re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _rat_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """Complex scalar a + bi with exact rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0) -> None:
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> GaussianRational:
        d = self.re * self.re + self.im * self.im
        if not d:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / d, -self.im / d)

    def __add__(self, other: object) -> GaussianRational:
        w = _coerce(other)
        if w is None:
            return NotImplemented
        return GaussianRational(self.re + w.re, self.im + w.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> GaussianRational:
        w = _coerce(other)
        if w is None:
            return NotImplemented
        return GaussianRational(self.re - w.re, self.im - w.im)

    def __rsub__(self, other: object) -> GaussianRational:
        w = _coerce(other)
        if w is None:
            return NotImplemented
        return GaussianRational(w.re - self.re, w.im - self.im)

    def __mul__(self, other: object) -> GaussianRational:
        w = _coerce(other)
        if w is None:
            return NotImplemented
        return GaussianRational(self.re * w.re - self.im * w.im,
                                self.re * w.im + self.im * w.re)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> GaussianRational:
        w = _coerce(other)
        if w is None:
            return NotImplemented
        return self * w.inverse()

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        w = _coerce(other)
        if w is None:
            return NotImplemented
        return self.re == w.re and self.im == w.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if not self.im:
            return _rat_str(self.re)
        if not self.re:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            if self.im.denominator == 1 and self.im > 0:
                return f"{self.im.numerator}i"
            return f"({_rat_str(self.im)})i"
        return f"({_rat_str(self.re)})+({_rat_str(self.im)})i"

    def __repr__(self) -> str:
        return f"GaussianRational({self})"


def _coerce(x: object) -> GaussianRational | None:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return None


ZERO = GaussianRational()
ONE = GaussianRational(1)
MINUS_ONE = GaussianRational(-1)
I = GaussianRational(0, 1)


def conjugate_name(name: str) -> str:
    """Involution on symbol names: ``alpha`` <-> ``alpha~``."""
    return name[:-1] if name.endswith("~") else name + "~"


@dataclass(frozen=True, slots=True)
class Symbol:
    name: str
    conjugate: str


class SymbolTable:
    """Declared formal symbols, each paired with an auto-generated conjugate."""

    def __init__(self) -> None:
        self._symbols: dict[str, Symbol] = {}

    def declare(self, base: str) -> Symbol:
        if not _IDENT_RE.match(base):
            raise ValueError(f"invalid symbol name {base!r}")
        if base == "i":
            raise ValueError("'i' is reserved for the imaginary unit")
        if base in self._symbols:
            raise ValueError(f"symbol {base!r} already declared")
        bar = conjugate_name(base)
        self._symbols[base] = Symbol(base, bar)
        self._symbols[bar] = Symbol(bar, base)
        return self._symbols[base]

    def __contains__(self, name: str) -> bool:
        return name in self._symbols

    def __getitem__(self, name: str) -> Symbol:
        return self._symbols[name]

    def base_names(self) -> tuple[str, ...]:
        return tuple(n for n in self._symbols if not n.endswith("~"))


# A monomial is the sorted tuple of symbol names it contains, with repetition.
Monomial = tuple[str, ...]


class SymbolicAmplitude:
    """Polynomial over formal symbols with Gaussian-rational coefficients.

    Canonical form: monomials are sorted name tuples, zero coefficients are
    dropped, and terms iterate in lexicographic monomial order.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[str], GaussianRational] | None = None) -> None:
        canon: dict[Monomial, GaussianRational] = {}
        for mono, coeff in (terms or {}).items():
            key = tuple(sorted(mono))
            acc = canon.get(key, ZERO) + coeff
            if acc:
                canon[key] = acc
            else:
                canon.pop(key, None)
        self._terms = dict(sorted(canon.items()))

    @classmethod
    def scalar(cls, value: GaussianRational | Rational) -> SymbolicAmplitude:
        g = value if isinstance(value, GaussianRational) else GaussianRational(value)
        return cls({(): g} if g else {})

    @classmethod
    def symbol(cls, name: str) -> SymbolicAmplitude:
        return cls({(name,): ONE})

    def items(self) -> Iterator[tuple[Monomial, GaussianRational]]:
        return iter(self._terms.items())

    def coefficient(self, mono: Iterable[str]) -> GaussianRational:
        return self._terms.get(tuple(sorted(mono)), ZERO)

    @property
    def is_scalar(self) -> bool:
        return all(not m for m in self._terms)

    @property
    def has_symbols(self) -> bool:
        return any(m for m in self._terms)

    def symbol_names(self) -> set[str]:
        return {name for mono in self._terms for name in mono}

    def as_scalar(self) -> GaussianRational:
        if not self._terms:
            return ZERO
        if self.has_symbols:
            raise ValueError(f"amplitude {self} contains formal symbols")
        return self._terms[()]

    def conjugate(self) -> SymbolicAmplitude:
        return SymbolicAmplitude({
            tuple(conjugate_name(n) for n in mono): coeff.conjugate()
            for mono, coeff in self._terms.items()
        })

    def substitute(self, values: Mapping[str, GaussianRational | Rational]) -> SymbolicAmplitude:
        """Replace symbols by exact scalars; unlisted symbols stay formal."""
        out: dict[Monomial, GaussianRational] = {}
        for mono, coeff in self._terms.items():
            kept: list[str] = []
            for name in mono:
                if name in values:
                    v = values[name]
                    coeff = coeff * (v if isinstance(v, GaussianRational) else GaussianRational(v))
                else:
                    kept.append(name)
            key = tuple(kept)
            acc = out.get(key, ZERO) + coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return SymbolicAmplitude(out)

    def __add__(self, other: object) -> SymbolicAmplitude:
        w = _amp_coerce(other)
        if w is None:
            return NotImplemented
        merged = dict(self._terms)
        for mono, coeff in w._terms.items():
            acc = merged.get(mono, ZERO) + coeff
            if acc:
                merged[mono] = acc
            else:
                merged.pop(mono, None)
        return SymbolicAmplitude(merged)

    __radd__ = __add__

    def __sub__(self, other: object) -> SymbolicAmplitude:
        w = _amp_coerce(other)
        if w is None:
            return NotImplemented
        return self + (-w)

    def __rsub__(self, other: object) -> SymbolicAmplitude:
        w = _amp_coerce(other)
        if w is None:
            return NotImplemented
        return w + (-self)

    def __mul__(self, other: object) -> SymbolicAmplitude:
        w = _amp_coerce(other)
        if w is None:
            return NotImplemented
        out: dict[Monomial, GaussianRational] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in w._terms.items():
                key = tuple(sorted(m1 + m2))
                acc = out.get(key, ZERO) + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return SymbolicAmplitude(out)

    __rmul__ = __mul__

    def __neg__(self) -> SymbolicAmplitude:
        return SymbolicAmplitude({m: -c for m, c in self._terms.items()})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        w = _amp_coerce(other)
        if w is None:
            return NotImplemented
        return self._terms == w._terms

    __hash__ = None  # mutable-adjacent container; structural eq only

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return join_terms(_term_str(m, c) for m, c in self._terms.items())

    def __repr__(self) -> str:
        return f"SymbolicAmplitude({self})"


def _amp_coerce(x: object) -> SymbolicAmplitude | None:
    if isinstance(x, SymbolicAmplitude):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return SymbolicAmplitude.scalar(x)
    return None


def amp(value: object) -> SymbolicAmplitude:
    """Coerce ints, Fractions, Gaussian rationals, or a symbol name."""
    if isinstance(value, str):
        return SymbolicAmplitude.symbol(value)
    w = _amp_coerce(value)
    if w is None:
        raise TypeError(f"cannot coerce {value!r} to an amplitude")
    return w


def _mono_str(mono: Monomial) -> str:
    parts = []
    for name, run in groupby(mono):
        k = len(tuple(run))
        parts.append(name if k == 1 else f"{name}^{k}")
    return "*".join(parts)


def _term_str(mono: Monomial, coeff: GaussianRational) -> str:
    if not mono:
        return str(coeff)
    body = _mono_str(mono)
    if coeff == ONE:
        return body
    if coeff == MINUS_ONE:
        return f"-{body}"
    return f"({coeff})*{body}"


def join_terms(parts: Iterable[str]) -> str:
    """Join term renderings with sign folding: a + b, a - b."""
    out = ""
    for p in parts:
        if not out:
            out = p
        elif p.startswith("-"):
            out += f" - {p[1:]}"
        else:
            out += f" + {p}"
    return out or "0"
