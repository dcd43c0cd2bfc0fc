"""Unnormalized multi-qubit kets with exact symbolic amplitudes.

Qubit 0 is the leftmost character of a basis bitstring.  States are never
normalized; the zero vector (empty term map) is a legal value.  Kets are
value objects: treat them as immutable and share them freely.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .scalars import SymbolicAmplitude, amp, join_terms

MAX_QUBITS = 6

_ZERO_AMP = SymbolicAmplitude()


def _check_bits(bits: str, n: int) -> None:
    if len(bits) != n or any(c not in "01" for c in bits):
        raise ValueError(f"bitstring {bits!r} must be {n} characters over {{0,1}}")


class Ket:
    """Sparse ket: map from basis bitstring to amplitude."""

    __slots__ = ("n_qubits", "terms", "labels")

    def __init__(self, n_qubits: int, terms: Mapping[str, object] | None = None,
                 labels: Sequence[str] | None = None) -> None:
        if not 1 <= n_qubits <= MAX_QUBITS:
            raise ValueError(f"qubit count must be between 1 and {MAX_QUBITS}, got {n_qubits}")
        canon: dict[str, SymbolicAmplitude] = {}
        for bits, value in (terms or {}).items():
            _check_bits(bits, n_qubits)
            a = amp(value)
            if a:
                canon[bits] = a
        self.n_qubits = n_qubits
        self.terms = dict(sorted(canon.items()))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n_qubits:
                raise ValueError("label count must match qubit count")
        self.labels = labels

    @classmethod
    def zero(cls, n_qubits: int) -> Ket:
        return cls(n_qubits)

    @classmethod
    def basis(cls, bits: str, labels: Sequence[str] | None = None) -> Ket:
        return cls(len(bits), {bits: 1}, labels)

    @classmethod
    def from_terms(cls, n_qubits: int, entries: Iterable[tuple[str, object]],
                   labels: Sequence[str] | None = None) -> Ket:
        """Build a ket from (bitstring, amplitude) pairs; duplicates are summed."""
        acc: dict[str, SymbolicAmplitude] = {}
        for bits, value in entries:
            acc[bits] = acc.get(bits, _ZERO_AMP) + amp(value)
        return cls(n_qubits, acc, labels)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def has_symbols(self) -> bool:
        return any(a.has_symbols for a in self.terms.values())

    def amplitude(self, bits: str) -> SymbolicAmplitude:
        _check_bits(bits, self.n_qubits)
        return self.terms.get(bits, _ZERO_AMP)

    def __add__(self, other: object) -> Ket:
        if not isinstance(other, Ket):
            return NotImplemented
        if other.n_qubits != self.n_qubits:
            raise ValueError("cannot add kets of different qubit counts")
        merged = dict(self.terms)
        for bits, a in other.terms.items():
            merged[bits] = merged.get(bits, _ZERO_AMP) + a
        return Ket(self.n_qubits, merged, self.labels or other.labels)

    def __sub__(self, other: object) -> Ket:
        if not isinstance(other, Ket):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> Ket:
        return Ket(self.n_qubits, {b: -a for b, a in self.terms.items()}, self.labels)

    def __mul__(self, value: object) -> Ket:
        a = amp(value)
        return Ket(self.n_qubits, {b: x * a for b, x in self.terms.items()}, self.labels)

    __rmul__ = __mul__

    def tensor(self, other: Ket) -> Ket:
        """Bilinear tensor product; bitstrings and labels concatenate."""
        n = self.n_qubits + other.n_qubits
        if n > MAX_QUBITS:
            raise ValueError(f"tensor product exceeds {MAX_QUBITS} qubits")
        out: dict[str, SymbolicAmplitude] = {}
        for b1, a1 in self.terms.items():
            for b2, a2 in other.terms.items():
                out[b1 + b2] = a1 * a2
        labels = None
        if self.labels is not None and other.labels is not None:
            labels = self.labels + other.labels
        return Ket(n, out, labels)

    def inner(self, other: Ket) -> SymbolicAmplitude:
        """<self|other>: conjugate-linear in self, linear in other."""
        if not isinstance(other, Ket) or other.n_qubits != self.n_qubits:
            raise ValueError("inner product requires equal qubit counts")
        total = _ZERO_AMP
        for bits, a in self.terms.items():
            b = other.terms.get(bits)
            if b is not None:
                total = total + a.conjugate() * b
        return total

    def project(self, targets: Sequence[int], bits: str) -> Ket:
        """Keep exactly the terms whose restriction to ``targets`` equals ``bits``."""
        targets = tuple(targets)
        if len(set(targets)) != len(targets):
            raise ValueError("duplicate target qubit")
        if any(not 0 <= t < self.n_qubits for t in targets):
            raise ValueError("target qubit out of range")
        if len(bits) != len(targets) or any(c not in "01" for c in bits):
            raise ValueError("projection bits must be 0/1 and match the target count")
        kept = {b: a for b, a in self.terms.items()
                if all(b[t] == bits[k] for k, t in enumerate(targets))}
        return Ket(self.n_qubits, kept, self.labels)

    def substitute(self, values: Mapping[str, object]) -> Ket:
        vals = {k: amp(v).as_scalar() for k, v in values.items()}
        return Ket(self.n_qubits,
                   {b: a.substitute(vals) for b, a in self.terms.items()},
                   self.labels)

    def permute(self, order: Sequence[int]) -> Ket:
        """Reorder qubits: output qubit i is input qubit order[i]."""
        if sorted(order) != list(range(self.n_qubits)):
            raise ValueError("order must be a permutation of the qubit indices")
        out = {"".join(b[q] for q in order): a for b, a in self.terms.items()}
        labels = tuple(self.labels[q] for q in order) if self.labels else None
        return Ket(self.n_qubits, out, labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ket):
            return NotImplemented
        # labels are presentation metadata, not part of the value
        return self.n_qubits == other.n_qubits and self.terms == other.terms

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for bits, a in self.terms.items():
            if a == 1:
                parts.append(f"|{bits}>")
            elif a == -1:
                parts.append(f"-|{bits}>")
            else:
                parts.append(f"({a})|{bits}>")
        return join_terms(parts)

    def __repr__(self) -> str:
        return f"Ket({self})"
