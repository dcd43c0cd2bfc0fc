"""Exact SLOCC classification and the black-hole attribute mapping.

Classes for three qubits: NULL, SEPARABLE (A-B-C), BISEPARABLE (A-BC,
B-CA, or C-AB), W, and GHZ, decided exactly from single-party flattening
ranks and the 2x2x2 hyperdeterminant.  Two-qubit states classify as NULL,
SEPARABLE, or ENTANGLED.  Everything except the display floats (3-tangle,
entropy) is exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .scalars import GaussianRational, ZERO
from .states import Ket


class SymbolicStateError(ValueError):
    """The state carries formal symbols, so sign/zero tests are undecidable."""


GHZ_BRANE_NOTE = "four D3-branes intersecting over a string"
COSET_CHAIN = "SL(2,C)×SL(2,C)×SL(2,C) → SL(2,C)×SL(4,C) → SL(6,C)"

_PARTIES = ("A", "B", "C")
_BIPARTITION = {"A": "A-BC", "B": "B-CA", "C": "C-AB"}
_BISEP_RANK = {"A": "2a", "B": "2b", "C": "2c"}

SUSY_PHRASE = {
    "1/2": "1/2 preserved",
    "1/4": "1/4 preserved",
    "1/8": "1/8 preserved",
    "1/8-or-broken": "1/8 preserved or completely broken",
}

_RANK_LEVEL = {"0": 0, "1": 1, "2a": 2, "2b": 2, "2c": 2, "3": 3, "4": 4}


def _scalar_amplitudes(state: Ket) -> list[GaussianRational]:
    if state.has_symbols:
        raise SymbolicStateError("symbolic amplitudes are not classifiable")
    vec = [ZERO] * (1 << state.n_qubits)
    for bits, a in state.terms.items():
        vec[int(bits, 2)] = a.as_scalar()
    return vec


def _party_rows(vec: list[GaussianRational], n: int,
                party: int) -> tuple[list[GaussianRational], list[GaussianRational]]:
    """2 x 2^(n-1) flattening of the amplitude tensor along one party."""
    shift = n - 1 - party
    rows: tuple[list, list] = ([], [])
    for idx, value in enumerate(vec):
        rows[(idx >> shift) & 1].append(value)
    return rows


def _rank_2xm(row0: list[GaussianRational], row1: list[GaussianRational]) -> int:
    nz0 = any(row0)
    nz1 = any(row1)
    if not nz0 and not nz1:
        return 0
    if nz0 and nz1:
        for j in range(len(row0)):
            for k in range(j + 1, len(row0)):
                if row0[j] * row1[k] != row0[k] * row1[j]:
                    return 2
    return 1


def flattening_ranks(state: Ket) -> tuple[int, int, int]:
    """Exact rank (0/1/2) of the 2x4 flattening along each party."""
    if state.n_qubits != 3:
        raise ValueError("flattening ranks are defined for 3-qubit states")
    vec = _scalar_amplitudes(state)
    return tuple(_rank_2xm(*_party_rows(vec, 3, p)) for p in range(3))  # type: ignore[return-value]


def _hyperdet(a: list[GaussianRational]) -> GaussianRational:
    sq = (a[0b000] * a[0b000] * a[0b111] * a[0b111]
          + a[0b001] * a[0b001] * a[0b110] * a[0b110]
          + a[0b010] * a[0b010] * a[0b101] * a[0b101]
          + a[0b100] * a[0b100] * a[0b011] * a[0b011])
    pairs = (a[0b000] * a[0b001] * a[0b110] * a[0b111]
             + a[0b000] * a[0b010] * a[0b101] * a[0b111]
             + a[0b000] * a[0b100] * a[0b011] * a[0b111]
             + a[0b001] * a[0b010] * a[0b101] * a[0b110]
             + a[0b001] * a[0b100] * a[0b011] * a[0b110]
             + a[0b010] * a[0b100] * a[0b011] * a[0b101])
    quads = (a[0b000] * a[0b011] * a[0b101] * a[0b110]
             + a[0b001] * a[0b010] * a[0b100] * a[0b111])
    return sq - 2 * pairs + 4 * quads


def hyperdeterminant(state: Ket) -> GaussianRational:
    """Cayley's 2x2x2 hyperdeterminant of the amplitude tensor, exact."""
    if state.n_qubits != 3:
        raise ValueError("the hyperdeterminant is defined for 3-qubit states")
    return _hyperdet(_scalar_amplitudes(state))


def three_tangle(state: Ket) -> tuple[Fraction, float]:
    """Squared normalized 3-tangle (exact rational) and its sqrt as a float.

    The exact part is 16|Det|^2 / <x|x>^4, invariant under rescaling; the
    display value is the usual tau3 = 4|Det| of the normalized amplitudes.
    """
    if state.is_zero:
        raise ValueError("the 3-tangle of the zero state is undefined")
    det = hyperdeterminant(state)
    norm_sq = state.inner(state).as_scalar().re
    det_sq = (det * det.conjugate()).re
    exact = 16 * det_sq / norm_sq**4
    return exact, math.sqrt(exact)


@dataclass(frozen=True, slots=True)
class EntanglementReport:
    n_qubits: int
    flattening_ranks: tuple[int, ...]
    slocc_class: str                       # NULL/SEPARABLE/BISEPARABLE/W/GHZ/ENTANGLED
    separated_party: str | None
    hyperdeterminant: GaussianRational | None
    three_tangle_exact: Fraction | None
    three_tangle: float | None
    fts_rank: str | None
    susy_fraction: str | None
    size_class: str | None                 # SMALL or LARGE
    attractor: bool
    brane_note: str | None
    entropy_display: float | None

    @property
    def label(self) -> str:
        if self.slocc_class == "SEPARABLE" and self.n_qubits == 3:
            return "SEPARABLE(A-B-C)"
        if self.slocc_class == "BISEPARABLE":
            return f"BISEPARABLE({_BIPARTITION[self.separated_party]})"
        return self.slocc_class

    def to_json(self) -> dict:
        det = self.hyperdeterminant
        return {
            "class": self.label,
            "ranks": list(self.flattening_ranks),
            "fts_rank": self.fts_rank,
            "det": None if det is None else {"re": str(det.re), "im": str(det.im)},
            "tau3": None if self.three_tangle is None else float(f"{self.three_tangle:.12g}"),
            "susy": self.susy_fraction,
            "size": None if self.size_class is None else self.size_class.lower(),
            "attractor": self.attractor,
            "brane_note": self.brane_note,
            "entropy": None if self.entropy_display is None else float(f"{self.entropy_display:.12g}"),
        }


def classify(state: Ket) -> EntanglementReport:
    """Full report for a symbol-free 2- or 3-qubit ket."""
    n = state.n_qubits
    if n not in (2, 3):
        raise ValueError("classification covers 2- and 3-qubit states only")
    vec = _scalar_amplitudes(state)
    if n == 2:
        return _classify_two(vec)
    return _classify_three(state, vec)


def _classify_two(vec: list[GaussianRational]) -> EntanglementReport:
    rank = _rank_2xm(vec[:2], vec[2:])
    det2 = vec[0] * vec[3] - vec[1] * vec[2]
    if rank == 0:
        slocc, fts = "NULL", "0"
    elif det2:
        slocc, fts = "ENTANGLED", None
    else:
        slocc, fts = "SEPARABLE", "1"
    susy = "1/2" if slocc == "SEPARABLE" else None
    size = "SMALL" if slocc == "SEPARABLE" else None
    return EntanglementReport(
        n_qubits=2, flattening_ranks=(rank, rank), slocc_class=slocc,
        separated_party=None, hyperdeterminant=None, three_tangle_exact=None,
        three_tangle=None, fts_rank=fts, susy_fraction=susy, size_class=size,
        attractor=False, brane_note=None, entropy_display=None)


def _classify_three(state: Ket, vec: list[GaussianRational]) -> EntanglementReport:
    ranks = tuple(_rank_2xm(*_party_rows(vec, 3, p)) for p in range(3))
    det = _hyperdet(vec)
    det_sq = (det * det.conjugate()).re
    entropy = math.pi * float(det_sq) ** 0.25
    tangle_exact: Fraction | None = None
    tangle: float | None = None
    if not state.is_zero:
        norm_sq = state.inner(state).as_scalar().re
        tangle_exact = 16 * det_sq / norm_sq**4
        tangle = math.sqrt(tangle_exact)

    if ranks == (0, 0, 0):
        slocc, party, fts = "NULL", None, "0"
    elif ranks == (1, 1, 1):
        slocc, party, fts = "SEPARABLE", None, "1"
    elif ranks.count(1) == 1:
        party = _PARTIES[ranks.index(1)]
        slocc, fts = "BISEPARABLE", _BISEP_RANK[party]
    elif ranks == (2, 2, 2):
        party = None
        if det:
            slocc, fts = "GHZ", "4"
        else:
            slocc, fts = "W", "3"
    else:  # a rank pattern like (1, 1, 2) cannot occur for a valid tensor
        raise AssertionError(f"impossible flattening ranks {ranks}")

    susy = {"SEPARABLE": "1/2", "BISEPARABLE": "1/4", "W": "1/8",
            "GHZ": "1/8-or-broken"}.get(slocc)
    size = None
    if slocc == "GHZ":
        size = "LARGE"
    elif slocc in ("SEPARABLE", "BISEPARABLE", "W"):
        size = "SMALL"
    return EntanglementReport(
        n_qubits=3, flattening_ranks=ranks, slocc_class=slocc,
        separated_party=party, hyperdeterminant=det,
        three_tangle_exact=tangle_exact, three_tangle=tangle, fts_rank=fts,
        susy_fraction=susy, size_class=size, attractor=slocc == "GHZ",
        brane_note=GHZ_BRANE_NOTE if slocc == "GHZ" else None,
        entropy_display=entropy)


@dataclass(frozen=True, slots=True)
class TransitionReport:
    before: EntanglementReport
    after: EntanglementReport
    susy_change: str
    size_change: str
    rank_change: str

    @property
    def rank_increased(self) -> bool:
        b = _RANK_LEVEL.get(self.before.fts_rank, -1)
        a = _RANK_LEVEL.get(self.after.fts_rank, -1)
        return b >= 0 and a >= 0 and a > b


def transition_report(before: Ket, after: Ket) -> TransitionReport:
    """Templated deltas between the classifications of two states."""
    b = classify(before)
    a = classify(after)
    if b.susy_fraction == a.susy_fraction:
        susy = "unchanged"
    else:
        susy = (f"{b.susy_fraction or 'none'} → "
                f"{SUSY_PHRASE.get(a.susy_fraction, 'none')}")
    if b.size_class == a.size_class:
        size = "unchanged"
    else:
        after_size = (a.size_class or "none").lower()
        if a.attractor:
            after_size += " (attractor)"
        size = f"{(b.size_class or 'none').lower()} → {after_size}"
    if b.fts_rank == a.fts_rank:
        rank = "unchanged"
    else:
        rank = f"{b.fts_rank or 'none'} → {a.fts_rank or 'none'}"
    return TransitionReport(b, a, susy, size, rank)
