"""Sliced diagrams of framed unoriented links and their exact evaluation.

A link enters either as a braid word (``n: k1 k2 ...``, letter k > 0 a
positive crossing of strands k, k+1) whose trace closure is converted to a
deterministic sliced presentation, or directly as a slice list.  A sliced
diagram is a bottom-to-top sequence of events, each acting at a 1-based
strand position:

* ``cup p``  - insert a paired arc so its left strand becomes strand p,
* ``cap p``  - join strands p and p+1,
* ``pos p`` / ``neg p`` - braiding / inverse braiding on strands p, p+1.

Evaluation folds a single state vector in the tensor powers of the
six-dimensional module, applying the cup/cap coefficients and the braiding
column tables at the event position; all event maps are parity-even, so no
Koszul signs arise while skipping over bystander strands.  The result of a
closed diagram is a scalar, asserted to be an integer Laurent polynomial
in q.  Framing is blackboard: the value belongs to the drawn diagram, with
no writhe normalization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .ring import RF_ZERO, RatFunc, format_q_laurent, to_integer_laurent
from .representation import DIM, duality_maps
from .rmatrix import braiding

EVENT_KINDS = ("cup", "cap", "pos", "neg")


class DiagramError(ValueError):
    """Malformed braid text or sliced diagram."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise DiagramError("braid needs at least one strand")
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise DiagramError(
                    f"braid letter {letter} out of range for {self.strands} strands")

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in self.letters))

    def __str__(self):
        return f"{self.strands}: {' '.join(str(k) for k in self.letters)}".rstrip()


_BRAID_RE = re.compile(r"^\s*(\d+)\s*:\s*((?:-?\d+\s*)*)$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``<n>: <letters>``, e.g. ``2: 1 1 1`` or ``1:``."""
    match = _BRAID_RE.match(text)
    if not match:
        raise DiagramError(f"malformed braid text {text!r}")
    strands = int(match.group(1))
    letters = tuple(int(tok) for tok in match.group(2).split())
    return BraidWord(strands, letters)


@dataclass(frozen=True)
class SlicedEvent:
    kind: str
    position: int


@dataclass(frozen=True)
class SlicedDiagram:
    events: Tuple[SlicedEvent, ...]

    def __post_init__(self):
        strands = 0
        for event in self.events:
            strands = _next_strand_count(event, strands)
        if strands != 0:
            raise DiagramError(f"diagram is not closed ({strands} strands left open)")

    @property
    def slices(self) -> int:
        return len(self.events)

    def peak_strands(self) -> int:
        strands = peak = 0
        for event in self.events:
            strands = _next_strand_count(event, strands)
            peak = max(peak, strands)
        return peak


def _next_strand_count(event: SlicedEvent, strands: int) -> int:
    kind, p = event.kind, event.position
    if kind == "cup":
        if not 1 <= p <= strands + 1:
            raise DiagramError(f"cup at {p} with {strands} strands")
        return strands + 2
    if kind == "cap":
        if not 1 <= p <= strands - 1:
            raise DiagramError(f"cap at {p} with {strands} strands")
        return strands - 2
    if kind in ("pos", "neg"):
        if not 1 <= p <= strands - 1:
            raise DiagramError(f"crossing at {p} with {strands} strands")
        return strands
    raise DiagramError(f"unknown event kind {kind!r}")


def braid_closure_slices(word: BraidWord) -> SlicedDiagram:
    """Deterministic sliced presentation of the trace closure.

    n nested cups (cup 1 .. cup n), the braid letters as crossings shifted
    to positions n + |k|, then n nested caps (cap n .. cap 1).  Blackboard
    framing: the closure is evaluated exactly as drawn.
    """
    n = word.strands
    events: List[SlicedEvent] = [SlicedEvent("cup", p) for p in range(1, n + 1)]
    for letter in word.letters:
        kind = "pos" if letter > 0 else "neg"
        events.append(SlicedEvent(kind, n + abs(letter)))
    events.extend(SlicedEvent("cap", p) for p in range(n, 0, -1))
    return SlicedDiagram(tuple(events))


def parse_sliced_text(text: str) -> SlicedDiagram:
    """One ``kind position`` per line; blank lines and ``#`` comments skipped."""
    events = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0] not in EVENT_KINDS:
            raise DiagramError(f"line {lineno}: expected 'kind position', got {raw!r}")
        try:
            position = int(parts[1])
        except ValueError:
            raise DiagramError(f"line {lineno}: bad position {parts[1]!r}") from None
        events.append(SlicedEvent(parts[0], position))
    return SlicedDiagram(tuple(events))


@dataclass(frozen=True)
class EvalResult:
    value: Tuple[Tuple[int, int], ...]   # sorted (q-exponent, coefficient)
    slices: int
    peak_strands: int
    peak_dimension: int

    def value_dict(self) -> Dict[int, int]:
        return dict(self.value)

    def canonical(self) -> str:
        return format_q_laurent(dict(self.value))


@lru_cache(maxsize=None)
def _cup_terms() -> Tuple[Tuple[Tuple[int, int], RatFunc], ...]:
    _, b, _ = duality_maps()
    out = []
    for (row, _), value in sorted(b.entries.items()):
        out.append(((row // DIM, row % DIM), value))
    return tuple(out)


@lru_cache(maxsize=None)
def _cap_terms() -> Dict[Tuple[int, int], RatFunc]:
    _, _, d = duality_maps()
    return {(col // DIM, col % DIM): value
            for (_, col), value in d.entries.items()}


@lru_cache(maxsize=None)
def _crossing_columns(kind: str) -> Dict[Tuple[int, int],
                                         Tuple[Tuple[Tuple[int, int], RatFunc], ...]]:
    bundle = braiding()
    matrix = bundle.c if kind == "pos" else bundle.c_inv
    table: Dict[Tuple[int, int], List[Tuple[Tuple[int, int], RatFunc]]] = {}
    for (row, col), value in sorted(matrix.entries.items()):
        table.setdefault((col // DIM, col % DIM), []).append(
            ((row // DIM, row % DIM), value))
    return {key: tuple(rows) for key, rows in table.items()}


def _accumulate(state: Dict[tuple, RatFunc], key: tuple, value: RatFunc) -> None:
    acc = state.get(key)
    total = value if acc is None else acc + value
    if total.is_zero():
        state.pop(key, None)
    else:
        state[key] = total


def evaluate_sliced(diagram: SlicedDiagram) -> EvalResult:
    """Fold the event list over a state vector and return the scalar value."""
    state: Dict[tuple, RatFunc] = {(): RatFunc.constant(1)}
    peak = 0
    strands = 0
    for event in diagram.events:
        p = event.position
        new_state: Dict[tuple, RatFunc] = {}
        if event.kind == "cup":
            for key, amp in state.items():
                prefix, suffix = key[:p - 1], key[p - 1:]
                for pair, coeff in _cup_terms():
                    _accumulate(new_state, prefix + pair + suffix, amp * coeff)
            strands += 2
        elif event.kind == "cap":
            caps = _cap_terms()
            for key, amp in state.items():
                coeff = caps.get((key[p - 1], key[p]))
                if coeff is not None:
                    _accumulate(new_state, key[:p - 1] + key[p + 1:], amp * coeff)
            strands -= 2
        else:
            columns = _crossing_columns(event.kind)
            for key, amp in state.items():
                for pair, coeff in columns.get((key[p - 1], key[p]), ()):
                    _accumulate(new_state, key[:p - 1] + pair + key[p + 1:],
                                amp * coeff)
        state = new_state
        peak = max(peak, strands)
    total = state.get((), RF_ZERO)
    terms = to_integer_laurent(total)
    return EvalResult(tuple(sorted(terms.items())), diagram.slices, peak,
                      DIM ** peak)


def invariant(word: BraidWord) -> EvalResult:
    """Value of the framed-link invariant on the trace closure of a braid."""
    return evaluate_sliced(braid_closure_slices(word))
