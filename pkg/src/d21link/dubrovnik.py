"""Dubrovnik-polynomial skein oracle on four-valent link diagrams.

Completely independent of the braiding pipeline: diagrams are combinatorial
four-valent graphs (crossings with four ports in planar cyclic order, plus
a perfect matching of ports by edges), values are two-variable Laurent
polynomials in (a, z), and evaluation is Kauffman's switching recursion:

* pick the deterministic traversal (components ordered by smallest crossing
  label, walk starting there); a crossing first met on its over-strand is
  *good*;
* if every crossing is good the diagram is descending, hence an unlink:
  value a^{w} delta^{k-1} with w the sum of self-crossing signs and k the
  number of circles, delta = (a - a^{-1})/z + 1;
* otherwise rewrite at the first bad crossing: switch the crossing and
  correct with z times the difference of the two planar smoothings.  The
  pair (crossing count, bad-crossing count) drops lexicographically, so the
  recursion terminates.

Crossing ports sit at SW=0, SE=1, NE=2, NW=3 of a braid-style box; a
positive braid letter yields a crossing whose over-strand is the SW-NE
diagonal.  Results are memoized per evaluation on a traversal signature
that reconstructs the diagram up to crossing relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .report import CheckResult, Report
from .ring import RatFunc, format_q_laurent, to_integer_laurent
from .tangle import BraidWord, invariant

DEFAULT_BUDGET = 16

# Port coordinates in the crossing box, used for self-crossing signs.
_PORT_POS = {0: (-1, -1), 1: (1, -1), 2: (1, 1), 3: (-1, 1)}


class SkeinBudgetExceeded(RuntimeError):
    """Diagram exceeds the configured crossing budget for the recursion."""


class TwoVarPoly:
    """Laurent polynomial in (a, z) with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Tuple[int, int], Fraction]] = None):
        clean: Dict[Tuple[int, int], Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                coeff = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if coeff:
                    clean[(int(key[0]), int(key[1]))] = coeff
        self.terms = clean

    @classmethod
    def monomial(cls, a_exp: int, z_exp: int, coeff=1) -> "TwoVarPoly":
        return cls({(a_exp, z_exp): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TwoVarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other: "TwoVarPoly") -> "TwoVarPoly":
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = merged.get(key, Fraction(0)) + coeff
            if acc:
                merged[key] = acc
            else:
                merged.pop(key, None)
        out = TwoVarPoly.__new__(TwoVarPoly)
        out.terms = merged
        return out

    def __neg__(self) -> "TwoVarPoly":
        out = TwoVarPoly.__new__(TwoVarPoly)
        out.terms = {k: -v for k, v in self.terms.items()}
        return out

    def __sub__(self, other: "TwoVarPoly") -> "TwoVarPoly":
        return self + (-other)

    def __mul__(self, other: "TwoVarPoly") -> "TwoVarPoly":
        out: Dict[Tuple[int, int], Fraction] = {}
        for (a1, z1), c1 in self.terms.items():
            for (a2, z2), c2 in other.terms.items():
                key = (a1 + a2, z1 + z2)
                acc = out.get(key, Fraction(0)) + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        result = TwoVarPoly.__new__(TwoVarPoly)
        result.terms = out
        return result

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def canonical(self) -> str:
        """Term list sorted by (a-exponent, z-exponent), e.g. ``a*z^-1 + 1``."""
        if not self.terms:
            return "0"
        pieces = []
        for (a_exp, z_exp) in sorted(self.terms):
            coeff = self.terms[(a_exp, z_exp)]
            factors = []
            if a_exp:
                factors.append("a" if a_exp == 1 else f"a^{a_exp}")
            if z_exp:
                factors.append("z" if z_exp == 1 else f"z^{z_exp}")
            mag = abs(coeff)
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self):
        return self.canonical()


TV_ONE = TwoVarPoly.monomial(0, 0)
TV_A = TwoVarPoly.monomial(1, 0)
TV_A_INV = TwoVarPoly.monomial(-1, 0)
TV_Z = TwoVarPoly.monomial(0, 1)
DELTA = TwoVarPoly({(1, -1): 1, (-1, -1): -1, (0, 0): 1})


def _a_power(exp: int) -> TwoVarPoly:
    return TwoVarPoly.monomial(exp, 0)


def _power(base: TwoVarPoly, exp: int) -> TwoVarPoly:
    acc = TV_ONE
    for _ in range(exp):
        acc = acc * base
    return acc


@dataclass
class LinkGraph:
    """Four-valent plane diagram: crossings plus a perfect matching of ports.

    Ports are ``4 * crossing_id + slot``; ``over_diag[cid]`` is 0 when the
    over-strand runs SW-NE (a positive braid letter) and 1 for SE-NW.
    Circles that touch no crossing are carried in ``free_loops``.
    """

    over_diag: Dict[int, int] = field(default_factory=dict)
    partner: Dict[int, int] = field(default_factory=dict)
    free_loops: int = 0

    def crossing_count(self) -> int:
        return len(self.over_diag)

    def copy(self) -> "LinkGraph":
        return LinkGraph(dict(self.over_diag), dict(self.partner), self.free_loops)

    def validate(self) -> None:
        ports = {4 * cid + slot for cid in self.over_diag for slot in range(4)}
        if set(self.partner) != ports:
            raise ValueError("edge matching does not cover the crossing ports")
        for port, other in self.partner.items():
            if other == port or self.partner.get(other) != port:
                raise ValueError("edge matching is not a fixed-point-free involution")

    def switched(self, cid: int) -> "LinkGraph":
        out = self.copy()
        out.over_diag[cid] ^= 1
        return out

    def smoothed(self, cid: int, mode: str) -> "LinkGraph":
        """Remove a crossing: 'vertical' joins SW-NW and SE-NE (strands run
        straight up); 'turnback' joins SW-SE and NE-NW (cap under cup)."""
        pairs = ((0, 3), (1, 2)) if mode == "vertical" else ((0, 1), (2, 3))
        out = self.copy()
        del out.over_diag[cid]
        for s1, s2 in pairs:
            p1, p2 = 4 * cid + s1, 4 * cid + s2
            end1 = out.partner.pop(p1)
            if end1 == p2:
                out.partner.pop(p2)
                out.free_loops += 1
                continue
            end2 = out.partner.pop(p2)
            out.partner[end1] = end2
            out.partner[end2] = end1
        return out


def braid_closure_graph(word: BraidWord) -> LinkGraph:
    """The trace closure of a braid word as a four-valent graph.

    Produces the same diagram as the sliced closure: crossings in letter
    order, closure arcs joining braid top j back to braid bottom j without
    further crossings.
    """
    graph = LinkGraph()
    ends: Dict[int, Optional[int]] = {s: None for s in range(1, word.strands + 1)}
    first: Dict[int, Optional[int]] = dict(ends)

    def feed(strand: int, port: int) -> None:
        if ends[strand] is None:
            first[strand] = port
        else:
            graph.partner[ends[strand]] = port
            graph.partner[port] = ends[strand]

    for cid, letter in enumerate(word.letters):
        k = abs(letter)
        graph.over_diag[cid] = 0 if letter > 0 else 1
        feed(k, 4 * cid + 0)
        feed(k + 1, 4 * cid + 1)
        ends[k] = 4 * cid + 3
        ends[k + 1] = 4 * cid + 2
    for strand in range(1, word.strands + 1):
        if ends[strand] is None:
            graph.free_loops += 1
        else:
            graph.partner[ends[strand]] = first[strand]
            graph.partner[first[strand]] = ends[strand]
    graph.validate()
    return graph


def _analyze(graph: LinkGraph):
    """Deterministic traversal: components, first bad crossing, self-writhe,
    and a memo signature that determines the diagram up to relabeling."""
    covered: set = set()
    first_bad: Optional[int] = None
    seen_first: Dict[int, bool] = {}
    relabel: Dict[int, int] = {}
    passes: Dict[int, Dict[int, Tuple[int, int]]] = {}
    components: List[Tuple[Tuple[int, int], ...]] = []
    for start in sorted(graph.partner):
        if start in covered:
            continue
        comp_index = len(components)
        steps: List[Tuple[int, int]] = []
        current = start
        while True:
            cid, slot = divmod(current, 4)
            exit_port = current ^ 2
            covered.add(current)
            covered.add(exit_port)
            if cid not in relabel:
                relabel[cid] = len(relabel)
            over = (slot & 1) == graph.over_diag[cid]
            if cid not in seen_first:
                seen_first[cid] = over
                if not over and first_bad is None:
                    first_bad = cid
            passes.setdefault(cid, {})[slot & 1] = (slot, comp_index)
            steps.append((relabel[cid], slot))
            nxt = graph.partner[exit_port]
            if nxt == start:
                break
            current = nxt
        components.append(tuple(steps))
    self_writhe = 0
    for cid, by_diag in passes.items():
        over_slot, over_comp = by_diag[graph.over_diag[cid]]
        under_slot, under_comp = by_diag[graph.over_diag[cid] ^ 1]
        if over_comp != under_comp:
            continue
        ox = _PORT_POS[over_slot ^ 2][0] - _PORT_POS[over_slot][0]
        oy = _PORT_POS[over_slot ^ 2][1] - _PORT_POS[over_slot][1]
        ux = _PORT_POS[under_slot ^ 2][0] - _PORT_POS[under_slot][0]
        uy = _PORT_POS[under_slot ^ 2][1] - _PORT_POS[under_slot][1]
        self_writhe += 1 if ox * uy - oy * ux > 0 else -1
    types = tuple(graph.over_diag[cid]
                  for cid, _ in sorted(relabel.items(), key=lambda kv: kv[1]))
    signature = (tuple(components), types, graph.free_loops)
    return len(components), first_bad, self_writhe, signature


def dubrovnik_poly(graph: LinkGraph, budget: int = DEFAULT_BUDGET,
                   use_cache: bool = True) -> TwoVarPoly:
    """Kauffman's switching recursion; exact value in Z[a^{+-1}, z^{+-1}]."""
    if graph.crossing_count() > budget:
        raise SkeinBudgetExceeded(
            f"{graph.crossing_count()} crossings exceed the budget {budget}")
    memo: Dict[tuple, TwoVarPoly] = {}

    def recurse(g: LinkGraph) -> TwoVarPoly:
        ncomp, first_bad, writhe, signature = _analyze(g)
        if use_cache:
            hit = memo.get(signature)
            if hit is not None:
                return hit
        if first_bad is None:
            circles = ncomp + g.free_loops
            if circles == 0:
                raise ValueError("empty diagram has no skein value")
            value = _a_power(writhe) * _power(DELTA, circles - 1)
        else:
            sign_flip = g.over_diag[first_bad] == 1
            switched = recurse(g.switched(first_bad))
            vertical = recurse(g.smoothed(first_bad, "vertical"))
            turnback = recurse(g.smoothed(first_bad, "turnback"))
            correction = TV_Z * (vertical - turnback)
            value = switched - correction if sign_flip else switched + correction
        if use_cache:
            memo[signature] = value
        return value

    result = recurse(graph)
    if not result.has_integer_coefficients():
        raise ArithmeticError("skein value left the integer lattice")
    return result


def specialize(poly: TwoVarPoly) -> Dict[int, int]:
    """Substitute a = -q^{-1}, z = q - q^{-1}; z-denominators must cancel."""
    a_value = RatFunc.q_power(-1, -1)
    z_value = RatFunc.q_power(1) - RatFunc.q_power(-1)
    total = RatFunc.constant(0)
    for (a_exp, z_exp), coeff in sorted(poly.terms.items()):
        total = total + (RatFunc.constant(coeff)
                         * a_value ** a_exp * z_value ** z_exp)
    return to_integer_laurent(total)


def compare(word: BraidWord, budget: int = DEFAULT_BUDGET) -> Report:
    """Both pipelines on the same closed diagram must agree exactly."""
    tangle_value = invariant(word).value_dict()
    skein_value = specialize(dubrovnik_poly(braid_closure_graph(word), budget))
    doubled = {exp: 2 * coeff for exp, coeff in skein_value.items()}
    ok = tangle_value == doubled
    detail = "" if ok else (f"tangle {format_q_laurent(tangle_value)} vs "
                            f"2*skein {format_q_laurent(doubled)}")
    return Report("skein", [CheckResult(f"skein-match:{word}", ok, detail)])
