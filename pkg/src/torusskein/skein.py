"""Kauffman bracket state sums for banded tangles in a solid torus.

Diagrams live in an annulus carrying 2k marked points on its outer boundary
circle, listed in cyclic order; a seam (a radial cut) sits between the
highest-numbered position and position 0.  A tangle is a word of elementary
slices read from the marked boundary inward:

* ``("x", i, sign)``  -- crossing of the strands at cyclically adjacent
  positions i and i+1 (``i == width-1`` crosses the seam),
* ``("cup", i)``      -- birth of an adjacent strand pair at linear slot i,
* ``("cap", i)``      -- death of the cyclically adjacent pair at i, i+1,
* ``("rot", sign)``   -- pure bookkeeping: the strand at one end of the
  linear order passes the seam to the other end (sign +1 moves the last
  strand to position 0).  No strands cross; only the seam-cut labels shift.

Resolving a tangle applies the Kauffman relations: a crossing of sign s
splits as A^s (strands kept parallel) plus A^-s (turnback smoothing), and a
contractible loop contributes the factor -A^2 - A^-2.  States that become
identical are merged, so resolution cost is governed by the number of
distinct planar states rather than 2^crossings; a configurable crossing
budget still guards against accidentally huge inputs.

Fully resolved states are normal-form multicurves: a perfect matching of the
marked points where each arc either misses the seam (winding 0) or crosses
it once (winding -1 when read from its smaller endpoint), plus some number
of parallel core loops.  These are the free-module basis of the relative
skein module of the solid torus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .algebra import DELTA, Laurent

DEFAULT_CROSSING_BUDGET = 22

X, CUP, CAP, ROT = "x", "cup", "cap", "rot"


class MalformedTangle(ValueError):
    """The slice word is inconsistent with the running strand count."""


class PlanarityError(RuntimeError):
    """Winding bookkeeping produced a curve no embedded diagram can have."""


class BudgetError(RuntimeError):
    """The diagram exceeds the exact state-sum crossing budget."""


def crossing(pos: int, sign: int) -> tuple:
    if sign not in (1, -1):
        raise MalformedTangle("crossing sign must be +1 or -1")
    return (X, pos, sign)


def cup(pos: int) -> tuple:
    return (CUP, pos)


def cap(pos: int) -> tuple:
    return (CAP, pos)


def rot(sign: int) -> tuple:
    if sign not in (1, -1):
        raise MalformedTangle("rot sign must be +1 or -1")
    return (ROT, sign)


def kink_slices(pos: int, sign: int) -> tuple:
    """A curl on the strand at ``pos``; resolves to the factor -A^(3*sign)."""
    return (cup(pos + 1), crossing(pos, sign), cap(pos + 1))


@dataclass(frozen=True)
class AnnularTangle:
    """A banded tangle presented as a slice word on ``endpoints`` strands."""

    endpoints: int
    slices: tuple = ()
    final_width: int = field(init=False)
    crossings: int = field(init=False)

    def __post_init__(self):
        if self.endpoints < 0:
            raise MalformedTangle("negative strand count")
        object.__setattr__(self, "slices", tuple(tuple(ev) for ev in self.slices))
        w = self.endpoints
        ncross = 0
        for ev in self.slices:
            op = ev[0]
            if op == X:
                _, pos, sign = ev
                if w < 2 or not 0 <= pos < w:
                    raise MalformedTangle(f"crossing at {pos} with width {w}")
                if sign not in (1, -1):
                    raise MalformedTangle("crossing sign must be +1 or -1")
                ncross += 1
            elif op == CUP:
                _, pos = ev
                if not 0 <= pos <= w:
                    raise MalformedTangle(f"cup at {pos} with width {w}")
                w += 2
            elif op == CAP:
                _, pos = ev
                if w < 2 or not 0 <= pos < w:
                    raise MalformedTangle(f"cap at {pos} with width {w}")
                w -= 2
            elif op == ROT:
                _, sign = ev
                if w < 1:
                    raise MalformedTangle("rot needs at least one strand")
                if sign not in (1, -1):
                    raise MalformedTangle("rot sign must be +1 or -1")
            else:
                raise MalformedTangle(f"unknown slice op {op!r}")
        object.__setattr__(self, "final_width", w)
        object.__setattr__(self, "crossings", ncross)

    def is_closed(self) -> bool:
        return self.final_width == 0

    def to_json(self) -> dict:
        out = []
        for ev in self.slices:
            if ev[0] == X:
                out.append({"op": "crossing", "pos": ev[1], "sign": ev[2]})
            elif ev[0] == ROT:
                out.append({"op": "rot", "sign": ev[1]})
            else:
                out.append({"op": ev[0], "pos": ev[1]})
        return {"endpoints": self.endpoints, "slices": out, "meta": {}}

    @staticmethod
    def from_json(data: dict) -> "AnnularTangle":
        slices = []
        for item in data["slices"]:
            op = item["op"]
            if op == "crossing":
                slices.append(crossing(item["pos"], item["sign"]))
            elif op == "cup":
                slices.append(cup(item["pos"]))
            elif op == "cap":
                slices.append(cap(item["pos"]))
            elif op == "rot":
                slices.append(rot(item["sign"]))
            else:
                raise MalformedTangle(f"unknown slice op {op!r}")
        return AnnularTangle(data["endpoints"], tuple(slices))


@dataclass(frozen=True)
class Multicurve:
    """Normal form: matched arcs with windings, plus parallel core loops.

    Each arc is a triple (a, b, w) with a < b and w in {0, -1}: the signed
    number of seam crossings walking the arc from a to b.  Contractible
    loops are never stored; ``loops`` counts core-parallel circles.
    """

    arcs: tuple = ()
    loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))

    @property
    def endpoints(self) -> int:
        return 2 * len(self.arcs)

    def has_trivial_arc(self) -> bool:
        return any(w == 0 for _, _, w in self.arcs)

    def to_json(self) -> dict:
        return {
            "matching": [[a, b] for a, b, _ in self.arcs],
            "windings": [w for _, _, w in self.arcs],
            "core_loops": self.loops,
        }

    def __str__(self):
        if not self.arcs and not self.loops:
            return "empty"
        parts = [f"{a}-{b}" + ("~" if w else "") for a, b, w in self.arcs]
        if self.loops:
            parts.append(f"core^{self.loops}")
        return " ".join(parts)


class SkeinElement:
    """Finite Laurent-linear combination of multicurves with 2k endpoints."""

    __slots__ = ("endpoints", "terms")

    def __init__(self, endpoints: int, terms=None):
        clean: dict[Multicurve, Laurent] = {}
        if terms:
            for mc, c in (terms.items() if isinstance(terms, dict) else terms):
                if not isinstance(c, Laurent):
                    c = Laurent({0: c}) if c else Laurent()
                if c:
                    prev = clean.get(mc)
                    s = prev + c if prev is not None else c
                    if s:
                        clean[mc] = s
                    else:
                        clean.pop(mc, None)
        object.__setattr__(self, "endpoints", endpoints)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SkeinElement values are immutable")

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        if self.endpoints != other.endpoints:
            raise ValueError("boundary mismatch")
        out = dict(self.terms)
        for mc, c in other.terms.items():
            s = out.get(mc, Laurent.zero()) + c
            if s:
                out[mc] = s
            else:
                out.pop(mc, None)
        return SkeinElement(self.endpoints, out)

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        return self + other.scale(Laurent({0: -1}))

    def scale(self, c) -> "SkeinElement":
        if not isinstance(c, Laurent):
            c = Laurent({0: c})
        return SkeinElement(self.endpoints, {mc: v * c for mc, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self.endpoints == other.endpoints and self.terms == other.terms

    def __hash__(self):
        return hash((self.endpoints, frozenset(self.terms.items())))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].arcs, kv[0].loops))

    def to_json(self) -> list:
        out = []
        for mc, c in self.items():
            entry = mc.to_json()
            entry["coeff"] = str(c)
            out.append(entry)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        return " ++ ".join(f"({c}) * [{mc}]" for mc, c in self.items())

    def __repr__(self):
        return f"SkeinElement({self})"


# ---------------------------------------------------------------------------
# state machine
#
# A state is (slots, arcs, loops).  slots[i] describes the open strand end at
# angular position i: ("E", e, w) if the other end of its curve is the marked
# boundary point e, ("S", j, w) if the other end sits at slot j.  In both
# cases w is the signed number of seam crossings accumulated walking along
# the curve from the recorded far end to this end.
# ---------------------------------------------------------------------------

ONE = Laurent.one()


def _initial_state(width: int):
    return (tuple(("E", e, 0) for e in range(width)), (), 0)


def _apply_cap(state, i):
    """Join the ends at cyclic positions (i, i+1); returns (state, factor)."""
    slots, arcs, loops = state
    width = len(slots)
    j = (i + 1) % width
    seam = 1 if i == width - 1 else 0  # cap traversal from the i side to the j side
    u, v = slots[i], slots[j]
    new_entries = {}
    if u[0] == "S" and u[1] == j:
        total = u[2] + seam
        if total == 0:
            factor = DELTA
        elif total in (1, -1):
            factor = ONE
            loops += 1
        else:
            raise PlanarityError(f"closed component with net winding {total}")
    else:
        factor = ONE
        walk = u[2] + seam - v[2]  # far(u) -> i -> j -> far(v)
        if u[0] == "E" and v[0] == "E":
            a, b, w = u[1], v[1], walk
            if a > b:
                a, b, w = b, a, -w
            if w not in (0, -1):
                raise PlanarityError(f"arc ({a},{b}) with net winding {w}")
            arcs = tuple(sorted(arcs + ((a, b, w),)))
        elif u[0] == "E":
            new_entries[v[1]] = ("E", u[1], walk)
        elif v[0] == "E":
            new_entries[u[1]] = ("E", v[1], -walk)
        else:
            new_entries[u[1]] = ("S", v[1], -walk)
            new_entries[v[1]] = ("S", u[1], walk)
    retained = [t for t in range(width) if t != i and t != j]
    index = {old: new for new, old in enumerate(retained)}
    out = []
    for old in retained:
        e = new_entries.get(old, slots[old])
        out.append(("S", index[e[1]], e[2]) if e[0] == "S" else e)
    return (tuple(out), arcs, loops), factor


def _apply_cup(state, i):
    slots, arcs, loops = state
    shifted = [("S", m + 2 if m >= i else m, w) if t == "S" else (t, m, w)
               for t, m, w in slots]
    new = shifted[:i] + [("S", i + 1, 0), ("S", i, 0)] + shifted[i:]
    return (tuple(new), arcs, loops)


def _apply_seam_cup(state):
    """Birth of a pair straddling the seam: ends at the extreme positions."""
    slots, arcs, loops = state
    width = len(slots)
    shifted = [("S", m + 1, w) if t == "S" else (t, m, w) for t, m, w in slots]
    new = [("S", width + 1, 1)] + shifted + [("S", 0, -1)]
    return (tuple(new), arcs, loops)


def _apply_rot(state, sign):
    slots, arcs, loops = state
    width = len(slots)
    mover = width - 1 if sign == 1 else 0
    entries = list(slots)
    t, far, w = entries[mover]
    entries[mover] = (t, far, w + sign)
    if t == "S":
        pt, pfar, pw = entries[far]
        entries[far] = (pt, pfar, pw - sign)
    new = [None] * width
    for old, e in enumerate(entries):
        pos = (old + sign) % width
        new[pos] = ("S", (e[1] + sign) % width, e[2]) if e[0] == "S" else e
    return (tuple(new), arcs, loops)


def _apply_event(state, ev):
    """List of (state, Laurent factor) pairs resulting from one slice."""
    op = ev[0]
    if op == X:
        _, i, sign = ev
        width = len(state[0])
        capped, f = _apply_cap(state, i)
        turned = _apply_seam_cup(capped) if i == width - 1 else _apply_cup(capped, i)
        return [(state, Laurent.A(sign)), (turned, Laurent.A(-sign) * f)]
    if op == CUP:
        return [(_apply_cup(state, ev[1]), ONE)]
    if op == CAP:
        new, f = _apply_cap(state, ev[1])
        return [(new, f)]
    if op == ROT:
        return [(_apply_rot(state, ev[1]), ONE)]
    raise MalformedTangle(f"unknown slice op {op!r}")


def resolve_states(tangle: AnnularTangle, budget: int | None = DEFAULT_CROSSING_BUDGET):
    """Run the state sum; returns a dict mapping open states to coefficients.

    Identical states are merged as the word is consumed, so the cost scales
    with the number of distinct planar states.  ``budget`` bounds the
    crossing count of a single word (None disables the guard).
    """
    if budget is not None and tangle.crossings > budget:
        raise BudgetError(
            f"{tangle.crossings} crossings exceed the exact budget of {budget}")
    states = {_initial_state(tangle.endpoints): ONE}
    for ev in tangle.slices:
        merged: dict = {}
        for state, coeff in states.items():
            for new_state, factor in _apply_event(state, ev):
                add = coeff * factor
                prev = merged.get(new_state)
                s = add if prev is None else prev + add
                if s:
                    merged[new_state] = s
                else:
                    merged.pop(new_state, None)
        states = merged
    return states


def resolve(tangle: AnnularTangle, budget: int | None = DEFAULT_CROSSING_BUDGET) -> SkeinElement:
    """Kauffman bracket resolution of a closed tangle into normal form."""
    if not tangle.is_closed():
        raise MalformedTangle(
            f"tangle leaves {tangle.final_width} strands unclosed")
    out: dict[Multicurve, Laurent] = {}
    for (slots, arcs, loops), coeff in resolve_states(tangle, budget).items():
        assert not slots
        mc = Multicurve(arcs, loops)
        prev = out.get(mc)
        s = coeff if prev is None else prev + coeff
        if s:
            out[mc] = s
        else:
            out.pop(mc, None)
    return SkeinElement(tangle.endpoints, out)


def compose(top, bottom, budget: int | None = DEFAULT_CROSSING_BUDGET):
    """Stack two tangles (word concatenation) or two resolved elements.

    Tangle x tangle requires the inner width of the first to match the
    strand count of the second.  Element x element is the disjoint union and
    needs one factor to be closed and arc-free (a polynomial in core loops).
    """
    if isinstance(top, AnnularTangle) and isinstance(bottom, AnnularTangle):
        if top.final_width != bottom.endpoints:
            raise MalformedTangle(
                f"boundary mismatch: {top.final_width} vs {bottom.endpoints}")
        return AnnularTangle(top.endpoints, top.slices + bottom.slices)
    if isinstance(top, AnnularTangle):
        top = resolve(top, budget)
    if isinstance(bottom, AnnularTangle):
        bottom = resolve(bottom, budget)
    if top.endpoints != 0 and bottom.endpoints != 0:
        raise MalformedTangle("disjoint union needs one closed, arc-free factor")
    if top.endpoints != 0:
        top, bottom = bottom, top
    out: dict[Multicurve, Laurent] = {}
    for mc1, c1 in top.terms.items():
        if mc1.arcs:
            raise MalformedTangle("closed factor contains arcs")
        for mc2, c2 in bottom.terms.items():
            mc = Multicurve(mc2.arcs, mc2.loops + mc1.loops)
            c = c1 * c2
            prev = out.get(mc)
            s = c if prev is None else prev + c
            if s:
                out[mc] = s
            else:
                out.pop(mc, None)
    return SkeinElement(bottom.endpoints, out)


def multicurve_tangle(mc: Multicurve) -> AnnularTangle:
    """A crossingless slice word resolving to the given multicurve.

    Constructively certifies planar realizability: trivial arcs must nest
    and the seam-crossing arcs must close up in rainbow order, otherwise the
    matching is not embeddable and a PlanarityError is raised.
    """
    pairing = {}
    for a, b, w in mc.arcs:
        pairing[a] = (b, w)
        pairing[b] = (a, w)
    alive = sorted(pairing)
    if len(alive) != 2 * len(mc.arcs):
        raise PlanarityError("matching reuses an endpoint")
    slices = []
    while alive:
        width = len(alive)
        for i in range(width - 1):
            partner, w = pairing[alive[i]]
            if partner == alive[i + 1] and w == 0:
                slices.append(cap(i))
                del alive[i:i + 2]
                break
        else:
            partner, w = pairing[alive[0]]
            if width >= 2 and partner == alive[-1] and w == -1:
                slices.append(cap(width - 1))
                alive = alive[1:-1]
            else:
                raise PlanarityError(f"matching not planar-realizable: {mc}")
    slices.extend(loop_slices(mc.loops))
    return AnnularTangle(mc.endpoints, tuple(slices))


def loop_slices(n: int) -> tuple:
    """Slices appending n parallel core loops."""
    return (cup(0), rot(1), cap(0)) * n


def element_tangles(el: SkeinElement) -> list[tuple[Laurent, AnnularTangle]]:
    """One coefficient-tangle pair per normal-form term of el."""
    return [(c, multicurve_tangle(mc)) for mc, c in el.items()]


def save_tangle(tangle: AnnularTangle, path) -> None:
    with open(path, "w") as fh:
        json.dump(tangle.to_json(), fh, indent=2)


def load_tangle(path) -> AnnularTangle:
    with open(path) as fh:
        return AnnularTangle.from_json(json.load(fh))
