"""Winding-down moves, signatures, and the homotopy type of a seaweed type.

A move looks at the leading parts a = top[0], b = bottom[0] and rewrites the
pair; exactly one guard applies:

    F       a < b            swap top and bottom
    C(c)    a == b == c      delete both leading parts (records component c)
    R       b < a < 2b       top -> b | rest,        bottom -> 2b-a | rest
    B       a == 2b          top -> b | rest,        bottom -> rest
    P       a > 2b           top -> a-2b | b | rest, bottom -> rest

C is the only move that can empty both sides, so winding down any pair
terminates in a well-defined multiset of recorded component sizes: the
homotopy type.  Each non-F move strictly decreases n and F never repeats, so
at most 2n+1 moves happen.  The sum of the recorded C-values plus everything
discarded by R/B/P moves accounts for all of n, hence sum(C-values) <= n,
with equality iff no R/B/P move ever fires (e.g. for a/a).

The meander of the seaweed deformation-retracts onto a wedge-like union of
circles, one per even recorded component plus one per pair of odd ones; its
index can be recovered from the homotopy type alone:

    index = sum 2*floor(c_i/2) + (number of odd c_i) - 1
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass

from .compositions import Composition, SeaweedType
from .errors import ParseError

_SIG_TOKEN = re.compile(r"[FRBP]|C\((\d+)\)")


@dataclass(frozen=True)
class Move:
    tag: str  # one of F C R B P
    size: int | None = None  # recorded component, C only

    def __post_init__(self):
        if self.tag not in ("F", "C", "R", "B", "P"):
            raise ValueError(f"unknown move tag {self.tag!r}")
        if (self.tag == "C") != (self.size is not None):
            raise ValueError("size goes with C moves and only with them")

    def __str__(self) -> str:
        return f"C({self.size})" if self.tag == "C" else self.tag


@dataclass(frozen=True)
class Signature:
    """The full move sequence produced by winding a type down to nothing."""

    moves: tuple[Move, ...]

    def __str__(self) -> str:
        return format_signature(self)

    def homotopy_type(self) -> "HomotopyType":
        return HomotopyType(tuple(m.size for m in self.moves if m.tag == "C"))


@dataclass(frozen=True)
class HomotopyType:
    """Recorded C-values in elimination order; equality is as multisets."""

    components: tuple[int, ...]

    def __post_init__(self):
        for c in self.components:
            if c < 1:
                raise ValueError("components must be positive")

    def canonical(self) -> tuple[int, ...]:
        return tuple(sorted(self.components))

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomotopyType):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __str__(self) -> str:
        return "H(" + ",".join(str(c) for c in self.components) + ")"


def wind_step(t: SeaweedType) -> tuple[Move, SeaweedType | None]:
    """Apply one move; the new type is None exactly when a C empties both sides."""
    a, b = t.top.parts[0], t.bottom.parts[0]
    ta, tb = t.top.parts[1:], t.bottom.parts[1:]
    if a < b:
        return Move("F"), SeaweedType(t.bottom, t.top)
    if a == b:
        if not ta and not tb:
            return Move("C", a), None
        if not ta or not tb:
            # sums of the two sides always stay equal, so one side cannot
            # run dry before the other
            raise AssertionError("one-sided exhaustion; invariant broken")
        return Move("C", a), SeaweedType(Composition(ta), Composition(tb))
    if a < 2 * b:
        return Move("R"), SeaweedType(
            Composition((b,) + ta), Composition((2 * b - a,) + tb)
        )
    if a == 2 * b:
        return Move("B"), SeaweedType(Composition((b,) + ta), Composition(tb))
    return Move("P"), SeaweedType(Composition((a - 2 * b, b) + ta), Composition(tb))


def wind_down(t: SeaweedType) -> tuple[Signature, HomotopyType]:
    moves = []
    cur: SeaweedType | None = t
    while cur is not None:
        move, cur = wind_step(cur)
        moves.append(move)
    sig = Signature(tuple(moves))
    return sig, sig.homotopy_type()


def homotopy_components(t: SeaweedType) -> tuple[int, ...]:
    """Recorded C-values only, via a deque kernel (no object churn).

    Same elimination order as wind_down; used by the censuses.
    """
    return _wind_homotopy(t.top.parts, t.bottom.parts)


def _wind_homotopy(top, bottom) -> tuple[int, ...]:
    dt, db = deque(top), deque(bottom)
    out = []
    while dt:
        a, b = dt[0], db[0]
        if a < b:
            dt, db = db, dt
        elif a == b:
            dt.popleft()
            db.popleft()
            out.append(a)
        elif a < 2 * b:
            dt[0] = b
            db[0] = 2 * b - a
        elif a == 2 * b:
            dt[0] = b
            db.popleft()
        else:
            dt[0] = b
            dt.appendleft(a - 2 * b)
            db.popleft()
    return tuple(out)


def homotopy_index(h: HomotopyType) -> int:
    """Index of any seaweed with this homotopy type."""
    if not h.components:
        raise ValueError("empty homotopy type")
    return sum(2 * (c // 2) for c in h.components) + sum(
        1 for c in h.components if c % 2
    ) - 1


def format_signature(sig: Signature) -> str:
    return "".join(str(m) for m in sig.moves)


def parse_signature(text: str) -> Signature:
    if not text:
        raise ParseError("empty signature", 0)
    moves = []
    pos = 0
    while pos < len(text):
        m = _SIG_TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"bad signature token in {text!r}", pos)
        if m.group().startswith("C"):
            size = int(m.group(1))
            if size < 1:
                raise ParseError(f"C size must be positive in {text!r}", pos)
            moves.append(Move("C", size))
        else:
            moves.append(Move(m.group()))
        pos = m.end()
    return Signature(tuple(moves))


def parse_homotopy_type(text: str) -> HomotopyType:
    m = re.fullmatch(r"H\((\d+(?:,\d+)*)\)", text)
    if not m:
        raise ParseError(f"bad homotopy type {text!r}")
    comps = tuple(int(c) for c in m.group(1).split(","))
    if any(c < 1 for c in comps):
        raise ParseError(f"components must be positive in {text!r}")
    return HomotopyType(comps)
