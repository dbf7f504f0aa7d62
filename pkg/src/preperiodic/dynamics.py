"""Rational preperiodic points of unicritical maps ``f(x) = x**d + c``.

Every rational preperiodic point of ``f`` has absolute value at most
``max(2, 2|c|)`` and reduced denominator exactly ``b`` where ``den(c) = b**d``
(when ``den(c)`` is not a perfect d-th power there are none).  Together these
confine the search to a finite candidate set, on which ``f`` induces a
functional graph whose eventually-cyclic part is the portrait.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactnum import (
    format_rational,
    iroot,
    parse_rational,
    small_prime_factor_with_residue,
    valuation,
)


@dataclass(frozen=True)
class UnicriticalMap:
    d: int
    c: Fraction

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("degree must be at least 2")
        object.__setattr__(self, "c", Fraction(self.c))

    def __call__(self, x) -> Fraction:
        return x ** self.d + self.c


@dataclass(frozen=True)
class DenominatorDecomposition:
    passes: bool
    b: Optional[int] = None
    # a prime q with v_q(den c) not divisible by d, and that residue
    witness_prime: Optional[int] = None
    witness_exponent: Optional[int] = None


def denominator_filter(d: int, c) -> DenominatorDecomposition:
    """Test whether the reduced denominator of ``c`` is a perfect d-th power.

    A failing filter proves ``x**d + c`` has no rational periodic, hence no
    rational preperiodic, points.
    """
    c = Fraction(c)
    if c == 0:
        raise ValueError("denominator filter is defined for c != 0")
    if d < 2:
        raise ValueError("degree must be at least 2")
    b, exact = iroot(c.denominator, d)
    if exact:
        return DenominatorDecomposition(True, b)
    w = small_prime_factor_with_residue(c.denominator, d)
    if w is None:
        return DenominatorDecomposition(False)
    return DenominatorDecomposition(False, None, w[0], w[1])


def escape_bound(c) -> Fraction:
    """B = max(2, 2|c|); any x with |x| > B has |f(x)| > |x| for every d >= 2."""
    return max(Fraction(2), 2 * abs(Fraction(c)))


def _root_denominator(d: int, c: Fraction) -> int:
    if c.denominator == 1:
        return 1
    dec = denominator_filter(d, c)
    if not dec.passes:
        raise ValueError(f"denominator of {c} is not a perfect {d}-th power")
    return dec.b


def candidate_set(d: int, c) -> list[Fraction]:
    """All m/b in lowest terms with |m/b| <= escape_bound(c), ascending."""
    c = Fraction(c)
    b = _root_denominator(d, c)
    B = escape_bound(c)
    mmax = int(B * b)  # floor, B*b >= 0
    return [Fraction(m, b) for m in range(-mmax, mmax + 1)
            if b == 1 or Fraction(m, b).denominator == b]


@dataclass
class Portrait:
    d: int
    c: Fraction
    points: list[Fraction] = field(default_factory=list)
    edges: dict = field(default_factory=dict)
    tail: dict = field(default_factory=dict)
    cycle: dict = field(default_factory=dict)
    filter: Optional[DenominatorDecomposition] = None

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, x) -> bool:
        return Fraction(x) in self.edges

    def periodic_points(self) -> list[Fraction]:
        return [x for x in self.points if self.tail[x] == 0]

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "c": format_rational(self.c),
            "points": [{"x": format_rational(x), "tail": self.tail[x], "cycle": self.cycle[x]}
                       for x in self.points],
            "edges": [[format_rational(x), format_rational(self.edges[x])] for x in self.points],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Portrait":
        pts = [parse_rational(p["x"]) for p in data["points"]]
        return cls(
            d=int(data["d"]),
            c=parse_rational(data["c"]),
            points=pts,
            edges={parse_rational(a): parse_rational(b) for a, b in data["edges"]},
            tail={parse_rational(p["x"]): int(p["tail"]) for p in data["points"]},
            cycle={parse_rational(p["x"]): int(p["cycle"]) for p in data["points"]},
        )

    @classmethod
    def from_json(cls, text: str) -> "Portrait":
        return cls.from_dict(json.loads(text))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Portrait):
            return NotImplemented
        return (self.d, self.c, self.points, self.edges, self.tail, self.cycle) == (
            other.d, other.c, other.points, other.edges, other.tail, other.cycle)


def find_portrait(d: int, c) -> Portrait:
    """Exact set of rational preperiodic points of ``x**d + c`` with their graph."""
    c = Fraction(c)
    f = UnicriticalMap(d, c)
    filt = None
    if c != 0:
        filt = denominator_filter(d, c)
        if not filt.passes:
            return Portrait(d, c, filter=filt)
    cands = candidate_set(d, c)
    index = {x: i for i, x in enumerate(cands)}
    succ = [index.get(f(x), -1) for x in cands]

    # state: 0 unseen, 1 on current path, 2 done; preper[i] valid when done
    n = len(cands)
    state = [0] * n
    preper = [False] * n
    tail = [0] * n
    cyc = [0] * n
    for start in range(n):
        if state[start]:
            continue
        path = []
        i = start
        while i != -1 and state[i] == 0:
            state[i] = 1
            path.append(i)
            i = succ[i]
        if i != -1 and state[i] == 1:
            # closed a new cycle at i
            k = path.index(i)
            cycle_nodes = path[k:]
            for j in cycle_nodes:
                preper[j], tail[j], cyc[j], state[j] = True, 0, len(cycle_nodes), 2
            path = path[:k]
            nxt_ok, nxt_tail, nxt_cyc = True, 0, len(cycle_nodes)
        elif i == -1:
            nxt_ok, nxt_tail, nxt_cyc = False, 0, 0
        else:
            nxt_ok, nxt_tail, nxt_cyc = preper[i], tail[i], cyc[i]
        for j in reversed(path):
            nxt_tail += 1
            preper[j], tail[j], cyc[j], state[j] = nxt_ok, nxt_tail, nxt_cyc, 2

    pts = [cands[i] for i in range(n) if preper[i]]
    return Portrait(
        d, c, pts,
        edges={cands[i]: cands[succ[i]] for i in range(n) if preper[i]},
        tail={cands[i]: tail[i] for i in range(n) if preper[i]},
        cycle={cands[i]: cyc[i] for i in range(n) if preper[i]},
        filter=filt,
    )


@dataclass(frozen=True)
class OrbitTrace:
    iterates: tuple
    status: str                      # "ENTERED_CYCLE" or "ESCAPED"
    cycle_index: Optional[int] = None
    reason: Optional[str] = None     # "magnitude" or "denominator"
    witness_prime: Optional[int] = None


def is_preperiodic(d: int, c, x) -> tuple[bool, OrbitTrace]:
    """Iterate ``x`` under ``x**d + c`` until it repeats or provably escapes."""
    c, x = Fraction(c), Fraction(x)
    f = UnicriticalMap(d, c)
    B = escape_bound(c)
    b = None
    q = None
    if c.denominator == 1:
        b = 1
    else:
        filt = denominator_filter(d, c)
        if filt.passes:
            b = filt.b
        else:
            q = filt.witness_prime

    trace = []
    seen = {}
    while True:
        i = len(trace)
        if x in seen:
            trace.append(x)
            return True, OrbitTrace(tuple(trace), "ENTERED_CYCLE", cycle_index=seen[x])
        seen[x] = i
        trace.append(x)
        if abs(x) > B:
            return False, OrbitTrace(tuple(trace), "ESCAPED", reason="magnitude")
        if b is not None and x.denominator != b:
            return False, OrbitTrace(tuple(trace), "ESCAPED", reason="denominator")
        if b is None:
            # failing filter: stop once v_q is negative and strictly decreasing
            if q is None:
                return False, OrbitTrace(tuple(trace), "ESCAPED", reason="denominator")
            if i >= 1 and valuation(trace[i], q) < valuation(trace[i - 1], q) < 0:
                return False, OrbitTrace(tuple(trace), "ESCAPED", reason="denominator",
                                         witness_prime=q)
        x = f(x)
