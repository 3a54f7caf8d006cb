"""Weighted counting automata over the truncated-series ring.

A weighted automaton here is a finite directed multigraph with series
weights of valuation >= 1 on its edges.  The generating function of state
q counts weighted walks from q into the final set,

    L_q = sum_edges w(q -> q') L_{q'} + [q in finals],

a linear system over the series ring solved exactly by sparse Gaussian
elimination with valuation pivoting.  Chains built from CF levels
(`build_chain`) reproduce the continued-fraction evaluators state by state:
a linear chain truncated at depth s is exact through z^(2s) when only the
bottom state is final, but only through z^s when every state is final (the
all-up walk leaves the truncated chain after s steps).
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import (
    DivisionByZeroSeries,
    InsufficientValuation,
    Series,
    one,
    zero,
)

__all__ = [
    "ChainSpec",
    "InvalidAutomaton",
    "SingularSystem",
    "WeightedAutomaton",
    "build_chain",
    "motzkin_gf",
    "solve",
    "solve_linear_system",
    "validate",
]


class InvalidAutomaton(ValueError):
    """Automaton violating the structural invariants."""


class SingularSystem(ArithmeticError):
    """No pivot of finite valuation with invertible leading behavior."""


@dataclass(frozen=True)
class WeightedAutomaton:
    """States 0..n_states-1; transitions are (src, dst, weight) triples."""

    n_states: int
    initial: int
    finals: frozenset
    transitions: tuple

    def __post_init__(self):
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "transitions", tuple(self.transitions))


def validate(auto: WeightedAutomaton) -> list[str]:
    """Structural violations as human-readable strings (empty when valid)."""
    out = []
    n = auto.n_states
    if n <= 0:
        out.append("automaton needs at least one state")
        return out
    if not 0 <= auto.initial < n:
        out.append("initial state %r out of range" % (auto.initial,))
    for q in sorted(auto.finals):
        if not 0 <= q < n:
            out.append("final state %r out of range" % (q,))
    for idx, (src, dst, w) in enumerate(auto.transitions):
        if not (0 <= src < n and 0 <= dst < n):
            out.append("transition %d endpoints (%r, %r) out of range" % (idx, src, dst))
            continue
        if not isinstance(w, Series):
            out.append("transition %d (%d->%d) weight is not a Series" % (idx, src, dst))
        elif w.valuation() == 0:
            out.append(
                "transition %d (%d->%d) weight has constant term %s; counting "
                "weights need valuation >= 1" % (idx, src, dst, w.coefficient(0))
            )
    return out


def solve_linear_system(rows, rhs, order: int):
    """Solve M x = rhs over the series ring, M given as sparse rows
    (dicts column -> Series).  Pivots by minimal valuation, lowest row
    index on ties; SingularSystem when a column has no finite-valuation
    pivot or elimination loses the invertibility needed to back-substitute.
    """
    n = len(rows)
    rows = [dict(r) for r in rows]
    rhs = list(rhs)
    for col in range(n):
        best, best_val = None, None
        for i in range(col, n):
            entry = rows[i].get(col)
            if entry is None:
                continue
            v = entry.valuation()
            if best_val is None or v < best_val:
                best, best_val = i, v
                if v == 0:
                    break
        if best is None or best_val == float("inf"):
            raise SingularSystem("no usable pivot in column %d" % col)
        if best != col:
            rows[col], rows[best] = rows[best], rows[col]
            rhs[col], rhs[best] = rhs[best], rhs[col]
        pivot = rows[col][col]
        pivot_row = rows[col]
        for i in range(col + 1, n):
            entry = rows[i].get(col)
            if entry is None or entry.is_zero():
                rows[i].pop(col, None)
                continue
            factor = entry / pivot
            for j, v in pivot_row.items():
                if j <= col or v.is_zero():
                    continue
                cur = rows[i].get(j)
                delta = factor * v
                nxt = (cur - delta) if cur is not None else -delta
                if nxt.is_zero():
                    rows[i].pop(j, None)
                else:
                    rows[i][j] = nxt
            rows[i].pop(col, None)
            if not rhs[col].is_zero():
                rhs[i] = rhs[i] - factor * rhs[col]
    xs = [None] * n
    for i in range(n - 1, -1, -1):
        acc = rhs[i]
        for j, v in rows[i].items():
            if j > i and not v.is_zero():
                acc = acc - v * xs[j]
        try:
            xs[i] = acc / rows[i][i]
        except (InsufficientValuation, DivisionByZeroSeries) as exc:
            raise SingularSystem(
                "back-substitution failed at row %d: %s" % (i, exc)
            ) from exc
    return xs


def solve(auto: WeightedAutomaton, order: int) -> Series:
    """Generating function of the initial state, exact through `order`.

    Every weight must carry at least `order` coefficients: a shorter weight
    is a truncation whose tail is unknown, not an exact polynomial.
    """
    problems = validate(auto)
    if problems:
        raise InvalidAutomaton("; ".join(problems))
    for src, dst, w in auto.transitions:
        if w.order < order:
            raise InvalidAutomaton(
                "weight on %d->%d has order %d < requested %d"
                % (src, dst, w.order, order)
            )
    n = auto.n_states
    rows = [{i: one(order)} for i in range(n)]
    for src, dst, w in auto.transitions:
        if w.is_zero():
            continue
        w = w.truncate(order)
        cur = rows[src].get(dst)
        rows[src][dst] = (cur - w) if cur is not None else -w
    rhs = [one(order) if q in auto.finals else zero(order) for q in range(n)]
    xs = solve_linear_system(rows, rhs, order)
    return xs[auto.initial]


@dataclass(frozen=True)
class ChainSpec:
    """Chain description: `levels[i]` supplies the weights at level i (and,
    for bilinear chains, the primed weights of level -i)."""

    kind: str  # "linear" | "bilinear"
    depth: int
    levels: tuple
    all_final: bool = False

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))


def build_chain(spec: ChainSpec) -> WeightedAutomaton:
    """Truncated chain automaton; deleting the levels above `depth` keeps
    the boundary loop and back-edge."""
    s = spec.depth
    if s < 0:
        raise InvalidAutomaton("depth must be nonnegative")
    if len(spec.levels) <= s:
        raise InvalidAutomaton(
            "need %d levels for depth %d, got %d" % (s + 1, s, len(spec.levels))
        )
    levels = spec.levels
    if spec.kind == "linear":
        transitions = []
        for i in range(s + 1):
            if not levels[i].h.is_zero():
                transitions.append((i, i, levels[i].h))
        for i in range(s):
            transitions.append((i, i + 1, levels[i].f))
            transitions.append((i + 1, i, levels[i].g))
        finals = range(s + 1) if spec.all_final else (0,)
        return WeightedAutomaton(s + 1, 0, frozenset(finals), tuple(transitions))
    if spec.kind == "bilinear":
        for i in range(s + 1):
            lvl = levels[i]
            if (i < s and (lvl.fp is None or lvl.gp is None)) or (
                0 < i and lvl.hp is None
            ):
                raise InvalidAutomaton("bilinear chain needs primed weights")
        # state index = level + s, so states 0..2s cover levels -s..s
        transitions = []
        for i in range(s + 1):
            if not levels[i].h.is_zero():
                transitions.append((s + i, s + i, levels[i].h))
            if i > 0 and not levels[i].hp.is_zero():
                transitions.append((s - i, s - i, levels[i].hp))
        for i in range(s):
            transitions.append((s + i, s + i + 1, levels[i].f))
            transitions.append((s + i + 1, s + i, levels[i].g))
            transitions.append((s - i, s - i - 1, levels[i].gp))
            transitions.append((s - i - 1, s - i, levels[i].fp))
        finals = range(2 * s + 1) if spec.all_final else (s,)
        return WeightedAutomaton(2 * s + 1, s, frozenset(finals), tuple(transitions))
    raise InvalidAutomaton("unknown chain kind %r" % (spec.kind,))


def motzkin_gf(order: int) -> Series:
    """Closed Motzkin GF (1 - z - sqrt(1 - 2z - 3z^2)) / (2 z^2), the
    reference for the chain solver on unit-weight chains."""
    from .series import poly

    w = order + 2
    root = poly([1, -2, -3], w).sqrt()
    return ((poly([1, -1], w) - root) / poly([0, 0, 2], w)).truncate(order)
