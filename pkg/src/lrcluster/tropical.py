"""Transition maps between parametrizations attached to reduced words of w0.

A parameter tuple lives on a reduced word for w0 and carries one value per
letter, either nonnegative integers (tropical mode, min-plus arithmetic) or
positive rationals (geometric mode, subtraction-free arithmetic).  Braid
moves rewrite the word and transform the values:

* commutation move (a_ij = 0): the two parameters swap;
* braid move i,j,i -> j,i,j with a_ij = a_ji = -1:
    tropical   (t1,t2,t3) -> (t2+t3-min(t1,t3), min(t1,t3), t1+t2-min(t1,t3))
    geometric  (t1,t2,t3) -> (t2*t3/(t1+t3),    t1+t3,      t1*t2/(t1+t3))

The tropical rule is the min-plus reading of the geometric one, and
``verify_tropicalization`` checks that this persists under composition: it
composes the geometric moves symbolically (subtraction-free expression DAGs)
and compares their min-plus evaluation against the directly composed
tropical moves on random samples.

Only simply-laced types are supported: the rank-2 moves for multiply-laced
types require relations this package does not implement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, ResourceCapError, UnsupportedTypeError
from .rootsys import CartanMatrix, braid_neighbors, is_reduced

__all__ = [
    "ParamTuple",
    "TropicalizationReport",
    "apply_braid_move",
    "braid_move_path",
    "transition",
    "transition_values",
    "verify_tropicalization",
]

TROPICAL = "tropical"
GEOMETRIC = "geometric"


def _require_simply_laced(A: CartanMatrix):
    if not A.simply_laced:
        raise UnsupportedTypeError(
            "transition maps are implemented for simply-laced types only"
        )


@dataclass(frozen=True)
class ParamTuple:
    """Values attached to the letters of a reduced word for w0."""

    cartan: CartanMatrix
    word: tuple[int, ...]
    values: tuple
    mode: str

    def __post_init__(self):
        _require_simply_laced(self.cartan)
        object.__setattr__(self, "word", tuple(self.word))
        if len(self.values) != len(self.word):
            raise DomainError("values and word must have equal length")
        if self.mode == TROPICAL:
            vals = tuple(int(v) for v in self.values)
            if any(v < 0 for v in vals):
                raise DomainError("tropical values must be nonnegative integers")
        elif self.mode == GEOMETRIC:
            vals = tuple(Fraction(v) for v in self.values)
            if any(v <= 0 for v in vals):
                raise DomainError("geometric values must be positive rationals")
        else:
            raise DomainError(f"unknown mode {self.mode!r}")
        object.__setattr__(self, "values", vals)


def _move_kind(A: CartanMatrix, word, position: int) -> int:
    """Kind of the legal braid move at `position`, or raise."""
    if position < 0 or position >= len(word) - 1:
        raise DomainError(f"no braid move fits at position {position}")
    i, j = word[position], word[position + 1]
    if i != j and A.a(i, j) == 0:
        return 2
    if (
        position + 2 < len(word)
        and word[position + 2] == i
        and i != j
        and A.a(i, j) == -1
        and A.a(j, i) == -1
    ):
        return 3
    raise DomainError(f"no legal braid move at position {position}")


def _apply_move(A, word, values, mode, position, kind):
    actual = _move_kind(A, word, position)
    if actual != kind:
        raise DomainError(
            f"move at position {position} is a {actual}-move, not a {kind}-move"
        )
    p = position
    if kind == 2:
        word = word[:p] + (word[p + 1], word[p]) + word[p + 2:]
        values = values[:p] + (values[p + 1], values[p]) + values[p + 2:]
        return word, values
    i, j = word[p], word[p + 1]
    t1, t2, t3 = values[p], values[p + 1], values[p + 2]
    if mode == TROPICAL:
        m = min(t1, t3)
        new = (t2 + t3 - m, m, t1 + t2 - m)
    else:
        s = t1 + t3
        new = (t2 * t3 / s, s, t1 * t2 / s)
    word = word[:p] + (j, i, j) + word[p + 3:]
    values = values[:p] + new + values[p + 3:]
    return word, values


def apply_braid_move(t: ParamTuple, position: int, kind: int) -> ParamTuple:
    """One braid move applied to the word and its parameters."""
    word, values = _apply_move(t.cartan, t.word, t.values, t.mode, position, kind)
    return ParamTuple(t.cartan, word, values, t.mode)


# ---------------------------------------------------------------------------
# Paths in the braid-move graph
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bfs_tree(A: CartanMatrix, source: tuple[int, ...]):
    """BFS parents over the braid-move graph, neighbors visited sorted.

    Sorted neighbor order gives the deterministic shortest paths promised by
    the library (lexicographically smallest tie-break).
    """
    parents = {source: None}
    frontier = [source]
    while frontier:
        nxt = []
        for w in frontier:
            for pos, kind, nb in sorted(braid_neighbors(A, w), key=lambda x: x[2]):
                if nb not in parents:
                    parents[nb] = (w, pos, kind)
                    nxt.append(nb)
        frontier = nxt
    return parents


def braid_move_path(A: CartanMatrix, source, target) -> tuple[tuple[int, int], ...]:
    """Deterministic shortest sequence of (position, kind) moves source -> target."""
    source, target = tuple(source), tuple(target)
    _require_simply_laced(A)
    if not is_reduced(A, source) or not is_reduced(A, target):
        raise DomainError("transition endpoints must be reduced words")
    parents = _bfs_tree(A, source)
    if target not in parents:
        raise DomainError("words are not connected by braid moves "
                          "(not reduced words of the same element?)")
    moves = []
    w = target
    while parents[w] is not None:
        prev, pos, kind = parents[w]
        moves.append((pos, kind))
        w = prev
    return tuple(reversed(moves))


def transition_values(A: CartanMatrix, word_from, values, word_to, mode):
    """Transport values along the braid-move path between two words."""
    word = tuple(word_from)
    values = tuple(values)
    for pos, kind in braid_move_path(A, word, tuple(word_to)):
        word, values = _apply_move(A, word, values, mode, pos, kind)
    assert word == tuple(word_to)
    return values


def transition(t: ParamTuple, target) -> ParamTuple:
    """Composite transition map from t.word to the target reduced word."""
    values = transition_values(t.cartan, t.word, t.values, target, t.mode)
    return ParamTuple(t.cartan, tuple(target), values, t.mode)


# ---------------------------------------------------------------------------
# Symbolic subtraction-free expressions and tropicalization
# ---------------------------------------------------------------------------

class _Expr:
    __slots__ = ("op", "args")

    def __init__(self, op, args):
        self.op = op
        self.args = args


def _expr_nodes(roots) -> int:
    seen = set()
    stack = list(roots)
    while stack:
        e = stack.pop()
        if id(e) in seen:
            continue
        seen.add(id(e))
        if e.op != "var":
            stack.extend(e.args)
    return len(seen)


def _eval_expr(root, values, plus, times, divide):
    memo = {}
    stack = [root]
    while stack:
        e = stack[-1]
        if id(e) in memo:
            stack.pop()
            continue
        if e.op == "var":
            memo[id(e)] = values[e.args]
            stack.pop()
            continue
        pending = [a for a in e.args if id(a) not in memo]
        if pending:
            stack.extend(pending)
            continue
        a, b = (memo[id(x)] for x in e.args)
        if e.op == "+":
            memo[id(e)] = plus(a, b)
        elif e.op == "*":
            memo[id(e)] = times(a, b)
        else:
            memo[id(e)] = divide(a, b)
        stack.pop()
    return memo[id(root)]


def eval_tropical(expr, values) -> int:
    """Min-plus value of a subtraction-free expression: + -> min, * -> +."""
    return _eval_expr(expr, values, min, lambda a, b: a + b, lambda a, b: a - b)


def eval_geometric(expr, values) -> Fraction:
    return _eval_expr(
        expr, values,
        lambda a, b: a + b, lambda a, b: a * b, lambda a, b: a / b,
    )


def symbolic_transition(A: CartanMatrix, word_from, word_to, max_nodes=200_000):
    """Geometric transition composed symbolically; one expression per slot."""
    word = tuple(word_from)
    exprs = tuple(_Expr("var", k) for k in range(len(word)))
    for pos, kind in braid_move_path(A, word, tuple(word_to)):
        if kind == 2:
            exprs = (exprs[:pos] + (exprs[pos + 1], exprs[pos])
                     + exprs[pos + 2:])
            word, _ = _apply_move(A, word, (0,) * len(word), TROPICAL, pos, 2)
            continue
        e1, e2, e3 = exprs[pos], exprs[pos + 1], exprs[pos + 2]
        s = _Expr("+", (e1, e3))
        new = (
            _Expr("/", (_Expr("*", (e2, e3)), s)),
            s,
            _Expr("/", (_Expr("*", (e1, e2)), s)),
        )
        exprs = exprs[:pos] + new + exprs[pos + 3:]
        word, _ = _apply_move(A, word, (0,) * len(word), TROPICAL, pos, 3)
        if _expr_nodes(exprs) > max_nodes:
            raise ResourceCapError(
                f"symbolic transition exceeded {max_nodes} nodes", partial=None
            )
    return exprs


@dataclass
class TropicalizationReport:
    word_from: tuple[int, ...]
    word_to: tuple[int, ...]
    samples: int
    components: int
    mismatches: list
    complete: bool = True

    @property
    def passed(self) -> bool:
        return self.complete and not self.mismatches


def verify_tropicalization(A: CartanMatrix, word_from, word_to, samples: int,
                           rng=None, value_bound: int = 20,
                           max_nodes: int = 200_000) -> TropicalizationReport:
    """Check min-plus moves == tropicalized symbolic geometric transition.

    For `samples` random nonnegative integer tuples, the tropical transition
    computed by min-plus braid moves is compared componentwise with the
    min-plus evaluation of the symbolically composed geometric expressions.
    Raises ResourceCapError (carrying the partial report) if the symbolic
    side outgrows max_nodes.
    """
    import random

    word_from, word_to = tuple(word_from), tuple(word_to)
    _require_simply_laced(A)
    rng = rng or random.Random(0)
    m = len(word_from)
    report = TropicalizationReport(word_from, word_to, samples, m, [])
    try:
        exprs = symbolic_transition(A, word_from, word_to, max_nodes=max_nodes)
    except ResourceCapError as exc:
        report.complete = False
        exc.partial = report
        raise
    for s in range(samples):
        values = tuple(rng.randint(0, value_bound) for _ in range(m))
        direct = transition_values(A, word_from, values, word_to, TROPICAL)
        for k in range(m):
            sym = eval_tropical(exprs[k], values)
            if sym != direct[k]:
                report.mismatches.append((s, k, direct[k], sym))
    return report
