"""Defining relations as rewrite rules, and reduction to ordered normal form.

Each misordered pair ``x_j x_i`` (j > i) has exactly one rule
``x_j x_i -> lambda_ji x_i x_j + p_ji``.  Brackets are entered as commutators,
so ``[x_j, x_i] = p`` becomes the rule ``x_j x_i -> x_i x_j + p``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .coeffring import RatFunc, as_coeff
from .freealg import NCPoly, _acc, check_degree_map, is_ordered, word_key, word_str

__all__ = [
    "Relation",
    "RelationSet",
    "ReductionError",
    "ReductionTrace",
    "bracket",
    "normal_form",
    "validate",
]

DEFAULT_CAP = 10_000


class ReductionError(RuntimeError):
    """Rewriting failed to terminate within the configured step cap."""


@dataclass(frozen=True)
class Relation:
    lhs: tuple  # (j, i) with j > i
    rhs: NCPoly


@dataclass
class ReductionTrace:
    """Rewrite steps performed by one normal_form call.

    Words whose normal form was already cached are not expanded again and so
    do not appear here.
    """

    steps: int = 0
    applications: list = field(default_factory=list)  # (word, position)
    retain: bool = False


@dataclass(frozen=True, eq=False)
class RelationSet:
    generators: tuple
    degree_map: tuple
    rules: Mapping
    params: tuple = ()
    mode: str = "strict"
    cap: int = DEFAULT_CAP
    assumptions: tuple = ()  # ParamPoly values assumed nonzero (exclusions)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(
            self, "degree_map", check_degree_map(self.degree_map, len(self.generators))
        )
        if self.mode not in ("strict", "permissive"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        clash = set(self.generators) & set(self.params)
        if clash:
            raise ValueError(f"names used as both generator and parameter: {sorted(clash)}")

    # -- construction -----------------------------------------------------
    @classmethod
    def from_brackets(
        cls,
        generators: Sequence[str],
        brackets: Mapping,
        degree_map: Sequence[int] | None = None,
        **kw,
    ) -> "RelationSet":
        """Build from commutators ``{(j, i): [x_j, x_i]}``; absent pairs commute."""
        gens = tuple(generators)
        n = len(gens)
        rules = {}
        for j in range(n):
            for i in range(j):
                p = brackets.get((j, i))
                if p is None:
                    p = NCPoly({}, gens)
                rhs = NCPoly.word((i, j), gens) + p
                rules[(j, i)] = Relation((j, i), rhs)
        extra = set(brackets) - set(rules)
        if extra:
            raise ValueError(f"brackets must be written [higher, lower]: {sorted(extra)}")
        return cls(gens, tuple(degree_map or (1,) * n), rules, **kw)

    def index(self, g) -> int:
        if isinstance(g, int):
            return g
        return self.generators.index(g)

    def gen(self, g) -> NCPoly:
        return NCPoly.gen(self.index(g), self.generators)

    def word(self, w) -> NCPoly:
        return NCPoly.word(tuple(w), self.generators)

    def bracket_poly(self, j: int, i: int) -> NCPoly:
        """The stored commutator p with [x_j, x_i] = p (j > i)."""
        return self.rules[(j, i)].rhs - NCPoly.word((i, j), self.generators)

    def replace(self, **kw) -> "RelationSet":
        data = dict(
            generators=self.generators,
            degree_map=self.degree_map,
            rules=self.rules,
            params=self.params,
            mode=self.mode,
            cap=self.cap,
            assumptions=self.assumptions,
        )
        data.update(kw)
        return RelationSet(**data)

    def substitute(self, assignment: Mapping[str, object]) -> "RelationSet":
        """Specialize structure constants; assigned names leave ``params``."""
        if not assignment:
            return self
        for p in self.assumptions:
            v = p.substitute(assignment)
            if v.is_zero():
                raise ValueError(f"assignment violates assumption {p} != 0")
        kept = []
        for p in self.assumptions:
            v = p.substitute(assignment)
            if not v.is_constant():
                kept.append(v)
        rules = {
            k: Relation(r.lhs, r.rhs.substitute(assignment)) for k, r in self.rules.items()
        }
        params = tuple(p for p in self.params if p not in assignment)
        return self.replace(rules=rules, params=params, assumptions=tuple(kept))

    def nonzero_assumptions(self) -> list:
        """Explicit assumptions plus every denominator factor in the rules."""
        seen: dict = {}
        for p in self.assumptions:
            seen.setdefault(p, None)
        for r in self.rules.values():
            for c in r.rhs.terms.values():
                if isinstance(c, RatFunc):
                    for a, _ in c.den_factors:
                        seen.setdefault(a, None)
        return list(seen)

    def is_numeric(self) -> bool:
        return all(not isinstance(c, RatFunc) for r in self.rules.values() for c in r.rhs.terms.values())

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, RelationSet):
            return NotImplemented
        return (
            self.generators == other.generators
            and self.degree_map == other.degree_map
            and self.mode == other.mode
            and self.rules.keys() == other.rules.keys()
            and all(self.rules[k].rhs == other.rules[k].rhs for k in self.rules)
        )

    __hash__ = None

    def __str__(self):
        lines = []
        for (j, i) in sorted(self.rules, key=lambda ji: (ji[1], ji[0])):
            lhs = word_str((j, i), self.generators)
            lines.append(f"{lhs} -> {self.rules[(j, i)].rhs.to_str(self.degree_map)}")
        return "\n".join(lines)

    # -- reduction machinery ----------------------------------------------
    def _table(self):
        t = self._cache.get("table")
        if t is None:
            t = {
                k: tuple(r.rhs.terms.items()) for k, r in self.rules.items()
            }
            self._cache["table"] = t
        return t

    def _reducer(self, strategy) -> "_Reducer":
        key = ("reducer", _strategy_key(strategy))
        red = self._cache.get(key)
        if red is None:
            if self.mode == "strict":
                diags = self._cache.get("diagnostics")
                if diags is None:
                    diags = self._cache["diagnostics"] = validate(self)
                if diags:
                    raise ValueError("relation set fails validation: " + "; ".join(diags))
                cap = 0
            else:
                cap = self.cap
            red = _Reducer(self._table(), _strategy_key(strategy), cap)
            self._cache[key] = red
        return red


def _strategy_key(strategy):
    if strategy in ("leftmost", "rightmost"):
        return strategy
    if isinstance(strategy, str) and strategy.startswith("random"):
        _, _, seed = strategy.partition(":")
        return ("random", int(seed or 0))
    if isinstance(strategy, tuple) and strategy and strategy[0] == "random":
        return ("random", int(strategy[1]))
    raise ValueError(f"unknown strategy {strategy!r}")


def _mul(a, b):
    v = a * b
    return as_coeff(v) if isinstance(v, RatFunc) else v


class _Reducer:
    """Memoized term-wise rewriting under one fixed position-choice rule.

    The position chosen for a word depends only on the word (and seed), so the
    normal form of a word is a function of the word and can be cached.
    """

    def __init__(self, table, strategy, cap):
        self.table = table
        self.cap = cap
        self.cache: dict = {}
        if strategy == "leftmost":
            self.choose = _leftmost
        elif strategy == "rightmost":
            self.choose = _rightmost
        else:
            seed = strategy[1]

            def choose(w, seed=seed):
                pos = [k for k in range(len(w) - 1) if w[k] > w[k + 1]]
                if not pos:
                    return None
                return pos[random.Random(hash((seed, w))).randrange(len(pos))]

            self.choose = choose

    def word(self, w, trace: ReductionTrace | None = None) -> dict:
        cache = self.cache
        hit = cache.get(w)
        if hit is not None:
            return hit
        stack = [w]
        on_stack = {w}
        pending: dict = {}
        steps = 0
        while stack:
            top = stack[-1]
            kids = pending.get(top)
            if kids is None:
                pos = self.choose(top)
                if pos is None:
                    cache[top] = {top: 1}
                    stack.pop()
                    on_stack.discard(top)
                    continue
                steps += 1
                if self.cap and steps > self.cap:
                    raise ReductionError(f"reduction did not stabilize within {self.cap} steps")
                if trace is not None:
                    trace.steps += 1
                    if trace.retain:
                        trace.applications.append((top, pos))
                pre, post = top[:pos], top[pos + 2:]
                kids = [(pre + u + post, c) for u, c in self.table[(top[pos], top[pos + 1])]]
                pending[top] = kids
            nxt = None
            for k, _ in kids:
                if k not in cache:
                    nxt = k
                    break
            if nxt is not None:
                if nxt in on_stack:
                    raise ReductionError(
                        f"reduction did not stabilize: rewriting cycles back to word {nxt}"
                    )
                stack.append(nxt)
                on_stack.add(nxt)
                continue
            res: dict = {}
            for k, c in kids:
                for u, v in cache[k].items():
                    _acc(res, u, _mul(c, v))
            cache[top] = res
            del pending[top]
            stack.pop()
            on_stack.discard(top)
        return cache[w]


def _leftmost(w):
    for k in range(len(w) - 1):
        if w[k] > w[k + 1]:
            return k
    return None


def _rightmost(w):
    for k in range(len(w) - 2, -1, -1):
        if w[k] > w[k + 1]:
            return k
    return None


def validate(R: RelationSet) -> list:
    """Diagnostics for a relation set; empty when it is a valid presentation."""
    diags = []
    n = len(R.generators)
    names = R.generators
    for j in range(n):
        for i in range(j):
            if (j, i) not in R.rules:
                diags.append(f"missing rule for {word_str((j, i), names)}")
    for key, rel in R.rules.items():
        j, i = rel.lhs
        lhs_s = word_str(rel.lhs, names)
        if key != rel.lhs or not j > i:
            diags.append(f"rule {lhs_s}: left-hand side must be a misordered pair")
            continue
        kl = word_key(rel.lhs, R.degree_map)
        for w in rel.rhs.terms:
            ws = word_str(w, names)
            if w == rel.lhs:
                diags.append(f"rule {lhs_s}: lhs occurs in rhs")
                continue
            if not is_ordered(w):
                diags.append(f"rule {lhs_s}: rhs word {ws} is not ordered")
                continue
            if R.mode == "strict" and word_key(w, R.degree_map) >= kl:
                diags.append(f"rule {lhs_s}: {ws} not ≺ {lhs_s}")
    return diags


def normal_form(f: NCPoly, R: RelationSet, strategy="leftmost", trace: ReductionTrace | None = None) -> NCPoly:
    """Reduce f to a combination of ordered words.

    ``strategy`` selects the misordered pair rewritten first in each word:
    ``"leftmost"``, ``"rightmost"`` or ``"random:<seed>"``.
    """
    red = R._reducer(strategy)
    out: dict = {}
    for w, c in f.terms.items():
        for u, v in red.word(w, trace).items():
            _acc(out, u, _mul(c, v))
    return NCPoly._raw(out, R.generators)


def bracket(R: RelationSet, j, i) -> NCPoly:
    """normal_form(x_j x_i - x_i x_j)."""
    j, i = R.index(j), R.index(i)
    if j == i:
        return NCPoly({}, R.generators)
    f = NCPoly({(j, i): 1, (i, j): -1}, R.generators)
    return normal_form(f, R)

