"""Overlap ambiguities x_k x_j x_i and the PBW constraint polynomials they yield.

For each ambiguity the word is reduced twice: once starting with the rule for
``x_k x_j`` and once starting with the rule for ``x_j x_i``, both then
finished with leftmost rewriting.  The constraint attached to an ordered word
is its coefficient in (left-first) - (right-first).  The presentation has an
ordered-monomial basis exactly when every constraint vanishes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from .coeffring import ParamPoly, RatFunc, clear_denominators
from .freealg import NCPoly, word_key, word_str
from .relations import RelationSet, normal_form

__all__ = ["ConstraintSet", "Verdict", "ambiguities", "is_pbw", "pbw_constraints", "resolve"]


def ambiguities(R: RelationSet) -> list:
    """All strictly decreasing triples (k, j, i), in descending lex order."""
    n = len(R.generators)
    return sorted(((k, j, i) for i, j, k in itertools.combinations(range(n), 3)), reverse=True)


def resolve(R: RelationSet, amb) -> tuple:
    """(left-first, right-first) normal forms of the ambiguous word."""
    k, j, i = amb
    names = R.generators
    left = R.rules[(k, j)].rhs * NCPoly.gen(i, names)
    right = NCPoly.gen(k, names) * R.rules[(j, i)].rhs
    return normal_form(left, R), normal_form(right, R)


@dataclass
class ConstraintSet:
    """Constraint numerators keyed by ambiguity and then by ordered word.

    ``rows[amb][w]`` times ``denominators[amb][w]`` is the coefficient of w in
    (left-first) - (right-first).  Only nonzero numerators are stored.
    """

    generators: tuple
    degree_map: tuple
    rows: dict = field(default_factory=dict)
    denominators: dict = field(default_factory=dict)
    assumptions: list = field(default_factory=list)

    def is_zero(self) -> bool:
        return not any(self.rows.values())

    def flat(self) -> dict:
        """``{word: numerator}`` when there is a single ambiguity."""
        if len(self.rows) != 1:
            raise ValueError("flat() needs exactly one ambiguity")
        return next(iter(self.rows.values()))

    def items(self):
        """(ambiguity, word, numerator) in a deterministic order."""
        for amb in self.rows:
            row = self.rows[amb]
            for w in sorted(row, key=lambda u: word_key(u, self.degree_map)):
                yield amb, w, row[w]

    def count(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def max_param_degree(self) -> int:
        return max((p.total_degree() for _, _, p in self.items()), default=0)

    def lines(self) -> list:
        multi = len(self.rows) > 1
        out = []
        for amb, w, p in self.items():
            key = word_str(w, self.generators)
            if multi:
                key = f"{word_str(amb, self.generators)} {key}"
            out.append(f"{key} : {p}")
        return out


def pbw_constraints(R: RelationSet) -> ConstraintSet:
    cs = ConstraintSet(R.generators, R.degree_map, assumptions=R.nonzero_assumptions())
    for amb in ambiguities(R):
        left, right = resolve(R, amb)
        diff = left - right
        row, dens = {}, {}
        for w, c in diff.terms.items():
            common, (num,) = clear_denominators([c])
            if not num.is_zero():
                row[w] = num
                dens[w] = common
        cs.rows[amb] = row
        cs.denominators[amb] = dens
    return cs


@dataclass
class Verdict:
    status: str  # "pbw" | "not_pbw" | "undetermined"
    witness: tuple | None = None  # (ambiguity, word, polynomial)
    assumptions: list = field(default_factory=list)
    remaining: list = field(default_factory=list)  # nonconstant rows left when undetermined

    def __bool__(self):
        return self.status == "pbw"


def is_pbw(R: RelationSet, assignment: Mapping[str, object] | None = None) -> Verdict:
    """PBW verdict for R after specializing the given parameters.

    Assumed-nonzero expressions are those of R plus every denominator that
    appears during reduction.  A nonzero constant row refutes PBW-ness; a
    nonconstant row refutes it unless some nonzero assumption is in play, in
    which case the verdict is undetermined.
    """
    Rs = R.substitute(dict(assignment or {}))
    cs = pbw_constraints(Rs)
    assumptions = list(cs.assumptions)
    for amb, dens in cs.denominators.items():
        for d in dens.values():
            if not d.is_constant():
                assumptions.append(d)
    assumptions = _dedupe(assumptions)
    nonconstant = []
    for amb, w, p in cs.items():
        if p.is_constant():
            return Verdict("not_pbw", (amb, w, p), assumptions)
        nonconstant.append((amb, w, p))
    if not nonconstant:
        return Verdict("pbw", None, assumptions)
    if assumptions:
        return Verdict("undetermined", nonconstant[0], assumptions, nonconstant)
    return Verdict("not_pbw", nonconstant[0], assumptions, nonconstant)


def _dedupe(polys) -> list:
    seen, out = set(), []
    for p in polys:
        p = ParamPoly.coerce(p.num if isinstance(p, RatFunc) else p)
        if p.is_constant():
            continue
        if p.leading_term()[1] < 0:
            p = -p
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out
