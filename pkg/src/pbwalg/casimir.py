"""Casimir elements: the linear system [K, x] = 0 and its exact nullspace.

A candidate K is a combination of ordered words of polynomial degree 1..n
(constants are central and left out).  Reducing each [w, x] gives linear forms
in the unknown coefficients; the nullspace of that system is the space of
Casimirs of degree <= n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .coeffring import ParamPoly, RatFunc, as_coeff, clear_denominators
from .freealg import NCPoly, ordered_words, word_degree, word_key
from .relations import RelationSet, normal_form

__all__ = [
    "CasimirBasis",
    "CasimirCheck",
    "LinearSystem",
    "casimir_system",
    "candidate_words",
    "solve_nullspace",
    "verify_casimir",
]


def candidate_words(R: RelationSet, n: int, graded: bool = False) -> list:
    """Ordered words of degree 1..n, ascending in the monomial order.

    ``graded=True`` bounds the weighted degree instead of the word length.
    """
    if n < 1:
        raise ValueError("Casimir degree must be positive")
    gens = len(R.generators)
    if graded:
        words = [w for w in ordered_words(gens, n, 1) if word_degree(w, R.degree_map) <= n]
    else:
        words = list(ordered_words(gens, n, 1))
    return sorted(words, key=lambda w: word_key(w, R.degree_map))


@dataclass
class LinearSystem:
    columns: list  # candidate words
    rows: list  # (generator index, word)
    entries: list  # list of dicts {column index: coefficient}, one per row
    generators: tuple = ()

    def dense(self) -> list:
        return [[r.get(j, 0) for j in range(len(self.columns))] for r in self.entries]


def casimir_system(R: RelationSet, n: int, graded: bool = False) -> LinearSystem:
    cols = candidate_words(R, n, graded)
    table: dict = {}
    names = R.generators
    for g in range(len(names)):
        x = NCPoly.gen(g, names)
        for ci, w in enumerate(cols):
            wp = NCPoly.word(w, names)
            f = normal_form(wp * x - x * wp, R)
            for u, c in f.terms.items():
                table.setdefault((g, u), {})[ci] = c
    keys = sorted(table, key=lambda k: (k[0], word_key(k[1], R.degree_map)))
    return LinearSystem(cols, keys, [table[k] for k in keys], names)


# -- elimination ------------------------------------------------------------

def _complexity(x) -> int:
    if isinstance(x, ParamPoly):
        return len(x.terms) if not x.is_constant() else 0
    return 0


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, ParamPoly) else x == 0


def _exact_div(a, b):
    if isinstance(a, ParamPoly):
        b = ParamPoly.coerce(b)
        if b.is_constant():
            return a / b.constant_value()
        q = a.exact_div(b)
        if q is None:
            raise ArithmeticError("fraction-free step produced a non-exact division")
        return q
    q = Fraction(a) / Fraction(b)
    return q.numerator if q.denominator == 1 else q


def _integral_rows(S: LinearSystem):
    """Scale each row to denominator-free entries; polynomial or integer."""
    ncols = len(S.columns)
    symbolic = any(isinstance(c, RatFunc) for r in S.entries for c in r.values())
    rows = []
    for r in S.entries:
        idx = sorted(j for j, v in r.items() if not _is_zero(v))
        if not idx:
            continue
        common, nums = clear_denominators([r[j] for j in idx])
        row = [ParamPoly.const(0) if symbolic else 0] * ncols
        for j, p in zip(idx, nums):
            row[j] = p if symbolic else p.constant_value()
        if not symbolic:
            g = 0
            for v in row:
                g = math.gcd(g, int(v))
            if g > 1:
                row = [int(v) // g for v in row]
        rows.append(row)
    return rows, symbolic


def _bareiss(rows, ncols):
    """Fraction-free elimination with full pivoting on the simplest entry.

    Returns (echelon rows, column order, rank, pivots).  Column k of the
    echelon form corresponds to original column ``order[k]``.
    """
    M = [list(r) for r in rows]
    m = len(M)
    order = list(range(ncols))
    prev = 1
    pivots = []
    k = 0
    while k < m and k < ncols:
        best = None
        for i in range(k, m):
            Mi = M[i]
            for j in range(k, ncols):
                v = Mi[j]
                if _is_zero(v):
                    continue
                key = (_complexity(v), order[j], i)
                if best is None or key < best[0]:
                    best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        M[k], M[pi] = M[pi], M[k]
        if pj != k:
            for row in M:
                row[k], row[pj] = row[pj], row[k]
            order[k], order[pj] = order[pj], order[k]
        p = M[k][k]
        pivots.append(p)
        Mk = M[k]
        for i in range(k + 1, m):
            Mi = M[i]
            a = Mi[k]
            if _is_zero(a):
                if prev != 1:
                    for j in range(k + 1, ncols):
                        if not _is_zero(Mi[j]):
                            Mi[j] = _exact_div(p * Mi[j], prev)
                else:
                    for j in range(k + 1, ncols):
                        if not _is_zero(Mi[j]):
                            Mi[j] = p * Mi[j]
            else:
                for j in range(k + 1, ncols):
                    v = p * Mi[j] - a * Mk[j]
                    Mi[j] = v if prev == 1 else _exact_div(v, prev)
            Mi[k] = 0 * a
        prev = p
        k += 1
    return M, order, k, pivots


@dataclass
class CasimirBasis:
    elements: list  # NCPoly
    assumptions: list = field(default_factory=list)
    columns: list = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.elements)


def _normalize(vec):
    """Clear denominators, unit rational content, positive first coordinate."""
    nz = [v for v in vec if v]
    if not nz:
        return vec
    common, _ = clear_denominators(nz)
    # scaling by a nonzero common factor keeps the vector in the nullspace
    vals = [RatFunc.coerce(v) * common for v in vec]
    coeffs = [Fraction(c) for v in vals for c in v.num.terms.values()]
    num_gcd = math.gcd(*(c.numerator for c in coeffs))
    den_lcm = math.lcm(*(c.denominator for c in coeffs))
    content = Fraction(num_gcd, den_lcm)
    first = next(v for v in vals if v)
    sign = -1 if first.num.leading_term()[1] < 0 else 1
    scale = sign / content
    return [as_coeff(v * scale) for v in vals]


def _nonzero_factors(p: ParamPoly) -> list:
    """Split off the monomial part: beta*nu*(zeta + 1) -> [beta, nu, zeta + 1]."""
    q = p.primitive()[1]
    common = {n: min(dict(m).get(n, 0) for m in q.terms) for n in sorted(q.symbols())}
    common = {n: e for n, e in common.items() if e}
    out = [ParamPoly.symbol(n) for n in common]
    if common:
        q = q.exact_div(ParamPoly({tuple(common.items()): 1}))
    if not q.is_constant():
        out.append(q.primitive()[1])
    return out


def solve_nullspace(S: LinearSystem, names: tuple | None = None) -> CasimirBasis:
    names = tuple(names or S.generators)
    ncols = len(S.columns)
    if not S.entries:
        rows, symbolic = [], False
    else:
        rows, symbolic = _integral_rows(S)
    M, order, rank, pivots = _bareiss(rows, ncols) if rows else ([], list(range(ncols)), 0, [])
    assumptions = []
    for p in pivots:
        if isinstance(p, ParamPoly) and not p.is_constant():
            for q in _nonzero_factors(p):
                if q not in assumptions:
                    assumptions.append(q)
    free = sorted(range(rank, ncols), key=lambda k: order[k])
    elements = []
    for f in free:
        x = {f: 1}
        for k in range(rank - 1, -1, -1):
            acc = 0
            Mk = M[k]
            for j, v in x.items():
                e = Mk[j]
                if not _is_zero(e):
                    acc = acc + RatFunc.coerce(e) * v if symbolic else acc + e * v
            if acc:
                pk = Mk[k]
                x[k] = as_coeff(-RatFunc.coerce(acc) / RatFunc.coerce(pk)) if symbolic else Fraction(-acc) / pk
        vec = [0] * ncols
        for k, v in x.items():
            vec[order[k]] = as_coeff(v)
        vec = _normalize(vec)
        elements.append(NCPoly({S.columns[j]: c for j, c in enumerate(vec) if c}, names))
    return CasimirBasis(elements, assumptions, list(S.columns))


@dataclass
class CasimirCheck:
    ok: bool
    generator: str | None = None
    residual: NCPoly | None = None

    def __bool__(self):
        return self.ok


def verify_casimir(K: NCPoly, R: RelationSet) -> CasimirCheck:
    """Check that K reduces to something commuting with every generator."""
    names = R.generators
    K = normal_form(K, R)
    for g in range(len(names)):
        x = NCPoly.gen(g, names)
        res = normal_form(K * x - x * K, R)
        if res:
            return CasimirCheck(False, names[g], res)
    return CasimirCheck(True)


def resolve_printed_casimir(name: str) -> NCPoly:
    """PBW form of a catalog entry's printed Casimir (anticommutators expanded)."""
    from . import catalog

    entry = catalog.get(name)
    if entry.casimir is None:
        raise KeyError(f"catalog entry {name!r} has no printed Casimir")
    R = entry.relations()
    return normal_form(entry.casimir_poly(), R)


def is_scalar_multiple(u: NCPoly, v: NCPoly) -> bool:
    """True when u = c*v for a nonzero coefficient c (possibly a RatFunc)."""
    if set(u.terms) != set(v.terms) or not u.terms:
        return False
    w0 = next(iter(u.terms))
    c = RatFunc.coerce(u.terms[w0]) / RatFunc.coerce(v.terms[w0])
    return all(RatFunc.coerce(u.terms[w]) == c * RatFunc.coerce(v.terms[w]) for w in u.terms)


def in_span(K: NCPoly, basis: list) -> bool:
    """Whether K lies in the span of the basis (numeric coefficients only)."""
    words = sorted({w for b in basis for w in b.terms} | set(K.terms))
    cols = [[Fraction(b.coeff(w)) for w in words] for b in basis]
    target = [Fraction(K.coeff(w)) for w in words]
    # rank([basis]) == rank([basis, K])
    return _rank(cols) == _rank(cols + [target])


def _rank(vectors) -> int:
    M = [list(v) for v in vectors]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                f = M[r][c] / M[rank][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank

