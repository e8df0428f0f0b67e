"""Words, the graded-lexicographic order, and noncommutative polynomials.

A word is a tuple of generator indices; index order is declaration order, so
``(0, 1)`` is ``A*B`` over generators ``A B C``.  The graded-lex order
compares the weighted degree first and breaks ties by first difference, which
for tuples of indices is exactly Python's tuple comparison (a proper prefix
sorts first).  ``word_key`` therefore gives a sort key for the order.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Sequence

from .coeffring import RatFunc, as_coeff, coeff_str, is_scalar

Word = tuple  # tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1

__all__ = [
    "NCPoly",
    "admissible_monomials",
    "check_degree_map",
    "find_degree_map",
    "is_ordered",
    "leading_monomial",
    "nc_commutator",
    "nc_mul",
    "ordered_words",
    "word_compare",
    "word_degree",
    "word_key",
    "word_str",
]


def check_degree_map(d: Sequence[int], n: int | None = None) -> tuple:
    d = tuple(int(x) for x in d)
    if n is not None and len(d) != n:
        raise ValueError(f"degree map has {len(d)} entries for {n} generators")
    if any(x < 1 for x in d):
        raise ValueError("graded degrees must be positive integers")
    if any(a > b for a, b in zip(d, d[1:])):
        raise ValueError("graded degrees must be weakly increasing in generator order")
    return d


def word_degree(w: Word, d: Sequence[int]) -> int:
    return sum(d[i] for i in w)


def word_key(w: Word, d: Sequence[int]):
    return (sum(d[i] for i in w), w)


def word_compare(u: Word, v: Word, d: Sequence[int]) -> int:
    ku, kv = word_key(u, d), word_key(v, d)
    return LESS if ku < kv else GREATER if ku > kv else EQUAL


def is_ordered(w: Word) -> bool:
    return all(a <= b for a, b in zip(w, w[1:]))


def ordered_words(n: int, max_len: int, min_len: int = 0):
    """All ordered words over n generators with min_len <= length <= max_len."""
    for length in range(min_len, max_len + 1):
        yield from itertools.combinations_with_replacement(range(n), length)


def word_str(w: Word, names: Sequence[str]) -> str:
    if not w:
        return "1"
    parts = []
    for g, run in itertools.groupby(w):
        k = len(list(run))
        parts.append(names[g] if k == 1 else f"{names[g]}^{k}")
    return "*".join(parts)


class NCPoly:
    """Finite linear combination of words with exact coefficients.

    Coefficients are rationals (``int``/``Fraction``) or :class:`RatFunc`.
    ``names`` are the generator names, used for printing and to keep
    operands from different algebras apart.
    """

    __slots__ = ("terms", "names")

    def __init__(self, terms: Mapping[Word, object] | None = None, names: Sequence[str] = ()):
        clean = {}
        if terms:
            for w, c in terms.items():
                c = as_coeff(c)
                if c:
                    w = tuple(w)
                    clean[w] = clean[w] + c if w in clean else c
                    if not clean[w]:
                        del clean[w]
        self.terms = clean
        self.names = tuple(names)

    @classmethod
    def _raw(cls, terms: dict, names) -> "NCPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p.names = names
        return p

    @classmethod
    def gen(cls, index: int, names: Sequence[str]) -> "NCPoly":
        return cls._raw({(index,): 1}, tuple(names))

    @classmethod
    def word(cls, w: Word, names: Sequence[str], coeff=1) -> "NCPoly":
        return cls({tuple(w): coeff}, names)

    @classmethod
    def scalar(cls, c, names: Sequence[str]) -> "NCPoly":
        return cls({(): c}, names)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, w: Word):
        return self.terms.get(tuple(w), 0)

    def degree(self, d: Sequence[int]) -> int:
        return max((word_degree(w, d) for w in self.terms), default=0)

    def poly_degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def is_ordered(self) -> bool:
        return all(is_ordered(w) for w in self.terms)

    def _names(self, other: "NCPoly"):
        if self.names and other.names and self.names != other.names:
            raise ValueError("polynomials over different generator lists")
        return self.names or other.names

    def _lift(self, other):
        if isinstance(other, NCPoly):
            return other
        if is_scalar(other) or isinstance(other, RatFunc):
            return NCPoly.scalar(other, self.names)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        names = self._names(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            _acc(t, w, c)
        return NCPoly._raw(t, names)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw({w: -c for w, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "NCPoly":
        c = as_coeff(c)
        if not c:
            return NCPoly._raw({}, self.names)
        return NCPoly._raw({w: as_coeff(v * c) for w, v in self.terms.items() if v * c}, self.names)

    def __mul__(self, other):
        if is_scalar(other) or isinstance(other, RatFunc):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return nc_mul(self, other)

    def __rmul__(self, other):
        if is_scalar(other) or isinstance(other, RatFunc):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a noncommutative polynomial")
        out = NCPoly.scalar(1, self.names)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.terms == other.terms
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coeffs(self, fn) -> "NCPoly":
        return NCPoly({w: fn(c) for w, c in self.terms.items()}, self.names)

    def substitute(self, assignment: Mapping[str, object]) -> "NCPoly":
        return self.map_coeffs(lambda c: c.substitute(assignment) if isinstance(c, RatFunc) else c)

    def sorted_terms(self, d: Sequence[int] | None = None, descending: bool = True):
        d = d or (1,) * max(len(self.names), 1 + max((max(w) for w in self.terms if w), default=0))
        return sorted(self.terms.items(), key=lambda wc: word_key(wc[0], d), reverse=descending)

    def to_str(self, d: Sequence[int] | None = None, descending: bool = True) -> str:
        if not self.terms:
            return "0"
        names = self.names or tuple(f"x{i + 1}" for i in range(1 + max(max(w) for w in self.terms if w)))
        out = []
        for k, (w, c) in enumerate(self.sorted_terms(d, descending)):
            neg, body = _term_str(w, c, names)
            if k == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"NCPoly({self.to_str()!r})"


def _term_str(w, c, names):
    """(negative?, text) for one term, in the reparseable grammar."""
    if is_scalar(c):
        neg = c < 0
        a = -c if neg else c
        cs = coeff_str(a)
        if not w:
            return neg, cs
        return neg, word_str(w, names) if a == 1 else f"{cs}*{word_str(w, names)}"
    neg = False
    num = c.num
    if len(num.terms) == 1 and num.leading_term()[1] < 0:
        neg, c = True, -c
    cs = coeff_str(c)
    if len(c.num.terms) > 1 and not c.den_factors:
        cs = f"({cs})"
    elif c.den_factors and len(c.num.terms) == 1:
        # "a/b" followed by a word would parse as a/(b*word); bracket it
        cs = f"({cs})"
    if not w:
        return neg, cs
    return neg, f"{cs}*{word_str(w, names)}"


def _acc(t: dict, w, c):
    v = t.get(w)
    if v is None:
        if c:
            t[w] = c
        return
    v = v + c
    if v:
        t[w] = v
    else:
        del t[w]


def nc_mul(f: NCPoly, g: NCPoly) -> NCPoly:
    names = f._names(g)
    t: dict = {}
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            _acc(t, u + v, as_coeff(a * b))
    return NCPoly._raw(t, names)


def nc_commutator(f: NCPoly, g: NCPoly) -> NCPoly:
    return nc_mul(f, g) - nc_mul(g, f)


def leading_monomial(f: NCPoly, d: Sequence[int]):
    """(word, coefficient) of the largest word; symbolic coefficients count as nonzero."""
    if not f.terms:
        raise ValueError("leading monomial of zero")
    w = max(f.terms, key=lambda u: word_key(u, d))
    return w, f.terms[w]


def admissible_monomials(d: Sequence[int], lhs: Word, max_poly_degree: int) -> set:
    """Ordered words of length <= max_poly_degree strictly below lhs."""
    lhs = tuple(lhs)
    if len(lhs) != 2 or lhs[0] <= lhs[1]:
        raise ValueError("lhs must be a misordered pair x_j x_i with j > i")
    k = word_key(lhs, d)
    return {w for w in ordered_words(len(d), max_poly_degree) if word_key(w, d) < k}


def _rules_admissible(rules: Iterable, d: Sequence[int]) -> bool:
    for lhs, words in rules:
        k = word_key(lhs, d)
        if any(word_key(w, d) >= k for w in words):
            return False
    return True


def find_degree_map(R, bound: int):
    """Lexicographically first weakly increasing degree map with entries <= bound
    under which every relation's right-hand side lies strictly below its left-hand
    side, or None.

    ``R`` is a RelationSet (anything with ``generators`` and ``rules``).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    n = len(R.generators)
    rules = [(rel.lhs, tuple(rel.rhs.terms)) for rel in R.rules.values()]
    for d in itertools.combinations_with_replacement(range(1, bound + 1), n):
        if _rules_admissible(rules, d):
            return tuple(d)
    return None
